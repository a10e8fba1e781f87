//! Cutting fans along the trunk, forgetting levels, and the fibers of the
//! resulting poset maps.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::{face_poset_with_trees, FinitePoset, PosetMap};
use crate::tree::{AnyTree, BaseKind, Fan, Label, LeveledTree, Node, PlanarTree, Species, STAR};
use crate::words::{Letter, Word};

/// A non-root vertex on the trunk and its side branches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrunkVertex<A = ()> {
    pub annotation: A,
    /// Branches before the trunk child; they end up on the right path.
    pub right: Vec<Node<A>>,
    /// Branches after the trunk child; they end up on the left path.
    pub left: Vec<Node<A>>,
}

/// The path from the root of a fan to `*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trunk<A = ()> {
    pub root_annotation: A,
    /// Non-trunk children of the root, in order.
    pub root_branches: Vec<Node<A>>,
    /// `v_1, …, v_s`, from the root outwards.
    pub vertices: Vec<TrunkVertex<A>>,
}

impl<A: Clone> Trunk<A> {
    pub fn of(root: &Node<A>) -> Trunk<A> {
        let (root_annotation, children) = match root {
            Node::Internal(a, c) => (a.clone(), c),
            Node::Leaf(_) => panic!("fan roots are internal"),
        };
        let mut vertices = Vec::new();
        let mut node = &children[0];
        while let Node::Internal(a, c) = node {
            let t = c.iter().position(|ch| ch.contains_leaf(STAR)).expect("the trunk reaches *");
            vertices.push(TrunkVertex { annotation: a.clone(), right: c[..t].to_vec(), left: c[t + 1..].to_vec() });
            node = &c[t];
        }
        Trunk { root_annotation, root_branches: children[1..].to_vec(), vertices }
    }

    pub fn word(&self) -> Word {
        Word(
            self.vertices
                .iter()
                .map(|v| match (v.left.is_empty(), v.right.is_empty()) {
                    (false, false) => Letter::AB,
                    (false, true) => Letter::A,
                    (true, false) => Letter::B,
                    (true, true) => unreachable!("trunk vertices have a side branch"),
                })
                .collect(),
        )
    }

    /// Rebuild the fan.
    pub fn assemble(&self) -> Node<A> {
        let mut node = Node::Leaf(STAR);
        for v in self.vertices.iter().rev() {
            let mut c = v.right.clone();
            c.push(node);
            c.extend(v.left.iter().cloned());
            node = Node::Internal(v.annotation.clone(), c);
        }
        let mut c = vec![node];
        c.extend(self.root_branches.iter().cloned());
        Node::Internal(self.root_annotation.clone(), c)
    }

    /// The cut: `*` becomes leaves `0` and `n + 1`, each trunk vertex yields a
    /// left copy (if it has left branches) and a right copy (if it has right
    /// branches).
    pub fn cut(&self, n: usize) -> Node<A> {
        let mut left = Node::Leaf(0);
        let mut right = Node::Leaf(n as Label + 1);
        for v in self.vertices.iter().rev() {
            if !v.left.is_empty() {
                let mut c = vec![left];
                c.extend(v.left.iter().cloned());
                left = Node::Internal(v.annotation.clone(), c);
            }
            if !v.right.is_empty() {
                let mut c = v.right.clone();
                c.push(right);
                right = Node::Internal(v.annotation.clone(), c);
            }
        }
        let mut c = vec![left];
        c.extend(self.root_branches.iter().cloned());
        c.push(right);
        Node::Internal(self.root_annotation.clone(), c)
    }
}

/// Left path and right path vertices of a planar tree: `(annotation,
/// branches)` from the root outwards, plus the middle root children.
struct Sides<A> {
    root_annotation: A,
    left: Vec<(A, Vec<Node<A>>)>,
    middle: Vec<Node<A>>,
    right: Vec<(A, Vec<Node<A>>)>,
}

fn sides<A: Clone>(root: &Node<A>) -> Sides<A> {
    let (root_annotation, c) = match root {
        Node::Internal(a, c) => (a.clone(), c),
        Node::Leaf(_) => panic!("planar tree roots are internal"),
    };
    let mut left = Vec::new();
    let mut node = &c[0];
    while let Node::Internal(a, k) = node {
        left.push((a.clone(), k[1..].to_vec()));
        node = &k[0];
    }
    let mut right = Vec::new();
    let mut node = c.last().expect("root has children");
    while let Node::Internal(a, k) = node {
        right.push((a.clone(), k[..k.len() - 1].to_vec()));
        node = k.last().expect("internal");
    }
    Sides { root_annotation, left, middle: c[1..c.len() - 1].to_vec(), right }
}

fn relabel_ends<A: Clone>(node: &Node<A>, last: Label) -> Node<A> {
    match node {
        Node::Leaf(l) if *l == 0 || *l == last => Node::Leaf(STAR),
        Node::Leaf(l) => Node::Leaf(*l),
        Node::Internal(a, c) => Node::Internal(a.clone(), c.iter().map(|ch| relabel_ends(ch, last)).collect()),
    }
}

/// Glue the left and right paths into one trunk, following `word`.
fn uncut<A: Clone>(root: &Node<A>, word: &Word) -> Result<Node<A>> {
    let s = sides(root);
    if word.left_count() != s.left.len() || word.right_count() != s.right.len() {
        return Err(Error::precondition(format!(
            "word {word} has counts ({}, {}) but the tree has ({}, {})",
            word.left_count(),
            word.right_count(),
            s.left.len(),
            s.right.len()
        )));
    }
    let (mut li, mut ri) = (s.left.into_iter(), s.right.into_iter());
    let vertices = word
        .letters()
        .iter()
        .map(|l| {
            let lv = (*l != Letter::B).then(|| li.next().expect("counted"));
            let rv = (*l != Letter::A).then(|| ri.next().expect("counted"));
            let annotation = lv.as_ref().or(rv.as_ref()).expect("a letter uses a side").0.clone();
            TrunkVertex {
                annotation,
                right: rv.map(|v| v.1).unwrap_or_default(),
                left: lv.map(|v| v.1).unwrap_or_default(),
            }
        })
        .collect();
    let trunk = Trunk { root_annotation: s.root_annotation, root_branches: s.middle, vertices };
    let last = root.leaves().len() as Label - 1;
    Ok(relabel_ends(&trunk.assemble(), last))
}

/// The projection of a fan to a planar tree.
pub fn pi(fan: &Fan) -> PlanarTree {
    PlanarTree::new(Trunk::of(fan.root()).cut(fan.n())).expect("the cut of a fan is a planar tree")
}

pub fn trunk_word(fan: &Fan) -> Word {
    Trunk::of(fan.root()).word()
}

/// The unique fan over `y` with trunk word `w`.
pub fn fan_from_word(y: &PlanarTree, w: &Word) -> Result<Fan> {
    Fan::new(uncut(y.root(), w)?)
}

pub fn forget_levels(t: &LeveledTree) -> AnyTree {
    match t.kind() {
        BaseKind::Psi => AnyTree::Psi(t.base_psi().expect("psi base")),
        BaseKind::Fan => AnyTree::Fan(t.base_fan().expect("fan base")),
    }
}

/// Leveled fans to leveled planar trees: cut, with both copies of a trunk
/// vertex keeping its level.
pub fn leveled_iso(f: &LeveledTree) -> Result<LeveledTree> {
    if f.kind() != BaseKind::Fan {
        return Err(Error::precondition("leveled_iso takes a leveled fan"));
    }
    LeveledTree::new(BaseKind::Psi, Trunk::of(f.root()).cut(f.n()))
}

/// Inverse of [`leveled_iso`]: left and right copies on the same level merge.
pub fn leveled_iso_inverse(t: &LeveledTree) -> Result<LeveledTree> {
    if t.kind() != BaseKind::Psi {
        return Err(Error::precondition("leveled_iso_inverse takes a leveled planar tree"));
    }
    let s = sides(t.root());
    let (mut i, mut j) = (0, 0);
    let mut letters = Vec::new();
    while i < s.left.len() || j < s.right.len() {
        let l = s.left.get(i).map(|v| v.0);
        let r = s.right.get(j).map(|v| v.0);
        let letter = match (l, r) {
            (Some(a), Some(b)) if a == b => Letter::AB,
            (Some(a), Some(b)) if a < b => Letter::A,
            (Some(_), None) => Letter::A,
            _ => Letter::B,
        };
        i += usize::from(letter != Letter::B);
        j += usize::from(letter != Letter::A);
        letters.push(letter);
    }
    LeveledTree::new(BaseKind::Fan, uncut(t.root(), &Word(letters))?)
}

/// The three projections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Functor {
    /// Fans to planar trees.
    Pi,
    /// Leveled fans to fans.
    PiPrime,
    /// Leveled planar trees to planar trees.
    PiDoublePrime,
}

impl Functor {
    pub const ALL: [Functor; 3] = [Functor::Pi, Functor::PiPrime, Functor::PiDoublePrime];

    pub fn source(self) -> Species {
        match self {
            Functor::Pi => Species::Phi,
            Functor::PiPrime => Species::PhiLevel,
            Functor::PiDoublePrime => Species::PsiLevel,
        }
    }

    pub fn target(self) -> Species {
        match self {
            Functor::Pi | Functor::PiDoublePrime => Species::Psi,
            Functor::PiPrime => Species::Phi,
        }
    }

    pub fn apply(self, t: &AnyTree) -> Result<AnyTree> {
        match (self, t) {
            (Functor::Pi, AnyTree::Fan(f)) => Ok(AnyTree::Psi(pi(f))),
            (Functor::PiPrime, AnyTree::Leveled(l)) if l.kind() == BaseKind::Fan => Ok(forget_levels(l)),
            (Functor::PiDoublePrime, AnyTree::Leveled(l)) if l.kind() == BaseKind::Psi => Ok(forget_levels(l)),
            _ => Err(Error::precondition(format!("{self} does not apply to a {} tree", t.species()))),
        }
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Functor::Pi => "pi",
            Functor::PiPrime => "pi-prime",
            Functor::PiDoublePrime => "pi-double-prime",
        })
    }
}

impl FromStr for Functor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Functor::Pi),
            "pi-prime" | "pi_prime" => Ok(Functor::PiPrime),
            "pi-double-prime" | "pi_double_prime" => Ok(Functor::PiDoublePrime),
            _ => Err(Error::precondition(format!("unknown functor {s:?}"))),
        }
    }
}

/// A projection as a poset map, with the source trees kept for reuse.
#[derive(Clone, Debug)]
pub struct Projection {
    pub functor: Functor,
    pub n: usize,
    pub map: PosetMap,
    pub source_trees: Vec<AnyTree>,
    pub target_trees: Vec<AnyTree>,
}

impl Projection {
    pub fn new(functor: Functor, n: usize) -> Result<Self> {
        let (source, source_trees) = face_poset_with_trees(functor.source(), n)?;
        let (target, target_trees) = face_poset_with_trees(functor.target(), n)?;
        let assignment = source_trees
            .iter()
            .map(|t| {
                let image = functor.apply(t)?.to_string();
                target.index_of(&image).ok_or_else(|| Error::invariant(format!("{image} is not a target face")))
            })
            .collect::<Result<Vec<_>>>()?;
        let map = PosetMap::new(source, target, assignment)?;
        Ok(Projection { functor, n, map, source_trees, target_trees })
    }

    pub fn target_index(&self, key: &str) -> Result<usize> {
        self.map.target.index_of(key).ok_or_else(|| Error::precondition(format!("{key} is not a target face")))
    }

    pub fn source_index(&self, key: &str) -> Result<usize> {
        self.map.source.index_of(key).ok_or_else(|| Error::precondition(format!("{key} is not a source face")))
    }

    /// Source indices over `y` that lie above `lower`.
    pub fn fiber_geq_indices(&self, y: usize, lower: usize) -> Result<Vec<usize>> {
        if !self.map.target.leq(self.map.apply(lower), y) {
            return Err(Error::precondition(format!(
                "{} is not above the image of {}",
                self.map.target.element(y),
                self.map.source.element(lower)
            )));
        }
        Ok(self
            .map
            .preimage(y)
            .into_iter()
            .filter(|&x| self.map.source.leq(lower, x))
            .collect())
    }

    pub fn fiber(&self, y: usize) -> FinitePoset {
        self.map.fiber(y)
    }

    pub fn fiber_geq(&self, y: usize, lower: usize) -> Result<FinitePoset> {
        Ok(self.map.source.induced(&self.fiber_geq_indices(y, lower)?))
    }
}

/// The fiber of the fan projection over `y`.
pub fn fiber_poset(y: &PlanarTree) -> Result<FinitePoset> {
    let p = Projection::new(Functor::Pi, y.n())?;
    Ok(p.fiber(p.target_index(&y.to_string())?))
}

/// Fans over `y` lying above `lower`.
pub fn fiber_geq_poset(y: &PlanarTree, lower: &Fan) -> Result<FinitePoset> {
    if y.n() != lower.n() {
        return Err(Error::precondition("the tree and the fan have different leaf counts"));
    }
    let p = Projection::new(Functor::Pi, y.n())?;
    p.fiber_geq(p.target_index(&y.to_string())?, p.source_index(&lower.to_string())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(s: &str) -> Fan {
        s.parse().unwrap()
    }

    #[test]
    fn cut_examples() {
        assert_eq!(pi(&fan("<* 1 2 3>")).to_string(), "(0 1 2 3 4)");
        assert_eq!(pi(&fan("<(* 1)>")).to_string(), "((0 1) 2)");
        assert_eq!(pi(&fan("<(1 *)>")).to_string(), "(0 (1 2))");
        assert_eq!(pi(&fan("<(3 * 1) 2>")).to_string(), "((0 1) 2 (3 4))");
        let one_left = pi(&fan("<(* 1) 2>"));
        assert_eq!(one_left.to_string(), "((0 1) 2 3)");
        assert_eq!((one_left.left_count(), one_left.right_count()), (1, 0));
    }

    #[test]
    fn trunk_words() {
        assert_eq!(trunk_word(&fan("<* 1 2>")).to_string(), "");
        assert_eq!(trunk_word(&fan("<(2 * 1)>")).to_string(), "(ab)");
        // v1 has a right branch, v2 a left one, v3 both.
        let f = fan("<(4 ((5 * 1) 2)) 3>");
        assert_eq!(trunk_word(&f).to_string(), "ba(ab)");
        assert_eq!(fan_from_word(&pi(&f), &trunk_word(&f)).unwrap(), f);
    }

    #[test]
    fn words_over_the_example_tree() {
        let y: PlanarTree = "(((0 1) 2) (3 (4 5)))".parse().unwrap();
        let ws = crate::words::words(2, 2);
        let fans: std::collections::BTreeSet<Fan> =
            ws.iter().map(|w| fan_from_word(&y, w).unwrap()).collect();
        assert_eq!(fans.len(), 13);
        for (w, f) in ws.iter().zip(ws.iter().map(|w| fan_from_word(&y, w).unwrap())) {
            assert_eq!(pi(&f), y);
            assert_eq!(trunk_word(&f), *w);
        }
        assert!(fan_from_word(&y, &"ab".parse().unwrap()).is_err());
    }

    #[test]
    fn fibers() {
        let corolla = PlanarTree::corolla(2);
        assert_eq!(fiber_poset(&corolla).unwrap().len(), 1);
        let y: PlanarTree = "(((0 1) 2) (3 4))".parse().unwrap();
        let f = fiber_poset(&y).unwrap();
        assert_eq!(f.len(), 5);
        assert_eq!(f.cover_pairs().len(), 4);
        assert_eq!(fiber_geq_poset(&y, &Fan::corolla(3)).unwrap(), f);
    }

    #[test]
    fn leveled_iso_roundtrip() {
        let f: LeveledTree = "<(2 * 1)@2>@1".parse().unwrap();
        let t = leveled_iso(&f).unwrap();
        assert_eq!(t.to_string(), "((0 1)@2 (2 3)@2)@1");
        assert_eq!(leveled_iso_inverse(&t).unwrap(), f);
    }
}
