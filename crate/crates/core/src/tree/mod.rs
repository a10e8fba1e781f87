//! The three tree species labelling faces of the associahedron, the
//! cyclohedron and the permutohedron.
//!
//! All species share the recursive [`Node`] representation. Internal
//! vertices are addressed by their preorder index (the root is `0`), which is
//! also how an [`EdgeSet`] names an edge: by the index of its child endpoint.

mod codec;
pub(crate) mod contract;
pub(crate) mod enumerate;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use codec::parse;
pub use enumerate::{enumerate, enumerate_levelizations, Species};

/// Leaf label. In fans the distinguished leaf `*` is stored as [`STAR`].
pub type Label = u32;

/// Internal label of the distinguished leaf of a fan.
pub const STAR: Label = 0;

/// A planar rooted tree with labelled leaves and an annotation `A` on every
/// internal vertex (`()` for plain trees, the level for leveled trees).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node<A = ()> {
    Leaf(Label),
    Internal(A, Vec<Node<A>>),
}

/// Child-index path from the root to a vertex.
pub type VertexPath = Vec<usize>;

/// Internal edges, each named by the preorder index of its child endpoint.
pub type EdgeSet = BTreeSet<usize>;

impl<A> Node<A> {
    pub fn internal(ann: A, children: Vec<Node<A>>) -> Self {
        Node::Internal(ann, children)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf(_))
    }

    pub fn children(&self) -> &[Node<A>] {
        match self {
            Node::Leaf(_) => &[],
            Node::Internal(_, c) => c,
        }
    }

    pub fn annotation(&self) -> Option<&A> {
        match self {
            Node::Leaf(_) => None,
            Node::Internal(a, _) => Some(a),
        }
    }

    /// Leaf labels in depth-first (planar) order.
    pub fn leaves(&self) -> Vec<Label> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Label>) {
        match self {
            Node::Leaf(l) => out.push(*l),
            Node::Internal(_, c) => c.iter().for_each(|ch| ch.collect_leaves(out)),
        }
    }

    pub fn contains_leaf(&self, label: Label) -> bool {
        match self {
            Node::Leaf(l) => *l == label,
            Node::Internal(_, c) => c.iter().any(|ch| ch.contains_leaf(label)),
        }
    }

    pub fn internal_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 0,
            Node::Internal(_, c) => 1 + c.iter().map(Node::internal_count).sum::<usize>(),
        }
    }

    /// Parent (as preorder index) of every internal vertex, in preorder.
    pub fn internal_parents(&self) -> Vec<Option<usize>> {
        fn go<A>(node: &Node<A>, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
            if let Node::Internal(_, c) = node {
                let me = out.len();
                out.push(parent);
                for ch in c {
                    go(ch, Some(me), out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, None, &mut out);
        out
    }

    /// Annotations of the internal vertices in preorder.
    pub fn annotations(&self) -> Vec<&A> {
        fn go<'a, A>(node: &'a Node<A>, out: &mut Vec<&'a A>) {
            if let Node::Internal(a, c) = node {
                out.push(a);
                c.iter().for_each(|ch| go(ch, out));
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// Rebuild with new annotations, `f` receiving the preorder index.
    pub fn map_annotations<B>(&self, f: &mut impl FnMut(usize, &A) -> B) -> Node<B> {
        fn go<A, B>(node: &Node<A>, counter: &mut usize, f: &mut impl FnMut(usize, &A) -> B) -> Node<B> {
            match node {
                Node::Leaf(l) => Node::Leaf(*l),
                Node::Internal(a, c) => {
                    let idx = *counter;
                    *counter += 1;
                    let b = f(idx, a);
                    Node::Internal(b, c.iter().map(|ch| go(ch, counter, f)).collect())
                }
            }
        }
        go(self, &mut 0, f)
    }

    pub fn strip(&self) -> Node {
        self.map_annotations(&mut |_, _| ())
    }

    pub fn leaf_path(&self, label: Label) -> Option<VertexPath> {
        match self {
            Node::Leaf(l) => (*l == label).then(Vec::new),
            Node::Internal(_, c) => c.iter().enumerate().find_map(|(i, ch)| {
                ch.leaf_path(label).map(|mut p| {
                    p.insert(0, i);
                    p
                })
            }),
        }
    }

    pub fn at(&self, path: &[usize]) -> Option<&Node<A>> {
        path.iter().try_fold(self, |node, &i| node.children().get(i))
    }

    /// Lowest common ancestor of two leaves.
    pub fn nadir(&self, i: Label, j: Label) -> Result<VertexPath> {
        if i == j {
            return Err(Error::precondition(format!("nadir of leaf {i} with itself")));
        }
        let pi = self.leaf_path(i).ok_or_else(|| Error::precondition(format!("no leaf {i}")))?;
        let pj = self.leaf_path(j).ok_or_else(|| Error::precondition(format!("no leaf {j}")))?;
        Ok(pi.iter().zip(&pj).take_while(|(a, b)| a == b).map(|(a, _)| *a).collect())
    }

    /// Whether `i` and `j` are closer to each other than to `k`: the nadir of
    /// `i, j` lies strictly above the nadir of `j, k`.
    pub fn closer(&self, i: Label, j: Label, k: Label) -> Result<bool> {
        if i == k || j == k {
            return Err(Error::precondition("closer needs three distinct leaves"));
        }
        let ij = self.nadir(i, j)?;
        let jk = self.nadir(j, k)?;
        Ok(ij.len() > jk.len() && ij.starts_with(&jk))
    }

    /// Preorder index of the internal vertex at `path`.
    pub fn preorder_index(&self, path: &[usize]) -> Option<usize> {
        let mut idx = 0;
        let mut node = self;
        for &step in path {
            let c = node.children();
            if step >= c.len() {
                return None;
            }
            idx += 1 + c[..step].iter().map(Node::internal_count).sum::<usize>();
            node = &c[step];
        }
        (!node.is_leaf()).then_some(idx)
    }
}

fn check_valences<A>(node: &Node<A>, is_root: bool, root_min: usize) -> Result<()> {
    if let Node::Internal(_, c) = node {
        let min = if is_root { root_min } else { 2 };
        if c.len() < min {
            let who = if is_root { "root" } else { "internal vertex" };
            return Err(Error::invariant(format!("{who} has {} children, needs at least {min}", c.len())));
        }
        c.iter().try_for_each(|ch| check_valences(ch, false, root_min))?;
    }
    Ok(())
}

/// A Ψ-tree: leaves `0, …, n+1` in planar order, every internal vertex
/// (including the root) with at least two children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree(Node);

impl PlanarTree {
    pub fn new(root: Node) -> Result<Self> {
        if root.is_leaf() {
            return Err(Error::invariant("the root of a planar tree must be internal"));
        }
        check_valences(&root, true, 2)?;
        let leaves = root.leaves();
        if leaves.iter().enumerate().any(|(i, &l)| l as usize != i) {
            return Err(Error::invariant(format!(
                "leaf labels must read 0..{} in planar order, got {leaves:?}",
                leaves.len() - 1
            )));
        }
        Ok(PlanarTree(root))
    }

    pub fn corolla(n: usize) -> Self {
        PlanarTree(Node::Internal((), (0..=n as Label + 1).map(Node::Leaf).collect()))
    }

    pub fn root(&self) -> &Node {
        &self.0
    }

    pub fn into_root(self) -> Node {
        self.0
    }

    /// The `n` of Ψ([n+1]): the number of leaves minus two.
    pub fn n(&self) -> usize {
        self.0.leaves().len() - 2
    }

    /// Number of left-most internal vertices other than the root, i.e. the
    /// internal vertices on the path from the root to leaf `0`.
    pub fn left_count(&self) -> usize {
        let mut node = &self.0.children()[0];
        let mut count = 0;
        while let Node::Internal(_, c) = node {
            count += 1;
            node = &c[0];
        }
        count
    }

    /// Number of right-most internal vertices other than the root.
    pub fn right_count(&self) -> usize {
        let mut node = self.0.children().last().expect("root is internal");
        let mut count = 0;
        while let Node::Internal(_, c) = node {
            count += 1;
            node = c.last().expect("internal vertices have children");
        }
        count
    }
}

/// A fan: one distinguished leaf `*`, root with at least one child (the
/// trunk-direction child stored first), other internal vertices with at
/// least two children, leaves reading `*, 1, …, n` cyclically from `*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fan(Node);

impl Fan {
    pub fn new(root: Node) -> Result<Self> {
        validate_fan_shape(&root)?;
        Ok(Fan(root))
    }

    pub fn corolla(n: usize) -> Self {
        Fan(Node::Internal((), (0..=n as Label).map(Node::Leaf).collect()))
    }

    pub fn root(&self) -> &Node {
        &self.0
    }

    pub fn into_root(self) -> Node {
        self.0
    }

    /// Number of non-distinguished leaves.
    pub fn n(&self) -> usize {
        self.0.leaves().len() - 1
    }
}

fn validate_fan_shape<A>(root: &Node<A>) -> Result<()> {
    let children = match root {
        Node::Leaf(_) => return Err(Error::invariant("the root of a fan must be internal")),
        Node::Internal(_, c) => c,
    };
    check_valences(root, true, 1)?;
    let leaves = root.leaves();
    let stars = leaves.iter().filter(|&&l| l == STAR).count();
    if stars != 1 {
        return Err(Error::invariant(format!("a fan needs exactly one distinguished leaf, found {stars}")));
    }
    if !children[0].contains_leaf(STAR) {
        return Err(Error::invariant("the trunk-direction child must come first at the root"));
    }
    let at = leaves.iter().position(|&l| l == STAR).expect("counted above");
    let rotated = leaves[at..].iter().chain(&leaves[..at]);
    if rotated.enumerate().any(|(i, &l)| l as usize != i) {
        return Err(Error::invariant(format!(
            "leaves must read *,1,..,{} cyclically from *",
            leaves.len() - 1
        )));
    }
    Ok(())
}

/// Base species of a leveled tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseKind {
    Psi,
    Fan,
}

/// A tree together with a surjective, strictly monotone level map on its
/// internal vertices. The root always sits at level 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeveledTree {
    kind: BaseKind,
    root: Node<u32>,
}

impl LeveledTree {
    pub fn new(kind: BaseKind, root: Node<u32>) -> Result<Self> {
        match kind {
            BaseKind::Psi => {
                PlanarTree::new(root.strip())?;
            }
            BaseKind::Fan => validate_fan_shape(&root)?,
        }
        let levels: Vec<u32> = root.annotations().into_iter().copied().collect();
        let m = levels.iter().copied().max().unwrap_or(0);
        let used: BTreeSet<u32> = levels.iter().copied().collect();
        if used != (1..=m).collect() {
            return Err(Error::invariant(format!("levels {used:?} are not onto 1..{m}")));
        }
        for (v, p) in root.internal_parents().into_iter().enumerate() {
            if let Some(p) = p {
                if levels[p] >= levels[v] {
                    return Err(Error::invariant("levels must strictly increase away from the root"));
                }
            }
        }
        Ok(LeveledTree { kind, root })
    }

    /// Attach preorder `levels` to a plain tree.
    pub fn from_levels(kind: BaseKind, base: &Node, levels: &[u32]) -> Result<Self> {
        if levels.len() != base.internal_count() {
            return Err(Error::precondition("one level per internal vertex is required"));
        }
        Self::new(kind, base.map_annotations(&mut |i, _| levels[i]))
    }

    pub fn kind(&self) -> BaseKind {
        self.kind
    }

    pub fn root(&self) -> &Node<u32> {
        &self.root
    }

    pub fn levels(&self) -> Vec<u32> {
        self.root.annotations().into_iter().copied().collect()
    }

    pub fn level_count(&self) -> u32 {
        self.levels().into_iter().max().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        let leaves = self.root.leaves().len();
        match self.kind {
            BaseKind::Psi => leaves - 2,
            BaseKind::Fan => leaves - 1,
        }
    }

    pub fn base_psi(&self) -> Option<PlanarTree> {
        (self.kind == BaseKind::Psi).then(|| PlanarTree(self.root.strip()))
    }

    pub fn base_fan(&self) -> Option<Fan> {
        (self.kind == BaseKind::Fan).then(|| Fan(self.root.strip()))
    }
}

/// Any of the tree species, as produced by [`parse`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyTree {
    Psi(PlanarTree),
    Fan(Fan),
    Leveled(LeveledTree),
}

impl AnyTree {
    pub fn species(&self) -> Species {
        match self {
            AnyTree::Psi(_) => Species::Psi,
            AnyTree::Fan(_) => Species::Phi,
            AnyTree::Leveled(t) if t.kind == BaseKind::Psi => Species::PsiLevel,
            AnyTree::Leveled(_) => Species::PhiLevel,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AnyTree::Psi(t) => t.n(),
            AnyTree::Fan(t) => t.n(),
            AnyTree::Leveled(t) => t.n(),
        }
    }

    /// All faces below `self`, one per contraction (with repetitions).
    pub fn all_contractions(&self) -> Vec<AnyTree> {
        match self {
            AnyTree::Psi(t) => t.all_contractions().into_iter().map(AnyTree::Psi).collect(),
            AnyTree::Fan(t) => t.all_contractions().into_iter().map(AnyTree::Fan).collect(),
            AnyTree::Leveled(t) => t.all_contractions().into_iter().map(AnyTree::Leveled).collect(),
        }
    }

    /// Face-poset order: `self ≥ other`.
    pub fn is_geq(&self, other: &AnyTree) -> Result<bool> {
        if self.species() != other.species() || self.n() != other.n() {
            return Err(Error::precondition("is_geq needs two trees of the same species and label set"));
        }
        Ok(match (self, other) {
            (AnyTree::Psi(a), AnyTree::Psi(b)) => a.is_geq(b),
            (AnyTree::Fan(a), AnyTree::Fan(b)) => a.is_geq(b),
            (AnyTree::Leveled(a), AnyTree::Leveled(b)) => a.is_geq(b),
            _ => unreachable!("species compared above"),
        })
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&codec::format_node(&self.0, false, &|_| None))
    }
}

impl fmt::Display for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&codec::format_node(&self.0, true, &|_| None))
    }
}

impl fmt::Display for LeveledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fan = self.kind == BaseKind::Fan;
        f.write_str(&codec::format_node(&self.root, fan, &|l: &u32| Some(*l)))
    }
}

impl fmt::Display for AnyTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyTree::Psi(t) => t.fmt(f),
            AnyTree::Fan(t) => t.fmt(f),
            AnyTree::Leveled(t) => t.fmt(f),
        }
    }
}

macro_rules! from_str_via_parse {
    ($ty:ty, $variant:ident, $what:literal) => {
        impl std::str::FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match parse(s)? {
                    AnyTree::$variant(t) => Ok(t),
                    other => Err(Error::precondition(format!(
                        concat!("expected ", $what, ", got {}"),
                        other.species()
                    ))),
                }
            }
        }
    };
}

from_str_via_parse!(PlanarTree, Psi, "a planar tree");
from_str_via_parse!(Fan, Fan, "a fan");
from_str_via_parse!(LeveledTree, Leveled, "a leveled tree");
