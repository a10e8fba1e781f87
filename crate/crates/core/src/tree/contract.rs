//! Edge contraction and the face order on each species.

use super::{EdgeSet, Fan, LeveledTree, Node, PlanarTree, STAR};
use crate::error::{Error, Result};

fn contract_node<A: Clone>(node: &Node<A>, edges: &EdgeSet) -> Node<A> {
    fn go<A: Clone>(node: &Node<A>, counter: &mut usize, edges: &EdgeSet) -> (Node<A>, bool) {
        match node {
            Node::Leaf(l) => (Node::Leaf(*l), false),
            Node::Internal(a, c) => {
                let idx = *counter;
                *counter += 1;
                let mut kids = Vec::with_capacity(c.len());
                for ch in c {
                    match go(ch, counter, edges) {
                        (Node::Internal(_, grand), true) => kids.extend(grand),
                        (n, _) => kids.push(n),
                    }
                }
                (Node::Internal(a.clone(), kids), edges.contains(&idx))
            }
        }
    }
    go(node, &mut 0, edges).0
}

fn check_edges<A>(node: &Node<A>, edges: &EdgeSet) -> Result<()> {
    let count = node.internal_count();
    match edges.iter().find(|&&e| e == 0 || e >= count) {
        Some(e) => Err(Error::precondition(format!(
            "edge {e} is not an internal edge (valid: 1..{})",
            count.saturating_sub(1)
        ))),
        None => Ok(()),
    }
}

/// Put the child containing `*` first at the root of a fan.
fn rotate_trunk_first<A>(node: &mut Node<A>) {
    if let Node::Internal(_, c) = node {
        if let Some(at) = c.iter().position(|ch| ch.contains_leaf(STAR)) {
            c.rotate_left(at);
        }
    }
}

/// Bitmasks over `k` bits with exactly `ones` bits set.
fn masks(k: usize, ones: usize) -> impl Iterator<Item = u64> {
    (0..1u64 << k).filter(move |m| m.count_ones() as usize == ones)
}

fn edge_set(mask: u64) -> EdgeSet {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// If `small` is a contraction of `big`, the preorder index in `small` of
/// the image of each internal vertex of `big`.
pub(crate) fn contraction_map<A, B>(big: &Node<A>, small: &Node<B>, fan: bool) -> Option<Vec<usize>> {
    let (a, b) = (big.internal_count(), small.internal_count());
    if b > a {
        return None;
    }
    let indexed = big.map_annotations(&mut |i, _| i);
    let target = small.strip();
    masks(a - 1, a - b).find_map(|m| {
        let mut c = contract_node(&indexed, &edge_set(m));
        if fan {
            rotate_trunk_first(&mut c);
        }
        if c.strip() != target {
            return None;
        }
        let mut slot = vec![None; a];
        for (pos, &rep) in c.annotations().into_iter().enumerate() {
            slot[rep] = Some(pos);
        }
        let parents = big.internal_parents();
        // Parents precede children in preorder.
        let mut image = vec![0; a];
        for v in 0..a {
            image[v] = slot[v].unwrap_or_else(|| image[parents[v].expect("the root survives")]);
        }
        Some(image)
    })
}

impl PlanarTree {
    pub fn contract(&self, edges: &EdgeSet) -> Result<PlanarTree> {
        check_edges(&self.0, edges)?;
        Ok(PlanarTree(contract_node(&self.0, edges)))
    }

    /// Every contraction of `self`, one per subset of internal edges.
    pub fn all_contractions(&self) -> Vec<PlanarTree> {
        let k = self.0.internal_count() - 1;
        (0..1u64 << k).map(|m| PlanarTree(contract_node(&self.0, &edge_set(m)))).collect()
    }

    pub fn is_geq(&self, other: &PlanarTree) -> bool {
        let (a, b) = (self.0.internal_count(), other.0.internal_count());
        b <= a && masks(a - 1, a - b).any(|m| contract_node(&self.0, &edge_set(m)) == other.0)
    }
}

impl Fan {
    pub fn contract(&self, edges: &EdgeSet) -> Result<Fan> {
        check_edges(&self.0, edges)?;
        let mut root = contract_node(&self.0, edges);
        rotate_trunk_first(&mut root);
        Ok(Fan(root))
    }

    pub fn all_contractions(&self) -> Vec<Fan> {
        let k = self.0.internal_count() - 1;
        (0..1u64 << k)
            .map(|m| self.contract(&edge_set(m)).expect("edges are in range"))
            .collect()
    }

    pub fn is_geq(&self, other: &Fan) -> bool {
        let (a, b) = (self.0.internal_count(), other.0.internal_count());
        b <= a && masks(a - 1, a - b).any(|m| self.contract(&edge_set(m)).expect("in range") == *other)
    }
}

/// Splice every internal child whose level equals its parent's.
fn merge_equal_levels(node: Node<u32>) -> Node<u32> {
    match node {
        Node::Leaf(l) => Node::Leaf(l),
        Node::Internal(level, c) => {
            let mut kids = Vec::with_capacity(c.len());
            for ch in c {
                match merge_equal_levels(ch) {
                    Node::Internal(l, grand) if l == level => kids.extend(grand),
                    other => kids.push(other),
                }
            }
            Node::Internal(level, kids)
        }
    }
}

impl LeveledTree {
    /// Contract levels along a monotone surjection given by `cuts`: bit `i`
    /// set means a new level starts after old level `i + 1`. Tree edges whose
    /// endpoints land on the same new level are contracted.
    pub fn contract_levels(&self, cuts: u64) -> LeveledTree {
        let m = self.level_count();
        let mut phi = vec![0u32; m as usize + 1];
        phi[1] = 1;
        for i in 1..m as usize {
            phi[i + 1] = phi[i] + (cuts >> (i - 1) & 1) as u32;
        }
        let mut root = merge_equal_levels(self.root.map_annotations(&mut |_, l| phi[*l as usize]));
        if self.kind == super::BaseKind::Fan {
            rotate_trunk_first(&mut root);
        }
        LeveledTree { kind: self.kind, root }
    }

    /// Every level contraction of `self` (one per monotone surjection).
    pub fn all_contractions(&self) -> Vec<LeveledTree> {
        let m = self.level_count() as usize;
        (0..1u64 << (m - 1)).map(|c| self.contract_levels(c)).collect()
    }

    /// Merge adjacent levels `i` and `i + 1` (1-based).
    pub fn merge_levels(&self, i: u32) -> Result<LeveledTree> {
        let m = self.level_count();
        if i == 0 || i >= m {
            return Err(Error::precondition(format!("cannot merge level {i} with {} (m = {m})", i + 1)));
        }
        let all = (1u64 << (m - 1)) - 1;
        Ok(self.contract_levels(all & !(1 << (i - 1))))
    }

    pub fn is_geq(&self, other: &LeveledTree) -> bool {
        let (a, b) = (self.level_count() as usize, other.level_count() as usize);
        self.kind == other.kind
            && b <= a
            && masks(a - 1, b - 1).any(|c| self.contract_levels(c) == *other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse;

    fn psi(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn contraction_examples() {
        let t = psi("((0 1) 2)");
        assert_eq!(t.contract(&[1].into()).unwrap().to_string(), "(0 1 2)");
        assert_eq!(psi("(0 1 2)").contract(&EdgeSet::new()).unwrap().to_string(), "(0 1 2)");
        let t = psi("(((0 1) 2) 3)");
        assert_eq!(t.contract(&[1, 2].into()).unwrap().to_string(), "(0 1 2 3)");
        let one = t.contract(&[1].into()).unwrap().contract(&[1].into()).unwrap();
        let other = t.contract(&[2].into()).unwrap().contract(&[1].into()).unwrap();
        assert_eq!(one, other);
        assert!(t.contract(&[0].into()).is_err());
        assert!(t.contract(&[3].into()).is_err());
    }

    #[test]
    fn order_examples() {
        assert!(psi("((0 1) 2)").is_geq(&psi("(0 1 2)")));
        assert!(psi("((0 1) 2)").is_geq(&psi("((0 1) 2)")));
        assert!(!psi("((0 1) 2)").is_geq(&psi("(0 (1 2))")));
        assert!(!psi("(0 1 2)").is_geq(&psi("((0 1) 2)")));
    }

    #[test]
    fn fan_contraction_rotates_root() {
        let f: Fan = "<(3 * 1) 2>".parse().unwrap();
        assert_eq!(f.contract(&[1].into()).unwrap().to_string(), "<* 1 2 3>");
    }

    #[test]
    fn level_merge() {
        let t: LeveledTree = "((0 1)@2 2)@1".parse().unwrap();
        assert_eq!(t.merge_levels(1).unwrap().to_string(), "(0 1 2)@1");
        let t: LeveledTree = "((0 1)@2 (2 3)@3)@1".parse().unwrap();
        assert_eq!(t.merge_levels(2).unwrap().to_string(), "((0 1)@2 (2 3)@2)@1");
        assert!(parse("((0 1)@2 (2 3)@2)@1").is_ok());
    }
}
