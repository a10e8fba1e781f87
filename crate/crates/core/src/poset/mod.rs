//! Finite posets stored as a bitset relation plus covers.

mod bitset;
mod faces;
mod tonks;

use std::collections::HashMap;
use std::fmt::Write;

use serde_json::json;

use crate::error::{Error, Result};

pub use bitset::BitSet;
pub use faces::{face_poset, face_poset_with_trees};
pub use tonks::{ordered_partitions, tonks_inverse, tonks_partition, OrderedPartition};

/// A finite poset on opaque text keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    /// `down[x]` holds every `y ≤ x`.
    down: Vec<BitSet>,
    up: Vec<BitSet>,
    /// `covers[x]` holds every `y` covered by `x`.
    covers: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// Build from transitively closed down-sets (`down[x]` = all `y ≤ x`).
    /// Reflexivity is added; antisymmetry is checked.
    pub fn from_down_sets(elements: Vec<String>, mut down: Vec<BitSet>) -> Result<Self> {
        let n = elements.len();
        if down.len() != n {
            return Err(Error::precondition("one down-set per element is required"));
        }
        let index: HashMap<String, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != n {
            return Err(Error::invariant("poset elements must be distinct"));
        }
        for (x, d) in down.iter_mut().enumerate() {
            d.insert(x);
        }
        let mut up = vec![BitSet::new(n); n];
        for x in 0..n {
            for y in down[x].iter() {
                if y != x && down[y].contains(x) {
                    return Err(Error::invariant(format!(
                        "antisymmetry fails for {} and {}",
                        elements[x], elements[y]
                    )));
                }
                up[y].insert(x);
            }
        }
        let covers = (0..n)
            .map(|x| {
                let mut cand = down[x].clone();
                cand.remove(x);
                for y in down[x].iter().filter(|&y| y != x) {
                    let mut below = down[y].clone();
                    below.remove(y);
                    cand.difference_with(&below);
                }
                cand.iter().collect()
            })
            .collect();
        Ok(FinitePoset { elements, index, down, up, covers })
    }

    /// Build from a relation predicate `leq(x, y)`, evaluated on all pairs.
    pub fn from_relation(elements: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = elements.len();
        let down = (0..n)
            .map(|x| {
                let mut d = BitSet::new(n);
                (0..n).filter(|&y| leq(y, x)).for_each(|y| d.insert(y));
                d
            })
            .collect();
        let p = Self::from_down_sets(elements, down)?;
        p.check_transitive()?;
        Ok(p)
    }

    /// Build from generating pairs `(x, y)` meaning `x ≥ y`, closing
    /// transitively.
    pub fn from_generators(elements: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut below: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(x, y) in pairs {
            below[x].push(y);
        }
        let mut down: Vec<Option<BitSet>> = vec![None; n];
        let mut on_stack = vec![false; n];
        fn visit(x: usize, below: &[Vec<usize>], down: &mut Vec<Option<BitSet>>, on_stack: &mut [bool]) -> Result<()> {
            if down[x].is_some() {
                return Ok(());
            }
            if on_stack[x] {
                return Err(Error::invariant("generating relation has a cycle"));
            }
            on_stack[x] = true;
            let mut d = BitSet::new(down.len());
            d.insert(x);
            for &y in &below[x] {
                visit(y, below, down, on_stack)?;
                d.union_with(down[y].as_ref().expect("visited"));
            }
            on_stack[x] = false;
            down[x] = Some(d);
            Ok(())
        }
        for x in 0..n {
            visit(x, &below, &mut down, &mut on_stack)?;
        }
        Self::from_down_sets(elements, down.into_iter().map(|d| d.expect("visited")).collect())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, key: &str) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// `x ≤ y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(x)
    }

    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    pub fn covers_of(&self, x: usize) -> &[usize] {
        &self.covers[x]
    }

    /// All cover pairs `(x, y)` with `x` covering `y`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|x| self.covers[x].iter().map(move |&y| (x, y))).collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.down[x].count() == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].count() == 1).collect()
    }

    /// Length (in covers) of the longest chain.
    pub fn height(&self) -> usize {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.down[x].count());
        let mut h = vec![0usize; self.len()];
        for &x in &order {
            h[x] = self.covers[x].iter().map(|&y| h[y] + 1).max().unwrap_or(0);
        }
        h.into_iter().max().unwrap_or(0)
    }

    /// Number of comparable pairs `x < y`.
    pub fn strict_pair_count(&self) -> usize {
        self.down.iter().map(|d| d.count() - 1).sum()
    }

    pub fn check_transitive(&self) -> Result<()> {
        for x in 0..self.len() {
            for y in self.down[x].iter() {
                if !self.down[y].is_subset(&self.down[x]) {
                    return Err(Error::invariant(format!(
                        "transitivity fails below {}",
                        self.elements[x]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Down-sets regenerated from the covers alone.
    pub fn closure_of_covers(&self) -> Vec<BitSet> {
        let pairs = self.cover_pairs();
        Self::from_generators(self.elements.clone(), &pairs).expect("covers are acyclic").down
    }

    /// Induced subposet on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> FinitePoset {
        let elements = keep.iter().map(|&i| self.elements[i].clone()).collect();
        let down = keep
            .iter()
            .map(|&x| {
                let mut d = BitSet::new(keep.len());
                for (j, &y) in keep.iter().enumerate() {
                    if self.leq(y, x) {
                        d.insert(j);
                    }
                }
                d
            })
            .collect();
        Self::from_down_sets(elements, down).expect("an induced order is a partial order")
    }

    /// Elements `≥ x`.
    pub fn subposet_geq(&self, x: usize) -> FinitePoset {
        let keep: Vec<usize> = self.up[x].iter().collect();
        self.induced(&keep)
    }

    pub fn subposet_geq_key(&self, key: &str) -> Result<FinitePoset> {
        let x = self
            .index_of(key)
            .ok_or_else(|| Error::precondition(format!("{key} is not an element")))?;
        Ok(self.subposet_geq(x))
    }

    /// Product order; keys are the factor keys joined by `|`.
    pub fn product(factors: &[&FinitePoset]) -> FinitePoset {
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for f in factors {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..f.len()).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        let elements = tuples
            .iter()
            .map(|t| t.iter().zip(factors).map(|(&i, f)| f.element(i)).collect::<Vec<_>>().join("|"))
            .collect();
        let m = tuples.len();
        let down = tuples
            .iter()
            .map(|x| {
                let mut d = BitSet::new(m);
                for (j, y) in tuples.iter().enumerate() {
                    if y.iter().zip(x).zip(factors).all(|((&a, &b), f)| f.leq(a, b)) {
                        d.insert(j);
                    }
                }
                d
            })
            .collect();
        Self::from_down_sets(elements, down).expect("a product of posets is a poset")
    }

    /// Whether `map` (indices of `self` into `other`) is an order isomorphism.
    pub fn is_isomorphism(&self, other: &FinitePoset, map: &[usize]) -> bool {
        if map.len() != self.len() || other.len() != self.len() {
            return false;
        }
        let mut hit = vec![false; other.len()];
        for &m in map {
            if m >= other.len() || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        (0..self.len()).all(|x| (0..self.len()).all(|y| self.leq(x, y) == other.leq(map[x], map[y])))
    }

    /// JSON form `{"elements": [...], "covers": [[i, j], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let covers: Vec<[usize; 2]> = self.cover_pairs().into_iter().map(|(x, y)| [x, y]).collect();
        json!({ "elements": self.elements, "covers": covers })
    }

    /// Hasse diagram in DOT, edges pointing from greater to smaller.
    pub fn hasse_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label={}];", serde_json::Value::from(e.as_str()));
        }
        for (x, y) in self.cover_pairs() {
            let _ = writeln!(out, "  n{x} -> n{y};");
        }
        out.push_str("}\n");
        out
    }
}

/// Search for an order isomorphism `p → q` by backtracking over elements
/// with matching down-set and up-set sizes.
pub fn find_isomorphism(p: &FinitePoset, q: &FinitePoset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.cover_pairs().len() != q.cover_pairs().len() {
        return None;
    }
    let sig = |s: &FinitePoset, x: usize| (s.down[x].count(), s.up[x].count());
    fn go(
        p: &FinitePoset,
        q: &FinitePoset,
        order: &[usize],
        sig: &dyn Fn(&FinitePoset, usize) -> (usize, usize),
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&x) = order.iter().find(|&&x| map[x].is_none()) else {
            return true;
        };
        for y in 0..q.len() {
            if used[y] || sig(p, x) != sig(q, y) {
                continue;
            }
            let consistent = (0..p.len()).all(|z| match map[z] {
                Some(w) => p.leq(x, z) == q.leq(y, w) && p.leq(z, x) == q.leq(w, y),
                None => true,
            });
            if consistent {
                map[x] = Some(y);
                used[y] = true;
                if go(p, q, order, sig, map, used) {
                    return true;
                }
                map[x] = None;
                used[y] = false;
            }
        }
        false
    }
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&x| sig(p, x));
    let mut map = vec![None; p.len()];
    let mut used = vec![false; q.len()];
    go(p, q, &order, &sig, &mut map, &mut used).then(|| map.into_iter().map(|m| m.expect("complete")).collect())
}

/// A monotone map between finite posets.
#[derive(Clone, Debug)]
pub struct PosetMap {
    pub source: FinitePoset,
    pub target: FinitePoset,
    pub assignment: Vec<usize>,
}

impl PosetMap {
    pub fn new(source: FinitePoset, target: FinitePoset, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() || assignment.iter().any(|&a| a >= target.len()) {
            return Err(Error::precondition("assignment does not match the source and target"));
        }
        for (x, y) in source.cover_pairs() {
            if !target.leq(assignment[y], assignment[x]) {
                return Err(Error::invariant(format!(
                    "map is not monotone: {} > {} but images are not ordered",
                    source.element(x),
                    source.element(y)
                )));
            }
        }
        Ok(PosetMap { source, target, assignment })
    }

    pub fn identity(p: FinitePoset) -> Self {
        let assignment = (0..p.len()).collect();
        PosetMap { source: p.clone(), target: p, assignment }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    pub fn preimage(&self, q: usize) -> Vec<usize> {
        (0..self.source.len()).filter(|&x| self.assignment[x] == q).collect()
    }

    /// Induced subposet on the preimage of `q`.
    pub fn fiber(&self, q: usize) -> FinitePoset {
        self.source.induced(&self.preimage(q))
    }

    /// The comma poset `{p : F(p) ≥ q}`.
    pub fn comma(&self, q: usize) -> FinitePoset {
        let keep: Vec<usize> = (0..self.source.len()).filter(|&x| self.target.leq(q, self.assignment[x])).collect();
        self.source.induced(&keep)
    }

    pub fn comma_key(&self, key: &str) -> Result<FinitePoset> {
        let q = self
            .target
            .index_of(key)
            .ok_or_else(|| Error::precondition(format!("{key} is not in the target")))?;
        Ok(self.comma(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        FinitePoset::from_relation((0..n).map(|i| i.to_string()).collect(), |x, y| x <= y).unwrap()
    }

    #[test]
    fn chain_covers() {
        let c = chain(4);
        assert_eq!(c.cover_pairs(), vec![(1, 0), (2, 1), (3, 2)]);
        assert_eq!(c.closure_of_covers(), c.down);
        assert_eq!(c.minimal_elements(), vec![0]);
    }

    #[test]
    fn product_of_chains() {
        let c = chain(2);
        let sq = FinitePoset::product(&[&c, &c]);
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.cover_pairs().len(), 4);
        assert_eq!(sq.element(3), "1|1");
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let r = FinitePoset::from_relation(vec!["a".into(), "b".into()], |_, _| true);
        assert!(matches!(r, Err(Error::Invariant(_))));
    }

    #[test]
    fn dot_of_single_element() {
        let p = chain(1);
        assert_eq!(p.hasse_dot(), "digraph hasse {\n  n0 [label=\"0\"];\n}\n");
    }

    #[test]
    fn identity_comma_is_up_set() {
        let f = PosetMap::identity(chain(3));
        assert_eq!(f.comma(1).elements(), ["1", "2"]);
    }
}
