//! Exhaustive generation of every species.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{AnyTree, BaseKind, Fan, Label, LeveledTree, Node, PlanarTree, STAR};
use crate::error::{Error, Result};

/// The four face posets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Species {
    Psi,
    Phi,
    PsiLevel,
    PhiLevel,
}

impl Species {
    pub const ALL: [Species; 4] = [Species::Psi, Species::Phi, Species::PsiLevel, Species::PhiLevel];

    pub fn is_leveled(self) -> bool {
        matches!(self, Species::PsiLevel | Species::PhiLevel)
    }

    /// Largest `n` enumerated without an explicit override.
    pub fn default_cap(self) -> usize {
        if self.is_leveled() {
            5
        } else {
            6
        }
    }

    /// The cap in force: `POLYFACES_MAX_N` if set, otherwise the default.
    pub fn cap(self) -> usize {
        std::env::var("POLYFACES_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or_else(|| self.default_cap())
    }
}

impl fmt::Display for Species {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Species::Psi => "psi",
            Species::Phi => "phi",
            Species::PsiLevel => "psi-level",
            Species::PhiLevel => "phi-level",
        })
    }
}

impl FromStr for Species {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "psi" => Ok(Species::Psi),
            "phi" => Ok(Species::Phi),
            "psi-level" | "psi_level" => Ok(Species::PsiLevel),
            "phi-level" | "phi_level" => Ok(Species::PhiLevel),
            _ => Err(Error::precondition(format!("unknown species {s:?}"))),
        }
    }
}

/// All planar trees on the leaf sequence `labels` (a single leaf included).
fn planar_subtrees(labels: &[Label]) -> Vec<Node> {
    if labels.len() == 1 {
        return vec![Node::Leaf(labels[0])];
    }
    forests(labels, 2).into_iter().map(|f| Node::Internal((), f)).collect()
}

/// All sequences of at least `min_parts` planar trees whose leaves, read in
/// order, are `labels`.
fn forests(labels: &[Label], min_parts: usize) -> Vec<Vec<Node>> {
    if labels.is_empty() {
        return if min_parts == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for k in 1..=labels.len() {
        let tails = forests(&labels[k..], min_parts.saturating_sub(1));
        if tails.is_empty() {
            continue;
        }
        for head in planar_subtrees(&labels[..k]) {
            for tail in &tails {
                let mut f = Vec::with_capacity(tail.len() + 1);
                f.push(head.clone());
                f.extend(tail.iter().cloned());
                out.push(f);
            }
        }
    }
    out
}

fn psi_trees(n: usize) -> Vec<PlanarTree> {
    let labels: Vec<Label> = (0..=n as Label + 1).collect();
    forests(&labels, 2).into_iter().map(|f| PlanarTree(Node::Internal((), f))).collect()
}

fn fans(n: usize) -> Vec<Fan> {
    let n = n as Label;
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            // The trunk child carries * with a labels after it and b before it.
            let trunk_labels: Vec<Label> = (n - b + 1..=n).chain([STAR]).chain(1..=a).collect();
            let middle: Vec<Label> = (a + 1..=n - b).collect();
            let middles = forests(&middle, 0);
            for trunk in planar_subtrees(&trunk_labels) {
                for rest in &middles {
                    let mut children = vec![trunk.clone()];
                    children.extend(rest.iter().cloned());
                    out.push(Fan(Node::Internal((), children)));
                }
            }
        }
    }
    out
}

/// All levelizations of a plain tree, as preorder level vectors.
pub(crate) fn level_vectors(parents: &[Option<usize>]) -> Vec<Vec<u32>> {
    fn go(parents: &[Option<usize>], levels: &mut Vec<u32>, next: u32, out: &mut Vec<Vec<u32>>) {
        let available: Vec<usize> = (0..parents.len())
            .filter(|&v| levels[v] == 0 && parents[v].map_or(true, |p| levels[p] != 0))
            .collect();
        if available.is_empty() {
            out.push(levels.clone());
            return;
        }
        for mask in 1..1u64 << available.len() {
            let chosen: Vec<usize> =
                available.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
            chosen.iter().for_each(|&v| levels[v] = next);
            go(parents, levels, next + 1, out);
            chosen.iter().for_each(|&v| levels[v] = 0);
        }
    }
    let mut out = Vec::new();
    go(parents, &mut vec![0; parents.len()], 1, &mut out);
    out
}

/// Every surjective strictly monotone level map on `base`, sorted by text.
pub fn enumerate_levelizations(kind: BaseKind, base: &Node) -> Vec<LeveledTree> {
    let mut out: Vec<LeveledTree> = level_vectors(&base.internal_parents())
        .into_iter()
        .map(|lv| LeveledTree { kind, root: base.map_annotations(&mut |i, _| lv[i]) })
        .collect();
    sort_by_text(&mut out);
    out
}

fn sort_by_text<T: fmt::Display>(items: &mut Vec<T>) {
    let mut keyed: Vec<(String, T)> = items.drain(..).map(|t| (t.to_string(), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    items.extend(keyed.into_iter().map(|(_, t)| t));
}

/// All elements of the face poset of `species` for this `n`, sorted
/// lexicographically by canonical text.
pub fn enumerate(species: Species, n: usize) -> Result<Vec<AnyTree>> {
    let cap = species.cap();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut out: Vec<AnyTree> = match species {
        Species::Psi => psi_trees(n).into_iter().map(AnyTree::Psi).collect(),
        Species::Phi => fans(n).into_iter().map(AnyTree::Fan).collect(),
        Species::PsiLevel => psi_trees(n)
            .iter()
            .flat_map(|t| enumerate_levelizations(BaseKind::Psi, &t.0))
            .map(AnyTree::Leveled)
            .collect(),
        Species::PhiLevel => fans(n)
            .iter()
            .flat_map(|t| enumerate_levelizations(BaseKind::Fan, &t.0))
            .map(AnyTree::Leveled)
            .collect(),
    };
    sort_by_text(&mut out);
    debug_assert_eq!(
        out.iter().map(|t| t.to_string()).collect::<BTreeSet<_>>().len(),
        out.len(),
        "enumeration produced duplicates"
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(species: Species, n: usize) -> Vec<String> {
        enumerate(species, n).unwrap().iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(texts(Species::Psi, 1), ["((0 1) 2)", "(0 (1 2))", "(0 1 2)"]);
        assert_eq!(texts(Species::Phi, 0), ["<*>"]);
        assert_eq!(texts(Species::Phi, 1).len(), 3);
        assert_eq!(texts(Species::Psi, 2).len(), 11);
        assert_eq!(texts(Species::Phi, 2).len(), 13);
        assert_eq!(texts(Species::PsiLevel, 2).len(), 13);
    }

    #[test]
    fn levelization_examples() {
        let count = |s: &str| {
            let t: PlanarTree = s.parse().unwrap();
            enumerate_levelizations(BaseKind::Psi, t.root()).len()
        };
        assert_eq!(count("(0 1 2)"), 1);
        assert_eq!(count("((0 1) (2 3))"), 3);
        assert_eq!(count("(((0 1) 2) 3)"), 1);
    }

    #[test]
    fn every_enumerated_tree_roundtrips() {
        for species in Species::ALL {
            for n in 0..=3 {
                for t in enumerate(species, n).unwrap() {
                    let text = t.to_string();
                    let back = crate::tree::parse(&text).unwrap();
                    assert_eq!(back, t, "{text}");
                    assert_eq!(back.to_string(), text);
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate(Species::PsiLevel, 40).unwrap_err(),
            Error::CapExceeded { n: 40, cap: Species::PsiLevel.cap() }
        );
    }
}
