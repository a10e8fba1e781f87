use std::collections::HashMap;

use super::{BitSet, FinitePoset};
use crate::error::Result;
use crate::tree::{enumerate, AnyTree, Species};

/// The face poset of `species` at `n`, elements in enumeration order.
pub fn face_poset(species: Species, n: usize) -> Result<FinitePoset> {
    Ok(face_poset_with_trees(species, n)?.0)
}

/// As [`face_poset`], also returning the parsed trees.
pub fn face_poset_with_trees(species: Species, n: usize) -> Result<(FinitePoset, Vec<AnyTree>)> {
    let trees = enumerate(species, n)?;
    let keys: Vec<String> = trees.iter().map(|t| t.to_string()).collect();
    let index: HashMap<&str, usize> = keys.iter().enumerate().map(|(i, k)| (k.as_str(), i)).collect();
    let down = trees
        .iter()
        .map(|t| {
            let mut d = BitSet::new(trees.len());
            for c in t.all_contractions() {
                d.insert(index[c.to_string().as_str()]);
            }
            d
        })
        .collect();
    Ok((FinitePoset::from_down_sets(keys, down)?, trees))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon() {
        let p = face_poset(Species::Psi, 2).unwrap();
        assert_eq!(p.len(), 11);
        assert_eq!(p.minimal_elements().len(), 1);
        assert_eq!(p.element(p.minimal_elements()[0]), "(0 1 2 3)");
        assert_eq!(p.maximal_elements().len(), 5);
        assert_eq!(p.cover_pairs().len(), 15);
        p.check_transitive().unwrap();
    }

    #[test]
    fn interval_fan_poset() {
        let p = face_poset(Species::Phi, 1).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.maximal_elements().len(), 2);
        assert_eq!(p.cover_pairs().len(), 2);
        assert_eq!(p.hasse_dot().matches("->").count(), 2);
    }

    #[test]
    fn subposets_of_the_pentagon() {
        let p = face_poset(Species::Psi, 2).unwrap();
        assert_eq!(p.subposet_geq_key("(0 1 2 3)").unwrap().len(), 11);
        assert_eq!(p.subposet_geq_key("(((0 1) 2) 3)").unwrap().len(), 1);
        assert_eq!(p.subposet_geq_key("((0 1) 2 3)").unwrap().len(), 3);
    }

    #[test]
    fn leveled_order_agrees_with_is_geq() {
        let (p, trees) = face_poset_with_trees(Species::PhiLevel, 2).unwrap();
        for (i, a) in trees.iter().enumerate() {
            for (j, b) in trees.iter().enumerate() {
                assert_eq!(p.leq(j, i), a.is_geq(b).unwrap());
            }
        }
    }
}
