//! Order complexes, their homology, greedy collapses and the comma-poset and
//! prism checks built on them.

mod collapse;
mod homology;
mod maps;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

pub use collapse::{greedy_collapse, verify_collapse, Collapse};
pub use homology::{homology_ranks, ChainComplex, Coefficients};
pub use maps::{cofinality_report, comma_poset, prism_fiber_complex, CofinalityReport};

/// A finite abstract simplicial complex on vertices `0..labels.len()`.
/// `simplices[k]` lists the `k`-simplices as sorted vertex vectors, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    simplices: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Close `facets` under taking faces.
    pub fn from_facets(labels: Vec<String>, facets: &[Vec<usize>]) -> Result<Self> {
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<usize>>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if f.is_empty() || f.iter().any(|&v| v >= labels.len()) {
                return Err(Error::precondition("facets must be nonempty and use known vertices"));
            }
            let k = f.len();
            for mask in 1..1u64 << k {
                let face: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
                let d = face.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, Default::default);
                }
                by_dim[d].insert(face);
            }
        }
        Ok(SimplicialComplex { labels, simplices: by_dim.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// `-1` for the empty complex.
    pub fn dimension(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().enumerate().map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) }).sum()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub(crate) fn index_maps(&self) -> Vec<HashMap<&[usize], usize>> {
        self.simplices
            .iter()
            .map(|s| s.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect())
            .collect()
    }
}

/// The complex of nonempty strict chains of `p`.
pub fn order_complex(p: &FinitePoset) -> SimplicialComplex {
    fn extend(p: &FinitePoset, chain: &mut Vec<usize>, by_dim: &mut Vec<Vec<Vec<usize>>>) {
        let mut sorted = chain.clone();
        sorted.sort_unstable();
        let d = chain.len() - 1;
        if by_dim.len() <= d {
            by_dim.resize_with(d + 1, Vec::new);
        }
        by_dim[d].push(sorted);
        let top = *chain.last().expect("nonempty");
        for y in p.up_set(top).iter() {
            if y != top {
                chain.push(y);
                extend(p, chain, by_dim);
                chain.pop();
            }
        }
    }
    let mut by_dim = Vec::new();
    for x in 0..p.len() {
        extend(p, &mut vec![x], &mut by_dim);
    }
    by_dim.iter_mut().for_each(|s| s.sort_unstable());
    SimplicialComplex { labels: p.elements().to_vec(), simplices: by_dim }
}

/// Layered evidence: acyclicity over both fields, and a collapse to a
/// point when greedy collapsing finds one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractibilityReport {
    pub betti_q: Vec<usize>,
    pub betti_f2: Vec<usize>,
    pub acyclic_q: bool,
    pub acyclic_f2: bool,
    pub collapse: Option<Collapse>,
}

impl ContractibilityReport {
    pub fn collapsible(&self) -> bool {
        self.collapse.is_some()
    }

    pub fn acyclic(&self) -> bool {
        self.acyclic_q && self.acyclic_f2
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "betti_Q": self.betti_q,
            "betti_F2": self.betti_f2,
            "collapsible": self.collapsible(),
        })
    }
}

pub fn contractibility(k: &SimplicialComplex) -> Result<ContractibilityReport> {
    let betti_q = homology_ranks(k, Coefficients::Rational)?;
    let betti_f2 = homology_ranks(k, Coefficients::F2)?;
    let collapse = greedy_collapse(k);
    Ok(ContractibilityReport {
        acyclic_q: betti_q.iter().all(|&b| b == 0),
        acyclic_f2: betti_f2.iter().all(|&b| b == 0),
        betti_q,
        betti_f2,
        collapse: collapse.reaches_point().then_some(collapse),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_complex_of_a_chain_is_a_simplex() {
        let p = FinitePoset::from_relation(vec!["a".into(), "b".into(), "c".into()], |x, y| x <= y).unwrap();
        let k = order_complex(&p);
        assert_eq!(k.f_vector(), [3, 3, 1]);
        assert_eq!(k.euler_characteristic(), 1);
    }

    #[test]
    fn closure_under_faces() {
        let k = SimplicialComplex::from_facets(vec!["0".into(), "1".into(), "2".into()], &[vec![0, 1], vec![1, 2]])
            .unwrap();
        assert_eq!(k.f_vector(), [3, 2]);
        assert_eq!(k.dimension(), 1);
    }
}
