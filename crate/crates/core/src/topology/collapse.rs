//! Greedy elementary collapses.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};

use super::SimplicialComplex;

/// A sequence of elementary collapses `(free face, its unique coface)` and
/// the simplices left at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collapse {
    pub steps: Vec<(Vec<usize>, Vec<usize>)>,
    pub remaining: Vec<Vec<usize>>,
}

impl Collapse {
    pub fn reaches_point(&self) -> bool {
        self.remaining.len() == 1
    }
}

fn facets_of(s: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..s.len()).filter(move |_| s.len() > 1).map(move |omit| {
        s.iter().enumerate().filter(|&(i, _)| i != omit).map(|(_, &v)| v).collect()
    })
}

/// Repeatedly remove the first free pair, ordering candidate faces by
/// dimension (highest first) and then lexicographically.
pub fn greedy_collapse(k: &SimplicialComplex) -> Collapse {
    let all: Vec<&Vec<usize>> = k.simplices.iter().flatten().collect();
    let id: HashMap<&[usize], usize> = all.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let mut cofacets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); all.len()];
    for (i, s) in all.iter().enumerate() {
        for f in facets_of(s) {
            cofacets[id[f.as_slice()]].insert(i);
        }
    }
    let mut alive = vec![true; all.len()];
    let key = |i: usize| (Reverse(all[i].len()), all[i].clone(), i);
    let mut queue: BTreeSet<(Reverse<usize>, Vec<usize>, usize)> =
        (0..all.len()).filter(|&i| cofacets[i].len() == 1).map(key).collect();
    let mut steps = Vec::new();
    while let Some(entry) = queue.pop_first() {
        let sigma = entry.2;
        if !alive[sigma] || cofacets[sigma].len() != 1 {
            continue;
        }
        let tau = *cofacets[sigma].iter().next().expect("one coface");
        alive[sigma] = false;
        alive[tau] = false;
        steps.push((all[sigma].clone(), all[tau].clone()));
        for (gone, f) in facets_of(all[tau]).map(|f| (tau, f)).chain(facets_of(all[sigma]).map(|f| (sigma, f))) {
            let fi = id[f.as_slice()];
            cofacets[fi].remove(&gone);
            if alive[fi] && cofacets[fi].len() == 1 {
                queue.insert(key(fi));
            }
        }
    }
    let remaining = (0..all.len()).filter(|&i| alive[i]).map(|i| all[i].clone()).collect();
    Collapse { steps, remaining }
}

/// Replay a collapse, checking that every removed face was free at its step.
pub fn verify_collapse(k: &SimplicialComplex, c: &Collapse) -> bool {
    let mut cofacets: HashMap<Vec<usize>, usize> = k.simplices.iter().flatten().map(|s| (s.clone(), 0)).collect();
    for s in k.simplices.iter().flatten() {
        for f in facets_of(s) {
            *cofacets.get_mut(&f).expect("closed under faces") += 1;
        }
    }
    for (sigma, tau) in &c.steps {
        let free = cofacets.get(sigma) == Some(&1)
            && cofacets.contains_key(tau)
            && tau.len() == sigma.len() + 1
            && sigma.iter().all(|v| tau.contains(v));
        if !free {
            return false;
        }
        for gone in [tau, sigma] {
            cofacets.remove(gone);
            for f in facets_of(gone) {
                if let Some(n) = cofacets.get_mut(&f) {
                    *n -= 1;
                }
            }
        }
    }
    let mut left: Vec<Vec<usize>> = cofacets.into_keys().collect();
    left.sort();
    let mut expected = c.remaining.clone();
    expected.sort();
    left == expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;
    use crate::topology::order_complex;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn simplices_collapse() {
        for d in 0..5 {
            let k = SimplicialComplex::from_facets(labels(d + 1), &[(0..=d).collect()]).unwrap();
            let c = greedy_collapse(&k);
            assert!(c.reaches_point());
            assert!(verify_collapse(&k, &c));
        }
    }

    #[test]
    fn circle_does_not() {
        let k = SimplicialComplex::from_facets(labels(3), &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(!greedy_collapse(&k).reaches_point());
    }

    #[test]
    fn cones_collapse() {
        // Two incomparable elements above a minimum.
        let p = FinitePoset::from_relation(labels(3), |x, y| x == y || x == 0).unwrap();
        let k = order_complex(&p);
        let c = greedy_collapse(&k);
        assert!(c.reaches_point() && verify_collapse(&k, &c));
    }
}
