//! Comma posets of poset maps and the cell posets of their fibers over
//! open simplices.

use super::{contractibility, order_complex, ContractibilityReport};
use crate::error::{Error, Result};
use crate::poset::{FinitePoset, PosetMap};

/// `{p : F(p) ≥ q}` for the target element with key `q`.
pub fn comma_poset(f: &PosetMap, q: &str) -> Result<FinitePoset> {
    f.comma_key(q)
}

/// Contractibility evidence for every comma poset of a map.
#[derive(Clone, Debug)]
pub struct CofinalityReport {
    pub entries: Vec<(String, ContractibilityReport)>,
}

impl CofinalityReport {
    pub fn all_acyclic(&self) -> bool {
        self.entries.iter().all(|(_, r)| r.acyclic())
    }

    pub fn collapsible_count(&self) -> usize {
        self.entries.iter().filter(|(_, r)| r.collapsible()).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(e, r)| {
                let mut v = r.to_json();
                v["element"] = e.as_str().into();
                v
            })
            .collect();
        serde_json::json!({ "all_acyclic": self.all_acyclic(), "targets": entries })
    }
}

pub fn cofinality_report(f: &PosetMap) -> Result<CofinalityReport> {
    let entries = (0..f.target.len())
        .map(|q| {
            let comma = f.comma(q);
            Ok((f.target.element(q).to_string(), contractibility(&order_complex(&comma))?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CofinalityReport { entries })
}

/// Cells of the fiber of `|f|` over an interior point of the simplex of
/// `chain`: chains of the source inside the preimage of the chain that meet
/// every preimage, ordered by inclusion.
pub fn prism_fiber_complex(f: &PosetMap, chain: &[usize]) -> Result<FinitePoset> {
    if chain.is_empty() {
        return Err(Error::precondition("the chain is empty"));
    }
    if chain.windows(2).any(|w| w[0] == w[1] || !f.target.leq(w[0], w[1])) {
        return Err(Error::precondition("the chain is not strictly increasing"));
    }
    let level: Vec<Option<usize>> = (0..f.source.len()).map(|x| chain.iter().position(|&q| f.apply(x) == q)).collect();
    let mut pool: Vec<usize> = (0..f.source.len()).filter(|&x| level[x].is_some()).collect();
    // A linear extension: by level, then by down-set size.
    pool.sort_by_key(|&x| (level[x], f.source.down_set(x).count(), x));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    fn grow(
        f: &PosetMap,
        pool: &[usize],
        level: &[Option<usize>],
        levels: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let hit: std::collections::BTreeSet<usize> = cur.iter().map(|&x| level[x].expect("pooled")).collect();
        if hit.len() == levels {
            out.push(cur.clone());
        }
        for i in start..pool.len() {
            let x = pool[i];
            if cur.last().map_or(true, |&t| t != x && f.source.leq(t, x)) {
                cur.push(x);
                grow(f, pool, level, levels, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    grow(f, &pool, &level, chain.len(), 0, &mut Vec::new(), &mut cells);
    if cells.is_empty() {
        return Err(Error::precondition("some element of the chain has an empty preimage"));
    }
    let keys = cells
        .iter()
        .map(|c| c.iter().map(|&x| f.source.element(x)).collect::<Vec<_>>().join(" < "))
        .collect();
    FinitePoset::from_relation(keys, |a, b| cells[a].iter().all(|x| cells[b].contains(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::{Functor, Projection};
    use crate::topology::homology_ranks;
    use crate::topology::Coefficients;

    #[test]
    fn comma_over_the_corolla_is_everything() {
        let p = Projection::new(Functor::Pi, 2).unwrap();
        assert_eq!(comma_poset(&p.map, "(0 1 2 3)").unwrap().len(), 13);
        assert!(comma_poset(&p.map, "(0 1)").is_err());
    }

    #[test]
    fn small_cofinality() {
        let p = Projection::new(Functor::Pi, 1).unwrap();
        let r = cofinality_report(&p.map).unwrap();
        assert!(r.all_acyclic());
        assert_eq!(r.entries.len(), 3);
    }

    #[test]
    fn prism_cells() {
        let p = Projection::new(Functor::Pi, 2).unwrap();
        let id = PosetMap::identity(p.map.target.clone());
        let corolla = id.target.index_of("(0 1 2 3)").unwrap();
        let binary = id.target.index_of("((0 1) (2 3))").unwrap();
        assert_eq!(prism_fiber_complex(&id, &[corolla, binary]).unwrap().len(), 1);
        let cells = prism_fiber_complex(&p.map, &[corolla, binary]).unwrap();
        let k = order_complex(&cells);
        assert!(homology_ranks(&k, Coefficients::F2).unwrap().iter().all(|&b| b == 0));
        assert!(prism_fiber_complex(&p.map, &[binary, corolla]).is_err());
        assert!(prism_fiber_complex(&p.map, &[]).is_err());
    }
}
