//! Posets of levelizations `X_T` on a fixed base tree.

use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::tree::{
    contract::contraction_map, enumerate::level_vectors, enumerate_levelizations, AnyTree, BaseKind, LeveledTree, Node,
};

fn level_key(levels: &[u32]) -> String {
    levels.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Whether `coarse = φ ∘ fine` for some monotone `φ`.
fn factors_through(fine: &[u32], coarse: &[u32]) -> bool {
    (0..fine.len()).all(|u| {
        (0..fine.len()).all(|v| match fine[u].cmp(&fine[v]) {
            std::cmp::Ordering::Equal => coarse[u] == coarse[v],
            std::cmp::Ordering::Less => coarse[u] <= coarse[v],
            std::cmp::Ordering::Greater => coarse[u] >= coarse[v],
        })
    })
}

/// Dense re-ranking of a level vector onto `1..=k`.
fn renumber(levels: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = levels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    levels.iter().map(|l| distinct.binary_search(l).expect("present") as u32 + 1).collect()
}

/// Levelizations of a forest given by parent pointers; keys are the level
/// vectors, e.g. `1,2,2`. Merging levels moves down.
pub fn forest_level_poset(parents: &[Option<usize>]) -> FinitePoset {
    let vectors = level_vectors(parents);
    let keys = vectors.iter().map(|v| level_key(v)).collect();
    FinitePoset::from_relation(keys, |a, b| factors_through(&vectors[b], &vectors[a]))
        .expect("level merging is a partial order")
}

fn base_of(t: &AnyTree) -> Result<(BaseKind, Node)> {
    match t {
        AnyTree::Psi(p) => Ok((BaseKind::Psi, p.root().clone())),
        AnyTree::Fan(f) => Ok((BaseKind::Fan, f.root().clone())),
        AnyTree::Leveled(_) => Err(Error::precondition("X_T takes an unleveled base tree")),
    }
}

fn poset_of(trees: &[LeveledTree]) -> FinitePoset {
    let keys = trees.iter().map(LeveledTree::to_string).collect();
    FinitePoset::from_relation(keys, |a, b| trees[b].is_geq(&trees[a])).expect("the leveled order is a partial order")
}

/// `X_T`: every levelization of `t`.
pub fn levelization_poset(t: &AnyTree) -> Result<FinitePoset> {
    let (kind, base) = base_of(t)?;
    Ok(poset_of(&enumerate_levelizations(kind, &base)))
}

fn levelizations_above(t: &AnyTree, lower: &LeveledTree) -> Result<Vec<LeveledTree>> {
    let (kind, base) = base_of(t)?;
    if kind != lower.kind() {
        return Err(Error::precondition("the base tree and the leveled tree are of different kinds"));
    }
    Ok(enumerate_levelizations(kind, &base).into_iter().filter(|l| l.is_geq(lower)).collect())
}

/// Levelizations of `t` lying above `lower`.
pub fn level_fiber_geq_poset(t: &AnyTree, lower: &LeveledTree) -> Result<FinitePoset> {
    Ok(poset_of(&levelizations_above(t, lower)?))
}

/// `level_fiber_geq_poset(t, lower) ≅ ∏_i X(F_i)`, one forest `F_i` per level
/// of `lower`: the vertices of `t` whose image sits on that level.
#[derive(Clone, Debug)]
pub struct LevelProduct {
    /// Preorder indices of the vertices of `t` in each group.
    pub groups: Vec<Vec<usize>>,
    pub fiber: FinitePoset,
    pub product: FinitePoset,
    pub assignment: Vec<usize>,
}

pub fn level_product_decompose(t: &AnyTree, lower: &LeveledTree) -> Result<LevelProduct> {
    let (kind, base) = base_of(t)?;
    let image = contraction_map(&base, lower.root(), kind == BaseKind::Fan)
        .ok_or_else(|| Error::precondition(format!("{t} does not contract to the base of {lower}")))?;
    let lower_levels = lower.levels();
    let mut groups = vec![Vec::new(); lower.level_count() as usize];
    for (v, &w) in image.iter().enumerate() {
        groups[lower_levels[w] as usize - 1].push(v);
    }
    let parents = base.internal_parents();
    let factor_posets: Vec<FinitePoset> = groups
        .iter()
        .map(|g| {
            let local: Vec<Option<usize>> =
                g.iter().map(|&v| parents[v].and_then(|p| g.iter().position(|&u| u == p))).collect();
            forest_level_poset(&local)
        })
        .collect();
    let product = FinitePoset::product(&factor_posets.iter().collect::<Vec<_>>());
    let members = levelizations_above(t, lower)?;
    let fiber = poset_of(&members);
    let assignment = members
        .iter()
        .map(|m| {
            let levels = m.levels();
            let key = groups
                .iter()
                .map(|g| level_key(&renumber(&g.iter().map(|&v| levels[v]).collect::<Vec<_>>())))
                .collect::<Vec<_>>()
                .join("|");
            product.index_of(&key).ok_or_else(|| Error::invariant(format!("{key} is not a product element")))
        })
        .collect::<Result<Vec<_>>>()?;
    if !fiber.is_isomorphism(&product, &assignment) {
        return Err(Error::invariant(format!("levelizations of {t} above {lower} are not the expected product")));
    }
    Ok(LevelProduct { groups, fiber, product, assignment })
}

/// Number of ordered set partitions of an `n`-set.
pub fn fubini(n: usize) -> u128 {
    let mut a = vec![1u128; n + 1];
    for m in 1..=n {
        let mut binom = 1u128;
        a[m] = 0;
        for k in 1..=m {
            binom = binom * (m - k + 1) as u128 / k as u128;
            a[m] += binom * a[m - k];
        }
    }
    a[n]
}

/// The cell of `X_T` above a levelization: observed size and height next to
/// the permutohedral prediction from the level sizes `k_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCensus {
    pub level_sizes: Vec<usize>,
    pub size: usize,
    pub expected_size: u128,
    pub height: usize,
    pub expected_height: usize,
}

impl LevelCensus {
    pub fn matches(&self) -> bool {
        self.size as u128 == self.expected_size && self.height == self.expected_height
    }
}

pub fn level_cell_census(l: &LeveledTree) -> Result<LevelCensus> {
    let base = match l.kind() {
        BaseKind::Psi => AnyTree::Psi(l.base_psi().expect("psi base")),
        BaseKind::Fan => AnyTree::Fan(l.base_fan().expect("fan base")),
    };
    let cell = levelization_poset(&base)?.subposet_geq_key(&l.to_string())?;
    let mut level_sizes = vec![0; l.level_count() as usize];
    l.levels().iter().for_each(|&k| level_sizes[k as usize - 1] += 1);
    Ok(LevelCensus {
        expected_size: level_sizes.iter().map(|&k| fubini(k)).product(),
        expected_height: level_sizes.iter().map(|&k| k - 1).sum(),
        size: cell.len(),
        height: cell.height(),
        level_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::PlanarTree;
    use crate::words::word_poset;

    fn psi(s: &str) -> AnyTree {
        AnyTree::Psi(s.parse::<PlanarTree>().unwrap())
    }

    #[test]
    fn small_levelization_posets() {
        assert_eq!(levelization_poset(&psi("(0 1 2)")).unwrap().len(), 1);
        let p = levelization_poset(&psi("((0 1) (2 3))")).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.cover_pairs().len(), 2);
        assert_eq!(p.minimal_elements().len(), 1);
        assert_eq!(p.element(p.minimal_elements()[0]), "((0 1)@2 (2 3)@2)@1");
    }

    #[test]
    fn two_chains_give_word_posets() {
        let x = levelization_poset(&psi("(((0 1) 2) (3 4))")).unwrap();
        let w = word_poset(2, 1);
        assert!(crate::poset::find_isomorphism(&x, &w).is_some());
    }

    #[test]
    fn forests() {
        let antichain = forest_level_poset(&[None, None, None]);
        assert_eq!(antichain.len(), 13);
        assert_eq!(forest_level_poset(&[]).len(), 1);
        assert_eq!(forest_level_poset(&[None, Some(0)]).len(), 1);
    }

    #[test]
    fn fubini_numbers() {
        let f: Vec<u128> = (0..6).map(fubini).collect();
        assert_eq!(f, [1, 1, 3, 13, 75, 541]);
    }

    #[test]
    fn level_products() {
        let t = psi("(((0 1) 2) (3 (4 5)))");
        let lower: LeveledTree = "((0 1 2)@2 3 4 5)@1".parse().unwrap();
        let d = level_product_decompose(&t, &lower).unwrap();
        assert_eq!(d.groups.iter().map(Vec::len).collect::<Vec<_>>(), [3, 2]);
        assert_eq!(d.fiber.len(), d.product.len());
        let census = level_cell_census(&"((0 1)@2 (2 3)@2)@1".parse().unwrap()).unwrap();
        assert!(census.matches());
        assert_eq!(census.size, 3);
    }
}
