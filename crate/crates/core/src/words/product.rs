//! Fibers above a fan split as products of word posets.

use crate::error::{Error, Result};
use crate::functors::{fan_from_word, pi, Trunk};
use crate::poset::FinitePoset;
use crate::tree::{contract::contraction_map, Fan, Node, PlanarTree};

use super::{word_poset, words, Word};

/// `fiber ≅ ∏ word_poset(ℓ_i, r_i)`, with `assignment[x]` the product
/// element matching fiber element `x`.
#[derive(Clone, Debug)]
pub struct ProductDecomposition {
    /// `(ℓ_i, r_i)` for the root and then each trunk vertex of the lower fan.
    pub factors: Vec<(usize, usize)>,
    pub fiber: FinitePoset,
    pub product: FinitePoset,
    pub assignment: Vec<usize>,
}

/// Positions along the left and right paths of a planar tree, from the root
/// outwards, as preorder indices.
fn side_paths(root: &Node) -> (Vec<usize>, Vec<usize>) {
    fn walk(root: &Node, leftmost: bool) -> Vec<usize> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut node = root;
        while let Node::Internal(_, c) = node {
            let i = if leftmost { 0 } else { c.len() - 1 };
            path.push(i);
            node = &c[i];
            if !node.is_leaf() {
                out.push(root.preorder_index(&path).expect("internal"));
            }
        }
        out
    }
    (walk(root, true), walk(root, false))
}

/// Split `w` into consecutive pieces with the given letter counts.
pub(crate) fn split_word(w: &Word, counts: &[(usize, usize)]) -> Option<Vec<Word>> {
    let mut out = Vec::with_capacity(counts.len());
    let mut rest = w.letters();
    for &(l, r) in counts {
        let (mut a, mut b, mut k) = (0, 0, 0);
        while a < l || b < r {
            let letter = *rest.get(k)?;
            a += usize::from(letter != super::Letter::B);
            b += usize::from(letter != super::Letter::A);
            k += 1;
        }
        if a != l || b != r {
            return None;
        }
        out.push(Word(rest[..k].to_vec()));
        rest = &rest[k..];
    }
    rest.is_empty().then_some(out)
}

/// Factor counts: how many left (right) path vertices of `y` contract onto
/// the root of `pi(lower)` and onto each trunk vertex's left (right) copy.
pub fn factor_counts(y: &PlanarTree, lower: &Fan) -> Result<Vec<(usize, usize)>> {
    let base = pi(lower);
    let image = contraction_map(y.root(), base.root(), false)
        .ok_or_else(|| Error::precondition(format!("{y} is not above {base}")))?;
    let (y_left, y_right) = side_paths(y.root());
    let (b_left, b_right) = side_paths(base.root());
    let trunk = Trunk::of(lower.root());
    let mut factors = vec![(0, 0); trunk.vertices.len() + 1];
    // Trunk vertex of each left (right) copy in pi(lower), root = 0.
    let owner = |has: &dyn Fn(usize) -> bool| -> Vec<usize> {
        (0..trunk.vertices.len()).filter(|&k| has(k)).map(|k| k + 1).collect()
    };
    let left_owner = owner(&|k| !trunk.vertices[k].left.is_empty());
    let right_owner = owner(&|k| !trunk.vertices[k].right.is_empty());
    let group = |v: usize, path: &[usize], owners: &[usize]| match path.iter().position(|&p| p == image[v]) {
        Some(k) => owners[k],
        None => 0,
    };
    for &v in &y_left {
        factors[group(v, &b_left, &left_owner)].0 += 1;
    }
    for &v in &y_right {
        factors[group(v, &b_right, &right_owner)].1 += 1;
    }
    Ok(factors)
}

/// Decompose the fans over `y` lying above `lower` and verify the product
/// isomorphism.
pub fn product_decompose(y: &PlanarTree, lower: &Fan) -> Result<ProductDecomposition> {
    if y.n() != lower.n() {
        return Err(Error::precondition("the tree and the fan have different leaf counts"));
    }
    let factors = factor_counts(y, lower)?;
    let mut members: Vec<(Word, Fan)> = Vec::new();
    for w in words(y.left_count(), y.right_count()) {
        let f = fan_from_word(y, &w)?;
        if f.is_geq(lower) {
            members.push((w, f));
        }
    }
    let keys = members.iter().map(|(_, f)| f.to_string()).collect();
    let fiber = FinitePoset::from_relation(keys, |a, b| members[b].1.is_geq(&members[a].1))?;
    let factor_posets: Vec<FinitePoset> = factors.iter().map(|&(l, r)| word_poset(l, r)).collect();
    let product = FinitePoset::product(&factor_posets.iter().collect::<Vec<_>>());
    let assignment = members
        .iter()
        .map(|(w, f)| {
            let parts = split_word(w, &factors)
                .ok_or_else(|| Error::invariant(format!("{f} has trunk word {w} that does not split")))?;
            let key = parts.iter().map(Word::to_string).collect::<Vec<_>>().join("|");
            product.index_of(&key).ok_or_else(|| Error::invariant(format!("{key} is not a product element")))
        })
        .collect::<Result<Vec<_>>>()?;
    if !fiber.is_isomorphism(&product, &assignment) {
        return Err(Error::invariant(format!("the fiber of {y} above {lower} is not the expected product")));
    }
    Ok(ProductDecomposition { factors, fiber, product, assignment })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corolla_fan_gives_one_factor() {
        let y: PlanarTree = "(((0 1) 2) (3 (4 5)))".parse().unwrap();
        let d = product_decompose(&y, &Fan::corolla(4)).unwrap();
        assert_eq!(d.factors, [(2, 2)]);
        assert_eq!(d.fiber.len(), 13);
    }

    #[test]
    fn maximal_fan_gives_a_point() {
        let y: PlanarTree = "((0 1) (2 3))".parse().unwrap();
        let lower: Fan = "<((2 *) 1)>".parse().unwrap();
        let d = product_decompose(&y, &lower).unwrap();
        assert_eq!(d.fiber.len(), 1);
        assert_eq!(d.product.len(), 1);
        assert_eq!(d.factors, [(0, 0), (1, 0), (0, 1)]);
    }

    #[test]
    fn two_trunk_vertices() {
        let y: PlanarTree = "((((0 1) 2) 3) (4 5))".parse().unwrap();
        let lower: Fan = "<((4 * 1) 2) 3>".parse().unwrap();
        let d = product_decompose(&y, &lower).unwrap();
        assert_eq!(d.factors, [(1, 0), (1, 0), (1, 1)]);
        let sizes: usize = d.factors.iter().map(|&(l, r)| word_poset(l, r).len()).product();
        assert_eq!(sizes, d.fiber.len());
    }

    #[test]
    fn splitting() {
        let w: Word = "ab(ab)b".parse().unwrap();
        assert_eq!(split_word(&w, &[(1, 1), (1, 2)]).unwrap().len(), 2);
        assert!(split_word(&w, &[(1, 0), (1, 3)]).is_some());
        assert!(split_word(&w, &[(2, 1), (0, 2)]).is_none());
    }
}
