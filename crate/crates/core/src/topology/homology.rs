//! Reduced simplicial homology by sparse column reduction.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Rational,
    F2,
}

/// Signed boundary matrices of the augmented chain complex. `columns[k][j]`
/// is the boundary of the `j`-th `k`-simplex as `(row, ±1)` pairs sorted by
/// row; dimension 0 maps onto the single empty simplex.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub columns: Vec<Vec<Vec<(usize, i64)>>>,
}

impl ChainComplex {
    pub fn of(k: &SimplicialComplex) -> ChainComplex {
        let maps = k.index_maps();
        let mut columns = vec![vec![vec![(0, 1)]; k.simplices(0).len()]];
        for d in 1..k.simplices.len() {
            let col = k.simplices[d]
                .iter()
                .map(|s| {
                    let mut c: Vec<(usize, i64)> = (0..s.len())
                        .map(|omit| {
                            let face: Vec<usize> =
                                s.iter().enumerate().filter(|&(i, _)| i != omit).map(|(_, &v)| v).collect();
                            (maps[d - 1][face.as_slice()], if omit % 2 == 0 { 1 } else { -1 })
                        })
                        .collect();
                    c.sort_unstable();
                    c
                })
                .collect();
            columns.push(col);
        }
        ChainComplex { columns }
    }

    pub fn boundary_squared_is_zero(&self) -> bool {
        (1..self.columns.len()).all(|d| {
            self.columns[d].iter().all(|col| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(r, c) in col {
                    for &(q, e) in &self.columns[d - 1][r] {
                        *acc.entry(q).or_default() += c * e;
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }
}

trait Field: Clone + PartialEq {
    fn from_sign(s: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a - f * b`.
    fn sub_mul(a: &Self, f: &Self, b: &Self) -> Self;
    fn div(a: &Self, b: &Self) -> Self;
}

impl Field for bool {
    fn from_sign(s: i64) -> Self {
        s % 2 != 0
    }
    fn is_zero(&self) -> bool {
        !*self
    }
    fn sub_mul(a: &Self, f: &Self, b: &Self) -> Self {
        *a ^ (*f && *b)
    }
    fn div(a: &Self, _: &Self) -> Self {
        *a
    }
}

impl Field for BigRational {
    fn from_sign(s: i64) -> Self {
        BigRational::from_integer(s.into())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn sub_mul(a: &Self, f: &Self, b: &Self) -> Self {
        a - f * b
    }
    fn div(a: &Self, b: &Self) -> Self {
        a / b
    }
}

/// `a -= f * b` on sparse sorted columns.
fn axpy<F: Field>(a: &[(usize, F)], f: &F, b: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let zero = F::from_sign(0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (row, v) = if take_a {
            i += 1;
            (a[i - 1].0, a[i - 1].1.clone())
        } else if take_b {
            j += 1;
            (b[j - 1].0, F::sub_mul(&zero, f, &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, F::sub_mul(&a[i - 1].1, f, &b[j - 1].1))
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    out
}

/// Ranks of every boundary map, reducing from the top dimension down so that
/// pivots of `∂_{k+1}` clear columns of `∂_k`.
fn ranks<F: Field>(cc: &ChainComplex) -> Vec<usize> {
    let top = cc.columns.len();
    let mut ranks = vec![0; top];
    let mut cleared: Vec<bool> = Vec::new();
    for d in (0..top).rev() {
        let rows = if d == 0 { 1 } else { cc.columns[d - 1].len() };
        let mut pivot_col: Vec<Option<usize>> = vec![None; rows];
        let mut reduced: Vec<Vec<(usize, F)>> = Vec::with_capacity(cc.columns[d].len());
        let mut next_cleared = vec![false; rows];
        for (j, col) in cc.columns[d].iter().enumerate() {
            if cleared.get(j).copied().unwrap_or(false) {
                reduced.push(Vec::new());
                continue;
            }
            let mut c: Vec<(usize, F)> = col.iter().map(|&(r, s)| (r, F::from_sign(s))).collect();
            while let Some((low, v)) = c.last().cloned() {
                match pivot_col[low] {
                    Some(p) => {
                        let f = F::div(&v, &reduced[p].last().expect("pivot column").1);
                        c = axpy(&c, &f, &reduced[p]);
                    }
                    None => {
                        pivot_col[low] = Some(j);
                        next_cleared[low] = true;
                        ranks[d] += 1;
                        break;
                    }
                }
            }
            reduced.push(c);
        }
        cleared = next_cleared;
    }
    ranks
}

/// Reduced Betti numbers `β̃_0, …, β̃_dim`.
pub fn homology_ranks(k: &SimplicialComplex, coeffs: Coefficients) -> Result<Vec<usize>> {
    if k.is_empty() {
        return Err(Error::precondition("homology of the empty complex is not computed"));
    }
    let cc = ChainComplex::of(k);
    let r = match coeffs {
        Coefficients::Rational => ranks::<BigRational>(&cc),
        Coefficients::F2 => ranks::<bool>(&cc),
    };
    Ok((0..cc.columns.len())
        .map(|d| cc.columns[d].len() - r[d] - r.get(d + 1).copied().unwrap_or(0))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::order_complex;
    use crate::words::word_poset;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn point_and_circle() {
        let point = SimplicialComplex::from_facets(labels(1), &[vec![0]]).unwrap();
        assert_eq!(homology_ranks(&point, Coefficients::Rational).unwrap(), [0]);
        let circle =
            SimplicialComplex::from_facets(labels(3), &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        for c in [Coefficients::Rational, Coefficients::F2] {
            assert_eq!(homology_ranks(&circle, c).unwrap(), [0, 1]);
        }
    }

    #[test]
    fn projective_plane_separates_the_fields() {
        // Six-vertex triangulation of RP^2.
        let facets = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let k = SimplicialComplex::from_facets(labels(6), &facets.map(|f| f.to_vec())).unwrap();
        assert!(ChainComplex::of(&k).boundary_squared_is_zero());
        assert_eq!(homology_ranks(&k, Coefficients::Rational).unwrap(), [0, 0, 0]);
        assert_eq!(homology_ranks(&k, Coefficients::F2).unwrap(), [0, 1, 1]);
    }

    #[test]
    fn word_poset_is_acyclic() {
        let k = order_complex(&word_poset(2, 2));
        assert!(ChainComplex::of(&k).boundary_squared_is_zero());
        assert!(homology_ranks(&k, Coefficients::Rational).unwrap().iter().all(|&b| b == 0));
    }

    #[test]
    fn empty_complex_is_rejected() {
        let k = SimplicialComplex::from_facets(Vec::new(), &[]).unwrap();
        assert!(homology_ranks(&k, Coefficients::F2).is_err());
    }
}
