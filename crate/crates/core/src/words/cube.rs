//! Integer cubes inside the domain `0 ≤ x_1 ≤ … ≤ x_ℓ ≤ r`.

use crate::poset::FinitePoset;

/// An axis-parallel unit cube with integer vertices, stored by its center
/// with every coordinate doubled.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerCube {
    pub doubled_center: Vec<i64>,
}

impl IntegerCube {
    pub fn dimension(&self) -> usize {
        self.doubled_center.iter().filter(|c| c.rem_euclid(2) == 1).count()
    }

    /// Whether `other` is a face of `self`.
    pub fn has_face(&self, other: &IntegerCube) -> bool {
        self.doubled_center.len() == other.doubled_center.len()
            && self
                .doubled_center
                .iter()
                .zip(&other.doubled_center)
                .all(|(&c, &d)| if c.rem_euclid(2) == 0 { c == d } else { (c - d).abs() <= 1 })
    }
}

fn ceil_half(d: i64) -> i64 {
    (d + 1).div_euclid(2)
}

fn floor_half(d: i64) -> i64 {
    d.div_euclid(2)
}

/// Whether the cube with this doubled center lies in the domain, using
/// `⌈x_{i−1}⌉ ≤ ⌊x_i⌋` with `x_0 = 0` and `x_{ℓ+1} = r`.
pub fn in_domain(doubled: &[i64], r: usize) -> bool {
    let mut prev = 0;
    for &d in doubled.iter().chain(std::iter::once(&(2 * r as i64))) {
        if ceil_half(prev) > floor_half(d) {
            return false;
        }
        prev = d;
    }
    true
}

/// Every cube of the domain, sorted by doubled center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeComplex {
    pub l: usize,
    pub r: usize,
    pub cubes: Vec<IntegerCube>,
}

impl CubeComplex {
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.cubes.iter().map(IntegerCube::dimension).max().unwrap_or(0);
        let mut f = vec![0; top + 1];
        self.cubes.iter().for_each(|c| f[c.dimension()] += 1);
        f
    }

    /// Cubes ordered so that faces are larger, matching the word order.
    pub fn poset(&self) -> FinitePoset {
        let keys = self.cubes.iter().map(|c| format_half_integers(&c.doubled_center)).collect();
        FinitePoset::from_relation(keys, |x, y| self.cubes[x].has_face(&self.cubes[y]))
            .expect("face inclusion is a partial order")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.cubes.iter().map(|c| c.doubled_center.clone()).collect::<Vec<_>>())
    }
}

pub fn cube_complex(l: usize, r: usize) -> CubeComplex {
    let side = 2 * r as i64 + 1;
    let mut cubes = Vec::new();
    let mut cur = vec![0i64; l];
    loop {
        if in_domain(&cur, r) {
            cubes.push(IntegerCube { doubled_center: cur.clone() });
        }
        let mut i = 0;
        while i < l && cur[i] == side - 1 {
            cur[i] = 0;
            i += 1;
        }
        if i == l {
            break;
        }
        cur[i] += 1;
    }
    cubes.sort();
    CubeComplex { l, r, cubes }
}

/// Doubled coordinates printed as half-integers, e.g. `(0, 3/2, 4)`.
pub fn format_half_integers(doubled: &[i64]) -> String {
    let parts: Vec<String> = doubled
        .iter()
        .map(|&d| if d % 2 == 0 { (d / 2).to_string() } else { format!("{d}/2") })
        .collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complexes() {
        assert_eq!(cube_complex(2, 2).f_vector(), [6, 6, 1]);
        assert_eq!(cube_complex(2, 1).f_vector(), [3, 2]);
        assert_eq!(cube_complex(0, 0).f_vector(), [1]);
    }

    #[test]
    fn domain_test() {
        assert!(in_domain(&[1, 3], 2));
        assert!(!in_domain(&[1, 1], 2));
        assert!(!in_domain(&[0, 5], 2));
    }
}
