//! The projection splitting a configuration at point `r` into the two
//! rescaled halves, and the segment of configurations over a pair of halves.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{EpsilonPath, LaurentPoly};
use super::{path_limit, triples, AmbientPoint, ChartKind, Configuration, Table};
use crate::error::{Error, Result};

/// Split a linear-chart point of dimension `r + l − 1` into points of
/// dimensions `r − 1` and `l − 1`: `s¹_ijk = s_ijk` and
/// `s²_ijk = s_{i+r, j+r, k+r}`.
pub fn split_projection(p: &AmbientPoint, r: usize, l: usize) -> Result<(AmbientPoint, AmbientPoint)> {
    let AmbientPoint::Alpha { n, s } = p else {
        return Err(Error::precondition("split projection needs an alpha point"));
    };
    if r == 0 || l == 0 || r + l - 1 != *n {
        return Err(Error::precondition(format!("cannot split dimension {n} as r + l - 1 with r = {r}, l = {l}")));
    }
    let left: Table<3, BigRational> = triples(r).map(|k| (k, s[&k].clone())).collect();
    let right: Table<3, BigRational> = triples(l).map(|[i, j, k]| ([i, j, k], s[&[i + r, j + r, k + r]].clone())).collect();
    Ok((AmbientPoint::Alpha { n: r - 1, s: left }, AmbientPoint::Alpha { n: l - 1, s: right }))
}

/// The point over `(left, right)` whose entry `s_{0,r,r+l}` equals `tau`,
/// where `r = left.n() + 1` and `l = right.n() + 1`. At `tau = 0` or `1` the
/// point is the limit of the interior ones, with the left or right block
/// infinitesimal.
pub fn tau_fiber_point(left: &Configuration, right: &Configuration, tau: &BigRational) -> Result<AmbientPoint> {
    let one = BigRational::one();
    if tau.is_negative() || tau > &one {
        return Err(Error::precondition(format!("tau = {tau} is not in [0, 1]")));
    }
    let e = LaurentPoly::monomial(one.clone(), 1);
    let cut = if tau.is_zero() {
        e
    } else if tau.is_one() {
        &LaurentPoly::constant(one.clone()) - &e
    } else {
        LaurentPoly::constant(tau.clone())
    };
    let rest = &LaurentPoly::constant(one.clone()) - &cut;
    let mut coords: Vec<LaurentPoly> = left.t().iter().map(|u| &cut * &LaurentPoly::constant(u.clone())).collect();
    coords.push(cut.clone());
    coords.extend(right.t().iter().map(|v| &cut + &(&rest * &LaurentPoly::constant(v.clone()))));
    path_limit(&EpsilonPath::new(coords)?, ChartKind::Alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charts::{chart, include_face};
    use crate::tree::parse;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn cfg(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    #[test]
    fn split_examples() {
        let p = chart(ChartKind::Alpha, &cfg("1/2"));
        let (a, b) = split_projection(&p, 1, 1).unwrap();
        assert_eq!(a.alpha_table().unwrap().len(), 0);
        assert_eq!(b.alpha_table().unwrap().len(), 0);
        let p = chart(ChartKind::Alpha, &cfg("1/5,2/5,3/5"));
        let (a, b) = split_projection(&p, 2, 2).unwrap();
        assert_eq!(a.alpha_table().unwrap()[&[0, 1, 2]], q(1, 2));
        assert_eq!(b.alpha_table().unwrap()[&[0, 1, 2]], q(1, 3));
        assert!(split_projection(&p, 2, 3).is_err());
    }

    #[test]
    fn tau_segment() {
        let p = tau_fiber_point(&cfg(""), &cfg(""), &q(1, 2)).unwrap();
        assert_eq!(p, chart(ChartKind::Alpha, &cfg("1/2")));
        let (u, v) = (cfg("1/3"), cfg("3/4"));
        let (cu, cv) = (chart(ChartKind::Alpha, &u), chart(ChartKind::Alpha, &v));
        let mut seen = Vec::new();
        for k in 0..=10 {
            let tau = q(k, 10);
            let x = tau_fiber_point(&u, &v, &tau).unwrap();
            assert_eq!(x.alpha_table().unwrap()[&[0, 2, 4]], tau);
            assert_eq!(split_projection(&x, 2, 2).unwrap(), (cu.clone(), cv.clone()));
            assert!(!seen.contains(&x));
            seen.push(x);
        }
        assert!(tau_fiber_point(&u, &v, &q(3, 2)).is_err());
    }

    #[test]
    fn tau_zero_is_a_face_point() {
        let (u, v) = (cfg("1/3"), cfg("3/4"));
        let x = tau_fiber_point(&u, &v, &q(0, 1)).unwrap();
        let face = parse("((0 1 2) 3 4)").unwrap();
        assert_eq!(x, include_face(&face, &[v, u]).unwrap());
    }
}
