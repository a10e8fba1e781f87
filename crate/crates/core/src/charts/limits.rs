//! Limits of chart entries along ε-paths, and the strata they identify.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{to_f64, EpsilonPath, LaurentPoly};
use super::{distinct_triples, quadruples, triples, AmbientPoint, ChartKind, ExtendedValue, Space, Table};
use crate::error::{Error, Result};
use crate::tree::{AnyTree, BaseKind, Fan, Label, LeveledTree, Node, PlanarTree, STAR};

/// `lim num/den` as `e → 0⁺`.
fn ratio_limit(num: &LaurentPoly, den: &LaurentPoly) -> Result<ExtendedValue> {
    let Some((dd, cd)) = den.leading() else {
        return Err(Error::precondition("zero polynomial in a denominator"));
    };
    let value = match num.leading() {
        None => ExtendedValue::zero(),
        Some((dn, _)) if dn > dd => ExtendedValue::zero(),
        Some((dn, _)) if dn < dd => ExtendedValue::Infinity,
        Some((_, cn)) => ExtendedValue::Finite(cn / cd),
    };
    let negative = match (&value, num.leading()) {
        (ExtendedValue::Finite(x), _) => x.is_negative(),
        (ExtendedValue::Infinity, Some((_, cn))) => cn.is_negative() != cd.is_negative(),
        _ => false,
    };
    if negative {
        return Err(Error::invariant("a chart ratio tends to a negative value"));
    }
    Ok(value)
}

fn finite_limit(num: &LaurentPoly, den: &LaurentPoly) -> Result<BigRational> {
    match ratio_limit(num, den)? {
        ExtendedValue::Finite(x) => Ok(x),
        ExtendedValue::Infinity => Err(Error::invariant("a bounded chart entry tends to infinity")),
    }
}

/// `|sin π d(e)| ~ magnitude · e^degree`.
fn sine_asymptotic(d: &LaurentPoly) -> Result<(i32, f64)> {
    let d0 = d.limit().ok_or_else(|| Error::invariant("a coordinate difference is unbounded"))?;
    if d0.is_integer() {
        let rest = d - &LaurentPoly::constant(d0);
        let (deg, c) = rest.leading().ok_or_else(|| Error::invariant("two points coincide along the path"))?;
        Ok((deg, PI * to_f64(c).abs()))
    } else {
        Ok((0, (PI * to_f64(&d0)).sin().abs()))
    }
}

fn sine_ratio_limit(num: &LaurentPoly, den: &LaurentPoly) -> Result<f64> {
    let (dn, mn) = sine_asymptotic(num)?;
    let (dd, md) = sine_asymptotic(den)?;
    Ok(match dn.cmp(&dd) {
        Ordering::Greater => 0.0,
        Ordering::Less => f64::INFINITY,
        Ordering::Equal => mn / md,
    })
}

fn alpha_limits(pts: &[LaurentPoly]) -> Result<Table<3, BigRational>> {
    triples(pts.len() - 1)
        .map(|[i, j, k]| Ok(([i, j, k], finite_limit(&(&pts[j] - &pts[i]), &(&pts[k] - &pts[i]))?)))
        .collect()
}

/// Limits of every entry of a chart along a path, computed exactly from
/// lowest-degree terms. Beta entries involving `sin` come out in `f64`.
pub fn path_limit(p: &EpsilonPath, kind: ChartKind) -> Result<AmbientPoint> {
    let n = p.n();
    let pts = p.points();
    Ok(match kind {
        ChartKind::Alpha => AmbientPoint::Alpha { n, s: alpha_limits(&pts)? },
        ChartKind::Beta => {
            let t = pts[1..=n]
                .iter()
                .map(|x| x.limit().map(|v| to_f64(&v)).ok_or_else(|| Error::invariant("unbounded coordinate")))
                .collect::<Result<_>>()?;
            let s = distinct_triples(n)
                .map(|[k, l, m]| Ok(([k, l, m], sine_ratio_limit(&(&pts[l] - &pts[k]), &(&pts[m] - &pts[k]))?)))
                .collect::<Result<_>>()?;
            AmbientPoint::Beta { n, t, s }
        }
        ChartKind::Gamma => {
            let one = LaurentPoly::constant(BigRational::one());
            let r = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| [i, j]))
                .map(|[i, j]| Ok(([i, j], ratio_limit(&pts[i], &(&one - &pts[j]))?)))
                .collect::<Result<_>>()?;
            AmbientPoint::Gamma { n, s: alpha_limits(&pts)?, r }
        }
        ChartKind::Delta => {
            let r = quadruples(n + 1)
                .map(|[i, j, k, l]| Ok(([i, j, k, l], ratio_limit(&(&pts[j] - &pts[i]), &(&pts[l] - &pts[k]))?)))
                .collect::<Result<_>>()?;
            AmbientPoint::Delta { n, s: alpha_limits(&pts)?, r }
        }
    })
}

/// Nest points (sorted by position) into clusters: consecutive points share
/// a child when their gap is infinitesimal against the cluster's diameter.
fn cluster(pts: &[(Label, LaurentPoly)]) -> Result<Node> {
    if let [(l, _)] = pts {
        return Ok(Node::Leaf(*l));
    }
    let diameter = &pts[pts.len() - 1].1 - &pts[0].1;
    let mut children = Vec::new();
    let mut start = 0;
    for x in 0..pts.len() - 1 {
        let gap = &pts[x + 1].1 - &pts[x].1;
        if ratio_limit(&gap, &diameter)? != ExtendedValue::zero() {
            children.push(cluster(&pts[start..=x])?);
            start = x + 1;
        }
    }
    children.push(cluster(&pts[start..])?);
    if children.len() < 2 {
        return Err(Error::invariant("a cluster did not split"));
    }
    Ok(Node::Internal((), children))
}

fn assoc_stratum(p: &EpsilonPath) -> Result<PlanarTree> {
    let pts: Vec<(Label, LaurentPoly)> = p.points().into_iter().enumerate().map(|(i, x)| (i as Label, x)).collect();
    PlanarTree::new(cluster(&pts)?)
}

fn cycl_stratum(p: &EpsilonPath) -> Result<Fan> {
    let one = LaurentPoly::constant(BigRational::one());
    let mut trunk = vec![(STAR, LaurentPoly::zero())];
    let mut groups: Vec<(BigRational, Vec<(Label, LaurentPoly)>)> = Vec::new();
    for (i, t) in p.coords().iter().enumerate() {
        let label = i as Label + 1;
        let c = t.limit().ok_or_else(|| Error::invariant("unbounded coordinate"))?;
        if c.is_zero() {
            trunk.push((label, t.clone()));
        } else if c.is_one() {
            trunk.push((label, t - &one));
        } else {
            match groups.last_mut() {
                Some((g, members)) if *g == c => members.push((label, t.clone())),
                _ => groups.push((c, vec![(label, t.clone())])),
            }
        }
    }
    trunk.sort_by(|a, b| {
        let d = &a.1 - &b.1;
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_eventually_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    });
    let mut children = vec![cluster(&trunk)?];
    for (_, members) in &groups {
        children.push(cluster(members)?);
    }
    Fan::new(Node::Internal((), children))
}

/// Leaf-label span `[min, max]` of every internal vertex, in preorder.
fn spans(node: &Node, out: &mut Vec<(usize, usize)>) {
    if let Node::Internal(_, c) = node {
        let leaves = node.leaves();
        out.push((leaves[0] as usize, leaves[leaves.len() - 1] as usize));
        c.iter().for_each(|ch| spans(ch, out));
    }
}

fn perm_stratum(p: &EpsilonPath) -> Result<LeveledTree> {
    let base = assoc_stratum(p)?;
    let AmbientPoint::Delta { r, .. } = path_limit(p, ChartKind::Delta)? else {
        unreachable!("delta limits are delta points")
    };
    let mut sp = Vec::new();
    spans(base.root(), &mut sp);
    // Less means a larger diameter, hence a lower level.
    let cmp = |u: usize, v: usize| -> Ordering {
        let ((a, b), (c, d)) = (sp[u], sp[v]);
        if u == v {
            Ordering::Equal
        } else if a <= c && d <= b {
            Ordering::Less
        } else if c <= a && b <= d {
            Ordering::Greater
        } else {
            let (left, right, flip) = if b < c { ((a, b), (c, d), false) } else { ((c, d), (a, b), true) };
            let o = match &r[&[left.0, left.1, right.0, right.1]] {
                ExtendedValue::Infinity => Ordering::Less,
                ExtendedValue::Finite(x) if x.is_zero() => Ordering::Greater,
                ExtendedValue::Finite(_) => Ordering::Equal,
            };
            if flip {
                o.reverse()
            } else {
                o
            }
        }
    };
    let mut order: Vec<usize> = (0..sp.len()).collect();
    order.sort_by(|&u, &v| cmp(u, v));
    let mut levels = vec![0u32; sp.len()];
    let mut level = 0;
    for (pos, &v) in order.iter().enumerate() {
        if pos == 0 || cmp(order[pos - 1], v) != Ordering::Equal {
            level += 1;
        }
        levels[v] = level;
    }
    LeveledTree::from_levels(BaseKind::Psi, base.root(), &levels)
        .map_err(|e| Error::invariant(format!("inconsistent level pattern: {e}")))
}

/// The face whose chart image contains the limit of the path.
pub fn identify_stratum(p: &EpsilonPath, space: Space) -> Result<AnyTree> {
    Ok(match space {
        Space::Assoc => AnyTree::Psi(assoc_stratum(p)?),
        Space::Cycl => AnyTree::Fan(cycl_stratum(p)?),
        Space::Perm => AnyTree::Leveled(perm_stratum(p)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charts::{chart, Configuration};
    use crate::functors::pi;

    fn path(s: &str) -> EpsilonPath {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn symbolic_limits() {
        let p = path("e^2, e, 1-e, 1-e^2");
        let AmbientPoint::Alpha { s, .. } = path_limit(&p, ChartKind::Alpha).unwrap() else { panic!() };
        assert_eq!(s[&[1, 2, 3]], q(0, 1));
        assert_eq!(s[&[0, 1, 3]], q(0, 1));
        assert_eq!(s[&[0, 2, 3]], q(0, 1));
        assert_eq!(s[&[0, 1, 2]], q(0, 1));
        assert_eq!(s[&[3, 4, 5]], q(1, 1));
        assert_eq!(s[&[0, 2, 5]], q(0, 1));
    }

    #[test]
    fn constant_paths_give_chart_values() {
        let p = path("1/4, 1/2");
        let c: Configuration = "1/4,1/2".parse().unwrap();
        for kind in [ChartKind::Alpha, ChartKind::Gamma, ChartKind::Delta] {
            assert_eq!(path_limit(&p, kind).unwrap(), chart(kind, &c));
        }
        let (AmbientPoint::Beta { s: a, .. }, AmbientPoint::Beta { s: b, .. }) =
            (path_limit(&p, ChartKind::Beta).unwrap(), chart(ChartKind::Beta, &c))
        else {
            panic!()
        };
        assert!(a.keys().eq(b.keys()));
        assert!(a.values().zip(b.values()).all(|(x, y)| (x - y).abs() < 1e-12));
    }

    #[test]
    fn ratio_limits() {
        let e = |s: &str| s.parse::<LaurentPoly>().unwrap();
        assert_eq!(ratio_limit(&e("e"), &e("e^2")).unwrap(), ExtendedValue::Infinity);
        assert_eq!(ratio_limit(&e("2e + e^2"), &e("3e")).unwrap(), ExtendedValue::Finite(q(2, 3)));
        assert!(ratio_limit(&e("e"), &LaurentPoly::zero()).is_err());
        assert!(ratio_limit(&e("-e"), &e("e")).is_err());
    }

    #[test]
    fn sine_limits() {
        // The two points near * on either side of it.
        let p = path("e, 1/2, 1 - 2e");
        let AmbientPoint::Beta { t, s, .. } = path_limit(&p, ChartKind::Beta).unwrap() else { panic!() };
        assert_eq!(t, [0.0, 0.5, 1.0]);
        assert!((s[&[0, 1, 3]] - 0.5).abs() < 1e-12);
        assert_eq!(s[&[0, 1, 2]], 0.0);
        assert!((s[&[1, 0, 3]] - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn strata_examples() {
        let t = identify_stratum(&path("e^2, e, 1-e, 1-e^2"), Space::Assoc).unwrap();
        assert_eq!(t.to_string(), "(((0 1) 2) (3 (4 5)))");
        let t = identify_stratum(&path("e, 2e, 1/2"), Space::Assoc).unwrap();
        assert_eq!(t.to_string(), "((0 1 2) 3 4)");
        let t = identify_stratum(&path("e^2, 1-e"), Space::Perm).unwrap();
        assert_eq!(t.to_string(), "((0 1)@3 (2 3)@2)@1");
        let t = identify_stratum(&path("1/4, 1/2"), Space::Assoc).unwrap();
        assert_eq!(t.to_string(), "(0 1 2 3)");
    }

    #[test]
    fn cyclic_strata() {
        let p = path("e, 1/2, 1 - e");
        let AnyTree::Fan(f) = identify_stratum(&p, Space::Cycl).unwrap() else { panic!() };
        assert_eq!(f.to_string(), "<(3 * 1) 2>");
        let AnyTree::Psi(t) = identify_stratum(&p, Space::Assoc).unwrap() else { panic!() };
        assert_eq!(pi(&f), t);
        let p = path("e^2, 1/2, 1 - e");
        let AnyTree::Fan(f) = identify_stratum(&p, Space::Cycl).unwrap() else { panic!() };
        assert_eq!(f.to_string(), "<(3 (* 1)) 2>");
        let AnyTree::Fan(f) = identify_stratum(&path("1/3, 2/3"), Space::Cycl).unwrap() else { panic!() };
        assert_eq!(f.to_string(), "<* 1 2>");
    }
}
