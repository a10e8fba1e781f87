//! Coordinate charts on the compactified configuration spaces: tables of
//! relative distances, their blend, face inclusions, the split projection,
//! limits along ε-paths and the strata those limits land in.
//!
//! Tables are keyed by index tuples. Rational formulas are evaluated
//! exactly; anything involving `sin` is evaluated in `f64`.

mod blend;
mod face;
mod laurent;
mod limits;
mod split;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub use blend::{blend_projection, BlendConfig};
pub use face::{face_path, include_face};
pub use laurent::{EpsilonPath, LaurentPoly};
pub use limits::{identify_stratum, path_limit};
pub use split::{split_projection, tau_fiber_point};

/// Agreement tolerance for floating-point chart comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// A table indexed by `K`-tuples of point indices.
pub type Table<const K: usize, V> = BTreeMap<[usize; K], V>;

/// `0 = t_0 < t_1 < … < t_n < t_{n+1} = 1`, stored as `t_1, …, t_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    t: Vec<BigRational>,
}

impl Configuration {
    pub fn new(t: Vec<BigRational>) -> Result<Self> {
        let c = Configuration { t };
        let pts = c.points();
        if pts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::precondition("configuration is not interior: need 0 < t_1 < … < t_n < 1"));
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn t(&self) -> &[BigRational] {
        &self.t
    }

    /// `t_0, …, t_{n+1}`.
    pub fn points(&self) -> Vec<BigRational> {
        let mut v = Vec::with_capacity(self.t.len() + 2);
        v.push(BigRational::zero());
        v.extend(self.t.iter().cloned());
        v.push(BigRational::one());
        v
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.t.iter().map(laurent::to_f64).collect()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.t.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Configuration {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Configuration::new(Vec::new());
        }
        let mut t = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let x = part.trim().parse::<BigRational>().map_err(|_| Error::Parse {
                pos: offset,
                msg: format!("expected a rational number, got {:?}", part.trim()),
            })?;
            t.push(x);
            offset += part.len() + 1;
        }
        Configuration::new(t)
    }
}

/// A point of `[0, +∞]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedValue {
    Finite(BigRational),
    Infinity,
}

impl ExtendedValue {
    pub fn zero() -> Self {
        ExtendedValue::Finite(BigRational::zero())
    }

    pub fn one() -> Self {
        ExtendedValue::Finite(BigRational::one())
    }

    /// `num / den` with `x / 0 = ∞` for `x > 0`.
    pub fn ratio(num: BigRational, den: BigRational) -> Result<Self> {
        if num.is_negative() || den.is_negative() || (num.is_zero() && den.is_zero()) {
            return Err(Error::precondition(format!("{num}/{den} is not a point of [0, +inf]")));
        }
        Ok(if den.is_zero() { ExtendedValue::Infinity } else { ExtendedValue::Finite(num / den) })
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtendedValue::Finite(x) => Some(x),
            ExtendedValue::Infinity => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtendedValue::Finite(x) => laurent::to_f64(x),
            ExtendedValue::Infinity => f64::INFINITY,
        }
    }

    /// The smooth chart `x ↦ x / (1 + x)` onto `[0, 1]`.
    pub fn compactified(&self) -> BigRational {
        match self {
            ExtendedValue::Finite(x) => x / (x + BigRational::one()),
            ExtendedValue::Infinity => BigRational::one(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            ExtendedValue::Finite(x) => rational_json(x),
            ExtendedValue::Infinity => json!("inf"),
        }
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::Finite(x) => write!(f, "{x}"),
            ExtendedValue::Infinity => f.write_str("inf"),
        }
    }
}

pub(crate) fn rational_json(x: &BigRational) -> Value {
    let part = |v: &num_bigint::BigInt| v.to_i64().map_or_else(|| json!(v.to_string()), |i| json!(i));
    json!({ "num": part(x.numer()), "den": part(x.denom()) })
}

fn float_json(x: f64) -> Value {
    if x.is_infinite() {
        json!("inf")
    } else {
        json!(x)
    }
}

fn key_string(k: &[usize]) -> String {
    k.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn table_json<const K: usize, V>(t: &Table<K, V>, f: impl Fn(&V) -> Value) -> Value {
    Value::Object(t.iter().map(|(k, v)| (key_string(k), f(v))).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChartKind {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

impl ChartKind {
    pub const ALL: [ChartKind; 4] = [ChartKind::Alpha, ChartKind::Beta, ChartKind::Gamma, ChartKind::Delta];
}

impl fmt::Display for ChartKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChartKind::Alpha => "alpha",
            ChartKind::Beta => "beta",
            ChartKind::Gamma => "gamma",
            ChartKind::Delta => "delta",
        })
    }
}

impl FromStr for ChartKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ChartKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::precondition(format!("unknown chart kind {s:?}; expected alpha, beta, gamma or delta")))
    }
}

/// The compactified space a path degenerates in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Assoc,
    Cycl,
    Perm,
}

impl Space {
    pub const ALL: [Space; 3] = [Space::Assoc, Space::Cycl, Space::Perm];
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Assoc => "assoc",
            Space::Cycl => "cycl",
            Space::Perm => "perm",
        })
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Space::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::precondition(format!("unknown space {s:?}; expected assoc, cycl or perm")))
    }
}

/// A point of one of the ambient products the charts land in.
///
/// `Alpha` holds `s_ijk` for `0 ≤ i < j < k ≤ n+1`; `Beta` holds the
/// simplex coordinates and `s̃_klm` for distinct `k, l, m ∈ 0..=n`; `Gamma`
/// adds `r_ij` for `1 ≤ i < j ≤ n`; `Delta` adds `r_ijkl` for
/// `0 ≤ i < j < k < l ≤ n+1`.
#[derive(Clone, Debug, PartialEq)]
pub enum AmbientPoint {
    Alpha { n: usize, s: Table<3, BigRational> },
    Beta { n: usize, t: Vec<f64>, s: Table<3, f64> },
    Gamma { n: usize, s: Table<3, BigRational>, r: Table<2, ExtendedValue> },
    Delta { n: usize, s: Table<3, BigRational>, r: Table<4, ExtendedValue> },
}

impl AmbientPoint {
    pub fn kind(&self) -> ChartKind {
        match self {
            AmbientPoint::Alpha { .. } => ChartKind::Alpha,
            AmbientPoint::Beta { .. } => ChartKind::Beta,
            AmbientPoint::Gamma { .. } => ChartKind::Gamma,
            AmbientPoint::Delta { .. } => ChartKind::Delta,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            AmbientPoint::Alpha { n, .. }
            | AmbientPoint::Beta { n, .. }
            | AmbientPoint::Gamma { n, .. }
            | AmbientPoint::Delta { n, .. } => *n,
        }
    }

    /// The `s_ijk` table of the alpha, gamma and delta variants.
    pub fn alpha_table(&self) -> Option<&Table<3, BigRational>> {
        match self {
            AmbientPoint::Alpha { s, .. } | AmbientPoint::Gamma { s, .. } | AmbientPoint::Delta { s, .. } => Some(s),
            AmbientPoint::Beta { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "kind": self.kind().to_string(), "n": self.n() });
        match self {
            AmbientPoint::Alpha { s, .. } => v["s"] = table_json(s, rational_json),
            AmbientPoint::Beta { t, s, .. } => {
                v["t"] = t.iter().map(|&x| float_json(x)).collect();
                v["s"] = table_json(s, |&x| float_json(x));
            }
            AmbientPoint::Gamma { s, r, .. } => {
                v["s"] = table_json(s, rational_json);
                v["r"] = table_json(r, ExtendedValue::to_json);
            }
            AmbientPoint::Delta { s, r, .. } => {
                v["s"] = table_json(s, rational_json);
                v["r"] = table_json(r, ExtendedValue::to_json);
            }
        }
        v
    }
}

pub(crate) fn triples(top: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..=top).flat_map(move |i| (i + 1..=top).flat_map(move |j| (j + 1..=top).map(move |k| [i, j, k])))
}

pub(crate) fn distinct_triples(top: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..=top).flat_map(move |k| {
        (0..=top).flat_map(move |l| (0..=top).map(move |m| [k, l, m])).filter(move |&[a, b, c]| a != b && b != c && a != c)
    })
}

pub(crate) fn quadruples(top: usize) -> impl Iterator<Item = [usize; 4]> {
    triples(top).flat_map(move |[i, j, k]| (k + 1..=top).map(move |l| [i, j, k, l]))
}

/// `|sin π(b − a) / sin π(c − a)|`.
pub(crate) fn sine_ratio(a: f64, b: f64, c: f64) -> f64 {
    let num = (std::f64::consts::PI * (b - a)).sin().abs();
    let den = (std::f64::consts::PI * (c - a)).sin().abs();
    if den == 0.0 {
        f64::INFINITY
    } else {
        num / den
    }
}

fn alpha_entries(pts: &[BigRational]) -> Table<3, BigRational> {
    triples(pts.len() - 1).map(|[i, j, k]| ([i, j, k], (&pts[j] - &pts[i]) / (&pts[k] - &pts[i]))).collect()
}

/// Evaluate a chart at an interior configuration.
pub fn chart(kind: ChartKind, c: &Configuration) -> AmbientPoint {
    let n = c.n();
    let pts = c.points();
    match kind {
        ChartKind::Alpha => AmbientPoint::Alpha { n, s: alpha_entries(&pts) },
        ChartKind::Beta => {
            let f: Vec<f64> = pts.iter().map(laurent::to_f64).collect();
            let s = distinct_triples(n).map(|[k, l, m]| ([k, l, m], sine_ratio(f[k], f[l], f[m]))).collect();
            AmbientPoint::Beta { n, t: f[1..=n].to_vec(), s }
        }
        ChartKind::Gamma => {
            let r = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| [i, j]))
                .map(|[i, j]| ([i, j], ExtendedValue::Finite(&pts[i] / (BigRational::one() - &pts[j]))))
                .collect();
            AmbientPoint::Gamma { n, s: alpha_entries(&pts), r }
        }
        ChartKind::Delta => {
            let r = quadruples(n + 1)
                .map(|[i, j, k, l]| ([i, j, k, l], ExtendedValue::Finite((&pts[j] - &pts[i]) / (&pts[l] - &pts[k]))))
                .collect();
            AmbientPoint::Delta { n, s: alpha_entries(&pts), r }
        }
    }
}

/// From `s = s_ijk ∈ [0, 1]`, the values `s_ikj, s_jik, s_jki, s_kij, s_kji`.
pub fn s_variants(s: &BigRational) -> Result<[ExtendedValue; 5]> {
    if s.is_negative() || s > &BigRational::one() {
        return Err(Error::precondition(format!("s = {s} is not in [0, 1]")));
    }
    let one = BigRational::one();
    let rest = &one - s;
    Ok([
        ExtendedValue::ratio(one.clone(), s.clone())?,
        ExtendedValue::ratio(s.clone(), rest.clone())?,
        ExtendedValue::ratio(rest.clone(), s.clone())?,
        ExtendedValue::ratio(one, rest.clone())?,
        ExtendedValue::Finite(rest),
    ])
}

/// `|t_j − t_i| / |t_k − t_i|` for any three distinct indices.
pub fn relative_distance(c: &Configuration, i: usize, j: usize, k: usize) -> Result<BigRational> {
    let pts = c.points();
    if [i, j, k].iter().any(|&x| x >= pts.len()) || i == j || j == k || i == k {
        return Err(Error::precondition("relative distance needs three distinct indices in 0..=n+1"));
    }
    Ok((&pts[j] - &pts[i]).abs() / (&pts[k] - &pts[i]).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(super) fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn alpha_and_delta_examples() {
        let c: Configuration = "1/4,1/2".parse().unwrap();
        let AmbientPoint::Alpha { s, .. } = chart(ChartKind::Alpha, &c) else { panic!() };
        assert_eq!(s[&[0, 1, 2]], q(1, 2));
        assert_eq!(s[&[0, 1, 3]], q(1, 4));
        assert_eq!(s[&[0, 2, 3]], q(1, 2));
        assert_eq!(s[&[1, 2, 3]], q(1, 3));
        assert_eq!(s.len(), 4);
        let AmbientPoint::Delta { r, .. } = chart(ChartKind::Delta, &c) else { panic!() };
        assert_eq!(r[&[0, 1, 2, 3]], ExtendedValue::Finite(q(1, 2)));
        let AmbientPoint::Gamma { r, .. } = chart(ChartKind::Gamma, &c) else { panic!() };
        assert_eq!(r[&[1, 2]], ExtendedValue::Finite(q(1, 2)));
    }

    #[test]
    fn beta_example() {
        let c: Configuration = "1/4,1/2".parse().unwrap();
        let AmbientPoint::Beta { t, s, .. } = chart(ChartKind::Beta, &c) else { panic!() };
        assert_eq!(t, [0.25, 0.5]);
        assert!((s[&[0, 1, 2]] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn configurations_must_be_interior() {
        assert!("1/2,1/2".parse::<Configuration>().is_err());
        assert!("0,1/2".parse::<Configuration>().is_err());
        assert!("1/2,1".parse::<Configuration>().is_err());
        assert!("1/2,x".parse::<Configuration>().is_err());
        assert_eq!("".parse::<Configuration>().unwrap().n(), 0);
    }

    #[test]
    fn variants_examples() {
        let fin = |n, d| ExtendedValue::Finite(q(n, d));
        let inf = ExtendedValue::Infinity;
        assert_eq!(s_variants(&q(1, 2)).unwrap(), [fin(2, 1), fin(1, 1), fin(1, 1), fin(2, 1), fin(1, 2)]);
        assert_eq!(s_variants(&q(0, 1)).unwrap(), [inf.clone(), fin(0, 1), inf.clone(), fin(1, 1), fin(1, 1)]);
        assert_eq!(s_variants(&q(1, 1)).unwrap(), [fin(1, 1), inf.clone(), fin(0, 1), inf, fin(0, 1)]);
        assert!(s_variants(&q(3, 2)).is_err());
    }

    #[test]
    fn variants_match_relative_distances() {
        let c: Configuration = "1/7,2/5,5/6".parse().unwrap();
        for [i, j, k] in triples(4) {
            let s = relative_distance(&c, i, j, k).unwrap();
            let v = s_variants(&s).unwrap();
            let expect = [[i, k, j], [j, i, k], [j, k, i], [k, i, j], [k, j, i]];
            for (val, [a, b, c2]) in v.iter().zip(expect) {
                assert_eq!(val.finite().unwrap(), &relative_distance(&c, a, b, c2).unwrap());
            }
        }
    }

    #[test]
    fn json_shape() {
        let c: Configuration = "1/4,1/2".parse().unwrap();
        let v = chart(ChartKind::Delta, &c).to_json();
        assert_eq!(v["r"]["0,1,2,3"], json!({"num": 1, "den": 2}));
        assert_eq!(ExtendedValue::Infinity.to_json(), json!("inf"));
    }
}
