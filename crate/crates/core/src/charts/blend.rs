//! The projection from the sine chart onto the linear chart.
//!
//! For a gap `d = t_k − t_i` two formulas recover `s_ijk`: the linear ratio
//! `f = (t_j − t_i) / d`, usable when `d` is bounded away from zero, and
//! `g = s̃_ijk · h(d) / h(t_j − t_i)` with `h(x) = sin(πx) / x`, usable when
//! `d` stays below `1`. A partition of unity in `d` glues them, blending in
//! the chart `x ↦ x / (1 + x)` of `[0, +∞]`.

use std::f64::consts::PI;

use super::{triples, AmbientPoint, Table};
use crate::error::{Error, Result};

/// A partition of unity `μ_1 + μ_2 = 1` on the gap with `μ_1 = 1` on
/// `(−∞, 1/3]` and `μ_2 = 1` on `[1/2, ∞)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BlendConfig {
    /// Quotient of `ψ(x) = exp(−1/x)` bumps; smooth.
    #[default]
    Exponential,
    /// Cubic smoothstep; only `C^1`, kept for comparison.
    Smoothstep,
}

impl BlendConfig {
    pub fn mu2(self, u: f64) -> f64 {
        let (a, b) = (1.0 / 3.0, 0.5);
        match self {
            BlendConfig::Exponential => {
                let psi = |x: f64| if x > 0.0 { (-1.0 / x).exp() } else { 0.0 };
                let (p, q) = (psi(u - a), psi(b - u));
                p / (p + q)
            }
            BlendConfig::Smoothstep => {
                let x = ((u - a) / (b - a)).clamp(0.0, 1.0);
                x * x * (3.0 - 2.0 * x)
            }
        }
    }

    pub fn mu1(self, u: f64) -> f64 {
        1.0 - self.mu2(u)
    }
}

fn h(x: f64) -> f64 {
    if x == 0.0 {
        PI
    } else {
        (PI * x).sin() / x
    }
}

fn compact(v: f64) -> f64 {
    if v.is_infinite() {
        1.0
    } else {
        v / (1.0 + v)
    }
}

/// Map a beta point to the `s_ijk` table, `0 ≤ i < j < k ≤ n+1`.
///
/// The weight `μ_2`, which is `1` on large gaps, goes with the linear ratio
/// and `μ_1` with the sine formula. Index `n+1` is the point `0` of the
/// circle.
pub fn blend_projection(b: &AmbientPoint, cfg: BlendConfig) -> Result<Table<3, f64>> {
    let AmbientPoint::Beta { n, t, s } = b else {
        return Err(Error::precondition("blend projection needs a beta point"));
    };
    let n = *n;
    let mut pts = Vec::with_capacity(n + 2);
    pts.push(0.0);
    pts.extend_from_slice(t);
    pts.push(1.0);
    let circle = |x: usize| if x == n + 1 { 0 } else { x };
    let mut out = Table::new();
    for [i, j, k] in triples(n + 1) {
        let (dj, dk) = (pts[j] - pts[i], pts[k] - pts[i]);
        let (wf, wg) = (cfg.mu2(dk), cfg.mu1(dk));
        let mut x = 0.0;
        if wf != 0.0 {
            x += wf * compact(dj / dk);
        }
        if wg != 0.0 {
            let st = s.get(&[circle(i), circle(j), circle(k)]).copied().ok_or_else(|| {
                Error::precondition(format!("beta table has no entry for ({i},{j},{k})"))
            })?;
            let g = if st.is_infinite() { st } else { st * h(dk) / h(dj) };
            x += wg * compact(g);
        }
        out.insert([i, j, k], if x >= 1.0 { f64::INFINITY } else { x / (1.0 - x) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charts::{chart, ChartKind, Configuration};

    #[test]
    fn partition_of_unity() {
        for cfg in [BlendConfig::Exponential, BlendConfig::Smoothstep] {
            assert_eq!(cfg.mu1(0.2), 1.0);
            assert_eq!(cfg.mu1(1.0 / 3.0), 1.0);
            assert_eq!(cfg.mu2(0.5), 1.0);
            assert_eq!(cfg.mu2(0.9), 1.0);
            let m = cfg.mu2(0.4);
            assert!(m > 0.0 && m < 1.0);
        }
    }

    #[test]
    fn recovers_the_linear_chart() {
        let c: Configuration = "1/4,1/2".parse().unwrap();
        let p = blend_projection(&chart(ChartKind::Beta, &c), BlendConfig::default()).unwrap();
        assert!((p[&[0, 1, 2]] - 0.5).abs() < 1e-12);
        assert!((p[&[1, 2, 3]] - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn boundary_points() {
        // t_1 = t_2 = 0 with s̃_012 = 0: the sine branch gives 0.
        let mut s = Table::new();
        for key in crate::charts::distinct_triples(2) {
            s.insert(key, 1.0);
        }
        s.insert([0, 1, 2], 0.0);
        let b = AmbientPoint::Beta { n: 2, t: vec![0.0, 0.0], s };
        let p = blend_projection(&b, BlendConfig::default()).unwrap();
        assert_eq!(p[&[0, 1, 2]], 0.0);
        // Gap 1 uses only the linear ratio, whatever s̃ says.
        assert_eq!(p[&[0, 1, 3]], 0.0);
        let b = AmbientPoint::Beta { n: 1, t: vec![0.3], s: Table::new() };
        let p = blend_projection(&b, BlendConfig::default()).unwrap();
        assert!((p[&[0, 1, 2]] - 0.3).abs() < 1e-15);
    }

    #[test]
    fn infinite_sine_ratio_blends_to_infinity() {
        let mut s = Table::new();
        for key in crate::charts::distinct_triples(2) {
            s.insert(key, 1.0);
        }
        s.insert([0, 1, 2], f64::INFINITY);
        let b = AmbientPoint::Beta { n: 2, t: vec![0.0, 0.0], s };
        assert_eq!(blend_projection(&b, BlendConfig::default()).unwrap()[&[0, 1, 2]], f64::INFINITY);
    }
}
