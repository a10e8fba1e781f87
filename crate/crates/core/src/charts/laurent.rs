//! Laurent polynomials in `e` with rational coefficients, and paths of
//! configurations written with them.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Σ c_d e^d`, zero coefficients omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly(BTreeMap<i32, BigRational>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly(BTreeMap::new())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, degree: i32) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(degree, c);
        }
        LaurentPoly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.0.iter().map(|(&d, c)| (d, c))
    }

    /// Lowest-degree term, which dominates as `e → 0⁺`.
    pub fn leading(&self) -> Option<(i32, &BigRational)> {
        self.0.iter().next().map(|(&d, c)| (d, c))
    }

    pub fn coefficient(&self, degree: i32) -> BigRational {
        self.0.get(&degree).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Positive for all small `e > 0`.
    pub fn is_eventually_positive(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_positive())
    }

    /// The value at `e = 0` when no negative powers occur.
    pub fn limit(&self) -> Option<BigRational> {
        match self.leading() {
            Some((d, _)) if d < 0 => None,
            _ => Some(self.coefficient(0)),
        }
    }

    pub fn eval(&self, e: &BigRational) -> BigRational {
        self.0.iter().map(|(&d, c)| c * pow(e, d)).fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn eval_f64(&self, e: f64) -> f64 {
        self.0.iter().map(|(&d, c)| to_f64(c) * e.powi(d)).sum()
    }

    fn cleaned(mut self) -> Self {
        self.0.retain(|_, c| !c.is_zero());
        self
    }
}

fn pow(e: &BigRational, d: i32) -> BigRational {
    let base = if d < 0 { e.recip() } else { e.clone() };
    (0..d.unsigned_abs()).fold(BigRational::one(), |acc, _| acc * &base)
}

pub(crate) fn to_f64(c: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().expect("finite rational")
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, other: &LaurentPoly) -> LaurentPoly {
        let mut m = self.0.clone();
        for (d, c) in &other.0 {
            *m.entry(*d).or_insert_with(BigRational::zero) += c;
        }
        LaurentPoly(m).cleaned()
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(d, c)| (*d, -c)).collect())
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, other: &LaurentPoly) -> LaurentPoly {
        self + &(-other)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, other: &LaurentPoly) -> LaurentPoly {
        let mut m: BTreeMap<i32, BigRational> = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &other.0 {
                *m.entry(a + b).or_insert_with(BigRational::zero) += x * y;
            }
        }
        LaurentPoly(m).cleaned()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.0.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let power = match d {
                0 => String::new(),
                1 => "e".into(),
                _ => format!("e^{d}"),
            };
            match (a.is_one(), power.is_empty()) {
                (true, false) => f.write_str(&power)?,
                (_, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a}*{power}")?,
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.offset + self.pos, msg: msg.into() }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).expect("ascii").parse().expect("digits"))
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>> {
        let Some(num) = self.integer() else {
            return Ok(None);
        };
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.integer().ok_or_else(|| self.err("expected a denominator"))?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(Some(BigRational::new(num, den)));
        }
        Ok(Some(BigRational::from_integer(num)))
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let coeff = self.coefficient()?;
        if coeff.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            if self.peek() != Some(b'e') {
                return Err(self.err("expected e after *"));
            }
        }
        let mut degree = 0;
        if self.peek() == Some(b'e') {
            self.pos += 1;
            degree = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let neg = self.peek() == Some(b'-');
                if neg {
                    self.pos += 1;
                }
                let d = self.integer().ok_or_else(|| self.err("expected an exponent"))?;
                let d: i32 = d.try_into().map_err(|_| self.err("exponent out of range"))?;
                degree = if neg { -d } else { d };
            }
        } else if coeff.is_none() {
            return Err(self.err("expected a number or e"));
        }
        Ok(LaurentPoly::monomial(coeff.unwrap_or_else(BigRational::one), degree))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut total = LaurentPoly::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') if !first => {
                    self.pos += 1;
                    false
                }
                _ if first => false,
                _ => break,
            };
            let t = self.term()?;
            total = if neg { &total - &t } else { &total + &t };
            first = false;
            if !matches!(self.peek(), Some(b'+' | b'-')) {
                break;
            }
        }
        Ok(total)
    }
}

fn parse_poly(s: &str, offset: usize) -> Result<LaurentPoly> {
    let mut c = Cursor { s: s.as_bytes(), pos: 0, offset };
    let p = c.poly()?;
    if c.peek().is_some() {
        return Err(c.err("unexpected character"));
    }
    Ok(p)
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s, 0)
    }
}

/// `t_1(e), …, t_n(e)`, checked to give `0 < t_1 < … < t_n < 1` for all
/// small `e > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonPath {
    coords: Vec<LaurentPoly>,
}

impl EpsilonPath {
    pub fn new(coords: Vec<LaurentPoly>) -> Result<Self> {
        let p = EpsilonPath { coords };
        let pts = p.points();
        for (k, w) in pts.windows(2).enumerate() {
            if !(&w[1] - &w[0]).is_eventually_positive() {
                return Err(Error::precondition(format!(
                    "t_{} - t_{} is not positive for small e",
                    k + 1,
                    k
                )));
            }
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[LaurentPoly] {
        &self.coords
    }

    /// `t_0 = 0, t_1, …, t_n, t_{n+1} = 1`.
    pub fn points(&self) -> Vec<LaurentPoly> {
        let mut v = vec![LaurentPoly::zero()];
        v.extend(self.coords.iter().cloned());
        v.push(LaurentPoly::constant(BigRational::one()));
        v
    }
}

impl fmt::Display for EpsilonPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

impl FromStr for EpsilonPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return EpsilonPath::new(Vec::new());
        }
        let mut offset = 0;
        let mut coords = Vec::new();
        for part in s.split(',') {
            coords.push(parse_poly(part, offset)?);
            offset += part.len() + 1;
        }
        EpsilonPath::new(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parse_and_print() {
        let p: LaurentPoly = "1 - e^2".parse().unwrap();
        assert_eq!(p.leading(), Some((0, &q(1, 1))));
        assert_eq!(p.to_string(), "1 - e^2");
        let p: LaurentPoly = "3/2*e^2 + e - 1/4".parse().unwrap();
        assert_eq!(p.coefficient(2), q(3, 2));
        assert_eq!(p.coefficient(0), q(-1, 4));
        assert_eq!("2e".parse::<LaurentPoly>().unwrap().coefficient(1), q(2, 1));
        assert_eq!("e^-1".parse::<LaurentPoly>().unwrap().leading().unwrap().0, -1);
        assert!("e^".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
        assert!("1/0".parse::<LaurentPoly>().is_err());
        assert!("e - e".parse::<LaurentPoly>().unwrap().is_zero());
    }

    #[test]
    fn arithmetic() {
        let a: LaurentPoly = "1 - e".parse().unwrap();
        let b: LaurentPoly = "1 + e".parse().unwrap();
        assert_eq!((&a * &b).to_string(), "1 - e^2");
        assert_eq!(a.eval(&q(1, 2)), q(1, 2));
    }

    #[test]
    fn paths() {
        let p: EpsilonPath = "e^2, e, 1-e, 1-e^2".parse().unwrap();
        assert_eq!(p.n(), 4);
        assert!("e, e^2".parse::<EpsilonPath>().is_err());
        assert!("1/2, 1".parse::<EpsilonPath>().is_err());
        assert!("-e".parse::<EpsilonPath>().is_err());
        let err = "e, 1 - x".parse::<EpsilonPath>().unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 7, .. }));
    }
}
