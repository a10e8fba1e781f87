//! Word posets `X_{ℓ,r}`, their integer-cube model, levelization posets and
//! product decompositions of fibers.

mod cube;
mod levels;
mod product;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

pub use cube::{cube_complex, format_half_integers, in_domain, CubeComplex, IntegerCube};
pub use levels::{
    forest_level_poset, level_cell_census, level_fiber_geq_poset, level_product_decompose, levelization_poset,
    LevelProduct,
};
pub use product::{product_decompose, ProductDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
    AB,
}

/// A word over `{a, b, (ab)}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of `a`s, counting the one inside each `(ab)`.
    pub fn left_count(&self) -> usize {
        self.0.iter().filter(|&&l| l != Letter::B).count()
    }

    /// Number of `b`s, counting the one inside each `(ab)`.
    pub fn right_count(&self) -> usize {
        self.0.iter().filter(|&&l| l != Letter::A).count()
    }

    /// Words obtained by one fusion of an adjacent `ab` or `ba` into `(ab)`.
    pub fn fusions(&self) -> Vec<Word> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| matches!(w, [Letter::A, Letter::B] | [Letter::B, Letter::A]))
            .map(|(i, _)| {
                let mut v = self.0.clone();
                v.splice(i..i + 2, [Letter::AB]);
                Word(v)
            })
            .collect()
    }

    /// Coordinates doubled: the `i`-th entry is twice the number of `b`s
    /// before the `i`-th `a`, plus one when that `a` sits in an `(ab)`.
    pub fn f_embed_doubled(&self) -> Vec<i64> {
        let mut bs = 0;
        let mut out = Vec::with_capacity(self.left_count());
        for l in &self.0 {
            match l {
                Letter::A => out.push(2 * bs),
                Letter::B => bs += 1,
                Letter::AB => {
                    out.push(2 * bs + 1);
                    bs += 1;
                }
            }
        }
        out
    }
}

/// The half-integer embedding as text, e.g. `(0, 3/2, 4)`.
pub fn f_embed(w: &Word) -> String {
    format_half_integers(&w.f_embed_doubled())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::A => "a",
                Letter::B => "b",
                Letter::AB => "(ab)",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let pos = s.len() - rest.len();
            if let Some(r) = rest.strip_prefix("(ab)") {
                out.push(Letter::AB);
                rest = r;
            } else if let Some(r) = rest.strip_prefix('a') {
                out.push(Letter::A);
                rest = r;
            } else if let Some(r) = rest.strip_prefix('b') {
                out.push(Letter::B);
                rest = r;
            } else {
                return Err(Error::Parse { pos, msg: "expected a, b or (ab)".into() });
            }
        }
        Ok(Word(out))
    }
}

/// All words with `l` letters `a` and `r` letters `b`, sorted by text.
pub fn words(l: usize, r: usize) -> Vec<Word> {
    fn go(l: usize, r: usize, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if l == 0 && r == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for (letter, dl, dr) in [(Letter::A, 1, 0), (Letter::B, 0, 1), (Letter::AB, 1, 1)] {
            if l >= dl && r >= dr {
                cur.push(letter);
                go(l - dl, r - dr, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(l, r, &mut Vec::new(), &mut out);
    out.sort_by_key(|w| w.to_string());
    out
}

/// The poset `X_{ℓ,r}`: fusing letters moves down.
pub fn word_poset(l: usize, r: usize) -> FinitePoset {
    let all = words(l, r);
    let keys: Vec<String> = all.iter().map(Word::to_string).collect();
    let index: HashMap<&str, usize> = keys.iter().enumerate().map(|(i, k)| (k.as_str(), i)).collect();
    let pairs: Vec<(usize, usize)> = all
        .iter()
        .enumerate()
        .flat_map(|(i, w)| {
            let fused: BTreeSet<String> = w.fusions().iter().map(Word::to_string).collect();
            fused.into_iter().map(|f| (i, index[f.as_str()])).collect::<Vec<_>>()
        })
        .collect();
    FinitePoset::from_generators(keys, &pairs).expect("fusion strictly shortens words")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x21_is_a_zigzag() {
        let p = word_poset(2, 1);
        assert_eq!(p.elements(), ["(ab)a", "a(ab)", "aab", "aba", "baa"]);
        let edges: BTreeSet<(String, String)> =
            p.cover_pairs().into_iter().map(|(x, y)| (p.element(x).into(), p.element(y).into())).collect();
        let expected: BTreeSet<(String, String)> =
            [("aab", "a(ab)"), ("aba", "a(ab)"), ("aba", "(ab)a"), ("baa", "(ab)a")]
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect();
        assert_eq!(edges, expected);
    }

    #[test]
    fn word_poset_sizes() {
        for r in 0..4 {
            assert_eq!(word_poset(0, r).len(), 1);
        }
        let p = word_poset(2, 2);
        assert_eq!(p.len(), 13);
        let by_parens = |k: usize| {
            p.elements().iter().filter(|e| e.matches('(').count() == k).count()
        };
        assert_eq!((by_parens(0), by_parens(1), by_parens(2)), (6, 6, 1));
    }

    #[test]
    fn embedding_examples() {
        let f = |s: &str| f_embed(&s.parse().unwrap());
        assert_eq!(f("ab(ab)bbab"), "(0, 3/2, 4)");
        assert_eq!(f("aab"), "(0, 0)");
        assert_eq!(f("baa"), "(1, 1)");
        assert_eq!(f("a(ab)"), "(0, 1/2)");
    }

    #[test]
    fn word_text_roundtrip() {
        for w in words(3, 2) {
            assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        }
        assert!("a(ba)".parse::<Word>().is_err());
    }
}
