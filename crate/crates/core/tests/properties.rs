use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use polyfaces::charts::{
    chart, path_limit, relative_distance, s_variants, ChartKind, Configuration, EpsilonPath, ExtendedValue, LaurentPoly,
};
use polyfaces::tree::{enumerate, parse, AnyTree, Species};
use polyfaces::words::{in_domain, level_cell_census, words, Word};

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..4, -20i64..21, 1i64..6), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(), |acc, (deg, num, den)| &acc + &LaurentPoly::monomial(rational(num, den), deg))
    })
}

/// Sorted distinct interior points with small denominators.
fn configuration(max: usize) -> impl Strategy<Value = Configuration> {
    prop::collection::btree_set(1i64..1000, 0..=max).prop_map(|set| {
        Configuration::new(set.into_iter().map(|k| rational(k, 1000)).collect()).expect("interior points")
    })
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn laurent_text_roundtrip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn variants_of_the_mirror(num in 1i64..999) {
        let s = rational(num, 1000);
        let v = s_variants(&s).unwrap();
        let w = s_variants(&(BigRational::one() - &s)).unwrap();
        let expected = [v[3].clone(), v[2].clone(), v[1].clone(), v[0].clone(), ExtendedValue::Finite(s)];
        prop_assert_eq!(w, expected);
    }

    #[test]
    fn configuration_text_roundtrip(c in configuration(6)) {
        prop_assert_eq!(c.to_string().parse::<Configuration>().unwrap(), c);
    }

    #[test]
    fn constant_paths_limit_to_the_chart(c in configuration(4)) {
        let path: EpsilonPath = c.to_string().parse().unwrap();
        for kind in [ChartKind::Alpha, ChartKind::Gamma, ChartKind::Delta] {
            prop_assert_eq!(path_limit(&path, kind).unwrap(), chart(kind, &c));
        }
    }

    #[test]
    fn relative_distances_lie_in_the_unit_interval(c in configuration(5)) {
        let top = c.n() + 1;
        for i in 0..=top {
            for j in i + 1..=top {
                for k in j + 1..=top {
                    let s = relative_distance(&c, i, j, k).unwrap();
                    prop_assert!(s > BigRational::from_integer(0.into()) && s < BigRational::one());
                }
            }
        }
    }
}

#[test]
fn tree_text_roundtrips() {
    for species in Species::ALL {
        for n in 0..=4 {
            for t in enumerate(species, n).unwrap() {
                let text = t.to_string();
                assert_eq!(parse(&text).unwrap(), t, "{text}");
            }
        }
    }
}

#[test]
fn word_text_roundtrips_and_centers_in_domain() {
    for l in 0..=3 {
        for r in 0..=3 {
            for w in words(l, r) {
                assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
                assert!(in_domain(&w.f_embed_doubled(), r), "{w}");
            }
        }
    }
}

#[test]
fn level_cells_are_permutohedra() {
    for species in [Species::PsiLevel, Species::PhiLevel] {
        for n in 0..=3 {
            for t in enumerate(species, n).unwrap() {
                let AnyTree::Leveled(l) = t else { unreachable!() };
                let census = level_cell_census(&l).unwrap();
                assert!(census.matches(), "{l}: {census:?}");
            }
        }
    }
}
