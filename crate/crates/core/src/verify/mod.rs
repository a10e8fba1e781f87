//! Exhaustive and randomized checks of the structural claims, grouped into
//! suites. Each criterion reports a pass flag and a one-line detail.

pub mod oracle;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::charts::{
    blend_projection, chart, face_path, identify_stratum, include_face, path_limit, s_variants, split_projection,
    tau_fiber_point, AmbientPoint, BlendConfig, ChartKind, Configuration, EpsilonPath, ExtendedValue, Space,
    DEFAULT_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::functors::{
    fiber_poset, leveled_iso, leveled_iso_inverse, pi, trunk_word, Functor, Projection,
};
use crate::poset::{face_poset, face_poset_with_trees, ordered_partitions, tonks_inverse, tonks_partition, FinitePoset};
use crate::topology::{cofinality_report, contractibility, order_complex, prism_fiber_complex};
use crate::tree::{enumerate, AnyTree, Node, Species};
use crate::words::{
    cube_complex, format_half_integers, level_product_decompose, levelization_poset, product_decompose, word_poset,
    words,
};

/// Seed of every randomized criterion.
pub const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Posets,
    Fibers,
    Charts,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::All, Suite::Posets, Suite::Fibers, Suite::Charts];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Posets => "posets",
            Suite::Fibers => "fibers",
            Suite::Charts => "charts",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::precondition(format!("unknown suite {s:?}; expected all, posets, fibers or charts")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: usize,
    pub suite: Suite,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "suite": self.suite.to_string(),
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
        })
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} criterion {} [{}] {}: {}", self.id, self.suite, self.title, self.detail)
    }
}

type Check = fn() -> Result<(bool, String)>;

pub const CRITERIA: [(usize, Suite, &str, Check); 9] = [
    (1, Suite::Posets, "enumeration counts", enumeration_counts),
    (2, Suite::Posets, "leveled isomorphisms", leveled_isomorphisms),
    (3, Suite::Fibers, "cube embedding and fibers", cube_embedding_and_fibers),
    (4, Suite::Fibers, "product decompositions", product_decompositions),
    (5, Suite::Fibers, "acyclicity and collapses", acyclicity),
    (6, Suite::Fibers, "prism decomposition", prism_decomposition),
    (7, Suite::Charts, "chart identities", chart_identities),
    (8, Suite::Charts, "split projection segments", split_segments),
    (9, Suite::Charts, "stratum identification", stratum_identification),
];

pub fn run_criterion(id: usize) -> Option<CriterionReport> {
    let &(id, suite, title, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let (passed, detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
    Some(CriterionReport { id, suite, title, passed, detail })
}

pub fn run_suite(suite: Suite) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .filter(|c| suite.includes(c.1))
        .filter_map(|c| run_criterion(c.0))
        .collect()
}

/// Collects failed sub-checks so that a criterion reports all of them.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, summary: String) -> Result<(bool, String)> {
        if self.failures.is_empty() {
            Ok((true, format!("{summary}; {} checks", self.checks)))
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            Ok((false, format!("{} of {} checks failed: {}", self.failures.len(), self.checks, shown.join("; "))))
        }
    }
}

fn sizes(species: Species, ns: std::ops::RangeInclusive<usize>) -> Result<Vec<u128>> {
    ns.map(|n| Ok(enumerate(species, n)?.len() as u128)).collect()
}

fn enumeration_counts() -> Result<(bool, String)> {
    let mut t = Tally::default();
    let psi = sizes(Species::Psi, 1..=5)?;
    t.check(psi == [3, 11, 45, 197, 903], || format!("psi sizes {psi:?}"));
    let oracle: Vec<u128> = (1..=5).map(|n| oracle::planar_tree_count(n + 2)).collect();
    t.check(psi == oracle, || format!("psi oracle {oracle:?}"));
    let lev = sizes(Species::PsiLevel, 1..=4)?;
    t.check(lev == [3, 13, 75, 541], || format!("psi-level sizes {lev:?}"));
    let oracle: Vec<u128> = (1..=4).map(|n| oracle::ordered_partition_count(n + 1)).collect();
    t.check(lev == oracle, || format!("psi-level oracle {oracle:?}"));
    let phi = sizes(Species::Phi, 1..=4)?;
    let oracle: Vec<u128> = (1..=4).map(|n| oracle::cycle_tubing_count(n + 1)).collect();
    t.check(phi == oracle, || format!("phi sizes {phi:?} against tubings {oracle:?}"));
    for n in 1..=4 {
        let p = face_poset(Species::Phi, n)?;
        let max = p.maximal_elements().len() as u128;
        t.check(max == oracle::binomial(2 * n as u64, n as u64), || format!("phi({n}) has {max} maximal elements"));
        for species in [Species::Psi, Species::Phi, Species::PsiLevel] {
            let chi = order_complex(&face_poset(species, n)?).euler_characteristic();
            t.check(chi == 1, || format!("{species}({n}) order complex has Euler characteristic {chi}"));
        }
    }
    t.finish(format!("psi {psi:?}, psi-level {lev:?}, phi {phi:?}"))
}

fn ordered_partition_poset(m: usize) -> Result<FinitePoset> {
    let parts = ordered_partitions(m);
    FinitePoset::from_relation(parts.iter().map(|p| p.to_string()).collect(), |x, y| parts[y].refines(&parts[x]))
}

fn leveled_isomorphisms() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for n in 1..=3 {
        let (src, trees) = face_poset_with_trees(Species::PhiLevel, n)?;
        let dst = face_poset(Species::PsiLevel, n)?;
        let mut map = Vec::with_capacity(trees.len());
        for tree in &trees {
            let AnyTree::Leveled(l) = tree else { unreachable!("leveled species") };
            let image = leveled_iso(l)?;
            t.check(leveled_iso_inverse(&image)? == *l, || format!("inverse fails at {l}"));
            map.push(dst.index_of(&image.to_string()).unwrap_or(usize::MAX));
        }
        t.check(map.iter().all(|&i| i < dst.len()) && src.is_isomorphism(&dst, &map), || {
            format!("leveled_iso is not an order isomorphism at n = {n}")
        });
    }
    for n in 1..=4 {
        let (src, trees) = face_poset_with_trees(Species::PsiLevel, n)?;
        let dst = ordered_partition_poset(n + 1)?;
        let mut map = Vec::with_capacity(trees.len());
        for tree in &trees {
            let AnyTree::Leveled(l) = tree else { unreachable!("leveled species") };
            let p = tonks_partition(l)?;
            t.check(tonks_inverse(&p) == *l, || format!("falling numbers do not invert at {l}"));
            map.push(dst.index_of(&p.to_string()).unwrap_or(usize::MAX));
        }
        t.check(map.iter().all(|&i| i < dst.len()) && src.is_isomorphism(&dst, &map), || {
            format!("the falling-numbers map is not an order isomorphism at n = {n}")
        });
    }
    t.finish("leveled_iso for n <= 3, falling numbers for n <= 4".into())
}

fn cube_embedding_and_fibers() -> Result<(bool, String)> {
    let mut t = Tally::default();
    for l in 0..=4 {
        for r in 0..=4 {
            let ws = words(l, r);
            let cubes = cube_complex(l, r);
            let centers: BTreeSet<Vec<i64>> = ws.iter().map(|w| w.f_embed_doubled()).collect();
            t.check(centers.len() == ws.len(), || format!("f_embed is not injective on X_{{{l},{r}}}"));
            let domain: BTreeSet<Vec<i64>> = cubes.cubes.iter().map(|c| c.doubled_center.clone()).collect();
            t.check(centers == domain, || format!("image of X_{{{l},{r}}} differs from the cube centers"));
            let wp = word_poset(l, r);
            let cp = cubes.poset();
            let map: Vec<usize> = wp
                .elements()
                .iter()
                .map(|w| {
                    let w = w.parse::<crate::words::Word>().expect("word keys parse");
                    cp.index_of(&format_half_integers(&w.f_embed_doubled())).unwrap_or(usize::MAX)
                })
                .collect();
            t.check(map.iter().all(|&i| i < cp.len()) && wp.is_isomorphism(&cp, &map), || {
                format!("X_{{{l},{r}}} is not isomorphic to its cube complex")
            });
        }
    }
    let mut word_posets: HashMap<(usize, usize), FinitePoset> = HashMap::new();
    let mut fibers = 0;
    for n in 1..=4 {
        let p = Projection::new(Functor::Pi, n)?;
        for (y, ytree) in p.target_trees.iter().enumerate() {
            let AnyTree::Psi(ytree) = ytree else { unreachable!("planar targets") };
            let fiber = p.fiber(y);
            let lr = (ytree.left_count(), ytree.right_count());
            let wp = word_posets.entry(lr).or_insert_with(|| word_poset(lr.0, lr.1));
            let map: Vec<usize> = fiber
                .elements()
                .iter()
                .map(|key| {
                    let AnyTree::Fan(f) = &p.source_trees[p.map.source.index_of(key).expect("fiber keys")] else {
                        unreachable!("fan sources")
                    };
                    wp.index_of(&trunk_word(f).to_string()).unwrap_or(usize::MAX)
                })
                .collect();
            t.check(map.iter().all(|&i| i < wp.len()) && fiber.is_isomorphism(wp, &map), || {
                format!("fiber over {ytree} is not X_{{{},{}}}", lr.0, lr.1)
            });
            fibers += 1;
        }
    }
    let f = cube_complex(2, 2).f_vector();
    t.check(f == [6, 6, 1], || format!("X_{{2,2}} complex has f-vector {f:?}"));
    t.finish(format!("{fibers} fibers matched, X_{{2,2}} f-vector {f:?}"))
}

fn random_fan_pairs(n: usize, count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(usize, usize)>> {
    let p = Projection::new(Functor::Pi, n)?;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let lower = rng.gen_range(0..p.map.source.len());
        let above: Vec<usize> = p.map.target.up_set(p.map.apply(lower)).iter().collect();
        out.push((*above.choose(rng).expect("the image itself"), lower));
    }
    Ok(out)
}

fn product_decompositions() -> Result<(bool, String)> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut fan_pairs = 0;
    for n in 1..=4 {
        let p = Projection::new(Functor::Pi, n)?;
        let pairs: Vec<(usize, usize)> = if n <= 3 {
            (0..p.map.source.len())
                .flat_map(|lower| p.map.target.up_set(p.map.apply(lower)).iter().map(move |y| (y, lower)).collect::<Vec<_>>())
                .collect()
        } else {
            random_fan_pairs(n, 100, &mut rng)?
        };
        for (y, lower) in pairs {
            let (AnyTree::Psi(yt), AnyTree::Fan(ft)) = (&p.target_trees[y], &p.source_trees[lower]) else {
                unreachable!("pi maps fans to planar trees")
            };
            let ok = product_decompose(yt, ft).is_ok();
            t.check(ok, || format!("no product decomposition over {yt} above {ft}"));
            fan_pairs += 1;
        }
    }
    let mut level_pairs = 0;
    for (base, leveled) in [(Species::Psi, Species::PsiLevel), (Species::Phi, Species::PhiLevel)] {
        for n in 1..=3 {
            let lowers = enumerate(leveled, n)?;
            for top in enumerate(base, n)? {
                for lower in &lowers {
                    let AnyTree::Leveled(l) = lower else { unreachable!("leveled species") };
                    let plain = crate::functors::forget_levels(l);
                    if !top.is_geq(&plain)? {
                        continue;
                    }
                    let ok = level_product_decompose(&top, l).is_ok();
                    t.check(ok, || format!("no level product over {top} above {l}"));
                    level_pairs += 1;
                }
            }
        }
    }
    t.finish(format!("{fan_pairs} fan pairs, {level_pairs} level pairs"))
}

/// Acyclicity is mandatory; collapses only need a 90% success rate.
fn acyclicity() -> Result<(bool, String)> {
    let mut t = Tally::default();
    let (mut total, mut collapsed) = (0usize, 0usize);
    let mut record = |t: &mut Tally, what: &dyn Fn() -> String, p: &FinitePoset| -> Result<()> {
        let r = contractibility(&order_complex(p))?;
        t.check(r.acyclic(), || format!("{} has homology {:?}", what(), r.betti_q));
        total += 1;
        collapsed += r.collapsible() as usize;
        Ok(())
    };
    for n in 1..=4 {
        let p = Projection::new(Functor::Pi, n)?;
        for (y, yt) in p.target_trees.iter().enumerate() {
            record(&mut t, &|| format!("fiber over {yt}"), &p.fiber(y))?;
        }
        if n <= 3 {
            for lower in 0..p.map.source.len() {
                for y in p.map.target.up_set(p.map.apply(lower)).iter() {
                    let f = p.fiber_geq(y, lower)?;
                    record(&mut t, &|| format!("fiber over {} above {}", p.target_trees[y], p.source_trees[lower]), &f)?;
                }
            }
        }
    }
    for species in [Species::Psi, Species::Phi] {
        for n in 1..=3 {
            for tree in enumerate(species, n)? {
                record(&mut t, &|| format!("levelizations of {tree}"), &levelization_poset(&tree)?)?;
            }
        }
    }
    let mut comma_count = 0;
    for f in Functor::ALL {
        let top = if f == Functor::Pi { 4 } else { 3 };
        for n in 1..=top {
            let report = cofinality_report(&Projection::new(f, n)?.map)?;
            for (q, r) in &report.entries {
                t.check(r.acyclic(), || format!("{f} comma over {q} has homology {:?}", r.betti_q));
                total += 1;
                comma_count += 1;
                collapsed += r.collapsible() as usize;
            }
        }
    }
    let rate = collapsed as f64 / total as f64;
    t.check(rate >= 0.9, || format!("only {collapsed}/{total} complexes collapsed"));
    t.finish(format!("{total} complexes acyclic ({comma_count} comma posets), {collapsed}/{total} collapsible"))
}

fn strict_chains(p: &FinitePoset, max_len: usize) -> Vec<Vec<usize>> {
    fn grow(p: &FinitePoset, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == max_len {
            return;
        }
        let top = *cur.last().expect("nonempty");
        for y in p.up_set(top).iter().filter(|&y| y != top) {
            cur.push(y);
            grow(p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for x in 0..p.len() {
        grow(p, max_len, &mut vec![x], &mut out);
    }
    out
}

fn prism_decomposition() -> Result<(bool, String)> {
    let mut t = Tally::default();
    let mut chains = 0;
    for n in 1..=3 {
        let p = Projection::new(Functor::Pi, n)?;
        for chain in strict_chains(&p.map.target, 4) {
            let cells = prism_fiber_complex(&p.map, &chain)?;
            let r = contractibility(&order_complex(&cells))?;
            t.check(r.acyclic(), || {
                let keys: Vec<&str> = chain.iter().map(|&c| p.map.target.element(c)).collect();
                format!("prism over {} has homology {:?}", keys.join(" < "), r.betti_q)
            });
            chains += 1;
        }
    }
    t.finish(format!("{chains} chains of length <= 3 (up to four faces)"))
}

fn random_configuration(dim: usize, rng: &mut impl Rng) -> Configuration {
    let denom: i64 = 1_000_000;
    let mut picks = BTreeSet::new();
    while picks.len() < dim {
        picks.insert(rng.gen_range(1..denom));
    }
    Configuration::new(picks.into_iter().map(|k| BigRational::new(k.into(), denom.into())).collect())
        .expect("distinct interior points")
}

fn chart_identities() -> Result<(bool, String)> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut worst: f64 = 0.0;
    for n in 1..=6 {
        for _ in 0..1000 {
            let c = random_configuration(n, &mut rng);
            let AmbientPoint::Alpha { s, .. } = chart(ChartKind::Alpha, &c) else { unreachable!() };
            let blended = blend_projection(&chart(ChartKind::Beta, &c), BlendConfig::Exponential)?;
            let other = blend_projection(&chart(ChartKind::Beta, &c), BlendConfig::Smoothstep)?;
            for (key, exact) in &s {
                let exact = exact.to_f64().unwrap_or(f64::NAN);
                let err = (blended[key] - exact).abs().max((other[key] - exact).abs());
                worst = worst.max(err);
                t.check(err <= DEFAULT_TOLERANCE, || format!("blend misses s_{key:?} by {err:e} at t = {c}"));
            }
            for j in 1..=n {
                t.check(s[&[0, j, n + 1]] == c.t()[j - 1], || format!("s_0{j}{} differs from t_{j}", n + 1));
            }
        }
    }
    // Reading the same triple backwards: the variants of s_kji = 1 − s are
    // (s_kij, s_jki, s_jik, s_ikj, s_ijk).
    for k in 0..100 {
        let s = BigRational::new(k.into(), 99.into());
        let v = s_variants(&s)?;
        let back = s_variants(&(BigRational::from_integer(1.into()) - &s))?;
        let expect = [v[3].clone(), v[2].clone(), v[1].clone(), v[0].clone(), ExtendedValue::Finite(s.clone())];
        t.check(back == expect, || format!("variants disagree at s = {s}"));
    }
    t.finish(format!("6000 configurations, worst blend error {worst:.1e}"))
}

fn split_segments() -> Result<(bool, String)> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut points = 0;
    for r in 1..=3 {
        for l in 1..=3 {
            let (u, v) = (random_configuration(r - 1, &mut rng), random_configuration(l - 1, &mut rng));
            let expect = (chart(ChartKind::Alpha, &u), chart(ChartKind::Alpha, &v));
            let mut seen: Vec<AmbientPoint> = Vec::new();
            for k in 0..=10 {
                let tau = BigRational::new(k.into(), 10.into());
                let x = tau_fiber_point(&u, &v, &tau)?;
                t.check(split_projection(&x, r, l)? == expect, || format!("split fails at r = {r}, l = {l}, tau = {tau}"));
                let entry = x.alpha_table().and_then(|s| s.get(&[0, r, r + l]).cloned());
                t.check(entry == Some(tau.clone()), || format!("s_0,r,r+l is not tau = {tau}"));
                t.check(!seen.contains(&x), || format!("tau = {tau} repeats a point at r = {r}, l = {l}"));
                seen.push(x);
                points += 1;
            }
        }
    }
    t.finish(format!("{points} segment points"))
}

fn random_local_data(face: &AnyTree, rng: &mut impl Rng) -> (Vec<Configuration>, Vec<BigRational>) {
    fn counts(node: &Node<impl Sized>, out: &mut Vec<usize>) {
        if let Node::Internal(_, c) = node {
            out.push(c.len());
            c.iter().for_each(|ch| counts(ch, out));
        }
    }
    let mut m = Vec::new();
    match face {
        AnyTree::Psi(x) => counts(x.root(), &mut m),
        AnyTree::Fan(x) => counts(x.root(), &mut m),
        AnyTree::Leveled(x) => counts(x.root(), &mut m),
    }
    let fan = matches!(face, AnyTree::Fan(_));
    let local = m
        .iter()
        .enumerate()
        .map(|(i, &k)| random_configuration(if fan && i == 0 { k - 1 } else { k - 2 }, rng))
        .collect();
    let scale = m.iter().map(|_| BigRational::new(rng.gen_range(1..20i64).into(), rng.gen_range(1..20i64).into())).collect();
    (local, scale)
}

fn stratum_identification() -> Result<(bool, String)> {
    let mut t = Tally::default();
    let worked: EpsilonPath = "e^2, e, 1-e, 1-e^2".parse()?;
    let stratum = identify_stratum(&worked, Space::Assoc)?;
    t.check(stratum.to_string() == "(((0 1) 2) (3 (4 5)))", || format!("the worked path lands on {stratum}"));
    if let AnyTree::Psi(y) = &stratum {
        let fiber = fiber_poset(y)?;
        t.check(fiber.len() == 13, || format!("its fiber has {} elements", fiber.len()));
        let r = contractibility(&order_complex(&fiber))?;
        t.check(r.acyclic(), || format!("its fiber has homology {:?}", r.betti_q));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let pools: Vec<Vec<Vec<AnyTree>>> = [Species::Psi, Species::Phi, Species::PsiLevel]
        .iter()
        .map(|&s| (1..=4).map(|n| enumerate(s, n)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let spaces = [Space::Assoc, Space::Cycl, Space::Perm];
    for (pool, space) in pools.iter().zip(spaces) {
        for _ in 0..200 {
            let n = rng.gen_range(0..4);
            let face = pool[n].choose(&mut rng).expect("nonempty");
            let (local, scale) = random_local_data(face, &mut rng);
            let p = face_path(face, &local, &scale)?;
            let found = identify_stratum(&p, space)?;
            t.check(found == *face, || format!("{space} path {p} from {face} lands on {found}"));
            match space {
                Space::Assoc => {
                    let ok = path_limit(&p, ChartKind::Alpha)? == include_face(face, &local)?;
                    t.check(ok, || format!("limit of {p} is not the chart image of {face}"));
                }
                Space::Cycl => {
                    let AnyTree::Fan(f) = face else { unreachable!("fan pool") };
                    let assoc = identify_stratum(&p, Space::Assoc)?;
                    t.check(assoc == AnyTree::Psi(pi(f)), || format!("assoc stratum {assoc} of {p} is not pi({f})"));
                    let (AmbientPoint::Beta { t: ta, s: sa, .. }, AmbientPoint::Beta { t: tb, s: sb, .. }) =
                        (path_limit(&p, ChartKind::Beta)?, include_face(face, &local)?)
                    else {
                        unreachable!("beta points")
                    };
                    let close = |a: f64, b: f64| a == b || (a - b).abs() <= 1e-9 * a.abs().max(1.0);
                    let ok = ta.iter().zip(&tb).all(|(&a, &b)| close(a, b))
                        && sa.iter().zip(&sb).all(|((ka, a), (kb, b))| ka == kb && close(*a, *b));
                    t.check(ok, || format!("beta limit of {p} is not the chart image of {face}"));
                }
                Space::Perm => {}
            }
        }
    }
    t.finish("worked path, 600 face paths".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        for s in Suite::ALL {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("none".parse::<Suite>().is_err());
    }

    #[test]
    fn chains_in_a_square() {
        let p = FinitePoset::from_relation(
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            |x, y| x == y || x == 0 || y == 3,
        )
        .unwrap();
        // 4 points, 5 edges, 2 triangles.
        assert_eq!(strict_chains(&p, 3).len(), 11);
        assert_eq!(strict_chains(&p, 1).len(), 4);
    }
}
