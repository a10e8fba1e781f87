//! Chart images of faces, and paths degenerating onto them.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{to_f64, EpsilonPath, LaurentPoly};
use super::{distinct_triples, sine_ratio, triples, AmbientPoint, Configuration, Table};
use crate::error::{Error, Result};
use crate::tree::{AnyTree, BaseKind, Label, Node, STAR};

/// Positions `0, t_1, …, 1` of the `m` children of a vertex, or for a fan
/// root `0, t_1, …, t_{m-1}` without the closing `1`.
fn child_positions(m: usize, c: &Configuration, fan_root: bool) -> Result<Vec<BigRational>> {
    let want = if fan_root { m - 1 } else { m - 2 };
    if c.n() != want {
        return Err(Error::precondition(format!(
            "a vertex with {m} children needs a configuration of dimension {want}, got {}",
            c.n()
        )));
    }
    let mut p = c.points();
    if fan_root {
        p.pop();
    }
    Ok(p)
}

fn child_counts<A>(node: &Node<A>, out: &mut Vec<usize>) {
    if let Node::Internal(_, c) = node {
        out.push(c.len());
        c.iter().for_each(|ch| child_counts(ch, out));
    }
}

/// Local positions for every internal vertex, in preorder.
fn all_positions(root: &Node, local: &[Configuration], fan: bool) -> Result<Vec<Vec<BigRational>>> {
    let mut counts = Vec::new();
    child_counts(root, &mut counts);
    if counts.len() != local.len() {
        return Err(Error::precondition(format!(
            "{} internal vertices but {} local configurations",
            counts.len(),
            local.len()
        )));
    }
    counts.iter().zip(local).enumerate().map(|(i, (&m, c))| child_positions(m, c, fan && i == 0)).collect()
}

/// Preorder index of the deepest vertex above three leaves, and the child
/// index towards each leaf there.
struct Nadir {
    vertex: usize,
    e: [usize; 3],
}

fn common_nadir(root: &Node, labels: [Label; 3]) -> Result<Nadir> {
    let paths = labels.map(|l| root.leaf_path(l));
    let [Some(a), Some(b), Some(c)] = paths else {
        return Err(Error::precondition("unknown leaf"));
    };
    let depth = a.iter().zip(&b).zip(&c).take_while(|((x, y), z)| x == y && y == z).count();
    let vertex = root.preorder_index(&a[..depth]).expect("common prefix of leaf paths is internal");
    Ok(Nadir { vertex, e: [a[depth], b[depth], c[depth]] })
}

/// The point of the linear chart (planar tree) or sine chart (fan) given by
/// a face and interior local configurations, one per internal vertex in
/// preorder. Fan roots take a configuration of dimension `|root| − 1`, every
/// other vertex one of dimension `|v| − 2`.
pub fn include_face(face: &AnyTree, local: &[Configuration]) -> Result<AmbientPoint> {
    match face {
        AnyTree::Psi(t) => {
            let root = t.root();
            let pos = all_positions(root, local, false)?;
            let n = t.n();
            let mut s = Table::new();
            for [i, j, k] in triples(n + 1) {
                let [li, lj, lk] = [i, j, k].map(|x| x as Label);
                let v = if root.closer(li, lj, lk)? {
                    BigRational::zero()
                } else if root.closer(lj, lk, li)? {
                    BigRational::one()
                } else {
                    let Nadir { vertex, e } = common_nadir(root, [li, lj, lk])?;
                    let p = &pos[vertex];
                    (&p[e[1]] - &p[e[0]]) / (&p[e[2]] - &p[e[0]])
                };
                s.insert([i, j, k], v);
            }
            Ok(AmbientPoint::Alpha { n, s })
        }
        AnyTree::Fan(f) => {
            let root = f.root();
            let pos = all_positions(root, local, true)?;
            let n = f.n();
            let star_side = root.children()[0].leaves();
            let star_at = star_side.iter().position(|&l| l == STAR).expect("trunk child holds *");
            let t = (1..=n as Label)
                .map(|l| {
                    let e = root.leaf_path(l).expect("fan leaf")[0];
                    if e > 0 {
                        to_f64(&pos[0][e])
                    } else if star_side[..star_at].contains(&l) {
                        1.0
                    } else {
                        0.0
                    }
                })
                .collect();
            let mut s = Table::new();
            for [i, j, k] in distinct_triples(n) {
                let [li, lj, lk] = [i, j, k].map(|x| x as Label);
                let v = if root.closer(li, lj, lk)? {
                    0.0
                } else if root.closer(lj, lk, li)? {
                    1.0
                } else if root.closer(li, lk, lj)? {
                    f64::INFINITY
                } else {
                    let Nadir { vertex, e } = common_nadir(root, [li, lj, lk])?;
                    let p = &pos[vertex];
                    if vertex == 0 {
                        sine_ratio(to_f64(&p[e[0]]), to_f64(&p[e[1]]), to_f64(&p[e[2]]))
                    } else {
                        to_f64(&((&p[e[1]] - &p[e[0]]).abs() / (&p[e[2]] - &p[e[0]]).abs()))
                    }
                };
                s.insert([i, j, k], v);
            }
            Ok(AmbientPoint::Beta { n, t, s })
        }
        AnyTree::Leveled(_) => Err(Error::precondition("face inclusion takes a planar tree or a fan")),
    }
}

struct Layout<'a> {
    pos: Vec<Vec<BigRational>>,
    scale: &'a [BigRational],
    exponent: Vec<i32>,
    next: usize,
    leaves: Vec<(Label, LaurentPoly)>,
}

impl Layout<'_> {
    /// Place the subtree with its anchor at `anchor`, the anchor sitting at
    /// fraction `tau` of its extent.
    fn place(&mut self, node: &Node, anchor: LaurentPoly, tau: &BigRational) {
        let children = match node {
            Node::Leaf(l) => return self.leaves.push((*l, anchor)),
            Node::Internal(_, c) => c,
        };
        let v = self.next;
        self.next += 1;
        let size = LaurentPoly::monomial(if v == 0 { BigRational::one() } else { self.scale[v].clone() }, self.exponent[v]);
        let left = &anchor - &(&size * &LaurentPoly::constant(tau.clone()));
        let m = children.len();
        let half = BigRational::new(1.into(), 2.into());
        for (i, ch) in children.iter().enumerate() {
            let at = &left + &(&size * &LaurentPoly::constant(self.pos[v][i].clone()));
            let tau = match i {
                0 => BigRational::zero(),
                _ if i == m - 1 => BigRational::one(),
                _ => half.clone(),
            };
            self.place(ch, at, &tau);
        }
    }
}

fn depths(node: &Node, d: i32, out: &mut Vec<i32>) {
    if let Node::Internal(_, c) = node {
        out.push(d);
        c.iter().for_each(|ch| depths(ch, d + 1, out));
    }
}

/// A path `t(e)` whose limit lies in the chart image of `face` with the
/// given local configurations. Each non-root vertex `v` gets extent
/// `scale[v] · e^k`, with `k` its depth, or its level minus one for
/// leveled trees; `scale[0]` is ignored.
pub fn face_path(face: &AnyTree, local: &[Configuration], scale: &[BigRational]) -> Result<EpsilonPath> {
    let (root, fan, exponent) = match face {
        AnyTree::Psi(t) => (t.root().clone(), false, None),
        AnyTree::Fan(f) => (f.root().clone(), true, None),
        AnyTree::Leveled(t) => {
            let e = t.levels().iter().map(|&l| l as i32 - 1).collect();
            (t.root().strip(), t.kind() == BaseKind::Fan, Some(e))
        }
    };
    let exponent = exponent.unwrap_or_else(|| {
        let mut d = Vec::new();
        depths(&root, 0, &mut d);
        d
    });
    if scale.len() != exponent.len() || scale.iter().any(|c| !c.is_positive()) {
        return Err(Error::precondition("one positive scale per internal vertex is required"));
    }
    let pos = all_positions(&root, local, fan)?;
    let mut lay = Layout { pos, scale, exponent, next: 0, leaves: Vec::new() };
    let zero = LaurentPoly::zero();
    if fan {
        let Node::Internal(_, children) = &root else { unreachable!() };
        lay.next = 1;
        let half = BigRational::new(1.into(), 2.into());
        lay.place(&children[0], zero.clone(), &BigRational::zero());
        let star = lay.leaves.iter().find(|(l, _)| *l == STAR).expect("trunk holds *").1.clone();
        let one = LaurentPoly::constant(BigRational::one());
        for (_, x) in lay.leaves.iter_mut() {
            *x = &*x - &star;
            if !x.is_zero() && !x.is_eventually_positive() {
                *x = &*x + &one;
            }
        }
        for (i, ch) in children.iter().enumerate().skip(1) {
            let at = LaurentPoly::constant(lay.pos[0][i].clone());
            lay.place(ch, at, &half);
        }
    } else {
        lay.place(&root, zero, &BigRational::zero());
    }
    let mut leaves = lay.leaves;
    leaves.sort_by_key(|(l, _)| *l);
    let n = if fan { leaves.len() - 1 } else { leaves.len() - 2 };
    let coords: Vec<LaurentPoly> = leaves.into_iter().skip(1).take(n).map(|(_, x)| x).collect();
    EpsilonPath::new(coords)
}
