//! Named graph families, their closed-form invariants, and the realizable
//! (reg, deg h) pairs they produce.
//!
//! Every constructor comes with a [`Prediction`]; [`check`] measures the
//! constructed graph with the general-purpose engines and compares field by
//! field.

use std::fmt;

use rayon::prelude::*;

use crate::betti::{hochster_table, i_number, Field};
use crate::error::{pre, Error, Result};
use crate::graph::{enumerate_connected, split_partition, Graph, VertexSet, MAX_VERTICES};
use crate::hilbert::{h_cover, h_edge};
use crate::indpoly::{bundle, independence_polynomial};
use crate::poly::IntPoly;
use crate::survey::PairSet;

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Closed-form values for one constructed graph. Unset fields are not
/// claimed by the family's formulas.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Prediction {
    /// Which family rule produced the values; named in every mismatch.
    pub source: &'static str,
    pub poly: Option<IntPoly>,
    pub alpha: Option<usize>,
    pub m: Option<usize>,
    pub i: Option<usize>,
    pub pdim: Option<usize>,
    pub reg_cover: Option<usize>,
    pub deg_h_cover: Option<usize>,
    pub deg_h_edge: Option<usize>,
    pub notes: Vec<String>,
}

impl Prediction {
    fn new(source: &'static str) -> Self {
        Prediction {
            source,
            ..Default::default()
        }
    }

    /// `(reg(R/J), deg h_{R/J})` when both are predicted.
    pub fn pair(&self) -> Option<(usize, usize)> {
        Some((self.reg_cover?, self.deg_h_cover?))
    }

    fn needs_betti(&self) -> bool {
        self.pdim.is_some() || self.reg_cover.is_some()
    }
}

/// Values measured by the general engines; only what a prediction asks for.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Measured {
    pub poly: IntPoly,
    pub alpha: usize,
    pub m: usize,
    pub i: Option<usize>,
    pub pdim: Option<usize>,
    pub reg_cover: Option<usize>,
    pub deg_h_cover: Option<usize>,
    pub deg_h_edge: usize,
}

pub fn measure(g: &Graph, want: &Prediction) -> Result<Measured> {
    let b = bundle(g);
    let deg_h_cover = if b.has_edge() {
        Some(h_cover(&b)?.deg_h)
    } else {
        None
    };
    let (pdim, reg_cover) = if want.needs_betti() {
        let t = hochster_table(g, Field::Rational)?;
        (Some(t.pdim()), t.pdim().checked_sub(1))
    } else {
        (None, None)
    };
    let i = match want.i {
        Some(_) => Some(i_number(g)?),
        None => None,
    };
    Ok(Measured {
        deg_h_edge: h_edge(&b).deg_h,
        alpha: b.alpha,
        m: b.m,
        poly: b.poly,
        i,
        pdim,
        reg_cover,
        deg_h_cover,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub field: &'static str,
    pub predicted: String,
    pub measured: String,
    pub ok: bool,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok { "MATCH" } else { "MISMATCH" };
        write!(
            f,
            "{:<12} predicted {:<24} measured {:<24} {verdict}",
            self.field, self.predicted, self.measured
        )
    }
}

pub fn compare(p: &Prediction, m: &Measured) -> Vec<Check> {
    fn opt(v: Option<usize>) -> String {
        v.map_or_else(|| "-".into(), |x| x.to_string())
    }
    let mut out = Vec::new();
    if let Some(poly) = &p.poly {
        out.push(Check {
            field: "P",
            predicted: poly.display_in("x"),
            measured: m.poly.display_in("x"),
            ok: *poly == m.poly,
        });
    }
    let scalars = [
        ("alpha", p.alpha, Some(m.alpha)),
        ("M", p.m, Some(m.m)),
        ("i", p.i, m.i),
        ("pdim", p.pdim, m.pdim),
        ("reg", p.reg_cover, m.reg_cover),
        ("deg_h_cover", p.deg_h_cover, m.deg_h_cover),
        ("deg_h_edge", p.deg_h_edge, Some(m.deg_h_edge)),
    ];
    for (field, want, got) in scalars {
        if let Some(w) = want {
            out.push(Check {
                field,
                predicted: w.to_string(),
                measured: opt(got),
                ok: got == Some(w),
            });
        }
    }
    out
}

/// Measures `g` and compares it with `p`.
pub fn check(g: &Graph, p: &Prediction) -> Result<Vec<Check>> {
    Ok(compare(p, &measure(g, p)?))
}

// ---------------------------------------------------------------------------
// radius-2 trees

/// Centre with `l1` leaves and `m = ts.len()` further neighbours, the
/// `i`-th of which carries `ts[i]` leaves. `ts` is kept in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radius2Spec {
    l1: usize,
    ts: Vec<usize>,
}

impl Radius2Spec {
    pub fn new(l1: usize, mut ts: Vec<usize>) -> Result<Self> {
        if let Some(t) = ts.iter().find(|&&t| t < 1) {
            return Err(Error::Precondition(format!("branch sizes must be >= 1, got {t}")));
        }
        pre(l1 + ts.len() >= 1, || "the centre needs at least one neighbour".into())?;
        ts.sort_unstable_by(|a, b| b.cmp(a));
        let s = Radius2Spec { l1, ts };
        if s.n() > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: s.n(),
                max: MAX_VERTICES,
            });
        }
        Ok(s)
    }

    pub fn star(leaves: usize) -> Result<Self> {
        Self::new(leaves, vec![])
    }

    pub fn l1(&self) -> usize {
        self.l1
    }

    pub fn ts(&self) -> &[usize] {
        &self.ts
    }

    pub fn m(&self) -> usize {
        self.ts.len()
    }

    pub fn b(&self) -> usize {
        self.l1 + self.m()
    }

    pub fn l2(&self) -> usize {
        self.ts.iter().sum()
    }

    pub fn n(&self) -> usize {
        1 + self.b() + self.l2()
    }
}

impl fmt::Display for Radius2Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L1={} ts={:?}", self.l1, self.ts)
    }
}

/// Centre is vertex 0, then the `L1` leaves, then each branch vertex
/// followed by its leaves.
pub fn build_radius2(s: &Radius2Spec) -> Graph {
    let mut g = Graph::empty(s.n());
    let mut next = 1;
    for _ in 0..s.l1 {
        g.add_edge(0, next);
        next += 1;
    }
    for &t in &s.ts {
        let v = next;
        g.add_edge(0, v);
        next += 1;
        for _ in 0..t {
            g.add_edge(v, next);
            next += 1;
        }
    }
    g
}

pub fn predict_radius2(s: &Radius2Spec) -> Prediction {
    let (l1, l2, m, b) = (s.l1, s.l2(), s.m(), s.b());
    let x = IntPoly::x();
    let prod = s.ts.iter().fold(IntPoly::one(), |acc, &t| {
        &acc * &(&x + &IntPoly::one_plus_x_pow(t))
    });
    let poly = &(&IntPoly::one_plus_x_pow(l1) * &prod)
        + &IntPoly::one_plus_x_pow(l2).shift_up(1);

    let alpha = if l2 == 0 {
        b
    } else if l1 == 0 {
        l2 + 1
    } else {
        l1 + l2
    };
    let mm = if l2 == 0 || l1 == 0 {
        0
    } else if l1 != l2 {
        l1.min(l2)
    } else if m % 2 == 1 {
        l1
    } else {
        l1 + 1
    };
    // Case order matters when L1 = L2 = 0 (a star): the L2 = 0 branch wins.
    let deg = if l2 == 0 {
        b - 1
    } else if l1 == 0 {
        b + l2 - 1
    } else if l1 != l2 {
        m + l1.max(l2) - 1
    } else if m % 2 == 1 {
        b - 1
    } else {
        b - 2
    };
    let pdim = b.max(l2 + 1);
    Prediction {
        poly: Some(poly),
        alpha: Some(alpha),
        m: Some(mm),
        pdim: Some(pdim),
        reg_cover: Some(pdim - 1),
        deg_h_cover: Some(deg),
        deg_h_edge: Some(alpha - mm),
        ..Prediction::new("radius-2 tree formulas")
    }
}

/// Descending partitions of `total` into exactly `parts` positive parts,
/// each at most `cap`.
fn partitions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if total < parts {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (1..=cap.min(total - (parts - 1))).rev() {
        for mut rest in partitions(total - first, parts - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every radius-≤2 spec on `n` vertices, up to isomorphism of the rooted
/// tree.
pub fn enumerate_radius2(n: usize) -> Vec<Radius2Spec> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for l2 in 0..=n - 2 {
        for m in 0..=l2 {
            let Some(l1) = (n - 1).checked_sub(m + l2) else {
                continue;
            };
            if l1 + m == 0 {
                continue;
            }
            for ts in partitions(l2, m, l2) {
                out.push(Radius2Spec { l1, ts });
            }
        }
    }
    out
}

fn ensure_n(n: usize, lo: usize) -> Result<()> {
    pre(n >= lo, || format!("need n >= {lo}, got {n}"))?;
    pre(n <= MAX_VERTICES, || format!("n = {n} exceeds {MAX_VERTICES}"))
}

fn radius2_a(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (ceil_div(n - 2, 2)..=n - 2)
        .flat_map(move |r| (r..=(n - 2).min(2 * r - 1)).map(move |d| (r, d)))
}

fn radius2_b(n: usize) -> impl Iterator<Item = (usize, usize)> {
    let hi = if n % 2 == 1 { (2 * n - 5) / 3 } else { 0 };
    let lo = if n % 2 == 1 { ceil_div(n - 2, 2) } else { 1 };
    (lo..=hi).map(|r| (r, r - 1))
}

/// Pairs realized by trees of radius at most two on `n ≥ 4` vertices.
pub fn radius2_pairs(n: usize) -> Result<PairSet> {
    ensure_n(n, 4)?;
    Ok(radius2_a(n).chain(radius2_b(n)).collect())
}

pub fn radius2_witness(n: usize, r: usize, d: usize) -> Result<Radius2Spec> {
    ensure_n(n, 4)?;
    if radius2_a(n).any(|p| p == (r, d)) {
        if r == n - 2 {
            return Radius2Spec::star(n - 1);
        }
        let m = d - r + 1;
        let mut ts = vec![1; m];
        ts[0] = 2 * r - d;
        return Radius2Spec::new(n - 2 - d, ts);
    }
    if radius2_b(n).any(|p| p == (r, d)) {
        let l = n - 2 - r;
        let m = 2 * r + 3 - n;
        let mut ts = vec![1; m];
        ts[0] = l - m + 1;
        return Radius2Spec::new(l, ts);
    }
    Err(Error::Precondition(format!(
        "({r},{d}) is not realized by a radius-2 tree on {n} vertices"
    )))
}

// ---------------------------------------------------------------------------
// split graphs

/// Clique `x_1..x_c`; clique vertex `x_j` carries `groups[j]` private
/// independent neighbours. Groups are kept in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitSpec {
    groups: Vec<usize>,
}

impl SplitSpec {
    pub fn new(mut groups: Vec<usize>) -> Result<Self> {
        pre(!groups.is_empty(), || "clique must be nonempty".into())?;
        groups.sort_unstable_by(|a, b| b.cmp(a));
        let s = SplitSpec { groups };
        ensure_n(s.n(), 2)?;
        Ok(s)
    }

    pub fn groups(&self) -> &[usize] {
        &self.groups
    }

    pub fn c(&self) -> usize {
        self.groups.len()
    }

    pub fn n(&self) -> usize {
        self.c() + self.groups.iter().sum::<usize>()
    }
}

impl fmt::Display for SplitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={} groups={:?}", self.c(), self.groups)
    }
}

/// Clique on `0..c`, then each group in turn.
pub fn build_split(s: &SplitSpec) -> Graph {
    let c = s.c();
    let mut g = Graph::complete(c);
    for (j, &size) in s.groups.iter().enumerate() {
        for _ in 0..size {
            g.add_vertex(VertexSet::singleton(j));
        }
    }
    g
}

/// Every split spec on `n` vertices.
pub fn enumerate_split(n: usize) -> Vec<SplitSpec> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for c in 1..=n {
        let rest = n - c;
        for used in 0..=c.min(rest) {
            for mut groups in partitions(rest, used, rest) {
                groups.resize(c, 0);
                out.push(SplitSpec { groups });
            }
        }
    }
    out
}

/// Prediction for any connected split graph, read from its split partition.
pub fn predict_split(g: &Graph) -> Result<Prediction> {
    pre(g.edge_count() > 0, || "graph has no edges".into())?;
    pre(g.is_connected(), || "graph is not connected".into())?;
    let part = split_partition(g).ok_or_else(|| Error::Precondition("graph is not split".into()))?;
    let m = part.independent.len();
    let degs = part.i_degrees(g);
    let (dmax, dmin) = (part.delta_max(g), part.delta_min(g));
    let c = part.clique.len();

    let sum = degs.iter().fold(IntPoly::zero(), |acc, &d| {
        &acc + &IntPoly::one_plus_x_pow(m - d)
    });
    let poly = &IntPoly::one_plus_x_pow(m) + &sum.shift_up(1);
    let alpha = m.max(1 + m - dmin);
    let mm = m - dmax;
    let reg = dmax + c - 2;
    Ok(Prediction {
        poly: Some(poly),
        alpha: Some(alpha),
        m: Some(mm),
        i: Some(m - dmax + 1),
        pdim: Some(reg + 1),
        reg_cover: Some(reg),
        deg_h_cover: Some(reg),
        deg_h_edge: Some(if dmin == 0 { dmax + 1 } else { dmax }),
        ..Prediction::new("split graph formulas")
    })
}

/// `min_{1≤c≤n−1} (c + ⌈n/c⌉ − 3)`.
pub fn q_min(n: usize) -> Result<usize> {
    ensure_n(n, 2)?;
    Ok((1..n).map(|c| c + ceil_div(n, c) - 3).min().expect("n >= 2"))
}

/// Diagonal pairs `(q, q)` with `q_min(n) ≤ q ≤ n − 2`.
pub fn split_pairs(n: usize) -> Result<PairSet> {
    let lo = q_min(n)?;
    Ok((lo..=n - 2).map(|q| (q, q)).collect())
}

pub fn split_witness(n: usize, q: usize) -> Result<SplitSpec> {
    if !split_pairs(n)?.contains((q, q)) {
        return Err(Error::Precondition(format!(
            "({q},{q}) is not realized by a split graph on {n} vertices"
        )));
    }
    if q == n - 2 {
        return SplitSpec::new(vec![n - 1]);
    }
    let c = (2..n)
        .find(|&c| c + ceil_div(n, c) - 3 <= q)
        .expect("q below n - 2 is reached by some c >= 2");
    let m = n - c;
    let delta = q + 2 - c;
    let mut groups = vec![0; c];
    let mut left = m;
    for s in groups.iter_mut() {
        *s = delta.min(left);
        left -= *s;
    }
    debug_assert_eq!(left, 0);
    SplitSpec::new(groups)
}

/// `K_p` with `q` pendant leaves on each clique vertex.
pub fn build_hpq(p: usize, q: usize) -> Result<Graph> {
    pre(p >= 2 && q >= 1, || format!("H_(p,q) needs p >= 2, q >= 1; got ({p},{q})"))?;
    Ok(build_split(&SplitSpec::new(vec![q; p])?))
}

pub fn predict_hpq(p: usize, q: usize) -> Prediction {
    Prediction {
        alpha: Some(p * q),
        m: Some((p - 1) * q),
        i: Some(1 + (p - 1) * q),
        pdim: Some(p + q - 1),
        reg_cover: Some(p + q - 2),
        deg_h_cover: Some(p + q - 2),
        ..Prediction::new("clique with uniform pendants")
    }
}

// ---------------------------------------------------------------------------
// the reg = n − 2 family

/// Clique `c_1..c_{k+1}` (vertices `0..=k`) plus `z_j` adjacent to
/// `c_1..c_j` for `j < k`.
pub fn build_bk(k: usize) -> Result<Graph> {
    pre(k >= 1, || "B_k needs k >= 1".into())?;
    ensure_n(2 * k, 2)?;
    let mut g = Graph::complete(k + 1);
    for j in 1..k {
        g.add_vertex(VertexSet::full(j));
    }
    Ok(g)
}

pub fn predict_bk(k: usize) -> Prediction {
    let two = IntPoly::constant(2);
    Prediction {
        poly: Some(&(&two * &IntPoly::one_plus_x_pow(k)) - &IntPoly::one()),
        alpha: Some(k),
        ..Prediction::new("B_k polynomial")
    }
}

/// Cone over `B_k ⊔ K_{1,r}`.
pub fn build_gkr(k: usize, r: usize) -> Result<Graph> {
    pre(k >= 1 && r >= k, || format!("G_(k,r) needs 1 <= k <= r; got ({k},{r})"))?;
    ensure_n(2 * k + r + 2, 2)?;
    cone(&build_bk(k)?.disjoint_union(&Graph::star(r)))
}

pub fn predict_gkr(k: usize, r: usize) -> Prediction {
    let n = 2 * k + r + 2;
    let star = &IntPoly::one_plus_x_pow(r) + &IntPoly::x();
    let poly = &(&predict_bk(k).poly.expect("set") * &star) + &IntPoly::x();
    Prediction {
        poly: Some(poly),
        m: Some(k),
        pdim: Some(n - 1),
        reg_cover: Some(n - 2),
        deg_h_cover: Some(n - 2 - k),
        ..Prediction::new("cone over B_k and a star")
    }
}

/// `n − 3 ≥ deg ≥ ⌈2(n−2)/3⌉`.
pub fn gkr_degree_bounds(n: usize) -> (usize, usize) {
    (ceil_div(2 * (n - 2), 3), n - 3)
}

/// Join with a new last vertex.
pub fn cone(g: &Graph) -> Result<Graph> {
    pre(g.n() >= 1, || "cone over the empty graph".into())?;
    ensure_n(g.n() + 1, 2)?;
    let mut h = g.clone();
    h.add_vertex(g.vertices());
    Ok(h)
}

pub fn predict_cone(g: &Graph) -> Prediction {
    let n = g.n();
    Prediction {
        poly: Some(&independence_polynomial(g) + &IntPoly::x()),
        pdim: Some(n),
        reg_cover: Some(n - 1),
        ..Prediction::new("cone")
    }
}

// ---------------------------------------------------------------------------
// the deg = reg − 1 line

/// Vertices in order: `c, v1, v2, u_1..u_{p−1}, y_1..y_{p−2}, z,
/// x_1..x_k` with `k = n − 2p − 1`; the `x_i` glue triangles onto `c v1`.
pub fn build_hnp(n: usize, p: usize) -> Result<Graph> {
    let ok = (p >= 3 && n > 2 * p) || (p == 2 && n >= 6);
    pre(ok, || format!("H_(n,p) needs p >= 3 and n >= 2p+1, or p = 2 and n >= 6; got ({n},{p})"))?;
    ensure_n(n, 6)?;
    let k = n - 2 * p - 1;
    let mut g = Graph::empty(3);
    let (c, v1, v2) = (0, 1, 2);
    g.add_edge(c, v1);
    g.add_edge(c, v2);
    for _ in 0..p - 1 {
        g.add_vertex(VertexSet::singleton(c));
    }
    for _ in 0..p - 2 {
        g.add_vertex(VertexSet::singleton(v1));
    }
    g.add_vertex(VertexSet::singleton(v2));
    for _ in 0..k {
        g.add_vertex(VertexSet::singleton(c) | VertexSet::singleton(v1));
    }
    debug_assert_eq!(g.n(), n);
    Ok(g)
}

pub fn predict_hnp(n: usize, p: usize) -> Prediction {
    Prediction {
        i: Some(p),
        m: Some(p),
        pdim: Some(n - p),
        reg_cover: Some(n - p - 1),
        deg_h_cover: Some(n - p - 2),
        ..Prediction::new("triangles glued on a radius-2 tree")
    }
}

// ---------------------------------------------------------------------------
// whiskers

/// Attaches `q` pendant vertices to every vertex of `g`.
pub fn whisker_all(g: &Graph, q: usize) -> Result<Graph> {
    pre(q >= 1, || "q must be >= 1".into())?;
    ensure_n(g.n() * (q + 1), 2)?;
    let mut h = g.clone();
    for v in 0..g.n() {
        for _ in 0..q {
            h.add_vertex(VertexSet::singleton(v));
        }
    }
    Ok(h)
}

pub fn predict_whisker_all(g: &Graph, q: usize) -> Prediction {
    let b = bundle(g);
    let n = g.n();
    let poly = b.gvec.iter().enumerate().fold(IntPoly::zero(), |acc, (k, gk)| {
        &acc + &IntPoly::one_plus_x_pow(q * (n - k)).shift_up(k).scale(gk)
    });
    Prediction {
        poly: Some(poly),
        alpha: Some(q * n),
        m: Some(q * (n - b.alpha)),
        deg_h_edge: Some(q * b.alpha),
        deg_h_cover: Some(n + q * b.alpha - 2),
        ..Prediction::new("uniform whiskering")
    }
}

/// Attaches one pendant vertex to `v`.
pub fn whisker_vertex(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    ensure_n(g.n() + 1, 2)?;
    let mut h = g.clone();
    h.add_vertex(VertexSet::singleton(v));
    Ok(h)
}

/// When `M(G) = M(G − v)` the rule only bounds `M` from below, so the
/// prediction computes it from the predicted polynomial and says so in
/// `notes`.
pub fn predict_whisker_vertex(g: &Graph, v: usize) -> Result<Prediction> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    let bg = bundle(g);
    let bv = bundle(&g.remove(VertexSet::singleton(v)));
    let poly = &bg.poly + &bv.poly.shift_up(1);
    let (a, b) = (bg.m, bv.m);
    let mut p = Prediction {
        alpha: Some(bg.alpha.max(1 + bv.alpha)),
        ..Prediction::new("single whisker")
    };
    if a != b {
        p.m = Some(a.min(b));
    } else {
        let (exact, _) = poly.ord_at_minus1()?;
        let how = if exact == a { "saturated" } else { "exceeds the tie value" };
        p.m = Some(exact);
        p.notes.push(format!("tie M(G) = M(G-v) = {a}; exact M = {exact} ({how})"));
    }
    p.poly = Some(poly);
    Ok(p)
}

// ---------------------------------------------------------------------------
// grids

/// Size limits for the family grids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridLimits {
    pub radius2_n: usize,
    pub split_n: usize,
    pub bk_k: usize,
    pub gkr_n: usize,
    pub hnp_n: usize,
    pub hpq_n: usize,
    pub whisker_base_n: usize,
    pub whisker_q: usize,
    pub cone_base_n: usize,
}

impl GridLimits {
    pub const FULL: GridLimits = GridLimits {
        radius2_n: 11,
        split_n: 10,
        bk_k: 6,
        gkr_n: 14,
        hnp_n: 12,
        hpq_n: 12,
        whisker_base_n: 6,
        whisker_q: 3,
        cone_base_n: 6,
    };

    pub const QUICK: GridLimits = GridLimits {
        radius2_n: 8,
        split_n: 7,
        bk_k: 4,
        gkr_n: 10,
        hnp_n: 9,
        hpq_n: 8,
        whisker_base_n: 4,
        whisker_q: 2,
        cone_base_n: 4,
    };
}

#[derive(Clone, Debug)]
pub struct GridCase {
    pub family: &'static str,
    pub label: String,
    pub graph: Graph,
    pub prediction: Prediction,
}

#[derive(Clone, Debug)]
pub struct GridResult {
    pub case: GridCase,
    pub checks: Vec<Check>,
}

impl GridResult {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

fn case(family: &'static str, label: String, graph: Graph, prediction: Prediction) -> GridCase {
    GridCase {
        family,
        label,
        graph,
        prediction,
    }
}

/// All parameter tuples within `lim`, in a fixed order.
pub fn grid(lim: GridLimits) -> Result<Vec<GridCase>> {
    let mut out = Vec::new();
    for n in 2..=lim.radius2_n {
        for s in enumerate_radius2(n) {
            out.push(case("radius2", s.to_string(), build_radius2(&s), predict_radius2(&s)));
        }
    }
    for n in 2..=lim.split_n {
        for s in enumerate_split(n) {
            let g = build_split(&s);
            let p = predict_split(&g)?;
            out.push(case("split", s.to_string(), g, p));
        }
    }
    for p in 2..=lim.hpq_n {
        for q in 1..=lim.hpq_n {
            if p * (q + 1) <= lim.hpq_n {
                out.push(case("Hpq", format!("p={p} q={q}"), build_hpq(p, q)?, predict_hpq(p, q)));
            }
        }
    }
    for k in 1..=lim.bk_k {
        out.push(case("Bk", format!("k={k}"), build_bk(k)?, predict_bk(k)));
    }
    for k in 1..=lim.gkr_n {
        for r in k..=lim.gkr_n {
            if 2 * k + r + 2 <= lim.gkr_n {
                out.push(case("Gkr", format!("k={k} r={r}"), build_gkr(k, r)?, predict_gkr(k, r)));
            }
        }
    }
    for n in 6..=lim.hnp_n {
        for p in 2..n {
            if let Ok(g) = build_hnp(n, p) {
                out.push(case("Hnp", format!("n={n} p={p}"), g, predict_hnp(n, p)));
            }
        }
    }
    for n in 1..=lim.whisker_base_n.max(lim.cone_base_n) {
        for base in enumerate_connected(n)? {
            let label = crate::graph::to_graph6(&base);
            if n <= lim.whisker_base_n {
                for q in 1..=lim.whisker_q {
                    let g = whisker_all(&base, q)?;
                    out.push(case("whisker", format!("{label} q={q}"), g, predict_whisker_all(&base, q)));
                }
                for v in 0..n {
                    let g = whisker_vertex(&base, v)?;
                    let p = predict_whisker_vertex(&base, v)?;
                    out.push(case("whisker1", format!("{label} v={v}"), g, p));
                }
            }
            if n <= lim.cone_base_n {
                out.push(case("cone", label, cone(&base)?, predict_cone(&base)));
            }
        }
    }
    Ok(out)
}

/// Checks every case in parallel; results keep the input order.
pub fn check_grid(cases: Vec<GridCase>) -> Result<Vec<GridResult>> {
    cases
        .into_par_iter()
        .map(|case| {
            let checks = check(&case.graph, &case.prediction)?;
            Ok(GridResult { case, checks })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_ok(g: &Graph, p: &Prediction) {
        for c in check(g, p).unwrap() {
            assert!(c.ok, "{}: {c}", p.source);
        }
    }

    #[test]
    fn radius2_examples() {
        let p4 = Radius2Spec::new(1, vec![1]).unwrap();
        let g = build_radius2(&p4);
        assert_eq!(independence_polynomial(&g), independence_polynomial(&Graph::path(4)));
        let p = predict_radius2(&p4);
        assert_eq!((p.pdim, p.m, p.deg_h_cover), (Some(2), Some(1), Some(1)));
        all_ok(&g, &p);

        let star = Radius2Spec::star(4).unwrap();
        let p = predict_radius2(&star);
        assert_eq!((p.pdim, p.m, p.deg_h_cover), (Some(4), Some(0), Some(3)));
        all_ok(&build_radius2(&star), &p);

        let rerooted = Radius2Spec::new(0, vec![2]).unwrap();
        let p = predict_radius2(&rerooted);
        assert_eq!((p.pdim, p.m, p.deg_h_cover), (Some(3), Some(0), Some(2)));
        all_ok(&build_radius2(&rerooted), &p);
    }

    #[test]
    fn radius2_rejects() {
        assert!(Radius2Spec::new(2, vec![1, 0]).is_err());
        assert!(Radius2Spec::new(0, vec![]).is_err());
        assert_eq!(Radius2Spec::new(0, vec![1, 3]).unwrap().ts(), &[3, 1]);
    }

    #[test]
    fn radius2_witnesses() {
        let w = radius2_witness(9, 4, 3).unwrap();
        assert_eq!((w.l1(), w.l2(), w.m()), (3, 3, 2));
        assert_eq!(predict_radius2(&w).pair(), Some((4, 3)));
        let star = radius2_witness(9, 7, 7).unwrap();
        assert_eq!(star, Radius2Spec::star(8).unwrap());
        assert!(radius2_witness(9, 3, 3).is_err());
    }

    #[test]
    fn split_examples() {
        let g = build_hpq(2, 1).unwrap();
        let p = predict_split(&g).unwrap();
        assert_eq!(p.pair(), Some((1, 1)));
        all_ok(&g, &p);

        let b2 = build_bk(2).unwrap();
        let p = predict_split(&b2).unwrap();
        assert_eq!(p.m, Some(0));
        assert_eq!(p.poly, Some(IntPoly::from_i64(&[1, 4, 2])));
        all_ok(&b2, &p);

        assert_eq!(predict_hpq(4, 4).m, Some(12));
        assert_eq!(predict_hpq(4, 4).pair(), Some((6, 6)));
    }

    #[test]
    fn split_pair_sets() {
        assert_eq!(q_min(9).unwrap(), 3);
        assert_eq!(split_pairs(9).unwrap().pairs(), (3..=7).map(|q| (q, q)).collect::<Vec<_>>());
        assert_eq!(split_pairs(4).unwrap().pairs(), vec![(1, 1), (2, 2)]);
        assert_eq!(split_pairs(2).unwrap().pairs(), vec![(0, 0)]);
        assert_eq!(split_witness(7, 5).unwrap().groups(), &[6]);
        for n in 2..=9 {
            for (q, _) in split_pairs(n).unwrap().pairs() {
                let s = split_witness(n, q).unwrap();
                assert_eq!(s.n(), n);
                let g = build_split(&s);
                let p = predict_split(&g).unwrap();
                assert_eq!(p.pair(), Some((q, q)), "n={n} {s}");
                all_ok(&g, &p);
            }
        }
    }

    #[test]
    fn bk_and_gkr() {
        assert_eq!(predict_bk(2).poly, Some(IntPoly::from_i64(&[1, 4, 2])));
        all_ok(&build_bk(2).unwrap(), &predict_bk(2));
        let g11 = build_gkr(1, 1).unwrap();
        assert_eq!(g11.n(), 5);
        let p = predict_gkr(1, 1);
        assert_eq!(p.poly, Some(IntPoly::from_i64(&[1, 5, 4])));
        all_ok(&g11, &p);
        assert_eq!(predict_gkr(1, 4).pair(), Some((6, 5)));
        assert_eq!(predict_gkr(2, 2).pair(), Some((6, 4)));
        all_ok(&build_gkr(2, 2).unwrap(), &predict_gkr(2, 2));
        assert!(build_gkr(2, 1).is_err());
    }

    #[test]
    fn hnp() {
        assert_eq!(predict_hnp(7, 3).pair(), Some((3, 2)));
        assert_eq!(predict_hnp(9, 4).pair(), Some((4, 3)));
        assert_eq!(predict_hnp(6, 2).pair(), Some((3, 2)));
        for (n, p) in [(7, 3), (9, 4), (6, 2)] {
            let g = build_hnp(n, p).unwrap();
            assert!(g.is_connected() && crate::graph::is_chordal(&g));
            all_ok(&g, &predict_hnp(n, p));
        }
        assert!(build_hnp(5, 2).is_err());
        assert!(build_hnp(6, 3).is_err());
    }

    #[test]
    fn whiskers_and_cones() {
        let k2 = Graph::complete(2);
        let g = whisker_all(&k2, 2).unwrap();
        let p = predict_whisker_all(&k2, 2);
        assert_eq!((g.n(), p.m, p.deg_h_cover), (6, Some(2), Some(2)));
        all_ok(&g, &p);

        let h = build_bk(1).unwrap().disjoint_union(&Graph::star(1));
        assert_eq!(cone(&h).unwrap(), build_gkr(1, 1).unwrap());
        all_ok(&cone(&h).unwrap(), &predict_cone(&h));

        // P_3 at an end: M(P_3) = 0, M(P_2) = 0, a tie
        let p = predict_whisker_vertex(&Graph::path(3), 0).unwrap();
        assert_eq!(p.notes.len(), 1);
        all_ok(&whisker_vertex(&Graph::path(3), 0).unwrap(), &p);
        // K_1 + whisker: M(K_1) = 1, M(empty) = 0
        let p = predict_whisker_vertex(&Graph::empty(1), 0).unwrap();
        assert_eq!(p.m, Some(0));
        assert!(p.notes.is_empty());
    }

    #[test]
    fn enumerations() {
        // (4,[]), (2,[1]), (1,[2]), (0,[1,1]), (0,[3])
        let specs = enumerate_radius2(5);
        assert!(specs.iter().all(|s| s.n() == 5));
        assert_eq!(specs.len(), 5);
        assert!(enumerate_split(4).iter().all(|s| s.n() == 4));
    }
}
