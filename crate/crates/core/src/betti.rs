//! Reduced simplicial homology, graded Betti numbers of `R/I(G)` via
//! Hochster's formula, and the regularity of `R/J(G)` by Terai duality.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{is_chordal, Graph, VertexSet};

pub const COMPLEX_MAX_VERTICES: usize = 25;
pub const FACE_GUARD: usize = 1 << 21;
pub const HOCHSTER_MAX: usize = 20;
pub const I_NUMBER_MAX: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("p:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Precondition(format!("field must be q or p:PRIME, got {s:?}")))?;
        if !(2..1 << 31).contains(&p) || (2..).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            return Err(Error::Precondition(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

// ---------------------------------------------------------------------------
// simplicial complexes

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// An empty facet list is the void complex; `[∅]` is the complex `{∅}`.
    pub fn from_facets(n: usize, facets: Vec<VertexSet>) -> Result<Self> {
        if n > COMPLEX_MAX_VERTICES {
            return Err(Error::Guard {
                what: "complex vertices",
                limit: COMPLEX_MAX_VERTICES,
                actual: n,
            });
        }
        let all = VertexSet::full(n);
        let mut fs: Vec<VertexSet> = Vec::new();
        let mut sorted = facets;
        sorted.sort_by_key(|f| std::cmp::Reverse((f.len(), f.0)));
        sorted.dedup();
        for f in sorted {
            if !f.is_subset(all) {
                return Err(Error::VertexOutOfRange {
                    v: (f - all).first().unwrap_or(0),
                    n,
                });
            }
            if !fs.iter().any(|g| f.is_subset(*g)) {
                fs.push(f);
            }
        }
        fs.sort();
        Ok(SimplicialComplex { n, facets: fs })
    }

    pub fn simplex(k: usize) -> Self {
        SimplicialComplex {
            n: k,
            facets: vec![VertexSet::full(k)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Faces grouped by dimension: entry `k` holds the `(k−1)`-faces.
    pub fn faces(&self) -> Result<Vec<Vec<VertexSet>>> {
        let mut seen: HashSet<u64> = HashSet::new();
        for &f in &self.facets {
            let mut sub = f.0;
            loop {
                seen.insert(sub);
                if seen.len() > FACE_GUARD {
                    return Err(Error::Guard {
                        what: "faces",
                        limit: FACE_GUARD,
                        actual: seen.len(),
                    });
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f.0;
            }
        }
        let top = self.dim().map_or(0, |d| (d + 2) as usize);
        let mut out = vec![Vec::new(); top];
        for s in seen {
            out[s.count_ones() as usize].push(VertexSet(s));
        }
        for v in &mut out {
            v.sort();
        }
        Ok(out)
    }
}

pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex> {
    if g.n() > COMPLEX_MAX_VERTICES {
        return Err(Error::Guard {
            what: "independence complex vertices",
            limit: COMPLEX_MAX_VERTICES,
            actual: g.n(),
        });
    }
    let mut facets = Vec::new();
    maximal_independent_sets(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut |s| {
        facets.push(s)
    });
    SimplicialComplex::from_facets(g.n(), facets)
}

/// Bron–Kerbosch with pivoting on the complement graph.
fn maximal_independent_sets(
    g: &Graph,
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    out: &mut impl FnMut(VertexSet),
) {
    if p.is_empty() && x.is_empty() {
        out(r);
        return;
    }
    // In the complement, the neighbours of u are the non-neighbours.
    let non_nbrs = |v: usize| g.vertices() - g.closed_neighborhood(v);
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (non_nbrs(u) & p).len())
        .expect("p or x nonempty");
    let (mut p, mut x) = (p, x);
    for v in p - non_nbrs(pivot) {
        maximal_independent_sets(g, r.with(v), p & non_nbrs(v), x & non_nbrs(v), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Alternating face count, empty face excluded.
pub fn euler_characteristic(c: &SimplicialComplex) -> Result<BigInt> {
    let faces = c.faces()?;
    Ok(faces
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, f)| {
            let v = BigInt::from(f.len());
            if k % 2 == 1 {
                v
            } else {
                -v
            }
        })
        .sum())
}

// ---------------------------------------------------------------------------
// ranks

const SCREEN_PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn rank_mod_p(m: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = powmod(a[rank][col], p - 2, p);
        for c in col..cols {
            a[rank][c] = mulmod(a[rank][c], inv, p);
        }
        for r in rank + 1..a.len() {
            let f = a[r][col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                let sub = mulmod(f, a[rank][c], p);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination in `i128`; `None` on overflow.
fn bareiss_i128(m: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..a.len() {
            for c in col + 1..cols {
                let v = a[rank][col]
                    .checked_mul(a[r][c])?
                    .checked_sub(a[r][col].checked_mul(a[rank][c])?)?;
                a[r][c] = v / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    Some(rank)
}

fn bareiss_big(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..a.len() {
            for c in col + 1..cols {
                let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Exact rank over the given field.
pub fn matrix_rank(m: &[Vec<i64>], field: Field) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if rows == 0 || cols == 0 {
        return 0;
    }
    match field {
        Field::Prime(p) => rank_mod_p(m, p),
        Field::Rational => {
            // A rank mod p never exceeds the rational rank, so full rank
            // modulo a prime settles it; anything else is confirmed exactly.
            let screen = rank_mod_p(m, SCREEN_PRIME);
            if screen == rows.min(cols) {
                return screen;
            }
            bareiss_i128(m).unwrap_or_else(|| bareiss_big(m))
        }
    }
}

/// Reduced homology ranks, index `k` holding `H̃_{k−1}`. Empty for the
/// void complex.
pub fn reduced_homology_ranks(c: &SimplicialComplex, field: Field) -> Result<Vec<u64>> {
    if c.is_void() {
        return Ok(Vec::new());
    }
    Ok(ranks_from_faces(&c.faces()?, field))
}

fn ranks_from_faces(faces: &[Vec<VertexSet>], field: Field) -> Vec<u64> {
    // boundary rank of ∂_k : C_k -> C_{k-1}, with faces[k] the (k-1)-faces
    let mut brank = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        let index: HashMap<u64, usize> = faces[k - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (f.0, i))
            .collect();
        let mut m = vec![vec![0i64; faces[k].len()]; faces[k - 1].len()];
        for (j, f) in faces[k].iter().enumerate() {
            for (pos, v) in f.iter().enumerate() {
                let row = index[&f.without(v).0];
                m[row][j] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        brank[k] = matrix_rank(&m, field);
    }
    (0..faces.len())
        .map(|k| (faces[k].len() - brank[k] - brank[k + 1]) as u64)
        .collect()
}

// ---------------------------------------------------------------------------
// homology of independence complexes

fn independent_faces(g: &Graph, w: VertexSet) -> Result<Vec<Vec<VertexSet>>> {
    let mut out: Vec<Vec<VertexSet>> = vec![Vec::new(); w.len() + 2];
    let mut count = 0usize;
    fn rec(
        g: &Graph,
        cur: VertexSet,
        cand: VertexSet,
        out: &mut Vec<Vec<VertexSet>>,
        count: &mut usize,
    ) -> Result<()> {
        out[cur.len()].push(cur);
        *count += 1;
        if *count > FACE_GUARD {
            return Err(Error::Guard {
                what: "faces",
                limit: FACE_GUARD,
                actual: *count,
            });
        }
        for v in cand {
            let rest = VertexSet(cand.0 & !((2u64 << v) - 1)) - g.neighbors(v);
            rec(g, cur.with(v), rest, out, count)?;
        }
        Ok(())
    }
    rec(g, VertexSet::EMPTY, w, &mut out, &mut count)?;
    while out.last().is_some_and(|f| f.is_empty()) {
        out.pop();
    }
    for f in &mut out {
        f.sort();
    }
    Ok(out)
}

/// Reduced homology of `Ind(G[w])` from the boundary matrices.
pub fn ind_homology_direct(g: &Graph, w: VertexSet, field: Field) -> Result<Vec<u64>> {
    Ok(ranks_from_faces(&independent_faces(g, w)?, field))
}

/// Reduced homology of independence complexes with homotopy shortcuts:
/// an isolated vertex makes a cone, a disconnected graph gives a join,
/// a pair with `N(u) ⊆ N(v)` lets `v` be deleted, and a clique is a set of
/// points. Only the remaining cores reach the boundary matrices.
pub struct IndHomology<'g> {
    g: &'g Graph,
    field: Field,
    memo: HashMap<u64, Vec<u64>>,
}

impl<'g> IndHomology<'g> {
    pub fn new(g: &'g Graph, field: Field) -> Self {
        IndHomology {
            g,
            field,
            memo: HashMap::new(),
        }
    }

    pub fn ranks(&mut self, w: VertexSet) -> Result<Vec<u64>> {
        if let Some(r) = self.memo.get(&w.0) {
            return Ok(r.clone());
        }
        let r = self.compute(w)?;
        self.memo.insert(w.0, r.clone());
        Ok(r)
    }

    fn compute(&mut self, w: VertexSet) -> Result<Vec<u64>> {
        let g = self.g;
        if w.is_empty() {
            return Ok(vec![1]);
        }
        let nb = |v: usize| g.neighbors(v) & w;
        if w.iter().any(|v| nb(v).is_empty()) {
            return Ok(Vec::new());
        }
        let comps = g.components_within(w);
        if comps.len() > 1 {
            let mut acc = vec![1u64];
            for c in comps {
                let r = self.ranks(c)?;
                if r.iter().all(|&x| x == 0) {
                    return Ok(Vec::new());
                }
                acc = convolve(&acc, &r);
            }
            return Ok(acc);
        }
        for u in w {
            let nu = nb(u);
            for v in w.without(u) {
                if nu.is_subset(nb(v)) {
                    return self.ranks(w.without(v));
                }
            }
        }
        if g.is_clique(w) {
            return Ok(vec![0, w.len() as u64 - 1]);
        }
        ind_homology_direct(g, w, self.field)
    }
}

/// Join of complexes: reduced Poincaré polynomials multiply (shifted by one).
fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Betti tables

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(a, _), _)| a == i)
            .map(|(_, &v)| v)
            .sum()
    }
}

impl fmt::Display for BettiTable {
    /// Rows are `j − i`, columns are `i`, zeros shown as dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, r) = (self.pdim(), self.reg());
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut rows: Vec<(String, Vec<String>)> = vec![(
            String::new(),
            (0..=p).map(|i| i.to_string()).collect(),
        )];
        rows.push(("total:".into(), (0..=p).map(|i| cell(self.total(i))).collect()));
        for d in 0..=r {
            rows.push((
                format!("{d}:"),
                (0..=p).map(|i| cell(self.get(i, i + d))).collect(),
            ));
        }
        let lw = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        let cw: Vec<usize> = (0..=p)
            .map(|i| rows.iter().map(|r| r.1[i].len()).max().unwrap_or(1))
            .collect();
        for (k, (label, cells)) in rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{label:>lw$}")?;
            for (i, c) in cells.iter().enumerate() {
                write!(f, " {c:>w$}", w = cw[i])?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Boundary matrices of every induced subcomplex.
    Direct,
    /// Homotopy reductions first, boundary matrices only on the cores.
    #[default]
    Reduced,
}

/// `β_{i,j}(R/I(G)) = Σ_{|W|=j} dim H̃_{j−i−1}(Ind(G[W]))`.
pub fn hochster_table(g: &Graph, field: Field) -> Result<BettiTable> {
    hochster_table_with(g, field, Engine::Reduced)
}

pub fn hochster_table_with(g: &Graph, field: Field, engine: Engine) -> Result<BettiTable> {
    if g.n() > HOCHSTER_MAX {
        return Err(Error::Guard {
            what: "Hochster vertex count",
            limit: HOCHSTER_MAX,
            actual: g.n(),
        });
    }
    let masks = 0..1u64 << g.n();
    let per_mask: Vec<(VertexSet, Vec<u64>)> = match engine {
        Engine::Direct => masks
            .into_par_iter()
            .map(|w| {
                let w = VertexSet(w);
                ind_homology_direct(g, w, field).map(|r| (w, r))
            })
            .collect::<Result<_>>()?,
        Engine::Reduced => {
            let mut eng = IndHomology::new(g, field);
            masks
                .map(|w| {
                    let w = VertexSet(w);
                    eng.ranks(w).map(|r| (w, r))
                })
                .collect::<Result<_>>()?
        }
    };
    let mut t = BettiTable::default();
    for (w, ranks) in per_mask {
        let j = w.len();
        // ranks[k] = dim H̃_{k-1}, contributing to i = j - k
        for (k, &r) in ranks.iter().enumerate() {
            if r > 0 {
                t.add(j - k, j, r);
            }
        }
    }
    Ok(t)
}

fn require_edge(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    Ok(())
}

/// `reg(R/J(G)) = pdim(R/I(G)) − 1`.
pub fn reg_cover(g: &Graph, field: Field) -> Result<usize> {
    require_edge(g)?;
    Ok(hochster_table(g, field)?.pdim() - 1)
}

/// Minimum size of a maximal independent set.
pub fn i_number(g: &Graph) -> Result<usize> {
    if g.n() > I_NUMBER_MAX {
        return Err(Error::Guard {
            what: "i(G) vertex count",
            limit: I_NUMBER_MAX,
            actual: g.n(),
        });
    }
    fn rec(g: &Graph, size: usize, dominated: VertexSet, best: &mut usize) {
        let all = g.vertices();
        if dominated == all {
            *best = (*best).min(size);
            return;
        }
        if size + 1 >= *best {
            return;
        }
        // Some vertex of N[v] outside the dominated set must join the set.
        let v = (all - dominated)
            .iter()
            .min_by_key(|&v| (g.closed_neighborhood(v) - dominated).len())
            .expect("undominated vertex exists");
        for u in g.closed_neighborhood(v) - dominated {
            rec(g, size + 1, dominated | g.closed_neighborhood(u), best);
        }
    }
    let mut best = g.n();
    rec(g, 0, VertexSet::EMPTY, &mut best);
    Ok(best)
}

/// `reg(R/J(G)) = n − i(G) − 1` for connected chordal graphs.
pub fn chordal_reg_cover(g: &Graph) -> Result<usize> {
    require_edge(g)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if !is_chordal(g) {
        return Err(Error::Precondition("graph is not chordal".into()));
    }
    Ok(g.n() - i_number(g)? - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn independence_complexes() {
        let c4 = independence_complex(&Graph::cycle(4)).unwrap();
        assert_eq!(c4.facets(), &[vs(&[0, 2]), vs(&[1, 3])]);
        let k3 = independence_complex(&Graph::complete(3)).unwrap();
        assert_eq!(k3.facets(), &[vs(&[0]), vs(&[1]), vs(&[2])]);
        let p4 = independence_complex(&Graph::path(4)).unwrap();
        assert_eq!(p4.facets(), &[vs(&[0, 2]), vs(&[0, 3]), vs(&[1, 3])]);
    }

    #[test]
    fn homology_examples() {
        let three_points = independence_complex(&Graph::complete(3)).unwrap();
        assert_eq!(reduced_homology_ranks(&three_points, Field::Rational).unwrap(), vec![0, 2]);
        let two_edges = independence_complex(&Graph::cycle(4)).unwrap();
        assert_eq!(reduced_homology_ranks(&two_edges, Field::Rational).unwrap(), vec![0, 1, 0]);
        let simplex = SimplicialComplex::simplex(4);
        assert!(reduced_homology_ranks(&simplex, Field::Rational)
            .unwrap()
            .iter()
            .all(|&r| r == 0));
        let empty = SimplicialComplex::from_facets(0, vec![VertexSet::EMPTY]).unwrap();
        assert_eq!(reduced_homology_ranks(&empty, Field::Rational).unwrap(), vec![1]);
        let void = SimplicialComplex::from_facets(3, vec![]).unwrap();
        assert!(reduced_homology_ranks(&void, Field::Rational).unwrap().is_empty());
        // boundary of the triangle: a circle
        let circle =
            SimplicialComplex::from_facets(3, vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]).unwrap();
        assert_eq!(reduced_homology_ranks(&circle, Field::Rational).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn projective_plane_is_characteristic_sensitive() {
        // 6-vertex triangulation of RP^2
        let t = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ];
        let rp2 = SimplicialComplex::from_facets(6, t.iter().map(|f| vs(f)).collect()).unwrap();
        let q = reduced_homology_ranks(&rp2, Field::Rational).unwrap();
        let f2 = reduced_homology_ranks(&rp2, Field::Prime(2)).unwrap();
        assert_eq!(q, vec![0, 0, 0, 0]);
        assert_eq!(f2, vec![0, 0, 1, 1]);
    }

    #[test]
    fn hochster_examples() {
        let t = hochster_table(&Graph::complete(3), Field::Rational).unwrap();
        assert_eq!((t.get(0, 0), t.get(1, 2), t.get(2, 3), t.pdim()), (1, 3, 2, 2));
        assert_eq!(hochster_table(&Graph::path(4), Field::Rational).unwrap().pdim(), 2);
        let t = hochster_table(&Graph::complete(2), Field::Rational).unwrap();
        assert_eq!((t.get(1, 2), t.pdim()), (1, 1));
        let shown = t.to_string();
        assert!(shown.contains("total: 1 1"), "{shown}");
    }

    #[test]
    fn engines_agree_on_small_graphs() {
        for g in [Graph::cycle(5), Graph::cycle(6), Graph::star(4), Graph::path(6)] {
            let a = hochster_table_with(&g, Field::Rational, Engine::Direct).unwrap();
            let b = hochster_table_with(&g, Field::Rational, Engine::Reduced).unwrap();
            assert_eq!(a, b, "{g:?}");
        }
    }

    #[test]
    fn regularity_and_i_number() {
        assert_eq!(reg_cover(&Graph::complete(3), Field::Rational).unwrap(), 1);
        assert_eq!(reg_cover(&Graph::path(4), Field::Rational).unwrap(), 1);
        assert_eq!(reg_cover(&Graph::star(4), Field::Rational).unwrap(), 3);
        assert!(reg_cover(&Graph::empty(3), Field::Rational).is_err());
        assert_eq!(i_number(&Graph::complete(5)).unwrap(), 1);
        assert_eq!(i_number(&Graph::cycle(4)).unwrap(), 2);
        assert_eq!(chordal_reg_cover(&Graph::star(4)).unwrap(), 3);
        assert!(chordal_reg_cover(&Graph::cycle(4)).is_err());
    }

    #[test]
    fn euler_characteristics() {
        let pts = SimplicialComplex::from_facets(3, vec![vs(&[0]), vs(&[1]), vs(&[2])]).unwrap();
        assert_eq!(euler_characteristic(&pts).unwrap(), BigInt::from(3));
        let two_edges = independence_complex(&Graph::cycle(4)).unwrap();
        assert_eq!(euler_characteristic(&two_edges).unwrap(), BigInt::from(2));
        assert_eq!(euler_characteristic(&SimplicialComplex::simplex(5)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("p:3".parse::<Field>().unwrap(), Field::Prime(3));
        assert!("p:4".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
    }
}
