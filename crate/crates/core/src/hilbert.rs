//! Hilbert functions and h-polynomials of `R/I(G)`, `R/J(G)` and of the
//! Alexander dual of a hypergraph edge ideal.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::indpoly::{d_coeff, e_coeff, InvariantBundle};
use crate::poly::{binom, IntPoly};

/// Brute-force subset scans stop here.
pub const SUBSET_SCAN_MAX: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertProfile {
    pub dim: usize,
    pub h: IntPoly,
    pub deg_h: usize,
    pub a_invariant: i64,
}

impl HilbertProfile {
    fn new(dim: usize, h: IntPoly) -> Self {
        let deg_h = h.degree().expect("h-polynomials are nonzero");
        HilbertProfile {
            dim,
            h,
            deg_h,
            a_invariant: deg_h as i64 - dim as i64,
        }
    }
}

/// `h_{R/I(G)} = Σ g_i t^i (1 − t)^{α − i}`.
pub fn h_edge_fvector(b: &InvariantBundle) -> IntPoly {
    (0..=b.alpha).fold(IntPoly::zero(), |acc, i| {
        let term = IntPoly::one_minus_t_pow(b.alpha - i).shift_up(i).scale(&b.g(i));
        &acc + &term
    })
}

/// `P(−1)(1 − t)^α + Σ_s D_s (1 − t)^{α − s − 1}`.
pub fn h_edge_ds(b: &InvariantBundle) -> IntPoly {
    let mut h = IntPoly::one_minus_t_pow(b.alpha).scale(&b.poly.eval_i64(-1));
    for s in 0..b.alpha {
        let d = d_coeff(b, s).expect("s in range");
        h = &h + &IntPoly::one_minus_t_pow(b.alpha - s - 1).scale(&d);
    }
    h
}

pub fn h_edge(b: &InvariantBundle) -> HilbertProfile {
    HilbertProfile::new(b.alpha, h_edge_fvector(b))
}

/// Closed-form Hilbert function of `R/J(G)` in degree `d ≥ 1`.
pub fn hf_cover(n: usize, gvec: &[BigInt], d: i64) -> Result<BigInt> {
    if d < 1 {
        return Err(Error::Precondition(format!(
            "closed form needs d >= 1 (got {d}); HF(0) = 1"
        )));
    }
    if gvec.len() > n {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let n = n as i64;
    let mut v = binom(n + d - 1, n - 1) - binom(d - 1, n - 2) * n - binom(d - 1, n - 1);
    for j in 2..n {
        if let Some(g) = gvec.get(j as usize) {
            v -= g * binom(d - 1, n - j - 1);
        }
    }
    Ok(v)
}

/// Hilbert function of `R/J(G)` by a scan over standard-monomial supports.
pub fn hf_cover_oracle(g: &Graph, d: i64) -> Result<BigInt> {
    hf_dual_oracle(&Hypergraph::from_graph(g)?, d)
}

/// `h_{R/J(G)}`, assembled from the two sums with the `E` coefficients.
pub fn h_cover(b: &InvariantBundle) -> Result<HilbertProfile> {
    if !b.has_edge() {
        return Err(Error::Precondition(
            "cover ideal h-polynomial needs at least one edge".into(),
        ));
    }
    let (n, alpha) = (b.n, b.alpha);
    let mut h = IntPoly::zero();
    for k in 0..n - alpha {
        h = &h + &IntPoly::monomial(k as i64 + 1, k);
    }
    for s in -1..=(alpha as i64 - 3) {
        let e = e_coeff(b, s)?;
        h = &h + &IntPoly::monomial(e, (n as i64 - s - 3) as usize);
    }
    Ok(HilbertProfile::new(n - 2, h))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "d")]
pub enum DegreeCase {
    /// `g(G) ≠ 1`: top degree `n − 2`.
    Max,
    /// Every `E` vanishes: degree `n − α − 1`.
    Floor,
    /// First nonzero `E_{d+3}` sets the degree to `n − d − 3`.
    Intermediate(i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub deg_h_edge: usize,
    pub deg_h_cover: usize,
    pub case: DegreeCase,
}

pub fn degree_report(b: &InvariantBundle) -> Result<DegreeReport> {
    let prof = h_cover(b)?;
    let (n, alpha) = (b.n as i64, b.alpha as i64);
    let first = (-1..=alpha - 3).find(|&s| !e_coeff(b, s).expect("in range").is_zero());
    let case = if b.g_g != BigInt::one() {
        DegreeCase::Max
    } else {
        first.map_or(DegreeCase::Floor, DegreeCase::Intermediate)
    };
    let by_case = match first {
        Some(d) => n - d - 3,
        None => n - alpha - 1,
    };
    let by_m = n - 2 - b.m as i64;
    if by_case != by_m || prof.deg_h as i64 != by_m {
        return Err(Error::Precondition(format!(
            "degree mismatch: E-coefficients give {by_case}, n-2-M gives {by_m}, h has {}",
            prof.deg_h
        )));
    }
    Ok(DegreeReport {
        deg_h_edge: b.alpha - b.m,
        deg_h_cover: prof.deg_h,
        case,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Drops duplicate and non-minimal edges.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        if n > SUBSET_SCAN_MAX {
            return Err(Error::Guard {
                what: "hypergraph vertices",
                limit: SUBSET_SCAN_MAX,
                actual: n,
            });
        }
        let all = VertexSet::full(n);
        for e in &edges {
            if e.is_empty() {
                return Err(Error::Precondition("empty hyperedge".into()));
            }
            if !e.is_subset(all) {
                return Err(Error::VertexOutOfRange {
                    v: (*e - all).first().unwrap_or(0),
                    n,
                });
            }
        }
        let mut kept: Vec<VertexSet> = Vec::new();
        let mut sorted = edges;
        sorted.sort_by_key(|e| (e.len(), e.0));
        sorted.dedup();
        for e in sorted {
            if !kept.iter().any(|k| k.is_subset(e)) {
                kept.push(e);
            }
        }
        Ok(Hypergraph { n, edges: kept })
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        Self::new(
            g.n(),
            g.edges()
                .map(|(u, v)| VertexSet::singleton(u).with(v))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(|e| e.len()).min()
    }

    pub fn contains_edge(&self, w: VertexSet) -> bool {
        self.edges.iter().any(|e| e.is_subset(w))
    }

    /// `g_i` = number of `i`-subsets containing no edge.
    pub fn gvec(&self) -> Vec<BigInt> {
        let mut g = vec![0u64; self.n + 1];
        for w in 0..1u64 << self.n {
            let w = VertexSet(w);
            if !self.contains_edge(w) {
                g[w.len()] += 1;
            }
        }
        while g.last() == Some(&0) {
            g.pop();
        }
        g.into_iter().map(BigInt::from).collect()
    }
}

/// Hilbert function of `R/I(ℋ)^∨`: faces of the dual complex are the `F`
/// whose complement contains an edge.
pub fn hf_dual_oracle(h: &Hypergraph, d: i64) -> Result<BigInt> {
    if d < 0 {
        return Ok(BigInt::zero());
    }
    if d == 0 {
        return Ok(BigInt::one());
    }
    let all = VertexSet::full(h.n);
    let mut by_size = vec![0u64; h.n + 1];
    for f in 0..1u64 << h.n {
        let f = VertexSet(f);
        if h.contains_edge(all - f) {
            by_size[f.len()] += 1;
        }
    }
    Ok(by_size
        .iter()
        .enumerate()
        .map(|(k, &c)| binom(d - 1, k as i64 - 1) * c)
        .sum())
}

/// h-polynomial of `R/I(ℋ)^∨` in closed form; `dim = n − δ`.
pub fn h_dual_hypergraph(h: &Hypergraph) -> Result<HilbertProfile> {
    let delta = h
        .min_edge_size()
        .ok_or_else(|| Error::Precondition("hypergraph has no edges".into()))? as i64;
    let gv = h.gvec();
    let n = h.n as i64;
    let alpha = gv.len() as i64 - 1;
    let g = |j: i64| gv.get(j as usize).cloned().unwrap_or_default();
    let mut c = Vec::new();
    for k in 0..=(n - delta) {
        let mut v = binom(k + delta - 1, delta - 1);
        if k >= n - alpha {
            for j in (n - k)..=alpha {
                let t = binom(j - delta, k - n + j) * g(j);
                if (k - n + j) % 2 == 0 {
                    v -= t;
                } else {
                    v += t;
                }
            }
        }
        c.push(v);
    }
    Ok(HilbertProfile::new((n - delta) as usize, IntPoly::new(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indpoly::bundle;
    use crate::poly::series_h_extract;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn edge_h_polynomials() {
        for (g, want) in [
            (Graph::path(4), p(&[1, 2])),
            (Graph::complete(3), p(&[1, 2])),
            (Graph::empty(3), p(&[1])),
            (Graph::empty(2), p(&[1])),
        ] {
            let b = bundle(&g);
            assert_eq!(h_edge_fvector(&b), want, "{g:?}");
            assert_eq!(h_edge_ds(&b), want, "{g:?}");
        }
    }

    #[test]
    fn cover_hilbert_function() {
        let c3 = Graph::complete(3);
        let b = bundle(&c3);
        assert_eq!(hf_cover(3, &b.gvec, 1).unwrap(), BigInt::from(3));
        assert_eq!(hf_cover(3, &b.gvec, 2).unwrap(), BigInt::from(3));
        assert_eq!(hf_cover_oracle(&c3, 2).unwrap(), BigInt::from(3));
        assert_eq!(hf_cover_oracle(&c3, 1).unwrap(), BigInt::from(3));
        let p4 = bundle(&Graph::path(4));
        assert_eq!(hf_cover(4, &p4.gvec, 1).unwrap(), BigInt::from(4));
        // R/J(K_2) = k: nothing survives in positive degree.
        let k2 = Graph::complete(2);
        assert_eq!(hf_cover_oracle(&k2, 3).unwrap(), BigInt::from(0));
        assert_eq!(hf_cover(2, &bundle(&k2).gvec, 3).unwrap(), BigInt::from(0));
        assert!(hf_cover(3, &b.gvec, 0).is_err());
    }

    #[test]
    fn cover_h_polynomials() {
        let prof = h_cover(&bundle(&Graph::complete(3))).unwrap();
        assert_eq!((prof.h.clone(), prof.deg_h, prof.a_invariant), (p(&[1, 2]), 1, 0));
        let prof = h_cover(&bundle(&Graph::path(4))).unwrap();
        assert_eq!((prof.h.clone(), prof.deg_h, prof.a_invariant), (p(&[1, 2]), 1, -1));
        let prof = h_cover(&bundle(&Graph::complete(2))).unwrap();
        assert_eq!((prof.h.clone(), prof.dim), (p(&[1]), 0));
        assert!(h_cover(&bundle(&Graph::empty(3))).is_err());
    }

    #[test]
    fn dual_hypergraph() {
        let h = Hypergraph::new(3, vec![VertexSet(0b111)]).unwrap();
        let prof = h_dual_hypergraph(&h).unwrap();
        assert_eq!((prof.h, prof.dim), (p(&[1]), 0));

        let h = Hypergraph::from_graph(&Graph::complete(3)).unwrap();
        assert_eq!(h_dual_hypergraph(&h).unwrap().h, p(&[1, 2]));

        let h = Hypergraph::new(3, vec![VertexSet(0b011), VertexSet(0b100)]).unwrap();
        let prof = h_dual_hypergraph(&h).unwrap();
        assert_eq!((prof.h.clone(), prof.dim), (p(&[1, 1, -1]), 2));
        let hf: Vec<BigInt> = (0..10).map(|d| hf_dual_oracle(&h, d).unwrap()).collect();
        assert_eq!(series_h_extract(&hf, 2).unwrap(), prof.h);

        let h = Hypergraph::new(3, vec![VertexSet(0b011), VertexSet(0b111)]).unwrap();
        assert_eq!(h.edges(), &[VertexSet(0b011)]);
    }

    #[test]
    fn degree_reports() {
        let r = degree_report(&bundle(&Graph::complete(3))).unwrap();
        assert_eq!((r.deg_h_cover, r.case), (1, DegreeCase::Max));
        let r = degree_report(&bundle(&Graph::path(4))).unwrap();
        assert_eq!(r.deg_h_cover, 1);
        assert_ne!(r.case, DegreeCase::Max);
        let r = degree_report(&bundle(&Graph::star(3))).unwrap();
        assert_eq!((r.deg_h_cover, r.case), (2, DegreeCase::Max));
    }
}
