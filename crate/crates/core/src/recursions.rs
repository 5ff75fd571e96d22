//! Recursions on forests and block graphs.
//!
//! All recursions run on vertex masks of the input graph, so traces and
//! splits are reported in the caller's labels.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::betti::i_number;
use crate::error::{Error, Result};
use crate::graph::{blocks, is_block_graph, is_forest, Graph, VertexSet};
use crate::indpoly::independence_polynomial;
use crate::poly::IntPoly;

fn fmt_set(s: VertexSet) -> String {
    let v: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

/// A pivot for the forest recursions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JkSplit {
    pub v: usize,
    /// Leaf neighbours `v_1, …, v_{n−1}`.
    pub leaves: Vec<usize>,
    /// `v_n`: the non-leaf neighbour, or the last leaf when all are leaves.
    pub last: usize,
    /// `F ∖ {v_1}`, used by the projective-dimension recursion.
    pub pdim_prime: VertexSet,
    /// `F ∖ {v, v_1, …, v_{n−1}}`, used by the `(α, M, c)` recursion.
    pub m_prime: VertexSet,
    /// `F ∖ N[v]`.
    pub double_prime: VertexSet,
}

/// Pivot inside the tree `comp` of forest `g` (restricted to `within`): the
/// deepest vertex of degree at least two with at most one non-leaf
/// neighbour, depth measured from the smallest vertex, ties to the smaller
/// label.
pub fn jk_pivot(g: &Graph, within: VertexSet, comp: VertexSet) -> Option<JkSplit> {
    let nb = |v: usize| g.neighbors(v) & within;
    let root = comp.first()?;
    let mut depth = HashMap::new();
    depth.insert(root, 0usize);
    let mut frontier = VertexSet::singleton(root);
    let mut seen = frontier;
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let next = g.neighborhood_of(frontier) & within & !seen;
        for v in next {
            depth.insert(v, d);
        }
        seen |= next;
        frontier = next;
    }
    let is_leaf = |u: usize| nb(u).len() == 1;
    let v = comp
        .iter()
        .filter(|&v| nb(v).len() >= 2 && nb(v).iter().filter(|&u| !is_leaf(u)).count() <= 1)
        .max_by_key(|&v| (depth[&v], std::cmp::Reverse(v)))?;
    let n = nb(v);
    let mut leaves: Vec<usize> = n.iter().filter(|&u| is_leaf(u)).collect();
    let last = match n.iter().find(|&u| !is_leaf(u)) {
        Some(u) => u,
        None => leaves.pop().expect("degree at least two"),
    };
    let lv: VertexSet = leaves.iter().copied().collect();
    Some(JkSplit {
        v,
        pdim_prime: within.without(leaves[0]),
        m_prime: within - lv.with(v),
        double_prime: within - g.closed_neighborhood(v),
        leaves,
        last,
    })
}

fn require_forest(g: &Graph) -> Result<()> {
    if !is_forest(g) {
        return Err(Error::Precondition("graph is not a forest".into()));
    }
    Ok(())
}

/// Projective dimension of `R/I(F)` for a forest, with an indented trace.
pub fn jk_pdim_traced(g: &Graph) -> Result<(usize, Vec<String>)> {
    require_forest(g)?;
    let mut memo = HashMap::new();
    let mut trace = Vec::new();
    let p = pdim_rec(g, g.vertices(), 0, &mut memo, &mut trace);
    Ok((p, trace))
}

pub fn jk_pdim(g: &Graph) -> Result<usize> {
    jk_pdim_traced(g).map(|r| r.0)
}

fn pdim_rec(
    g: &Graph,
    s: VertexSet,
    depth: usize,
    memo: &mut HashMap<u64, usize>,
    trace: &mut Vec<String>,
) -> usize {
    let pad = "  ".repeat(depth);
    // isolated vertices carry no generators
    let s = s - s.iter().filter(|&v| (g.neighbors(v) & s).is_empty()).collect::<VertexSet>();
    if let Some(&p) = memo.get(&s.0) {
        trace.push(format!("{pad}{} pdim {p} (memo)", fmt_set(s)));
        return p;
    }
    let p = if s.is_empty() {
        0
    } else {
        let comps = g.components_within(s);
        if comps.len() > 1 {
            trace.push(format!("{pad}{} splits into {} components", fmt_set(s), comps.len()));
            comps
                .into_iter()
                .map(|c| pdim_rec(g, c, depth + 1, memo, trace))
                .sum()
        } else if s.len() == 2 {
            1
        } else {
            let sp = jk_pivot(g, s, s).expect("trees on 3+ vertices have a pivot");
            let n = sp.leaves.len() + 1;
            trace.push(format!(
                "{pad}{} pivot v={} v_1={} n={n}",
                fmt_set(s),
                sp.v,
                sp.leaves[0]
            ));
            let a = pdim_rec(g, sp.pdim_prime, depth + 1, memo, trace);
            let b = pdim_rec(g, sp.double_prime, depth + 1, memo, trace) + n;
            a.max(b)
        }
    };
    trace.push(format!("{pad}{} pdim {p}", fmt_set(s)));
    memo.insert(s.0, p);
    p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaM {
    pub alpha: usize,
    pub m: usize,
    pub c: BigInt,
    /// Set when an equal-lead tie forced an exact polynomial computation.
    pub fallback: bool,
}

/// `(α, M, c)` of a forest by the local decomposition at a pivot.
pub fn jk_alpha_m_traced(g: &Graph) -> Result<(AlphaM, Vec<String>)> {
    require_forest(g)?;
    let mut trace = Vec::new();
    let r = am_rec(g, g.vertices(), 0, &mut trace);
    Ok((r, trace))
}

pub fn jk_alpha_m(g: &Graph) -> Result<AlphaM> {
    jk_alpha_m_traced(g).map(|r| r.0)
}

fn am_rec(g: &Graph, s: VertexSet, depth: usize, trace: &mut Vec<String>) -> AlphaM {
    let pad = "  ".repeat(depth);
    let iso: VertexSet = s.iter().filter(|&v| (g.neighbors(v) & s).is_empty()).collect();
    let core = s - iso;
    let mut acc = AlphaM {
        alpha: iso.len(),
        m: iso.len(),
        c: BigInt::from(1),
        fallback: false,
    };
    let comps = g.components_within(core);
    if !iso.is_empty() || comps.len() > 1 {
        trace.push(format!(
            "{pad}{}: {} isolated, {} components",
            fmt_set(s),
            iso.len(),
            comps.len()
        ));
    }
    for comp in comps {
        let r = am_tree(g, comp, depth + 1, trace);
        acc.alpha += r.alpha;
        acc.m += r.m;
        acc.c *= r.c;
        acc.fallback |= r.fallback;
    }
    acc
}

fn am_tree(g: &Graph, t: VertexSet, depth: usize, trace: &mut Vec<String>) -> AlphaM {
    let pad = "  ".repeat(depth);
    if t.len() == 2 {
        trace.push(format!("{pad}{}: edge (1, 0, -1)", fmt_set(t)));
        return AlphaM {
            alpha: 1,
            m: 0,
            c: BigInt::from(-1),
            fallback: false,
        };
    }
    let sp = jk_pivot(g, t, t).expect("trees on 3+ vertices have a pivot");
    let n = sp.leaves.len() + 1;
    trace.push(format!("{pad}{}: pivot v={} n={n}", fmt_set(t), sp.v));
    let a = am_rec(g, sp.m_prime, depth + 1, trace);
    let b = am_rec(g, sp.double_prime, depth + 1, trace);
    let r1 = n - 1 + a.m;
    let r2 = b.m;
    let alpha = (n - 1 + a.alpha).max(1 + b.alpha);
    let fallback = a.fallback || b.fallback;
    let out = if r1 < r2 {
        AlphaM { alpha, m: r1, c: a.c, fallback }
    } else if r2 < r1 {
        AlphaM { alpha, m: r2, c: -b.c, fallback }
    } else if a.c != b.c {
        AlphaM { alpha, m: r1, c: a.c - b.c, fallback }
    } else {
        // Equal leads only bound M from below; compute this subtree exactly.
        let sub = g.induced(t).expect("mask inside graph").graph;
        let (m, c) = independence_polynomial(&sub)
            .ord_at_minus1()
            .expect("nonzero");
        trace.push(format!("{pad}  tie r1=r2={r1} with equal leads: exact M={m}"));
        AlphaM { alpha, m, c, fallback: true }
    };
    trace.push(format!(
        "{pad}  r1={r1} r2={r2} -> (alpha, M, c) = ({}, {}, {})",
        out.alpha, out.m, out.c
    ));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafCliqueSplit {
    pub k: VertexSet,
    pub s: usize,
    pub c: VertexSet,
    pub r: usize,
    /// `G ∖ K`.
    pub h: VertexSet,
    /// `G ∖ N[s]`.
    pub l: VertexSet,
}

fn leaf_clique_within(g: &Graph, w: VertexSet) -> Option<LeafCliqueSplit> {
    let ind = g.induced(w).ok()?;
    let (bl, cuts) = blocks(&ind.graph);
    let lift = |s: VertexSet| -> VertexSet { s.iter().map(|v| ind.origin[v]).collect() };
    let mut leafs: Vec<VertexSet> = bl
        .into_iter()
        .filter(|b| (*b & cuts).len() == 1)
        .collect();
    leafs.sort();
    let b = *leafs.first()?;
    let s_local = (b & cuts).first()?;
    let k = lift(b);
    let s = ind.origin[s_local];
    Some(LeafCliqueSplit {
        k,
        s,
        c: k.without(s),
        r: k.len() - 1,
        h: w - k,
        l: w - g.closed_neighborhood(s),
    })
}

pub fn leaf_clique_decompose(g: &Graph) -> Result<LeafCliqueSplit> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if !is_block_graph(g) {
        return Err(Error::Precondition("graph is not a block graph".into()));
    }
    if g.is_clique(g.vertices()) {
        return Err(Error::Precondition("graph is a clique; nothing to split".into()));
    }
    Ok(leaf_clique_within(g, g.vertices()).expect("non-clique connected block graph has a leaf block"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub m: usize,
    pub i: usize,
    pub i_direct: usize,
    pub poly_identity: bool,
    pub satisfied: bool,
    /// `M − i + 1`, which is `reg − deg h` for the cover ideal.
    pub reg_minus_deg: i64,
    pub trace: Vec<String>,
}

/// Runs the leaf-clique recursion for `P_G` and `i(G)` and compares both
/// against direct computation.
pub fn block_check(g: &Graph) -> Result<BlockReport> {
    if !g.is_connected() || !is_block_graph(g) {
        return Err(Error::Precondition("need a connected block graph".into()));
    }
    let mut trace = Vec::new();
    let (p, i) = block_rec(g, g.vertices(), 0, &mut trace);
    let direct = independence_polynomial(g);
    let (m, _) = direct.ord_at_minus1()?;
    let i_direct = i_number(g)?;
    Ok(BlockReport {
        m,
        i,
        i_direct,
        poly_identity: p == direct,
        satisfied: m <= i,
        reg_minus_deg: m as i64 - i as i64 + 1,
        trace,
    })
}

fn block_rec(g: &Graph, w: VertexSet, depth: usize, trace: &mut Vec<String>) -> (IntPoly, usize) {
    let pad = "  ".repeat(depth);
    if w.is_empty() {
        return (IntPoly::one(), 0);
    }
    let comps = g.components_within(w);
    if comps.len() > 1 {
        return comps.into_iter().fold((IntPoly::one(), 0), |(p, i), c| {
            let (q, j) = block_rec(g, c, depth, trace);
            (&p * &q, i + j)
        });
    }
    if g.is_clique(w) {
        trace.push(format!("{pad}{}: clique", fmt_set(w)));
        return (IntPoly::from_i64(&[1, w.len() as i64]), 1);
    }
    let sp = leaf_clique_within(g, w).expect("block graph component");
    trace.push(format!(
        "{pad}{}: leaf clique K={} s={} r={}",
        fmt_set(w),
        fmt_set(sp.k),
        sp.s,
        sp.r
    ));
    let (ph, ih) = block_rec(g, sp.h, depth + 1, trace);
    let (pl, il) = block_rec(g, sp.l, depth + 1, trace);
    let p = &(&IntPoly::from_i64(&[1, sp.r as i64]) * &ph) + &pl.shift_up(1);
    (p, 1 + ih.min(il))
}

/// `true` when the `(α, M, c)` triple matches `P_F` directly.
pub fn alpha_m_matches_direct(g: &Graph, r: &AlphaM) -> bool {
    let p = independence_polynomial(g);
    let (m, c) = p.ord_at_minus1().expect("nonzero");
    !c.is_zero() && p.degree() == Some(r.alpha) && m == r.m && c == r.c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pdim_examples() {
        assert_eq!(jk_pdim(&Graph::path(4)).unwrap(), 2);
        for b in 1..7 {
            assert_eq!(jk_pdim(&Graph::star(b)).unwrap(), b);
        }
        // centre 0, leaves 1,2, branches 3-5 and 4-6
        let t = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6)]).unwrap();
        assert_eq!(jk_pdim(&t).unwrap(), 4);
        assert!(jk_pdim(&Graph::cycle(4)).is_err());
        assert_eq!(jk_pdim(&Graph::empty(3)).unwrap(), 0);
        let (_, trace) = jk_pdim_traced(&Graph::path(5)).unwrap();
        assert!(trace.iter().any(|l| l.contains("pivot")));
    }

    #[test]
    fn alpha_m_examples() {
        let r = jk_alpha_m(&Graph::path(4)).unwrap();
        assert_eq!((r.alpha, r.m, r.c.clone()), (2, 1, BigInt::from(-2)));
        let r = jk_alpha_m(&Graph::path(5)).unwrap();
        assert_eq!((r.alpha, r.m, r.c.clone()), (3, 0, BigInt::from(1)));
        let r = jk_alpha_m(&Graph::complete(2)).unwrap();
        assert_eq!((r.alpha, r.m, r.c.clone()), (1, 0, BigInt::from(-1)));
        let g = Graph::path(3).disjoint_union(&Graph::empty(2));
        let r = jk_alpha_m(&g).unwrap();
        assert!(alpha_m_matches_direct(&g, &r));
    }

    #[test]
    fn leaf_cliques() {
        let sp = leaf_clique_decompose(&Graph::path(4)).unwrap();
        assert_eq!(sp.k.len(), 2);
        assert!(sp.s == 1 || sp.s == 2);
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let sp = leaf_clique_decompose(&bowtie).unwrap();
        assert_eq!((sp.s, sp.r), (2, 2));
        assert!(leaf_clique_decompose(&Graph::complete(4)).is_err());
    }

    #[test]
    fn block_reports() {
        for p in 2..6 {
            let r = block_check(&Graph::complete(p)).unwrap();
            assert_eq!((r.m, r.i), (0, 1));
            assert!(r.satisfied);
        }
        let r = block_check(&Graph::path(4)).unwrap();
        assert_eq!((r.m, r.i, r.i_direct), (1, 2, 2));
        assert!(r.poly_identity && r.satisfied);
    }
}
