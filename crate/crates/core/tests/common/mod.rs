//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's own algorithms; graphs are read through adjacency only.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::io::{BufRead, BufReader};
use std::path::Path;

use coverdeg::graph::{canonical_form, decode_adjacency, from_graph6};
use coverdeg::{Graph, VertexSet};

pub fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u).contains(v)
}

pub fn independent(g: &Graph, s: u64) -> bool {
    (0..g.n()).all(|u| s >> u & 1 == 0 || (u + 1..g.n()).all(|v| s >> v & 1 == 0 || !adjacent(g, u, v)))
}

/// Counts of independent sets by size, from a scan of all subsets.
pub fn gvec(g: &Graph) -> Vec<i128> {
    let mut c = vec![0i128; g.n() + 1];
    for s in 0..1u64 << g.n() {
        if independent(g, s) {
            c[s.count_ones() as usize] += 1;
        }
    }
    while c.len() > 1 && *c.last().unwrap() == 0 {
        c.pop();
    }
    c
}

pub fn alpha(g: &Graph) -> usize {
    gvec(g).len() - 1
}

/// Multiplicity of −1 as a root, by repeated synthetic division.
pub fn mult_minus_one(p: &[i128]) -> usize {
    ord_minus_one(p).0
}

/// `(k, q(−1))` where `p = (x + 1)^k q` and `q(−1) ≠ 0`; `q(−1)` is also
/// the lowest coefficient of `p(u − 1)`.
pub fn ord_minus_one(p: &[i128]) -> (usize, i128) {
    let mut p = p.to_vec();
    let mut k = 0;
    loop {
        let val: i128 = p.iter().rev().fold(0, |acc, &c| -acc + c);
        if val != 0 || p.len() <= 1 {
            return (k, val);
        }
        // divide by (x + 1)
        let deg = p.len() - 1;
        let mut q = vec![0i128; deg];
        q[deg - 1] = p[deg];
        for i in (1..deg).rev() {
            q[i - 1] = p[i] - q[i];
        }
        p = q;
        k += 1;
    }
}

/// Smallest maximal independent set, by subset scan.
pub fn i_number(g: &Graph) -> usize {
    let n = g.n();
    (0..1u64 << n)
        .filter(|&s| independent(g, s))
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || !independent(g, s | 1 << v)))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn binom(n: i128, k: i128) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut r = 1i128;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of degree-`d` monomials outside the cover ideal: a monomial lies
/// in `J(G)` exactly when its support covers every edge.
pub fn hf_cover(g: &Graph, d: i128) -> i128 {
    if d == 0 {
        return 1;
    }
    let n = g.n();
    let mut total = 0;
    for s in 0..1u64 << n {
        let covers = g.edges().all(|(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1);
        if !covers {
            total += binom(d - 1, s.count_ones() as i128 - 1);
        }
    }
    total
}

/// Same count by listing every monomial; only for tiny cases.
pub fn hf_cover_by_monomials(g: &Graph, d: usize) -> i128 {
    fn rec(g: &Graph, v: usize, left: usize, support: u64, acc: &mut i128) {
        if v == g.n() {
            if left == 0 && !g.edges().all(|(a, b)| support >> a & 1 == 1 || support >> b & 1 == 1) {
                *acc += 1;
            }
            return;
        }
        for e in 0..=left {
            let s = if e > 0 { support | 1 << v } else { support };
            rec(g, v + 1, left - e, s, acc);
        }
    }
    let mut acc = 0;
    rec(g, 0, d, 0, &mut acc);
    acc
}

/// Hilbert function of `R/I(G)`: monomials with independent support.
pub fn hf_edge(g: &Graph, d: i128) -> i128 {
    gvec(g)
        .iter()
        .enumerate()
        .map(|(k, &c)| if d == 0 { i128::from(k == 0) } else { c * binom(d - 1, k as i128 - 1) })
        .sum()
}

/// Numerator of `Σ hf[d] t^d` over `(1 − t)^dim`, trimmed; panics unless
/// the truncated product really is a polynomial.
pub fn series_numerator(hf: &[i128], dim: usize) -> Vec<i128> {
    let mut f = vec![0i128; dim + 1];
    for (k, c) in f.iter_mut().enumerate() {
        *c = binom(dim as i128, k as i128) * if k % 2 == 0 { 1 } else { -1 };
    }
    let top = hf.len();
    let mut prod = vec![0i128; top];
    for i in 0..top {
        for j in 0..=dim {
            if i + j < top {
                prod[i + j] += hf[i] * f[j];
            }
        }
    }
    assert!(prod[top - dim - 1..].iter().all(|&c| c == 0), "series not rational");
    while prod.len() > 1 && *prod.last().unwrap() == 0 {
        prod.pop();
    }
    prod
}

pub fn to_i128(p: &coverdeg::IntPoly) -> Vec<i128> {
    p.coeffs().iter().map(|c| i128::try_from(c).unwrap()).collect()
}

/// All graphs on `n` vertices up to isomorphism: every graph arises from one
/// on `n − 1` vertices by adding a vertex.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = BTreeSet::new();
        for g in &level {
            for s in 0..1u64 << (k - 1) {
                let mut h = g.clone();
                h.add_vertex(VertexSet(s));
                seen.insert(canonical_form(&h).unwrap());
            }
        }
        level = seen.into_iter().map(|c| decode_adjacency(k, c)).collect();
    }
    level
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn read_g6(name: &str) -> Vec<Graph> {
    let path = data_path(name);
    let file = std::fs::File::open(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let reader: Box<dyn BufRead> = if name.ends_with(".gz") {
        Box::new(BufReader::new(flate2::read::GzDecoder::new(file)))
    } else {
        Box::new(BufReader::new(file))
    };
    reader
        .lines()
        .map(|l| from_graph6(l.unwrap().trim()).unwrap())
        .collect()
}
