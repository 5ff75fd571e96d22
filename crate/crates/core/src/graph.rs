//! Simple graphs on at most 64 vertices.
//!
//! Vertex subsets are single machine words, which keeps the exponential
//! algorithms elsewhere in the crate cheap to memoize.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Largest `n` accepted by [`canonical_form`].
pub const CANON_MAX: usize = 9;

/// Largest `n` served by [`enumerate_connected`].
pub const ENUM_MAX: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;
    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

macro_rules! set_op {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $e:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            fn $m(self, rhs: VertexSet) -> VertexSet {
                let f: fn(u64, u64) -> u64 = $e;
                VertexSet(f(self.0, rhs.0))
            }
        }
        impl $atr for VertexSet {
            fn $am(&mut self, rhs: VertexSet) {
                *self = $tr::$m(*self, rhs);
            }
        }
    };
}

set_op!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| a | b);
set_op!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| a & b);
set_op!(Sub, sub, SubAssign, sub_assign, |a, b| a & !b);

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the original label of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    pub origin: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n > 64`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds the cap");
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// # Panics
    /// On a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Appends a vertex adjacent to `nbrs` and returns its label.
    pub fn add_vertex(&mut self, nbrs: VertexSet) -> usize {
        assert!(self.n < MAX_VERTICES, "vertex cap reached");
        assert!(nbrs.is_subset(self.vertices()));
        let v = self.n;
        self.n += 1;
        self.adj.push(nbrs);
        for u in nbrs {
            self.adj[u].insert(v);
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| {
            (self.adj[v] & VertexSet::full(v))
                .iter()
                .map(move |u| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (self.adj[v] & s).is_empty())
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    /// Union of open neighbourhoods of `s`.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    pub fn induced(&self, w: VertexSet) -> Result<Induced> {
        if !w.is_subset(self.vertices()) {
            let v = (w - self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let origin: Vec<usize> = w.iter().collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in origin.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::empty(origin.len());
        for (i, &v) in origin.iter().enumerate() {
            g.adj[i] = (self.adj[v] & w).iter().map(|u| pos[u]).collect();
        }
        Ok(Induced { graph: g, origin })
    }

    /// Induced subgraph on the complement of `s`, relabelled in order.
    pub fn remove(&self, s: VertexSet) -> Graph {
        self.induced(self.vertices() - s)
            .expect("complement lies inside the vertex set")
            .graph
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        let off = self.n;
        for v in 0..other.n {
            g.add_vertex(VertexSet(other.adj[v].0 << off) & g.vertices());
        }
        g
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let mut comp = VertexSet::singleton(s);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = (self.neighborhood_of(frontier) & within) - comp;
                comp |= next;
                frontier = next;
            }
            left -= comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.components().len() == 1
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let all = self.vertices();
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        let mut e = 0;
        loop {
            let next = self.neighborhood_of(frontier) - seen;
            if next.is_empty() {
                break;
            }
            seen |= next;
            frontier = next;
            e += 1;
        }
        (seen == all).then_some(e)
    }

    pub fn radius(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .collect::<Option<Vec<_>>>()
            .and_then(|e| e.into_iter().min())
    }

    /// Relabel: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = g.vertices().without(v);
        }
        g
    }

    /// `K_{1,r}` with centre 0.
    pub fn star(r: usize) -> Graph {
        let mut g = Graph::empty(r + 1);
        for v in 1..=r {
            g.add_edge(0, v);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}: ", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

// ---------------------------------------------------------------------------
// graph6

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n;
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

pub fn from_graph6(line: &str) -> Result<Graph> {
    let err = |offset: usize, msg: &str| Error::Graph6 {
        offset,
        msg: msg.to_string(),
    };
    let raw = line.trim_end_matches(['\n', '\r']);
    let (skip, bytes) = match raw.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, raw.as_bytes()),
    };
    if let Some(p) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(skip + p, "byte outside the graph6 range 63..=126"));
    }
    if bytes.is_empty() {
        return Err(err(skip, "empty line"));
    }
    let (n, mut pos) = if bytes[0] != b'~' {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(err(skip + bytes.len(), "truncated extended header"));
        }
        if bytes[1] == b'~' {
            return Err(err(skip + 1, "8-byte header exceeds the 64-vertex cap"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(err(skip + 1, "extended header used for n <= 62"));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(err(skip, &format!("{n} vertices exceeds the 64-vertex cap")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < want {
        return Err(err(skip + bytes.len(), "truncated adjacency data"));
    }
    if body.len() > want {
        return Err(err(skip + pos + want, "trailing bytes after adjacency data"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if b >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[want - 1] - 63;
        if last & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
            pos += want - 1;
            return Err(err(skip + pos, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses `"n: u-v,u-v,..."`.
pub fn from_edge_list_str(s: &str) -> Result<Graph> {
    let bad = |m: String| Error::EdgeList(m);
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| bad(format!("missing ':' in {s:?}")))?;
    let n: usize = head
        .trim()
        .parse()
        .map_err(|_| bad(format!("bad vertex count {:?}", head.trim())))?;
    let mut edges = Vec::new();
    for tok in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (a, b) = tok
            .split_once('-')
            .ok_or_else(|| bad(format!("bad edge token {tok:?}")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| bad(format!("bad edge token {tok:?}")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    Graph::from_edges(n, &edges)
}

pub fn to_edge_list_str(g: &Graph) -> String {
    let e: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{}:{}", g.n, e.join(","))
}

// ---------------------------------------------------------------------------
// classification

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    /// `|N(c) ∩ I|` for each clique vertex, in increasing vertex order.
    pub fn i_degrees(&self, g: &Graph) -> Vec<usize> {
        self.clique
            .iter()
            .map(|c| (g.neighbors(c) & self.independent).len())
            .collect()
    }

    pub fn delta_max(&self, g: &Graph) -> usize {
        self.i_degrees(g).into_iter().max().unwrap_or(0)
    }

    pub fn delta_min(&self, g: &Graph) -> usize {
        self.i_degrees(g).into_iter().min().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub connected: bool,
    pub forest: bool,
    pub chordal: bool,
    pub split: Option<SplitPartition>,
    /// `Δ_I + |C|`, which does not depend on the chosen split partition.
    pub split_invariant: Option<usize>,
    pub block_graph: bool,
    pub radius: Option<usize>,
    pub max_degree: usize,
}

pub fn classify(g: &Graph) -> Classification {
    let split = split_partition(g);
    let split_invariant = split
        .as_ref()
        .map(|p| p.delta_max(g) + p.clique.len());
    Classification {
        connected: g.is_connected(),
        forest: is_forest(g),
        chordal: is_chordal(g),
        split,
        split_invariant,
        block_graph: is_block_graph(g),
        radius: g.radius(),
        max_degree: g.max_degree(),
    }
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n
}

/// Maximum cardinality search; returns the visiting order.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let mut weight = vec![0usize; g.n];
    let mut left = g.vertices();
    let mut order = Vec::with_capacity(g.n);
    while !left.is_empty() {
        let v = left
            .iter()
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("nonempty");
        order.push(v);
        left.remove(v);
        for u in g.neighbors(v) & left {
            weight[u] += 1;
        }
    }
    order
}

/// Reverse MCS order is a perfect elimination ordering iff `g` is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let order = mcs_order(g);
    let mut pos = vec![0; g.n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut before = VertexSet::EMPTY;
    for &v in &order {
        let earlier = g.neighbors(v) & before;
        if let Some(f) = earlier.iter().max_by_key(|&u| pos[u]) {
            if !earlier.without(f).is_subset(g.neighbors(f)) {
                return false;
            }
        }
        before.insert(v);
    }
    true
}

/// Hammer–Simeone: with degrees `d_1 ≥ … ≥ d_n` and `m = max{i : d_i ≥ i−1}`,
/// the graph is split iff `Σ_{i≤m} d_i = m(m−1) + Σ_{i>m} d_i`; the top `m`
/// vertices then form a maximum clique whose complement is independent.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let mut vs: Vec<usize> = (0..g.n).collect();
    vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = vs.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=g.n).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let top: usize = d[..m].iter().sum();
    let bottom: usize = d[m..].iter().sum();
    if top != m * m.saturating_sub(1) + bottom {
        return None;
    }
    let clique: VertexSet = vs[..m].iter().copied().collect();
    let independent = g.vertices() - clique;
    debug_assert!(g.is_clique(clique) && g.is_independent(independent));
    Some(SplitPartition {
        clique,
        independent,
    })
}

/// Biconnected components (as vertex sets) and cut vertices. Isolated
/// vertices are reported as singleton blocks.
pub fn blocks(g: &Graph) -> (Vec<VertexSet>, VertexSet) {
    struct St<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<VertexSet>,
        cuts: VertexSet,
    }
    fn dfs(st: &mut St, v: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[v] = st.time;
        st.low[v] = st.time;
        let mut children = 0;
        for u in st.g.neighbors(v) {
            if st.disc[u] == 0 {
                children += 1;
                st.stack.push((v, u));
                dfs(st, u, Some(v));
                st.low[v] = st.low[v].min(st.low[u]);
                if st.low[u] >= st.disc[v] {
                    if parent.is_some() || children > 1 {
                        st.cuts.insert(v);
                    }
                    let mut b = VertexSet::EMPTY;
                    while let Some((a, c)) = st.stack.pop() {
                        b.insert(a);
                        b.insert(c);
                        if (a, c) == (v, u) {
                            break;
                        }
                    }
                    st.blocks.push(b);
                }
            } else if Some(u) != parent && st.disc[u] < st.disc[v] {
                st.stack.push((v, u));
                st.low[v] = st.low[v].min(st.disc[u]);
            }
        }
    }
    let mut st = St {
        g,
        disc: vec![0; g.n],
        low: vec![0; g.n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..g.n {
        if st.disc[v] == 0 {
            if g.neighbors(v).is_empty() {
                st.blocks.push(VertexSet::singleton(v));
                st.disc[v] = usize::MAX;
            } else {
                dfs(&mut st, v, None);
            }
        }
    }
    (st.blocks, st.cuts)
}

pub fn is_block_graph(g: &Graph) -> bool {
    blocks(g).0.into_iter().all(|b| g.is_clique(b))
}

// ---------------------------------------------------------------------------
// canonical form and enumeration

fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

/// Adjacency code of `g` under relabelling `perm`.
pub fn adjacency_code(g: &Graph, perm: &[usize]) -> u64 {
    g.edges()
        .fold(0u64, |c, (u, v)| c | 1u64 << pair_index(perm[u], perm[v]))
}

pub fn decode_adjacency(n: usize, code: u64) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Minimum adjacency code over all relabellings that list vertices in
/// nondecreasing degree order. Isomorphisms preserve degrees, so this is a
/// complete invariant while touching far fewer than `n!` permutations.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    if g.n > CANON_MAX {
        return Err(Error::Unsupported(format!(
            "canonical form is limited to n <= {CANON_MAX}"
        )));
    }
    let mut by_deg: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n {
        by_deg.entry(g.degree(v)).or_default().push(v);
    }
    let classes: Vec<Vec<usize>> = by_deg.into_values().collect();
    let perms: Vec<Vec<Vec<usize>>> = classes.iter().map(|c| permutations(c)).collect();
    let mut idx = vec![0usize; classes.len()];
    let mut perm = vec![0usize; g.n];
    let mut best = u64::MAX;
    loop {
        let mut label = 0;
        for (k, p) in perms.iter().enumerate() {
            for &v in &p[idx[k]] {
                perm[v] = label;
                label += 1;
            }
        }
        best = best.min(adjacency_code(g, &perm));
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(best);
            }
            idx[k] += 1;
            if idx[k] < perms[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n > ENUM_MAX {
        return Err(Error::Unsupported(format!(
            "built-in enumeration stops at n = {ENUM_MAX}; supply larger censuses as graph6"
        )));
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen: BTreeMap<u64, ()> = BTreeMap::new();
        for g in &level {
            for s in 1..1u64 << (k - 1) {
                let mut h = g.clone();
                h.add_vertex(VertexSet(s));
                seen.insert(canonical_form(&h)?, ());
            }
        }
        level = seen.into_keys().map(|c| decode_adjacency(k, c)).collect();
    }
    Ok(level)
}

/// One representative per isomorphism class of trees on `n` vertices,
/// grown leaf by leaf.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if n > CANON_MAX {
        return Err(Error::Unsupported(format!(
            "tree enumeration stops at n = {CANON_MAX}"
        )));
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen: BTreeMap<u64, ()> = BTreeMap::new();
        for g in &level {
            for v in 0..k - 1 {
                let mut h = g.clone();
                h.add_vertex(VertexSet::singleton(v));
                seen.insert(canonical_form(&h)?, ());
            }
        }
        level = seen.into_keys().map(|c| decode_adjacency(k, c)).collect();
    }
    Ok(level)
}

/// `G(n, p)`: each pair joined independently with probability `p`.
pub fn random_gnp<R: rand::Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random forest: each new vertex hangs off a uniformly chosen earlier
/// vertex, or starts a new tree with probability `p_root`.
pub fn random_forest<R: rand::Rng + ?Sized>(n: usize, p_root: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        if !rng.gen_bool(p_root) {
            g.add_edge(rng.gen_range(0..v), v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        assert_eq!(from_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        let p4 = Graph::path(4);
        assert_eq!(from_graph6(&to_graph6(&p4)).unwrap(), p4);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match from_graph6("C") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(from_graph6("C~~"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(from_graph6("C\x20"), Err(Error::Graph6 { offset: 1, .. })));
        // P_3 is "Bg"; "Bh" sets a padding bit.
        assert!(from_graph6("Bg").is_ok());
        assert!(matches!(from_graph6("Bh"), Err(Error::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn graph6_extended_header() {
        let g = Graph::cycle(64);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
        assert_eq!(from_graph6(&to_graph6(&Graph::path(63))).unwrap(), Graph::path(63));
    }

    #[test]
    fn edge_lists() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            Graph::complete(3)
        );
        assert_eq!(from_edge_list_str("4: 0-1, 1-2,2-3").unwrap(), Graph::path(4));
        assert!(matches!(Graph::from_edges(2, &[(0, 0)]), Err(Error::Loop(0))));
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(from_edge_list_str("3 0-1").is_err());
        assert_eq!(from_edge_list_str("3:").unwrap(), Graph::empty(3));
    }

    #[test]
    fn induced_subgraphs() {
        let p5 = Graph::path(5);
        let two_k2 = p5.induced(VertexSet::full(5).without(2)).unwrap();
        assert_eq!(two_k2.graph, Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(two_k2.origin, vec![0, 1, 3, 4]);
        assert_eq!(p5.induced(p5.vertices()).unwrap().graph, p5);
        let c4 = Graph::cycle(4);
        let p3 = c4.induced(VertexSet(0b111)).unwrap().graph;
        assert_eq!(p3, Graph::path(3));
        assert!(c4.induced(VertexSet(0b10000)).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&Graph::cycle(4));
        assert!(c.connected && !c.chordal && c.split.is_none() && !c.block_graph);
        assert_eq!(c.radius, Some(2));

        let c = classify(&Graph::star(4));
        assert!(c.connected && c.forest && c.chordal && c.block_graph);
        assert!(c.split.is_some());
        assert_eq!(c.radius, Some(1));
        assert_eq!(c.max_degree, 4);

        let p4 = Graph::path(4);
        let sp = split_partition(&p4).unwrap();
        assert_eq!(sp.clique, VertexSet(0b0110));
        assert_eq!(sp.independent, VertexSet(0b1001));
        assert_eq!(classify(&p4).split_invariant, Some(3));

        assert_eq!(classify(&Graph::from_edges(3, &[(0, 1)]).unwrap()).radius, None);
    }

    #[test]
    fn small_census_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(enumerate_connected(9).is_err());
        let trees: Vec<usize> = (1..=9).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let (mut b, cuts) = blocks(&g);
        b.sort();
        assert_eq!(b, vec![VertexSet(0b00111), VertexSet(0b11100)]);
        assert_eq!(cuts, VertexSet::singleton(2));
        assert!(is_block_graph(&g));
    }
}
