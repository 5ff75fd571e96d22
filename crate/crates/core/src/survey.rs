//! Batch runs over graph corpora and the (reg, deg h) pair sets they produce.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{chordal_reg_cover, hochster_table, i_number, Field};
use crate::error::{Error, Result};
use crate::graph::{classify, enumerate_connected, from_graph6, to_graph6, Graph};
use crate::hilbert::{h_cover, h_edge, h_edge_ds, hf_cover_oracle, Hypergraph, SUBSET_SCAN_MAX};
use crate::indpoly::bundle;
use crate::poly::series_h_extract;

/// Multiset of `(reg(R/J), deg h_{R/J})` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairSet {
    counts: BTreeMap<(usize, usize), u64>,
}

impl PairSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, pair: (usize, usize)) {
        self.add(pair, 1);
    }

    pub fn add(&mut self, pair: (usize, usize), count: u64) {
        if count > 0 {
            *self.counts.entry(pair).or_insert(0) += count;
        }
    }

    pub fn merge(&mut self, other: &PairSet) {
        for (&p, &c) in &other.counts {
            self.add(p, c);
        }
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.counts.contains_key(&pair)
    }

    pub fn count(&self, pair: (usize, usize)) -> u64 {
        self.counts.get(&pair).copied().unwrap_or(0)
    }

    /// Number of distinct pairs.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Distinct pairs in increasing order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.counts.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.counts.iter().map(|(&p, &c)| (p, c))
    }

    /// Same support, counts ignored.
    pub fn same_pairs(&self, other: &PairSet) -> bool {
        self.counts.keys().eq(other.counts.keys())
    }
}

impl FromIterator<(usize, usize)> for PairSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut s = PairSet::new();
        for p in iter {
            s.insert(p);
        }
        s
    }
}

// ---------------------------------------------------------------------------
// records

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub chordal: bool,
    pub split: bool,
    pub block: bool,
    pub forest: bool,
    pub radius_le2: bool,
}

impl Flags {
    pub fn names(&self) -> Vec<&'static str> {
        [
            (self.chordal, "chordal"),
            (self.split, "split"),
            (self.block, "block"),
            (self.forest, "forest"),
            (self.radius_le2, "radius<=2"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

/// One surveyed graph. Serialized names follow the CSV header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub graph6: String,
    pub n: usize,
    pub alpha: usize,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "gG")]
    pub g_g: i64,
    pub i: usize,
    pub pdim: usize,
    #[serde(rename = "reg")]
    pub reg_cover: usize,
    #[serde(rename = "degJ")]
    pub deg_h_cover: usize,
    #[serde(rename = "degI")]
    pub deg_h_edge: usize,
    #[serde(rename = "aInv")]
    pub a_invariant: i64,
    pub flags: Flags,
}

impl SurveyRecord {
    pub fn pair(&self) -> (usize, usize) {
        (self.reg_cover, self.deg_h_cover)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurveyOptions {
    pub field: Field,
    /// Chordal graphs get `reg = n − i − 1` instead of Hochster.
    pub chordal_fast_path: bool,
    /// Fraction of fast-path graphs re-run through Hochster.
    pub spot_check_rate: f64,
    /// Fraction of graphs whose h-polynomials are re-derived from the
    /// standard-monomial Hilbert function.
    pub sample_rate: f64,
    pub seed: u64,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            field: Field::Rational,
            chordal_fast_path: true,
            spot_check_rate: 0.05,
            sample_rate: 0.01,
            seed: 0x5eed,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub index: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SurveyOutput {
    pub records: Vec<SurveyRecord>,
    pub pairs: PairSet,
    pub skipped: Vec<Skipped>,
    pub spot_checks: usize,
    pub sample_checks: usize,
    /// Disagreements found by spot checks or samples. Any entry is a bug.
    pub failures: Vec<String>,
}

enum Outcome {
    Record {
        record: SurveyRecord,
        spot: Option<std::result::Result<(), String>>,
        sample: Option<std::result::Result<(), String>>,
    },
    Skip(String),
}

/// Reads one graph per nonblank line; errors carry the 1-based line.
pub fn read_graph6<R: BufRead>(r: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (k, line) in r.lines().enumerate() {
        let line = line.map_err(|e| Error::AtLine {
            line: k + 1,
            source: Box::new(e.into()),
        })?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        out.push(from_graph6(t).map_err(|e| Error::AtLine {
            line: k + 1,
            source: Box::new(e),
        })?);
    }
    Ok(out)
}

/// Connected graphs on `n` vertices from the built-in generator.
pub fn internal_source(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected(n)
}

fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// h-polynomials and degree identities recomputed from brute-force
/// Hilbert functions.
pub fn sample_check(g: &Graph) -> std::result::Result<(), String> {
    let b = bundle(g);
    let n = g.n();
    let hc = h_cover(&b).map_err(|e| e.to_string())?;
    let hf: Vec<_> = (0..=2 * n as i64)
        .map(|d| hf_cover_oracle(g, d))
        .collect::<Result<_>>()
        .map_err(|e| e.to_string())?;
    let series = series_h_extract(&hf, n - 2).map_err(|e| e.to_string())?;
    if series != hc.h {
        return Err(format!("h_cover {} but series gives {series}", hc.h));
    }
    let he = h_edge(&b);
    if h_edge_ds(&b) != he.h {
        return Err("the two h_edge forms disagree".into());
    }
    let scan = Hypergraph::from_graph(g).map_err(|e| e.to_string())?.gvec();
    if scan != b.gvec {
        return Err("g-vector differs from the subset scan".into());
    }
    if hc.deg_h != n - 2 - b.m || he.deg_h != b.alpha - b.m || hc.a_invariant != -(b.m as i64) {
        return Err(format!(
            "degree identities fail: degJ {} degI {} a {} with M {}",
            hc.deg_h, he.deg_h, hc.a_invariant, b.m
        ));
    }
    Ok(())
}

fn survey_one(index: usize, g: &Graph, opts: &SurveyOptions) -> Outcome {
    if g.n() == 0 || !g.is_connected() {
        return Outcome::Skip("not connected".into());
    }
    if g.edge_count() == 0 {
        return Outcome::Skip("no edges".into());
    }
    match survey_record(index, g, opts) {
        Ok(o) => o,
        Err(e) => Outcome::Skip(e.to_string()),
    }
}

fn survey_record(index: usize, g: &Graph, opts: &SurveyOptions) -> Result<Outcome> {
    let mut rng = rng_for(opts.seed, index);
    let cls = classify(g);
    let b = bundle(g);
    let hc = h_cover(&b)?;
    let he = h_edge(&b);
    let i = i_number(g)?;
    let n = g.n();

    let mut spot = None;
    let pdim = if cls.chordal && opts.chordal_fast_path {
        let reg = chordal_reg_cover(g)?;
        if rng.gen_bool(opts.spot_check_rate) {
            let h = hochster_table(g, opts.field)?.pdim();
            spot = Some(if h == reg + 1 {
                Ok(())
            } else {
                Err(format!("chordal reg {reg} but Hochster pdim {h}"))
            });
        }
        reg + 1
    } else {
        hochster_table(g, opts.field)?.pdim()
    };
    let sample = (n <= SUBSET_SCAN_MAX && rng.gen_bool(opts.sample_rate)).then(|| sample_check(g));

    let record = SurveyRecord {
        graph6: to_graph6(g),
        n,
        alpha: b.alpha,
        m: b.m,
        g_g: b.g_g.to_i64().expect("|g(G)| < 2^64 for n <= 64"),
        i,
        pdim,
        reg_cover: pdim - 1,
        deg_h_cover: hc.deg_h,
        deg_h_edge: he.deg_h,
        a_invariant: hc.a_invariant,
        flags: Flags {
            chordal: cls.chordal,
            split: cls.split.is_some(),
            block: cls.block_graph,
            forest: cls.forest,
            radius_le2: cls.radius.is_some_and(|r| r <= 2),
        },
    };
    Ok(Outcome::Record {
        record,
        spot,
        sample,
    })
}

/// Surveys `graphs`, keeping input order in the output.
pub fn run_survey(graphs: &[Graph], opts: &SurveyOptions) -> Result<SurveyOutput> {
    let work = || -> Vec<Outcome> {
        graphs
            .par_iter()
            .enumerate()
            .map(|(k, g)| survey_one(k, g, opts))
            .collect()
    };
    let outcomes = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };

    let mut out = SurveyOutput::default();
    for (index, o) in outcomes.into_iter().enumerate() {
        match o {
            Outcome::Skip(reason) => out.skipped.push(Skipped {
                index,
                graph6: to_graph6(&graphs[index]),
                reason,
            }),
            Outcome::Record {
                record,
                spot,
                sample,
            } => {
                for (kind, check, count) in [
                    ("spot check", spot, &mut out.spot_checks),
                    ("sample", sample, &mut out.sample_checks),
                ] {
                    if let Some(c) = check {
                        *count += 1;
                        if let Err(e) = c {
                            out.failures.push(format!("{} {kind}: {e}", record.graph6));
                        }
                    }
                }
                out.pairs.insert(record.pair());
                out.records.push(record);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// checks

fn ceil_div_i(a: i64, b: i64) -> i64 {
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// `|reg − deg h| ≤ ⌈n/2⌉ − 2`.
pub fn check_band(r: &SurveyRecord) -> bool {
    band_holds(r.n, r.reg_cover, r.deg_h_cover)
}

pub fn band_holds(n: usize, reg: usize, deg: usize) -> bool {
    (reg as i64 - deg as i64).abs() <= ceil_div_i(n as i64, 2) - 2
}

/// When `α ≤ ⌊n/2⌋ + 1`, both `deg h` and `reg` are at least `⌈n/2⌉ − 2`.
pub fn check_alpha_corollary(r: &SurveyRecord) -> bool {
    let n = r.n as i64;
    if r.alpha as i64 > n / 2 + 1 {
        return true;
    }
    let lo = ceil_div_i(n, 2) - 2;
    r.deg_h_cover as i64 >= lo && r.reg_cover as i64 >= lo
}

/// The conjectured obstruction, read literally: `r ≤ ⌈d/2⌉` or
/// `d ≥ ⌈(2r − 1)/3⌉`.
pub fn conjecture_excludes(r: usize, d: usize) -> bool {
    let (r, d) = (r as i64, d as i64);
    r <= ceil_div_i(d, 2) || d >= ceil_div_i(2 * r - 1, 3)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnrealizableReport {
    /// Observed `(1, d)` with `d ≥ 2`; must be empty.
    pub lemma_violations: Vec<(usize, usize)>,
    /// Observed pairs the literal conjecture calls unrealizable.
    pub conjecture_conflicts: Vec<(usize, usize)>,
}

pub fn check_unrealizable(pairs: &PairSet) -> UnrealizableReport {
    let mut rep = UnrealizableReport::default();
    for (r, d) in pairs.pairs() {
        if r == 1 && d >= 2 {
            rep.lemma_violations.push((r, d));
        }
        if conjecture_excludes(r, d) {
            rep.conjecture_conflicts.push((r, d));
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// output

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

pub const CSV_HEADER: [&str; 12] = [
    "graph6", "n", "alpha", "M", "gG", "i", "pdim", "reg", "degJ", "degI", "aInv", "flags",
];

pub fn write_csv<W: Write>(records: &[SurveyRecord], w: W) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in records {
        wr.write_record([
            r.graph6.clone(),
            r.n.to_string(),
            r.alpha.to_string(),
            r.m.to_string(),
            r.g_g.to_string(),
            r.i.to_string(),
            r.pdim.to_string(),
            r.reg_cover.to_string(),
            r.deg_h_cover.to_string(),
            r.deg_h_edge.to_string(),
            r.a_invariant.to_string(),
            r.flags.names().join("|"),
        ])
        .map_err(csv_err)?;
    }
    wr.flush()?;
    Ok(())
}

pub fn write_jsonl<W: Write>(records: &[SurveyRecord], mut w: W) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r).map_err(|e| Error::Io(e.into()))?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

/// `reg<TAB>deg<TAB>count`, one row per pair, after a `#` header line.
pub fn write_scatter<W: Write>(pairs: &PairSet, mut w: W) -> Result<()> {
    writeln!(w, "# reg\tdeg\tcount")?;
    for ((r, d), c) in pairs.iter() {
        writeln!(w, "{r}\t{d}\t{c}")?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verification suites

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Graphs up to 6 vertices, the quick family grid.
    Quick,
    /// Graphs up to 8 vertices, trees up to 9, the full family grid.
    Full,
}

impl std::str::FromStr for VerifyLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(VerifyLevel::Quick),
            "full" => Ok(VerifyLevel::Full),
            _ => Err(Error::Unsupported(format!("verify level {s:?} (use quick or full)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn suite<T: Sync>(
    name: &'static str,
    items: &[T],
    f: impl Fn(&T) -> std::result::Result<(), String> + Sync,
) -> SuiteResult {
    let failures: Vec<String> = items.par_iter().filter_map(|x| f(x).err()).collect();
    SuiteResult {
        name,
        cases: items.len(),
        failures,
    }
}

fn graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_connected(k)?);
    }
    Ok(out)
}

fn pdim_hochster(g: &Graph) -> std::result::Result<usize, String> {
    hochster_table(g, Field::Rational)
        .map(|t| t.pdim())
        .map_err(|e| e.to_string())
}

/// Runs the cross-check suites at `level`; every failure is a bug.
pub fn verify(level: VerifyLevel) -> Result<Vec<SuiteResult>> {
    use crate::betti::{hochster_table_with, Engine};
    use crate::families::{check_grid, grid, GridLimits};
    use crate::graph::{enumerate_trees, random_forest, to_edge_list_str};
    use crate::hilbert::{degree_report, hf_cover};
    use crate::recursions::{alpha_m_matches_direct, block_check, jk_alpha_m, jk_pdim};

    let (max_n, tree_n, forests, forest_n, grid_lim, engine_n) = match level {
        VerifyLevel::Quick => (6, 7, 50, 10, GridLimits::QUICK, 5),
        VerifyLevel::Full => (8, 9, 200, 14, GridLimits::FULL, 6),
    };
    let graphs = graphs_up_to(max_n)?;
    let with_edges: Vec<Graph> = graphs.iter().filter(|g| g.edge_count() > 0).cloned().collect();
    let mut out = Vec::new();

    out.push(suite("independence polynomial vs subset scan", &graphs, |g| {
        let scan = Hypergraph::from_graph(g).map_err(|e| e.to_string())?.gvec();
        (scan == bundle(g).gvec)
            .then_some(())
            .ok_or_else(|| format!("{}: g-vector mismatch", to_graph6(g)))
    }));

    out.push(suite("cover Hilbert function vs standard monomials", &with_edges, |g| {
        let b = bundle(g);
        for d in 1..=2 * g.n() as i64 {
            let want = hf_cover_oracle(g, d).map_err(|e| e.to_string())?;
            let got = hf_cover(g.n(), &b.gvec, d).map_err(|e| e.to_string())?;
            if want != got {
                return Err(format!("{}: HF({d}) {got} vs {want}", to_graph6(g)));
            }
        }
        Ok(())
    }));

    out.push(suite("h-polynomials and degree identities", &with_edges, |g| {
        sample_check(g).map_err(|e| format!("{}: {e}", to_graph6(g)))?;
        degree_report(&bundle(g))
            .map(|_| ())
            .map_err(|e| format!("{}: {e}", to_graph6(g)))
    }));

    let grid_results = check_grid(grid(grid_lim)?)?;
    out.push(SuiteResult {
        name: "family predictions",
        cases: grid_results.len(),
        failures: grid_results
            .iter()
            .filter(|r| !r.ok())
            .map(|r| {
                let bad: Vec<String> = r.checks.iter().filter(|c| !c.ok).map(|c| c.to_string()).collect();
                format!("{} {} ({}): {}", r.case.family, r.case.label, r.case.prediction.source, bad.join("; "))
            })
            .collect(),
    });

    let mut forest_set = Vec::new();
    for n in 1..=tree_n {
        forest_set.extend(enumerate_trees(n)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0);
    for _ in 0..forests {
        let n = rng.gen_range(2..=forest_n);
        forest_set.push(random_forest(n, 0.15, &mut rng));
    }
    out.push(suite("forest recursions vs direct", &forest_set, |g| {
        let tag = to_edge_list_str(g);
        let jk = jk_pdim(g).map_err(|e| e.to_string())?;
        let h = pdim_hochster(g)?;
        if jk != h {
            return Err(format!("{tag}: recursive pdim {jk}, Hochster {h}"));
        }
        let am = jk_alpha_m(g).map_err(|e| e.to_string())?;
        alpha_m_matches_direct(g, &am)
            .then_some(())
            .ok_or_else(|| format!("{tag}: (alpha, M, c) recursion {am:?} disagrees"))
    }));

    let chordal: Vec<Graph> = with_edges
        .iter()
        .filter(|g| crate::graph::is_chordal(g))
        .cloned()
        .collect();
    out.push(suite("chordal regularity vs Hochster", &chordal, |g| {
        let fast = chordal_reg_cover(g).map_err(|e| e.to_string())?;
        let h = pdim_hochster(g)?;
        (fast + 1 == h)
            .then_some(())
            .ok_or_else(|| format!("{}: n-i-1 = {fast}, Hochster pdim {h}", to_graph6(g)))
    }));

    let block: Vec<Graph> = graphs
        .iter()
        .filter(|g| crate::graph::is_block_graph(g) && g.n() >= 2)
        .cloned()
        .collect();
    out.push(suite("block graph recursion and M <= i", &block, |g| {
        let r = block_check(g).map_err(|e| e.to_string())?;
        (r.poly_identity && r.i == r.i_direct && r.satisfied)
            .then_some(())
            .ok_or_else(|| format!("{}: M {} i {} direct i {}", to_graph6(g), r.m, r.i, r.i_direct))
    }));

    let small: Vec<Graph> = graphs.iter().filter(|g| g.n() <= engine_n).cloned().collect();
    out.push(suite("Hochster engines agree", &small, |g| {
        let a = hochster_table_with(g, Field::Rational, Engine::Direct).map_err(|e| e.to_string())?;
        let b = hochster_table_with(g, Field::Rational, Engine::Reduced).map_err(|e| e.to_string())?;
        (a == b)
            .then_some(())
            .ok_or_else(|| format!("{}: engines disagree", to_graph6(g)))
    }));

    Ok(out)
}
