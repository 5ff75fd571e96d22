//! C ABI over `coverdeg`.
//!
//! Graphs cross the boundary as opaque [`CdGraph`] handles, created by one
//! of the `cd_graph_from_*` constructors and released with
//! [`cd_graph_free`]. Every fallible call returns a [`CdStatus`]; on failure
//! [`cd_last_error`] describes what went wrong on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use coverdeg::betti::{hochster_table, i_number, Field};
use coverdeg::graph::{from_graph6, to_graph6};
use coverdeg::hilbert::{h_cover, h_edge};
use coverdeg::{bundle, Error, Graph};
use num_traits::ToPrimitive;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CdStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed graph6 or edge data.
    Parse = 2,
    /// Vertex label or count out of range.
    OutOfRange = 3,
    /// Input exceeds a computational size guard.
    Guard = 4,
    /// The graph does not meet the operation's requirements.
    Precondition = 5,
    /// A value does not fit the output type.
    Overflow = 6,
    /// The caller's buffer is too small; the needed size was reported.
    BufferTooSmall = 7,
    Panic = 8,
}

/// Opaque graph handle.
pub struct CdGraph {
    g: Graph,
}

/// Invariants that need no homology computation.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CdBundle {
    pub n: usize,
    pub alpha: usize,
    /// Multiplicity of −1 as a root of the independence polynomial.
    pub m: usize,
    /// Alternating sum of the independence numbers, `1 − P(−1)`.
    pub g_g: i64,
    /// Independent domination number.
    pub i: usize,
    pub deg_h_edge: usize,
    /// Zero for edgeless graphs, where it is undefined.
    pub deg_h_cover: usize,
    pub a_invariant_cover: i64,
    pub has_edge: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail {
    status: CdStatus,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Graph6 { .. } | Error::EdgeList(_) | Error::AtLine { .. } => CdStatus::Parse,
            Error::VertexOutOfRange { .. }
            | Error::Loop(_)
            | Error::TooManyVertices { .. }
            | Error::IndexOutOfRange { .. } => CdStatus::OutOfRange,
            Error::Guard { .. } => CdStatus::Guard,
            _ => CdStatus::Precondition,
        };
        Fail {
            status,
            msg: e.to_string(),
        }
    }
}

fn fail(status: CdStatus, msg: &str) -> Fail {
    Fail {
        status,
        msg: msg.into(),
    }
}

fn guarded(f: impl FnOnce() -> Result<(), Fail>) -> CdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CdStatus::Ok,
        Ok(Err(e)) => {
            set_last_error(&e.msg);
            e.status
        }
        Err(_) => {
            set_last_error("internal panic");
            CdStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const CdGraph) -> Result<&'a Graph, Fail> {
    g.as_ref()
        .map(|h| &h.g)
        .ok_or_else(|| fail(CdStatus::NullPointer, "null graph handle"))
}

fn field_for(prime: u64) -> Result<Field, Fail> {
    if prime == 0 {
        return Ok(Field::Rational);
    }
    Ok(format!("p:{prime}").parse::<Field>()?)
}

fn emit_graph(g: Graph, out: *mut *mut CdGraph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(fail(CdStatus::NullPointer, "null output pointer"));
    }
    // SAFETY: checked non-null; the caller provides a writable slot.
    unsafe { *out = Box::into_raw(Box::new(CdGraph { g })) };
    Ok(())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cd_version() -> *const c_char {
    static V: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    V.as_ptr()
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn cd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses one graph6 string.
///
/// # Safety
/// `s` must be NULL or a valid NUL-terminated string; `out` must be NULL or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cd_graph_from_graph6(s: *const c_char, out: *mut *mut CdGraph) -> CdStatus {
    guarded(|| {
        if s.is_null() {
            return Err(fail(CdStatus::NullPointer, "null string"));
        }
        let text = CStr::from_ptr(s)
            .to_str()
            .map_err(|_| fail(CdStatus::Parse, "graph6 input is not UTF-8"))?;
        emit_graph(from_graph6(text.trim())?, out)
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be NULL
/// when `edge_count` is 0); `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cd_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut CdGraph,
) -> CdStatus {
    guarded(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(CdStatus::NullPointer, "null edge array"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        emit_graph(Graph::from_edges(n, &pairs)?, out)
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cd_graph_free(g: *mut CdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cd_graph_vertex_count(g: *const CdGraph) -> usize {
    g.as_ref().map_or(0, |h| h.g.n())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cd_graph_edge_count(g: *const CdGraph) -> usize {
    g.as_ref().map_or(0, |h| h.g.edge_count())
}

/// Writes the graph6 encoding with a trailing NUL. `needed` (if not NULL)
/// receives the buffer size required, NUL included.
///
/// # Safety
/// `buf` must be NULL or hold `cap` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn cd_graph_to_graph6(
    g: *const CdGraph,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> CdStatus {
    guarded(|| {
        let s = to_graph6(graph_ref(g)?);
        let need = s.len() + 1;
        if !needed.is_null() {
            *needed = need;
        }
        if buf.is_null() || cap < need {
            return Err(fail(CdStatus::BufferTooSmall, "graph6 buffer too small"));
        }
        ptr::copy_nonoverlapping(s.as_ptr().cast::<c_char>(), buf, s.len());
        *buf.add(s.len()) = 0;
        Ok(())
    })
}

/// Coefficients `g_0..g_α` of the independence polynomial. `len` receives
/// `α + 1`; with a short buffer the call fails and writes nothing else.
///
/// # Safety
/// `coeffs` must be NULL or hold `cap` writable values; `len` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cd_independence_poly(
    g: *const CdGraph,
    coeffs: *mut i64,
    cap: usize,
    len: *mut usize,
) -> CdStatus {
    guarded(|| {
        let b = bundle(graph_ref(g)?);
        if len.is_null() {
            return Err(fail(CdStatus::NullPointer, "null length pointer"));
        }
        *len = b.gvec.len();
        if coeffs.is_null() || cap < b.gvec.len() {
            return Err(fail(CdStatus::BufferTooSmall, "coefficient buffer too small"));
        }
        let vals: Vec<i64> = b
            .gvec
            .iter()
            .map(|c| c.to_i64().ok_or_else(|| fail(CdStatus::Overflow, "coefficient exceeds int64")))
            .collect::<Result<_, _>>()?;
        ptr::copy_nonoverlapping(vals.as_ptr(), coeffs, vals.len());
        Ok(())
    })
}

/// Polynomial-level invariants and `i(G)` (the latter limited to 32
/// vertices).
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cd_bundle(g: *const CdGraph, out: *mut CdBundle) -> CdStatus {
    guarded(|| {
        let graph = graph_ref(g)?;
        let out = out
            .as_mut()
            .ok_or_else(|| fail(CdStatus::NullPointer, "null output pointer"))?;
        let b = bundle(graph);
        let (deg_h_cover, a) = if b.has_edge() {
            let h = h_cover(&b)?;
            (h.deg_h, h.a_invariant)
        } else {
            (0, 0)
        };
        *out = CdBundle {
            n: b.n,
            alpha: b.alpha,
            m: b.m,
            g_g: b.g_g.to_i64().ok_or_else(|| fail(CdStatus::Overflow, "g(G) exceeds int64"))?,
            i: i_number(graph)?,
            deg_h_edge: h_edge(&b).deg_h,
            deg_h_cover,
            a_invariant_cover: a,
            has_edge: b.has_edge(),
        };
        Ok(())
    })
}

/// Projective dimension of `R/I(G)` from Hochster's formula over the
/// rationals (`prime == 0`) or GF(`prime`).
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cd_pdim_edge(g: *const CdGraph, prime: u64, out: *mut usize) -> CdStatus {
    guarded(|| {
        let graph = graph_ref(g)?;
        let field = field_for(prime)?;
        let out = out
            .as_mut()
            .ok_or_else(|| fail(CdStatus::NullPointer, "null output pointer"))?;
        *out = hochster_table(graph, field)?.pdim();
        Ok(())
    })
}

/// `reg(R/J(G))`; the graph needs at least one edge.
///
/// # Safety
/// `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cd_reg_cover(g: *const CdGraph, prime: u64, out: *mut usize) -> CdStatus {
    guarded(|| {
        let graph = graph_ref(g)?;
        let field = field_for(prime)?;
        let out = out
            .as_mut()
            .ok_or_else(|| fail(CdStatus::NullPointer, "null output pointer"))?;
        *out = coverdeg::betti::reg_cover(graph, field)?;
        Ok(())
    })
}
