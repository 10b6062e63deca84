//! C ABI over `matchgap`.
//!
//! Graphs cross the boundary as opaque `MgGraph` handles created by
//! `mg_graph_from_graph6` or `mg_graph_from_edges` and released with `mg_graph_free`.
//! Every fallible call returns an `MgStatus`; on failure `mg_last_error_message` holds a
//! description for the calling thread. Strings returned through `char **` are owned by
//! the caller and must be released with `mg_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use matchgap::fracmatch::{
    alpha_f_halves, canonical_stats, canonicalize_traced, extract_half_integral,
};
use matchgap::matching::{brute_force_witness, matching_number, Flavor};
use matchgap::verifier::{
    case_certificate_gap, case_certificate_ratio, evaluate, ExtremalClass, Regime,
};
use matchgap::{encode_graph6, parse_graph6, Error, Graph};

/// Opaque graph handle.
pub struct MgGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    CapExceeded = 5,
    UnsupportedSize = 6,
    NotOptimal = 7,
    Precondition = 8,
    TheoremFalsified = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MgClass {
    NotExtremal = 0,
    C5Type = 1,
    K2K3Type = 2,
    TriangleStar = 3,
    DisjointTriangles = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MgFlavor {
    OddComponent = 0,
    IsolatedVertex = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MgBound {
    Gap = 0,
    Ratio = 1,
}

/// Per-graph bound check. `regime_connected` selects the `(n-2)/6`, `3n/(2n+2)` pair;
/// otherwise the `n/6`, `3/2` pair applies.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct MgRecord {
    pub n: usize,
    pub alpha: usize,
    pub alpha_f_halves: usize,
    pub gap_sixths: i64,
    pub regime_connected: bool,
    pub gap_ok: bool,
    pub ratio_ok: bool,
    pub equality_gap: bool,
    pub equality_ratio: bool,
    pub extremal: MgClass,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct MgStats {
    pub w0: usize,
    pub w1: usize,
    pub cycle_count: usize,
    pub rewrites: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let clean = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = clean);
}

fn status_of(e: &Error) -> MgStatus {
    match e {
        Error::Graph6 { .. } => MgStatus::ParseError,
        Error::InvalidEdge { .. } | Error::VertexOutOfRange { .. } | Error::InvalidWeights(_) => {
            MgStatus::InvalidGraph
        }
        Error::UnsupportedSize { .. } => MgStatus::UnsupportedSize,
        Error::CapExceeded { .. } => MgStatus::CapExceeded,
        Error::NonOptimal(_) | Error::NonCanonical(_) => MgStatus::NotOptimal,
        Error::Precondition(_) => MgStatus::Precondition,
        Error::TheoremFalsified { .. } => MgStatus::TheoremFalsified,
    }
}

fn class_code(c: ExtremalClass) -> MgClass {
    match c {
        ExtremalClass::NotExtremal => MgClass::NotExtremal,
        ExtremalClass::C5Type => MgClass::C5Type,
        ExtremalClass::K2K3Type => MgClass::K2K3Type,
        ExtremalClass::TriangleStar => MgClass::TriangleStar,
        ExtremalClass::DisjointTriangles => MgClass::DisjointTriangles,
    }
}

/// Runs `body`, mapping errors and panics to status codes.
fn guard(body: impl FnOnce() -> Result<(), (MgStatus, String)>) -> MgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error("");
            MgStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MgStatus::Panic
        }
    }
}

fn lift(e: Error) -> (MgStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (MgStatus, String) {
    (MgStatus::NullPointer, "null pointer argument".into())
}

unsafe fn graph_ref<'a>(g: *const MgGraph) -> Result<&'a Graph, (MgStatus, String)> {
    g.as_ref().map(|g| &g.inner).ok_or_else(null)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (MgStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> Result<(), (MgStatus, String)> {
    let c =
        CString::new(text).map_err(|_| (MgStatus::InvalidUtf8, "interior nul byte".to_owned()))?;
    write_out(out, c.into_raw())
}

/// Description of the last failure on this thread; empty after a success. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn mg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses one graph6 line into a new handle.
#[no_mangle]
pub unsafe extern "C" fn mg_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut MgGraph,
) -> MgStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (MgStatus::InvalidUtf8, "graph6 text is not UTF-8".to_owned()))?;
        let graph = parse_graph6(text).map_err(lift)?;
        write_out(out, Box::into_raw(Box::new(MgGraph { inner: graph })))
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in `pairs`
/// (`2 * edge_count` entries). `pairs` may be null when `edge_count` is zero.
#[no_mangle]
pub unsafe extern "C" fn mg_graph_from_edges(
    n: usize,
    pairs: *const u32,
    edge_count: usize,
    out: *mut *mut MgGraph,
) -> MgStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if pairs.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(pairs, 2 * edge_count)
        };
        let edges = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        let graph = Graph::new(n, edges).map_err(lift)?;
        write_out(out, Box::into_raw(Box::new(MgGraph { inner: graph })))
    })
}

/// Releases a handle; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn mg_graph_free(graph: *mut MgGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Releases a string returned by this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn mg_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Vertex count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn mg_graph_order(graph: *const MgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.n())
}

/// Edge count, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn mg_graph_size(graph: *const MgGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.edge_count())
}

#[no_mangle]
pub unsafe extern "C" fn mg_graph_to_graph6(
    graph: *const MgGraph,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        write_string(out, encode_graph6(g).map_err(lift)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn mg_matching_number(graph: *const MgGraph, out: *mut usize) -> MgStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        write_out(out, matching_number(g))
    })
}

/// Twice the fractional matching number.
#[no_mangle]
pub unsafe extern "C" fn mg_alpha_f_halves(graph: *const MgGraph, out: *mut usize) -> MgStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        write_out(out, alpha_f_halves(g))
    })
}

#[no_mangle]
pub unsafe extern "C" fn mg_evaluate(graph: *const MgGraph, out: *mut MgRecord) -> MgStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let r = evaluate(g);
        write_out(
            out,
            MgRecord {
                n: r.n,
                alpha: r.alpha,
                alpha_f_halves: r.alpha_f_halves,
                gap_sixths: r.gap_sixths,
                regime_connected: r.regime == Regime::Connected,
                gap_ok: r.gap_ok,
                ratio_ok: r.ratio_ok,
                equality_gap: r.equality_gap,
                equality_ratio: r.equality_ratio,
                extremal: class_code(r.class),
            },
        )
    })
}

/// Maximum-deficiency set as a bitmask (bit `v` set for member `v`) and its value.
/// `cap` bounds `n` for the exhaustive search; values above 20 act as 20.
#[no_mangle]
pub unsafe extern "C" fn mg_deficiency_witness(
    graph: *const MgGraph,
    flavor: MgFlavor,
    cap: u32,
    set_mask: *mut u64,
    value: *mut i64,
) -> MgStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if set_mask.is_null() || value.is_null() {
            return Err(null());
        }
        let flavor = match flavor {
            MgFlavor::OddComponent => Flavor::OddComponent,
            MgFlavor::IsolatedVertex => Flavor::IsolatedVertex,
        };
        let w = brute_force_witness(g, flavor, cap as usize).map_err(lift)?;
        write_out(set_mask, w.set.to_mask())?;
        write_out(value, w.value)
    })
}

/// Statistics of the canonical half-integral optimum.
#[no_mangle]
pub unsafe extern "C" fn mg_canonical_stats(graph: *const MgGraph, out: *mut MgStats) -> MgStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let (f, log) = canonicalize_traced(g, &extract_half_integral(g)).map_err(lift)?;
        let stats = canonical_stats(g, &f).map_err(lift)?;
        write_out(
            out,
            MgStats {
                w0: stats.w0,
                w1: stats.w1,
                cycle_count: stats.cycle_count(),
                rewrites: log.len(),
            },
        )
    })
}

/// Canonical matching and statistics as JSON: `{"matching": [[u, v, w], ...], "stats": {...}}`.
#[no_mangle]
pub unsafe extern "C" fn mg_canonical_json(
    graph: *const MgGraph,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let (f, _) = canonicalize_traced(g, &extract_half_integral(g)).map_err(lift)?;
        let stats = canonical_stats(g, &f).map_err(lift)?;
        let text = serde_json::json!({ "matching": f, "stats": stats }).to_string();
        write_string(out, text)
    })
}

/// Proof-case certificate as JSON. Needs a connected graph with at least five vertices.
#[no_mangle]
pub unsafe extern "C" fn mg_case_certificate_json(
    graph: *const MgGraph,
    bound: MgBound,
    out: *mut *mut c_char,
) -> MgStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let cert = match bound {
            MgBound::Gap => case_certificate_gap(g),
            MgBound::Ratio => case_certificate_ratio(g),
        }
        .map_err(lift)?;
        let text = serde_json::to_string(&cert).map_err(|e| (MgStatus::Panic, e.to_string()))?;
        write_string(out, text)
    })
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn mg_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
