//! C interface to `orient_turan`.
//!
//! Graphs and patterns are opaque heap handles owned by the caller and
//! released with their `_free` function. Every fallible call returns an
//! [`OtStatus`]; on failure a message for the current thread is available
//! from [`ot_last_error_message`]. Strings returned through out-pointers are
//! released with [`ot_string_free`].
//!
//! Counts are exact in the library but cross the boundary as `uint64_t`;
//! a count that does not fit yields `OT_STATUS_OVERFLOW`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use orient_turan::canonical::canonical_form;
use orient_turan::graph::{make_directed_cycle, make_transitive_tournament};
use orient_turan::homomorphism::{compressibility, has_homomorphism};
use orient_turan::io::digraph6;
use orient_turan::pattern::make_antidirected_complete_bipartite;
use orient_turan::search::{exo_exact, Budget};
use orient_turan::{
    count_copies, count_kst, count_out_stars, count_tt, Error, OrientedGraph, Pattern,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Domain = 4,
    Capacity = 5,
    Budget = 6,
    Overflow = 7,
    Internal = 8,
}

/// An oriented graph.
pub struct OtGraph(OrientedGraph);

/// A pattern graph with its precomputed search data.
pub struct OtPattern(Pattern);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> OtStatus {
    match e {
        Error::Capacity { .. } => OtStatus::Capacity,
        Error::InvalidInput(_) => OtStatus::InvalidInput,
        Error::Parse { .. } => OtStatus::Parse,
        Error::Domain { .. } => OtStatus::Domain,
        Error::Budget(_) => OtStatus::Budget,
        Error::Internal(_) => OtStatus::Internal,
    }
}

struct Failure(OtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(OtStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> OtStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => OtStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            OtStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const OtGraph) -> Result<&'a OrientedGraph, Failure> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn pattern_ref<'a>(p: *const OtPattern) -> Result<&'a Pattern, Failure> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("pattern"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn narrow(count: u128) -> Result<u64, Failure> {
    u64::try_from(count).map_err(|_| {
        Failure(
            OtStatus::Overflow,
            format!("count {count} exceeds uint64_t"),
        )
    })
}

unsafe fn put_graph(out: *mut *mut OtGraph, g: OrientedGraph) -> Result<(), Failure> {
    write_out(out, Box::into_raw(Box::new(OtGraph(g))))
}

unsafe fn put_pattern(out: *mut *mut OtPattern, p: Pattern) -> Result<(), Failure> {
    write_out(out, Box::into_raw(Box::new(OtPattern(p))))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(OtStatus::Internal, "nul in string".into()))?;
    write_out(out, c.into_raw())
}

/// Message describing the last failure on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ot_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ot_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a NUL-terminated digraph6 string.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_from_digraph6(
    text: *const c_char,
    out: *mut *mut OtGraph,
) -> OtStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("digraph6 text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure(OtStatus::Parse, "digraph6 text is not ASCII".into()))?;
        put_graph(out, digraph6::decode(text)?)
    })
}

/// An arcless graph on `n` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_empty(n: usize, out: *mut *mut OtGraph) -> OtStatus {
    guard(|| put_graph(out, OrientedGraph::empty(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_transitive_tournament(r: usize, out: *mut *mut OtGraph) -> OtStatus {
    guard(|| put_graph(out, make_transitive_tournament(r)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_directed_cycle(k: usize, out: *mut *mut OtGraph) -> OtStatus {
    guard(|| put_graph(out, make_directed_cycle(k)?))
}

/// Releases a graph. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_free(g: *mut OtGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Adds the arc `u -> v`.
///
/// # Safety
/// `g` must be a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_add_arc(g: *mut OtGraph, u: usize, v: usize) -> OtStatus {
    guard(|| {
        let g = g.as_mut().ok_or_else(|| null("graph"))?;
        Ok(g.0.add_arc(u, v)?)
    })
}

/// Number of vertices, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_order(g: *const OtGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of arcs, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_arc_count(g: *const OtGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.arc_count())
}

/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_has_arc(g: *const OtGraph, u: usize, v: usize) -> bool {
    g.as_ref()
        .is_some_and(|g| u < g.0.order() && v < g.0.order() && g.0.has_arc(u, v))
}

/// digraph6 encoding; free with [`ot_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_to_digraph6(
    g: *const OtGraph,
    out: *mut *mut c_char,
) -> OtStatus {
    guard(|| put_string(out, digraph6::encode(graph_ref(g)?)))
}

/// Canonical form (orders up to 10); free with [`ot_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_graph_canonical_form(
    g: *const OtGraph,
    out: *mut *mut c_char,
) -> OtStatus {
    guard(|| put_string(out, canonical_form(graph_ref(g)?)?.to_string()))
}

/// Copies of the transitive tournament `TT_r`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_count_tt(g: *const OtGraph, r: usize, out: *mut u64) -> OtStatus {
    guard(|| write_out(out, narrow(count_tt(graph_ref(g)?, r))?))
}

/// Copies of the antidirected `K_{s,t}` (s sources, t sinks).
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_count_kst(
    g: *const OtGraph,
    s: usize,
    t: usize,
    out: *mut u64,
) -> OtStatus {
    guard(|| write_out(out, narrow(count_kst(graph_ref(g)?, s, t)?)?))
}

/// Copies of the out-star with `t` leaves.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_count_out_stars(
    g: *const OtGraph,
    t: usize,
    out: *mut u64,
) -> OtStatus {
    guard(|| write_out(out, narrow(count_out_stars(graph_ref(g)?, t))?))
}

/// A pattern with the same arcs as `g` (which stays owned by the caller).
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_pattern_from_graph(
    g: *const OtGraph,
    out: *mut *mut OtPattern,
) -> OtStatus {
    guard(|| put_pattern(out, Pattern::new(graph_ref(g)?.clone())?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_pattern_transitive(r: usize, out: *mut *mut OtPattern) -> OtStatus {
    guard(|| put_pattern(out, Pattern::transitive(r)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_pattern_kst(s: usize, t: usize, out: *mut *mut OtPattern) -> OtStatus {
    guard(|| put_pattern(out, make_antidirected_complete_bipartite(s, t)?))
}

/// Releases a pattern. NULL is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ot_pattern_free(p: *mut OtPattern) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be NULL or a live pattern handle.
#[no_mangle]
pub unsafe extern "C" fn ot_pattern_order(p: *const OtPattern) -> usize {
    p.as_ref().map_or(0, |p| p.0.order())
}

/// # Safety
/// `p` must be NULL or a live pattern handle.
#[no_mangle]
pub unsafe extern "C" fn ot_pattern_automorphism_count(p: *const OtPattern) -> u64 {
    p.as_ref().map_or(0, |p| p.0.automorphism_count())
}

/// Unlabelled copies of `p` in `g`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_count_copies(
    g: *const OtGraph,
    p: *const OtPattern,
    out: *mut u64,
) -> OtStatus {
    guard(|| write_out(out, narrow(count_copies(graph_ref(g)?, pattern_ref(p)?)?)?))
}

/// Whether an arc-preserving map from `p` into `g` exists.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_has_homomorphism(
    p: *const OtPattern,
    g: *const OtGraph,
    out: *mut bool,
) -> OtStatus {
    guard(|| write_out(out, has_homomorphism(pattern_ref(p)?, graph_ref(g)?)))
}

/// Compressibility of `p` probed up to `k_max <= 7`; writes 0 when it exceeds `k_max`.
///
/// # Safety
/// `p` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_compressibility(
    p: *const OtPattern,
    k_max: usize,
    out: *mut usize,
) -> OtStatus {
    guard(|| write_out(out, compressibility(pattern_ref(p)?, k_max)?.z.unwrap_or(0)))
}

/// `exo(n, p)` by exact search. `max_nodes = 0` means unlimited; if the
/// budget runs out `*exact` is false and `*value` is a lower bound.
///
/// # Safety
/// `p` must be live; `value` and `exact` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ot_exo_exact(
    n: usize,
    p: *const OtPattern,
    max_nodes: u64,
    value: *mut usize,
    exact: *mut bool,
) -> OtStatus {
    guard(|| {
        if value.is_null() || exact.is_null() {
            return Err(null("output pointer"));
        }
        let budget = Budget {
            max_nodes: (max_nodes > 0).then_some(max_nodes),
            ..Budget::default()
        };
        let cert = exo_exact(n, pattern_ref(p)?, &budget, 0)?;
        write_out(value, cert.value)?;
        write_out(exact, cert.exact)
    })
}
