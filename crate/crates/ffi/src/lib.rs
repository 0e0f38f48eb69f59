//! C ABI over `fcnlab`.
//!
//! Graphs, solver results and certificates cross the boundary as opaque
//! handles owned by the caller and released with the matching `*_free`.
//! Every fallible call returns an [`FcnStatus`]; on failure the message is
//! available from [`fcn_last_error`] on the same thread. Strings returned by
//! the library are released with [`fcn_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fcnlab::constructions::construct;
use fcnlab::generators::{fcn, rooted_product, RootSpec};
use fcnlab::{Budget, Certificate, Error, FcnLevel, Graph, ParameterKind, Solver, SolverResult, Status};

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidGraph = 4,
    InvalidArgument = 5,
    Unsupported = 6,
    TooLarge = 7,
    DigestMismatch = 8,
    Panic = 99,
}

/// Parameter selector, in the order of the Rust enum.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcnKind {
    Dom = 0,
    Idom = 1,
    Tdom = 2,
    Cdom = 3,
    Ddom = 4,
    TwoDom = 5,
    Dim = 6,
    Rdom = 7,
    Ridom = 8,
    Rtdom = 9,
    Rcdom = 10,
    Qddom = 11,
}

impl From<FcnKind> for ParameterKind {
    fn from(k: FcnKind) -> Self {
        ParameterKind::ALL[k as usize]
    }
}

/// Solver outcome class.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FcnSolveStatus {
    Exact = 0,
    BoundsOnly = 1,
    Infeasible = 2,
}

pub struct FcnGraph(Graph);
pub struct FcnResult(SolverResult);
pub struct FcnCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: FcnStatus, msg: impl Into<String>) -> FcnStatus {
    set_error(msg.into());
    status
}

fn status_of(err: &Error) -> FcnStatus {
    match err {
        Error::Parse { .. } | Error::Io(_) => FcnStatus::Parse,
        Error::SelfLoop(_)
        | Error::VertexOutOfRange { .. }
        | Error::DuplicateLabel(_)
        | Error::LabelCount { .. }
        | Error::Disconnected(_)
        | Error::IsolatedVertex(_) => FcnStatus::InvalidGraph,
        Error::UnsupportedKind { .. } | Error::LevelOutOfRange { .. } => FcnStatus::Unsupported,
        Error::ExhaustiveCeiling { .. } => FcnStatus::TooLarge,
        Error::DigestMismatch { .. } => FcnStatus::DigestMismatch,
        _ => FcnStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), FcnStatus>) -> FcnStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FcnStatus::Ok,
        Ok(Err(s)) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(FcnStatus::Panic, msg)
        }
    }
}

trait OrStatus<T> {
    fn or_status(self) -> Result<T, FcnStatus>;
}

impl<T> OrStatus<T> for fcnlab::Result<T> {
    fn or_status(self) -> Result<T, FcnStatus> {
        self.map_err(|e| fail(status_of(&e), e.to_string()))
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, FcnStatus> {
    if p.is_null() {
        return Err(fail(FcnStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(FcnStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, FcnStatus> {
    p.as_ref()
        .ok_or_else(|| fail(FcnStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), FcnStatus> {
    if out.is_null() {
        return Err(fail(FcnStatus::NullPointer, "output pointer is null"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), FcnStatus> {
    if out.is_null() {
        return Err(fail(FcnStatus::NullPointer, "output pointer is null"));
    }
    *out = CString::new(s)
        .map_err(|_| fail(FcnStatus::InvalidArgument, "string contains a nul byte"))?
        .into_raw();
    Ok(())
}

unsafe fn put_value<T>(out: *mut T, value: T) -> Result<(), FcnStatus> {
    if out.is_null() {
        return Err(fail(FcnStatus::NullPointer, "output pointer is null"));
    }
    *out = value;
    Ok(())
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn fcn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fcn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// FCN(`level`).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_graph_fcn(level: u32, out: *mut *mut FcnGraph) -> FcnStatus {
    guard(|| {
        if level > 8 {
            return Err(fail(FcnStatus::TooLarge, format!("level {level} is too large")));
        }
        put(out, FcnGraph(fcn(FcnLevel(level))))
    })
}

/// Parses a graph from JSON or an edge list.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_graph_parse(text: *const c_char, out: *mut *mut FcnGraph) -> FcnStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        put(out, FcnGraph(Graph::parse_any(text).or_status()?))
    })
}

/// Rooted product, the root given by label or index.
///
/// # Safety
/// All pointers must be valid; `root` nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn fcn_graph_rooted_product(
    gamma: *const FcnGraph,
    omega: *const FcnGraph,
    root: *const c_char,
    out: *mut *mut FcnGraph,
) -> FcnStatus {
    guard(|| {
        let gamma = ref_arg(gamma, "gamma")?;
        let omega = ref_arg(omega, "omega")?;
        let root = RootSpec::from(str_arg(root, "root")?);
        put(out, FcnGraph(rooted_product(&gamma.0, &omega.0, &root).or_status()?))
    })
}

/// Number of vertices, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fcn_graph_order(g: *const FcnGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Number of edges, or 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fcn_graph_size(g: *const FcnGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.size())
}

/// Canonical JSON of the graph.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_graph_to_json(g: *const FcnGraph, out: *mut *mut c_char) -> FcnStatus {
    guard(|| put_string(out, ref_arg(g, "graph")?.0.to_json()))
}

/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fcn_graph_free(g: *mut FcnGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Minimises `kind` on `g`. A non-positive `time_limit_secs` means no time
/// limit; `exhaustive` additionally enforces the vertex ceiling.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_solve(
    g: *const FcnGraph,
    kind: FcnKind,
    time_limit_secs: f64,
    exhaustive: bool,
    threads: usize,
    out: *mut *mut FcnResult,
) -> FcnStatus {
    guard(|| {
        let g = ref_arg(g, "graph")?;
        let budget = if exhaustive {
            Budget::exhaustive()
        } else if time_limit_secs > 0.0 {
            Budget::seconds(time_limit_secs)
        } else {
            Budget::unlimited()
        };
        let r = Solver::new(budget)
            .threads(threads.max(1))
            .solve(&g.0, kind.into())
            .or_status()?;
        put(out, FcnResult(r))
    })
}

/// Status and bounds of a result. `upper` is set to `SIZE_MAX` when no set
/// exists.
///
/// # Safety
/// `r` must be a live handle; output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn fcn_result_bounds(
    r: *const FcnResult,
    status: *mut FcnSolveStatus,
    lower: *mut usize,
    upper: *mut usize,
) -> FcnStatus {
    guard(|| {
        let r = &ref_arg(r, "result")?.0;
        let s = match r.status {
            Status::Exact => FcnSolveStatus::Exact,
            Status::BoundsOnly => FcnSolveStatus::BoundsOnly,
            Status::Infeasible => FcnSolveStatus::Infeasible,
        };
        put_value(status, s)?;
        put_value(lower, r.lower)?;
        put_value(upper, r.upper.unwrap_or(usize::MAX))
    })
}

/// The best set found. Writes null when there is none.
///
/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_result_witness(r: *const FcnResult, out: *mut *mut FcnCertificate) -> FcnStatus {
    guard(|| {
        let r = &ref_arg(r, "result")?.0;
        match &r.witness {
            Some(w) => put(out, FcnCertificate(w.clone())),
            None => put_value(out, ptr::null_mut()),
        }
    })
}

/// # Safety
/// `r` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_result_to_json(r: *const FcnResult, out: *mut *mut c_char) -> FcnStatus {
    guard(|| {
        let r = &ref_arg(r, "result")?.0;
        let json = serde_json::to_string(r).map_err(|e| fail(FcnStatus::Panic, e.to_string()))?;
        put_string(out, json)
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fcn_result_free(r: *mut FcnResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// The explicit set for `kind` on FCN(`level`).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_construct(kind: FcnKind, level: u32, out: *mut *mut FcnCertificate) -> FcnStatus {
    guard(|| {
        if level > 8 {
            return Err(fail(FcnStatus::TooLarge, format!("level {level} is too large")));
        }
        put(
            out,
            FcnCertificate(construct(kind.into(), FcnLevel(level)).or_status()?),
        )
    })
}

/// # Safety
/// `text` must be nul-terminated and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_certificate_parse(text: *const c_char, out: *mut *mut FcnCertificate) -> FcnStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        put(out, FcnCertificate(Certificate::from_json(text).or_status()?))
    })
}

/// # Safety
/// `c` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_certificate_to_json(c: *const FcnCertificate, out: *mut *mut c_char) -> FcnStatus {
    guard(|| put_string(out, ref_arg(c, "certificate")?.0.to_json()))
}

/// Number of vertices in the certificate, or 0 for null.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fcn_certificate_size(c: *const FcnCertificate) -> usize {
    c.as_ref().map_or(0, |c| c.0.size())
}

/// Checks the certificate against `g`. `valid` receives the verdict; a digest
/// mismatch is reported as `DigestMismatch`.
///
/// # Safety
/// Handles must be live and `valid` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fcn_certificate_verify(
    c: *const FcnCertificate,
    g: *const FcnGraph,
    valid: *mut bool,
) -> FcnStatus {
    guard(|| {
        let c = &ref_arg(c, "certificate")?.0;
        let g = &ref_arg(g, "graph")?.0;
        match c.verify(g).or_status()? {
            None => put_value(valid, true),
            Some(v) => {
                set_error(v.describe(g));
                put_value(valid, false)
            }
        }
    })
}

/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fcn_certificate_free(c: *mut FcnCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
