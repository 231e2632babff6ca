//! C interface to `ivpoly`.
//!
//! Polytopes are opaque handles created by `ivp_polytope_*` constructors and
//! released with `ivp_polytope_free`. Every fallible call returns an
//! `IvpStatus`; on failure `ivp_last_error_message` describes the cause.
//! Strings handed out by the library are NUL-terminated and must be released
//! with `ivp_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ivpoly::ehrhart;
use ivpoly::family::{build_family, build_root_polytope, FamilySpec};
use ivpoly::hull;
use ivpoly::verify::{self, SuiteConfig};
use ivpoly::{Error, IntVec, LatticePolytope};

/// Opaque polytope handle.
pub struct IvpPolytope {
    inner: LatticePolytope,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IvpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ComputationFailed = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IvpFamily {
    /// All interval lengths `1..n`; `include_origin` adds the origin.
    Complete = 0,
    /// Intervals of length `i`.
    Fixed = 1,
    /// Intervals of length 1 or `n - i`.
    Pyramidal = 2,
    /// Origin and all `e_j - e_k`, `j < k`, in dimension `n`.
    Root = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> IvpStatus {
    match e {
        Error::InvalidSpec(_)
        | Error::InvalidInterval { .. }
        | Error::InvalidDimension { .. }
        | Error::DimensionMismatch { .. }
        | Error::EmptyInput(_)
        | Error::OutOfBounds { .. }
        | Error::UnknownClaim(_)
        | Error::Parse { .. } => IvpStatus::InvalidArgument,
        _ => IvpStatus::ComputationFailed,
    }
}

/// Runs `f`, recording errors and converting panics into `IvpStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), IvpStatus>) -> IvpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            IvpStatus::Ok
        }
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            IvpStatus::Panic
        }
    }
}

fn fail(e: Error) -> IvpStatus {
    set_error(&e.to_string());
    status_of(&e)
}

fn null(what: &str) -> IvpStatus {
    set_error(&format!("null pointer: {what}"));
    IvpStatus::NullPointer
}

unsafe fn handle<'a>(p: *const IvpPolytope) -> Result<&'a LatticePolytope, IvpStatus> {
    // SAFETY: caller passes a handle from an `ivp_polytope_*` constructor
    unsafe { p.as_ref() }
        .map(|h| &h.inner)
        .ok_or_else(|| null("polytope"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), IvpStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c =
        CString::new(s).map_err(|_| fail(Error::InternalConsistency("NUL in output".into())))?;
    // SAFETY: checked non-null above
    unsafe { *out = c.into_raw() };
    Ok(())
}

unsafe fn put_handle(out: *mut *mut IvpPolytope, p: LatticePolytope) -> Result<(), IvpStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    // SAFETY: checked non-null above
    unsafe { *out = Box::into_raw(Box::new(IvpPolytope { inner: p })) };
    Ok(())
}

/// Message for the most recent failure on this thread; empty after a
/// success. The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ivp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a named family. `i` is ignored by `Complete` and `Root`;
/// `include_origin` only affects `Complete`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_new_family(
    family: IvpFamily,
    n: usize,
    i: usize,
    include_origin: bool,
    out: *mut *mut IvpPolytope,
) -> IvpStatus {
    guard(|| {
        let spec = match family {
            IvpFamily::Complete => FamilySpec::complete(n, include_origin),
            IvpFamily::Fixed => FamilySpec::fixed(n, i),
            IvpFamily::Pyramidal => FamilySpec::pyramidal(n, i),
            IvpFamily::Root => {
                let p = build_root_polytope(n).map_err(fail)?;
                return unsafe { put_handle(out, p) };
            }
        };
        let p = spec.and_then(|s| build_family(&s)).map_err(fail)?;
        unsafe { put_handle(out, p) }
    })
}

/// Convex hull of `m` points in dimension `n`, given row-major in `coords`.
///
/// # Safety
/// `coords` must point to `m * n` readable `int64_t` values and `out` to
/// writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_from_vertices(
    n: usize,
    m: usize,
    coords: *const i64,
    out: *mut *mut IvpPolytope,
) -> IvpStatus {
    guard(|| {
        if coords.is_null() {
            return Err(null("coords"));
        }
        let len = n
            .checked_mul(m)
            .ok_or_else(|| fail(Error::Overflow("n * m")))?;
        // SAFETY: caller guarantees `len` readable values
        let flat = unsafe { std::slice::from_raw_parts(coords, len) };
        let rows: Vec<IntVec> = flat
            .chunks(n.max(1))
            .take(m)
            .map(IntVec::from_i64s)
            .collect();
        let p = LatticePolytope::from_generators(n, rows).map_err(fail)?;
        unsafe { put_handle(out, p) }
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_free(p: *mut IvpPolytope) {
    if !p.is_null() {
        // SAFETY: handle came from Box::into_raw in a constructor
        drop(unsafe { Box::from_raw(p) });
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_dim(p: *const IvpPolytope, out: *mut usize) -> IvpStatus {
    guard(|| {
        let p = unsafe { handle(p) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        unsafe { *out = p.dim() };
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_vertex_count(
    p: *const IvpPolytope,
    out: *mut usize,
) -> IvpStatus {
    guard(|| {
        let p = unsafe { handle(p) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        unsafe { *out = p.vertices().len() };
        Ok(())
    })
}

/// Ambient dimension `n`.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_ambient_dim(
    p: *const IvpPolytope,
    out: *mut usize,
) -> IvpStatus {
    guard(|| {
        let p = unsafe { handle(p) }?;
        if out.is_null() {
            return Err(null("out"));
        }
        unsafe { *out = p.n() };
        Ok(())
    })
}

/// Copies the vertices row-major into `buf`, which must hold
/// `vertex_count * ambient_dim` values.
///
/// # Safety
/// `p` must be a live handle and `buf` must have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_vertices(
    p: *const IvpPolytope,
    buf: *mut i64,
    len: usize,
) -> IvpStatus {
    guard(|| {
        let p = unsafe { handle(p) }?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let need = p.vertices().len() * p.n();
        if len < need {
            set_error(&format!("buffer holds {len} values, need {need}"));
            return Err(IvpStatus::BufferTooSmall);
        }
        let mut flat = Vec::with_capacity(need);
        for v in p.vertices() {
            flat.extend(v.to_i64s().map_err(fail)?);
        }
        unsafe { ptr::copy_nonoverlapping(flat.as_ptr(), buf, need) };
        Ok(())
    })
}

/// Writes `f_{-1}, f_0, ..., f_d` (that is `d + 2` values) into `buf` and
/// the count into `written`.
///
/// # Safety
/// `p` must be a live handle, `buf` must have room for `len` values and
/// `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_f_vector(
    p: *const IvpPolytope,
    buf: *mut u64,
    len: usize,
    written: *mut usize,
) -> IvpStatus {
    guard(|| {
        let p = unsafe { handle(p) }?;
        if buf.is_null() || written.is_null() {
            return Err(null("buf or written"));
        }
        let f = hull::f_vector(p).map_err(fail)?;
        unsafe { *written = f.counts.len() };
        if len < f.counts.len() {
            set_error(&format!(
                "buffer holds {len} values, need {}",
                f.counts.len()
            ));
            return Err(IvpStatus::BufferTooSmall);
        }
        unsafe { ptr::copy_nonoverlapping(f.counts.as_ptr(), buf, f.counts.len()) };
        Ok(())
    })
}

/// Normalized volume as a decimal string.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_normalized_volume(
    p: *const IvpPolytope,
    out: *mut *mut c_char,
) -> IvpStatus {
    guard(|| {
        let p = unsafe { handle(p) }?;
        let v = ehrhart::normalized_volume(p).map_err(fail)?;
        unsafe { put_string(out, v.to_string()) }
    })
}

/// Ehrhart coefficients, constant term first, as a JSON array of
/// `"num/den"` strings.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_ehrhart_json(
    p: *const IvpPolytope,
    out: *mut *mut c_char,
) -> IvpStatus {
    guard(|| {
        let p = unsafe { handle(p) }?;
        let l = ehrhart::ehrhart_polynomial(p).map_err(fail)?;
        unsafe { put_string(out, l.to_json()) }
    })
}

/// Lattice points in the `t`-th dilate, as a decimal string.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ivp_polytope_count(
    p: *const IvpPolytope,
    t: u64,
    out: *mut *mut c_char,
) -> IvpStatus {
    guard(|| {
        let p = unsafe { handle(p) }?;
        let c = ehrhart::count_lattice_points(p, t).map_err(fail)?;
        unsafe { put_string(out, c.to_string()) }
    })
}

/// Runs the verification suite with every claim swept up to `n_max` and
/// returns the JSON report. `claims` is null for all claims, or a
/// comma-separated list of claim identifiers. `failures` receives the number
/// of failed non-conjecture checks.
///
/// # Safety
/// `claims` must be null or a NUL-terminated string; `out` and `failures`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn ivp_verify_suite_json(
    n_max: usize,
    claims: *const c_char,
    out: *mut *mut c_char,
    failures: *mut usize,
) -> IvpStatus {
    guard(|| {
        if failures.is_null() {
            return Err(null("failures"));
        }
        let mut config = SuiteConfig::default_suite(n_max);
        if !claims.is_null() {
            // SAFETY: caller passes a NUL-terminated string
            let list = unsafe { CStr::from_ptr(claims) }
                .to_str()
                .map_err(|_| fail(Error::InvalidSpec("claims is not UTF-8".into())))?;
            let ids: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
            config = config.restrict(&ids).map_err(fail)?;
        }
        let report = verify::verify_suite(&config);
        unsafe { *failures = report.summary.fail };
        unsafe { put_string(out, report.to_json()) }
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ivp_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: came from CString::into_raw
        drop(unsafe { CString::from_raw(s) });
    }
}
