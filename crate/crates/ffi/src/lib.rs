//! C interface to `fta-core`.
//!
//! Polynomials and root sets are opaque heap handles owned by the caller
//! and released with the matching `*_free` function. Every fallible call
//! returns an [`FtaStatus`]; on failure a message is kept per thread and can
//! be read with [`fta_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fta_core::estermann::{verify_lemma, LemmaError};
use fta_core::solver::{find_all_roots, nth_root};
use fta_core::{ComplexPoly, DescentConfig, RootResult, SolveError};
use num_complex::Complex64;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FtaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ZeroPolynomial = 3,
    ConstantPolynomial = 4,
    ConvergenceFailure = 5,
    OutOfRange = 6,
    Panic = 99,
}

/// Polynomial with complex double coefficients.
pub struct FtaPolynomial {
    inner: ComplexPoly,
}

/// Roots returned by [`fta_solve`], sorted by real then imaginary part.
pub struct FtaRootSet {
    roots: Vec<RootResult>,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct FtaRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub multiplicity: usize,
    pub iterations: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: FtaStatus, msg: impl Into<String>) -> FtaStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> FtaStatus) -> FtaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(FtaStatus::Panic, "internal panic"))
}

fn solve_status(e: &SolveError) -> FtaStatus {
    use fta_core::poly::PolyError;
    match e {
        SolveError::Poly(PolyError::ZeroPolynomial) => FtaStatus::ZeroPolynomial,
        SolveError::Poly(PolyError::Constant) => FtaStatus::ConstantPolynomial,
        SolveError::InvalidConfig(_) | SolveError::InvalidInput(_) => FtaStatus::InvalidArgument,
        SolveError::Stage { source, .. } => solve_status(source),
        _ => FtaStatus::ConvergenceFailure,
    }
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next `fta_*` call on the same thread.
#[no_mangle]
pub extern "C" fn fta_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a polynomial from `len` coefficients, constant term first.
///
/// # Safety
/// `re` and `im` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fta_poly_new(
    re: *const f64,
    im: *const f64,
    len: usize,
    out: *mut *mut FtaPolynomial,
) -> FtaStatus {
    guard(|| {
        if out.is_null() || (len > 0 && (re.is_null() || im.is_null())) {
            return fail(FtaStatus::NullPointer, "null argument");
        }
        let (re, im) = if len == 0 {
            (&[][..], &[][..])
        } else {
            (
                std::slice::from_raw_parts(re, len),
                std::slice::from_raw_parts(im, len),
            )
        };
        if re.iter().chain(im).any(|x| !x.is_finite()) {
            return fail(FtaStatus::InvalidArgument, "coefficients must be finite");
        }
        let coeffs = re
            .iter()
            .zip(im)
            .map(|(&a, &b)| Complex64::new(a, b))
            .collect();
        *out = Box::into_raw(Box::new(FtaPolynomial {
            inner: ComplexPoly::new(coeffs),
        }));
        FtaStatus::Ok
    })
}

/// Degree of `poly`, or -1 for the zero polynomial or a NULL handle.
///
/// # Safety
/// `poly` must be NULL or a live handle from [`fta_poly_new`].
#[no_mangle]
pub unsafe extern "C" fn fta_poly_degree(poly: *const FtaPolynomial) -> i64 {
    poly.as_ref()
        .and_then(|p| p.inner.degree())
        .map_or(-1, |d| d as i64)
}

/// # Safety
/// `poly` must be NULL or a handle from [`fta_poly_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fta_poly_free(poly: *mut FtaPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Finds all roots of `poly` with the default configuration and the given
/// restart seed.
///
/// # Safety
/// `poly` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fta_solve(
    poly: *const FtaPolynomial,
    seed: u64,
    out: *mut *mut FtaRootSet,
) -> FtaStatus {
    guard(|| {
        let Some(p) = poly.as_ref() else {
            return fail(FtaStatus::NullPointer, "null polynomial");
        };
        if out.is_null() {
            return fail(FtaStatus::NullPointer, "null output");
        }
        let cfg = DescentConfig {
            seed,
            ..DescentConfig::default()
        };
        match find_all_roots(&p.inner, &cfg, false) {
            Ok(roots) => {
                *out = Box::into_raw(Box::new(FtaRootSet { roots }));
                FtaStatus::Ok
            }
            Err(e) => fail(solve_status(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `set` must be NULL or a live handle from [`fta_solve`].
#[no_mangle]
pub unsafe extern "C" fn fta_roots_len(set: *const FtaRootSet) -> usize {
    set.as_ref().map_or(0, |s| s.roots.len())
}

/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fta_roots_get(
    set: *const FtaRootSet,
    index: usize,
    out: *mut FtaRoot,
) -> FtaStatus {
    guard(|| {
        let Some(s) = set.as_ref() else {
            return fail(FtaStatus::NullPointer, "null root set");
        };
        if out.is_null() {
            return fail(FtaStatus::NullPointer, "null output");
        }
        let Some(r) = s.roots.get(index) else {
            return fail(
                FtaStatus::OutOfRange,
                format!("index {index} out of range for {} roots", s.roots.len()),
            );
        };
        *out = FtaRoot {
            re: r.root.re,
            im: r.root.im,
            residual: r.residual,
            multiplicity: r.multiplicity_estimate,
            iterations: r.iterations,
        };
        FtaStatus::Ok
    })
}

/// # Safety
/// `set` must be NULL or a handle from [`fta_solve`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fta_roots_free(set: *mut FtaRootSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Checks the direction lemma exactly for even `k >= 2`; writes 1 to
/// `pass` when it holds, 0 otherwise.
///
/// # Safety
/// `pass` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fta_verify_lemma(k: u64, pass: *mut i32) -> FtaStatus {
    guard(|| {
        if pass.is_null() {
            return fail(FtaStatus::NullPointer, "null output");
        }
        match verify_lemma(k) {
            Ok(rep) => {
                *pass = i32::from(rep.pass);
                FtaStatus::Ok
            }
            Err(e @ (LemmaError::NotEvenPositive(_) | LemmaError::ZeroOrder)) => {
                fail(FtaStatus::InvalidArgument, e.to_string())
            }
        }
    })
}

/// Nonnegative `n`-th root of `a >= 0`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fta_nth_root(a: f64, n: u32, out: *mut f64) -> FtaStatus {
    guard(|| {
        if out.is_null() {
            return fail(FtaStatus::NullPointer, "null output");
        }
        match nth_root(a, n, &DescentConfig::default()) {
            Ok(b) => {
                *out = b;
                FtaStatus::Ok
            }
            Err(e) => fail(solve_status(&e), e.to_string()),
        }
    })
}
