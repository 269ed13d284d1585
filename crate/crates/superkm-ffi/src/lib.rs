//! C interface to `superkm`.
//!
//! Diagrams cross the boundary as opaque `SkmDiagram` handles. Every function
//! returns an `SkmStatus`; on failure `skm_last_error` describes the problem
//! for the calling thread. Strings handed out are freed with `skm_string_free`,
//! handles with `skm_diagram_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use superkm::cartan::{Diagram, DiagramFile};
use superkm::classify::{
    is_finite_type, is_regular_kac_moody, is_subfinite, qmnt_report, recognize_family, solve_qmnt,
};
use superkm::cli::report;
use superkm::integrable::{is_integrable_hw, IntegrableError, Weight};
use superkm::reflect::{Base, ReflectError};
use superkm::scalars::Scalar;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkmStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Malformed JSON, scalar or weight.
    Parse = 2,
    /// Well-formed input that the operation does not accept.
    Invalid = 3,
    /// The reflection is not defined at this vertex.
    Refused = 4,
    Internal = 5,
    Utf8 = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkmCheck {
    Gcm = 0,
    Regular = 1,
    Subfinite = 2,
    FiniteType = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkmBranch {
    Plus = 0,
    Minus = 1,
}

/// Verdicts written through `int32_t *` out-parameters.
pub const SKM_TRUE: i32 = 1;
pub const SKM_FALSE: i32 = 0;
pub const SKM_INCONCLUSIVE: i32 = -1;

/// Opaque handle: a normalized diagram and the row scales of its source matrix.
pub struct SkmDiagram {
    diagram: Diagram,
    scales: Vec<Scalar>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(SkmStatus, String);

fn fail<T>(status: SkmStatus, msg: impl Into<String>) -> Result<T, Fail> {
    Err(Fail(status, msg.into()))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SkmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SkmStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SkmStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return fail(SkmStatus::NullPointer, format!("{what} is null"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(SkmStatus::Utf8, format!("{what}: {e}")))
}

unsafe fn handle<'a>(d: *const SkmDiagram) -> Result<&'a SkmDiagram, Fail> {
    d.as_ref()
        .ok_or_else(|| Fail(SkmStatus::NullPointer, "diagram is null".into()))
}

unsafe fn out<T>(p: *mut T, v: T) -> Result<(), Fail> {
    if p.is_null() {
        return fail(SkmStatus::NullPointer, "output pointer is null");
    }
    p.write(v);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("no interior nul")
        .into_raw()
}

fn new_handle(diagram: Diagram, scales: Vec<Scalar>) -> *mut SkmDiagram {
    Box::into_raw(Box::new(SkmDiagram { diagram, scales }))
}

fn verdict(v: Option<bool>) -> i32 {
    match v {
        Some(true) => SKM_TRUE,
        Some(false) => SKM_FALSE,
        None => SKM_INCONCLUSIVE,
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into this library.
#[no_mangle]
pub extern "C" fn skm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a diagram file (`{"parity": [...], "matrix": [[...]]}`) and normalizes it.
///
/// # Safety
/// `json` must be a nul-terminated string and `out_diagram` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn skm_diagram_from_json(
    json: *const c_char,
    out_diagram: *mut *mut SkmDiagram,
) -> SkmStatus {
    guard(|| {
        let s = text(json, "json")?;
        let file = DiagramFile::parse(s).map_err(|e| Fail(SkmStatus::Parse, e.to_string()))?;
        let (d, scales) = file
            .to_diagram_with_scales()
            .map_err(|e| Fail(SkmStatus::Parse, e.to_string()))?;
        out(out_diagram, new_handle(d, scales))
    })
}

/// # Safety
/// `d` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn skm_diagram_free(d: *mut SkmDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn skm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of vertices.
///
/// # Safety
/// `d` must be a live handle and `out_size` writable.
#[no_mangle]
pub unsafe extern "C" fn skm_diagram_size(d: *const SkmDiagram, out_size: *mut usize) -> SkmStatus {
    guard(|| out(out_size, handle(d)?.diagram.n()))
}

/// The normalized diagram in the file format.
///
/// # Safety
/// `d` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn skm_diagram_to_json(
    d: *const SkmDiagram,
    out_json: *mut *mut c_char,
) -> SkmStatus {
    guard(|| {
        let h = handle(d)?;
        out(
            out_json,
            c_string(DiagramFile::from_diagram(&h.diagram).render()),
        )
    })
}

/// Odd reflection at the 0-based `vertex`; the result is a new handle whose
/// weights are read on its normalized coroots.
///
/// # Safety
/// `d` must be a live handle and `out_diagram` writable.
#[no_mangle]
pub unsafe extern "C" fn skm_odd_reflect(
    d: *const SkmDiagram,
    vertex: usize,
    out_diagram: *mut *mut SkmDiagram,
) -> SkmStatus {
    guard(|| {
        let h = handle(d)?;
        let b = Base::new(&h.diagram).odd_reflect(vertex).map_err(|e| {
            let status = match e {
                ReflectError::NotRegular(_) => SkmStatus::Refused,
                _ => SkmStatus::Invalid,
            };
            Fail(status, e.to_string())
        })?;
        let n = b.diagram().n();
        out(
            out_diagram,
            new_handle(b.diagram().clone(), vec![Scalar::one(); n]),
        )
    })
}

/// Runs one decision procedure; `out_verdict` receives `SKM_TRUE`,
/// `SKM_FALSE` or `SKM_INCONCLUSIVE`.
///
/// # Safety
/// `d` must be a live handle and `out_verdict` writable.
#[no_mangle]
pub unsafe extern "C" fn skm_check(
    d: *const SkmDiagram,
    what: SkmCheck,
    max_depth: usize,
    out_verdict: *mut i32,
) -> SkmStatus {
    guard(|| {
        let d = &handle(d)?.diagram;
        let v = match what {
            SkmCheck::Gcm => Some(superkm::cartan::is_generalized_cartan(d).is_empty()),
            SkmCheck::Regular => is_regular_kac_moody(d, max_depth).is_regular(),
            SkmCheck::Subfinite => is_subfinite(d, max_depth)
                .map_err(|e| Fail(SkmStatus::Invalid, e.to_string()))?
                .is_subfinite(),
            SkmCheck::FiniteType => Some(is_finite_type(d).unwrap_or(false)),
        };
        out(out_verdict, verdict(v))
    })
}

/// Family label such as `"B(2,1)"` or `"S(1,2,α) with α=p"`; `"Unknown"` when
/// nothing matches.
///
/// # Safety
/// `d` must be a live handle and `out_label` writable.
#[no_mangle]
pub unsafe extern "C" fn skm_classify(
    d: *const SkmDiagram,
    out_label: *mut *mut c_char,
) -> SkmStatus {
    guard(|| {
        let l = recognize_family(&handle(d)?.diagram);
        out(out_label, c_string(l.to_string()))
    })
}

/// Solves for `Q±(m,n,t)`. The diagram handle and a JSON report (entries,
/// determinant, growth, hyperbolicity) are returned; either output may be null.
///
/// # Safety
/// Non-null output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn skm_qmnt_solve(
    m: i64,
    n: i64,
    t: i64,
    branch: SkmBranch,
    out_diagram: *mut *mut SkmDiagram,
    out_report: *mut *mut c_char,
) -> SkmStatus {
    guard(|| {
        let (p, q) = solve_qmnt(m, n, t).map_err(|e| Fail(SkmStatus::Invalid, e.to_string()))?;
        let s = match branch {
            SkmBranch::Plus => p,
            SkmBranch::Minus => q,
        };
        if !out_report.is_null() {
            let r = report::qmnt(&s, &qmnt_report(&s));
            out_report.write(c_string(r.to_string()));
        }
        if !out_diagram.is_null() {
            out_diagram.write(new_handle(s.diagram.clone(), s.row_scales.clone()));
        }
        Ok(())
    })
}

/// Integrability of `L(lambda)`. `weight` is a comma-separated list of scalar
/// expressions, one per vertex, on the coroots of the rows the handle was
/// parsed from.
///
/// # Safety
/// `d` must be a live handle, `weight` a nul-terminated string and
/// `out_verdict` writable.
#[no_mangle]
pub unsafe extern "C" fn skm_integrable(
    d: *const SkmDiagram,
    weight: *const c_char,
    max_depth: usize,
    out_verdict: *mut i32,
) -> SkmStatus {
    guard(|| {
        let h = handle(d)?;
        let w = Weight::parse(text(weight, "weight")?)
            .map_err(|e| Fail(SkmStatus::Parse, e.to_string()))?;
        if w.len() != h.diagram.n() {
            return fail(
                SkmStatus::Invalid,
                format!(
                    "weight has {} values, diagram has {} vertices",
                    w.len(),
                    h.diagram.n()
                ),
            );
        }
        let v = match is_integrable_hw(&h.diagram, &w.rescaled(&h.scales), max_depth) {
            Ok(v) => Some(v.integrable),
            Err(IntegrableError::NotIntegrableAt { .. }) => Some(false),
            Err(IntegrableError::Truncated(_) | IntegrableError::Unresolved(_)) => None,
            Err(e) => return fail(SkmStatus::Invalid, e.to_string()),
        };
        out(out_verdict, verdict(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn last_error_is_per_call() {
        let mut d = ptr::null_mut();
        let bad = CString::new("{").unwrap();
        assert_eq!(
            unsafe { skm_diagram_from_json(bad.as_ptr(), &mut d) },
            SkmStatus::Parse
        );
        let msg = unsafe { CStr::from_ptr(skm_last_error()) }
            .to_str()
            .unwrap()
            .to_string();
        assert!(!msg.is_empty());
        let ok = CString::new(r#"{"parity":[0],"matrix":[["2"]]}"#).unwrap();
        assert_eq!(
            unsafe { skm_diagram_from_json(ok.as_ptr(), &mut d) },
            SkmStatus::Ok
        );
        assert!(unsafe { CStr::from_ptr(skm_last_error()) }
            .to_bytes()
            .is_empty());
        unsafe { skm_diagram_free(d) };
    }
}
