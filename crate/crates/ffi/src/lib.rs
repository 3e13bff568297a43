//! C ABI over `berger-spectra`.
//!
//! Every fallible call returns a [`BergerStatus`]; on failure the message is
//! available from [`berger_last_error`] on the same thread. Handles are
//! created by `*_new`/constructor calls and released by the matching `*_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use berger_spectra as bs;
use bs::exact::{fmt_q, q, Q};
use bs::jacobi::{ModelSubmanifold, TruncationPolicy};
use bs::stability::Verdict;
use num_traits::{Signed, ToPrimitive, Zero};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BergerStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Domain = 3,
    Unsupported = 4,
    OutOfScope = 5,
    Truncation = 6,
    CapExceeded = 7,
    Overflow = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BergerVerdict {
    Stable = 0,
    Unstable = 1,
    Boundary = 2,
    Undetermined = 3,
}

/// Exact τ² in (0, 1].
pub struct BergerParam(bs::berger::BergerParam);

pub struct BergerModel(ModelSubmanifold);

pub struct BergerIndexReport(bs::jacobi::IndexReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &bs::Error) -> BergerStatus {
    match err {
        bs::Error::Domain(_) => BergerStatus::Domain,
        bs::Error::Unsupported(_) => BergerStatus::Unsupported,
        bs::Error::OutOfScope(_) => BergerStatus::OutOfScope,
        bs::Error::InvalidInput(_) => BergerStatus::InvalidInput,
        bs::Error::CapExceeded { .. } => BergerStatus::CapExceeded,
        bs::Error::Truncation { .. } => BergerStatus::Truncation,
    }
}

struct Fail(BergerStatus, String);

impl From<bs::Error> for Fail {
    fn from(e: bs::Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BergerStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics to a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BergerStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BergerStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            BergerStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

fn ratio_parts(x: &Q) -> Result<(i64, i64), Fail> {
    match (x.numer().to_i64(), x.denom().to_i64()) {
        (Some(n), Some(d)) => Ok((n, d)),
        _ => Err(Fail(BergerStatus::Overflow, format!("{} does not fit in 64 bits", fmt_q(x)))),
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn berger_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be NULL.
#[no_mangle]
pub unsafe extern "C" fn berger_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// τ² = num/den.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_param_new(num: i64, den: i64, out: *mut *mut BergerParam) -> BergerStatus {
    guard(|| {
        let p = bs::berger::BergerParam::from_ratio(num, den)?;
        put(out, boxed(BergerParam(p)), "out")
    })
}

/// τ² from text such as "3/10". Decimal input is refused.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_param_parse(text: *const c_char, out: *mut *mut BergerParam) -> BergerStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Fail(BergerStatus::InvalidInput, "text is not UTF-8".into()))?;
        let p = bs::berger::BergerParam::new(bs::exact::parse_q(s)?)?;
        put(out, boxed(BergerParam(p)), "out")
    })
}

/// Reduced numerator and denominator of τ².
///
/// # Safety
/// `param` must be a live handle; `num` and `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn berger_param_tau_sq(param: *const BergerParam, num: *mut i64, den: *mut i64) -> BergerStatus {
    guard(|| {
        let (n, d) = ratio_parts(deref(param, "param")?.0.tau_sq())?;
        put(num, n, "num")?;
        put(den, d, "den")
    })
}

/// # Safety
/// `param` must come from this library or be NULL; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn berger_param_free(param: *mut BergerParam) {
    free(param)
}

unsafe fn new_model(m: ModelSubmanifold, out: *mut *mut BergerModel) -> BergerStatus {
    guard(|| {
        m.validate()?;
        put(out, boxed(BergerModel(m)), "out")
    })
}

/// Totally geodesic S^{2m+1} in S^{2n+1}, m < n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_model_tg_berger(n: u32, m: u32, out: *mut *mut BergerModel) -> BergerStatus {
    if m >= n {
        return guard(|| Err(Fail(BergerStatus::Domain, format!("need m < n, got m={m}, n={n}"))));
    }
    new_model(ModelSubmanifold::TotallyGeodesicBergerSphere { n, m }, out)
}

/// Hopf circle covered s times, in S^{2n+1}.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_model_circle(n: u32, s: u32, out: *mut *mut BergerModel) -> BergerStatus {
    new_model(ModelSubmanifold::CircleCover { n, s }, out)
}

/// RP³ (`quotient` true) or S³ over the Veronese surface.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_model_veronese(quotient: bool, out: *mut *mut BergerModel) -> BergerStatus {
    let m = if quotient { ModelSubmanifold::VeroneseRp3 } else { ModelSubmanifold::VeroneseS3 };
    new_model(m, out)
}

/// Real great sphere S^d in S^{2n+1}, 1 ≤ d ≤ n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_model_totally_real(n: u32, d: u32, out: *mut *mut BergerModel) -> BergerStatus {
    new_model(ModelSubmanifold::TotallyRealSphere { n, d }, out)
}

/// Minimal Clifford hypersurface S^{2m1+1} × S^{2m2+1}.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_model_clifford(m1: u32, m2: u32, out: *mut *mut BergerModel) -> BergerStatus {
    new_model(ModelSubmanifold::CliffordHypersurface { m1, m2 }, out)
}

/// Dimension of the submanifold, 0 for NULL.
///
/// # Safety
/// `model` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn berger_model_dim(model: *const BergerModel) -> u32 {
    model.as_ref().map_or(0, |m| m.0.dim())
}

/// # Safety
/// `model` must come from this library or be NULL; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn berger_model_free(model: *mut BergerModel) {
    free(model)
}

/// Index and nullity with an automatically certified truncation.
///
/// # Safety
/// `model` and `param` must be live handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_index(
    model: *const BergerModel,
    param: *const BergerParam,
    out: *mut *mut BergerIndexReport,
) -> BergerStatus {
    guard(|| {
        let r = bs::jacobi::enumerate_index(&deref(model, "model")?.0, &deref(param, "param")?.0, &TruncationPolicy::default())?;
        put(out, boxed(BergerIndexReport(r)), "out")
    })
}

/// As [`berger_index`] with a fixed truncation; fails with `Truncation` if
/// it is not certified.
///
/// # Safety
/// `model` and `param` must be live handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_index_with_kmax(
    model: *const BergerModel,
    param: *const BergerParam,
    k_max: u32,
    out: *mut *mut BergerIndexReport,
) -> BergerStatus {
    guard(|| {
        let r = bs::jacobi::enumerate_with_kmax(&deref(model, "model")?.0, &deref(param, "param")?.0, k_max)?;
        put(out, boxed(BergerIndexReport(r)), "out")
    })
}

/// # Safety
/// `report` must be a live handle; the out pointers valid.
#[no_mangle]
pub unsafe extern "C" fn berger_report_counts(
    report: *const BergerIndexReport,
    index: *mut u64,
    nullity: *mut u64,
) -> BergerStatus {
    guard(|| {
        let r = &deref(report, "report")?.0;
        put(index, r.index, "index")?;
        put(nullity, r.nullity, "nullity")
    })
}

/// Number of nonpositive modes, 0 for NULL.
///
/// # Safety
/// `report` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn berger_report_mode_count(report: *const BergerIndexReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.nonpositive_modes.len())
}

/// Value (rounded to double) and multiplicity of nonpositive mode `i`, in
/// ascending order.
///
/// # Safety
/// `report` must be a live handle; the out pointers valid.
#[no_mangle]
pub unsafe extern "C" fn berger_report_mode(
    report: *const BergerIndexReport,
    i: usize,
    value: *mut f64,
    multiplicity: *mut u64,
) -> BergerStatus {
    guard(|| {
        let r = &deref(report, "report")?.0;
        let m = r
            .nonpositive_modes
            .get(i)
            .ok_or_else(|| Fail(BergerStatus::InvalidInput, format!("mode {i} out of range")))?;
        put(value, m.value.to_f64(), "value")?;
        put(multiplicity, m.multiplicity, "multiplicity")
    })
}

/// The full report as JSON; free with [`berger_string_free`].
///
/// # Safety
/// `report` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_report_json(report: *const BergerIndexReport, out: *mut *mut c_char) -> BergerStatus {
    guard(|| {
        let r = &deref(report, "report")?.0;
        let text = serde_json::to_string(r).map_err(|e| Fail(BergerStatus::InvalidInput, e.to_string()))?;
        let c = CString::new(text).map_err(|e| Fail(BergerStatus::InvalidInput, e.to_string()))?;
        put(out, c.into_raw(), "out")
    })
}

/// # Safety
/// `report` must come from this library or be NULL; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn berger_report_free(report: *mut BergerIndexReport) {
    free(report)
}

/// μ_{k,p} of the Berger sphere S^{2n+1} as an exact fraction, and its multiplicity.
///
/// # Safety
/// `param` must be a live handle; the out pointers valid.
#[no_mangle]
pub unsafe extern "C" fn berger_laplace_eigenvalue(
    n: u32,
    param: *const BergerParam,
    k: u32,
    p: u32,
    num: *mut i64,
    den: *mut i64,
    multiplicity: *mut u64,
) -> BergerStatus {
    guard(|| {
        let tau = &deref(param, "param")?.0;
        let (a, b) = ratio_parts(&bs::spectra::berger_eigenvalue(n, tau, k, p)?)?;
        put(num, a, "num")?;
        put(den, b, "den")?;
        put(multiplicity, bs::spectra::berger_multiplicity(n, k, p)?, "multiplicity")
    })
}

/// Verdict for a library model, theorems first and the spectrum where they are silent.
///
/// # Safety
/// `model` and `param` must be live handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_stability(
    model: *const BergerModel,
    param: *const BergerParam,
    out: *mut BergerVerdict,
) -> BergerStatus {
    guard(|| {
        let (v, _) = bs::stability::classify_model(&deref(model, "model")?.0, &deref(param, "param")?.0)?;
        let c = match v.verdict {
            Verdict::Stable => BergerVerdict::Stable,
            Verdict::Unstable => BergerVerdict::Unstable,
            Verdict::Boundary => BergerVerdict::Boundary,
            Verdict::Undetermined => BergerVerdict::Undetermined,
        };
        put(out, c, "out")
    })
}

/// Moduli vector (x, y) of the minimal Clifford torus.
///
/// # Safety
/// `param` must be a live handle; the out pointers valid.
#[no_mangle]
pub unsafe extern "C" fn berger_moduli_vector(param: *const BergerParam, x: *mut f64, y: *mut f64) -> BergerStatus {
    guard(|| {
        let v = bs::stability::clifford_moduli_vector(&deref(param, "param")?.0);
        put(x, v.x, "x")?;
        put(y, v.y, "y")
    })
}

/// Exact sign (-1, 0, 1) of the proof polynomial at x = x_num/x_den.
///
/// # Safety
/// `param` must be a live handle; `sign` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn berger_proof_polynomial_sign(
    d: u32,
    q_: u32,
    param: *const BergerParam,
    x_num: i64,
    x_den: i64,
    sign: *mut i32,
) -> BergerStatus {
    guard(|| {
        if x_den == 0 {
            return Err(Fail(BergerStatus::InvalidInput, "zero denominator".into()));
        }
        let v = bs::stability::proof_polynomial_p(d, q_, &deref(param, "param")?.0, &q(x_num, x_den))?;
        let s = if v.is_zero() { 0 } else if v.is_negative() { -1 } else { 1 };
        put(sign, s, "sign")
    })
}
