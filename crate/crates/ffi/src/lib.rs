//! C ABI over `dgin`.
//!
//! Every fallible call returns a [`DginStatus`]; on failure the message is available from
//! [`dgin_last_error`] on the same thread until the next failing call. Strings returned
//! to the caller are owned by the caller and released with [`dgin_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dgin::{
    component_lower_bound, dd_compare, gotzmann_number, CensusReport, DdMethod, DdVerdict,
    DegreeSlice, Error, ExtensorTerm, HilbertPolynomial, TermOrder,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DginStatus {
    Ok = 0,
    Parse = 1,
    Dimension = 2,
    UndefinedMin = 3,
    Admissibility = 4,
    Resource = 5,
    Unsupported = 6,
    Precondition = 7,
    Genericity = 8,
    Parameter = 9,
    NotStabilized = 10,
    NullPointer = 11,
    InvalidUtf8 = 12,
    OutOfRange = 13,
    Panic = 14,
}

impl From<&Error> for DginStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } => DginStatus::Parse,
            Error::Dimension(_) => DginStatus::Dimension,
            Error::UndefinedMin => DginStatus::UndefinedMin,
            Error::Admissibility(_) => DginStatus::Admissibility,
            Error::Resource { .. } => DginStatus::Resource,
            Error::Unsupported(_) => DginStatus::Unsupported,
            Error::Precondition(_) => DginStatus::Precondition,
            Error::Genericity(_) => DginStatus::Genericity,
            Error::Parameter(_) => DginStatus::Parameter,
            Error::NotStabilized(_) => DginStatus::NotStabilized,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DginVerdict {
    Less = 0,
    Greater = 1,
    Equal = 2,
    Incomparable = 3,
}

impl From<DdVerdict> for DginVerdict {
    fn from(v: DdVerdict) -> Self {
        match v {
            DdVerdict::Less => DginVerdict::Less,
            DdVerdict::Greater => DginVerdict::Greater,
            DdVerdict::Equal => DginVerdict::Equal,
            DdVerdict::Incomparable => DginVerdict::Incomparable,
        }
    }
}

/// Opaque census of saturated Borel ideals with its `≺≺`-maximal members.
pub struct DginCensus(CensusReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: DginStatus, msg: String) -> DginStatus {
    set_error(msg);
    status
}

/// Runs `f`, mapping errors and panics to status codes.
fn guard(f: impl FnOnce() -> Result<(), DginStatus>) -> DginStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DginStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(DginStatus::Panic, "internal panic".into()),
    }
}

fn lift<T>(r: dgin::Result<T>) -> Result<T, DginStatus> {
    r.map_err(|e| fail(DginStatus::from(&e), e.to_string()))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, DginStatus> {
    if p.is_null() {
        return Err(fail(DginStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(DginStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, DginStatus> {
    p.as_mut()
        .ok_or_else(|| fail(DginStatus::NullPointer, format!("{what} is null")))
}

unsafe fn census<'a>(c: *const DginCensus) -> Result<&'a CensusReport, DginStatus> {
    c.as_ref()
        .map(|c| &c.0)
        .ok_or_else(|| fail(DginStatus::NullPointer, "census handle is null".into()))
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failing call on this thread. Empty if none; owned by the library.
#[no_mangle]
pub extern "C" fn dgin_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dgin_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Gotzmann number of the Hilbert polynomial `poly`, e.g. `"7t-5"`.
///
/// # Safety
/// `poly` must be a NUL-terminated string; `out_number` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgin_gotzmann_number(
    poly: *const c_char,
    out_number: *mut usize,
) -> DginStatus {
    guard(|| {
        let p = lift(HilbertPolynomial::parse(text(poly, "poly")?))?;
        *out(out_number, "out_number")? = lift(gotzmann_number(&p))?;
        Ok(())
    })
}

/// Enumerates the census of `poly` in `n`-dimensional projective space and compares its
/// terms under `order` (`lex`, `deglex`, `degrevlex` or `weight:w0,…,wn`).
///
/// # Safety
/// `poly` and `order` must be NUL-terminated strings; `out_census` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgin_census_new(
    poly: *const c_char,
    n: usize,
    order: *const c_char,
    out_census: *mut *mut DginCensus,
) -> DginStatus {
    guard(|| {
        let slot = out(out_census, "out_census")?;
        *slot = ptr::null_mut();
        let p = lift(HilbertPolynomial::parse(text(poly, "poly")?))?;
        let o: TermOrder = lift(text(order, "order")?.parse())?;
        let report = lift(component_lower_bound(&p, n, &o))?;
        *slot = Box::into_raw(Box::new(DginCensus(report)));
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle from [`dgin_census_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dgin_census_free(c: *mut DginCensus) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of census members; 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dgin_census_count(c: *const DginCensus) -> usize {
    c.as_ref().map_or(0, |c| c.0.count)
}

/// Gotzmann number of the census polynomial; 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dgin_census_degree(c: *const DginCensus) -> u32 {
    c.as_ref().map_or(0, |c| c.0.r)
}

/// Minimal generators of member `index`, comma separated. Free with [`dgin_string_free`].
///
/// # Safety
/// `c` must be a live handle; `out_text` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgin_census_generators(
    c: *const DginCensus,
    index: usize,
    out_text: *mut *mut c_char,
) -> DginStatus {
    guard(|| {
        let slot = out(out_text, "out_text")?;
        let rep = census(c)?;
        let ideal = rep.census.get(index).ok_or_else(|| {
            fail(
                DginStatus::OutOfRange,
                format!("index {index} >= {}", rep.count),
            )
        })?;
        *slot = to_c(ideal.to_string());
        Ok(())
    })
}

/// Number of `≺≺`-maximal members; 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dgin_census_maximal_count(c: *const DginCensus) -> usize {
    c.as_ref().map_or(0, |c| c.0.maximal.len())
}

/// Census index of the `k`-th maximal member.
///
/// # Safety
/// `c` must be a live handle; `out_index` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgin_census_maximal(
    c: *const DginCensus,
    k: usize,
    out_index: *mut usize,
) -> DginStatus {
    guard(|| {
        let slot = out(out_index, "out_index")?;
        let rep = census(c)?;
        *slot = *rep.maximal.get(k).ok_or_else(|| {
            fail(
                DginStatus::OutOfRange,
                format!("k {k} >= {}", rep.maximal.len()),
            )
        })?;
        Ok(())
    })
}

/// Lower bounds on the number of components. `out_refined` is set to 0 when the refined
/// bound does not apply.
///
/// # Safety
/// `c` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgin_census_bounds(
    c: *const DginCensus,
    out_basic: *mut usize,
    out_refined: *mut usize,
) -> DginStatus {
    guard(|| {
        let basic = out(out_basic, "out_basic")?;
        let refined = out(out_refined, "out_refined")?;
        let rep = census(c)?;
        *basic = rep.bound_basic;
        *refined = rep.bound_refined.unwrap_or(0);
        Ok(())
    })
}

/// Compares two degree slices, e.g. `"[x2^2, x1*x2]"`, in `n`-dimensional projective
/// space under `order`.
///
/// # Safety
/// All strings must be NUL-terminated; `out_verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dgin_compare(
    n: usize,
    order: *const c_char,
    a: *const c_char,
    b: *const c_char,
    out_verdict: *mut DginVerdict,
) -> DginStatus {
    guard(|| {
        let slot = out(out_verdict, "out_verdict")?;
        let o: TermOrder = lift(text(order, "order")?.parse())?;
        let term =
            |s: &str| DegreeSlice::parse(s, n + 1).and_then(|d| ExtensorTerm::new(d, o.clone()));
        let ta = lift(term(text(a, "a")?))?;
        let tb = lift(term(text(b, "b")?))?;
        *slot = lift(dd_compare(&ta, &tb, DdMethod::default()))?.into();
        Ok(())
    })
}
