//! C ABI over the `partial_entailment` crate.
//!
//! Conventions:
//! - Every fallible function returns a [`PeStatus`] and writes its result
//!   through an out-pointer. On failure the out-pointer is left untouched
//!   and [`pe_last_error_message`] describes the problem.
//! - Objects are opaque and owned by the caller once returned; release them
//!   with the matching `*_free` function. Freeing `NULL` is a no-op.
//! - Strings handed out by the library are NUL-terminated UTF-8 and must be
//!   released with [`pe_string_free`].
//! - A `NULL` theory argument means the empty theory.
//! - The error message is thread-local; handles may be shared between
//!   threads for reading.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use partial_entailment::{
    self as pe, EntailmentKind, Error, Formula, LiteralSet, Reason, Theory,
};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    TooManyAtoms = 4,
    InvalidArgument = 5,
    IndexOutOfRange = 6,
    /// A Rust panic was caught at the boundary; this is a library bug.
    Internal = 7,
}

/// Values accepted for the `kind` argument of [`pe_partially_entails`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeKind {
    Weak = 0,
    Plain = 1,
    Strong = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeReason {
    Ok = 0,
    /// `P` is inconsistent with the theory.
    EmptyPi = 1,
    /// Some prime implicant of `P` has no partner; see the refuter.
    NoPartner = 2,
}

/// Outcome of a partial entailment query.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct PeVerdict {
    pub holds: bool,
    pub reason: PeReason,
}

pub struct PeFormula(Formula);

pub struct PeTheory(Theory);

pub struct PePrimeImplicants(Vec<LiteralSet>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(PeStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Syntax { .. } | Error::EmptyInput | Error::InvalidAtom(_) | Error::AtLine { .. } => {
                PeStatus::ParseError
            }
            Error::TooManyAtoms { .. } => PeStatus::TooManyAtoms,
            _ => PeStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("NUL bytes removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PeStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error(None);
            PeStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(Some(message));
            status
        }
        Err(_) => {
            set_last_error(Some("internal error: panic in the reasoning library".into()));
            PeStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(PeStatus::NullPointer, format!("`{what}` must not be NULL"))
}

unsafe fn utf8<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PeStatus::InvalidUtf8, format!("`{what}` is not valid UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("printed forms contain no NUL").into_raw()
}

unsafe fn theory_or_empty(t: *const PeTheory, empty: &Theory) -> &Theory {
    match t.as_ref() {
        Some(PeTheory(t)) => t,
        None => empty,
    }
}

/// Message for the most recent failed call on this thread, or `NULL` if the
/// last call succeeded. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn pe_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn pe_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be `NULL` or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pe_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pe_formula_parse(text: *const c_char, out: *mut *mut PeFormula) -> PeStatus {
    guard(|| {
        let f = Formula::parse(utf8(text, "text")?)?;
        write(out, Box::into_raw(Box::new(PeFormula(f))), "out")
    })
}

/// Canonical printed form.
///
/// # Safety
/// `f` must be a live formula handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pe_formula_to_string(f: *const PeFormula, out: *mut *mut c_char) -> PeStatus {
    guard(|| {
        let f = deref(f, "formula")?;
        write(out, c_string(f.0.to_string()), "out")
    })
}

/// # Safety
/// `f` must be `NULL` or a handle from [`pe_formula_parse`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pe_formula_free(f: *mut PeFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// A new, empty theory.
#[no_mangle]
pub extern "C" fn pe_theory_new() -> *mut PeTheory {
    Box::into_raw(Box::new(PeTheory(Theory::new())))
}

/// Parses one formula per line; `#` starts a comment.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pe_theory_parse(text: *const c_char, out: *mut *mut PeTheory) -> PeStatus {
    guard(|| {
        let t = Theory::parse_lines(utf8(text, "text")?)?;
        write(out, Box::into_raw(Box::new(PeTheory(t))), "out")
    })
}

/// Appends a copy of `f`.
///
/// # Safety
/// Both handles must be live; `t` must not be used concurrently.
#[no_mangle]
pub unsafe extern "C" fn pe_theory_add(t: *mut PeTheory, f: *const PeFormula) -> PeStatus {
    guard(|| {
        let f = deref(f, "formula")?.0.clone();
        t.as_mut().ok_or_else(|| null("theory"))?.0.push(f);
        Ok(())
    })
}

/// Number of formulas, or 0 for `NULL`.
///
/// # Safety
/// `t` must be `NULL` or a live theory handle.
#[no_mangle]
pub unsafe extern "C" fn pe_theory_len(t: *const PeTheory) -> usize {
    t.as_ref().map_or(0, |t| t.0.len())
}

/// # Safety
/// `t` must be `NULL` or a theory handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pe_theory_free(t: *mut PeTheory) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Prime implicants of `p` relative to `t`, in canonical order.
///
/// # Safety
/// `t` must be `NULL` or live, `p` live, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pe_prime_implicants(
    t: *const PeTheory,
    p: *const PeFormula,
    out: *mut *mut PePrimeImplicants,
) -> PeStatus {
    guard(|| {
        let empty = Theory::new();
        let t = theory_or_empty(t, &empty);
        let p = deref(p, "p")?;
        let pis = pe::prime_implicants(t, &p.0)?.into_vec();
        write(out, Box::into_raw(Box::new(PePrimeImplicants(pis))), "out")
    })
}

/// # Safety
/// `s` must be `NULL` or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pe_prime_implicants_count(s: *const PePrimeImplicants) -> usize {
    s.as_ref().map_or(0, |s| s.0.len())
}

/// Printed form of the `index`-th implicant, such as `{x, !y}`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pe_prime_implicants_get(
    s: *const PePrimeImplicants,
    index: usize,
    out: *mut *mut c_char,
) -> PeStatus {
    guard(|| {
        let s = deref(s, "implicants")?;
        let item = s.0.get(index).ok_or_else(|| {
            Failure(
                PeStatus::IndexOutOfRange,
                format!("index {index} out of range for {} implicants", s.0.len()),
            )
        })?;
        write(out, c_string(item.to_string()), "out")
    })
}

/// # Safety
/// `s` must be `NULL` or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pe_prime_implicants_free(s: *mut PePrimeImplicants) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Decides whether `p` partially entails `q` under `t`. `kind` is a
/// [`PeKind`] value. When `refuter` is not `NULL` it receives the printed
/// refuting implicant, or `NULL` when there is none.
///
/// # Safety
/// `t` must be `NULL` or live; `p`, `q` live; `out` writable; `refuter`
/// `NULL` or writable.
#[no_mangle]
pub unsafe extern "C" fn pe_partially_entails(
    kind: u32,
    t: *const PeTheory,
    p: *const PeFormula,
    q: *const PeFormula,
    out: *mut PeVerdict,
    refuter: *mut *mut c_char,
) -> PeStatus {
    guard(|| {
        let kind = match kind {
            0 => EntailmentKind::Weak,
            1 => EntailmentKind::Plain,
            2 => EntailmentKind::Strong,
            other => {
                return Err(Failure(PeStatus::InvalidArgument, format!("unknown entailment kind {other}")))
            }
        };
        let empty = Theory::new();
        let t = theory_or_empty(t, &empty);
        let (p, q) = (deref(p, "p")?, deref(q, "q")?);
        if out.is_null() {
            return Err(null("out"));
        }
        let v = pe::partially_entails(kind, t, &p.0, &q.0)?;
        let reason = match v.reason {
            Reason::Ok => PeReason::Ok,
            Reason::EmptyPi => PeReason::EmptyPi,
            Reason::NoPartner => PeReason::NoPartner,
        };
        out.write(PeVerdict { holds: v.holds, reason });
        if !refuter.is_null() {
            refuter.write(v.refuter.map_or(ptr::null_mut(), |r| c_string(r.to_string())));
        }
        Ok(())
    })
}

/// Whether `p` is trivial (inconsistent with or entailed by `t`).
///
/// # Safety
/// `t` must be `NULL` or live; `p` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pe_is_trivial(t: *const PeTheory, p: *const PeFormula, out: *mut bool) -> PeStatus {
    guard(|| {
        let empty = Theory::new();
        let t = theory_or_empty(t, &empty);
        let r = pe::is_trivial(t, &deref(p, "p")?.0)?;
        write(out, r, "out")
    })
}

/// Classical entailment `t ⊨ p`.
///
/// # Safety
/// `t` must be `NULL` or live; `p` live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pe_entails(t: *const PeTheory, p: *const PeFormula, out: *mut bool) -> PeStatus {
    guard(|| {
        let empty = Theory::new();
        let t = theory_or_empty(t, &empty);
        let r = pe::entails(t, &deref(p, "p")?.0)?;
        write(out, r, "out")
    })
}
