//! C ABI over `artin-convex`.
//!
//! Every fallible function returns an [`AcStatus`] and writes its result
//! through an out pointer. On failure [`ac_last_error`] describes the error
//! for the calling thread. Strings returned by the library are owned by the
//! caller and released with [`ac_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use artin_convex::artin::{check_convexity, oracle_for, project_word, ArtinWord};
use artin_convex::braid::{delete_strands, garside_nf, words_equal, BraidWord};
use artin_convex::cli::CliError;
use artin_convex::coxeter::CoxeterSystem;
use artin_convex::salvetti::SalvettiPoset;

/// Status codes. The non-zero values below 10 match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcStatus {
    Ok = 0,
    Parse = 2,
    Precondition = 3,
    Bound = 4,
    NullPointer = 10,
    InvalidUtf8 = 11,
    BufferTooSmall = 12,
    Panic = 13,
}

/// A parsed Coxeter graph together with its group.
pub struct AcSystem {
    poset: SalvettiPoset,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(AcStatus, String);

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        let e: CliError = e.into();
        let status = match e {
            CliError::Parse(_) | CliError::Io(_) => AcStatus::Parse,
            CliError::Precondition(_) => AcStatus::Precondition,
            CliError::Bound(_) => AcStatus::Bound,
        };
        Failure(status, e.message().to_string())
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> AcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            AcStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            AcStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(AcStatus::NullPointer, "null pointer argument".to_string())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(AcStatus::InvalidUtf8, "argument is not valid UTF-8".to_string()))
}

unsafe fn system<'a>(p: *const AcSystem) -> Result<&'a AcSystem, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|_| Failure(AcStatus::Panic, "interior NUL in output".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ac_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn ac_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph in the `gens:` / `edge:` text format. Finite groups up to
/// the default element bound get a multiplication table.
///
/// # Safety
/// `graph_text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ac_system_new(graph_text: *const c_char, out: *mut *mut AcSystem) -> AcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let sys = CoxeterSystem::parse(text(graph_text)?)?;
        *out = Box::into_raw(Box::new(AcSystem { poset: SalvettiPoset::new(sys) }));
        Ok(())
    })
}

/// # Safety
/// `sys` must come from [`ac_system_new`] and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ac_system_free(sys: *mut AcSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Number of generators, or 0 for NULL.
///
/// # Safety
/// `sys` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ac_system_rank(sys: *const AcSystem) -> usize {
    sys.as_ref().map_or(0, |s| s.poset.system().rank())
}

/// ShortLex normal form of a Coxeter word, space separated, `1` for the identity.
///
/// # Safety
/// Pointers must be valid; `*out` receives a string to free with [`ac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ac_reduce(sys: *const AcSystem, word: *const c_char, out: *mut *mut c_char) -> AcStatus {
    guard(|| {
        let sys = system(sys)?.poset.system();
        let w = sys.parse_word(text(word)?)?;
        let e = sys.normalize(&w)?;
        put_string(out, sys.format(&e))
    })
}

/// Projects an Artin word onto the parabolic subgroup on `target`
/// (comma or space separated generator names).
///
/// # Safety
/// Pointers must be valid; `*out` receives a string to free with [`ac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ac_project(
    sys: *const AcSystem,
    word: *const c_char,
    target: *const c_char,
    out: *mut *mut c_char,
) -> AcStatus {
    guard(|| {
        let sys = system(sys)?.poset.system();
        let w = ArtinWord::parse(sys.graph(), text(word)?)?;
        let t = sys.graph().parse_set(text(target)?)?;
        let (p, _) = project_word(sys, &w, t)?;
        let s = p.display(sys.graph()).to_string();
        put_string(out, s)
    })
}

/// Runs every available convexity check on `word` and stores whether all passed.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ac_check_convexity(
    sys: *const AcSystem,
    word: *const c_char,
    target: *const c_char,
    passes: *mut bool,
) -> AcStatus {
    guard(|| {
        let sys = system(sys)?.poset.system();
        let w = ArtinWord::parse(sys.graph(), text(word)?)?;
        let t = sys.graph().parse_set(text(target)?)?;
        if passes.is_null() {
            return Err(null());
        }
        let oracle = oracle_for(sys.graph());
        let report = check_convexity(sys, &w, t, oracle.as_deref(), None)?;
        *passes = report.passes();
        Ok(())
    })
}

/// Cell counts of the Salvetti complex by dimension. A negative `radius`
/// means the whole complex, which needs a finite group.
///
/// `*len` receives the number of dimensions. If it exceeds `cap`, nothing is
/// written to `cells` and the call returns `BufferTooSmall`.
///
/// # Safety
/// `cells` must hold `cap` entries; `len` and `euler` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ac_salvetti_census(
    sys: *const AcSystem,
    radius: i64,
    cells: *mut usize,
    cap: usize,
    len: *mut usize,
    euler: *mut i64,
) -> AcStatus {
    guard(|| {
        let poset = &system(sys)?.poset;
        if len.is_null() || euler.is_null() || (cells.is_null() && cap > 0) {
            return Err(null());
        }
        let radius = usize::try_from(radius).ok();
        let summary = poset.build_complex(radius)?;
        *len = summary.cells.len();
        *euler = summary.euler_characteristic;
        if summary.cells.len() > cap {
            return Err(Failure(AcStatus::BufferTooSmall, format!("need {} entries", summary.cells.len())));
        }
        ptr::copy_nonoverlapping(summary.cells.as_ptr(), cells, summary.cells.len());
        Ok(())
    })
}

/// Garside left normal form of a braid word such as `s1 s2^-1`.
///
/// # Safety
/// Pointers must be valid; `*out` receives a string to free with [`ac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ac_braid_normal_form(strands: usize, word: *const c_char, out: *mut *mut c_char) -> AcStatus {
    guard(|| {
        let w = BraidWord::parse(strands, text(word)?)?;
        put_string(out, garside_nf(&w).to_string())
    })
}

/// Decides whether two braid words are the same braid.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ac_braid_equal(
    strands: usize,
    a: *const c_char,
    b: *const c_char,
    equal: *mut bool,
) -> AcStatus {
    guard(|| {
        let a = BraidWord::parse(strands, text(a)?)?;
        let b = BraidWord::parse(strands, text(b)?)?;
        if equal.is_null() {
            return Err(null());
        }
        *equal = words_equal(&a, &b);
        Ok(())
    })
}

/// Deletes every strand not listed in `keep` (1-based). The kept strands must
/// return to kept positions.
///
/// # Safety
/// `keep` must hold `keep_len` entries; `*out` receives a string to free with [`ac_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ac_braid_delete(
    strands: usize,
    word: *const c_char,
    keep: *const usize,
    keep_len: usize,
    out: *mut *mut c_char,
) -> AcStatus {
    guard(|| {
        if keep.is_null() && keep_len > 0 {
            return Err(null());
        }
        let keep = if keep_len == 0 { &[][..] } else { std::slice::from_raw_parts(keep, keep_len) };
        let w = BraidWord::parse(strands, text(word)?)?;
        put_string(out, delete_strands(&w, keep)?.to_string())
    })
}
