//! C ABI over the tmlab library.
//!
//! Machines and runs are opaque handles released with their `_free`
//! function. Fallible calls return a [`TmlabStatus`] code; text results are
//! copied NUL-terminated into caller buffers, and the required length
//! (without the NUL) is always stored in `*len`.

use std::ffi::{c_char, CStr};
use std::ptr;

use tmlab::machine::{
    format_window, run, Configuration, HaltReason, MachineTable, RunLimits, RunResult,
};
use tmlab::rna::{rna_decode, rna_encode};
use tmlab::table::{bundled_machine, parse_table};

/// Status codes returned by fallible calls.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TmlabStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    UnknownMachine = 3,
    ParseError = 4,
    BadInput = 5,
    BufferTooSmall = 6,
}

/// Why a run stopped.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TmlabHalt {
    Explicit = 0,
    EmptyEntry = 1,
    StationaryIdentity = 2,
    BudgetExceeded = 3,
    LeftFenceViolation = 4,
}

impl From<HaltReason> for TmlabHalt {
    fn from(r: HaltReason) -> Self {
        match r {
            HaltReason::Explicit => TmlabHalt::Explicit,
            HaltReason::EmptyEntry => TmlabHalt::EmptyEntry,
            HaltReason::StationaryIdentity => TmlabHalt::StationaryIdentity,
            HaltReason::BudgetExceeded => TmlabHalt::BudgetExceeded,
            HaltReason::LeftFenceViolation => TmlabHalt::LeftFenceViolation,
        }
    }
}

/// A machine table.
pub struct TmlabMachine {
    table: MachineTable,
}

/// The result of a run: steps, halt reason and final configuration.
pub struct TmlabRun {
    result: RunResult,
    window: String,
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, TmlabStatus> {
    if p.is_null() {
        return Err(TmlabStatus::NullArgument);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| TmlabStatus::InvalidUtf8)
}

unsafe fn copy_out(text: &str, buf: *mut c_char, cap: usize, len: *mut usize) -> TmlabStatus {
    if len.is_null() {
        return TmlabStatus::NullArgument;
    }
    *len = text.len();
    if buf.is_null() || cap < text.len() + 1 {
        return TmlabStatus::BufferTooSmall;
    }
    ptr::copy_nonoverlapping(text.as_ptr(), buf.cast::<u8>(), text.len());
    *buf.add(text.len()) = 0;
    TmlabStatus::Ok
}

fn boxed_machine(table: MachineTable, out: *mut *mut TmlabMachine) -> TmlabStatus {
    unsafe { *out = Box::into_raw(Box::new(TmlabMachine { table })) };
    TmlabStatus::Ok
}

/// Loads a bundled machine: `addition`, `neary4x6`, `pedagogical-utm` or `rna-utm`.
///
/// # Safety
/// `id` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tmlab_machine_bundled(
    id: *const c_char,
    out: *mut *mut TmlabMachine,
) -> TmlabStatus {
    if out.is_null() {
        return TmlabStatus::NullArgument;
    }
    let id = match str_arg(id) {
        Ok(s) => s,
        Err(e) => return e,
    };
    match bundled_machine(id) {
        Ok(t) => boxed_machine(t, out),
        Err(_) => TmlabStatus::UnknownMachine,
    }
}

/// Parses a machine from table text.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tmlab_machine_parse(
    source: *const c_char,
    out: *mut *mut TmlabMachine,
) -> TmlabStatus {
    if out.is_null() {
        return TmlabStatus::NullArgument;
    }
    let src = match str_arg(source) {
        Ok(s) => s,
        Err(e) => return e,
    };
    match parse_table(src) {
        Ok(t) => boxed_machine(t, out),
        Err(_) => TmlabStatus::ParseError,
    }
}

/// Number of states, or 0 for a null handle.
///
/// # Safety
/// `machine` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tmlab_machine_state_count(machine: *const TmlabMachine) -> u32 {
    machine.as_ref().map_or(0, |m| m.table.state_count())
}

/// # Safety
/// `machine` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tmlab_machine_free(machine: *mut TmlabMachine) {
    if !machine.is_null() {
        drop(Box::from_raw(machine));
    }
}

/// Runs `machine` in state 1 with `input` on cells 0.. and the head on
/// cell 0, for at most `budget` steps.
///
/// # Safety
/// `machine` must be a live handle, `input` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tmlab_run(
    machine: *const TmlabMachine,
    input: *const c_char,
    budget: u64,
    out: *mut *mut TmlabRun,
) -> TmlabStatus {
    let Some(m) = machine.as_ref() else {
        return TmlabStatus::NullArgument;
    };
    if out.is_null() {
        return TmlabStatus::NullArgument;
    }
    let input = match str_arg(input) {
        Ok(s) => s,
        Err(e) => return e,
    };
    let Ok(letters) = m.table.alphabet().parse_word(input) else {
        return TmlabStatus::BadInput;
    };
    let cfg = Configuration::from_input(&m.table, &letters, 0, 1);
    let result = run(&m.table, cfg, &RunLimits::budget(budget));
    let window = format_window(&result.final_config, m.table.alphabet());
    *out = Box::into_raw(Box::new(TmlabRun { result, window }));
    TmlabStatus::Ok
}

/// Steps applied, or 0 for a null handle.
///
/// # Safety
/// `run` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tmlab_run_steps(run: *const TmlabRun) -> u64 {
    run.as_ref().map_or(0, |r| r.result.steps)
}

/// # Safety
/// `run` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tmlab_run_halt(run: *const TmlabRun) -> TmlabHalt {
    (*run).result.reason.into()
}

/// # Safety
/// `run` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tmlab_run_state(run: *const TmlabRun) -> u32 {
    (*run).result.final_config.state
}

/// # Safety
/// `run` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tmlab_run_head(run: *const TmlabRun) -> i64 {
    (*run).result.final_config.head
}

/// Copies the final tape window.
///
/// # Safety
/// `run` must be a live handle, `buf` null or writable for `cap` bytes, and
/// `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tmlab_run_window(
    run: *const TmlabRun,
    buf: *mut c_char,
    cap: usize,
    len: *mut usize,
) -> TmlabStatus {
    match run.as_ref() {
        Some(r) => copy_out(&r.window, buf, cap, len),
        None => TmlabStatus::NullArgument,
    }
}

/// # Safety
/// `run` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tmlab_run_free(run: *mut TmlabRun) {
    if !run.is_null() {
        drop(Box::from_raw(run));
    }
}

/// Converts universal-machine glyphs to nucleotides.
///
/// # Safety
/// `text` must be a NUL-terminated string, `buf` null or writable for `cap`
/// bytes, and `len` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tmlab_rna_encode(
    text: *const c_char,
    buf: *mut c_char,
    cap: usize,
    len: *mut usize,
) -> TmlabStatus {
    let text = match str_arg(text) {
        Ok(s) => s,
        Err(e) => return e,
    };
    match rna_encode(text) {
        Ok(s) => copy_out(&s, buf, cap, len),
        Err(_) => TmlabStatus::BadInput,
    }
}

/// Converts nucleotides to universal-machine glyphs.
///
/// # Safety
/// As for [`tmlab_rna_encode`].
#[no_mangle]
pub unsafe extern "C" fn tmlab_rna_decode(
    text: *const c_char,
    buf: *mut c_char,
    cap: usize,
    len: *mut usize,
) -> TmlabStatus {
    let text = match str_arg(text) {
        Ok(s) => s,
        Err(e) => return e,
    };
    match rna_decode(text) {
        Ok(s) => copy_out(&s, buf, cap, len),
        Err(_) => TmlabStatus::BadInput,
    }
}

/// Static description of a status code; unknown codes give "unknown status".
#[no_mangle]
pub extern "C" fn tmlab_status_str(status: i32) -> *const c_char {
    let s: &'static CStr = match status {
        0 => c"ok",
        1 => c"null argument",
        2 => c"string is not valid UTF-8",
        3 => c"unknown bundled machine",
        4 => c"table text does not parse",
        5 => c"input has a glyph outside the alphabet",
        6 => c"buffer too small",
        _ => c"unknown status",
    };
    s.as_ptr()
}
