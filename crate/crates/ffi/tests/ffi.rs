use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use tmlab_ffi::*;

fn machine(id: &str) -> *mut TmlabMachine {
    let id = CString::new(id).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { tmlab_machine_bundled(id.as_ptr(), &mut m) },
        TmlabStatus::Ok
    );
    m
}

#[test]
fn addition_run_through_handles() {
    let m = machine("addition");
    unsafe {
        assert_eq!(tmlab_machine_state_count(m), 9);
        let input = CString::new("*|||*||*").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(
            tmlab_run(m, input.as_ptr(), 10_000, &mut r),
            TmlabStatus::Ok
        );
        assert_eq!(tmlab_run_steps(r), 106);
        assert_eq!(tmlab_run_halt(r), TmlabHalt::Explicit);
        assert_eq!(tmlab_run_state(r), 9);
        assert_eq!(tmlab_run_head(r), 0);

        let mut len = 0usize;
        assert_eq!(
            tmlab_run_window(r, ptr::null_mut(), 0, &mut len),
            TmlabStatus::BufferTooSmall
        );
        assert_eq!(len, 14);
        let mut buf = vec![0 as c_char; len + 1];
        assert_eq!(
            tmlab_run_window(r, buf.as_mut_ptr(), buf.len(), &mut len),
            TmlabStatus::Ok
        );
        assert_eq!(
            CStr::from_ptr(buf.as_ptr()).to_str().unwrap(),
            "*|||*||*|||||*"
        );
        tmlab_run_free(r);
        tmlab_machine_free(m);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut m = ptr::null_mut();
        let bad = CString::new("nope").unwrap();
        assert_eq!(
            tmlab_machine_bundled(bad.as_ptr(), &mut m),
            TmlabStatus::UnknownMachine
        );
        assert_eq!(
            tmlab_machine_bundled(ptr::null(), &mut m),
            TmlabStatus::NullArgument
        );
        let src = CString::new("state 1:\n").unwrap();
        assert_eq!(
            tmlab_machine_parse(src.as_ptr(), &mut m),
            TmlabStatus::ParseError
        );

        let add = machine("addition");
        let input = CString::new("*?").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(
            tmlab_run(add, input.as_ptr(), 10, &mut r),
            TmlabStatus::BadInput
        );
        assert!(r.is_null());
        tmlab_machine_free(add);
        tmlab_machine_free(ptr::null_mut());
        tmlab_run_free(ptr::null_mut());

        let s = CStr::from_ptr(tmlab_status_str(TmlabStatus::BufferTooSmall as i32));
        assert_eq!(s.to_str().unwrap(), "buffer too small");
        assert_eq!(
            CStr::from_ptr(tmlab_status_str(99)).to_str().unwrap(),
            "unknown status"
        );
    }
}

#[test]
fn parsed_machine_runs() {
    let src = CString::new("alphabet: _ a\nstate 1:\n  a -> _ R\n  _ -> !\n").unwrap();
    let input = CString::new("aa").unwrap();
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(tmlab_machine_parse(src.as_ptr(), &mut m), TmlabStatus::Ok);
        let mut r = ptr::null_mut();
        assert_eq!(tmlab_run(m, input.as_ptr(), 100, &mut r), TmlabStatus::Ok);
        assert_eq!(tmlab_run_steps(r), 2);
        assert_eq!(tmlab_run_halt(r), TmlabHalt::Explicit);
        tmlab_run_free(r);
        tmlab_machine_free(m);
    }
}

#[test]
fn rna_codec() {
    unsafe {
        let text = CString::new("SW01hh").unwrap();
        let mut buf = vec![0 as c_char; 64];
        let mut len = 0;
        assert_eq!(
            tmlab_rna_encode(text.as_ptr(), buf.as_mut_ptr(), buf.len(), &mut len),
            TmlabStatus::Ok
        );
        assert_eq!(
            CStr::from_ptr(buf.as_ptr()).to_str().unwrap(),
            "UUUGCACUGAGA"
        );
        let rna = CString::new("UUUG").unwrap();
        assert_eq!(
            tmlab_rna_decode(rna.as_ptr(), buf.as_mut_ptr(), buf.len(), &mut len),
            TmlabStatus::Ok
        );
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "SW");
        let odd = CString::new("UUU").unwrap();
        assert_eq!(
            tmlab_rna_decode(odd.as_ptr(), buf.as_mut_ptr(), buf.len(), &mut len),
            TmlabStatus::BadInput
        );
    }
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/tmlab.h")).unwrap();
    for name in [
        "tmlab_machine_bundled",
        "tmlab_machine_parse",
        "tmlab_machine_free",
        "tmlab_run(",
        "tmlab_run_window",
        "tmlab_run_free",
        "tmlab_rna_encode",
        "tmlab_status_str",
        "typedef struct TmlabMachine TmlabMachine;",
        "TMLAB_STATUS_BUFFER_TOO_SMALL = 6",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles and runs a C program against the header and the static library.
#[test]
fn c_program_links_against_the_static_library() {
    let Some(cc) = ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
    else {
        eprintln!("no C compiler found; skipped");
        return;
    };
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libtmlab_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipped", lib.display());
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out_dir = std::env::temp_dir().join(format!("tmlab-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let src = out_dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include <string.h>
#include "tmlab.h"
int main(void) {
    TmlabMachine *m = NULL;
    TmlabRun *r = NULL;
    char buf[64];
    size_t len = 0;
    if (tmlab_machine_bundled("addition", &m) != TMLAB_STATUS_OK) return 1;
    if (tmlab_run(m, "*|||*||*", 10000, &r) != TMLAB_STATUS_OK) return 2;
    if (tmlab_run_window(r, buf, sizeof buf, &len) != TMLAB_STATUS_OK) return 3;
    printf("%llu %d %s\n", (unsigned long long)tmlab_run_steps(r), (int)tmlab_run_halt(r), buf);
    tmlab_run_free(r);
    tmlab_machine_free(m);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = out_dir.join("smoke");
    let status = Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "106 0 *|||*||*|||||*\n"
    );
    std::fs::remove_dir_all(&out_dir).unwrap();
}
