use std::ffi::{c_char, CStr, CString};
use std::ptr;

use artin_convex_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    ac_string_free(p);
    s
}

fn last_error() -> String {
    let p = ac_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

struct Handle(*mut AcSystem);

impl Handle {
    fn new(text: &str) -> Self {
        let mut sys = ptr::null_mut();
        let status = unsafe { ac_system_new(cstr(text).as_ptr(), &mut sys) };
        assert_eq!(status, AcStatus::Ok);
        Handle(sys)
    }
}

impl Drop for Handle {
    fn drop(&mut self) {
        unsafe { ac_system_free(self.0) }
    }
}

const I2_3: &str = "gens: s t\nedge: s t 3\n";

#[test]
fn reduce_and_project() {
    let h = Handle::new(I2_3);
    unsafe {
        assert_eq!(ac_system_rank(h.0), 2);
        let mut out = ptr::null_mut();
        assert_eq!(ac_reduce(h.0, cstr("s t s t").as_ptr(), &mut out), AcStatus::Ok);
        assert_eq!(take(out), "t s");
        assert!(ac_last_error().is_null());
        assert_eq!(ac_reduce(h.0, cstr("").as_ptr(), &mut out), AcStatus::Ok);
        assert_eq!(take(out), "1");
        assert_eq!(ac_project(h.0, cstr("t t^-1 s").as_ptr(), cstr("s").as_ptr(), &mut out), AcStatus::Ok);
        assert_eq!(take(out), "s");
        let mut passes = false;
        assert_eq!(ac_check_convexity(h.0, cstr("s t s^-1").as_ptr(), cstr("s").as_ptr(), &mut passes), AcStatus::Ok);
        assert!(passes);
    }
}

#[test]
fn salvetti_census() {
    let h = Handle::new("gens: s t\nedge: s t 4\n");
    let mut cells = [0usize; 4];
    let (mut len, mut euler) = (0usize, 99i64);
    unsafe {
        assert_eq!(ac_salvetti_census(h.0, -1, cells.as_mut_ptr(), 4, &mut len, &mut euler), AcStatus::Ok);
        assert_eq!(&cells[..len], &[8, 16, 8]);
        assert_eq!(euler, 0);
        assert_eq!(ac_salvetti_census(h.0, -1, cells.as_mut_ptr(), 2, &mut len, &mut euler), AcStatus::BufferTooSmall);
        assert_eq!(len, 3);
    }
    let free = Handle::new("gens: s t\nedge: s t inf\n");
    unsafe {
        assert_eq!(ac_salvetti_census(free.0, -1, cells.as_mut_ptr(), 4, &mut len, &mut euler), AcStatus::Precondition);
        assert_eq!(ac_salvetti_census(free.0, 2, cells.as_mut_ptr(), 4, &mut len, &mut euler), AcStatus::Ok);
        assert_eq!(&cells[..len], &[5, 10]);
        assert_eq!(euler, -5);
    }
}

#[test]
fn braids() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(ac_braid_normal_form(3, cstr("s1 s2 s1").as_ptr(), &mut out), AcStatus::Ok);
        assert_eq!(take(out), "D^1");
        let mut equal = false;
        assert_eq!(ac_braid_equal(3, cstr("s1 s2 s1").as_ptr(), cstr("s2 s1 s2").as_ptr(), &mut equal), AcStatus::Ok);
        assert!(equal);
        assert_eq!(ac_braid_equal(3, cstr("s1").as_ptr(), cstr("s2").as_ptr(), &mut equal), AcStatus::Ok);
        assert!(!equal);
        let keep = [1usize, 2];
        assert_eq!(ac_braid_delete(4, cstr("s3 s1 s3^-1").as_ptr(), keep.as_ptr(), 2, &mut out), AcStatus::Ok);
        assert_eq!(take(out), "s1");
        assert_eq!(ac_braid_delete(3, cstr("s2").as_ptr(), keep.as_ptr(), 2, &mut out), AcStatus::Precondition);
    }
}

#[test]
fn errors() {
    unsafe {
        let mut sys = ptr::null_mut();
        assert_eq!(ac_system_new(cstr("gens: s t\nedge: s t 1\n").as_ptr(), &mut sys), AcStatus::Parse);
        assert!(sys.is_null());
        assert!(last_error().contains("invalid label"));
        assert_eq!(ac_system_new(ptr::null(), &mut sys), AcStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(ac_system_new(bad.as_ptr().cast(), &mut sys), AcStatus::InvalidUtf8);

        let h = Handle::new(I2_3);
        let mut out = ptr::null_mut();
        assert_eq!(ac_reduce(h.0, cstr("s u").as_ptr(), &mut out), AcStatus::Parse);
        assert_eq!(ac_reduce(h.0, cstr("s").as_ptr(), ptr::null_mut()), AcStatus::NullPointer);
        assert_eq!(ac_reduce(ptr::null(), cstr("s").as_ptr(), &mut out), AcStatus::NullPointer);
        assert_eq!(ac_braid_normal_form(3, cstr("s3").as_ptr(), &mut out), AcStatus::Parse);
        assert_eq!(ac_system_rank(ptr::null()), 0);
        ac_system_free(ptr::null_mut());
        ac_string_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/artin_convex.h");
    let src = include_str!("../src/lib.rs");
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert_eq!(exports.len(), 12);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct AcSystem AcSystem;"));
    assert!(header.contains("AC_STATUS_BUFFER_TOO_SMALL = 12"));
}

/// The header compiles as C when a compiler is around.
#[test]
fn header_is_valid_c() {
    let Ok(cc) = std::process::Command::new("cc").arg("--version").output() else {
        return;
    };
    if !cc.status.success() {
        return;
    }
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let dir = std::env::temp_dir().join(format!("artin-convex-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("use.c");
    std::fs::write(
        &src,
        "#include \"artin_convex.h\"\nint main(void) { AcSystem *s = 0; return ac_system_new(\"gens: s\", &s) == AC_STATUS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", include])
        .arg(&src)
        .status()
        .unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert!(status.success());
}
