use std::ffi::{CStr, CString};
use std::ptr;

use coverdeg_ffi::*;

fn from_g6(s: &str) -> *mut CdGraph {
    let c = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cd_graph_from_graph6(c.as_ptr(), &mut g) }, CdStatus::Ok);
    g
}

fn last_error() -> String {
    let p = cd_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn p4_bundle_and_regularity() {
    let g = from_g6("Ch");
    let mut b = CdBundle::default();
    assert_eq!(unsafe { cd_bundle(g, &mut b) }, CdStatus::Ok);
    assert_eq!((b.n, b.alpha, b.m, b.i), (4, 2, 1, 2));
    assert_eq!((b.deg_h_cover, b.deg_h_edge, b.a_invariant_cover), (1, 1, -1));
    let mut reg = 0;
    assert_eq!(unsafe { cd_reg_cover(g, 0, &mut reg) }, CdStatus::Ok);
    assert_eq!(reg, 1);
    let mut pdim = 0;
    assert_eq!(unsafe { cd_pdim_edge(g, 2, &mut pdim) }, CdStatus::Ok);
    assert_eq!(pdim, 2);
    unsafe { cd_graph_free(g) };
}

#[test]
fn polynomial_buffer_protocol() {
    let g = from_g6("C~");
    let mut len = 0;
    assert_eq!(unsafe { cd_independence_poly(g, ptr::null_mut(), 0, &mut len) }, CdStatus::BufferTooSmall);
    assert_eq!(len, 2);
    let mut buf = vec![0i64; len];
    assert_eq!(unsafe { cd_independence_poly(g, buf.as_mut_ptr(), buf.len(), &mut len) }, CdStatus::Ok);
    assert_eq!(buf, vec![1, 4]);
    unsafe { cd_graph_free(g) };
}

#[test]
fn graph6_round_trip_through_buffer() {
    let edges = [0u32, 1, 1, 2, 2, 3];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cd_graph_from_edges(4, edges.as_ptr(), 3, &mut g) }, CdStatus::Ok);
    assert_eq!(unsafe { (cd_graph_vertex_count(g), cd_graph_edge_count(g)) }, (4, 3));
    let mut need = 0;
    let mut small = [0 as std::ffi::c_char; 2];
    assert_eq!(
        unsafe { cd_graph_to_graph6(g, small.as_mut_ptr(), small.len(), &mut need) },
        CdStatus::BufferTooSmall
    );
    assert_eq!(need, 3);
    let mut buf = vec![0 as std::ffi::c_char; need];
    assert_eq!(unsafe { cd_graph_to_graph6(g, buf.as_mut_ptr(), buf.len(), &mut need) }, CdStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "Ch");
    unsafe { cd_graph_free(g) };
}

#[test]
fn error_codes() {
    let mut g = ptr::null_mut();
    let bad = CString::new("C").unwrap();
    assert_eq!(unsafe { cd_graph_from_graph6(bad.as_ptr(), &mut g) }, CdStatus::Parse);
    assert!(last_error().contains("graph6"));
    assert!(g.is_null());

    assert_eq!(unsafe { cd_graph_from_graph6(ptr::null(), &mut g) }, CdStatus::NullPointer);
    let loop_edge = [1u32, 1];
    assert_eq!(unsafe { cd_graph_from_edges(3, loop_edge.as_ptr(), 1, &mut g) }, CdStatus::OutOfRange);
    let far = [0u32, 7];
    assert_eq!(unsafe { cd_graph_from_edges(3, far.as_ptr(), 1, &mut g) }, CdStatus::OutOfRange);

    let empty = from_g6("B?");
    let mut reg = 0;
    assert_eq!(unsafe { cd_reg_cover(empty, 0, &mut reg) }, CdStatus::Precondition);
    assert_eq!(unsafe { cd_reg_cover(empty, 4, &mut reg) }, CdStatus::Precondition);
    assert!(last_error().contains("prime"));
    unsafe { cd_graph_free(empty) };

    let big = from_g6(&coverdeg::graph::to_graph6(&coverdeg::Graph::path(21)));
    assert_eq!(unsafe { cd_reg_cover(big, 0, &mut reg) }, CdStatus::Guard);
    unsafe { cd_graph_free(big) };

    assert_eq!(unsafe { cd_bundle(ptr::null(), ptr::null_mut()) }, CdStatus::NullPointer);
    unsafe { cd_graph_free(ptr::null_mut()) };
}

#[test]
fn success_clears_last_error() {
    let mut g = ptr::null_mut();
    let bad = CString::new("?x").unwrap();
    assert_ne!(unsafe { cd_graph_from_graph6(bad.as_ptr(), &mut g) }, CdStatus::Ok);
    let g = from_g6("Ch");
    assert!(cd_last_error().is_null());
    unsafe { cd_graph_free(g) };
    assert!(!cd_version().is_null());
}

#[test]
fn header_declares_the_api() {
    let h = include_str!("../include/coverdeg.h");
    for name in [
        "cd_version",
        "cd_last_error",
        "cd_graph_from_graph6",
        "cd_graph_from_edges",
        "cd_graph_free",
        "cd_graph_to_graph6",
        "cd_independence_poly",
        "cd_bundle",
        "cd_pdim_edge",
        "cd_reg_cover",
        "typedef struct CdGraph CdGraph",
        "CD_STATUS_BUFFER_TOO_SMALL",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

/// Compiles a small C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<this test> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libcoverdeg_ffi.a");
    assert!(lib.exists(), "static library not built at {}", lib.display());
    let out = std::env::temp_dir().join(format!("coverdeg_smoke_{}", std::process::id()));
    let status = std::process::Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("a C compiler named cc");
    assert!(status.success());
    let run = std::process::Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "exit {:?}", run.status.code());
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "n=4 alpha=2 M=1 reg=1 P=1,4,3");
}
