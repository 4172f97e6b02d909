//! Exercises the C ABI surface through the exported symbols.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use mkvc_ffi::*;

fn parse(text: &str) -> *mut MkvcGraph {
    let c = CString::new(text).unwrap();
    let mut g: *mut MkvcGraph = ptr::null_mut();
    let status = unsafe { mkvc_graph_parse(c.as_ptr(), &mut g) };
    assert_eq!(status, MkvcStatus::Ok);
    assert!(!g.is_null());
    g
}

const P4: &str = "p bkvc 2 2 3\ne 1 1\ne 2 1\ne 2 2\n";

#[test]
fn parse_solve_and_read_solution() {
    unsafe {
        let g = parse(P4);
        assert_eq!(mkvc_graph_na(g), 2);
        assert_eq!(mkvc_graph_nb(g), 2);
        assert_eq!(mkvc_graph_m(g), 3);

        let mut sol: *mut MkvcSolution = ptr::null_mut();
        assert_eq!(mkvc_solve_comb07(g, 2, &mut sol), MkvcStatus::Ok);
        assert_eq!(mkvc_solution_coverage(sol), 3);
        assert_eq!(mkvc_solution_len(sol), 2);

        let mut side: c_char = 0;
        let mut index: u32 = 0;
        assert_eq!(
            mkvc_solution_vertex(sol, 0, &mut side, &mut index),
            MkvcStatus::Ok
        );
        assert!(side == b'A' as c_char || side == b'B' as c_char);
        assert!(index >= 1);
        assert_eq!(
            mkvc_solution_vertex(sol, 5, &mut side, &mut index),
            MkvcStatus::InvalidParams
        );

        mkvc_solution_free(sol);
        mkvc_graph_free(g);
    }
}

#[test]
fn parse_error_reports_message() {
    unsafe {
        let c = CString::new("p bkvc 2 2 2\ne 1 1\ne 1 1\n").unwrap();
        let mut g: *mut MkvcGraph = ptr::null_mut();
        assert_eq!(mkvc_graph_parse(c.as_ptr(), &mut g), MkvcStatus::ParseError);
        assert!(g.is_null());
        let msg = CStr::from_ptr(mkvc_last_error_message());
        let msg = msg.to_str().unwrap();
        assert!(msg.contains("line 3"), "got: {msg}");
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut g: *mut MkvcGraph = ptr::null_mut();
        assert_eq!(
            mkvc_graph_parse(ptr::null(), &mut g),
            MkvcStatus::NullArgument
        );
        let g = parse(P4);
        assert_eq!(
            mkvc_solve_comb07(g, 1, ptr::null_mut()),
            MkvcStatus::NullArgument
        );
        let mut sol: *mut MkvcSolution = ptr::null_mut();
        assert_eq!(
            mkvc_solve_comb07(ptr::null(), 1, &mut sol),
            MkvcStatus::NullArgument
        );
        mkvc_graph_free(g);
        // Frees tolerate null.
        mkvc_graph_free(ptr::null_mut());
        mkvc_solution_free(ptr::null_mut());
        mkvc_string_free(ptr::null_mut());
    }
}

#[test]
fn invalid_k_and_cap_statuses() {
    unsafe {
        let g = parse(P4);
        let mut sol: *mut MkvcSolution = ptr::null_mut();
        assert_eq!(mkvc_solve_comb07(g, 10, &mut sol), MkvcStatus::InvalidK);
        assert_eq!(mkvc_solve_greedy(g, 10, &mut sol), MkvcStatus::InvalidK);
        mkvc_graph_free(g);

        let mut big: *mut MkvcGraph = ptr::null_mut();
        assert_eq!(mkvc_graph_gnp(30, 30, 0.1, 7, &mut big), MkvcStatus::Ok);
        assert_eq!(
            mkvc_solve_exact(big, 3, 20, &mut sol),
            MkvcStatus::CapExceeded
        );
        mkvc_graph_free(big);
    }
}

#[test]
fn generators_and_roundtrip() {
    unsafe {
        let mut g: *mut MkvcGraph = ptr::null_mut();
        assert_eq!(
            mkvc_graph_semiregular(6, 4, 2, 3, 5, &mut g),
            MkvcStatus::Ok
        );
        assert_eq!(mkvc_graph_m(g), 12);

        let text = mkvc_graph_to_text(g);
        assert!(!text.is_null());
        let as_str = CStr::from_ptr(text).to_str().unwrap().to_string();
        let mut back: *mut MkvcGraph = ptr::null_mut();
        let c = CString::new(as_str).unwrap();
        assert_eq!(mkvc_graph_parse(c.as_ptr(), &mut back), MkvcStatus::Ok);
        assert_eq!(mkvc_graph_m(back), 12);
        mkvc_string_free(text);
        mkvc_graph_free(back);
        mkvc_graph_free(g);

        let mut planted: *mut MkvcGraph = ptr::null_mut();
        let mut k: usize = 0;
        assert_eq!(
            mkvc_graph_planted(8, 8, 1, 2, 3, 1, 9, &mut planted, &mut k),
            MkvcStatus::Ok
        );
        assert_eq!(k, 3);
        mkvc_graph_free(planted);

        assert_eq!(
            mkvc_graph_gnp(3, 3, 1.5, 0, &mut g),
            MkvcStatus::InvalidParams
        );
    }
}

#[test]
fn theorem_check_via_ffi() {
    unsafe {
        let g = parse(P4);
        let (mut alg, mut opt, mut holds) = (0u64, 0u64, 0i32);
        assert_eq!(
            mkvc_check_theorem(g, 2, 20, &mut alg, &mut opt, &mut holds),
            MkvcStatus::Ok
        );
        assert_eq!((alg, opt, holds), (3, 3, 1));
        mkvc_graph_free(g);
    }
}
