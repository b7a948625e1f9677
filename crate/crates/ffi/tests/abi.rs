use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use cpg_ffi::*;

fn take_string(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cpg_string_free(s) };
    out
}

#[test]
fn canonical_representation_through_the_abi() {
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(cpg_rep_build(3, &mut rep), CpgStatus::Ok);
        let mut n = usize::MAX;
        assert_eq!(cpg_rep_violation_count(rep, &mut n), CpgStatus::Ok);
        assert_eq!(n, 0);
        assert_eq!(cpg_rep_max_bend(rep), 4);

        let mut g = ptr::null_mut();
        let mut h = ptr::null_mut();
        assert_eq!(cpg_rep_contact_graph(rep, &mut g), CpgStatus::Ok);
        assert_eq!(cpg_graph_generate_gk(3, &mut h), CpgStatus::Ok);
        assert!(cpg_graph_equal(g, h));
        assert_eq!(cpg_graph_vertex_count(h), 22 + 19 * 5);
        assert_eq!(cpg_graph_edge_count(h), 41 + 19 * 14);

        let mut ok = false;
        let mut text = ptr::null_mut();
        assert_eq!(cpg_audit_gk(rep, 3, &mut ok, &mut text), CpgStatus::Ok);
        assert!(ok);
        assert!(take_string(text).contains("result: PASS"));

        let mut kind = CpgPointKind::FreePoint;
        // x_1 of gadget 1: first bend of alpha:2.
        assert_eq!(cpg_rep_classify_point(rep, 3, 20, &mut kind), CpgStatus::Ok);
        assert_eq!(kind, CpgPointKind::Type2b);

        cpg_graph_free(g);
        cpg_graph_free(h);
        cpg_rep_free(rep);
    }
}

#[test]
fn text_round_trips() {
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(cpg_rep_build(1, &mut rep), CpgStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(cpg_rep_to_json(rep, &mut json), CpgStatus::Ok);
        let json = CString::new(take_string(json)).unwrap();
        let mut again = ptr::null_mut();
        assert_eq!(cpg_rep_parse(json.as_ptr(), &mut again), CpgStatus::Ok);
        let mut json2 = ptr::null_mut();
        assert_eq!(cpg_rep_to_json(again, &mut json2), CpgStatus::Ok);
        assert_eq!(json.to_str().unwrap(), take_string(json2));

        let mut g = ptr::null_mut();
        assert_eq!(cpg_graph_generate_gk(1, &mut g), CpgStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(cpg_graph_to_text(g, &mut text), CpgStatus::Ok);
        let text = CString::new(take_string(text)).unwrap();
        let mut g2 = ptr::null_mut();
        assert_eq!(cpg_graph_parse(text.as_ptr(), &mut g2), CpgStatus::Ok);
        assert!(cpg_graph_equal(g, g2));

        cpg_graph_free(g);
        cpg_graph_free(g2);
        cpg_rep_free(rep);
        cpg_rep_free(again);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(cpg_rep_build(0, ptr::null_mut()), CpgStatus::NullPointer);
        assert_eq!(cpg_rep_parse(ptr::null(), &mut rep), CpgStatus::NullPointer);

        let bad = CString::new("{\"version\":1}").unwrap();
        assert_eq!(cpg_rep_parse(bad.as_ptr(), &mut rep), CpgStatus::ParseError);
        assert!(!cpg_last_error().is_null());
        assert!(rep.is_null());

        let crossing = CString::new(
            r#"{"version":1,"grid":{"w":2,"h":2},"paths":{"free:p":[[0,1],[2,1]],"free:q":[[1,0],[1,2]]}}"#,
        )
        .unwrap();
        assert_eq!(cpg_rep_parse(crossing.as_ptr(), &mut rep), CpgStatus::Ok);
        assert!(cpg_last_error().is_null());
        let mut n = 0;
        assert_eq!(cpg_rep_violation_count(rep, &mut n), CpgStatus::Ok);
        assert_eq!(n, 1);
        let msg = CStr::from_ptr(cpg_last_error()).to_str().unwrap().to_owned();
        assert!(msg.starts_with("InteriorIntersection"), "{msg}");
        let mut g = ptr::null_mut();
        assert_eq!(cpg_rep_contact_graph(rep, &mut g), CpgStatus::InvalidRepresentation);
        let mut ok = true;
        assert_eq!(cpg_audit_gk(rep, 0, &mut ok, ptr::null_mut()), CpgStatus::VertexSetMismatch);
        cpg_rep_free(rep);

        cpg_graph_free(ptr::null_mut());
        cpg_rep_free(ptr::null_mut());
        cpg_string_free(ptr::null_mut());
        assert_eq!(cpg_graph_vertex_count(ptr::null()), 0);
    }
}

#[test]
fn search_and_faces() {
    unsafe {
        let text = CString::new("cpg-graph v1\nv free:x\nv free:y\nv free:z\ne free:x free:y\ne free:x free:z\ne free:y free:z\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(cpg_graph_parse(text.as_ptr(), &mut g), CpgStatus::Ok);
        let mut rep = ptr::null_mut();
        assert_eq!(cpg_search(g, 3, 3, 0, 1_000_000, &mut rep), CpgStatus::Ok);
        let mut found = ptr::null_mut();
        assert_eq!(cpg_rep_contact_graph(rep, &mut found), CpgStatus::Ok);
        assert!(cpg_graph_equal(g, found));
        let mut none = ptr::null_mut();
        assert_eq!(cpg_search(g, 1, 1, 0, 1_000_000, &mut none), CpgStatus::NotFound);
        assert_eq!(cpg_search(g, 3, 3, 0, 2, &mut none), CpgStatus::BudgetExhausted);

        let mut faces = 0;
        assert_eq!(cpg_gk_face_count(4, &mut faces), CpgStatus::Ok);
        assert_eq!(faces, 38 * 4 + 78);

        cpg_graph_free(g);
        cpg_graph_free(found);
        cpg_rep_free(rep);
    }
}

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<test-binary>
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_the_abi() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/cpg.h");
    let text = std::fs::read_to_string(header).unwrap();
    for name in [
        "typedef struct CpgGraph CpgGraph;",
        "typedef struct CpgRep CpgRep;",
        "CPG_STATUS_OK = 0",
        "cpg_rep_build(uint32_t k, struct CpgRep **out)",
        "cpg_audit_gk(",
        "cpg_search(",
        "cpg_string_free(char *s)",
    ] {
        assert!(text.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = target_dir().join("libcpg_ffi.a");
    let cc = Command::new("cc").arg("--version").output();
    if !lib.exists() || cc.is_err() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let out = tempfile_path("cpg_smoke");
    let status = Command::new("cc")
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "smoke exited with {:?}", run.status);
    assert_eq!(
        String::from_utf8_lossy(&run.stdout),
        "vertices=98 edges=250 faces=154\n"
    );
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("{stem}_{}", std::process::id()))
}
