use std::path::PathBuf;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_tricover");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn tricover")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_census_manifold_passes() {
    let out = run(&["validate", "--census", "T3", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("tets=6"));
    assert!(text.contains("valid=true"));
}

#[test]
fn validate_rejects_a_broken_gluing() {
    // One tetrahedron with only one face glued: not closed.
    let path = tmp("broken.tri");
    std::fs::write(&path, "tets 1\ng 0 0 -> 0 1 012\n").unwrap();
    let out = run(&["validate", path.to_str().unwrap(), "--format", "records"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("valid=false"));
}

#[test]
fn unknown_census_name_is_an_input_error() {
    let out = run(&["homology", "--census", "nope"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown census manifold"));
}

#[test]
fn homology_of_s2xs1_in_records_form() {
    let out = run(&["homology", "--census", "S2xS1", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("b1=1 torsion1=-"));
    assert!(text.contains("b2=1 torsion2=-"));
}

#[test]
fn records_output_is_deterministic() {
    let args = ["certify", "--census", "T3", "--cyclic", "2", "--force", "--format", "records"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn certify_skips_the_search_when_the_threshold_is_unmet() {
    let out = run(&["certify", "--census", "T3", "--cyclic", "2", "--format", "records"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("forced=false"));
    assert!(text.contains("verdict=SKIPPED"));
}

#[test]
fn forced_certify_agrees_on_a_torus_cover() {
    let out = run(&["certify", "--census", "T3", "--cyclic", "2", "--force", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("certificate=found"));
    assert!(text.contains("b1=3"));
    assert!(text.contains("verdict=AGREE"));
}

#[test]
fn forced_certify_is_inconclusive_on_a_lens_space() {
    let out = run(&[
        "certify", "--census", "L(3,1)", "--cyclic", "3", "--force", "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("certificate=not_found"));
    assert!(text.contains("b1=0"));
    assert!(text.contains("verdict=INCONCLUSIVE"));
}

#[test]
fn exported_certificate_feeds_the_surface_command() {
    let cert = tmp("t3_cert.txt");
    let run1 = run(&[
        "certify", "--census", "T3", "--cyclic", "2", "--force",
        "--export", cert.to_str().unwrap(),
    ]);
    assert_eq!(run1.status.code(), Some(0));
    let out = run(&[
        "surface", "--census", "T3", "--cyclic", "2",
        "--certificate", cert.to_str().unwrap(), "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("components=2"));
    assert!(text.contains("component=0 euler=0 orientable=true genus=1 discs=6"));
    assert!(text.contains("round_trip=true"));
    assert!(text.contains("check=vertex_bound pass=true"));
    assert!(text.contains("separating=true"));
}

#[test]
fn surface_search_matches_the_certificate_path() {
    let out = run(&[
        "surface", "--census", "T3", "--cyclic", "2", "--force", "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("round_trip=true"));
}

#[test]
fn cover_export_writes_a_valid_triangulation_with_labels() {
    let tri = tmp("t3_cover.tri");
    let out = run(&[
        "cover", "--census", "T3", "--cyclic", "3",
        "--export", tri.to_str().unwrap(), "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("degree=3 lifted_tets=18"));
    let labels = tri.with_extension("labels");
    assert!(std::fs::read_to_string(&labels).unwrap().starts_with("lift 0 = 0 0"));
    // The exported file round-trips through validate.
    let check = run(&["validate", tri.to_str().unwrap(), "--format", "records"]);
    assert_eq!(check.status.code(), Some(0));
    assert!(stdout(&check).contains("valid=true"));
}

#[test]
fn cheeger_of_the_complete_graph_on_four_vertices() {
    let path = tmp("k4.graph");
    std::fs::write(
        &path,
        "graph 4 6\ne 0 1 1\ne 0 2 1\ne 0 3 1\ne 1 2 1\ne 1 3 1\ne 2 3 1\n",
    )
    .unwrap();
    let out = run(&["cheeger", path.to_str().unwrap(), "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cut=0,1 boundary=4 ratio=2/1 optimal=true"));
    assert!(text.contains("bracket_low="));
}

#[test]
fn sweep_emits_one_row_per_degree() {
    let out = run(&[
        "sweep", "--census", "S2xS1", "--degrees", "2..5", "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for n in 2..=5 {
        assert!(text.contains(&format!("row degree={} ", n)), "missing row {}: {}", n, text);
    }
    assert!(text.contains("b1=1"));
}

#[test]
fn ledger_verifies_a_balanced_profile_and_rejects_a_bad_one() {
    let good = tmp("good.profile");
    std::fs::write(&good, "splitting chiF=-6 chis=-4,-2,-4\n").unwrap();
    let out = run(&["ledger", good.to_str().unwrap(), "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("terms=2,1,1,2"));
    assert!(text.contains("component_bound=9"));
    assert!(text.contains("ledger=pass"));

    let bad = tmp("bad.profile");
    std::fs::write(&bad, "splitting chiF=-2 chis=-2,-2,-2\n").unwrap();
    let out = run(&["ledger", bad.to_str().unwrap(), "--format", "records"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("ledger=fail"));
}

#[test]
fn report_can_be_written_to_a_file() {
    let path = tmp("report.txt");
    let out = run(&[
        "homology", "--census", "RP3", "--format", "records",
        "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("b1=0 torsion1=2"));
}
