use std::process::{Command, Output};

use ellipcp::report::{
    CellReport, CpReport, EulerReport, IntersectReport, SphereReport, SubgroupsReport, TorsionReport, SCHEMA,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn ellipcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellipcp")).args(args).env("ELLIPCP_COLOR", "never").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn success(args: &[&str]) -> String {
    let out = ellipcp(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty(), "{args:?} wrote to stderr");
    stdout(&out)
}

fn failure(args: &[&str], code: i32) -> String {
    let out = ellipcp(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", stdout(&out));
    assert!(out.stdout.is_empty(), "{args:?} wrote results on failure");
    String::from_utf8(out.stderr).unwrap()
}

/// Parses the report and checks that serializing it again reproduces the
/// emitted bytes.
fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(args: &[&str]) -> T {
    let text = success(args);
    let report: T = serde_json::from_str(&text).expect("valid report");
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, text, "{args:?}: JSON does not round-trip");
    let reparsed: T = serde_json::from_str(&again).unwrap();
    assert_eq!(reparsed, report);
    report
}

#[test]
fn cp_examples() {
    assert!(success(&["cp", "eps+4z"]).starts_with("EC_T(CP(eps + 4z)) = (0, 4)"));
    assert!(success(&["cp", "3z^5"]).starts_with("EC_T(CP(3z^5)) = (2, 2)"));
    let verified = success(&["cp", "eps+z+3z^2", "--verify"]);
    assert!(verified.starts_with("EC_T(CP(eps + z + 3z^2)) = (0, 16)"));
    assert_eq!(verified.matches(" OK").count(), 3);
    assert!(success(&["cp", "eps + 4z", "--unreduced"]).starts_with("EC_T(CP(eps + 4z)_+) = (1, 5)"));
}

#[test]
fn cp_trail_names_each_step() {
    let text = success(&["cp", "eps+4z"]);
    let trail = text.lines().nth(1).unwrap();
    for piece in ["D = C_(0,1) + 4C_(1,1)", "D² = 8", "d = 4", "coker0 + ker1 = 1 + 0", "coker1 + ker2 = 2 + 3"] {
        assert!(trail.contains(piece), "missing {piece:?} in {trail:?}");
    }
}

#[test]
fn cp_errors() {
    assert!(failure(&["cp", "eps+0z"], 2).contains("position 4"));
    failure(&["cp", "eps + z^"], 2);
    failure(&["cp", "0"], 3);
    failure(&["cp"], 2);
}

#[test]
fn cp_verify_guard() {
    // Directions (0,1) and (13,1) have det 13.
    assert!(failure(&["cp", "eps + z^13", "--verify"], 5).contains("exceeds 12"));
    success(&["cp", "eps + z^13"]);
}

#[test]
fn cp_report_is_consistent_and_round_trips() {
    for rep in ["eps+4z", "eps + z + 3z^2", "3z^5", "z^-2 + 2z^3 + z^4", "z"] {
        let r: CpReport = round_trip(&["cp", rep, "--json", "--verify"]);
        assert_eq!(r.schema, SCHEMA);
        assert_eq!(r.kind, "cp");
        assert_eq!(r.input, rep);
        assert_eq!(r.unreduced.checked_sub(r.point), Some(r.reduced));
        assert_eq!(r.unreduced, r.les.unreduced());
        let components = r.representation.split(" + ").count();
        if components >= 2 {
            assert_eq!(r.reduced.odd, r.d_invariant);
            assert_eq!(r.reduced.even, 0);
        }
        assert_eq!(r.summary.self_intersection, 2 * r.summary.coh_minus_d.chi());
        assert!(r.oracle.unwrap().iter().all(|c| c.agree));
    }
    let r: CpReport = round_trip(&["cp", "eps+4z", "--json"]);
    assert!(r.oracle.is_none());
}

#[test]
fn sphere_examples() {
    assert!(success(&["sphere", "x^0y^1 + 4x^1y^1"]).starts_with("EC_T2(S^(x^0y^1 + 4x^1y^1)) = (4, 0)"));
    assert!(success(&["sphere", "2x^1y^1"]).contains("= (2, 2)"));
    assert!(failure(&["sphere", "x^0y^0"], 3).contains("no fixed points"));
    failure(&["sphere", "x^1y^"], 2);
    let r: SphereReport = round_trip(&["sphere", "x^0y^1 + 4x^1y^1", "--json", "--verify"]);
    assert_eq!((r.value.even, r.value.odd), (4, 0));
    assert!(r.summary.ample);
}

#[test]
fn oracle_examples() {
    assert!(success(&["oracle", "intersect", "2,1", "0,1"]).contains("counted 4 points, det² = 4 OK"));
    assert!(success(&["oracle", "intersect", "-1,3", "1,0"]).contains("det² = 9 OK"));
    assert!(success(&["oracle", "torsion", "6"]).contains("|E[6]| = 36 (n² = 36), exact order 6: 24"));
    assert!(success(&["oracle", "subgroups", "12,cyclic"]).contains("6 subgroups, closed form 6 OK"));
    assert!(success(&["oracle", "subgroups", "4,full"]).contains("15 subgroups, closed form 15 OK"));
}

#[test]
fn oracle_reports_round_trip() {
    let r: IntersectReport = round_trip(&["--json", "oracle", "intersect", "2,1", "0,1"]);
    assert_eq!((r.check.count, r.check.det_squared), (4, 4));
    let r: TorsionReport = round_trip(&["oracle", "torsion", "12", "--json"]);
    assert_eq!((r.points, r.exact_order), (144, 96));
    assert!(r.agree);
    let r: SubgroupsReport = round_trip(&["oracle", "subgroups", "1/2,0;0,1/6", "--json"]);
    assert_eq!(r.invariant_factors, [2, 6]);
    assert_eq!(r.count, r.count_closed_form);
}

#[test]
fn oracle_guards_and_errors() {
    failure(&["oracle", "intersect", "7,1", "0,2"], 5);
    failure(&["oracle", "torsion", "101"], 5);
    failure(&["oracle", "subgroups", "101,cyclic"], 5);
    failure(&["oracle", "intersect", "1,1", "2,2"], 3);
    failure(&["oracle", "torsion", "0"], 3);
    failure(&["oracle", "torsion", "six"], 2);
    failure(&["oracle", "intersect", "1", "0,1"], 2);
}

#[test]
fn cell_examples() {
    let text = success(&["cell", "codim1", "1,0", "--family", "trivial"]);
    assert!(text.contains("ker z_(1,0): ΣQ"));
    assert!(text.contains("trivial: ΣQ[x_A,x_B]/(x_A)"));
    assert!(success(&["cell", "finite", "1/2,1/2"]).contains("total: Σ²Q^2"));
    assert!(success(&["cell", "finite", "trivial"]).contains("total: Σ²Q^1"));
    assert!(success(&["cell", "finite", "6,cyclic"]).contains("total: Σ²Q^4"));
    assert!(success(&["cell", "finite", "2,full"]).contains("total: Σ²Q^5"));
    failure(&["cell", "finite", "1/2"], 2);
    failure(&["cell", "codim1", "x"], 2);
    failure(&["cell", "codim1", "2,0"], 3);
}

#[test]
fn cell_reports_round_trip() {
    let r: CellReport = round_trip(&["cell", "codim1", "1,0", "--family", "trivial", "--family", "1/2,0", "--json"]);
    assert_eq!(r.bottom.len(), 2);
    assert_eq!(r.bottom[1].value, "0");
    let one = r.degrees.iter().position(|&k| k == 1).unwrap();
    assert_eq!(r.codim1[0].dims[one], 1);
    let r: CellReport = round_trip(&["cell", "finite", "2,full", "--json"]);
    let two = r.degrees.iter().position(|&k| k == 2).unwrap();
    assert_eq!(r.bottom_dims[two], 5);
}

#[test]
fn euler_command() {
    let text = success(&["euler", "x^1y^1 + x^2y^0", "--subgroup", "1/2,1/2"]);
    assert!(text.contains("x_A*x_B"), "{text}");
    let r: EulerReport =
        round_trip(&["euler", "x^1y^1 + x^2y^0", "--subgroup", "1/2,1/2", "--minus", "x^1y^1", "--json"]);
    assert_eq!(r.grading, Some(-2));
    assert_eq!(r.suspension_shift, 2);
    failure(&["euler", "x^0y^0", "--subgroup", "trivial"], 3);
}

#[test]
fn color_setting() {
    let out = Command::new(env!("CARGO_BIN_EXE_ellipcp"))
        .args(["oracle", "torsion", "2"])
        .env("ELLIPCP_COLOR", "sometimes")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    // Piped stdout is not a terminal, so `auto` stays plain.
    let out = Command::new(env!("CARGO_BIN_EXE_ellipcp"))
        .args(["oracle", "torsion", "2"])
        .env("ELLIPCP_COLOR", "auto")
        .output()
        .unwrap();
    assert!(!stdout(&out).contains('\x1b'));
}
