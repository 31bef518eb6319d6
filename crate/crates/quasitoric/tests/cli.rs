//! Black-box tests of the `qtr` binary: output text, streams, exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qtr"));
    cmd.args(args);
    cmd.env_remove("QT_BUDGET");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let Output {
        status,
        stdout,
        stderr,
    } = cmd.output().expect("binary runs");
    (
        status.code().expect("no signal"),
        String::from_utf8(stdout).expect("stdout is utf-8"),
        String::from_utf8(stderr).expect("stderr is utf-8"),
    )
}

fn temp_doc(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("qtr-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writes");
    path.to_string_lossy().into_owned()
}

#[test]
fn type_arithmetic_commands() {
    let (code, out, _) = run(&["reduce-type", "2", "2", "7"]);
    assert_eq!((code, out.as_str()), (0, "2 2 1\n"));

    let (code, out, _) = run(&["decompose", "12", "18", "10"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "r = 2\nd = 180\ns01 = 3\ns02 = 1\ns12 = 1\nt = [2, 3, 5]\nw = [15, 10, 18]\n"
    );

    let (code, _, err) = run(&["decompose", "0", "1", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("error:"), "stderr was: {err}");
}

#[test]
fn verify_reports_both_answers() {
    let (code, out, _) = run(&["verify", &fixture("line222.problem"), &fixture("ones.relation")]);
    assert_eq!((code, out.as_str()), (0, "valid relation\n"));

    let (code, out, _) = run(&["verify", &fixture("line221.problem"), &fixture("rel228.relation")]);
    assert_eq!((code, out.as_str()), (1, "not a relation\n"));
}

#[test]
fn equiv_prints_a_witness_or_a_negative() {
    let (code, out, _) = run(&[
        "equiv",
        &fixture("line221.problem"),
        &fixture("ones.relation"),
        &fixture("negone.relation"),
    ]);
    assert_eq!((code, out.as_str()), (1, "not equivalent\n"));

    let (code, out, _) = run(&[
        "equiv",
        &fixture("line221.problem"),
        &fixture("ones.relation"),
        &fixture("scaled221.relation"),
    ]);
    assert_eq!((code, out.as_str()), (0, "u = \"1\"\nv = \"x2\"\n"));
}

#[test]
fn transport_moves_relations_both_ways() {
    let (code, out, _) = run(&[
        "transport",
        "--to-reduced",
        &fixture("mono225.problem"),
        &fixture("mono225.relation"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 1\ntype = [2, 2, 1]\nh = [\"x0^3*x1^2\", \"x0^2*x1^3\", \"x0^5*x1^5\"]\n"
    );

    let (code, out, _) = run(&[
        "transport",
        "--from-target",
        "2,3,12",
        &fixture("fermat236.problem"),
        &fixture("fermat236.relation"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 4\ntype = [2, 3, 12]\nh = [\"(z)*x0^3\", \"-x1^2\", \"1\"]\n"
    );

    // The problem must carry the reduced type of the requested target.
    let (code, _, err) = run(&[
        "transport",
        "--from-target",
        "2,2,5",
        &fixture("fermat236.problem"),
        &fixture("fermat236.relation"),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("reduced type"), "stderr was: {err}");

    // Exactly one direction flag is required.
    let (code, _, _) = run(&[
        "transport",
        &fixture("mono225.problem"),
        &fixture("mono225.relation"),
    ]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&[
        "transport",
        "--to-reduced",
        "--from-target",
        "2,2,5",
        &fixture("mono225.problem"),
        &fixture("mono225.relation"),
    ]);
    assert_eq!(code, 2);

    // A relation that does not verify is rejected before transport.
    let (code, _, err) = run(&[
        "transport",
        "--to-reduced",
        &fixture("line221.problem"),
        &fixture("rel228.relation"),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("does not verify"), "stderr was: {err}");
}

#[test]
fn curve_point_and_fiber_round_trip() {
    let (code, out, _) = run(&[
        "curve-point",
        &fixture("fermat236.problem"),
        &fixture("fermat236.relation"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 4\nz1 = \"(z)*x0^3|1\"\nz2 = \"-x1^2|1\"\n"
    );

    let (code, out, _) = run(&[
        "fiber",
        &fixture("line221.problem"),
        &fixture("ones.relation"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 1\ntype = [2, 2, 1]\nrelations = [\n    [\"1\", \"1\", \"1\"],\n    [\"1\", \"-1\", \"1\"],\n]\n"
    );

    // A fiber of size 4 needs a fourth root of unity, absent over Q.
    let (code, _, err) = run(&[
        "fiber",
        &fixture("quad441.problem"),
        &fixture("ones.relation"),
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("root of unity"), "stderr was: {err}");

    let (code, out, _) = run(&[
        "point-to-relation",
        &fixture("fermat236.problem"),
        &fixture("point236.point"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 4\ntype = [2, 3, 6]\nh = [\"(z)*x0^3\", \"-x1^2\", \"1\"]\n"
    );

    // A point that misses the curve is a negative answer.
    let off = temp_doc(
        "offcurve.point",
        "cyclotomic_order = 4\nz1 = \"1\"\nz2 = \"1\"\n",
    );
    let (code, _, err) = run(&["point-to-relation", &fixture("fermat236.problem"), &off]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());

    // Reconstruction is only defined when s01 = 1.
    let on_line = temp_doc("online.point", "z1 = \"1\"\nz2 = \"1\"\n");
    let (code, _, _) = run(&["point-to-relation", &fixture("line221.problem"), &on_line]);
    assert_eq!(code, 3);
}

#[test]
fn family_existence_verdicts_and_exit_codes() {
    let (code, out, _) = run(&["family", "exists", &fixture("linear122.problem")]);
    assert_eq!(code, 0);
    assert!(out.starts_with(
        "status = \"Yes\"\ncase = \"LinearP0Equals1\"\npermutation = [0, 1, 2]\ndetail = \""
    ));

    let (code, out, _) = run(&["family", "exists", &fixture("linear133.problem")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("status = \"No\"\ncase = \"none\"\n"));

    let (code, out, _) = run(&["family", "exists", &fixture("fermat236.problem")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("status = \"No\"\ncase = \"none\"\n"));

    let (code, out, _) = run(&[
        "family",
        "exists",
        &fixture("line222.problem"),
        "--witness",
        &fixture("ones.relation"),
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("status = \"Yes\"\ncase = \"Conic222\"\n"));

    let (code, out, _) = run(&["family", "exists", &fixture("sum222.problem")]);
    assert_eq!(code, 4);
    assert!(out.starts_with("status = \"Unknown\"\ncase = \"none\"\n"));
}

#[test]
fn family_sampling_emits_members_and_parameters() {
    let (code, out, _) = run(&[
        "family",
        "sample",
        &fixture("linear122.problem"),
        "--count",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 1\ntype = [1, 2, 2]\nrelations = [\n    [\"x0^2 - x1^2\", \"x1\", \"1\"],\n    [\"-2*x0*x1 - x1^2\", \"x0 + x1\", \"1\"],\n]\nparameters = [\n    \"g1 = x1, g2 = 1\",\n    \"g1 = x0 + x1, g2 = 1\",\n]\nequivalent_pairs = []\n"
    );

    let (code, _, err) = run(&["family", "sample", &fixture("fermat236.problem")]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());

    let (code, _, _) = run(&["family", "sample", &fixture("sum222.problem")]);
    assert_eq!(code, 4);

    let (code, _, _) = run(&[
        "family",
        "sample",
        &fixture("linear122.problem"),
        "--count",
        "0",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn search_enumerates_and_respects_the_budget() {
    let (code, out, _) = run(&[
        "search",
        &fixture("line221.problem"),
        "--deg",
        "0,0,0",
        "--coeffs",
        "-1,0,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 1\ntype = [2, 2, 1]\nrelations = [\n    [\"-1\", \"-1\", \"1\"],\n    [\"-1\", \"1\", \"1\"],\n    [\"1\", \"-1\", \"1\"],\n    [\"1\", \"1\", \"1\"],\n]\n"
    );

    let (code, out, _) = run(&[
        "search",
        &fixture("line221.problem"),
        "--deg",
        "0,0,0",
        "--coeffs",
        "-1,0,1",
        "--dedupe",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 1\ntype = [2, 2, 1]\nrelations = [\n    [\"-1\", \"-1\", \"1\"],\n    [\"-1\", \"1\", \"1\"],\n]\n"
    );

    // No relation over the grid: empty list, negative exit.
    let (code, out, _) = run(&[
        "search",
        &fixture("line221.problem"),
        "--deg",
        "0,0,0",
        "--coeffs",
        "2",
    ]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        "cyclotomic_order = 1\ntype = [2, 2, 1]\nrelations = []\n"
    );

    // Inconsistent degree bounds: empty list plus an explanatory note.
    let (code, out, _) = run(&[
        "search",
        &fixture("line221.problem"),
        "--deg",
        "1,0,0",
        "--coeffs",
        "1",
    ]);
    assert_eq!(code, 1);
    assert_eq!(
        out,
        "cyclotomic_order = 1\ntype = [2, 2, 1]\nrelations = []\nnote = \"degree bounds [1, 0, 0] are inconsistent with the balance constraint\"\n"
    );

    // The candidate cap can be lowered through the environment.
    let (code, _, err) = run_with_env(
        &[
            "search",
            &fixture("line221.problem"),
            "--deg",
            "0,0,0",
            "--coeffs",
            "-1,0,1",
        ],
        &[("QT_BUDGET", "10")],
    );
    assert_eq!(code, 4);
    assert!(err.contains("cap"), "stderr was: {err}");

    let (code, _, _) = run_with_env(
        &[
            "search",
            &fixture("line221.problem"),
            "--deg",
            "0,0,0",
            "--coeffs",
            "1",
        ],
        &[("QT_BUDGET", "plenty")],
    );
    assert_eq!(code, 2);

    // Grid entries must be constants.
    let (code, _, _) = run(&[
        "search",
        &fixture("line221.problem"),
        "--deg",
        "0,0,0",
        "--coeffs",
        "x0",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn completion_fills_the_unit_exponent_component() {
    let (code, out, _) = run(&["complete", &fixture("line122.problem"), "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "cyclotomic_order = 1\ntype = [1, 2, 2]\nh = [\"1\", \"1\", \"1\"]\n"
    );

    let (code, out, _) = run(&["complete", &fixture("line122.problem"), "1", "x0"]);
    assert_eq!((code, out.as_str()), (1, "none\n"));

    // Types without a unit entry are out of scope.
    let (code, _, _) = run(&["complete", &fixture("fermat236.problem"), "1", "1"]);
    assert_eq!(code, 3);

    // A numerator that cancels to zero is an input error, not a "none".
    let (code, _, _) = run(&["complete", &fixture("cancel122.problem"), "1", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn documents_are_validated_and_warned_about() {
    // The symbol z collapses to 1 in the rational field; say so on stderr.
    let warned = temp_doc(
        "warn.problem",
        "type = [2, 2, 1]\nF = [\"z*x0\", \"x1\", \"-z*x0 - x1\"]\n",
    );
    let (code, out, err) = run(&["verify", &warned, &fixture("ones.relation")]);
    assert_eq!((code, out.as_str()), (0, "valid relation\n"));
    assert!(err.contains("reduces to 1"), "stderr was: {err}");

    // Zero coefficients are rejected up front.
    let zero = temp_doc(
        "zero.problem",
        "type = [2, 2, 1]\nF = [\"0\", \"x1\", \"x2\"]\n",
    );
    let (code, _, err) = run(&["verify", &zero, &fixture("ones.relation")]);
    assert_eq!(code, 2);
    assert!(err.contains("invalid problem"), "stderr was: {err}");

    // So are coefficient triples with a common factor.
    let common = temp_doc(
        "common.problem",
        "type = [2, 2, 1]\nF = [\"x0\", \"x0*x1\", \"x0*x2\"]\n",
    );
    let (code, _, err) = run(&["verify", &common, &fixture("ones.relation")]);
    assert_eq!(code, 2);
    assert!(err.contains("invalid problem"), "stderr was: {err}");

    // Malformed TOML and grammar errors are input errors.
    let broken = temp_doc("broken.problem", "type = [2, 2\n");
    let (code, _, _) = run(&["verify", &broken, &fixture("ones.relation")]);
    assert_eq!(code, 2);

    let bad_poly = temp_doc(
        "badpoly.problem",
        "type = [2, 2, 1]\nF = [\"x3\", \"x1\", \"x2\"]\n",
    );
    let (code, _, _) = run(&["verify", &bad_poly, &fixture("ones.relation")]);
    assert_eq!(code, 2);

    // A relation declaring a different field is rejected.
    let mismatched = temp_doc(
        "mismatch.relation",
        "cyclotomic_order = 3\nh = [\"1\", \"1\", \"1\"]\n",
    );
    let (code, _, err) = run(&["verify", &fixture("fermat236.problem"), &mismatched]);
    assert_eq!(code, 2);
    assert!(err.contains("cyclotomic"), "stderr was: {err}");

    // Missing files and unknown subcommands are input errors; help exits 0.
    let (code, _, _) = run(&["verify", &fixture("line221.problem"), "/no/such/file"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("qtr"));
}
