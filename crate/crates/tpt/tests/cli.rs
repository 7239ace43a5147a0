use std::io::Write as _;
use std::path::Path;

use tempfile::NamedTempFile;
use tpt::cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS};
use tpt::format::{format_sym2, format_tpt1};
use tpt_core::{SymmetricFamily2, TransitionTensor};

struct Output {
    code: i32,
    out: String,
    err: String,
}

fn tpt(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("tpt").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn file_with(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn classify_equal_parameters() {
    let r = tpt(&["classify", "--m", "3", "--a", "0.5"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("case              EqualAB"));
    assert!(r.out.contains("stationary set    (0.5, 0.5)\n"));
    assert!(r.out.contains("irreducible       yes"));
    assert!(r.out.contains("flags             none"));
}

#[test]
fn classify_extremal_json() {
    let r = tpt(&["classify", "--m", "4", "--a", "1", "--json"]);
    assert_eq!(r.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    let set = v["stationary_set"].as_array().unwrap();
    assert_eq!(set.len(), 3);
    assert_eq!(set[0], serde_json::json!([0.0, 1.0]));
    assert_eq!(set[2], serde_json::json!([1.0, 0.0]));
    assert!(!v["discrepancy_flags"].as_array().unwrap().is_empty());
    assert_eq!(v["reducibility_witness"], serde_json::json!([1]));
    for key in [
        "order",
        "a",
        "b",
        "c",
        "case",
        "critical_points",
        "irreducible",
        "contraction_bound",
        "literal_set",
        "printed_constant_offset",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn validate_reports_the_offending_column() {
    // column (1,1) gets 0.7 + 0.5 = 1.2
    let text = "TPT1\norder 3\ndim 2\nentries\n0.7\n0.5\n0.5\n0.5\n0.5\n0.5\n0.5\n0.5\nend\n";
    let f = file_with(text);
    let r = tpt(&["validate", path(&f)]);
    assert_eq!(r.code, EXIT_VIOLATIONS);
    assert!(r.out.contains("column (1,1) sums to 1.2"), "{}", r.out);
    assert!(!r.out.contains("column (1,2)"));

    let ok = file_with(&format_tpt1(&TransitionTensor::uniform(3, 3).unwrap()));
    let r = tpt(&["validate", path(&ok)]);
    assert_eq!(r.code, EXIT_OK);
}

#[test]
fn file_and_flags_give_identical_output() {
    for (m, a) in [(3, 0.5), (4, 1.0), (5, 0.0), (6, 0.3), (7, 0.85)] {
        let family = SymmetricFamily2::new(m, a).unwrap();
        let dense = file_with(&format_tpt1(&family.materialize().unwrap()));
        let sym2 = file_with(&format_sym2(&family));
        let (ms, as_) = (m.to_string(), a.to_string());
        for json in [false, true] {
            let mut flags = vec!["classify", "--m", &ms, "--a", &as_];
            let mut from_dense = vec!["classify", "--file", path(&dense)];
            let mut from_sym2 = vec!["classify", "--file", path(&sym2)];
            if json {
                flags.push("--json");
                from_dense.push("--json");
                from_sym2.push("--json");
            }
            let expected = tpt(&flags);
            assert_eq!(expected.code, EXIT_OK);
            assert_eq!(
                tpt(&from_dense).out,
                expected.out,
                "m={m} a={a} json={json}"
            );
            assert_eq!(tpt(&from_sym2).out, expected.out, "m={m} a={a} json={json}");
        }
    }
}

#[test]
fn general_tensor_gets_the_non_uniqueness_notice() {
    let t = TransitionTensor::from_fn(3, 3, |idx| match (idx[0], idx[1]) {
        (0, 0) => 0.6,
        (_, 0) => 0.2,
        _ => 1.0 / 3.0,
    })
    .unwrap();
    let f = file_with(&format_tpt1(&t));
    for cmd in ["classify", "solve"] {
        let r = tpt(&[cmd, "--file", path(&f)]);
        assert_eq!(r.code, EXIT_OK, "{}", r.err);
        assert!(r.out.contains("uniqueness is not guaranteed"), "{}", r.out);
        assert!(r.out.contains("converged         yes"));
    }
}

#[test]
fn parse_errors_name_the_token() {
    let f = file_with("TPT1\norder 3\ndim 2\nentries\n0.5\n0,5\n");
    let r = tpt(&["classify", "--file", path(&f)]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(
        r.err.contains("`0,5`") && r.err.contains("line 6"),
        "{}",
        r.err
    );
    assert_eq!(r.err.lines().count(), 1);

    let f = file_with("SYM2 m=4 a=1.25\n");
    let r = tpt(&["classify", "--file", path(&f)]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("`a=1.25`"), "{}", r.err);

    let r = tpt(&["classify", "--file", "/nonexistent/tensor.tpt"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("cannot read"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify"][..],
        &["classify", "--m", "4"],
        &["classify", "--m", "4", "--a", "0.5", "--file", "x"],
        &["classify", "--m", "2", "--a", "0.5"],
        &["classify", "--m", "4", "--a", "inf"],
        &["roots", "--m", "4", "--a", "0.5", "--grid", "10"],
        &["solve", "--m", "4", "--a", "0.5", "--damping", "1"],
        &["solve", "--m", "4", "--a", "0.5", "--x0", "0.5,0.6"],
        &[
            "simulate",
            "--m",
            "3",
            "--a",
            "0.5",
            "--steps",
            "10",
            "--seed",
            "1",
            "--burn-in",
            "10",
        ],
        &[
            "simulate", "--m", "3", "--a", "0.5", "--steps", "10", "--seed", "1", "--window", "1",
        ],
        &["frobnicate"],
    ] {
        assert_eq!(tpt(args).code, EXIT_USAGE, "{args:?}");
    }
    assert_eq!(tpt(&["--help"]).code, EXIT_OK);
}

#[test]
fn roots_agree_with_enumeration() {
    let r = tpt(&["roots", "--m", "5", "--a", "0"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("root              x = 0 (Boundary"));
    assert!(r.out.contains("root              x = 0.5 (SignChange"));
    assert!(r.out.contains("analytic          0 0.5"));
}

#[test]
fn simulate_writes_a_one_based_trace() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.txt");
    let r = tpt(&[
        "simulate",
        "--m",
        "3",
        "--a",
        "1",
        "--steps",
        "6",
        "--seed",
        "9",
        "--window",
        "2,2",
        "--burn-in",
        "0",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("counts            2 4"));
    let text = std::fs::read_to_string(Path::new(&trace)).unwrap();
    assert_eq!(text, "# seed=9 m=3 a=1.0\n# window=2,2\n1\n2\n2\n1\n2\n2\n");
}

#[test]
fn report_bundles_every_view() {
    let r = tpt(&[
        "report", "--m", "4", "--a", "0.8", "--steps", "20000", "--seed", "3", "--json",
    ]);
    assert_eq!(r.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["classification"]["case"], "AGreater_gt1");
    let c = &v["comparison"];
    assert_eq!(c["burn_in"], 2000);
    assert_eq!(c["empirical"]["total"], 18000);
    assert_eq!(c["lifted"]["ergodicity"], "single_aperiodic_class");
    assert_eq!(c["deviations"].as_array().unwrap().len(), 5);

    let text = tpt(&[
        "report", "--m", "4", "--a", "0.8", "--steps", "20000", "--seed", "3",
    ]);
    assert!(text.out.contains("lifted chain"));
}

#[test]
fn structured_output_is_stable() {
    let args = [
        "report", "--m", "5", "--a", "0.3", "--steps", "5000", "--seed", "11", "--json",
    ];
    assert_eq!(tpt(&args).out, tpt(&args).out);
}
