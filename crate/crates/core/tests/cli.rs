use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fmp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmp"))
        .args(args)
        .output()
        .expect("spawn fmp")
}

fn fmp_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fmp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn fmp");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn lattice_info_reports_discriminant_form() {
    let v = json_of(&fmp(&["lattice", "info", r#"{"gram":[[2]]}"#, "--json"]));
    assert_eq!(v["determinant"], 2);
    assert_eq!(v["discriminant_form"]["factors"][0], 2);
    assert_eq!(v["discriminant_form"]["quadratic"][0], "1/2");
    assert_eq!(v["even"], true);
}

#[test]
fn genus_without_isometry_on_determinant_23() {
    let a = r#"{"gram":[[2,1],[1,12]]}"#;
    let b = r#"{"gram":[[4,1],[1,6]]}"#;
    let g = json_of(&fmp(&["lattice", "genus-eq", a, b, "--json"]));
    let i = json_of(&fmp(&["lattice", "isometric", a, b, "--json"]));
    assert_eq!(g["verdict"], "same");
    assert_eq!(i["verdict"], "not_isometric");
}

#[test]
fn stdin_and_inline_input_agree() {
    let inline = fmp(&["lattice", "info", r#"[[0,1],[1,0]]"#]);
    let piped = fmp_stdin(&["lattice", "info"], r#"{"gram":[[0,1],[1,0]]}"#);
    assert!(inline.status.success() && piped.status.success());
    assert_eq!(inline.stdout, piped.stdout);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "lattice",
        "overlattices",
        r#"{"gram":[[0,2],[2,0]]}"#,
        "--json",
    ];
    let first = fmp(&args);
    for _ in 0..3 {
        assert_eq!(fmp(&args).stdout, first.stdout);
    }
    assert_eq!(json_of(&first)["count"], 3);
}

#[test]
fn json_round_trips_through_reserialisation() {
    for args in [
        vec!["elliptic", "partners", "--lambda", "12", "--json"],
        vec![
            "bielliptic",
            "reduce",
            "--r",
            "4",
            "--k",
            "2",
            "--a",
            "3",
            "--json",
        ],
        vec!["surface", "partners", r#"{"class":"enriques"}"#, "--json"],
    ] {
        let out = fmp(&args);
        let v = json_of(&out);
        let again = serde_json::to_string_pretty(&v).unwrap();
        assert_eq!(
            again.trim_end(),
            String::from_utf8_lossy(&out.stdout).trim_end()
        );
    }
}

#[test]
fn elliptic_partner_residues() {
    let v = json_of(&fmp(&["elliptic", "partners", "--lambda", "5", "--json"]));
    assert_eq!(v["residues"], serde_json::json!([1, 2]));
    assert_eq!(v["count"], 2);
}

#[test]
fn rank_reduction_matrix() {
    let v = json_of(&fmp(&[
        "bielliptic",
        "reduce",
        "--r",
        "4",
        "--k",
        "2",
        "--a",
        "3",
        "--json",
    ]));
    assert_eq!(v["matrix"], serde_json::json!([[3, -2], [2, -1]]));
}

#[test]
fn exit_codes() {
    assert_eq!(fmp(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(
        fmp(&["lattice", "info", r#"{"gram":[[1,2],[3,4]]}"#])
            .status
            .code(),
        Some(2)
    );
    let vague = [
        "--strict",
        "surface",
        "compare",
        r#"{"class":"k3"}"#,
        r#"{"class":"k3"}"#,
    ];
    assert_eq!(fmp(&vague).status.code(), Some(3));
    assert_eq!(fmp(&vague[1..]).status.code(), Some(0));
}

#[test]
fn self_only_classes() {
    for class in ["general_type", "enriques", "ruled_non_elliptic"] {
        let input = format!(r#"{{"class":"{class}"}}"#);
        let v = json_of(&fmp(&["surface", "partners", &input, "--json"]));
        assert_eq!(v["verdict"]["kind"], "self_only", "{class}");
    }
}
