use std::io::Write;
use std::process::{Command, Output};

fn skewprim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewprim")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn space_with_oracle_agrees() {
    let o = skewprim(&["--preset", "pareigis:n=4", "space", "--oracle", "--dim-only"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "dim 2 AGREE");
}

#[test]
fn space_lists_basis() {
    let o = skewprim(&["--preset", "symbolic:n=2,constrain=2.1", "space"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("dim 1"));
    assert!(lines.next().unwrap().starts_with("x1 x2"));
}

#[test]
fn context_file_round_trip() {
    let preset = skewprim(&["preset", "pareigis", "--n", "3"]);
    assert!(preset.status.success());
    let path = std::env::temp_dir().join(format!("skewprim-cli-{}.ctx", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(&preset.stdout).unwrap();
    let o = skewprim(&["--context", path.to_str().unwrap(), "construct", "pareigis"]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim().matches(" + ").count(), 5);
}

#[test]
fn check_reports_defect_and_sides() {
    let o = skewprim(&["--preset", "symbolic:n=2", "check", "x1 x2", "--wrt", "x1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("not-primitive\ndefect: "));
    assert!(out.contains("left-primitive wrt x1: no"));
    let o = skewprim(&["--preset", "symbolic:n=2,constrain=2.1", "check", "x1 x2 - p[1][2] x2 x1"]);
    assert_eq!(stdout(&o).trim(), "primitive");
}

#[test]
fn serre_on_drinfeld_jimbo_generators() {
    let o = skewprim(&[
        "--preset", "drinfeld-jimbo:cartan=A2", "construct", "serre", "--x", "f1", "--y", "f2", "--a", "-1", "--q", "q",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "f1 f2 f2 - ((q^4+1)/(q^2)) * f2 f1 f2 + f2 f2 f1");
}

#[test]
fn expand_prints_coproduct() {
    let o = skewprim(&["--preset", "symbolic:n=1", "expand", "x1"]);
    assert_eq!(stdout(&o).trim(), "x1 ⊗ 1 + g1 ⊗ x1");
}

#[test]
fn verify_passes_and_reports() {
    let o = skewprim(&["--preset", "pareigis:n=4", "verify", "eq62"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("eq62: pass"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| skewprim(args).status.code();
    assert_eq!(code(&["--preset", "symbolic:n=2", "check", "x1 +"]), Some(2));
    assert_eq!(code(&["--preset", "pareigis:n=4", "verify", "eq31"]), Some(6));
    assert_eq!(code(&["--preset", "symbolic:n=2", "construct", "unary"]), Some(6));
    assert_eq!(code(&["space"]), Some(2));
    assert_eq!(code(&["preset", "color", "--table", "[[1,2],[3,1]]"]), Some(3));
}
