use painleve_cli::run;
use painleve_schlesinger::from_json;
use painleve_vi::fixtures;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("painleve").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn verify_row_three() {
    let (code, out, _) = call(&["verify", "--row", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("theta: (c-1/2, a+c-1, c-1/2, a+c-1)"));
    assert!(out.contains("lambda: -b"));
    assert!(out.contains("t: b^2"));
    assert!(out.contains("residual: 0, 0"));
}

#[test]
fn unknown_row_is_an_input_error() {
    assert_eq!(call(&["verify", "--row", "99"]).0, 2);
    assert_eq!(call(&["verify", "--row", "1"]).0, 2);
    assert_eq!(call(&["verify"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
}

#[test]
fn convolution_of_row_three_file() {
    let dir = tempfile::tempdir().unwrap();
    let row3 = dir.path().join("row3.schles.json");
    let out = dir.path().join("dihedral.json");
    assert_eq!(call(&["schlesinger", "--row", "3", "--output", row3.to_str().unwrap()]).0, 0);
    let args = ["mc", "--input", row3.to_str().unwrap(), "--mu", " -c", "--output", out.to_str().unwrap()];
    assert_eq!(call(&args).0, 0);
    let first = std::fs::read(&out).unwrap();
    let (s, d) = from_json(std::str::from_utf8(&first).unwrap()).unwrap();
    assert_eq!(s.residues(), &fixtures::dihedral_residues());
    assert_eq!(d.theta[3], painleve_core::rf("-(a+2*c-3)"));

    assert_eq!(call(&args).0, 0);
    assert_eq!(std::fs::read(&out).unwrap(), first);

    let (code, text, _) = call(&["pvi-data", "--input", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(text.contains("alpha: c"));
}

#[test]
fn bad_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("none.json");
    assert_eq!(call(&["pvi-data", "--input", missing.to_str().unwrap()]).0, 2);
    let garbage = dir.path().join("bad.json");
    std::fs::write(&garbage, "{\"t\": 1}").unwrap();
    assert_eq!(call(&["pvi-data", "--input", garbage.to_str().unwrap()]).0, 2);
    assert_eq!(call(&["check-identity", "--lambda", "b+", "--t", "b"]).0, 2);
    assert_eq!(call(&["derive", "--family", "9"]).0, 2);
    assert_eq!(call(&["scalar", "--family", "2", "--coordinate", "3"]).0, 2);
}

#[test]
fn relations() {
    let five = ["check-identity", "--lambda", "(b^3+b^2+3*b+3)/(b^3+b^2-5*b+3)", "--t", "(b^4-6*b^2-8*b-3)/(b^4-6*b^2+8*b-3)"];
    assert_eq!(call(&five).0, 0);
    assert_eq!(call(&["check-identity", "--lambda", "-b", "--t", "b^2", "--relation", "lambda-t"]).0, 1);
}

#[test]
fn derive_and_scalar() {
    let (code, out, _) = call(&["derive", "--family", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("nu: -3/(4*b)"));
    assert!(out.contains("apparent point: 1"));
    let (code, out, _) = call(&["scalar", "--family", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("apparent: 1 exponents (0, 2)"));
    assert!(out.contains("Fuchs relation: true"));
    assert_eq!(call(&["scalar", "--family", "2", "--coordinate", "2"]).0, 1);
}

#[test]
fn verify_everything() {
    let (code, out, _) = call(&["verify", "--all"]);
    assert_eq!(code, 0, "{out}");
    let rows: Vec<usize> = (2..=6).map(|i| out.find(&format!("row {i}\n")).unwrap()).collect();
    assert!(rows.windows(2).all(|w| w[0] < w[1]));
    assert!(out.ends_with("all checks passed\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_painleve");
    let status = std::process::Command::new(bin).args(["verify", "--row", "99"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
    let status = std::process::Command::new(bin).args(["verify", "--row", "2"]).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
}
