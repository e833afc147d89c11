//! Golden tests for every CLI subcommand, plus exit codes and the
//! determinism contract (byte-identical JSON modulo the `meta` object).

use orbivol::cli::{run, EXIT_DEGRADED, EXIT_ERROR, EXIT_OK, EXIT_USAGE};

fn run_args(args: &[&str]) -> (i32, String) {
    let argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let code = run(&argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn json_sans_meta(s: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
    v.as_object_mut().unwrap().remove("meta");
    v
}

#[test]
fn golden_lob() {
    let (code, out) = run_args(&["lob", "--order", "2", "--omega", "pi/6", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("lob2(pi/6)"), "{out}");
    assert!(out.contains("0.507470803204826812510601277137"), "{out}");

    let (code, out) = run_args(&["lob", "--order", "3", "--omega", "pi/5", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0.0473419787527079209698612011916"), "{out}");
}

#[test]
fn golden_prism() {
    // the closed-form endpoint: zeta(3)/3200
    let (code, out) = run_args(&["prism", "--alpha", "2pi/5", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0.000375642782237373214187418175472"), "{out}");

    let (code, out) = run_args(&["prism", "--polytope", "P0", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0.000767296180103077056417657"), "{out}");
}

#[test]
fn golden_coxeter() {
    let (code, out) = run_args(&[
        "coxeter",
        "--symbol",
        "[5,3,3,3,4]",
        "--dashed",
        "6,5",
        "--check",
        "signature",
        "--digits",
        "30",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(5,1,1)"), "{out}");
    assert!(out.contains("0.53063753095251782601650945"), "{out}");

    // the branched symbol alone (its dashed edges omitted, as in symbols)
    // is a non-degenerate rank-7 configuration
    let (code, out) = run_args(&["coxeter", "--symbol", "[5,3,3,3,3^{1,1}]", "--check", "signature", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("[5,3,3,3,3^{1,1}]"), "{out}");
    assert!(out.contains("(6,1,0)"), "{out}");
}

#[test]
fn golden_zeta() {
    let (code, out) = run_args(&["zeta", "--field", "ell2", "--s", "3", "--cutoff", "100000", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1.0180364515"), "{out}");
    assert!(out.contains("cutoff 100000"), "{out}");

    // quadratic field goes through the full-precision character route
    let (code, out) = run_args(&["zeta", "--field", "k0", "--s", "2", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1.16167119561863854975858263633"), "{out}");

    // non-monogenic quartic with a shipped relative description
    let (code, out) = run_args(&["zeta", "--field", "ell475", "--s", "3", "--cutoff", "100000", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("relative L"), "{out}");
}

#[test]
fn golden_covolume() {
    let (code, out) = run_args(&["covolume", "--case", "gamma2", "--cutoff", "100000", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0.0039693928606"), "{out}");
    assert!(out.contains("input zeta_k0(2)"), "{out}");
    assert!(out.contains("input index"), "{out}");
}

#[test]
fn golden_bounds() {
    let (code, out) = run_args(&["bounds", "--eq", "37", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("7.6575427110600761273957374"), "{out}");

    let (code, out) = run_args(&["bounds", "--eq", "35", "--d", "2", "--dk", "27", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("0.0047535788"), "{out}");

    let (code, _out) = run_args(&["bounds", "--eq", "31", "--d", "2", "--dk", "5", "--dell", "475", "--hell", "1", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);

    // missing parameters are a clean error
    let (code, _) = run_args(&["bounds", "--eq", "35", "--digits", "30"]);
    assert_eq!(code, EXIT_ERROR);
}

#[test]
fn golden_verify() {
    let (code, out) = run_args(&[
        "verify", "--identity", "gamma2", "--target", "8", "--cutoff", "100000", "--digits", "30",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("matched_digits"), "{out}");

    // an over-ambitious target at a small cutoff degrades (exit 2)
    let (code, out) = run_args(&[
        "verify", "--identity", "gamma2", "--target", "30", "--cutoff", "100000", "--digits", "30",
    ]);
    assert_eq!(code, EXIT_DEGRADED);
    assert!(out.contains("degraded precision"), "{out}");
}

#[test]
fn golden_table1() {
    let (code, out) = run_args(&["table1", "--cutoff", "100000", "--digits", "30"]);
    assert_eq!(code, EXIT_OK);
    for needle in [
        "[5,3,3,3,3]",
        "[5,3,3,3,3^{1,1}]",
        "[5,3,3,3,4]",
        "0.000767296180",
        "0.00153459236",
        "0.00198469643",
        "0.0030691847",
        "0.0039693928",
    ] {
        assert!(out.contains(needle), "table misses {needle}:\n{out}");
    }
}

#[test]
fn json_reports_are_deterministic_modulo_meta() {
    let args = ["covolume", "--case", "gamma0", "--cutoff", "50000", "--digits", "30", "--output", "json"];
    let (c1, out1) = run_args(&args);
    let (c2, out2) = run_args(&args);
    assert_eq!(c1, EXIT_OK);
    assert_eq!(c2, EXIT_OK);
    assert_eq!(json_sans_meta(&out1), json_sans_meta(&out2));
    // schema is versioned
    let v = json_sans_meta(&out1);
    assert_eq!(v["schema"], "orbivol.report/1");
    assert_eq!(v["diagnostics"]["digits"], 30);
}

#[test]
fn exit_codes() {
    // no arguments: usage
    let (code, _) = run_args(&[]);
    assert_eq!(code, EXIT_USAGE);
    // unknown subcommand: usage
    let (code, _) = run_args(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    // domain error: computation error
    let (code, out) = run_args(&["prism", "--alpha", "0.5", "--digits", "30"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(out.contains("error"), "{out}");
    // precision below minimum
    let (code, _) = run_args(&["lob", "--order", "2", "--omega", "pi/6", "--digits", "10"]);
    assert_eq!(code, EXIT_ERROR);
    // help exits 0
    let (code, _) = run_args(&["--help"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn diagram_files_load_and_solve() {
    let dir = std::env::temp_dir().join("orbivol-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("prism.json");
    std::fs::write(
        &path,
        r#"{"nodes":7,"edges":[
            {"i":0,"j":1,"weight":"5"},
            {"i":1,"j":2,"weight":"3"},
            {"i":2,"j":3,"weight":"3"},
            {"i":3,"j":4,"weight":"3"},
            {"i":4,"j":5,"weight":"4"},
            {"i":6,"j":5,"dashed":true}
        ]}"#,
    )
    .unwrap();
    let (code, out) = run_args(&[
        "coxeter",
        "--diagram",
        path.to_str().unwrap(),
        "--check",
        "signature",
        "--digits",
        "30",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("(5,1,1)"), "{out}");
    assert!(out.contains("0.5306375309"), "{out}");
}

#[test]
fn shipped_field_data_file_loads() {
    // integration tests run with the crate as working directory
    let path = "../../data/fields.json";
    assert!(std::path::Path::new(path).exists(), "shipped field data missing");
    let (code, out) = run_args(&[
        "zeta",
        "--field",
        &format!("{path}#ell2"),
        "--s",
        "3",
        "--cutoff",
        "50000",
        "--digits",
        "30",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("1.01803645"), "{out}");
}

#[test]
fn env_var_sets_default_digits() {
    // every other test passes --digits explicitly (the flag wins over the
    // environment), so setting the variable here cannot race them
    std::env::set_var("ORBIVOL_DIGITS", "34");
    let (code, out) = run_args(&["lob", "--order", "2", "--omega", "pi/2", "--output", "json"]);
    std::env::remove_var("ORBIVOL_DIGITS");
    assert_eq!(code, EXIT_OK);
    let v = json_sans_meta(&out);
    assert_eq!(v["diagnostics"]["digits"], 34);
    // and the flag overrides it
    let (code, out) = run_args(&["lob", "--order", "2", "--omega", "pi/2", "--digits", "32", "--output", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json_sans_meta(&out)["diagnostics"]["digits"], 32);
}
