use msf4::cli::run;

fn msf4(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("msf4").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_input(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("msf4-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn inconsistent_system() {
    let path = write_input(
        "inconsistent.txt",
        "vars: x y z\nx*y + x\ny*z + z + 1\nx*z + 1\nx + y + z\n",
    );
    let (code, out, _) = msf4(&["--input", path.to_str().unwrap(), "--algorithm", "ms-f4"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "GB: 1"), "{out}");
    assert!(out.lines().any(|l| l == "solutions: none"), "{out}");
}

#[test]
fn undeclared_variable_is_usage_error() {
    let path = write_input("undeclared.txt", "vars: x y\nx*y + z\n");
    let (code, _, err) = msf4(&["--algorithm", "s-f4", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn field_equations_cannot_be_dropped_for_s_variants() {
    for alg in ["s-f4", "ms-f4"] {
        let (code, _, _) = msf4(&["--gen", "cyclic:4", "--algorithm", alg, "--no-adjoin"]);
        assert_eq!(code, 2, "{alg}");
    }
    let (code, _, _) = msf4(&["--gen", "cyclic:4", "--algorithm", "fe-f4", "--no-adjoin"]);
    assert_eq!(code, 0);
}

#[test]
fn bad_generator_and_flags() {
    assert_eq!(msf4(&["--gen", "hfe:17"]).0, 2);
    assert_eq!(msf4(&["--gen", "cyclic:4", "--algorithm", "f5"]).0, 2);
    assert_eq!(msf4(&[]).0, 2);
}

#[test]
fn solved_line_and_summary() {
    let (code, out, _) = msf4(&["--gen", "cyclic:6", "--verify"]);
    assert_eq!(code, 0);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("solved: "), "{out}");
    let summary = out.lines().last().unwrap();
    assert!(summary.contains("algorithm=ms-f4"), "{summary}");
    assert!(summary.contains("verify=pass"), "{summary}");
}

#[test]
fn cyclic6_verifies_for_every_variant() {
    for alg in ["buchberger", "fe-f4", "s-f4", "ms-f4"] {
        let (code, out, _) = msf4(&["--gen", "cyclic:6", "--algorithm", alg, "--verify"]);
        assert_eq!(code, 0, "{alg}");
        assert!(out.contains("verify=pass"), "{alg}: {out}");
    }
}

#[test]
fn stats_json() {
    let path = write_input("stats.json", "");
    let (code, _, _) = msf4(&[
        "--gen",
        "hfe:17,6,1",
        "--algorithm",
        "s-f4",
        "--stats",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for key in [
        "c_pair",
        "l_matrix",
        "reductor",
        "round",
        "solved",
        "h_deg_gb",
        "gb_size",
        "r_time_ms",
        "algorithm",
        "order",
        "n_vars",
        "n_eqs",
        "seed",
        "gb_size_unreduced",
        "h_deg_gb_unreduced",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["algorithm"], "s-f4");
    assert_eq!(v["n_vars"], 6);
    assert_eq!(v["seed"], 1);
}

#[test]
fn output_is_deterministic() {
    let a = msf4(&["--gen", "hfe:17,7,3", "--algorithm", "ms-f4"]).1;
    let b = msf4(&["--gen", "hfe:17,7,3", "--algorithm", "ms-f4"]).1;
    assert_eq!(a, b);
}

#[test]
fn lex_order_and_rebuild_mode() {
    let (code, out, _) = msf4(&[
        "--gen",
        "hfe:17,6,0",
        "--order",
        "lex",
        "--renew-mode",
        "rebuild",
        "--history-cap",
        "2",
        "--verify",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("order=lex"), "{out}");
    assert!(out.contains("verify=pass"), "{out}");
}
