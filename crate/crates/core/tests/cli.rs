use fermionic_characters::cli;

fn run(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("fermionic").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn principal_json() {
    let (code, out, _) = run("principal --l 1 --k 1 --trunc 6 --format json");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["params"]["trunc"], "6/1");
    let series = v["series"].as_array().unwrap();
    let term = series.iter().find(|t| t["q"] == "1/4" && t["y"] == serde_json::json!([1])).unwrap();
    assert_eq!(term["c"], 1);
    assert_eq!(series[0]["q"], "0/1");
}

#[test]
fn json_is_deterministic() {
    let a = run("standard --l 2 --k 1 --trunc 2 --format json");
    let b = run("standard --l 2 --k 1 --trunc 2 --format json");
    assert_eq!(a, b);
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run("verify principal --l 2 --k 2 --trunc 4");
    assert_eq!(code, 0);
    assert!(out.contains("match to trunc 4\n"));
    let (code, out, _) = run("verify standard --l 1 --k 2 --trunc 2 --format json");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"], "match");
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
    assert_eq!(v["params"]["k"], 2);
}

#[test]
fn usage_errors() {
    assert_eq!(run("principal --l 0 --k 1").0, 2);
    assert_eq!(run("principal --l 1 --k 0").0, 2);
    assert_eq!(run("principal --l 1 --k 1 --trunc x/y").0, 2);
    assert_eq!(run("verify nothing --l 1 --k 1").0, 2);
    assert_eq!(run("oracle basic --l 1 --k 2 --trunc 1").0, 2);
    assert_eq!(run("").0, 2);
    assert_eq!(run("principal --l 1 --k 1 --trunc 100").0, 3);
}

#[test]
fn oracles_run_standalone() {
    for name in ["principal", "parafermionic", "standard", "vacuum", "basic", "freudenthal"] {
        let (code, out, err) = run(&format!("oracle {name} --l 1 --k 1 --trunc 1"));
        assert_eq!(code, 0, "{name}: {err}");
        assert!(out.lines().next().unwrap().starts_with("1·q^{0}"), "{name}");
    }
}

#[test]
fn text_rendering() {
    let (_, out, _) = run("standard --l 1 --k 1 --trunc 1/2");
    assert_eq!(out, "1·q^{0}\n1·q^{1/4}·y_1^{-1}\n1·q^{1/4}·y_1^{1}\n1·q^{1/2}\n");
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("fermionic-cli-{}.json", std::process::id()));
    let args = format!("parafermionic --l 1 --k 2 --trunc 1 --format json --output {}", path.display());
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.contains("\"q\":\"1/8\""));
}
