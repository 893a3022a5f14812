use optseq::cli::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["optseq"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn gen_v_example() {
    let (code, out, _) = invoke(&["gen", "v", "--a", "01000", "--b", "10000"]);
    assert_eq!(code, 0);
    assert_eq!(out, "01101010001100000010\n");
}

#[test]
fn gen_families_parse_back() {
    let cases: &[&[&str]] = &[
        &["gen", "legendre", "--p", "7"],
        &["gen", "legendre", "--p", "5", "--variant", "second"],
        &["gen", "mseq", "--degree", "4", "--poly", "0x13"],
        &["gen", "gmw", "--n", "2", "--modified"],
        &["gen", "twinprime", "--p", "3"],
        &["gen", "w", "--a", "legendre(p=7)", "--b", "legendre(p=7,variant=second)", "--eta", "2"],
        &["gen", "interleave4", "--cols", "01000,10000,11101,00100", "--mask", "0000"],
    ];
    for args in cases {
        let (code, out, err) = invoke(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        let parsed = optseq::seq::parse_sequence(&out).unwrap();
        assert_eq!(format!("{parsed}\n"), out);
    }
    let (_, out, _) = invoke(&["gen", "interleave4", "--cols", "01000,10000,11101,00100"]);
    assert_eq!(out.trim(), "01101010001100000010");
}

#[test]
fn corr_csv() {
    let (code, out, _) = invoke(&["corr", "auto", "0111", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "tau,R\n0,4\n1,0\n2,0\n3,0\n");
    let (_, fast, _) = invoke(&["corr", "auto", "0111", "--format", "csv", "--fast"]);
    assert_eq!(fast, out);
}

#[test]
fn corr_cross_json() {
    let (code, out, _) = invoke(&["corr", "cross", "10110", "00110", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["values"], serde_json::json!([3, -1, -1, -1, -1]));
}

#[test]
fn classify_and_ads() {
    let (code, out, _) = invoke(&["classify", "legendre(p=7)"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["label"], "perfect/ideal-two-level");
    let (_, out, _) = invoke(&["ads", "01101010001100000010"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["params"], serde_json::json!([20, 7, 2, 15]));
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = invoke(&["verify", "--target", "thm1", "--params", "a=01000,b=10000"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["schema"], 1);

    let (code, out, _) = invoke(&["verify", "--target", "lemma5", "--params", "p=5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["resolved"]["R_l.legendre_labeling"], "swapped");

    let (code, _, _) = invoke(&["verify", "--target", "thm5", "--params", "p=13,eta1=1,eta2=2,order=reverse"]);
    assert_eq!(code, 0);

    // Ideal inputs of the wrong residue class fail the closed form.
    let (code, _, _) = invoke(&["verify", "--target", "thm2", "--params", "a=0100000,b=1000000"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&["gen", "v", "--a", "01x00", "--b", "10000"]).0, 1);
    assert_eq!(invoke(&["corr", "auto"]).0, 1);
    assert_eq!(invoke(&["nosuch"]).0, 1);
    assert_eq!(invoke(&["verify", "--target", "thm9"]).0, 1);
    assert_eq!(invoke(&["search", "--period", "40", "--target", "perfect"]).0, 1);
    let (code, _, err) = invoke(&["gen", "legendre", "--p", "9"]);
    assert_eq!(code, 1);
    assert!(err.contains("not prime"));
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn search_stream_and_summary() {
    let (code, out, _) = invoke(&["search", "--period", "4", "--target", "perfect", "--canonical", "--jobs", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(&lines[..2], ["0001", "0111"]);
    let summary: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
    assert_eq!(summary["classes"], 2);
    assert_eq!(summary["hits"], 8);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--target", "wlists", "--params", "family=twinprime,p=3,order=reverse,eta=1"];
    assert_eq!(invoke(&args), invoke(&args));
}
