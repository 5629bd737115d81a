use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rpslice"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn rpslice")
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn rpslice");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn schema(name: &str) -> Value {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema").join(name);
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "number" => v.is_number(),
        "integer" => v.is_i64() || v.is_u64(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        _ => panic!("unsupported schema type {t}"),
    }
}

/// Checks the keywords the shipped schemas use: type, enum, required,
/// properties, additionalProperties and items.
fn validate(s: &Value, v: &Value, path: &str) -> Result<(), String> {
    if let Some(t) = s.get("type") {
        let ok = match t {
            Value::String(t) => type_matches(t, v),
            Value::Array(ts) => ts.iter().any(|t| type_matches(t.as_str().unwrap(), v)),
            _ => panic!("bad type keyword"),
        };
        if !ok {
            return Err(format!("{path}: {v} is not of type {t}"));
        }
    }
    if let Some(Value::Array(options)) = s.get("enum") {
        if !options.contains(v) {
            return Err(format!("{path}: {v} not in enum"));
        }
    }
    if let Value::Object(obj) = v {
        for r in s.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !obj.contains_key(r.as_str().unwrap()) {
                return Err(format!("{path}: missing {r}"));
            }
        }
        let props = s.get("properties").and_then(Value::as_object);
        for (k, val) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(sub) => validate(sub, val, &format!("{path}.{k}"))?,
                None if s.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("{path}: unexpected property {k}"))
                }
                None => {}
            }
        }
    }
    if let (Value::Array(items), Some(sub)) = (v, s.get("items")) {
        for (i, item) in items.iter().enumerate() {
            validate(sub, item, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

#[test]
fn classify_lox_pos_with_presentation() {
    let o = run(&["classify", "--beta=-4.5", "--gamma=2"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json_of(&o);
    assert_eq!(j["verdict"], "Discrete");
    assert_eq!(j["case"], "LoxPosEven");
    assert_eq!(j["presentation"], "PH[inf,2;3]");
    validate(&schema("classify.schema.json"), &j, "$").unwrap();
}

#[test]
fn classify_strip_odd_point() {
    let o = run(&["classify", "--beta=0", "--gamma=1"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json_of(&o);
    assert_eq!(j["case"], "EllStrip3");
    assert!(j.get("presentation").is_none());
}

#[test]
fn exit_codes_follow_verdicts() {
    assert_eq!(run(&["classify", "--beta=0", "--gamma=15.9"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "--beta=1", "--gamma=0"]).status.code(), Some(3));
    assert_eq!(run(&["classify", "--beta", "-4.5", "--gamma", "2"]).status.code(), Some(0));
    let tight = run(&["classify", "--n-max=2", "--p-max=2", "--beta=-4.5", "--gamma=1.9"]);
    assert!(matches!(tight.status.code(), Some(1) | Some(2)));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["classify", "--beta=x", "--gamma=1"][..],
        &["classify", "--beta=1"],
        &["classify", "--beta=1", "--gamma=1", "--tol=0"],
        &["classify", "--beta=1", "--gamma=1", "--n-max=1"],
        &["classify", "--beta=1", "--gamma=1", "--format=svg"],
        &["classify", "--beta=ell:6/2", "--gamma=1"],
        &["enumerate", "--gmin=1", "--gmax=0"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(64), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn symbolic_tokens_are_exact() {
    let o = run(&["classify", "--beta=ell:4", "--gamma=-u=pi/5"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json_of(&o);
    assert_eq!(j["case"], "EllStrip1");
    assert_eq!(j["within_tolerance"], false);
    assert_eq!(j["witnesses"]["u"], "pi/5");
    assert_eq!(j["witnesses"]["n"], 4);
}

#[test]
fn every_report_matches_schema() {
    let s = schema("classify.schema.json");
    let input = "0,1\n0,16\n0,15.9\n1,0\n5,-2\n5,9\n-4.5,2\n-4.7,2\n-6,-1\n-5,-3\n-2,3\n-9,8\n";
    let o = run_stdin(&["classify", "--stdin"], input.as_bytes());
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 12);
    for l in lines {
        validate(&s, &serde_json::from_str(l).unwrap(), "$").unwrap_or_else(|e| panic!("{e} in {l}"));
    }
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn enumerated_rows_all_classify_discrete() {
    let e = run(&["enumerate", "--gmin=-20", "--gmax=20", "--bmin=-20", "--bmax=20", "--samples=24", "--orders=6"]);
    assert_eq!(e.status.code(), Some(0));
    let csv = String::from_utf8(e.stdout).unwrap();
    assert!(csv.lines().count() > 100);
    let o = run_stdin(&["classify", "--stdin", "--format=text"], csv.as_bytes());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), csv.lines().count() - 1);
    assert!(text.lines().all(|l| l.contains(" Discrete ")));
}

#[test]
fn empty_window_gives_header_only() {
    let o = run(&["enumerate", "--gmin=100", "--gmax=101", "--bmin=100", "--bmax=101"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "case,n,q,k,p,sign,u,v,gamma,beta\n");
}

#[test]
fn svg_is_deterministic_and_written_to_file() {
    let dir = std::env::temp_dir().join(format!("rpslice-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig.svg");
    let args = ["enumerate", "--format=svg", "--samples=64"];
    let o = run(&[&args[..], &["-o", path.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let file = std::fs::read(&path).unwrap();
    assert_eq!(file, run(&args).stdout);
    let svg = String::from_utf8(file).unwrap();
    for id in ["A", "B", "C1", "C2", "D1", "D2"] {
        assert!(svg.contains(&format!("id=\"region-{id}\"")), "{id}");
    }
    assert_eq!(svg.matches("id=\"region-").count(), 6);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_examples() {
    let s = schema("verify.schema.json");
    let o = run(&["verify", "--beta=-4.5", "--gamma=2"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json_of(&o);
    validate(&s, &j, "$").unwrap();
    assert_eq!(j["h1_class"], "elliptic(4)");
    assert_eq!(j["h2_class"], "elliptic(3)");
    assert!(j["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let j = json_of(&run(&["verify", "--beta=5", "--gamma=9"]));
    validate(&s, &j, "$").unwrap();
    let k = j["checks"].as_array().unwrap().iter().find(|c| c["name"] == "k_formula").unwrap();
    assert_eq!(k["pass"], true);

    let o = run(&["verify", "--beta=-4.7", "--gamma=2"]);
    assert_eq!(o.status.code(), Some(1));
    let j = json_of(&o);
    validate(&s, &j, "$").unwrap();
    assert_eq!(j["verdict"], "NotDiscrete");
    assert_eq!(j["consistent"], true);
    let c = j["checks"].as_array().unwrap().iter().find(|c| c["name"] == "criterion").unwrap();
    assert_eq!(c["pass"], false);
    assert_eq!(json_of(&run(&["classify", "--beta=-4.7", "--gamma=2"]))["verdict"], "NotDiscrete");
}

#[test]
fn verify_reports_constructor_failures() {
    let o = run(&["verify", "--beta=-5", "--gamma=0"]);
    let j = json_of(&o);
    validate(&schema("verify.schema.json"), &j, "$").unwrap();
    assert_eq!(j["checks"][0]["name"], "realize");
    assert_eq!(j["checks"][0]["pass"], false);
}

#[test]
fn classify_and_verify_agree_on_a_grid() {
    for b in [-4.2, -5.0, -6.0, -8.5] {
        for g in [0.7, 1.0, 2.0, 3.0, 4.0, 7.5] {
            let (bs, gs) = (format!("--beta={b}"), format!("--gamma={g}"));
            let c = json_of(&run(&["classify", &bs, &gs]));
            let v = json_of(&run(&["verify", &bs, &gs]));
            assert_eq!(v["consistent"], true, "{b},{g}");
            if c["verdict"] != "Indeterminate" && v["verdict"] != "Indeterminate" {
                assert_eq!(c["verdict"], v["verdict"], "{b},{g}");
            }
        }
    }
}

#[test]
fn present_forms() {
    let o = run(&["present", "--u=pi/4", "--v=pi/3"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().next(), Some("PH[inf,2;3]"));
    let o = run(&["present", "--beta=-4.5", "--gamma=2", "--format=json"]);
    assert_eq!(json_of(&o)["symbol"], "PH[inf,2;3]");
    let o = run(&["present", "--symbol=P[inf,3;5]", "--format=json"]);
    assert_eq!(json_of(&o)["kind"], "P");
    assert_eq!(run(&["present", "--beta=5", "--gamma=9"]).status.code(), Some(1));
    assert_eq!(run(&["present", "--u=pi/2", "--v=pi/3"]).status.code(), Some(64));
}

#[test]
fn region_query() {
    let j = json_of(&run(&["region", "--beta=-10", "--gamma=10"]));
    assert_eq!(j["free_region"], "B");
    let o = run(&["region", "--beta=-4.5", "--gamma=2", "--format=text"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "none");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn config_file_is_read_and_flags_win() {
    let dir = std::env::temp_dir().join(format!("rpslice-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rpslice.conf");
    std::fs::write(&path, "# test\nformat = text\ntol = 1e-9\n").unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["classify", "--config", p, "--beta=0", "--gamma=1"]);
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("beta=0 gamma=1 Discrete"));
    let o = run(&["classify", "--config", p, "--format=json", "--beta=0", "--gamma=1"]);
    assert_eq!(json_of(&o)["case"], "EllStrip3");
    std::fs::write(&path, "bogus = 1\n").unwrap();
    assert_eq!(run(&["classify", "--config", p, "--beta=0", "--gamma=1"]).status.code(), Some(64));
    std::fs::remove_dir_all(dir).unwrap();
}
