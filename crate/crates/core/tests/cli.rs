use cluster_newton::cli::{run, Outcome};
use serde_json::Value;

fn cn(args: &[&str]) -> Outcome {
    run(std::iter::once("cluster-newton").chain(args.iter().copied()))
}

fn json_of(o: &Outcome) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

const A2: &str = r#"{"B": [[0, 1], [-1, 0]]}"#;

#[test]
fn explore_a2() {
    let o = cn(&["explore", "--input", A2, "--format", "text"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout_str().starts_with("5 seeds, Finite"));
    let j = json_of(&cn(&["explore", "--input", A2]));
    assert_eq!(j["seeds"], 5);
    assert_eq!(j["verdict"], "Finite");
}

#[test]
fn explore_cap_exits_3() {
    let o = cn(&["explore", "--input", r#"{"name": "kronecker"}"#, "--max-seeds", "20"]);
    assert_eq!(o.code, 3);
    assert_eq!(json_of(&o)["verdict"], "CapExceeded");
}

#[test]
fn finv_worked_example() {
    let by_path = r#"{"B": [[0, 1], [-1, 0]], "u": {"path": [1], "h": [1, 0]}, "v": {"path": [1, 2, 1], "h": [1, 0]}}"#;
    let j = json_of(&cn(&["finv", "--input", by_path]));
    assert_eq!(j["value"], 1);
    assert_eq!(j["left_part"], 0);
    assert_eq!(j["right_part"], 1);
    let by_g = r#"{"B": [[0, 1], [-1, 0]], "u": {"g": [-1, 1]}, "v": {"g": [-1, 0]}}"#;
    assert_eq!(json_of(&cn(&["finv", "--input", by_g]))["value"], 0);
}

#[test]
fn trop_example() {
    let input = r#"{"F": [{"y": [0, 0], "c": 1}, {"y": [1, 0], "c": 1}, {"y": [1, 1], "c": 1}], "r": [-2, 1]}"#;
    let o = cn(&["trop", "--input", input]);
    assert_eq!(o.code, 0);
    assert_eq!(json_of(&o)["value"], 0);
}

#[test]
fn seed_round_trip_is_byte_identical() {
    let first = cn(&["mutate", "--input", r#"{"B": [[0, 1], [-2, 0]], "directions": [1, 2]}"#]);
    assert_eq!(first.code, 0);
    let text = first.stdout_str();
    let again = cn(&["mutate", "--input", &text]);
    assert_eq!(again.code, 0);
    assert_eq!(again.stdout_str(), text);
    let j = json_of(&first);
    assert_eq!(j["path"], serde_json::json!([1, 2]));
}

#[test]
fn tampered_seed_is_rejected() {
    let text = cn(&["mutate", "--input", r#"{"B": [[0, 1], [-1, 0]], "directions": [1]}"#]).stdout_str();
    let mut j: Value = serde_json::from_str(&text).unwrap();
    j["C"][0][0] = 5.into();
    let o = cn(&["mutate", "--input", &j.to_string()]);
    assert_eq!(o.code, 2);
}

#[test]
fn ragged_matrix_exits_2_with_path() {
    let o = cn(&["explore", "--input", r#"{"B": [[0, 1], [-1]]}"#]);
    assert_eq!(o.code, 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("$.B[1]"));
    let o = cn(&["explore", "--input", "{\"B\": [[0, 1],\n"]);
    assert_eq!(o.code, 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(cn(&["frobnicate"]).code, 2);
}

#[test]
fn var_reports_g_and_f() {
    let j = json_of(&cn(&["var", "--input", r#"{"B": [[0, 1], [-1, 0]], "path": [1], "index": 1}"#]));
    assert_eq!(j["g"], serde_json::json!([-1, 1]));
    assert_eq!(j["F"], serde_json::json!([{"y": [0, 0], "c": 1}, {"y": [1, 0], "c": 1}]));
}

#[test]
fn bongartz_and_reduce() {
    let j = json_of(&cn(&["bongartz", "--input", r#"{"name": "A2", "U": []}"#]));
    assert_eq!(j["result_path"], serde_json::json!([]));
    let j = json_of(&cn(&["bongartz", "--input", r#"{"name": "A2", "U": [{"g": [-1, 1]}]}"#]));
    assert_eq!(j["checked"], 5);
    let o = cn(&["reduce", "--input", r#"{"name": "A3", "u": {"path": [1, 2], "h": [1, 2, 0]}, "v": {"path": [1, 2], "h": [1, 2, 0]}}"#]);
    assert_eq!(o.code, 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json_of(&o)["verdict"], "Equal");
    let initial = cn(&["reduce", "--input", r#"{"name": "A2", "u": {"h": [1, 0]}, "v": {"h": [1, 0]}}"#]);
    assert_eq!(initial.code, 2);
}

#[test]
fn verify_theorem_a_text() {
    let o = cn(&["verify", "theoremA", "--input", r#"{"name": "A2"}"#, "--format", "text"]);
    assert_eq!(o.code, 0);
    let t = o.stdout_str();
    assert!(t.contains("15 monomials"), "{t}");
    assert!(t.contains("injective: true"));
}

#[test]
fn json_is_deterministic() {
    let args = ["verify", "theoremB", "--rank", "3", "--mult-cap", "2"];
    let a = cn(&args);
    let b = cn(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_of(&a)["injective"], true);
}

#[test]
fn tau_operations() {
    let j = json_of(&cn(&["tau", "pairs", "--rank", "2"]));
    assert_eq!(j["count"], 5);
    let j = json_of(&cn(&["tau", "g", "--rank", "2", "--input", r#"{"M": {"minus": [{"i": 2}]}}"#]));
    assert_eq!(j["g"], serde_json::json!([0, 1]));
    let j = json_of(&cn(&["tau", "hom", "--rank", "2", "--input", r#"{"M": {"a": 2, "b": 2}, "N": {"a": 1, "b": 2}}"#]));
    assert_eq!((j["hom"].clone(), j["oracle"].clone()), (1.into(), 1.into()));
    let j = json_of(&cn(&["tau", "mutate", "--rank", "2", "--input", r#"{"pair": {"minus": [{"i": 1}, {"i": 2}]}, "k": 1}"#]));
    assert_eq!(j["side"], "Right");
    assert_eq!(j["result"]["pair"]["plus"], serde_json::json!([{"a": 1, "b": 1, "m": 1}]));
    let j = json_of(&cn(&["tau", "bongartz", "--rank", "2", "--input", r#"{"U": {"a": 1, "b": 1}}"#]));
    assert_eq!(j["pair"]["minus"], serde_json::json!([{"i": 2, "m": 1}]));
    let j = json_of(&cn(&["tau", "finv", "--rank", "2", "--input", r#"{"M": {"a": 1, "b": 1}, "N": {"minus": [{"i": 2}]}}"#]));
    assert_eq!(j["F_invariant"], 0);
    assert_eq!(j["E_sym"], 0);
    let o = cn(&["tau", "hom", "--input", r#"{"M": {"a": 1, "b": 1}, "N": {"a": 1, "b": 1}}"#]);
    assert_eq!(o.code, 2);
    let o = cn(&["tau", "mutate", "--rank", "2", "--input", r#"{"pair": {"plus": [{"a": 1, "b": 1}]}, "k": 1}"#]);
    assert_eq!(o.code, 2);
    assert_eq!(cn(&["tau", "counts", "--rank", "3"]).code, 0);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("cn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("a2.json");
    std::fs::write(&input, A2).unwrap();
    let out = dir.join("out.json");
    let o = cn(&["explore", "--input", input.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    let j: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(j["seeds"], 5);
    std::fs::remove_dir_all(dir).unwrap();
}
