use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn run(verb: &str, input: &Value, extra: &[&str]) -> (Value, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pointext"))
        .arg(verb)
        .args(extra)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.to_string().as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{verb}: bad output {e}"));
    (v, out.status.code().unwrap())
}

fn run_raw(verb: &str, text: &str) -> (Value, i32) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pointext"))
        .arg(verb)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (serde_json::from_slice(&out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn ty_classify_ising_data() {
    let (v, code) = run("ty-classify", &json!({"A":[2],"chi":[[0,0,"1/2"]]}), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    assert_eq!(v["count"], 2);
    assert_eq!(v["report"]["torsor_rank_M"], json!([]));
}

#[test]
fn brpic_of_z2_has_order_two() {
    let (v, code) = run("brpic", &json!({"A":[2]}), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], 2);
    let elems = v["elements"].as_array().unwrap();
    let e = elems.iter().position(|x| x["images"] == json!([[1, 0], [0, 1]])).unwrap();
    let t = &v["table"];
    for x in 0..2 {
        assert_eq!(t[e][x], x);
        assert_eq!(t[x][x], e);
    }
}

#[test]
fn non_square_order_has_no_lagrangians() {
    let (v, code) = run("lagrangians", &json!({"invariants":[2],"q":["1/4"]}), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["lagrangians"], json!([]));
}

#[test]
fn tau_and_sigma_round_trip() {
    let classes = [
        json!({"base":[2,2],"H":[[1,0],[0,1]],"psi":[[0,1,"1/2"]]}),
        json!({"base":[2,2],"H":[[1,1]]}),
        json!({"base":[4],"H":[[2]]}),
        json!({"base":[3,3],"H":[[1,0],[0,1]],"psi":[[0,1,"2/3"]]}),
        json!({"base":[6],"H":[]}),
    ];
    for c in classes {
        let (l, code) = run("tau", &json!({ "class": c }), &[]);
        assert_eq!(code, 0, "{l}");
        let (back, _) = run("tau", &l, &[]);
        let (again, _) = run("tau", &back, &[]);
        assert_eq!(again, l);
        let (back2, _) = run("tau", &again, &[]);
        assert_eq!(back2, back);
    }
}

#[test]
fn graph_and_isometry_round_trip() {
    let e = json!({"hyperbolic":[2,2]});
    let (o, code) = run("orth-group", &e, &[]);
    assert_eq!(code, 0);
    assert_eq!(o["order"], 72);
    for g in o["isometries"].as_array().unwrap().iter().step_by(7) {
        let (corr, code) = run("lag-compose", &json!({"graph": {"source": e, "images": g["images"]}}), &[]);
        assert_eq!(code, 0);
        let (iso, code) = run("lag-compose", &json!({ "isometry": corr }), &[]);
        assert_eq!(code, 0);
        assert_eq!(iso["images"], g["images"]);
        let (corr2, _) = run("lag-compose", &json!({"graph": iso}), &[]);
        assert_eq!(corr2, corr);
    }
}

#[test]
fn non_invertible_correspondence_is_infeasible() {
    let e = json!({"hyperbolic":[2]});
    // L ⊕ L for the Lagrangian L = Z/2 ⊕ 0 on both sides
    let corr = json!({"source": e, "target": e, "terms":[{"mult":1,"gens":[[1,0,0,0],[0,0,1,0]]}]});
    let (v, code) = run("lag-compose", &json!({ "isometry": corr }), &[]);
    assert_eq!(code, 2);
    assert_eq!(v["invertible"], false);
}

#[test]
fn input_errors_carry_codes() {
    let (v, code) = run_raw("lagrangians", "{bad");
    assert_eq!((code, v["error"]["code"].clone()), (1, json!("malformed_json")));
    let (v, code) = run("group-info", &json!({"group":[2],"extra":true}), &[]);
    assert_eq!((code, v["error"]["code"].clone()), (1, json!("invalid_input")));
    let (v, code) = run("orth-group", &json!({"hyperbolic":[2,2,2]}), &["--cap", "10"]);
    assert_eq!((code, v["error"]["code"].clone()), (1, json!("cap_exceeded")));
    let (v, code) = run("group-info", &json!({"group":[0]}), &[]);
    assert_eq!((code, v["error"]["code"].clone()), (1, json!("invalid_data")));
}

#[test]
fn obstructed_problems_exit_two() {
    let (v, code) = run("obstruction-spaces", &json!({"G":{"cyclic":2},"A":[2]}), &[]);
    assert_eq!(code, 2);
    assert_eq!(v["report"]["unobstructed"], false);
    let (v, code) = run("ty-classify", &json!({"A":[2],"chi":[[0,0,"0"]]}), &[]);
    assert_eq!(code, 2);
    assert_eq!(v["valid"], false);
    let (_, code) = run("obstruction-spaces", &json!({"G":{"cyclic":2},"A":[3]}), &[]);
    assert_eq!(code, 0);
}

#[test]
fn pw_over_budget_reports_order_only() {
    let input = json!({"G":{"abelian":[3,3]},"A":[3],"q":["1/3"],"L":{"coords":[1,0,0]}});
    let (v, code) = run("pw", &input, &[]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["class"]["coords"], Value::Null);
    assert!(v["class"]["order"].as_i64().unwrap() >= 1);
    assert_eq!(v["divides_D4"], true);
}

#[test]
fn cohomology_uses_modulus_flag() {
    let (v, code) = run("cohomology", &json!({"G":{"cyclic":4},"degree":2}), &["--modulus", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariants"], json!([4]));
    let (v, code) = run("cohomology", &json!({"G":{"cyclic":4},"degree":2}), &[]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["code"], "invalid_data");
    let (v, _) = run("cohomology", &json!({"G":{"cyclic":4},"degree":3,"kx":true}), &[]);
    assert_eq!(v["invariants"], json!([4]));
}

#[test]
fn omega_extension_and_restriction() {
    let (v, code) = run("omega-extends", &json!({"G":{"cyclic":4},"N":[0,2],"omega":{"coords":[1]}}), &[]);
    assert_eq!(code, 0);
    assert_eq!(v["class_count"], 2);
    let ext = v["extension"].clone();
    let (r, _) = run("restrict", &json!({"G":{"cyclic":4},"N":[0,2],"degree":3,"cocycle":{"values": ext}}), &[]);
    assert_eq!(r["class"]["coords"], json!([1]));
}

#[test]
fn lhs_d2_reports_non_invariant_classes() {
    let doc = |c: Value| {
        json!({"N":{"abelian":[2,2]}, "G":{"cyclic":2}, "phi":[[0,1,2,3],[0,2,1,3]], "omega":{"coords": c}})
    };
    // a basis class moved by the swap
    let (v, code) = run("lhs-d2", &doc(json!([1, 0, 0])), &[]);
    assert_eq!((code, v["invariant"].clone()), (2, json!(false)));
    // a combination fixed by the swap; d2 vanishes on it
    let (v, code) = run("lhs-d2", &doc(json!([1, 1, 0])), &[]);
    assert_eq!((code, v["vanishes"].clone()), (0, json!(true)));
    let zero = json!({"N":{"cyclic":3},"G":{"cyclic":2},"phi":[[0,1,2],[0,2,1]],"omega":{"coords":[0]}});
    let (v, code) = run("lhs-d2", &zero, &[]);
    assert_eq!((code, v["all_trivial"].clone()), (0, json!(true)));
}

#[test]
fn output_is_deterministic() {
    let input = json!({"A1":[2],"A2":[2],"A3":[2],"M":{"base":[2,2],"H":[[1,0]]},"M_prime":{"base":[2,2],"H":[[0,1]]}});
    let a = run("bimod-tensor", &input, &[]);
    let b = run("bimod-tensor", &input, &[]);
    assert_eq!(a, b);
    assert_eq!(a.1, 0);
}

#[test]
fn selftest_subset() {
    let (v, code) = run("selftest", &json!({"criteria":[1, 9]}), &["--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 2);
}

#[test]
fn selftest_reports_stabilization_failure() {
    // the inclusion of coefficients kills H^2(Z/2, Z/2)
    let (v, code) = run("selftest", &json!({"criteria":[11]}), &[]);
    assert_eq!(code, 2);
    assert_eq!(v["passed"], false);
    assert!(v["criteria"][0]["detail"].as_str().unwrap().contains("Z/2/H^2"));
}
