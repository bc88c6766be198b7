use std::process::{Command, Output};

use serde_json::Value;

fn matchpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchpoly"))
        .args(args)
        .env_remove("MATCHPOLY_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poly_n2_primal_text() {
    let o = matchpoly(&["poly", "--n", "2", "--basis", "primal", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "+ x_{1, 2} x_{2, 1}\n+ x_{1, 1} x_{2, 2}\n- x_{1, 1} x_{1, 2} x_{2, 1} x_{2, 2}\n");
}

#[test]
fn poly_n3_dual_matches_listing() {
    let o = matchpoly(&["poly", "--n", "3", "--basis", "dual", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let listing = matchpoly::MultilinearPoly::parse_text(3, include_str!("../data/bpm_star_3.tex")).unwrap();
    assert_eq!(stdout(&o), listing.to_text());
}

#[test]
fn poly_json_round_trips() {
    let o = matchpoly(&["poly", "--n", "3", "--basis", "primal", "--format", "json"]);
    let (basis, p) = matchpoly::MultilinearPoly::from_json(&stdout(&o)).unwrap();
    assert_eq!(basis, matchpoly::Basis::Primal);
    assert_eq!(p.len(), 49);
}

#[test]
fn resource_caps_exit_3() {
    assert_eq!(matchpoly(&["poly", "--n", "9"]).status.code(), Some(3));
    assert_eq!(matchpoly(&["poly", "--n", "5", "--basis", "fourier", "--allow-large"]).status.code(), Some(3));
    assert_eq!(matchpoly(&["lattice", "--n", "4", "--format", "dot"]).status.code(), Some(3));
    assert_eq!(matchpoly(&["lattice", "--n", "5", "--format", "json"]).status.code(), Some(3));
    assert_eq!(matchpoly(&["count", "--n", "5", "--what", "mc"]).status.code(), Some(3));
    assert_eq!(matchpoly(&["verify", "--n", "5", "--claim", "thm1"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(matchpoly(&["classify", "--n", "2", "--graph", "1-"]).status.code(), Some(2));
    assert_eq!(matchpoly(&["classify", "--n", "2", "--graph", "3-1"]).status.code(), Some(2));
    assert_eq!(matchpoly(&["poly", "--n", "2", "--basis", "chebyshev"]).status.code(), Some(2));
    assert_eq!(matchpoly(&["verify", "--n", "2", "--claim", "riemann"]).status.code(), Some(2));
    assert_eq!(matchpoly(&["frobnicate"]).status.code(), Some(2));
    let o = matchpoly(&["classify", "--n", "2", "--graph", "1-"]);
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn lattice_outputs() {
    let o = matchpoly(&["lattice", "--n", "2", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ranks: Vec<u64> = v["nodes"].as_array().unwrap().iter().map(|x| x["rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, [0, 1, 1, 2]);

    let o = matchpoly(&["lattice", "--n", "1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 2);

    let dot = stdout(&matchpoly(&["lattice", "--n", "3", "--format", "dot"]));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 50);
    assert_eq!(dot.matches(" -> ").count(), 135);
    assert_eq!(dot.matches("rank=same").count(), 6);
}

#[test]
fn classify_reports() {
    let o = matchpoly(&["classify", "--n", "2", "--graph", "1-1,2-2"]);
    let line = stdout(&o);
    assert!(line.contains("class=NotTotallyOrdered"));
    assert!(line.contains("matching_covered=yes"));
    assert!(line.contains("chi=0"));
    assert!(line.contains("dual_coeff=0"));

    let line = stdout(&matchpoly(&["classify", "--n", "3", "--graph", "0x1FF"]));
    assert!(line.contains("class=TotallyOrderedNonStrict"));
    assert!(line.contains("elementary=yes"));
    assert!(line.contains("chi=4"));
    assert!(line.contains("dual_coeff=1"));

    // hex and edge-list syntax name the same graph
    let a = stdout(&matchpoly(&["classify", "--n", "3", "--graph", "1-1,1-2,2-2"]));
    let b = stdout(&matchpoly(&["classify", "--n", "3", "--graph", "0x13"]));
    assert_eq!(a, b);
}

#[test]
fn verify_exit_codes() {
    let o = matchpoly(&["verify", "--n", "2", "--claim", "parity"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("7 graphs with PM (odd)"));
    assert!(stdout(&o).trim_end().ends_with(": pass"));

    let o = matchpoly(&["verify", "--n", "3", "--claim", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));

    assert_eq!(matchpoly(&["verify", "--n", "4", "--claim", "thm2_nonordered"]).status.code(), Some(0));
}

#[test]
fn count_values() {
    let c = |n: &str, what: &str| stdout(&matchpoly(&["count", "--n", n, "--what", what])).trim().to_string();
    assert_eq!(c("2", "mc"), "3");
    assert_eq!(c("2", "totally-ordered"), "14");
    assert_eq!(c("3", "hall-violators"), "15");
    assert_eq!(c("4", "mc"), "7443");
    assert_eq!(c("4", "pm-graphs"), "37823");
    assert_eq!(c("4", "monomials-dual"), "2721");
}

#[test]
fn bounds_json() {
    let v: Value = serde_json::from_str(&stdout(&matchpoly(&["bounds", "--n", "3"]))).unwrap();
    assert_eq!(v["xor_lb"], 9);
    let v: Value = serde_json::from_str(&stdout(&matchpoly(&["bounds", "--n", "2"]))).unwrap();
    assert_eq!(v["and_lb"].as_f64(), Some(1.0));
    let o = matchpoly(&["bounds", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["or_lb_factorial"].is_f64());
    for field in ["and_lb", "or_lb_mon", "primal_monomials", "dual_monomials"] {
        assert!(v[field].is_null(), "{field} should be unavailable at n = 5");
    }
}

#[test]
fn summary_n4_groups() {
    let text = stdout(&matchpoly(&["summary", "--n", "4"]));
    assert_eq!(text, "coeff\tmonomials\tclasses\n-2\t144\t4\n-1\t1188\t12\n1\t1353\t12\n3\t20\t4\n4\t16\t1\n");
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    for args in [
        &["poly", "--n", "4", "--basis", "dual", "--format", "json"][..],
        &["poly", "--n", "3", "--basis", "fourier", "--format", "text"][..],
        &["lattice", "--n", "3", "--format", "dot"][..],
    ] {
        let one = matchpoly(&[&["--threads", "1"][..], args].concat());
        let many = matchpoly(&[&["--threads", "4"][..], args].concat());
        assert_eq!(one.stdout, many.stdout);
    }
    let env = Command::new(env!("CARGO_BIN_EXE_matchpoly"))
        .args(["poly", "--n", "3"])
        .env("MATCHPOLY_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(env.stdout, matchpoly(&["poly", "--n", "3"]).stdout);
}
