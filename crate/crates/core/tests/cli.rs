use std::path::{Path, PathBuf};
use std::process::Command;

use simpath::model::{
    parse_instance, parse_solution, serialize_instance, validate_solution, ArcSet, ColoredNetwork,
    Variant,
};
use tempfile::TempDir;

fn simpath(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_simpath"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write_instance(dir: &TempDir, name: &str, net: &ColoredNetwork) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, serialize_instance(net)).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// s = 0, t = 3; colors 1 and 2 share the first arc.
fn t1() -> ColoredNetwork {
    let mut net = ColoredNetwork::new(true, 4, 0, 3, 2).unwrap();
    net.add_arc(0, 1, 1, [1, 2]).unwrap();
    net.add_arc(1, 3, 1, [1]).unwrap();
    net.add_arc(1, 2, 1, [2]).unwrap();
    net.add_arc(2, 3, 1, [2]).unwrap();
    net.add_arc(0, 3, 5, [1, 2]).unwrap();
    net
}

/// A directed cycle through s and t where both colors overlap without
/// nesting, so neither laminar nor dag-dp applies.
fn cyclic(extra: usize) -> ColoredNetwork {
    let mut net = ColoredNetwork::new(true, 4, 0, 2, 2).unwrap();
    net.add_arc(0, 1, 1, [1, 2]).unwrap();
    net.add_arc(1, 2, 1, [1]).unwrap();
    net.add_arc(1, 3, 1, [2]).unwrap();
    net.add_arc(3, 2, 1, [2]).unwrap();
    net.add_arc(2, 0, 1, [1]).unwrap();
    for i in 0..extra {
        net.add_arc(3, 1, 2 + i as i64, [2]).unwrap();
    }
    net
}

#[test]
fn solve_reports_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = write_instance(&dir, "t1.json", &t1());
    let (code, out, _) = simpath(&["solve", "--variant", "superset", "--input", p(&input)]);
    assert_eq!(code, 0);
    let report = parse_solution(&out).unwrap();
    assert_eq!(report.cost, Some(4));
    assert_eq!(report.solver, "dag-dp");

    let (code, out, _) = simpath(&[
        "solve",
        "--variant",
        "exact",
        "--algorithm",
        "oracle",
        "--input",
        p(&input),
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        parse_solution(&out).unwrap().arcs,
        ArcSet::from([0, 1, 2, 3])
    );

    let mut blocked = ColoredNetwork::new(true, 3, 0, 2, 1).unwrap();
    blocked.add_arc(0, 1, 1, [1]).unwrap();
    let input = write_instance(&dir, "blocked.json", &blocked);
    let (code, out, _) = simpath(&["solve", "--variant", "exact", "--input", p(&input)]);
    assert_eq!(code, 1);
    assert!(!parse_solution(&out).unwrap().feasible);

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"directed\": true}").unwrap();
    let (code, _, err) = simpath(&["solve", "--variant", "exact", "--input", p(&garbage)]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn auto_selection_order() {
    let dir = TempDir::new().unwrap();
    let solver = |net: &ColoredNetwork, variant: &str| -> (i32, String) {
        let input = write_instance(&dir, "auto.json", net);
        let (code, out, err) = simpath(&["solve", "--variant", variant, "--input", p(&input)]);
        let name = parse_solution(&out).map(|r| r.solver).unwrap_or(err);
        (code, name)
    };
    let mut single = ColoredNetwork::new(false, 2, 0, 1, 1).unwrap();
    single.add_arc(0, 1, 3, [1]).unwrap();
    assert_eq!(solver(&single, "exact"), (0, "laminar".to_string()));
    assert_eq!(solver(&t1(), "exact"), (0, "dag-dp".to_string()));
    assert_eq!(solver(&cyclic(0), "superset"), (0, "fpt".to_string()));
    assert_eq!(solver(&cyclic(0), "exact"), (0, "oracle".to_string()));
    let (code, message) = solver(&cyclic(26), "exact");
    assert_eq!(code, 3);
    assert!(message.contains("no applicable solver"), "{message}");
}

#[test]
fn oracle_cap_is_a_budget_error() {
    let dir = TempDir::new().unwrap();
    let input = write_instance(&dir, "big.json", &cyclic(26));
    let (code, _, err) = simpath(&["oracle", "--variant", "superset", "--input", p(&input)]);
    assert_eq!(code, 3);
    assert!(err.contains("31"), "{err}");

    let input = write_instance(&dir, "t1.json", &t1());
    let (code, _, _) = simpath(&[
        "oracle",
        "--variant",
        "superset",
        "--max-oracle-arcs",
        "4",
        "--input",
        p(&input),
    ]);
    assert_eq!(code, 3);
    let (code, out, _) = simpath(&["oracle", "--variant", "superset", "--input", p(&input)]);
    assert_eq!(code, 0);
    assert_eq!(parse_solution(&out).unwrap().cost, Some(4));
}

#[test]
fn check_agrees_with_validate_solution() {
    let dir = TempDir::new().unwrap();
    let net = t1();
    let input = write_instance(&dir, "t1.json", &net);
    let solution = dir.path().join("solution.json");
    for mask in 0u32..1 << net.num_arcs() {
        let arcs: ArcSet = (0..net.num_arcs()).filter(|a| mask >> a & 1 == 1).collect();
        std::fs::write(&solution, serde_json::to_string(&arcs.to_vec()).unwrap()).unwrap();
        for (variant, flag) in [(Variant::Exact, "exact"), (Variant::Superset, "superset")] {
            let (code, out, _) = simpath(&[
                "check",
                "--variant",
                flag,
                "--input",
                p(&input),
                "--solution",
                p(&solution),
            ]);
            let expected = validate_solution(&net, variant, &arcs);
            let got = parse_solution(&out).unwrap();
            assert!(got.same_outcome(&expected), "{flag} {arcs:?}");
            assert_eq!(code, if expected.feasible { 0 } else { 1 });
        }
    }
}

#[test]
fn generate_then_solve() {
    let dir = TempDir::new().unwrap();
    let tight = dir.path().join("tight.json");
    let (code, _, _) = simpath(&[
        "generate",
        "--reduction",
        "tight-approx",
        "--k",
        "3",
        "--output",
        p(&tight),
    ]);
    assert_eq!(code, 0);
    let net = parse_instance(&std::fs::read_to_string(&tight).unwrap()).unwrap();
    assert_eq!(net.num_arcs(), 4);
    let (_, out, _) = simpath(&[
        "solve",
        "--variant",
        "superset",
        "--algorithm",
        "approx",
        "--input",
        p(&tight),
    ]);
    assert_eq!(parse_solution(&out).unwrap().cost, Some(3));

    let cnf = dir.path().join("f.cnf");
    std::fs::write(&cnf, "p cnf 3 3\n1 2 0\n-1 3 0\n-2 -3 0\n").unwrap();
    let instance = dir.path().join("exact.json");
    let metadata = dir.path().join("exact.names.json");
    let (code, _, _) = simpath(&[
        "generate",
        "--reduction",
        "cnf-exact-dag",
        "--cnf",
        p(&cnf),
        "--metadata",
        p(&metadata),
        "--output",
        p(&instance),
    ]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&metadata)
        .unwrap()
        .contains("\"w1\""));
    let (code, out, _) = simpath(&["existence", "--input", p(&instance)]);
    assert_eq!(code, 0);
    assert_eq!(parse_solution(&out).unwrap().solver, "existence-fpt");

    let (code, out, _) = simpath(&[
        "generate",
        "--reduction",
        "setcover",
        "--seed",
        "4",
        "--undirect",
    ]);
    assert_eq!(code, 0);
    assert!(!parse_instance(&out).unwrap().directed());
}
