use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidlab"))
        .args(args)
        .env_remove("BRAIDLAB_VERTEX_CAP")
        .output()
        .expect("spawn braidlab")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn p(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn lantern_n4_passes_with_push_steps() {
    let o = run(&["verify", "lantern", "--n", "4"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let items = v["certificate"]["items"].as_array().unwrap();
    let steps = items.iter().filter(|i| i["name"].as_str().unwrap().starts_with("push-step")).count();
    assert_eq!(steps, 4);
    assert!(items.iter().all(|i| i["pass"] == true));
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn lantern_too_small_is_usage_error() {
    assert_eq!(code(&run(&["verify", "lantern", "--n", "1"])), 2);
}

#[test]
fn xi_top_transcript() {
    let o = run(&["verify", "xi-top", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("T_a z^-1 -> T_a z"));
}

#[test]
fn xi1_passes_and_corrupted_cap_falsifies() {
    assert_eq!(code(&run(&["verify", "xi1", "--n", "3"])), 0);
    assert_eq!(code(&run(&["verify", "xi1", "--n", "3", "--epsilon", "-1"])), 0);
    let o = run(&["verify", "xi1", "--n", "3", "--corrupt"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("\"pass\": false"));
}

#[test]
fn dual_oracle_small_run() {
    let o = run(&["verify", "dual-oracle", "--pairs", "200", "--max-len", "20"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn ball_is_deterministic() {
    let d = TempDir::new().unwrap();
    let (a, b) = (p(&d, "a.json"), p(&d, "b.json"));
    assert_eq!(code(&run(&["ball", "--punctures", "5", "--radius", "1", "--out", &a])), 0);
    assert_eq!(code(&run(&["ball", "--punctures", "5", "--radius", "1", "--out", &b])), 0);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn ball_radius_zero_is_single_vertex() {
    let d = TempDir::new().unwrap();
    let a = p(&d, "a.json");
    assert_eq!(code(&run(&["ball", "--punctures", "5", "--radius", "0", "--out", &a])), 0);
    let v = read_json(Path::new(&a));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
    assert!(v["edges"].as_array().unwrap().is_empty());
}

#[test]
fn ball_regression_counts() {
    let d = TempDir::new().unwrap();
    let a = p(&d, "a.json");
    let args = ["ball", "--punctures", "4", "--radius", "2", "--seed-curve", "1-2", "--seed-curve", "1-3", "--out", &a];
    assert_eq!(code(&run(&args)), 0);
    let v = read_json(Path::new(&a));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 21);
    assert_eq!(v["edges"].as_array().unwrap().len(), 30);
}

#[test]
fn ball_cap_is_resource_error_with_truncated_file() {
    let d = TempDir::new().unwrap();
    let a = p(&d, "a.json");
    let o = Command::new(env!("CARGO_BIN_EXE_braidlab"))
        .args(["ball", "--punctures", "5", "--radius", "3", "--out", &a])
        .env("BRAIDLAB_VERTEX_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let v = read_json(Path::new(&a));
    assert_eq!(v["meta"]["truncated"], true);
}

#[test]
fn check_map_induced_swap_and_partial() {
    let d = TempDir::new().unwrap();
    let (ball, map, swap, part) = (p(&d, "b.json"), p(&d, "m.json"), p(&d, "s.json"), p(&d, "x.json"));
    let args = ["ball", "--punctures", "4", "--radius", "2", "--seed-curve", "1-2", "--seed-curve", "1-3", "--out", &ball];
    assert_eq!(code(&run(&args)), 0);

    assert_eq!(code(&run(&["export", "induced-map", "--ball", &ball, "--braid", "s1 s3^-1", "--out", &map])), 0);
    assert_eq!(code(&run(&["check-map", "--ball", &ball, "--map", &map])), 0);

    assert_eq!(code(&run(&["export", "swap-control", "--ball", &ball, "--out", &swap])), 0);
    let o = run(&["check-map", "--ball", &ball, "--map", &swap, "--mode", "superinjective"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness"));

    let mut v = read_json(Path::new(&map));
    v["images"].as_array_mut().unwrap().pop();
    std::fs::write(&part, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(code(&run(&["check-map", "--ball", &ball, "--map", &part])), 2);
}

fn tsv_rows(out: &str) -> Vec<Vec<String>> {
    out.lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("family"))
        .map(|l| l.split('\t').map(str::to_owned).collect())
        .collect()
}

#[test]
fn catalogue_type_a_exponents() {
    let o = run(&["catalogue", "--family", "a", "--n", "3", "--t=-2..2"]);
    assert_eq!(code(&o), 0);
    let rows = tsv_rows(&stdout(&o));
    assert_eq!(rows.len(), 5);
    for row in rows {
        let t: i64 = row[2].trim_start_matches("t=").parse().unwrap();
        assert_eq!(row[3].parse::<i64>().unwrap(), 1 + 12 * t);
        let class = if t == 0 { "automorphism" } else { "injective-nonsurjective" };
        assert_eq!(row[4], class);
        assert_eq!(row[5], "verified");
    }
}

#[test]
fn catalogue_type_b_lattice_line() {
    let o = run(&["catalogue", "--family", "b", "--n", "3", "--u=0..2", "--v=-1..0"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with('#') && l.contains("(2,-1)") && l.contains("unsolvable")));
    let autos = tsv_rows(&out).iter().filter(|r| r[4] == "automorphism").count();
    assert_eq!(autos, 2);
}

#[test]
fn catalogue_pure_vectors() {
    let o = run(&["catalogue", "--family", "pure", "--n", "3", "--tvec=-1,0,0,0,0,0", "--tvec=1,1,0,0,0,0"]);
    assert_eq!(code(&o), 0);
    let rows = tsv_rows(&stdout(&o));
    assert_eq!(rows[0][3], "0");
    assert_eq!(rows[0][4], "non-injective");
    assert_eq!(rows[1][3], "3");
}

#[test]
fn injection_graph_query_and_dot() {
    let o = run(&["export", "injection-graph", "--m", "6", "--query", "G_4,G_1"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("G_4 -> G_1: yes"));
    let o = run(&["export", "injection-graph", "--m", "6", "--query", "G_2,G_4", "--no-enumerate"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("G_2 -> G_4: no"));
    let o = run(&["export", "injection-graph", "--m", "6", "--format", "dot"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("digraph injections {"));
    assert_eq!(code(&run(&["export", "injection-graph", "--m", "4"])), 2);
}
