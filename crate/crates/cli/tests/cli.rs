use std::path::Path;
use std::process::{Command, Output};

use eclab::{closed_form_ec, is_ec_partition, EdgePartition, FamilySpec, Graph};

fn eclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eclab"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_p6(dir: &Path) -> String {
    let path = dir.join("p6.el");
    std::fs::write(&path, "# P6\n6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn ec_json_certificate() {
    let o = eclab(&["ec", "--family", "path:6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with(r#"{"ec":4,"blocks":"#), "{text}");
    let keys: Vec<usize> = ["\"ec\"", "\"blocks\"", "\"justification\"", "\"mode\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));

    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["mode"], "exact");
    let blocks: Vec<Vec<usize>> = serde_json::from_value(value["blocks"].clone()).unwrap();
    let g = Graph::new(6, (1..6).map(|i| (i - 1, i))).unwrap();
    let p = EdgePartition::from_indices(&g, &blocks).unwrap();
    assert_eq!(is_ec_partition(&g, &p).unwrap().order(), 4);
    for j in value["justification"].as_array().unwrap() {
        let kind = j["type"].as_str().unwrap();
        assert!(kind == "partner" && j["with"].is_u64() || kind == "full_edge");
    }
}

#[test]
fn full_edge_justification_in_json() {
    let o = eclab(&["ec", "--family", "star:3"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(value["ec"], 3);
    assert!(value["justification"]
        .as_array()
        .unwrap()
        .iter()
        .all(|j| j["type"] == "full_edge"));
}

#[test]
fn verify_rejects_p6_singletons() {
    let dir = tempfile::tempdir().unwrap();
    let p6 = write_p6(dir.path());
    let o = eclab(&[
        "verify",
        "--graph",
        &p6,
        "--partition",
        "[[0],[1],[2],[3],[4]]",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("block 2 has no partner"));

    let o = eclab(&[
        "verify",
        "--graph",
        &p6,
        "--partition",
        "[[0,4],[1],[2],[3]]",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(value["valid"], true);
}

#[test]
fn ecg_dot_for_k24_pi6() {
    let o = eclab(&[
        "ecg",
        "--family",
        "kbip:2,4",
        "--partition-id",
        "pi6",
        "--format",
        "dot",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.first(), Some(&"graph ecg {"));
    assert_eq!(lines.last(), Some(&"}"));
    let body = &lines[1..lines.len() - 1];
    let nodes = body.iter().filter(|l| !l.contains("--")).count();
    let edges = body.iter().filter(|l| l.contains("--")).count();
    assert_eq!((nodes, edges), (4, 6));
    assert!(body
        .iter()
        .all(|l| l.trim_start().starts_with('B') && l.ends_with(';')));
}

#[test]
fn ecg_edge_list_defaults_to_singletons() {
    let o = eclab(&["ecg", "--family", "star:4", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let ecg = Graph::parse_edge_list(&stdout(&o)).unwrap();
    assert_eq!((ecg.n(), ecg.m()), (4, 0));
}

#[test]
fn generate_round_trips_through_ec() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["path:7", "cycle:7", "star:5", "dstar:3,2", "complete:4"] {
        let file = dir.path().join("g.el");
        let o = eclab(&[
            "generate",
            "--family",
            spec,
            "--output",
            file.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        let o = eclab(&["ec", "--graph", file.to_str().unwrap()]);
        let value: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        let expected = closed_form_ec(&spec.parse::<FamilySpec>().unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(value["ec"], expected, "{spec}");
    }
}

#[test]
fn corpus_export_names_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("corpus");
    let o = eclab(&[
        "corpus",
        "--max-vertices",
        "5",
        "--classes",
        "trees,unicyclic",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mut names: Vec<String> = std::fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.iter().filter(|n| n.starts_with("trees_")).count(), 8);
    assert_eq!(
        names.iter().filter(|n| n.starts_with("unicyclic_")).count(),
        8
    );
    assert!(names.contains(&"unicyclic_3_0.el".to_string()));
    let c3 = std::fs::read_to_string(out.join("unicyclic_3_0.el")).unwrap();
    assert_eq!(
        Graph::parse_edge_list(&c3).unwrap().edges(),
        &[(0, 1), (0, 2), (1, 2)]
    );
}

#[test]
fn bounds_table_lists_inapplicable_entries() {
    let o = eclab(&["bounds", "--family", "star:5"]);
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("domination")).unwrap();
    assert!(line.contains(" no "), "{line}");
}

#[test]
fn gamma_reports_witness() {
    let o = eclab(&["gamma", "--family", "cycle:7"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(value["gamma_prime"], 3);
    assert_eq!(value["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let p6 = write_p6(dir.path());
    assert_eq!(
        eclab(&["ec", "--family", "path:6", "--graph", &p6])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(eclab(&["ec"]).status.code(), Some(2));
    assert_eq!(eclab(&["ec", "--family", "wheel:5"]).status.code(), Some(2));
    assert_eq!(
        eclab(&["verify", "--graph", &p6, "--partition", "[[0],[1]]"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        eclab(&["ecg", "--graph", &p6, "--partition-id", "pi1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn budget_errors_exit_three() {
    let o = eclab(&["ec", "--family", "path:20"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_eclab"))
        .args(["ec", "--family", "path:7"])
        .env("ECLAB_MAX_EDGES", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn lower_bound_mode_is_labelled() {
    let o = eclab(&[
        "ec",
        "--family",
        "path:20",
        "--lower-bound",
        "--budget-secs",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(value["mode"], "lower_bound");
    assert!(value["ec"].as_u64().unwrap() >= 1);
}

#[test]
fn jobs_do_not_change_the_value() {
    let one = eclab(&["ec", "--family", "kbip:2,4", "--jobs", "1"]);
    let four = eclab(&["ec", "--family", "kbip:2,4", "--jobs", "4"]);
    let v1: serde_json::Value = serde_json::from_str(&stdout(&one)).unwrap();
    let v4: serde_json::Value = serde_json::from_str(&stdout(&four)).unwrap();
    assert_eq!(v1["ec"], v4["ec"]);
}

#[test]
fn theorems_single_check() {
    let o = eclab(&["theorems", "--only", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("[PASS]  2 cycles"));
    assert_eq!(eclab(&["theorems", "--only", "99"]).status.code(), Some(2));
}
