use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bkvpg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkvpg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const SINGLE: &str = r#"{"k": 1, "paths": [{"id": 0, "weight": 5, "vertices": [[0,0],[0,2],[2,2]]}]}"#;

const DISJOINT: &str = r#"{"k": 0, "paths": [
    {"id": 0, "weight": 1, "vertices": [[0,0],[2,0]]},
    {"id": 1, "weight": 2, "vertices": [[0,2],[2,2]]},
    {"id": 2, "weight": 3, "vertices": [[0,4],[2,4]]},
    {"id": 3, "weight": 4, "vertices": [[0,6],[2,6]]}
]}"#;

const CROSS: &str = r#"{"k": 1, "paths": [
    {"id": 0, "weight": 3, "vertices": [[0,1],[2,1]]},
    {"id": 5, "weight": 2, "vertices": [[1,0],[1,2],[3,2]]},
    {"id": 9, "weight": "1/2", "vertices": [[4,4]]}
]}"#;

#[test]
fn validate_reports_summary() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "a.json", SINGLE);
    let o = bkvpg(&["validate", s(&f)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n=1 k=1 c=2 B=5\n");
}

#[test]
fn validate_lists_violations_and_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad.json",
        r#"{"k": 0, "paths": [
            {"id": 1, "weight": 1, "vertices": [[0,0],[0,3]]},
            {"id": 3, "weight": 1, "vertices": [[0,0],[1,1]]},
            {"id": 4, "weight": 1, "vertices": [[5,0],[5,2],[7,2]]}
        ]}"#,
    );
    let o = bkvpg(&["validate", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("path 3: DiagonalSegment at vertex 0"), "{out}");
    assert!(out.contains("path 4: TooManyBends(1,0) at vertex 1"), "{out}");
    assert!(!out.contains("path 1"), "{out}");
}

#[test]
fn malformed_or_missing_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "m.json", "{\"k\": 1, \"paths\": [");
    for cmd in ["validate", "solve", "exact"] {
        assert_eq!(bkvpg(&[cmd, s(&f)]).status.code(), Some(2), "{cmd}");
    }
    let missing = dir.path().join("nope.json");
    assert_eq!(bkvpg(&["validate", s(&missing)]).status.code(), Some(2));
}

#[test]
fn solve_single_path() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "a.json", SINGLE);
    let o = bkvpg(&["solve", s(&f)]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["selected"], serde_json::json!([0]));
    assert_eq!(v["weight"], "5");
    assert_eq!(v["lp_objective"], "5");
    assert_eq!(v["bound"], 5);
    assert_eq!(v["certified"], true);
    assert_eq!(v["pivot_rule"], "min-id");
    assert_eq!(v["arith"], "exact");
}

#[test]
fn solve_disjoint_selects_all() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "d.json", DISJOINT);
    for arith in ["exact", "float"] {
        let o = bkvpg(&["--arith", arith, "solve", s(&f)]);
        assert!(o.status.success());
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["selected"], serde_json::json!([0, 1, 2, 3]));
        assert_eq!(v["weight"], "10");
        assert_eq!(v["lp_objective"].as_str().unwrap().parse::<f64>().unwrap(), 10.0);
        assert_eq!(v["arith"], arith);
    }
}

#[test]
fn solve_writes_lp_and_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c.json", CROSS);
    let (lp, edges) = (dir.path().join("m.lp"), dir.path().join("e.txt"));
    let o = bkvpg(&["solve", s(&f), "--pivot", "max-weight", "--lp-dump", s(&lp), "--edge-list", s(&edges)]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pivot_rule"], "max-weight");
    assert_eq!(v["selected"], serde_json::json!([0, 9]));
    assert_eq!(fs::read_to_string(&edges).unwrap(), "0 5\n");
    assert_eq!(
        fs::read_to_string(&lp).unwrap(),
        "\\ maximum-weight independent set, grid-point LP relaxation\n\
         Maximize\n obj: 3 x0 + 2 x5 + 0.5 x9\n\
         Subject To\n p_1_1: x0 + x5 <= 1\n\
         Bounds\n 0 <= x0 <= 1\n 0 <= x5 <= 1\n 0 <= x9 <= 1\n\
         End\n"
    );
}

#[test]
fn exact_mirrors_report_with_null_lp() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c.json", CROSS);
    let o = bkvpg(&["exact", s(&f)]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["selected"], serde_json::json!([0, 9]));
    assert_eq!(v["weight"], "7/2");
    assert!(v["lp_objective"].is_null());
    assert!(v["pivot_rule"].is_null());
    assert_eq!(v["certified"], true);

    let g = dir.path().join("g.json");
    assert!(bkvpg(&["gen", "--n", "12", "--out", s(&g)]).status.success());
    assert_eq!(bkvpg(&["exact", s(&g), "--cap", "10"]).status.code(), Some(1));
}

#[test]
fn seed_42_ratio_within_bound() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    let o = bkvpg(&["gen", "--seed", "42", "--n", "20", "--k", "1", "--c", "2", "--out", s(&g)]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&bkvpg(&["solve", s(&g)]))).unwrap();
    let ratio = v["lp_objective"].as_str().unwrap().parse::<f64>().unwrap()
        / v["weight"].as_str().unwrap().parse::<f64>().unwrap();
    assert_eq!(v["bound"], 5);
    assert!((1.0..=5.0).contains(&ratio), "{ratio}");
}

#[test]
fn gen_output_validates_and_is_seeded() {
    let a = stdout(&bkvpg(&["gen", "--seed", "3", "--n", "15", "--k", "2", "--c", "3", "--grid", "12x9"]));
    let b = stdout(&bkvpg(&["gen", "--seed", "3", "--n", "15", "--k", "2", "--c", "3", "--grid", "12x9"]));
    let c = stdout(&bkvpg(&["gen", "--seed", "4", "--n", "15", "--k", "2", "--c", "3", "--grid", "12x9"]));
    assert_eq!(a, b);
    assert_ne!(a, c);
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.json", &a);
    let o = bkvpg(&["validate", s(&f)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("n=15 k=2 "));
    assert!(!bkvpg(&["gen", "--weights", "9:1"]).status.success());
}

#[test]
fn bench_sweep_rows_and_header() {
    let o = bkvpg(&["bench", "--n", "10,20", "--seeds", "1..5", "--exact-cap", "20", "--no-timing", "--jobs", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["seed", "n", "k", "c", "bound", "lp_objective", "alg_weight", "exact_weight", "ratio_lp", "ratio_opt", "runtime_ms", "error"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 10);
    for r in &rows {
        let bound: f64 = r[4].parse().unwrap();
        let ratio_lp: f64 = r[8].parse().unwrap();
        let ratio_opt: f64 = r[9].parse().unwrap();
        assert!(ratio_lp <= bound && ratio_opt <= ratio_lp, "{r:?}");
        assert_eq!(&r[10], "");
    }

    let empty = stdout(&bkvpg(&["bench", "--seeds", ""]));
    assert_eq!(empty.lines().count(), 1);
}

#[test]
fn bench_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let o = bkvpg(&["bench", "--n", "12", "--seeds", "1..4", "--exact-cap", "18", "--out", s(&out)]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().skip(1).all(|l| !l.split(',').nth(7).unwrap().is_empty()));
}

#[test]
fn render_is_well_formed_svg_with_highlights() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c.json", CROSS);
    let report = dir.path().join("r.json");
    fs::write(&report, bkvpg(&["solve", s(&f)]).stdout).unwrap();
    let svg = dir.path().join("out.svg");
    let o = bkvpg(&["render", s(&f), "--out", s(&svg), "--highlight-report", s(&report)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&svg).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    let width = |id: &str| {
        doc.descendants()
            .find(|n| n.attribute("id") == Some(id))
            .and_then(|n| n.attribute("stroke-width"))
            .map(|w| w.parse::<f64>().unwrap())
            .unwrap()
    };
    assert!(width("path-0") > width("path-5"));
    assert!(width("path-9") > width("path-5"));

    let o = bkvpg(&["render", s(&f), "--out", s(&svg), "--highlight", "0,7"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn render_empty_instance_draws_grid() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "e.json", r#"{"k": 0, "paths": []}"#);
    let svg = dir.path().join("e.svg");
    assert!(bkvpg(&["render", s(&f), "--out", s(&svg)]).status.success());
    let text = fs::read_to_string(&svg).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    assert!(doc.descendants().any(|n| n.has_tag_name("line")));
    assert!(!doc.descendants().any(|n| n.has_tag_name("polyline")));
}
