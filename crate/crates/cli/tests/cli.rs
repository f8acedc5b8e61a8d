use std::process::{Command, Output};

use serde_json::Value;
use symbreak::distinguishing::{is_distinguishing, is_distinguishing_edges};
use symbreak::io::parse_graph6;
use symbreak::labeling::{EdgeLabeling, Labeling};

fn symbreak(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symbreak"))
        .args(args)
        .env("SYMBREAK_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = symbreak(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn gen_families() {
    let p5 = parse_graph6(stdout(&["gen", "path", "5"]).trim()).unwrap();
    assert_eq!((p5.order(), p5.size()), (5, 4));
    let j = parse_graph6(stdout(&["gen", "join", "star:3", "star:3"]).trim()).unwrap();
    assert_eq!((j.order(), j.size()), (8, 3 + 3 + 16));
    let f2 = parse_graph6(stdout(&["gen", "friendship", "2"]).trim()).unwrap();
    assert_eq!((f2.order(), f2.size()), (5, 6));
}

#[test]
fn compute_values() {
    assert_eq!(json(&["compute", "--what", "number", "cycle:5"])["value"], 3);
    assert_eq!(json(&["compute", "--what", "index", "complete:4"])["value"], 3);
    let aut = json(&["compute", "--what", "aut", "path:3"]);
    assert_eq!(aut["value"], 2);
    assert_eq!(aut["orbits"], serde_json::json!([[0, 2], [1]]));
    let k2 = json(&["compute", "--what", "index", "complete:2"]);
    assert_eq!(k2["status"], "not_defined");
}

#[test]
fn witnesses_reverify_from_json() {
    for spec in ["cycle:5", "friendship:2", "complete_bipartite:2,3", "join(path:3,path:4)"] {
        let out = json(&["compute", "--what", "number", spec]);
        let g = parse_graph6(out["graph"].as_str().unwrap()).unwrap();
        let w: Labeling = serde_json::from_value(out["witness"].clone()).unwrap();
        assert!(is_distinguishing(&g, &w).unwrap(), "{spec}");
        assert_eq!(w.label_count(), out["value"].as_u64().unwrap() as u32);

        let out = json(&["compute", "--what", "index", spec]);
        let w: EdgeLabeling = serde_json::from_value(out["witness"].clone()).unwrap();
        assert!(is_distinguishing_edges(&g, &w).unwrap(), "{spec}");
    }
}

#[test]
fn partition_examples() {
    assert_eq!(json(&["partition", "friendship:2", "friendship:3"])["q"], 1);
    assert_eq!(json(&["partition", "path:4", "path:5"])["q"], 0);
    let p34 = json(&["partition", "path:3", "path:4"]);
    assert_eq!(p34["q"], 0);
    assert_eq!(p34["gamma"].as_array().unwrap().len(), 3);
    let k = json(&["partition", "complete_bipartite:3,2", "complete_bipartite:3,1"]);
    assert_eq!(k["gamma"].as_array().unwrap().len(), 3);
    assert_eq!((k["q"].clone(), k["z"].clone()), (1.into(), 1.into()));
}

#[test]
fn bounds_report() {
    let r = json(&["bounds", "complete_bipartite:3,2", "complete_bipartite:3,1"]);
    assert_eq!(r["d_join"], 4);
    let entries = r["entries"].as_array().unwrap();
    let djoin = entries.iter().find(|e| e["theorem"] == "djoin").unwrap();
    assert_eq!((djoin["holds"].clone(), djoin["tight"].clone()), (true.into(), true.into()));
}

#[test]
fn deterministic_output() {
    for args in [
        &["partition", "friendship:2", "friendship:3"][..],
        &["bounds", "cycle:4", "path:3"],
        &["verify", "--theorem", "thh5", "--range", "corpus<=3"],
        &["corpus", "--max-order", "4"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| symbreak(args).status.code().unwrap();
    assert_eq!(code(&["compute", "--what", "number", "not graph6 !"]), 2);
    assert_eq!(code(&["gen", "nosuchfamily", "3"]), 2);
    assert_eq!(code(&["verify", "--theorem", "nosuch"]), 2);
    assert_eq!(code(&["--label-cap", "6", "compute", "--what", "number", "path:7"]), 3);
    assert_eq!(code(&["--aut-cap", "4", "compute", "--what", "aut", "path:7"]), 3);
    assert_eq!(code(&["corpus", "--max-order", "8"]), 2);
}

#[test]
fn verify_sweeps_pass() {
    let it = json(&["verify", "--theorem", "iterated", "--range", "n=2..4,k=2"]);
    assert_eq!(it["failed"], 0);
    assert_eq!(it["entries"][0]["detail"]["exact"], 3);
    let im = json(&["verify", "--theorem", "imrich", "--range", "k=2..3,n=2..5"]);
    assert_eq!(im["failed"], 0);
    let l = json(&["verify", "--theorem", "lemma22", "--range", "corpus<=5"]);
    assert_eq!((l["failed"].clone(), l["passed"].clone()), (0.into(), 496.into()));
}

#[test]
fn manifest_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let p = path.to_str().unwrap();
    assert!(stdout(&["verify", "--theorem", "friendship", "--range", "n=2..3", "--manifest", p]).is_empty());
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(m["passed"], 2);
    assert_eq!(m["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(m["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert!(m["entries"][0].get("runtime_ms").is_none());
}

#[test]
fn corpus_csv() {
    let text = stdout(&["corpus", "--max-order", "4"]);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(&headers[0], "g1");
    let col = headers.iter().position(|h| h == "sandwich_holds").unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 55);
    assert!(rows.iter().all(|r| &r[col] == "true"));
}

#[test]
fn corpus_from_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    std::fs::write(&path, "Bw\nBW\nC~\n").unwrap();
    let text = stdout(&["corpus", "--max-order", "9", "--input", path.to_str().unwrap()]);
    assert_eq!(text.lines().count(), 1 + 6);
}

#[test]
fn at_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    std::fs::write(&path, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(json(&["compute", "--what", "number", &arg])["value"], 3);
}
