use std::path::{Path, PathBuf};

use cutcode::cli::run;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cutcode_with_stdin(args: &[&str], stdin: &str) -> Out {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cutcode").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err, &mut stdin.as_bytes());
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn cutcode(args: &[&str]) -> Out {
    cutcode_with_stdin(args, "")
}

fn golden(name: &str) -> String {
    testdata().join(name).display().to_string()
}

fn testdata() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("testdata")
}

#[test]
fn construct_dim4_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = cutcode(&[
        "construct",
        "dim4",
        "--q",
        "3",
        "--beta",
        "2",
        "--out-dir",
        d,
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout, "[14,4,7]_3 minimal=true reduced=true\n");
    for ext in ["gmat", "pts", "json"] {
        assert!(dir.path().join(format!("dim4_q3_beta2.{ext}")).exists());
    }
    let json: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("dim4_q3_beta2.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(json["d"], 7);
    assert_eq!(json["reduced"], true);

    let gmat = dir.path().join("dim4_q3_beta2.gmat");
    let e = cutcode(&[
        "equiv",
        gmat.to_str().unwrap(),
        &golden("dim4_q3_beta2.gmat"),
    ]);
    assert_eq!(e.code, 0);
    assert!(e.stdout.starts_with("equivalent"));
}

#[test]
fn construct_pipes_into_verify() {
    let grid: &[&[&str]] = &[
        &["tetrahedron", "--q", "2", "--k", "3"],
        &["tetrahedron", "--q", "3", "--k", "4"],
        &["tetrahedron", "--q", "4", "--k", "3"],
        &["dim4", "--q", "2"],
        &["dim4", "--q", "4", "--beta", "3"],
        &["dim4", "--q", "5", "--beta", "4"],
        &["pentagonal", "--q", "2"],
        &["pentagonal", "--q", "3"],
        &["hexagonal", "--q", "2"],
        &["simplex", "--q", "3", "--k", "3"],
        &["simplex", "--q", "2", "--k", "4"],
    ];
    for args in grid {
        let mut a = vec!["construct"];
        a.extend_from_slice(args);
        a.extend_from_slice(&["--no-files", "--stdout"]);
        let c = cutcode(&a);
        assert_eq!(c.code, 0, "{args:?}: {}", c.stderr);
        let v = cutcode_with_stdin(&["verify"], &c.stdout);
        assert_eq!(v.code, 0, "{args:?}: {}", v.stdout);
    }
}

#[test]
fn verify_hexagonal_golden() {
    let o = cutcode(&[
        "verify",
        "--in",
        &golden("hexagonal_q2.gmat"),
        "--criterion",
        "all",
        "--json",
    ]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["minimal"], true);
    let crit: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["criterion"].as_str().unwrap())
        .collect();
    assert_eq!(crit, ["naive", "hdz", "geometric"]);
    // 2 * 5 > 9
    assert_eq!(v["ab"]["applies"], true);
}

#[test]
fn verify_single_criterion_schema() {
    let o = cutcode(&[
        "verify",
        "--in",
        &golden("dim4_q2.gmat"),
        "--criterion",
        "hdz",
        "--json",
    ]);
    assert_eq!(
        o.stdout,
        "{\"minimal\":true,\"criterion\":\"hdz\",\"witness\":null}\n"
    );
}

#[test]
fn non_minimal_exits_one() {
    let code = "field q=2 p=2 m=1\nk=2 n=3\n1 0 1\n0 1 0\n";
    let o = cutcode_with_stdin(&["verify", "--criterion", "naive", "--json"], code);
    assert_eq!(o.code, 1);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["minimal"], false);
    assert_eq!(v["witness"], serde_json::json!([[0, 1, 0], [1, 1, 1]]));
    // the ratio test never proves non-minimality
    let o = cutcode_with_stdin(&["verify", "--criterion", "ab"], code);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("ab=inconclusive"));
}

#[test]
fn verify_point_sets() {
    let fano_minus_one = "field q=2 p=2 m=1\nN=2\n0,1,0\n0,0,1\n0,1,1\n1,0,0\n1,0,1\n1,1,0\n";
    let o = cutcode_with_stdin(&["verify", "--json"], fano_minus_one);
    assert_eq!(o.code, 0);
    assert_eq!(
        o.stdout,
        "{\"n\":6,\"cutting\":true,\"minimal_cutting\":true,\"tfold\":{\"t\":2,\"r\":1}}\n"
    );
    let line = "field q=2 p=2 m=1\nN=2\n1,0,0\n0,1,0\n1,1,0\n";
    let o = cutcode_with_stdin(&["verify"], line);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("cutting=false"));
}

#[test]
fn wdist_json() {
    let c = cutcode(&[
        "construct",
        "tetrahedron",
        "--q",
        "3",
        "--k",
        "3",
        "--no-files",
        "--stdout",
    ]);
    let o = cutcode_with_stdin(&["wdist", "--json"], &c.stdout);
    assert_eq!(
        o.stdout,
        "{\"n\":9,\"k\":3,\"q\":3,\"A\":{\"0\":1,\"5\":6,\"6\":8,\"7\":12}}\n"
    );
}

#[test]
fn bounds_outputs() {
    let o = cutcode(&["bounds", "--q", "2", "--k", "4"]);
    assert!(o.stdout.starts_with("geometric=7 griesmer=8 best=8"));
    let j = cutcode(&["bounds", "--q", "9", "--k", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
    assert_eq!(v["dim3"]["lb"], 26);
    assert_eq!(v["conjectured"]["conjectural"], true);
    let m = cutcode(&["bounds", "--q", "5", "--k", "4", "--markdown"]);
    assert!(m.stdout.contains("CONJECTURAL"));
    assert!(m.stdout.contains("| 5 | 4 | 16 | 11 |"));
    let t = cutcode(&["bounds", "table", "--q-range", "2..9", "--k-range", "3..5"]);
    assert_eq!(t.code, 0);
    // q in {2,3,4,5,7,8,9}, k in {3,4,5}, plus two header lines
    assert_eq!(t.stdout.lines().count(), 2 + 7 * 3);
    assert_eq!(cutcode(&["bounds", "--q", "6", "--k", "3"]).code, 2);
    assert_eq!(cutcode(&["bounds"]).code, 2);
}

#[test]
fn search_json_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = cutcode(&[
        "search",
        "--q",
        "2",
        "--k",
        "4",
        "--n",
        "9",
        "--mode",
        "all",
        "--threads",
        "3",
        "--json",
        "--out-dir",
        d,
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["exhaustive"], true);
    assert!(v["nodes"].as_u64().unwrap() > 0);
    let files = v["files"].as_array().unwrap();
    assert_eq!(files.len(), v["found"].as_array().unwrap().len());
    let first = dir.path().join(files[0].as_str().unwrap());
    let check = cutcode(&["verify", "--in", first.to_str().unwrap()]);
    assert!(
        check.stdout.contains("minimal_cutting=true"),
        "{}",
        check.stdout
    );

    let none = cutcode(&["search", "--q", "2", "--k", "4", "--n", "8"]);
    assert_eq!(none.code, 1);
    assert!(none.stdout.contains("count=0 exhaustive=true"));
}

#[test]
fn search_output_independent_of_threads() {
    let base = [
        "search", "--q", "3", "--k", "3", "--n", "10", "--mode", "all", "--json",
    ];
    let one = cutcode(&[&base[..], &["--threads", "1"]].concat());
    for t in ["2", "5"] {
        assert_eq!(
            cutcode(&[&base[..], &["--threads", t]].concat()).stdout,
            one.stdout
        );
    }
    let budget = [
        "search", "--q", "2", "--k", "5", "--n", "12", "--budget", "2000", "--mode", "count",
    ];
    let a = cutcode(&[&budget[..], &["--threads", "1"]].concat());
    let b = cutcode(&[&budget[..], &["--threads", "4"]].concat());
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("exhaustive=false"));
}

#[test]
fn shortest_search() {
    let o = cutcode(&["search", "--q", "2", "--k", "3", "--n", "7", "--shortest"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.starts_with("PG(2,2) n=6"));
    let o = cutcode(&["search", "--q", "2", "--k", "4", "--n", "8", "--shortest"]);
    assert_eq!(o.code, 1);
}

#[test]
fn equiv_and_classify_goldens() {
    let pent = golden("pentagonal_q2.gmat");
    let hex = golden("hexagonal_q2.gmat");
    let o = cutcode(&["equiv", &pent, &hex]);
    assert_eq!((o.code, o.stdout.as_str()), (1, "inequivalent\n"));
    let o = cutcode(&["equiv", &pent, &pent, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["equivalent"], true);
    let o = cutcode(&["classify", &pent, &hex, &pent, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    let o = cutcode(&["classify", "--q", "2", "--k", "4", "--n", "9"]);
    assert!(o.stdout.contains("1 classes"), "{}", o.stdout);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(cutcode(&["frobnicate"]).code, 2);
    assert_eq!(cutcode(&["verify", "--bogus"]).code, 2);
    assert_eq!(
        cutcode(&["construct", "dim4", "--q", "6", "--no-files"]).code,
        2
    );
    assert_eq!(
        cutcode(&["construct", "dim4", "--q", "3", "--beta", "0", "--no-files"]).code,
        2
    );
    assert_eq!(
        cutcode(&["construct", "hexagonal", "--q", "3", "--no-files"]).code,
        2
    );
    assert_eq!(
        cutcode(&["search", "--q", "4", "--k", "4", "--n", "20"]).code,
        2
    );
    let o = cutcode_with_stdin(&["verify"], "field q=2 p=2 m=1\nk=1 n=2\n1 x\n");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 3"), "{}", o.stderr);
    assert_eq!(
        cutcode(&["verify", "--in", "/nonexistent/file.gmat"]).code,
        2
    );
    assert_eq!(cutcode(&["--help"]).code, 0);
}

#[test]
fn timing_is_opt_in() {
    let plain = cutcode(&["bounds", "--q", "3", "--k", "3"]);
    assert!(plain.stderr.is_empty());
    let timed = cutcode(&["--timing", "bounds", "--q", "3", "--k", "3"]);
    assert!(timed.stderr.starts_with("elapsed"));
    assert_eq!(timed.stdout, plain.stdout);
}
