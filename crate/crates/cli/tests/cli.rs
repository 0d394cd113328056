use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn core_tests(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests")
        .join(rel)
}

fn termspace(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_termspace"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    (dir, path)
}

fn data(name: &str) -> String {
    core_tests(&format!("data/{name}")).display().to_string()
}

#[test]
fn verify_machine_output_matches_golden() {
    for name in ["z4", "z6"] {
        let o = termspace(&[
            "--format",
            "machine",
            "verify",
            &data(&format!("{name}.txt")),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let golden = fs::read_to_string(core_tests(&format!("golden/{name}.report.json"))).unwrap();
        assert_eq!(stdout(&o), golden);
    }
}

#[test]
fn dot_export_matches_golden() {
    for name in ["z4", "z6"] {
        let o = termspace(&["export", "--dot", &data(&format!("{name}.txt"))]);
        assert_eq!(o.status.code(), Some(0));
        let golden = fs::read_to_string(core_tests(&format!("golden/{name}.dot"))).unwrap();
        assert_eq!(stdout(&o), golden);
    }
}

#[test]
fn verify_several_files_gives_an_array_in_input_order() {
    let o = termspace(&[
        "--format",
        "machine",
        "verify",
        &data("z6.txt"),
        &data("z4.txt"),
        &data("trivial.txt"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let docs: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = docs
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["monoid"]["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["z6", "z4", "trivial"]);
}

#[test]
fn text_topology_reports_density() {
    let o = termspace(&["topology", &data("z6.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("density pairing: corrected holds, literal VIOLATED"));
}

#[test]
fn validate_accepts_every_data_file() {
    let files: Vec<String> = ["z4.txt", "z6.txt", "boolean.txt", "trivial.txt"]
        .iter()
        .map(|f| data(f))
        .collect();
    let mut args = vec!["validate"];
    args.extend(files.iter().map(String::as_str));
    let o = termspace(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn syntax_errors_exit_with_one_and_name_the_line() {
    let (_dir, path) = scratch("bad.txt", "monoid 2\nelements e a\ne a\na e\n");
    let o = termspace(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn missing_files_exit_with_one() {
    let o = termspace(&["analyze", "/nonexistent/monoid.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invalid_monoids_exit_with_two() {
    // not commutative: a*b = a, b*a = b
    let text = "monoid 3\nelements e a b\nidentity e\ne a b\na a a\nb b b\n";
    let (_dir, path) = scratch("left_zero.txt", text);
    let o = termspace(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn worst_code_wins_across_files() {
    let (_dir, path) = scratch("bad.txt", "monoid 1\nelements e\nidentity e\nx\n");
    let o = termspace(&["validate", &data("z4.txt"), path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("ok "));
}

#[test]
fn max_points_is_capped() {
    let o = termspace(&["--max-points", "21", "analyze", &data("z4.txt")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn generate_output_parses_back() {
    let o = termspace(&["generate", "--family", "z_mult", "--params", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let z6 = fs::read_to_string(core_tests("data/z6.txt")).unwrap();
    let without_comment: String = z6
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    assert_eq!(stdout(&o), without_comment);

    let o = termspace(&[
        "generate",
        "--family",
        "direct_product(boolean,cyclic(1,2))",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("monoid 6\n"));

    let o = termspace(&["generate", "--family", "torus"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn census_counts() {
    let o = termspace(&[
        "--format",
        "machine",
        "census",
        "--order",
        "4",
        "--up-to-iso",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["count"], 19);
    assert_eq!(doc["tables"].as_array().unwrap().len(), 19);

    let o = termspace(&["census", "--order", "3"]);
    assert!(stdout(&o).starts_with("# order 3, 9 monoid(s)\n"));

    let o = termspace(&["census", "--order", "6"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sampled_verification_is_reproducible() {
    let args = [
        "--format",
        "machine",
        "--seed",
        "7",
        "--samples",
        "64",
        "verify",
    ];
    let file = termspace(&["generate", "--family", "chain_semilattice(14)"]);
    let (_dir, path) = scratch("chain14.txt", &stdout(&file));
    let mut full: Vec<&str> = args.to_vec();
    full.push(path.to_str().unwrap());
    let (a, b) = (termspace(&full), termspace(&full));
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("subsets.sampled"));
}
