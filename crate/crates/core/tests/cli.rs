use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    p.to_str().unwrap().to_string()
}

fn hyperpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperpart"))
        .args(args)
        .output()
        .unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn odd_cycle_is_reported_as_obstruction() {
    let out = hyperpart(&[
        "partition",
        "--graph",
        &fixture("c5.hg"),
        "--f",
        &fixture("c5-11.f"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "obstruction [1 2 3 4 5]\nodd-cycle(t=1, n=5, k=1, l=2) [1 2 3 4 5]\n"
    );
}

#[test]
fn maxpartition_trace_and_sizes() {
    let dir = std::env::temp_dir().join(format!("hyperpart-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let trace = dir.join("trace.txt");
    let out = hyperpart(&[
        "maxpartition",
        "--graph",
        &fixture("c5.hg"),
        "--f",
        &fixture("c5-21.f"),
        "--trace",
        path(&trace),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with("# sizes 4 1\n"), "{text}");
    let trace_text = std::fs::read_to_string(&trace).unwrap();
    assert!(
        trace_text.starts_with("# component 1 part 1"),
        "{trace_text}"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let (g, f) = (fixture("2k3.hg"), fixture("k4-111.f"));
    let args = ["hardpair", "--graph", &g, "--f", &f];
    assert_eq!(hyperpart(&args).status.code(), Some(1));
    let (g, f) = (fixture("mixed.hg"), fixture("mixed.f"));
    let mixed = ["partition", "--graph", &g, "--f", &f];
    let first = hyperpart(&mixed);
    assert_eq!(first.stdout, hyperpart(&mixed).stdout);
    assert!(matches!(first.status.code(), Some(0 | 2)));
}

#[test]
fn coloring_number_of_fixtures() {
    for (file, col) in [
        ("k4.hg", "4\n"),
        ("2k3.hg", "5\n"),
        ("c5.hg", "3\n"),
        ("empty.hg", "0\n"),
    ] {
        let out = hyperpart(&["col", "--graph", &fixture(file)]);
        assert_eq!(String::from_utf8(out.stdout).unwrap(), col, "{file}");
    }
}
