//! Round trips of the text formats and scripted CLI exit-code scenarios.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::suite::CriterionReport;
use crate::budget::{DegreeBudget, VectorFunction};
use crate::hypergraph::Hypergraph;
use crate::solver::{verify_partition, Partition};

type Check = std::result::Result<(), String>;

fn round_trip_file(path: &Path) -> Check {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let name = path.display();
    match path.extension().and_then(|e| e.to_str()) {
        Some("hg") => {
            let g = Hypergraph::parse(&text).map_err(|e| format!("{name}: {e}"))?;
            let again = Hypergraph::parse(&g.to_text()).map_err(|e| format!("{name}: {e}"))?;
            (again == g && again.to_text() == g.to_text())
                .then_some(())
                .ok_or_else(|| format!("{name}: hypergraph does not round-trip"))
        }
        Some("f") => {
            let f = VectorFunction::parse(&text).map_err(|e| format!("{name}: {e}"))?;
            let again =
                VectorFunction::parse(&f.to_string()).map_err(|e| format!("{name}: {e}"))?;
            (again == f)
                .then_some(())
                .ok_or_else(|| format!("{name}: vector function does not round-trip"))
        }
        Some("h") => {
            let h = DegreeBudget::parse(&text).map_err(|e| format!("{name}: {e}"))?;
            let again = DegreeBudget::parse(&h.to_string()).map_err(|e| format!("{name}: {e}"))?;
            (again == h)
                .then_some(())
                .ok_or_else(|| format!("{name}: degree budget does not round-trip"))
        }
        _ => Ok(()),
    }
}

struct Scenario {
    name: &'static str,
    args: Vec<String>,
    code: i32,
    stdout: Option<String>,
}

struct Workspace {
    dir: PathBuf,
}

impl Workspace {
    fn new() -> std::io::Result<Self> {
        let stamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_nanos());
        let dir = std::env::temp_dir().join(format!("hyperpart-{}-{stamp}", std::process::id()));
        fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    fn file(&self, name: &str, content: &str) -> String {
        let path = self.dir.join(name);
        fs::write(&path, content).expect("temporary directory is writable");
        path.display().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.dir.join(name).display().to_string()
    }
}

impl Drop for Workspace {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.dir);
    }
}

fn args(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}

fn scenarios(ws: &Workspace) -> Vec<Scenario> {
    let graph = |name: &str, g: &Hypergraph| ws.file(name, &g.to_text());
    let budgets = |name: &str, n: usize, row: &[usize]| {
        ws.file(
            name,
            &VectorFunction::constant(n, row)
                .expect("valid row")
                .to_string(),
        )
    };
    let c4 = graph("c4.hg", &Hypergraph::cycle(1, 4).expect("valid"));
    let c5 = graph("c5.hg", &Hypergraph::cycle(1, 5).expect("valid"));
    let k4 = graph("k4.hg", &Hypergraph::complete(1, 4).expect("valid"));
    let path = graph(
        "p3.hg",
        &Hypergraph::new(3, [[0, 1], [1, 2]]).expect("valid"),
    );
    let c4_11 = budgets("c4.f", 4, &[1, 1]);
    let c5_11 = budgets("c5-11.f", 5, &[1, 1]);
    let c5_21 = budgets("c5-21.f", 5, &[2, 1]);
    let c5_10 = budgets("c5-10.f", 5, &[1, 0]);
    let k4_111 = budgets("k4.f", 4, &[1, 1, 1]);
    let path_f = ws.file("p3.f", "3 2\n1 0\n0 1\n1 0\n");
    let h3 = ws.file("c4-3.h", "3\n3\n3\n3\n");
    let h2 = ws.file("c4-2.h", "2\n2\n2\n2\n");
    let broken = ws.file("broken.hg", "3 2\n1 2\n");
    let trace = ws.path("trace.txt");
    let missing = ws.path("missing.hg");
    let tkn = ws.path("tkn.hg");

    vec![
        Scenario {
            name: "partition odd cycle",
            args: args(&["partition", "--graph", &c5, "--f", &c5_11]),
            code: 2,
            stdout: Some("odd-cycle".into()),
        },
        Scenario {
            name: "partition even cycle",
            args: args(&["partition", "--graph", &c4, "--f", &c4_11]),
            code: 0,
            stdout: None,
        },
        Scenario {
            name: "partition below hypothesis",
            args: args(&["partition", "--graph", &c5, "--f", &c5_10]),
            code: 3,
            stdout: None,
        },
        Scenario {
            name: "forced partition without solution",
            args: args(&["partition", "--graph", &c5, "--f", &c5_10, "--force"]),
            code: 2,
            stdout: Some("no partition".into()),
        },
        Scenario {
            name: "forced partition with solution",
            args: args(&["partition", "--graph", &path, "--f", &path_f, "--force"]),
            code: 0,
            stdout: Some("1 1\n2 2\n3 1\n".into()),
        },
        Scenario {
            name: "maxpartition sizes",
            args: args(&[
                "maxpartition",
                "--graph",
                &c5,
                "--f",
                &c5_21,
                "--trace",
                &trace,
            ]),
            code: 0,
            stdout: Some("# sizes 4 1".into()),
        },
        Scenario {
            name: "maxpartition obstruction",
            args: args(&["maxpartition", "--graph", &c5, "--f", &c5_11]),
            code: 2,
            stdout: Some("odd-cycle".into()),
        },
        Scenario {
            name: "hardpair found",
            args: args(&["hardpair", "--graph", &k4, "--f", &k4_111]),
            code: 2,
            stdout: Some("complete(t=1, n=4, n_i=(1,1,1))".into()),
        },
        Scenario {
            name: "hardpair absent",
            args: args(&["hardpair", "--graph", &c4, "--f", &c4_11]),
            code: 0,
            stdout: Some("not hard".into()),
        },
        Scenario {
            name: "oracle none",
            args: args(&["oracle", "--graph", &k4, "--f", &k4_111]),
            code: 2,
            stdout: Some("no partition".into()),
        },
        Scenario {
            name: "oracle lexicographic",
            args: args(&["oracle", "--graph", &c4, "--f", &c4_11]),
            code: 0,
            stdout: Some("1 1\n2 2\n3 1\n4 2\n".into()),
        },
        Scenario {
            name: "oracle budget exceeded",
            args: args(&["oracle", "--graph", &c4, "--f", &c4_11, "--budget", "3"]),
            code: 1,
            stdout: None,
        },
        Scenario {
            name: "gen complete",
            args: args(&["gen", "tkn", "--t", "2", "--n", "4", "--graph", &tkn]),
            code: 0,
            stdout: None,
        },
        Scenario {
            name: "col of generated",
            args: args(&["col", "--graph", &tkn]),
            code: 0,
            stdout: Some("7\n".into()),
        },
        Scenario {
            name: "check degenerate",
            args: args(&["check", "--graph", &c4, "--h", &h3]),
            code: 0,
            stdout: Some("order: 1 2 3 4".into()),
        },
        Scenario {
            name: "check core",
            args: args(&["check", "--graph", &c4, "--h", &h2]),
            code: 2,
            stdout: Some("core: 1 2 3 4".into()),
        },
        Scenario {
            name: "missing input",
            args: args(&["col", "--graph", &missing]),
            code: 74,
            stdout: None,
        },
        Scenario {
            name: "malformed input",
            args: args(&["col", "--graph", &broken]),
            code: 1,
            stdout: None,
        },
        Scenario {
            name: "length mismatch",
            args: args(&["partition", "--graph", &c5, "--f", &c4_11]),
            code: 1,
            stdout: None,
        },
        Scenario {
            name: "unknown flag",
            args: args(&["col", "--graph", &c4, "--bogus"]),
            code: 64,
            stdout: None,
        },
        Scenario {
            name: "missing subcommand",
            args: Vec::new(),
            code: 64,
            stdout: None,
        },
        Scenario {
            name: "unknown suite",
            args: args(&["suite", "nope"]),
            code: 64,
            stdout: None,
        },
        Scenario {
            name: "help",
            args: args(&["--help"]),
            code: 0,
            stdout: None,
        },
    ]
}

fn run_scenario(binary: &Path, s: &Scenario) -> Check {
    let output = Command::new(binary)
        .args(&s.args)
        .output()
        .map_err(|e| format!("{}: cannot run {}: {e}", s.name, binary.display()))?;
    let stdout = String::from_utf8_lossy(&output.stdout);
    let code = output.status.code().unwrap_or(-1);
    if code != s.code {
        return Err(format!(
            "{}: exit code {code}, expected {} (stderr: {})",
            s.name,
            s.code,
            String::from_utf8_lossy(&output.stderr).trim()
        ));
    }
    match &s.stdout {
        Some(needle) if !stdout.contains(needle.as_str()) => {
            Err(format!("{}: output lacks {needle:?}: {stdout:?}", s.name))
        }
        _ => Ok(()),
    }
}

/// Partition output of the CLI parses back and verifies.
fn partition_output_check(binary: &Path, ws: &Workspace) -> Check {
    let g = Hypergraph::cycle(1, 6).expect("valid");
    let f = VectorFunction::constant(6, &[1, 1]).expect("valid");
    let graph = ws.file("c6.hg", &g.to_text());
    let budgets = ws.file("c6.f", &f.to_string());
    let output = Command::new(binary)
        .args(["partition", "--graph", &graph, "--f", &budgets])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&output.stdout);
    let partition = Partition::parse(&text, 6, 2).map_err(|e| format!("partition output: {e}"))?;
    verify_partition(&g, &f, &partition)
        .then_some(())
        .ok_or_else(|| "partition output does not verify".into())
}

/// Identical seeds give byte-identical generated instances and outputs.
fn determinism_check(binary: &Path) -> Check {
    let run = || {
        Command::new(binary)
            .args(["gen", "random", "--n", "7", "--seed", "42", "--p", "3"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if a.status.code() != Some(0) || a.stdout.is_empty() {
        return Err("gen random failed".into());
    }
    (a.stdout == b.stdout)
        .then_some(())
        .ok_or_else(|| "gen output differs between identical runs".into())
}

/// AC9: text formats round-trip and the CLI honours its exit codes.
/// Without a binary only the round trips run.
pub fn ac9_plumbing(fixtures: &Path, binary: Option<&Path>) -> CriterionReport {
    let started = std::time::Instant::now();
    let mut checks: Vec<Check> = Vec::new();

    match fs::read_dir(fixtures) {
        Ok(entries) => {
            let mut paths: Vec<PathBuf> =
                entries.filter_map(|e| e.ok().map(|e| e.path())).collect();
            paths.sort();
            let before = checks.len();
            for path in paths.iter().filter(|p| p.is_file()) {
                checks.push(round_trip_file(path));
            }
            if checks.len() == before {
                checks.push(Err(format!("no fixtures in {}", fixtures.display())));
            }
        }
        Err(e) => checks.push(Err(format!("{}: {e}", fixtures.display()))),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xac9);
    for _ in 0..100 {
        let g = super::random_hypergraph(&mut rng, 8, 4, 3);
        let f = super::random_budgets(&mut rng, &g, 3, 2);
        let ok = Hypergraph::parse(&g.to_text()).as_ref() == Ok(&g)
            && VectorFunction::parse(&f.to_string()).as_ref() == Ok(&f);
        checks.push(
            ok.then_some(())
                .ok_or_else(|| format!("generated instance fails to round-trip:\n{g}")),
        );
    }

    let mut detail = String::from("cli=skipped");
    if let Some(binary) = binary {
        match Workspace::new() {
            Ok(ws) => {
                let list = scenarios(&ws);
                detail = format!("cli-scenarios={}", list.len() + 2);
                for s in &list {
                    checks.push(run_scenario(binary, s));
                }
                checks.push(partition_output_check(binary, &ws));
                checks.push(determinism_check(binary));
            }
            Err(e) => checks.push(Err(format!("temporary directory: {e}"))),
        }
    }

    let failures: Vec<String> = checks.iter().filter_map(|c| c.clone().err()).collect();
    CriterionReport {
        id: "AC9",
        name: "plumbing",
        checked: checks.len(),
        failure_count: failures.len(),
        failures,
        elapsed: started.elapsed(),
        time_limit: None,
        detail,
    }
}
