//! Runs every acceptance criterion and prints one line per criterion.

use std::path::Path;
use std::process::ExitCode;

use hyperpart::harness::suite::{default_fixtures, run_suite, SuiteConfig};

fn main() -> ExitCode {
    let config = SuiteConfig {
        fixtures: default_fixtures().to_path_buf(),
        binary: Some(Path::new(env!("CARGO_BIN_EXE_hyperpart")).to_path_buf()),
    };
    println!("acceptance criteria");
    let reports = run_suite("all", &config, |r| {
        println!("{r}");
        for failure in &r.failures {
            println!("    {failure}");
        }
    })
    .expect("`all` is a known suite");
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!(
        "{} criteria, {} passed, {failed} failed",
        reports.len(),
        reports.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
