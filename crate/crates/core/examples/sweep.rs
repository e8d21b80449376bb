//! Seeded sweep over every check, with a JSON report.
//!
//! `cargo run --release --example sweep -- report.json`

use sgraph::harness::{run_sweep, SweepConfig};
use sgraph::Profile;

fn main() -> sgraph::Result<()> {
    let cfg = SweepConfig {
        n_values: vec![1, 2, 3, 4],
        trials_per_order: 2,
        profiles: Profile::ALL.to_vec(),
        ..SweepConfig::default()
    };
    let report = run_sweep(&cfg)?;
    print!("{}", report.summary());
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, report.to_json()).map_err(|e| sgraph::Error::Input(format!("{path}: {e}")))?;
        println!("report written to {path}");
    }
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
