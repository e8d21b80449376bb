//! Strips a function down to zero by block moves, then rebuilds a height
//! profile from the move log.
//!
//! `cargo run --example reconstruction -- "c1; c1+c2-c3; c1"`

use sgraph::tableau::{deconstruct, evaluate_rows, rebuild_heights, trace, Rebuild};
use sgraph::FunctionVector;

fn main() -> sgraph::Result<()> {
    let arg = std::env::args().nth(1);
    let f: FunctionVector = arg.as_deref().unwrap_or("c1; c1+c2-c3; c1").parse()?;
    let log = match deconstruct(&f) {
        Ok(log) => log,
        Err(e) => {
            println!("({f}) is not representable: {e}");
            return Ok(());
        }
    };
    for (m, g) in log.iter().zip(trace(&f, &log)) {
        println!("({g})  remove k={} j={} {:?}", m.k, m.j, m.parity);
    }
    match rebuild_heights(&log, &f)? {
        Rebuild::Complete { profile } => {
            println!("heights ({profile}) give ({})", evaluate_rows(&profile)?);
        }
        Rebuild::Incomplete { partial, blocking } => {
            println!("rebuild stopped at move {blocking} with ({partial})");
        }
    }

    let bad: FunctionVector = "c1; c1+c2".parse()?;
    println!("({bad}): {:?}", deconstruct(&bad));
    Ok(())
}
