//! Distinct functions and graphs over all orders against Catalan numbers.

use sgraph::harness::{catalan, count_functions, count_graphs};

fn main() -> sgraph::Result<()> {
    println!("{:>2} {:>10} {:>8} {:>7} {:>7}", "n", "functions", "C(n+1)", "graphs", "C(n)");
    for n in 1..=5 {
        println!(
            "{n:>2} {:>10} {:>8} {:>7} {:>7}",
            count_functions(n)?,
            catalan(n + 1),
            count_graphs(n)?,
            catalan(n)
        );
    }
    Ok(())
}
