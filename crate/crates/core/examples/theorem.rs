//! The vertices of K(c) are exactly the evaluated functions of G(c).
//!
//! `cargo run --example theorem -- 1,3,2 1,4,2`

use sgraph::polytope::{build_system, enumerate_vertices, verify_theorem, Variant};
use sgraph::{CoeffOrder, NumericCoeffs};

fn main() -> sgraph::Result<()> {
    let mut args = std::env::args().skip(1);
    let order: CoeffOrder = args.next().as_deref().unwrap_or("1,3,2").parse()?;
    let c: NumericCoeffs = args.next().as_deref().unwrap_or("1,4,2").parse()?;

    let sys = build_system(&order, &c, Variant::Three)?;
    for ineq in &sys.inequalities {
        println!("{ineq}");
    }
    let vertices = enumerate_vertices(&sys);
    println!("{} vertices", vertices.len());

    let report = verify_theorem(&order, &c)?;
    println!(
        "order {order}, c = ({c}): {} vertices, {} points of Z, {}",
        report.polytope_vertices.len(),
        report.zset_points.len(),
        if report.passed { "equal" } else { "different" }
    );
    Ok(())
}
