//! The three inequality systems and the fixed instances that separate them.

use sgraph::harness::remark_witnesses;
use sgraph::orders::{sample_coeffs, Profile};
use sgraph::polytope::{build_system, compare_systems, Variant};
use sgraph::CoeffOrder;

fn main() -> sgraph::Result<()> {
    for order in CoeffOrder::all(3) {
        let c = sample_coeffs(&order, 1, Profile::Generic);
        let three = build_system(&order, &c, Variant::Three)?;
        let prime = build_system(&order, &c, Variant::ThreePrime)?;
        let pairwise = build_system(&order, &c, Variant::ThreeDoublePrime)?;
        println!(
            "{order} at ({c}): 3 vs 3p {:?}, 3pp vs 3 {:?}",
            compare_systems(&three, &prime)?,
            compare_systems(&pairwise, &three)?
        );
    }

    let w = remark_witnesses()?;
    println!("order 1,3,2, c = (1,3,2), without the k=2 chain gains {:?}", w.relaxed_extra_vertices);
    println!("order 1,3,2, c = (1,3,2), pairwise equals three: {}", w.pairwise_equal_at_132);
    println!(
        "order 2,1,3, c = (2,1,3), pairwise strictly inside: {} (vertex of three cut off: {:?})",
        w.pairwise_strictly_inside, w.pairwise_witness
    );
    Ok(())
}
