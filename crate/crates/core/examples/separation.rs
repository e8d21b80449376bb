//! Every point of Z(c) is strictly maximal somewhere. Two constructions of
//! the maximising point, and an instance where the full ranking of Z(c)
//! depends on more than the order of the r^j(b).

use sgraph::fusion::{build_sgraph, evaluate_at, same_ranking, separating_point, separating_point_by_fusion, zset, EvaluationPoint};
use sgraph::exactmath::int;
use sgraph::{CoeffOrder, NumericCoeffs};

fn main() -> sgraph::Result<()> {
    let order: CoeffOrder = "2,3,1".parse()?;
    let c = NumericCoeffs::from_ints(&[5, 1, 3])?;
    let g = build_sgraph(&order);
    for v in &g.vertices {
        let lp = separating_point(&g, v.id, &c)?;
        let fused = separating_point_by_fusion(&g, v.id, &c)?;
        let show = |b: &EvaluationPoint| b.b.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        println!("({}) maximal at ({}) and at ({})", v.func, show(&lp), show(&fused));
    }

    let g = build_sgraph(&CoeffOrder::natural(2));
    let c = NumericCoeffs::from_ints(&[1, 2])?;
    let b1 = EvaluationPoint { b: vec![int(10), int(9), int(0)] };
    let b2 = EvaluationPoint { b: vec![int(10), int(1), int(0)] };
    for f in zset(&g) {
        println!("({f}): {} vs {}", evaluate_at(&f, &c, &b1)?, evaluate_at(&f, &c, &b2)?);
    }
    println!("same ranking: {}", same_ranking(&g, &c, &b1, &b2)?);
    Ok(())
}
