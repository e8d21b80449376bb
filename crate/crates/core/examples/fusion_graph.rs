//! Builds G(c) by binary fusion and checks it against its certificates.
//!
//! `cargo run --example fusion_graph -- 2,3,1`

use sgraph::fusion::{build_sgraph, check_edge_relation, check_fusion_certificates, check_structure, zset};
use sgraph::orders::{sample_coeffs, Profile};
use sgraph::CoeffOrder;

fn main() -> sgraph::Result<()> {
    let order: CoeffOrder = std::env::args().nth(1).as_deref().unwrap_or("1,3,2").parse()?;
    let g = build_sgraph(&order);

    for cert in &g.levels {
        println!(
            "fused c{} (pred {:?}, succ label {}): {} vertices on the seam",
            cert.s,
            cert.pred,
            cert.succ_label(g.n),
            cert.phi.len()
        );
    }
    for v in &g.vertices {
        println!("v{:<3} label {}  ({})", v.id, v.label, v.func);
    }
    println!("{} vertices, {} edges, {} distinct functions", g.vertices.len(), g.edges.len(), zset(&g).len());

    let c = sample_coeffs(&order, 7, Profile::Generic);
    assert!(check_structure(&g).is_empty());
    assert!(check_edge_relation(&g).is_empty());
    assert!(check_fusion_certificates(&g, std::slice::from_ref(&c)).is_empty());
    println!("edge relation and certificates hold at c = ({c})\n");
    print!("{}", g.to_dot());
    Ok(())
}
