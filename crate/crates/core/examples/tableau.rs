//! Functions of complete tableaux given by column heights.
//!
//! `cargo run --example tableau -- 3,2,1,3`

use sgraph::tableau::{
    column_differences, evaluate_diffs, evaluate_rows, order_relations, strongly_extremal_column,
    validate_profile, HeightProfile,
};

fn main() -> sgraph::Result<()> {
    let h: HeightProfile = std::env::args().nth(1).as_deref().unwrap_or("3,2,1,3").parse()?;
    let problems = validate_profile(&h);
    if !problems.is_empty() {
        for p in problems {
            println!("{p}");
        }
        return Ok(());
    }
    let rows = evaluate_rows(&h)?;
    let diffs = evaluate_diffs(&h)?;
    println!("heights ({h})");
    println!("rows:   ({rows})");
    println!("diffs:  ({diffs})");
    let d: Vec<String> = column_differences(&h).iter().map(ToString::to_string).collect();
    println!("column differences: {}", d.join(", "));
    println!("relations: {}", order_relations(&h));
    println!("strongly extremal: {:?}", strongly_extremal_column(&rows));
    Ok(())
}
