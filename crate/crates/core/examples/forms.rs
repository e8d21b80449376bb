//! Linear forms in the coefficient indeterminates and functions in the
//! `x_k = r^k - r^{k+1}` basis.

use sgraph::exactmath::{int, rat, FunctionVector, LinearForm};

fn main() -> sgraph::Result<()> {
    let a: LinearForm = "c1+c2-c3".parse()?;
    let b = LinearForm::var(3).scale(&rat(1, 2));
    println!("a = {a}, b = {b}, a + b = {}", &a + &b);

    // c1 (r^1 - r^4) + (c2 - c3)(r^2 - r^3)
    let f = &FunctionVector::r_difference(3, 1, 4, &LinearForm::var(1))
        + &FunctionVector::r_difference(3, 2, 3, &"c2-c3".parse()?);
    println!("f = ({f})");
    assert_eq!(f, "c1; c1+c2-c3; c1".parse()?);

    let c = [int(1), int(4), int(2)];
    println!("f at c = (1,4,2): {:?}", f.evaluate(&c)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    let b = [int(3), int(2), int(1), int(0)];
    println!("value at r(b) = (3,2,1,0): {}", f.evaluate_at(&c, &b)?);
    Ok(())
}
