//! Exact phase-1 simplex over the rationals with Bland's anti-cycling rule.
//!
//! Only feasibility is ever needed here: "is there `x >= 0` with `Ax = b`?"
//! Both the convex-combination test for extreme points and the search for
//! separating evaluation points reduce to that question.

use num_traits::{One, Signed, Zero};

use crate::exactmath::Rational;

/// Returns some `x >= 0` with `a x = b`, or `None` when no such `x` exists.
///
/// `a` is given row-wise; every row must have the same length.
pub fn feasible_point(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let m = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|row| row.len() == cols), "ragged constraint matrix");
    if m == 0 {
        return Some(vec![Rational::zero(); cols]);
    }

    // Tableau [A | I | b] with rows normalised to b >= 0; artificials start basic.
    let width = cols + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut t = Vec::with_capacity(width);
        for v in row {
            t.push(if flip { -v } else { v.clone() });
        }
        for j in 0..m {
            t.push(if i == j { Rational::one() } else { Rational::zero() });
        }
        t.push(if flip { -rhs } else { rhs.clone() });
        tab.push(t);
    }
    let mut basis: Vec<usize> = (cols..cols + m).collect();

    // Reduced costs of "minimise the sum of artificials", last entry = -objective.
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..cols {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    while let Some(enter) = (0..cols + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase 1 is bounded below by zero, so an improving column always has a pivot.
        let (pr, _) = leave.expect("phase-1 objective is bounded");
        pivot(&mut tab, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &var) in basis.iter().enumerate() {
        if var < cols {
            x[var] = tab[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for v in tab[pr].iter_mut() {
        *v *= &inv;
    }
    let pivot_row = tab[pr].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
    }
}

/// Whether `target` is a convex combination of `others`.
pub fn in_convex_hull(others: &[Vec<Rational>], target: &[Rational]) -> bool {
    if others.is_empty() {
        return false;
    }
    let dim = target.len();
    // Rows: one per coordinate plus the weight-sum row; columns: one per point.
    let mut a = vec![Vec::with_capacity(others.len()); dim + 1];
    for p in others {
        assert_eq!(p.len(), dim, "dimension mismatch");
        for (k, v) in p.iter().enumerate() {
            a[k].push(v.clone());
        }
        a[dim].push(Rational::one());
    }
    let mut b = target.to_vec();
    b.push(Rational::one());
    feasible_point(&a, &b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn finds_a_feasible_point() {
        let a = vec![row(&[1, 1, 0]), row(&[0, 1, 1])];
        let b = row(&[2, 3]);
        let x = feasible_point(&a, &b).unwrap();
        assert!(x.iter().all(|v| !v.is_negative()));
        assert_eq!(&x[0] + &x[1], int(2));
        assert_eq!(&x[1] + &x[2], int(3));
    }

    #[test]
    fn detects_infeasibility() {
        // x + y = -1 has no non-negative solution.
        assert!(feasible_point(&[row(&[1, 1])], &row(&[-1])).is_none());
        // x = 1 and x = 2.
        assert!(feasible_point(&[row(&[1]), row(&[1])], &row(&[1, 2])).is_none());
    }

    #[test]
    fn negative_rhs_rows_are_normalised() {
        let x = feasible_point(&[row(&[-1, 1])], &row(&[-3])).unwrap();
        assert_eq!(&x[1] - &x[0], int(-3));
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Highly degenerate: many zero right-hand sides.
        let a = vec![
            row(&[1, -1, 0, 0]),
            row(&[0, 1, -1, 0]),
            row(&[0, 0, 1, -1]),
            row(&[1, 1, 1, 1]),
        ];
        let b = row(&[0, 0, 0, 4]);
        let x = feasible_point(&a, &b).unwrap();
        assert_eq!(x, row(&[1, 1, 1, 1]));
    }

    #[test]
    fn convex_hull_membership() {
        let pts = vec![row(&[0, 0]), row(&[2, 0]), row(&[0, 2])];
        assert!(in_convex_hull(&pts, &row(&[1, 1])));
        assert!(in_convex_hull(&pts, &[rat(1, 3), rat(1, 3)]));
        assert!(!in_convex_hull(&pts, &row(&[2, 2])));
        assert!(!in_convex_hull(&[], &row(&[0, 0])));
    }
}
