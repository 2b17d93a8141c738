//! Exact feasibility of homogeneous systems `aᵢ·x > 0`, `bⱼ·x = 0` over ℚ
//! by Fourier–Motzkin elimination in arbitrary-precision integers.
//!
//! Homogeneous systems suffice: affine constraints are lifted by a
//! homogenizing coordinate constrained to be positive.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A row of integer coefficients.
pub type Row = Vec<BigInt>;

/// Divides by the gcd of the entries, keeping signs; the zero row is unchanged.
pub fn primitive(row: &[BigInt]) -> Row {
    let g = row
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        row.to_vec()
    } else {
        row.iter().map(|v| v / &g).collect()
    }
}

fn is_zero_row(row: &[BigInt]) -> bool {
    row.iter().all(Zero::is_zero)
}

/// `pa·a + pb·b` for the given multipliers.
fn combine(a: &[BigInt], pa: &BigInt, b: &[BigInt], pb: &BigInt) -> Row {
    a.iter().zip(b).map(|(x, y)| pa * x + pb * y).collect()
}

/// Decides whether some `x ∈ ℚᵈ` satisfies every `strict` row with `> 0`
/// and every `equal` row with `= 0`. All rows must have the same length.
pub fn is_feasible(strict: &[Row], equal: &[Row]) -> bool {
    let mut strict: Vec<Row> = strict.iter().map(|r| primitive(r)).collect();
    let mut equal: Vec<Row> = equal.iter().map(|r| primitive(r)).collect();

    // Substitute away each equality using one of its nonzero coordinates.
    while let Some(eq) = equal.pop() {
        let Some(k) = eq.iter().position(|v| !v.is_zero()) else {
            continue;
        };
        // Orient the pivot positive so that multiplying other rows by it keeps their sense.
        let eq: Row = if eq[k].is_negative() {
            eq.iter().map(|v| -v).collect()
        } else {
            eq
        };
        let pivot = eq[k].clone();
        let eliminate = |row: &Row| -> Row {
            if row[k].is_zero() {
                row.clone()
            } else {
                let c = -row[k].clone();
                primitive(&combine(row, &pivot, &eq, &c))
            }
        };
        strict = strict.iter().map(eliminate).collect();
        equal = equal.iter().map(eliminate).collect();
    }

    let mut system = dedup(strict);
    loop {
        if system.iter().any(|r| is_zero_row(r)) {
            return false;
        }
        if system.is_empty() {
            return true;
        }
        let width = system[0].len();
        // Pick the coordinate whose elimination creates the fewest rows.
        let mut best: Option<(usize, usize)> = None;
        for k in 0..width {
            let pos = system.iter().filter(|r| r[k].is_positive()).count();
            let neg = system.iter().filter(|r| r[k].is_negative()).count();
            if pos + neg == 0 {
                continue;
            }
            let cost = pos * neg;
            if best.is_none_or(|(_, c)| cost < c) {
                best = Some((k, cost));
            }
        }
        let Some((k, _)) = best else {
            // Every row is zero, which was handled above.
            return system.is_empty();
        };
        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for row in system {
            if row[k].is_positive() {
                pos.push(row);
            } else if row[k].is_negative() {
                neg.push(row);
            } else {
                next.push(row);
            }
        }
        for p in &pos {
            for q in &neg {
                let row = combine(p, &(-q[k].clone()), q, &p[k]);
                next.push(primitive(&row));
            }
        }
        system = dedup(next);
    }
}

fn dedup(rows: Vec<Row>) -> Vec<Row> {
    let mut seen = HashSet::new();
    rows.into_iter().filter(|r| seen.insert(r.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(items: &[&[i64]]) -> Vec<Row> {
        items
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn positive_quadrant_is_feasible() {
        assert!(is_feasible(&rows(&[&[1, 0], &[0, 1]]), &[]));
    }

    #[test]
    fn contradictory_sums_are_infeasible() {
        // x > 0, y > 0, -(x + y) > 0
        assert!(!is_feasible(&rows(&[&[1, 0], &[0, 1], &[-1, -1]]), &[]));
    }

    #[test]
    fn opposite_forms_are_infeasible() {
        assert!(!is_feasible(&rows(&[&[1, 0], &[-1, 0]]), &[]));
    }

    #[test]
    fn equalities_restrict_the_space() {
        // x = y, x > 0, -y > 0
        assert!(!is_feasible(&rows(&[&[1, 0], &[0, -1]]), &rows(&[&[1, -1]])));
        // x = y, x > 0, y > 0
        assert!(is_feasible(&rows(&[&[1, 0], &[0, 1]]), &rows(&[&[1, -1]])));
        // x = 0 and x > 0
        assert!(!is_feasible(&rows(&[&[1, 0]]), &rows(&[&[2, 0]])));
    }

    #[test]
    fn zero_strict_row_is_infeasible() {
        assert!(!is_feasible(&rows(&[&[0, 0]]), &[]));
        assert!(is_feasible(&[], &rows(&[&[0, 0]])));
    }

    #[test]
    fn primitive_keeps_signs() {
        assert_eq!(primitive(&rows(&[&[-4, 6, 0]])[0]), rows(&[&[-2, 3, 0]])[0]);
    }

    /// Brute-force oracle: on a small integer grid a homogeneous strict
    /// system is feasible iff some integer point satisfies it (scaling any
    /// rational solution clears denominators), and small systems with small
    /// coefficients always have a solution in a modest box.
    #[test]
    fn agrees_with_grid_search() {
        let coeffs = [-2i64, -1, 0, 1, 2];
        let mut checked = 0;
        for a in coeffs {
            for b in coeffs {
                for c in coeffs {
                    for d in coeffs {
                        let system = rows(&[&[a, b], &[c, d], &[1, 1]]);
                        let grid = (-6i64..=6).any(|x| {
                            (-6i64..=6).any(|y| {
                                a * x + b * y > 0 && c * x + d * y > 0 && x + y > 0
                            })
                        });
                        assert_eq!(is_feasible(&system, &[]), grid, "{a} {b} {c} {d}");
                        checked += 1;
                    }
                }
            }
        }
        assert_eq!(checked, 625);
    }
}
