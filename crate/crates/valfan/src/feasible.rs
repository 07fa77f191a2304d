//! Exact rational linear feasibility by Fourier-Motzkin elimination.
//!
//! The one consumer is the strict positivity system behind the specialness
//! criterion: find `a > 0` with `N a > 0` for a symmetric matrix `N`. Both
//! strict systems are homogeneous, so feasibility is equivalent to the
//! closed system `a_i >= 1`, `(N a)_j >= 1`, which Fourier-Motzkin decides
//! exactly and with a witness.

use num_traits::{Signed, Zero};

use crate::exact::{rint, Rat};

/// One inequality `sum c_i x_i + d >= 0`.
#[derive(Debug, Clone)]
struct Row {
    coeffs: Vec<Rat>,
    constant: Rat,
}

/// Finds a rational point satisfying every row, or reports infeasibility.
///
/// Rows are weak inequalities; elimination proceeds from the last variable
/// to the first, and a satisfying assignment is rebuilt by back
/// substitution (midpoints of the surviving bounds).
fn feasible_point(nvars: usize, rows: Vec<Row>) -> Option<Vec<Rat>> {
    // systems[m] constrains variables x_0..x_{m-1}.
    let mut systems: Vec<Vec<Row>> = Vec::with_capacity(nvars + 1);
    systems.push(rows);
    for m in (1..=nvars).rev() {
        let current = systems.last().unwrap();
        let mut next: Vec<Row> = Vec::new();
        let mut lowers: Vec<&Row> = Vec::new();
        let mut uppers: Vec<&Row> = Vec::new();
        for row in current {
            let c = &row.coeffs[m - 1];
            if c.is_zero() {
                next.push(Row {
                    coeffs: row.coeffs[..m - 1].to_vec(),
                    constant: row.constant.clone(),
                });
            } else if c.is_positive() {
                lowers.push(row);
            } else {
                uppers.push(row);
            }
        }
        for lo in &lowers {
            for up in &uppers {
                // lo: x_m >= -(rest_lo)/c_lo, up: x_m <= -(rest_up)/c_up.
                // Combined: c_lo * rest_up - c_up * rest_lo >= 0 (c_up < 0).
                let cl = &lo.coeffs[m - 1];
                let cu = &up.coeffs[m - 1];
                let mut coeffs = Vec::with_capacity(m - 1);
                for i in 0..m - 1 {
                    coeffs.push(cl * &up.coeffs[i] - cu * &lo.coeffs[i]);
                }
                let constant = cl * &up.constant - cu * &lo.constant;
                next.push(Row { coeffs, constant });
            }
        }
        systems.push(next);
    }

    // Constant rows decide feasibility.
    if systems[nvars]
        .iter()
        .any(|row| row.constant.is_negative())
    {
        return None;
    }

    // Back-substitute, choosing midpoints of the remaining bounds.
    let mut assignment: Vec<Rat> = Vec::with_capacity(nvars);
    for m in 1..=nvars {
        let rows = &systems[nvars - m];
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for row in rows {
            let c = &row.coeffs[m - 1];
            if c.is_zero() {
                continue;
            }
            let mut rest = row.constant.clone();
            for (i, x) in assignment.iter().enumerate() {
                rest += &row.coeffs[i] * x;
            }
            let bound = -rest / c;
            if c.is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        let value = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "elimination guarantees consistent bounds");
                (l + u) / rint(2)
            }
            (Some(l), None) => l + rint(1),
            (None, Some(u)) => u - rint(1),
            (None, None) => Rat::zero(),
        };
        assignment.push(value);
    }
    Some(assignment)
}

/// Finds `a` with every `a_i > 0` and every `(N a)_j > 0`, exactly.
///
/// Returns `None` when the open system is infeasible. The empty system
/// (`N` of size 0) counts as infeasible: there is no effective divisor
/// with empty support.
pub fn strict_positivity_certificate(n: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let k = n.len();
    if k == 0 {
        return None;
    }
    let one = rint(1);
    let mut rows = Vec::with_capacity(2 * k);
    for i in 0..k {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs[i] = one.clone();
        rows.push(Row { coeffs, constant: -one.clone() });
    }
    for row in n {
        debug_assert_eq!(row.len(), k, "matrix must be square");
        rows.push(Row {
            coeffs: row.clone(),
            constant: -one.clone(),
        });
    }
    let a = feasible_point(k, rows)?;
    // The closed system's witness satisfies the open one.
    debug_assert!(a.iter().all(|x| x.is_positive()));
    debug_assert!(n.iter().all(|row| {
        row.iter()
            .zip(&a)
            .map(|(c, x)| c * x)
            .fold(Rat::zero(), |s, v| s + v)
            .is_positive()
    }));
    Some(a)
}
