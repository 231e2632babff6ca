//! Exact feasibility of `A x = b, x >= 0` by a phase-one simplex over the
//! rationals. Bland's rule keeps it from cycling.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::RatMat;
use crate::error::{Error, Result};

/// Returns a nonnegative solution of `A x = b` or `None` if there is none.
pub fn nonnegative_solution(a: &RatMat, b: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
    let m = a.rows();
    let n = a.cols();
    if b.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: b.len(),
        });
    }

    // tableau columns: n structural, m artificial, then rhs
    let width = n + m + 1;
    let mut tab: Vec<Vec<BigRational>> = (0..m)
        .map(|r| {
            let flip = b[r].is_negative();
            let mut row = Vec::with_capacity(width);
            for c in 0..n {
                let v = a[(r, c)].clone();
                row.push(if flip { -v } else { v });
            }
            for k in 0..m {
                row.push(if k == r {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            row.push(if flip { -b[r].clone() } else { b[r].clone() });
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of the phase-one objective (sum of artificials)
    let mut cost = vec![BigRational::zero(); width];
    for row in &tab {
        for c in 0..n {
            cost[c] -= &row[c];
        }
        cost[width - 1] -= &row[width - 1];
    }

    while let Some(enter) = (0..n + m).find(|&c| cost[c].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..m {
            if !tab[r][enter].is_positive() {
                continue;
            }
            let ratio = &tab[r][width - 1] / &tab[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, lratio)) => {
                    ratio < *lratio || (ratio == *lratio && basis[r] < basis[*lr])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        let Some((pr, _)) = leave else {
            // unbounded direction cannot occur in phase one
            return Err(Error::InternalConsistency(
                "phase-one simplex unbounded".into(),
            ));
        };
        pivot(&mut tab, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    if !cost[width - 1].is_zero() {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = tab[r][width - 1].clone();
        }
    }
    Ok(Some(x))
}

fn pivot(tab: &mut [Vec<BigRational>], cost: &mut [BigRational], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for v in tab[pr].iter_mut() {
        *v *= &inv;
    }
    let prow = tab[pr].clone();
    for (r, row) in tab.iter_mut().enumerate() {
        if r == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (v, p) in row.iter_mut().zip(&prow) {
            *v -= &f * p;
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, p) in cost.iter_mut().zip(&prow) {
            *v -= &f * p;
        }
    }
}
