//! Smith normal form diagonal of an integer matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::RatMat;
use crate::error::{Error, Result};

/// Elementary divisors `d_1 | d_2 | ... | d_r` followed by zeros, one entry per
/// diagonal position (`min(rows, cols)` entries in total).
pub fn elementary_divisors(m: &RatMat) -> Result<Vec<BigInt>> {
    if !m.is_integral() {
        return Err(Error::InvariantViolation(
            "elementary divisors need an integer matrix".into(),
        ));
    }
    Ok(smith_diagonal(m.to_int_rows()?))
}

#[allow(clippy::needless_range_loop)]
pub(crate) fn smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let size = rows.min(cols);
    let mut diag = Vec::with_capacity(size);

    for t in 0..size {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if a[r][c].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(br, bc)| a[r][c].abs() < a[br][bc].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else {
                // trailing block is zero
                diag.resize(size, BigInt::zero());
                return diag;
            };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }

            let mut clean = true;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].div_floor(&a[t][t]);
                for c in t..cols {
                    let v = &q * &a[t][c];
                    a[r][c] -= v;
                }
                if !a[r][t].is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].div_floor(&a[t][t]);
                for r in t..rows {
                    let v = &q * &a[r][t];
                    a[r][c] -= v;
                }
                if !a[t][c].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let pivot = a[t][t].clone();
            let offender =
                (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a[r][c].is_multiple_of(&pivot)));
            match offender {
                Some(r) => {
                    for c in t..cols {
                        let v = a[r][c].clone();
                        a[t][c] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}
