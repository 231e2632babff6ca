//! Checked `i128` kernels for the inner loops of facet search and face
//! ranking. Any overflow surfaces as [`Error::Overflow`].

use crate::error::{Error, Result};

fn ck(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow("small-integer elimination"))
}

/// Bareiss determinant of a square matrix; consumes the scratch rows.
pub(crate) fn det(a: &mut [Vec<i128>]) -> Result<i128> {
    let n = a.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = ck(a[i][j].checked_mul(a[k][k]))?;
                let y = ck(a[i][k].checked_mul(a[k][j]))?;
                a[i][j] = ck(x.checked_sub(y))? / prev;
            }
        }
        prev = a[k][k];
    }
    ck(sign.checked_mul(a[n - 1][n - 1]))
}

/// Rank by fraction-free elimination.
pub(crate) fn rank(rows: &[Vec<i128>]) -> Result<usize> {
    let mut a = rows.to_vec();
    let m = a.len();
    let Some(cols) = a.first().map(Vec::len) else {
        return Ok(0);
    };
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..m {
            for j in c + 1..cols {
                let x = ck(a[i][j].checked_mul(a[r][c]))?;
                let y = ck(a[i][c].checked_mul(a[r][j]))?;
                a[i][j] = ck(x.checked_sub(y))? / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
    }
    Ok(r)
}

/// Vector orthogonal to the `d - 1` rows of a `(d-1) x d` matrix, built from
/// signed maximal minors. Zero exactly when the rows are dependent.
pub(crate) fn cross(rows: &[Vec<i128>], d: usize) -> Result<Vec<i128>> {
    let mut out = Vec::with_capacity(d);
    for k in 0..d {
        let mut minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != k)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let m = det(&mut minor)?;
        out.push(if k % 2 == 0 { m } else { ck(m.checked_neg())? });
    }
    Ok(out)
}

pub(crate) fn dot(a: &[i128], b: &[i128]) -> Result<i128> {
    a.iter().zip(b).try_fold(0i128, |acc, (x, y)| {
        ck(x.checked_mul(*y)).and_then(|p| ck(acc.checked_add(p)))
    })
}

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
