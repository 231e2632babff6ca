//! Exact integer and rational linear algebra used by every other module.
//!
//! Nothing here touches floating point. Integer vectors are arbitrary
//! precision; hot loops elsewhere narrow them to machine integers with
//! checked conversions.

mod feasibility;
mod matrix;
pub(crate) mod small;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use feasibility::nonnegative_solution;
pub use matrix::RatMat;
pub use snf::elementary_divisors;

pub(crate) use matrix::bareiss_rank;

/// A point of `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(coords: Vec<BigInt>) -> Self {
        Self(coords)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![BigInt::zero(); n])
    }

    /// The unit vector `e_k`, 1-based.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k - 1] = BigInt::one();
        v
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn dot(&self, other: &IntVec) -> BigInt {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_i64s(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|x| x.to_i64().ok_or(Error::Overflow("coordinate narrowing")))
            .collect()
    }
}

impl std::ops::Index<usize> for IntVec {
    type Output = BigInt;
    fn index(&self, k: usize) -> &BigInt {
        &self.0[k]
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// One linear constraint `normal . x (op) rhs` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub normal: IntVec,
    pub rhs: BigInt,
}

impl Constraint {
    pub fn eval(&self, p: &IntVec) -> BigInt {
        self.normal.dot(p)
    }
}

/// Affine hull of a point set as a dimension plus a canonical equation basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineHull {
    pub n: usize,
    pub dim: usize,
    pub equations: Vec<Constraint>,
    /// Basis of the direction space, as integer rows in reduced echelon shape.
    pub directions: Vec<IntVec>,
}

impl AffineHull {
    pub fn contains(&self, p: &IntVec) -> bool {
        self.equations.iter().all(|e| e.eval(p) == e.rhs)
    }
}

fn ratio_row_to_primitive(row: &[BigRational]) -> IntVec {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    primitive(IntVec(ints))
}

/// Divides out the content and makes the first nonzero entry positive.
pub fn primitive(v: IntVec) -> IntVec {
    let g = v.0.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let first_neg =
        v.0.iter()
            .find(|x| !x.is_zero())
            .is_some_and(Signed::is_negative);
    let g = if first_neg { -g } else { g };
    IntVec(v.0.into_iter().map(|x| x / &g).collect())
}

/// Row space basis of `rows` in canonical (reduced echelon, primitive) form.
pub(crate) fn canonical_row_basis(rows: &[IntVec], n: usize) -> Vec<IntVec> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = RatMat::from_fn(rows.len(), n, |r, c| {
        BigRational::from_integer(rows[r][c].clone())
    });
    let (red, pivots) = m.rref();
    (0..pivots.len())
        .map(|r| ratio_row_to_primitive(red.row(r)))
        .collect()
}

fn check_same_dim(points: &[IntVec]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput("point list"))?;
    let n = first.n();
    if let Some(bad) = points.iter().find(|p| p.n() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.n(),
        });
    }
    Ok(n)
}

/// Affine hull of a nonempty point set.
///
/// Equations form the reduced echelon basis of the orthogonal complement of
/// the direction space, each scaled to a primitive integer normal with
/// positive leading entry, so the result does not depend on input order.
pub fn affine_hull(points: &[IntVec]) -> Result<AffineHull> {
    let n = check_same_dim(points)?;
    let base = &points[0];
    let diffs: Vec<IntVec> = points[1..].iter().map(|p| p.sub(base)).collect();
    let directions = canonical_row_basis(&diffs, n);
    let dim = directions.len();

    let dir_mat = RatMat::from_fn(dim, n, |r, c| {
        BigRational::from_integer(directions[r][c].clone())
    });
    let normals: Vec<IntVec> = if dim == 0 {
        (1..=n).map(|k| IntVec::unit(n, k)).collect()
    } else {
        dir_mat
            .nullspace()
            .iter()
            .map(|v| ratio_row_to_primitive(v))
            .collect()
    };
    let normals = canonical_row_basis(&normals, n);
    let equations = normals
        .into_iter()
        .map(|normal| {
            let rhs = normal.dot(base);
            Constraint { normal, rhs }
        })
        .collect();
    Ok(AffineHull {
        n,
        dim,
        equations,
        directions,
    })
}

/// Dimension of the affine hull, computed by fraction-free elimination.
pub fn affine_dim(points: &[IntVec]) -> Result<usize> {
    check_same_dim(points)?;
    let base = &points[0];
    let rows: Vec<Vec<BigInt>> = points[1..].iter().map(|p| p.sub(base).0).collect();
    Ok(bareiss_rank(&rows))
}

/// Whether the origin is an affine combination of the points.
pub fn origin_in_affine_hull(points: &[IntVec]) -> Result<bool> {
    let hull = affine_hull(points)?;
    Ok(hull.equations.iter().all(|e| e.rhs.is_zero()))
}

/// Exact determinant of a square rational matrix.
pub fn det_exact(m: &RatMat) -> Result<BigRational> {
    m.det()
}

/// Coefficients `lambda >= 0`, summing to one, with `sum lambda_k p_k = target`.
pub fn convex_combination(points: &[IntVec], target: &IntVec) -> Result<Option<Vec<BigRational>>> {
    let n = check_same_dim(points)?;
    if target.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: target.n(),
        });
    }
    let m = points.len();
    let a = RatMat::from_fn(n + 1, m, |r, c| {
        if r < n {
            BigRational::from_integer(points[c][r].clone())
        } else {
            BigRational::one()
        }
    });
    let mut b: Vec<BigRational> = target
        .coords()
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect();
    b.push(BigRational::one());
    nonnegative_solution(&a, &b)
}

/// Integer matrix whose columns are `points[k] - points[0]` for `k >= 1`.
pub fn edge_matrix(points: &[IntVec]) -> Result<RatMat> {
    let n = check_same_dim(points)?;
    let base = &points[0];
    let cols: Vec<IntVec> = points[1..].iter().map(|p| p.sub(base)).collect();
    Ok(RatMat::from_fn(n, cols.len(), |r, c| {
        BigRational::from_integer(cols[c][r].clone())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(rows: &[&[i64]]) -> Vec<IntVec> {
        rows.iter().map(|r| IntVec::from_i64s(r)).collect()
    }

    #[test]
    fn standard_basis_hull() {
        let n = 4;
        let points: Vec<IntVec> = (1..=n).map(|k| IntVec::unit(n, k)).collect();
        let hull = affine_hull(&points).unwrap();
        assert_eq!(hull.dim, n - 1);
        assert_eq!(hull.equations.len(), 1);
        assert_eq!(hull.equations[0].normal, IntVec::from_i64s(&[1, 1, 1, 1]));
        assert_eq!(hull.equations[0].rhs, BigInt::one());
    }

    #[test]
    fn single_point_hull() {
        let hull = affine_hull(&pts(&[&[3, -1, 2]])).unwrap();
        assert_eq!(hull.dim, 0);
        assert_eq!(hull.equations.len(), 3);
        assert!(hull.contains(&IntVec::from_i64s(&[3, -1, 2])));
        assert!(!hull.contains(&IntVec::from_i64s(&[3, -1, 1])));
    }

    #[test]
    fn empty_input_is_error() {
        assert_eq!(affine_hull(&[]), Err(Error::EmptyInput("point list")));
        assert_eq!(
            origin_in_affine_hull(&[]),
            Err(Error::EmptyInput("point list"))
        );
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let points = vec![IntVec::zeros(2), IntVec::zeros(3)];
        assert!(matches!(
            affine_hull(&points),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn origin_membership() {
        // coordinate sum is 3 on every point
        let fixed = pts(&[&[1, 1, 1, 0, 0], &[0, 1, 1, 1, 0], &[0, 0, 1, 1, 1]]);
        assert!(!origin_in_affine_hull(&fixed).unwrap());
        // (e1 + e2 + e3 - alpha_{1,3}) / 2 = 0 with weights summing to one
        let pyr = pts(&[
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 1, 1, 0],
            &[0, 1, 1, 1],
        ]);
        assert!(origin_in_affine_hull(&pyr).unwrap());
        assert!(origin_in_affine_hull(&[IntVec::zeros(3)]).unwrap());
    }

    #[test]
    fn origin_membership_matches_direct_solve() {
        let pyr = pts(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 1, 1, 0]]);
        // solve sum lambda_k p_k = 0, sum lambda_k = 1
        let a = RatMat::from_fn(5, 4, |r, c| {
            if r < 4 {
                BigRational::from_integer(pyr[c][r].clone())
            } else {
                BigRational::one()
            }
        });
        let mut b = vec![BigRational::zero(); 4];
        b.push(BigRational::one());
        let sol = a.solve(&b).unwrap().unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(sol, vec![half.clone(), half.clone(), half.clone(), -half]);
    }

    #[test]
    fn fixed_family_hull_dim() {
        let fixed = pts(&[&[1, 1, 1, 0, 0], &[0, 1, 1, 1, 0], &[0, 0, 1, 1, 1]]);
        let hull = affine_hull(&fixed).unwrap();
        assert_eq!(hull.dim, 2);
        assert_eq!(hull.equations.len(), 3);
        for p in &fixed {
            assert!(hull.contains(p));
        }
        assert_eq!(affine_dim(&fixed).unwrap(), 2);
    }

    #[test]
    fn convex_combination_membership() {
        let square = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(convex_combination(&square, &IntVec::from_i64s(&[1, 1]))
            .unwrap()
            .is_some());
        assert!(convex_combination(&square, &IntVec::from_i64s(&[2, 0]))
            .unwrap()
            .is_none());
        let tri = pts(&[&[0, 0], &[2, 0], &[0, 2]]);
        let lam = convex_combination(&tri, &IntVec::from_i64s(&[1, 1]))
            .unwrap()
            .unwrap();
        assert_eq!(lam.iter().sum::<BigRational>(), BigRational::one());
    }

    #[test]
    fn primitive_normalizes_sign_and_content() {
        assert_eq!(
            primitive(IntVec::from_i64s(&[0, -2, 4, 6])),
            IntVec::from_i64s(&[0, 1, -2, -3])
        );
        assert_eq!(primitive(IntVec::zeros(3)), IntVec::zeros(3));
    }
}
