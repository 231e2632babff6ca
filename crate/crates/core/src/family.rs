//! Interval vectors, the interval-vector polytope families, the complete root
//! polytope, and the lower-triangular transform relating them.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::IntVec;
use crate::polytope::LatticePolytope;

/// The vector `alpha(i, j) = e_i + ... + e_j` in `R^n`, or the zero vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntervalVector {
    n: usize,
    span: Option<(usize, usize)>,
}

impl IntervalVector {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if i < 1 || i > j || j > n {
            return Err(Error::InvalidInterval { n, i, j });
        }
        Ok(Self {
            n,
            span: Some((i, j)),
        })
    }

    pub fn zero(n: usize) -> Self {
        Self { n, span: None }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based endpoints, `None` for the zero vector.
    pub fn span(&self) -> Option<(usize, usize)> {
        self.span
    }

    /// Number of ones.
    pub fn length(&self) -> usize {
        self.span.map_or(0, |(i, j)| j - i + 1)
    }

    pub fn to_intvec(&self) -> IntVec {
        let mut coords = vec![BigInt::zero(); self.n];
        if let Some((i, j)) = self.span {
            for c in &mut coords[i - 1..j] {
                *c = BigInt::one();
            }
        }
        IntVec::new(coords)
    }

    /// Recognizes a 0/1 vector with consecutive ones.
    pub fn from_intvec(v: &IntVec) -> Option<Self> {
        let n = v.n();
        let ones: Vec<usize> = (0..n).filter(|&k| v[k].is_one()).collect();
        if ones.len() + (0..n).filter(|&k| v[k].is_zero()).count() != n {
            return None;
        }
        match (ones.first(), ones.last()) {
            (None, _) | (_, None) => Some(Self::zero(n)),
            (Some(&a), Some(&b)) if b - a + 1 == ones.len() => Self::new(n, a + 1, b + 1).ok(),
            _ => None,
        }
    }
}

impl fmt::Display for IntervalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.span {
            Some((i, j)) => write!(f, "alpha({i},{j})"),
            None => write!(f, "0"),
        }
    }
}

/// Shorthand for [`IntervalVector::new`].
pub fn make_interval_vector(n: usize, i: usize, j: usize) -> Result<IntervalVector> {
    IntervalVector::new(n, i, j)
}

/// A family of interval vectors: all intervals of `R^n` whose length lies in
/// `lengths`, optionally together with the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub n: usize,
    pub lengths: BTreeSet<usize>,
    pub include_origin: bool,
}

impl FamilySpec {
    pub fn new(
        n: usize,
        lengths: impl IntoIterator<Item = usize>,
        include_origin: bool,
    ) -> Result<Self> {
        let spec = Self {
            n,
            lengths: lengths.into_iter().collect(),
            include_origin,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// All interval lengths `1..=n`.
    pub fn complete(n: usize, include_origin: bool) -> Result<Self> {
        Self::new(n, 1..=n, include_origin)
    }

    /// Intervals of length exactly `i`.
    pub fn fixed(n: usize, i: usize) -> Result<Self> {
        Self::new(n, [i], false)
    }

    /// Intervals of length 1 or `n - i`.
    pub fn pyramidal(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i >= n {
            return Err(Error::InvalidSpec(format!(
                "pyramidal family needs 1 <= i < n (got n={n}, i={i})"
            )));
        }
        Self::new(n, [1, n - i], false)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec(
                "ambient dimension must be positive".into(),
            ));
        }
        if self.lengths.is_empty() {
            return Err(Error::InvalidSpec("length set is empty".into()));
        }
        if let Some(&bad) = self.lengths.iter().find(|&&s| s == 0 || s > self.n) {
            return Err(Error::InvalidSpec(format!(
                "length {bad} outside 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    /// Every interval vector of the family, ordered by length then start.
    pub fn interval_vectors(&self) -> Vec<IntervalVector> {
        let mut out = Vec::new();
        if self.include_origin {
            out.push(IntervalVector::zero(self.n));
        }
        for &s in &self.lengths {
            for i in 1..=self.n + 1 - s {
                out.push(IntervalVector {
                    n: self.n,
                    span: Some((i, i + s - 1)),
                });
            }
        }
        out
    }

    pub fn generators(&self) -> Vec<IntVec> {
        self.interval_vectors()
            .iter()
            .map(IntervalVector::to_intvec)
            .collect()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.lengths.iter().map(ToString::to_string).collect();
        write!(f, "P_{}(I_{{{}}})", self.n, s.join(","))?;
        if self.include_origin {
            write!(f, " + origin")?;
        }
        Ok(())
    }
}

/// Convex hull of the family, with redundant generators removed.
pub fn build_family(spec: &FamilySpec) -> Result<LatticePolytope> {
    spec.validate()?;
    LatticePolytope::from_generators(spec.n, spec.generators())
}

/// Generators `0` and `e_i - e_j` (`i < j`) of the complete root polytope.
pub fn root_polytope_generators(n: usize) -> Result<Vec<IntVec>> {
    if n < 2 {
        return Err(Error::InvalidDimension {
            n,
            reason: "root polytope needs n >= 2",
        });
    }
    let mut gens = vec![IntVec::zeros(n)];
    for i in 1..=n {
        for j in i + 1..=n {
            gens.push(IntVec::unit(n, i).sub(&IntVec::unit(n, j)));
        }
    }
    Ok(gens)
}

pub fn build_root_polytope(n: usize) -> Result<LatticePolytope> {
    LatticePolytope::from_generators(n, root_polytope_generators(n)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// The `n x n` lower-triangular all-ones matrix and its inverse.
///
/// Forward maps `x` to its prefix sums, so `e_i -> alpha(i, n)` and
/// `e_i - e_j -> alpha(i, j - 1)`. Its determinant is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniTransform {
    pub n: usize,
}

impl UniTransform {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn apply(&self, v: &IntVec, dir: Direction) -> Result<IntVec> {
        if v.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.n(),
            });
        }
        let c = v.coords();
        let out = match dir {
            Direction::Forward => c
                .iter()
                .scan(BigInt::zero(), |acc, x| {
                    *acc += x;
                    Some(acc.clone())
                })
                .collect(),
            Direction::Inverse => (0..self.n)
                .map(|k| {
                    if k == 0 {
                        c[0].clone()
                    } else {
                        &c[k] - &c[k - 1]
                    }
                })
                .collect(),
        };
        Ok(IntVec::new(out))
    }

    /// Entry `t_{r,c}` of the matrix, 1-based.
    pub fn entry(&self, r: usize, c: usize) -> i64 {
        i64::from(r >= c)
    }
}

pub fn apply_t(v: &IntVec, dir: Direction) -> Result<IntVec> {
    UniTransform::new(v.n()).apply(v, dir)
}

/// The isomorphism between `Z^n ∩ {sum x = 0}` and `Z^(n-1)`: apply the
/// prefix-sum transform, then drop the last coordinate (zero on that
/// subspace). The inverse restores the last coordinate so the sum vanishes.
pub fn lattice_bijection(x: &IntVec, dir: Direction) -> Result<IntVec> {
    match dir {
        Direction::Forward => {
            let sum = x.sum();
            if !sum.is_zero() {
                return Err(Error::NotInZeroSumSubspace {
                    sum: sum.to_string(),
                });
            }
            if x.n() == 0 {
                return Err(Error::InvalidDimension {
                    n: 0,
                    reason: "zero-sum subspace needs n >= 1",
                });
            }
            let t = apply_t(x, Direction::Forward)?;
            let mut coords = t.into_coords();
            coords.pop();
            Ok(IntVec::new(coords))
        }
        Direction::Inverse => {
            let mut coords = x.coords().to_vec();
            coords.push(BigInt::zero());
            apply_t(&IntVec::new(coords), Direction::Inverse)
        }
    }
}

/// Zero, a unit vector `e_i`, or a difference `e_i - e_j` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ElementaryKind {
    Zero,
    Unit(usize),
    Diff(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementaryVector {
    pub n: usize,
    pub kind: ElementaryKind,
}

impl ElementaryVector {
    /// Classifies an integer vector; `None` if it is not elementary.
    pub fn classify(v: &IntVec) -> Option<Self> {
        let n = v.n();
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for k in 0..n {
            let x = &v[k];
            if x.is_one() {
                plus.push(k + 1);
            } else if *x == -BigInt::one() {
                minus.push(k + 1);
            } else if !x.is_zero() {
                return None;
            }
        }
        let kind = match (plus.as_slice(), minus.as_slice()) {
            ([], []) => ElementaryKind::Zero,
            ([i], []) => ElementaryKind::Unit(*i),
            ([i], [j]) if i < j => ElementaryKind::Diff(*i, *j),
            _ => return None,
        };
        Some(Self { n, kind })
    }

    pub fn to_intvec(&self) -> IntVec {
        match self.kind {
            ElementaryKind::Zero => IntVec::zeros(self.n),
            ElementaryKind::Unit(i) => IntVec::unit(self.n, i),
            ElementaryKind::Diff(i, j) => IntVec::unit(self.n, i).sub(&IntVec::unit(self.n, j)),
        }
    }
}

impl fmt::Display for ElementaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ElementaryKind::Zero => write!(f, "0"),
            ElementaryKind::Unit(i) => write!(f, "e{i}"),
            ElementaryKind::Diff(i, j) => write!(f, "e{i}-e{j}"),
        }
    }
}

/// Preimages of the family's interval vectors under the prefix-sum transform,
/// sorted and deduplicated.
pub fn elementary_set(spec: &FamilySpec) -> Result<Vec<ElementaryVector>> {
    spec.validate()?;
    let t = UniTransform::new(spec.n);
    let mut out = BTreeSet::new();
    for g in spec.generators() {
        let pre = t.apply(&g, Direction::Inverse)?;
        let ev = ElementaryVector::classify(&pre).ok_or_else(|| {
            Error::InternalConsistency(format!("preimage {pre:?} is not elementary"))
        })?;
        out.insert(ev);
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> IntVec {
        IntVec::from_i64s(c)
    }

    #[test]
    fn interval_vector_realization() {
        assert_eq!(
            make_interval_vector(5, 1, 3).unwrap().to_intvec(),
            v(&[1, 1, 1, 0, 0])
        );
        assert_eq!(
            make_interval_vector(4, 2, 4).unwrap().to_intvec(),
            v(&[0, 1, 1, 1])
        );
        for n in 1..6 {
            for k in 1..=n {
                let iv = make_interval_vector(n, k, k).unwrap();
                assert_eq!(iv.to_intvec(), IntVec::unit(n, k));
                assert_eq!(iv.length(), 1);
            }
        }
    }

    #[test]
    fn invalid_intervals() {
        assert!(matches!(
            make_interval_vector(4, 3, 2),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(matches!(
            make_interval_vector(4, 0, 2),
            Err(Error::InvalidInterval { .. })
        ));
        assert!(matches!(
            make_interval_vector(4, 2, 5),
            Err(Error::InvalidInterval { .. })
        ));
    }

    #[test]
    fn interval_vector_recognition() {
        assert_eq!(
            IntervalVector::from_intvec(&v(&[0, 1, 1, 0])),
            Some(make_interval_vector(4, 2, 3).unwrap())
        );
        assert_eq!(IntervalVector::from_intvec(&v(&[1, 0, 1])), None);
        assert_eq!(IntervalVector::from_intvec(&v(&[0, 2, 0])), None);
        assert_eq!(
            IntervalVector::from_intvec(&v(&[0, 0])),
            Some(IntervalVector::zero(2))
        );
    }

    #[test]
    fn family_spec_validation() {
        assert!(FamilySpec::new(4, [], false).is_err());
        assert!(FamilySpec::new(4, [0], false).is_err());
        assert!(FamilySpec::new(4, [5], false).is_err());
        assert!(FamilySpec::pyramidal(4, 4).is_err());
        assert!(FamilySpec::pyramidal(4, 0).is_err());
    }

    #[test]
    fn generator_counts() {
        for n in 1..8 {
            for mask in 1u32..(1 << n) {
                let s: Vec<usize> = (1..=n).filter(|&k| mask & (1 << (k - 1)) != 0).collect();
                let expected: usize = s.iter().map(|&k| n - k + 1).sum();
                let spec = FamilySpec::new(n, s.clone(), false).unwrap();
                assert_eq!(spec.generators().len(), expected);
                let spec = FamilySpec::new(n, s, true).unwrap();
                assert_eq!(spec.generators().len(), expected + 1);
            }
        }
    }

    #[test]
    fn transform_examples() {
        assert_eq!(
            apply_t(&IntVec::unit(4, 2), Direction::Forward).unwrap(),
            v(&[0, 1, 1, 1])
        );
        assert_eq!(
            apply_t(&v(&[1, 0, -1, 0]), Direction::Forward).unwrap(),
            v(&[1, 1, 0, 0])
        );
        assert_eq!(
            apply_t(&v(&[0, 1, 1, 1]), Direction::Inverse).unwrap(),
            IntVec::unit(4, 2)
        );
    }

    #[test]
    fn bijection_examples() {
        let n = 5;
        for i in 1..n {
            let x = IntVec::unit(n, i).sub(&IntVec::unit(n, n));
            let mut expected = vec![0i64; n - 1];
            for c in &mut expected[i - 1..] {
                *c = 1;
            }
            assert_eq!(
                lattice_bijection(&x, Direction::Forward).unwrap(),
                v(&expected)
            );
        }
        assert_eq!(
            lattice_bijection(&IntVec::zeros(4), Direction::Forward).unwrap(),
            IntVec::zeros(3)
        );
        assert!(matches!(
            lattice_bijection(&v(&[1, 0, 0]), Direction::Forward),
            Err(Error::NotInZeroSumSubspace { .. })
        ));
    }

    #[test]
    fn elementary_set_of_fixed_family() {
        let spec = FamilySpec::fixed(5, 3).unwrap();
        let kinds: Vec<ElementaryKind> = elementary_set(&spec)
            .unwrap()
            .iter()
            .map(|e| e.kind)
            .collect();
        assert_eq!(
            kinds,
            vec![
                ElementaryKind::Unit(3),
                ElementaryKind::Diff(1, 4),
                ElementaryKind::Diff(2, 5)
            ]
        );
    }

    #[test]
    fn elementary_set_general_fixed_formula() {
        for n in 1..9 {
            for i in 1..=n {
                let spec = FamilySpec::fixed(n, i).unwrap();
                let got: BTreeSet<ElementaryKind> = elementary_set(&spec)
                    .unwrap()
                    .iter()
                    .map(|e| e.kind)
                    .collect();
                let mut want: BTreeSet<ElementaryKind> = (1..=n - i)
                    .map(|k| ElementaryKind::Diff(k, k + i))
                    .collect();
                want.insert(ElementaryKind::Unit(n - i + 1));
                assert_eq!(got, want, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn elementary_set_first_pyramidal() {
        // preimages of e1..e4, alpha(1,3), alpha(2,4), classified by hand
        let spec = FamilySpec::new(4, [1, 3], false).unwrap();
        let kinds: BTreeSet<ElementaryKind> = elementary_set(&spec)
            .unwrap()
            .iter()
            .map(|e| e.kind)
            .collect();
        let want: BTreeSet<ElementaryKind> = [
            ElementaryKind::Diff(1, 2),
            ElementaryKind::Diff(2, 3),
            ElementaryKind::Diff(3, 4),
            ElementaryKind::Unit(4),
            ElementaryKind::Diff(1, 4),
            ElementaryKind::Unit(2),
        ]
        .into_iter()
        .collect();
        assert_eq!(kinds, want);
    }

    #[test]
    fn origin_gives_zero_elementary() {
        let spec = FamilySpec::complete(3, true).unwrap();
        let set = elementary_set(&spec).unwrap();
        assert!(set.iter().any(|e| e.kind == ElementaryKind::Zero));
    }

    #[test]
    fn every_interval_preimage_is_elementary() {
        for n in 1..=8 {
            let t = UniTransform::new(n);
            for i in 1..=n {
                for j in i..=n {
                    let a = make_interval_vector(n, i, j).unwrap().to_intvec();
                    let pre = t.apply(&a, Direction::Inverse).unwrap();
                    let ev = ElementaryVector::classify(&pre).expect("elementary");
                    let want = if j == n {
                        ElementaryKind::Unit(i)
                    } else {
                        ElementaryKind::Diff(i, j + 1)
                    };
                    assert_eq!(ev.kind, want);
                    assert_eq!(ev.to_intvec(), pre);
                }
            }
        }
    }
}
