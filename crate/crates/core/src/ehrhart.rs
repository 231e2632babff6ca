//! Lattice-point counting in dilates, Ehrhart polynomials, normalized
//! volumes, unimodularity, and the integer decomposition over the fixed
//! family's lattice basis.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::make_interval_vector;
use crate::hull::HRep;
use crate::lattice::{self, IntVec};
use crate::polytope::LatticePolytope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CountStrategy {
    /// Test every point of the dilated bounding box against the facets.
    BoundingBox,
    /// Walk coordinates in order, bounding each one by the facets of the
    /// projection onto the coordinates fixed so far.
    #[default]
    FiberPruned,
}

/// Constraint rows narrowed to machine integers: `a . x <= t*b` or `== t*b`.
#[derive(Clone, Debug)]
struct SmallHRep {
    ineq: Vec<(Vec<i128>, i128)>,
    eq: Vec<(Vec<i128>, i128)>,
}

impl SmallHRep {
    fn from_hrep(h: &HRep) -> Result<Self> {
        let conv = |c: &lattice::Constraint| -> Result<(Vec<i128>, i128)> {
            let a = c.normal.to_i64s()?.into_iter().map(i128::from).collect();
            let b = c.rhs.to_i64().ok_or(Error::Overflow("facet rhs"))?;
            Ok((a, i128::from(b)))
        };
        Ok(Self {
            ineq: h.facets.iter().map(conv).collect::<Result<_>>()?,
            eq: h.equations.iter().map(conv).collect::<Result<_>>()?,
        })
    }

    fn contains(&self, x: &[i128], t: i128) -> bool {
        let dot = |a: &[i128]| a.iter().zip(x).map(|(p, q)| p * q).sum::<i128>();
        self.eq.iter().all(|(a, b)| dot(a) == t * b)
            && self.ineq.iter().all(|(a, b)| dot(a) <= t * b)
    }
}

/// Reusable lattice-point counter for one polytope.
pub struct LatticeCounter {
    n: usize,
    full: SmallHRep,
    /// `prefix[k]`: constraints of the projection onto coordinates `0..=k`.
    prefix: Vec<SmallHRep>,
    lo: Vec<i128>,
    hi: Vec<i128>,
}

impl LatticeCounter {
    pub fn new(p: &LatticePolytope) -> Result<Self> {
        let n = p.n();
        let full = SmallHRep::from_hrep(p.hrep()?)?;
        let coords: Vec<Vec<i64>> = p
            .vertices()
            .iter()
            .map(IntVec::to_i64s)
            .collect::<Result<_>>()?;
        let lo = (0..n)
            .map(|c| i128::from(coords.iter().map(|v| v[c]).min().unwrap_or(0)))
            .collect();
        let hi = (0..n)
            .map(|c| i128::from(coords.iter().map(|v| v[c]).max().unwrap_or(0)))
            .collect();
        let mut prefix = Vec::with_capacity(n);
        for k in 1..=n {
            if k == n {
                prefix.push(full.clone());
                break;
            }
            let proj: Vec<IntVec> = p
                .vertices()
                .iter()
                .map(|v| IntVec::new(v.coords()[..k].to_vec()))
                .collect();
            let q = LatticePolytope::from_generators(k, proj)?;
            prefix.push(SmallHRep::from_hrep(q.hrep()?)?);
        }
        Ok(Self {
            n,
            full,
            prefix,
            lo,
            hi,
        })
    }

    pub fn count(&self, t: u64, strategy: CountStrategy) -> BigInt {
        if t == 0 {
            return BigInt::one();
        }
        let t = i128::from(t);
        let total: u128 = match strategy {
            CountStrategy::BoundingBox => self.count_box(t),
            CountStrategy::FiberPruned => self.count_fibers(t),
        };
        BigInt::from(total)
    }

    fn count_box(&self, t: i128) -> u128 {
        let lo: Vec<i128> = self.lo.iter().map(|x| x * t).collect();
        let hi: Vec<i128> = self.hi.iter().map(|x| x * t).collect();
        (lo[0]..=hi[0])
            .into_par_iter()
            .map(|x0| {
                let mut x = lo.clone();
                x[0] = x0;
                let mut count = 0u128;
                loop {
                    if self.full.contains(&x, t) {
                        count += 1;
                    }
                    // odometer over coordinates 1..n
                    let mut k = self.n - 1;
                    loop {
                        if k == 0 {
                            return count;
                        }
                        if x[k] < hi[k] {
                            x[k] += 1;
                            break;
                        }
                        x[k] = lo[k];
                        k -= 1;
                    }
                }
            })
            .sum()
    }

    /// Integer range allowed for coordinate `k` given the earlier ones.
    fn bounds(&self, k: usize, x: &[i128], t: i128) -> Option<(i128, i128)> {
        let h = &self.prefix[k];
        let mut lo = self.lo[k] * t;
        let mut hi = self.hi[k] * t;
        for (a, b) in &h.eq {
            let rest: i128 = a[..k].iter().zip(x).map(|(p, q)| p * q).sum();
            let r = t * b - rest;
            if a[k] == 0 {
                if r != 0 {
                    return None;
                }
                continue;
            }
            if r % a[k] != 0 {
                return None;
            }
            let v = r / a[k];
            lo = lo.max(v);
            hi = hi.min(v);
        }
        for (a, b) in &h.ineq {
            let rest: i128 = a[..k].iter().zip(x).map(|(p, q)| p * q).sum();
            let r = t * b - rest;
            match a[k].signum() {
                1 => hi = hi.min(Integer::div_floor(&r, &a[k])),
                -1 => lo = lo.max(Integer::div_ceil(&r, &a[k])),
                _ => {
                    if r < 0 {
                        return None;
                    }
                }
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn count_fibers(&self, t: i128) -> u128 {
        let Some((lo, hi)) = self.bounds(0, &[], t) else {
            return 0;
        };
        (lo..=hi)
            .into_par_iter()
            .map(|x0| {
                let mut x = vec![0i128; self.n];
                x[0] = x0;
                self.walk(1, &mut x, t)
            })
            .sum()
    }

    fn walk(&self, k: usize, x: &mut [i128], t: i128) -> u128 {
        if k == self.n {
            return 1;
        }
        let Some((lo, hi)) = self.bounds(k, &x[..k], t) else {
            return 0;
        };
        if k + 1 == self.n {
            return (hi - lo + 1) as u128;
        }
        let mut total = 0;
        for v in lo..=hi {
            x[k] = v;
            total += self.walk(k + 1, x, t);
        }
        total
    }
}

/// Number of lattice points in the `t`-th dilate.
pub fn count_lattice_points(p: &LatticePolytope, t: u64) -> Result<BigInt> {
    Ok(LatticeCounter::new(p)?.count(t, CountStrategy::FiberPruned))
}

pub fn count_lattice_points_with(
    p: &LatticePolytope,
    t: u64,
    strategy: CountStrategy,
) -> Result<BigInt> {
    Ok(LatticeCounter::new(p)?.count(t, strategy))
}

/// `L(t) = sum c_k t^k` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EhrhartPolynomial {
    pub d: usize,
    pub coeffs: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn eval(&self, t: &BigInt) -> BigRational {
        let t = BigRational::from_integer(t.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    pub fn leading(&self) -> &BigRational {
        &self.coeffs[self.d]
    }

    /// `d!` times the leading coefficient.
    pub fn normalized_volume(&self) -> Result<BigInt> {
        let fact: BigInt = (1..=self.d).map(BigInt::from).product();
        let v = self.leading() * BigRational::from_integer(fact);
        if !v.is_integer() {
            return Err(Error::InternalConsistency(format!(
                "normalized volume {v} is not an integer"
            )));
        }
        Ok(v.to_integer())
    }

    /// Coefficients as `"num/den"` strings, constant term first.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.coeff_strings()).expect("strings serialize")
    }

    /// The polynomial `C(t + k, k)`, the Ehrhart polynomial of a unimodular `k`-simplex.
    pub fn unimodular_simplex(k: usize) -> Self {
        // (t+1)(t+2)...(t+k) / k!
        let mut coeffs = vec![BigRational::one()];
        for j in 1..=k {
            let jr = BigRational::from_integer(BigInt::from(j));
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (e, c) in coeffs.iter().enumerate() {
                next[e + 1] += c;
                next[e] += c * &jr;
            }
            coeffs = next;
        }
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        let fact = BigRational::from_integer(fact);
        Self {
            d: k,
            coeffs: coeffs.into_iter().map(|c| c / &fact).collect(),
        }
    }

    fn check_invariants(&self) -> Result<()> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InternalConsistency(format!(
                "constant term {} is not 1",
                self.coeffs[0]
            )));
        }
        if !self.leading().is_positive() {
            return Err(Error::InternalConsistency(
                "leading coefficient not positive".into(),
            ));
        }
        self.normalized_volume().map(|_| ())
    }
}

impl fmt::Display for EhrhartPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coef = if mag.is_one() && k > 0 {
                String::new()
            } else {
                format!("{mag}")
            };
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let body = match (coef.is_empty(), mono.is_empty()) {
                (true, _) => mono,
                (false, true) => coef,
                (false, false) => format!("{coef} {mono}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if terms.is_empty() {
                terms.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                terms.push(format!("{sign} {body}"));
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "L(t) = {}", terms.join(" "))
    }
}

/// Monomial coefficients of the interpolant through `(t, values[t])`, `t = 0..len`.
pub fn interpolate(values: &[BigInt]) -> Vec<BigRational> {
    // Newton forward differences in the binomial basis C(t, k)
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut newton = Vec::with_capacity(values.len());
    for _ in 0..values.len() {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut coeffs = vec![BigRational::zero(); values.len()];
    // falling factorial t(t-1)...(t-k+1), grown one factor at a time
    let mut falling = vec![BigRational::one()];
    let mut fact = BigInt::one();
    for (k, delta) in newton.iter().enumerate() {
        if k > 0 {
            fact *= BigInt::from(k);
            let shift = BigRational::from_integer(BigInt::from(k - 1));
            let mut next = vec![BigRational::zero(); falling.len() + 1];
            for (e, c) in falling.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * &shift;
            }
            falling = next;
        }
        let scale = BigRational::new(delta.clone(), fact.clone());
        for (e, c) in falling.iter().enumerate() {
            coeffs[e] += c * &scale;
        }
    }
    coeffs
}

/// Ehrhart polynomial from counts at `t = 0..=d`, checked at `t = d + 1`.
pub fn ehrhart_polynomial(p: &LatticePolytope) -> Result<EhrhartPolynomial> {
    ehrhart_polynomial_with(p, CountStrategy::FiberPruned)
}

pub fn ehrhart_polynomial_with(
    p: &LatticePolytope,
    strategy: CountStrategy,
) -> Result<EhrhartPolynomial> {
    let d = p.dim();
    let counter = LatticeCounter::new(p)?;
    let values: Vec<BigInt> = (0..=d as u64).map(|t| counter.count(t, strategy)).collect();
    let coeffs = interpolate(&values);
    let poly = EhrhartPolynomial { d, coeffs };
    let guard_t = BigInt::from(d + 1);
    let guard = counter.count(d as u64 + 1, strategy);
    if poly.eval(&guard_t) != BigRational::from_integer(guard.clone()) {
        return Err(Error::InternalConsistency(format!(
            "interpolant predicts {} at t={guard_t}, counted {guard}",
            poly.eval(&guard_t)
        )));
    }
    poly.check_invariants()?;
    Ok(poly)
}

/// Volume in units of a unimodular simplex of the affine hull's lattice.
pub fn normalized_volume(p: &LatticePolytope) -> Result<BigInt> {
    ehrhart_polynomial(p)?.normalized_volume()
}

/// Normalized volume of a lattice simplex from its edge matrix.
///
/// For a full-dimensional simplex this is `|det|` of the edge matrix; in
/// general it is the product of the edge matrix's elementary divisors, the
/// index of the edge lattice in the lattice of the affine hull.
pub fn simplex_volume_det(vertices: &[IntVec]) -> Result<BigInt> {
    let m = lattice::edge_matrix(vertices)?;
    if m.rank() != vertices.len() - 1 {
        return Err(Error::DegenerateSimplex(format!(
            "{} points span only {} dimensions",
            vertices.len(),
            m.rank()
        )));
    }
    if m.is_square() {
        let det = lattice::det_exact(&m)?;
        return Ok(det.to_integer().abs());
    }
    Ok(lattice::elementary_divisors(&m)?.iter().product())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Unimodularity {
    Unimodular,
    NotSimplex {
        vertices: usize,
        dim: usize,
    },
    /// Elementary divisors of the edge matrix, not all 1.
    NonUnitDivisors(Vec<BigInt>),
}

impl Unimodularity {
    pub fn is_unimodular(&self) -> bool {
        matches!(self, Self::Unimodular)
    }

    pub fn reason(&self) -> String {
        match self {
            Self::Unimodular => "edge directions form a lattice basis".into(),
            Self::NotSimplex { vertices, dim } => {
                format!("not a simplex: {vertices} vertices in dimension {dim}")
            }
            Self::NonUnitDivisors(d) => {
                let s: Vec<String> = d.iter().map(ToString::to_string).collect();
                format!("elementary divisors ({})", s.join(","))
            }
        }
    }
}

pub fn unimodularity(p: &LatticePolytope) -> Result<Unimodularity> {
    let dim = p.dim();
    let vs = p.vertices();
    if vs.len() != dim + 1 {
        return Ok(Unimodularity::NotSimplex {
            vertices: vs.len(),
            dim,
        });
    }
    if dim == 0 {
        return Ok(Unimodularity::Unimodular);
    }
    let divisors = lattice::elementary_divisors(&lattice::edge_matrix(vs)?)?;
    if divisors.iter().all(One::is_one) {
        Ok(Unimodularity::Unimodular)
    } else {
        Ok(Unimodularity::NonUnitDivisors(divisors))
    }
}

pub fn is_unimodular_simplex(p: &LatticePolytope) -> Result<bool> {
    Ok(unimodularity(p)?.is_unimodular())
}

/// The lattice basis `w_k = alpha(k, k+i-1) - alpha(n-i+1, n)`, `k = 1..n-i`,
/// anchored at `alpha(n-i+1, n)`, of the affine space where every residue
/// class of coordinates mod `i` sums to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedBasis {
    pub n: usize,
    pub i: usize,
    pub anchor: IntVec,
    pub basis: Vec<IntVec>,
}

impl FixedBasis {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= i <= n (got n={n}, i={i})"
            )));
        }
        let anchor = make_interval_vector(n, n - i + 1, n)?.to_intvec();
        let basis = (1..=n - i)
            .map(|k| {
                Ok(make_interval_vector(n, k, k + i - 1)?
                    .to_intvec()
                    .sub(&anchor))
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            n,
            i,
            anchor,
            basis,
        })
    }

    pub fn contains(&self, p: &IntVec) -> bool {
        p.n() == self.n
            && (1..=self.i).all(|k| {
                let s: BigInt = (k..=self.n).step_by(self.i).map(|j| p[j - 1].clone()).sum();
                s.is_one()
            })
    }

    pub fn reconstruct(&self, coeffs: &[BigInt]) -> IntVec {
        coeffs
            .iter()
            .zip(&self.basis)
            .fold(self.anchor.clone(), |acc, (y, w)| acc.add(&w.scale(y)))
    }

    /// Integer coefficients `Y` with `p = sum Y_t w_t + anchor`.
    ///
    /// `Y_1 = p_1`, `Y_t = p_t - p_{t-1}` for `t <= i`, and
    /// `Y_t = p_t - (Y_{t-1} + ... + Y_{t-i+1})` beyond that: coordinate `t`
    /// of the combination is the sum of the `i` coefficients covering it.
    pub fn decompose(&self, p: &IntVec) -> Result<Vec<BigInt>> {
        if !self.contains(p) {
            return Err(Error::NotInResidueSpace {
                n: self.n,
                i: self.i,
            });
        }
        let m = self.n - self.i;
        let mut y: Vec<BigInt> = Vec::with_capacity(m);
        for t in 1..=m {
            let v = if t == 1 {
                p[0].clone()
            } else if t <= self.i {
                &p[t - 1] - &p[t - 2]
            } else {
                let covered: BigInt = y[t - self.i..t - 1].iter().sum();
                &p[t - 1] - covered
            };
            y.push(v);
        }
        if self.reconstruct(&y) != *p {
            return Err(Error::InternalConsistency(
                "fixed-basis reconstruction mismatch".into(),
            ));
        }
        Ok(y)
    }
}

pub fn decompose_fixed_basis(point: &IntVec, n: usize, i: usize) -> Result<Vec<BigInt>> {
    FixedBasis::new(n, i)?.decompose(point)
}
