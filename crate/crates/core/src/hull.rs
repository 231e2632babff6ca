//! Facet enumeration, face lattices, f-vectors, and the face-number
//! recursion for pyramids.
//!
//! Facets are found by scanning affinely independent `d`-subsets of the
//! vertices inside the affine hull and keeping the spanned hyperplanes that
//! leave every vertex on one side. Faces are identified by their vertex sets;
//! the face lattice is the closure of facet vertex sets under intersection.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::lattice::{self, small, Constraint, IntVec, RatMat};
use crate::polytope::LatticePolytope;

/// Largest vertex count handled by the bitset face representation.
pub const MAX_VERTICES: usize = 128;

/// A set of vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u128);

impl VertexSet {
    pub fn full(m: usize) -> Self {
        if m == 128 {
            Self(u128::MAX)
        } else {
            Self((1u128 << m) - 1)
        }
    }

    pub fn singleton(k: usize) -> Self {
        Self(1u128 << k)
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..128).filter(move |&k| self.contains(k))
    }
}

/// Facets (`normal . x <= rhs`) and affine-hull equations (`normal . x == rhs`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub n: usize,
    pub dim: usize,
    pub facets: Vec<Constraint>,
    pub equations: Vec<Constraint>,
    /// Tight vertex set of each facet, parallel to `facets`.
    pub incidence: Vec<VertexSet>,
}

impl HRep {
    pub fn contains(&self, p: &IntVec) -> bool {
        self.equations.iter().all(|e| e.eval(p) == e.rhs)
            && self.facets.iter().all(|f| f.eval(p) <= f.rhs)
    }
}

impl fmt::Display for HRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.facets {
            writeln!(f, "{} <= {}", c.normal, c.rhs)?;
        }
        for c in &self.equations {
            writeln!(f, "{} == {}", c.normal, c.rhs)?;
        }
        Ok(())
    }
}

/// Vertices in coordinates of the affine hull: differences to the first
/// vertex, restricted to the pivot columns of the direction basis. The map is
/// injective on the affine hull, so the image is full-dimensional.
struct LocalFrame {
    dim: usize,
    pivots: Vec<usize>,
    points: Vec<Vec<i128>>,
}

impl LocalFrame {
    fn new(vertices: &[IntVec], directions: &[IntVec]) -> Result<Self> {
        let dim = directions.len();
        let pivots: Vec<usize> = directions
            .iter()
            .map(|d| {
                d.coords()
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("nonzero row")
            })
            .collect();
        let base = &vertices[0];
        let points = vertices
            .iter()
            .map(|v| {
                let diff = v.sub(base).to_i64s()?;
                Ok(pivots.iter().map(|&p| i128::from(diff[p])).collect())
            })
            .collect::<Result<Vec<Vec<i128>>>>()?;
        Ok(Self {
            dim,
            pivots,
            points,
        })
    }

    fn rank_of(&self, set: VertexSet) -> Result<usize> {
        let mut it = set.iter();
        let Some(first) = it.next() else {
            return Ok(0);
        };
        let rows: Vec<Vec<i128>> = it
            .map(|k| {
                self.points[k]
                    .iter()
                    .zip(&self.points[first])
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        small::rank(&rows)
    }
}

/// A facet found in local coordinates, before lifting.
struct LocalFacet {
    tight: VertexSet,
    normal: Vec<i128>,
}

fn scan_subsets_from(frame: &LocalFrame, first: usize) -> Result<Vec<LocalFacet>> {
    let d = frame.dim;
    let m = frame.points.len();
    let mut found: Vec<LocalFacet> = Vec::new();
    let mut stack = vec![first];
    scan_rec(frame, &mut stack, d, m, &mut found)?;
    Ok(found)
}

fn scan_rec(
    frame: &LocalFrame,
    chosen: &mut Vec<usize>,
    d: usize,
    m: usize,
    found: &mut Vec<LocalFacet>,
) -> Result<()> {
    if chosen.len() == d {
        let mask = VertexSet(chosen.iter().fold(0u128, |acc, &k| acc | 1u128 << k));
        if found.iter().any(|f| mask.is_subset(&f.tight)) {
            return Ok(());
        }
        let anchor = &frame.points[chosen[0]];
        let rows: Vec<Vec<i128>> = chosen[1..]
            .iter()
            .map(|&k| {
                frame.points[k]
                    .iter()
                    .zip(anchor)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let mut normal = small::cross(&rows, d)?;
        if normal.iter().all(|&x| x == 0) {
            return Ok(());
        }
        let level = small::dot(&normal, anchor)?;
        let values: Vec<i128> = frame
            .points
            .iter()
            .map(|p| small::dot(&normal, p))
            .collect::<Result<_>>()?;
        let above = values.iter().any(|&v| v > level);
        let below = values.iter().any(|&v| v < level);
        if above && below {
            return Ok(());
        }
        if above {
            for x in &mut normal {
                *x = -*x;
            }
        }
        let g = normal.iter().fold(0, |acc, &x| small::gcd(acc, x));
        for x in &mut normal {
            *x /= g;
        }
        let tight = VertexSet(
            values
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v == level)
                .fold(0u128, |acc, (k, _)| acc | 1u128 << k),
        );
        found.push(LocalFacet { tight, normal });
        return Ok(());
    }
    let start = chosen.last().map_or(0, |&k| k + 1);
    let need = d - chosen.len();
    for k in start..=m.saturating_sub(need) {
        if k >= m {
            break;
        }
        chosen.push(k);
        scan_rec(frame, chosen, d, m, found)?;
        chosen.pop();
    }
    Ok(())
}

/// Lifts a local facet normal to the canonical ambient normal: the unique
/// primitive vector in the direction space inducing the same functional.
fn lift_normal(
    local: &[i128],
    frame: &LocalFrame,
    directions: &[IntVec],
    n: usize,
) -> Result<IntVec> {
    let d = frame.dim;
    // functional value on each direction basis row
    let values: Vec<BigRational> = directions
        .iter()
        .map(|b| {
            let s: BigInt = frame
                .pivots
                .iter()
                .zip(local)
                .map(|(&p, &c)| &b[p] * BigInt::from(c))
                .sum();
            BigRational::from_integer(s)
        })
        .collect();
    let gram = RatMat::from_fn(d, d, |r, c| {
        BigRational::from_integer(directions[r].dot(&directions[c]))
    });
    let gamma = gram
        .solve(&values)?
        .ok_or_else(|| Error::InternalConsistency("singular Gram matrix".into()))?;
    let ambient: Vec<BigRational> = (0..n)
        .map(|c| {
            gamma
                .iter()
                .zip(directions)
                .fold(BigRational::zero(), |acc, (g, b)| {
                    acc + g * BigRational::from_integer(b[c].clone())
                })
        })
        .collect();
    let denom_lcm = ambient.iter().fold(BigInt::from(1), |acc, x| {
        num_integer::Integer::lcm(&acc, x.denom())
    });
    let ints: Vec<BigInt> = ambient
        .iter()
        .map(|x| (x * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    // scale by a positive factor only, keeping the orientation
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    Ok(IntVec::new(ints.into_iter().map(|x| x / &g).collect()))
}

/// Complete irredundant facet description of a polytope.
pub fn facet_enumeration(p: &LatticePolytope) -> Result<HRep> {
    let vertices = p.vertices();
    if vertices.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(vertices.len()));
    }
    let hull = p.affine_hull();
    let n = p.n();
    let d = hull.dim;
    if d == 0 {
        return Ok(HRep {
            n,
            dim: 0,
            facets: Vec::new(),
            equations: hull.equations,
            incidence: Vec::new(),
        });
    }
    let frame = LocalFrame::new(vertices, &hull.directions)?;
    let m = vertices.len();

    // partition by the smallest index of the subset; merge is keyed by tight set
    let parts: Vec<Vec<LocalFacet>> = (0..=m - d)
        .into_par_iter()
        .map(|first| scan_subsets_from(&frame, first))
        .collect::<Result<_>>()?;
    let mut by_tight: BTreeMap<VertexSet, Vec<i128>> = BTreeMap::new();
    for f in parts.into_iter().flatten() {
        by_tight.entry(f.tight).or_insert(f.normal);
    }

    let mut facets: Vec<(Constraint, VertexSet)> = Vec::with_capacity(by_tight.len());
    for (tight, local) in by_tight {
        if frame.rank_of(tight)? != d - 1 {
            return Err(Error::InternalConsistency(
                "facet tight set has wrong rank".into(),
            ));
        }
        let normal = lift_normal(&local, &frame, &hull.directions, n)?;
        let anchor = tight.iter().next().expect("nonempty facet");
        let rhs = normal.dot(&vertices[anchor]);
        facets.push((Constraint { normal, rhs }, tight));
    }
    facets.sort();
    let (facets, incidence) = facets.into_iter().unzip();
    Ok(HRep {
        n,
        dim: d,
        facets,
        equations: hull.equations,
        incidence,
    })
}

/// Face counts `f_{-1}, f_0, ..., f_d` of a `d`-polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FVector {
    pub d: usize,
    pub counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.len() < 2 {
            return Err(Error::InvariantViolation(
                "f-vector needs at least f_-1 and f_d".into(),
            ));
        }
        let fv = Self {
            d: counts.len() - 2,
            counts,
        };
        fv.validate()?;
        Ok(fv)
    }

    /// `f_k` for `-1 <= k <= d`.
    pub fn f(&self, k: isize) -> u64 {
        self.counts[(k + 1) as usize]
    }

    /// Interior entries `f_0 .. f_{d-1}`.
    pub fn proper(&self) -> &[u64] {
        &self.counts[1..self.counts.len() - 1]
    }

    pub fn euler_holds(&self) -> bool {
        let alt: i128 = self
            .proper()
            .iter()
            .enumerate()
            .map(|(k, &f)| {
                if k % 2 == 0 {
                    i128::from(f)
                } else {
                    -i128::from(f)
                }
            })
            .sum();
        let rhs = if self.d.is_multiple_of(2) { 0 } else { 2 };
        alt == rhs
    }

    pub fn validate(&self) -> Result<()> {
        if self.counts.len() != self.d + 2 {
            return Err(Error::InvariantViolation(
                "f-vector length does not match d".into(),
            ));
        }
        if self.counts[0] != 1 || self.counts[self.d + 1] != 1 {
            return Err(Error::InvariantViolation("f_-1 and f_d must be 1".into()));
        }
        if self.counts.contains(&0) {
            return Err(Error::InvariantViolation(
                "f-vector entries must be positive".into(),
            ));
        }
        if !self.euler_holds() {
            return Err(Error::InvariantViolation(format!(
                "Euler relation fails for {self}"
            )));
        }
        Ok(())
    }

    pub fn is_palindromic(&self) -> bool {
        let p = self.proper();
        p.iter().eq(p.iter().rev())
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Vertex sets of all nonempty faces, grouped by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    pub dim: usize,
    pub faces: Vec<Vec<VertexSet>>,
}

impl FaceLattice {
    pub fn f_vector(&self) -> Result<FVector> {
        let mut counts = vec![1u64];
        counts.extend(self.faces.iter().map(|f| f.len() as u64));
        FVector::new(counts)
    }

    /// Faces of dimension `k` with exactly the given vertex set, if any.
    pub fn has_face(&self, k: usize, set: VertexSet) -> bool {
        self.faces.get(k).is_some_and(|fs| fs.contains(&set))
    }
}

pub fn face_lattice(p: &LatticePolytope) -> Result<FaceLattice> {
    let h = p.hrep()?;
    let m = p.vertices().len();
    let d = h.dim;
    let hull = p.affine_hull();
    let frame = LocalFrame::new(p.vertices(), &hull.directions)?;

    let full = VertexSet::full(m);
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue: VecDeque<VertexSet> = VecDeque::new();
    seen.insert(full);
    for &f in &h.incidence {
        if seen.insert(f) {
            queue.push_back(f);
        }
    }
    while let Some(face) = queue.pop_front() {
        for facet in &h.incidence {
            let meet = face.intersect(facet);
            if meet.is_empty() || meet == face {
                continue;
            }
            if seen.insert(meet) {
                queue.push_back(meet);
            }
        }
    }

    let mut faces = vec![Vec::new(); d + 1];
    let ranked: Vec<(usize, VertexSet)> = seen
        .into_par_iter()
        .map(|s| frame.rank_of(s).map(|r| (r, s)))
        .collect::<Result<_>>()?;
    for (r, s) in ranked {
        faces[r].push(s);
    }
    for layer in &mut faces {
        layer.sort();
    }
    Ok(FaceLattice { dim: d, faces })
}

pub fn f_vector(p: &LatticePolytope) -> Result<FVector> {
    face_lattice(p)?.f_vector()
}

/// Face numbers of a pyramid over a polytope with f-vector `base`.
pub fn pyramid_f_vector(base: &FVector) -> Result<FVector> {
    base.validate()?;
    let k = &base.counts;
    let mut out = Vec::with_capacity(k.len() + 1);
    out.push(1);
    for j in 1..k.len() {
        out.push(k[j] + k[j - 1]);
    }
    out.push(1);
    FVector::new(out)
}

/// Base and apex order of the iterated-pyramid construction for the family
/// of intervals of length 1 or `n - i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidTower {
    pub n: usize,
    pub i: usize,
    pub base: Vec<IntVec>,
    pub base_dim: usize,
    /// Apex index `k` (for `e_k`) and whether it lies outside the affine
    /// hull of everything accumulated before it.
    pub steps: Vec<(usize, bool)>,
}

impl PyramidTower {
    pub fn all_apexes_outside(&self) -> bool {
        self.steps.iter().all(|&(_, out)| out)
    }
}

/// Base points: `e_1..e_i`, `e_{n-i+1}..e_n`, and every interval of length `n - i`.
pub fn pyramid_base(n: usize, i: usize) -> Result<Vec<IntVec>> {
    check_tower_bounds(n, i)?;
    let mut base = Vec::new();
    for k in (1..=i).chain(n - i + 1..=n) {
        base.push(IntVec::unit(n, k));
    }
    let len = n - i;
    for start in 1..=i + 1 {
        base.push(crate::family::make_interval_vector(n, start, start + len - 1)?.to_intvec());
    }
    Ok(base)
}

fn check_tower_bounds(n: usize, i: usize) -> Result<()> {
    if i < 1 || n < 2 * i + 1 {
        return Err(Error::InvalidSpec(format!(
            "pyramid tower needs i >= 1 and n >= 2i+1 (got n={n}, i={i})"
        )));
    }
    Ok(())
}

/// Checks that `e_{i+1}, ..., e_{n-i}` each leave the affine hull of the
/// base plus the earlier apexes.
pub fn pyramid_tower_check(spec: &FamilySpec) -> Result<PyramidTower> {
    let n = spec.n;
    let lengths: Vec<usize> = spec.lengths.iter().copied().collect();
    let i = match lengths.as_slice() {
        [1, l] if *l < n => n - l,
        _ => {
            return Err(Error::InvalidSpec(format!(
                "{spec} is not a pyramidal family"
            )))
        }
    };
    check_tower_bounds(n, i)?;
    let base = pyramid_base(n, i)?;
    let base_dim = lattice::affine_dim(&base)?;
    let mut acc = base.clone();
    let mut steps = Vec::new();
    for k in i + 1..=n - i {
        let apex = IntVec::unit(n, k);
        let hull = lattice::affine_hull(&acc)?;
        steps.push((k, !hull.contains(&apex)));
        acc.push(apex);
    }
    Ok(PyramidTower {
        n,
        i,
        base,
        base_dim,
        steps,
    })
}

/// Placing triangulation of `conv(points)`: points are added in order and each
/// one is coned over the boundary facets it sees strictly. Points already in
/// the hull are skipped. Simplices are returned as sorted index lists.
pub fn placing_triangulation(points: &[IntVec]) -> Result<Vec<Vec<usize>>> {
    let hull = lattice::affine_hull(points)?;
    let d = hull.dim;
    if d == 0 {
        return Ok(vec![vec![0]]);
    }
    let frame = LocalFrame::new(points, &hull.directions)?;
    let mut init = vec![0];
    for k in 1..points.len() {
        if init.len() == d + 1 {
            break;
        }
        let trial = VertexSet(
            init.iter()
                .chain([&k])
                .fold(0u128, |acc, &j| acc | 1u128 << j),
        );
        if frame.rank_of(trial)? == init.len() {
            init.push(k);
        }
    }
    // signed volume of conv(facet, x) in local coordinates
    let orient = |facet: &[usize], x: usize| -> Result<i128> {
        let f0 = &frame.points[facet[0]];
        let mut rows: Vec<Vec<i128>> = facet[1..]
            .iter()
            .chain([&x])
            .map(|&k| frame.points[k].iter().zip(f0).map(|(a, b)| a - b).collect())
            .collect();
        small::det(&mut rows)
    };
    let mut simplices = vec![init.clone()];
    for k in 0..points.len() {
        if init.contains(&k) {
            continue;
        }
        let mut faces: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
        for s in &simplices {
            for omit in 0..s.len() {
                let facet: Vec<usize> = s.iter().copied().filter(|&j| j != s[omit]).collect();
                let e = faces.entry(facet).or_insert((0, s[omit]));
                e.0 += 1;
            }
        }
        let mut added = Vec::new();
        for (facet, (count, opposite)) in faces {
            if count != 1 {
                continue;
            }
            let sp = orient(&facet, k)?;
            if sp != 0 && sp.signum() != orient(&facet, opposite)?.signum() {
                let mut s = facet;
                s.push(k);
                s.sort_unstable();
                added.push(s);
            }
        }
        simplices.extend(added);
    }
    simplices.sort();
    Ok(simplices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};

    fn poly(rows: &[&[i64]]) -> LatticePolytope {
        let n = rows[0].len();
        LatticePolytope::from_generators(n, rows.iter().map(|r| IntVec::from_i64s(r)).collect())
            .unwrap()
    }

    #[test]
    fn unit_square_facets() {
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let h = p.hrep().unwrap();
        assert_eq!(h.facets.len(), 4);
        assert!(h.equations.is_empty());
        let text = h.to_string();
        for line in ["-1 0 <= 0", "1 0 <= 1", "0 -1 <= 0", "0 1 <= 1"] {
            assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
        }
    }

    #[test]
    fn fixed_simplex_facets() {
        let p = build_family(&FamilySpec::fixed(5, 3).unwrap()).unwrap();
        let h = p.hrep().unwrap();
        assert_eq!(h.dim, 2);
        assert_eq!(h.facets.len(), 3);
        assert_eq!(h.equations.len(), 3);
        for v in p.vertices() {
            assert!(h.contains(v));
        }
    }

    #[test]
    fn facet_normals_lie_in_direction_space() {
        let p = build_family(&FamilySpec::fixed(6, 2).unwrap()).unwrap();
        let h = p.hrep().unwrap();
        for f in &h.facets {
            for e in &h.equations {
                assert!(f.normal.dot(&e.normal).is_zero());
            }
        }
    }

    #[test]
    fn triangle_and_segment_f_vectors() {
        let tri = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(f_vector(&tri).unwrap().counts, vec![1, 3, 3, 1]);
        let seg = poly(&[&[0, 0, 0], &[1, 1, 1]]);
        assert_eq!(f_vector(&seg).unwrap().counts, vec![1, 2, 1]);
        let pt = poly(&[&[4, 2]]);
        assert_eq!(f_vector(&pt).unwrap().counts, vec![1, 1]);
    }

    #[test]
    fn quadrilateral_base() {
        for n in 3..8 {
            let a1 = crate::family::make_interval_vector(n, 1, n - 1)
                .unwrap()
                .to_intvec();
            let a2 = crate::family::make_interval_vector(n, 2, n)
                .unwrap()
                .to_intvec();
            let p = LatticePolytope::from_generators(
                n,
                vec![IntVec::unit(n, 1), IntVec::unit(n, n), a1, a2],
            )
            .unwrap();
            assert_eq!(f_vector(&p).unwrap().counts, vec![1, 4, 4, 1], "n={n}");
        }
    }

    #[test]
    fn first_pyramidal_n4() {
        let p = build_family(&FamilySpec::new(4, [1, 3], false).unwrap()).unwrap();
        assert_eq!(p.hrep().unwrap().facets.len(), 6);
        assert_eq!(f_vector(&p).unwrap().counts, vec![1, 6, 13, 13, 6, 1]);
    }

    #[test]
    fn pyramid_recursion_examples() {
        let b = FVector::new(vec![1, 4, 4, 1]).unwrap();
        assert_eq!(pyramid_f_vector(&b).unwrap().counts, vec![1, 5, 8, 5, 1]);
        let pt = FVector::new(vec![1, 1]).unwrap();
        assert_eq!(pyramid_f_vector(&pt).unwrap().counts, vec![1, 2, 1]);
    }

    #[test]
    fn malformed_f_vectors_rejected() {
        assert!(FVector::new(vec![1, 4, 5, 1]).is_err());
        assert!(FVector::new(vec![2, 3, 3, 1]).is_err());
        assert!(FVector::new(vec![1]).is_err());
        let bad = FVector {
            d: 2,
            counts: vec![1, 4, 5, 1],
        };
        assert!(matches!(
            pyramid_f_vector(&bad),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn tower_examples() {
        let t = pyramid_tower_check(&FamilySpec::pyramidal(4, 1).unwrap()).unwrap();
        assert_eq!(t.steps, vec![(2, true), (3, true)]);
        assert_eq!(t.base_dim, 2);
        let t = pyramid_tower_check(&FamilySpec::pyramidal(6, 2).unwrap()).unwrap();
        assert_eq!(t.steps, vec![(3, true), (4, true)]);
        assert_eq!(t.base_dim, 4);
        assert!(pyramid_tower_check(&FamilySpec::pyramidal(4, 2).unwrap()).is_err());
        assert!(pyramid_tower_check(&FamilySpec::fixed(4, 2).unwrap()).is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet(0b1011);
        let b = VertexSet(0b0011);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.len(), 3);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(VertexSet::full(128).len(), 128);
    }

    #[test]
    fn placing_triangulations_cover_volume() {
        let sq: Vec<IntVec> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|r| IntVec::from_i64s(r))
            .collect();
        assert_eq!(placing_triangulation(&sq).unwrap().len(), 2);
        let cube: Vec<IntVec> = (0..8)
            .map(|b: i64| IntVec::from_i64s(&[b & 1, b >> 1 & 1, b >> 2 & 1]))
            .collect();
        let tri = placing_triangulation(&cube).unwrap();
        let total: BigInt = tri
            .iter()
            .map(|s| {
                let pts: Vec<IntVec> = s.iter().map(|&k| cube[k].clone()).collect();
                crate::ehrhart::simplex_volume_det(&pts).unwrap()
            })
            .sum();
        assert_eq!(total, BigInt::from(6));
        // a point inside the hull adds nothing
        let mut with_center: Vec<IntVec> = sq.iter().map(|p| p.scale(&BigInt::from(2))).collect();
        with_center.push(IntVec::from_i64s(&[1, 1]));
        assert_eq!(placing_triangulation(&with_center).unwrap().len(), 2);
    }
}
