use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::hull::{self, HRep};
use crate::lattice::{self, AffineHull, IntVec};

/// A lattice polytope given by its vertices, with the facet description
/// computed on first use.
///
/// Vertices are deduplicated, stripped of points that lie in the convex hull
/// of the others, and kept in descending lexicographic order.
#[derive(Debug)]
pub struct LatticePolytope {
    n: usize,
    vertices: Vec<IntVec>,
    hrep: OnceLock<HRep>,
}

impl Clone for LatticePolytope {
    fn clone(&self) -> Self {
        let hrep = OnceLock::new();
        if let Some(h) = self.hrep.get() {
            let _ = hrep.set(h.clone());
        }
        Self {
            n: self.n,
            vertices: self.vertices.clone(),
            hrep,
        }
    }
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// Convex hull of `generators`; redundant points are dropped.
    pub fn from_generators(n: usize, generators: Vec<IntVec>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyInput("generator list"));
        }
        if let Some(bad) = generators.iter().find(|g| g.n() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.n(),
            });
        }
        let vertices = minimize(generators)?;
        Ok(Self {
            n,
            vertices,
            hrep: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[IntVec] {
        &self.vertices
    }

    pub fn affine_hull(&self) -> AffineHull {
        lattice::affine_hull(&self.vertices).expect("polytope has vertices")
    }

    pub fn dim(&self) -> usize {
        lattice::affine_dim(&self.vertices).expect("polytope has vertices")
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim() + 1
    }

    /// Facet description, computed once and cached.
    pub fn hrep(&self) -> Result<&HRep> {
        if let Some(h) = self.hrep.get() {
            return Ok(h);
        }
        let h = hull::facet_enumeration(self)?;
        Ok(self.hrep.get_or_init(|| h))
    }
}

/// Sorts, deduplicates, and removes generators lying in the convex hull of the
/// remaining ones.
pub fn minimize(mut points: Vec<IntVec>) -> Result<Vec<IntVec>> {
    points.sort_by(|a, b| b.cmp(a));
    points.dedup();
    let mut keep = vec![true; points.len()];
    for k in 0..points.len() {
        let others: Vec<IntVec> = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k && keep[j])
            .map(|(_, p)| p.clone())
            .collect();
        if others.is_empty() {
            continue;
        }
        if lattice::convex_combination(&others, &points[k])?.is_some() {
            keep[k] = false;
        }
    }
    Ok(points
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect())
}
