//! Flow-dimension graph of a family's elementary vectors and the dimension
//! formula it yields, computed without any convex-hull work.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::family::{elementary_set, ElementaryKind, FamilySpec};
use crate::lattice;

/// Directed graph on nodes `1..=n`: an edge `(i, j)` for every difference
/// `e_i - e_j`, and `v1` collecting the indices of unit vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowDimGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
    pub v1: BTreeSet<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    /// Undirected components, each sorted, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    /// Components containing no node of `v1`.
    pub k0: usize,
}

pub fn build_graph(spec: &FamilySpec) -> Result<FlowDimGraph> {
    let mut g = FlowDimGraph {
        n: spec.n,
        edges: BTreeSet::new(),
        v1: BTreeSet::new(),
    };
    for ev in elementary_set(spec)? {
        match ev.kind {
            ElementaryKind::Zero => {}
            ElementaryKind::Unit(i) => {
                g.v1.insert(i);
            }
            ElementaryKind::Diff(i, j) => {
                g.edges.insert((i, j));
            }
        }
    }
    Ok(g)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            (x, self.0[x]) = (self.0[x], r);
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // smaller root wins so roots are component minima
        if ra < rb {
            self.0[rb] = ra;
        } else {
            self.0[ra] = rb;
        }
    }
}

pub fn components_and_k0(g: &FlowDimGraph) -> ComponentSummary {
    let mut uf = UnionFind((0..=g.n).collect());
    for &(i, j) in &g.edges {
        uf.union(i, j);
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; g.n + 1];
    for v in 1..=g.n {
        let r = uf.find(v);
        if slot[r] == usize::MAX {
            slot[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[slot[r]].push(v);
    }
    let k0 = comps
        .iter()
        .filter(|c| c.iter().all(|v| !g.v1.contains(v)))
        .count();
    ComponentSummary {
        components: comps,
        k0,
    }
}

/// `n - k0` when the origin lies in the affine hull of the generators,
/// `n - k0 - 1` otherwise.
pub fn dahl_dimension(spec: &FamilySpec) -> Result<usize> {
    let k0 = components_and_k0(&build_graph(spec)?).k0;
    let through_origin = lattice::origin_in_affine_hull(&spec.generators())?;
    Ok(if through_origin {
        spec.n - k0
    } else {
        spec.n - k0 - 1
    })
}

impl fmt::Display for FlowDimGraph {
    /// Edge list, one `i j` per line, then a `V1:` footer.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in &self.edges {
            writeln!(f, "{i} {j}")?;
        }
        let v1: Vec<String> = self.v1.iter().map(ToString::to_string).collect();
        writeln!(f, "V1: {}", v1.join(" "))
    }
}
