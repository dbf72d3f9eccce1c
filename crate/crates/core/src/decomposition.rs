//! Decompositions of the complete graph `K_n`.
//!
//! A decomposition splits the edge set of `K_n` into complete subgraphs,
//! each recorded by its vertex set (a [`Part`]). Two defining properties
//! are checked by [`validate_decomposition`]: every edge of `K_n` lies in
//! exactly one part, which also forces any two parts to share at most one
//! vertex. Generators for the standard families live here too, along with
//! the part-intersection graph whose chromatic number is the chromatic
//! index of the decomposition.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::report::Report;

/// Vertex set of one part, strictly increasing, at least 2 vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Part {
    vertices: Vec<usize>,
}

impl Part {
    pub fn new(vertices: Vec<usize>) -> Result<Self, Error> {
        if vertices.len() < 2 {
            return Err(Error::PartTooSmall(vertices.len()));
        }
        if !vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::PartNotStrictlyIncreasing);
        }
        Ok(Part { vertices })
    }

    /// Caller guarantees the sortedness invariant.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.len() >= 2);
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Part { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Position of `v` inside the part's vertex list.
    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn intersects(&self, other: &Part) -> bool {
        self.common_vertex(other).is_some()
    }

    /// Least vertex the two parts share.
    pub fn common_vertex(&self, other: &Part) -> Option<usize> {
        let (mut i, mut j) = (0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return Some(self.vertices[i]),
            }
        }
        None
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A list of parts over the vertex set `0..order`.
///
/// Construction only pins the order; whether the parts actually decompose
/// `K_n` is a separate question answered by [`validate_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    order: usize,
    parts: Vec<Part>,
}

impl Decomposition {
    pub fn new(order: usize, parts: Vec<Part>) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Decomposition { order, parts })
    }

    pub(crate) fn from_parts(order: usize, parts: Vec<Part>) -> Self {
        debug_assert!(order > 0);
        Decomposition { order, parts }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionViolation {
    PartVertexOutOfRange { part: usize, vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    EdgeMultiplyCovered { u: usize, v: usize, count: usize },
}

impl fmt::Display for DecompositionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionViolation::PartVertexOutOfRange { part, vertex } => {
                write!(f, "part {part} has out-of-range vertex {vertex}")
            }
            DecompositionViolation::EdgeUncovered { u, v } => {
                write!(f, "edge {{{u},{v}}} is not covered by any part")
            }
            DecompositionViolation::EdgeMultiplyCovered { u, v, count } => {
                write!(f, "edge {{{u},{v}}} is covered {count} times")
            }
        }
    }
}

/// Checks that every edge of `K_n` lies in exactly one part.
///
/// Violations come out in a fixed order: per-part range errors first, then
/// edge errors scanned lexicographically.
pub fn validate_decomposition(d: &Decomposition) -> Report<DecompositionViolation> {
    let n = d.order();
    let mut report = Report::new();
    let mut cover = vec![0u32; n * n];
    for (pi, part) in d.parts().iter().enumerate() {
        for &v in part.vertices() {
            if v >= n {
                report.push(DecompositionViolation::PartVertexOutOfRange {
                    part: pi,
                    vertex: v,
                });
            }
        }
        let vs: Vec<usize> = part.vertices().iter().copied().filter(|&v| v < n).collect();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                cover[vs[i] * n + vs[j]] += 1;
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            match cover[u * n + v] {
                0 => report.push(DecompositionViolation::EdgeUncovered { u, v }),
                1 => {}
                c => report.push(DecompositionViolation::EdgeMultiplyCovered {
                    u,
                    v,
                    count: c as usize,
                }),
            }
        }
    }
    report
}

/// All of `K_n` as one part. Chromatic index 1.
pub fn single_part(n: usize) -> Result<Decomposition, Error> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: n });
    }
    let part = Part::from_sorted((0..n).collect());
    Ok(Decomposition::from_parts(n, vec![part]))
}

/// Every edge of `K_n` as its own part, in lexicographic order.
pub fn edge_decomposition(n: usize) -> Result<Decomposition, Error> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: n });
    }
    let mut parts = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            parts.push(Part::from_sorted(vec![u, v]));
        }
    }
    Ok(Decomposition::from_parts(n, parts))
}

/// One part on `{0, .., n-2}` plus the pendant edges `{i, n-1}`.
///
/// Any two parts meet, so the intersection graph is complete and the
/// chromatic index equals the number of parts, n.
pub fn near_pencil(n: usize) -> Result<Decomposition, Error> {
    if n < 3 {
        return Err(Error::OrderTooSmall { min: 3, got: n });
    }
    let mut parts = Vec::with_capacity(n);
    parts.push(Part::from_sorted((0..n - 1).collect()));
    for i in 0..n - 1 {
        parts.push(Part::from_sorted(vec![i, n - 1]));
    }
    Ok(Decomposition::from_parts(n, parts))
}

/// Develops base triples mod n into a cyclic Steiner triple system.
///
/// Each translate is canonicalized as a sorted triple; short orbits are
/// kept once. Parts come out in lexicographic order. The developed system
/// is validated before it is returned, so a base family that fails to
/// cover every pair exactly once is rejected with the full report.
pub fn cyclic_sts(n: usize, base_blocks: &[[usize; 3]]) -> Result<Decomposition, Error> {
    if n % 6 != 1 && n % 6 != 3 {
        return Err(Error::BadResidueClass(n));
    }
    for block in base_blocks {
        for &v in block {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
        }
        if block[0] == block[1] || block[0] == block[2] || block[1] == block[2] {
            return Err(Error::DegenerateBaseBlock);
        }
    }
    let mut parts = BTreeSet::new();
    for block in base_blocks {
        for c in 0..n {
            let mut t = [(block[0] + c) % n, (block[1] + c) % n, (block[2] + c) % n];
            t.sort_unstable();
            parts.insert(Part::from_sorted(t.to_vec()));
        }
    }
    let d = Decomposition::from_parts(n, parts.into_iter().collect());
    let report = validate_decomposition(&d);
    if report.is_ok() {
        Ok(d)
    } else {
        Err(Error::InvalidDecomposition(report))
    }
}

/// Graph on the parts of a decomposition; two parts are adjacent when they
/// share a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    order: usize,
    adj: Vec<bool>,
}

impl IntersectionGraph {
    #[cfg(test)]
    pub(crate) fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![false; order * order];
        for &(u, v) in edges {
            adj[u * order + v] = true;
            adj[v * order + u] = true;
        }
        IntersectionGraph { order, adj }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i * self.order + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..self.order).filter(|&j| self.adjacent(i, j)).count()
    }

    pub fn edge_count(&self) -> usize {
        let mut count = 0;
        for i in 0..self.order {
            for j in i + 1..self.order {
                if self.adjacent(i, j) {
                    count += 1;
                }
            }
        }
        count
    }
}

pub fn intersection_graph(d: &Decomposition) -> IntersectionGraph {
    let m = d.parts().len();
    let mut adj = vec![false; m * m];
    for i in 0..m {
        for j in i + 1..m {
            if d.parts()[i].intersects(&d.parts()[j]) {
                adj[i * m + j] = true;
                adj[j * m + i] = true;
            }
        }
    }
    IntersectionGraph { order: m, adj }
}
