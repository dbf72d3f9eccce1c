//! Linear factors and linear factorizations of the complete digraph with
//! loops on `0..n`.
//!
//! A linear factor is a set of n arcs giving every vertex out-degree 1 and
//! in-degree 1, i.e. the arc picture of a permutation; its cycles are the
//! factor's d-gons, with loops as 1-gons. A linear factorization splits all
//! n^2 arcs (loops included) into n pairwise disjoint linear factors.
//!
//! The cyclic constructions live here as well: a starter factor whose arc
//! differences `head - tail mod n` hit every residue exactly once generates
//! a factorization by translation, and [`find_starter_factor`] searches for
//! such a starter with prescribed d-gons by exact backtracking.

use std::fmt;

use crate::error::Error;
use crate::report::Report;

/// Directed arc `(tail, head)`; `tail == head` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn new(tail: usize, head: usize) -> Self {
        Arc { tail, head }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

/// A set of arcs on `0..order`, stored sorted and deduplicated.
///
/// Whether the set actually is a linear factor is checked by
/// [`validate_linear_factor`]; the constructor only pins range and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactor {
    order: usize,
    arcs: Vec<Arc>,
}

impl LinearFactor {
    pub fn new(order: usize, mut arcs: Vec<Arc>) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        for arc in &arcs {
            for v in [arc.tail, arc.head] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(LinearFactor { order, arcs })
    }

    /// All n loops; the identity permutation as a factor.
    pub fn loops(order: usize) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(LinearFactor {
            order,
            arcs: (0..order).map(|v| Arc::new(v, v)).collect(),
        })
    }

    /// Caller guarantees sortedness, distinctness, and range.
    pub(crate) fn from_sorted_arcs(order: usize, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(arcs.iter().all(|a| a.tail < order && a.head < order));
        LinearFactor { order, arcs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }
}

/// A list of factors of one common order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFactorization {
    order: usize,
    factors: Vec<LinearFactor>,
}

impl LinearFactorization {
    pub fn new(order: usize, factors: Vec<LinearFactor>) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        for f in &factors {
            if f.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: f.order(),
                });
            }
        }
        Ok(LinearFactorization { order, factors })
    }

    pub(crate) fn from_factors(order: usize, factors: Vec<LinearFactor>) -> Self {
        debug_assert!(factors.iter().all(|f| f.order() == order));
        LinearFactorization { order, factors }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factors(&self) -> &[LinearFactor] {
        &self.factors
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorViolation {
    OutDegree { vertex: usize, degree: usize },
    InDegree { vertex: usize, degree: usize },
}

impl fmt::Display for FactorViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorViolation::OutDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has out-degree {degree}")
            }
            FactorViolation::InDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has in-degree {degree}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorizationViolation {
    FactorCount {
        expected: usize,
        got: usize,
    },
    Factor {
        factor: usize,
        violation: FactorViolation,
    },
    DuplicateArc {
        arc: Arc,
        first_factor: usize,
        second_factor: usize,
    },
    UncoveredArc {
        arc: Arc,
    },
}

impl fmt::Display for FactorizationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorizationViolation::FactorCount { expected, got } => {
                write!(f, "expected {expected} factors, got {got}")
            }
            FactorizationViolation::Factor { factor, violation } => {
                write!(f, "factor {factor}: {violation}")
            }
            FactorizationViolation::DuplicateArc {
                arc,
                first_factor,
                second_factor,
            } => {
                write!(
                    f,
                    "arc {arc} appears in factors {first_factor} and {second_factor}"
                )
            }
            FactorizationViolation::UncoveredArc { arc } => {
                write!(f, "arc {arc} is not covered by any factor")
            }
        }
    }
}

/// Checks out-degree 1 and in-degree 1 at every vertex.
pub fn validate_linear_factor(f: &LinearFactor) -> Report<FactorViolation> {
    let n = f.order();
    let mut outdeg = vec![0usize; n];
    let mut indeg = vec![0usize; n];
    for arc in f.arcs() {
        outdeg[arc.tail] += 1;
        indeg[arc.head] += 1;
    }
    let mut report = Report::new();
    for v in 0..n {
        if outdeg[v] != 1 {
            report.push(FactorViolation::OutDegree {
                vertex: v,
                degree: outdeg[v],
            });
        }
        if indeg[v] != 1 {
            report.push(FactorViolation::InDegree {
                vertex: v,
                degree: indeg[v],
            });
        }
    }
    report
}

/// Checks that the factors are n valid linear factors covering all n^2
/// arcs exactly once. Arc-level violations come out in lexicographic order.
pub fn validate_factorization(fz: &LinearFactorization) -> Report<FactorizationViolation> {
    let n = fz.order();
    let mut report = Report::new();
    if fz.factors().len() != n {
        report.push(FactorizationViolation::FactorCount {
            expected: n,
            got: fz.factors().len(),
        });
    }
    for (i, factor) in fz.factors().iter().enumerate() {
        for violation in validate_linear_factor(factor).violations() {
            report.push(FactorizationViolation::Factor {
                factor: i,
                violation: violation.clone(),
            });
        }
    }
    let mut count = vec![0u32; n * n];
    let mut first = vec![0usize; n * n];
    let mut second = vec![0usize; n * n];
    for (i, factor) in fz.factors().iter().enumerate() {
        for arc in factor.arcs() {
            let idx = arc.tail * n + arc.head;
            match count[idx] {
                0 => first[idx] = i,
                1 => second[idx] = i,
                _ => {}
            }
            count[idx] += 1;
        }
    }
    for tail in 0..n {
        for head in 0..n {
            let idx = tail * n + head;
            let arc = Arc::new(tail, head);
            match count[idx] {
                0 => report.push(FactorizationViolation::UncoveredArc { arc }),
                1 => {}
                _ => report.push(FactorizationViolation::DuplicateArc {
                    arc,
                    first_factor: first[idx],
                    second_factor: second[idx],
                }),
            }
        }
    }
    report
}

/// Multiset of cycle lengths of a valid factor, sorted ascending.
pub fn cycle_structure(f: &LinearFactor) -> Result<Vec<usize>, Error> {
    let report = validate_linear_factor(f);
    if !report.is_ok() {
        return Err(Error::InvalidLinearFactor(report));
    }
    let n = f.order();
    let mut next = vec![0usize; n];
    for arc in f.arcs() {
        next[arc.tail] = arc.head;
    }
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            len += 1;
            v = next[v];
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    Ok(lengths)
}

/// Adds c to both endpoints of every arc, mod n.
pub fn translate_factor(f: &LinearFactor, c: usize) -> LinearFactor {
    let n = f.order();
    let c = c % n;
    let mut arcs: Vec<Arc> = f
        .arcs()
        .iter()
        .map(|a| Arc::new((a.tail + c) % n, (a.head + c) % n))
        .collect();
    arcs.sort_unstable();
    // translation is a bijection on arcs, so distinctness survives
    LinearFactor { order: n, arcs }
}

/// The multiset `head - tail mod n`, in arc order.
pub fn arc_differences(f: &LinearFactor) -> Vec<usize> {
    let n = f.order();
    f.arcs().iter().map(|a| (a.head + n - a.tail) % n).collect()
}

/// Develops a difference-complete starter into the factorization whose
/// factor c is the starter translated by c.
///
/// Translation shifts every arc difference by nothing and every vertex by
/// c, so distinct residues in the starter make the n translates pairwise
/// disjoint and jointly exhaustive.
pub fn cyclic_factorization_from_starter(
    starter: &LinearFactor,
) -> Result<LinearFactorization, Error> {
    let report = validate_linear_factor(starter);
    if !report.is_ok() {
        return Err(Error::InvalidLinearFactor(report));
    }
    let n = starter.order();
    let mut count = vec![0usize; n];
    for d in arc_differences(starter) {
        count[d] += 1;
    }
    let duplicated: Vec<usize> = (0..n).filter(|&d| count[d] > 1).collect();
    let missing: Vec<usize> = (0..n).filter(|&d| count[d] == 0).collect();
    if !duplicated.is_empty() || !missing.is_empty() {
        return Err(Error::NotDifferenceComplete {
            duplicated,
            missing,
        });
    }
    let factors = (0..n).map(|c| translate_factor(starter, c)).collect();
    Ok(LinearFactorization::from_factors(n, factors))
}

/// Exact search for a difference-complete linear factor on `0..n` whose
/// cycle decomposition contains a d-gon exactly on each required vertex set.
///
/// Backtracks over successors of vertex 0, 1, .. trying heads in ascending
/// order, so the first solution found is the least one under lexicographic
/// order on sorted arc lists. Returns `Ok(None)` when the search space is
/// exhausted; for even n that is guaranteed, since the n differences of a
/// factor sum to `n(n-1)/2 mod n`, which is `n/2`, not 0, while a complete
/// residue system sums to 0.
pub fn find_starter_factor(
    n: usize,
    required_gons: &[Vec<usize>],
) -> Result<Option<LinearFactor>, Error> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut req_of: Vec<Option<usize>> = vec![None; n];
    let mut sizes = Vec::with_capacity(required_gons.len());
    for (i, set) in required_gons.iter().enumerate() {
        if set.is_empty() {
            return Err(Error::EmptyRequirement);
        }
        for &v in set {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            match req_of[v] {
                Some(j) if j == i => return Err(Error::DuplicateRequirementVertex(v)),
                Some(_) => return Err(Error::OverlappingRequirements(v)),
                None => req_of[v] = Some(i),
            }
        }
        sizes.push(set.len());
    }
    let mut state = StarterSearch {
        n,
        req_of,
        sizes,
        sigma: vec![usize::MAX; n],
        head_used: vec![false; n],
        diff_used: vec![false; n],
    };
    if state.search(0) {
        let arcs = (0..n).map(|v| Arc::new(v, state.sigma[v])).collect();
        Ok(Some(LinearFactor { order: n, arcs }))
    } else {
        Ok(None)
    }
}

struct StarterSearch {
    n: usize,
    req_of: Vec<Option<usize>>,
    sizes: Vec<usize>,
    sigma: Vec<usize>,
    head_used: Vec<bool>,
    diff_used: Vec<bool>,
}

impl StarterSearch {
    fn search(&mut self, v: usize) -> bool {
        if v == self.n {
            return true;
        }
        for u in 0..self.n {
            if self.head_used[u] {
                continue;
            }
            let d = (u + self.n - v) % self.n;
            if self.diff_used[d] {
                continue;
            }
            // a required set must close into a single cycle of its own size;
            // arcs may neither leave nor enter it
            if self.req_of[v] != self.req_of[u] {
                continue;
            }
            if let Some(r) = self.req_of[v] {
                if let Some(len) = self.cycle_length_if_closed(v, u) {
                    if len != self.sizes[r] {
                        continue;
                    }
                }
            }
            self.sigma[v] = u;
            self.head_used[u] = true;
            self.diff_used[d] = true;
            if self.search(v + 1) {
                return true;
            }
            self.sigma[v] = usize::MAX;
            self.head_used[u] = false;
            self.diff_used[d] = false;
        }
        false
    }

    /// If assigning `sigma[v] = u` would close a cycle, its vertex count.
    ///
    /// The walk terminates: u has no incoming arc yet, so the chain from u
    /// cannot run into an already-closed cycle.
    fn cycle_length_if_closed(&self, v: usize, u: usize) -> Option<usize> {
        let mut x = u;
        let mut len = 1;
        loop {
            if x == v {
                return Some(len);
            }
            if self.sigma[x] == usize::MAX {
                return None;
            }
            x = self.sigma[x];
            len += 1;
        }
    }
}
