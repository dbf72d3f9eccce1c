//! From factorizations to colorings.
//!
//! The bridge is an assignment h mapping each part p of a decomposition to
//! a factor whose restriction to p is a linear factor of the complete
//! digraph with loops on p, with all restrictions pairwise arc-disjoint.
//! Composing h with any bijective labeling of the n factors then colors
//! the parts with at most n colors: two parts sharing a vertex v cannot
//! take the same factor, since both restrictions would contain the loop at
//! v. [`find_assignment`] searches for h exactly, [`verify_assignment`]
//! and [`verify_p_coloring`] check witnesses against the definitions, and
//! [`chromatic_index_exact`] computes the true chromatic index so the
//! bound can be confirmed independently.

use std::collections::BTreeSet;
use std::fmt;

use crate::decomposition::{intersection_graph, validate_decomposition, Decomposition, Part};
use crate::error::Error;
use crate::factorization::{validate_factorization, Arc, LinearFactor, LinearFactorization};
use crate::report::Report;

/// Default limit on the number of parts the exact oracle will accept.
pub const DEFAULT_PART_CAP: usize = 40;

/// Map from part index to factor index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    order: usize,
    factor_of: Vec<usize>,
}

impl Assignment {
    pub fn new(order: usize, factor_of: Vec<usize>) -> Self {
        Assignment { order, factor_of }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factor_of(&self, part: usize) -> usize {
        self.factor_of[part]
    }

    pub fn part_count(&self) -> usize {
        self.factor_of.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.factor_of
    }
}

/// Bijection from factor indices to colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorLabeling {
    map: Vec<usize>,
}

impl ColorLabeling {
    pub fn identity(n: usize) -> Self {
        ColorLabeling {
            map: (0..n).collect(),
        }
    }

    pub fn new(map: Vec<usize>) -> Result<Self, Error> {
        if !crate::is_permutation(&map) {
            return Err(Error::InvalidLabeling { order: map.len() });
        }
        Ok(ColorLabeling { map })
    }

    pub fn order(&self) -> usize {
        self.map.len()
    }

    pub fn color_of(&self, factor: usize) -> usize {
        self.map[factor]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// A coloring of the parts of a decomposition with colors `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PColoring {
    order: usize,
    num_colors: usize,
    colors: Vec<usize>,
}

impl PColoring {
    pub fn new(order: usize, num_colors: usize, colors: Vec<usize>) -> Self {
        PColoring {
            order,
            num_colors,
            colors,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, part: usize) -> usize {
        self.colors[part]
    }
}

/// Arcs of f living inside p: loops at vertices of p, plus non-loop arcs
/// with both endpoints in p. Output stays sorted.
pub fn restrict(p: &Part, f: &LinearFactor) -> Vec<Arc> {
    f.arcs()
        .iter()
        .copied()
        .filter(|a| {
            if a.is_loop() {
                p.contains(a.tail)
            } else {
                p.contains(a.tail) && p.contains(a.head)
            }
        })
        .collect()
}

/// Does `arcs` give every vertex of p out-degree 1 and in-degree 1, with
/// no arc leaving p?
pub fn is_linear_factor_of_part(arcs: &[Arc], p: &Part) -> bool {
    let k = p.vertices().len();
    let mut outdeg = vec![0usize; k];
    let mut indeg = vec![0usize; k];
    for arc in arcs {
        let (Some(t), Some(h)) = (p.index_of(arc.tail), p.index_of(arc.head)) else {
            return false;
        };
        outdeg[t] += 1;
        indeg[h] += 1;
    }
    outdeg.iter().all(|&d| d == 1) && indeg.iter().all(|&d| d == 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssignmentViolation {
    OrderMismatch {
        expected: usize,
        got: usize,
    },
    PartCountMismatch {
        expected: usize,
        got: usize,
    },
    FactorOutOfRange {
        part: usize,
        factor: usize,
    },
    NotLinearFactorOfPart {
        part: usize,
        factor: usize,
    },
    RestrictionsIntersect {
        part_a: usize,
        part_b: usize,
        arc: Arc,
    },
}

impl fmt::Display for AssignmentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssignmentViolation::OrderMismatch { expected, got } => {
                write!(f, "assignment is for order {got}, expected {expected}")
            }
            AssignmentViolation::PartCountMismatch { expected, got } => {
                write!(f, "assignment covers {got} parts, expected {expected}")
            }
            AssignmentViolation::FactorOutOfRange { part, factor } => {
                write!(f, "part {part} is assigned nonexistent factor {factor}")
            }
            AssignmentViolation::NotLinearFactorOfPart { part, factor } => {
                write!(
                    f,
                    "factor {factor} does not restrict to a linear factor on part {part}"
                )
            }
            AssignmentViolation::RestrictionsIntersect {
                part_a,
                part_b,
                arc,
            } => {
                write!(f, "parts {part_a} and {part_b} both use arc {arc}")
            }
        }
    }
}

/// Checks an assignment against the definition: every restriction a linear
/// factor of its part, all restrictions pairwise arc-disjoint. Works from
/// the actual arc sets, independent of how the witness was found.
pub fn verify_assignment(
    d: &Decomposition,
    fz: &LinearFactorization,
    h: &Assignment,
) -> Report<AssignmentViolation> {
    let mut report = Report::new();
    if h.order() != d.order() || d.order() != fz.order() {
        report.push(AssignmentViolation::OrderMismatch {
            expected: d.order(),
            got: h.order(),
        });
        return report;
    }
    let parts = d.parts();
    if h.part_count() != parts.len() {
        report.push(AssignmentViolation::PartCountMismatch {
            expected: parts.len(),
            got: h.part_count(),
        });
        return report;
    }
    let mut restrictions: Vec<Option<Vec<Arc>>> = Vec::with_capacity(parts.len());
    for (pi, part) in parts.iter().enumerate() {
        let factor = h.factor_of(pi);
        if factor >= fz.factors().len() {
            report.push(AssignmentViolation::FactorOutOfRange { part: pi, factor });
            restrictions.push(None);
            continue;
        }
        let arcs = restrict(part, &fz.factors()[factor]);
        if !is_linear_factor_of_part(&arcs, part) {
            report.push(AssignmentViolation::NotLinearFactorOfPart { part: pi, factor });
        }
        restrictions.push(Some(arcs));
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (Some(a), Some(b)) = (&restrictions[i], &restrictions[j]) else {
                continue;
            };
            if let Some(arc) = first_common_arc(a, b) {
                report.push(AssignmentViolation::RestrictionsIntersect {
                    part_a: i,
                    part_b: j,
                    arc,
                });
            }
        }
    }
    report
}

fn first_common_arc(a: &[Arc], b: &[Arc]) -> Option<Arc> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return Some(a[i]),
        }
    }
    None
}

/// Exact search for an assignment, least witness first under
/// part-index-major lexicographic order.
///
/// For a valid decomposition a non-loop arc of a restriction has both
/// endpoints in one part, and two parts share at most one vertex, so
/// restrictions of distinct parts can only collide on loops. The search
/// therefore tracks loop ownership as its only cross-part constraint,
/// walking parts in index order and factors in ascending order.
pub fn find_assignment(
    d: &Decomposition,
    fz: &LinearFactorization,
) -> Result<Option<Assignment>, Error> {
    if d.order() != fz.order() {
        return Err(Error::OrderMismatch {
            left: d.order(),
            right: fz.order(),
        });
    }
    let dreport = validate_decomposition(d);
    if !dreport.is_ok() {
        return Err(Error::InvalidDecomposition(dreport));
    }
    let freport = validate_factorization(fz);
    if !freport.is_ok() {
        return Err(Error::InvalidFactorization(freport));
    }
    let n = d.order();
    let parts = d.parts();
    // admissible factors per part, each with the loop vertices its
    // restriction would consume
    let mut candidates: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(parts.len());
    for part in parts {
        let mut list = Vec::new();
        for (i, factor) in fz.factors().iter().enumerate() {
            let arcs = restrict(part, factor);
            if is_linear_factor_of_part(&arcs, part) {
                let loops = arcs
                    .iter()
                    .filter(|a| a.is_loop())
                    .map(|a| a.tail)
                    .collect();
                list.push((i, loops));
            }
        }
        if list.is_empty() {
            return Ok(None);
        }
        candidates.push(list);
    }
    let mut choice = vec![0usize; parts.len()];
    let mut loop_taken = vec![false; n];
    if assign_rec(0, &candidates, &mut choice, &mut loop_taken) {
        let h = Assignment::new(n, choice);
        // re-check the witness against the definition
        assert!(
            verify_assignment(d, fz, &h).is_ok(),
            "assignment search produced an invalid witness"
        );
        Ok(Some(h))
    } else {
        Ok(None)
    }
}

fn assign_rec(
    p: usize,
    candidates: &[Vec<(usize, Vec<usize>)>],
    choice: &mut [usize],
    loop_taken: &mut [bool],
) -> bool {
    if p == candidates.len() {
        return true;
    }
    'next: for (factor, loops) in &candidates[p] {
        for &v in loops {
            if loop_taken[v] {
                continue 'next;
            }
        }
        for &v in loops {
            loop_taken[v] = true;
        }
        choice[p] = *factor;
        if assign_rec(p + 1, candidates, choice, loop_taken) {
            return true;
        }
        for &v in loops {
            loop_taken[v] = false;
        }
    }
    false
}

/// Colors part p with `labeling(h(p))`, then renumbers the colors actually
/// used to `0..k` preserving their order.
pub fn coloring_from_assignment(
    d: &Decomposition,
    fz: &LinearFactorization,
    h: &Assignment,
    labeling: &ColorLabeling,
) -> Result<PColoring, Error> {
    if d.order() != fz.order() {
        return Err(Error::OrderMismatch {
            left: d.order(),
            right: fz.order(),
        });
    }
    if labeling.order() != fz.order() {
        return Err(Error::OrderMismatch {
            left: labeling.order(),
            right: fz.order(),
        });
    }
    let report = verify_assignment(d, fz, h);
    if !report.is_ok() {
        return Err(Error::InvalidAssignment(report));
    }
    let raw: Vec<usize> = (0..d.parts().len())
        .map(|p| labeling.color_of(h.factor_of(p)))
        .collect();
    let used: Vec<usize> = raw
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let colors = raw
        .iter()
        .map(|c| used.binary_search(c).expect("color is in the used set"))
        .collect();
    Ok(PColoring::new(d.order(), used.len(), colors))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PColoringViolation {
    OrderMismatch {
        expected: usize,
        got: usize,
    },
    PartCountMismatch {
        expected: usize,
        got: usize,
    },
    ColorOutOfRange {
        part: usize,
        color: usize,
        num_colors: usize,
    },
    SharedVertexSameColor {
        part_a: usize,
        part_b: usize,
        vertex: usize,
        color: usize,
    },
    UnusedColor {
        color: usize,
    },
}

impl fmt::Display for PColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PColoringViolation::OrderMismatch { expected, got } => {
                write!(f, "coloring is for order {got}, expected {expected}")
            }
            PColoringViolation::PartCountMismatch { expected, got } => {
                write!(f, "coloring covers {got} parts, expected {expected}")
            }
            PColoringViolation::ColorOutOfRange {
                part,
                color,
                num_colors,
            } => {
                write!(
                    f,
                    "part {part} has color {color}, expected below {num_colors}"
                )
            }
            PColoringViolation::SharedVertexSameColor {
                part_a,
                part_b,
                vertex,
                color,
            } => {
                write!(
                    f,
                    "parts {part_a} and {part_b} share vertex {vertex} but both have color {color}"
                )
            }
            PColoringViolation::UnusedColor { color } => {
                write!(f, "color {color} is never used")
            }
        }
    }
}

/// Checks a coloring certificate: declared colors in range and all used,
/// and no two intersecting parts sharing a color.
pub fn verify_p_coloring(d: &Decomposition, col: &PColoring) -> Report<PColoringViolation> {
    let mut report = Report::new();
    if col.order() != d.order() {
        report.push(PColoringViolation::OrderMismatch {
            expected: d.order(),
            got: col.order(),
        });
    }
    let parts = d.parts();
    if col.colors().len() != parts.len() {
        report.push(PColoringViolation::PartCountMismatch {
            expected: parts.len(),
            got: col.colors().len(),
        });
        return report;
    }
    let k = col.num_colors();
    for (part, &color) in col.colors().iter().enumerate() {
        if color >= k {
            report.push(PColoringViolation::ColorOutOfRange {
                part,
                color,
                num_colors: k,
            });
        }
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if col.colors()[i] != col.colors()[j] {
                continue;
            }
            if let Some(vertex) = parts[i].common_vertex(&parts[j]) {
                report.push(PColoringViolation::SharedVertexSameColor {
                    part_a: i,
                    part_b: j,
                    vertex,
                    color: col.colors()[i],
                });
            }
        }
    }
    let mut seen = vec![false; k];
    for &color in col.colors() {
        if color < k {
            seen[color] = true;
        }
    }
    for (color, &used) in seen.iter().enumerate() {
        if !used {
            report.push(PColoringViolation::UnusedColor { color });
        }
    }
    report
}

/// Exact chromatic index: the chromatic number of the part-intersection
/// graph. Refuses decompositions with more than `cap` parts, since the
/// search is exponential in the worst case.
pub fn chromatic_index_exact(d: &Decomposition, cap: usize) -> Result<usize, Error> {
    let report = validate_decomposition(d);
    if !report.is_ok() {
        return Err(Error::InvalidDecomposition(report));
    }
    if d.parts().len() > cap {
        return Err(Error::PartCapExceeded {
            parts: d.parts().len(),
            cap,
        });
    }
    if d.parts().is_empty() {
        return Ok(0);
    }
    Ok(crate::chromatic::chromatic_number(&intersection_graph(d)))
}

/// Exact chromatic index next to the order it must not exceed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EflReport {
    pub order: usize,
    pub chi_prime: usize,
    pub holds: bool,
}

pub fn verify_efl_bound(d: &Decomposition, cap: usize) -> Result<EflReport, Error> {
    let chi_prime = chromatic_index_exact(d, cap)?;
    Ok(EflReport {
        order: d.order(),
        chi_prime,
        holds: chi_prime <= d.order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{cyclic_sts, edge_decomposition, near_pencil, single_part};
    use crate::factorization::{cyclic_factorization_from_starter, find_starter_factor};
    use crate::quasigroup::{cayley_factorization, Quasigroup};

    fn part(vs: &[usize]) -> Part {
        Part::new(vs.to_vec()).unwrap()
    }

    fn z_n_factorization(n: usize) -> LinearFactorization {
        cayley_factorization(&Quasigroup::cyclic(n).unwrap())
    }

    #[test]
    fn restrict_keeps_loops_and_internal_arcs() {
        let f = LinearFactor::new(
            7,
            [(0, 1), (1, 3), (3, 0), (4, 2), (2, 5), (5, 4), (6, 6)]
                .iter()
                .map(|&(t, h)| Arc::new(t, h))
                .collect(),
        )
        .unwrap();
        let p = part(&[0, 1, 3]);
        assert_eq!(
            restrict(&p, &f),
            vec![Arc::new(0, 1), Arc::new(1, 3), Arc::new(3, 0)]
        );
        assert!(is_linear_factor_of_part(&restrict(&p, &f), &p));

        let q = part(&[2, 4, 6]);
        // 2 -> 5 and 5 -> 4 leave the part; (4,2) and the loop at 6 stay
        assert_eq!(restrict(&q, &f), vec![Arc::new(4, 2), Arc::new(6, 6)]);
        assert!(!is_linear_factor_of_part(&restrict(&q, &f), &q));
    }

    #[test]
    fn loop_factor_restricts_to_any_part() {
        let loops = LinearFactor::loops(5).unwrap();
        let p = part(&[1, 3]);
        let arcs = restrict(&p, &loops);
        assert_eq!(arcs, vec![Arc::new(1, 1), Arc::new(3, 3)]);
        assert!(is_linear_factor_of_part(&arcs, &p));
    }

    #[test]
    fn is_linear_factor_rejects_escaping_arcs() {
        let p = part(&[0, 1]);
        assert!(!is_linear_factor_of_part(
            &[Arc::new(0, 1), Arc::new(1, 2)],
            &p
        ));
        assert!(is_linear_factor_of_part(
            &[Arc::new(0, 1), Arc::new(1, 0)],
            &p
        ));
        assert!(!is_linear_factor_of_part(
            &[Arc::new(0, 0), Arc::new(1, 1), Arc::new(0, 1)],
            &p
        ));
    }

    #[test]
    fn single_part_takes_the_first_factor() {
        for n in 2..=5 {
            let d = single_part(n).unwrap();
            let h = find_assignment(&d, &z_n_factorization(n)).unwrap().unwrap();
            assert_eq!(h.as_slice(), &[0]);
        }
    }

    #[test]
    fn fano_assignment_follows_the_translation_shifts() {
        let d = cyclic_sts(7, &[[0, 1, 3]]).unwrap();
        let starter = find_starter_factor(7, &[vec![0, 1, 3]]).unwrap().unwrap();
        let fz = cyclic_factorization_from_starter(&starter).unwrap();
        let h = find_assignment(&d, &fz).unwrap().unwrap();
        assert!(verify_assignment(&d, &fz, &h).is_ok());
        // block {0,1,3}+c admits exactly the factor translated by c
        for (pi, p) in d.parts().iter().enumerate() {
            let c = h.factor_of(pi);
            let mut expected: Vec<usize> = [0usize, 1, 3].iter().map(|&v| (v + c) % 7).collect();
            expected.sort_unstable();
            assert_eq!(p.vertices(), &expected[..], "part {pi}");
        }
    }

    #[test]
    fn edge_decomposition_of_k3_admits_no_assignment_over_z3() {
        let d = edge_decomposition(3).unwrap();
        let fz = z_n_factorization(3);
        assert_eq!(find_assignment(&d, &fz).unwrap(), None);
        // cross-check by scanning all 27 candidate assignments
        for a in 0..3usize {
            for b in 0..3usize {
                for c in 0..3usize {
                    let h = Assignment::new(3, vec![a, b, c]);
                    assert!(!verify_assignment(&d, &fz, &h).is_ok(), "h = [{a},{b},{c}]");
                }
            }
        }
    }

    #[test]
    fn find_assignment_rejects_bad_inputs() {
        let d = single_part(3).unwrap();
        assert!(matches!(
            find_assignment(&d, &z_n_factorization(4)),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        ));
        let broken = Decomposition::new(3, vec![part(&[0, 1])]).unwrap();
        assert!(matches!(
            find_assignment(&broken, &z_n_factorization(3)),
            Err(Error::InvalidDecomposition(_))
        ));
        let loops = LinearFactor::loops(3).unwrap();
        let bad_fz = LinearFactorization::new(3, vec![loops]).unwrap();
        assert!(matches!(
            find_assignment(&d, &bad_fz),
            Err(Error::InvalidFactorization(_))
        ));
    }

    #[test]
    fn verify_assignment_reports_loop_collisions() {
        // both pendant edges of the near-pencil on 4 vertices take the
        // loop-heavy factor 0, colliding on the loop at vertex 3
        let d = near_pencil(4).unwrap();
        let fz = z_n_factorization(4);
        let h = Assignment::new(4, vec![1, 0, 0, 2]);
        let report = verify_assignment(&d, &fz, &h);
        assert!(report.violations().iter().any(|v| matches!(
            v,
            AssignmentViolation::RestrictionsIntersect { arc, .. } if arc.is_loop()
        )));
    }

    #[test]
    fn verify_assignment_flags_shape_problems() {
        let d = single_part(3).unwrap();
        let fz = z_n_factorization(3);
        let short = Assignment::new(3, vec![]);
        assert_eq!(
            verify_assignment(&d, &fz, &short).violations(),
            &[AssignmentViolation::PartCountMismatch {
                expected: 1,
                got: 0
            }]
        );
        let out = Assignment::new(3, vec![7]);
        assert_eq!(
            verify_assignment(&d, &fz, &out).violations(),
            &[AssignmentViolation::FactorOutOfRange { part: 0, factor: 7 }]
        );
        let wrong_order = Assignment::new(2, vec![0]);
        assert_eq!(
            verify_assignment(&d, &fz, &wrong_order).violations(),
            &[AssignmentViolation::OrderMismatch {
                expected: 3,
                got: 2
            }]
        );
    }

    #[test]
    fn coloring_renumbers_used_colors_in_order() {
        let d = single_part(4).unwrap();
        let fz = z_n_factorization(4);
        let h = find_assignment(&d, &fz).unwrap().unwrap();
        let labeling = ColorLabeling::new(vec![3, 0, 1, 2]).unwrap();
        let col = coloring_from_assignment(&d, &fz, &h, &labeling).unwrap();
        // the single part maps to factor 0, label 3, renumbered to color 0
        assert_eq!(col.num_colors(), 1);
        assert_eq!(col.colors(), &[0]);
        assert!(verify_p_coloring(&d, &col).is_ok());
    }

    #[test]
    fn fano_coloring_uses_seven_colors_and_verifies() {
        let d = cyclic_sts(7, &[[0, 1, 3]]).unwrap();
        let starter = find_starter_factor(7, &[vec![0, 1, 3]]).unwrap().unwrap();
        let fz = cyclic_factorization_from_starter(&starter).unwrap();
        let h = find_assignment(&d, &fz).unwrap().unwrap();
        let col = coloring_from_assignment(&d, &fz, &h, &ColorLabeling::identity(7)).unwrap();
        assert_eq!(col.num_colors(), 7);
        assert!(verify_p_coloring(&d, &col).is_ok());
    }

    #[test]
    fn coloring_rejects_invalid_assignments() {
        let d = near_pencil(4).unwrap();
        let fz = z_n_factorization(4);
        let h = Assignment::new(4, vec![0, 0, 0, 0]);
        assert!(matches!(
            coloring_from_assignment(&d, &fz, &h, &ColorLabeling::identity(4)),
            Err(Error::InvalidAssignment(_))
        ));
    }

    #[test]
    fn verify_p_coloring_catches_conflicts_and_gaps() {
        let d = edge_decomposition(3).unwrap();
        assert!(verify_p_coloring(&d, &PColoring::new(3, 3, vec![0, 1, 2])).is_ok());

        let clash = PColoring::new(3, 2, vec![0, 0, 1]);
        let report = verify_p_coloring(&d, &clash);
        assert!(report
            .violations()
            .contains(&PColoringViolation::SharedVertexSameColor {
                part_a: 0,
                part_b: 1,
                vertex: 0,
                color: 0,
            }));

        let gap = PColoring::new(3, 4, vec![0, 1, 2]);
        let report = verify_p_coloring(&d, &gap);
        assert_eq!(
            report.violations(),
            &[PColoringViolation::UnusedColor { color: 3 }]
        );

        let out = PColoring::new(3, 2, vec![0, 1, 5]);
        let report = verify_p_coloring(&d, &out);
        assert!(report
            .violations()
            .contains(&PColoringViolation::ColorOutOfRange {
                part: 2,
                color: 5,
                num_colors: 2
            }));

        let short = PColoring::new(3, 3, vec![0, 1]);
        assert_eq!(
            verify_p_coloring(&d, &short).violations(),
            &[PColoringViolation::PartCountMismatch {
                expected: 3,
                got: 2
            }]
        );
    }

    #[test]
    fn chromatic_index_of_standard_families() {
        assert_eq!(
            chromatic_index_exact(&single_part(5).unwrap(), DEFAULT_PART_CAP).unwrap(),
            1
        );
        assert_eq!(
            chromatic_index_exact(&near_pencil(5).unwrap(), DEFAULT_PART_CAP).unwrap(),
            5
        );
        assert_eq!(
            chromatic_index_exact(&cyclic_sts(7, &[[0, 1, 3]]).unwrap(), DEFAULT_PART_CAP).unwrap(),
            7
        );
    }

    #[test]
    fn chromatic_index_respects_the_cap() {
        let d = near_pencil(5).unwrap();
        assert!(matches!(
            chromatic_index_exact(&d, 3),
            Err(Error::PartCapExceeded { parts: 5, cap: 3 })
        ));
    }

    #[test]
    fn efl_bound_reports() {
        let r = verify_efl_bound(&edge_decomposition(4).unwrap(), DEFAULT_PART_CAP).unwrap();
        assert_eq!(r.chi_prime, 3); // proper edge coloring of K_4
        assert!(r.holds);
        let r = verify_efl_bound(&near_pencil(6).unwrap(), DEFAULT_PART_CAP).unwrap();
        assert_eq!(r.chi_prime, 6);
        assert!(r.holds);
    }

    #[test]
    fn labeling_must_be_a_permutation() {
        assert!(ColorLabeling::new(vec![0, 2, 1]).is_ok());
        assert!(matches!(
            ColorLabeling::new(vec![0, 0, 1]),
            Err(Error::InvalidLabeling { order: 3 })
        ));
        assert!(matches!(
            ColorLabeling::new(vec![0, 3, 1]),
            Err(Error::InvalidLabeling { order: 3 })
        ));
        assert_eq!(ColorLabeling::identity(4).as_slice(), &[0, 1, 2, 3]);
    }
}
