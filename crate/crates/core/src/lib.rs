//! Decompositions of complete graphs, the quasigroup and linear
//! factorization machinery of complete digraphs with loops, and an exact
//! engine that turns a factorization into an n-coloring of a
//! decomposition's parts.
//!
//! The pieces fit together like this:
//!
//! * [`decomposition`]: parts covering every edge of `K_n` exactly once,
//!   generators for standard families, and the part-intersection graph.
//! * [`quasigroup`]: Latin squares, whose columns read as arc sets give a
//!   linear factorization of the complete digraph with loops, and the way
//!   back from a factorization to a table.
//! * [`factorization`]: linear factors, their cycle structure, and cyclic
//!   factorizations developed from a difference-complete starter, with an
//!   exact backtracking search for starters with prescribed d-gons.
//! * [`theorem`]: the assignment search mapping parts to factors so their
//!   restrictions are disjoint linear factors, the colorings that fall out
//!   of such an assignment (never more than n colors), and an independent
//!   exact chromatic-index oracle to confirm the bound.
//! * [`formats`]: deterministic text formats for all of the above.

pub mod decomposition;
pub mod error;
pub mod factorization;
pub mod formats;
pub mod quasigroup;
pub mod report;
pub mod theorem;

mod chromatic;

pub use decomposition::{
    cyclic_sts, edge_decomposition, intersection_graph, near_pencil, single_part,
    validate_decomposition, Decomposition, DecompositionViolation, IntersectionGraph, Part,
};
pub use error::Error;
pub use factorization::{
    arc_differences, cycle_structure, cyclic_factorization_from_starter, find_starter_factor,
    translate_factor, validate_factorization, validate_linear_factor, Arc, FactorViolation,
    FactorizationViolation, LinearFactor, LinearFactorization,
};
pub use quasigroup::{
    cayley_factorization, quasigroup_from_factorization, validate_latin_square, LatinViolation,
    Quasigroup,
};
pub use report::Report;
pub use theorem::{
    chromatic_index_exact, coloring_from_assignment, find_assignment, is_linear_factor_of_part,
    restrict, verify_assignment, verify_efl_bound, verify_p_coloring, Assignment,
    AssignmentViolation, ColorLabeling, EflReport, PColoring, PColoringViolation, DEFAULT_PART_CAP,
};

pub(crate) fn is_permutation(xs: &[usize]) -> bool {
    let mut seen = vec![false; xs.len()];
    for &x in xs {
        if x >= xs.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}
