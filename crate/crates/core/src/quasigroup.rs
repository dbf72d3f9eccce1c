//! Quasigroups (Latin squares) and their Cayley factorizations.
//!
//! The multiplication table `table[x][a] = x * a` of a quasigroup of order
//! n is a Latin square: every row and every column is a permutation of
//! `0..n`. Column a read as the arc set `(x, x * a)` is a linear factor,
//! and the n columns together split all n^2 arcs of the complete digraph
//! with loops, giving a linear factorization. The correspondence runs both
//! ways: any linear factorization plus a bijective labeling of its factors
//! yields a quasigroup.

use std::fmt;

use crate::error::Error;
use crate::factorization::{validate_factorization, Arc, LinearFactor, LinearFactorization};
use crate::report::Report;

/// A quasigroup, held as its multiplication table. Construction validates,
/// so a value of this type is always a Latin square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasigroup {
    table: Vec<Vec<usize>>,
}

impl Quasigroup {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, Error> {
        let report = validate_latin_square(&table);
        if report.is_ok() {
            Ok(Quasigroup { table })
        } else {
            Err(Error::InvalidLatinSquare(report))
        }
    }

    /// The cyclic group Z_n: `x * a = x + a mod n`.
    pub fn cyclic(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let table = (0..n)
            .map(|x| (0..n).map(|a| (x + a) % n).collect())
            .collect();
        Ok(Quasigroup { table })
    }

    pub(crate) fn from_table(table: Vec<Vec<usize>>) -> Self {
        debug_assert!(validate_latin_square(&table).is_ok());
        Quasigroup { table }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, x: usize, a: usize) -> usize {
        self.table[x][a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatinViolation {
    EmptyTable,
    RaggedRow {
        row: usize,
        len: usize,
        order: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    RowDuplicate {
        row: usize,
        value: usize,
    },
    ColumnDuplicate {
        col: usize,
        value: usize,
    },
}

impl fmt::Display for LatinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatinViolation::EmptyTable => write!(f, "table is empty"),
            LatinViolation::RaggedRow { row, len, order } => {
                write!(f, "row {row} has {len} entries, expected {order}")
            }
            LatinViolation::EntryOutOfRange { row, col, value } => {
                write!(
                    f,
                    "entry {value} at row {row}, column {col} is out of range"
                )
            }
            LatinViolation::RowDuplicate { row, value } => {
                write!(f, "row {row} repeats {value}")
            }
            LatinViolation::ColumnDuplicate { col, value } => {
                write!(f, "column {col} repeats {value}")
            }
        }
    }
}

/// Checks the Latin square property of a raw table.
///
/// Shape problems (ragged rows, out-of-range entries) suppress the
/// duplicate scan, which would be meaningless on a malformed table.
/// Each duplicated value is reported once per row or column.
pub fn validate_latin_square(table: &[Vec<usize>]) -> Report<LatinViolation> {
    let mut report = Report::new();
    if table.is_empty() {
        report.push(LatinViolation::EmptyTable);
        return report;
    }
    let n = table.len();
    let mut shape_ok = true;
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != n {
            report.push(LatinViolation::RaggedRow {
                row,
                len: entries.len(),
                order: n,
            });
            shape_ok = false;
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                report.push(LatinViolation::EntryOutOfRange { row, col, value });
                shape_ok = false;
            }
        }
    }
    if !shape_ok {
        return report;
    }
    for (row, entries) in table.iter().enumerate() {
        let mut count = vec![0usize; n];
        for &value in entries {
            count[value] += 1;
        }
        for (value, &c) in count.iter().enumerate() {
            if c > 1 {
                report.push(LatinViolation::RowDuplicate { row, value });
            }
        }
    }
    for col in 0..n {
        let mut count = vec![0usize; n];
        for row in table {
            count[row[col]] += 1;
        }
        for (value, &c) in count.iter().enumerate() {
            if c > 1 {
                report.push(LatinViolation::ColumnDuplicate { col, value });
            }
        }
    }
    report
}

/// Factor a of the result is the arc set `(x, x * a)` for column a.
///
/// Rows being permutations makes the factors pairwise disjoint and
/// exhaustive; columns being permutations makes each one a linear factor.
pub fn cayley_factorization(q: &Quasigroup) -> LinearFactorization {
    let n = q.order();
    let factors = (0..n)
        .map(|a| {
            let arcs = (0..n).map(|x| Arc::new(x, q.mul(x, a))).collect();
            LinearFactor::from_sorted_arcs(n, arcs)
        })
        .collect();
    LinearFactorization::from_factors(n, factors)
}

/// Inverse direction: reads the table back off a factorization, writing
/// factor i into column `labeling[i]`.
pub fn quasigroup_from_factorization(
    fz: &LinearFactorization,
    labeling: &[usize],
) -> Result<Quasigroup, Error> {
    let report = validate_factorization(fz);
    if !report.is_ok() {
        return Err(Error::InvalidFactorization(report));
    }
    let n = fz.order();
    if labeling.len() != n || !crate::is_permutation(labeling) {
        return Err(Error::InvalidLabeling { order: n });
    }
    let mut table = vec![vec![0usize; n]; n];
    for (i, factor) in fz.factors().iter().enumerate() {
        let a = labeling[i];
        for arc in factor.arcs() {
            table[arc.tail][a] = arc.head;
        }
    }
    Ok(Quasigroup::from_table(table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::validate_linear_factor;

    #[test]
    fn order_one_table_is_latin() {
        assert!(validate_latin_square(&[vec![0]]).is_ok());
        let q = Quasigroup::new(vec![vec![0]]).unwrap();
        assert_eq!(q.order(), 1);
        assert_eq!(q.mul(0, 0), 0);
    }

    #[test]
    fn column_duplicates_are_reported() {
        let report = validate_latin_square(&[vec![0, 1], vec![0, 1]]);
        assert_eq!(
            report.violations(),
            &[
                LatinViolation::ColumnDuplicate { col: 0, value: 0 },
                LatinViolation::ColumnDuplicate { col: 1, value: 1 },
            ]
        );
    }

    #[test]
    fn shape_problems_suppress_duplicate_scan() {
        let report = validate_latin_square(&[vec![0, 1], vec![0]]);
        assert_eq!(
            report.violations(),
            &[LatinViolation::RaggedRow {
                row: 1,
                len: 1,
                order: 2
            }]
        );
        let report = validate_latin_square(&[vec![0, 5], vec![1, 0]]);
        assert_eq!(
            report.violations(),
            &[LatinViolation::EntryOutOfRange {
                row: 0,
                col: 1,
                value: 5
            }]
        );
        assert!(matches!(
            Quasigroup::new(vec![vec![0, 0], vec![1, 1]]),
            Err(Error::InvalidLatinSquare(_))
        ));
    }

    #[test]
    fn empty_table_is_rejected() {
        let report = validate_latin_square(&[]);
        assert_eq!(report.violations(), &[LatinViolation::EmptyTable]);
    }

    #[test]
    fn cyclic_group_z3_has_the_expected_factors() {
        let q = Quasigroup::cyclic(3).unwrap();
        let fz = cayley_factorization(&q);
        assert_eq!(fz.factors().len(), 3);
        assert!(validate_factorization(&fz).is_ok());
        // column 0 is the loop factor, columns 1 and 2 the two rotations
        assert_eq!(
            fz.factors()[0].arcs(),
            &[Arc::new(0, 0), Arc::new(1, 1), Arc::new(2, 2)]
        );
        assert_eq!(
            fz.factors()[1].arcs(),
            &[Arc::new(0, 1), Arc::new(1, 2), Arc::new(2, 0)]
        );
        assert_eq!(
            fz.factors()[2].arcs(),
            &[Arc::new(0, 2), Arc::new(1, 0), Arc::new(2, 1)]
        );
    }

    #[test]
    fn cayley_factors_are_linear_factors_individually() {
        for n in 1..=8 {
            let fz = cayley_factorization(&Quasigroup::cyclic(n).unwrap());
            for f in fz.factors() {
                assert!(validate_linear_factor(f).is_ok());
            }
            let total: usize = fz.factors().iter().map(|f| f.arcs().len()).sum();
            assert_eq!(total, n * n);
        }
    }

    #[test]
    fn z6_column_2_splits_into_two_triangles() {
        let fz = cayley_factorization(&Quasigroup::cyclic(6).unwrap());
        let structure = crate::factorization::cycle_structure(&fz.factors()[2]).unwrap();
        assert_eq!(structure, vec![3, 3]);
    }

    #[test]
    fn identity_round_trip_recovers_the_table() {
        for n in [1usize, 2, 3, 5, 8] {
            let q = Quasigroup::cyclic(n).unwrap();
            let fz = cayley_factorization(&q);
            let identity: Vec<usize> = (0..n).collect();
            let back = quasigroup_from_factorization(&fz, &identity).unwrap();
            assert_eq!(back, q, "n={n}");
        }
    }

    #[test]
    fn swapping_labels_relabels_columns() {
        // swap columns 1 and 2 of Z_3: the table becomes x - a mod 3
        let fz = cayley_factorization(&Quasigroup::cyclic(3).unwrap());
        let q = quasigroup_from_factorization(&fz, &[0, 2, 1]).unwrap();
        assert_eq!(q.table(), &[vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]);
    }

    #[test]
    fn bad_labelings_are_rejected() {
        let fz = cayley_factorization(&Quasigroup::cyclic(3).unwrap());
        assert!(matches!(
            quasigroup_from_factorization(&fz, &[0, 1]),
            Err(Error::InvalidLabeling { order: 3 })
        ));
        assert!(matches!(
            quasigroup_from_factorization(&fz, &[0, 1, 1]),
            Err(Error::InvalidLabeling { order: 3 })
        ));
    }

    #[test]
    fn invalid_factorizations_are_rejected_on_the_way_back() {
        let loops = LinearFactor::loops(2).unwrap();
        let fz = LinearFactorization::new(2, vec![loops.clone(), loops]).unwrap();
        assert!(matches!(
            quasigroup_from_factorization(&fz, &[0, 1]),
            Err(Error::InvalidFactorization(_))
        ));
    }
}
