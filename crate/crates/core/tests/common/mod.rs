//! Shared brute-force oracles for the integration suites. Everything here
//! works straight from definitions, with no shortcuts shared with the
//! library code under test.

use efl_core::{verify_assignment, Assignment, Decomposition, LinearFactorization, Part};
use rand::seq::SliceRandom;
use rand::Rng;

/// Chromatic index by exhaustive scan over all color vectors, smallest
/// color count first. Only sensible for a handful of parts.
pub fn naive_chromatic_index(d: &Decomposition) -> usize {
    let parts = d.parts();
    let m = parts.len();
    if m == 0 {
        return 0;
    }
    let mut meet = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            meet[i][j] = i != j && parts[i].intersects(&parts[j]);
        }
    }
    for k in 1..=m {
        let mut colors = vec![0usize; m];
        'next: loop {
            let proper =
                (0..m).all(|i| (i + 1..m).all(|j| !(meet[i][j] && colors[i] == colors[j])));
            if proper {
                return k;
            }
            for c in colors.iter_mut() {
                *c += 1;
                if *c < k {
                    continue 'next;
                }
                *c = 0;
            }
            break;
        }
    }
    m
}

/// Does any assignment exist? Scans all |factors|^|parts| candidates
/// through the definitional checker.
pub fn brute_force_assignment_exists(d: &Decomposition, fz: &LinearFactorization) -> bool {
    let m = d.parts().len();
    let f = fz.factors().len();
    if m == 0 {
        return true;
    }
    if f == 0 {
        return false;
    }
    let mut pick = vec![0usize; m];
    'next: loop {
        let h = Assignment::new(d.order(), pick.clone());
        if verify_assignment(d, fz, &h).is_ok() {
            return true;
        }
        for p in pick.iter_mut() {
            *p += 1;
            if *p < f {
                continue 'next;
            }
            *p = 0;
        }
        return false;
    }
}

/// All Latin squares of order n, by backtracking over cells in row-major
/// order. Sizes grow fast; meant for n <= 4.
pub fn all_latin_squares(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut table = vec![vec![0usize; n]; n];
    let mut row_used = vec![vec![false; n]; n];
    let mut col_used = vec![vec![false; n]; n];
    fill_cell(0, n, &mut table, &mut row_used, &mut col_used, &mut out);
    out
}

fn fill_cell(
    cell: usize,
    n: usize,
    table: &mut Vec<Vec<usize>>,
    row_used: &mut Vec<Vec<bool>>,
    col_used: &mut Vec<Vec<bool>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if cell == n * n {
        out.push(table.clone());
        return;
    }
    let (r, c) = (cell / n, cell % n);
    for v in 0..n {
        if row_used[r][v] || col_used[c][v] {
            continue;
        }
        table[r][c] = v;
        row_used[r][v] = true;
        col_used[c][v] = true;
        fill_cell(cell + 1, n, table, row_used, col_used, out);
        row_used[r][v] = false;
        col_used[c][v] = false;
    }
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random Latin square: the cyclic table with rows, columns, and symbols
/// independently permuted.
pub fn random_latin_square<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<usize>> {
    let rho = random_permutation(n, rng);
    let sigma = random_permutation(n, rng);
    let tau = random_permutation(n, rng);
    (0..n)
        .map(|x| (0..n).map(|a| tau[(rho[x] + sigma[a]) % n]).collect())
        .collect()
}

/// Is there any difference-complete linear factor on 0..n at all? Checks
/// every n-arc subset of the n^2 arcs. Only feasible for tiny n.
pub fn brute_force_starter_exists(n: usize) -> bool {
    let total = n * n;
    assert!(total <= 16, "subset scan is 2^(n^2)");
    for mask in 0u32..(1 << total) {
        if mask.count_ones() as usize != n {
            continue;
        }
        let mut outdeg = vec![0usize; n];
        let mut indeg = vec![0usize; n];
        let mut diff_seen = vec![false; n];
        let mut ok = true;
        for bit in 0..total {
            if mask & (1 << bit) == 0 {
                continue;
            }
            let (tail, head) = (bit / n, bit % n);
            outdeg[tail] += 1;
            indeg[head] += 1;
            let d = (head + n - tail) % n;
            if diff_seen[d] {
                ok = false;
                break;
            }
            diff_seen[d] = true;
        }
        if ok
            && outdeg.iter().all(|&d| d == 1)
            && indeg.iter().all(|&d| d == 1)
            && diff_seen.iter().all(|&s| s)
        {
            return true;
        }
    }
    false
}

/// Valid decompositions handy as fixtures, relabelings included.
pub fn part(vs: &[usize]) -> Part {
    Part::new(vs.to_vec()).unwrap()
}
