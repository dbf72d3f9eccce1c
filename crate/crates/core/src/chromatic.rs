//! Exact chromatic number of small graphs.
//!
//! Color classes are built one at a time as maximal independent sets
//! containing the least uncolored vertex; a branch dies as soon as the
//! uncolored residue cannot fit into the remaining classes, using the
//! exact independence number as the per-class capacity.

use crate::decomposition::IntersectionGraph;

/// Vertex set as a bit mask.
#[derive(Debug, Clone, PartialEq, Eq)]
struct VSet {
    words: Vec<u64>,
}

impl VSet {
    fn empty(n: usize) -> Self {
        VSet {
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }

    fn full(n: usize) -> Self {
        let mut s = VSet::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.words[v / 64] & (1 << (v % 64)) != 0
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn inter(&self, other: &VSet) -> VSet {
        VSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn minus(&self, other: &VSet) -> VSet {
        VSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }
}

pub(crate) fn chromatic_number(g: &IntersectionGraph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut adj = vec![VSet::empty(n); n];
    let mut nonadj = vec![VSet::empty(n); n];
    for u in 0..n {
        for v in 0..n {
            if g.adjacent(u, v) {
                adj[u].insert(v);
            } else if u != v {
                nonadj[u].insert(v);
            }
        }
    }
    let ub = greedy_coloring(n, &adj);
    let alpha = max_clique(n, &nonadj);
    let lb = greedy_clique(n, &adj).max(n.div_ceil(alpha));
    if lb >= ub {
        return ub;
    }
    let ctx = Cover {
        n,
        nonadj: &nonadj,
        alpha,
    };
    for k in lb..ub {
        if ctx.covers(&VSet::full(n), k) {
            return k;
        }
    }
    ub
}

/// Greedy upper bound: color in descending degree order with the least
/// color free at each vertex.
fn greedy_coloring(n: usize, adj: &[VSet]) -> usize {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count()), v));
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for &v in &order {
        let mut taken = vec![false; used + 1];
        for u in 0..n {
            if adj[v].contains(u) && color[u] != usize::MAX && color[u] <= used {
                taken[color[u]] = true;
            }
        }
        let c = (0..=used).find(|&c| !taken[c]).unwrap();
        color[v] = c;
        if c == used {
            used += 1;
        }
    }
    used
}

/// Greedy lower bound: grow a clique from each start vertex, always taking
/// the candidate with the most candidate neighbors.
fn greedy_clique(n: usize, adj: &[VSet]) -> usize {
    let mut best = 0;
    for start in 0..n {
        let mut size = 1;
        let mut cand = adj[start].clone();
        while let Some(mut pick) = cand.first() {
            let mut pick_score = cand.inter(&adj[pick]).count();
            let mut v = pick;
            while let Some(next) = next_member(&cand, v) {
                let score = cand.inter(&adj[next]).count();
                if score > pick_score {
                    pick = next;
                    pick_score = score;
                }
                v = next;
            }
            size += 1;
            cand = cand.inter(&adj[pick]);
        }
        best = best.max(size);
    }
    best
}

fn next_member(s: &VSet, after: usize) -> Option<usize> {
    let mut v = after + 1;
    while v / 64 < s.words.len() {
        if s.contains(v) {
            return Some(v);
        }
        v += 1;
    }
    None
}

/// Exact maximum clique size by branch and bound, candidates ascending.
fn max_clique(n: usize, adj: &[VSet]) -> usize {
    let mut best = 0;
    clique_rec(0, &VSet::full(n), adj, &mut best);
    best
}

fn clique_rec(size: usize, cand: &VSet, adj: &[VSet], best: &mut usize) {
    if size > *best {
        *best = size;
    }
    let mut c = cand.clone();
    while let Some(u) = c.first() {
        if size + c.count() <= *best {
            return;
        }
        c.remove(u);
        clique_rec(size + 1, &c.inter(&adj[u]), adj, best);
    }
}

struct Cover<'a> {
    n: usize,
    nonadj: &'a [VSet],
    alpha: usize,
}

impl Cover<'_> {
    /// Can `uncolored` be partitioned into at most `classes_left`
    /// independent sets?
    fn covers(&self, uncolored: &VSet, classes_left: usize) -> bool {
        let m = uncolored.count();
        if m == 0 {
            return true;
        }
        if classes_left == 0 || m > classes_left * self.alpha {
            return false;
        }
        let v = uncolored.first().unwrap();
        let mut class = VSet::empty(self.n);
        class.insert(v);
        let p = uncolored.inter(&self.nonadj[v]);
        self.expand(&class, &p, &VSet::empty(self.n), uncolored, classes_left)
    }

    /// Enumerates maximal independent subsets of `uncolored` containing
    /// `class`, recursing into the next color class at each one. Some
    /// optimal coloring uses a maximal class around the least uncolored
    /// vertex, so this branching is exhaustive.
    fn expand(
        &self,
        class: &VSet,
        p: &VSet,
        x: &VSet,
        uncolored: &VSet,
        classes_left: usize,
    ) -> bool {
        if p.is_empty() && x.is_empty() {
            return self.covers(&uncolored.minus(class), classes_left - 1);
        }
        let mut p = p.clone();
        let mut x = x.clone();
        while let Some(u) = p.first() {
            let mut extended = class.clone();
            extended.insert(u);
            if self.expand(
                &extended,
                &p.inter(&self.nonadj[u]),
                &x.inter(&self.nonadj[u]),
                uncolored,
                classes_left,
            ) {
                return true;
            }
            p.remove(u);
            x.insert(u);
        }
        false
    }
}
