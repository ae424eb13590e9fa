//! Clique enumeration and exact chromatic number by branch and bound.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

const CHROMATIC_SCALE_LIMIT: usize = 64;

/// All vertex subsets of size `s` inducing complete subgraphs, in
/// lexicographic order.
pub fn cliques_of_size(g: &Graph, s: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn extend(g: &Graph, s: usize, cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        if cur.len() == s {
            out.push(cur.iter().copied().collect());
            return;
        }
        let start = cur.last().map_or(0, |&v| v + 1);
        for v in start..g.n() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                extend(g, s, cur, out);
                cur.pop();
            }
        }
    }
    extend(g, s, &mut cur, &mut out);
    out
}

/// A deterministic greedy clique, used as the chromatic lower bound.
fn greedy_clique(g: &Graph) -> usize {
    let n = g.n();
    let mut best = usize::from(n > 0);
    for seed in 0..n {
        let mut clique = vec![seed];
        loop {
            let next = (0..n)
                .filter(|&v| !clique.contains(&v) && clique.iter().all(|&u| g.has_edge(u, v)))
                .max_by_key(|&v| g.degree(v));
            match next {
                Some(v) => clique.push(v),
                None => break,
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Exact minimum number of colors in a proper vertex coloring.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_SCALE_LIMIT {
        return Err(Error::ScaleGuard(n, CHROMATIC_SCALE_LIMIT));
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edges().is_empty() {
        return Ok(1);
    }
    let lower = greedy_clique(g).max(2);
    for t in lower.. {
        if colorable(g, t) {
            return Ok(t);
        }
    }
    unreachable!("n colors always suffice");
}

/// Backtracking k-colorability with most-constrained-vertex selection and
/// the new-color symmetry break (a vertex may open at most one fresh color).
fn colorable(g: &Graph, t: usize) -> bool {
    let n = g.n();
    if t >= n {
        return true;
    }
    let mut colors: Vec<Option<usize>> = vec![None; n];
    fn rec(g: &Graph, t: usize, used: usize, colors: &mut Vec<Option<usize>>) -> bool {
        let n = g.n();
        // Most constrained vertex: fewest allowed colors, then max degree.
        let mut pick: Option<(usize, usize)> = None;
        for v in 0..n {
            if colors[v].is_some() {
                continue;
            }
            let mut forbidden = vec![false; t];
            for &w in g.neighbors(v) {
                if let Some(c) = colors[w] {
                    forbidden[c] = true;
                }
            }
            let avail = forbidden.iter().take(used.min(t)).filter(|&&f| !f).count()
                + usize::from(used < t);
            if avail == 0 {
                return false;
            }
            let better = match pick {
                None => true,
                Some((_, best)) => {
                    avail < best
                        || (avail == best
                            && g.degree(v) > g.degree(pick.expect("pick is set").0))
                }
            };
            if better {
                pick = Some((v, avail));
            }
        }
        let Some((v, _)) = pick else { return true };
        let mut forbidden = vec![false; t];
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                forbidden[c] = true;
            }
        }
        for (c, _) in forbidden.iter().enumerate().take(t.min(used + 1)).filter(|(_, f)| !**f) {
            colors[v] = Some(c);
            if rec(g, t, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = None;
        }
        false
    }
    rec(g, t, 0, &mut colors)
}
