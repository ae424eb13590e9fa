//! Girth-cycle and path enumeration, incidence multiplicities, and the
//! fastened-ultrahomogeneity checks over shortest cycles.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::GroupDescription;

/// A cycle stored as its lexicographically least rotation/reflection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCycle {
    verts: Vec<usize>,
}

impl CanonicalCycle {
    /// Canonicalizes an arbitrary traversal of a cycle.
    pub fn from_traversal(seq: &[usize]) -> CanonicalCycle {
        let g = seq.len();
        let pos_min = (0..g).min_by_key(|&i| seq[i]).expect("nonempty cycle");
        let fwd: Vec<usize> = (0..g).map(|i| seq[(pos_min + i) % g]).collect();
        let bwd: Vec<usize> = (0..g).map(|i| seq[(pos_min + g - i) % g]).collect();
        let verts = if fwd <= bwd { fwd } else { bwd };
        CanonicalCycle { verts }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.verts.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        let g = self.verts.len();
        (0..g)
            .map(|i| {
                let (a, b) = (self.verts[i], self.verts[(i + 1) % g]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// Does the canonical traversal contain `path` as a consecutive forward run?
    pub fn traverses_forward(&self, path: &[usize]) -> bool {
        let g = self.verts.len();
        (0..g).any(|s| (0..path.len()).all(|i| self.verts[(s + i) % g] == path[i]))
    }

    /// Whether the cycle contains the path (in either direction).
    pub fn contains_path(&self, path: &[usize]) -> bool {
        let rev: Vec<usize> = path.iter().rev().copied().collect();
        self.traverses_forward(path) || self.traverses_forward(&rev)
    }
}

/// A path stored with its lexicographically smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalPath {
    verts: Vec<usize>,
}

impl CanonicalPath {
    pub fn from_seq(seq: &[usize]) -> CanonicalPath {
        let verts = if seq.first() <= seq.last() {
            seq.to_vec()
        } else {
            seq.iter().rev().copied().collect()
        };
        CanonicalPath { verts }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    pub fn order(&self) -> usize {
        self.verts.len()
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.verts.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.verts
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }

    /// Validates adjacency and distinctness against a host graph.
    pub fn is_path_of(&self, g: &Graph) -> bool {
        let distinct = self.vertex_set().len() == self.verts.len();
        distinct && self.verts.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// All distinct cycles of length exactly the girth, canonically ordered.
///
/// Depth-first search from each root in increasing order; a partial path is
/// extended only while the BFS distance back to the root leaves room to close
/// at exactly the target length. Each cycle is produced once: it starts at its
/// minimum vertex and takes the direction with the smaller second vertex.
pub fn girth_cycles(g: &Graph) -> Vec<CanonicalCycle> {
    match g.girth() {
        Some(girth) => cycles_of_length(g, girth),
        None => Vec::new(),
    }
}

/// All distinct cycles of length exactly `len`, canonically ordered.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<CanonicalCycle> {
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    let mut in_path = vec![false; g.n()];
    for root in 0..g.n() {
        let dist = g.bfs_dist(root);
        let mut path = vec![root];
        in_path[root] = true;
        dfs_cycles(g, root, len, &dist, &mut path, &mut in_path, &mut out);
        in_path[root] = false;
    }
    out.sort();
    out
}

fn dfs_cycles(
    g: &Graph,
    root: usize,
    len: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    in_path: &mut [bool],
    out: &mut Vec<CanonicalCycle>,
) {
    let last = *path.last().unwrap();
    if path.len() == len {
        // Close only in the canonical direction: second vertex < last vertex.
        if g.has_edge(last, root) && path[1] < path[len - 1] {
            out.push(CanonicalCycle { verts: path.clone() });
        }
        return;
    }
    let remaining = len - path.len();
    for &v in g.neighbors(last) {
        if v <= root || in_path[v] || dist[v] > remaining {
            continue;
        }
        path.push(v);
        in_path[v] = true;
        dfs_cycles(g, root, len, dist, path, in_path, out);
        in_path[v] = false;
        path.pop();
    }
}

/// All paths with exactly `m` vertices, canonical and deduplicated.
pub fn paths_of_order(g: &Graph, m: usize) -> Vec<CanonicalPath> {
    assert!(m >= 2, "paths need at least two vertices");
    let mut out = Vec::new();
    let mut in_path = vec![false; g.n()];
    for start in 0..g.n() {
        let mut path = vec![start];
        in_path[start] = true;
        dfs_paths(g, m, &mut path, &mut in_path, &mut out);
        in_path[start] = false;
    }
    out.sort();
    out
}

fn dfs_paths(
    g: &Graph,
    m: usize,
    path: &mut Vec<usize>,
    in_path: &mut [bool],
    out: &mut Vec<CanonicalPath>,
) {
    if path.len() == m {
        // Emit each path once, from its smaller endpoint.
        if path[0] < path[m - 1] {
            out.push(CanonicalPath { verts: path.clone() });
        }
        return;
    }
    let last = *path.last().unwrap();
    for &v in g.neighbors(last) {
        if in_path[v] {
            continue;
        }
        path.push(v);
        in_path[v] = true;
        dfs_paths(g, m, path, in_path, out);
        in_path[v] = false;
        path.pop();
    }
}

/// Sublist of `cycles` containing `path` as a subpath.
pub fn cycles_through_path<'a>(
    g: &Graph,
    cycles: &'a [CanonicalCycle],
    path: &CanonicalPath,
) -> Result<Vec<&'a CanonicalCycle>> {
    if !path.is_path_of(g) {
        return Err(Error::NotAPath(path.verts().to_vec()));
    }
    Ok(cycles.iter().filter(|c| c.contains_path(path.verts())).collect())
}

/// Multiplicity census for paths of each order from k down to 2, plus the
/// exact-sharing checks behind the strongly fastened property.
#[derive(Debug, Clone)]
pub struct SfReport {
    /// `mu[i]` = number of girth cycles through a path on k-i vertices,
    /// for i = 0..=k-2; `None` when the count is not constant.
    pub mu: Vec<Option<usize>>,
    /// For i = 0: any two cycles through a (k-vertex) path share exactly it.
    pub exact_share_at_top: bool,
    /// `fastened[i]` = constant number of cycles meeting a fixed cycle through
    /// a path on k-i vertices in exactly that path (the fixed cycle included);
    /// `None` when not constant.
    pub fastened: Vec<Option<usize>>,
    /// Which closed-form law fits the measured mu sequence.
    pub mu_matches_pow_i: bool,
    pub mu_matches_pow_i_plus_1: bool,
    pub pass: bool,
}

/// Measures the per-order incidence multiplicities of girth cycles over paths.
///
/// For each i = 0..=k-2 the report records the constant number of girth
/// cycles through a path on k-i vertices (or a non-constancy failure), and
/// for the top order verifies that the two incident cycles intersect in
/// exactly that path. The measured sequence is compared against both
/// candidate laws 2^i and 2^(i+1) and the fit is recorded, not assumed.
pub fn check_sf_uh(g: &Graph, cycles: &[CanonicalCycle], k: usize) -> SfReport {
    let mut mu: Vec<Option<usize>> = Vec::new();
    let mut fastened: Vec<Option<usize>> = Vec::new();
    let mut exact_share_at_top = true;
    for i in 0..=(k.saturating_sub(2)) {
        let m = k - i;
        let paths = paths_of_order(g, m);
        let mut constant: Option<usize> = None;
        let mut ok = true;
        let mut fast_constant: Option<usize> = None;
        let mut fast_ok = true;
        for p in &paths {
            let through: Vec<&CanonicalCycle> =
                cycles.iter().filter(|c| c.contains_path(p.verts())).collect();
            match constant {
                None => constant = Some(through.len()),
                Some(c) => {
                    if c != through.len() {
                        ok = false;
                    }
                }
            }
            if i == 0 {
                // The incident cycles must pairwise share exactly this path.
                for (a, ca) in through.iter().enumerate() {
                    for cb in through.iter().skip(a + 1) {
                        let shared_v: BTreeSet<usize> =
                            ca.vertex_set().intersection(&cb.vertex_set()).copied().collect();
                        let shared_e: BTreeSet<(usize, usize)> =
                            ca.edge_set().intersection(&cb.edge_set()).copied().collect();
                        if shared_v != p.vertex_set() || shared_e != p.edge_set() {
                            exact_share_at_top = false;
                        }
                    }
                }
            }
            // Fastened census: cycles meeting a fixed incident cycle in exactly p.
            if let Some(c0) = through.first() {
                let pv = p.vertex_set();
                let pe = p.edge_set();
                let count = through
                    .iter()
                    .filter(|c| {
                        let sv: BTreeSet<usize> =
                            c0.vertex_set().intersection(&c.vertex_set()).copied().collect();
                        let se: BTreeSet<(usize, usize)> =
                            c0.edge_set().intersection(&c.edge_set()).copied().collect();
                        sv == pv && se == pe
                    })
                    .count();
                match fast_constant {
                    None => fast_constant = Some(count),
                    Some(c) => {
                        if c != count {
                            fast_ok = false;
                        }
                    }
                }
            }
        }
        mu.push(if ok { constant } else { None });
        fastened.push(if fast_ok { fast_constant } else { None });
    }
    let mu_matches_pow_i = mu
        .iter()
        .enumerate()
        .all(|(i, m)| *m == Some(1usize << i));
    let mu_matches_pow_i_plus_1 = mu
        .iter()
        .enumerate()
        .all(|(i, m)| *m == Some(1usize << (i + 1)));
    let pass = mu.iter().all(Option::is_some) && mu[0] == Some(2) && exact_share_at_top;
    SfReport { mu, exact_share_at_top, fastened, mu_matches_pow_i, mu_matches_pow_i_plus_1, pass }
}

/// Outcome of the undirected cycle/path ultrahomogeneity check.
#[derive(Debug, Clone, Copy)]
pub struct CyclePathUh {
    pub cycle_orbit_transitive: bool,
    pub cycle_stabilizer_dihedral: bool,
    pub path_orbit_transitive: bool,
    pub path_stabilizer_flip: bool,
}

impl CyclePathUh {
    pub fn holds(&self) -> bool {
        self.cycle_orbit_transitive
            && self.cycle_stabilizer_dihedral
            && self.path_orbit_transitive
            && self.path_stabilizer_flip
    }
}

/// Checks that the automorphism group acts transitively on girth cycles with
/// each cycle's setwise stabilizer inducing the full dihedral symmetry, and
/// transitively on paths on k vertices with the end-swapping flip realized.
pub fn check_cycle_path_uh(g: &Graph, aut: &GroupDescription, k: usize) -> CyclePathUh {
    let cycles = girth_cycles(g);
    let paths = paths_of_order(g, k);
    let elements = aut.enumerate(g.n());

    let mut cycle_orbit_transitive = cycles.is_empty();
    let mut cycle_stabilizer_dihedral = cycles.is_empty();
    if let Some(first) = cycles.first() {
        let mut orbit: BTreeSet<CanonicalCycle> = BTreeSet::new();
        let mut induced: BTreeSet<Vec<usize>> = BTreeSet::new();
        for e in &elements {
            let image: Vec<usize> = first.verts().iter().map(|&v| e[v]).collect();
            let image = CanonicalCycle::from_traversal(&image);
            if image == *first {
                // Record the action restricted to the cycle's vertex sequence.
                let restricted: Vec<usize> = first.verts().iter().map(|&v| e[v]).collect();
                induced.insert(restricted);
            }
            orbit.insert(image);
        }
        cycle_orbit_transitive = orbit.len() == cycles.len();
        cycle_stabilizer_dihedral = induced.len() == 2 * first.len();
    }

    let mut path_orbit_transitive = paths.is_empty();
    let mut path_stabilizer_flip = paths.is_empty();
    if let Some(first) = paths.first() {
        let mut orbit: BTreeSet<CanonicalPath> = BTreeSet::new();
        let mut induced: BTreeSet<Vec<usize>> = BTreeSet::new();
        for e in &elements {
            let image: Vec<usize> = first.verts().iter().map(|&v| e[v]).collect();
            let image = CanonicalPath::from_seq(&image);
            if image == *first {
                let restricted: Vec<usize> = first.verts().iter().map(|&v| e[v]).collect();
                induced.insert(restricted);
            }
            orbit.insert(image);
        }
        path_orbit_transitive = orbit.len() == paths.len();
        path_stabilizer_flip = induced.len() == 2;
    }

    CyclePathUh {
        cycle_orbit_transitive,
        cycle_stabilizer_dihedral,
        path_orbit_transitive,
        path_stabilizer_flip,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    /// Brute-force oracle: every vertex subset of the right size, checked for
    /// a cyclic arrangement, independent of the DFS enumerator.
    fn cycles_by_subsets(g: &Graph, len: usize) -> usize {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for v in start..n {
                    cur.push(v);
                    rec(v + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(0, n, k, &mut cur, &mut out);
            out
        }
        fn count_hamilton_cycles(g: &Graph, verts: &[usize]) -> usize {
            // Count distinct cyclic orders of verts forming a cycle in g.
            let k = verts.len();
            let mut perm: Vec<usize> = (1..k).collect();
            let mut count = 0;
            loop {
                let seq: Vec<usize> = std::iter::once(verts[0])
                    .chain(perm.iter().map(|&i| verts[i]))
                    .collect();
                let closes = seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
                    && g.has_edge(seq[k - 1], seq[0]);
                if closes {
                    count += 1;
                }
                // Next permutation.
                let mut i = perm.len();
                let done = loop {
                    if i < 2 {
                        break true;
                    }
                    i -= 1;
                    if perm[i - 1] < perm[i] {
                        let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
                        perm.swap(i - 1, j);
                        perm[i..].reverse();
                        break false;
                    }
                };
                if done {
                    break;
                }
            }
            count / 2
        }
        subsets(g.n(), len)
            .iter()
            .filter(|s| count_hamilton_cycles(g, s) >= 1)
            .map(|s| count_hamilton_cycles(g, s))
            .sum()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for x in 0..5 {
            edges.push((x, (x + 1) % 5));
            edges.push((5 + x, 5 + (x + 2) % 5));
            edges.push((x, 5 + x));
        }
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn k3_has_one_triangle() {
        let g = complete_graph(3);
        assert_eq!(girth_cycles(&g).len(), 1);
    }

    #[test]
    fn petersen_has_twelve_pentagons() {
        let g = petersen();
        let cycles = girth_cycles(&g);
        assert_eq!(cycles.len(), 12);
        assert!(cycles.iter().all(|c| c.len() == 5));
        assert_eq!(cycles_by_subsets(&g, 5), 12);
    }

    #[test]
    fn petersen_two_paths() {
        let g = petersen();
        let paths = paths_of_order(&g, 3);
        assert_eq!(paths.len(), 30);
        let cycles = girth_cycles(&g);
        for p in &paths {
            assert_eq!(cycles_through_path(&g, &cycles, p).unwrap().len(), 2);
        }
        // Each edge lies in four pentagons: 12 * 5 / 15.
        for e in paths_of_order(&g, 2) {
            assert_eq!(cycles_through_path(&g, &cycles, &e).unwrap().len(), 4);
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let c = CanonicalCycle::from_traversal(&[4, 2, 9, 7, 5]);
        let c2 = CanonicalCycle::from_traversal(c.verts());
        assert_eq!(c, c2);
        assert_eq!(c.verts()[0], 2);
        let p = CanonicalPath::from_seq(&[9, 4, 1]);
        assert_eq!(p.verts(), &[1, 4, 9]);
        assert_eq!(CanonicalPath::from_seq(p.verts()), p);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let g = petersen();
        let cycles = girth_cycles(&g);
        for w in cycles.windows(2) {
            assert!(w[0] < w[1]);
        }
        let paths = paths_of_order(&g, 4);
        for w in paths.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn sf_report_for_k4() {
        let g = complete_graph(4);
        let cycles = girth_cycles(&g);
        let rep = check_sf_uh(&g, &cycles, 2);
        assert_eq!(rep.mu, vec![Some(2)]);
        assert!(rep.exact_share_at_top);
        assert!(rep.pass);
    }

    #[test]
    fn non_path_is_rejected() {
        let g = cycle_graph(5);
        let p = CanonicalPath::from_seq(&[0, 2, 4]);
        assert!(cycles_through_path(&g, &girth_cycles(&g), &p).is_err());
    }

    #[test]
    fn eight_cage_path_counts() {
        let g = crate::catalog::build(crate::catalog::CatalogName::Tutte).graph;
        let paths = paths_of_order(&g, 5);
        assert_eq!(paths.len(), 360);
        let cycles = girth_cycles(&g);
        for p in paths.iter().step_by(17) {
            assert_eq!(cycles_through_path(&g, &cycles, p).unwrap().len(), 2);
        }
    }

    #[test]
    fn measured_multiplicity_sequences() {
        use crate::catalog::{build, CatalogName};
        let cox = build(CatalogName::Coxeter).graph;
        let rep = check_sf_uh(&cox, &girth_cycles(&cox), 3);
        assert_eq!(rep.mu, vec![Some(2), Some(4)]);
        let tut = build(CatalogName::Tutte).graph;
        let rep = check_sf_uh(&tut, &girth_cycles(&tut), 5);
        assert_eq!(rep.mu, vec![Some(2), Some(4), Some(8), Some(16)]);
    }

    #[test]
    fn cycle_path_uh_holds_for_a_bare_cycle() {
        let g = cycle_graph(6);
        let aut = crate::iso::automorphism_group(&g);
        assert!(check_cycle_path_uh(&g, &aut, 2).holds());
    }

    #[test]
    fn cycle_path_uh_holds_for_pappus_and_petersen() {
        for (name, k) in [
            (crate::catalog::CatalogName::Pappus, 3),
            (crate::catalog::CatalogName::Petersen, 3),
        ] {
            let g = crate::catalog::build(name).graph;
            let aut = crate::iso::automorphism_group(&g);
            assert!(check_cycle_path_uh(&g, &aut, k).holds(), "{name:?}");
        }
    }
}
