//! Graph isomorphism and automorphism groups by backtracking over equitable
//! partition refinement, with exact group orders from orbit-stabilizer
//! counting along a base of individualized vertices.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Generators of an automorphism group together with its exact order.
#[derive(Debug, Clone)]
pub struct GroupDescription {
    pub generators: Vec<Vec<usize>>,
    pub order: u64,
}

impl GroupDescription {
    /// All group elements, by breadth-first closure of the generators.
    pub fn enumerate(&self, n: usize) -> Vec<Vec<usize>> {
        let identity: Vec<usize> = (0..n).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for gen in &self.generators {
                let q: Vec<usize> = (0..n).map(|v| gen[p[v]]).collect();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let out: Vec<Vec<usize>> = seen.into_iter().collect();
        debug_assert_eq!(out.len() as u64, self.order);
        out
    }

    /// Orbit of a point set under the generated group action on vertices.
    pub fn vertex_orbit(&self, start: usize) -> BTreeSet<usize> {
        let mut orbit = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for gen in &self.generators {
                if orbit.insert(gen[v]) {
                    queue.push_back(gen[v]);
                }
            }
        }
        orbit
    }

    pub fn is_vertex_transitive(&self, n: usize) -> bool {
        n == 0 || self.vertex_orbit(0).len() == n
    }
}

/// A full adjacency-preserving bijection from one graph onto another.
#[derive(Debug, Clone)]
pub struct IsoMapping {
    pub mapping: Vec<usize>,
}

type Cells = Vec<Vec<usize>>;

/// Refines two aligned ordered partitions until equitable, in lockstep.
/// Cells are grouped by the vector of neighbor counts against every current
/// cell; the grouped signatures must agree on both sides or there is no
/// isomorphism respecting the alignment.
fn refine_pair(g1: &Graph, g2: &Graph, cells1: &mut Cells, cells2: &mut Cells) -> bool {
    loop {
        let ncells = cells1.len();
        let sig = |g: &Graph, cells: &Cells| {
            let n = g.n();
            let mut cell_of = vec![0usize; n];
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut sigs = vec![vec![0u32; ncells]; n];
            for (v, sig) in sigs.iter_mut().enumerate() {
                for &w in g.neighbors(v) {
                    sig[cell_of[w]] += 1;
                }
            }
            sigs
        };
        let sigs1 = sig(g1, cells1);
        let sigs2 = sig(g2, cells2);
        let mut next1: Cells = Vec::with_capacity(ncells);
        let mut next2: Cells = Vec::with_capacity(ncells);
        let mut changed = false;
        for ci in 0..ncells {
            let group = |cell: &[usize], sigs: &[Vec<u32>]| {
                let mut keyed: Vec<(&Vec<u32>, usize)> =
                    cell.iter().map(|&v| (&sigs[v], v)).collect();
                keyed.sort();
                let mut groups: Vec<(Vec<u32>, Vec<usize>)> = Vec::new();
                for (k, v) in keyed {
                    match groups.last_mut() {
                        Some((gk, gvs)) if gk == k => gvs.push(v),
                        _ => groups.push((k.clone(), vec![v])),
                    }
                }
                groups
            };
            let groups1 = group(&cells1[ci], &sigs1);
            let groups2 = group(&cells2[ci], &sigs2);
            if groups1.len() != groups2.len() {
                return false;
            }
            for (a, b) in groups1.iter().zip(groups2.iter()) {
                if a.0 != b.0 || a.1.len() != b.1.len() {
                    return false;
                }
            }
            if groups1.len() > 1 {
                changed = true;
            }
            for (_, vs) in groups1 {
                next1.push(vs);
            }
            for (_, vs) in groups2 {
                next2.push(vs);
            }
        }
        *cells1 = next1;
        *cells2 = next2;
        if !changed {
            return true;
        }
    }
}

fn individualize(cells: &mut Cells, cell_idx: usize, v: usize) {
    let rest: Vec<usize> = cells[cell_idx].iter().copied().filter(|&w| w != v).collect();
    cells[cell_idx] = vec![v];
    cells.insert(cell_idx + 1, rest);
}

/// First non-singleton cell of minimum size.
fn target_cell(cells: &Cells) -> Option<usize> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

fn mapping_from_discrete(cells1: &Cells, cells2: &Cells, n: usize) -> Vec<usize> {
    let mut mapping = vec![0usize; n];
    for (c1, c2) in cells1.iter().zip(cells2.iter()) {
        mapping[c1[0]] = c2[0];
    }
    mapping
}

fn mapping_preserves_edges(g1: &Graph, g2: &Graph, mapping: &[usize]) -> bool {
    (0..g1.n()).all(|u| {
        g1.neighbors(u).iter().all(|&v| g2.has_edge(mapping[u], mapping[v]))
    })
}

fn search(g1: &Graph, g2: &Graph, mut cells1: Cells, mut cells2: Cells) -> Option<Vec<usize>> {
    if !refine_pair(g1, g2, &mut cells1, &mut cells2) {
        return None;
    }
    match target_cell(&cells1) {
        None => {
            let mapping = mapping_from_discrete(&cells1, &cells2, g1.n());
            mapping_preserves_edges(g1, g2, &mapping).then_some(mapping)
        }
        Some(ti) => {
            let a = cells1[ti][0];
            for &b in &cells2[ti] {
                let mut c1 = cells1.clone();
                let mut c2 = cells2.clone();
                individualize(&mut c1, ti, a);
                individualize(&mut c2, ti, b);
                if let Some(m) = search(g1, g2, c1, c2) {
                    return Some(m);
                }
            }
            None
        }
    }
}

/// Searches for an isomorphism g1 -> g2 extending the given vertex pairs.
fn search_with_prefix(g1: &Graph, g2: &Graph, prefix: &[(usize, usize)]) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edges().len() != g2.edges().len() {
        return None;
    }
    if g1.n() == 0 {
        return Some(Vec::new());
    }
    let mut cells1: Cells = vec![(0..g1.n()).collect()];
    let mut cells2: Cells = vec![(0..g2.n()).collect()];
    for &(a, b) in prefix {
        let ci = cells1.iter().position(|c| c.contains(&a))?;
        if !cells2[ci].contains(&b) {
            return None;
        }
        individualize(&mut cells1, ci, a);
        individualize(&mut cells2, ci, b);
        if !refine_pair(g1, g2, &mut cells1, &mut cells2) {
            return None;
        }
    }
    search(g1, g2, cells1, cells2)
}

/// Full adjacency-preserving bijection between two graphs, or `None`.
/// The result is independent of vertex numbering.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<IsoMapping> {
    if g1.degree_sequence() != g2.degree_sequence() {
        return None;
    }
    search_with_prefix(g1, g2, &[]).map(|mapping| IsoMapping { mapping })
}

/// Exact automorphism group by a stabilizer chain: at each level the first
/// vertex of the first smallest non-singleton cell is individualized, its
/// orbit under the stabilizer of the earlier base points is computed by
/// explicit search, and the group order is the product of the orbit sizes.
pub fn automorphism_group(g: &Graph) -> GroupDescription {
    let n = g.n();
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut order: u64 = 1;
    let mut base: Vec<usize> = Vec::new();
    loop {
        let mut cells1: Cells = vec![(0..n).collect()];
        let mut cells2 = cells1.clone();
        if n == 0 {
            break;
        }
        for &b in &base {
            let ci = cells1.iter().position(|c| c.contains(&b)).expect("base vertex in cells");
            individualize(&mut cells1, ci, b);
            individualize(&mut cells2, ci, b);
        }
        let ok = refine_pair(g, g, &mut cells1, &mut cells2);
        debug_assert!(ok);
        let Some(ti) = target_cell(&cells1) else { break };
        let b = cells1[ti][0];
        let mut level_gens: Vec<Vec<usize>> = Vec::new();
        let mut orbit: BTreeSet<usize> = BTreeSet::from([b]);
        for &c in cells1[ti].iter().skip(1) {
            if orbit.contains(&c) {
                continue;
            }
            let mut prefix: Vec<(usize, usize)> = base.iter().map(|&x| (x, x)).collect();
            prefix.push((b, c));
            if let Some(perm) = search_with_prefix(g, g, &prefix) {
                level_gens.push(perm);
                // Close the orbit under the generators found at this level.
                let mut queue: Vec<usize> = orbit.iter().copied().collect();
                while let Some(v) = queue.pop() {
                    for gen in &level_gens {
                        if orbit.insert(gen[v]) {
                            queue.push(gen[v]);
                        }
                    }
                }
            }
        }
        order *= orbit.len() as u64;
        generators.extend(level_gens);
        base.push(b);
    }
    GroupDescription { generators, order }
}

/// Largest t >= 1 such that the group acts transitively on t-arcs
/// (non-backtracking directed walks with t edges) but not on (t+1)-arcs.
/// Capped at 8, far beyond the cubic bound.
pub fn arc_transitivity(g: &Graph, aut: &GroupDescription) -> Result<usize> {
    if !aut.is_vertex_transitive(g.n()) {
        return Err(Error::NotVertexTransitive);
    }
    let mut best = 0;
    for t in 1..=8usize {
        if is_t_arc_transitive(g, aut, t) {
            best = t;
        } else {
            break;
        }
    }
    Ok(best)
}

fn t_arcs(g: &Graph, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut walk = Vec::with_capacity(t + 1);
    fn rec(g: &Graph, t: usize, walk: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if walk.len() == t + 1 {
            out.push(walk.clone());
            return;
        }
        let last = *walk.last().unwrap();
        let before = walk.len().checked_sub(2).map(|i| walk[i]);
        for &v in g.neighbors(last) {
            if Some(v) == before {
                continue;
            }
            walk.push(v);
            rec(g, t, walk, out);
            walk.pop();
        }
    }
    for v in 0..g.n() {
        walk.push(v);
        rec(g, t, &mut walk, &mut out);
        walk.pop();
    }
    out
}

fn is_t_arc_transitive(g: &Graph, aut: &GroupDescription, t: usize) -> bool {
    let arcs = t_arcs(g, t);
    let Some(first) = arcs.first() else { return true };
    let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::from([first.clone()]);
    let mut queue = VecDeque::from([first.clone()]);
    while let Some(a) = queue.pop_front() {
        for gen in &aut.generators {
            let image: Vec<usize> = a.iter().map(|&v| gen[v]).collect();
            if orbit.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    orbit.len() == arcs.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, Graph};

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
    fn single_edge_group_order_two() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(automorphism_group(&g).order, 2);
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(automorphism_group(&complete_graph(4)).order, 24);
        assert_eq!(automorphism_group(&cycle_graph(5)).order, 10);
        assert_eq!(automorphism_group(&petersen()).order, 120);
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(automorphism_group(&empty).order, 1);
    }

    #[test]
    fn generators_preserve_edges() {
        let g = petersen();
        let aut = automorphism_group(&g);
        for gen in &aut.generators {
            for (u, v) in g.edges() {
                assert!(g.has_edge(gen[u], gen[v]));
            }
        }
        assert_eq!(aut.enumerate(10).len(), 120);
    }

    #[test]
    fn identity_is_an_isomorphism() {
        let g = petersen();
        let m = are_isomorphic(&g, &g).unwrap();
        for (u, v) in g.edges() {
            assert!(g.has_edge(m.mapping[u], m.mapping[v]));
        }
    }

    #[test]
    fn relabeled_graphs_are_isomorphic() {
        let g = petersen();
        // A fixed scramble.
        let perm: Vec<usize> = vec![7, 3, 9, 0, 4, 8, 1, 5, 2, 6];
        let h = g.relabel(&perm);
        let m = are_isomorphic(&g, &h).expect("relabeling preserves isomorphism");
        for (u, v) in g.edges() {
            assert!(h.has_edge(m.mapping[u], m.mapping[v]));
        }
        // The mapping inverts into an isomorphism the other way.
        let mut inverse = vec![0usize; g.n()];
        for (x, &y) in m.mapping.iter().enumerate() {
            inverse[y] = x;
        }
        for (u, v) in h.edges() {
            assert!(g.has_edge(inverse[u], inverse[v]));
        }
    }

    #[test]
    fn different_degree_sequences_are_not_isomorphic() {
        // K_{3,3} versus K_4 plus an isolated pair.
        let k33 = Graph::new(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let mut edges = complete_graph(4).edges();
        edges.push((4, 5));
        let other = Graph::new(6, &edges).unwrap();
        assert!(are_isomorphic(&k33, &other).is_none());
    }

    #[test]
    fn petersen_is_three_arc_transitive() {
        let g = petersen();
        let aut = automorphism_group(&g);
        assert_eq!(arc_transitivity(&g, &aut).unwrap(), 3);
    }

    #[test]
    fn non_vertex_transitive_is_reported() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let aut = automorphism_group(&path);
        assert!(matches!(arc_transitivity(&path, &aut), Err(Error::NotVertexTransitive)));
    }
}
