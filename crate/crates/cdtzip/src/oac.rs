//! Orientation assignments for girth cycles: the signed constraint graph
//! over shared paths, balance solving, parity obstruction certificates, and
//! the four-way kappa classifier.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cycles::{girth_cycles, paths_of_order, CanonicalCycle, CanonicalPath};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planar::is_planar;

/// One directed traversal per girth cycle, aligned with the canonical
/// girth-cycle list of the host graph.
#[derive(Debug, Clone)]
pub struct OrientedCycleSet {
    /// `cycles[i]` is a traversal of the i-th canonical girth cycle.
    pub cycles: Vec<Vec<usize>>,
    /// Display names carried along from fixtures, aligned with `cycles`.
    pub names: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OacJson {
    pub n: usize,
    pub k: usize,
    pub cycles: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

impl OrientedCycleSet {
    /// Assembles an oriented cycle set from named directed traversals,
    /// requiring a bijection onto the canonical girth cycles of `g`.
    pub fn from_directed(g: &Graph, directed: Vec<(String, Vec<usize>)>) -> Result<Self> {
        let canon = girth_cycles(g);
        let mut cycles: Vec<Option<Vec<usize>>> = vec![None; canon.len()];
        let mut names: Vec<String> = vec![String::new(); canon.len()];
        if directed.len() != canon.len() {
            return Err(Error::InvalidOac(format!(
                "{} directed cycles for {} girth cycles",
                directed.len(),
                canon.len()
            )));
        }
        for (name, seq) in directed {
            for w in 0..seq.len() {
                let (a, b) = (seq[w], seq[(w + 1) % seq.len()]);
                if !g.has_edge(a, b) {
                    return Err(Error::InvalidOac(format!(
                        "cycle {name} uses the non-edge ({a}, {b})"
                    )));
                }
            }
            let c = CanonicalCycle::from_traversal(&seq);
            let Ok(idx) = canon.binary_search(&c) else {
                return Err(Error::InvalidOac(format!("cycle {name} is not a girth cycle")));
            };
            if cycles[idx].is_some() {
                return Err(Error::InvalidOac(format!("girth cycle listed twice ({name})")));
            }
            cycles[idx] = Some(seq);
            names[idx] = name;
        }
        let cycles = cycles.into_iter().map(|c| c.expect("bijection checked")).collect();
        Ok(OrientedCycleSet { cycles, names })
    }

    /// The orientation bit per cycle: true when the traversal runs against
    /// the canonical direction.
    pub fn orientation_bits(&self) -> Vec<bool> {
        self.cycles
            .iter()
            .map(|seq| {
                let canon = CanonicalCycle::from_traversal(seq);
                !canon.traverses_forward_cyclically(seq)
            })
            .collect()
    }

    pub fn to_json(&self, g: &Graph, k: usize) -> OacJson {
        OacJson {
            n: g.n(),
            k,
            cycles: self.cycles.clone(),
            names: Some(self.names.clone()),
        }
    }
}

impl CanonicalCycle {
    /// Whether `seq` is a rotation (not reflection) of the canonical order.
    pub fn traverses_forward_cyclically(&self, seq: &[usize]) -> bool {
        let n = self.len();
        let verts = self.verts();
        if seq.len() != n {
            return false;
        }
        let Some(offset) = seq.iter().position(|&v| v == verts[0]) else { return false };
        (0..n).all(|i| seq[(offset + i) % n] == verts[i])
    }
}

/// A signed edge coupling the orientation bits of two girth cycles that
/// share a path on k vertices.
#[derive(Debug, Clone)]
pub struct CgEdge {
    pub a: usize,
    pub b: usize,
    pub path: CanonicalPath,
    /// Orientation bits must differ iff this is set.
    pub flip_required: bool,
}

#[derive(Debug, Clone)]
pub struct ConstraintGraph {
    pub cycle_count: usize,
    pub edges: Vec<CgEdge>,
}

/// One signed edge per path on k vertices: the two incident cycles must
/// traverse the shared path in opposite directions.
pub fn build_constraint_graph(
    g: &Graph,
    cycles: &[CanonicalCycle],
    k: usize,
) -> Result<ConstraintGraph> {
    let mut edges = Vec::new();
    for path in paths_of_order(g, k) {
        let incident: Vec<usize> = cycles
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains_path(path.verts()))
            .map(|(i, _)| i)
            .collect();
        if incident.len() != 2 {
            return Err(Error::PathCycleCount {
                path: path.verts().to_vec(),
                found: incident.len(),
            });
        }
        let (a, b) = (incident[0], incident[1]);
        let ta = cycles[a].traverses_forward(path.verts());
        let tb = cycles[b].traverses_forward(path.verts());
        // Opposite actual directions: bit_a XOR bit_b == !(ta XOR tb).
        edges.push(CgEdge { a, b, path, flip_required: ta == tb });
    }
    Ok(ConstraintGraph { cycle_count: cycles.len(), edges })
}

/// An alternating cycle/path closed walk whose parity contradicts every
/// orientation choice.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    /// Visited cycle indices; first equals last.
    pub cycle_indices: Vec<usize>,
    /// Orientation bits along the walk; the final bit contradicts the first.
    pub signs: Vec<bool>,
    /// Shared paths between consecutive cycles.
    pub paths: Vec<Vec<usize>>,
}

/// A solved orientation assignment together with the component structure of
/// the constraint graph (the full solution set is the component flips).
#[derive(Debug, Clone)]
pub struct OaSolution {
    pub orientation: Vec<bool>,
    pub component_of: Vec<usize>,
    pub component_count: usize,
}

impl OaSolution {
    /// Number of valid assignments, as log2.
    pub fn count_log2(&self) -> usize {
        self.component_count
    }

    pub fn oriented_cycles(&self, cycles: &[CanonicalCycle]) -> OrientedCycleSet {
        let seqs: Vec<Vec<usize>> = cycles
            .iter()
            .zip(&self.orientation)
            .map(|(c, &flip)| {
                if flip {
                    c.verts().iter().rev().copied().collect()
                } else {
                    c.verts().to_vec()
                }
            })
            .collect();
        let names = (0..cycles.len()).map(|i| format!("c{i}")).collect();
        OrientedCycleSet { cycles: seqs, names }
    }
}

pub enum SolveOutcome {
    Balanced(OaSolution),
    Unbalanced(ObstructionCertificate),
}

/// Decides balance of the signed constraint graph. Balanced graphs get the
/// orientation with the least cycle of each component in canonical
/// direction; unbalanced ones get the first odd fundamental cycle of a
/// breadth-first spanning forest as certificate.
pub fn solve_oa(cg: &ConstraintGraph) -> SolveOutcome {
    let n = cg.cycle_count;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (ei, e) in cg.edges.iter().enumerate() {
        adj[e.a].push((e.b, ei));
        adj[e.b].push((e.a, ei));
    }
    let mut bit = vec![false; n];
    let mut comp = vec![usize::MAX; n];
    let mut parent_edge: Vec<Option<usize>> = vec![None; n];
    let mut parent: Vec<usize> = (0..n).collect();
    let mut ncomp = 0;
    for root in 0..n {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = ncomp;
        bit[root] = false;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, ei) in &adj[u] {
                if comp[v] == usize::MAX {
                    comp[v] = ncomp;
                    bit[v] = bit[u] ^ cg.edges[ei].flip_required;
                    parent[v] = u;
                    parent_edge[v] = Some(ei);
                    queue.push_back(v);
                }
            }
        }
        ncomp += 1;
    }
    // First violated edge yields the certificate.
    for (ei, e) in cg.edges.iter().enumerate() {
        if bit[e.a] ^ bit[e.b] != e.flip_required {
            return SolveOutcome::Unbalanced(fundamental_certificate(cg, &parent, &parent_edge, &bit, ei));
        }
    }
    SolveOutcome::Balanced(OaSolution { orientation: bit, component_of: comp, component_count: ncomp })
}

fn fundamental_certificate(
    cg: &ConstraintGraph,
    parent: &[usize],
    parent_edge: &[Option<usize>],
    bit: &[bool],
    bad_idx: usize,
) -> ObstructionCertificate {
    let bad = &cg.edges[bad_idx];
    // Tree paths from both endpoints up to their common ancestor.
    let ancestry = |mut v: usize| {
        let mut chain = vec![v];
        while parent[v] != v {
            v = parent[v];
            chain.push(v);
        }
        chain
    };
    let up_a = ancestry(bad.a);
    let up_b = ancestry(bad.b);
    let in_a: BTreeMap<usize, usize> = up_a.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let (meet_b, meet) = up_b
        .iter()
        .enumerate()
        .find(|(_, v)| in_a.contains_key(v))
        .map(|(i, &v)| (i, v))
        .expect("same component");
    // Walk: a -> ... -> meet -> ... -> b, then the bad edge back to a.
    let mut nodes: Vec<usize> = up_a[..=in_a[&meet]].to_vec();
    nodes.extend(up_b[..meet_b].iter().rev());
    nodes.push(bad.a);
    let mut paths = Vec::new();
    let mut signs = vec![bit[bad.a]];
    let last_step = nodes.len() - 2;
    for (wi, w) in nodes.windows(2).enumerate() {
        let (u, v) = (w[0], w[1]);
        let ei = if wi == last_step {
            bad_idx
        } else if parent[u] == v {
            parent_edge[u].expect("tree edge")
        } else {
            debug_assert_eq!(parent[v], u, "interior steps follow the spanning forest");
            parent_edge[v].expect("tree edge")
        };
        let e = &cg.edges[ei];
        paths.push(e.path.verts().to_vec());
        let prev = *signs.last().expect("seeded");
        signs.push(prev ^ e.flip_required);
    }
    ObstructionCertificate { cycle_indices: nodes, signs, paths }
}

/// Re-derives every coupling along the walk from the raw cycle traversals
/// and checks that the closed walk has odd conflict parity.
pub fn verify_certificate(
    cycles: &[CanonicalCycle],
    cert: &ObstructionCertificate,
) -> bool {
    let m = cert.paths.len();
    if cert.cycle_indices.len() != m + 1 || cert.signs.len() != m + 1 || m == 0 {
        return false;
    }
    if cert.cycle_indices[0] != cert.cycle_indices[m] {
        return false;
    }
    let mut parity = false;
    for i in 0..m {
        let ca = &cycles[cert.cycle_indices[i]];
        let cb = &cycles[cert.cycle_indices[i + 1]];
        let path = &cert.paths[i];
        if !ca.contains_path(path) || !cb.contains_path(path) {
            return false;
        }
        let ta = ca.traverses_forward(path);
        let tb = cb.traverses_forward(path);
        let flip_required = ta == tb;
        if cert.signs[i + 1] != cert.signs[i] ^ flip_required {
            return false;
        }
        parity ^= flip_required;
    }
    parity && cert.signs[0] != cert.signs[m]
}

/// True iff the oriented set traverses the two cycles through every path on
/// k vertices in opposite directions (the orientation-assignment property).
pub fn validate_oac(g: &Graph, oac: &OrientedCycleSet, k: usize) -> Result<bool> {
    let canon = girth_cycles(g);
    if oac.cycles.len() != canon.len() {
        return Err(Error::InvalidOac(format!(
            "oriented set has {} cycles, graph has {} girth cycles",
            oac.cycles.len(),
            canon.len()
        )));
    }
    for (i, seq) in oac.cycles.iter().enumerate() {
        let c = CanonicalCycle::from_traversal(seq);
        if canon.binary_search(&c) != Ok(i) {
            return Err(Error::InvalidOac(format!(
                "entry {i} does not match the canonical girth cycle list"
            )));
        }
    }
    for path in paths_of_order(g, k) {
        let incident: Vec<usize> = canon
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains_path(path.verts()))
            .map(|(i, _)| i)
            .collect();
        if incident.len() != 2 {
            return Err(Error::PathCycleCount {
                path: path.verts().to_vec(),
                found: incident.len(),
            });
        }
        let dir = |i: usize| directed_contains(&oac.cycles[i], path.verts());
        let (da, db) = (dir(incident[0]), dir(incident[1]));
        let (Some(da), Some(db)) = (da, db) else {
            return Err(Error::InvalidOac("traversal lost a shared path".into()));
        };
        if da == db {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Direction in which a directed traversal contains the path: `Some(true)`
/// forward, `Some(false)` backward, `None` absent.
pub fn directed_contains(seq: &[usize], path: &[usize]) -> Option<bool> {
    let n = seq.len();
    let fwd = (0..n).any(|s| (0..path.len()).all(|i| seq[(s + i) % n] == path[i]));
    if fwd {
        return Some(true);
    }
    let rev: Vec<usize> = path.iter().rev().copied().collect();
    let bwd = (0..n).any(|s| (0..rev.len()).all(|i| seq[(s + i) % n] == rev[i]));
    bwd.then_some(false)
}

/// Kappa classification outcome.
#[derive(Debug)]
pub struct KappaResult {
    pub kappa: u8,
    pub certificate: Option<ObstructionCertificate>,
    pub solution: Option<OaSolution>,
}

/// kappa = 0 without an orientation assignment; 1 planar; 2 balanced with
/// g = 2(k-1); 3 balanced with g > 2(k-1).
pub fn classify_kappa(g: &Graph, k: usize) -> Result<KappaResult> {
    let cycles = girth_cycles(g);
    let cg = build_constraint_graph(g, &cycles, k)?;
    match solve_oa(&cg) {
        SolveOutcome::Unbalanced(cert) => Ok(KappaResult {
            kappa: 0,
            certificate: Some(cert),
            solution: None,
        }),
        SolveOutcome::Balanced(sol) => {
            let girth = g.girth().expect("girth cycles exist");
            let kappa = if is_planar(g) {
                1
            } else if girth == 2 * (k - 1) {
                2
            } else {
                3
            };
            Ok(KappaResult { kappa, certificate: None, solution: Some(sol) })
        }
    }
}

/// A named obstruction walk in the notation of the fixture assets.
#[derive(Debug, Clone)]
pub struct ObstructionWalk {
    pub named_cycles: Vec<(String, Vec<usize>)>,
    /// (cycle name, reversed?) per visited cycle.
    pub steps: Vec<(String, bool)>,
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct WalkCheck {
    pub cycles_valid: bool,
    pub steps_opposite: bool,
    pub consecutive_share_exactly: bool,
    pub closes_with_flip: bool,
    pub path_orders: Vec<usize>,
}

impl WalkCheck {
    pub fn pass(&self) -> bool {
        self.cycles_valid && self.steps_opposite && self.consecutive_share_exactly && self.closes_with_flip
    }
}

impl ObstructionWalk {
    /// Renders the walk as a certificate over the canonical girth cycles,
    /// with orientation bits taken from the step signs.
    pub fn to_certificate(&self, cycles: &[CanonicalCycle]) -> Option<ObstructionCertificate> {
        let lookup: BTreeMap<&str, &Vec<usize>> =
            self.named_cycles.iter().map(|(n, c)| (n.as_str(), c)).collect();
        let mut cycle_indices = Vec::new();
        let mut signs = Vec::new();
        for (name, reversed) in &self.steps {
            let seq = lookup.get(name.as_str())?;
            let canon = CanonicalCycle::from_traversal(seq);
            let idx = cycles.binary_search(&canon).ok()?;
            // The orientation bit is relative to the canonical traversal.
            let listed_is_canonical = canon.traverses_forward_cyclically(seq);
            cycle_indices.push(idx);
            signs.push(listed_is_canonical == *reversed);
        }
        Some(ObstructionCertificate {
            cycle_indices,
            signs,
            paths: self.paths.clone(),
        })
    }
}

/// Structural verification of a fixture obstruction walk: every named cycle
/// is a cycle of the graph, consecutive cycles traverse the listed shared
/// path in opposite directions and intersect in exactly it, and the walk
/// returns to its first cycle with the opposite orientation.
pub fn verify_walk(g: &Graph, walk: &ObstructionWalk) -> WalkCheck {
    let lookup: BTreeMap<&str, &Vec<usize>> =
        walk.named_cycles.iter().map(|(n, c)| (n.as_str(), c)).collect();
    let mut cycles_valid = true;
    for (_, seq) in &walk.named_cycles {
        let distinct = seq.iter().collect::<std::collections::BTreeSet<_>>().len() == seq.len();
        let closed = (0..seq.len()).all(|i| g.has_edge(seq[i], seq[(i + 1) % seq.len()]));
        cycles_valid &= distinct && closed;
    }
    let traversal = |name: &str, reversed: bool| -> Option<Vec<usize>> {
        let seq = lookup.get(name)?;
        Some(if reversed { seq.iter().rev().copied().collect() } else { (*seq).clone() })
    };
    let mut steps_opposite = true;
    let mut consecutive_share_exactly = true;
    for (i, path) in walk.paths.iter().enumerate() {
        let Some(cur) = walk.steps.get(i).and_then(|(n, r)| traversal(n, *r)) else {
            steps_opposite = false;
            break;
        };
        let Some(next) = walk.steps.get(i + 1).and_then(|(n, r)| traversal(n, *r)) else {
            steps_opposite = false;
            break;
        };
        match (directed_contains(&cur, path), directed_contains(&next, path)) {
            (Some(da), Some(db)) => steps_opposite &= da != db,
            _ => steps_opposite = false,
        }
        let sa: std::collections::BTreeSet<usize> = cur.iter().copied().collect();
        let sb: std::collections::BTreeSet<usize> = next.iter().copied().collect();
        let shared: std::collections::BTreeSet<usize> = sa.intersection(&sb).copied().collect();
        let pset: std::collections::BTreeSet<usize> = path.iter().copied().collect();
        consecutive_share_exactly &= shared == pset;
    }
    let closes_with_flip = match (walk.steps.first(), walk.steps.last()) {
        (Some((n0, r0)), Some((n1, r1))) => n0 == n1 && r0 != r1 && walk.steps.len() == walk.paths.len() + 1,
        _ => false,
    };
    WalkCheck {
        cycles_valid,
        steps_opposite,
        consecutive_share_exactly,
        closes_with_flip,
        path_orders: walk.paths.iter().map(Vec::len).collect(),
    }
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
    fn k4_constraint_graph_shape() {
        let g = complete_graph(4);
        let cycles = girth_cycles(&g);
        assert_eq!(cycles.len(), 4);
        let cg = build_constraint_graph(&g, &cycles, 2).unwrap();
        assert_eq!(cg.edges.len(), 6);
    }

    #[test]
    fn petersen_constraint_graph_and_obstruction() {
        let g = petersen();
        let cycles = girth_cycles(&g);
        let cg = build_constraint_graph(&g, &cycles, 3).unwrap();
        assert_eq!(cg.edges.len(), 30);
        match solve_oa(&cg) {
            SolveOutcome::Unbalanced(cert) => {
                assert!(verify_certificate(&cycles, &cert));
            }
            SolveOutcome::Balanced(_) => panic!("no orientation assignment exists here"),
        }
    }

    #[test]
    fn k4_solution_validates_and_counts() {
        let g = complete_graph(4);
        let cycles = girth_cycles(&g);
        let cg = build_constraint_graph(&g, &cycles, 2).unwrap();
        let SolveOutcome::Balanced(sol) = solve_oa(&cg) else {
            panic!("triangles of the tetrahedron orient consistently")
        };
        let oac = sol.oriented_cycles(&cycles);
        assert!(validate_oac(&g, &oac, 2).unwrap());
        // Brute-force oracle over all orientation choices.
        let mut valid = 0u32;
        for mask in 0u32..(1 << cycles.len()) {
            let seqs: Vec<Vec<usize>> = cycles
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if mask >> i & 1 == 1 {
                        c.verts().iter().rev().copied().collect()
                    } else {
                        c.verts().to_vec()
                    }
                })
                .collect();
            let names = (0..cycles.len()).map(|i| format!("b{i}")).collect();
            let cand = OrientedCycleSet { cycles: seqs, names };
            if validate_oac(&g, &cand, 2).unwrap() {
                valid += 1;
            }
        }
        assert_eq!(valid, 1 << sol.count_log2());
    }

    #[test]
    fn single_cycle_has_no_constraints() {
        let g = cycle_graph(5);
        let cycles = girth_cycles(&g);
        assert_eq!(cycles.len(), 1);
        // k = 2 would need every edge in two cycles; a lone cycle fails that.
        let cg = build_constraint_graph(&g, &cycles, 2);
        assert!(cg.is_err());
    }

    #[test]
    fn flipping_one_cycle_invalidates() {
        let g = complete_graph(4);
        let cycles = girth_cycles(&g);
        let cg = build_constraint_graph(&g, &cycles, 2).unwrap();
        let SolveOutcome::Balanced(sol) = solve_oa(&cg) else { panic!() };
        let mut oac = sol.oriented_cycles(&cycles);
        oac.cycles[0].reverse();
        assert!(!validate_oac(&g, &oac, 2).unwrap());
    }
}
