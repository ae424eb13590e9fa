//! Hamiltonicity by backtracking over edge choices with forced-edge
//! propagation, under an explicit decision budget, plus the bundled
//! fast-metrics record.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Diameter, girth, bipartiteness and hamiltonicity in one record; the
/// hamiltonicity field is three-valued under the given budget.
#[derive(Debug, Clone)]
pub struct GraphMetrics {
    pub diameter: usize,
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub hamiltonian: HamiltonStatus,
}

pub fn graph_metrics(g: &Graph, budget: u64) -> Result<GraphMetrics> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(GraphMetrics {
        diameter: g.diameter()?,
        girth: g.girth(),
        bipartite: g.is_bipartite(),
        hamiltonian: hamiltonian_cycle(g, budget),
    })
}

/// Three-valued outcome: a witness cycle, a completed refutation, or budget
/// exhaustion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonStatus {
    Yes(Vec<usize>),
    No,
    Unresolved,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Unknown,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    estate: Vec<EdgeState>,
    deg_in: Vec<u8>,
    deg_open: Vec<u8>,
    /// For a path endpoint, the opposite endpoint of its segment.
    seg_end: Vec<usize>,
    in_count: usize,
}

struct Searcher<'a> {
    g: &'a Graph,
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    budget: u64,
    spent: u64,
}

/// Searches for a Hamilton cycle. `budget` bounds the number of branching
/// decisions; exceeding it yields `Unresolved` rather than a wrong answer.
pub fn hamiltonian_cycle(g: &Graph, budget: u64) -> HamiltonStatus {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return HamiltonStatus::No;
    }
    if n == 1 {
        return HamiltonStatus::No;
    }
    if n == 2 {
        return HamiltonStatus::No;
    }
    if g.degree_sequence().first().copied().unwrap_or(0) < 2 {
        return HamiltonStatus::No;
    }
    let edges = g.edges();
    let mut incident = vec![Vec::new(); n];
    for (ei, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(ei);
        incident[v].push(ei);
    }
    let state = State {
        estate: vec![EdgeState::Unknown; edges.len()],
        deg_in: vec![0; n],
        deg_open: edges
            .iter()
            .fold(vec![0u8; n], |mut acc, &(u, v)| {
                acc[u] += 1;
                acc[v] += 1;
                acc
            }),
        seg_end: (0..n).collect(),
        in_count: 0,
    };
    let mut searcher = Searcher { g, edges, incident, budget, spent: 0 };
    match searcher.solve(state) {
        Some(Some(cycle)) => HamiltonStatus::Yes(cycle),
        Some(None) => HamiltonStatus::No,
        None => HamiltonStatus::Unresolved,
    }
}

impl<'a> Searcher<'a> {
    /// `Some(Some(cycle))` found, `Some(None)` exhausted, `None` out of budget.
    fn solve(&mut self, mut state: State) -> Option<Option<Vec<usize>>> {
        if !self.propagate(&mut state) {
            return Some(None);
        }
        let n = self.g.n();
        if state.in_count == n {
            return Some(Some(self.extract_cycle(&state)));
        }
        if self.spent >= self.budget {
            return None;
        }
        self.spent += 1;
        let Some(ei) = self.branch_edge(&state) else {
            return Some(None);
        };
        let mut saw_budget_cut = false;
        for &choice in &[EdgeState::In, EdgeState::Out] {
            let mut next = state.clone();
            if !self.set_edge(&mut next, ei, choice) {
                continue;
            }
            match self.solve(next) {
                Some(Some(cycle)) => return Some(Some(cycle)),
                Some(None) => {}
                None => saw_budget_cut = true,
            }
        }
        if saw_budget_cut {
            None
        } else {
            Some(None)
        }
    }

    fn branch_edge(&self, state: &State) -> Option<usize> {
        // Prefer extending an existing path end with the fewest open edges.
        let mut best: Option<(u8, usize)> = None;
        for v in 0..self.g.n() {
            if state.deg_in[v] == 1 {
                let open = state.deg_open[v] - 1;
                if open > 0 && best.is_none_or(|(o, _)| open < o) {
                    best = Some((open, v));
                }
            }
        }
        let v = match best {
            Some((_, v)) => v,
            None => (0..self.g.n()).find(|&v| {
                self.incident[v].iter().any(|&ei| state.estate[ei] == EdgeState::Unknown)
            })?,
        };
        self.incident[v].iter().copied().find(|&ei| state.estate[ei] == EdgeState::Unknown)
    }

    fn set_edge(&self, state: &mut State, ei: usize, value: EdgeState) -> bool {
        debug_assert!(value != EdgeState::Unknown);
        if state.estate[ei] == value {
            return true;
        }
        if state.estate[ei] != EdgeState::Unknown {
            return false;
        }
        let (u, v) = self.edges[ei];
        match value {
            EdgeState::In => {
                if state.deg_in[u] >= 2 || state.deg_in[v] >= 2 {
                    return false;
                }
                let eu = state.seg_end[u];
                let ev = state.seg_end[v];
                if eu == v {
                    // Closing a cycle is only legal when it spans everything.
                    if state.in_count + 1 != self.g.n() {
                        return false;
                    }
                } else {
                    state.seg_end[eu] = ev;
                    state.seg_end[ev] = eu;
                }
                state.estate[ei] = EdgeState::In;
                state.deg_in[u] += 1;
                state.deg_in[v] += 1;
                state.in_count += 1;
            }
            EdgeState::Out => {
                state.estate[ei] = EdgeState::Out;
                state.deg_open[u] -= 1;
                state.deg_open[v] -= 1;
                if state.deg_open[u] < 2 || state.deg_open[v] < 2 {
                    return false;
                }
            }
            EdgeState::Unknown => unreachable!(),
        }
        true
    }

    fn propagate(&self, state: &mut State) -> bool {
        loop {
            let mut changed = false;
            for v in 0..self.g.n() {
                if state.deg_open[v] < 2 {
                    return false;
                }
                if state.deg_in[v] == 2 {
                    for &ei in &self.incident[v] {
                        if state.estate[ei] == EdgeState::Unknown {
                            if !self.set_edge(state, ei, EdgeState::Out) {
                                return false;
                            }
                            changed = true;
                        }
                    }
                } else if state.deg_open[v] == 2 {
                    for &ei in &self.incident[v] {
                        if state.estate[ei] == EdgeState::Unknown {
                            if !self.set_edge(state, ei, EdgeState::In) {
                                return false;
                            }
                            changed = true;
                        }
                    }
                }
            }
            // Unknown edges that would close a short cycle are forced out.
            for ei in 0..self.edges.len() {
                if state.estate[ei] != EdgeState::Unknown {
                    continue;
                }
                let (u, v) = self.edges[ei];
                if state.deg_in[u] == 1
                    && state.deg_in[v] == 1
                    && state.seg_end[u] == v
                    && state.in_count + 1 != self.g.n()
                {
                    if !self.set_edge(state, ei, EdgeState::Out) {
                        return false;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.connected_via_open(state)
    }

    /// The subgraph of In and Unknown edges must still span the graph.
    fn connected_via_open(&self, state: &State) -> bool {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &ei in &self.incident[x] {
                if state.estate[ei] == EdgeState::Out {
                    continue;
                }
                let (u, v) = self.edges[ei];
                let y = if u == x { v } else { u };
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    fn extract_cycle(&self, state: &State) -> Vec<usize> {
        let n = self.g.n();
        let mut next: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (ei, &(u, v)) in self.edges.iter().enumerate() {
            if state.estate[ei] == EdgeState::In {
                next[u].push(v);
                next[v].push(u);
            }
        }
        let mut cycle = vec![0usize];
        let mut prev = usize::MAX;
        let mut cur = 0usize;
        loop {
            let step = *next[cur].iter().find(|&&w| w != prev).expect("degree two everywhere");
            if step == 0 {
                break;
            }
            cycle.push(step);
            prev = cur;
            cur = step;
        }
        cycle
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

    fn assert_valid_cycle(g: &Graph, status: &HamiltonStatus) {
        match status {
            HamiltonStatus::Yes(cycle) => {
                assert_eq!(cycle.len(), g.n());
                let mut seen = vec![false; g.n()];
                for w in cycle.windows(2) {
                    assert!(g.has_edge(w[0], w[1]));
                    assert!(!seen[w[0]]);
                    seen[w[0]] = true;
                }
                assert!(g.has_edge(cycle[g.n() - 1], cycle[0]));
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn cycles_and_cliques_are_hamiltonian() {
        for g in [cycle_graph(5), cycle_graph(8), complete_graph(4), complete_graph(6)] {
            let status = hamiltonian_cycle(&g, 1_000_000);
            assert_valid_cycle(&g, &status);
        }
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        assert_eq!(hamiltonian_cycle(&petersen(), 10_000_000), HamiltonStatus::No);
    }

    #[test]
    fn odd_grid_is_not_hamiltonian() {
        // 3x3 grid: bipartite with unequal sides.
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let v = 3 * r + c;
                if c + 1 < 3 {
                    edges.push((v, v + 1));
                }
                if r + 1 < 3 {
                    edges.push((v, v + 3));
                }
            }
        }
        let g = Graph::new(9, &edges).unwrap();
        assert_eq!(hamiltonian_cycle(&g, 10_000_000), HamiltonStatus::No);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = petersen();
        assert_eq!(hamiltonian_cycle(&g, 0), HamiltonStatus::Unresolved);
    }

    #[test]
    fn metrics_bundle() {
        let m = graph_metrics(&cycle_graph(5), 1_000).unwrap();
        assert_eq!(m.diameter, 2);
        assert_eq!(m.girth, Some(5));
        assert!(!m.bipartite);
        assert!(matches!(m.hamiltonian, HamiltonStatus::Yes(_)));
        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(graph_metrics(&disconnected, 1_000).is_err());
    }
}
