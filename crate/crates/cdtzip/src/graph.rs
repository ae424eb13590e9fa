//! Finite simple undirected graphs with optional vertex labels, plus the
//! multiplicity annotations used by zipped multigraph outputs.
//!
//! Adjacency lists are kept sorted and duplicate-free; all derived queries
//! (distances, girth, bipartiteness, powers, complements, line graphs) are
//! pure functions of the adjacency structure.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    /// Keys are normalized pairs (u < v); present only for multigraphs.
    multiplicity: Option<BTreeMap<(usize, usize), u32>>,
    /// Labels per (normalized pair, parallel-edge index).
    edge_labels: Option<BTreeMap<(usize, usize, u32), String>>,
}

/// JSON exchange form: `{"n": int, "edges": [[u,v],...], ...}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Vec<(usize, usize, u32)>>,
}

impl Graph {
    /// Builds a simple graph, rejecting out-of-range vertices, self-loops
    /// and duplicate pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, labels: None, multiplicity: None, edge_labels: None })
    }

    /// Builds a multigraph: duplicate pairs are counted as parallel edges.
    pub fn new_multi(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut mult: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let mut simple = Vec::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            let entry = mult.entry(key).or_insert(0);
            if *entry == 0 {
                simple.push(key);
            }
            *entry += 1;
        }
        let mut g = Graph::new(n, &simple)?;
        g.multiplicity = Some(mult);
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn set_edge_labels(&mut self, labels: BTreeMap<(usize, usize, u32), String>) {
        self.edge_labels = Some(labels);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    /// Index of the vertex carrying `label`, if labels are present.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn is_multigraph(&self) -> bool {
        self.multiplicity.is_some()
    }

    pub fn multiplicity_of(&self, u: usize, v: usize) -> u32 {
        let key = (u.min(v), u.max(v));
        match &self.multiplicity {
            Some(m) => m.get(&key).copied().unwrap_or(0),
            None => u32::from(self.has_edge(u, v)),
        }
    }

    pub fn multiplicities(&self) -> Option<&BTreeMap<(usize, usize), u32>> {
        self.multiplicity.as_ref()
    }

    /// Sorted list of edges as normalized pairs (ignores multiplicities).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut es = Vec::new();
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    es.push((u, v));
                }
            }
        }
        es
    }

    /// Edge count including parallel edges.
    pub fn edge_count(&self) -> usize {
        match &self.multiplicity {
            Some(m) => m.values().map(|&c| c as usize).sum(),
            None => self.adj.iter().map(Vec::len).sum::<usize>() / 2,
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        ds.sort_unstable();
        ds
    }

    pub fn is_cubic(&self) -> bool {
        !self.is_multigraph() && self.adj.iter().all(|l| l.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_dist(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraph on `verts` (sorted); vertex i of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            index.insert(v, i);
        }
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(&j) = index.get(&w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let mut g = Graph::new(verts.len(), &edges).expect("induced subgraph is valid");
        if let Some(ls) = &self.labels {
            g = g.with_labels(verts.iter().map(|&v| ls[v].clone()).collect());
        }
        g
    }

    pub fn bfs_dist(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut worst = 0;
        for v in 0..self.n() {
            let d = self.bfs_dist(v);
            worst = worst.max(d.into_iter().max().unwrap_or(0));
        }
        Ok(worst)
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// Runs one BFS per vertex; a non-tree edge at depth levels d(x), d(y)
    /// witnesses a closed walk of length d(x)+d(y)+1 through the root, and
    /// minimizing over all roots is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        for root in 0..self.n() {
            let mut dist = vec![usize::MAX; self.n()];
            let mut parent = vec![usize::MAX; self.n()];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v && parent[v] != u {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Two-coloring check; returns the side assignment when bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!side[u].unwrap());
                            queue.push_back(v);
                        }
                        Some(b) => {
                            if b == side[u].unwrap() {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        Some(side.into_iter().map(|b| b.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).expect("complement is valid")
    }

    /// Line graph; vertex i of the result is `self.edges()[i]`, labeled
    /// with the endpoint pair.
    pub fn line_graph(&self) -> Graph {
        let es = self.edges();
        let mut edges = Vec::new();
        for i in 0..es.len() {
            for j in (i + 1)..es.len() {
                let (a, b) = es[i];
                let (c, d) = es[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        let labels = es
            .iter()
            .map(|&(u, v)| format!("{}{}", self.label_of(u), self.label_of(v)))
            .collect();
        Graph::new(es.len(), &edges)
            .expect("line graph is valid")
            .with_labels(labels)
    }

    /// Power graph joining vertices at distance exactly k.
    pub fn power(&self, k: usize) -> Result<Graph> {
        let diam = self.diameter()?;
        if k > diam {
            return Err(Error::PowerExceedsDiameter(k, diam));
        }
        let mut edges = Vec::new();
        for u in 0..self.n() {
            let dist = self.bfs_dist(u);
            for (v, &d) in dist.iter().enumerate() {
                if u < v && d == k {
                    edges.push((u, v));
                }
            }
        }
        let mut g = Graph::new(self.n(), &edges)?;
        if let Some(ls) = &self.labels {
            g = g.with_labels(ls.clone());
        }
        Ok(g)
    }

    /// Multigraph with every edge of `self` repeated `m` times.
    pub fn with_uniform_multiplicity(&self, m: u32) -> Graph {
        let mut g = self.clone();
        let mult = self.edges().into_iter().map(|e| (e, m)).collect();
        g.multiplicity = Some(mult);
        g
    }

    /// Relabels vertices: vertex v becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for &v in &self.adj[u] {
                adj[perm[u]].push(perm[v]);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let labels = self.labels.as_ref().map(|ls| {
            let mut out = vec![String::new(); n];
            for v in 0..n {
                out[perm[v]] = ls[v].clone();
            }
            out
        });
        Graph { adj, labels, multiplicity: None, edge_labels: None }
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges(),
            labels: self.labels.clone(),
            multiplicity: self
                .multiplicity
                .as_ref()
                .map(|m| m.iter().map(|(&(u, v), &c)| (u, v, c)).collect()),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Graph> {
        let mut g = match &j.multiplicity {
            Some(mult) => {
                let mut edges = Vec::new();
                for &(u, v, c) in mult {
                    for _ in 0..c {
                        edges.push((u, v));
                    }
                }
                Graph::new_multi(j.n, &edges)?
            }
            None => Graph::new(j.n, &j.edges)?,
        };
        if let Some(ls) = &j.labels {
            g = g.with_labels(ls.clone());
        }
        Ok(g)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        let j: GraphJson = serde_json::from_str(s)?;
        Graph::from_json(&j)
    }

    /// DOT export; layout-free, with vertex labels and edge labels when present.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.n() {
            let _ = writeln!(out, "  {} [label=\"{}\"];", v, self.label_of(v));
        }
        for (u, v) in self.edges() {
            let m = self.multiplicity_of(u, v).max(1);
            for i in 0..m {
                let label = self
                    .edge_labels
                    .as_ref()
                    .and_then(|els| els.get(&(u, v, i)))
                    .cloned();
                match label {
                    Some(l) => {
                        let _ = writeln!(out, "  {u} -- {v} [label=\"{l}\"];");
                    }
                    None => {
                        let _ = writeln!(out, "  {u} -- {v};");
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Convenience constructor for the complete graph.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete graph is valid")
}

/// Convenience constructor for the cycle graph.
pub fn cycle_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_degree_sequence() {
        let g = complete_graph(4);
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3]);
        assert_eq!(g.girth(), Some(3));
        assert_eq!(g.diameter().unwrap(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Graph::new(3, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange(3, 3))));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn multigraph_counts_duplicates() {
        let g = Graph::new_multi(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.multiplicity_of(0, 1), 2);
        assert_eq!(g.multiplicity_of(1, 2), 1);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn c5_metrics() {
        let g = cycle_graph(5);
        assert_eq!(g.girth(), Some(5));
        assert_eq!(g.diameter().unwrap(), 2);
        assert!(!g.is_bipartite());
        assert!(cycle_graph(6).is_bipartite());
    }

    #[test]
    fn tree_has_no_girth() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let g = Graph::new(5, &[]).unwrap();
        assert_eq!(g.complement(), complete_graph(5));
    }

    #[test]
    fn power_one_is_identity() {
        let g = cycle_graph(7);
        assert_eq!(g.power(1).unwrap(), g);
    }

    #[test]
    fn cubic_line_graph_shape() {
        // For cubic hosts the line graph has 3n/2 vertices and is 4-regular.
        let mut edges = Vec::new();
        for x in 0..5usize {
            edges.push((x, (x + 1) % 5));
            edges.push((5 + x, 5 + (x + 2) % 5));
            edges.push((x, 5 + x));
        }
        let pet = Graph::new(10, &edges).unwrap();
        assert_eq!(pet.edges().len(), 15);
        let l = pet.line_graph();
        assert_eq!(l.n(), 15);
        assert!(l.degree_sequence().iter().all(|&d| d == 4));
    }

    #[test]
    fn distance_two_graph_of_k33_is_two_triangles() {
        let k33 = Graph::new(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let p = k33.power(2).unwrap();
        let comps = p.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert!(p.degree_sequence().iter().all(|&d| d == 2));
    }

    #[test]
    fn json_round_trip() {
        let g = complete_graph(4).with_labels(vec!["1".into(), "2".into(), "3".into(), "0".into()]);
        let s = g.to_json_string();
        let h = Graph::from_json_str(&s).unwrap();
        assert_eq!(g, h);
    }
}
