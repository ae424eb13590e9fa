//! Point-line incidence configurations with duality, Levi and Menger graphs,
//! and self-duality certificates.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceConfiguration {
    pub points: Vec<String>,
    /// Lines as sets of point indices.
    pub lines: Vec<BTreeSet<usize>>,
}

impl IncidenceConfiguration {
    pub fn new(points: Vec<String>, lines: Vec<BTreeSet<usize>>) -> Result<Self> {
        let np = points.len();
        for l in &lines {
            if let Some(&p) = l.iter().find(|&&p| p >= np) {
                return Err(Error::VertexOutOfRange(p, np));
            }
        }
        let distinct: BTreeSet<&BTreeSet<usize>> = lines.iter().collect();
        if distinct.len() != lines.len() {
            return Err(Error::InvalidOac("repeated line in configuration".into()));
        }
        Ok(IncidenceConfiguration { points, lines })
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn flags(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (li, l) in self.lines.iter().enumerate() {
            for &p in l {
                out.push((p, li));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&li| self.lines[li].contains(&p)).collect()
    }

    /// Points become lines and lines become points.
    pub fn dual(&self) -> IncidenceConfiguration {
        let points: Vec<String> = self
            .lines
            .iter()
            .map(|l| {
                l.iter().map(|&p| self.points[p].clone()).collect::<Vec<_>>().join("")
            })
            .collect();
        let lines: Vec<BTreeSet<usize>> = (0..self.points.len())
            .map(|p| self.lines_through(p).into_iter().collect())
            .collect();
        IncidenceConfiguration { points, lines }
    }

    /// Bipartite point-line incidence graph; points first, then lines.
    pub fn levi_graph(&self) -> Graph {
        let np = self.point_count();
        let edges: Vec<(usize, usize)> =
            self.flags().into_iter().map(|(p, li)| (p, np + li)).collect();
        let mut labels = self.points.clone();
        labels.extend(self.lines.iter().enumerate().map(|(i, _)| format!("L{i}")));
        Graph::new(np + self.line_count(), &edges)
            .expect("levi graph is valid")
            .with_labels(labels)
    }

    /// Points adjacent when they share a line.
    pub fn menger_graph(&self) -> Graph {
        let np = self.point_count();
        let mut edges = Vec::new();
        for p in 0..np {
            for q in (p + 1)..np {
                if self.lines.iter().any(|l| l.contains(&p) && l.contains(&q)) {
                    edges.push((p, q));
                }
            }
        }
        Graph::new(np, &edges)
            .expect("menger graph is valid")
            .with_labels(self.points.clone())
    }

    /// A correlation certificate: a bijection point -> line such that
    /// incidence is preserved against the dual, or `None`. Unequal part
    /// sizes admit no correlation at all.
    pub fn self_duality(&self) -> Option<Vec<usize>> {
        if self.point_count() != self.line_count() {
            return None;
        }
        configuration_isomorphism(self, &self.dual())
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_duality().is_some()
    }
}

/// Point bijection carrying every line of `a` onto a line of `b`, or `None`.
pub fn configuration_isomorphism(
    a: &IncidenceConfiguration,
    b: &IncidenceConfiguration,
) -> Option<Vec<usize>> {
    if a.point_count() != b.point_count() || a.line_count() != b.line_count() {
        return None;
    }
    let n = a.point_count();
    let line_sizes = |c: &IncidenceConfiguration| {
        let mut s: Vec<usize> = c.lines.iter().map(BTreeSet::len).collect();
        s.sort_unstable();
        s
    };
    if line_sizes(a) != line_sizes(b) {
        return None;
    }
    let deg = |c: &IncidenceConfiguration, p: usize| c.lines_through(p).len();
    let b_lines: BTreeSet<&BTreeSet<usize>> = b.lines.iter().collect();
    let mut mapping: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];

    fn consistent(
        a: &IncidenceConfiguration,
        b_lines: &BTreeSet<&BTreeSet<usize>>,
        mapping: &[Option<usize>],
    ) -> bool {
        // Every fully mapped line must land on a line of b; partially mapped
        // lines must fit inside some line of b.
        for l in &a.lines {
            let image: Vec<usize> = l.iter().filter_map(|&p| mapping[p]).collect();
            let image: BTreeSet<usize> = image.into_iter().collect();
            if image.len() == l.len() {
                if !b_lines.contains(&image) {
                    return false;
                }
            } else if !b_lines.iter().any(|bl| image.is_subset(bl)) {
                return false;
            }
        }
        true
    }

    fn rec(
        a: &IncidenceConfiguration,
        b: &IncidenceConfiguration,
        b_lines: &BTreeSet<&BTreeSet<usize>>,
        mapping: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        p: usize,
    ) -> bool {
        if p == a.point_count() {
            return true;
        }
        for q in 0..b.point_count() {
            if used[q] || a.lines_through(p).len() != b.lines_through(q).len() {
                continue;
            }
            mapping[p] = Some(q);
            used[q] = true;
            if consistent(a, b_lines, mapping) && rec(a, b, b_lines, mapping, used, p + 1) {
                return true;
            }
            mapping[p] = None;
            used[q] = false;
        }
        false
    }

    let deg_profile = |c: &IncidenceConfiguration| {
        let mut d: Vec<usize> = (0..n).map(|p| deg(c, p)).collect();
        d.sort_unstable();
        d
    };
    if deg_profile(a) != deg_profile(b) {
        return None;
    }
    if rec(a, b, &b_lines, &mut mapping, &mut used, 0) {
        Some(mapping.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}
