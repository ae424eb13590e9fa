//! Downstream identifications: triangle families of the zipped Pappus
//! components, configurations and their self-duality, the K2-fastened
//! decomposition conditions, line graphs of complete graphs, the claw
//! coloring of the Coxeter graph by the seven-point plane, and the Klein
//! map verification.

use std::collections::{BTreeMap, BTreeSet};

use crate::catalog::fano_plane;
use crate::color::{chromatic_number, cliques_of_size};
use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph};
use crate::incidence::IncidenceConfiguration;
use crate::iso::{are_isomorphic, automorphism_group};
use crate::zip::{petrie_polygon_lengths, verify_polygonal_embedding, MarkedGraph};

/// A named list of vertex sets, each inducing a copy of a common template.
#[derive(Debug, Clone)]
pub struct CopyFamily {
    pub name: String,
    pub members: Vec<BTreeSet<usize>>,
}

impl CopyFamily {
    pub fn new(name: impl Into<String>, members: Vec<BTreeSet<usize>>) -> Self {
        CopyFamily { name: name.into(), members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The three nine-member triangle families of one zipped Pappus component.
#[derive(Debug, Clone)]
pub struct PappusTriangles {
    /// Label-coherent triangles (all three edges marked by one host vertex).
    pub h0: CopyFamily,
    /// The two classes of zipped triangles, split by edge-sharing parity.
    pub h1: CopyFamily,
    pub h2: CopyFamily,
}

/// Splits the 27 triangles of a zipped Pappus component: the 18 zipped faces
/// two-color by the shares-an-edge relation, and the remaining 9 carry a
/// common edge label each.
pub fn classify_pappus_triangles(y: &MarkedGraph) -> Result<PappusTriangles> {
    let yg = y.to_graph();
    let triangles = cliques_of_size(&yg, 3);
    if triangles.len() != 27 {
        return Err(Error::TriangleFamilies(format!(
            "{} triangles, expected 27",
            triangles.len()
        )));
    }
    let zipped: Vec<BTreeSet<usize>> = y
        .faces
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| f.iter().copied().collect())
        .collect();
    let zipped_set: BTreeSet<&BTreeSet<usize>> = zipped.iter().collect();
    if zipped_set.len() != 18 {
        return Err(Error::TriangleFamilies(format!(
            "{} distinct zipped triangles, expected 18",
            zipped_set.len()
        )));
    }
    // Two-color the shares-an-edge relation among zipped triangles.
    let mut color: Vec<Option<bool>> = vec![None; zipped.len()];
    for start in 0..zipped.len() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = vec![start];
        while let Some(i) = queue.pop() {
            for j in 0..zipped.len() {
                if i == j {
                    continue;
                }
                let shared = zipped[i].intersection(&zipped[j]).count();
                if shared == 2 {
                    match color[j] {
                        None => {
                            color[j] = Some(!color[i].unwrap());
                            queue.push(j);
                        }
                        Some(c) => {
                            if c == color[i].unwrap() {
                                return Err(Error::TriangleFamilies(
                                    "zipped triangle adjacency is not bipartite".into(),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut h1 = Vec::new();
    let mut h2 = Vec::new();
    for (t, c) in zipped.iter().zip(&color) {
        if c.unwrap() {
            h2.push(t.clone());
        } else {
            h1.push(t.clone());
        }
    }
    let h0: Vec<BTreeSet<usize>> = triangles
        .iter()
        .filter(|t| !zipped_set.contains(t))
        .cloned()
        .collect();
    if h0.len() != 9 || h1.len() != 9 || h2.len() != 9 {
        return Err(Error::TriangleFamilies(format!(
            "family sizes ({}, {}, {}), expected (9, 9, 9)",
            h0.len(),
            h1.len(),
            h2.len()
        )));
    }
    // Every label-family triangle carries one common host mark on its edges.
    for t in &h0 {
        let labels = triangle_edge_labels(y, t);
        if labels.len() != 1 {
            return Err(Error::TriangleFamilies(format!(
                "label triangle {t:?} carries marks {labels:?}"
            )));
        }
    }
    Ok(PappusTriangles {
        h0: CopyFamily::new("H0", h0),
        h1: CopyFamily::new("H1", h1),
        h2: CopyFamily::new("H2", h2),
    })
}

fn triangle_edge_labels(y: &MarkedGraph, t: &BTreeSet<usize>) -> BTreeSet<usize> {
    let vs: Vec<usize> = t.iter().copied().collect();
    let mut labels = BTreeSet::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in vs.iter().skip(i + 1) {
            for e in &y.edges {
                if (e.u == a && e.v == b) || (e.u == b && e.v == a) {
                    if let Some(l) = e.label {
                        labels.insert(l);
                    }
                }
            }
        }
    }
    labels
}

/// Partition of a nine-triangle family into three classes of three pairwise
/// vertex-disjoint members, when one exists.
pub fn parallel_classes(fam: &CopyFamily) -> Option<Vec<[usize; 3]>> {
    let n = fam.members.len();
    let disjoint = |i: usize, j: usize| fam.members[i].is_disjoint(&fam.members[j]);
    let mut used = vec![false; n];
    let mut classes = Vec::new();
    fn rec(
        n: usize,
        disjoint: &dyn Fn(usize, usize) -> bool,
        used: &mut Vec<bool>,
        classes: &mut Vec<[usize; 3]>,
    ) -> bool {
        let Some(first) = (0..n).find(|&i| !used[i]) else { return true };
        used[first] = true;
        for j in (first + 1)..n {
            if used[j] || !disjoint(first, j) {
                continue;
            }
            used[j] = true;
            for k in (j + 1)..n {
                if used[k] || !disjoint(first, k) || !disjoint(j, k) {
                    continue;
                }
                used[k] = true;
                classes.push([first, j, k]);
                if rec(n, disjoint, used, classes) {
                    return true;
                }
                classes.pop();
                used[k] = false;
            }
            used[j] = false;
        }
        used[first] = false;
        false
    }
    rec(n, &disjoint, &mut used, &mut classes).then_some(classes)
}

/// Points are the component's vertices, lines the family members.
pub fn configuration_from_family(y: &MarkedGraph, fam: &CopyFamily) -> IncidenceConfiguration {
    IncidenceConfiguration::new(y.vertex_labels.clone(), fam.members.clone())
        .expect("family members index component vertices")
}

/// Same over a plain graph host.
pub fn configuration_from_graph_family(g: &Graph, fam: &CopyFamily) -> IncidenceConfiguration {
    let points = (0..g.n()).map(|v| g.label_of(v)).collect();
    IncidenceConfiguration::new(points, fam.members.clone())
        .expect("family members index host vertices")
}

/// Per-family outcome of the K2-fastened decomposition conditions.
#[derive(Debug, Clone)]
pub struct FamilyCheck {
    pub name: String,
    pub copies: usize,
    /// Constant per-vertex membership count, when constant.
    pub per_vertex: Option<usize>,
    pub members_induce_cliques: bool,
    /// Every edge of the host lies in exactly one member.
    pub edge_partition: bool,
    /// Two members share at most one vertex.
    pub pairwise_share_at_most_one: bool,
    /// The same-size families exactly account for the clique census
    /// (cliques inside a strictly larger family template are excluded).
    pub census_ok: bool,
}

#[derive(Debug, Clone)]
pub struct K2FastenedReport {
    pub families: Vec<FamilyCheck>,
}

impl K2FastenedReport {
    pub fn pass(&self) -> bool {
        self.families.iter().all(|f| {
            f.per_vertex.is_some()
                && f.members_induce_cliques
                && f.edge_partition
                && f.pairwise_share_at_most_one
                && f.census_ok
        })
    }
}

/// Verifies the countable decomposition conditions: each family is an exact
/// edge partition into induced clique copies, meets each vertex a constant
/// number of times with pairwise intersections of at most one vertex, and
/// the families account exactly for the clique census of their size.
pub fn check_k2_fastened(g: &Graph, families: &[CopyFamily]) -> K2FastenedReport {
    let sizes: BTreeSet<usize> = families
        .iter()
        .filter_map(|f| f.members.first().map(BTreeSet::len))
        .collect();
    let max_size = sizes.iter().copied().max().unwrap_or(0);
    // Census per clique size, excluding cliques inside a larger census clique.
    let census: BTreeMap<usize, BTreeSet<BTreeSet<usize>>> = sizes
        .iter()
        .map(|&s| {
            let mut all: BTreeSet<BTreeSet<usize>> =
                cliques_of_size(g, s).into_iter().collect();
            if s < max_size {
                for t in sizes.iter().filter(|&&t| t > s) {
                    for big in cliques_of_size(g, *t) {
                        all.retain(|c| !c.is_subset(&big));
                    }
                }
            }
            (s, all)
        })
        .collect();
    let families_checked = families
        .iter()
        .map(|fam| {
            let size = fam.members.first().map(BTreeSet::len).unwrap_or(0);
            let members_induce_cliques = fam.members.iter().all(|m| {
                m.len() == size
                    && m.iter().all(|&a| m.iter().all(|&b| a == b || g.has_edge(a, b)))
            });
            // Edge partition.
            let mut cover: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for m in &fam.members {
                let vs: Vec<usize> = m.iter().copied().collect();
                for (i, &a) in vs.iter().enumerate() {
                    for &b in vs.iter().skip(i + 1) {
                        *cover.entry((a.min(b), a.max(b))).or_insert(0) += 1;
                    }
                }
            }
            let edge_partition = g.edges().iter().all(|e| cover.get(e) == Some(&1))
                && cover.len() == g.edges().len();
            // Constant vertex membership.
            let mut per_vertex_counts = vec![0usize; g.n()];
            for m in &fam.members {
                for &v in m {
                    per_vertex_counts[v] += 1;
                }
            }
            let per_vertex = per_vertex_counts
                .windows(2)
                .all(|w| w[0] == w[1])
                .then(|| per_vertex_counts.first().copied().unwrap_or(0));
            let pairwise_share_at_most_one = fam.members.iter().enumerate().all(|(i, a)| {
                fam.members
                    .iter()
                    .skip(i + 1)
                    .all(|b| a.intersection(b).count() <= 1)
            });
            (size, fam, members_induce_cliques, edge_partition, per_vertex, pairwise_share_at_most_one)
        })
        .collect::<Vec<_>>();
    // Same-size families together must equal the census exactly.
    let mut census_ok_by_size: BTreeMap<usize, bool> = BTreeMap::new();
    for &s in &sizes {
        let mut union: Vec<&BTreeSet<usize>> = Vec::new();
        for fam in families {
            if fam.members.first().map(BTreeSet::len) == Some(s) {
                union.extend(fam.members.iter());
            }
        }
        let as_set: BTreeSet<&BTreeSet<usize>> = union.iter().copied().collect();
        let ok = as_set.len() == union.len()
            && census[&s].len() == as_set.len()
            && census[&s].iter().all(|c| as_set.contains(c));
        census_ok_by_size.insert(s, ok);
    }
    let families = families_checked
        .into_iter()
        .map(|(size, fam, induce, edge_partition, per_vertex, pairwise)| FamilyCheck {
            name: fam.name.clone(),
            copies: fam.members.len(),
            per_vertex,
            members_induce_cliques: induce,
            edge_partition,
            pairwise_share_at_most_one: pairwise,
            census_ok: census_ok_by_size.get(&size).copied().unwrap_or(false),
        })
        .collect();
    K2FastenedReport { families }
}

/// The line graph of the complete graph on n vertices together with its two
/// clique families: the n vertex stars and the color triangles of 3-subsets.
pub fn lkn_families(n: usize) -> Result<(Graph, CopyFamily, CopyFamily)> {
    if !(4..=8).contains(&n) {
        return Err(Error::LknRange(n));
    }
    let kn = complete_graph(n).with_labels((1..=n).map(|i| i.to_string()).collect());
    let l = kn.line_graph();
    let host_edges = kn.edges();
    let vertex_of = |u: usize, v: usize| {
        host_edges
            .iter()
            .position(|&(a, b)| (a, b) == (u.min(v), u.max(v)))
            .expect("edge of the complete graph")
    };
    let stars = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| u != v)
                .map(|u| vertex_of(u, v))
                .collect::<BTreeSet<usize>>()
        })
        .collect();
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                triangles.push(BTreeSet::from([
                    vertex_of(a, b),
                    vertex_of(b, c),
                    vertex_of(a, c),
                ]));
            }
        }
    }
    Ok((
        l,
        CopyFamily::new(format!("K{}-stars", n - 1), stars),
        CopyFamily::new("color-triangles", triangles),
    ))
}

#[derive(Debug, Clone)]
pub struct LknReport {
    pub n: usize,
    pub fastened: K2FastenedReport,
    pub star_count_ok: bool,
    pub triangle_count_ok: bool,
    pub per_vertex_ok: bool,
}

impl LknReport {
    pub fn pass(&self) -> bool {
        self.fastened.pass() && self.star_count_ok && self.triangle_count_ok && self.per_vertex_ok
    }
}

/// Checks the clique/triangle decomposition of L(K_n) with the expected
/// counts (n, C(n,3)) and per-vertex memberships (2, n-2).
pub fn check_lkn_theorem(n: usize) -> Result<LknReport> {
    let (l, stars, triangles) = lkn_families(n)?;
    let expected_triangles = n * (n - 1) * (n - 2) / 6;
    let star_count_ok = stars.len() == n;
    let triangle_count_ok = triangles.len() == expected_triangles;
    let fastened = check_k2_fastened(&l, &[stars, triangles]);
    let per_vertex_ok = fastened.families.len() == 2
        && fastened.families[0].per_vertex == Some(2)
        && fastened.families[1].per_vertex == Some(n - 2);
    Ok(LknReport { n, fastened, star_count_ok, triangle_count_ok, per_vertex_ok })
}

/// One vertex per face, adjacent when the faces share an edge.
pub fn dual_cycle_graph(faces: &[Vec<usize>]) -> Graph {
    let edge_sets: Vec<BTreeSet<(usize, usize)>> = faces
        .iter()
        .map(|f| {
            (0..f.len())
                .map(|i| {
                    let (a, b) = (f[i], f[(i + 1) % f.len()]);
                    (a.min(b), a.max(b))
                })
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..faces.len() {
        for j in (i + 1)..faces.len() {
            if !edge_sets[i].is_disjoint(&edge_sets[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(faces.len(), &edges).expect("faces make a dual graph")
}

// ---------------------------------------------------------------------------
// Claw coloring by the seven-point plane
// ---------------------------------------------------------------------------

/// Colors from 1..=7 for every vertex and every edge of the host.
#[derive(Debug, Clone)]
pub struct ClawColoring {
    pub vertex_colors: Vec<usize>,
    pub edge_colors: BTreeMap<(usize, usize), usize>,
}

fn is_line(set: &BTreeSet<usize>) -> bool {
    let fano = fano_plane();
    fano.lines.iter().any(|l| {
        let as_colors: BTreeSet<usize> = l.iter().map(|&p| p + 1).collect();
        &as_colors == set
    })
}

/// Checks the three coloring rules: the edge colors at each vertex form a
/// line, each edge's color with its endpoint colors forms a line, and each
/// vertex's own color together with its incident edge colors leaves a
/// non-collinear complement.
pub fn check_fano_coloring(g: &Graph, coloring: &ClawColoring) -> bool {
    let ec = |u: usize, v: usize| coloring.edge_colors.get(&(u.min(v), u.max(v))).copied();
    for v in 0..g.n() {
        let incident: Option<BTreeSet<usize>> =
            g.neighbors(v).iter().map(|&w| ec(v, w)).collect();
        let Some(incident) = incident else { return false };
        if incident.len() != g.degree(v) || !is_line(&incident) {
            return false;
        }
        let own = coloring.vertex_colors[v];
        if !(1..=7).contains(&own) {
            return false;
        }
        let mut quad = incident.clone();
        quad.insert(own);
        if quad.len() != g.degree(v) + 1 {
            return false;
        }
        let complement: BTreeSet<usize> = (1..=7).filter(|c| !quad.contains(c)).collect();
        if complement.len() == 3 && is_line(&complement) {
            return false;
        }
    }
    for (u, v) in g.edges() {
        let Some(c) = ec(u, v) else { return false };
        let triple: BTreeSet<usize> =
            [c, coloring.vertex_colors[u], coloring.vertex_colors[v]].into_iter().collect();
        if triple.len() != 3 || !is_line(&triple) {
            return false;
        }
    }
    true
}

/// Finds a claw coloring by search. A vertex's data is equivalent to a
/// non-collinear triple of the plane: the complement of such a triple holds
/// exactly one line (the incident edge colors) plus one point (the vertex's
/// own color). The coloring rules induce a graph on the 28 triples, and a
/// valid coloring is precisely an isomorphism onto it, found by the
/// partition-refinement search.
pub fn solve_fano_coloring(g: &Graph) -> Option<ClawColoring> {
    let fano = fano_plane();
    let lines: Vec<BTreeSet<usize>> = fano
        .lines
        .iter()
        .map(|l| l.iter().map(|&p| p + 1).collect())
        .collect();
    let all: BTreeSet<usize> = (1..=7).collect();
    // The 28 non-collinear triples with their complementary line and point.
    let mut triples: Vec<(BTreeSet<usize>, BTreeSet<usize>, usize)> = Vec::new();
    for a in 1..=7 {
        for b in (a + 1)..=7 {
            for c in (b + 1)..=7 {
                let t = BTreeSet::from([a, b, c]);
                if lines.contains(&t) {
                    continue;
                }
                let rest: BTreeSet<usize> = all.difference(&t).copied().collect();
                let line = lines
                    .iter()
                    .find(|l| l.is_subset(&rest))
                    .expect("triangle complements hold a line")
                    .clone();
                let point = *rest.difference(&line).next().expect("one point remains");
                triples.push((t, line, point));
            }
        }
    }
    debug_assert_eq!(triples.len(), 28);
    let edge_color_between = |i: usize, j: usize| -> Option<usize> {
        let (_, li, xi) = &triples[i];
        let (_, lj, xj) = &triples[j];
        if xi == xj {
            return None;
        }
        // The edge color lies on both incident-color lines and completes a
        // line with the two vertex colors.
        let joint = lines
            .iter()
            .find(|l| l.contains(xi) && l.contains(xj))
            .expect("two points lie on a line");
        let c = *joint.iter().find(|&c| c != xi && c != xj).expect("third point");
        (li.contains(&c) && lj.contains(&c)).then_some(c)
    };
    // Disjoint triples are the cubic adjacency; every such pair also
    // satisfies the color rule.
    let mut edges = Vec::new();
    for i in 0..28 {
        for j in (i + 1)..28 {
            if triples[i].0.is_disjoint(&triples[j].0) {
                debug_assert!(edge_color_between(i, j).is_some());
                edges.push((i, j));
            }
        }
    }
    let h = Graph::new(28, &edges).expect("triple graph is valid");
    let mapping = are_isomorphic(g, &h)?.mapping;
    let vertex_colors: Vec<usize> = (0..g.n()).map(|v| triples[mapping[v]].2).collect();
    let edge_colors: BTreeMap<(usize, usize), usize> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let c = edge_color_between(mapping[u], mapping[v]).expect("image edges are edges");
            ((u, v), c)
        })
        .collect();
    let coloring = ClawColoring { vertex_colors, edge_colors };
    check_fano_coloring(g, &coloring).then_some(coloring)
}

/// All permutations of the seven colors preserving the line set.
pub fn fano_collineations() -> Vec<Vec<usize>> {
    let fano = fano_plane();
    let lines: BTreeSet<BTreeSet<usize>> = fano.lines.iter().cloned().collect();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..7).collect();
    loop {
        let preserves = lines.iter().all(|l| {
            let image: BTreeSet<usize> = l.iter().map(|&p| perm[p]).collect();
            lines.contains(&image)
        });
        if preserves {
            out.push(perm.clone());
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
    out
}

/// Applies a collineation (permutation of 0..7 acting on colors 1..=7).
pub fn apply_collineation(coloring: &ClawColoring, perm: &[usize]) -> ClawColoring {
    let map = |c: usize| perm[c - 1] + 1;
    ClawColoring {
        vertex_colors: coloring.vertex_colors.iter().map(|&c| map(c)).collect(),
        edge_colors: coloring.edge_colors.iter().map(|(&e, &c)| (e, map(c))).collect(),
    }
}

// ---------------------------------------------------------------------------
// Klein map verification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct KleinReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub cubic: bool,
    pub connected: bool,
    pub girth: Option<usize>,
    pub orientable: bool,
    pub genus: i64,
    pub aut_order: u64,
    pub petrie_all_eight: bool,
    pub dual_degree: Option<usize>,
    pub dual_chromatic: usize,
    pub dual_faces: usize,
    pub dual_genus: i64,
}

impl KleinReport {
    pub fn pass(&self) -> bool {
        self.vertices == 56
            && self.edges == 84
            && self.faces == 24
            && self.cubic
            && self.connected
            && self.girth == Some(7)
            && self.orientable
            && self.genus == 3
            && self.aut_order == 336
            && self.petrie_all_eight
            && self.dual_degree == Some(7)
            && self.dual_chromatic == 8
            && self.dual_faces == 56
            && self.dual_genus == 3
    }
}

/// Verifies the zipped Coxeter output against the genus-3 heptagonal map:
/// counts, girth, automorphism order, embedding genus, zig-zag length, and
/// the dual graph's degree, chromatic number, and triangular dual map.
pub fn verify_klein_identification(y: &MarkedGraph) -> Result<KleinReport> {
    let yg = y.to_graph();
    let embedding = verify_polygonal_embedding(&yg, &y.faces)?;
    let petrie = petrie_polygon_lengths(&yg, &y.faces)?;
    let aut = automorphism_group(&yg);
    let dual = dual_cycle_graph(&y.faces);
    let dual_degree = {
        let ds = dual.degree_sequence();
        (ds.first() == ds.last()).then(|| ds.first().copied().unwrap_or(0))
    };
    let dual_chromatic = chromatic_number(&dual)?;
    // Dual faces: the three faces around each vertex of the map close into
    // a triangle of the dual graph.
    let mut dual_faces: Vec<Vec<usize>> = Vec::new();
    for v in 0..yg.n() {
        let incident: Vec<usize> = y
            .faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(&v))
            .map(|(i, _)| i)
            .collect();
        dual_faces.push(incident);
    }
    let triangular = dual_faces.iter().all(|f| f.len() == 3);
    let dual_embedding = if triangular {
        verify_polygonal_embedding(&dual, &dual_faces)?
    } else {
        return Err(Error::BadFaceCover);
    };
    Ok(KleinReport {
        vertices: yg.n(),
        edges: yg.edges().len(),
        faces: y.faces.len(),
        cubic: yg.is_cubic(),
        connected: yg.is_connected(),
        girth: yg.girth(),
        orientable: embedding.orientable && embedding.surface_ok,
        genus: embedding.genus,
        aut_order: aut.order,
        petrie_all_eight: petrie.iter().all(|&l| l == 8),
        dual_degree,
        dual_chromatic,
        dual_faces: dual_faces.len(),
        dual_genus: dual_embedding.genus,
    })
}

/// Host graph isomorphism check between a configuration's Menger graph and
/// a zipped component.
pub fn menger_matches_component(cfg: &IncidenceConfiguration, y: &MarkedGraph) -> bool {
    are_isomorphic(&cfg.menger_graph(), &y.to_graph()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;

    #[test]
    fn lkn_small_cases() {
        for n in 4..=6 {
            let rep = check_lkn_theorem(n).unwrap();
            assert!(rep.pass(), "n = {n}: {rep:?}");
        }
        assert!(matches!(check_lkn_theorem(9), Err(Error::LknRange(9))));
    }

    #[test]
    fn k4_triangles_fail_edge_uniqueness() {
        let g = complete_graph(4);
        let fam = CopyFamily::new("K3", cliques_of_size(&g, 3));
        let rep = check_k2_fastened(&g, &[fam]);
        assert!(!rep.families[0].edge_partition);
    }

    #[test]
    fn tetrahedron_dual_is_k4() {
        let g = complete_graph(4);
        let faces: Vec<Vec<usize>> = crate::cycles::girth_cycles(&g)
            .iter()
            .map(|c| c.verts().to_vec())
            .collect();
        let dual = dual_cycle_graph(&faces);
        assert!(are_isomorphic(&dual, &complete_graph(4)).is_some());
    }

    #[test]
    fn degenerate_family_yields_empty_configuration() {
        let g = cycle_graph(5).with_labels((0..5).map(|i| i.to_string()).collect());
        let fam = CopyFamily::new("empty", Vec::new());
        let cfg = configuration_from_graph_family(&g, &fam);
        assert_eq!(cfg.line_count(), 0);
    }

    #[test]
    fn all_one_color_is_rejected() {
        let g = crate::catalog::build(crate::catalog::CatalogName::Coxeter).graph;
        let coloring = ClawColoring {
            vertex_colors: vec![2; g.n()],
            edge_colors: g.edges().into_iter().map(|e| (e, 1)).collect(),
        };
        assert!(!check_fano_coloring(&g, &coloring));
    }

    #[test]
    fn collineation_group_order() {
        assert_eq!(fano_collineations().len(), 168);
    }
}
