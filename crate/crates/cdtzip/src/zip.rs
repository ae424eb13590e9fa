//! Zipping the (k-1)-powers of oriented girth cycles: oppositely oriented,
//! identically labeled arc pairs merge into undirected edges and the
//! occurrence quotient yields the marked graph Y(G), together with the
//! polygonal-embedding checks used downstream.

use std::collections::{BTreeMap, BTreeSet};

use crate::cycles::{girth_cycles, paths_of_order, CanonicalCycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oac::{
    build_constraint_graph, solve_oa, CgEdge, ConstraintGraph, OaSolution,
    ObstructionCertificate, OrientedCycleSet, SolveOutcome,
};

/// One directed power cycle of a source girth cycle: consecutive occurrences
/// at distance k-1 along the chosen traversal, each arc labeled by the
/// middle vertex (k = 3) or unlabeled (k = 2).
#[derive(Debug, Clone)]
pub struct MarkedCyclePower {
    /// Occurrence cycles as vertex sequences of the host graph.
    pub components: Vec<Vec<usize>>,
    /// `labels[c][i]` labels the arc `components[c][i] -> components[c][i+1]`.
    pub labels: Vec<Vec<Option<usize>>>,
}

/// The (k-1)-power of one directed girth cycle.
pub fn cycle_power(oriented: &[usize], k: usize) -> Result<MarkedCyclePower> {
    if k != 2 && k != 3 {
        return Err(Error::UnsupportedZipK(k));
    }
    let g = oriented.len();
    let step = k - 1;
    let classes = gcd(step, g);
    let mut components = Vec::new();
    let mut labels = Vec::new();
    for r in 0..classes {
        let mut comp = Vec::new();
        let mut labs = Vec::new();
        let mut i = r;
        loop {
            comp.push(oriented[i]);
            labs.push((k == 3).then(|| oriented[(i + 1) % g]));
            i = (i + step) % g;
            if i == r {
                break;
            }
        }
        components.push(comp);
        labels.push(labs);
    }
    Ok(MarkedCyclePower { components, labels })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Orientation data for a zip: either one global assignment or, for
/// bipartite hosts with odd k, an independent assignment per vertex part
/// (the freedom the per-part quotient components actually consume).
#[derive(Debug, Clone)]
pub enum OrientationPlan {
    Full(OaSolution),
    PerPart { part: Vec<bool>, solutions: [OaSolution; 2] },
}

pub enum PlanOutcome {
    Planned(OrientationPlan),
    Obstructed(ObstructionCertificate),
}

impl OrientationPlan {
    fn bit(&self, cycle: usize, part_bit: bool) -> bool {
        match self {
            OrientationPlan::Full(sol) => sol.orientation[cycle],
            OrientationPlan::PerPart { solutions, .. } => {
                solutions[usize::from(part_bit)].orientation[cycle]
            }
        }
    }

    fn part_of(&self, v: usize) -> bool {
        match self {
            OrientationPlan::Full(_) => false,
            OrientationPlan::PerPart { part, .. } => part[v],
        }
    }

    pub fn is_split(&self) -> bool {
        matches!(self, OrientationPlan::PerPart { .. })
    }
}

/// Solves for an orientation plan: the full signed system when balanced;
/// otherwise, for bipartite hosts whose shared paths have same-part
/// endpoints (k odd), the two part-restricted systems.
pub fn orientation_plan(g: &Graph, cycles: &[CanonicalCycle], k: usize) -> Result<PlanOutcome> {
    let cg = build_constraint_graph(g, cycles, k)?;
    match solve_oa(&cg) {
        SolveOutcome::Balanced(sol) => Ok(PlanOutcome::Planned(OrientationPlan::Full(sol))),
        SolveOutcome::Unbalanced(cert) => {
            if k % 2 == 1 {
                if let Some(part) = g.bipartition() {
                    let mut sides: [Vec<CgEdge>; 2] = [Vec::new(), Vec::new()];
                    for e in &cg.edges {
                        sides[usize::from(part[e.path.verts()[0]])].push(e.clone());
                    }
                    let solve_side = |edges: Vec<CgEdge>| -> Option<OaSolution> {
                        let side = ConstraintGraph { cycle_count: cycles.len(), edges };
                        match solve_oa(&side) {
                            SolveOutcome::Balanced(s) => Some(s),
                            SolveOutcome::Unbalanced(_) => None,
                        }
                    };
                    let [e0, e1] = sides;
                    if let (Some(s0), Some(s1)) = (solve_side(e0), solve_side(e1)) {
                        return Ok(PlanOutcome::Planned(OrientationPlan::PerPart {
                            part,
                            solutions: [s0, s1],
                        }));
                    }
                }
            }
            Ok(PlanOutcome::Obstructed(cert))
        }
    }
}

/// An undirected edge of the quotient, remembering the zipped arc pair.
#[derive(Debug, Clone)]
pub struct MarkedEdge {
    pub u: usize,
    pub v: usize,
    /// Middle vertex of the zipped 2-arcs (k = 3 only).
    pub label: Option<usize>,
    /// The two source cycles whose power arcs were zipped.
    pub cycles: (usize, usize),
    /// The shared path in the host graph.
    pub path: Vec<usize>,
}

/// Quotient of the disjoint cycle powers under oppositely-oriented arc
/// identification.
#[derive(Debug, Clone)]
pub struct MarkedGraph {
    /// Underlying host vertex per quotient class.
    pub vertex_names: Vec<usize>,
    pub vertex_labels: Vec<String>,
    pub edges: Vec<MarkedEdge>,
    /// Closed class walks, one per power-cycle component.
    pub faces: Vec<Vec<usize>>,
    /// Source girth-cycle index per face.
    pub face_source: Vec<usize>,
}

/// Zip under a single oriented cycle set for the whole graph. Fails with
/// an unmatched arc when the set is not an orientation assignment.
pub fn zip(g: &Graph, oac: &OrientedCycleSet, k: usize) -> Result<MarkedGraph> {
    let cycles = girth_cycles(g);
    if oac.cycles.len() != cycles.len() {
        return Err(Error::InvalidOac("oriented set does not cover the girth cycles".into()));
    }
    let bits = oac.orientation_bits();
    let sol = OaSolution {
        orientation: bits,
        component_of: vec![0; cycles.len()],
        component_count: 1,
    };
    zip_with_plan(g, &OrientationPlan::Full(sol), k)
}

/// Zip under an orientation plan (the pipeline entry point).
pub fn zip_with_plan(g: &Graph, plan: &OrientationPlan, k: usize) -> Result<MarkedGraph> {
    if k != 2 && k != 3 {
        return Err(Error::UnsupportedZipK(k));
    }
    let cycles = girth_cycles(g);
    let girth = match g.girth() {
        Some(v) => v,
        None => return Err(Error::InvalidOac("acyclic host".into())),
    };
    // Occurrence ids: one per (cycle, vertex-on-cycle).
    let mut occ_id: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (ci, c) in cycles.iter().enumerate() {
        for &v in c.verts() {
            let next = occ_id.len();
            occ_id.insert((ci, v), next);
        }
    }
    let mut dsu: Vec<usize> = (0..occ_id.len()).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    // (tail occurrence, head occurrence, label, source cycles, shared path)
    type RawEdge = (usize, usize, Option<usize>, (usize, usize), Vec<usize>);
    let mut raw_edges: Vec<RawEdge> = Vec::new();
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
        let part_bit = plan.part_of(path.verts()[0]);
        let dir = |ci: usize| {
            let t = cycles[ci].traverses_forward(path.verts());
            t ^ plan.bit(ci, part_bit)
        };
        let (da, db) = (dir(a), dir(b));
        if da == db {
            let vs = path.verts();
            return Err(Error::UnmatchedArc(
                vs[0],
                vs[vs.len() - 1],
                (k == 3).then(|| vs[1]),
            ));
        }
        let (u, w) = (path.verts()[0], path.verts()[path.verts().len() - 1]);
        // Identify the endpoint occurrences of the two zipped arcs.
        let ou_a = occ_id[&(a, u)];
        let ou_b = occ_id[&(b, u)];
        let ow_a = occ_id[&(a, w)];
        let ow_b = occ_id[&(b, w)];
        let (ra, rb) = (find(&mut dsu, ou_a), find(&mut dsu, ou_b));
        dsu[ra] = rb;
        let (ra, rb) = (find(&mut dsu, ow_a), find(&mut dsu, ow_b));
        dsu[ra] = rb;
        let label = (k == 3).then(|| path.verts()[1]);
        raw_edges.push((ou_a, ow_a, label, (a, b), path.verts().to_vec()));
    }
    // Quotient classes in deterministic order.
    let mut class_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertex_names = Vec::new();
    let occ_list: Vec<(usize, usize)> = occ_id.keys().copied().collect();
    for (ci, v) in &occ_list {
        let root = find(&mut dsu, occ_id[&(*ci, *v)]);
        if !class_of_root.contains_key(&root) {
            let id = class_of_root.len();
            class_of_root.insert(root, id);
            vertex_names.push(*v);
        }
    }
    // All occurrences in a class must carry the same host vertex.
    for (ci, v) in &occ_list {
        let root = find(&mut dsu, occ_id[&(*ci, *v)]);
        let class = class_of_root[&root];
        if vertex_names[class] != *v {
            return Err(Error::InvalidOac("quotient class mixes host vertices".into()));
        }
    }
    let mut edges = Vec::new();
    for (ou, ow, label, cyc, path) in raw_edges {
        let u = class_of_root[&find(&mut dsu, ou)];
        let v = class_of_root[&find(&mut dsu, ow)];
        if let Some(l) = label {
            if vertex_names[u] == l || vertex_names[v] == l {
                return Err(Error::InvalidOac("edge label equals an endpoint name".into()));
            }
        }
        edges.push(MarkedEdge { u, v, label, cycles: cyc, path });
    }
    // Faces: each power component, walked in its governing direction.
    let step = k - 1;
    let classes = gcd(step, girth);
    let mut faces = Vec::new();
    let mut face_source = Vec::new();
    for (ci, c) in cycles.iter().enumerate() {
        let verts = c.verts();
        for r in 0..classes {
            let part_bit = plan.part_of(verts[r]);
            let bit = plan.bit(ci, part_bit);
            let eff: Vec<usize> = if bit {
                verts.iter().rev().copied().collect()
            } else {
                verts.to_vec()
            };
            // Start the walk at the residue-r position of the canonical
            // order, located inside the effective traversal.
            let start = eff.iter().position(|&v| v == verts[r]).expect("same vertex set");
            let mut walk = Vec::new();
            let mut i = start;
            loop {
                walk.push(class_of_root[&find(&mut dsu, occ_id[&(ci, eff[i])])]);
                i = (i + step) % girth;
                if i == start {
                    break;
                }
            }
            faces.push(walk);
            face_source.push(ci);
        }
    }
    let vertex_labels = label_classes(g, &vertex_names);
    let assembled = MarkedGraph { vertex_names, vertex_labels, edges, faces, face_source };
    // When the power construction fragments each cycle (gcd > 1), the
    // fragments are charts over the host vertex set and reassemble on it;
    // whole-cycle powers build a genuine cover and stay unprojected.
    if classes > 1 {
        Ok(assembled.project_to_host(g))
    } else {
        Ok(assembled)
    }
}

fn label_classes(g: &Graph, names: &[usize]) -> Vec<String> {
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    let mut total: BTreeMap<usize, usize> = BTreeMap::new();
    for &n in names {
        *total.entry(n).or_insert(0) += 1;
    }
    names
        .iter()
        .map(|&n| {
            let i = seen.entry(n).or_insert(0);
            let label = if total[&n] > 1 {
                format!("{}#{}", g.label_of(n), i)
            } else {
                g.label_of(n)
            };
            *i += 1;
            label
        })
        .collect()
}

impl MarkedGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Simple graph on the quotient classes (parallel edges collapsed).
    pub fn to_graph(&self) -> Graph {
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for e in &self.edges {
            pairs.insert((e.u.min(e.v), e.u.max(e.v)));
        }
        let edges: Vec<(usize, usize)> = pairs.into_iter().collect();
        Graph::new(self.vertex_count(), &edges)
            .expect("quotient classes form a graph")
            .with_labels(self.vertex_labels.clone())
    }

    /// Multigraph with parallel edges kept and labeled by middle vertices.
    pub fn to_multigraph(&self) -> Graph {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        let mut g = Graph::new_multi(self.vertex_count(), &pairs)
            .expect("quotient classes form a multigraph")
            .with_labels(self.vertex_labels.clone());
        let mut labels: BTreeMap<(usize, usize, u32), String> = BTreeMap::new();
        let mut used: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for e in &self.edges {
            let key = (e.u.min(e.v), e.u.max(e.v));
            let idx = used.entry(key).or_insert(0);
            if let Some(l) = e.label {
                labels.insert((key.0, key.1, *idx), l.to_string());
            }
            *idx += 1;
        }
        g.set_edge_labels(labels);
        g
    }

    /// Connected components as sorted class-id lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.to_graph().components()
    }

    /// Merges all quotient classes carrying the same host vertex.
    pub fn project_to_host(&self, g: &Graph) -> MarkedGraph {
        let mut hosts: Vec<usize> = self.vertex_names.clone();
        hosts.sort_unstable();
        hosts.dedup();
        let index: BTreeMap<usize, usize> =
            hosts.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        let vertex_names = hosts.clone();
        let vertex_labels = hosts.iter().map(|&h| g.label_of(h)).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| MarkedEdge {
                u: index[&self.vertex_names[e.u]],
                v: index[&self.vertex_names[e.v]],
                ..e.clone()
            })
            .collect();
        let faces = self
            .faces
            .iter()
            .map(|f| f.iter().map(|&c| index[&self.vertex_names[c]]).collect())
            .collect();
        MarkedGraph {
            vertex_names,
            vertex_labels,
            edges,
            faces,
            face_source: self.face_source.clone(),
        }
    }

    /// The induced marked subgraph on one component; faces and edges fully
    /// inside the component are kept and re-indexed.
    pub fn component_subgraph(&self, classes: &[usize]) -> MarkedGraph {
        let index: BTreeMap<usize, usize> =
            classes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let vertex_names = classes.iter().map(|&c| self.vertex_names[c]).collect();
        let vertex_labels = classes.iter().map(|&c| self.vertex_labels[c].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| index.contains_key(&e.u) && index.contains_key(&e.v))
            .map(|e| MarkedEdge { u: index[&e.u], v: index[&e.v], ..e.clone() })
            .collect();
        let mut faces = Vec::new();
        let mut face_source = Vec::new();
        for (f, &src) in self.faces.iter().zip(&self.face_source) {
            if f.iter().all(|c| index.contains_key(c)) {
                faces.push(f.iter().map(|c| index[c]).collect());
                face_source.push(src);
            }
        }
        MarkedGraph { vertex_names, vertex_labels, edges, faces, face_source }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertex_names.iter().zip(&self.vertex_labels)
                .map(|(n, l)| serde_json::json!({"name": n, "label": l}))
                .collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|e| serde_json::json!({
                "u": e.u, "v": e.v, "label": e.label,
                "cycles": [e.cycles.0, e.cycles.1], "path": e.path,
            })).collect::<Vec<_>>(),
            "faces": self.faces,
            "face_source": self.face_source,
        })
    }

    pub fn to_dot(&self, name: &str) -> String {
        self.to_multigraph().to_dot(name)
    }
}

/// The reference multigraph (g-1) * G^(k-1) that zipping must reproduce
/// when g = 2(k-1).
pub fn kappa2_reference(g: &Graph, k: usize) -> Result<Graph> {
    let girth = g.girth().ok_or(Error::KappaNotTwo)?;
    if girth != 2 * (k - 1) {
        return Err(Error::KappaNotTwo);
    }
    let power = g.power(k - 1)?;
    Ok(power.with_uniform_multiplicity((girth - 1) as u32))
}

/// Multigraph equality over host vertex names: same name sets and the same
/// name-pair multiplicities.
pub fn same_named_multigraph(zipped: &MarkedGraph, reference: &Graph) -> bool {
    let mut names: Vec<usize> = zipped.vertex_names.clone();
    names.sort_unstable();
    let expected: Vec<usize> = (0..reference.n()).collect();
    if names != expected {
        return false;
    }
    let mut zm: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for e in &zipped.edges {
        let (a, b) = (zipped.vertex_names[e.u], zipped.vertex_names[e.v]);
        *zm.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    let rm: BTreeMap<(usize, usize), u32> = reference
        .edges()
        .into_iter()
        .map(|(u, v)| ((u, v), reference.multiplicity_of(u, v)))
        .collect();
    zm == rm
}

// ---------------------------------------------------------------------------
// Polygonal embeddings
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    pub orientable: bool,
    pub genus: i64,
    /// Rotation at every vertex closes into a single cycle.
    pub surface_ok: bool,
    /// Face count used in the Euler computation.
    pub face_count: usize,
}

/// Checks that the face walks cover every edge exactly twice, orients them
/// coherently (oppositely over every shared edge), verifies the vertex
/// links, and computes the genus from the Euler characteristic.
pub fn verify_polygonal_embedding(h: &Graph, faces: &[Vec<usize>]) -> Result<EmbeddingReport> {
    let oriented = orient_faces(h, faces)?;
    let Some(oriented) = oriented else {
        return Ok(EmbeddingReport {
            orientable: false,
            genus: -1,
            surface_ok: false,
            face_count: faces.len(),
        });
    };
    // Corner successor at each vertex: in-neighbor -> out-neighbor.
    let n = h.n();
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for f in &oriented {
        let m = f.len();
        for i in 0..m {
            let a = f[i];
            let v = f[(i + 1) % m];
            let b = f[(i + 2) % m];
            if succ[v].insert(a, b).is_some() {
                return Err(Error::BadFaceCover);
            }
        }
    }
    let mut surface_ok = true;
    for (v, rotation) in succ.iter().enumerate() {
        let deg = h.degree(v);
        if rotation.len() != deg {
            surface_ok = false;
            continue;
        }
        // The successor map must be a single cycle over the neighbors.
        let Some((&start, _)) = rotation.iter().next() else { continue };
        let mut cur = start;
        let mut steps = 0;
        loop {
            cur = rotation[&cur];
            steps += 1;
            if cur == start {
                break;
            }
            if steps > deg {
                surface_ok = false;
                break;
            }
        }
        if steps != deg {
            surface_ok = false;
        }
    }
    let euler = n as i64 - h.edges().len() as i64 + faces.len() as i64;
    let orientable = (2 - euler) % 2 == 0;
    let genus = (2 - euler) / 2;
    Ok(EmbeddingReport { orientable, genus, surface_ok, face_count: faces.len() })
}

/// Chooses traversal directions so every edge's two passages are opposite;
/// `None` when impossible.
fn orient_faces(h: &Graph, faces: &[Vec<usize>]) -> Result<Option<Vec<Vec<usize>>>> {
    // Each edge must be covered exactly twice across all face walks.
    let mut passages: BTreeMap<(usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
    for (fi, f) in faces.iter().enumerate() {
        let m = f.len();
        for i in 0..m {
            let (a, b) = (f[i], f[(i + 1) % m]);
            if !h.has_edge(a, b) {
                return Err(Error::BadFaceCover);
            }
            passages.entry((a.min(b), a.max(b))).or_default().push((fi, a < b));
        }
    }
    if passages.len() != h.edges().len() || passages.values().any(|v| v.len() != 2) {
        return Err(Error::BadFaceCover);
    }
    // Signed union-find over face flips.
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    let mut parity: Vec<bool> = vec![false; faces.len()];
    fn find(parent: &mut Vec<usize>, parity: &mut Vec<bool>, x: usize) -> (usize, bool) {
        if parent[x] == x {
            return (x, false);
        }
        let (root, p) = find(parent, parity, parent[x]);
        parent[x] = root;
        parity[x] ^= p;
        (root, parity[x])
    }
    for ps in passages.values() {
        let (f1, d1) = ps[0];
        let (f2, d2) = ps[1];
        // Opposite passage directions required: flip parity differs iff the
        // as-given directions agree.
        let need = d1 == d2;
        if f1 == f2 {
            if need {
                return Ok(None);
            }
            continue;
        }
        let (r1, p1) = find(&mut parent, &mut parity, f1);
        let (r2, p2) = find(&mut parent, &mut parity, f2);
        if r1 == r2 {
            if p1 ^ p2 != need {
                return Ok(None);
            }
        } else {
            parent[r1] = r2;
            parity[r1] = p1 ^ p2 ^ need;
        }
    }
    let oriented = faces
        .iter()
        .enumerate()
        .map(|(fi, f)| {
            let (_, p) = find(&mut parent, &mut parity, fi);
            if p {
                f.iter().rev().copied().collect()
            } else {
                f.clone()
            }
        })
        .collect();
    Ok(Some(oriented))
}

/// Lengths of all closed zig-zag walks of the embedding, each walk counted
/// once per direction.
pub fn petrie_polygon_lengths(h: &Graph, faces: &[Vec<usize>]) -> Result<Vec<usize>> {
    let oriented = orient_faces(h, faces)?.ok_or(Error::BadFaceCover)?;
    let n = h.n();
    let mut succ: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for f in &oriented {
        let m = f.len();
        for i in 0..m {
            succ[f[(i + 1) % m]].insert(f[i], f[(i + 2) % m]);
        }
    }
    let mut pred: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for (v, s) in succ.iter().enumerate() {
        for (&a, &b) in s {
            pred[v].insert(b, a);
        }
    }
    // States: (arc, phase); the zig-zag alternates the two face tracings.
    let mut seen: BTreeSet<(usize, usize, bool)> = BTreeSet::new();
    let mut lengths = Vec::new();
    let arcs: Vec<(usize, usize)> = h
        .edges()
        .into_iter()
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .collect();
    for &(u0, v0) in &arcs {
        for phase0 in [false, true] {
            if seen.contains(&(u0, v0, phase0)) {
                continue;
            }
            let (mut u, mut v, mut phase) = (u0, v0, phase0);
            let mut len = 0;
            loop {
                seen.insert((u, v, phase));
                let w = if phase { pred[v][&u] } else { succ[v][&u] };
                u = v;
                v = w;
                phase = !phase;
                len += 1;
                if (u, v, phase) == (u0, v0, phase0) {
                    break;
                }
            }
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    Ok(lengths)
}
