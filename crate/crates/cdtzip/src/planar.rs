//! Planarity testing by face addition (Demoucron-Malgrange-Pertuiset),
//! run per biconnected component, with the Euler edge bound as a shortcut.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::Graph;

/// True iff the graph embeds in the plane.
pub fn is_planar(g: &Graph) -> bool {
    g.components().iter().all(|comp| {
        let sub = g.induced(comp);
        biconnected_edge_sets(&sub).iter().all(|edges| piece_is_planar(edges))
    })
}

/// Edge sets of the biconnected components (bridges come out as singletons).
fn biconnected_edge_sets(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    // Iterative DFS so deep graphs cannot overflow the call stack.
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut idx)) = call.last_mut() {
            if *idx == 0 {
                disc[u] = timer;
                low[u] = timer;
                timer += 1;
            }
            if *idx < g.neighbors(u).len() {
                let v = g.neighbors(u)[*idx];
                *idx += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    stack.push((u.min(v), u.max(v)));
                    call.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    stack.push((u.min(v), u.max(v)));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                call.pop();
                if let Some(&mut (p, _, _)) = call.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // p is a cut vertex (or the root); pop one component.
                        let key = (p.min(u), p.max(u));
                        let mut comp = Vec::new();
                        while let Some(e) = stack.pop() {
                            comp.push(e);
                            if e == key {
                                break;
                            }
                        }
                        if !comp.is_empty() {
                            out.push(comp);
                        }
                    }
                }
            }
        }
        if !stack.is_empty() {
            out.push(std::mem::take(&mut stack));
        }
    }
    out
}

/// DMP on one biconnected edge set.
fn piece_is_planar(edges: &[(usize, usize)]) -> bool {
    if edges.len() <= 2 {
        return true;
    }
    // Relabel to a compact vertex range.
    let mut verts: BTreeSet<usize> = BTreeSet::new();
    for &(u, v) in edges {
        verts.insert(u);
        verts.insert(v);
    }
    let index: BTreeMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let es: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index[&u], index[&v])).collect();
    let n = verts.len();
    let m = es.len();
    if n < 5 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let g = Graph::new(n, &es).expect("biconnected piece is a valid graph");
    dmp(&g)
}

struct Fragment {
    /// Interior vertices (empty for a chord).
    interior: Vec<usize>,
    attachments: BTreeSet<usize>,
    /// For chords only, the embedded edge.
    chord: Option<(usize, usize)>,
}

fn dmp(g: &Graph) -> bool {
    let n = g.n();
    let Some(start) = find_cycle(g) else { return true };
    let mut in_h = vec![false; n];
    for &v in &start {
        in_h[v] = true;
    }
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..start.len() {
        let (a, b) = (start[i], start[(i + 1) % start.len()]);
        h_edges.insert((a.min(b), a.max(b)));
    }
    let mut faces: Vec<Vec<usize>> = vec![start.clone(), start.iter().rev().copied().collect()];

    loop {
        let fragments = compute_fragments(g, &in_h, &h_edges);
        if fragments.is_empty() {
            return true;
        }
        // Admissible faces per fragment.
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fset: BTreeSet<usize> = f.iter().copied().collect();
                    frag.attachments.iter().all(|a| fset.contains(a))
                })
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return false;
            }
            let better = match &best {
                None => true,
                Some((bi, badm)) => {
                    admissible.len() < badm.len() || (admissible.len() == badm.len() && fi < *bi)
                }
            };
            if better {
                best = Some((fi, admissible));
            }
        }
        let (fi, admissible) = best.expect("nonempty fragments have a best entry");
        let frag = &fragments[fi];
        let face_idx = admissible[0];
        let path = fragment_path(g, frag, &in_h);
        embed_path(&mut faces, face_idx, &path);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
}

fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![root];
        state[root] = 1;
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if state[v] == 0 {
                    state[v] = 1;
                    parent[v] = u;
                    stack.push(v);
                } else if parent[u] != v && v != u {
                    // Walk both ancestries to build the cycle.
                    let mut au = vec![u];
                    let mut x = u;
                    while parent[x] != usize::MAX {
                        x = parent[x];
                        au.push(x);
                    }
                    let mut av = vec![v];
                    let mut y = v;
                    while parent[y] != usize::MAX {
                        y = parent[y];
                        av.push(y);
                    }
                    let su: BTreeSet<usize> = au.iter().copied().collect();
                    let meet = *av.iter().find(|w| su.contains(w)).expect("common root");
                    let mut cyc: Vec<usize> =
                        au.iter().take_while(|&&w| w != meet).copied().collect();
                    cyc.push(meet);
                    let tail: Vec<usize> =
                        av.iter().take_while(|&&w| w != meet).copied().collect();
                    cyc.extend(tail.into_iter().rev());
                    if cyc.len() >= 3 {
                        return Some(cyc);
                    }
                }
            }
        }
    }
    None
}

fn compute_fragments(g: &Graph, in_h: &[bool], h_edges: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let n = g.n();
    let mut frags = Vec::new();
    // Chords: non-embedded edges between embedded vertices.
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
            frags.push(Fragment {
                interior: Vec::new(),
                attachments: BTreeSet::from([u, v]),
                chord: Some((u, v)),
            });
        }
    }
    // Components of G - V(H) with their attachment vertices.
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut interior = vec![s];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        let mut attachments = BTreeSet::new();
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if in_h[v] {
                    attachments.insert(v);
                } else if !seen[v] {
                    seen[v] = true;
                    interior.push(v);
                    queue.push_back(v);
                }
            }
        }
        interior.sort_unstable();
        frags.push(Fragment { interior, attachments, chord: None });
    }
    frags
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(g: &Graph, frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = *frag.attachments.iter().next().expect("biconnected fragments attach twice");
    // BFS from a through interior vertices to another attachment.
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([a]);
    let interior: BTreeSet<usize> = frag.interior.iter().copied().collect();
    let mut seen: BTreeSet<usize> = BTreeSet::from([a]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if seen.contains(&v) {
                continue;
            }
            // Traverse only fragment edges: interior vertices freely, and
            // attachment vertices only as endpoints reached from interior.
            if interior.contains(&v) {
                seen.insert(v);
                prev.insert(v, u);
                queue.push_back(v);
            } else if in_h[v] && v != a && interior.contains(&u) {
                let mut path = vec![v, u];
                let mut x = u;
                while let Some(&p) = prev.get(&x) {
                    path.push(p);
                    x = p;
                }
                path.reverse();
                return path;
            }
        }
    }
    unreachable!("biconnected graph fragment with a single attachment");
}

fn embed_path(faces: &mut Vec<Vec<usize>>, face_idx: usize, path: &[usize]) {
    let face = faces.swap_remove(face_idx);
    let a = path[0];
    let b = *path.last().expect("path has endpoints");
    let ia = face.iter().position(|&v| v == a).expect("attachment on face");
    let ib = face.iter().position(|&v| v == b).expect("attachment on face");
    let len = face.len();
    let arc = |from: usize, to: usize| {
        let mut vs = Vec::new();
        let mut i = from;
        loop {
            vs.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % len;
        }
        vs
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = arc(ia, ib);
    f1.extend(interior.iter().rev());
    let mut f2 = arc(ib, ia);
    f2.extend(interior.iter());
    faces.push(f1);
    faces.push(f2);
}
