//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Three asserts are expected to stay red and are marked VERIFIED ERRATUM:
//! the catalog's kappa column entries for pappus and biggs-smith (no
//! orientation assignment exists for either; odd-parity certificates are
//! emitted and re-verified), the printed pappus orientation listing (it is
//! not an orientation assignment, and none can exist), and the dual
//! heptagonal-map chromatic number (exhaustively 4, not 8). See the README
//! notes and the test bodies for the verification trail.

use std::collections::BTreeSet;
use std::time::Instant;

use cdtzip::analysis::{
    apply_collineation, check_fano_coloring, check_k2_fastened, check_lkn_theorem,
    classify_pappus_triangles, configuration_from_family, fano_collineations,
    menger_matches_component, parallel_classes, solve_fano_coloring, CopyFamily,
};
use cdtzip::catalog::{
    build, expected_row, fixture_k, fixture_oac, fixture_oac_printed, fixture_obstruction,
    CatalogName,
};
use cdtzip::color::{chromatic_number, cliques_of_size};
use cdtzip::cycles::{check_sf_uh, girth_cycles, paths_of_order, CanonicalCycle, CanonicalPath};
use cdtzip::graph::{complete_graph, Graph};
use cdtzip::hamilton::{hamiltonian_cycle, HamiltonStatus};
use cdtzip::iso::{arc_transitivity, are_isomorphic, automorphism_group};
use cdtzip::oac::{
    build_constraint_graph, classify_kappa, directed_contains, solve_oa, validate_oac,
    verify_certificate, verify_walk, OrientedCycleSet, SolveOutcome,
};
use cdtzip::zip::{
    kappa2_reference, orientation_plan, petrie_polygon_lengths, same_named_multigraph,
    verify_polygonal_embedding, zip, zip_with_plan, PlanOutcome,
};

const TABLE: [CatalogName; 12] = CatalogName::ALL;

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (self.next() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    }
}

#[test]
fn criterion_1_table_reproduction_fast() {
    let t0 = Instant::now();
    for name in TABLE {
        let row = expected_row(name);
        let g = build(name).graph;
        assert_eq!(g.n(), row.n, "{name:?} order");
        assert_eq!(g.diameter().unwrap(), row.d, "{name:?} diameter");
        assert_eq!(g.girth(), Some(row.g), "{name:?} girth");
        assert_eq!(g.is_bipartite(), row.b, "{name:?} bipartite");
        assert!(g.is_cubic() && g.is_connected(), "{name:?} cubic connected");
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 10, "took {elapsed:?}");
    println!("criterion 1 (n, d, g, b for all 12 rows, {elapsed:?} < 10s): PASS");
}

#[test]
fn criterion_2_girth_cycle_counts() {
    let t0 = Instant::now();
    let expected = [4, 9, 6, 12, 28, 18, 12, 20, 24, 90, 216, 136];
    for (name, want) in TABLE.iter().zip(expected) {
        let row = expected_row(*name);
        let g = build(*name).graph;
        let cycles = girth_cycles(&g);
        assert_eq!(cycles.len(), want, "{name:?} cycle count");
        assert_eq!(
            cycles.len() * row.g,
            3 * row.n * (1 << (row.k - 2)),
            "{name:?} count identity"
        );
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("criterion 2 (eta counts, {elapsed:?} < 60s): PASS");
}

#[test]
fn criterion_3_arc_transitivity() {
    for name in TABLE {
        let row = expected_row(name);
        let g = build(name).graph;
        let aut = automorphism_group(&g);
        assert!(aut.is_vertex_transitive(g.n()), "{name:?} vertex-transitive");
        assert_eq!(arc_transitivity(&g, &aut).unwrap(), row.k, "{name:?}");
    }
    println!("criterion 3 (arc-transitivity column): PASS");
}

#[test]
fn criterion_4_automorphism_orders() {
    let expected: [u64; 12] = [24, 72, 48, 120, 336, 216, 120, 240, 336, 1440, 4320, 2448];
    let t0 = Instant::now();
    for (name, want) in TABLE.iter().zip(expected) {
        let g = build(*name).graph;
        let aut = automorphism_group(&g);
        assert_eq!(aut.order, want, "{name:?}");
        // Every generator preserves every edge.
        for gen in &aut.generators {
            for (u, v) in g.edges() {
                assert!(g.has_edge(gen[u], gen[v]), "{name:?} generator breaks an edge");
            }
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 600, "took {elapsed:?}");
    println!("criterion 4 (automorphism orders incl. the two largest, {elapsed:?}): PASS");
}

/// VERIFIED ERRATUM: stays red. The pappus and biggs-smith rows expect
/// kappa = 3, but neither graph admits a girth-cycle orientation assignment:
/// the signed constraint systems are unbalanced, with odd-parity closed-walk
/// certificates re-verified from the raw traversals below (and, for pappus,
/// an exhaustive 2^18 check during development found zero valid
/// assignments). The zipped objects still exist through the per-part
/// orientation plan, which is verified separately.
#[test]
fn criterion_5_kappa_classification() {
    let expected: [u8; 12] = [1, 2, 1, 0, 0, 3, 1, 3, 3, 2, 0, 3];
    let mut measured = Vec::new();
    for name in TABLE {
        let row = expected_row(name);
        let g = build(name).graph;
        let res = classify_kappa(&g, row.k).unwrap();
        if let Some(cert) = &res.certificate {
            let cycles = girth_cycles(&g);
            assert!(verify_certificate(&cycles, cert), "{name:?} certificate parity");
        }
        measured.push(res.kappa);
    }
    let ok = measured == expected;
    println!(
        "criterion 5 (kappa column): {} (expected {expected:?}, measured {measured:?})",
        if ok { "PASS" } else { "FAIL - verified erratum at pappus and biggs-smith" }
    );
    assert_eq!(
        measured.as_slice(),
        expected.as_slice(),
        "kappa column: the pappus and biggs-smith entries are verified errata \
         (no orientation assignment exists; certificates checked above)"
    );
}

#[test]
fn criterion_5_obstruction_certificates() {
    for name in [CatalogName::Petersen, CatalogName::Heawood, CatalogName::Foster] {
        let row = expected_row(name);
        let g = build(name).graph;
        let res = classify_kappa(&g, row.k).unwrap();
        assert_eq!(res.kappa, 0, "{name:?}");
        let cert = res.certificate.expect("obstructed graphs carry a certificate");
        let cycles = girth_cycles(&g);
        assert!(verify_certificate(&cycles, &cert), "{name:?} odd conflict parity");
        // The shipped obstruction walks check out structurally too.
        let (lg, walk) = fixture_obstruction(name).unwrap();
        assert!(verify_walk(&lg.graph, &walk).pass(), "{name:?} fixture walk");
    }
    println!("criterion 5 (obstruction certificates re-verified): PASS");
}

/// VERIFIED ERRATUM: stays red. Seven of the eight printed listings are
/// orientation assignments (two after reversing one printed base cycle,
/// which the assets record as flip lines). The printed pappus listing is
/// not, and cannot be repaired: its cycles A0 and B1 both run through the
/// shared path (6, 1, 2) in the same direction, and no orientation of the
/// 18 hexagons satisfies the opposite-run condition at all.
#[test]
fn criterion_5_fixture_validation() {
    let fixtures = [
        CatalogName::K4,
        CatalogName::K33,
        CatalogName::Q3,
        CatalogName::Pappus,
        CatalogName::Dodecahedral,
        CatalogName::Desargues,
        CatalogName::Coxeter,
        CatalogName::Tutte,
    ];
    let mut failed = Vec::new();
    for name in fixtures {
        let (lg, oac) = fixture_oac(name).unwrap();
        let k = fixture_k(name).unwrap();
        assert_eq!(oac.cycles.len(), expected_row(name).eta, "{name:?} covers the girth cycles");
        if !validate_oac(&lg.graph, &oac, k).unwrap() {
            failed.push(name);
        }
    }
    let ok = failed.is_empty();
    println!(
        "criterion 5 (fixture listings validate): {}",
        if ok { "PASS".to_string() } else { format!("FAIL - verified erratum: {failed:?}") }
    );
    assert!(
        failed.is_empty(),
        "fixture listings that are not orientation assignments: {failed:?} \
         (verified erratum: no orientation of the pappus hexagons exists)"
    );
}

#[test]
fn criterion_5_solver_agrees_with_valid_fixtures() {
    for name in [
        CatalogName::K4,
        CatalogName::K33,
        CatalogName::Q3,
        CatalogName::Dodecahedral,
        CatalogName::Desargues,
        CatalogName::Coxeter,
        CatalogName::Tutte,
    ] {
        let (lg, oac) = fixture_oac(name).unwrap();
        let k = fixture_k(name).unwrap();
        let cycles = girth_cycles(&lg.graph);
        let cg = build_constraint_graph(&lg.graph, &cycles, k).unwrap();
        let SolveOutcome::Balanced(sol) = solve_oa(&cg) else {
            panic!("{name:?} should be balanced")
        };
        let bits = oac.orientation_bits();
        for comp in 0..sol.component_count {
            let mut same = true;
            let mut flipped = true;
            for i in 0..cycles.len() {
                if sol.component_of[i] != comp {
                    continue;
                }
                same &= bits[i] == sol.orientation[i];
                flipped &= bits[i] != sol.orientation[i];
            }
            assert!(
                same || flipped,
                "{name:?} component {comp}: fixture is not a component flip of the solution"
            );
        }
    }
    println!("criterion 5 (solver solution matches fixtures up to component flips): PASS");
}

#[test]
fn criterion_6_zipping() {
    let t0 = Instant::now();
    // Pappus: two isomorphic 9-vertex, 27-edge components.
    {
        let g = build(CatalogName::Pappus).graph;
        let cycles = girth_cycles(&g);
        let PlanOutcome::Planned(plan) = orientation_plan(&g, &cycles, 3).unwrap() else {
            panic!("pappus per-part plan exists")
        };
        let y = zip_with_plan(&g, &plan, 3).unwrap();
        let comps = y.components();
        assert_eq!(comps.len(), 2);
        let y1 = y.component_subgraph(&comps[0]);
        let y2 = y.component_subgraph(&comps[1]);
        assert_eq!((y1.vertex_count(), y1.edge_count()), (9, 27));
        assert_eq!((y2.vertex_count(), y2.edge_count()), (9, 27));
        assert!(are_isomorphic(&y1.to_graph(), &y2.to_graph()).is_some());
    }
    // Desargues: two components isomorphic to L(K5), complement Petersen.
    {
        let (lg, oac) = fixture_oac(CatalogName::Desargues).unwrap();
        let y = zip(&lg.graph, &oac, 3).unwrap();
        let comps = y.components();
        assert_eq!(comps.len(), 2);
        let lk5 = complete_graph(5).line_graph();
        let pet = build(CatalogName::Petersen).graph;
        for comp in &comps {
            let yc = y.component_subgraph(comp).to_graph();
            assert!(are_isomorphic(&yc, &lk5).is_some());
            assert!(are_isomorphic(&yc.complement(), &pet).is_some());
        }
    }
    // Coxeter: 56 vertices, 84 edges, cubic, connected, girth 7.
    {
        let (lg, oac) = fixture_oac(CatalogName::Coxeter).unwrap();
        let y = zip(&lg.graph, &oac, 3).unwrap();
        let yg = y.to_graph();
        assert_eq!((y.vertex_count(), y.edge_count()), (56, 84));
        assert!(yg.is_cubic() && yg.is_connected());
        assert_eq!(yg.girth(), Some(7));
    }
    // k = 2 rows reproduce the input graph.
    for name in [CatalogName::K4, CatalogName::Q3, CatalogName::Dodecahedral] {
        let (lg, oac) = fixture_oac(name).unwrap();
        let y = zip(&lg.graph, &oac, 2).unwrap();
        assert!(are_isomorphic(&y.to_graph(), &lg.graph).is_some(), "{name:?}");
    }
    // K3,3 equals the multiplicity-3 distance-2 multigraph.
    {
        let (lg, oac) = fixture_oac(CatalogName::K33).unwrap();
        let y = zip(&lg.graph, &oac, 3).unwrap();
        let reference = kappa2_reference(&lg.graph, 3).unwrap();
        assert!(same_named_multigraph(&y, &reference));
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}");
    println!("criterion 6 (zipping, {elapsed:?} < 30s): PASS");
}

#[test]
fn criterion_7_embeddings() {
    // The 24 zipped heptagons: orientable genus 3, zig-zag length 8.
    let (lg, oac) = fixture_oac(CatalogName::Coxeter).unwrap();
    let y = zip(&lg.graph, &oac, 3).unwrap();
    let yg = y.to_graph();
    let emb = verify_polygonal_embedding(&yg, &y.faces).unwrap();
    assert!(emb.orientable && emb.surface_ok);
    assert_eq!(emb.genus, 3);
    assert_eq!(56 - 84 + 24, -4);
    let petrie = petrie_polygon_lengths(&yg, &y.faces).unwrap();
    assert!(petrie.iter().all(|&l| l == 8), "zig-zag lengths {petrie:?}");
    // Dual graph: 7-regular on 24 vertices.
    let dual = cdtzip::analysis::dual_cycle_graph(&y.faces);
    assert_eq!(dual.n(), 24);
    assert!(dual.degree_sequence().iter().all(|&d| d == 7));
    // Pappus torus and the spherical k = 2 rows.
    {
        let g = build(CatalogName::Pappus).graph;
        let cycles = girth_cycles(&g);
        let PlanOutcome::Planned(plan) = orientation_plan(&g, &cycles, 3).unwrap() else {
            panic!("pappus plan")
        };
        let zipped = zip_with_plan(&g, &plan, 3).unwrap();
        let comps = zipped.components();
        let y1 = zipped.component_subgraph(&comps[0]);
        let tri = classify_pappus_triangles(&y1).unwrap();
        let faces: Vec<Vec<usize>> = tri
            .h0
            .members
            .iter()
            .chain(tri.h1.members.iter())
            .map(|t| t.iter().copied().collect())
            .collect();
        let torus = verify_polygonal_embedding(&y1.to_graph(), &faces).unwrap();
        assert!(torus.orientable && torus.surface_ok);
        assert_eq!(torus.genus, 1);
    }
    for name in [CatalogName::K4, CatalogName::Q3, CatalogName::Dodecahedral] {
        let g = build(name).graph;
        let faces: Vec<Vec<usize>> =
            girth_cycles(&g).iter().map(|c| c.verts().to_vec()).collect();
        let emb = verify_polygonal_embedding(&g, &faces).unwrap();
        assert!(emb.orientable && emb.surface_ok, "{name:?}");
        assert_eq!(emb.genus, 0, "{name:?}");
    }
    println!("criterion 7 (embeddings, genus, zig-zags, dual regularity): PASS");
}

/// VERIFIED ERRATUM: stays red. The dual of the 24-heptagon map is
/// 7-regular on 24 vertices with clique number 3; an exhaustive check (also
/// reproduced below, independently of the branch-and-bound solver) finds a
/// proper 4-coloring and refutes 3-colorability, so its chromatic number is
/// 4, not the expected 8.
#[test]
fn criterion_7_dual_chromatic_eight() {
    let (lg, oac) = fixture_oac(CatalogName::Coxeter).unwrap();
    let y = zip(&lg.graph, &oac, 3).unwrap();
    let dual = cdtzip::analysis::dual_cycle_graph(&y.faces);
    let chi = chromatic_number(&dual).unwrap();
    // Independent exhaustive cross-check of the measured value.
    fn colorable(g: &Graph, t: usize, v: usize, colors: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..t {
            if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                if colorable(g, t, v + 1, colors) {
                    return true;
                }
            }
        }
        false
    }
    let four = colorable(&dual, 4, 0, &mut vec![0; 24]);
    let three = colorable(&dual, 3, 0, &mut vec![0; 24]);
    assert!(four && !three, "exhaustive cross-check of the measured chromatic number");
    assert_eq!(chi, 4, "solver agrees with the exhaustive oracle");
    println!(
        "criterion 7 (dual chromatic number): FAIL - verified erratum (measured {chi}, expected 8)"
    );
    assert_eq!(
        chi, 8,
        "dual map chromatic number is exhaustively 4; the expected 8 is a verified erratum"
    );
}

#[test]
fn criterion_8_configurations() {
    // Pappus families on both components.
    let g = build(CatalogName::Pappus).graph;
    let cycles = girth_cycles(&g);
    let PlanOutcome::Planned(plan) = orientation_plan(&g, &cycles, 3).unwrap() else {
        panic!("pappus plan")
    };
    let y = zip_with_plan(&g, &plan, 3).unwrap();
    for comp in y.components() {
        let yc = y.component_subgraph(&comp);
        let tri = classify_pappus_triangles(&yc).unwrap();
        for fam in [&tri.h0, &tri.h1, &tri.h2] {
            let cfg = configuration_from_family(&yc, fam);
            assert_eq!((cfg.point_count(), cfg.line_count()), (9, 9));
            assert!((0..9).all(|p| cfg.lines_through(p).len() == 3));
            assert!(cfg.self_duality().is_some(), "{} self-dual", fam.name);
            assert!(menger_matches_component(&cfg, &yc), "{} menger", fam.name);
            assert!(parallel_classes(fam).is_some(), "{} parallel classes", fam.name);
        }
        let fastened =
            check_k2_fastened(&yc.to_graph(), &[tri.h0.clone(), tri.h1.clone(), tri.h2.clone()]);
        assert!(fastened.pass());
        assert!(fastened.families.iter().all(|f| f.per_vertex == Some(3)));
    }
    // Desargues: the ten non-clique triangles form the (10_3) configuration.
    let (lg, oac) = fixture_oac(CatalogName::Desargues).unwrap();
    let y = zip(&lg.graph, &oac, 3).unwrap();
    let comps = y.components();
    for comp in &comps {
        let yc = y.component_subgraph(comp);
        let ycg = yc.to_graph();
        let k4s = CopyFamily::new("K4", cliques_of_size(&ycg, 4));
        assert_eq!(k4s.len(), 5);
        let tri: Vec<BTreeSet<usize>> = cliques_of_size(&ycg, 3)
            .into_iter()
            .filter(|t| !k4s.members.iter().any(|k| t.is_subset(k)))
            .collect();
        assert_eq!(tri.len(), 10);
        let tri = CopyFamily::new("K3", tri);
        let cfg = configuration_from_family(&yc, &tri);
        assert_eq!((cfg.point_count(), cfg.line_count()), (10, 10));
        assert!((0..10).all(|p| cfg.lines_through(p).len() == 3));
        assert!(cfg.self_duality().is_some());
        assert!(menger_matches_component(&cfg, &yc));
        let fastened = check_k2_fastened(&ycg, &[k4s, tri]);
        assert!(fastened.pass());
        let pv: Vec<Option<usize>> = fastened.families.iter().map(|f| f.per_vertex).collect();
        assert_eq!(pv, vec![Some(2), Some(3)]);
    }
    println!("criterion 8 (configurations, self-duality, Menger graphs): PASS");
}

#[test]
fn criterion_9_line_graph_decompositions() {
    for n in 4..=7 {
        let rep = check_lkn_theorem(n).unwrap();
        assert!(rep.pass(), "n = {n}");
        assert_eq!(rep.fastened.families[0].copies, n);
        assert_eq!(rep.fastened.families[1].copies, n * (n - 1) * (n - 2) / 6);
        assert_eq!(rep.fastened.families[0].per_vertex, Some(2));
        assert_eq!(rep.fastened.families[1].per_vertex, Some(n - 2));
    }
    println!("criterion 9 (line graphs of complete graphs, n = 4..=7): PASS");
}

#[test]
fn criterion_10_property_suites() {
    // Canonicalization idempotence over random traversals.
    let mut rng = XorShift(0x5eed_cafe);
    for _ in 0..100 {
        let len = 3 + (rng.next() % 8) as usize;
        let seq: Vec<usize> = (0..len).map(|_| (rng.next() % 1000) as usize).collect();
        let distinct: BTreeSet<usize> = seq.iter().copied().collect();
        if distinct.len() != seq.len() {
            continue;
        }
        let c = CanonicalCycle::from_traversal(&seq);
        assert_eq!(CanonicalCycle::from_traversal(c.verts()), c);
        let p = CanonicalPath::from_seq(&seq);
        assert_eq!(CanonicalPath::from_seq(p.verts()), p);
    }
    // Isomorphism invariance under random relabeling, 100 seeds.
    let pet = build(CatalogName::Petersen).graph;
    let hea = build(CatalogName::Heawood).graph;
    for seed in 0..100u64 {
        let mut rng = XorShift(seed * 2 + 1);
        let g = if seed % 2 == 0 { &pet } else { &hea };
        let perm = rng.permutation(g.n());
        let h = g.relabel(&perm);
        let m = are_isomorphic(g, &h).expect("relabeling preserves isomorphism");
        for (u, v) in g.edges() {
            assert!(h.has_edge(m.mapping[u], m.mapping[v]));
        }
    }
    // Orientation-assignment count equals 2^components, by brute force.
    for (name, k) in [(CatalogName::K4, 2), (CatalogName::Q3, 2), (CatalogName::K33, 3)] {
        let g = build(name).graph;
        let cycles = girth_cycles(&g);
        let cg = build_constraint_graph(&g, &cycles, k).unwrap();
        let SolveOutcome::Balanced(sol) = solve_oa(&cg) else { panic!("{name:?} balanced") };
        let paths = paths_of_order(&g, k);
        let incident: Vec<Vec<usize>> = paths
            .iter()
            .map(|p| {
                (0..cycles.len()).filter(|&i| cycles[i].contains_path(p.verts())).collect()
            })
            .collect();
        let mut valid = 0u64;
        for mask in 0u32..(1 << cycles.len()) {
            let dir = |i: usize, p: &[usize]| {
                let seq: Vec<usize> = if mask >> i & 1 == 1 {
                    cycles[i].verts().iter().rev().copied().collect()
                } else {
                    cycles[i].verts().to_vec()
                };
                directed_contains(&seq, p).unwrap()
            };
            if paths
                .iter()
                .zip(&incident)
                .all(|(p, inc)| dir(inc[0], p.verts()) != dir(inc[1], p.verts()))
            {
                valid += 1;
            }
        }
        assert_eq!(valid, 1 << sol.count_log2(), "{name:?} solution count");
    }
    // Orientation-flip equivariance of the zip.
    for (name, k) in [(CatalogName::Coxeter, 3), (CatalogName::Desargues, 3)] {
        let g = build(name).graph;
        let cycles = girth_cycles(&g);
        let cg = build_constraint_graph(&g, &cycles, k).unwrap();
        let SolveOutcome::Balanced(sol) = solve_oa(&cg) else { panic!() };
        let base = zip(&g, &sol.oriented_cycles(&cycles), k).unwrap();
        for comp in 0..sol.component_count {
            let mut flipped = sol.clone();
            for i in 0..cycles.len() {
                if flipped.component_of[i] == comp {
                    flipped.orientation[i] = !flipped.orientation[i];
                }
            }
            let other = zip(&g, &flipped.oriented_cycles(&cycles), k).unwrap();
            assert!(
                are_isomorphic(&base.to_graph(), &other.to_graph()).is_some(),
                "{name:?} flip of component {comp}"
            );
        }
    }
    // Multiplicity census: constant per order with mu_0 = 2 on every row;
    // the exponent discrepancy is reported, never asserted.
    for name in TABLE {
        let row = expected_row(name);
        let g = build(name).graph;
        let cycles = girth_cycles(&g);
        let sf = check_sf_uh(&g, &cycles, row.k);
        assert!(sf.mu.iter().all(Option::is_some), "{name:?} census constant");
        assert_eq!(sf.mu[0], Some(2), "{name:?} top-order multiplicity");
        assert!(sf.exact_share_at_top, "{name:?} exact sharing at the top order");
        assert!(sf.mu_matches_pow_i_plus_1, "{name:?} measured law");
        println!(
            "  {} mu sequence {:?} (2^i fits: {}, 2^(i+1) fits: {})",
            name.as_str(),
            sf.mu,
            sf.mu_matches_pow_i,
            sf.mu_matches_pow_i_plus_1
        );
    }
    println!("criterion 10 (property suites): PASS");
}

#[test]
fn criterion_11_hamiltonicity_column() {
    let t0 = Instant::now();
    for name in TABLE {
        let row = expected_row(name);
        let g = build(name).graph;
        let status = hamiltonian_cycle(&g, 5_000_000_000);
        match (row.h, status) {
            (true, HamiltonStatus::Yes(cycle)) => {
                assert_eq!(cycle.len(), g.n(), "{name:?} witness length");
                for w in cycle.windows(2) {
                    assert!(g.has_edge(w[0], w[1]), "{name:?} witness adjacency");
                }
                assert!(g.has_edge(cycle[g.n() - 1], cycle[0]));
            }
            (false, HamiltonStatus::No) => {}
            (want, got) => panic!("{name:?}: expected h = {want}, got {got:?}"),
        }
    }
    let elapsed = t0.elapsed();
    println!("criterion 11 (hamiltonicity column for all 12 rows, {elapsed:?}): PASS");
}

/// Side record: the claw coloring exists and survives the plane's
/// collineations (part of the coxeter analysis surface).
#[test]
fn fano_coloring_of_the_coxeter_graph() {
    let cox = build(CatalogName::Coxeter).graph;
    let coloring = solve_fano_coloring(&cox).expect("a coloring exists");
    assert!(check_fano_coloring(&cox, &coloring));
    for perm in fano_collineations() {
        assert!(check_fano_coloring(&cox, &apply_collineation(&coloring, &perm)));
    }
    println!("fano coloring: PASS (stable under all 168 collineations)");
}

/// Side record: the printed coxeter and tutte listings each need exactly one
/// base cycle reversed; the corrections are carried in the assets and the
/// printed variants fail in exactly the predicted constraint counts.
#[test]
fn printed_listing_deltas_are_pinned() {
    for (name, k, expected_violations) in
        [(CatalogName::Coxeter, 3usize, 7usize), (CatalogName::Tutte, 5, 40)]
    {
        let (lg, printed) = fixture_oac_printed(name).unwrap();
        let cycles = girth_cycles(&lg.graph);
        let mut violations = 0;
        for p in paths_of_order(&lg.graph, k) {
            let inc: Vec<usize> = (0..cycles.len())
                .filter(|&i| cycles[i].contains_path(p.verts()))
                .collect();
            let d0 = directed_contains(&printed.cycles[inc[0]], p.verts()).unwrap();
            let d1 = directed_contains(&printed.cycles[inc[1]], p.verts()).unwrap();
            if d0 == d1 {
                violations += 1;
            }
        }
        assert_eq!(violations, expected_violations, "{name:?} printed delta");
        let (lg2, corrected) = fixture_oac(name).unwrap();
        assert!(validate_oac(&lg2.graph, &corrected, k).unwrap(), "{name:?} corrected");
    }
    println!("printed listing deltas: PASS (coxeter 7/84, tutte 40/360)");
}

/// Side record: a complete machine-checked infeasibility proof for the
/// pappus orientation problem, independent of the balance solver. Every
/// hexagon contains an even number (six) of the shared 2-paths, so flipping
/// any cycle toggles an even number of violated constraints and the total
/// violation parity is an invariant of the instance; the canonical
/// orientation has odd violations, hence no orientation reaches zero.
#[test]
fn pappus_infeasibility_parity_proof() {
    let g = build(CatalogName::Pappus).graph;
    let cycles = girth_cycles(&g);
    let paths = paths_of_order(&g, 3);
    // (a) each cycle carries an even number of constraint paths;
    for c in &cycles {
        let carried = paths.iter().filter(|p| c.contains_path(p.verts())).count();
        assert_eq!(carried, 6);
    }
    // (b) the all-canonical orientation violates an odd number of them.
    let mut violations = 0usize;
    for p in &paths {
        let inc: Vec<&CanonicalCycle> =
            cycles.iter().filter(|c| c.contains_path(p.verts())).collect();
        assert_eq!(inc.len(), 2);
        if inc[0].traverses_forward(p.verts()) == inc[1].traverses_forward(p.verts()) {
            violations += 1;
        }
    }
    assert_eq!(violations % 2, 1, "violation parity of the canonical orientation");
    println!(
        "pappus infeasibility parity proof: PASS (6 constraints per hexagon, {violations} violations)"
    );
}

/// Side record: the biggs-smith obstruction certificate localizes to five
/// cycles and five shared paths; exhausting the 32 restricted orientations
/// confirms none satisfies all five constraints.
#[test]
fn biggs_smith_certificate_local_refutation() {
    let row = expected_row(CatalogName::BiggsSmith);
    let g = build(CatalogName::BiggsSmith).graph;
    let res = classify_kappa(&g, row.k).unwrap();
    let cert = res.certificate.expect("unbalanced");
    let cycles = girth_cycles(&g);
    assert!(verify_certificate(&cycles, &cert));
    let involved: Vec<usize> = {
        let mut v = cert.cycle_indices.clone();
        v.pop();
        v
    };
    let local_index = |c: usize| involved.iter().position(|&x| x == c).unwrap();
    let mut satisfiable = false;
    for mask in 0u32..(1 << involved.len()) {
        let ok = (0..cert.paths.len()).all(|i| {
            let a = cert.cycle_indices[i];
            let b = cert.cycle_indices[i + 1];
            let dir = |c: usize| {
                let bit = mask >> local_index(c) & 1 == 1;
                let seq: Vec<usize> = if bit {
                    cycles[c].verts().iter().rev().copied().collect()
                } else {
                    cycles[c].verts().to_vec()
                };
                directed_contains(&seq, &cert.paths[i]).unwrap()
            };
            dir(a) != dir(b)
        });
        if ok {
            satisfiable = true;
        }
    }
    assert!(!satisfiable, "the certificate subsystem has no consistent orientation");
    println!(
        "biggs-smith local refutation: PASS ({} cycles, {} constraints, 2^{} assignments exhausted)",
        involved.len(),
        cert.paths.len(),
        involved.len()
    );
}

/// Side record: the shipped obstruction walks convert into certificates
/// over the canonical cycles and pass the same odd-parity verification as
/// the solver's own output.
#[test]
fn shipped_walks_verify_as_certificates() {
    for name in [CatalogName::Petersen, CatalogName::Heawood, CatalogName::Foster] {
        let (lg, walk) = fixture_obstruction(name).unwrap();
        let cycles = girth_cycles(&lg.graph);
        let cert = walk.to_certificate(&cycles).expect("walk cycles are girth cycles");
        assert!(verify_certificate(&cycles, &cert), "{name:?}");
    }
    println!("shipped obstruction walks verify as odd-parity certificates: PASS");
}

/// Side record: the automorphism group acts transitively on girth cycles
/// with full dihedral stabilizers, and on k-vertex paths with the end swap
/// realized, for every row, including the rows with no orientation
/// assignment.
#[test]
fn undirected_cycle_path_homogeneity() {
    for name in TABLE {
        let row = expected_row(name);
        let g = build(name).graph;
        let aut = automorphism_group(&g);
        let uh = cdtzip::cycles::check_cycle_path_uh(&g, &aut, row.k);
        assert!(uh.holds(), "{name:?}: {uh:?}");
    }
    println!("undirected cycle/path homogeneity on all 12 rows: PASS");
}

/// Side record: the full claim report finishes fast and is byte-identical
/// across runs.
#[test]
fn verify_all_report_is_deterministic() {
    let opts = cdtzip::report::VerifyOptions { slow: false, only: Some(CatalogName::Desargues) };
    let a = cdtzip::report::verify_all(opts).unwrap().to_json_string();
    let b = cdtzip::report::verify_all(opts).unwrap().to_json_string();
    assert_eq!(a, b);
    println!("report determinism: PASS");
}
