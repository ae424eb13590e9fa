//! Zips the Desargues graph and identifies each component as the line graph
//! of K5 (with Petersen complement), carrying the ten-point self-dual
//! configuration on its ten constant-marked triangles.

use cdtzip::analysis::{
    check_k2_fastened, configuration_from_family, menger_matches_component, CopyFamily,
};
use cdtzip::catalog::{build, fixture_oac, CatalogName};
use cdtzip::color::cliques_of_size;
use cdtzip::graph::complete_graph;
use cdtzip::iso::are_isomorphic;
use cdtzip::zip::zip;

fn main() {
    let (lg, oac) = fixture_oac(CatalogName::Desargues).unwrap();
    let y = zip(&lg.graph, &oac, 3).unwrap();
    let comps = y.components();
    println!(
        "zipped: {} vertices, {} edges, {} components",
        y.vertex_count(),
        y.edge_count(),
        comps.len()
    );
    let lk5 = complete_graph(5).line_graph();
    let petersen = build(CatalogName::Petersen).graph;
    for (i, comp) in comps.iter().enumerate() {
        let yc = y.component_subgraph(comp);
        let ycg = yc.to_graph();
        println!(
            "component {}: L(K5) {}, complement is the petersen graph {}",
            i + 1,
            are_isomorphic(&ycg, &lk5).is_some(),
            are_isomorphic(&ycg.complement(), &petersen).is_some()
        );
        let k4s = CopyFamily::new("K4", cliques_of_size(&ycg, 4));
        let triangles: Vec<_> = cliques_of_size(&ycg, 3)
            .into_iter()
            .filter(|t| !k4s.members.iter().any(|k| t.is_subset(k)))
            .collect();
        let tri = CopyFamily::new("K3", triangles);
        println!("  {} tetrahedra and {} free triangles", k4s.len(), tri.len());
        let fastened = check_k2_fastened(&ycg, &[k4s, tri.clone()]);
        println!(
            "  edge partitions with per-vertex counts {:?}: {}",
            fastened.families.iter().map(|f| f.per_vertex).collect::<Vec<_>>(),
            fastened.pass()
        );
        let cfg = configuration_from_family(&yc, &tri);
        println!(
            "  ten-point configuration: self-dual {}, menger graph is the component: {}",
            cfg.is_self_dual(),
            menger_matches_component(&cfg, &yc)
        );
    }
}
