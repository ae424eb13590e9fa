//! Zips the squared hexagons of the Pappus graph into its two toroidal
//! components, classifies the three nine-triangle families of each, and
//! checks the nine-point configuration they carry.

use cdtzip::analysis::{
    classify_pappus_triangles, configuration_from_family, menger_matches_component,
    parallel_classes,
};
use cdtzip::catalog::{build, CatalogName};
use cdtzip::cycles::girth_cycles;
use cdtzip::zip::{orientation_plan, verify_polygonal_embedding, zip_with_plan, PlanOutcome};

fn main() {
    let lg = build(CatalogName::Pappus);
    let cycles = girth_cycles(&lg.graph);
    let plan = match orientation_plan(&lg.graph, &cycles, 3).unwrap() {
        PlanOutcome::Planned(p) => p,
        PlanOutcome::Obstructed(_) => unreachable!("the per-part systems are balanced"),
    };
    println!("orientation plan: per-part = {}", plan.is_split());
    let y = zip_with_plan(&lg.graph, &plan, 3).unwrap();
    let comps = y.components();
    println!(
        "zipped: {} vertices, {} edges, components {:?}",
        y.vertex_count(),
        y.edge_count(),
        comps.iter().map(Vec::len).collect::<Vec<_>>()
    );
    for (i, comp) in comps.iter().enumerate() {
        let yc = y.component_subgraph(comp);
        let labels: Vec<&str> = yc.vertex_labels.iter().map(String::as_str).collect();
        println!("component {}: vertices {{{}}}", i + 1, labels.join(", "));
        let tri = classify_pappus_triangles(&yc).unwrap();
        for fam in [&tri.h0, &tri.h1, &tri.h2] {
            let cfg = configuration_from_family(&yc, fam);
            println!(
                "  {}: 9 triangles, parallel classes {}, self-dual {}, menger graph is the component: {}",
                fam.name,
                parallel_classes(fam).is_some(),
                cfg.is_self_dual(),
                menger_matches_component(&cfg, &yc)
            );
        }
        let faces: Vec<Vec<usize>> = tri
            .h0
            .members
            .iter()
            .chain(tri.h1.members.iter())
            .map(|t| t.iter().copied().collect())
            .collect();
        let emb = verify_polygonal_embedding(&yc.to_graph(), &faces).unwrap();
        println!(
            "  H0 + H1 faces embed orientably with genus {} (surface check {})",
            emb.genus, emb.surface_ok
        );
    }
}
