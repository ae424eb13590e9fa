//! Colors the vertices and edges of the Coxeter graph by the seven-point
//! plane: incident edge colors form a line at every vertex, every edge's
//! color completes a line with its endpoint colors, and the whole coloring
//! survives all 168 collineations.

use cdtzip::analysis::{
    apply_collineation, check_fano_coloring, fano_collineations, solve_fano_coloring,
};
use cdtzip::catalog::{build, CatalogName};

fn main() {
    let lg = build(CatalogName::Coxeter);
    let g = &lg.graph;
    let coloring = solve_fano_coloring(g).expect("the coxeter graph admits the coloring");
    println!("valid: {}", check_fano_coloring(g, &coloring));
    for v in 0..g.n() {
        let edge_colors: Vec<String> = g
            .neighbors(v)
            .iter()
            .map(|&w| coloring.edge_colors[&(v.min(w), v.max(w))].to_string())
            .collect();
        println!(
            "{:<3} color {}  incident edge colors {{{}}}",
            lg.scheme.label(v),
            coloring.vertex_colors[v],
            edge_colors.join(", ")
        );
    }
    let collineations = fano_collineations();
    let stable = collineations
        .iter()
        .all(|p| check_fano_coloring(g, &apply_collineation(&coloring, p)));
    println!(
        "stable under all {} collineations of the plane: {}",
        collineations.len(),
        stable
    );
}
