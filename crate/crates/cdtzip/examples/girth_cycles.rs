//! Enumerates the girth cycles of the Petersen graph and measures how many
//! cycles pass through each path order, the census behind the strongly
//! fastened property.

use cdtzip::catalog::{build, CatalogName};
use cdtzip::cycles::{check_sf_uh, cycles_through_path, girth_cycles, paths_of_order};

fn main() {
    let lg = build(CatalogName::Petersen);
    let g = &lg.graph;
    let cycles = girth_cycles(g);
    println!("petersen: {} girth cycles of length {}", cycles.len(), g.girth().unwrap());
    for c in &cycles {
        let labels: Vec<&str> = c.verts().iter().map(|&v| lg.scheme.label(v)).collect();
        println!("  ({})", labels.join(" "));
    }
    for order in [3, 2] {
        let paths = paths_of_order(g, order);
        let counts: Vec<usize> = paths
            .iter()
            .map(|p| cycles_through_path(g, &cycles, p).unwrap().len())
            .collect();
        let constant = counts.windows(2).all(|w| w[0] == w[1]);
        println!(
            "{} paths on {} vertices, each in {} cycles (constant: {constant})",
            paths.len(),
            order,
            counts[0]
        );
    }
    let sf = check_sf_uh(g, &cycles, 3);
    println!(
        "census mu = {:?}; fits 2^i: {}, fits 2^(i+1): {}",
        sf.mu, sf.mu_matches_pow_i, sf.mu_matches_pow_i_plus_1
    );
}
