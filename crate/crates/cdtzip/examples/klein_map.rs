//! Zips the Coxeter graph into the 56-vertex cubic graph carrying the
//! genus-3 map with 24 heptagonal faces, and verifies the map data: Euler
//! count, zig-zag length, automorphisms, and the dual triangulation.

use cdtzip::analysis::verify_klein_identification;
use cdtzip::catalog::{fixture_oac, CatalogName};
use cdtzip::zip::zip;

fn main() {
    let (lg, oac) = fixture_oac(CatalogName::Coxeter).unwrap();
    let y = zip(&lg.graph, &oac, 3).unwrap();
    let rep = verify_klein_identification(&y).unwrap();
    println!("vertices  {}", rep.vertices);
    println!("edges     {}", rep.edges);
    println!("faces     {}", rep.faces);
    println!("euler     {}", rep.vertices as i64 - rep.edges as i64 + rep.faces as i64);
    println!("cubic     {}", rep.cubic);
    println!("connected {}", rep.connected);
    println!("girth     {:?}", rep.girth);
    println!("orientable genus {} (surface checks passed: {})", rep.genus, rep.orientable);
    println!("automorphisms    {}", rep.aut_order);
    println!("zig-zag walks all have eight edges: {}", rep.petrie_all_eight);
    println!(
        "dual graph: degree {:?}, chromatic number {}, {} triangular faces, genus {}",
        rep.dual_degree, rep.dual_chromatic, rep.dual_faces, rep.dual_genus
    );
}
