//! Visibility graphs of flat and cylindrical arrangements, cross-checked
//! against the brute-force sightline oracle.
//!
//! ```sh
//! cargo run --example visibility_basics
//! ```

use visikit::{
    cyl_visibility, flat_visibility, shorter_bar_edge_count, sightline_oracle, Arrangement,
    CylArrangement, FlatArrangement,
};

fn main() {
    let flat = FlatArrangement::new(vec![1, 2, 3, 4], 1);
    let g = flat_visibility(&flat);
    println!("flat {:?} with k = {}:", flat.lengths, flat.k);
    println!("  {} edges: {:?}", g.edge_count(), g.edges);

    // the oracle quantifies over all sightline heights and sides
    let arr = Arrangement::Flat(flat.clone());
    for i in 0..flat.len() {
        for j in i + 1..flat.len() {
            assert_eq!(g.has_edge(i, j), sightline_oracle(&arr, i, j).unwrap());
        }
    }
    println!("  every pair agrees with the sightline oracle");

    let cyl = CylArrangement::new(vec![1, 6, 2, 7, 3, 8, 4, 9, 5, 10], 1);
    let g = cyl_visibility(&cyl);
    println!("\ncylindrical {:?} with k = {}:", cyl.lengths, cyl.k);
    println!("  {} edges (the maximum for n = 10, k = 1)", g.edge_count());

    // per-bar count of edges toward strictly longer bars: 2k+2 until the
    // bar ranks among the 2k+2 longest, then rank - 1
    print!("  edges toward longer bars:");
    for i in 0..cyl.len() {
        print!(" {}", shorter_bar_edge_count(&cyl, i).unwrap());
    }
    println!();
}
