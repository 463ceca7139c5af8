//! Degeneracy and greedy coloring of cylindrical visibility graphs: the
//! shortest bar of any sub-arrangement sees at most 2k+2 others, so the
//! graphs are (2k+2)-degenerate and (2k+3)-colorable, and K_{2k+3} shows
//! both bounds are tight.
//!
//! ```sh
//! cargo run --example degeneracy_and_coloring
//! ```

use visikit::generate::{complete_graph_arrangement, random_arrangement};
use visikit::quasiplanar::color_count;
use visikit::{cyl_visibility, degeneracy, greedy_color, Arrangement, ArrangementKind};

fn main() {
    for k in 0..=3 {
        let arr = complete_graph_arrangement(k);
        let g = cyl_visibility(&arr);
        let (value, order) = degeneracy(&g);
        let colors = greedy_color(&g, &order).unwrap();
        println!(
            "k = {k}: increasing lengths 1..={} realize K_{} (degeneracy {}, {} colors)",
            2 * k + 3,
            2 * k + 3,
            value,
            color_count(&colors)
        );
    }

    println!();
    let k = 1;
    for seed in 0..5 {
        let Arrangement::Cyl(arr) = random_arrangement(10, k, seed, ArrangementKind::Cyl) else {
            unreachable!()
        };
        let g = cyl_visibility(&arr);
        let (value, order) = degeneracy(&g);
        let colors = greedy_color(&g, &order).unwrap();
        println!(
            "random {:?}: degeneracy {} <= {}, colors {} <= {}",
            arr.lengths,
            value,
            2 * k + 2,
            color_count(&colors),
            2 * k + 3
        );
    }
}
