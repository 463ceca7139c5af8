//! The two named families with extremal behavior: quasiplanar drawings
//! that no cylindrical arrangement contains, and the interleaved family
//! whose peel is forced until its boundary step.
//!
//! ```sh
//! cargo run --example extremal_families
//! ```

use visikit::generate::{forced_peel_analysis, forced_peel_family, quasiplanar_counterexample};
use visikit::{degeneracy, embed, is_quasiplanar, maximal_completion};

fn main() {
    for k in 1..=2 {
        let d = quasiplanar_counterexample(k).unwrap();
        let done = maximal_completion(&d, k).unwrap();
        let g = done.graph();
        let min_degree = (0..g.n).map(|v| g.degree(v)).min().unwrap();
        println!(
            "k = {k}: {} long chords on {} points, (k+2)-quasiplanar: {}",
            d.edge_count(),
            d.n,
            is_quasiplanar(&d, k)
        );
        println!(
            "  maximal completion: {} edges, min degree {min_degree}, degeneracy {} > 2k+2 = {}",
            done.edge_count(),
            degeneracy(&g).0,
            2 * k + 2
        );
        println!("  so no cylindrical k-visibility graph contains it");
    }

    println!();
    let arr = forced_peel_family(1).unwrap();
    println!("interleaved family, k = 1: {:?}", arr.lengths);
    let report = forced_peel_analysis(&embed(&arr), 1, 5).unwrap();
    for (i, forced) in report.forced.iter().enumerate() {
        println!("  peel step {}: {}", i + 1, if *forced { "forced" } else { "tie" });
    }
    println!(
        "the tie at the last step lets a long bar leave early; the deterministic\n\
         peel then ends with two of the five longest bars adjacent: {:?}",
        report.adjacent_longest_pair
    );
    println!(
        "taking the short bar instead reproduces {:?},\nwhere the five longest stay apart",
        arr.lengths
    );
}
