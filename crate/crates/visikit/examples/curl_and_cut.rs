//! Curling a flat arrangement onto the cylinder and cutting it flat again,
//! with the exact criterion for when curling changes nothing.
//!
//! ```sh
//! cargo run --example curl_and_cut
//! ```

use visikit::{curl, curl_preserves, cut, cyl_visibility, flat_visibility, FlatArrangement};

fn main() {
    for lengths in [vec![2, 1, 3], vec![1, 2, 3], vec![3, 1, 2, 5, 6, 4]] {
        let flat = FlatArrangement::new(lengths, 0);
        let before = flat_visibility(&flat).edge_count();
        let after = cyl_visibility(&curl(&flat)).edge_count();
        println!(
            "flat {:?}: {} edges, curled {} edges, criterion says preserved = {}",
            flat.lengths,
            before,
            after,
            curl_preserves(&flat).unwrap()
        );
    }

    println!();
    let cylinder = visikit::CylArrangement::new(vec![2, 3, 1], 0);
    let flat = cut(&cylinder).unwrap();
    println!(
        "cut {:?} between its two longest bars -> flat {:?} (longest on top)",
        cylinder.lengths, flat.lengths
    );
    println!("curling back gives {:?}", curl(&flat).lengths);

    let apart = visikit::CylArrangement::new(vec![5, 1, 4, 2, 3], 0);
    println!("cut {:?} -> {}", apart.lengths, cut(&apart).unwrap_err());
}
