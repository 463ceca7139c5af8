//! Round trip between a cylindrical arrangement and a convex drawing:
//! embed, check quasiplanarity and maximality, then peel back.
//!
//! ```sh
//! cargo run --example embed_and_peel
//! ```

use visikit::{
    cyl_visibility, embed, is_maximal, is_quasiplanar, peel, CylArrangement,
};

fn main() {
    let arr = CylArrangement::new(vec![4, 1, 7, 3, 6, 2, 5], 1);
    let d = embed(&arr);
    println!("arrangement {:?}, k = {}", arr.lengths, arr.k);
    println!("embedded drawing: {} chords on {} points", d.edge_count(), d.n);
    println!("  (k+2)-quasiplanar: {}", is_quasiplanar(&d, arr.k));
    println!("  edge-maximal:      {}", is_maximal(&d, arr.k).unwrap());

    let (peeled, trace) = peel(&d, arr.k).unwrap();
    println!("\npeel, shortest bar first:");
    for step in &trace.steps {
        println!(
            "  vertex {} gets length {:2} (degree {} at removal{})",
            step.vertex,
            step.length,
            step.degree,
            if step.forced { ", forced" } else { "" }
        );
    }
    println!("peeled arrangement: {:?}", peeled.lengths);
    assert_eq!(cyl_visibility(&peeled), d.graph());
    println!("its visibility graph equals the drawing: round trip holds");
}
