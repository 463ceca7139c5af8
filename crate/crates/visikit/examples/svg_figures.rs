//! Write SVG figures for each object kind into `target/figures/`.
//!
//! ```sh
//! cargo run --example svg_figures
//! ```

use std::fs;
use std::path::Path;

use visikit::svg::{export_svg, SvgObject};
use visikit::{embed, Arrangement, CylArrangement, FlatArrangement};

fn main() -> std::io::Result<()> {
    let dir = Path::new("target/figures");
    fs::create_dir_all(dir)?;

    let flat = Arrangement::Flat(FlatArrangement::new(vec![3, 1, 4, 2, 5], 0));
    export_svg(SvgObject::Arrangement(&flat), &dir.join("flat.svg"))?;

    let cyl = CylArrangement::new(vec![1, 6, 2, 7, 3, 8, 4, 9, 5, 10], 1);
    let wrapped = Arrangement::Cyl(cyl.clone());
    export_svg(SvgObject::Arrangement(&wrapped), &dir.join("cylinder.svg"))?;

    let drawing = embed(&cyl);
    export_svg(SvgObject::Drawing(&drawing), &dir.join("drawing.svg"))?;

    println!("wrote flat.svg, cylinder.svg, drawing.svg to {}", dir.display());
    Ok(())
}
