//! The JSON layout dump carries everything needed to rebuild the plot
//! geometry downstream: axis placement, level boxes, factor blocks, and
//! the per-observation entry/exit coordinates.
//!
//! Run with: cargo run --example layout_dump

use std::error::Error;

use gpcp::{compute_layout, dump_layout, load_csv, parse_spec, LayoutParams, LoadOptions};

fn main() -> Result<(), Box<dyn Error>> {
    let csv = "\
weight,species,habitat
3.1,cat,house
52.0,dog,yard
4.2,cat,yard
1.9,cat,house
40.5,dog,house
";
    let frame = load_csv(csv.as_bytes(), &LoadOptions::default())?;
    let spec = parse_spec("weight,species,habitat")?.resolve(&frame)?;
    let layout = compute_layout(&frame, &spec, &LayoutParams::default())?;

    let json = dump_layout(&layout, &frame)?;
    std::io::Write::write_all(&mut std::io::stdout(), &json)?;
    Ok(())
}
