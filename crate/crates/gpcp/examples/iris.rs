//! Mixed numeric/categorical plot of the iris data, with the species axis
//! repeated so both flower dimensions get a categorical neighbor.
//!
//! Run with: cargo run --example iris

use std::error::Error;
use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use gpcp::{
    build_scene, compute_layout, draw_order, emit_svg, group_sizes, load_csv, parse_spec,
    DrawPolicy, LayoutParams, LoadOptions, RenderStyle,
};

fn main() -> Result<(), Box<dyn Error>> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let file = File::open(fixtures.join("iris.csv"))?;
    let frame = load_csv(BufReader::new(file), &LoadOptions::default())?;

    // the same column may appear any number of times
    let spec = parse_spec("Sepal.Length,Species,Sepal.Width,Species,Petal.Length,Species,Petal.Width")?
        .with_group("Species")
        .resolve(&frame)?;

    let layout = compute_layout(&frame, &spec, &LayoutParams::default())?;
    let groups = group_sizes(&frame, spec.group_index, &spec)?;
    let order = draw_order(&frame, &spec, &groups, DrawPolicy::Hierarchical);

    let style = RenderStyle {
        margins: [50.0, 140.0, 30.0, 60.0], // room for the color key
        ..RenderStyle::default()
    };
    let scene = build_scene(&layout, &frame, &order, &style, Some(&groups))?;
    std::fs::write("iris.svg", emit_svg(&scene, &style))?;
    println!("wrote iris.svg ({} observations)", frame.n_rows());
    Ok(())
}
