//! The same layout rendered under all four painting policies. The geometry
//! is identical; only the z-order of the polylines changes.
//!
//! Run with: cargo run --example overplotting

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
    let file = File::open(fixtures.join("titanic.csv"))?;
    let frame = load_csv(BufReader::new(file), &LoadOptions::default())?;

    let spec = parse_spec("class,gender,survived")?
        .with_group("survived")
        .resolve(&frame)?;
    let layout = compute_layout(&frame, &spec, &LayoutParams::default())?;
    let groups = group_sizes(&frame, spec.group_index, &spec)?;
    let style = RenderStyle {
        alpha: 0.4,
        margins: [50.0, 140.0, 30.0, 60.0],
        ..RenderStyle::default()
    };

    for (policy, name) in [
        (DrawPolicy::SmallOnTop, "small_on_top"),
        (DrawPolicy::LargeOnTop, "large_on_top"),
        (DrawPolicy::Hierarchical, "hierarchical"),
        (DrawPolicy::DataOrder, "data_order"),
    ] {
        let order = draw_order(&frame, &spec, &groups, policy);
        let scene = build_scene(&layout, &frame, &order, &style, Some(&groups))?;
        let path = format!("titanic_{name}.svg");
        std::fs::write(&path, emit_svg(&scene, &style))?;
        println!("wrote {path}");
    }
    Ok(())
}
