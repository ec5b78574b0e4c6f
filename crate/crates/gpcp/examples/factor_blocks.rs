//! Four adjacent categorical axes form one factor block: every axis orders
//! its levels' observations by the joint arrangement of the axes to its
//! right, so the plot grows more ordered toward the right edge.
//!
//! Run with: cargo run --example factor_blocks

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

    let spec = parse_spec("gender,age,class,survived")?
        .with_group("survived")
        .resolve(&frame)?;

    let layout = compute_layout(&frame, &spec, &LayoutParams::default())?;
    for block in &layout.blocks {
        println!(
            "factor block spans axes {}..={} ({} sub-block)",
            block.start,
            block.end,
            block.sub_blocks.len()
        );
    }

    let groups = group_sizes(&frame, spec.group_index, &spec)?;
    let order = draw_order(&frame, &spec, &groups, DrawPolicy::LargeOnTop);
    let style = RenderStyle {
        alpha: 0.35,
        margins: [50.0, 140.0, 30.0, 60.0],
        ..RenderStyle::default()
    };
    let scene = build_scene(&layout, &frame, &order, &style, Some(&groups))?;
    std::fs::write("titanic_full.svg", emit_svg(&scene, &style))?;
    println!("wrote titanic_full.svg ({} passengers)", frame.n_rows());
    Ok(())
}
