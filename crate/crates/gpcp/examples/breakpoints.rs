//! Breakpoints split a factor block into sub-blocks arranged independently,
//! so only the relationships between adjacent axes remain emphasized. The
//! two orderings of each boundary axis are reconciled inside its level
//! boxes, visible as diagonal segments there.
//!
//! Run with: cargo run --example breakpoints

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

    // `|` after a name breaks the block after that axis
    let spec = parse_spec("gender,age|class|survived")?
        .with_group("survived")
        .resolve(&frame)?;

    let layout = compute_layout(&frame, &spec, &LayoutParams::default())?;
    let block = &layout.blocks[0];
    println!(
        "one block, {} sub-blocks: {:?}",
        block.sub_blocks.len(),
        block
            .sub_blocks
            .iter()
            .map(|s| (s.start, s.end))
            .collect::<Vec<_>>()
    );

    let groups = group_sizes(&frame, spec.group_index, &spec)?;
    let order = draw_order(&frame, &spec, &groups, DrawPolicy::SmallOnTop);
    let style = RenderStyle {
        alpha: 0.35,
        margins: [50.0, 140.0, 30.0, 60.0],
        ..RenderStyle::default()
    };
    let scene = build_scene(&layout, &frame, &order, &style, Some(&groups))?;
    std::fs::write("titanic_breaks.svg", emit_svg(&scene, &style))?;
    println!("wrote titanic_breaks.svg");
    Ok(())
}
