//! Numeric axis scaling: per-axis min-max stretches every axis to the full
//! height, global min-max keeps all numeric axes on one shared scale.
//!
//! Run with: cargo run --example scaling

use std::error::Error;
use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use gpcp::{
    build_scene, compute_layout, draw_order, emit_svg, group_sizes, load_csv, parse_spec,
    DrawPolicy, LayoutParams, LoadOptions, RenderStyle, ScaleMethod,
};

fn main() -> Result<(), Box<dyn Error>> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let file = File::open(fixtures.join("iris.csv"))?;
    let frame = load_csv(BufReader::new(file), &LoadOptions::default())?;

    let spec = parse_spec("Sepal.Length,Sepal.Width,Petal.Length,Petal.Width,Species")?
        .with_group("Species")
        .resolve(&frame)?;
    let groups = group_sizes(&frame, spec.group_index, &spec)?;
    let order = draw_order(&frame, &spec, &groups, DrawPolicy::Hierarchical);
    let style = RenderStyle {
        margins: [50.0, 140.0, 30.0, 60.0],
        ..RenderStyle::default()
    };

    for (method, name) in [
        (ScaleMethod::PerAxisMinMax, "per_axis"),
        (ScaleMethod::GlobalMinMax, "global"),
    ] {
        let params = LayoutParams {
            scale_method: method,
            ..LayoutParams::default()
        };
        let layout = compute_layout(&frame, &spec, &params)?;
        let scene = build_scene(&layout, &frame, &order, &style, Some(&groups))?;
        let path = format!("iris_scale_{name}.svg");
        std::fs::write(&path, emit_svg(&scene, &style))?;
        println!("wrote {path}");
    }
    Ok(())
}
