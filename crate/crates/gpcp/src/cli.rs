//! Command-line wiring: CSV in, SVG (and optionally a layout dump) out.
//!
//! Exit codes: 0 success, 1 usage error, 2 data or validation error. Output
//! files are written to a temporary sibling and renamed into place, so a
//! failing run never leaves partial output.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};

use crate::dataset::{load_csv, LoadOptions};
use crate::draworder::{draw_order, group_sizes, DrawPolicy};
use crate::dump::dump_layout;
use crate::error::Error;
use crate::layout::{compute_layout, LayoutParams, ScaleMethod};
use crate::scene::{build_scene, emit_svg, RenderStyle};
use crate::selection::parse_spec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OverplotArg {
    SmallOnTop,
    LargeOnTop,
    Hierarchical,
    Data,
}

impl From<OverplotArg> for DrawPolicy {
    fn from(arg: OverplotArg) -> DrawPolicy {
        match arg {
            OverplotArg::SmallOnTop => DrawPolicy::SmallOnTop,
            OverplotArg::LargeOnTop => DrawPolicy::LargeOnTop,
            OverplotArg::Hierarchical => DrawPolicy::Hierarchical,
            OverplotArg::Data => DrawPolicy::DataOrder,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScaleArg {
    /// Per-axis min-max.
    Axis,
    /// One min/max over all numeric axes.
    Global,
    /// Values must already lie in [0, 1].
    Raw,
}

impl From<ScaleArg> for ScaleMethod {
    fn from(arg: ScaleArg) -> ScaleMethod {
        match arg {
            ScaleArg::Axis => ScaleMethod::PerAxisMinMax,
            ScaleArg::Global => ScaleMethod::GlobalMinMax,
            ScaleArg::Raw => ScaleMethod::Raw,
        }
    }
}

/// Renders a parallel coordinate plot of mixed numeric/categorical data.
#[derive(Debug, Parser)]
#[command(name = "gpcp", version, about)]
pub struct CliConfig {
    /// Input CSV file (UTF-8, header row, comma-separated).
    #[arg(long, value_name = "PATH")]
    input: PathBuf,

    /// Output SVG file.
    #[arg(long, value_name = "PATH")]
    out: PathBuf,

    /// Axis expression: comma-separated column names, `|` instead of a
    /// comma marks a breakpoint after the name on its left. Columns may
    /// repeat. Example: "gender,age|class,survived".
    #[arg(long, value_name = "EXPR")]
    vars: String,

    /// Categorical column to color lines by.
    #[arg(long, value_name = "COLUMN")]
    color_by: Option<String>,

    /// Painting order of the lines.
    #[arg(long, value_name = "POLICY", value_enum, default_value_t = OverplotArg::Hierarchical)]
    overplot: OverplotArg,

    /// Line opacity in (0, 1].
    #[arg(long, default_value_t = 0.6)]
    alpha: f64,

    /// Total vertical fraction reserved for gaps between level boxes.
    #[arg(long, default_value_t = 0.10)]
    gap_total: f64,

    /// Fraction of the inter-axis spacing occupied by a categorical box.
    #[arg(long, default_value_t = 0.1)]
    box_width: f64,

    /// Numeric axis scaling.
    #[arg(long, value_name = "METHOD", value_enum, default_value_t = ScaleArg::Axis)]
    scale: ScaleArg,

    /// Canvas width in pixels.
    #[arg(long, default_value_t = 900, value_parser = clap::value_parser!(u32).range(1..))]
    width: u32,

    /// Canvas height in pixels.
    #[arg(long, default_value_t = 600, value_parser = clap::value_parser!(u32).range(1..))]
    height: u32,

    /// Also write the layout as JSON to this path.
    #[arg(long, value_name = "PATH")]
    dump_layout: Option<PathBuf>,

    /// Override the level order of a column: COL=l1,l2,... (repeatable).
    #[arg(long, value_name = "COL=L1,L2,...")]
    level_order: Vec<String>,

    /// Do not draw level boxes.
    #[arg(long)]
    no_boxes: bool,

    /// Do not draw level labels or the color key.
    #[arg(long)]
    no_labels: bool,
}

enum RunError {
    Usage(String),
    Data(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> RunError {
        RunError::Data(e)
    }
}

/// Runs the CLI on the given argv (the first element is the program name)
/// and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&config) {
        Ok(warnings) => {
            for warning in warnings {
                eprintln!("warning: {warning}");
            }
            0
        }
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(RunError::Data(e)) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(config: &CliConfig) -> Result<Vec<String>, RunError> {
    // argv-level validation precedes any file access
    if !(config.alpha > 0.0 && config.alpha <= 1.0) {
        return Err(RunError::Usage(format!(
            "--alpha {} outside (0, 1]",
            config.alpha
        )));
    }
    if !(0.0..1.0).contains(&config.gap_total) {
        return Err(RunError::Usage(format!(
            "--gap-total {} outside [0, 1)",
            config.gap_total
        )));
    }
    if !(config.box_width > 0.0 && config.box_width < 1.0) {
        return Err(RunError::Usage(format!(
            "--box-width {} outside (0, 1)",
            config.box_width
        )));
    }
    let spec = parse_spec(&config.vars).map_err(|e| RunError::Usage(e.to_string()))?;
    let spec = match &config.color_by {
        Some(column) => spec.with_group(column),
        None => spec,
    };
    let level_orders: Vec<(String, Vec<String>)> = config
        .level_order
        .iter()
        .map(|raw| {
            let (column, labels) = raw.split_once('=').ok_or_else(|| {
                RunError::Usage(format!(
                    "--level-order {raw:?} must look like COL=l1,l2,..."
                ))
            })?;
            Ok((
                column.to_string(),
                labels.split(',').map(str::to_string).collect(),
            ))
        })
        .collect::<Result<_, RunError>>()?;

    let file = fs::File::open(&config.input).map_err(Error::from)?;
    let mut frame = load_csv(std::io::BufReader::new(file), &LoadOptions::default())?;
    for (column, labels) in &level_orders {
        frame = frame.with_level_order(column, labels)?;
    }

    let resolved = spec.resolve(&frame)?;
    let params = LayoutParams {
        gap_total: config.gap_total,
        box_width: config.box_width,
        scale_method: config.scale.into(),
    };
    let layout = compute_layout(&frame, &resolved, &params)?;

    let groups = group_sizes(&frame, resolved.group_index, &resolved)?;
    let order = draw_order(&frame, &resolved, &groups, config.overplot.into());

    let style = RenderStyle {
        alpha: config.alpha,
        canvas_width: config.width,
        canvas_height: config.height,
        show_boxes: !config.no_boxes,
        show_labels: !config.no_labels,
        // room for the color key
        margins: if config.color_by.is_some() {
            [50.0, 140.0, 30.0, 60.0]
        } else {
            [50.0, 30.0, 30.0, 60.0]
        },
        ..RenderStyle::default()
    };
    let color_groups = config.color_by.is_some().then_some(&groups);
    let scene = build_scene(&layout, &frame, &order, &style, color_groups)?;
    let svg = emit_svg(&scene, &style);
    let dump = match &config.dump_layout {
        Some(_) => Some(dump_layout(&layout, &frame)?),
        None => None,
    };

    // all computation succeeded; now touch the filesystem
    write_atomic(&config.out, &svg).map_err(Error::from)?;
    if let (Some(path), Some(bytes)) = (&config.dump_layout, &dump) {
        write_atomic(path, bytes).map_err(Error::from)?;
    }
    Ok(layout.warnings)
}

/// Writes via a temporary sibling file plus rename.
fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_os_string();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, bytes)?;
    match fs::rename(&tmp, path) {
        Ok(()) => Ok(()),
        Err(e) => {
            let _ = fs::remove_file(&tmp);
            Err(e)
        }
    }
}
