//! Stable JSON serialization of a [`Layout`].
//!
//! The dump is the machine-readable companion to the SVG: it carries the
//! axes (kind, x positions, numeric domain or level boxes), the factor
//! blocks with their sub-blocks, and the full point matrix, which together
//! reconstruct every polyline vertex. Numbers are written as plain decimals
//! in the shortest form that round-trips `f64` exactly, so no precision is
//! lost. Field names are part of the format and will not change.
//!
//! ```json
//! {
//!   "n_rows": 2,
//!   "axes": [
//!     {"column": "a", "kind": "numeric", "x_center": 0.0, "x_left": 0.0,
//!      "x_right": 0.0, "break_after": false, "min": 1.0, "max": 2.0},
//!     {"column": "b", "kind": "categorical", "x_center": 1.0, "x_left": 0.95,
//!      "x_right": 1.05, "break_after": false,
//!      "boxes": [{"axis": 1, "level": 0, "label": "x", "y0": 0.0, "y1": 0.45,
//!                 "count": 1}, ...]}
//!   ],
//!   "blocks": [{"start": 1, "end": 1, "sub_blocks": [{"start": 1, "end": 1}]}],
//!   "points": {"y_in": [[...], ...], "y_out": [[...], ...]},
//!   "warnings": []
//! }
//! ```

use serde::Serialize;

use crate::dataset::Frame;
use crate::error::Result;
use crate::layout::{AxisScale, Layout};

#[derive(Serialize)]
struct LayoutDump<'a> {
    n_rows: usize,
    axes: Vec<AxisDump<'a>>,
    blocks: Vec<BlockDump>,
    points: PointsDump<'a>,
    warnings: &'a [String],
}

#[derive(Serialize)]
struct AxisDump<'a> {
    column: &'a str,
    kind: &'static str,
    x_center: f64,
    x_left: f64,
    x_right: f64,
    break_after: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    boxes: Option<Vec<BoxDump<'a>>>,
}

#[derive(Serialize)]
struct BoxDump<'a> {
    axis: usize,
    level: usize,
    label: &'a str,
    y0: f64,
    y1: f64,
    count: usize,
}

#[derive(Serialize)]
struct BlockDump {
    start: usize,
    end: usize,
    sub_blocks: Vec<SubBlockDump>,
}

#[derive(Serialize)]
struct SubBlockDump {
    start: usize,
    end: usize,
}

#[derive(Serialize)]
struct PointsDump<'a> {
    y_in: &'a [Vec<f64>],
    y_out: &'a [Vec<f64>],
}

/// Renders the layout as pretty-printed JSON with a trailing newline.
/// Output is byte-deterministic for identical layouts.
pub fn dump_layout(layout: &Layout, frame: &Frame) -> Result<Vec<u8>> {
    let axes = layout
        .axes
        .iter()
        .map(|axis| {
            let (kind, min, max, boxes) = match &axis.scale {
                AxisScale::Numeric { min, max } => ("numeric", Some(*min), Some(*max), None),
                AxisScale::Categorical { boxes } => (
                    "categorical",
                    None,
                    None,
                    Some(
                        boxes
                            .iter()
                            .map(|b| BoxDump {
                                axis: b.axis,
                                level: b.level,
                                label: &b.label,
                                y0: b.y0,
                                y1: b.y1,
                                count: b.count,
                            })
                            .collect(),
                    ),
                ),
            };
            AxisDump {
                column: frame.column(axis.column).name(),
                kind,
                x_center: axis.x_center,
                x_left: axis.x_left,
                x_right: axis.x_right,
                break_after: axis.break_after,
                min,
                max,
                boxes,
            }
        })
        .collect();
    let blocks = layout
        .blocks
        .iter()
        .map(|block| BlockDump {
            start: block.start,
            end: block.end,
            sub_blocks: block
                .sub_blocks
                .iter()
                .map(|sub| SubBlockDump {
                    start: sub.start,
                    end: sub.end,
                })
                .collect(),
        })
        .collect();
    let dump = LayoutDump {
        n_rows: layout.n_rows,
        axes,
        blocks,
        points: PointsDump {
            y_in: &layout.points.y_in,
            y_out: &layout.points.y_out,
        },
        warnings: &layout.warnings,
    };
    let mut bytes = serde_json::to_vec_pretty(&dump)
        .map_err(|e| crate::error::Error::Internal(format!("layout dump: {e}")))?;
    bytes.push(b'\n');
    Ok(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{load_csv, LoadOptions};
    use crate::layout::{compute_layout, LayoutParams};
    use crate::selection::parse_spec;

    #[test]
    fn dump_round_trips_exact_floats() {
        let frame = load_csv("a,b\n0.1,x\n0.3,y\n0.7,x".as_bytes(), &LoadOptions::default())
            .unwrap();
        let spec = parse_spec("a,b").unwrap().resolve(&frame).unwrap();
        let layout = compute_layout(&frame, &spec, &LayoutParams::default()).unwrap();
        let bytes = dump_layout(&layout, &frame).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(value["n_rows"], 3);
        assert_eq!(value["axes"][0]["kind"], "numeric");
        assert_eq!(value["axes"][1]["kind"], "categorical");
        // every point survives the decimal round trip bit for bit
        for (row, y_row) in layout.points.y_in.iter().enumerate() {
            for (axis, &y) in y_row.iter().enumerate() {
                assert_eq!(value["points"]["y_in"][row][axis].as_f64().unwrap(), y);
            }
        }
        assert_eq!(
            value["axes"][1]["boxes"][0]["y0"].as_f64().unwrap(),
            layout.axes[1].boxes().unwrap()[0].y0
        );
    }

    #[test]
    fn dump_is_byte_deterministic() {
        let frame = load_csv("a,b\n1,x\n2,y".as_bytes(), &LoadOptions::default()).unwrap();
        let spec = parse_spec("b,a").unwrap().resolve(&frame).unwrap();
        let layout = compute_layout(&frame, &spec, &LayoutParams::default()).unwrap();
        assert_eq!(
            dump_layout(&layout, &frame).unwrap(),
            dump_layout(&layout, &frame).unwrap()
        );
    }
}
