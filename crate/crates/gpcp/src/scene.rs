//! Renderer-agnostic drawing list and SVG serialization.
//!
//! [`build_scene`] turns a layout into ordered drawing items in canvas
//! pixels (top-left origin): axis rules and level boxes first, then one
//! polyline per observation in paint order, then text last. [`emit_svg`]
//! writes the items verbatim; every coordinate is formatted with six
//! decimal places so the output is byte-deterministic.

use crate::dataset::Frame;
use crate::draworder::RowGroups;
use crate::error::{Error, Result};
use crate::layout::{AxisScale, Layout};

/// Okabe-Ito colorblind-safe cycle (black swapped for gray).
pub const DEFAULT_PALETTE: [&str; 8] = [
    "#0072B2", "#D55E00", "#009E73", "#CC79A7", "#E69F00", "#56B4E9", "#F0E442", "#999999",
];

/// Visual parameters of a render.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderStyle {
    /// Line opacity in (0, 1].
    pub alpha: f64,
    /// Stroke width of the polylines, in pixels.
    pub line_width: f64,
    /// Colors assigned to group ids in order.
    pub palette: Vec<String>,
    pub canvas_width: u32,
    pub canvas_height: u32,
    /// Margins in pixels: left, right, top, bottom.
    pub margins: [f64; 4],
    pub show_boxes: bool,
    /// Level labels inside boxes, plus the color key when grouped.
    pub show_labels: bool,
    /// Column names under each axis and min/max labels on numeric axes.
    pub show_axis_labels: bool,
    pub background: String,
    pub font_size: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            alpha: 0.6,
            line_width: 1.0,
            palette: DEFAULT_PALETTE.iter().map(|&c| c.to_string()).collect(),
            canvas_width: 900,
            canvas_height: 600,
            margins: [50.0, 30.0, 30.0, 60.0],
            show_boxes: true,
            show_labels: true,
            show_axis_labels: true,
            background: "#FFFFFF".to_string(),
            font_size: 12.0,
        }
    }
}

/// Horizontal anchoring of a text item.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextAnchor {
    Start,
    Middle,
    End,
}

/// One drawing command; a scene is painted in item order.
#[derive(Debug, Clone, PartialEq)]
pub enum SceneItem {
    Polyline {
        points: Vec<(f64, f64)>,
        color: String,
        opacity: f64,
        width: f64,
    },
    Rect {
        x: f64,
        y: f64,
        width: f64,
        height: f64,
        stroke: String,
        stroke_width: f64,
        fill: Option<String>,
    },
    Segment {
        x1: f64,
        y1: f64,
        x2: f64,
        y2: f64,
        color: String,
        width: f64,
    },
    Text {
        x: f64,
        y: f64,
        content: String,
        size: f64,
        anchor: TextAnchor,
        color: String,
    },
}

/// Ordered drawing list in canvas coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub items: Vec<SceneItem>,
}

struct CanvasTransform {
    x0: f64,
    y_bottom: f64,
    plot_width: f64,
    plot_height: f64,
}

impl CanvasTransform {
    fn new(style: &RenderStyle) -> CanvasTransform {
        let [left, right, top, bottom] = style.margins;
        CanvasTransform {
            x0: left,
            y_bottom: style.canvas_height as f64 - bottom,
            plot_width: style.canvas_width as f64 - left - right,
            plot_height: style.canvas_height as f64 - top - bottom,
        }
    }

    fn x(&self, x: f64) -> f64 {
        self.x0 + x * self.plot_width
    }

    /// Flips layout y (bottom origin) into canvas y (top origin).
    fn y(&self, y: f64) -> f64 {
        self.y_bottom - y * self.plot_height
    }
}

/// Builds the drawing list for a layout.
///
/// `order` is the painting permutation from [`crate::draworder::draw_order`].
/// When `groups` is given, each polyline takes the palette color of its
/// group and a color key is added; otherwise all lines use the first
/// palette color.
pub fn build_scene(
    layout: &Layout,
    frame: &Frame,
    order: &[usize],
    style: &RenderStyle,
    groups: Option<&RowGroups>,
) -> Result<Scene> {
    if !(style.alpha > 0.0 && style.alpha <= 1.0) {
        return Err(Error::InvalidParam {
            name: "alpha",
            value: style.alpha,
            expected: "(0, 1]",
        });
    }
    if let Some(groups) = groups {
        if style.palette.is_empty() || groups.n_groups() > style.palette.len() {
            return Err(Error::PaletteTooSmall {
                palette: style.palette.len(),
                groups: groups.n_groups(),
            });
        }
    }
    let transform = CanvasTransform::new(style);
    let mut items = Vec::new();

    // axis rules for numeric axes
    for axis in &layout.axes {
        if let AxisScale::Numeric { .. } = axis.scale {
            items.push(SceneItem::Segment {
                x1: transform.x(axis.x_center),
                y1: transform.y(0.0),
                x2: transform.x(axis.x_center),
                y2: transform.y(1.0),
                color: "#333333".to_string(),
                width: 1.0,
            });
        }
    }

    // level boxes beneath the lines
    if style.show_boxes {
        for axis in &layout.axes {
            for level_box in axis.boxes().into_iter().flatten() {
                items.push(SceneItem::Rect {
                    x: transform.x(axis.x_left),
                    y: transform.y(level_box.y1),
                    width: transform.x(axis.x_right) - transform.x(axis.x_left),
                    height: transform.y(level_box.y0) - transform.y(level_box.y1),
                    stroke: "#444444".to_string(),
                    stroke_width: 1.0,
                    fill: None,
                });
            }
        }
    }

    // one polyline per observation, paint order = item order
    for &row in order {
        let mut points = Vec::new();
        for (axis_idx, axis) in layout.axes.iter().enumerate() {
            match axis.scale {
                AxisScale::Numeric { .. } => {
                    points.push((
                        transform.x(axis.x_center),
                        transform.y(layout.points.y_in[row][axis_idx]),
                    ));
                }
                AxisScale::Categorical { .. } => {
                    points.push((
                        transform.x(axis.x_left),
                        transform.y(layout.points.y_in[row][axis_idx]),
                    ));
                    points.push((
                        transform.x(axis.x_right),
                        transform.y(layout.points.y_out[row][axis_idx]),
                    ));
                }
            }
        }
        let color = match groups {
            Some(groups) => style.palette[groups.ids[row]].clone(),
            None => style.palette.first().cloned().unwrap_or_else(|| "#0072B2".to_string()),
        };
        items.push(SceneItem::Polyline {
            points,
            color,
            opacity: style.alpha,
            width: style.line_width,
        });
    }

    // text goes last
    if style.show_labels {
        for axis in &layout.axes {
            for level_box in axis.boxes().into_iter().flatten() {
                let box_px = transform.y(level_box.y0) - transform.y(level_box.y1);
                if box_px < style.font_size {
                    continue; // box too short for the label
                }
                let mid = (level_box.y0 + level_box.y1) / 2.0;
                items.push(SceneItem::Text {
                    x: transform.x(axis.x_center),
                    y: transform.y(mid) + style.font_size * 0.35,
                    content: level_box.label.clone(),
                    size: style.font_size,
                    anchor: TextAnchor::Middle,
                    color: "#000000".to_string(),
                });
            }
        }
        if let Some(groups) = groups {
            items.extend(color_key(groups, style, &transform));
        }
    }
    if style.show_axis_labels {
        for axis in &layout.axes {
            let name = frame.column(axis.column).name().to_string();
            items.push(SceneItem::Text {
                x: transform.x(axis.x_center),
                y: transform.y(0.0) + 28.0,
                content: name,
                size: style.font_size,
                anchor: TextAnchor::Middle,
                color: "#000000".to_string(),
            });
            if let AxisScale::Numeric { min, max } = axis.scale {
                items.push(SceneItem::Text {
                    x: transform.x(axis.x_center),
                    y: transform.y(0.0) + 12.0,
                    content: min.to_string(),
                    size: style.font_size * 0.8,
                    anchor: TextAnchor::Middle,
                    color: "#555555".to_string(),
                });
                items.push(SceneItem::Text {
                    x: transform.x(axis.x_center),
                    y: transform.y(1.0) - 6.0,
                    content: max.to_string(),
                    size: style.font_size * 0.8,
                    anchor: TextAnchor::Middle,
                    color: "#555555".to_string(),
                });
            }
        }
    }

    Ok(Scene { items })
}

/// Simple color key: one swatch and label per group, top-down in the right
/// margin.
fn color_key(groups: &RowGroups, style: &RenderStyle, transform: &CanvasTransform) -> Vec<SceneItem> {
    let mut items = Vec::new();
    let x = transform.x(1.0) + 14.0;
    let row_height = style.font_size + 6.0;
    for (id, label) in groups.labels.iter().enumerate() {
        let y = transform.y(1.0) + id as f64 * row_height;
        items.push(SceneItem::Rect {
            x,
            y,
            width: 10.0,
            height: 10.0,
            stroke: style.palette[id].clone(),
            stroke_width: 1.0,
            fill: Some(style.palette[id].clone()),
        });
        items.push(SceneItem::Text {
            x: x + 14.0,
            y: y + 9.0,
            content: label.clone(),
            size: style.font_size * 0.85,
            anchor: TextAnchor::Start,
            color: "#000000".to_string(),
        });
    }
    items
}

fn fmt(value: f64) -> String {
    format!("{value:.6}")
}

fn escape_xml(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            other => out.push(other),
        }
    }
    out
}

/// Serializes a scene to an SVG 1.1 document. Element order equals item
/// order; the only extra elements are the root and the background rect.
/// The output is a pure function of its inputs, byte for byte.
pub fn emit_svg(scene: &Scene, style: &RenderStyle) -> Vec<u8> {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
        w = style.canvas_width,
        h = style.canvas_height,
    ));
    out.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
        style.canvas_width,
        style.canvas_height,
        escape_xml(&style.background),
    ));
    for item in &scene.items {
        match item {
            SceneItem::Polyline {
                points,
                color,
                opacity,
                width,
            } => {
                let coords: Vec<String> = points
                    .iter()
                    .map(|&(x, y)| format!("{},{}", fmt(x), fmt(y)))
                    .collect();
                out.push_str(&format!(
                    "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-opacity=\"{}\" stroke-width=\"{}\"/>\n",
                    coords.join(" "),
                    escape_xml(color),
                    fmt(*opacity),
                    fmt(*width),
                ));
            }
            SceneItem::Rect {
                x,
                y,
                width,
                height,
                stroke,
                stroke_width,
                fill,
            } => {
                let fill = match fill {
                    Some(color) => escape_xml(color),
                    None => "none".to_string(),
                };
                out.push_str(&format!(
                    "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
                    fmt(*x),
                    fmt(*y),
                    fmt(*width),
                    fmt(*height),
                    fill,
                    escape_xml(stroke),
                    fmt(*stroke_width),
                ));
            }
            SceneItem::Segment {
                x1,
                y1,
                x2,
                y2,
                color,
                width,
            } => {
                out.push_str(&format!(
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
                    fmt(*x1),
                    fmt(*y1),
                    fmt(*x2),
                    fmt(*y2),
                    escape_xml(color),
                    fmt(*width),
                ));
            }
            SceneItem::Text {
                x,
                y,
                content,
                size,
                anchor,
                color,
            } => {
                let anchor = match anchor {
                    TextAnchor::Start => "start",
                    TextAnchor::Middle => "middle",
                    TextAnchor::End => "end",
                };
                out.push_str(&format!(
                    "<text x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"sans-serif\" text-anchor=\"{}\" fill=\"{}\">{}</text>\n",
                    fmt(*x),
                    fmt(*y),
                    fmt(*size),
                    anchor,
                    escape_xml(color),
                    escape_xml(content),
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{load_csv, LoadOptions};
    use crate::draworder::{draw_order, group_sizes, DrawPolicy};
    use crate::layout::{compute_layout, LayoutParams};
    use crate::selection::parse_spec;

    fn scene_for(csv: &str, vars: &str, style: &RenderStyle) -> Scene {
        let frame = load_csv(csv.as_bytes(), &LoadOptions::default()).unwrap();
        let spec = parse_spec(vars).unwrap().resolve(&frame).unwrap();
        let layout = compute_layout(&frame, &spec, &LayoutParams::default()).unwrap();
        let order: Vec<usize> = (0..frame.n_rows()).collect();
        build_scene(&layout, &frame, &order, style, None).unwrap()
    }

    fn polylines(scene: &Scene) -> Vec<&SceneItem> {
        scene
            .items
            .iter()
            .filter(|i| matches!(i, SceneItem::Polyline { .. }))
            .collect()
    }

    #[test]
    fn vertex_count_mixes_axis_kinds() {
        // N,C,N with one row: 1 + 2 + 1 vertices
        let scene = scene_for("a,b,c\n1,x,2", "a,b,c", &RenderStyle::default());
        let lines = polylines(&scene);
        assert_eq!(lines.len(), 1);
        match lines[0] {
            SceneItem::Polyline { points, .. } => assert_eq!(points.len(), 4),
            _ => unreachable!(),
        }
    }

    #[test]
    fn hiding_boxes_removes_rects() {
        let style = RenderStyle {
            show_boxes: false,
            show_labels: false,
            ..RenderStyle::default()
        };
        let scene = scene_for("a,b\n1,x\n2,y", "a,b", &style);
        assert!(scene
            .items
            .iter()
            .all(|i| !matches!(i, SceneItem::Rect { .. })));
    }

    #[test]
    fn paint_policies_reverse_polyline_order() {
        let frame = load_csv("g,x\na,1\na,2\nb,3".as_bytes(), &LoadOptions::default()).unwrap();
        let spec = parse_spec("x").unwrap().with_group("g").resolve(&frame).unwrap();
        let layout = compute_layout(&frame, &spec, &LayoutParams::default()).unwrap();
        let groups = group_sizes(&frame, spec.group_index, &spec).unwrap();
        let style = RenderStyle::default();
        let small = draw_order(&frame, &spec, &groups, DrawPolicy::SmallOnTop);
        let large = draw_order(&frame, &spec, &groups, DrawPolicy::LargeOnTop);
        let scene_small = build_scene(&layout, &frame, &small, &style, Some(&groups)).unwrap();
        let scene_large = build_scene(&layout, &frame, &large, &style, Some(&groups)).unwrap();
        let lines_small: Vec<_> = polylines(&scene_small).into_iter().cloned().collect();
        let mut lines_large: Vec<_> = polylines(&scene_large).into_iter().cloned().collect();
        lines_large.reverse();
        // same items, group paint sequence reversed (within-group order kept)
        for line in &lines_small {
            assert!(lines_large.contains(line));
        }
        assert_eq!(lines_small.len(), lines_large.len());
    }

    #[test]
    fn palette_shorter_than_groups_fails() {
        let frame = load_csv("g,x\na,1\nb,2\nc,3".as_bytes(), &LoadOptions::default()).unwrap();
        let spec = parse_spec("x").unwrap().with_group("g").resolve(&frame).unwrap();
        let layout = compute_layout(&frame, &spec, &LayoutParams::default()).unwrap();
        let groups = group_sizes(&frame, spec.group_index, &spec).unwrap();
        let style = RenderStyle {
            palette: vec!["#000000".to_string(), "#111111".to_string()],
            ..RenderStyle::default()
        };
        let order: Vec<usize> = (0..3).collect();
        let err = build_scene(&layout, &frame, &order, &style, Some(&groups)).unwrap_err();
        assert!(matches!(
            err,
            Error::PaletteTooSmall {
                palette: 2,
                groups: 3
            }
        ));
    }

    #[test]
    fn empty_scene_is_background_only() {
        let scene = Scene { items: vec![] };
        let svg = String::from_utf8(emit_svg(&scene, &RenderStyle::default())).unwrap();
        assert!(svg.starts_with("<?xml"));
        assert_eq!(svg.matches("<rect").count(), 1);
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn emit_is_byte_deterministic() {
        let style = RenderStyle::default();
        let scene = scene_for("a,b\n1,x\n2,y\n3,x", "a,b,a", &style);
        assert_eq!(emit_svg(&scene, &style), emit_svg(&scene, &style));
    }

    #[test]
    fn opacity_passes_through() {
        let scene = Scene {
            items: vec![SceneItem::Polyline {
                points: vec![(0.0, 0.0), (1.0, 1.0)],
                color: "#123456".to_string(),
                opacity: 0.3,
                width: 1.0,
            }],
        };
        let svg = String::from_utf8(emit_svg(&scene, &RenderStyle::default())).unwrap();
        assert!(svg.contains("stroke-opacity=\"0.300000\""));
        assert!(svg.contains("stroke=\"#123456\""));
    }

    #[test]
    fn y_axis_flips_to_screen_coordinates() {
        let style = RenderStyle::default();
        let scene = scene_for("a\n0\n1", "a", &style);
        let lines = polylines(&scene);
        let point_of = |item: &SceneItem| match item {
            SceneItem::Polyline { points, .. } => points[0],
            _ => unreachable!(),
        };
        let low = point_of(lines[0]); // value 0 -> bottom of plot
        let high = point_of(lines[1]); // value 1 -> top
        assert!(low.1 > high.1, "layout bottom must map to larger canvas y");
        assert_eq!(low.1, 600.0 - 60.0);
        assert_eq!(high.1, 30.0);
    }

    #[test]
    fn text_is_escaped() {
        let scene = Scene {
            items: vec![SceneItem::Text {
                x: 0.0,
                y: 0.0,
                content: "a<b&c>\"d\"".to_string(),
                size: 12.0,
                anchor: TextAnchor::Start,
                color: "#000000".to_string(),
            }],
        };
        let svg = String::from_utf8(emit_svg(&scene, &RenderStyle::default())).unwrap();
        assert!(svg.contains("a&lt;b&amp;c&gt;&quot;d&quot;"));
    }

    #[test]
    fn short_boxes_drop_their_labels() {
        // 60 levels of one row each: every box is shorter than the font
        let mut rows = String::from("c\n");
        for i in 0..60 {
            rows.push_str(&format!("level{i}\n"));
        }
        let scene = scene_for(&rows, "c", &RenderStyle::default());
        let texts = scene
            .items
            .iter()
            .filter(|i| matches!(i, SceneItem::Text { .. }))
            .count();
        // only the axis-name label survives
        assert_eq!(texts, 1);
    }

    #[test]
    fn alpha_out_of_range_fails() {
        let style = RenderStyle {
            alpha: 0.0,
            ..RenderStyle::default()
        };
        let frame = load_csv("a\n1".as_bytes(), &LoadOptions::default()).unwrap();
        let spec = parse_spec("a").unwrap().resolve(&frame).unwrap();
        let layout = compute_layout(&frame, &spec, &LayoutParams::default()).unwrap();
        assert!(matches!(
            build_scene(&layout, &frame, &[0], &style, None),
            Err(Error::InvalidParam { name: "alpha", .. })
        ));
    }
}
