//! Parallel coordinate plots for mixed numeric and categorical data.
//!
//! Classic parallel coordinate plots collapse every observation of a
//! categorical level onto a single point, which turns the plot into an
//! uninformative fan of level-to-level lines. This crate instead spreads
//! the tied observations of each level over a rectangle of evenly spaced
//! slots, choosing the slot order so that individual observations stay
//! trackable across the whole plot:
//!
//! * within a run of adjacent categorical axes (a *factor block*), each
//!   axis orders its levels' rows by the arrangement of the axes to its
//!   right, falling back to a flanking numeric axis and then the row index;
//! * a *breakpoint* splits a block into independently arranged sub-blocks
//!   and reconciles the two orderings inside the boundary axis's boxes;
//! * the painting order of the lines is controlled separately (small
//!   groups on top, large groups on top, hierarchical, or data order).
//!
//! The pipeline is a chain of pure functions:
//!
//! ```
//! use gpcp::{
//!     build_scene, compute_layout, draw_order, emit_svg, group_sizes, load_csv,
//!     parse_spec, DrawPolicy, LayoutParams, LoadOptions, RenderStyle,
//! };
//!
//! let csv = "height,species\n1.7,cat\n2.1,dog\n1.1,cat\n";
//! let frame = load_csv(csv.as_bytes(), &LoadOptions::default()).unwrap();
//! let spec = parse_spec("height,species").unwrap().resolve(&frame).unwrap();
//! let layout = compute_layout(&frame, &spec, &LayoutParams::default()).unwrap();
//! let groups = group_sizes(&frame, None, &spec).unwrap();
//! let order = draw_order(&frame, &spec, &groups, DrawPolicy::Hierarchical);
//! let style = RenderStyle::default();
//! let scene = build_scene(&layout, &frame, &order, &style, None).unwrap();
//! let svg = emit_svg(&scene, &style);
//! assert!(svg.starts_with(b"<?xml"));
//! ```
//!
//! Every stage is deterministic: the same inputs produce bit-identical
//! layouts, scenes, SVG bytes, and JSON dumps. See the `examples/`
//! directory for one runnable example per capability, and the `gpcp`
//! binary for the command-line interface.

pub mod cli;
pub mod dataset;
pub mod draworder;
pub mod dump;
pub mod error;
pub mod layout;
pub mod scene;
pub mod selection;

pub use dataset::{infer_kind, load_csv, Column, ColumnKind, Frame, LoadOptions};
pub use draworder::{draw_order, group_sizes, DrawPolicy, RowGroups};
pub use dump::dump_layout;
pub use error::{Error, Result};
pub use layout::{
    assign_positions, compute_layout, hierarchical_order, identify_factor_blocks, level_boxes,
    reconcile_breakpoint, scale_numeric, AxisGeometry, AxisScale, FactorBlock, Layout,
    LayoutParams, LevelBox, PointMatrix, ScaleMethod, SubBlock,
};
pub use scene::{build_scene, emit_svg, RenderStyle, Scene, SceneItem, TextAnchor};
pub use selection::{parse_spec, AxisEntry, AxisSpec, ResolvedSpec};
