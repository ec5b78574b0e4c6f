//! Layout geometry for generalized parallel coordinate plots.
//!
//! The unit square is the layout space: y = 0 is the bottom, axes sit at
//! evenly spaced x positions. Numeric axes carry scaled values; categorical
//! axes stack one level box per level, bottom to top in level order, with
//! the box heights proportional to level frequencies and the gaps between
//! boxes sharing a fixed total ([`LayoutParams::gap_total`]).
//!
//! Observations tied within a level are spread over evenly spaced slots.
//! The slot order is chosen to minimize crossings: within a factor block
//! (a maximal run of adjacent categorical axes) each axis orders its levels'
//! rows by the arrangement of its right-hand categorical neighbor, which is
//! equivalent to a right-to-left hierarchical sort; remaining ties fall back
//! to the block's left numeric neighbor, then its right numeric neighbor,
//! then the original row index. A breakpoint splits a block into sub-blocks
//! that are arranged independently; the shared boundary axis keeps separate
//! entry and exit coordinates that are reconciled inside its level boxes.

use crate::dataset::{ColumnKind, Frame};
use crate::error::{Error, Result};
use crate::selection::ResolvedSpec;

/// Scaling applied to numeric axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScaleMethod {
    /// Each axis maps its own min to 0 and max to 1; a constant column maps
    /// to 0.5 everywhere.
    #[default]
    PerAxisMinMax,
    /// One min/max over all numeric axes in the spec.
    GlobalMinMax,
    /// Values must already lie in [0, 1].
    Raw,
}

/// Tunable layout parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayoutParams {
    /// Fraction of the vertical space reserved for the gaps between level
    /// boxes on a categorical axis, split equally among the k-1 gaps.
    pub gap_total: f64,
    /// Fraction of the inter-axis spacing occupied by a categorical box.
    pub box_width: f64,
    pub scale_method: ScaleMethod,
}

impl Default for LayoutParams {
    fn default() -> Self {
        LayoutParams {
            gap_total: 0.10,
            box_width: 0.1,
            scale_method: ScaleMethod::PerAxisMinMax,
        }
    }
}

/// The rectangle enclosing one level's observations on a categorical axis.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelBox {
    pub axis: usize,
    pub level: usize,
    pub label: String,
    pub y0: f64,
    pub y1: f64,
    pub count: usize,
}

/// Inclusive axis range of one sub-block; adjacent sub-blocks share their
/// boundary axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubBlock {
    pub start: usize,
    pub end: usize,
}

/// A maximal run of adjacent categorical axes, partitioned at breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBlock {
    pub start: usize,
    pub end: usize,
    pub sub_blocks: Vec<SubBlock>,
}

/// Per-observation entry/exit y coordinate at every axis, indexed
/// `[row][axis]`. Entry and exit differ only at breakpoint axes.
#[derive(Debug, Clone, PartialEq)]
pub struct PointMatrix {
    pub y_in: Vec<Vec<f64>>,
    pub y_out: Vec<Vec<f64>>,
}

/// Vertical content of one axis.
#[derive(Debug, Clone, PartialEq)]
pub enum AxisScale {
    /// Domain used to scale the values (what min/max labels should show).
    Numeric { min: f64, max: f64 },
    Categorical { boxes: Vec<LevelBox> },
}

/// Placement of one axis.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisGeometry {
    /// Column index into the source frame.
    pub column: usize,
    pub x_center: f64,
    /// Equal to `x_center` for numeric axes; the box edges for categorical.
    pub x_left: f64,
    pub x_right: f64,
    pub break_after: bool,
    pub scale: AxisScale,
}

impl AxisGeometry {
    pub fn kind(&self) -> ColumnKind {
        match self.scale {
            AxisScale::Numeric { .. } => ColumnKind::Numeric,
            AxisScale::Categorical { .. } => ColumnKind::Categorical,
        }
    }

    pub fn boxes(&self) -> Option<&[LevelBox]> {
        match &self.scale {
            AxisScale::Categorical { boxes } => Some(boxes),
            AxisScale::Numeric { .. } => None,
        }
    }
}

/// Complete geometry of one plot.
#[derive(Debug, Clone, PartialEq)]
pub struct Layout {
    pub axes: Vec<AxisGeometry>,
    pub points: PointMatrix,
    pub blocks: Vec<FactorBlock>,
    /// Flagged oddities, e.g. declared levels with no observations.
    pub warnings: Vec<String>,
    pub n_rows: usize,
}

/// Scales numeric values into [0, 1].
///
/// `global_bounds` supplies the shared domain for [`ScaleMethod::GlobalMinMax`]
/// and is ignored otherwise. `column` only names the axis in errors.
pub fn scale_numeric(
    values: &[f64],
    method: ScaleMethod,
    global_bounds: Option<(f64, f64)>,
    column: &str,
) -> Result<Vec<f64>> {
    match method {
        ScaleMethod::Raw => {
            for (row, &v) in values.iter().enumerate() {
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::RawOutOfRange {
                        column: column.to_string(),
                        row: row + 1,
                        value: v,
                    });
                }
            }
            Ok(values.to_vec())
        }
        ScaleMethod::PerAxisMinMax => {
            let domain = min_max(values);
            Ok(scale_to_domain(values, domain))
        }
        ScaleMethod::GlobalMinMax => {
            let domain = global_bounds.ok_or_else(|| {
                Error::Internal("global min-max scaling without global bounds".to_string())
            })?;
            Ok(scale_to_domain(values, domain))
        }
    }
}

fn min_max(values: &[f64]) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in values {
        min = min.min(v);
        max = max.max(v);
    }
    (min, max)
}

fn scale_to_domain(values: &[f64], (min, max): (f64, f64)) -> Vec<f64> {
    if min >= max {
        return vec![0.5; values.len()];
    }
    let span = max - min;
    values.iter().map(|&v| (v - min) / span).collect()
}

/// Finds the maximal runs of adjacent categorical axes and partitions each
/// run into sub-blocks at the break-after axes. Break flags outside a run's
/// interior are ignored (resolution rejects them upstream).
pub fn identify_factor_blocks(kinds: &[ColumnKind], breaks: &[bool]) -> Vec<FactorBlock> {
    let mut blocks = Vec::new();
    let mut axis = 0;
    while axis < kinds.len() {
        if kinds[axis] != ColumnKind::Categorical {
            axis += 1;
            continue;
        }
        let start = axis;
        while axis + 1 < kinds.len() && kinds[axis + 1] == ColumnKind::Categorical {
            axis += 1;
        }
        let end = axis;
        let mut sub_blocks = Vec::new();
        let mut sub_start = start;
        for boundary in start..=end {
            if breaks[boundary] && boundary > start && boundary < end {
                sub_blocks.push(SubBlock {
                    start: sub_start,
                    end: boundary,
                });
                sub_start = boundary;
            }
        }
        sub_blocks.push(SubBlock {
            start: sub_start,
            end,
        });
        blocks.push(FactorBlock {
            start,
            end,
            sub_blocks,
        });
        axis += 1;
    }
    blocks
}

/// Computes the stacked level boxes of one categorical axis as (y0, y1)
/// pairs in level order, bottom to top.
///
/// With k > 1 levels the k-1 gaps are equal and sum to `gap_total`; box
/// heights are proportional to counts and sum to 1 - `gap_total`. A single
/// level spans the full [0, 1]. Zero counts yield zero-height boxes.
pub fn level_boxes(counts: &[usize], gap_total: f64, n_rows: usize) -> Result<Vec<(f64, f64)>> {
    let total: usize = counts.iter().sum();
    if n_rows == 0 || total != n_rows {
        return Err(Error::Internal(format!(
            "level counts sum to {total}, expected {n_rows}"
        )));
    }
    let k = counts.len();
    if k == 1 {
        return Ok(vec![(0.0, 1.0)]);
    }
    let gap = gap_total / (k - 1) as f64;
    let height_per_row = (1.0 - gap_total) / n_rows as f64;
    let mut boxes = Vec::with_capacity(k);
    let mut y = 0.0;
    for &count in counts {
        let y1 = y + count as f64 * height_per_row;
        boxes.push((y, y1));
        y = y1 + gap;
    }
    Ok(boxes)
}

/// Spreads ordered rows uniformly over a box: rank i (1-based) of n sits at
/// `y0 + (i - 0.5)/n * (y1 - y0)`, ranks increasing bottom to top. Returns
/// one y per input row, in input order.
pub fn assign_positions(ordered_rows: &[usize], y0: f64, y1: f64) -> Vec<f64> {
    let n = ordered_rows.len() as f64;
    (0..ordered_rows.len())
        .map(|i| y0 + (i as f64 + 0.5) / n * (y1 - y0))
        .collect()
}

/// Within-level row orderings for one sub-block of categorical axes,
/// computed by right-to-left rank propagation.
///
/// Returns, for each axis of the sub-block in order, one ordered row list
/// per level (bottom slot first). The rightmost axis orders each level by
/// the tiebreak value (left numeric neighbor if given, else the right one)
/// and then by row index; every axis to its left orders each level by the
/// row arrangement of the axis to its right. The result equals a
/// lexicographic sort over the level codes of all right-hand axes in the
/// sub-block followed by the tiebreak and the row index.
pub fn hierarchical_order(
    frame: &Frame,
    axis_columns: &[usize],
    left_tiebreak: Option<usize>,
    right_tiebreak: Option<usize>,
) -> Result<Vec<Vec<Vec<usize>>>> {
    let n = frame.n_rows();
    let tiebreak: Option<&[f64]> = match left_tiebreak.or(right_tiebreak) {
        Some(col) => Some(frame.column(col).numeric_values().ok_or_else(|| {
            Error::Internal(format!(
                "tiebreak column {:?} is not numeric",
                frame.column(col).name()
            ))
        })?),
        None => None,
    };

    let mut orders: Vec<Vec<Vec<usize>>> = vec![Vec::new(); axis_columns.len()];
    let mut rank_right: Vec<usize> = Vec::new();
    for idx in (0..axis_columns.len()).rev() {
        let column = frame.column(axis_columns[idx]);
        let codes = column.level_codes().ok_or_else(|| {
            Error::Internal(format!("axis column {:?} is not categorical", column.name()))
        })?;
        let n_levels = column.levels().map_or(0, <[String]>::len);
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n_levels];
        for row in 0..n {
            buckets[codes[row]].push(row);
        }
        if idx + 1 == axis_columns.len() {
            if let Some(tb) = tiebreak {
                for bucket in &mut buckets {
                    bucket.sort_by(|&a, &b| tb[a].total_cmp(&tb[b]).then(a.cmp(&b)));
                }
            }
        } else {
            for bucket in &mut buckets {
                bucket.sort_by_key(|&row| rank_right[row]);
            }
        }
        let mut rank = vec![0usize; n];
        let mut slot = 0;
        for bucket in &buckets {
            for &row in bucket {
                rank[row] = slot;
                slot += 1;
            }
        }
        rank_right = rank;
        orders[idx] = buckets;
    }
    Ok(orders)
}

/// Places the two independent orderings of a breakpoint axis into the same
/// level boxes: entry positions from `left_order`, exit positions from
/// `right_order`. Per level both orders must cover the same rows, so the
/// slot multisets coincide and all reordering stays inside the box.
pub fn reconcile_breakpoint(
    left_order: &[Vec<usize>],
    right_order: &[Vec<usize>],
    boxes: &[LevelBox],
    n_rows: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if left_order.len() != boxes.len() || right_order.len() != boxes.len() {
        return Err(Error::Internal(format!(
            "breakpoint reconciliation: {} left / {} right orders for {} boxes",
            left_order.len(),
            right_order.len(),
            boxes.len()
        )));
    }
    let mut y_in = vec![f64::NAN; n_rows];
    let mut y_out = vec![f64::NAN; n_rows];
    for (level, level_box) in boxes.iter().enumerate() {
        let left = &left_order[level];
        let right = &right_order[level];
        let mut left_sorted: Vec<usize> = left.clone();
        let mut right_sorted: Vec<usize> = right.clone();
        left_sorted.sort_unstable();
        right_sorted.sort_unstable();
        if left_sorted != right_sorted {
            return Err(Error::Internal(format!(
                "breakpoint reconciliation: level {level} rows differ between sides"
            )));
        }
        for (row, y) in left.iter().zip(assign_positions(left, level_box.y0, level_box.y1)) {
            y_in[*row] = y;
        }
        for (row, y) in right.iter().zip(assign_positions(right, level_box.y0, level_box.y1)) {
            y_out[*row] = y;
        }
    }
    Ok((y_in, y_out))
}

/// Per-axis within-level orderings used by [`compute_layout`]: one list of
/// rows per level for the entry side and for the exit side. The two sides
/// differ only at breakpoint axes.
struct AxisOrders {
    entry: Vec<Vec<usize>>,
    exit: Vec<Vec<usize>>,
}

/// Computes the complete plot geometry for a resolved spec.
pub fn compute_layout(frame: &Frame, spec: &ResolvedSpec, params: &LayoutParams) -> Result<Layout> {
    if !(0.0..1.0).contains(&params.gap_total) {
        return Err(Error::InvalidParam {
            name: "gap_total",
            value: params.gap_total,
            expected: "[0, 1)",
        });
    }
    if !(params.box_width > 0.0 && params.box_width < 1.0) {
        return Err(Error::InvalidParam {
            name: "box_width",
            value: params.box_width,
            expected: "(0, 1)",
        });
    }
    let n = frame.n_rows();
    if n == 0 {
        return Err(Error::EmptyFrame);
    }
    let m = spec.axis_columns.len();
    if m == 0 {
        return Err(Error::SpecSyntax {
            msg: "empty axis expression".to_string(),
        });
    }

    let kinds = spec.axis_kinds(frame);
    let mut warnings = Vec::new();

    // Shared domain for global scaling: min/max over every numeric axis.
    let global_bounds = if params.scale_method == ScaleMethod::GlobalMinMax {
        let mut domain: Option<(f64, f64)> = None;
        for (&col, kind) in spec.axis_columns.iter().zip(&kinds) {
            if *kind != ColumnKind::Numeric {
                continue;
            }
            let (lo, hi) = min_max(frame.column(col).numeric_values().unwrap());
            domain = Some(match domain {
                Some((a, b)) => (a.min(lo), b.max(hi)),
                None => (lo, hi),
            });
        }
        domain
    } else {
        None
    };

    let spacing = if m > 1 { 1.0 / (m - 1) as f64 } else { 1.0 };
    let half_box = params.box_width * spacing / 2.0;

    let mut axes = Vec::with_capacity(m);
    // Scaled values per numeric axis, indexed by axis.
    let mut scaled: Vec<Option<Vec<f64>>> = vec![None; m];
    for axis in 0..m {
        let column = frame.column(spec.axis_columns[axis]);
        let x_center = if m > 1 {
            axis as f64 / (m - 1) as f64
        } else {
            0.5
        };
        let (x_left, x_right, scale) = match column.kind() {
            ColumnKind::Numeric => {
                let values = column.numeric_values().unwrap();
                scaled[axis] = Some(scale_numeric(
                    values,
                    params.scale_method,
                    global_bounds,
                    column.name(),
                )?);
                let (min, max) = match params.scale_method {
                    ScaleMethod::PerAxisMinMax => min_max(values),
                    ScaleMethod::GlobalMinMax => global_bounds.unwrap(),
                    ScaleMethod::Raw => (0.0, 1.0),
                };
                (x_center, x_center, AxisScale::Numeric { min, max })
            }
            ColumnKind::Categorical => {
                let levels = column.levels().unwrap();
                let codes = column.level_codes().unwrap();
                let mut counts = vec![0usize; levels.len()];
                for &code in codes {
                    counts[code] += 1;
                }
                let spans = level_boxes(&counts, params.gap_total, n)?;
                let boxes: Vec<LevelBox> = spans
                    .iter()
                    .enumerate()
                    .map(|(level, &(y0, y1))| LevelBox {
                        axis,
                        level,
                        label: levels[level].clone(),
                        y0,
                        y1,
                        count: counts[level],
                    })
                    .collect();
                for level_box in &boxes {
                    if level_box.count == 0 {
                        warnings.push(format!(
                            "axis {} ({:?}): level {:?} has no observations (zero-height box)",
                            axis + 1,
                            column.name(),
                            level_box.label
                        ));
                    }
                }
                (
                    x_center - half_box,
                    x_center + half_box,
                    AxisScale::Categorical { boxes },
                )
            }
        };
        axes.push(AxisGeometry {
            column: spec.axis_columns[axis],
            x_center,
            x_left,
            x_right,
            break_after: spec.break_after[axis],
            scale,
        });
    }

    let blocks = identify_factor_blocks(&kinds, &spec.break_after);
    let orders = order_blocks(frame, spec, &kinds, &blocks)?;

    let mut y_in = vec![vec![0.0f64; m]; n];
    let mut y_out = vec![vec![0.0f64; m]; n];
    for axis in 0..m {
        match &axes[axis].scale {
            AxisScale::Numeric { .. } => {
                let values = scaled[axis].as_ref().unwrap();
                for row in 0..n {
                    y_in[row][axis] = values[row];
                    y_out[row][axis] = values[row];
                }
            }
            AxisScale::Categorical { boxes } => {
                let axis_orders = orders[axis].as_ref().ok_or_else(|| {
                    Error::Internal(format!("categorical axis {axis} has no ordering"))
                })?;
                let (entry_y, exit_y) =
                    reconcile_breakpoint(&axis_orders.entry, &axis_orders.exit, boxes, n)?;
                for row in 0..n {
                    y_in[row][axis] = entry_y[row];
                    y_out[row][axis] = exit_y[row];
                }
            }
        }
    }

    Ok(Layout {
        axes,
        points: PointMatrix { y_in, y_out },
        blocks,
        warnings,
        n_rows: n,
    })
}

/// Computes entry/exit orderings for every categorical axis.
fn order_blocks(
    frame: &Frame,
    spec: &ResolvedSpec,
    kinds: &[ColumnKind],
    blocks: &[FactorBlock],
) -> Result<Vec<Option<AxisOrders>>> {
    let m = spec.axis_columns.len();
    let mut orders: Vec<Option<AxisOrders>> = Vec::new();
    for _ in 0..m {
        orders.push(None);
    }
    for block in blocks {
        let n_subs = block.sub_blocks.len();
        for (i, sub) in block.sub_blocks.iter().enumerate() {
            let left_tiebreak = (sub.start > 0
                && kinds[sub.start - 1] == ColumnKind::Numeric)
                .then(|| spec.axis_columns[sub.start - 1]);
            let right_tiebreak = (sub.end + 1 < m && kinds[sub.end + 1] == ColumnKind::Numeric)
                .then(|| spec.axis_columns[sub.end + 1]);
            let hierarchy = hierarchical_order(
                frame,
                &spec.axis_columns[sub.start..=sub.end],
                left_tiebreak,
                right_tiebreak,
            )?;
            for (offset, per_level) in hierarchy.into_iter().enumerate() {
                let axis = sub.start + offset;
                let shares_next = axis == sub.end && i + 1 < n_subs;
                if shares_next {
                    // This side of the boundary axis is arranged from the
                    // left neighbor's exit positions once all sub-blocks
                    // are ordered; the propagation pass above only needed
                    // it internally.
                    continue;
                }
                let shares_previous = axis == sub.start && i > 0;
                if shares_previous {
                    orders[axis] = Some(AxisOrders {
                        entry: Vec::new(),
                        exit: per_level,
                    });
                } else {
                    orders[axis] = Some(AxisOrders {
                        entry: per_level.clone(),
                        exit: per_level,
                    });
                }
            }
        }
        // Entry side of each boundary axis: within each level, follow the
        // exit arrangement of the axis immediately to its left.
        for pair in block.sub_blocks.windows(2) {
            let boundary = pair[0].end;
            let left_exit_rank = exit_rank(orders[boundary - 1].as_ref(), frame.n_rows())?;
            let column = frame.column(spec.axis_columns[boundary]);
            let codes = column.level_codes().unwrap();
            let n_levels = column.levels().map_or(0, <[String]>::len);
            let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n_levels];
            for row in 0..frame.n_rows() {
                buckets[codes[row]].push(row);
            }
            for bucket in &mut buckets {
                bucket.sort_by_key(|&row| (left_exit_rank[row], row));
            }
            orders[boundary]
                .as_mut()
                .ok_or_else(|| Error::Internal(format!("boundary axis {boundary} unordered")))?
                .entry = buckets;
        }
    }
    Ok(orders)
}

/// Global bottom-to-top slot rank of every row in an axis's exit arrangement.
fn exit_rank(orders: Option<&AxisOrders>, n_rows: usize) -> Result<Vec<usize>> {
    let orders = orders.ok_or_else(|| {
        Error::Internal("breakpoint neighbor has no exit ordering".to_string())
    })?;
    let mut rank = vec![0usize; n_rows];
    let mut slot = 0;
    for bucket in &orders.exit {
        for &row in bucket {
            rank[row] = slot;
            slot += 1;
        }
    }
    Ok(rank)
}
