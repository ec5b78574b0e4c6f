//! Painting order of the polylines.
//!
//! With enough observations, which lines sit on top decides what the plot
//! shows. Lines belong to groups — the levels of an explicit grouping
//! column, or every distinct combination of levels across the categorical
//! axes when no grouping column is set — and the draw policy orders whole
//! groups: smaller groups on top, larger groups on top, the hierarchical
//! arrangement of the categorical axes, or plain data order.

use crate::dataset::{ColumnKind, Frame};
use crate::error::{Error, Result};
use crate::selection::ResolvedSpec;

/// Z-order policy; earlier painted lines end up underneath.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DrawPolicy {
    /// Largest group painted first, smallest last (on top).
    SmallOnTop,
    /// Exact reverse of `SmallOnTop` at group granularity.
    LargeOnTop,
    /// Rows in ascending lexicographic order of their level codes across
    /// the categorical axes, left to right; usually the cleanest plot.
    #[default]
    Hierarchical,
    /// Input row order.
    DataOrder,
}

impl DrawPolicy {
    pub fn parse(name: &str) -> Option<DrawPolicy> {
        match name {
            "small-on-top" => Some(DrawPolicy::SmallOnTop),
            "large-on-top" => Some(DrawPolicy::LargeOnTop),
            "hierarchical" => Some(DrawPolicy::Hierarchical),
            "data" => Some(DrawPolicy::DataOrder),
            _ => None,
        }
    }
}

/// Per-row group assignment plus per-group bookkeeping. Group ids number
/// the groups by first appearance in the data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowGroups {
    /// Group id per row.
    pub ids: Vec<usize>,
    /// Row count per group id.
    pub counts: Vec<usize>,
    /// First row of each group, ascending per group id by construction.
    pub first_rows: Vec<usize>,
    /// Display label per group: the level label, or the joined level
    /// combination when grouping falls back to the categorical axes.
    pub labels: Vec<String>,
}

impl RowGroups {
    pub fn n_groups(&self) -> usize {
        self.counts.len()
    }
}

/// Assigns every row to a group.
///
/// With `group_index` the groups are that categorical column's levels (ids
/// renumbered by first appearance). Without it, rows group by their tuple
/// of levels across all categorical axes of the spec; a spec with no
/// categorical axes yields a single group.
pub fn group_sizes(
    frame: &Frame,
    group_index: Option<usize>,
    spec: &ResolvedSpec,
) -> Result<RowGroups> {
    let n = frame.n_rows();
    let cat_axes: Vec<usize> = spec
        .axis_columns
        .iter()
        .copied()
        .filter(|&c| frame.column(c).kind() == ColumnKind::Categorical)
        .collect();
    let keys: Vec<Vec<usize>> = match group_index {
        Some(col) => {
            let column = frame.column(col);
            let codes = column.level_codes().ok_or_else(|| Error::NumericGroupColumn {
                column: column.name().to_string(),
            })?;
            (0..n).map(|row| vec![codes[row]]).collect()
        }
        None => (0..n)
            .map(|row| {
                cat_axes
                    .iter()
                    .map(|&c| frame.column(c).level_codes().unwrap()[row])
                    .collect()
            })
            .collect(),
    };

    let label_for = |row: usize| -> String {
        match group_index {
            Some(col) => frame.column(col).label_of(row).unwrap().to_string(),
            None if cat_axes.is_empty() => "all".to_string(),
            None => cat_axes
                .iter()
                .map(|&c| frame.column(c).label_of(row).unwrap())
                .collect::<Vec<_>>()
                .join("/"),
        }
    };

    let mut ids = Vec::with_capacity(n);
    let mut counts = Vec::new();
    let mut first_rows = Vec::new();
    let mut labels = Vec::new();
    let mut index: std::collections::HashMap<Vec<usize>, usize> = std::collections::HashMap::new();
    for (row, key) in keys.into_iter().enumerate() {
        let id = match index.get(&key) {
            Some(&id) => id,
            None => {
                let id = counts.len();
                counts.push(0);
                first_rows.push(row);
                labels.push(label_for(row));
                index.insert(key, id);
                id
            }
        };
        counts[id] += 1;
        ids.push(id);
    }
    Ok(RowGroups {
        ids,
        counts,
        first_rows,
        labels,
    })
}

/// The painting permutation: returned rows are painted first to last, so
/// the final entries end up on top.
///
/// Within a group rows keep ascending row order. `SmallOnTop` paints groups
/// in descending size (ties by first appearance); `LargeOnTop` paints the
/// exact reverse group sequence. `Hierarchical` ignores groups and sorts
/// rows by their level codes across the categorical axes, row index last.
pub fn draw_order(
    frame: &Frame,
    spec: &ResolvedSpec,
    groups: &RowGroups,
    policy: DrawPolicy,
) -> Vec<usize> {
    let n = frame.n_rows();
    match policy {
        DrawPolicy::DataOrder => (0..n).collect(),
        DrawPolicy::Hierarchical => {
            let cat_axes: Vec<usize> = spec
                .axis_columns
                .iter()
                .copied()
                .filter(|&c| frame.column(c).kind() == ColumnKind::Categorical)
                .collect();
            let mut rows: Vec<usize> = (0..n).collect();
            rows.sort_by_key(|&row| {
                let key: Vec<usize> = cat_axes
                    .iter()
                    .map(|&c| frame.column(c).level_codes().unwrap()[row])
                    .collect();
                (key, row)
            });
            rows
        }
        DrawPolicy::SmallOnTop | DrawPolicy::LargeOnTop => {
            let mut group_order: Vec<usize> = (0..groups.n_groups()).collect();
            // descending size, ties by first appearance
            group_order.sort_by_key(|&g| (std::cmp::Reverse(groups.counts[g]), groups.first_rows[g]));
            if policy == DrawPolicy::LargeOnTop {
                group_order.reverse();
            }
            let mut rows_by_group: Vec<Vec<usize>> = vec![Vec::new(); groups.n_groups()];
            for (row, &id) in groups.ids.iter().enumerate() {
                rows_by_group[id].push(row);
            }
            group_order
                .into_iter()
                .flat_map(|g| rows_by_group[g].clone())
                .collect()
        }
    }
}
