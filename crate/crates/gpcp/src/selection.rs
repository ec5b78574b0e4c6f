//! Axis specification: which columns become axes, in what order, with
//! breakpoints and an optional grouping column.
//!
//! The textual grammar is `name ((","|"|") name)*`. A `|` separator marks a
//! breakpoint after the name on its left; the same column may appear any
//! number of times. Example: `gender,age|class,survived` puts a breakpoint
//! after the `age` axis.

use crate::dataset::{ColumnKind, Frame};
use crate::error::{Error, Result};

/// One axis entry: a column reference plus an optional trailing breakpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisEntry {
    pub column_name: String,
    pub break_after: bool,
}

/// Ordered axis list (duplicates allowed) with an optional grouping column.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxisSpec {
    pub entries: Vec<AxisEntry>,
    pub group_column: Option<String>,
}

impl AxisSpec {
    /// Parses an axis expression. See the module docs for the grammar.
    pub fn parse(text: &str) -> Result<AxisSpec> {
        parse_spec(text)
    }

    /// Canonical text form; `parse` of this string returns `self` (modulo
    /// the grouping column, which has no textual syntax).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, entry) in self.entries.iter().enumerate() {
            out.push_str(&entry.column_name);
            if i + 1 < self.entries.len() {
                out.push(if entry.break_after { '|' } else { ',' });
            }
        }
        out
    }

    pub fn with_group(mut self, column: impl Into<String>) -> AxisSpec {
        self.group_column = Some(column.into());
        self
    }

    /// Resolves column names against a frame and validates breakpoints.
    pub fn resolve(&self, frame: &Frame) -> Result<ResolvedSpec> {
        resolve(self, frame)
    }
}

/// An [`AxisSpec`] bound to a concrete frame: per-axis column indices plus
/// validated breakpoint flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedSpec {
    pub axis_columns: Vec<usize>,
    pub break_after: Vec<bool>,
    pub group_index: Option<usize>,
}

impl ResolvedSpec {
    pub fn n_axes(&self) -> usize {
        self.axis_columns.len()
    }

    /// Column kind per axis, in axis order.
    pub fn axis_kinds(&self, frame: &Frame) -> Vec<ColumnKind> {
        self.axis_columns
            .iter()
            .map(|&c| frame.column(c).kind())
            .collect()
    }
}

/// Parses an axis expression into an [`AxisSpec`].
pub fn parse_spec(text: &str) -> Result<AxisSpec> {
    if text.trim().is_empty() {
        return Err(Error::SpecSyntax {
            msg: "empty axis expression".to_string(),
        });
    }
    let mut entries: Vec<AxisEntry> = Vec::new();
    let mut pending = String::new();
    let mut finish = |pending: &mut String, break_after: bool| -> Result<()> {
        let name = pending.trim();
        if name.is_empty() {
            return Err(Error::SpecSyntax {
                msg: "misplaced separator: expected a column name".to_string(),
            });
        }
        entries.push(AxisEntry {
            column_name: name.to_string(),
            break_after,
        });
        pending.clear();
        Ok(())
    };
    for ch in text.chars() {
        match ch {
            ',' => finish(&mut pending, false)?,
            '|' => finish(&mut pending, true)?,
            other => pending.push(other),
        }
    }
    finish(&mut pending, false)?;
    if entries.last().map_or(false, |e| e.break_after) {
        // unreachable through the loop above; kept for direct construction paths
        return Err(Error::SpecSyntax {
            msg: "breakpoint after the final axis".to_string(),
        });
    }
    Ok(AxisSpec {
        entries,
        group_column: None,
    })
}

/// Resolves an [`AxisSpec`] against a frame.
///
/// Breakpoints must sit on a categorical axis with categorical neighbors on
/// both sides; anything else is an error rather than a silent no-op.
pub fn resolve(spec: &AxisSpec, frame: &Frame) -> Result<ResolvedSpec> {
    if spec.entries.is_empty() {
        return Err(Error::SpecSyntax {
            msg: "empty axis expression".to_string(),
        });
    }
    if spec.entries.last().map_or(false, |e| e.break_after) {
        return Err(Error::SpecSyntax {
            msg: "breakpoint after the final axis".to_string(),
        });
    }
    let lookup = |name: &str| -> Result<usize> {
        frame.column_index(name).ok_or_else(|| Error::UnknownColumn {
            name: name.to_string(),
        })
    };
    let axis_columns: Vec<usize> = spec
        .entries
        .iter()
        .map(|e| lookup(&e.column_name))
        .collect::<Result<_>>()?;
    let break_after: Vec<bool> = spec.entries.iter().map(|e| e.break_after).collect();
    let group_index = match &spec.group_column {
        Some(name) => Some(lookup(name)?),
        None => None,
    };

    let kind = |axis: usize| frame.column(axis_columns[axis]).kind();
    for (axis, &flag) in break_after.iter().enumerate() {
        if !flag {
            continue;
        }
        let column = spec.entries[axis].column_name.clone();
        if kind(axis) == ColumnKind::Numeric {
            return Err(Error::BreakOnNumericAxis {
                axis: axis + 1,
                column,
            });
        }
        let left_ok = axis > 0 && kind(axis - 1) == ColumnKind::Categorical;
        let right_ok = axis + 1 < axis_columns.len() && kind(axis + 1) == ColumnKind::Categorical;
        if !left_ok || !right_ok {
            return Err(Error::BreakOutsideFactorBlock {
                axis: axis + 1,
                column,
            });
        }
    }

    Ok(ResolvedSpec {
        axis_columns,
        break_after,
        group_index,
    })
}
