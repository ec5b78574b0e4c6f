//! Shared test support: independent oracles, a tiny deterministic RNG, a
//! random frame generator, and a strict-enough XML well-formedness check.
//!
//! Everything here is deliberately naive and independent of the library's
//! computation paths: the CSV oracle splits strings by hand, the ordering
//! oracle materializes full sort keys instead of propagating ranks.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use gpcp::{Column, ColumnKind, Frame, Layout, ResolvedSpec};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

// ---------------------------------------------------------------------------
// naive CSV ingestion oracle (no quoting support; fixtures are plain)
// ---------------------------------------------------------------------------

pub struct RawCsv {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn naive_read_csv(path: &std::path::Path) -> RawCsv {
    let text = std::fs::read_to_string(path).expect("fixture readable");
    let mut lines = text.lines();
    let header: Vec<String> = lines
        .next()
        .expect("non-empty fixture")
        .split(',')
        .map(str::to_string)
        .collect();
    let rows: Vec<Vec<String>> = lines
        .filter(|l| !l.is_empty())
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    RawCsv { header, rows }
}

impl RawCsv {
    pub fn column_index(&self, name: &str) -> usize {
        self.header.iter().position(|h| h == name).expect("column")
    }

    /// Level counts of a column, keyed by label.
    pub fn tally(&self, name: &str) -> BTreeMap<String, usize> {
        let idx = self.column_index(name);
        let mut counts = BTreeMap::new();
        for row in &self.rows {
            *counts.entry(row[idx].clone()).or_insert(0) += 1;
        }
        counts
    }

    pub fn numeric_column(&self, name: &str) -> Vec<f64> {
        let idx = self.column_index(name);
        self.rows
            .iter()
            .map(|row| row[idx].parse::<f64>().expect("numeric cell"))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// deterministic RNG (splitmix64)
// ---------------------------------------------------------------------------

pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed.wrapping_add(0x9E3779B97F4A7C15))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next_u64() % (hi - lo + 1) as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        (self.next_u64() as f64 / u64::MAX as f64) < p
    }
}

// ---------------------------------------------------------------------------
// random frame generator for the ordering corpus
// ---------------------------------------------------------------------------

/// One random layout scenario: 2-4 categorical axes, at most one numeric
/// flank, valid breakpoints, numeric values with plenty of ties.
pub struct Scenario {
    pub frame: Frame,
    pub spec: ResolvedSpec,
}

pub fn random_scenario(seed: u64) -> Scenario {
    let mut rng = Rng::new(seed);
    let n_rows = rng.range(1, 12);
    let n_cat_axes = rng.range(2, 4);

    let mut columns: Vec<Column> = Vec::new();
    let mut cat_column_ids: Vec<usize> = Vec::new();
    let mut axis_columns: Vec<usize> = Vec::new();
    for axis in 0..n_cat_axes {
        let reuse = !cat_column_ids.is_empty() && rng.chance(0.2);
        let col_id = if reuse {
            cat_column_ids[rng.range(0, cat_column_ids.len() - 1)]
        } else {
            let n_levels = rng.range(1, 3);
            let levels: Vec<String> = (0..n_levels).map(|l| format!("l{l}")).collect();
            let codes: Vec<usize> = (0..n_rows).map(|_| rng.range(0, n_levels - 1)).collect();
            let id = columns.len();
            columns.push(
                Column::categorical_with_levels(format!("c{axis}"), levels, codes).unwrap(),
            );
            cat_column_ids.push(id);
            id
        };
        axis_columns.push(col_id);
    }

    // 0 = no flank, 1 = numeric on the left, 2 = numeric on the right
    let flank = rng.range(0, 2);
    if flank > 0 {
        // half-steps produce ties
        let values: Vec<f64> = (0..n_rows).map(|_| rng.range(0, 12) as f64 * 0.5).collect();
        let id = columns.len();
        columns.push(Column::numeric("num", values).unwrap());
        if flank == 1 {
            axis_columns.insert(0, id);
        } else {
            axis_columns.push(id);
        }
    }

    let frame = Frame::new(columns).unwrap();
    let kinds: Vec<ColumnKind> = axis_columns
        .iter()
        .map(|&c| frame.column(c).kind())
        .collect();
    let m = axis_columns.len();
    let mut break_after = vec![false; m];
    for axis in 0..m {
        let cat = |i: usize| kinds[i] == ColumnKind::Categorical;
        if cat(axis)
            && axis > 0
            && axis + 1 < m
            && cat(axis - 1)
            && cat(axis + 1)
            && rng.chance(0.35)
        {
            break_after[axis] = true;
        }
    }

    Scenario {
        frame,
        spec: ResolvedSpec {
            axis_columns,
            break_after,
            group_index: None,
        },
    }
}

// ---------------------------------------------------------------------------
// full-key lexicographic ordering oracle
// ---------------------------------------------------------------------------

/// Expected within-level row orders per axis and side, `None` for numeric
/// axes: `orders[axis] = (entry, exit)` where each side maps level -> rows.
pub type SideOrders = Vec<Option<(Vec<Vec<usize>>, Vec<Vec<usize>>)>>;

/// Recomputes every categorical axis's entry/exit orders from scratch with
/// fully materialized sort keys.
pub fn oracle_orders(frame: &Frame, spec: &ResolvedSpec) -> SideOrders {
    let m = spec.axis_columns.len();
    let n = frame.n_rows();
    let kinds: Vec<ColumnKind> = spec
        .axis_columns
        .iter()
        .map(|&c| frame.column(c).kind())
        .collect();
    let codes_of = |axis: usize| -> &[usize] {
        frame.column(spec.axis_columns[axis]).level_codes().unwrap()
    };
    let n_levels_of =
        |axis: usize| -> usize { frame.column(spec.axis_columns[axis]).levels().unwrap().len() };

    // maximal categorical runs
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut axis = 0;
    while axis < m {
        if kinds[axis] != ColumnKind::Categorical {
            axis += 1;
            continue;
        }
        let start = axis;
        while axis + 1 < m && kinds[axis + 1] == ColumnKind::Categorical {
            axis += 1;
        }
        blocks.push((start, axis));
        axis += 1;
    }

    let mut orders: SideOrders = vec![None; m];
    for &(block_start, block_end) in &blocks {
        // sub-block ranges from the break flags strictly inside the block
        let mut bounds = vec![block_start];
        for b in block_start + 1..block_end {
            if spec.break_after[b] {
                bounds.push(b);
            }
        }
        bounds.push(block_end);
        let subs: Vec<(usize, usize)> = bounds.windows(2).map(|w| (w[0], w[1])).collect();

        // full-key sort for one axis of one sub-block
        let key_sorted = |a: usize, sub_end: usize, tiebreak: Option<&[f64]>| -> Vec<Vec<usize>> {
            let codes = codes_of(a);
            let mut per_level: Vec<Vec<usize>> = vec![Vec::new(); n_levels_of(a)];
            for row in 0..n {
                per_level[codes[row]].push(row);
            }
            for bucket in &mut per_level {
                bucket.sort_by(|&p, &q| {
                    for rhs in a + 1..=sub_end {
                        let c = codes_of(rhs);
                        match c[p].cmp(&c[q]) {
                            std::cmp::Ordering::Equal => continue,
                            other => return other,
                        }
                    }
                    if let Some(tb) = tiebreak {
                        match tb[p].total_cmp(&tb[q]) {
                            std::cmp::Ordering::Equal => {}
                            other => return other,
                        }
                    }
                    p.cmp(&q)
                });
            }
            per_level
        };

        for (i, &(s, e)) in subs.iter().enumerate() {
            let left_numeric = (s > 0 && kinds[s - 1] == ColumnKind::Numeric)
                .then(|| frame.column(spec.axis_columns[s - 1]).numeric_values().unwrap());
            let right_numeric = (e + 1 < m && kinds[e + 1] == ColumnKind::Numeric)
                .then(|| frame.column(spec.axis_columns[e + 1]).numeric_values().unwrap());
            let tiebreak = left_numeric.or(right_numeric);
            for a in s..=e {
                if a == e && i + 1 < subs.len() {
                    continue; // exit side owned by the next sub-block, entry filled below
                }
                let sorted = key_sorted(a, e, tiebreak);
                if a == s && i > 0 {
                    orders[a] = Some((Vec::new(), sorted)); // exit only; entry below
                } else {
                    orders[a] = Some((sorted.clone(), sorted));
                }
            }
        }

        // entry side of every boundary: per level, order by the exit slot
        // rank of the axis immediately to the left
        for i in 1..subs.len() {
            let boundary = subs[i].0;
            let (_, left_exit) = orders[boundary - 1].as_ref().unwrap();
            let mut rank = vec![0usize; n];
            let mut slot = 0;
            for bucket in left_exit {
                for &row in bucket {
                    rank[row] = slot;
                    slot += 1;
                }
            }
            let codes = codes_of(boundary);
            let mut per_level: Vec<Vec<usize>> = vec![Vec::new(); n_levels_of(boundary)];
            for row in 0..n {
                per_level[codes[row]].push(row);
            }
            for bucket in &mut per_level {
                bucket.sort_by_key(|&row| (rank[row], row));
            }
            orders[boundary].as_mut().unwrap().0 = per_level;
        }
    }
    orders
}

/// Reads the within-level orders actually realized by a layout: rows of
/// each level sorted by their y coordinate.
pub fn realized_orders(frame: &Frame, spec: &ResolvedSpec, layout: &Layout) -> SideOrders {
    let n = frame.n_rows();
    (0..spec.axis_columns.len())
        .map(|axis| {
            let column = frame.column(spec.axis_columns[axis]);
            let codes = column.level_codes()?;
            let n_levels = column.levels().unwrap().len();
            let side = |ys: &Vec<Vec<f64>>| -> Vec<Vec<usize>> {
                let mut per_level: Vec<Vec<usize>> = vec![Vec::new(); n_levels];
                for row in 0..n {
                    per_level[codes[row]].push(row);
                }
                for bucket in &mut per_level {
                    bucket.sort_by(|&p, &q| ys[p][axis].total_cmp(&ys[q][axis]));
                }
                per_level
            };
            Some((side(&layout.points.y_in), side(&layout.points.y_out)))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// strict-enough XML well-formedness check
// ---------------------------------------------------------------------------

/// Validates tag nesting, attribute quoting, and entity use; returns the
/// number of elements. Not a full XML parser, but strict about everything
/// the SVG writer can get wrong.
pub fn check_xml(bytes: &[u8]) -> Result<usize, String> {
    let text = std::str::from_utf8(bytes).map_err(|e| e.to_string())?;
    let mut rest = text.trim_start();
    if let Some(after) = rest.strip_prefix("<?xml") {
        let end = after.find("?>").ok_or("unterminated xml declaration")?;
        rest = after[end + 2..].trim_start();
    }
    let mut stack: Vec<String> = Vec::new();
    let mut elements = 0usize;
    let mut roots = 0usize;
    let mut chars = rest.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        match ch {
            '<' => {
                let tail = &rest[i + 1..];
                if let Some(close) = tail.strip_prefix('/') {
                    let end = close.find('>').ok_or("unterminated closing tag")?;
                    let name = close[..end].trim();
                    let open = stack.pop().ok_or("closing tag without opener")?;
                    if open != name {
                        return Err(format!("expected </{open}>, found </{name}>"));
                    }
                    while let Some(&(j, _)) = chars.peek() {
                        if j <= i + 1 + end + 1 {
                            chars.next();
                        } else {
                            break;
                        }
                    }
                } else {
                    let end = tail.find('>').ok_or("unterminated tag")?;
                    let inner = &tail[..end];
                    let self_closing = inner.ends_with('/');
                    let inner = inner.strip_suffix('/').unwrap_or(inner);
                    let mut parts = inner.split_whitespace();
                    let name = parts.next().ok_or("empty tag name")?;
                    if !name
                        .chars()
                        .all(|c| c.is_ascii_alphanumeric() || c == ':' || c == '-' || c == '_')
                    {
                        return Err(format!("bad tag name {name:?}"));
                    }
                    let attrs = inner[name.len()..].trim();
                    check_attrs(attrs)?;
                    elements += 1;
                    if stack.is_empty() {
                        roots += 1;
                        if roots > 1 {
                            return Err("multiple root elements".to_string());
                        }
                    }
                    if !self_closing {
                        stack.push(name.to_string());
                    }
                    while let Some(&(j, _)) = chars.peek() {
                        if j <= i + 1 + end {
                            chars.next();
                        } else {
                            break;
                        }
                    }
                }
            }
            '>' => return Err(format!("stray '>' at byte {i}")),
            '&' => {
                let tail = &rest[i + 1..];
                let semi = tail.find(';').ok_or("unterminated entity")?;
                let entity = &tail[..semi];
                if !matches!(entity, "amp" | "lt" | "gt" | "quot" | "apos") {
                    return Err(format!("unknown entity &{entity};"));
                }
            }
            _ => {}
        }
    }
    if !stack.is_empty() {
        return Err(format!("unclosed elements: {stack:?}"));
    }
    if roots == 0 {
        return Err("no root element".to_string());
    }
    Ok(elements)
}

fn check_attrs(mut attrs: &str) -> Result<(), String> {
    while !attrs.is_empty() {
        let eq = attrs.find('=').ok_or("attribute without value")?;
        let name = attrs[..eq].trim();
        if name.is_empty() || !name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == ':' || c == '-' || c == '_')
        {
            return Err(format!("bad attribute name {name:?}"));
        }
        let rest = attrs[eq + 1..].trim_start();
        let quote = rest.chars().next().ok_or("missing attribute value")?;
        if quote != '"' && quote != '\'' {
            return Err("unquoted attribute value".to_string());
        }
        let close = rest[1..]
            .find(quote)
            .ok_or("unterminated attribute value")?;
        let value = &rest[1..1 + close];
        if value.contains('<') {
            return Err("'<' inside attribute value".to_string());
        }
        attrs = rest[close + 2..].trim_start();
    }
    Ok(())
}
