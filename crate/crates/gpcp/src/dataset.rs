//! Tabular data ingestion and column typing.
//!
//! A [`Frame`] is a set of equally long, uniquely named columns. Each column
//! is either numeric (finite `f64` values) or categorical (level codes into
//! an ordered list of distinct labels). Kinds are inferred from the raw text
//! cells by [`infer_kind`] unless overridden at load time.
//!
//! Missing data is rejected: an empty cell is an error naming its row and
//! column. Level order defaults to first appearance in file order and can be
//! changed with [`Column::set_level_order`].

use std::collections::BTreeMap;
use std::io::{Read, Write};

use crate::error::{Error, Result};

/// Column type: the two variable classes a layout distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColumnKind {
    Numeric,
    Categorical,
}

#[derive(Debug, Clone, PartialEq)]
enum ColumnData {
    Numeric(Vec<f64>),
    Categorical { levels: Vec<String>, codes: Vec<usize> },
}

/// A named, typed column.
///
/// Numeric columns hold finite values only. Categorical columns hold one
/// level code per row plus the ordered list of distinct level labels; the
/// level order controls how level boxes stack on a categorical axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    name: String,
    data: ColumnData,
}

impl Column {
    /// Numeric column from raw values. Rejects NaN and infinities.
    pub fn numeric(name: impl Into<String>, values: Vec<f64>) -> Result<Column> {
        let name = name.into();
        if let Some(row) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue {
                column: name,
                row: row + 1,
            });
        }
        Ok(Column {
            name,
            data: ColumnData::Numeric(values),
        })
    }

    /// Categorical column from per-row labels; levels are the distinct
    /// labels in first-appearance order.
    pub fn categorical<S: AsRef<str>>(name: impl Into<String>, labels: &[S]) -> Column {
        let mut levels: Vec<String> = Vec::new();
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        let mut codes = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            let code = match index.get(label) {
                Some(&c) => c,
                None => {
                    let c = levels.len();
                    levels.push(label.to_string());
                    index.insert(label, c);
                    c
                }
            };
            codes.push(code);
        }
        // drop borrows into `labels` before moving levels
        drop(index);
        Column {
            name: name.into(),
            data: ColumnData::Categorical { levels, codes },
        }
    }

    /// Categorical column from explicit levels and codes.
    pub fn categorical_with_levels(
        name: impl Into<String>,
        levels: Vec<String>,
        codes: Vec<usize>,
    ) -> Result<Column> {
        let name = name.into();
        let mut seen = std::collections::BTreeSet::new();
        for level in &levels {
            if !seen.insert(level.as_str()) {
                return Err(Error::DuplicateLevel {
                    column: name,
                    level: level.clone(),
                });
            }
        }
        if let Some(&code) = codes.iter().find(|&&c| c >= levels.len()) {
            return Err(Error::LevelCodeOutOfRange {
                column: name,
                code,
                n_levels: levels.len(),
            });
        }
        Ok(Column {
            name,
            data: ColumnData::Categorical { levels, codes },
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ColumnKind {
        match self.data {
            ColumnData::Numeric(_) => ColumnKind::Numeric,
            ColumnData::Categorical { .. } => ColumnKind::Categorical,
        }
    }

    pub fn len(&self) -> usize {
        match &self.data {
            ColumnData::Numeric(v) => v.len(),
            ColumnData::Categorical { codes, .. } => codes.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Values of a numeric column, `None` for categorical.
    pub fn numeric_values(&self) -> Option<&[f64]> {
        match &self.data {
            ColumnData::Numeric(v) => Some(v),
            ColumnData::Categorical { .. } => None,
        }
    }

    /// Ordered level labels of a categorical column, `None` for numeric.
    pub fn levels(&self) -> Option<&[String]> {
        match &self.data {
            ColumnData::Categorical { levels, .. } => Some(levels),
            ColumnData::Numeric(_) => None,
        }
    }

    /// Per-row level codes of a categorical column, `None` for numeric.
    pub fn level_codes(&self) -> Option<&[usize]> {
        match &self.data {
            ColumnData::Categorical { codes, .. } => Some(codes),
            ColumnData::Numeric(_) => None,
        }
    }

    /// Label of the given row in a categorical column.
    pub fn label_of(&self, row: usize) -> Option<&str> {
        match &self.data {
            ColumnData::Categorical { levels, codes } => Some(levels[codes[row]].as_str()),
            ColumnData::Numeric(_) => None,
        }
    }

    /// Returns a copy of this column with its levels reordered to `order`
    /// and codes remapped so every row keeps its label. `order` must be a
    /// permutation of the current levels.
    pub fn set_level_order<S: AsRef<str>>(&self, order: &[S]) -> Result<Column> {
        let (levels, codes) = match &self.data {
            ColumnData::Categorical { levels, codes } => (levels, codes),
            ColumnData::Numeric(_) => {
                return Err(Error::NotCategorical {
                    column: self.name.clone(),
                })
            }
        };
        let order: Vec<&str> = order.iter().map(|s| s.as_ref()).collect();
        let missing: Vec<String> = levels
            .iter()
            .filter(|l| !order.contains(&l.as_str()))
            .cloned()
            .collect();
        let extra: Vec<String> = {
            let mut extra = Vec::new();
            let mut seen = std::collections::BTreeSet::new();
            for label in &order {
                if !levels.iter().any(|l| l == label) || !seen.insert(*label) {
                    extra.push(label.to_string());
                }
            }
            extra
        };
        if !missing.is_empty() || !extra.is_empty() {
            return Err(Error::LevelOrderMismatch {
                column: self.name.clone(),
                missing,
                extra,
            });
        }
        // old code -> new code
        let remap: Vec<usize> = levels
            .iter()
            .map(|l| order.iter().position(|o| o == l).unwrap())
            .collect();
        Ok(Column {
            name: self.name.clone(),
            data: ColumnData::Categorical {
                levels: order.into_iter().map(String::from).collect(),
                codes: codes.iter().map(|&c| remap[c]).collect(),
            },
        })
    }
}

/// An immutable table of uniquely named, equally long columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    columns: Vec<Column>,
    n_rows: usize,
}

impl Frame {
    pub fn new(columns: Vec<Column>) -> Result<Frame> {
        let n_rows = columns.first().map_or(0, Column::len);
        let mut seen = std::collections::BTreeSet::new();
        for col in &columns {
            if col.len() != n_rows {
                return Err(Error::ColumnLengthMismatch {
                    column: col.name.clone(),
                    len: col.len(),
                    expected: n_rows,
                });
            }
            if !seen.insert(col.name.as_str()) {
                return Err(Error::DuplicateColumnName {
                    name: col.name.clone(),
                });
            }
        }
        Ok(Frame { columns, n_rows })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, index: usize) -> &Column {
        &self.columns[index]
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    /// Replaces the named column's level order. See [`Column::set_level_order`].
    pub fn with_level_order<S: AsRef<str>>(mut self, column: &str, order: &[S]) -> Result<Frame> {
        let idx = self
            .column_index(column)
            .ok_or_else(|| Error::UnknownColumn {
                name: column.to_string(),
            })?;
        self.columns[idx] = self.columns[idx].set_level_order(order)?;
        Ok(self)
    }

    /// Loads a delimited byte stream into a frame. See [`LoadOptions`].
    pub fn load_csv<R: Read>(source: R, options: &LoadOptions) -> Result<Frame> {
        load_csv(source, options)
    }

    /// Writes the frame back out as delimited text (RFC-4180 quoting).
    /// Numeric cells use the shortest representation that round-trips.
    pub fn write_csv<W: Write>(&self, sink: W, delimiter: u8) -> Result<()> {
        let mut writer = csv::WriterBuilder::new()
            .delimiter(delimiter)
            .from_writer(sink);
        writer
            .write_record(self.columns.iter().map(Column::name))
            .map_err(io_csv_error)?;
        for row in 0..self.n_rows {
            let record: Vec<String> = self
                .columns
                .iter()
                .map(|col| match &col.data {
                    ColumnData::Numeric(v) => v[row].to_string(),
                    ColumnData::Categorical { levels, codes } => levels[codes[row]].clone(),
                })
                .collect();
            writer.write_record(&record).map_err(io_csv_error)?;
        }
        writer.flush()?;
        Ok(())
    }
}

fn io_csv_error(e: csv::Error) -> Error {
    Error::Csv {
        row: 0,
        msg: e.to_string(),
    }
}

/// Ingestion options for [`load_csv`].
#[derive(Debug, Clone)]
pub struct LoadOptions {
    /// Field delimiter, comma by default.
    pub delimiter: u8,
    /// When true the first record names the columns; otherwise columns are
    /// named `c0`, `c1`, ...
    pub has_header: bool,
    /// Forces the kind of the named columns instead of inferring it.
    pub kind_overrides: BTreeMap<String, ColumnKind>,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            delimiter: b',',
            has_header: true,
            kind_overrides: BTreeMap::new(),
        }
    }
}

/// Classifies raw text cells: numeric iff every cell parses as a finite
/// decimal number (optional sign, decimal point, exponent), categorical
/// otherwise. "NaN" and "inf" do not count as numeric.
pub fn infer_kind<S: AsRef<str>>(raw: &[S]) -> ColumnKind {
    if raw.iter().all(|cell| parse_finite(cell.as_ref()).is_some()) {
        ColumnKind::Numeric
    } else {
        ColumnKind::Categorical
    }
}

fn parse_finite(cell: &str) -> Option<f64> {
    cell.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Loads delimited text into a [`Frame`].
///
/// Rejects ragged rows (error names the 1-based data row), empty input, and
/// missing cells (error names row and column). Column kinds come from
/// [`infer_kind`] unless overridden.
pub fn load_csv<R: Read>(source: R, options: &LoadOptions) -> Result<Frame> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(options.delimiter)
        .has_headers(false)
        .flexible(true)
        .from_reader(source);

    let mut records = reader.records();
    let first = match records.next() {
        Some(record) => record.map_err(|e| csv_error(0, e))?,
        None => return Err(Error::EmptyInput),
    };

    let names: Vec<String> = if options.has_header {
        first.iter().map(String::from).collect()
    } else {
        (0..first.len()).map(|i| format!("c{i}")).collect()
    };
    let n_cols = names.len();

    let mut cells: Vec<Vec<String>> = vec![Vec::new(); n_cols];
    let mut push_row = |record: &csv::StringRecord, row: usize| -> Result<()> {
        if record.len() != n_cols {
            return Err(Error::Csv {
                row,
                msg: format!("expected {n_cols} fields, found {}", record.len()),
            });
        }
        for (i, field) in record.iter().enumerate() {
            if field.is_empty() {
                return Err(Error::MissingValue {
                    row,
                    column: names[i].clone(),
                });
            }
            cells[i].push(field.to_string());
        }
        Ok(())
    };

    let mut n_rows = 0;
    if !options.has_header {
        n_rows += 1;
        push_row(&first, n_rows)?;
    }
    for record in records {
        n_rows += 1;
        let record = record.map_err(|e| csv_error(n_rows, e))?;
        push_row(&record, n_rows)?;
    }
    if n_rows == 0 {
        return Err(Error::NoDataRows);
    }

    let columns = names
        .into_iter()
        .zip(cells)
        .map(|(name, raw)| {
            let kind = options
                .kind_overrides
                .get(&name)
                .copied()
                .unwrap_or_else(|| infer_kind(&raw));
            match kind {
                ColumnKind::Numeric => {
                    let mut values = Vec::with_capacity(raw.len());
                    for (row, cell) in raw.iter().enumerate() {
                        match parse_finite(cell) {
                            Some(v) => values.push(v),
                            None => {
                                return Err(Error::Csv {
                                    row: row + 1,
                                    msg: format!(
                                        "cell {cell:?} in column {name:?} is not a finite number"
                                    ),
                                })
                            }
                        }
                    }
                    Column::numeric(name, values)
                }
                ColumnKind::Categorical => Ok(Column::categorical(name, &raw)),
            }
        })
        .collect::<Result<Vec<_>>>()?;

    Frame::new(columns)
}

fn csv_error(row: usize, e: csv::Error) -> Error {
    // csv reports unequal-length records itself when a quoted record is
    // malformed; keep its message but pin our row numbering.
    Error::Csv {
        row,
        msg: e.to_string(),
    }
}
