use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::CliError;

pub const TOOL_NAME: &str = "minkq";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const UNITS: &str = "hbar=2m=1";

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(i64),
    Str(String),
    Empty,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // shortest representation that parses back to the same bits
            Cell::Real(x) => write!(f, "{x:?}"),
            Cell::Int(i) => write!(f, "{i}"),
            Cell::Str(s) => f.write_str(s),
            Cell::Empty => Ok(()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        // folds -0.0 into 0.0
        Cell::Real(x + 0.0)
    }
}

impl From<i64> for Cell {
    fn from(i: i64) -> Self {
        Cell::Int(i)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}

impl From<u32> for Cell {
    fn from(i: u32) -> Self {
        Cell::Int(i64::from(i))
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Str(b.to_string())
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Str(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Str(s)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(o: Option<T>) -> Self {
        o.map(Into::into).unwrap_or(Cell::Empty)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metadata {
    pub units: String,
    pub config_hash: String,
    pub tool: String,
}

impl Metadata {
    pub fn new(config_hash: impl Into<String>) -> Self {
        Self { units: UNITS.into(), config_hash: config_hash.into(), tool: format!("{TOOL_NAME} {TOOL_VERSION}") }
    }

    pub fn comment_line(&self) -> String {
        format!("# units: {}; config_hash={}; tool={}", self.units, self.config_hash, self.tool)
    }
}

/// Rectangular table with a metadata comment line.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub metadata: Metadata,
}

impl ResultTable {
    pub fn new(name: impl Into<String>, columns: &[&str], metadata: Metadata) -> Self {
        Self { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new(), metadata }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header of {}", self.name);
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut out = self.metadata.comment_line().into_bytes();
        out.push(b'\n');
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns).map_err(|e| CliError::Io(e.to_string()))?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.to_string())).map_err(|e| CliError::Io(e.to_string()))?;
        }
        w.into_inner().map_err(|e| CliError::Io(e.to_string()))
    }

    /// Fixed-width text rendering of the first `max_rows` rows.
    pub fn to_text(&self, max_rows: usize) -> String {
        let shown: Vec<Vec<String>> = self.rows.iter().take(max_rows).map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|j| shown.iter().map(|r| r[j].len()).chain([self.columns[j].len()]).max().unwrap_or(0))
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(&self.columns);
        for r in &shown {
            out += &line(r);
        }
        if self.rows.len() > max_rows {
            out += &format!("... {} more rows\n", self.rows.len() - max_rows);
        }
        out
    }

    /// Write `<dir>/<name>.csv` atomically; returns the bytes written.
    pub fn write(&self, dir: &Path) -> Result<Vec<u8>, CliError> {
        let bytes = self.to_csv()?;
        write_atomic(&dir.join(format!("{}.csv", self.name)), &bytes)?;
        Ok(bytes)
    }
}

/// Write to a sibling temporary file, then rename over the target.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let file = path.file_name().and_then(|f| f.to_str()).unwrap_or("out");
    let tmp = path.with_file_name(format!(".{file}.tmp"));
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_cells_round_trip() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, -0.0] {
            let s = Cell::Real(x).to_string();
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(Cell::Real(2.0).to_string(), "2.0");
        assert_eq!(Cell::from(-0.0).to_string(), "0.0");
    }

    #[test]
    fn csv_layout() {
        let mut t = ResultTable::new("t", &["a", "b"], Metadata::new("ab12"));
        t.push(vec![1.5.into(), "x,y".into()]);
        let text = String::from_utf8(t.to_csv().unwrap()).unwrap();
        let want = format!("# units: hbar=2m=1; config_hash=ab12; tool=minkq {TOOL_VERSION}\na,b\n1.5,\"x,y\"\n");
        assert_eq!(text, want);
    }

    #[test]
    #[should_panic]
    fn ragged_rows_are_refused() {
        let mut t = ResultTable::new("t", &["a", "b"], Metadata::new("0"));
        t.push(vec![1.0.into()]);
    }
}
