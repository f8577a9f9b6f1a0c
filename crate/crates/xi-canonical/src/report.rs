//! Deterministic CSV/JSON emission: 17-significant-digit columns, a metadata
//! header, and optional gnuplot companions.

use crate::error::{Error, Result};
use serde::Serialize;
use std::io::Write;
use std::path::Path;

/// Lossless decimal formatting for f64 (17 significant digits).
pub fn fmt_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        format!("{v:.16e}")
    }
}

/// A tabular result: named columns plus a metadata string recorded in the
/// header line.
#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub meta: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(meta: impl Into<String>, columns: &[&str]) -> Self {
        Table {
            meta: meta.into(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.meta));
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| fmt_f64(*v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_csv().as_bytes())?;
        Ok(())
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let f = std::fs::File::create(path)?;
        serde_json::to_writer_pretty(f, self).map_err(|e| Error::Io(e.to_string()))?;
        Ok(())
    }

    /// Companion gnuplot script plotting `y_cols` against the first column,
    /// referencing the CSV by its file name (relative path).
    pub fn write_plot_script(&self, csv_path: &Path, y_cols: &[&str]) -> Result<()> {
        let gp_path = csv_path.with_extension("gp");
        let csv_name = csv_path
            .file_name()
            .ok_or_else(|| Error::Config("output path has no file name".into()))?
            .to_string_lossy()
            .to_string();
        let mut body = String::new();
        body.push_str("set datafile separator ','\n");
        body.push_str("set key autotitle columnhead\n");
        body.push_str(&format!("# {}\n", self.meta));
        let mut plots = Vec::new();
        for col in y_cols {
            let idx = self
                .columns
                .iter()
                .position(|c| c == col)
                .ok_or_else(|| Error::Config(format!("unknown column {col}")))?;
            plots.push(format!("'{csv_name}' using 1:{} with lines", idx + 1));
        }
        body.push_str(&format!("plot {}\n", plots.join(", \\\n     ")));
        std::fs::write(&gp_path, body)?;
        Ok(())
    }
}

/// Parse a CSV produced by [`Table::to_csv`]; used by the round-trip tests
/// and by consumers reloading emitted tables.
pub fn parse_csv(text: &str) -> Result<Table> {
    let mut lines = text.lines();
    let meta = lines
        .next()
        .and_then(|l| l.strip_prefix("# "))
        .ok_or_else(|| Error::Config("missing metadata header".into()))?
        .to_string();
    let columns: Vec<String> = lines
        .next()
        .ok_or_else(|| Error::Config("missing column header".into()))?
        .split(',')
        .map(|s| s.to_string())
        .collect();
    let mut rows = Vec::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let row: std::result::Result<Vec<f64>, _> =
            line.split(',').map(|c| c.parse::<f64>()).collect();
        rows.push(row.map_err(|e| Error::Config(format!("bad csv cell: {e}")))?);
    }
    Ok(Table {
        meta,
        columns,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_exactly() {
        let mut t = Table::new("omega=1.5 seed=7", &["a", "value"]);
        t.push(vec![1.0, 1.0 / 3.0]);
        t.push(vec![f64::MIN_POSITIVE, 9.87654321e300]);
        let text = t.to_csv();
        let back = parse_csv(&text).unwrap();
        assert_eq!(back.meta, t.meta);
        assert_eq!(back.columns, t.columns);
        for (r1, r2) in t.rows.iter().zip(&back.rows) {
            for (a, b) in r1.iter().zip(r2) {
                assert_eq!(a.to_bits(), b.to_bits(), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn emission_is_deterministic() {
        let mut t = Table::new("meta", &["x"]);
        t.push(vec![0.1 + 0.2]);
        assert_eq!(t.to_csv(), t.to_csv());
    }
}
