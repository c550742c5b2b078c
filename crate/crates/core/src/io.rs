//! Text serialization: CSV table rendering/parsing and JSON with lossless
//! floating-point output.
//!
//! JSON floats are written with 17 significant digits (`{:.16e}`), enough
//! for every f64 to round-trip bit-exactly through text. CSV values use the
//! shortest representation that round-trips, via the standard formatter.

use serde::de::DeserializeOwned;
use serde::Serialize;
use std::io::Write;

use crate::dht::RealSignal;
use crate::error::{Error, Result};
use crate::qht::FigureRow;

/// serde_json formatter that writes every f64 with 17 significant digits.
struct LosslessFormatter;

impl serde_json::ser::Formatter for LosslessFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()> {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes any value to JSON with lossless float formatting.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, LosslessFormatter);
    value
        .serialize(&mut ser)
        .expect("in-memory JSON serialization cannot fail");
    String::from_utf8(out).expect("serde_json emits UTF-8")
}

/// Deserializes a value from JSON text, folding parse and validation
/// failures into [`Error::Json`].
pub fn from_json_str<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

/// Renders a `t,value` signal table.
pub fn render_signal_csv(times: &[f64], values: &[f64]) -> String {
    debug_assert_eq!(times.len(), values.len());
    let mut out = String::from("t,value\n");
    for (t, v) in times.iter().zip(values) {
        out.push_str(&format!("{t},{v}\n"));
    }
    out
}

/// Parses a `t,value` signal table. Errors name the offending 1-based line.
pub fn parse_signal_csv(text: &str) -> Result<(Vec<f64>, RealSignal)> {
    let mut lines = text.lines().map(|l| l.trim_end_matches('\r'));
    match lines.next() {
        Some("t,value") => {}
        Some(_) => {
            return Err(Error::Csv { line: 1, message: "expected header \"t,value\"".into() })
        }
        None => return Err(Error::Csv { line: 1, message: "missing header".into() }),
    }
    let mut times = Vec::new();
    let mut values = Vec::new();
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 {
            return Err(Error::Csv {
                line: line_no,
                message: format!("expected 2 fields, found {}", fields.len()),
            });
        }
        times.push(parse_float(fields[0], line_no)?);
        values.push(parse_float(fields[1], line_no)?);
    }
    if values.is_empty() {
        return Err(Error::EmptySignal);
    }
    Ok((times, RealSignal::new(values)?))
}

/// Renders a `k,re,im` spectrum table.
pub fn render_spectrum_csv(bins: &[num_complex::Complex64]) -> String {
    let mut out = String::from("k,re,im\n");
    for (k, b) in bins.iter().enumerate() {
        out.push_str(&format!("{k},{},{}\n", b.re, b.im));
    }
    out
}

/// Parses a `k,re,im` spectrum table.
pub fn parse_spectrum_csv(text: &str) -> Result<Vec<num_complex::Complex64>> {
    let mut lines = text.lines().map(|l| l.trim_end_matches('\r'));
    match lines.next() {
        Some("k,re,im") => {}
        Some(_) => {
            return Err(Error::Csv { line: 1, message: "expected header \"k,re,im\"".into() })
        }
        None => return Err(Error::Csv { line: 1, message: "missing header".into() }),
    }
    let mut bins = Vec::new();
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Csv {
                line: line_no,
                message: format!("expected 3 fields, found {}", fields.len()),
            });
        }
        let k: usize = fields[0].parse().map_err(|_| Error::Csv {
            line: line_no,
            message: format!("invalid index {:?}", fields[0]),
        })?;
        if k != bins.len() {
            return Err(Error::Csv {
                line: line_no,
                message: format!("index {k} out of order"),
            });
        }
        bins.push(num_complex::Complex64::new(
            parse_float(fields[1], line_no)?,
            parse_float(fields[2], line_no)?,
        ));
    }
    if bins.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    Ok(bins)
}

/// Renders the before/after figure table with its canonical header.
pub fn render_figure_csv(rows: &[FigureRow]) -> String {
    let mut out = String::from("index,amp_before,phase_before,amp_after,phase_after\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.index, r.amp_before, r.phase_before, r.amp_after, r.phase_after
        ));
    }
    out
}

/// Parses the figure table back into rows.
pub fn parse_figure_csv(text: &str) -> Result<Vec<FigureRow>> {
    let mut lines = text.lines().map(|l| l.trim_end_matches('\r'));
    match lines.next() {
        Some("index,amp_before,phase_before,amp_after,phase_after") => {}
        Some(_) => {
            return Err(Error::Csv { line: 1, message: "expected figure-data header".into() })
        }
        None => return Err(Error::Csv { line: 1, message: "missing header".into() }),
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(Error::Csv {
                line: line_no,
                message: format!("expected 5 fields, found {}", fields.len()),
            });
        }
        let index: usize = fields[0].parse().map_err(|_| Error::Csv {
            line: line_no,
            message: format!("invalid index {:?}", fields[0]),
        })?;
        rows.push(FigureRow {
            index,
            amp_before: parse_float(fields[1], line_no)?,
            phase_before: parse_float(fields[2], line_no)?,
            amp_after: parse_float(fields[3], line_no)?,
            phase_after: parse_float(fields[4], line_no)?,
        });
    }
    Ok(rows)
}

/// Renders the four-column transform table `t,original,hilbert,envelope`.
pub fn render_analysis_csv(times: &[f64], original: &[f64], hilbert: &[f64], envelope: &[f64]) -> String {
    let mut out = String::from("t,original,hilbert,envelope\n");
    for i in 0..times.len() {
        out.push_str(&format!(
            "{},{},{},{}\n",
            times[i], original[i], hilbert[i], envelope[i]
        ));
    }
    out
}

/// Parsed form of the four-column transform table.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisTable {
    pub times: Vec<f64>,
    pub original: Vec<f64>,
    pub hilbert: Vec<f64>,
    pub envelope: Vec<f64>,
}

/// Parses a `t,original,hilbert,envelope` table back into columns.
pub fn parse_analysis_csv(text: &str) -> Result<AnalysisTable> {
    let mut lines = text.lines().map(|l| l.trim_end_matches('\r'));
    match lines.next() {
        Some("t,original,hilbert,envelope") => {}
        Some(_) => {
            return Err(Error::Csv {
                line: 1,
                message: "expected header \"t,original,hilbert,envelope\"".into(),
            })
        }
        None => return Err(Error::Csv { line: 1, message: "missing header".into() }),
    }
    let mut table = AnalysisTable {
        times: Vec::new(),
        original: Vec::new(),
        hilbert: Vec::new(),
        envelope: Vec::new(),
    };
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::Csv {
                line: line_no,
                message: format!("expected 4 fields, found {}", fields.len()),
            });
        }
        table.times.push(parse_float(fields[0], line_no)?);
        table.original.push(parse_float(fields[1], line_no)?);
        table.hilbert.push(parse_float(fields[2], line_no)?);
        table.envelope.push(parse_float(fields[3], line_no)?);
    }
    if table.times.is_empty() {
        return Err(Error::EmptySignal);
    }
    Ok(table)
}

fn parse_float(field: &str, line_no: usize) -> Result<f64> {
    let v: f64 = field.parse().map_err(|_| Error::Csv {
        line: line_no,
        message: format!("invalid number {field:?}"),
    })?;
    if !v.is_finite() {
        return Err(Error::Csv { line: line_no, message: format!("non-finite value {field:?}") });
    }
    Ok(v)
}
