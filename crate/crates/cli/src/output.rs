//! Machine-readable output records.
//!
//! CSV and JSON carry the same keys in the same order; every value is a
//! string (or absent) so the two formats agree field for field.

use std::io::Write;

use serde::{Deserialize, Serialize};

pub const COLUMNS: [&str; 7] = ["lambda", "m", "check", "value", "rhs", "residual", "status"];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub lambda: String,
    pub m: Option<String>,
    pub check: String,
    pub value: Option<String>,
    pub rhs: Option<String>,
    pub residual: Option<String>,
    pub status: String,
}

pub fn write_csv(records: &[OutputRecord], out: &mut dyn Write) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS)?;
    for r in records {
        let opt = |v: &Option<String>| v.clone().unwrap_or_default();
        w.write_record([
            r.lambda.clone(),
            opt(&r.m),
            r.check.clone(),
            opt(&r.value),
            opt(&r.rhs),
            opt(&r.residual),
            r.status.clone(),
        ])?;
    }
    w.flush()
}

pub fn write_json_lines(records: &[OutputRecord], out: &mut dyn Write) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    Ok(())
}
