//! Result rows and their CSV / JSON-lines forms.
//!
//! Big integers are serialized as decimal strings in both formats; JSON
//! numbers would silently lose precision past 2^53.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::BigCount;

/// One row of the counting output: L(n), H(n), D(n), D0(n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub n: u32,
    pub l: BigCount,
    pub h: BigCount,
    pub d: BigCount,
    pub d0: BigCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountReport {
    pub rows: Vec<CountRow>,
}

impl CountReport {
    pub const CSV_HEADER: &'static str = "n,L,H,D,D0";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            writeln!(out, "{},{},{},{},{}", r.n, r.l, r.h, r.d, r.d0).unwrap();
        }
        out
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let v = serde_json::json!({
                "n": r.n,
                "L": r.l.to_string(),
                "H": r.h.to_string(),
                "D": r.d.to_string(),
                "D0": r.d0.to_string(),
            });
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next() {
            Some(h) if h == Self::CSV_HEADER => {}
            other => {
                return Err(Error::InvalidArgument(format!(
                    "bad count CSV header: {other:?}"
                )))
            }
        }
        let mut rows = Vec::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 5 {
                return Err(Error::InvalidArgument(format!("bad CSV row: {line}")));
            }
            let big = |s: &str| {
                BigCount::from_str(s)
                    .map_err(|e| Error::InvalidArgument(format!("bad count {s}: {e}")))
            };
            rows.push(CountRow {
                n: fields[0]
                    .parse()
                    .map_err(|e| Error::InvalidArgument(format!("bad n: {e}")))?,
                l: big(fields[1])?,
                h: big(fields[2])?,
                d: big(fields[3])?,
                d0: big(fields[4])?,
            });
        }
        Ok(CountReport { rows })
    }
}

/// Monte-Carlo estimate of the graphical fraction D(n)/E(n).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimateReport {
    pub n: u32,
    pub samples: u64,
    pub seed: u64,
    pub hits: u64,
    pub ratio: f64,
    pub stderr: f64,
    /// (formula name, log2-scale value), in request order.
    pub conjectures: Vec<(String, f64)>,
}

impl EstimateReport {
    pub fn csv_header(&self) -> String {
        let mut h = String::from("n,samples,seed,hits,ratio,stderr");
        for (name, _) in &self.conjectures {
            h.push(',');
            h.push_str(name);
        }
        h
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.csv_header();
        out.push('\n');
        write!(
            out,
            "{},{},{},{},{},{}",
            self.n, self.samples, self.seed, self.hits, self.ratio, self.stderr
        )
        .unwrap();
        for (_, v) in &self.conjectures {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
        out
    }

    pub fn to_json_lines(&self) -> String {
        let mut obj = serde_json::Map::new();
        obj.insert("n".into(), self.n.into());
        obj.insert("samples".into(), self.samples.into());
        obj.insert("seed".into(), self.seed.into());
        obj.insert("hits".into(), self.hits.into());
        obj.insert("ratio".into(), self.ratio.into());
        obj.insert("stderr".into(), self.stderr.into());
        for (name, v) in &self.conjectures {
            obj.insert(name.clone(), (*v).into());
        }
        let mut out = serde_json::Value::Object(obj).to_string();
        out.push('\n');
        out
    }
}
