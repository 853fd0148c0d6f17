//! JSON Lines reports with a CSV projection.
//!
//! A report is a `header` record (schema version, RNG identifier, full
//! config), one `row` record per instance in config order, a `summary`
//! record, and finally a `meta` record holding wall-clock timings. Only the
//! `meta` record varies between identical runs.

use std::collections::BTreeMap;

use adhc_core::generators::RNG_ALGORITHM;
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentKind {
    Sharpness,
    Sweep,
    Crosscheck,
    Analyze,
}

/// Everything needed to rerun an experiment; embedded in every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub parameters: BTreeMap<String, Value>,
    pub output_path: Option<String>,
}

impl ExperimentConfig {
    pub fn new(kind: ExperimentKind) -> Self {
        ExperimentConfig { kind, parameters: BTreeMap::new(), output_path: None }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), serde_json::to_value(value).expect("serialisable parameter"));
        self
    }
}

pub trait Row: Serialize {
    fn outcome(&self) -> Outcome;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

impl Summary {
    /// 0 when every row passes, 1 when any row fails, 2 when the only
    /// non-passing rows are inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.fail > 0 {
            1
        } else if self.inconclusive > 0 {
            2
        } else {
            0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report<R> {
    pub config: ExperimentConfig,
    pub rows: Vec<R>,
    /// Wall-clock time per row; reported only in the `meta` record.
    pub millis: Vec<u128>,
    pub threads: usize,
}

#[derive(Serialize)]
struct Tagged<'a, T: Serialize> {
    record: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

fn line<T: Serialize>(record: &'static str, body: &T) -> String {
    serde_json::to_string(&Tagged { record, body }).expect("report records serialise")
}

impl<R: Row> Report<R> {
    pub fn summary(&self) -> Summary {
        let mut s = Summary { total: self.rows.len(), ..Summary::default() };
        for r in &self.rows {
            match r.outcome() {
                Outcome::Pass => s.pass += 1,
                Outcome::Fail => s.fail += 1,
                Outcome::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }

    pub fn exit_code(&self) -> i32 {
        self.summary().exit_code()
    }

    fn header(&self) -> Value {
        json!({ "schema_version": SCHEMA_VERSION, "rng": RNG_ALGORITHM, "config": self.config })
    }

    /// The deterministic part of the report: header, rows and summary.
    pub fn deterministic_lines(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.rows.len() + 2);
        out.push(line("header", &self.header()));
        out.extend(self.rows.iter().map(|r| line("row", r)));
        out.push(line("summary", &self.summary()));
        out
    }

    pub fn to_jsonl(&self) -> String {
        let mut lines = self.deterministic_lines();
        lines.push(line("meta", &json!({ "row_millis": self.millis, "threads": self.threads })));
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }

    /// Rows only, one column per top-level field; nested values are written
    /// as JSON text.
    pub fn to_csv(&self) -> anyhow::Result<String> {
        let values: Vec<Value> = self.rows.iter().map(serde_json::to_value).collect::<Result<_, _>>()?;
        let mut columns: Vec<String> = Vec::new();
        for v in &values {
            if let Value::Object(map) = v {
                for k in map.keys() {
                    if !columns.contains(k) {
                        columns.push(k.clone());
                    }
                }
            }
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&columns)?;
        for v in &values {
            let record: Vec<String> = columns
                .iter()
                .map(|c| match v.get(c) {
                    None | Some(Value::Null) => String::new(),
                    Some(Value::String(s)) => s.clone(),
                    Some(other) => other.to_string(),
                })
                .collect();
            w.write_record(&record)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}
