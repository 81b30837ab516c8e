use confined_hydrogen::{Evaluation, QuantumState, SolverConfig};
use serde::{Deserialize, Serialize};

use crate::args::Format;

/// Measured values of one solved point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Values {
    #[serde(rename = "E")]
    pub energy: f64,
    #[serde(rename = "I_r")]
    pub i_r: f64,
    #[serde(rename = "I_p")]
    pub i_p: f64,
    #[serde(rename = "I_t")]
    pub i_t: f64,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub r_m2: f64,
    pub r_m1: f64,
    pub r_p2: f64,
    pub p_p2: f64,
    pub p_m2: f64,
    pub norm_deficit: f64,
    pub grid_size_used: usize,
}

/// One output row. A failed point keeps its coordinates and carries the
/// error instead of values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub n: u32,
    pub l: u32,
    pub m: i32,
    #[serde(rename = "Z")]
    pub z: f64,
    pub r_c: f64,
    #[serde(flatten)]
    pub values: Option<Values>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub const HEADER: [&str; 19] = [
    "n",
    "l",
    "m",
    "Z",
    "r_c",
    "E",
    "I_r",
    "I_p",
    "I_t",
    "lower_bound",
    "upper_bound",
    "r_m2",
    "r_m1",
    "r_p2",
    "p_p2",
    "p_m2",
    "norm_deficit",
    "grid_size_used",
    "error",
];

impl ResultRow {
    pub fn from_evaluation(ev: &Evaluation) -> Self {
        let r = &ev.report;
        let e = &r.expectations;
        let values = Values {
            energy: ev.energy,
            i_r: r.i_r,
            i_p: r.i_p,
            i_t: r.i_t,
            lower_bound: r.lower_bound,
            upper_bound: r.upper_bound,
            r_m2: e.r_m2,
            r_m1: e.r_m1,
            r_p2: e.r_p2,
            p_p2: e.p_p2,
            p_m2: e.p_m2,
            norm_deficit: ev.norm_deficit,
            grid_size_used: ev.grid_size,
        };
        let s = &r.state;
        Self { n: s.n, l: s.l, m: s.m, z: s.z, r_c: s.r_c, values: Some(values), error: None }
    }

    pub fn failed(state: &QuantumState, error: impl ToString) -> Self {
        Self {
            n: state.n,
            l: state.l,
            m: state.m,
            z: state.z,
            r_c: state.r_c,
            values: None,
            error: Some(error.to_string()),
        }
    }

    fn csv_fields(&self) -> Vec<String> {
        let mut out = vec![self.n.to_string(), self.l.to_string(), self.m.to_string(), float(self.z), float(self.r_c)];
        match &self.values {
            Some(v) => {
                out.extend(
                    [
                        v.energy,
                        v.i_r,
                        v.i_p,
                        v.i_t,
                        v.lower_bound,
                        v.upper_bound,
                        v.r_m2,
                        v.r_m1,
                        v.r_p2,
                        v.p_p2,
                        v.p_m2,
                        v.norm_deficit,
                    ]
                    .map(float),
                );
                out.push(v.grid_size_used.to_string());
            }
            None => out.extend(std::iter::repeat_n(String::new(), 13)),
        }
        out.push(self.error.as_deref().map(quote).unwrap_or_default());
        out
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn float(x: f64) -> String {
    format!("{x:?}")
}

/// RFC 4180 quoting, applied only when needed.
pub fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn to_csv(rows: &[ResultRow]) -> String {
    let mut out = HEADER.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_fields().join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct Meta<'a> {
    version: &'a str,
    config: &'a SolverConfig,
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    meta: Meta<'a>,
    rows: &'a [T],
}

pub fn to_json<T: Serialize>(rows: &[T], config: &SolverConfig) -> String {
    let doc = Document { meta: Meta { version: env!("CARGO_PKG_VERSION"), config }, rows };
    let mut text = serde_json::to_string_pretty(&doc).expect("rows serialize");
    text.push('\n');
    text
}

pub fn render(rows: &[ResultRow], format: Format, config: &SolverConfig) -> String {
    match format {
        Format::Csv => to_csv(rows),
        Format::Json => to_json(rows, config),
    }
}
