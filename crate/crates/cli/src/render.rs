use std::fmt::Write as _;

use clap::ValueEnum;
use schubert_csm::csm::{render_univariate, Method};
use schubert_csm::partition::Partition;
use schubert_csm::{Integer, Poly, Table};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json") + "\n"
}

/// Text: one `beta → coeff` line per subdiagram. CSV: `beta,coeff` with the
/// partition quoted, since it contains commas.
pub fn table(t: &Table, format: Format) -> String {
    match format {
        Format::Text => t.entries().map(|(b, v)| format!("{b} → {v}\n")).collect(),
        Format::Json => pretty(serde_json::to_value(t).expect("json")),
        Format::Csv => {
            let mut s = String::from("beta,coeff\n");
            for (b, v) in t.entries() {
                let _ = writeln!(s, "\"{b}\",{v}");
            }
            s
        }
    }
}

pub fn gamma(alpha: &Partition, beta: &Partition, values: &[(Method, Integer)], labelled: bool, format: Format) -> String {
    match format {
        Format::Text if labelled => values.iter().map(|(m, v)| format!("{m}: {v}\n")).collect(),
        Format::Text => values.iter().map(|(_, v)| format!("{v}\n")).collect(),
        Format::Json => {
            let map: Map<String, Value> = values.iter().map(|(m, v)| (m.to_string(), Value::String(v.to_string()))).collect();
            pretty(json!({ "alpha": alpha, "beta": beta, "values": map }))
        }
        Format::Csv => {
            let mut s = String::from("method,coeff\n");
            for (m, v) in values {
                let _ = writeln!(s, "{m},{v}");
            }
            s
        }
    }
}

pub fn chern_grass(n: u32, d: u32, poly: &Poly, format: Format) -> String {
    let top = poly.total_degree() as u32;
    let coeffs: Vec<Integer> = (0..=top).map(|r| poly.coefficient(&[r])).collect();
    match format {
        Format::Text => render_univariate(poly, "u") + "\n",
        Format::Json => {
            let cs: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            pretty(json!({ "n": n, "d": d, "coefficients": cs }))
        }
        Format::Csv => {
            let mut s = String::from("r,coeff\n");
            for (r, c) in coeffs.iter().enumerate() {
                let _ = writeln!(s, "{r},{c}");
            }
            s
        }
    }
}
