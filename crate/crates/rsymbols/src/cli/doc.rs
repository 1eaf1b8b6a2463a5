//! The emitted document: labelled tables of exact values, as JSON or CSV.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Mat, ParamField};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub name: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    /// Row-major exact values in the forms of `algebra::json`.
    pub entries: Vec<Vec<Value>>,
    /// The same values rendered as text.
    pub text: Vec<Vec<String>>,
}

impl Table {
    pub fn from_mat<F: ParamField>(name: &str, rows: Vec<String>, cols: Vec<String>, m: &Mat<F>) -> Self {
        let entries = (0..m.rows()).map(|i| m.row(i).iter().map(ParamField::to_json).collect()).collect();
        let text = (0..m.rows()).map(|i| m.row(i).iter().map(ParamField::render).collect()).collect();
        Table { name: name.into(), rows, cols, entries, text }
    }

    /// A table whose cells are already plain JSON scalars or strings.
    pub fn plain(name: &str, rows: Vec<String>, cols: Vec<String>, entries: Vec<Vec<Value>>) -> Self {
        let text = entries.iter().map(|row| row.iter().map(value_text).collect()).collect();
        Table { name: name.into(), rows, cols, entries, text }
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema_version: u32,
    pub kind: String,
    pub config: Value,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, Value>,
    pub tables: Vec<Table>,
}

impl Document {
    pub fn new(kind: &str, config: Value) -> Self {
        Document { schema_version: SCHEMA_VERSION, kind: kind.into(), config, meta: BTreeMap::new(), tables: Vec::new() }
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn to_json(&self) -> Vec<u8> {
        let mut out = serde_json::to_vec_pretty(self).expect("document serializes");
        out.push(b'\n');
        out
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self, serde_json::Error> {
        serde_json::from_slice(bytes)
    }

    /// One record per cell: table, row index, row label, column index, column label, text.
    pub fn to_csv(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["table", "row", "row_label", "col", "col_label", "value"]).expect("in-memory write");
        for t in &self.tables {
            for (i, row) in t.text.iter().enumerate() {
                for (j, cell) in row.iter().enumerate() {
                    w.write_record([t.name.as_str(), &i.to_string(), &t.rows[i], &j.to_string(), &t.cols[j], cell])
                        .expect("in-memory write");
                }
            }
        }
        w.into_inner().expect("in-memory flush")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }

    pub fn emit(self, doc: &Document) -> Vec<u8> {
        match self {
            Format::Json => doc.to_json(),
            Format::Csv => doc.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Cyclotomic, RatFunc, UniPoly};

    #[test]
    fn csv_renders_polynomials() {
        let m = Mat::from_rows(&1, vec![vec![RatFunc::from_poly(UniPoly::from_ints(1, &[1, 0, 1]))]]);
        let mut d = Document::new("test", Value::Null);
        d.tables.push(Table::from_mat("m", vec!["a,b".into()], vec!["c".into()], &m));
        let csv = String::from_utf8(d.to_csv()).unwrap();
        assert_eq!(csv, "table,row,row_label,col,col_label,value\nm,0,\"a,b\",0,c,1 + t^2\n");
    }

    #[test]
    fn cyclotomic_cell() {
        let m = Mat::from_rows(&4, vec![vec![Cyclotomic::zeta_pow(4, 1)]]);
        let t = Table::from_mat("z", vec!["r".into()], vec!["c".into()], &m);
        assert_eq!(t.entries[0][0], serde_json::json!({"order": 4, "coeffs": [0, 1]}));
    }

    #[test]
    fn json_round_trip() {
        let m = Mat::from_rows(&2, vec![vec![RatFunc::t_pow(2, -1), RatFunc::t(2)]]);
        let mut d = Document::new("test", serde_json::json!({"n": 1}));
        d.meta.insert("note".into(), Value::from("x"));
        d.tables.push(Table::from_mat("m", vec!["0".into()], vec!["a".into(), "b".into()], &m));
        let bytes = d.to_json();
        assert_eq!(Document::from_json(&bytes).unwrap().to_json(), bytes);
    }
}
