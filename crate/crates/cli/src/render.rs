//! Text and JSON rendering.
//!
//! JSON is printed on one line with a space after every `:` and `,`, e.g.
//! `{"[1]|[]": 2, "[]|[1]": 1}`. Object keys keep insertion order, which for
//! multiplicity vectors is the greatest-first label order.

use std::io;

use octarep::{MultiplicityVector, RestrictionMatrix};
use serde::Serialize;
use serde_json::ser::Formatter;
use serde_json::{Map, Value};

struct Spaced;

impl Formatter for Spaced {
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            writer.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            writer.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        writer.write_all(b": ")
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Spaced);
    value.serialize(&mut ser).expect("in-memory JSON serialization");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

pub fn multiplicities_value(v: &MultiplicityVector) -> Value {
    let map: Map<String, Value> = v.iter().map(|(b, m)| (b.to_string(), Value::from(m))).collect();
    Value::Object(map)
}

pub fn multiplicities_json(v: &MultiplicityVector) -> String {
    json(&multiplicities_value(v))
}

pub fn multiplicities_text(v: &MultiplicityVector) -> String {
    let width = v.iter().map(|(b, _)| b.to_string().len()).max().unwrap_or(0);
    v.iter().map(|(b, m)| format!("{:<width$}  {m}\n", b.to_string())).collect()
}

/// Aligned grid with row labels on the left and column labels on top.
pub fn grid<R: ToString, C: ToString, V: ToString>(rows: &[R], columns: &[C], values: &[Vec<V>]) -> String {
    let rows: Vec<String> = rows.iter().map(ToString::to_string).collect();
    let columns: Vec<String> = columns.iter().map(ToString::to_string).collect();
    let cells: Vec<Vec<String>> = values.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let label_width = rows.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns.len())
        .map(|j| cells.iter().map(|r| r[j].len()).chain([columns[j].len()]).max().unwrap_or(0))
        .collect();
    let mut out = format!("{:label_width$}", "");
    for (c, w) in columns.iter().zip(&widths) {
        out.push_str(&format!("  {c:>w$}"));
    }
    out.push('\n');
    for (label, row) in rows.iter().zip(&cells) {
        out.push_str(&format!("{label:<label_width$}"));
        for (v, w) in row.iter().zip(&widths) {
            out.push_str(&format!("  {v:>w$}"));
        }
        out.push('\n');
    }
    out
}

pub fn restriction_matrix_value(r: &RestrictionMatrix) -> Value {
    let mut map = Map::new();
    map.insert("n".into(), r.n.into());
    map.insert("m".into(), r.m.into());
    map.insert("rows".into(), r.rows.iter().map(|b| Value::from(b.to_string())).collect());
    map.insert("columns".into(), r.columns.iter().map(|b| Value::from(b.to_string())).collect());
    map.insert("entries".into(), serde_json::to_value(&r.entries).expect("integer matrix"));
    Value::Object(map)
}
