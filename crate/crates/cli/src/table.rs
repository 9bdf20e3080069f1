use std::io::Write;

use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Float)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format!("{x:.16e}"),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => Value::from(*i),
            Cell::Float(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::from(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> std::io::Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.flush()
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> =
                            self.columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.json())).collect();
                        Value::Object(obj)
                    })
                    .collect();
                let mut out = out;
                serde_json::to_writer_pretty(&mut out, &rows)?;
                writeln!(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_floats() {
        let mut t = Table::new(&["E", "x"]);
        t.push(vec![Cell::Float(0.1), Cell::Float(-1.0 / 3.0)]);
        let mut buf = Vec::new();
        t.write(Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let line = text.lines().nth(1).unwrap();
        let back: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(back, vec![0.1, -1.0 / 3.0]);
    }

    #[test]
    fn json_keeps_column_order() {
        let mut t = Table::new(&["z", "a"]);
        t.push(vec![Cell::Int(1), Cell::Empty]);
        let mut buf = Vec::new();
        t.write(Format::Json, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.find("\"z\"").unwrap() < text.find("\"a\"").unwrap());
        assert!(text.contains("null"));
    }
}
