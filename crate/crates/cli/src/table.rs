//! CSV assembly with fixed numeric formatting.

use csv::Writer;

use crate::failure::Failure;

/// 17 significant digits, enough to round-trip any `f64`.
pub fn float(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

pub fn opt_float(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

pub fn opt_count(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// A header plus rows, rendered in insertion order.
pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> Result<Vec<u8>, Failure> {
        let mut w = Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.into_inner().map_err(|e| Failure::Io(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for x in [0.1, 1.0 / 3.0, 5.0e-10, 1e300, -2.5] {
            assert_eq!(float(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(float(0.75), "7.5000000000000000e-1");
        assert_eq!(float(-0.0), "0.0000000000000000e0");
    }

    #[test]
    fn renders_header_then_rows() {
        let mut t = Table::new(&["N", "chi"]);
        t.push(vec!["0".into(), float(1.0)]);
        let text = String::from_utf8(t.render().unwrap()).unwrap();
        assert_eq!(text, "N,chi\n0,1.0000000000000000e0\n");
    }
}
