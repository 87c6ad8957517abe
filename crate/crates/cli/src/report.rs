//! CSV reports: a `# schema=1` comment, a header, then rows in a fixed
//! order.

use anyhow::Result;

pub const SCHEMA_LINE: &str = "# schema=1";

/// Twelve significant digits, printed in shortest form. Rounding hides the
/// last bits of accumulated error, so an exact 6 reads `6.0`.
pub fn num(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    format!("{rounded:?}")
}

/// Full precision, for residuals and other quantities that should be small.
pub fn exact(x: f64) -> String {
    format!("{x:?}")
}

pub fn flag(b: bool) -> String {
    b.to_string()
}

pub struct Report {
    writer: csv::Writer<Vec<u8>>,
}

impl Report {
    pub fn new(header: &[&str]) -> Result<Self> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(header)?;
        Ok(Self { writer })
    }

    pub fn row<I, S>(&mut self, fields: I) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields)?;
        Ok(())
    }

    /// Shorthand for two-column `quantity,value` reports.
    pub fn pair(&mut self, quantity: &str, value: impl Into<String>) -> Result<()> {
        self.row([quantity.to_string(), value.into()])
    }

    pub fn finish(self) -> Result<String> {
        let body = String::from_utf8(self.writer.into_inner().map_err(|e| e.into_error())?)?;
        Ok(format!("{SCHEMA_LINE}\n{body}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(num(6.0), "6.0");
        assert_eq!(num(6.000_000_000_000_001), "6.0");
        assert_eq!(num(1.0 / std::f64::consts::PI), "0.318309886184");
        assert_eq!(num(0.96), "0.96");
        assert_eq!(exact(3.2e-16), "3.2e-16");
    }

    #[test]
    fn schema_header() {
        let mut r = Report::new(&["quantity", "value"]).unwrap();
        r.pair("x", num(1.5)).unwrap();
        assert_eq!(r.finish().unwrap(), "# schema=1\nquantity,value\nx,1.5\n");
    }
}
