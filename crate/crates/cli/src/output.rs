//! CSV emission. Every file starts with comment lines recording the tool
//! version, the effective config as JSON, and the seed, so a run can be
//! reproduced from its own output; no timestamps, so identical runs produce
//! identical bytes.

use std::fmt::Write as _;

use anyhow::Result;
use serde::Serialize;

pub struct Csv {
    buf: String,
}

impl Csv {
    pub fn new<C: Serialize>(config: &C, seed: Option<u64>) -> Result<Csv> {
        let mut buf = String::new();
        writeln!(buf, "# tool=graphdiffuse v{}", env!("CARGO_PKG_VERSION"))?;
        writeln!(buf, "# config={}", serde_json::to_string(config)?)?;
        if let Some(seed) = seed {
            writeln!(buf, "# seed={seed}")?;
        }
        Ok(Csv { buf })
    }

    pub fn comment(&mut self, line: &str) {
        self.buf.push_str("# ");
        self.buf.push_str(line);
        self.buf.push('\n');
    }

    pub fn columns(&mut self, names: &[&str]) {
        self.buf.push_str(&names.join(","));
        self.buf.push('\n');
    }

    pub fn row(&mut self, fields: &[String]) {
        self.buf.push_str(&fields.join(","));
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// Shortest round-trip decimal form; deterministic for a given value.
pub fn num(v: f64) -> String {
    format!("{v}")
}
