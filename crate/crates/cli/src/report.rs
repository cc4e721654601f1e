use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use crate::config::Format;

pub const TOOL: &str = "twistlab";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
}

/// What every subcommand writes: the configuration it ran, each assertion
/// with its outcome, and the experiment-specific result.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: serde_json::Value,
    pub verdicts: Vec<Verdict>,
    pub passed: bool,
    pub result: serde_json::Value,
    #[serde(skip)]
    pub csv: Option<String>,
}

impl Report {
    pub fn new(config: serde_json::Value, verdicts: Vec<(String, bool)>, result: impl Serialize, csv: Option<String>) -> Self {
        let verdicts: Vec<Verdict> = verdicts.into_iter().map(|(name, pass)| Verdict { name, pass }).collect();
        Report {
            tool: TOOL,
            version: VERSION,
            config,
            passed: verdicts.iter().all(|v| v.pass),
            verdicts,
            result: serde_json::to_value(result).expect("results serialize"),
            csv,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    fn csv_text(&self) -> String {
        self.csv.clone().unwrap_or_default()
    }

    /// JSON to `out` (or stdout); CSV beside it with a `.csv` extension, or
    /// in its place for `--format csv`.
    pub fn write(&self, format: Format, out: Option<&Path>) -> Result<()> {
        match (format, out) {
            (Format::Json, None) => print!("{}", self.to_json()),
            (Format::Csv, None) => print!("{}", self.csv_text()),
            (Format::Json, Some(p)) => write_file(p, &self.to_json())?,
            (Format::Csv, Some(p)) => write_file(p, &self.csv_text())?,
            (Format::Both, Some(p)) => {
                write_file(p, &self.to_json())?;
                write_file(&csv_path(p), &self.csv_text())?;
            }
            (Format::Both, None) => unreachable!("rejected during validation"),
        }
        Ok(())
    }
}

pub fn csv_path(p: &Path) -> PathBuf {
    p.with_extension("csv")
}

fn write_file(p: &Path, text: &str) -> Result<()> {
    std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))
}
