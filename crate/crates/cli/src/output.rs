use serde_json::Value;

use crate::args::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A mathematical check failed.
    Fail,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Self::Pass => 0,
            Self::Fail => 1,
        }
    }

    pub fn from_passed(passed: bool) -> Self {
        if passed {
            Self::Pass
        } else {
            Self::Fail
        }
    }
}

/// Rendered output of a command together with its exit status.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub text: String,
}

/// The three renderings of a result; the requested one is kept.
pub(crate) struct Rendered {
    pub plain: String,
    pub json: Value,
    pub csv: String,
}

impl Rendered {
    pub fn into_outcome(self, format: Format, status: Status) -> Outcome {
        let mut text = match format {
            Format::Plain => self.plain,
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialize"),
            Format::Csv => self.csv,
        };
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Outcome { status, text }
    }
}

/// Quotes a CSV field when needed.
pub(crate) fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
