//! Text forms of an [`Endo`].
//!
//! Tuple form lists every value: `0,0,1,2`. Run-length form groups equal
//! values into whitespace-separated `value_length` tokens, so `0_4 2_2 8_4`
//! is four 0s, two 2s and four 8s. A bare `v` means a run of one and is
//! what the formatter emits for singleton runs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Endo;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotationStyle {
    Tuple,
    #[default]
    RunLength,
}

impl FromStr for NotationStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tuple" => Ok(NotationStyle::Tuple),
            "runlength" | "run-length" | "run_length" => Ok(NotationStyle::RunLength),
            _ => Err(Error::Parse { input: s.to_string(), reason: "expected `tuple` or `runlength`".into() }),
        }
    }
}

impl fmt::Display for NotationStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotationStyle::Tuple => "tuple",
            NotationStyle::RunLength => "runlength",
        })
    }
}

pub(super) fn format(e: &Endo, style: NotationStyle) -> String {
    match style {
        NotationStyle::Tuple => e.values().iter().map(u32::to_string).collect::<Vec<_>>().join(","),
        NotationStyle::RunLength => {
            let mut out = String::new();
            let values = e.values();
            let mut start = 0;
            while start < values.len() {
                let value = values[start];
                let len = values[start..].iter().take_while(|&&v| v == value).count();
                if !out.is_empty() {
                    out.push(' ');
                }
                if len == 1 {
                    out.push_str(&value.to_string());
                } else {
                    out.push_str(&format!("{value}_{len}"));
                }
                start += len;
            }
            out
        }
    }
}

pub(super) fn parse(text: &str, n: u32) -> Result<Endo> {
    let malformed = |reason: &str| Error::Parse { input: text.to_string(), reason: reason.to_string() };
    let number = |token: &str| -> Result<u64> {
        token.trim().parse::<u64>().map_err(|_| malformed(&format!("`{}` is not a number", token.trim())))
    };
    let as_value = |v: u64| u32::try_from(v).map_err(|_| malformed("value does not fit a chain element"));

    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(malformed("empty input"));
    }

    let values: Vec<u32> = if trimmed.contains(',') {
        trimmed.split(',').map(|t| number(t).and_then(as_value)).collect::<Result<_>>()?
    } else {
        let mut values = Vec::new();
        for token in trimmed.split_whitespace() {
            let (value, len) = match token.split_once('_') {
                Some((value, len)) => (number(value)?, number(len)?),
                None => (number(token)?, 1),
            };
            if len == 0 {
                return Err(malformed("run lengths must be positive"));
            }
            if values.len() as u64 + len > n as u64 {
                return Err(Error::LengthMismatch {
                    expected: n as usize,
                    found: (values.len() as u64 + len) as usize,
                });
            }
            values.extend(std::iter::repeat_n(as_value(value)?, len as usize));
        }
        values
    };
    Endo::new(n, values)
}
