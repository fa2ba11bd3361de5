//! `key = value` configuration files for `eil verify`.
//!
//! `field`, `cutoff`, `jobs` and `timing` set options; every other key is a
//! range parameter passed to the harness. Blank lines and `#` comments are
//! ignored.

use std::collections::BTreeMap;

use eil_core::Field;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: `{key}` needs a non-negative integer, got `{value}`")]
    NotInteger { line: usize, key: String, value: String },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub field: Option<Field>,
    pub cutoff: Option<usize>,
    pub jobs: Option<usize>,
    pub timing: Option<bool>,
    pub ranges: BTreeMap<String, usize>,
}

pub fn parse_config(text: &str) -> Result<Config, ConfigError> {
    let mut cfg = Config::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (key, value) = body
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .filter(|(k, v)| !k.is_empty() && !v.is_empty())
            .ok_or_else(|| ConfigError::Malformed { line, text: raw.to_string() })?;
        let int = || value.parse::<usize>().map_err(|_| ConfigError::NotInteger { line, key: key.to_string(), value: value.to_string() });
        match key {
            "field" => cfg.field = Some(Field::parse(value).map_err(|e| ConfigError::Invalid { line, message: e.to_string() })?),
            "cutoff" => cfg.cutoff = Some(int()?),
            "jobs" => cfg.jobs = Some(int()?),
            "timing" => {
                cfg.timing = Some(match value {
                    "true" | "1" | "yes" => true,
                    "false" | "0" | "no" => false,
                    _ => return Err(ConfigError::Invalid { line, message: format!("timing must be true or false, got `{value}`") }),
                })
            }
            _ => {
                cfg.ranges.insert(key.to_string(), int()?);
            }
        }
    }
    Ok(cfg)
}

/// Parses `k=v` from a `--range` flag.
pub fn parse_range(arg: &str) -> Result<(String, usize), ConfigError> {
    let cfg = parse_config(arg)?;
    match cfg.ranges.into_iter().next() {
        Some(kv) => Ok(kv),
        None => Err(ConfigError::Invalid { line: 1, message: format!("`{arg}` is not a range parameter") }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_options_and_ranges() {
        let cfg = parse_config("# corpus\nfield = 2\ncutoff=14\nmax_vertices = 12  # smaller\n\ntiming = no\n").unwrap();
        assert_eq!(cfg.field, Some(Field::Prime(2)));
        assert_eq!(cfg.cutoff, Some(14));
        assert_eq!(cfg.timing, Some(false));
        assert_eq!(cfg.ranges.get("max_vertices"), Some(&12));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(parse_config("max_d"), Err(ConfigError::Malformed { line: 1, .. })));
        assert!(matches!(parse_config("\nmax_d = seven"), Err(ConfigError::NotInteger { line: 2, .. })));
        assert!(matches!(parse_config("field = 6"), Err(ConfigError::Invalid { .. })));
        assert_eq!(parse_range("max_d=5"), Ok(("max_d".to_string(), 5)));
        assert!(parse_range("cutoff=5").is_err());
    }
}
