//! Flat key=value configuration files.
//!
//! One `key = value` pair per line; blank lines and lines starting with
//! `#` are ignored. Keys mirror the command-line flag names; values use
//! the same syntax as the corresponding flag. Unrecognized or duplicate
//! keys are usage errors, so typos fail loudly instead of being ignored.

use std::collections::BTreeMap;
use std::path::Path;

use crate::CliError;

/// Keys a config file may set, mirroring the long flag names.
pub const RECOGNIZED_KEYS: &[&str] = &[
    "eta0",
    "nb0",
    "n",
    "delta",
    "u",
    "asym",
    "box",
    "grid",
    "eta-range",
    "nb-range",
    "n-range",
    "u-range",
    "u-levels",
    "points",
    "cutoffs",
    "format",
];

#[derive(Debug, Default)]
pub struct FileConfig {
    values: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|err| CliError::Usage(format!("config {}: {err}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for (index, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "config line {}: expected key=value, got `{raw}`",
                    index + 1
                )));
            };
            let key = key.trim();
            let value = value.trim();
            if !RECOGNIZED_KEYS.contains(&key) {
                return Err(CliError::Usage(format!(
                    "config line {}: unrecognized key `{key}`",
                    index + 1
                )));
            }
            if values.insert(key.to_string(), value.to_string()).is_some() {
                return Err(CliError::Usage(format!(
                    "config line {}: duplicate key `{key}`",
                    index + 1
                )));
            }
        }
        Ok(Self { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(|s| s.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_blanks_and_pairs() {
        let cfg = FileConfig::parse("# defaults\n\n eta0 = 0.85 \nnb0=0.2\n").unwrap();
        assert_eq!(cfg.get("eta0"), Some("0.85"));
        assert_eq!(cfg.get("nb0"), Some("0.2"));
        assert_eq!(cfg.get("delta"), None);
    }

    #[test]
    fn rejects_unknown_duplicate_and_malformed_keys() {
        assert!(matches!(
            FileConfig::parse("speed=9"),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            FileConfig::parse("eta0=0.9\neta0=0.8"),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            FileConfig::parse("just a line"),
            Err(CliError::Usage(_))
        ));
    }
}
