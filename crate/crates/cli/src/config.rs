//! Config files: flat `key = value` text or a flat JSON object.

use std::collections::BTreeMap;
use std::path::Path;

use crate::fail::Failure;

#[derive(Debug, Default, Clone)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|msg| Failure::usage(format!("{}: {msg}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_pairs(text)
        }
    }

    fn parse_json(text: &str) -> Result<Self, String> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let object = value.as_object().ok_or("top level must be an object")?;
        let mut entries = BTreeMap::new();
        for (key, value) in object {
            let raw = match value {
                serde_json::Value::Number(n) => n.to_string(),
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Bool(b) => b.to_string(),
                _ => return Err(format!("{key}: expected a number, string or boolean")),
            };
            entries.insert(key.clone(), raw);
        }
        Ok(Self { entries })
    }

    fn parse_pairs(text: &str) -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
            let key = key.trim();
            if entries.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(format!("line {}: duplicate key {key}", n + 1));
            }
        }
        Ok(Self { entries })
    }

    /// Rejects keys outside `known`.
    pub fn check_keys(&self, known: &[&str]) -> Result<(), Failure> {
        for key in self.entries.keys() {
            if !known.contains(&key.as_str()) {
                return Err(Failure::usage(format!("unknown config key {key}")));
            }
        }
        Ok(())
    }

    pub fn number(&self, key: &str) -> Result<Option<f64>, Failure> {
        self.entries
            .get(key)
            .map(|raw| {
                raw.parse::<f64>()
                    .map_err(|_| Failure::usage(format!("config key {key}: not a number: {raw}")))
            })
            .transpose()
    }

    pub fn text(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn flag(&self, key: &str) -> Result<bool, Failure> {
        match self.entries.get(key).map(String::as_str) {
            None | Some("false") => Ok(false),
            Some("true") => Ok(true),
            Some(other) => Err(Failure::usage(format!("config key {key}: expected true or false, got {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_formats_agree() {
        let a = Config::parse("r0 = 0.5  # dipolar\n\na=3\nlog = true\n").unwrap();
        let b = Config::parse(r#"{"r0": 0.5, "a": 3, "log": true}"#).unwrap();
        for c in [a, b] {
            assert_eq!(c.number("r0").unwrap(), Some(0.5));
            assert_eq!(c.number("a").unwrap(), Some(3.0));
            assert!(c.flag("log").unwrap());
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Config::parse("r0 0.5").is_err());
        assert!(Config::parse("a=1\na=2").is_err());
        assert!(Config::parse(r#"{"a": [1]}"#).is_err());
        let c = Config::parse("r0 = x").unwrap();
        assert!(c.number("r0").is_err());
        assert!(c.check_keys(&["a"]).is_err());
    }
}
