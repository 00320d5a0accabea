//! Flat `section.key = value` configuration files.
//!
//! ```text
//! # comment
//! problem.L = "x^2 + u^2"
//! operator.alpha = 0.5
//! grid.n = 1001      # trailing comments are fine after bare values
//! ```

use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Config::default();
        for (no, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = split_assignment(trimmed).map_err(|m| Error::Usage(format!("line {}: {m}", no + 1)))?;
            if cfg.entries.insert(key.clone(), value).is_some() {
                return Err(Error::Usage(format!("line {}: duplicate key `{key}`", no + 1)));
            }
        }
        Ok(cfg)
    }

    /// Apply a `key=value` override; later overrides win.
    pub fn set(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = split_assignment(assignment).map_err(|m| Error::Usage(format!("--set {assignment}: {m}")))?;
        self.entries.insert(key, value);
        Ok(())
    }

    pub fn insert(&mut self, key: &str, value: String) {
        self.entries.insert(key.to_string(), value);
    }

    pub fn remove(&mut self, key: &str) -> Option<String> {
        self.entries.remove(key)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn has(&self, key: &str) -> bool {
        self.entries.contains_key(key)
    }

    pub fn string(&self, key: &str) -> Result<&str> {
        self.get(key).ok_or_else(|| Error::MissingKey(key.to_string()))
    }

    pub fn f64(&self, key: &str) -> Result<f64> {
        parse_f64(key, self.string(key)?)
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64> {
        self.get(key).map_or(Ok(default), |v| parse_f64(key, v))
    }

    pub fn usize(&self, key: &str) -> Result<usize> {
        parse_usize(key, self.string(key)?)
    }

    pub fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        self.get(key).map_or(Ok(default), |v| parse_usize(key, v))
    }

    pub fn entries(&self) -> &BTreeMap<String, String> {
        &self.entries
    }
}

fn parse_f64(key: &str, v: &str) -> Result<f64> {
    match v.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(Error::BadValue { key: key.into(), msg: format!("expected a finite number, got `{v}`") }),
    }
}

fn parse_usize(key: &str, v: &str) -> Result<usize> {
    v.parse::<usize>()
        .map_err(|_| Error::BadValue { key: key.into(), msg: format!("expected a non-negative integer, got `{v}`") })
}

fn split_assignment(s: &str) -> std::result::Result<(String, String), String> {
    let Some((key, rest)) = s.split_once('=') else {
        return Err("expected `key = value`".into());
    };
    let key = key.trim();
    if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.') {
        return Err(format!("invalid key `{key}`"));
    }
    Ok((key.to_string(), parse_value(rest.trim())?))
}

fn parse_value(s: &str) -> std::result::Result<String, String> {
    let Some(body) = s.strip_prefix('"') else {
        let bare = s.split('#').next().unwrap_or("").trim();
        if bare.is_empty() {
            return Err("empty value".into());
        }
        return Ok(bare.to_string());
    };
    let mut out = String::new();
    let mut chars = body.chars();
    loop {
        match chars.next() {
            None => return Err("unterminated string".into()),
            Some('"') => break,
            Some('\\') => match chars.next() {
                Some(c @ ('"' | '\\')) => out.push(c),
                Some(c) => return Err(format!("unknown escape `\\{c}`")),
                None => return Err("unterminated string".into()),
            },
            Some(c) => out.push(c),
        }
    }
    let tail = chars.as_str().trim();
    if !(tail.is_empty() || tail.starts_with('#')) {
        return Err(format!("unexpected text after string: `{tail}`"));
    }
    Ok(out)
}
