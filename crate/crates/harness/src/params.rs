//! `key=value,key=value` parameter lists.

use std::collections::BTreeMap;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("malformed parameter {0:?} (expected key=value)")]
    Malformed(String),
    #[error("parameter {0:?} given twice")]
    Duplicate(String),
    #[error("missing required parameter {0:?}")]
    Missing(String),
    #[error("parameter {key}={value:?}: {reason}")]
    Invalid { key: String, value: String, reason: String },
    #[error("unknown parameter(s): {0}")]
    Unknown(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    values: BTreeMap<String, String>,
}

impl FromStr for Params {
    type Err = ParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = BTreeMap::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| ParamError::Malformed(item.to_string()))?;
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() {
                return Err(ParamError::Malformed(item.to_string()));
            }
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(ParamError::Duplicate(k.to_string()));
            }
        }
        Ok(Params { values })
    }
}

impl Params {
    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, ParamError>
    where
        T::Err: std::fmt::Display,
    {
        self.raw(key)
            .map(|v| {
                v.parse::<T>().map_err(|e| ParamError::Invalid {
                    key: key.to_string(),
                    value: v.to_string(),
                    reason: e.to_string(),
                })
            })
            .transpose()
    }

    pub fn get_or<T: FromStr>(&self, key: &str, default: T) -> Result<T, ParamError>
    where
        T::Err: std::fmt::Display,
    {
        Ok(self.get(key)?.unwrap_or(default))
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T, ParamError>
    where
        T::Err: std::fmt::Display,
    {
        self.get(key)?.ok_or_else(|| ParamError::Missing(key.to_string()))
    }

    /// Fails if any key is outside `allowed`.
    pub fn only(&self, allowed: &[&str]) -> Result<(), ParamError> {
        let unknown: Vec<&str> =
            self.values.keys().map(String::as_str).filter(|k| !allowed.contains(k)).collect();
        if unknown.is_empty() {
            Ok(())
        } else {
            Err(ParamError::Unknown(unknown.join(", ")))
        }
    }
}

/// Parses `lo..hi` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (lo, hi) = (parse(a)?, parse(b)?);
            if lo > hi {
                return Err(format!("empty range {s:?}"));
            }
            Ok((lo, hi))
        }
        None => parse(s).map(|v| (v, v)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists() {
        let p: Params = "n=10, p=0.5,seed=7".parse().unwrap();
        assert_eq!(p.require::<usize>("n").unwrap(), 10);
        assert_eq!(p.get_or("p", 0.0).unwrap(), 0.5);
        assert_eq!(p.get::<u64>("missing").unwrap(), None);
        assert!(p.only(&["n", "p", "seed"]).is_ok());
        assert!(matches!(p.only(&["n"]), Err(ParamError::Unknown(_))));
        assert!(matches!("n".parse::<Params>(), Err(ParamError::Malformed(_))));
        assert!(matches!("n=1,n=2".parse::<Params>(), Err(ParamError::Duplicate(_))));
        assert!(matches!(p.require::<usize>("p"), Err(ParamError::Invalid { .. })));
        assert_eq!("".parse::<Params>().unwrap(), Params::default());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..20"), Ok((4, 20)));
        assert_eq!(parse_range("4..=20"), Ok((4, 20)));
        assert_eq!(parse_range("7"), Ok((7, 7)));
        assert!(parse_range("5..2").is_err());
    }
}
