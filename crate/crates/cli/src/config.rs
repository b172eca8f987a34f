//! `key=value` cap files and the `SWITCHLAB_MAX_N` override.

use std::path::Path;

use switchlab::{Error, Limits, Result, MAX_SUPPORTED_N};

/// Caps given explicitly by the user; unset fields keep each verb's default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Settings {
    pub max_n: Option<usize>,
    pub max_realizations: Option<usize>,
    pub hamilton_budget: Option<u64>,
}

impl Settings {
    pub fn parse(text: &str) -> Result<Settings> {
        let mut s = Settings::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::InvalidParameter(format!("config line {}: `{raw}`", lineno + 1));
            let (key, value) = line.split_once('=').ok_or_else(bad)?;
            let value = value.trim();
            match key.trim() {
                "max_n" => s.max_n = Some(value.parse().map_err(|_| bad())?),
                "max_realizations" => s.max_realizations = Some(value.parse().map_err(|_| bad())?),
                "hamilton_budget" => s.hamilton_budget = Some(value.parse().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        Ok(s)
    }

    /// Reads the optional file, then applies `SWITCHLAB_MAX_N`.
    pub fn load(path: Option<&Path>, env_max_n: Option<&str>) -> Result<Settings> {
        let mut s = match path {
            Some(p) => {
                let text =
                    std::fs::read_to_string(p).map_err(|e| Error::InvalidParameter(format!("{}: {e}", p.display())))?;
                Settings::parse(&text)?
            }
            None => Settings::default(),
        };
        if let Some(v) = env_max_n {
            let n = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("SWITCHLAB_MAX_N=`{v}`")))?;
            s.max_n = Some(n);
        }
        if let Some(n) = s.max_n {
            if n > MAX_SUPPORTED_N {
                return Err(Error::InvalidParameter(format!(
                    "max_n={n} exceeds the supported maximum {MAX_SUPPORTED_N}"
                )));
            }
        }
        Ok(s)
    }

    pub fn apply(&self, mut limits: Limits) -> Limits {
        if let Some(n) = self.max_n {
            limits.max_n = n;
        }
        if let Some(r) = self.max_realizations {
            limits.max_realizations = r;
        }
        if let Some(b) = self.hamilton_budget {
            limits.hamilton_budget = b;
        }
        limits
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let s = Settings::parse("# caps\nmax_n = 8\nmax_realizations=50 # small\n\nhamilton_budget=7\n").unwrap();
        assert_eq!(
            s,
            Settings {
                max_n: Some(8),
                max_realizations: Some(50),
                hamilton_budget: Some(7)
            }
        );
        let l = s.apply(Limits::default());
        assert_eq!((l.max_n, l.max_realizations, l.hamilton_budget), (8, 50, 7));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(Settings::parse("max_n").is_err());
        assert!(Settings::parse("max_n=x").is_err());
        assert!(Settings::parse("colour=blue").is_err());
    }

    #[test]
    fn env_overrides_file_value() {
        let s = Settings::load(None, Some("6")).unwrap();
        assert_eq!(s.max_n, Some(6));
        assert!(Settings::load(None, Some("40")).is_err());
        assert!(Settings::load(None, Some("six")).is_err());
    }
}
