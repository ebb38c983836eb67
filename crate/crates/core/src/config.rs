//! Campaign configuration and its `key=value` file form.

use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{int, parse, Rational};

pub const DEFAULT_DENOMINATOR_BOUND: i64 = 64;
pub const DEFAULT_SEED: u64 = 0x5eed_1998;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" | "txt" => Ok(Format::Text),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CampaignConfig {
    pub n_values: Vec<usize>,
    pub trials: usize,
    pub denominator_bound: i64,
    pub seed: u64,
    #[serde(serialize_with = "crate::affine::ser_rational")]
    pub boundary_fraction: Rational,
    pub level_range: Vec<i64>,
    pub output_path: Option<PathBuf>,
    pub tolerance: f64,
    /// Execution detail only; reports do not depend on it.
    #[serde(skip)]
    pub parallel: bool,
    /// Adds wall-clock timing to reports, which then stop being reproducible.
    #[serde(skip)]
    pub record_timing: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            n_values: vec![3],
            trials: 100,
            denominator_bound: DEFAULT_DENOMINATOR_BOUND,
            seed: DEFAULT_SEED,
            boundary_fraction: int(0),
            level_range: (1..=5).collect(),
            output_path: None,
            tolerance: 1e-8,
            parallel: true,
            record_timing: false,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() {
            return Err(Error::InvalidInput("no values of N given".into()));
        }
        if let Some(n) = self.n_values.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidInput(format!("N must be >= 2, got {n}")));
        }
        if self.trials == 0 {
            return Err(Error::InvalidInput("trials must be >= 1".into()));
        }
        if self.denominator_bound < 2 {
            return Err(Error::InvalidInput("denominator bound must be >= 2".into()));
        }
        if self.boundary_fraction < int(0) || self.boundary_fraction > int(1) {
            return Err(Error::InvalidInput(
                "boundary fraction must lie in [0, 1]".into(),
            ));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidInput("tolerance must be positive".into()));
        }
        Ok(())
    }

    /// Applies one `key=value` setting. Keys are the command-line flag names or
    /// the field names of the JSON config block.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let bad = |what: &str| Error::InvalidInput(format!("bad value {value:?} for {what}"));
        match key.trim() {
            "N" | "n" | "n_values" => {
                self.n_values = value
                    .split(',')
                    .map(|s| s.trim().parse().map_err(|_| bad("N")))
                    .collect::<Result<_>>()?
            }
            "trials" => self.trials = value.trim().parse().map_err(|_| bad("trials"))?,
            "den-bound" | "denominator_bound" => {
                self.denominator_bound = value.trim().parse().map_err(|_| bad("den-bound"))?
            }
            "seed" => self.seed = value.trim().parse().map_err(|_| bad("seed"))?,
            "boundary-fraction" | "boundary_fraction" => {
                self.boundary_fraction = parse(value).ok_or_else(|| bad("boundary-fraction"))?
            }
            "level" => self.level_range = vec![value.trim().parse().map_err(|_| bad("level"))?],
            "levels" | "level_range" if value.contains("..") => {
                self.level_range = parse_range(value)?
            }
            "levels" | "level_range" => {
                self.level_range = value
                    .split(',')
                    .map(|s| s.trim().parse().map_err(|_| bad("levels")))
                    .collect::<Result<_>>()?
            }
            "out" | "output_path" => self.output_path = Some(PathBuf::from(value.trim())),
            "tolerance" => self.tolerance = value.trim().parse().map_err(|_| bad("tolerance"))?,
            "parallel" => self.parallel = value.trim().parse().map_err(|_| bad("parallel"))?,
            other => return Err(Error::InvalidInput(format!("unknown config key {other:?}"))),
        }
        Ok(())
    }

    /// Reads `key=value` lines; blank lines and `#` comments are ignored.
    pub fn apply_file(&mut self, text: &str) -> Result<()> {
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidInput(format!("line {}: expected key=value", lineno + 1))
            })?;
            self.set(key, value)?;
        }
        Ok(())
    }
}

/// Parses `A..B` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<Vec<i64>> {
    let bad = || Error::InvalidInput(format!("bad range {s:?}, expected A..B"));
    match s.trim().split_once("..") {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn file_settings_apply() {
        let mut c = CampaignConfig::default();
        c.apply_file(
            "# demo\nN = 2,3\ntrials=7\nboundary-fraction=1/4\nlevels=1..3\n\nseed=9 # trailing\n",
        )
        .unwrap();
        assert_eq!(c.n_values, vec![2, 3]);
        assert_eq!(c.trials, 7);
        assert_eq!(c.boundary_fraction, rat(1, 4));
        assert_eq!(c.level_range, vec![1, 2, 3]);
        assert_eq!(c.seed, 9);
        c.validate().unwrap();
    }

    #[test]
    fn json_field_names_are_accepted() {
        let mut c = CampaignConfig::default();
        c.apply_file("n_values=4\ndenominator_bound=30\nboundary_fraction=1/2\nlevel_range=2,4\n")
            .unwrap();
        assert_eq!(c.n_values, vec![4]);
        assert_eq!(c.denominator_bound, 30);
        assert_eq!(c.boundary_fraction, rat(1, 2));
        assert_eq!(c.level_range, vec![2, 4]);
    }

    #[test]
    fn rejects_bad_config() {
        let mut c = CampaignConfig::default();
        assert!(c.apply_file("bogus=1").is_err());
        assert!(c.apply_file("trials").is_err());
        c.n_values.clear();
        assert!(c.validate().is_err());
        let c = CampaignConfig {
            trials: 0,
            ..Default::default()
        };
        assert!(c.validate().is_err());
        let c = CampaignConfig {
            boundary_fraction: rat(3, 2),
            ..Default::default()
        };
        assert!(c.validate().is_err());
        let c = CampaignConfig {
            n_values: vec![1],
            ..Default::default()
        };
        assert!(c.validate().is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("5").unwrap(), vec![5]);
        assert!(parse_range("4..2").is_err());
    }
}
