//! Session configuration: a flat `key = value` file with exact scalars.
//!
//! ```text
//! # comments start with '#'
//! base = entire            # entire | interval | free(n)
//! automorphism = scale     # scale | shift | diagonal | identity
//! q = 3/2                  # diagonal takes a list: q = 2, 1+1i
//! derivation = none        # none | dz
//! caps = 12, 24            # max word length, max base degree
//! format = text            # text | csv
//! ```

use std::fmt;
use std::str::FromStr;

use skewcalc_core::scalar::int;
use skewcalc_core::text::parse_base;
use skewcalc_core::{Caps, Derivation, EntireAlgebra, Scalar};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseKind {
    Entire,
    Interval,
    Free(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutKind {
    Scale,
    Shift,
    Diagonal,
    Identity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SessionConfig {
    pub base: BaseKind,
    pub automorphism: AutKind,
    pub q: Vec<Scalar>,
    pub derivation: Derivation,
    pub caps: Caps,
    pub format: Format,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            base: BaseKind::Entire,
            automorphism: AutKind::Scale,
            q: vec![int(2)],
            derivation: Derivation::Zero,
            caps: Caps::default(),
            format: Format::Text,
        }
    }
}

fn config_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Config {
        line,
        message: message.into(),
    }
}

/// An exact scalar literal such as `2`, `-3/2` or `1+1i`.
pub fn parse_scalar(src: &str) -> Result<Scalar, String> {
    let p = parse_base(&EntireAlgebra::identity(), src).map_err(|e| e.to_string())?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(format!("{src:?} is not a constant"));
    }
    Ok(p.coeff(0))
}

fn parse_usize_list(src: &str, line: usize) -> Result<Vec<usize>, CliError> {
    src.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| config_error(line, format!("expected a nonnegative integer, found {s:?}")))
        })
        .collect()
}

impl FromStr for SessionConfig {
    type Err = CliError;

    fn from_str(src: &str) -> Result<Self, CliError> {
        let mut cfg = SessionConfig::default();
        for (i, raw) in src.lines().enumerate() {
            let line = i + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let (key, value) = text
                .split_once('=')
                .ok_or_else(|| config_error(line, format!("expected key = value, found {text:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "base" => {
                    cfg.base = match value {
                        "entire" => BaseKind::Entire,
                        "interval" => BaseKind::Interval,
                        v if v.starts_with("free(") && v.ends_with(')') => {
                            let n = v[5..v.len() - 1]
                                .trim()
                                .parse()
                                .ok()
                                .filter(|&n| (1..=9).contains(&n))
                                .ok_or_else(|| config_error(line, "free(n) needs 1 <= n <= 9"))?;
                            BaseKind::Free(n)
                        }
                        v => return Err(config_error(line, format!("unknown base {v:?}"))),
                    }
                }
                "automorphism" => {
                    cfg.automorphism = match value {
                        "scale" => AutKind::Scale,
                        "shift" => AutKind::Shift,
                        "diagonal" => AutKind::Diagonal,
                        "identity" => AutKind::Identity,
                        v => return Err(config_error(line, format!("unknown automorphism {v:?}"))),
                    }
                }
                "q" => {
                    cfg.q = value
                        .split(',')
                        .map(|s| parse_scalar(s.trim()).map_err(|m| config_error(line, m)))
                        .collect::<Result<_, _>>()?;
                }
                "derivation" => {
                    cfg.derivation = match value {
                        "none" => Derivation::Zero,
                        "dz" => Derivation::Dz,
                        v => return Err(config_error(line, format!("unknown derivation {v:?}"))),
                    }
                }
                "caps" => match parse_usize_list(value, line)?[..] {
                    [l, d] => {
                        cfg.caps = Caps {
                            max_word_len: l,
                            max_degree: d,
                        }
                    }
                    _ => return Err(config_error(line, "caps takes two values: word length, degree")),
                },
                "max_word_len" => cfg.caps.max_word_len = parse_usize_list(value, line)?[0],
                "max_degree" => cfg.caps.max_degree = parse_usize_list(value, line)?[0],
                "format" => {
                    cfg.format = match value {
                        "text" => Format::Text,
                        "csv" => Format::Csv,
                        v => return Err(config_error(line, format!("unknown format {v:?}"))),
                    }
                }
                k => return Err(config_error(line, format!("unknown key {k:?}"))),
            }
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use skewcalc_core::scalar::real;

    #[test]
    fn parses_all_keys() {
        let cfg: SessionConfig =
            "base = free(2)\nautomorphism = diagonal # two factors\nq = 2, 1+1i\ncaps = 8, 6\nformat = csv\n"
                .parse()
                .unwrap();
        assert_eq!(cfg.base, BaseKind::Free(2));
        assert_eq!(cfg.automorphism, AutKind::Diagonal);
        assert_eq!(cfg.q, vec![int(2), Scalar::new(int(1).re, int(1).re)]);
        assert_eq!(
            cfg.caps,
            Caps {
                max_word_len: 8,
                max_degree: 6
            }
        );
        assert_eq!(cfg.format, Format::Csv);
    }

    #[test]
    fn defaults_to_scaling_by_two() {
        let cfg: SessionConfig = "".parse().unwrap();
        assert_eq!(cfg, SessionConfig::default());
        assert_eq!(cfg.q, vec![int(2)]);
        let cfg: SessionConfig = "q = 3/2".parse().unwrap();
        assert_eq!(cfg.q, vec![real(3, 2)]);
    }

    #[test]
    fn reports_line_numbers() {
        let err = "base = entire\nq = 0.5\n".parse::<SessionConfig>().unwrap_err();
        assert!(matches!(err, CliError::Config { line: 2, .. }));
        let err = "\n\nbogus = 1".parse::<SessionConfig>().unwrap_err();
        assert!(matches!(err, CliError::Config { line: 3, .. }));
    }
}
