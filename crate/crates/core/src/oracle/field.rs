use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::OracleError;

/// Coefficient field for homology: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExactField {
    Rationals,
    Prime(u64),
}

impl ExactField {
    pub fn gf(p: u64) -> Result<Self, OracleError> {
        if is_prime(p) {
            Ok(ExactField::Prime(p))
        } else {
            Err(OracleError::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            ExactField::Rationals => 0,
            ExactField::Prime(p) => p,
        }
    }
}

impl fmt::Display for ExactField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactField::Rationals => write!(f, "QQ"),
            ExactField::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Accepts `q`, `Q`, `QQ`, `gf:<p>` or `gf(<p>)`.
impl FromStr for ExactField {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" || t == "qq" {
            return Ok(ExactField::Rationals);
        }
        let digits = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| OracleError::BadField(s.to_string()))?;
        let p = digits
            .parse::<u64>()
            .map_err(|_| OracleError::BadField(s.to_string()))?;
        ExactField::gf(p)
    }
}

impl Serialize for ExactField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
