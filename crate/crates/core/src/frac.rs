use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Non-negative fraction with machine-word parts, compared exactly by
/// cross-multiplication in `u128`. Used for item densities `p_i / w_i` and
/// as the coordinate type of the range indexes; integers embed as `n/1`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Frac {
    pub num: u64,
    pub den: u64,
}

impl Frac {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "fraction denominator must be positive");
        Frac { num, den }
    }

    pub const ZERO: Frac = Frac { num: 0, den: 1 };
    pub const MAX: Frac = Frac {
        num: u64::MAX,
        den: 1,
    };

    pub fn int(v: u64) -> Self {
        Frac { num: v, den: 1 }
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        (self.num as u128) * (other.den as u128) == (other.num as u128) * (self.den as u128)
    }
}

impl Eq for Frac {}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        ((self.num as u128) * (other.den as u128)).cmp(&((other.num as u128) * (self.den as u128)))
    }
}

impl From<u64> for Frac {
    fn from(v: u64) -> Self {
        Frac::int(v)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl From<Frac> for String {
    fn from(f: Frac) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Frac {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        let (n, d) = s
            .split_once('/')
            .ok_or_else(|| format!("expected 'num/den' fraction, got {s:?}"))?;
        let num: u64 = n.parse().map_err(|e| format!("bad numerator: {e}"))?;
        let den: u64 = d.parse().map_err(|e| format!("bad denominator: {e}"))?;
        if den == 0 {
            return Err("zero denominator".into());
        }
        Ok(Frac { num, den })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_multiplied_ordering() {
        assert!(Frac::new(1, 3) < Frac::new(1, 2));
        assert_eq!(Frac::new(2, 4), Frac::new(1, 2));
        assert!(Frac::new(7, 2) > Frac::int(3));
        assert_eq!(Frac::int(5), Frac::new(10, 2));
    }

    #[test]
    fn string_round_trip() {
        let f = Frac::new(7, 3);
        let s: String = f.into();
        assert_eq!(Frac::try_from(s).unwrap(), f);
    }
}
