use crate::error::CoreError;
use num::{BigInt, BigRational, One, Signed, ToPrimitive};
use std::fmt;
use std::sync::Mutex;

/// Exact rational scalar used for all boundary-sensitive arithmetic.
pub type Rat = BigRational;

/// Accuracy parameter ε = 1/inv_eps with `1/ε ∈ ℕ` by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Epsilon {
    inv_eps: u64,
}

impl Epsilon {
    pub fn new(inv_eps: u64) -> Result<Self, CoreError> {
        if inv_eps == 0 {
            return Err(CoreError::Invalid("epsilon must be positive".into()));
        }
        Ok(Epsilon { inv_eps })
    }

    /// Parses the CLI fraction form `"1/k"`.
    pub fn parse(s: &str) -> Result<Self, CoreError> {
        let err = || CoreError::Invalid(format!("epsilon must be of the form 1/k, got {s:?}"));
        let (num, den) = s.split_once('/').ok_or_else(err)?;
        if num.trim() != "1" {
            return Err(err());
        }
        let inv: u64 = den.trim().parse().map_err(|_| err())?;
        Epsilon::new(inv)
    }

    pub fn inv(&self) -> u64 {
        self.inv_eps
    }

    /// ε as an exact rational.
    pub fn as_rat(&self) -> Rat {
        Rat::new(BigInt::one(), BigInt::from(self.inv_eps))
    }

    /// 1 + ε, the class base.
    pub fn one_plus(&self) -> Rat {
        Rat::new(BigInt::from(self.inv_eps + 1), BigInt::from(self.inv_eps))
    }

    /// 1 − ε.
    pub fn one_minus(&self) -> Rat {
        Rat::new(
            BigInt::from(self.inv_eps.saturating_sub(1)),
            BigInt::from(self.inv_eps),
        )
    }

    /// Whether ε < 1/2^{d+2}, the regime in which the hypercube structural
    /// packing results apply. Outside of it the solver still runs but the
    /// structured enumeration loses its guarantees.
    pub fn hypercube_regime(&self, d: usize) -> bool {
        if d + 2 >= 127 {
            return false;
        }
        (self.inv_eps as u128) > (1u128 << (d + 2))
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}", self.inv_eps)
    }
}

/// Cache of exact powers of (1+ε) together with the rounding operators
/// ⌈x⌉_{1+ε} (smallest power strictly greater than x) and ⌊x⌋_{1+ε}
/// (largest power not exceeding x). Comparisons are exact; no logarithms.
pub struct ClassScale {
    inv_eps: u64,
    base: Rat,
    powers: Mutex<Vec<Rat>>,
}

impl ClassScale {
    pub fn new(eps: &Epsilon) -> Self {
        ClassScale {
            inv_eps: eps.inv(),
            base: eps.one_plus(),
            powers: Mutex::new(vec![Rat::one()]),
        }
    }

    pub fn inv_eps(&self) -> u64 {
        self.inv_eps
    }

    /// (1+ε)^t, exactly.
    pub fn pow(&self, t: u32) -> Rat {
        let mut powers = self.powers.lock().unwrap();
        while powers.len() <= t as usize {
            let next = powers.last().unwrap() * &self.base;
            powers.push(next);
        }
        powers[t as usize].clone()
    }

    /// Largest exponent t with (1+ε)^t ≤ x. `None` when x < 1.
    pub fn floor_exp(&self, x: &Rat) -> Option<u32> {
        if x < &Rat::one() {
            return None;
        }
        // Grow until the cache brackets x, then binary search.
        let mut hi = 1u32;
        while self.pow(hi) <= *x {
            hi = hi.saturating_mul(2);
        }
        let mut lo = 0u32;
        // invariant: pow(lo) <= x < pow(hi)
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.pow(mid) <= *x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(lo)
    }

    /// Smallest exponent t with (1+ε)^t > x. Requires x > 0.
    pub fn ceil_exp(&self, x: &Rat) -> u32 {
        assert!(x.is_positive(), "ceil_exp requires x > 0");
        match self.floor_exp(x) {
            None => 0,
            Some(t) => t + 1,
        }
    }

    /// ⌊x⌋_{1+ε} as (exponent, value). `None` when x < 1.
    pub fn floor_pow(&self, x: &Rat) -> Option<(u32, Rat)> {
        self.floor_exp(x).map(|t| (t, self.pow(t)))
    }

    /// ⌈x⌉_{1+ε} as (exponent, value). Requires x > 0.
    pub fn ceil_pow(&self, x: &Rat) -> (u32, Rat) {
        let t = self.ceil_exp(x);
        (t, self.pow(t))
    }

    /// Class index of a positive integer attribute value: the t with
    /// v ∈ [(1+ε)^t, (1+ε)^{t+1}).
    pub fn class_of_int(&self, v: u64) -> u32 {
        assert!(v >= 1, "class attributes are positive integers");
        self.floor_exp(&Rat::from_integer(BigInt::from(v)))
            .expect("v >= 1 always has a floor exponent")
    }

    /// Inclusive integer range of class t members, clamped to `u64`.
    pub fn class_int_bounds(&self, t: u32) -> (u64, u64) {
        let lo = ceil_to_u64(&self.pow(t));
        let hi_excl = self.pow(t + 1);
        let hi = ceil_to_u64(&hi_excl).saturating_sub(1);
        (lo, hi)
    }

    /// Integer profit representative of class t: ⌊(1+ε)^{t+1}⌋. It dominates
    /// every member of the class and is at most (1+ε) times the smallest one.
    pub fn rep_int(&self, t: u32) -> u64 {
        floor_to_u64(&self.pow(t + 1))
    }

    /// Distinct values ⌊(1+ε)^t⌋ falling inside [lo, hi], ascending. This is
    /// the integer guessing grid used for box side lengths and profit shares.
    pub fn int_grid(&self, lo: u64, hi: u64) -> Vec<u64> {
        let mut out = Vec::new();
        if lo > hi {
            return out;
        }
        let mut t = 0u32;
        loop {
            let v = floor_to_u64(&self.pow(t));
            if v > hi {
                break;
            }
            if v >= lo && out.last() != Some(&v) {
                out.push(v);
            }
            t += 1;
            if t > 1 << 24 {
                break; // unreachable for sane inputs
            }
        }
        out
    }
}

/// ⌈x⌉ for a non-negative rational, clamped to `u64`.
pub fn ceil_to_u64(x: &Rat) -> u64 {
    let c = x.ceil();
    c.to_integer().to_u64().unwrap_or(u64::MAX)
}

/// ⌊x⌋ for a non-negative rational, clamped to `u64`.
pub fn floor_to_u64(x: &Rat) -> u64 {
    let f = x.floor();
    if f.is_negative() {
        return 0;
    }
    f.to_integer().to_u64().unwrap_or(u64::MAX)
}

pub fn rat_int(v: u64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat_int128(v: u128) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scale(inv: u64) -> ClassScale {
        ClassScale::new(&Epsilon::new(inv).unwrap())
    }

    #[test]
    fn rounding_examples_eps_one() {
        let s = scale(1);
        // ε = 1: powers of two.
        assert_eq!(s.ceil_pow(&rat_int(3)), (2, rat_int(4)));
        assert_eq!(s.ceil_pow(&rat_int(4)), (3, rat_int(8)));
        assert_eq!(s.floor_pow(&rat_int(4)), Some((2, rat_int(4))));
        assert_eq!(s.ceil_pow(&rat_int(1)), (1, rat_int(2)));
        assert_eq!(s.floor_pow(&rat_int(1)), Some((0, rat_int(1))));
    }

    #[test]
    fn rounding_sandwich_on_integers() {
        for inv in [1u64, 2, 4, 7] {
            let s = scale(inv);
            let one_plus = Epsilon::new(inv).unwrap().one_plus();
            for x in 1u64..=300 {
                let xr = rat_int(x);
                let (_, lo) = s.floor_pow(&xr).unwrap();
                let (_, hi) = s.ceil_pow(&xr);
                assert!(lo <= xr && xr < hi, "x={x} inv={inv}");
                assert!(hi <= &xr * &one_plus, "ceil within (1+eps)x: x={x} inv={inv}");
            }
        }
    }

    #[test]
    fn class_round_trip_is_stable() {
        let s = scale(3);
        for t in 0u32..40 {
            // The class value (1+ε)^t is the smallest member of class t.
            assert_eq!(s.floor_exp(&s.pow(t)), Some(t));
            assert_eq!(s.ceil_exp(&s.pow(t)), t + 1);
        }
    }

    #[test]
    fn class_int_bounds_partition_integers() {
        for inv in [1u64, 2, 5] {
            let s = scale(inv);
            for v in 1u64..=500 {
                let t = s.class_of_int(v);
                let (lo, hi) = s.class_int_bounds(t);
                assert!(lo <= v && v <= hi, "v={v} inv={inv} t={t} [{lo},{hi}]");
                if v > 1 {
                    // classes are monotone in the attribute value
                    assert!(s.class_of_int(v - 1) <= t);
                }
            }
        }
    }

    #[test]
    fn rep_int_dominates_members() {
        for inv in [1u64, 2, 4] {
            let s = scale(inv);
            for t in 0u32..30 {
                let (lo, hi) = s.class_int_bounds(t);
                if lo > hi {
                    continue; // empty integer class (narrow bucket)
                }
                let rep = s.rep_int(t);
                assert!(rep >= hi, "rep {rep} < hi {hi} (t={t}, inv={inv})");
                // rep <= (1+eps) * lo
                assert!(
                    rat_int(rep) <= rat_int(lo) * Epsilon::new(inv).unwrap().one_plus(),
                    "t={t} inv={inv}"
                );
            }
        }
    }

    #[test]
    fn int_grid_is_geometric_and_sorted() {
        let s = scale(2);
        let g = s.int_grid(1, 1000);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g[0], 1);
        assert!(g.iter().all(|&v| (1..=1000).contains(&v)));
        // Every power's floor within range is present.
        assert!(g.contains(&((3u64.pow(6)) / 2u64.pow(6)))); // floor((3/2)^6) = 11
    }

    #[test]
    fn epsilon_parsing_and_regime() {
        assert_eq!(Epsilon::parse("1/4").unwrap().inv(), 4);
        assert!(Epsilon::parse("2/4").is_err());
        assert!(Epsilon::parse("abc").is_err());
        // d = 1: regime needs inv > 8.
        assert!(!Epsilon::new(8).unwrap().hypercube_regime(1));
        assert!(Epsilon::new(9).unwrap().hypercube_regime(1));
        // d = 2: inv > 16.
        assert!(!Epsilon::new(4).unwrap().hypercube_regime(2));
        assert!(Epsilon::new(17).unwrap().hypercube_regime(2));
    }
}
