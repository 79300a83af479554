//! Exact rational positions.
//!
//! All atom positions, comb spacings, and window endpoints are rationals so
//! that lattice algebra (gcd/lcm refinement, membership, sorting) is exact.
//! Only weights are floating point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// A rational number in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(Ratio<i64>);

impl Rat {
    pub const ZERO: Rat = Rat(Ratio::new_raw(0, 1));
    pub const ONE: Rat = Rat(Ratio::new_raw(1, 1));

    /// Builds `numer/denom`. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Rat {
        Rat(Ratio::new(numer, denom))
    }

    pub fn from_int(n: i64) -> Rat {
        Rat(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn floor(&self) -> i64 {
        *self.0.floor().numer()
    }

    pub fn ceil(&self) -> i64 {
        *self.0.ceil().numer()
    }

    pub fn recip(&self) -> Rat {
        Rat(self.0.recip())
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Rat {
        *self - Rat::from_int(self.floor())
    }

    /// True iff `self` is an integer multiple of `step` (`step != 0`).
    pub fn is_multiple_of(&self, step: Rat) -> bool {
        (*self / step).is_integer()
    }

    /// Largest positive rational `g` with `self, other ∈ g·ℤ`.
    /// Both arguments must be nonzero.
    pub fn gcd(&self, other: Rat) -> Rat {
        assert!(!self.is_zero() && !other.is_zero());
        let d = self.denom().lcm(&other.denom());
        let a = self.numer() * (d / self.denom());
        let b = other.numer() * (d / other.denom());
        Rat::new(a.gcd(&b), d)
    }

    /// Smallest positive rational in `self·ℤ ∩ other·ℤ` (both nonzero).
    pub fn lcm(&self, other: Rat) -> Rat {
        assert!(!self.is_zero() && !other.is_zero());
        let d = self.denom().lcm(&other.denom());
        let a = (self.numer() * (d / self.denom())).abs();
        let b = (other.numer() * (d / other.denom())).abs();
        Rat::new(a.lcm(&b), d)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error returned when a rational string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRatError(pub String);

impl fmt::Display for ParseRatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational '{}': expected 'p/q' or 'p'", self.0)
    }
}

impl std::error::Error for ParseRatError {}

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `"p/q"` or a bare integer `"p"`.
    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        let bad = || ParseRatError(s.to_owned());
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ok(Rat::new(p, q))
            }
            None => {
                let p: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(Rat::from_int(p))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rat::new(-4, -6);
        assert_eq!(r.numer(), 2);
        assert_eq!(r.denom(), 3);
        let r = Rat::new(4, -6);
        assert_eq!(r.numer(), -2);
        assert_eq!(r.denom(), 3);
    }

    #[test]
    fn gcd_lcm_of_lattice_spacings() {
        let half = Rat::new(1, 2);
        let third = Rat::new(1, 3);
        assert_eq!(half.gcd(third), Rat::new(1, 6));
        assert_eq!(half.lcm(third), Rat::ONE);
        assert_eq!(Rat::new(3, 4).gcd(Rat::new(1, 2)), Rat::new(1, 4));
        assert_eq!(Rat::new(2, 1).lcm(Rat::new(3, 1)), Rat::from_int(6));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let r: Rat = "3/4".parse().unwrap();
        assert_eq!(r, Rat::new(3, 4));
        assert_eq!(r.to_string(), "3/4");
        let r: Rat = "-5".parse().unwrap();
        assert_eq!(r, Rat::from_int(-5));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn floor_ceil_fract() {
        assert_eq!(Rat::new(5, 2).floor(), 2);
        assert_eq!(Rat::new(5, 2).ceil(), 3);
        assert_eq!(Rat::new(-5, 2).floor(), -3);
        assert_eq!(Rat::new(-5, 2).ceil(), -2);
        assert_eq!(Rat::new(-1, 4).fract(), Rat::new(3, 4));
    }

    #[test]
    fn multiples() {
        assert!(Rat::new(3, 2).is_multiple_of(Rat::new(1, 2)));
        assert!(!Rat::new(1, 3).is_multiple_of(Rat::new(1, 2)));
    }
}
