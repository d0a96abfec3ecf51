//! Exact rational parameters.
//!
//! Length-proportional parameters (the insertion ratio, the word-op rates,
//! training fractions) are kept as exact fractions so that quantities like
//! `floor(len / 3)` come out right: with `f64` arithmetic,
//! `floor(15.0 * (1.0 / 3.0))` is 4, not 5.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A non-negative rational `num/den`, stored in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };
    pub const ONE_THIRD: Ratio = Ratio { num: 1, den: 3 };

    pub fn new(num: u64, den: u64) -> Result<Ratio> {
        if den == 0 {
            return Err(Error::InvalidConfig("ratio with zero denominator".into()));
        }
        let g = gcd(num, den);
        Ok(Ratio {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `self > 0 && self <= 1`
    pub fn in_unit_interval_right_closed(&self) -> bool {
        self.num > 0 && self.num <= self.den
    }

    /// `self >= 0 && self <= 1`
    pub fn in_unit_interval_closed(&self) -> bool {
        self.num <= self.den
    }

    /// `0 < self < 1`
    pub fn strictly_inside_unit_interval(&self) -> bool {
        self.num > 0 && self.num < self.den
    }

    /// `floor(self * n)`, exactly.
    pub fn floor_mul(&self, n: u64) -> u64 {
        ((n as u128 * self.num as u128) / self.den as u128) as u64
    }

    /// `ceil(self * n)`, exactly.
    pub fn ceil_mul(&self, n: u64) -> u64 {
        let p = n as u128 * self.num as u128;
        let d = self.den as u128;
        (p.div_ceil(d)) as u64
    }

    /// `round(self * n)` with halves rounding up, exactly.
    pub fn round_mul(&self, n: u64) -> u64 {
        let p = n as u128 * self.num as u128;
        let d = self.den as u128;
        ((2 * p + d) / (2 * d)) as u64
    }

    /// `1 - self`; requires `self <= 1`.
    pub fn complement(&self) -> Ratio {
        assert!(self.num <= self.den);
        Ratio {
            num: self.den - self.num,
            den: self.den,
        }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `"N/D"` fractions, decimals (`"0.25"` becomes 25/100), and
/// plain integers.
impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ratio> {
        let s = s.trim();
        let bad = || Error::InvalidConfig(format!("cannot parse ratio from {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let num: u64 = n.trim().parse().map_err(|_| bad())?;
            let den: u64 = d.trim().parse().map_err(|_| bad())?;
            return Ratio::new(num, den);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            if frac.len() > 18 {
                return Err(Error::InvalidConfig(format!(
                    "ratio {s:?} has too many decimal places"
                )));
            }
            let whole: u64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let den = 10u64.pow(frac.len() as u32);
            let frac_num: u64 = frac.parse().map_err(|_| bad())?;
            let num = whole
                .checked_mul(den)
                .and_then(|w| w.checked_add(frac_num))
                .ok_or_else(bad)?;
            return Ratio::new(num, den);
        }
        let num: u64 = s.parse().map_err(|_| bad())?;
        Ratio::new(num, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_third_of_fifteen_floors_to_five() {
        assert_eq!(Ratio::ONE_THIRD.floor_mul(15), 5);
        assert_eq!(Ratio::ONE_THIRD.floor_mul(2), 0);
        assert_eq!(Ratio::ONE_THIRD.floor_mul(30), 10);
    }

    #[test]
    fn round_mul_half_up() {
        let tenth = Ratio::new(1, 10).unwrap();
        assert_eq!(tenth.round_mul(15), 2); // 1.5 rounds up
        assert_eq!(tenth.round_mul(14), 1); // 1.4 rounds down
        assert_eq!(tenth.round_mul(5), 1); // 0.5 rounds up
        assert_eq!(Ratio::ZERO.round_mul(100), 0);
    }

    #[test]
    fn ceil_mul_exact() {
        let four_fifths = Ratio::new(4, 5).unwrap();
        assert_eq!(four_fifths.ceil_mul(10), 8);
        assert_eq!(four_fifths.ceil_mul(11), 9); // 8.8 -> 9
        assert_eq!(Ratio::ONE.ceil_mul(7), 7);
    }

    #[test]
    fn parses_fractions_decimals_integers() {
        assert_eq!("1/3".parse::<Ratio>().unwrap(), Ratio::ONE_THIRD);
        assert_eq!("0.25".parse::<Ratio>().unwrap(), Ratio::new(1, 4).unwrap());
        assert_eq!("1".parse::<Ratio>().unwrap(), Ratio::ONE);
        assert_eq!("1.0".parse::<Ratio>().unwrap(), Ratio::ONE);
        assert_eq!(".5".parse::<Ratio>().unwrap(), Ratio::new(1, 2).unwrap());
        assert!("1/0".parse::<Ratio>().is_err());
        assert!("abc".parse::<Ratio>().is_err());
        assert!("0.2.5".parse::<Ratio>().is_err());
        assert!("-1/2".parse::<Ratio>().is_err());
    }

    #[test]
    fn reduced_form_and_display() {
        let r = Ratio::new(2, 6).unwrap();
        assert_eq!(r, Ratio::ONE_THIRD);
        assert_eq!(r.to_string(), "1/3");
        assert_eq!(Ratio::new(3, 1).unwrap().to_string(), "3");
    }

    #[test]
    fn complement_of_fifth() {
        let f = Ratio::new(1, 5).unwrap();
        assert_eq!(f.complement(), Ratio::new(4, 5).unwrap());
    }
}
