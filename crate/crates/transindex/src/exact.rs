//! Checked 128-bit integer arithmetic and exact rationals.
//!
//! Every exact quantity in the crate flows through these helpers; overflow
//! is a hard error, never a silent wrap. At the supported graph orders the
//! intermediate values stay far inside i128, so the checks are a safety net,
//! not a hot path concern.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub fn checked_add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::ArithmeticOverflow)
}

pub fn checked_sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::ArithmeticOverflow)
}

pub fn checked_mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::ArithmeticOverflow)
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i128
}

/// Reduced rational with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: i128,
    den: i128,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::ArithmeticOverflow);
        }
        let g = gcd(num, den); // >= 1 since den != 0
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Ratio { num, den })
    }

    pub fn int(v: i128) -> Self {
        Ratio { num: v, den: 1 }
    }

    pub fn num(&self) -> i128 {
        self.num
    }

    pub fn den(&self) -> i128 {
        self.den
    }

    pub fn checked_add(self, o: Ratio) -> Result<Ratio> {
        // a/b + c/d with the lcm denominator keeps intermediates small
        let g = gcd(self.den, o.den);
        let lhs = checked_mul(self.num, o.den / g)?;
        let rhs = checked_mul(o.num, self.den / g)?;
        Ratio::new(checked_add(lhs, rhs)?, checked_mul(self.den / g, o.den)?)
    }

    pub fn checked_sub(self, o: Ratio) -> Result<Ratio> {
        self.checked_add(Ratio {
            num: -o.num,
            den: o.den,
        })
    }

    pub fn checked_mul(self, o: Ratio) -> Result<Ratio> {
        Ratio::new(checked_mul(self.num, o.num)?, checked_mul(self.den, o.den)?)
    }

    pub fn cmp_exact(&self, o: &Ratio) -> Result<Ordering> {
        // denominators are positive, so cross multiplication preserves order
        Ok(checked_mul(self.num, o.den)?.cmp(&checked_mul(o.num, self.den)?))
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_f64(&self) -> f64 {
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
