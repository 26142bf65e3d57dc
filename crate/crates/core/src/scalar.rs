//! Number types the finite-`n` formulas can be evaluated in.
//!
//! Exact [`BigRational`] is the default everywhere; `f64` is the float
//! evaluation mode used for large `n` sweeps.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

use crate::rational;

pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync {
    fn from_int(v: &BigInt) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn to_f64(&self) -> f64;
    /// Text form used in reports: `num/den` for rationals.
    fn render(&self) -> String;

    fn from_i64(v: i64) -> Self {
        Self::from_int(&BigInt::from(v))
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    fn powi(&self, exp: i64) -> Self {
        let mut base = self.clone();
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        if exp < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }
}

impl Scalar for BigRational {
    fn from_int(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        rational::to_f64(self)
    }

    fn render(&self) -> String {
        rational::format_rational(self)
    }
}

impl Scalar for f64 {
    fn from_int(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }

    fn from_rational(r: &BigRational) -> Self {
        rational::to_f64(r)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn render(&self) -> String {
        self.to_string()
    }
}
