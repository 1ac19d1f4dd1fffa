//! Coefficient rings and fields.
//!
//! Every series and polynomial operation in this crate is written against
//! [`Ring`] (or [`Field`] when division is needed). Three realizations are
//! provided: exact [`Rational`](crate::Rational) numbers, the IEEE float types
//! `f32`/`f64`, and `Complex<f32|f64>` (ring only). [`Polynomial`](crate::Polynomial)
//! realizes [`Ring`] a fourth time so that series may carry polynomial
//! coefficients.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A commutative ring with identity.
///
/// Arithmetic is by value; implementations for big numbers clone as needed.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The image of the integer `n` under the unique ring map from Z.
    fn from_count(n: usize) -> Self;
}

/// An ordered field: either exact (rationals) or floating point.
pub trait Field: Ring + PartialOrd + Display {
    /// True when arithmetic in this field is exact.
    const EXACT: bool;

    /// Division that reports a zero divisor instead of producing a non-finite value.
    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    fn abs(&self) -> Self;

    /// Nearest `f64`.
    fn to_f64(&self) -> f64;

    /// Converts a finite `f64`. Exact fields convert without rounding.
    fn from_f64(x: f64) -> Option<Self>;

    /// Unit roundoff of one arithmetic operation; zero for exact fields.
    fn rounding_unit() -> Self;

    /// Returns the value as an integer when it is one.
    fn as_integer(&self) -> Option<i64>;

    /// `|self - other| <= max(abs_tol, rel_tol * max(|self|, |other|))`; plain
    /// equality in exact fields.
    fn approx_eq(&self, other: &Self, rel_tol: f64, abs_tol: f64) -> bool;

    /// Parses a scalar literal (`p/q`, `p`, or a decimal float for float fields).
    fn parse_literal(text: &str) -> Result<Self>;

    /// Canonical text form: `p/q` for exact fields, shortest round-trip decimal otherwise.
    fn to_literal(&self) -> String;

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    fn from_rational(q: &BigRational) -> Option<Self>;
}

impl Ring for BigRational {
    fn from_count(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for BigRational {
    const EXACT: bool = true;

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x)
    }

    fn rounding_unit() -> Self {
        Self::zero()
    }

    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn approx_eq(&self, other: &Self, _rel_tol: f64, _abs_tol: f64) -> bool {
        self == other
    }

    fn parse_literal(text: &str) -> Result<Self> {
        parse_rational(text)
    }

    fn to_literal(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn from_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
}

/// Parses `p/q` (q > 0) or `p`, with an optional leading `-` or `\u{2212}`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Literal(text.to_owned());
    let (negative, body) = match text
        .strip_prefix('-')
        .or_else(|| text.strip_prefix('\u{2212}'))
    {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let (numer, denom) = match body.split_once('/') {
        Some((p, q)) => (digits(p)?, digits(q)?),
        None => (digits(body)?, BigInt::one()),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    let value = BigRational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

macro_rules! float_field {
    ($t:ty) => {
        impl Ring for $t {
            fn from_count(n: usize) -> Self {
                n as $t
            }
        }

        impl Field for $t {
            const EXACT: bool = false;

            fn checked_div(&self, rhs: &Self) -> Result<Self> {
                if *rhs == 0.0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(self / rhs)
            }

            fn abs(&self) -> Self {
                Float::abs(*self)
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn from_f64(x: f64) -> Option<Self> {
                x.is_finite().then_some(x as $t)
            }

            fn rounding_unit() -> Self {
                <$t>::EPSILON / 2.0
            }

            fn as_integer(&self) -> Option<i64> {
                (self.is_finite() && self.fract() == 0.0 && Float::abs(*self) < 9.0e15)
                    .then(|| *self as i64)
            }

            fn approx_eq(&self, other: &Self, rel_tol: f64, abs_tol: f64) -> bool {
                let (a, b) = (*self as f64, *other as f64);
                let scale = a.abs().max(b.abs());
                (a - b).abs() <= abs_tol.max(rel_tol * scale)
            }

            fn parse_literal(text: &str) -> Result<Self> {
                if text.contains('/') {
                    let q = parse_rational(text)?;
                    return <$t as Field>::from_rational(&q)
                        .ok_or_else(|| Error::NotRepresentable(text.to_owned()));
                }
                let normalized = text.replace('\u{2212}', "-");
                let lower = normalized.to_ascii_lowercase();
                if lower.contains("inf") || lower.contains("nan") {
                    return Err(Error::Literal(text.to_owned()));
                }
                normalized
                    .parse::<$t>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| Error::Literal(text.to_owned()))
            }

            fn to_literal(&self) -> String {
                let a = Float::abs(*self);
                if a != 0.0 && (a < 1e-4 || a >= 1e16) {
                    format!("{:e}", self)
                } else {
                    format!("{}", self)
                }
            }

            fn from_rational(q: &BigRational) -> Option<Self> {
                let x = ToPrimitive::to_f64(q)?;
                let y = x as $t;
                y.is_finite().then_some(y)
            }
        }
    };
}

float_field!(f32);
float_field!(f64);

impl<T> Ring for Complex<T>
where
    T: Field + Float,
{
    fn from_count(n: usize) -> Self {
        Complex::new(T::from_count(n), T::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), q(-3, 4));
        assert_eq!(parse_rational("\u{2212}2").unwrap(), q(-2, 1));
        assert_eq!(parse_rational("0/5").unwrap(), BigRational::zero());
        assert_eq!(parse_rational("0/5").unwrap().denom(), &BigInt::one());
        for bad in ["", "1/0", "1/-2", "1.5", "a/b", "1 /2", "--1", "/3", "+1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn rational_literal_round_trip_keeps_denominator_one() {
        assert_eq!(q(3, 1).to_literal(), "3/1");
        assert_eq!(q(-5, 10).to_literal(), "-1/2");
    }

    #[test]
    fn float_literals() {
        assert_eq!(f64::parse_literal("0.5").unwrap(), 0.5);
        assert_eq!(f64::parse_literal("1e-3").unwrap(), 1e-3);
        assert_eq!(f64::parse_literal("1/4").unwrap(), 0.25);
        assert_eq!(f64::parse_literal("\u{2212}2.5").unwrap(), -2.5);
        assert!(f64::parse_literal("inf").is_err());
        assert!(f64::parse_literal("NaN").is_err());
        assert!(f64::parse_literal("1e400").is_err());
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(
            q(1, 2).checked_div(&BigRational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(1.0f64.checked_div(&0.0), Err(Error::DivisionByZero));
        assert_eq!(1.0f32.checked_div(&-0.0), Err(Error::DivisionByZero));
    }

    #[test]
    fn integer_detection() {
        assert_eq!(q(4, 2).as_integer(), Some(2));
        assert_eq!(q(1, 2).as_integer(), None);
        assert_eq!(3.0f64.as_integer(), Some(3));
        assert_eq!(3.5f64.as_integer(), None);
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-60i64..=60, 1i64..=40).prop_map(|(p, d)| q(p, d))
    }

    fn small_complex() -> impl Strategy<Value = Complex<f64>> {
        (-1e3f64..1e3, -1e3f64..1e3).prop_map(|(re, im)| Complex::new(re, im))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
            prop_assert_eq!(a.clone() - a.clone(), BigRational::zero());
            if !b.is_zero() {
                let back = a.checked_div(&b).unwrap() * b.clone();
                prop_assert_eq!(back, a.clone());
            }
            // canonical form after every operation
            let s = a.clone() * b.clone() + c;
            prop_assert!(s.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
        }

        #[test]
        fn literal_round_trip(a in small_rational(), x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            prop_assert_eq!(BigRational::parse_literal(&a.to_literal()).unwrap(), a);
            prop_assert_eq!(f64::parse_literal(&x.to_literal()).unwrap().to_bits(), x.to_bits());
        }

        #[test]
        fn complex_conjugation_is_multiplicative(a in small_complex(), b in small_complex()) {
            let lhs = (a * b).conj();
            let rhs = a.conj() * b.conj();
            let ulp4 = |x: f64| 4.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE);
            let scale_re = (a.re * b.re).abs() + (a.im * b.im).abs();
            let scale_im = (a.re * b.im).abs() + (a.im * b.re).abs();
            prop_assert!((lhs.re - rhs.re).abs() <= ulp4(scale_re));
            prop_assert!((lhs.im - rhs.im).abs() <= ulp4(scale_im));
        }
    }
}
