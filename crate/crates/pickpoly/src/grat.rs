//! Exact Gaussian-rational scalars: complex numbers with `BigRational`
//! real and imaginary parts. All polynomial algebra in this crate runs
//! over this field; doubles appear only at evaluation boundaries.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GRat { re, im }
    }

    pub fn zero() -> Self {
        GRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GRat::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(k: i64) -> Self {
        GRat::new(BigRational::from_integer(BigInt::from(k)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GRat::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn from_ratio_pair(re: (i64, i64), im: (i64, i64)) -> Self {
        assert!(re.1 != 0 && im.1 != 0, "zero denominator");
        GRat::new(
            BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        )
    }

    pub fn real(r: BigRational) -> Self {
        GRat::new(r, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GRat::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// True iff |z| = 1 exactly.
    pub fn is_unimodular(&self) -> bool {
        self.norm_sqr().is_one()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GRat::new(&self.re / &n, -&self.im / &n))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Upper bound on |z| in doubles, padded against rounding.
    pub fn abs_upper(&self) -> f64 {
        let v = self.to_c64().norm();
        v * (1.0 + 1e-12) + f64::MIN_POSITIVE
    }

    /// Lower bound on |z| in doubles.
    pub fn abs_lower(&self) -> f64 {
        let v = self.to_c64().norm();
        (v * (1.0 - 1e-12)).max(0.0)
    }

    pub fn from_str_parts(re: &str, im: &str) -> Result<Self, String> {
        let re = parse_rational(re)?;
        let im = parse_rational(im)?;
        Ok(GRat::new(re, im))
    }
}

/// Parses "p/q", "p", or a plain decimal like "-0.25" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    if let Ok(r) = s.parse::<BigRational>() {
        return Ok(r);
    }
    // decimal form
    if let Some(dot) = s.find('.') {
        let (int_part, frac_part) = s.split_at(dot);
        let frac_part = &frac_part[1..];
        if frac_part.chars().all(|c| c.is_ascii_digit()) && !frac_part.is_empty() {
            let neg = int_part.trim_start().starts_with('-');
            let int_val: BigInt = if int_part.is_empty() || int_part == "-" || int_part == "+" {
                BigInt::zero()
            } else {
                int_part.parse().map_err(|e| format!("bad number {s:?}: {e}"))?
            };
            let num: BigInt = frac_part.parse().map_err(|e| format!("bad number {s:?}: {e}"))?;
            let den = BigInt::from(10u32).pow(frac_part.len() as u32);
            let frac = BigRational::new(num, den);
            let base = BigRational::from_integer(int_val);
            return Ok(if neg { base - frac } else { base + frac });
        }
    }
    Err(format!("cannot parse rational from {s:?}"))
}

/// Renders a rational as "p/q" (or "p" when integral).
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Best rational approximation of `x` by continued fractions, with
/// denominator at most `max_den` and absolute error below `tol`.
pub fn rationalize(x: f64, max_den: u64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let neg = x < 0.0;
    let mut v = x.abs();
    // convergents p/q of the continued fraction of |x|
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let bound = BigInt::from(max_den);
    for _ in 0..64 {
        let a = v.floor();
        if a > 1e18 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > bound {
            break;
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let frac = v - a;
        let cand = BigRational::new(p1.clone(), q1.clone());
        if (cand.to_f64().unwrap_or(f64::NAN) - x.abs()).abs() <= tol {
            break;
        }
        if frac < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1.is_zero() {
        return None;
    }
    let r = BigRational::new(p1, q1);
    let approx = r.to_f64()?;
    if (approx - x.abs()).abs() > tol {
        return None;
    }
    Some(if neg { -r } else { r })
}

/// Rounds a complex double to an exact Gaussian rational, or `None` when
/// no small-denominator rational sits within `tol` of each part.
pub fn rationalize_c64(z: Complex64, max_den: u64, tol: f64) -> Option<GRat> {
    Some(GRat::new(
        rationalize(z.re, max_den, tol)?,
        rationalize(z.im, max_den, tol)?,
    ))
}

impl fmt::Debug for GRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", format_rational(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", format_rational(&self.im))
        } else if self.im.is_negative() {
            write!(
                f,
                "{}-{}i",
                format_rational(&self.re),
                format_rational(&(-self.im.clone()))
            )
        } else {
            write!(f, "{}+{}i", format_rational(&self.re), format_rational(&self.im))
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b GRat> for &'a GRat {
            type Output = GRat;
            fn $method(self, other: &'b GRat) -> GRat {
                let $a = self;
                let $b = other;
                $body
            }
        }
        impl $trait<GRat> for GRat {
            type Output = GRat;
            fn $method(self, other: GRat) -> GRat {
                (&self).$method(&other)
            }
        }
        impl<'b> $trait<&'b GRat> for GRat {
            type Output = GRat;
            fn $method(self, other: &'b GRat) -> GRat {
                (&self).$method(other)
            }
        }
    };
}

binop!(Add, add, |a, b| GRat::new(&a.re + &b.re, &a.im + &b.im));
binop!(Sub, sub, |a, b| GRat::new(&a.re - &b.re, &a.im - &b.im));
binop!(Mul, mul, |a, b| GRat::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));
binop!(Div, div, |a, b| {
    let inv = b.inv().expect("division by zero GRat");
    a * &inv
});

impl Neg for GRat {
    type Output = GRat;
    fn neg(self) -> GRat {
        GRat::new(-self.re, -self.im)
    }
}

impl Neg for &GRat {
    type Output = GRat;
    fn neg(self) -> GRat {
        GRat::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = GRat::from_ratio_pair((1, 2), (3, 4));
        let b = GRat::from_ratio_pair((-2, 1), (1, 3));
        let prod = &a * &b;
        let back = &prod / &b;
        assert_eq!(back, a);
        assert_eq!(&a - &a, GRat::zero());
        assert_eq!(&a * &GRat::one(), a);
    }

    #[test]
    fn conj_and_norm() {
        let a = GRat::from_ratio_pair((3, 5), (4, 5));
        assert!(a.is_unimodular());
        assert_eq!(&a * &a.conj(), GRat::one());
        assert!(!GRat::from_int(2).is_unimodular());
    }

    #[test]
    fn parse_and_format() {
        let r = parse_rational("3/4").unwrap();
        assert_eq!(format_rational(&r), "3/4");
        let d = parse_rational("-0.25").unwrap();
        assert_eq!(format_rational(&d), "-1/4");
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rationalize_roundtrip() {
        let r = rationalize(0.5, 1_000_000, 1e-9).unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(1), BigInt::from(2)));
        let r = rationalize(-2.0 / 3.0, 1_000_000, 1e-9).unwrap();
        assert_eq!(r, BigRational::new(BigInt::from(-2), BigInt::from(3)));
        assert!(rationalize(std::f64::consts::PI, 10, 1e-12).is_none());
    }
}
