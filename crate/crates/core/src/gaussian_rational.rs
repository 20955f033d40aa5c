//! Exact arithmetic over the Gaussian rationals `Q(i)`.
//!
//! Both components are [`BigRational`], which keeps every value in lowest
//! terms with a positive denominator after each operation, so structural
//! equality is exact equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse gaussian rational {input:?}: {reason}")]
pub struct ParseGaussianError {
    pub input: String,
    pub reason: String,
}

/// Field operation selector, mostly useful at API boundaries (CLI, FFI).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Conjugate of the left operand; the right operand is ignored.
    Conj,
    /// Negation of the left operand; the right operand is ignored.
    Neg,
}

/// Sign of a rational, as -1, 0 or +1.
pub fn sign_of(q: &BigRational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    /// Builds `re_num/re_den + (im_num/im_den) i`.
    ///
    /// Panics if a denominator is zero.
    pub fn from_ratios(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self {
            re: BigRational::new(re_num.into(), re_den.into()),
            im: BigRational::new(im_num.into(), im_den.into()),
        }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        Self {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn from_real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integers(0, 0)
    }

    pub fn one() -> Self {
        Self::from_integers(1, 0)
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1)
    }

    /// Exact conversion of a finite double-precision complex value.
    pub fn from_complex64(z: Complex64) -> Option<Self> {
        Some(Self {
            re: BigRational::from_float(z.re)?,
            im: BigRational::from_float(z.im)?,
        })
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|a|^2 = re^2 + im^2`, the only modulus quantity available exactly.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        let den = rhs.norm_sqr();
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let num = self * &rhs.conj();
        Ok(Self {
            re: num.re / &den,
            im: num.im / den,
        })
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        Self::one().checked_div(self)
    }

    /// `self^n` by repeated squaring, with `0^0 = 1`.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact signs of the real and imaginary parts.
    pub fn signs(&self) -> (i8, i8) {
        (sign_of(&self.re), sign_of(&self.im))
    }

    pub fn apply(&self, op: FieldOp, rhs: &Self) -> Result<Self, ArithError> {
        Ok(match op {
            FieldOp::Add => self + rhs,
            FieldOp::Sub => self - rhs,
            FieldOp::Mul => self * rhs,
            FieldOp::Div => self.checked_div(rhs)?,
            FieldOp::Conj => self.conj(),
            FieldOp::Neg => -self,
        })
    }

    /// Nearest double-precision value (lossy).
    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

pub(crate) fn ratio_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_positive() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}

impl Default for GaussianRational {
    fn default() -> Self {
        Self::zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational {
    re: &a.re + &b.re,
    im: &a.im + &b.im,
});
forward_binop!(Sub, sub, |a, b| GaussianRational {
    re: &a.re - &b.re,
    im: &a.im - &b.im,
});
forward_binop!(Mul, mul, |a, b| GaussianRational {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Text form `p/q+r/si`: the real part carries a sign only when negative,
/// the imaginary part always carries one, and `/1` denominators are dropped.
/// Example: `-7/16+3/2i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

/// Parses a rational `p`, `p/q`, or a finite decimal such as `-1.25`.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty number".into());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator {p:?}"))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator {q:?}"))?;
        if q.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Ok(n) = t.parse::<BigInt>() {
        return Ok(BigRational::from_integer(n));
    }
    // Decimal with optional exponent, converted exactly.
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = t[pos + 1..]
                .parse()
                .map_err(|_| format!("bad exponent in {t:?}"))?;
            (&t[..pos], e)
        }
        None => (t, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let negative = int_part.starts_with('-');
    let digits = format!("{}{}", int_part.trim_start_matches(['+', '-']), frac_part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("not a number: {t:?}"));
    }
    let mut value = BigRational::from_integer(digits.parse::<BigInt>().unwrap());
    let scale = exp - frac_part.len() as i32;
    let ten = BigRational::from_integer(10.into());
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Ok(if negative { -value } else { value })
}

impl FromStr for GaussianRational {
    type Err = ParseGaussianError;

    /// Accepts `a`, `bi`, `a+bi`, `a-bi` with `a`, `b` rationals (`p/q`);
    /// whitespace is ignored and a bare `i` means `1i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| ParseGaussianError {
            input: s.to_string(),
            reason,
        };
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err("empty input".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(&t).map(Self::from_real).map_err(err);
        };
        // Split at the last sign that is not the leading one and not part of an exponent.
        let bytes = body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&p| {
            (bytes[p] == b'+' || bytes[p] == b'-') && !matches!(bytes[p - 1], b'e' | b'E')
        });
        let (re_txt, im_txt) = match split {
            Some(p) => (&body[..p], &body[p..]),
            None => ("0", body),
        };
        let im_txt = match im_txt {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        let re = parse_rational(re_txt).map_err(err)?;
        let im = parse_rational(im_txt.trim_start_matches('+')).map_err(err)?;
        Ok(Self { re, im })
    }
}
