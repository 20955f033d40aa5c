//! Dense univariate polynomials over exact or floating complex scalars.

mod io;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::One;
use thiserror::Error;

use crate::gaussian_rational::GaussianRational;

pub use io::{parse_polynomial, parse_polynomial_exact, PolyFormat, PolyParseError};

/// Relative threshold used to decide the local order `k` in floating mode.
pub const DEFAULT_TAU: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation needs degree >= 1, polynomial is constant")]
    Constant,
    #[error("binomial({n}, {j}) is undefined: j > n")]
    BinomialDomain { n: u64, j: u64 },
    #[error(
        "degenerate local form: every shifted coefficient beyond the constant is below threshold"
    )]
    DegenerateLocalForm,
}

/// Complex scalar usable as a polynomial coefficient.
///
/// `EXACT` scalars decide zero-ness structurally; floating scalars go
/// through magnitude thresholds where a decision is needed.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    /// |x| as a double (approximate for exact scalars).
    fn magnitude(&self) -> f64;
}

impl Scalar for Complex64 {
    const EXACT: bool = false;
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl Scalar for GaussianRational {
    const EXACT: bool = true;
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn magnitude(&self) -> f64 {
        crate::gaussian_rational::ratio_to_f64(&self.norm_sqr()).sqrt()
    }
}

/// `P(z) = a_0 + a_1 z + ... + a_n z^n`, coefficients in ascending degree.
///
/// Trailing coefficients that are exactly zero are trimmed on construction,
/// so the last stored coefficient is the leading one. The zero polynomial
/// has no coefficients and no degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

/// Shorthand for the floating-point polynomial the solver works with.
pub type ComplexPoly = Polynomial<Complex64>;
/// Shorthand for the exact polynomial.
pub type ExactPoly = Polynomial<GaussianRational>;

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Monic `prod (z - r)` scaled by `lead`.
    pub fn from_roots(lead: T, roots: &[T]) -> Self {
        let mut c = vec![lead];
        for r in roots {
            let mut next = vec![T::zero(); c.len() + 1];
            for (j, cj) in c.iter().enumerate() {
                next[j + 1] = next[j + 1].clone() + cj.clone();
                next[j] = next[j].clone() - r.clone() * cj.clone();
            }
            c = next;
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    fn nonconstant_degree(&self) -> Result<usize, PolyError> {
        match self.degree() {
            None => Err(PolyError::ZeroPolynomial),
            Some(0) => Err(PolyError::Constant),
            Some(n) => Ok(n),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &T) -> Result<T, PolyError> {
        let (last, rest) = self.coeffs.split_last().ok_or(PolyError::ZeroPolynomial)?;
        Ok(rest
            .iter()
            .rev()
            .fold(last.clone(), |acc, a| acc * z.clone() + a.clone()))
    }

    /// Coefficients of `w -> P(z0 + w)`, by `n` passes of synthetic division.
    pub fn taylor_shift(&self, z0: &T) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut c = self.coeffs.clone();
        let n = c.len() - 1;
        for pass in 0..n {
            for j in (pass..n).rev() {
                c[j] = c[j].clone() + z0.clone() * c[j + 1].clone();
            }
        }
        Ok(Self { coeffs: c })
    }

    /// Decomposes `P(z0 + w) = c0 + w^k Q(w)` with `Q(0) = ck != 0`.
    ///
    /// In exact mode `k` is the first nonzero shifted coefficient past the
    /// constant. In floating mode it is the first whose magnitude exceeds
    /// `tau` times the largest shifted magnitude.
    pub fn local_form(&self, z0: &T, tau: f64) -> Result<LocalForm<T>, PolyError> {
        self.nonconstant_degree()?;
        let shifted = self.taylor_shift(z0)?.coeffs;
        let k = if T::EXACT {
            shifted.iter().skip(1).position(|c| !c.is_zero())
        } else {
            let mags: Vec<f64> = shifted.iter().map(Scalar::magnitude).collect();
            let threshold = tau * mags.iter().cloned().fold(0.0, f64::max);
            mags.iter().skip(1).position(|&m| m > threshold)
        }
        .map(|p| p + 1)
        .ok_or(PolyError::DegenerateLocalForm)?;
        Ok(LocalForm {
            k,
            c0: shifted[0].clone(),
            ck: shifted[k].clone(),
            shifted,
        })
    }

    /// Synthetic division by `(z - r)`: returns `(Q, c)` with `P = (z - r) Q + c`.
    pub fn deflate(&self, r: &T) -> Result<(Self, T), PolyError> {
        let n = self.nonconstant_degree()?;
        let a = &self.coeffs;
        let mut q = vec![T::zero(); n];
        q[n - 1] = a[n].clone();
        for j in (1..n).rev() {
            q[j - 1] = a[j].clone() + r.clone() * q[j].clone();
        }
        let rem = a[0].clone() + r.clone() * q[0].clone();
        Ok((Self::new(q), rem))
    }

    /// Cauchy-type enclosure radius `max(1, sum_{j<n} |a_j| / |a_n|) + 1`.
    /// Every root has modulus strictly below it.
    pub fn root_bound(&self) -> Result<f64, PolyError> {
        let n = self.nonconstant_degree()?;
        let lead = self.coeffs[n].magnitude();
        let tail: f64 = self.coeffs[..n].iter().map(Scalar::magnitude).sum();
        Ok((tail / lead).max(1.0) + 1.0)
    }

    /// `sum_j |a_j| max(1, R)^j` with `R = root_bound`; an upper bound on
    /// `|P|` over the enclosure disc, used to make tolerances relative.
    pub fn scale(&self) -> Result<f64, PolyError> {
        let radius = self.root_bound()?.max(1.0);
        Ok(self.eval_abs(radius))
    }

    /// `sum_j |a_j| t^j`, the majorant of `|P(z)|` on `|z| = t`.
    pub fn eval_abs(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, a| acc * t + a.magnitude())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl ComplexPoly {
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(re, im)| Complex64::new(re, im))
                .collect(),
        )
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&re| Complex64::new(re, 0.0)).collect())
    }
}

impl ExactPoly {
    pub fn to_complex(&self) -> ComplexPoly {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(GaussianRational::to_complex64)
                .collect(),
        )
    }
}

/// `P(z0 + w) = c0 + w^k Q(w)`, `Q(w) = sum_{j >= k} shifted[j] w^(j-k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalForm<T> {
    pub k: usize,
    pub c0: T,
    pub ck: T,
    pub shifted: Vec<T>,
}

impl<T: Scalar> LocalForm<T> {
    /// Coefficients of `Q`, starting with `Q(0) = ck`.
    pub fn q_coeffs(&self) -> &[T] {
        &self.shifted[self.k..]
    }

    /// Coefficients of `R` in `Q(w) = Q(0) + w R(w)`.
    pub fn r_coeffs(&self) -> &[T] {
        &self.shifted[self.k + 1..]
    }

    /// `conj(c0) * ck`, whose sign pattern decides the descent direction.
    pub fn alpha(&self) -> T {
        self.c0.conj() * self.ck.clone()
    }
}

/// Exact `n choose j` by the multiplicative rule.
pub fn binomial(n: u64, j: u64) -> Result<BigUint, PolyError> {
    if j > n {
        return Err(PolyError::BinomialDomain { n, j });
    }
    let j = j.min(n - j);
    let mut acc = BigUint::one();
    for i in 0..j {
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}
