//! Exact verification of Estermann's inequality and construction of the
//! descent directions it provides.
//!
//! For even `k >= 2` and `zeta = (1 + i/k)^2` we have
//! `Re[zeta^k] < 0 < Im[zeta^k]`. [`verify_lemma`] checks this claim, the
//! head-term chain and the sign of every grouped pair term, in exact
//! arithmetic, for one `k` at a time.
//!
//! The direction sets are what the solver consumes: for odd `k` the four
//! units `1, -1, i, -i`; for even `k` the triple `1, zeta, conj(zeta)`.
//! Whenever `alpha != 0` one of them makes `Re[alpha * z^k]` strictly
//! negative.

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::gaussian_rational::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error("k must be even and at least 2, got {0}")]
    NotEvenPositive(u64),
    #[error("k must be at least 1")]
    ZeroOrder,
}

fn require_even(k: u64) -> Result<(), LemmaError> {
    if k >= 2 && k.is_multiple_of(2) {
        Ok(())
    } else {
        Err(LemmaError::NotEvenPositive(k))
    }
}

fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `(1 + i/k)^2 = (1 - 1/k^2) + (2/k) i`.
pub fn estermann_zeta(k: u64) -> Result<GaussianRational, LemmaError> {
    require_even(k)?;
    let kk = BigInt::from(k);
    Ok(GaussianRational::new(
        ratio(&kk * &kk - 1, &kk * &kk),
        ratio(2, kk),
    ))
}

/// Row `C(n, 0..=n)` of Pascal's triangle.
fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

/// Integer pieces of the grouped expansion of `(1 + i/k)^(2k)`.
///
/// The real part is the head `1 - C(2k,2)/k^2 + C(2k,4)/k^4` plus pairs
/// `-C(2k,2j)/k^(2j) + C(2k,2j+2)/k^(2j+2)` over odd `3 <= j <= k-1`; the
/// imaginary part is the pairs `C(2k,2j-1)/k^(2j-1) - C(2k,2j+1)/k^(2j+1)`
/// over odd `1 <= j <= k-1`. Each piece is kept as an integer numerator
/// over its natural power of `k`.
struct GroupedExpansion {
    k: u64,
    /// Head times `k^4`.
    head: BigInt,
    /// `(j, numerator over k^(2j+2))`.
    re_pairs: Vec<(u64, BigInt)>,
    /// `(j, numerator over k^(2j+1))`.
    im_pairs: Vec<(u64, BigInt)>,
}

impl GroupedExpansion {
    fn new(k: u64) -> Self {
        let c = binomial_row(2 * k);
        let k2 = BigInt::from(k * k);
        let head = &k2 * &k2 - &c[2] * &k2 + &c[4];
        let re_pairs = (3..k)
            .step_by(2)
            .map(|j| {
                let j_ = j as usize;
                (j, -&c[2 * j_] * &k2 + &c[2 * j_ + 2])
            })
            .collect();
        let im_pairs = (1..k)
            .step_by(2)
            .map(|j| {
                let j_ = j as usize;
                (j, &c[2 * j_ - 1] * &k2 - &c[2 * j_ + 1])
            })
            .collect();
        Self {
            k,
            head,
            re_pairs,
            im_pairs,
        }
    }

    /// Sums the pieces over the common denominator `k^(2k)`.
    fn total(&self) -> GaussianRational {
        let k = BigInt::from(self.k);
        let k4 = BigInt::from(self.k).pow(4);
        let denom = k.pow(2 * self.k as u32);
        // Consecutive odd j differ by 4 in the exponent of k.
        let re_tail = self
            .re_pairs
            .iter()
            .fold(BigInt::zero(), |acc, (_, p)| acc * &k4 + p);
        let re = &self.head * k.pow(2 * self.k as u32 - 4) + re_tail;
        let im = self
            .im_pairs
            .iter()
            .fold(BigInt::zero(), |acc, (_, q)| acc * &k4 + q)
            * &k;
        GaussianRational::new(
            BigRational::new(re, denom.clone()),
            BigRational::new(im, denom),
        )
    }
}

/// `zeta^k` assembled term by term from the grouped binomial sums.
pub fn zeta_pow_via_binomial(k: u64) -> Result<GaussianRational, LemmaError> {
    require_even(k)?;
    Ok(GroupedExpansion::new(k).total())
}

fn sign_of_int(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Outcome of checking the lemma for one even `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaReport {
    pub k: u64,
    pub zeta_pow: GaussianRational,
    pub sign_re: i8,
    pub sign_im: i8,
    /// `1 - C(2k,2)/k^2 + C(2k,4)/k^4`.
    pub head_value: BigRational,
    /// `-(3/2) (5k - 3) / (6k^2)`.
    pub head_closed_form: BigRational,
    /// The head equals `1 - (2 - 1/k)(2/3 + 5/(6k) - 1/(2k^2))`.
    pub head_factored_identity: bool,
    /// `head_value <= head_closed_form < 0`.
    pub head_chain_holds: bool,
    /// Signs of the real-part pairs, odd `j` from 3 to `k - 1`.
    pub re_pair_signs: Vec<i8>,
    /// Signs of the imaginary-part pairs, odd `j` from 1 to `k - 1`.
    pub im_pair_signs: Vec<i8>,
    pub pass: bool,
}

#[derive(Serialize)]
struct ExactText {
    re: String,
    im: String,
}

#[derive(Serialize)]
struct LemmaReportJson<'a> {
    k: u64,
    zeta_pow: ExactText,
    sign_re: i8,
    sign_im: i8,
    head_value: String,
    head_closed_form: String,
    head_factored_identity: bool,
    head_chain_holds: bool,
    re_pair_signs: &'a [i8],
    im_pair_signs: &'a [i8],
    pass: bool,
}

impl Serialize for LemmaReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LemmaReportJson {
            k: self.k,
            zeta_pow: ExactText {
                re: self.zeta_pow.re().to_string(),
                im: self.zeta_pow.im().to_string(),
            },
            sign_re: self.sign_re,
            sign_im: self.sign_im,
            head_value: self.head_value.to_string(),
            head_closed_form: self.head_closed_form.to_string(),
            head_factored_identity: self.head_factored_identity,
            head_chain_holds: self.head_chain_holds,
            re_pair_signs: &self.re_pair_signs,
            im_pair_signs: &self.im_pair_signs,
            pass: self.pass,
        }
        .serialize(serializer)
    }
}

/// Checks the lemma for one even `k`, exactly.
pub fn verify_lemma(k: u64) -> Result<LemmaReport, LemmaError> {
    require_even(k)?;
    let expansion = GroupedExpansion::new(k);
    let zeta_pow = expansion.total();
    let (sign_re, sign_im) = zeta_pow.signs();

    let kq = int(k);
    let head_value = BigRational::new(expansion.head.clone(), BigInt::from(k).pow(4));
    let head_closed_form = ratio(-3, 2) * ratio(5 * k - 3, 6 * k * k);
    let middle =
        int(1) - (int(2) - kq.recip()) * (ratio(2, 3) + ratio(5, 6 * k) - ratio(1, 2 * k * k));
    let head_factored_identity = head_value == middle;
    let head_chain_holds = head_value <= head_closed_form && head_closed_form.is_negative();

    let re_pair_signs: Vec<i8> = expansion
        .re_pairs
        .iter()
        .map(|(_, p)| sign_of_int(p))
        .collect();
    let im_pair_signs: Vec<i8> = expansion
        .im_pairs
        .iter()
        .map(|(_, q)| sign_of_int(q))
        .collect();

    let pass = sign_re == -1
        && sign_im == 1
        && re_pair_signs.iter().all(|&s| s == -1)
        && im_pair_signs.iter().all(|&s| s == 1)
        && head_value.is_negative();

    Ok(LemmaReport {
        k,
        zeta_pow,
        sign_re,
        sign_im,
        head_value,
        head_closed_form,
        head_factored_identity,
        head_chain_holds,
        re_pair_signs,
        im_pair_signs,
        pass,
    })
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Checks that every pair term equals its factored form with a positive
/// bracket, for one even `k`:
///
/// `-C(2k,2j)/k^(2j) + C(2k,2j+2)/k^(2j+2)
///   = -(2k)!/((2j)! k^(2j) (2k-2j-2)!) [1/((2k-2j)(2k-2j-1)) - 1/((2kj+2k)(2kj+k))]`
///
/// `C(2k,2j-1)/k^(2j-1) - C(2k,2j+1)/k^(2j+1)
///   = (2k)!/((2j-1)! (2k-2j-1)!) / k^(2j-1) [1/((2k-2j+1)(2k-2j)) - 1/((2kj+k)(2kj))]`
pub fn pair_factorizations_hold(k: u64) -> Result<bool, LemmaError> {
    require_even(k)?;
    let expansion = GroupedExpansion::new(k);
    let two_k_fact = factorial(2 * k);
    let kb = BigInt::from(k);
    let re_ok = expansion.re_pairs.iter().all(|(j, p)| {
        let j = *j;
        let lhs = BigRational::new(p.clone(), kb.pow(2 * j as u32 + 2));
        let bracket = ratio(1, (2 * k - 2 * j) * (2 * k - 2 * j - 1))
            - ratio(1, (2 * k * j + 2 * k) * (2 * k * j + k));
        let outer = BigRational::new(
            two_k_fact.clone(),
            factorial(2 * j) * kb.pow(2 * j as u32) * factorial(2 * k - 2 * j - 2),
        );
        bracket.is_positive() && lhs == -outer * bracket
    });
    let im_ok = expansion.im_pairs.iter().all(|(j, q)| {
        let j = *j;
        let lhs = BigRational::new(q.clone(), kb.pow(2 * j as u32 + 1));
        let bracket = ratio(1, (2 * k - 2 * j + 1) * (2 * k - 2 * j))
            - ratio(1, (2 * k * j + k) * (2 * k * j));
        let outer = BigRational::new(
            two_k_fact.clone(),
            factorial(2 * j - 1) * factorial(2 * k - 2 * j - 1) * kb.pow(2 * j as u32 - 1),
        );
        bracket.is_positive() && lhs == outer * bracket
    });
    Ok(re_ok && im_ok)
}

/// A candidate direction with its exact `k`-th power.
#[derive(Debug, Clone, PartialEq)]
pub struct Direction {
    pub zeta: GaussianRational,
    pub zeta_pow: GaussianRational,
}

/// Canonical candidate directions for local order `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectionSet {
    pub k: u64,
    pub candidates: Vec<Direction>,
}

/// Exact choice made by [`DirectionSet::select_exact`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSelection {
    pub index: usize,
    pub zeta: GaussianRational,
    /// `Re[alpha * zeta^k]`, strictly negative.
    pub descent_value: BigRational,
}

/// `Re[a * b]`.
fn re_of_product(a: &GaussianRational, b: &GaussianRational) -> BigRational {
    a.re() * b.re() - a.im() * b.im()
}

/// `[1, -1, i, -i]` for odd `k`, `[1, zeta, conj(zeta)]` for even `k`.
pub fn candidates(k: u64) -> Result<DirectionSet, LemmaError> {
    if k == 0 {
        return Err(LemmaError::ZeroOrder);
    }
    let zetas = if k % 2 == 1 {
        vec![
            GaussianRational::one(),
            GaussianRational::from_integers(-1, 0),
            GaussianRational::i(),
            GaussianRational::from_integers(0, -1),
        ]
    } else {
        let z = estermann_zeta(k)?;
        let zc = z.conj();
        vec![GaussianRational::one(), z, zc]
    };
    let candidates = zetas
        .into_iter()
        .map(|zeta| {
            let zeta_pow = zeta.pow(k);
            Direction { zeta, zeta_pow }
        })
        .collect();
    Ok(DirectionSet { k, candidates })
}

impl DirectionSet {
    /// The candidate minimizing `Re[alpha * zeta^k]`, first one on ties.
    /// `None` when no candidate gives a strictly negative value, which
    /// happens exactly when `alpha = 0`.
    pub fn select_exact(&self, alpha: &GaussianRational) -> Option<ExactSelection> {
        let mut best: Option<ExactSelection> = None;
        for (index, d) in self.candidates.iter().enumerate() {
            let value = re_of_product(alpha, &d.zeta_pow);
            if best.as_ref().is_none_or(|b| value < b.descent_value) {
                best = Some(ExactSelection {
                    index,
                    zeta: d.zeta.clone(),
                    descent_value: value,
                });
            }
        }
        best.filter(|b| b.descent_value.is_negative())
    }

    pub fn to_float(&self) -> FloatDirections {
        FloatDirections {
            k: self.k,
            zetas: self
                .candidates
                .iter()
                .map(|d| d.zeta.to_complex64())
                .collect(),
            powers: self
                .candidates
                .iter()
                .map(|d| d.zeta_pow.to_complex64())
                .collect(),
        }
    }
}

/// Double-precision copy of a [`DirectionSet`], for the solver's hot loop.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatDirections {
    pub k: u64,
    pub zetas: Vec<Complex64>,
    pub powers: Vec<Complex64>,
}

/// Relative tolerance below which a descent value counts as zero.
pub const ALPHA_ZERO_TOL: f64 = 1e-14;

impl FloatDirections {
    pub fn for_order(k: u64) -> Result<Self, LemmaError> {
        Ok(candidates(k)?.to_float())
    }

    /// Floating counterpart of [`DirectionSet::select_exact`]. Values not
    /// below `-ALPHA_ZERO_TOL * |alpha|` are treated as zero, so `None`
    /// means `alpha` vanishes numerically. Since `alpha = conj(c0) ck`,
    /// `|alpha| = |c0| |ck|` and the cut is scale invariant.
    pub fn select(&self, alpha: Complex64) -> Option<(usize, Complex64, f64)> {
        let cut = -ALPHA_ZERO_TOL * alpha.norm();
        let mut best: Option<(usize, f64)> = None;
        for (i, p) in self.powers.iter().enumerate() {
            let v = alpha.re * p.re - alpha.im * p.im;
            if best.is_none_or(|(_, b)| v < b) {
                best = Some((i, v));
            }
        }
        best.filter(|&(_, v)| v < cut && v < 0.0)
            .map(|(i, v)| (i, self.zetas[i], v))
    }
}

/// Exact direction choice for `alpha` at order `k`.
pub fn select_direction(
    alpha: &GaussianRational,
    k: u64,
) -> Result<Option<ExactSelection>, LemmaError> {
    Ok(candidates(k)?.select_exact(alpha))
}

/// Floating direction choice for `alpha` at order `k`: `(zeta, descent value)`.
pub fn select_direction_f64(
    alpha: Complex64,
    k: u64,
) -> Result<Option<(Complex64, f64)>, LemmaError> {
    Ok(FloatDirections::for_order(k)?
        .select(alpha)
        .map(|(_, z, v)| (z, v)))
}

/// `|zeta|^2 = (1 - 1/k^2)^2 + 4/k^2 = (1 + 1/k^2)^2`, so `|zeta| = 1 + 1/k^2`.
/// Returns whether `1 < |zeta|^2 <= (1 + 2/k + 1/k^2)^2`.
pub fn zeta_modulus_in_range(k: u64) -> Result<bool, LemmaError> {
    let n = estermann_zeta(k)?.norm_sqr();
    let upper = int(1) + ratio(2, k) + ratio(1, k * k);
    Ok(n > int(1) && n <= &upper * &upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gq(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_ratios(a, b, c, d)
    }

    #[test]
    fn zeta_values() {
        assert_eq!(estermann_zeta(2).unwrap(), gq(3, 4, 1, 1));
        assert_eq!(estermann_zeta(4).unwrap(), gq(15, 16, 1, 2));
        assert_eq!(estermann_zeta(3), Err(LemmaError::NotEvenPositive(3)));
        assert_eq!(estermann_zeta(0), Err(LemmaError::NotEvenPositive(0)));
    }

    #[test]
    fn zeta_is_square_of_one_plus_i_over_k() {
        for k in (2..40).step_by(2) {
            let base = gq(1, 1, 1, k as i64);
            assert_eq!(estermann_zeta(k).unwrap(), &base * &base);
        }
    }

    #[test]
    fn binomial_route_at_k2() {
        assert_eq!(zeta_pow_via_binomial(2).unwrap(), gq(-7, 16, 3, 2));
        assert_eq!(
            zeta_pow_via_binomial(7),
            Err(LemmaError::NotEvenPositive(7))
        );
    }

    /// Independent oracle: sum every term of the binomial expansion of
    /// `(1 + i/k)^(2k)` as a Gaussian rational, with no grouping.
    fn brute_expansion(k: u64) -> GaussianRational {
        let base = gq(0, 1, 1, k as i64);
        let mut acc = GaussianRational::zero();
        for i in 0..=2 * k {
            let c = crate::poly::binomial(2 * k, i).unwrap();
            let coeff = GaussianRational::from_real(BigRational::from_integer(c.into()));
            acc = acc + &coeff * &base.pow(i);
        }
        acc
    }

    #[test]
    fn binomial_route_matches_oracles() {
        for k in (2..=40).step_by(2) {
            let grouped = zeta_pow_via_binomial(k).unwrap();
            assert_eq!(grouped, estermann_zeta(k).unwrap().pow(k), "k={k}");
            assert_eq!(grouped, brute_expansion(k), "k={k}");
        }
        assert_eq!(zeta_pow_via_binomial(4).unwrap().signs(), (-1, 1));
    }

    #[test]
    fn report_at_k2() {
        let r = verify_lemma(2).unwrap();
        assert!(r.pass);
        assert_eq!(r.zeta_pow, gq(-7, 16, 3, 2));
        assert_eq!(r.head_value, ratio(-7, 16));
        assert_eq!(r.head_closed_form, ratio(-7, 16));
        assert!(r.head_factored_identity && r.head_chain_holds);
        assert!(r.re_pair_signs.is_empty());
        assert_eq!(r.im_pair_signs, vec![1]);
        assert_eq!((r.sign_re, r.sign_im), (-1, 1));
    }

    #[test]
    fn report_pair_counts() {
        let r = verify_lemma(8).unwrap();
        assert_eq!(r.re_pair_signs.len(), 3); // j = 3, 5, 7
        assert_eq!(r.im_pair_signs.len(), 4); // j = 1, 3, 5, 7
        assert!(r.pass);
        assert_eq!(verify_lemma(0), Err(LemmaError::NotEvenPositive(0)));
        assert_eq!(verify_lemma(5), Err(LemmaError::NotEvenPositive(5)));
    }

    #[test]
    fn head_chain_is_strict_above_k2() {
        // "<=" in the chain is equality only where 2 - 1/k = 3/2.
        for k in (4..60).step_by(2) {
            let r = verify_lemma(k).unwrap();
            assert!(r.head_value < r.head_closed_form, "k={k}");
        }
    }

    #[test]
    fn pair_factorizations() {
        for k in (2..=40).step_by(2) {
            assert!(pair_factorizations_hold(k).unwrap(), "k={k}");
        }
    }

    #[test]
    fn report_json_shape() {
        let v = serde_json::to_value(verify_lemma(4).unwrap()).unwrap();
        assert_eq!(v["k"], 4);
        // sum_m (-1)^m C(8,2m) 4^(8-2m) = 65536 - 114688 + 17920 - 448 + 1
        assert_eq!(v["zeta_pow"]["re"], "-31679/65536");
        assert_eq!(v["pass"], true);
        assert_eq!(v["re_pair_signs"], serde_json::json!([-1]));
        assert_eq!(v["im_pair_signs"], serde_json::json!([1, 1]));
    }

    #[test]
    fn candidate_sets() {
        let odd = candidates(1).unwrap();
        let zetas: Vec<_> = odd.candidates.iter().map(|d| d.zeta.clone()).collect();
        assert_eq!(
            zetas,
            vec![
                gq(1, 1, 0, 1),
                gq(-1, 1, 0, 1),
                gq(0, 1, 1, 1),
                gq(0, 1, -1, 1)
            ]
        );
        let two = candidates(2).unwrap();
        let zetas: Vec<_> = two.candidates.iter().map(|d| d.zeta.clone()).collect();
        assert_eq!(zetas, vec![gq(1, 1, 0, 1), gq(3, 4, 1, 1), gq(3, 4, -1, 1)]);
        assert_eq!(two.candidates[1].zeta_pow, gq(-7, 16, 3, 2));
        assert_eq!(two.candidates[2].zeta_pow, gq(-7, 16, -3, 2));
        let four = candidates(4).unwrap();
        assert_eq!(four.candidates[1].zeta, gq(15, 16, 1, 2));
        assert_eq!(four.candidates[2].zeta, gq(15, 16, -1, 2));
        assert_eq!(candidates(0), Err(LemmaError::ZeroOrder));
        for k in (1..=15).step_by(2) {
            let units: Vec<_> = candidates(k)
                .unwrap()
                .candidates
                .iter()
                .map(|d| d.zeta_pow.clone())
                .collect();
            for u in [
                gq(1, 1, 0, 1),
                gq(-1, 1, 0, 1),
                gq(0, 1, 1, 1),
                gq(0, 1, -1, 1),
            ] {
                assert!(units.contains(&u));
            }
        }
        for k in (2..=30).step_by(2) {
            assert_eq!(
                candidates(k).unwrap().candidates[1].zeta_pow.signs(),
                (-1, 1)
            );
        }
    }

    #[test]
    fn selection_examples() {
        let s = select_direction(&GaussianRational::one(), 2)
            .unwrap()
            .unwrap();
        assert_eq!((s.index, s.descent_value.clone()), (1, ratio(-7, 16)));
        assert_eq!(s.zeta, gq(3, 4, 1, 1));

        let s = select_direction(&GaussianRational::i(), 2)
            .unwrap()
            .unwrap();
        assert_eq!((s.index, s.descent_value), (1, ratio(-3, 2)));

        for k in 1..6 {
            assert_eq!(
                select_direction(&GaussianRational::zero(), k).unwrap(),
                None
            );
        }

        let (z, v) = select_direction_f64(Complex64::new(1.0, 0.0), 2)
            .unwrap()
            .unwrap();
        assert_eq!(z, Complex64::new(0.75, 1.0));
        assert_eq!(v, -7.0 / 16.0);
        assert_eq!(
            select_direction_f64(Complex64::new(0.0, 0.0), 3).unwrap(),
            None
        );
        assert_eq!(
            select_direction_f64(Complex64::new(1.0, 0.0), 0),
            Err(LemmaError::ZeroOrder)
        );
    }

    #[test]
    fn guaranteed_descent_on_a_grid() {
        let sets: Vec<_> = (1..=30).map(|k| candidates(k).unwrap()).collect();
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                if a == 0 && b == 0 {
                    continue;
                }
                let alpha = gq(a, 3, b, 5);
                for set in &sets {
                    let s = set.select_exact(&alpha).expect("descent exists");
                    assert!(s.descent_value.is_negative());
                }
            }
        }
    }

    #[test]
    fn zeta_modulus_bounds() {
        for k in (2..=200).step_by(2) {
            assert!(zeta_modulus_in_range(k).unwrap(), "k={k}");
        }
    }
}
