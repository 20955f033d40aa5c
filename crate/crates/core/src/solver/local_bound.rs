//! Diagnostic for the inequality `-2 Re[conj(P(z0)) zeta^k Q(0)] <= 3 r M`
//! on dyadic `r` in `(0, 1)`.
//!
//! At a minimum of `|P|` the inequality holds for every such `r`; at other
//! points it fails for small `r` along any descent direction, which is what
//! the report makes visible.

use num_complex::Complex64;
use serde::Serialize;

use super::SolveError;
use crate::poly::{ComplexPoly, DEFAULT_TAU};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Remark2Sample {
    pub r: f64,
    /// `2 r M + r^k M`.
    pub two_term_bound: f64,
    /// `3 r M`.
    pub bound: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Remark2Report {
    pub k: usize,
    /// `-2 Re[conj(c0) zeta^k Q(0)]`.
    pub lhs: f64,
    /// Majorant `M` used for every sample.
    pub m_bound: f64,
    pub samples: Vec<Remark2Sample>,
    pub all_satisfied: bool,
}

/// Evaluates the inequality at `r = 1/2, 1/4, ..., 2^-r_samples`.
///
/// `M` is the coefficient-sum majorant
/// `max(|c0| |zeta|^(k+1) sum_j |R_j| |zeta|^j, (sum_j |Q_j| |zeta|^(k+j))^2)`,
/// valid for every `r` in `(0, 1)`, where `Q(w) = Q(0) + w R(w)` comes from
/// the local form at `z0`.
pub fn verify_remark2_bound(
    p: &ComplexPoly,
    z0: Complex64,
    zeta: Complex64,
    r_samples: u32,
) -> Result<Remark2Report, SolveError> {
    if r_samples == 0 {
        return Err(SolveError::InvalidInput(
            "r_samples must be at least 1".into(),
        ));
    }
    let lf = p.local_form(&z0, DEFAULT_TAU)?;
    let k = lf.k;
    let zabs = zeta.norm();
    let majorant = |coeffs: &[Complex64]| -> f64 {
        coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * zabs + c.norm())
    };
    let r_term = lf.c0.norm() * zabs.powi(k as i32 + 1) * majorant(lf.r_coeffs());
    let q_term = (zabs.powi(k as i32) * majorant(lf.q_coeffs())).powi(2);
    let m_bound = r_term.max(q_term);
    let lhs = -2.0 * (lf.c0.conj() * zeta.powu(k as u32) * lf.ck).re;

    let samples: Vec<Remark2Sample> = (1..=r_samples)
        .map(|e| {
            let r = 0.5f64.powi(e as i32);
            let bound = 3.0 * r * m_bound;
            Remark2Sample {
                r,
                two_term_bound: 2.0 * r * m_bound + r.powi(k as i32) * m_bound,
                bound,
                satisfied: lhs <= bound,
            }
        })
        .collect();
    let all_satisfied = samples.iter().all(|s| s.satisfied);
    Ok(Remark2Report {
        k,
        lhs,
        m_bound,
        samples,
        all_satisfied,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn unit_direction_on_z2_plus_1() {
        let p = ComplexPoly::from_real(&[1.0, 0.0, 1.0]);
        let rep = verify_remark2_bound(&p, c(0.0, 0.0), c(1.0, 0.0), 12).unwrap();
        assert_eq!(rep.k, 2);
        assert_eq!(rep.lhs, -2.0);
        assert_eq!(rep.m_bound, 1.0);
        assert_eq!(rep.samples.len(), 12);
        assert!(rep.all_satisfied);
    }

    #[test]
    fn lemma_direction_on_z2_plus_1() {
        let p = ComplexPoly::from_real(&[1.0, 0.0, 1.0]);
        let rep = verify_remark2_bound(&p, c(0.0, 0.0), c(0.75, 1.0), 6).unwrap();
        assert_eq!(rep.lhs, 7.0 / 8.0);
        assert_eq!(rep.m_bound, 625.0 / 256.0);
        // 3 r M >= 7/8 exactly for r >= 224/1875, i.e. r in {1/2, 1/4, 1/8}.
        let sat: Vec<bool> = rep.samples.iter().map(|s| s.satisfied).collect();
        assert_eq!(sat, vec![true, true, true, false, false, false]);
    }

    #[test]
    fn holds_everywhere_at_a_root() {
        let p = ComplexPoly::from_real(&[-1.0, 0.0, 1.0]);
        for zeta in [c(1.0, 0.0), c(0.75, 1.0), c(-0.3, 2.0)] {
            let rep = verify_remark2_bound(&p, c(1.0, 0.0), zeta, 30).unwrap();
            assert_eq!(rep.lhs, 0.0);
            assert!(rep.all_satisfied);
        }
    }

    #[test]
    fn zero_samples_rejected() {
        let p = ComplexPoly::from_real(&[1.0, 0.0, 1.0]);
        assert!(matches!(
            verify_remark2_bound(&p, c(0.0, 0.0), c(1.0, 0.0), 0),
            Err(SolveError::InvalidInput(_))
        ));
    }
}
