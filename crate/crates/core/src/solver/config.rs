use serde::{Deserialize, Serialize};

use super::SolveError;

/// Tuning knobs for the descent solver.
///
/// Step sizes only ever move by `step_growth` / `step_shrink`, which default
/// to 2 and 1/2, so every trial radius is a dyadic multiple of the first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DescentConfig {
    /// Relative residual at which a point is accepted as a root.
    pub tol_residual: f64,
    /// Relative threshold for detecting the local order `k`.
    pub tau_k_detect: f64,
    /// Accepted steps per attempt.
    pub max_iters: usize,
    /// Halvings tried before a step is declared failed.
    pub max_backtracks: usize,
    pub step_growth: f64,
    pub step_shrink: f64,
    /// Fraction of the leading-order decrease a step must achieve.
    pub sufficient_decrease_sigma: f64,
    /// Restarts after the initial attempt.
    pub restart_attempts: usize,
    /// Extra steps taken once the residual test passes, and the step budget
    /// when polishing against the original polynomial.
    pub polish_iters: usize,
    /// Offset into the restart point sequence.
    pub seed: u64,
}

impl Default for DescentConfig {
    fn default() -> Self {
        Self {
            tol_residual: 1e-10,
            tau_k_detect: 1e-12,
            max_iters: 10_000,
            max_backtracks: 200,
            step_growth: 2.0,
            step_shrink: 0.5,
            sufficient_decrease_sigma: 0.5,
            restart_attempts: 8,
            polish_iters: 100,
            seed: 0,
        }
    }
}

pub const CONFIG_KEYS: &[&str] = &[
    "tol_residual",
    "tau_k_detect",
    "max_iters",
    "max_backtracks",
    "step_growth",
    "step_shrink",
    "sufficient_decrease_sigma",
    "restart_attempts",
    "polish_iters",
    "seed",
];

impl DescentConfig {
    pub fn validate(&self) -> Result<(), SolveError> {
        let bad = |msg: &str| Err(SolveError::InvalidConfig(msg.to_string()));
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.tol_residual) {
            return bad("tol_residual must be positive");
        }
        if !positive(self.tau_k_detect) || self.tau_k_detect >= 1.0 {
            return bad("tau_k_detect must lie in (0, 1)");
        }
        if self.max_iters == 0 || self.max_backtracks == 0 {
            return bad("max_iters and max_backtracks must be positive");
        }
        if !(self.step_growth.is_finite() && self.step_growth >= 1.0) {
            return bad("step_growth must be at least 1");
        }
        if !(positive(self.step_shrink) && self.step_shrink < 1.0) {
            return bad("step_shrink must lie in (0, 1)");
        }
        if !(positive(self.sufficient_decrease_sigma) && self.sufficient_decrease_sigma <= 1.0) {
            return bad("sufficient_decrease_sigma must lie in (0, 1]");
        }
        Ok(())
    }

    /// Applies one `key=value` override.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), SolveError> {
        fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, SolveError> {
            value
                .trim()
                .parse()
                .map_err(|_| SolveError::InvalidConfig(format!("bad value {value:?} for {key}")))
        }
        match key.trim() {
            "tol_residual" => self.tol_residual = num(key, value)?,
            "tau_k_detect" => self.tau_k_detect = num(key, value)?,
            "max_iters" => self.max_iters = num(key, value)?,
            "max_backtracks" => self.max_backtracks = num(key, value)?,
            "step_growth" => self.step_growth = num(key, value)?,
            "step_shrink" => self.step_shrink = num(key, value)?,
            "sufficient_decrease_sigma" => self.sufficient_decrease_sigma = num(key, value)?,
            "restart_attempts" => self.restart_attempts = num(key, value)?,
            "polish_iters" => self.polish_iters = num(key, value)?,
            "seed" => self.seed = num(key, value)?,
            other => {
                return Err(SolveError::InvalidConfig(format!(
                    "unknown config key {other:?} (known: {})",
                    CONFIG_KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }
}
