//! Complex polynomial root finding by descent on `|P|^2` along explicitly
//! constructed directions, without angles, derivatives or root extraction,
//! together with an exact-arithmetic checker for the inequality that makes
//! those directions work.
//!
//! - [`gaussian_rational`]: exact arithmetic over `Q(i)`.
//! - [`poly`]: polynomials, Horner evaluation, Taylor shift, local form,
//!   deflation and the enclosure radius.
//! - [`estermann`]: exact verification of `Re[zeta^k] < 0 < Im[zeta^k]`
//!   for `zeta = (1 + i/k)^2` and the descent-direction sets.
//! - [`solver`]: descent steps, single and all-roots drivers, nth roots.
//! - [`cli`]: the `fta` command-line front end.

pub mod cli;
pub mod estermann;
pub mod gaussian_rational;
pub mod poly;
pub mod solver;

pub use gaussian_rational::GaussianRational;
pub use poly::{ComplexPoly, ExactPoly, LocalForm, Polynomial};
pub use solver::{DescentConfig, RootResult, SolveError};
