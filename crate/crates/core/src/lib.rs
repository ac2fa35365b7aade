//! Exact algebra for quantum mirror curves.
//!
//! The crate builds the open-string partition functions of three geometries
//! (the Lambert curve of Hurwitz theory, framed `C^3`, and the framed
//! resolved conifold) as truncated power series with exact rational-function
//! coefficients, and checks that the corresponding quantum curve operators
//! annihilate them coefficient by coefficient.
//!
//! Layers, bottom up:
//!
//! * [`ring`]: rationals, Laurent polynomials, reduced rational functions
//!   with univariate denominators, and truncated `x`-series.
//! * [`combinatorics`]: partitions, hooks and contents, `z_mu`, `kappa_mu`,
//!   and symmetric-group characters via Murnaghan–Nakayama.
//! * [`symfun`]: symmetric functions in the power-sum basis, Schur
//!   expansion, the cut-and-join operator and specializations.
//! * [`hurwitz`]: Hurwitz numbers from the Burnside generating function.
//! * [`qcurve`]: partition functions, curve operators and verification.

pub mod combinatorics;
pub mod error;
pub mod hurwitz;
pub mod qcurve;
pub mod ring;
pub mod symfun;

pub use combinatorics::Partition;
pub use error::{AlgebraError, RingError};
pub use ring::{LPoly, Mono, Rat, RatFun, Symbol, XSeries};
