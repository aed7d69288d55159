//! Real-order Bessel functions, their positive real zeros, and numerical
//! verification of the interlacing inequalities between those zeros.
//!
//! The crate is organised bottom-up:
//!
//! * [`special`] evaluates `J_nu`, `Y_nu` and their derivatives,
//! * [`zeros`] enumerates bracketed zeros `j_{nu,s}`, `y_{nu,s}`, `j'_{nu,s}`, `y'_{nu,s}`,
//! * [`interlace`] builds and checks the ordering chains between them,
//! * [`wronskian`] studies the cross-order Wronskian and the sign structure of `Y`.

pub mod error;
pub mod interlace;
pub mod special;
pub mod wronskian;
pub mod zeros;

pub use error::{Error, Result};
pub use special::{
    bessel_jy, eval_cylinder, eval_dj, eval_dy, eval_j, eval_y, Argument, BesselJY, CylinderMix,
    EvalResult, Order, NU_MAX,
};
