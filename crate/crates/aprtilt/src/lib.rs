//! Exact computations with finite-dimensional quiver algebras: projective
//! resolutions, higher Auslander-Reiten translations, APR tilting modules,
//! truncated higher preprojective algebras and quivers with potential.
//!
//! All paths compose left to right: `a*b` means first `a`, then `b`.  A right
//! module assigns to an arrow `a: i -> j` a linear map `M_i -> M_j`.

pub mod error;
pub mod exactla;
pub mod quiver;
pub mod presalg;
pub mod repmod;
pub mod proj;
pub mod homalg;
pub mod apr;
pub mod preproj;
pub mod qp;
pub mod cli;

pub use error::{Error, Result};
pub use exactla::{Field, Fp, Matrix, Rational};
