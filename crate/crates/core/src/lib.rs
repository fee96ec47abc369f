//! Exact computational kernel for root systems, Chevalley structure
//! constants, nilpotent orbits and their Fourier-coefficient data,
//! dimension-equation tables, Weyl double cosets, explicit matrix
//! realizations, and a finite-field model of the Weil representation.
//!
//! Everything on the algebraic side is exact rational arithmetic; the only
//! floating point lives in the finite Weil representation checks, where
//! values are sums of roots of unity compared against 1e-8.

pub mod error;
pub mod num;
pub mod matrix;
pub mod orbits;
pub mod realize;
pub mod chevalley;
pub mod coeffs;
pub mod dimeq;
pub mod heis;
pub mod rootsys;
pub mod unfold;
pub mod weilrep;

pub use error::LieError;
pub use num::{q, qr, Rat};
pub use rootsys::{Root, RootSystem, WeylElem, WeylGroup, WeylWord};
