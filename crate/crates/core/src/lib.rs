//! Exact intersection-cohomology bookkeeping for special Schubert varieties.
//!
//! A special (single-condition) Schubert variety is the locus of `k`-planes
//! `V` in `C^l` meeting a fixed `j`-plane `F` in dimension at least `i`. This
//! crate computes, with exact integer arithmetic, its stratum invariants, the
//! Poincaré polynomials of intersection cohomology, the multiplicity tables of
//! the decomposition of the pushforward along the natural resolution, IC
//! stalks, and the partition maps that realize Gysin morphisms on Schur bases.
//!
//! Everything here is pure computation over `alloc`; the crate is `no_std`.
//! IO, file formats and the command-line front end live in `schubert-ic-cli`.
//!
//! Module map:
//!  - [`partition`]: partitions, rectangles and the index maps on Schur bases
//!  - [`poly`]: Laurent polynomials in `t` and Gaussian binomials
//!  - [`schur`]: the Schur basis of Grassmannian cohomology, Pieri and
//!    Littlewood–Richardson products, Lefschetz matrices
//!  - [`matrix`]: exact rank over the rationals (fraction-free elimination)
//!  - [`geometry`]: input validation, strata, fibers and smallness
//!  - [`decomposition`]: graded spaces, IH recursion, summand/perverse/stalk tables
//!  - [`oracle`]: brute-force cross-checks, independent of the engine
//!  - [`verify`]: the named invariant checks run by tests and `schubert verify`

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod decomposition;
pub mod error;
pub mod geometry;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod schur;
pub mod verify;

pub use error::Error;
pub use geometry::{Regime, SchubertInput};
pub use partition::{EnumLimit, Partition, Rectangle};
pub use poly::LaurentPoly;

pub type Result<T, E = Error> = core::result::Result<T, E>;
