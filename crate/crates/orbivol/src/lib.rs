//! High-precision volumes of compact hyperbolic 5-orbifolds.
//!
//! The crate evaluates the volumes of the three smallest compact arithmetic
//! hyperbolic 5-orbifolds from two independent directions and certifies
//! that they agree:
//!
//! * geometrically, as volumes of the compact prism family
//!   P(α) = [5,3,3,3,α], by integrating the Schläfli volume differential
//!   over closed-form 3-orthoscheme face volumes built from Lobachevsky
//!   functions ([`prism`], [`lobachevsky`]);
//! * arithmetically, as covolumes of arithmetic lattices assembled from
//!   Prasad's volume formula with Dedekind zeta and relative L-function
//!   special values ([`covolume`], [`nt`]).
//!
//! [`coxeter`] parses Coxeter symbols and diagrams, builds Gram matrices
//! and validates signatures for the polytopes involved. [`hp`] and
//! [`quad`] provide the arbitrary-precision scalar and quadrature kernel
//! everything runs on.
//!
//! Start with the `examples/` directory for one runnable program per
//! capability; the `orbivol` binary exposes the same operations as
//! subcommands.

pub mod bernoulli;
pub mod cli;
pub mod covolume;
pub mod coxeter;
pub mod error;
pub mod hp;
pub mod lobachevsky;
pub mod nt;
pub mod prism;
pub mod quad;
pub mod report;

pub use error::{Error, Result};
pub use hp::HPReal;
