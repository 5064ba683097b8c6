//! Exact computations around the exceptional series `D5 = E5, E6, E7, E8`.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootdata`]: closure-built root systems, pairings, `2ρ_J`, m-vectors.
//! * [`instability`]: cocharacter descent and the instability classifier.
//! * [`gmweights`]: `Gm`-weight multisets and weighted complete intersections.
//! * [`dplattice`]: the odd unimodular lattice `I_{1,l}`, its lines, roots,
//!   geometric basis and nef test.
//! * [`ellmoduli`]: elliptic curves over `F_p` and marked del Pezzo data.
//! * [`localsing`]: Milnor numbers of isolated hypersurface singularities.
//!
//! Everything is exact integer / finite-field / rational arithmetic.

pub mod dplattice;
pub mod ellmoduli;
pub mod error;
pub mod gmweights;
pub mod instability;
pub mod intmat;
pub mod localsing;
pub mod rootdata;

pub use error::{Error, Result};
pub use rootdata::{RootSystem, TypeTag};
