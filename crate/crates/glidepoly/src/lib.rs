//! Exact combinatorics of glide polynomials and their relatives: pipe dreams,
//! beta-Grothendieck and Schubert polynomials, set-valued tableaux,
//! quasisymmetric bases, and the genomic shuffle product that computes glide
//! structure constants and Littlewood-Richardson coefficients.
//!
//! Everything is computed over exact integers; the central identities of the
//! theory are wired up as machine-checkable equalities in [`verify`].
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod basis;
pub mod composition;
pub mod error;
pub mod genomic;
pub mod grothendieck;
pub mod pipedream;
pub mod polyring;
pub mod tableau;
pub mod verify;

pub use composition::{Color, StrongComposition, WeakComposition, WeakKomposition};
pub use error::{DomainError, ParseError};
pub use pipedream::{Permutation, PipeDream};
pub use polyring::{BetaInt, PolyZB};
pub use tableau::{Partition, SetValuedTableau};
