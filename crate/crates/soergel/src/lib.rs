//! Exact computational engine for the one-color diagrammatic Soergel
//! category in type A.
//!
//! The crate has three layers:
//!
//! * **Decategorified layer** — [`laurent`], [`perm`], [`hecke`]: the Hecke
//!   algebra of the symmetric group over `Z[t, t^-1]`, its standard trace,
//!   bar involution and the semilinear pairing.
//! * **Bimodule layer** — [`poly`], [`bimodule`], [`morphism`]: exact
//!   arithmetic in `Q[x_1..x_{n+1}]`, Demazure operators, Bott–Samelson
//!   bimodules in left-basis normal form, and morphisms between them as
//!   polynomial matrices.
//! * **Diagrammatic layer** — [`diagram`], [`relations`], [`rewrite`],
//!   [`homsolve`]: a sliced term language for planar diagrams, the defining
//!   relation suite, one-color graph rewriting to normal form, and exact
//!   Hom-space dimension computations checked against graded ranks
//!   predicted by the Hecke pairing.
//!
//! Runnable walkthroughs for every major capability live in `examples/`;
//! the `soergel` binary is a thin command-line veneer over the library.

pub mod bimodule;
pub mod diagram;
pub mod hecke;
pub mod homsolve;
pub mod laurent;
pub mod linalg;
pub mod morphism;
pub mod perm;
pub mod poly;
pub mod relations;
pub mod rewrite;

pub use laurent::Laurent;
pub use perm::Perm;
