//! Identities, free objects and representations for monoids of upper
//! triangular matrices over commutative semirings.
//!
//! An identity `u = v` holds in UT_n(S) exactly when `f_π^u` and `f_π^v`
//! agree as polynomial functions on every loop-free path π of a quiver on
//! n vertices. [`variety::check_identity`] decides this with the exact
//! function-equality procedures in [`funceq`].

pub mod analysis;
pub mod error;
pub mod funceq;
pub mod poly;
pub mod quiver;
pub mod semidirect;
pub mod semiring;
pub mod variety;
pub mod word;

pub use error::{Error, Result};
pub use funceq::{canonicalize, func_equal, EqWitness};
pub use poly::{CountPoly, FormalPoly, Monomial, Point, Var};
pub use quiver::{Path, QAElem};
pub use semidirect::{alpha, alpha_recover, GElem};
pub use semiring::{Elem, EqStrategy, Semiring};
pub use variety::{check_identity, oracle_check, FreeElem, Identity, UTMatrix, Verdict};
pub use word::{Letter, Word};
