#![no_std]

//! Forced extensions of braids.
//!
//! The crate evaluates the representation `ζ_{n,m}` of the braid group `B_n`
//! by matrices over the integral group ring of `B_{n+m}`, takes the trace,
//! merges conjugate terms by solving the conjugacy problem with Garside
//! theory, and classifies the surviving terms (periodic / reducible /
//! pseudo-Anosov) to decide which `(n+m)`-strand extensions are forced.
//!
//! Everything here is pure computation over `alloc` collections. File
//! formats, the command-line tool and parallel drivers live in the
//! `braidforce` crate.
//!
//! Conventions used throughout:
//!
//! * strands and generator indices are 1-based, `σ_i` crosses strands at
//!   positions `i` and `i+1`;
//! * braid words are read left to right, the leftmost letter acts first, so
//!   the product `ab` is "`a` then `b`";
//! * conjugation is written on the right: `x^a = a⁻¹ x a`.

extern crate alloc;

pub mod braid;
pub mod curves;
pub mod error;
pub mod garside;
pub mod groupring;
pub mod pipeline;
pub mod zeta;

pub use braid::{BraidWord, Permutation};
pub use error::{Error, Result};
pub use garside::{CanonicalForm, SummitConfig, SummitKind, SummitSet};
pub use groupring::{ClassSum, GroupRingElement};
pub use pipeline::{ForcingOptions, ForcingReport, Tag, ThurstonType, TraceTerm};
pub use zeta::{Composition, RepMatrix};
