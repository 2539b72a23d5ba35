//! Canonical models, gonality and scroll geometry of rational monomial
//! curves.
//!
//! The crate is organized bottom-up:
//!
//! - [`valueset`]: cofinite integer sets, the common currency of everything
//!   below;
//! - [`semigroup`]: numerical semigroups with their canonical sets `K`, `K*`,
//!   the invariants `η`, `μ`, and enumeration by genus;
//! - [`curve`]: monomial curves, their canonical models and gonality;
//! - [`scroll`]: partitions into arithmetic progressions and scroll types;
//! - [`chow`]: intersection numbers and Euler characteristics on smooth
//!   scrolls;
//! - [`catalog`]: classification tables, fixtures, audits and rendering.
//!
//! ```
//! use canonical_scrolls::{MonomialCurve, NumericalSemigroup};
//!
//! let s = NumericalSemigroup::new(&[4, 5, 7]).unwrap();
//! assert_eq!(s.gaps(), &[1, 2, 3, 6]);
//!
//! let c = MonomialCurve::new(&[4, 5, 7, 8]).unwrap();
//! assert_eq!(c.canonical_exponents().unwrap(), vec![0, 3, 4, 5]);
//! assert_eq!(c.gonality(), 3);
//! ```

pub mod catalog;
pub mod chow;
pub mod curve;
pub mod scroll;
pub mod semigroup;
pub mod valueset;

pub use curve::{CurveAnalysis, CurveError, MonomialCurve};
pub use semigroup::{NumericalSemigroup, SemigroupError};
pub use valueset::ValueSet;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/semigroups.md")]
    mod semigroups {}
    #[doc = include_str!("../../../book/src/canonical.md")]
    mod canonical {}
    #[doc = include_str!("../../../book/src/gonality.md")]
    mod gonality {}
    #[doc = include_str!("../../../book/src/scrolls.md")]
    mod scrolls {}
    #[doc = include_str!("../../../book/src/genus-formulas.md")]
    mod genus_formulas {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
}
