//! Computation in braid groups, string link monoids and `(n,n)`-tangle
//! monoids.
//!
//! The crate decides unit-hood of tangle diagrams: a diagram is certified as
//! a unit by exhibiting a braid representative together with its explicit
//! inverse, or refuted through invariants of its sub-link closures. The
//! pieces fit together as follows.
//!
//! * [`freegroup`] — exact arithmetic in the free group `F_n` and its
//!   endomorphisms; reduced words are canonical forms.
//! * [`braid`] — words in the Artin generators of `B_n`, with equality
//!   decided through the faithful action on `F_n`.
//! * [`stringlink`] — tangle diagrams as slice event sequences, with
//!   composition, reflection, strand deletion, closures and a bounded
//!   search for braid representatives.
//! * [`invariants`] — Kauffman bracket state sums and Jones polynomials of
//!   closed diagrams, over any exact coefficient ring.
//! * [`units`] — the three-valued unit decision pipeline.

pub mod braid;
pub mod freegroup;
pub mod invariants;
pub mod stringlink;
pub mod units;
mod util;

pub use braid::{generator_endo, BraidError, BraidWord, Permutation, WordParseError};
pub use freegroup::{EndoMap, FreeGroupError, FreeWord};
pub use invariants::{Coefficient, LaurentPoly, LinkDiagram, PdError, PdParseError};
pub use stringlink::{
    ClosureScheme, Component, ComponentTrace, DiagramError, MonotonizeOutcome, Sign,
    SliceDiagram, SliceEvent, SliceParseError,
};
pub use units::{
    decide_unit, obstruction_battery, reflect_inverse_candidate, verify_inverse, Certificate,
    UnitVerdict, UnitsError, UnknownReason,
};

/// Bracket and Jones values as computed by the pipeline: integer
/// coefficients are exact and ample at the supported diagram sizes.
pub type Poly = LaurentPoly<i64>;
