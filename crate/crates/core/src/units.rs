//! Deciding whether a tangle diagram represents a unit of the string link
//! monoid.
//!
//! The pipeline certifies units by finding a braid representative and its
//! explicit inverse, and refutes them with sub-link invariants: a unit must
//! be a string link, each of its strands must close to an unknot, and each
//! pair of strands must have an unknotted plait closure (a braid's 2-strand
//! sub-links are twist regions whose plait closures untwist completely).
//! When neither path succeeds the answer is `Unknown` rather than a guess.

use crate::braid::BraidWord;
use crate::freegroup::EndoMap;
use crate::invariants::PdError;
use crate::stringlink::{
    ClosureScheme, DiagramError, MonotonizeOutcome, SliceDiagram,
};
use crate::Poly;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnitsError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Pd(#[from] PdError),
    #[error("inverse verification inconclusive: rewrite budget exhausted")]
    Inconclusive,
}

/// Evidence that a diagram is not a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Some strand does not run from the left face to the right face.
    NotAStringLink,
    /// A single strand closes to a knot with nontrivial Jones polynomial.
    KnottedStrand { strand: usize, jones: Poly },
    /// A strand pair whose plait closure has nontrivial Jones polynomial.
    BadPairClosure { pair: (usize, usize), jones: Poly },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnknownReason {
    /// The rewrite budget ran out while searching for a braid form.
    Budget,
    /// The search got stuck and no obstruction certificate was found.
    NoCertificate,
}

/// Three-valued verdict of [`decide_unit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitVerdict {
    Unit {
        /// Verified two-sided inverse of the input.
        inverse: BraidWord,
        /// The braid representative found for the input itself.
        witness: SliceDiagram,
    },
    NotUnit {
        certificate: Certificate,
    },
    Unknown {
        reason: UnknownReason,
    },
}

impl UnitVerdict {
    /// The braid word recovered for the input, when the verdict is `Unit`.
    pub fn recovered_word(&self) -> Option<BraidWord> {
        match self {
            UnitVerdict::Unit { witness, .. } => witness.monotone_braid(),
            _ => None,
        }
    }
}

/// Canonical verdict text, e.g. `UNIT inverse=-1 -1` or
/// `NOT-UNIT certificate=bad-pair-closure detail=pair:1,2 jones=...`.
impl fmt::Display for UnitVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitVerdict::Unit { inverse, .. } => write!(f, "UNIT inverse={inverse}"),
            UnitVerdict::NotUnit { certificate } => match certificate {
                Certificate::NotAStringLink => {
                    write!(f, "NOT-UNIT certificate=not-a-string-link")
                }
                Certificate::KnottedStrand { strand, jones } => write!(
                    f,
                    "NOT-UNIT certificate=knotted-strand detail=strand:{strand} jones={jones}"
                ),
                Certificate::BadPairClosure { pair, jones } => write!(
                    f,
                    "NOT-UNIT certificate=bad-pair-closure detail=pair:{},{} jones={jones}",
                    pair.0, pair.1
                ),
            },
            UnitVerdict::Unknown { reason } => match reason {
                UnknownReason::Budget => write!(f, "UNKNOWN reason=budget"),
                UnknownReason::NoCertificate => write!(f, "UNKNOWN reason=no-certificate"),
            },
        }
    }
}

/// Decides unit-hood of a tangle diagram within a rewrite budget.
pub fn decide_unit(d: &SliceDiagram, budget: usize) -> Result<UnitVerdict, UnitsError> {
    let trace = d.validate()?;
    if !trace.is_string_link() {
        return Ok(UnitVerdict::NotUnit {
            certificate: Certificate::NotAStringLink,
        });
    }
    let exhausted = match d.monotonize(budget)? {
        MonotonizeOutcome::Braid(word) => {
            let inverse = word.inverse();
            match verify_inverse(d, &inverse, budget) {
                Ok(true) => {
                    return Ok(UnitVerdict::Unit {
                        inverse,
                        witness: word.to_diagram(),
                    });
                }
                Ok(false) => false,
                Err(UnitsError::Inconclusive) => true,
                Err(other) => return Err(other),
            }
        }
        MonotonizeOutcome::Stuck => false,
        MonotonizeOutcome::BudgetExhausted => true,
    };
    if let Some(certificate) = obstruction_battery(d)? {
        return Ok(UnitVerdict::NotUnit { certificate });
    }
    Ok(UnitVerdict::Unknown {
        reason: if exhausted {
            UnknownReason::Budget
        } else {
            UnknownReason::NoCertificate
        },
    })
}

/// Checks that `candidate` is a two-sided inverse of `d`: both composites
/// must rewrite to braid words acting trivially on the free group.
///
/// `Ok(false)` is a genuine refutation; an exhausted or stuck rewrite search
/// is reported as [`UnitsError::Inconclusive`] instead.
pub fn verify_inverse(
    d: &SliceDiagram,
    candidate: &BraidWord,
    budget: usize,
) -> Result<bool, UnitsError> {
    let cd = candidate.to_diagram();
    let identity = EndoMap::identity(d.boundary());
    for (left, right) in [(d, &cd), (&cd, d)] {
        let composite = left.compose(right)?;
        match composite.monotonize(budget)? {
            MonotonizeOutcome::Braid(word) => {
                if word.artin_endo() != identity {
                    return Ok(false);
                }
            }
            MonotonizeOutcome::Stuck | MonotonizeOutcome::BudgetExhausted => {
                return Err(UnitsError::Inconclusive);
            }
        }
    }
    Ok(true)
}

/// The reflection of the diagram; for a unit this represents its two-sided
/// inverse.
pub fn reflect_inverse_candidate(d: &SliceDiagram) -> SliceDiagram {
    d.reflect()
}

/// Runs the sub-link obstruction battery: trace closures of single strands,
/// then plait closures of strand pairs, in ascending order. The first
/// closure with nontrivial Jones polynomial yields the certificate.
pub fn obstruction_battery(d: &SliceDiagram) -> Result<Option<Certificate>, UnitsError> {
    let n = d.boundary();
    for i in 1..=n {
        let sub = d.delete_strands(&[i])?;
        let closed = sub.closure(ClosureScheme::Trace)?;
        if closed.certifies_not_unknot()? {
            return Ok(Some(Certificate::KnottedStrand {
                strand: i,
                jones: closed.jones()?,
            }));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let sub = d.delete_strands(&[i, j])?;
            let closed = sub.closure(ClosureScheme::Plait)?;
            if closed.certifies_not_unknot()? {
                return Ok(Some(Certificate::BadPairClosure {
                    pair: (i, j),
                    jones: closed.jones()?,
                }));
            }
        }
    }
    Ok(None)
}
