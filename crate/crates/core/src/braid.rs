//! Words in the Artin generators of the braid group `B_n`.
//!
//! Equality of braid words is decided through the faithful action of `B_n`
//! on the free group `F_n`: two words are equal exactly when they induce the
//! same endomorphism. No rewriting or normal form of the word itself is ever
//! computed.
//!
//! Conventions, fixed once and used everywhere:
//! * letter `k > 0` is `σ_k`, letter `-k` is `σ_k⁻¹`;
//! * `σ_i` crosses the strand at position `i` **over** the strand at `i+1`,
//!   positions numbered `1..n` bottom to top;
//! * `σ_i` acts on `F_n` by `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`.

use crate::freegroup::{EndoMap, FreeWord};
use crate::stringlink::{Sign, SliceDiagram, SliceEvent};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
}

/// Error produced when reading the braid word text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct WordParseError {
    pub column: usize,
    pub message: String,
}

/// A word in the generators `σ_1 .. σ_{n-1}` of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        for &letter in &letters {
            let idx = letter.unsigned_abs() as usize;
            if letter == 0 || idx + 1 > strands {
                return Err(BraidError::LetterOutOfRange { letter, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The empty word, the identity of `B_n`.
    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word concatenation: the group product in `B_n`.
    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Group inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// The induced endomorphism of `F_n`; a homomorphism in the word:
    /// `(u·v).artin_endo() = u.artin_endo().compose(v.artin_endo())`.
    pub fn artin_endo(&self) -> EndoMap {
        let mut endo = EndoMap::identity(self.strands);
        for &letter in &self.letters {
            let gen = generator_endo(
                self.strands,
                letter.unsigned_abs() as usize,
                letter > 0,
            )
            .expect("letters are validated on construction");
            endo = endo.compose(&gen).expect("ranks agree");
        }
        endo
    }

    /// Braid equality, decided exactly through the free-group action.
    pub fn equivalent(&self, other: &Self) -> Result<bool, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(self.artin_endo() == other.artin_endo())
    }

    /// Endpoint permutation: `π(i)` is the left-face position conjugated to
    /// `x_{π(i)}` by the induced endomorphism; identity exactly for pure
    /// braids.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        for &letter in &self.letters {
            let i = letter.unsigned_abs() as usize;
            images.swap(i - 1, i);
        }
        Permutation { images }
    }

    /// The string link diagram of the braid: one crossing per letter.
    pub fn to_diagram(&self) -> SliceDiagram {
        let events = self
            .letters
            .iter()
            .map(|&letter| SliceEvent::Cross {
                pos: letter.unsigned_abs() as usize,
                sign: if letter > 0 { Sign::Pos } else { Sign::Neg },
            })
            .collect();
        SliceDiagram::new(self.strands, events)
    }

    /// Reads the braid word text format: an optional `n=<int>` header then
    /// whitespace-separated nonzero letters. Without a header the strand
    /// count is `1 + max |letter|`.
    pub fn parse(input: &str) -> Result<Self, WordParseError> {
        let mut tokens = Vec::new();
        let mut col = 1usize;
        for piece in input.split_inclusive(char::is_whitespace) {
            let trimmed = piece.trim_end_matches(char::is_whitespace);
            if !trimmed.is_empty() {
                tokens.push((col, trimmed));
            }
            col += piece.chars().count();
        }

        let mut declared: Option<usize> = None;
        let mut start = 0;
        if let Some(&(column, tok)) = tokens.first() {
            if let Some(rest) = tok.strip_prefix("n=") {
                let n: usize = rest.parse().map_err(|_| WordParseError {
                    column,
                    message: format!("invalid strand count `{rest}`"),
                })?;
                if n == 0 {
                    return Err(WordParseError {
                        column,
                        message: "strand count must be at least 1".into(),
                    });
                }
                declared = Some(n);
                start = 1;
            }
        }

        let mut letters = Vec::new();
        for &(column, tok) in &tokens[start..] {
            let letter: i32 = tok.parse().map_err(|_| WordParseError {
                column,
                message: format!("invalid letter `{tok}`"),
            })?;
            if letter == 0 {
                return Err(WordParseError {
                    column,
                    message: "letter must be nonzero".into(),
                });
            }
            letters.push(letter);
        }

        let strands = declared
            .unwrap_or_else(|| letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1));
        BraidWord::new(strands, letters).map_err(|e| WordParseError {
            column: 1,
            message: e.to_string(),
        })
    }

    /// Canonical text with the strand-count header, e.g. `n=3 1 -2`.
    pub fn display_with_header(&self) -> String {
        let mut out = format!("n={}", self.strands);
        for letter in &self.letters {
            out.push(' ');
            out.push_str(&letter.to_string());
        }
        out
    }
}

/// Letters only, without the header; the empty word prints as nothing.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
            first = false;
        }
        Ok(())
    }
}

/// The action of a single generator `σ_i^{±1}` on `F_n`.
pub fn generator_endo(strands: usize, index: usize, positive: bool) -> Result<EndoMap, BraidError> {
    if index == 0 || index + 1 > strands {
        return Err(BraidError::GeneratorOutOfRange { index, strands });
    }
    let n = strands;
    let i = index as i32;
    let mut images = Vec::with_capacity(n);
    for j in 1..=n as i32 {
        let letters: Vec<i32> = if positive {
            if j == i {
                vec![i, i + 1, -i]
            } else if j == i + 1 {
                vec![i]
            } else {
                vec![j]
            }
        } else if j == i {
            vec![i + 1]
        } else if j == i + 1 {
            vec![-(i + 1), i, i + 1]
        } else {
            vec![j]
        };
        images.push(FreeWord::reduce(n, &letters).expect("generator images are in range"));
    }
    Ok(EndoMap::new(images).expect("uniform rank"))
}

/// A bijection of `{1..n}`, as produced by [`BraidWord::permutation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (0..size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of `i`, 1-based.
    pub fn image_of(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn generator_endo_action() {
        let e = generator_endo(2, 1, true).unwrap();
        let x2 = FreeWord::generator(2, 2).unwrap();
        assert_eq!(e.apply(&x2).unwrap().letters(), &[1]);

        // disjoint support: σ2 fixes x1 in B3
        let e2 = generator_endo(3, 2, true).unwrap();
        let x1 = FreeWord::generator(3, 1).unwrap();
        assert_eq!(e2.apply(&x1).unwrap(), x1);
    }

    #[test]
    fn generator_endo_inverse_pair() {
        for n in 2..=4 {
            for i in 1..n {
                let plus = generator_endo(n, i, true).unwrap();
                let minus = generator_endo(n, i, false).unwrap();
                assert_eq!(plus.compose(&minus).unwrap(), EndoMap::identity(n));
                assert_eq!(minus.compose(&plus).unwrap(), EndoMap::identity(n));
            }
        }
    }

    #[test]
    fn generator_endo_range_check() {
        assert!(generator_endo(2, 2, true).is_err());
        assert!(generator_endo(3, 0, true).is_err());
    }

    #[test]
    fn represent_empty_and_cancelling() {
        assert_eq!(braid(3, &[]).artin_endo(), EndoMap::identity(3));
        assert_eq!(braid(2, &[1, -1]).artin_endo(), EndoMap::identity(2));
    }

    #[test]
    fn represent_braid_relation() {
        let lhs = braid(3, &[1, 2, 1]).artin_endo();
        let rhs = braid(3, &[2, 1, 2]).artin_endo();
        assert_eq!(lhs, rhs);
        // frozen images, computed by direct substitution
        assert_eq!(lhs.image(1).letters(), &[1, 2, 3, -2, -1]);
        assert_eq!(lhs.image(2).letters(), &[1, 2, -1]);
        assert_eq!(lhs.image(3).letters(), &[1]);
    }

    #[test]
    fn equivalence_examples() {
        assert!(braid(3, &[1, 2, 1]).equivalent(&braid(3, &[2, 1, 2])).unwrap());
        assert!(!braid(2, &[1]).equivalent(&braid(2, &[-1])).unwrap());
        assert!(braid(4, &[1, 3]).equivalent(&braid(4, &[3, 1])).unwrap());
        assert!(braid(2, &[1]).equivalent(&braid(3, &[1])).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(braid(3, &[1, 2]).inverse().letters(), &[-2, -1]);
        assert!(braid(3, &[]).inverse().is_empty());
        assert_eq!(braid(2, &[1, 1, 1]).inverse().letters(), &[-1, -1, -1]);
        let b = braid(2, &[1, 1, 1]);
        let prod = b.concat(&b.inverse()).unwrap();
        assert!(prod.equivalent(&BraidWord::empty(2)).unwrap());
    }

    #[test]
    fn permutation_examples() {
        assert!(braid(4, &[]).permutation().is_identity());
        let swap = braid(2, &[1]).permutation();
        assert_eq!(swap.image_of(1), 2);
        assert_eq!(swap.image_of(2), 1);
        assert!(braid(2, &[1, 1]).permutation().is_identity());
    }

    #[test]
    fn permutation_matches_conjugation_target() {
        // the endo sends x_i to a conjugate of x_{π(i)}
        let b = braid(3, &[1, 2]);
        let pi = b.permutation();
        assert_eq!(pi.image_of(1), 2);
        assert_eq!(pi.image_of(2), 3);
        assert_eq!(pi.image_of(3), 1);
        let e = b.artin_endo();
        assert_eq!(e.image(1).letters(), &[1, 2, -1]);
        assert_eq!(e.image(2).letters(), &[1, 3, -1]);
        assert_eq!(e.image(3).letters(), &[1]);
    }

    #[test]
    fn diagram_round_trip() {
        let b = braid(3, &[1, -2]);
        let d = b.to_diagram();
        assert_eq!(d.monotone_braid(), Some(b));
        let id = BraidWord::empty(3).to_diagram();
        assert_eq!(id, SliceDiagram::identity(3));
    }

    #[test]
    fn parse_and_format() {
        let w = BraidWord::parse("1 -2 1").unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(w.letters(), &[1, -2, 1]);

        let w = BraidWord::parse("n=5 1").unwrap();
        assert_eq!(w.strands(), 5);
        assert_eq!(w.display_with_header(), "n=5 1");

        let empty = BraidWord::parse("").unwrap();
        assert_eq!(empty.strands(), 1);
        assert!(empty.is_empty());

        assert_eq!(format!("{}", BraidWord::parse("1 -2").unwrap()), "1 -2");

        assert!(BraidWord::parse("0").is_err());
        assert!(BraidWord::parse("n=2 2").is_err());
        assert!(BraidWord::parse("x").is_err());
        let err = BraidWord::parse("1 z").unwrap_err();
        assert_eq!(err.column, 3);
    }
}
