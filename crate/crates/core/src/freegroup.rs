//! Exact arithmetic in the free group `F_n` and its endomorphism monoid.
//!
//! Words are kept in reduced form at all times, so two words are equal in
//! `F_n` exactly when their letter sequences coincide. Letters are signed
//! generator indices: `k` stands for `x_k`, `-k` for `x_k^{-1}`.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: i32, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
}

/// A reduced word in the free group of a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

/// Pushes a letter onto a reduced word, cancelling an adjacent inverse pair.
fn push_reduced(letters: &mut Vec<i32>, letter: i32) {
    if letters.last() == Some(&-letter) {
        letters.pop();
    } else {
        letters.push(letter);
    }
}

fn check_letter(letter: i32, rank: usize) -> Result<(), FreeGroupError> {
    let idx = letter.unsigned_abs() as usize;
    if letter == 0 || idx > rank {
        return Err(FreeGroupError::LetterOutOfRange { letter, rank });
    }
    Ok(())
}

impl FreeWord {
    /// The empty word.
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// Reduces an arbitrary letter sequence to its unique normal form.
    pub fn reduce(rank: usize, raw: &[i32]) -> Result<Self, FreeGroupError> {
        let mut letters = Vec::with_capacity(raw.len());
        for &letter in raw {
            check_letter(letter, rank)?;
            push_reduced(&mut letters, letter);
        }
        Ok(FreeWord { rank, letters })
    }

    /// The one-letter word `x_i` (1-based).
    pub fn generator(rank: usize, index: usize) -> Result<Self, FreeGroupError> {
        check_letter(index as i32, rank)?;
        Ok(FreeWord {
            rank,
            letters: vec![index as i32],
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    /// Reduced product `self · other`.
    pub fn concat(&self, other: &Self) -> Result<Self, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        for &letter in &other.letters {
            push_reduced(&mut letters, letter);
        }
        Ok(FreeWord {
            rank: self.rank,
            letters,
        })
    }

    /// Group inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> Self {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }
}

/// An endomorphism of `F_n`, stored as the images of the positive generators.
///
/// Images of inverse generators are derived on the fly, so the map is a
/// monoid homomorphism by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoMap {
    rank: usize,
    images: Vec<FreeWord>,
}

impl EndoMap {
    /// The identity map, `x_i ↦ x_i`.
    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank)
            .map(|i| FreeWord {
                rank,
                letters: vec![i as i32],
            })
            .collect();
        EndoMap { rank, images }
    }

    /// Builds a map from generator images; all images must share one rank.
    pub fn new(images: Vec<FreeWord>) -> Result<Self, FreeGroupError> {
        let rank = images.len();
        for img in &images {
            if img.rank != rank {
                return Err(FreeGroupError::RankMismatch {
                    left: rank,
                    right: img.rank,
                });
            }
        }
        Ok(EndoMap { rank, images })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of the generator `x_i` (1-based).
    pub fn image(&self, index: usize) -> &FreeWord {
        &self.images[index - 1]
    }

    /// Applies the map to a word: substitute images and reduce.
    pub fn apply(&self, word: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        if self.rank != word.rank {
            return Err(FreeGroupError::RankMismatch {
                left: self.rank,
                right: word.rank,
            });
        }
        let mut letters = Vec::new();
        for &letter in &word.letters {
            let image = &self.images[letter.unsigned_abs() as usize - 1];
            if letter > 0 {
                for &l in &image.letters {
                    push_reduced(&mut letters, l);
                }
            } else {
                for &l in image.letters.iter().rev() {
                    push_reduced(&mut letters, -l);
                }
            }
        }
        Ok(FreeWord {
            rank: self.rank,
            letters,
        })
    }

    /// Function composition: the result sends `x_i` to `self(other(x_i))`.
    pub fn compose(&self, other: &Self) -> Result<Self, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let images = other
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EndoMap {
            rank: self.rank,
            images,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(rank: usize, letters: &[i32]) -> FreeWord {
        FreeWord::reduce(rank, letters).unwrap()
    }

    #[test]
    fn reduce_cancellation() {
        assert_eq!(word(2, &[1, -1]).letters(), &[] as &[i32]);
        assert_eq!(word(3, &[1, 2, -2, -1, 3]).letters(), &[3]);
        assert_eq!(word(2, &[1, 2, 1]).letters(), &[1, 2, 1]);
    }

    #[test]
    fn reduce_rejects_out_of_range() {
        assert!(FreeWord::reduce(2, &[3]).is_err());
        assert!(FreeWord::reduce(2, &[0]).is_err());
    }

    #[test]
    fn concat_examples() {
        let u = word(3, &[1, 2]);
        let v = word(3, &[-2, 3]);
        assert_eq!(u.concat(&v).unwrap().letters(), &[1, 3]);

        let w = word(3, &[1]);
        assert_eq!(w.concat(&FreeWord::identity(3)).unwrap(), w);

        let a = word(2, &[1, 2]);
        let b = word(2, &[-2, -1]);
        assert!(a.concat(&b).unwrap().is_empty());
    }

    #[test]
    fn concat_rank_mismatch() {
        let u = word(2, &[1]);
        let v = word(3, &[1]);
        assert!(u.concat(&v).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(word(2, &[1, 2]).inverse().letters(), &[-2, -1]);
        assert!(FreeWord::identity(4).inverse().is_empty());
        assert_eq!(word(3, &[-3]).inverse().letters(), &[3]);
    }

    #[test]
    fn apply_identity() {
        let e = EndoMap::identity(2);
        let w = word(2, &[1, -2]);
        assert_eq!(e.apply(&w).unwrap(), w);
    }

    // e with x1 ↦ x1 x2 x1⁻¹ and x2 ↦ x1: the positive Artin generator.
    fn clasp_endo() -> EndoMap {
        EndoMap::new(vec![word(2, &[1, 2, -1]), word(2, &[1])]).unwrap()
    }

    #[test]
    fn apply_substitution() {
        let e = clasp_endo();
        assert_eq!(e.apply(&word(2, &[2])).unwrap().letters(), &[1]);
        // x1 x2 ↦ (x1 x2 x1⁻¹)(x1) = x1 x2
        assert_eq!(e.apply(&word(2, &[1, 2])).unwrap().letters(), &[1, 2]);
    }

    #[test]
    fn compose_with_identity() {
        let e = clasp_endo();
        let id = EndoMap::identity(2);
        assert_eq!(id.compose(&e).unwrap(), e);
        assert_eq!(e.compose(&id).unwrap(), e);
    }

    #[test]
    fn compose_inverse_pair_is_identity() {
        // The inverse generator action: x1 ↦ x2, x2 ↦ x2⁻¹ x1 x2.
        let plus = clasp_endo();
        let minus = EndoMap::new(vec![word(2, &[2]), word(2, &[-2, 1, 2])]).unwrap();
        assert_eq!(plus.compose(&minus).unwrap(), EndoMap::identity(2));
        assert_eq!(minus.compose(&plus).unwrap(), EndoMap::identity(2));
    }

    #[test]
    fn endo_equality_is_image_wise() {
        assert_eq!(EndoMap::identity(3), EndoMap::identity(3));
        assert_ne!(clasp_endo(), EndoMap::identity(2));
    }
}
