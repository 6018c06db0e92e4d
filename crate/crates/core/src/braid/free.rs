//! The Artin representation of the braid group into `Aut(F_s)`, used as an equality oracle
//! independent of the Garside engine.
//!
//! Convention: `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`, and fixes the other
//! generators. Endomorphisms compose like functions, and the representation is a
//! homomorphism for left-to-right words: `artin_endo(ab) = artin_endo(a) ∘ artin_endo(b)`.

use std::fmt;

use crate::braid::word::BraidWord;
use crate::error::{Error, Result};

/// A freely reduced word over `x_1..x_r`; a positive entry `i` is `x_i`, a negative one `x_i⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(pub Vec<i32>);

impl FreeWord {
    pub fn generator(i: usize) -> Self {
        FreeWord(vec![i as i32])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut w = FreeWord::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn extend(&mut self, other: &FreeWord) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of the free group of rank `r`, given by the images of `x_1..x_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupEndo {
    images: Vec<FreeWord>,
}

impl FreeGroupEndo {
    pub fn identity(rank: usize) -> Self {
        FreeGroupEndo { images: (1..=rank).map(FreeWord::generator).collect() }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        for w in &images {
            if w.0.iter().any(|&l| l == 0 || l.unsigned_abs() as usize > rank) {
                return Err(Error::IndexOutOfRange(format!("free word {w} in rank {rank}")));
            }
        }
        Ok(FreeGroupEndo { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of an arbitrary word.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::default();
        for &l in &w.0 {
            let img = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend(img);
            } else {
                out.extend(&img.inverse());
            }
        }
        out
    }

    /// Function composition: `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &FreeGroupEndo) -> Result<FreeGroupEndo> {
        if self.rank() != other.rank() {
            return Err(Error::StrandMismatch(self.rank(), other.rank()));
        }
        Ok(FreeGroupEndo { images: other.images.iter().map(|w| self.apply(w)).collect() })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| w.0 == [(i + 1) as i32])
    }
}

fn generator_images(rank: usize, index: usize, positive: bool) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (1..=rank).map(FreeWord::generator).collect();
    let i = index as i32;
    let j = i + 1;
    if positive {
        images[index - 1] = FreeWord::from_letters([i, j, -i]);
        images[index] = FreeWord::from_letters([i]);
    } else {
        images[index - 1] = FreeWord::from_letters([j]);
        images[index] = FreeWord::from_letters([-j, i, j]);
    }
    images
}

/// The free-group automorphism induced by a braid word.
pub fn artin_endo(word: &BraidWord) -> FreeGroupEndo {
    let rank = word.strands();
    let mut acc = FreeGroupEndo::identity(rank);
    for l in word.letters() {
        // acc ∘ φ_l: substitute the current images into the (short) images of φ_l.
        let step = FreeGroupEndo { images: generator_images(rank, l.index, l.positive) };
        acc = acc.compose(&step).expect("equal ranks");
    }
    acc
}

/// Equality in the braid group decided through the faithful Artin action.
pub fn artin_equals(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    // Comparing the two images keeps intermediate words far shorter than expanding a·b⁻¹.
    Ok(artin_endo(a) == artin_endo(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::center_generator;

    #[test]
    fn sigma1_convention() {
        let e = artin_endo(&BraidWord::parse(3, "s1").unwrap());
        assert_eq!(e.images()[0], FreeWord(vec![1, 2, -1]));
        assert_eq!(e.images()[1], FreeWord(vec![1]));
        assert_eq!(e.images()[2], FreeWord(vec![3]));
    }

    #[test]
    fn identity_word_gives_identity() {
        assert!(artin_endo(&BraidWord::identity(4).unwrap()).is_identity());
    }

    #[test]
    fn inverse_letters_cancel() {
        let w = BraidWord::parse(4, "s2 s3^-1 s1").unwrap();
        let e = artin_endo(&w).compose(&artin_endo(&w.invert())).unwrap();
        assert!(e.is_identity());
    }

    #[test]
    fn full_twist_acts_by_conjugation() {
        // Oracle: z acts as conjugation by the boundary word δ = x1 x2 x3.
        let e = artin_endo(&center_generator(3).unwrap());
        let delta = FreeWord(vec![1, 2, 3]);
        for i in 1..=3 {
            let mut expect = delta.clone();
            expect.push(i as i32);
            expect.extend(&delta.inverse());
            assert_eq!(e.images()[i - 1], expect, "x{i}");
        }
    }

    #[test]
    fn boundary_word_is_fixed() {
        let w = BraidWord::parse(5, "s1 s3^-1 s2 s4 s2^-1").unwrap();
        let boundary = FreeWord(vec![1, 2, 3, 4, 5]);
        assert_eq!(artin_endo(&w).apply(&boundary), boundary);
    }
}
