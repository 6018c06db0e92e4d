use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::OnceLock;

use crate::braid::garside::GarsideNormalForm;
use crate::braid::perm::Permutation;
use crate::error::{Error, Result};

/// A single Artin generator `σ_i` or its inverse. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub const fn pos(index: usize) -> Self {
        Letter { index, positive: true }
    }

    pub const fn neg(index: usize) -> Self {
        Letter { index, positive: false }
    }

    pub fn inverse(self) -> Self {
        Letter { index: self.index, positive: !self.positive }
    }

    pub fn sign(self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "s{}", self.index)
        } else {
            write!(f, "s{}^-1", self.index)
        }
    }
}

/// A freely reduced word in the Artin generators of the braid group on `strands` strands.
///
/// Words are read left to right: `ab` means "apply `a`, then `b`". The Garside
/// normal form is computed lazily and cached.
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
    nf: OnceLock<GarsideNormalForm>,
}

impl Clone for BraidWord {
    fn clone(&self) -> Self {
        let nf = OnceLock::new();
        if let Some(v) = self.nf.get() {
            let _ = nf.set(v.clone());
        }
        BraidWord { strands: self.strands, letters: self.letters.clone(), nf }
    }
}

impl PartialEq for BraidWord {
    /// Literal equality of reduced words. Use [`BraidWord::equals`] for equality in the group.
    fn eq(&self, other: &Self) -> bool {
        self.strands == other.strands && self.letters == other.letters
    }
}

impl Eq for BraidWord {}

impl Hash for BraidWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.strands.hash(state);
        self.letters.hash(state);
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(B{}: {})", self.strands, self)
    }
}

fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(Error::GeneratorOutOfRange { index: l.index, strands });
            }
        }
        Ok(Self::from_reduced(strands, free_reduce(letters)))
    }

    fn from_reduced(strands: usize, letters: Vec<Letter>) -> Self {
        BraidWord { strands, letters, nf: OnceLock::new() }
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, vec![])
    }

    /// The generator `σ_i^{±1}`.
    pub fn generator(strands: usize, index: usize, positive: bool) -> Result<Self> {
        Self::new(strands, vec![Letter { index, positive }])
    }

    /// Builds a word from signed 1-based indices, e.g. `[1, -2]` for `σ1 σ2⁻¹`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&v| {
                if v == 0 {
                    Err(Error::Parse("zero is not a generator index".into()))
                } else {
                    Ok(Letter { index: v.unsigned_abs() as usize, positive: v > 0 })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = vec![];
        for tok in text.split_whitespace() {
            if tok == "e" || tok == "1" {
                continue;
            }
            let body = tok
                .strip_prefix('s')
                .ok_or_else(|| Error::Parse(format!("token `{tok}` must start with `s`")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?),
                None => (body, 1),
            };
            let index: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index in `{tok}`")))?;
            let positive = exp > 0;
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter { index, positive });
            }
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            Err(Error::StrandMismatch(self.strands, other.strands))
        } else {
            Ok(())
        }
    }

    /// `self` followed by `other`, freely reduced at the junction.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same(other)?;
        Ok(self.mul(other))
    }

    /// Infallible composition for callers that already know the strand counts agree.
    pub(crate) fn mul(&self, other: &BraidWord) -> BraidWord {
        debug_assert_eq!(self.strands, other.strands);
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&l.inverse()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Self::from_reduced(self.strands, letters)
    }

    pub fn invert(&self) -> BraidWord {
        Self::from_reduced(self.strands, self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = Self::from_reduced(self.strands, vec![]);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &BraidWord) -> Result<BraidWord> {
        self.check_same(x)?;
        Ok(self.mul(x).mul(&self.invert()))
    }

    /// Image under the orientation-reversing reflection of the disk that fixes each
    /// puncture: every letter changes sign.
    pub fn mirror(&self) -> BraidWord {
        Self::from_reduced(self.strands, self.letters.iter().map(|l| l.inverse()).collect())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    /// Underlying permutation, as a map from starting strand position to final position (0-based).
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.swap_values(l.index - 1);
        }
        p
    }

    pub fn permutation_and_exponent(&self) -> (Permutation, i64) {
        (self.permutation(), self.exponent_sum())
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    pub fn normal_form(&self) -> &GarsideNormalForm {
        self.nf.get_or_init(|| GarsideNormalForm::of_word(self))
    }

    /// Equality in the braid group, decided by comparing Garside normal forms.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.normal_form() == other.normal_form())
    }

    pub fn is_identity_element(&self) -> bool {
        self.normal_form().is_identity()
    }

    /// `true` iff `self` and `other` commute in the group.
    pub fn commutes_with(&self, other: &BraidWord) -> Result<bool> {
        self.check_same(other)?;
        self.mul(other).equals(&other.mul(self))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `"<strands>:<word>"`, e.g. `"4:s1 s3^-1"`.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, w) = s.split_once(':').ok_or_else(|| Error::Parse("expected `<strands>:<word>`".into()))?;
        let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("bad strand count `{n}`")))?;
        BraidWord::parse(n, w)
    }
}

/// The full twist `(σ1 ⋯ σ_{s−1})^s`, generating the center of the braid group.
pub fn center_generator(strands: usize) -> Result<BraidWord> {
    let row: Vec<Letter> = (1..strands).map(Letter::pos).collect();
    Ok(BraidWord::new(strands, row)?.pow(strands as i64))
}

/// The half twist `Δ = (σ1 ⋯ σ_{s−1})(σ1 ⋯ σ_{s−2}) ⋯ σ1`.
pub fn half_twist_delta(strands: usize) -> Result<BraidWord> {
    let mut letters = vec![];
    for top in (1..strands).rev() {
        letters.extend((1..=top).map(Letter::pos));
    }
    BraidWord::new(strands, letters)
}

/// Artin's pure braid generator `A_{i,j} = (σ_{j−1} ⋯ σ_{i+1}) σ_i² (σ_{i+1}⁻¹ ⋯ σ_{j−1}⁻¹)`.
pub fn pure_generator(i: usize, j: usize, strands: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= strands) {
        return Err(Error::IndexOutOfRange(format!("A_{{{i},{j}}} in B_{strands}")));
    }
    let conj: Vec<Letter> = ((i + 1)..j).rev().map(Letter::pos).collect();
    let conj = BraidWord::new(strands, conj)?;
    let sq = BraidWord::new(strands, vec![Letter::pos(i), Letter::pos(i)])?;
    conj.conjugate(&sq)
}

/// The product `(A_{1,2} ⋯ A_{1,s}) (A_{2,3} ⋯ A_{2,s}) ⋯ (A_{s−1,s})` of all pure generators.
pub fn pure_generator_product(strands: usize) -> Result<BraidWord> {
    let mut out = BraidWord::identity(strands)?;
    for i in 1..strands {
        for j in (i + 1)..=strands {
            out = out.mul(&pure_generator(i, j, strands)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: usize, t: &str) -> BraidWord {
        BraidWord::parse(s, t).unwrap()
    }

    #[test]
    fn compose_cancels_inverse_letters() {
        let a = w(3, "s1");
        let b = w(3, "s1^-1");
        assert!(a.compose(&b).unwrap().is_empty());
    }

    #[test]
    fn compose_rejects_strand_mismatch() {
        assert_eq!(w(3, "s1").compose(&w(4, "s1")), Err(Error::StrandMismatch(3, 4)));
    }

    #[test]
    fn braid_relation_gives_identity() {
        let lhs = w(3, "s1 s2 s1");
        let rhs = w(3, "s2 s1 s2");
        assert!(lhs.compose(&rhs.invert()).unwrap().is_identity_element());
    }

    #[test]
    fn invert_reverses_and_flips() {
        assert_eq!(w(3, "s1 s2").invert(), w(3, "s2^-1 s1^-1"));
        assert!(BraidWord::identity(3).unwrap().invert().is_empty());
        let z = center_generator(3).unwrap();
        assert!(z.invert().compose(&z).unwrap().is_empty());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = w(5, "s1 s2^-1 s4^2");
        assert_eq!(a.to_string(), "s1 s2^-1 s4 s4");
        assert_eq!(w(5, &a.to_string()), a);
        assert_eq!("5:s1 s2^-1 s4^2".parse::<BraidWord>().unwrap(), a);
        assert_eq!(w(3, "e").to_string(), "e");
        assert!(BraidWord::parse(3, "s3").is_err());
        assert!(BraidWord::parse(3, "t1").is_err());
    }

    #[test]
    fn center_generator_b3() {
        assert_eq!(center_generator(3).unwrap(), w(3, "s1 s2 s1 s2 s1 s2"));
        assert_eq!(center_generator(4).unwrap().exponent_sum(), 12);
    }

    #[test]
    fn center_generator_is_central() {
        let z = center_generator(5).unwrap();
        for i in 1..5 {
            let s = BraidWord::generator(5, i, true).unwrap();
            assert!(z.commutes_with(&s).unwrap());
        }
    }

    #[test]
    fn permutation_and_exponent_examples() {
        let (p, e) = w(3, "s1 s2 s1").permutation_and_exponent();
        assert_eq!(p.cycle_string(), "(1 3)");
        assert_eq!(e, 3);
        let (p, e) = center_generator(4).unwrap().permutation_and_exponent();
        assert!(p.is_identity());
        assert_eq!(e, 12);
    }

    #[test]
    fn pure_generator_words() {
        assert_eq!(pure_generator(1, 2, 3).unwrap(), w(3, "s1 s1"));
        assert_eq!(pure_generator(1, 3, 3).unwrap(), w(3, "s2 s1 s1 s2^-1"));
        assert!(pure_generator(2, 2, 3).is_err());
        assert!(pure_generator(1, 4, 3).is_err());
    }

    #[test]
    fn is_pure_examples() {
        assert!(w(3, "s1 s1").is_pure());
        assert!(!w(3, "s1").is_pure());
        assert!(center_generator(5).unwrap().is_pure());
    }

    #[test]
    fn mirror_flips_signs() {
        assert_eq!(w(4, "s1 s2^-1").mirror(), w(4, "s1^-1 s2"));
    }
}
