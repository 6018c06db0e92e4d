//! Mapping classes of the holed disk as framed braids.
//!
//! The boundary-pointwise mapping class group of a disk with `s` holes is the semidirect
//! product of `B_s` with the lattice `Z^K` of boundary-twist framings, where `K` is the set of
//! holes that keep their boundary (the others are capped to punctures). An element is a pair
//! `(w, u)` and
//!
//! ```text
//! (a, u) · (b, v) = (ab, u + ρ(a)v),    (ρ(a)v)[p] = v[π_a(p)]
//! ```
//!
//! where `π_a(p)` is the final position of the strand that starts at position `p`; the framing
//! is recorded at the start of the word. Worked example in `B_3`, full support:
//! `(σ1, 0) · (e, e_1)` moves the unit framing to hole 2, because the strand starting at
//! position 2 ends at position 1, so the product is `(σ1, e_2)`, while
//! `(e, e_1) · (σ1, 0) = (σ1, e_1)`.
//!
//! On pure braids the product is direct and framings add. The generalized half twist
//! `ι(σ_i)` carries zero framing; the plain Dehn twist about a curve carries the indicator
//! of the holes it surrounds; the outer boundary twist is `(z, 1)`.

mod expr;
mod lantern;

use std::fmt;

use crate::braid::{center_generator, BraidWord};
use crate::curve::Curve;
use crate::error::{Error, Result};

pub use expr::{TwistExpression, TwistSymbol};
pub use lantern::{pair_curve, verify_generalized_lantern, verify_iota_identities};

#[derive(Clone, PartialEq, Eq)]
pub struct FramedBraid {
    support: Vec<usize>,
    word: BraidWord,
    framing: Vec<i64>,
}

fn normalize_support(strands: usize, support: &[usize]) -> Result<Vec<usize>> {
    let mut k = support.to_vec();
    k.sort_unstable();
    k.dedup();
    if let Some(&bad) = k.iter().find(|&&h| h == 0 || h > strands) {
        return Err(Error::IndexOutOfRange(format!("hole {bad} with {strands} strands")));
    }
    Ok(k)
}

impl FramedBraid {
    /// Builds `(word, framing)`; the word must permute the support holes among themselves.
    pub fn new(word: BraidWord, support: &[usize], framing: Vec<i64>) -> Result<Self> {
        let support = normalize_support(word.strands(), support)?;
        if framing.len() != support.len() {
            return Err(Error::Arity { expected: support.len(), got: framing.len() });
        }
        let perm = word.permutation();
        if support.iter().any(|&h| support.binary_search(&(perm.apply(h - 1) + 1)).is_err()) {
            return Err(Error::SupportNotPreserved);
        }
        Ok(FramedBraid { support, word, framing })
    }

    pub fn identity(strands: usize, support: &[usize]) -> Result<Self> {
        let support = normalize_support(strands, support)?;
        let n = support.len();
        Ok(FramedBraid { support, word: BraidWord::identity(strands)?, framing: vec![0; n] })
    }

    pub fn strands(&self) -> usize {
        self.word.strands()
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn framing(&self) -> &[i64] {
        &self.framing
    }

    /// Framing coefficient of hole `h`, if `h` is in the support.
    pub fn framing_of(&self, h: usize) -> Option<i64> {
        self.support.binary_search(&h).ok().map(|k| self.framing[k])
    }

    fn check_same(&self, other: &FramedBraid) -> Result<()> {
        if self.strands() != other.strands() {
            return Err(Error::StrandMismatch(self.strands(), other.strands()));
        }
        if self.support != other.support {
            return Err(Error::SupportMismatch);
        }
        Ok(())
    }

    /// `ρ(a)v`: the framing `v` read through the strand permutation of `a`.
    fn act(&self, v: &[i64]) -> Vec<i64> {
        let perm = self.word.permutation();
        self.support
            .iter()
            .map(|&h| {
                let target = perm.apply(h - 1) + 1;
                let k = self.support.binary_search(&target).expect("support is preserved");
                v[k]
            })
            .collect()
    }

    pub fn mul(&self, other: &FramedBraid) -> Result<FramedBraid> {
        self.check_same(other)?;
        let moved = self.act(&other.framing);
        Ok(FramedBraid {
            support: self.support.clone(),
            word: self.word.mul(&other.word),
            framing: self.framing.iter().zip(&moved).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn inverse(&self) -> FramedBraid {
        let inv_word = self.word.invert();
        let tmp = FramedBraid { support: self.support.clone(), word: inv_word.clone(), framing: vec![] };
        let moved = tmp.act(&self.framing);
        FramedBraid { support: self.support.clone(), word: inv_word, framing: moved.iter().map(|x| -x).collect() }
    }

    pub fn pow(&self, k: i64) -> FramedBraid {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FramedBraid {
            support: self.support.clone(),
            word: BraidWord::identity(self.strands()).expect("strands >= 2"),
            framing: vec![0; self.support.len()],
        };
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base).expect("same support");
        }
        out
    }

    /// Equality in the framed group: equal braids and identical framings.
    pub fn framed_equals(&self, other: &FramedBraid) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.framing == other.framing && self.word.equals(&other.word)?)
    }

    /// Glues punctured disks into the holes of `caps`, deleting their framing coordinates.
    pub fn cap_holes(&self, caps: &[usize]) -> Result<FramedBraid> {
        if let Some(&h) = caps.iter().find(|h| !self.support.contains(h)) {
            return Err(Error::NotInSupport(h));
        }
        let (support, framing): (Vec<usize>, Vec<i64>) = self
            .support
            .iter()
            .zip(&self.framing)
            .filter(|(h, _)| !caps.contains(h))
            .map(|(&h, &f)| (h, f))
            .unzip();
        FramedBraid::new(self.word.clone(), &support, framing)
    }

    /// Forgets all framing (caps every hole).
    pub fn cap_pi(&self) -> BraidWord {
        self.word.clone()
    }
}

impl fmt::Debug for FramedBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FramedBraid({self})")
    }
}

impl fmt::Display for FramedBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.word.normal_form(), framing_string(&self.support, &self.framing))
    }
}

pub(crate) fn framing_string(support: &[usize], framing: &[i64]) -> String {
    let parts: Vec<String> = support.iter().zip(framing).map(|(h, v)| format!("d{h}:{v}")).collect();
    format!("[{}]", parts.join(", "))
}

/// `T_{d_i}`: the twist about the boundary of hole `i`.
pub fn boundary_twist(strands: usize, support: &[usize], hole: usize) -> Result<FramedBraid> {
    let mut b = FramedBraid::identity(strands, support)?;
    let k = b.support.binary_search(&hole).map_err(|_| Error::NotInSupport(hole))?;
    b.framing[k] = 1;
    Ok(b)
}

/// The plain Dehn twist about a curve of the holed disk.
pub fn cluster_twist(curve: &Curve, support: &[usize]) -> Result<FramedBraid> {
    let enclosed = curve.enclosed();
    let support = normalize_support(curve.strands(), support)?;
    let framing = support.iter().map(|h| enclosed.contains(h) as i64).collect();
    FramedBraid::new(curve.full_twist().clone(), &support, framing)
}

/// Twist about the round curve around holes `i..=j`. The block of all holes is the outer
/// boundary; a single hole is its own boundary twist.
pub fn cluster_twist_interval(strands: usize, support: &[usize], i: usize, j: usize) -> Result<FramedBraid> {
    if i < 1 || j > strands || i > j {
        return Err(Error::InvalidCluster(format!("[{i}..{j}] with {strands} holes")));
    }
    if i == 1 && j == strands {
        return outer_twist(strands, support);
    }
    if i == j {
        return Err(Error::InvalidCluster(format!(
            "[{i}..{j}] is boundary-parallel to hole {i}; use its boundary twist"
        )));
    }
    cluster_twist(&Curve::standard(strands, i, j)?, support)
}

/// `T_{d_{s+1}}`: the twist about the outer boundary, `(z, 1)`.
pub fn outer_twist(strands: usize, support: &[usize]) -> Result<FramedBraid> {
    let support = normalize_support(strands, support)?;
    let n = support.len();
    FramedBraid::new(center_generator(strands)?, &support, vec![1; n])
}

/// The embedding `ι`: generalized half twists, zero framing.
pub fn iota(word: &BraidWord, support: &[usize]) -> Result<FramedBraid> {
    let support = normalize_support(word.strands(), support)?;
    let n = support.len();
    FramedBraid::new(word.clone(), &support, vec![0; n])
}

pub fn full_support(strands: usize) -> Vec<usize> {
    (1..=strands).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: usize, t: &str) -> BraidWord {
        BraidWord::parse(s, t).unwrap()
    }

    const FULL3: &[usize] = &[1, 2, 3];

    #[test]
    fn pure_framings_add() {
        let e1 = boundary_twist(3, FULL3, 1).unwrap();
        let e2 = boundary_twist(3, FULL3, 2).unwrap();
        let p = e1.mul(&e2).unwrap();
        assert_eq!(p.framing(), &[1, 1, 0]);
        assert!(p.word().is_empty());
    }

    #[test]
    fn inverse_law() {
        let a = FramedBraid::new(w(3, "s1 s2"), FULL3, vec![2, -1, 5]).unwrap();
        let id = FramedBraid::identity(3, FULL3).unwrap();
        assert!(a.mul(&a.inverse()).unwrap().framed_equals(&id).unwrap());
        assert!(a.inverse().mul(&a).unwrap().framed_equals(&id).unwrap());
    }

    #[test]
    fn non_pure_braid_moves_framing() {
        let s1 = iota(&w(3, "s1"), FULL3).unwrap();
        let e1 = boundary_twist(3, FULL3, 1).unwrap();
        let left = s1.mul(&e1).unwrap();
        let right = e1.mul(&s1).unwrap();
        assert!(!left.framed_equals(&right).unwrap());
        assert_eq!(left.framing(), &[0, 1, 0]);
        assert_eq!(right.framing(), &[1, 0, 0]);
    }

    #[test]
    fn boundary_twists() {
        assert_eq!(boundary_twist(3, FULL3, 1).unwrap().framing(), &[1, 0, 0]);
        assert_eq!(boundary_twist(3, FULL3, 1).unwrap().pow(2).framing(), &[2, 0, 0]);
        assert_eq!(boundary_twist(3, &[2], 1), Err(Error::NotInSupport(1)));
        let d1 = boundary_twist(3, FULL3, 1).unwrap();
        let c12 = cluster_twist_interval(3, FULL3, 1, 2).unwrap();
        assert!(d1.mul(&c12).unwrap().framed_equals(&c12.mul(&d1).unwrap()).unwrap());
    }

    #[test]
    fn cluster_twists() {
        let c12 = cluster_twist_interval(3, FULL3, 1, 2).unwrap();
        assert_eq!(*c12.word(), w(3, "s1 s1"));
        assert_eq!(c12.framing(), &[1, 1, 0]);
        let all = cluster_twist_interval(3, FULL3, 1, 3).unwrap();
        assert!(all.framed_equals(&outer_twist(3, FULL3).unwrap()).unwrap());
        let capped = cluster_twist_interval(3, &[1], 1, 2).unwrap();
        assert_eq!(capped.framing(), &[1]);
        assert!(cluster_twist_interval(3, FULL3, 2, 2).is_err());
    }

    #[test]
    fn iota_sigma_squared() {
        // ι(σ1)² = T_{a12} T_{d1}⁻¹ T_{d2}⁻¹
        let lhs = iota(&w(3, "s1"), FULL3).unwrap().pow(2);
        let rhs = cluster_twist_interval(3, FULL3, 1, 2)
            .unwrap()
            .mul(&boundary_twist(3, FULL3, 1).unwrap().inverse())
            .unwrap()
            .mul(&boundary_twist(3, FULL3, 2).unwrap().inverse())
            .unwrap();
        assert!(lhs.framed_equals(&rhs).unwrap());
    }

    #[test]
    fn outer_twist_and_pi() {
        let o = outer_twist(3, FULL3).unwrap();
        assert_eq!(o.framing(), &[1, 1, 1]);
        assert_eq!(o.cap_pi(), center_generator(3).unwrap());
        let empty = outer_twist(3, &[]).unwrap();
        assert!(empty.framing().is_empty());
        assert!(boundary_twist(3, FULL3, 2).unwrap().cap_pi().is_empty());
    }

    #[test]
    fn capping() {
        let d1 = boundary_twist(3, FULL3, 1).unwrap();
        let capped = d1.cap_holes(&[1]).unwrap();
        assert!(capped.framed_equals(&FramedBraid::identity(3, &[2, 3]).unwrap()).unwrap());
        assert_eq!(d1.cap_holes(&[1]).unwrap().support(), &[2, 3]);
        assert_eq!(d1.cap_holes(&[1]).unwrap().cap_holes(&[1]), Err(Error::NotInSupport(1)));
        // σ1 swaps holes 1 and 2, so capping only one of them is not a mapping class
        let s1 = iota(&w(3, "s1"), FULL3).unwrap();
        assert_eq!(s1.cap_holes(&[2]), Err(Error::SupportNotPreserved));
    }

    #[test]
    fn support_must_be_preserved() {
        assert_eq!(iota(&w(3, "s1"), &[1]), Err(Error::SupportNotPreserved));
        assert!(iota(&w(3, "s2"), &[1]).is_ok());
    }
}
