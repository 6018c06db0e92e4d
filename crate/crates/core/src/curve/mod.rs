//! Isotopy classes of essential curves in the punctured disk `D_s`.
//!
//! A curve is a round base curve (surrounding a contiguous block of punctures) moved by a
//! conjugating braid. Its identity is the Garside normal form of its Dehn twist: twists
//! determine curves, so every predicate reduces to word-problem queries.

pub mod farey;

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, GarsideNormalForm, Letter};
use crate::error::{Error, Result};

pub use farey::{farey_slope_d3, slope_matrix, FareySlope, SlopeMatrix};

/// Where curve types are measured: the disk itself, or the sphere `S_{s+1}` obtained by
/// collapsing the boundary to a puncture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    Disk,
    Sphere,
}

#[derive(Clone)]
pub struct Curve {
    strands: usize,
    base: (usize, usize),
    conjugator: BraidWord,
    twist: BraidWord,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.strands == other.strands && self.key() == other.key()
    }
}

impl Eq for Curve {}

impl Hash for Curve {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Curve(D{}: [{}..{}] by {})", self.strands, self.base.0, self.base.1, self.conjugator)
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugator.is_empty() {
            write!(f, "c[{}..{}]", self.base.0, self.base.1)
        } else {
            write!(f, "({})·c[{}..{}]", self.conjugator, self.base.0, self.base.1)
        }
    }
}

fn round_twist(strands: usize, i: usize, j: usize) -> BraidWord {
    let row: Vec<Letter> = (i..j).map(Letter::pos).collect();
    BraidWord::new(strands, row).expect("indices checked by caller").pow((j - i + 1) as i64)
}

impl Curve {
    /// The round curve surrounding punctures `i..=j`.
    pub fn standard(strands: usize, i: usize, j: usize) -> Result<Curve> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        if i < 1 || j > strands || i > j {
            return Err(Error::InvalidCurve(format!("interval [{i}..{j}] outside 1..{strands}")));
        }
        let size = j - i + 1;
        if size < 2 {
            return Err(Error::InvalidCurve("a curve around one puncture is puncture-parallel".into()));
        }
        if size == strands {
            return Err(Error::InvalidCurve("a curve around every puncture is boundary-parallel".into()));
        }
        Ok(Curve {
            strands,
            base: (i, j),
            conjugator: BraidWord::identity(strands)?,
            twist: round_twist(strands, i, j),
        })
    }

    /// A curve from its serialized parts.
    pub fn from_parts(strands: usize, base: (usize, usize), conjugator: BraidWord) -> Result<Curve> {
        let c = Curve::standard(strands, base.0, base.1)?;
        c.apply_braid(&conjugator)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn base(&self) -> (usize, usize) {
        self.base
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    /// Canonical identity: the normal form of the Dehn twist.
    pub fn key(&self) -> &GarsideNormalForm {
        self.twist.normal_form()
    }

    fn check_same(&self, other: &Curve) -> Result<()> {
        if self.strands != other.strands {
            Err(Error::StrandMismatch(self.strands, other.strands))
        } else {
            Ok(())
        }
    }

    /// The image `g(c)`: the conjugator becomes `g · conjugator`, so the twist becomes `g T g⁻¹`.
    pub fn apply_braid(&self, g: &BraidWord) -> Result<Curve> {
        if g.strands() != self.strands {
            return Err(Error::StrandMismatch(g.strands(), self.strands));
        }
        Ok(Curve {
            strands: self.strands,
            base: self.base,
            conjugator: g.mul(&self.conjugator),
            twist: g.mul(&self.twist).mul(&g.invert()),
        })
    }

    /// Image under the reflection of the disk fixing every puncture.
    pub fn mirror(&self) -> Curve {
        let conjugator = self.conjugator.mirror();
        let base = round_twist(self.strands, self.base.0, self.base.1);
        Curve {
            strands: self.strands,
            base: self.base,
            twist: conjugator.mul(&base).mul(&conjugator.invert()),
            conjugator,
        }
    }

    /// Full Dehn twist `T_c`, or the half twist `H_c` when `half` is set (2-curves only).
    pub fn twist_word(&self, half: bool) -> Result<BraidWord> {
        if !half {
            return Ok(self.twist.clone());
        }
        let (i, j) = self.base;
        if j - i + 1 != 2 {
            return Err(Error::NotTwoCurve(j - i + 1));
        }
        let h = BraidWord::generator(self.strands, i, true)?;
        self.conjugator.conjugate(&h)
    }

    pub fn full_twist(&self) -> &BraidWord {
        &self.twist
    }

    pub fn half_twist(&self) -> Result<BraidWord> {
        self.twist_word(true)
    }

    pub fn equals_curve(&self, other: &Curve) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.key() == other.key())
    }

    /// Disjointness through commutation of the twists.
    pub fn is_disjoint(&self, other: &Curve) -> Result<bool> {
        self.check_same(other)?;
        self.twist.commutes_with(&other.twist)
    }

    /// Intersection number exactly two, for 2-curves: distinct, not disjoint, and the half twists
    /// satisfy the braid relation `H_a H_b H_a = H_b H_a H_b`.
    pub fn is_adjacent(&self, other: &Curve) -> Result<bool> {
        self.check_same(other)?;
        let ha = self.half_twist()?;
        let hb = other.half_twist()?;
        if self.key() == other.key() || self.is_disjoint(other)? {
            return Ok(false);
        }
        ha.mul(&hb).mul(&ha).equals(&hb.mul(&ha).mul(&hb))
    }

    /// Number of punctures inside the curve (disk) or on its smaller side (sphere `S_{s+1}`).
    pub fn topological_type(&self, ambient: Ambient) -> usize {
        let k = self.base.1 - self.base.0 + 1;
        match ambient {
            Ambient::Disk => k,
            Ambient::Sphere => k.min(self.strands + 1 - k),
        }
    }

    /// The punctures (1-based) inside the curve.
    pub fn enclosed(&self) -> BTreeSet<usize> {
        let perm = self.conjugator.permutation();
        let (i, j) = self.base;
        (0..self.strands).filter(|&p| (i - 1..j).contains(&perm.apply(p))).map(|p| p + 1).collect()
    }

    /// `true` for a 2-curve (disk interior).
    pub fn is_two_curve(&self) -> bool {
        self.topological_type(Ambient::Disk) == 2
    }
}

/// Serializable form of a curve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub strands: usize,
    pub base: [usize; 2],
    pub conjugator: String,
}

impl From<&Curve> for CurveRecord {
    fn from(c: &Curve) -> Self {
        CurveRecord { strands: c.strands, base: [c.base.0, c.base.1], conjugator: c.conjugator.to_string() }
    }
}

impl TryFrom<&CurveRecord> for Curve {
    type Error = Error;

    fn try_from(r: &CurveRecord) -> Result<Curve> {
        let conj = BraidWord::parse(r.strands, &r.conjugator)?;
        Curve::from_parts(r.strands, (r.base[0], r.base[1]), conj)
    }
}
