//! Slopes on the Farey graph and the identification of curves in `D_3` with them.
//!
//! Frozen convention (fixed by the anchors and checked exhaustively on all curves with
//! conjugators of length ≤ 4):
//!
//! - `c[1..2] ↦ 0/1`, `c[2..3] ↦ 1/0`
//! - `σ1 ↦ [[1, 0], [-1, 1]]`, `σ2 ↦ [[1, 1], [0, 1]]`, acting on column vectors `(p, q)`
//!
//! Words act by the product of their letter matrices in reading order, matching the left
//! action `apply_braid`. The opposite chirality (`σ1 ↦ [[1,0],[1,1]]`, `σ2 ↦ [[1,-1],[0,1]]`)
//! also satisfies the braid relation; it is the mirror image of this one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::curve::Curve;
use crate::error::{Error, Result};

/// A reduced fraction `p/q` with `q ≥ 0`; `1/0` is the slope at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FareySlope {
    p: i64,
    q: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl FareySlope {
    /// Normalizes the primitive vector `±(p, q)`; fails on non-primitive input.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::InvalidCurve(format!("{p}/{q} is not a reduced slope")));
        }
        Ok(Self::from_primitive(p, q))
    }

    pub(crate) fn from_primitive(p: i64, q: i64) -> Self {
        if q < 0 || (q == 0 && p < 0) {
            FareySlope { p: -p, q: -q }
        } else {
            FareySlope { p, q }
        }
    }

    pub fn numerator(self) -> i64 {
        self.p
    }

    pub fn denominator(self) -> i64 {
        self.q
    }

    pub fn vector(self) -> (i64, i64) {
        (self.p, self.q)
    }

    /// `|p q' − p' q|`.
    pub fn determinant(self, other: FareySlope) -> i64 {
        (self.p * other.q - other.p * self.q).abs()
    }

    pub fn is_farey_edge(self, other: FareySlope) -> bool {
        self.determinant(other) == 1
    }
}

impl fmt::Display for FareySlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// An integer 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SlopeMatrix(pub [[i64; 2]; 2]);

impl SlopeMatrix {
    pub const IDENTITY: SlopeMatrix = SlopeMatrix([[1, 0], [0, 1]]);

    pub fn mul(&self, o: &SlopeMatrix) -> SlopeMatrix {
        let a = self.0;
        let b = o.0;
        SlopeMatrix([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }

    pub fn apply(&self, s: FareySlope) -> FareySlope {
        let (p, q) = s.vector();
        let m = self.0;
        FareySlope::from_primitive(m[0][0] * p + m[0][1] * q, m[1][0] * p + m[1][1] * q)
    }

    pub fn determinant(&self) -> i64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }
}

fn letter_matrix(l: Letter) -> SlopeMatrix {
    match (l.index, l.positive) {
        (1, true) => SlopeMatrix([[1, 0], [-1, 1]]),
        (1, false) => SlopeMatrix([[1, 0], [1, 1]]),
        (2, true) => SlopeMatrix([[1, 1], [0, 1]]),
        (2, false) => SlopeMatrix([[1, -1], [0, 1]]),
        _ => unreachable!("B_3 has generators 1 and 2 only"),
    }
}

/// The unimodular matrix of a word in `B_3`.
pub fn slope_matrix(word: &BraidWord) -> Result<SlopeMatrix> {
    if word.strands() != 3 {
        return Err(Error::StrandMismatch(word.strands(), 3));
    }
    Ok(word.letters().iter().fold(SlopeMatrix::IDENTITY, |m, &l| m.mul(&letter_matrix(l))))
}

/// The Farey slope of a curve in `D_3`.
pub fn farey_slope_d3(c: &Curve) -> Result<FareySlope> {
    if c.strands() != 3 {
        return Err(Error::StrandMismatch(c.strands(), 3));
    }
    let anchor = match c.base() {
        (1, 2) => FareySlope { p: 0, q: 1 },
        (2, 3) => FareySlope { p: 1, q: 0 },
        b => unreachable!("only 2-curves exist in D_3, got {b:?}"),
    };
    Ok(slope_matrix(c.conjugator())?.apply(anchor))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        let a = Curve::standard(3, 1, 2).unwrap();
        let b = Curve::standard(3, 2, 3).unwrap();
        assert_eq!(farey_slope_d3(&a).unwrap().to_string(), "0/1");
        assert_eq!(farey_slope_d3(&b).unwrap().to_string(), "1/0");
        assert!(farey_slope_d3(&Curve::standard(4, 1, 2).unwrap()).is_err());
    }

    #[test]
    fn matrices_satisfy_braid_relation_projectively() {
        let l = slope_matrix(&BraidWord::parse(3, "s1 s2 s1").unwrap()).unwrap();
        let r = slope_matrix(&BraidWord::parse(3, "s2 s1 s2").unwrap()).unwrap();
        assert_eq!(l, r);
        assert_eq!(l.determinant(), 1);
    }

    #[test]
    fn normalization() {
        assert_eq!(FareySlope::new(-1, 0).unwrap(), FareySlope::new(1, 0).unwrap());
        assert_eq!(FareySlope::new(1, -2).unwrap().to_string(), "-1/2");
        assert!(FareySlope::new(2, 4).is_err());
        assert!(FareySlope::new(0, 1).unwrap().is_farey_edge(FareySlope::new(1, 1).unwrap()));
    }
}
