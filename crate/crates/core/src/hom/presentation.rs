//! Finite presentations of the Artin groups of type A and B and of the pure braid group.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// The braid group `B_{n+1}` on `σ_1..σ_n`.
    A,
    /// Type `B_n` on `s_1..s_n`, with `m(s_1, s_2) = 4`.
    B,
    /// The pure braid group `P_{n+1}` on `A_{i,j}`, `1 ≤ i < j ≤ n+1`.
    Pure,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "a-type" => Ok(Family::A),
            "b" | "b-type" => Ok(Family::B),
            "pure" | "p" => Ok(Family::Pure),
            _ => Err(Error::Parse(format!("unknown family `{s}` (expected a, b or pure)"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::Pure => "pure",
        })
    }
}

/// A word in the generators of a presentation: `(generator index, ±1)` letters.
pub type SourceWord = Vec<(usize, i64)>;

pub fn invert_source(w: &SourceWord) -> SourceWord {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Concatenation with free reduction.
pub fn concat_source(parts: &[&SourceWord]) -> SourceWord {
    let mut out: SourceWord = vec![];
    for p in parts {
        for &(g, e) in p.iter() {
            if out.last() == Some(&(g, -e)) {
                out.pop();
            } else {
                out.push((g, e));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub family: Family,
    pub n: usize,
    pub generators: Vec<String>,
    pub relations: Vec<(SourceWord, SourceWord)>,
}

impl Presentation {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Strand count of the braid group the family naturally sits in.
    pub fn target_strands(&self) -> usize {
        self.n + 1
    }

    pub fn format_word(&self, w: &SourceWord) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(g, e)| if e == 1 { self.generators[g].clone() } else { format!("{}^{e}", self.generators[g]) })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Index of the pure generator `A_{i,j}` (lexicographic order of pairs).
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        pair_index(self.n + 1, i, j)
    }

    /// The generator of the center written in the source generators:
    /// `(σ1⋯σn)^{n+1}`, `(s1⋯sn)^n`, or the ordered product of all `A_{i,j}`.
    pub fn center_word(&self) -> SourceWord {
        match self.family {
            Family::A => (0..self.n + 1).flat_map(|_| (0..self.n).map(|g| (g, 1))).collect(),
            Family::B => (0..self.n).flat_map(|_| (0..self.n).map(|g| (g, 1))).collect(),
            Family::Pure => (0..self.rank()).map(|g| (g, 1)).collect(),
        }
    }
}

pub(crate) fn pair_index(strands: usize, i: usize, j: usize) -> usize {
    // pairs (1,2), (1,3), …, (1,s), (2,3), …
    let before: usize = (1..i).map(|r| strands - r).sum();
    before + (j - i - 1)
}

/// Pairs `(i, j)` in generator order.
pub fn pure_pairs(strands: usize) -> Vec<(usize, usize)> {
    (1..strands).flat_map(|i| ((i + 1)..=strands).map(move |j| (i, j))).collect()
}

fn alternating(a: usize, b: usize, len: usize) -> SourceWord {
    (0..len).map(|k| (if k % 2 == 0 { a } else { b }, 1)).collect()
}

fn coxeter_relations(n: usize, m: impl Fn(usize, usize) -> usize) -> Vec<(SourceWord, SourceWord)> {
    let mut rel = vec![];
    for i in 0..n {
        for j in (i + 1)..n {
            let len = m(i, j);
            rel.push((alternating(i, j, len), alternating(j, i, len)));
        }
    }
    rel
}

/// Which direction the conjugations in the pure braid relations are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PureConvention {
    /// `A_rs⁻¹ A_ij A_rs = …`
    InverseFirst,
    /// `A_rs A_ij A_rs⁻¹ = …`
    InverseLast,
}

/// The pure braid relations actually used; chosen because the inclusion `A_{i,j} ↦ A_{i,j}`
/// satisfies them (checked in tests), while the other direction does not.
pub const PURE_CONVENTION: PureConvention = PureConvention::InverseFirst;

/// Artin's presentation of the pure braid group on `strands` strands, relations written as
/// `A_rs^∓ A_ij A_rs^± = w`.
pub fn pure_relations(strands: usize, conv: PureConvention) -> Vec<(SourceWord, SourceWord)> {
    let a = |i: usize, j: usize, e: i64| (pair_index(strands, i, j), e);
    let mut rel = vec![];
    for (r, s) in pure_pairs(strands) {
        for (i, j) in pure_pairs(strands) {
            let rhs: SourceWord = if s < i || (i < r && s < j) {
                vec![a(i, j, 1)]
            } else if s == i {
                vec![a(r, j, 1), a(i, j, 1), a(r, j, -1)]
            } else if i == r && s < j {
                vec![a(r, j, 1), a(s, j, 1), a(i, j, 1), a(s, j, -1), a(r, j, -1)]
            } else if r < i && i < s && s < j {
                vec![
                    a(r, j, 1),
                    a(s, j, 1),
                    a(r, j, -1),
                    a(s, j, -1),
                    a(i, j, 1),
                    a(s, j, 1),
                    a(r, j, 1),
                    a(s, j, -1),
                    a(r, j, -1),
                ]
            } else {
                continue;
            };
            let lhs = match conv {
                PureConvention::InverseFirst => vec![a(r, s, -1), a(i, j, 1), a(r, s, 1)],
                PureConvention::InverseLast => vec![a(r, s, 1), a(i, j, 1), a(r, s, -1)],
            };
            rel.push((lhs, rhs));
        }
    }
    rel
}

pub fn presentation_of(family: Family, n: usize) -> Result<Presentation> {
    match family {
        Family::A => {
            if n < 1 {
                return Err(Error::Unsupported("type A needs n >= 1".into()));
            }
            Ok(Presentation {
                family,
                n,
                generators: (1..=n).map(|i| format!("s{i}")).collect(),
                relations: coxeter_relations(n, |i, j| if j == i + 1 { 3 } else { 2 }),
            })
        }
        Family::B => {
            if n < 2 {
                return Err(Error::Unsupported("type B needs n >= 2".into()));
            }
            Ok(Presentation {
                family,
                n,
                generators: (1..=n).map(|i| format!("t{i}")).collect(),
                relations: coxeter_relations(n, |i, j| match (i, j) {
                    (0, 1) => 4,
                    _ if j == i + 1 => 3,
                    _ => 2,
                }),
            })
        }
        Family::Pure => {
            if n < 1 {
                return Err(Error::Unsupported("the pure braid group needs n >= 1".into()));
            }
            let s = n + 1;
            Ok(Presentation {
                family,
                n,
                generators: pure_pairs(s).into_iter().map(|(i, j)| format!("A{i},{j}")).collect(),
                relations: pure_relations(s, PURE_CONVENTION),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_n3() {
        let p = presentation_of(Family::A, 3).unwrap();
        assert_eq!(p.relations.len(), 3);
        assert_eq!(p.format_word(&p.relations[0].0), "s1 s2 s1");
        assert_eq!(p.format_word(&p.relations[1].0), "s1 s3");
        assert_eq!(p.format_word(&p.relations[2].0), "s2 s3 s2");
    }

    #[test]
    fn type_b_n2() {
        let p = presentation_of(Family::B, 2).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.format_word(&p.relations[0].0), "t1 t2 t1 t2");
        assert_eq!(p.format_word(&p.relations[0].1), "t2 t1 t2 t1");
    }

    #[test]
    fn pair_indices() {
        let pairs = pure_pairs(4);
        for (k, (i, j)) in pairs.iter().enumerate() {
            assert_eq!(pair_index(4, *i, *j), k);
        }
        assert_eq!(pairs.len(), 6);
    }

    #[test]
    fn rejects_small_parameters() {
        assert!(presentation_of(Family::B, 1).is_err());
        assert!(presentation_of(Family::A, 0).is_err());
    }
}
