//! Formal products of twists, for elements that must be pushed through boundary permutations
//! which no framed braid realizes.

use std::fmt;

use crate::braid::{center_generator, BraidWord};
use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::framed::{boundary_twist, cluster_twist, iota, outer_twist, FramedBraid};

/// One twist symbol of a holed disk with `s` holes. Boundary labels `1..=s` are the holes;
/// label `s + 1` is the outer boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TwistSymbol {
    /// Plain Dehn twist `T_c`.
    Curve(Curve),
    /// Generalized half twist `H̃_c` of a 2-curve (zero framing).
    Half(Curve),
    /// `T_{d_label}`.
    Boundary(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistExpression {
    strands: usize,
    terms: Vec<(TwistSymbol, i64)>,
}

impl TwistExpression {
    pub fn new(strands: usize) -> Self {
        TwistExpression { strands, terms: vec![] }
    }

    pub fn single(strands: usize, sym: TwistSymbol, exp: i64) -> Self {
        let mut e = TwistExpression::new(strands);
        e.push(sym, exp);
        e
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> &[(TwistSymbol, i64)] {
        &self.terms
    }

    pub fn outer_label(&self) -> usize {
        self.strands + 1
    }

    /// Appends `sym^exp`, merging with an equal trailing symbol.
    pub fn push(&mut self, sym: TwistSymbol, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some((last, e)) = self.terms.last_mut() {
            if *last == sym {
                *e += exp;
                if *e == 0 {
                    self.terms.pop();
                }
                return;
            }
        }
        self.terms.push((sym, exp));
    }

    pub fn concat(&self, other: &TwistExpression) -> TwistExpression {
        let mut out = self.clone();
        for (s, e) in &other.terms {
            out.push(s.clone(), *e);
        }
        out
    }

    pub fn inverse(&self) -> TwistExpression {
        let mut out = TwistExpression::new(self.strands);
        for (s, e) in self.terms.iter().rev() {
            out.push(s.clone(), -e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> TwistExpression {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = TwistExpression::new(self.strands);
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn has_half_twists(&self) -> bool {
        self.terms.iter().any(|(s, _)| matches!(s, TwistSymbol::Half(_)))
    }

    /// Moves every boundary symbol to the end, summing exponents per label. Valid only when
    /// no half twist is present: boundary twists are central in the pure part.
    pub fn collect_boundaries(&self) -> TwistExpression {
        if self.has_half_twists() {
            return self.clone();
        }
        let mut out = TwistExpression::new(self.strands);
        let mut totals = vec![0i64; self.strands + 2];
        for (s, e) in &self.terms {
            match s {
                TwistSymbol::Boundary(l) => totals[*l] += e,
                _ => out.push(s.clone(), *e),
            }
        }
        for (l, &t) in totals.iter().enumerate().skip(1) {
            out.push(TwistSymbol::Boundary(l), t);
        }
        out
    }

    /// Evaluates in the framed group with support `support`; boundary labels outside the
    /// support are capped and evaluate to the identity.
    pub fn evaluate(&self, support: &[usize]) -> Result<FramedBraid> {
        let s = self.strands;
        let mut acc = FramedBraid::identity(s, support)?;
        for (sym, e) in &self.terms {
            let x = match sym {
                TwistSymbol::Curve(c) => cluster_twist(c, support)?,
                TwistSymbol::Half(c) => iota(&c.half_twist()?, support)?,
                TwistSymbol::Boundary(l) if *l == s + 1 => outer_twist(s, support)?,
                TwistSymbol::Boundary(l) if support.contains(l) => boundary_twist(s, support, *l)?,
                TwistSymbol::Boundary(l) if *l >= 1 && *l <= s => FramedBraid::identity(s, support)?,
                TwistSymbol::Boundary(l) => {
                    return Err(Error::IndexOutOfRange(format!("boundary label {l} with {s} holes")))
                }
            };
            acc = acc.mul(&x.pow(*e))?;
        }
        Ok(acc)
    }

    /// `π_k`: inner boundary twists die, the outer twist becomes `z`, curve symbols become
    /// their braid words.
    pub fn cap_all(&self) -> Result<BraidWord> {
        let s = self.strands;
        let z = center_generator(s)?;
        let mut acc = BraidWord::identity(s)?;
        for (sym, e) in &self.terms {
            let w = match sym {
                TwistSymbol::Curve(c) => c.full_twist().clone(),
                TwistSymbol::Half(c) => c.half_twist()?,
                TwistSymbol::Boundary(l) if *l == s + 1 => z.clone(),
                TwistSymbol::Boundary(_) => continue,
            };
            acc = acc.mul(&w.pow(*e));
        }
        Ok(acc)
    }
}

fn exp_suffix(e: i64) -> String {
    if e == 1 {
        String::new()
    } else {
        format!("^{e}")
    }
}

impl fmt::Display for TwistExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, e)| match s {
                TwistSymbol::Curve(c) => format!("T_{{{c}}}{}", exp_suffix(*e)),
                TwistSymbol::Half(c) => format!("H_{{{c}}}{}", exp_suffix(*e)),
                TwistSymbol::Boundary(l) => format!("T_d{l}{}", exp_suffix(*e)),
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
