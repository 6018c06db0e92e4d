//! Mapping classes of the sphere `S_{n+2}` (punctures `1..=n+1` of the disk plus the outer
//! boundary as label `n+2`), given geometrically by a braid and an orientation, or
//! extensionally by a finite curve table and a label permutation.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::curve::{Curve, CurveRecord};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub enum CurveAction {
    /// `f = h ∘ mirror^{(1−ε)/2}`: `f⋆(c) = h(c)` or `h(mirror(c))`.
    Geometric(BraidWord),
    /// Explicit finite list `c ↦ f⋆(c)`.
    Table(Vec<(Curve, Curve)>),
    /// `outer ∘ inner`: the inner class acts first.
    Composite(Box<MappingClassSpec>, Box<MappingClassSpec>),
}

#[derive(Debug, Clone)]
pub struct MappingClassSpec {
    strands: usize,
    action: CurveAction,
    epsilon: i64,
    /// `delta[l - 1]` is the image of label `l`, for labels `1..=strands + 1`.
    delta: Vec<usize>,
}

fn sides(c: &Curve) -> [BTreeSet<usize>; 2] {
    let inside = c.enclosed();
    let outside = (1..=c.strands() + 1).filter(|p| !inside.contains(p)).collect();
    [inside, outside]
}

impl MappingClassSpec {
    pub fn identity(strands: usize) -> Result<Self> {
        Self::geometric(BraidWord::identity(strands)?, 1)
    }

    /// The class of the braid `h` (after the reflection when `epsilon = −1`). Its label
    /// permutation is read off the strands; the outer boundary is fixed.
    pub fn geometric(h: BraidWord, epsilon: i64) -> Result<Self> {
        check_epsilon(epsilon)?;
        let s = h.strands();
        let inv = h.permutation().inverse();
        let mut delta: Vec<usize> = (0..s).map(|p| inv.apply(p) + 1).collect();
        delta.push(s + 1);
        Ok(MappingClassSpec { strands: s, action: CurveAction::Geometric(h), epsilon, delta })
    }

    /// Extensional data. The table must be injective on curves, and `delta` must carry the two
    /// sides of every source curve onto the two sides of its image.
    pub fn table(strands: usize, entries: Vec<(Curve, Curve)>, epsilon: i64, delta: Vec<usize>) -> Result<Self> {
        check_epsilon(epsilon)?;
        check_delta(strands, &delta)?;
        for (k, (c, d)) in entries.iter().enumerate() {
            if c.strands() != strands || d.strands() != strands {
                return Err(Error::StrandMismatch(c.strands().max(d.strands()), strands));
            }
            for (c2, d2) in &entries[..k] {
                if c.equals_curve(c2)? != d.equals_curve(d2)? {
                    return Err(Error::InvalidBoundaryData(format!("curve table is not injective at {c}")));
                }
            }
            let image: BTreeSet<usize> = c.enclosed().iter().map(|&l| delta[l - 1]).collect();
            if !sides(d).contains(&image) {
                return Err(Error::InvalidBoundaryData(format!(
                    "labels of {c} do not map onto a side of {d} under the label permutation"
                )));
            }
        }
        Ok(MappingClassSpec { strands, action: CurveAction::Table(entries), epsilon, delta })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MappingClassSpec) -> Result<MappingClassSpec> {
        if self.strands != inner.strands {
            return Err(Error::StrandMismatch(self.strands, inner.strands));
        }
        let epsilon = self.epsilon * inner.epsilon;
        if let (CurveAction::Geometric(h), CurveAction::Geometric(h2)) = (&self.action, &inner.action) {
            let h2 = if self.epsilon == -1 { h2.mirror() } else { h2.clone() };
            return MappingClassSpec::geometric(h.compose(&h2)?, epsilon);
        }
        let delta = inner.delta.iter().map(|&l| self.delta[l - 1]).collect();
        Ok(MappingClassSpec {
            strands: self.strands,
            action: CurveAction::Composite(Box::new(self.clone()), Box::new(inner.clone())),
            epsilon,
            delta,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }

    pub fn delta(&self, label: usize) -> usize {
        self.delta[label - 1]
    }

    pub fn delta_images(&self) -> &[usize] {
        &self.delta
    }

    pub fn action(&self) -> &CurveAction {
        &self.action
    }

    /// Braid-realizable (every factor geometric).
    pub fn is_geometric(&self) -> bool {
        match &self.action {
            CurveAction::Geometric(_) => true,
            CurveAction::Table(_) => false,
            CurveAction::Composite(a, b) => a.is_geometric() && b.is_geometric(),
        }
    }

    /// `f⋆(c)`.
    pub fn image(&self, c: &Curve) -> Result<Curve> {
        match &self.action {
            CurveAction::Geometric(h) => {
                let c = if self.epsilon == -1 { c.mirror() } else { c.clone() };
                c.apply_braid(h)
            }
            CurveAction::Table(entries) => {
                for (src, dst) in entries {
                    if src.equals_curve(c)? {
                        return Ok(dst.clone());
                    }
                }
                Err(Error::MissingCurveImage(c.to_string()))
            }
            CurveAction::Composite(outer, inner) => outer.image(&inner.image(c)?),
        }
    }

    pub fn to_record(&self) -> MappingClassRecord {
        let action = match &self.action {
            CurveAction::Geometric(h) => format!("braid {h}"),
            CurveAction::Table(entries) => format!(
                "table {}",
                entries.iter().map(|(c, d)| format!("{c} -> {d}")).collect::<Vec<_>>().join("; ")
            ),
            CurveAction::Composite(..) => "composite".into(),
        };
        let table = match &self.action {
            CurveAction::Table(entries) => {
                entries.iter().map(|(c, d)| [CurveRecord::from(c), CurveRecord::from(d)]).collect()
            }
            _ => vec![],
        };
        MappingClassRecord { strands: self.strands, epsilon: self.epsilon, delta: self.delta.clone(), action, table }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MappingClassRecord {
    pub strands: usize,
    pub epsilon: i64,
    pub delta: Vec<usize>,
    pub action: String,
    pub table: Vec<[CurveRecord; 2]>,
}

fn check_epsilon(e: i64) -> Result<()> {
    if e == 1 || e == -1 {
        Ok(())
    } else {
        Err(Error::InvalidBoundaryData(format!("orientation sign must be +1 or -1, got {e}")))
    }
}

fn check_delta(strands: usize, delta: &[usize]) -> Result<()> {
    if delta.len() != strands + 1 {
        return Err(Error::Arity { expected: strands + 1, got: delta.len() });
    }
    let set: BTreeSet<usize> = delta.iter().copied().collect();
    if set.len() != delta.len() || set.iter().any(|&l| l < 1 || l > strands + 1) {
        return Err(Error::InvalidBoundaryData(format!("{delta:?} is not a permutation of 1..={}", strands + 1)));
    }
    Ok(())
}
