//! Left-greedy Garside normal form for the classical Garside structure of the braid group:
//! `Δ` is the half twist and simple elements are permutation braids, each identified with
//! its underlying permutation (strand starting at position `p` ends at `π(p)`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::perm::Permutation;
use crate::braid::word::BraidWord;

/// `Δ^infimum · A_1 ⋯ A_k` with every `A_j` a proper simple factor and every pair
/// `(A_j, A_{j+1})` left-weighted. Two words are equal in the group iff their forms coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

fn delta(n: usize) -> Permutation {
    Permutation::from_images((0..n).rev().collect()).expect("reversal is a permutation")
}

fn is_delta(p: &Permutation) -> bool {
    let n = p.size();
    p.images().iter().enumerate().all(|(i, &j)| j == n - 1 - i)
}

/// Strands starting at `i`, `i+1` cross, i.e. the factor can begin with `σ_{i+1}`.
#[inline]
fn starts_with(p: &Permutation, i: usize) -> bool {
    p.apply(i) > p.apply(i + 1)
}

/// Strands ending at `i`, `i+1` have crossed, i.e. the factor can end with `σ_{i+1}`.
#[inline]
fn ends_with(p: &Permutation, i: usize) -> bool {
    let n = p.size();
    let mut a = n;
    let mut b = n;
    for (q, &v) in p.images().iter().enumerate() {
        if v == i {
            a = q;
        } else if v == i + 1 {
            b = q;
        }
    }
    a > b
}

/// Conjugation by `Δ`: `σ_i ↦ σ_{s−i}`.
fn tau(p: &Permutation) -> Permutation {
    let n = p.size();
    Permutation::from_images((0..n).map(|q| n - 1 - p.apply(n - 1 - q)).collect())
        .expect("conjugate of a permutation")
}

/// Moves generators from the front of `b` to the back of `a` until `S(b) ⊆ F(a)`.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.size();
    let mut changed = false;
    loop {
        let Some(i) = (0..n - 1).find(|&i| starts_with(b, i) && !ends_with(a, i)) else {
            return changed;
        };
        a.swap_values(i);
        b.swap_positions(i);
        changed = true;
    }
}

pub(crate) fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    (0..a.size() - 1).all(|i| !starts_with(b, i) || ends_with(a, i))
}

impl GarsideNormalForm {
    pub fn identity(strands: usize) -> Self {
        GarsideNormalForm { strands, infimum: 0, factors: vec![] }
    }

    pub fn of_word(word: &BraidWord) -> Self {
        let n = word.strands();
        let mut nf = GarsideNormalForm::identity(n);
        let delta = delta(n);
        for l in word.letters() {
            let i = l.index - 1;
            if l.positive {
                nf.push_simple(Permutation::transposition(n, i, i + 1));
            } else {
                // σ_i⁻¹ = (σ_i⁻¹Δ)Δ⁻¹, and AΔ⁻¹ = Δ⁻¹τ(A).
                let x = Permutation::transposition(n, i, i + 1).then(&delta);
                nf.push_simple(x);
                for f in nf.factors.iter_mut() {
                    *f = tau(f);
                }
                nf.infimum -= 1;
            }
        }
        nf
    }

    /// Right-multiplies by a simple element and restores left-weightedness in one right-to-left sweep.
    fn push_simple(&mut self, x: Permutation) {
        self.factors.push(x);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        while self.factors.first().is_some_and(is_delta) {
            self.factors.remove(0);
            self.infimum += 1;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Checks the structural invariants: no trivial or `Δ` factor, consecutive pairs left-weighted.
    pub fn is_well_formed(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity() && !is_delta(f))
            && self.factors.windows(2).all(|w| is_left_weighted(&w[0], &w[1]))
    }

    /// A positive-word spelling of each factor, with `Δ` powers expanded; re-normalizing it
    /// returns `self`.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let d = crate::braid::word::half_twist_delta(n).expect("strands >= 2");
        let mut out = d.pow(self.infimum);
        for f in &self.factors {
            out = out.mul(&permutation_braid(f));
        }
        out
    }
}

/// A positive word for the permutation braid of `p` (bubble sort of final positions).
pub(crate) fn permutation_braid(p: &Permutation) -> BraidWord {
    use crate::braid::word::Letter;
    let n = p.size();
    // current[pos] = final position of the strand currently at `pos`
    let mut current: Vec<usize> = p.images().to_vec();
    let mut letters = vec![];
    while let Some(i) = (0..n - 1).find(|&i| current[i] > current[i + 1]) {
        current.swap(i, i + 1);
        letters.push(Letter::pos(i + 1));
    }
    BraidWord::new(n, letters).expect("indices in range")
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.infimum)?;
        for p in &self.factors {
            write!(f, " · {}", p.cycle_string())?;
        }
        Ok(())
    }
}
