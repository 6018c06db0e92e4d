use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `{0, .., n-1}`, stored as the image vector.
///
/// Composition follows the braid convention used throughout the crate:
/// `a.then(&b)` means "apply `a`, then `b`".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from its image vector, returning `None` if it is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), other.size());
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Swaps the values `i` and `i + 1` in the image (post-composition with a transposition).
    pub(crate) fn swap_values(&mut self, i: usize) {
        for v in self.images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }

    /// Swaps the entries at positions `i` and `i + 1` (pre-composition with a transposition).
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// Disjoint-cycle notation with 1-based points, fixed points omitted; `()` for the identity.
    pub fn cycle_string(&self) -> String {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![];
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push((i + 1).to_string());
                i = self.images[i];
            }
            out.push('(');
            out.push_str(&cycle.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn then_is_left_to_right() {
        let a = Permutation::transposition(3, 0, 1);
        let b = Permutation::transposition(3, 1, 2);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(a.then(&b).inverse(), b.then(&a));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_none());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_none());
        assert!(Permutation::from_images(vec![2, 0, 1]).is_some());
    }

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_images(vec![2, 1, 0]).unwrap();
        assert_eq!(p.cycle_string(), "(1 3)");
        assert_eq!(Permutation::identity(4).cycle_string(), "()");
    }
}
