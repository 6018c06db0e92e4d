//! Random word pairs for cross-checking the two equality deciders.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{artin_equals, BraidWord};
use crate::error::Result;

pub fn random_letters(rng: &mut impl Rng, strands: usize, len: usize) -> Vec<i64> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands) as i64;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// Rewrites `w` by free insertions, far commutations, braid moves and relator insertions,
/// so the result is equal to `w` in the group by construction.
pub fn perturb(rng: &mut impl Rng, strands: usize, w: &[i64], moves: usize) -> Vec<i64> {
    let mut w = w.to_vec();
    for _ in 0..moves {
        match rng.gen_range(0..4) {
            0 => {
                let x = rng.gen_range(1..strands) as i64 * if rng.gen_bool(0.5) { 1 } else { -1 };
                let p = rng.gen_range(0..=w.len());
                w.splice(p..p, [x, -x]);
            }
            1 => {
                let cands: Vec<usize> =
                    (0..w.len().saturating_sub(1)).filter(|&p| (w[p].abs() - w[p + 1].abs()).abs() >= 2).collect();
                if let Some(&p) = cands.choose(rng) {
                    w.swap(p, p + 1);
                }
            }
            2 => {
                let cands: Vec<usize> = (0..w.len().saturating_sub(2))
                    .filter(|&p| {
                        w[p] == w[p + 2] && (w[p].abs() - w[p + 1].abs()).abs() == 1 && w[p].signum() == w[p + 1].signum()
                    })
                    .collect();
                if let Some(&p) = cands.choose(rng) {
                    let (a, b) = (w[p], w[p + 1]);
                    w[p] = b;
                    w[p + 1] = a;
                    w[p + 2] = b;
                }
            }
            _ => {
                if strands >= 3 {
                    let a = rng.gen_range(1..strands - 1) as i64;
                    let b = a + 1;
                    let p = rng.gen_range(0..=w.len());
                    w.splice(p..p, [a, b, a, -b, -a, -b]);
                }
            }
        }
    }
    w
}

#[derive(Debug, Clone, Serialize)]
pub struct DualOracleReport {
    pub seed: u64,
    pub pairs: usize,
    pub max_len: usize,
    pub equal_pairs: usize,
    pub disagreements: usize,
    /// First pair on which the deciders disagree.
    pub witness: Option<(String, String)>,
}

/// Garside equality against Artin-action equality on random pairs over 2 to 7 strands, about
/// a third of them equal by construction. Both words have length at most `max_len`.
pub fn dual_oracle(pairs: usize, max_len: usize, seed: u64) -> Result<DualOracleReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = DualOracleReport { seed, pairs: 0, max_len, equal_pairs: 0, disagreements: 0, witness: None };
    while rep.pairs < pairs {
        let s = rng.gen_range(2..=7);
        let len = rng.gen_range(0..=max_len / 2);
        let a = random_letters(&mut rng, s, len);
        let b = match rng.gen_range(0..3) {
            0 => {
                let l = rng.gen_range(0..=max_len);
                random_letters(&mut rng, s, l)
            }
            1 => {
                let mut b = perturb(&mut rng, s, &a, 3);
                if let Some(x) = b.first_mut() {
                    *x = -*x;
                }
                b
            }
            _ => perturb(&mut rng, s, &a, 4),
        };
        if b.len() > max_len {
            continue;
        }
        let (wa, wb) = (BraidWord::from_signed(s, &a)?, BraidWord::from_signed(s, &b)?);
        let g = wa.equals(&wb)?;
        let f = artin_equals(&wa, &wb)?;
        rep.pairs += 1;
        rep.equal_pairs += f as usize;
        if g != f {
            rep.disagreements += 1;
            rep.witness.get_or_insert_with(|| (format!("{s}:{wa}"), format!("{s}:{wb}")));
        }
    }
    Ok(rep)
}
