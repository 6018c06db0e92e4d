//! Oracles and random generators shared by the integration tests and the acceptance suite.
#![allow(dead_code, unused_imports)]

use std::collections::BTreeSet;

use braidlab::braid::{artin_equals, center_generator, pure_generator_product, BraidWord};
use braidlab::complex::{
    build_ball, check_lemma, check_superinjective, farey_ball, farey_extend_triangle, induced_map, standard_ball,
    standard_generators, verify_pair_witness, Ball, LemmaMode, VertexMap, DEFAULT_VERTEX_CAP,
};
use braidlab::curve::{farey_slope_d3, Curve, FareySlope};
use braidlab::hom::graph::{coset_enumeration_index, index_formula};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub use braidlab::braid::oracle::{perturb, random_letters};

pub struct DualOracleStats {
    pub pairs: usize,
    pub equal_pairs: usize,
    pub disagreements: usize,
}

pub fn dual_oracle(pairs: usize, max_len: usize, seed: u64) -> DualOracleStats {
    let r = braidlab::braid::oracle::dual_oracle(pairs, max_len, seed).unwrap();
    DualOracleStats { pairs: r.pairs, equal_pairs: r.equal_pairs, disagreements: r.disagreements }
}

#[derive(Debug, Default)]
pub struct Fact1Stats {
    pub vertices: usize,
    pub pairs: usize,
    pub failures: Vec<String>,
}

/// On a ball: `T_{g(c)} = g T_c g⁻¹` for every vertex and generator, commutation of twists
/// agrees between both equality oracles and implies nested-or-disjoint puncture sets, and
/// distinct vertices have distinct twists.
pub fn fact1(strands: usize, radius: usize) -> Fact1Stats {
    let ball = standard_ball(strands, radius).unwrap();
    let gens = standard_generators(strands).unwrap();
    let mut st = Fact1Stats { vertices: ball.len(), ..Default::default() };
    for (i, c) in ball.vertices().iter().enumerate() {
        for g in &gens {
            let moved = Curve::from_parts(strands, c.base(), g.compose(c.conjugator()).unwrap()).unwrap();
            let conj = g.conjugate(c.full_twist()).unwrap();
            if !(moved.full_twist().equals(&conj).unwrap() && artin_equals(moved.full_twist(), &conj).unwrap()) {
                st.failures.push(format!("conjugation identity at vertex {i}, generator {g}"));
            }
        }
    }
    for i in 0..ball.len() {
        for j in (i + 1)..ball.len() {
            st.pairs += 1;
            let (a, b) = (&ball.vertices()[i], &ball.vertices()[j]);
            let (ta, tb) = (a.full_twist(), b.full_twist());
            let commute_artin = artin_equals(&ta.compose(tb).unwrap(), &tb.compose(ta).unwrap()).unwrap();
            if commute_artin != ball.is_disjoint(i, j) {
                st.failures.push(format!("commutation oracles disagree on {i},{j}"));
            }
            if ball.is_disjoint(i, j) {
                let (ea, eb) = (a.enclosed(), b.enclosed());
                if !(ea.is_subset(&eb) || eb.is_subset(&ea) || ea.is_disjoint(&eb)) {
                    st.failures.push(format!("disjoint curves {i},{j} with crossing puncture sets"));
                }
            }
            if artin_equals(ta, tb).unwrap() {
                st.failures.push(format!("distinct curves {i},{j} with equal twists"));
            }
        }
    }
    st
}

/// Every 2-curve of `D_3` with conjugator of length at most `max_len`, deduplicated.
pub fn d3_curves(max_len: usize) -> Vec<Curve> {
    let mut words: Vec<Vec<i64>> = vec![vec![]];
    let mut frontier = words.clone();
    for _ in 0..max_len {
        let mut next = vec![];
        for w in &frontier {
            for x in [1i64, -1, 2, -2] {
                if w.last() == Some(&-x) {
                    continue;
                }
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out: Vec<Curve> = vec![];
    for base in [(1, 2), (2, 3)] {
        for w in &words {
            let c = Curve::from_parts(3, base, BraidWord::from_signed(3, w).unwrap()).unwrap();
            if !out.iter().any(|d| d.key() == c.key()) {
                out.push(c);
            }
        }
    }
    out
}

pub struct FareyStats {
    pub curves: usize,
    pub pairs: usize,
    pub mismatches: usize,
}

/// Adjacency of 2-curves in `D_3` against `|ps' − qr| = 1` on their slopes; distinct curves
/// must also have distinct slopes.
pub fn d3_farey(max_len: usize) -> FareyStats {
    let curves = d3_curves(max_len);
    let slopes: Vec<FareySlope> = curves.iter().map(|c| farey_slope_d3(c).unwrap()).collect();
    let mut st = FareyStats { curves: curves.len(), pairs: 0, mismatches: 0 };
    let distinct: BTreeSet<FareySlope> = slopes.iter().copied().collect();
    st.mismatches += curves.len() - distinct.len();
    for i in 0..curves.len() {
        for j in (i + 1)..curves.len() {
            st.pairs += 1;
            let adj = curves[i].is_adjacent(&curves[j]).unwrap();
            if adj != (slopes[i].determinant(slopes[j]).abs() == 1) {
                st.mismatches += 1;
            }
        }
    }
    st
}

/// `∏ A_{i,j} = z` in `B_{n+1}`.
pub fn center_factorization(n: usize) -> bool {
    let s = n + 1;
    let p = pure_generator_product(s).unwrap();
    let z = center_generator(s).unwrap();
    p.equals(&z).unwrap() && artin_equals(&p, &z).unwrap()
}

pub fn all_lemmas_pass(ball: &Ball, map: &VertexMap) -> bool {
    check_superinjective(ball, map).unwrap().pass
        && [LemmaMode::Sides, LemmaMode::Ktype, LemmaMode::Adjacency]
            .into_iter()
            .all(|m| check_lemma(ball, map, m).unwrap().is_pass())
}

/// Induced maps of random braids on the radius-2 balls of `D_4` and `D_5`.
pub fn positive_controls(maps_per_ball: usize, seed: u64) -> (usize, usize) {
    let mut rng = rng(seed);
    let mut passed = 0;
    let mut total = 0;
    for s in [4, 5] {
        let ball = standard_ball(s, 2).unwrap();
        for _ in 0..maps_per_ball {
            let len = rng.gen_range(0..6);
            let g = BraidWord::from_signed(s, &random_letters(&mut rng, s, len)).unwrap();
            let map = induced_map(&g, &ball).unwrap();
            total += 1;
            passed += all_lemmas_pass(&ball, &map) as usize;
        }
    }
    (passed, total)
}

pub struct NegativeStats {
    pub ball_size: usize,
    pub trials: usize,
    pub rejected: usize,
    pub verified_witnesses: usize,
}

/// Random vertex permutations of a radius-2 ball: rejection means superinjectivity fails with
/// a pair witness that re-verifies from scratch.
pub fn negative_controls(trials: usize, seed: u64) -> NegativeStats {
    let ball = standard_ball(4, 2).unwrap();
    let mut rng = rng(seed);
    let mut st = NegativeStats { ball_size: ball.len(), trials, rejected: 0, verified_witnesses: 0 };
    for _ in 0..trials {
        let mut perm: Vec<usize> = (0..ball.len()).collect();
        perm.shuffle(&mut rng);
        let map = VertexMap::from_permutation(&ball, &perm).unwrap();
        let rep = check_superinjective(&ball, &map).unwrap();
        if let Some(w) = &rep.witness {
            st.rejected += 1;
            st.verified_witnesses += verify_pair_witness(&ball, &map, w).unwrap() as usize;
        }
    }
    st
}

/// A uniformly chosen triangle of the Farey ball of depth `max_depth`.
pub fn random_triangle(rng: &mut impl Rng, max_depth: usize) -> [FareySlope; 3] {
    let ball = farey_ball(max_depth);
    *ball.triangles.choose(rng).unwrap()
}

pub struct FareyExtensionStats {
    pub trials: usize,
    pub good: usize,
}

pub fn farey_extensions(trials: usize, seed: u64) -> FareyExtensionStats {
    let mut rng = rng(seed);
    let mut good = 0;
    for _ in 0..trials {
        let mut t = random_triangle(&mut rng, 5);
        t.shuffle(&mut rng);
        let e = farey_extend_triangle(t, 3).unwrap();
        good += (e.unique && e.injective && e.surjective_at_matched_depth) as usize;
    }
    FareyExtensionStats { trials, good }
}

/// Every `(m, k)` with `m ∈ ms` whose formula index differs from coset enumeration.
pub fn index_table_mismatches(ms: &[usize]) -> Vec<(usize, usize, u128, usize)> {
    let mut bad = vec![];
    for &m in ms {
        for k in 0..=m {
            let (f, e) = (index_formula(m, k), coset_enumeration_index(m, k));
            if f != e as u128 {
                bad.push((m, k, f, e));
            }
        }
    }
    bad
}

pub fn ball_with_cap(strands: usize, radius: usize) -> Ball {
    let seeds = braidlab::complex::standard_seeds(strands).unwrap();
    build_ball(strands, &seeds, &standard_generators(strands).unwrap(), radius, DEFAULT_VERTEX_CAP).unwrap()
}
