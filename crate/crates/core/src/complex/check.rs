//! Property checkers for candidate maps of curve complexes, quantified over ball vertices.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Ball, VertexMap};
use crate::curve::{Ambient, Curve};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub u: usize,
    pub v: usize,
    pub disjoint_before: bool,
    pub disjoint_after: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuperinjectivityReport {
    pub pass: bool,
    pub pairs_checked: usize,
    pub violations: usize,
    /// First violating pair in lexicographic order.
    pub witness: Option<PairWitness>,
    /// Injectivity is checked directly: a separating curve may lie outside the ball.
    pub injective: bool,
    pub injectivity_witness: Option<(usize, usize)>,
}

fn image_disjointness(map: &VertexMap) -> Result<Vec<Vec<bool>>> {
    let im = map.images();
    im.par_iter()
        .enumerate()
        .map(|(i, a)| {
            im.iter()
                .enumerate()
                .map(|(j, b)| if j <= i { Ok(false) } else { a.is_disjoint(b) })
                .collect::<Result<Vec<bool>>>()
        })
        .collect()
}

/// `i(u,v) = 0 ⇔ i(φu, φv) = 0` for every pair of distinct ball vertices.
pub fn check_superinjective(ball: &Ball, map: &VertexMap) -> Result<SuperinjectivityReport> {
    let after = image_disjointness(map)?;
    let n = ball.len();
    let mut witness = None;
    let mut violations = 0;
    let mut injectivity_witness = None;
    for (i, row) in after.iter().enumerate() {
        for (j, &now) in row.iter().enumerate().skip(i + 1) {
            let before = ball.is_disjoint(i, j);
            if before != now {
                violations += 1;
                if witness.is_none() {
                    witness = Some(PairWitness { u: i, v: j, disjoint_before: before, disjoint_after: now });
                }
            }
            if injectivity_witness.is_none() && map.images()[i] == map.images()[j] {
                injectivity_witness = Some((i, j));
            }
        }
    }
    Ok(SuperinjectivityReport {
        pass: violations == 0,
        pairs_checked: n * n.saturating_sub(1) / 2,
        violations,
        witness,
        injective: injectivity_witness.is_none(),
        injectivity_witness,
    })
}

/// Recomputes a superinjectivity witness from scratch.
pub fn verify_pair_witness(ball: &Ball, map: &VertexMap, w: &PairWitness) -> Result<bool> {
    let (u, v) = (&ball.vertices()[w.u], &ball.vertices()[w.v]);
    let before = u.is_disjoint(v)?;
    let after = map.images()[w.u].is_disjoint(&map.images()[w.v])?;
    Ok(before == w.disjoint_before && after == w.disjoint_after && before != after)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LemmaMode {
    Sides,
    Ktype,
    Adjacency,
}

impl std::str::FromStr for LemmaMode {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sides" => Ok(LemmaMode::Sides),
            "ktype" => Ok(LemmaMode::Ktype),
            "adjacency" => Ok(LemmaMode::Adjacency),
            _ => Err(crate::Error::Parse(format!("unknown lemma mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SidesStats {
    /// Triples `(a, b, w)` with `a, b` distinct, disjoint from `w` and on one side of it.
    pub triples: usize,
    /// Of those, how many have an in-ball curve `d` meeting `a` and `b` but missing `w`.
    pub with_ball_witness: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacencyStats {
    pub adjacent_pairs: usize,
    /// Adjacent pairs with an in-ball `(w, x, y)` witness: `a, b` on a thrice-punctured side
    /// of `w`, `x` meets `a` and `w` but not `b` or `y`, `y` meets `b` and `w` but not `a` or `x`.
    pub with_ball_witness: usize,
    /// Pairs whose images are sphere 2-curves but not disk 2-curves; the half-twist
    /// criterion does not apply to them.
    pub undecided: usize,
    /// Radius at which the witness search was exhausted.
    pub search_radius: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LemmaOutcome {
    Pass {
        mode: LemmaMode,
        checked: usize,
        sides: Option<SidesStats>,
        adjacency: Option<AdjacencyStats>,
    },
    Witness {
        mode: LemmaMode,
        vertices: Vec<usize>,
        detail: String,
    },
    /// The map is not superinjective on the ball; the lemma's hypothesis fails.
    PreconditionFailed { report: SuperinjectivityReport },
}

impl LemmaOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, LemmaOutcome::Pass { .. })
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, LemmaOutcome::Witness { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Inside,
    Outside,
}

/// Side of `w` containing `a`, for distinct disjoint curves given by enclosed sets.
fn side(a: &BTreeSet<usize>, w: &BTreeSet<usize>) -> Side {
    if a.len() < w.len() && a.is_subset(w) {
        Side::Inside
    } else {
        Side::Outside
    }
}

/// Runs one lemma checker. Refuses (distinctly) when the map is not superinjective.
pub fn check_lemma(ball: &Ball, map: &VertexMap, mode: LemmaMode) -> Result<LemmaOutcome> {
    let report = check_superinjective(ball, map)?;
    if !report.pass {
        return Ok(LemmaOutcome::PreconditionFailed { report });
    }
    match mode {
        LemmaMode::Ktype => check_ktype(ball, map),
        LemmaMode::Sides => check_sides(ball, map),
        LemmaMode::Adjacency => check_adjacency(ball, map),
    }
}

fn check_ktype(ball: &Ball, map: &VertexMap) -> Result<LemmaOutcome> {
    for (v, (c, img)) in ball.vertices().iter().zip(map.images()).enumerate() {
        let (k0, k1) = (c.topological_type(Ambient::Sphere), img.topological_type(Ambient::Sphere));
        if k0 != k1 {
            return Ok(LemmaOutcome::Witness {
                mode: LemmaMode::Ktype,
                vertices: vec![v],
                detail: format!("vertex {v} is a {k0}-curve but its image {img} is a {k1}-curve"),
            });
        }
    }
    Ok(LemmaOutcome::Pass { mode: LemmaMode::Ktype, checked: ball.len(), sides: None, adjacency: None })
}

/// Per-vertex `(triples, with ball witness, failing pair)`.
type SideTally = (usize, usize, Option<(usize, usize)>);

fn check_sides(ball: &Ball, map: &VertexMap) -> Result<LemmaOutcome> {
    let n = ball.len();
    let enc: Vec<BTreeSet<usize>> = ball.vertices().iter().map(Curve::enclosed).collect();
    let img_enc: Vec<BTreeSet<usize>> = map.images().iter().map(Curve::enclosed).collect();
    let im = map.images();
    let per_w: Vec<SideTally> = (0..n)
        .into_par_iter()
        .map(|w| {
            let near: Vec<usize> = (0..n).filter(|&a| a != w && ball.is_disjoint(a, w)).collect();
            let (mut triples, mut found) = (0, 0);
            for (ia, &a) in near.iter().enumerate() {
                for &b in &near[ia + 1..] {
                    if side(&enc[a], &enc[w]) != side(&enc[b], &enc[w]) {
                        continue;
                    }
                    triples += 1;
                    if (0..n).any(|d| !ball.is_disjoint(d, a) && !ball.is_disjoint(d, b) && ball.is_disjoint(d, w)) {
                        found += 1;
                    }
                    let ok = im[a] != im[w]
                        && im[b] != im[w]
                        && side(&img_enc[a], &img_enc[w]) == side(&img_enc[b], &img_enc[w]);
                    if !ok {
                        return (triples, found, Some((a, b)));
                    }
                }
            }
            (triples, found, None)
        })
        .collect();
    for (w, (_, _, bad)) in per_w.iter().enumerate() {
        if let Some((a, b)) = bad {
            return Ok(LemmaOutcome::Witness {
                mode: LemmaMode::Sides,
                vertices: vec![*a, *b, w],
                detail: format!("vertices {a} and {b} lie on one side of {w}; their images do not"),
            });
        }
    }
    let stats = SidesStats {
        triples: per_w.iter().map(|t| t.0).sum(),
        with_ball_witness: per_w.iter().map(|t| t.1).sum(),
    };
    Ok(LemmaOutcome::Pass { mode: LemmaMode::Sides, checked: stats.triples, sides: Some(stats), adjacency: None })
}

fn has_adjacency_witness(ball: &Ball, enc: &[BTreeSet<usize>], a: usize, b: usize) -> bool {
    let n = ball.len();
    let m = ball.strands() + 1;
    let d = |i: usize, j: usize| ball.is_disjoint(i, j);
    (0..n).any(|w| {
        if w == a || w == b || !d(a, w) || !d(b, w) {
            return false;
        }
        let sa = side(&enc[a], &enc[w]);
        if sa != side(&enc[b], &enc[w]) {
            return false;
        }
        let punctures = match sa {
            Side::Inside => enc[w].len(),
            Side::Outside => m - enc[w].len(),
        };
        if punctures != 3 {
            return false;
        }
        let xs: Vec<usize> = (0..n).filter(|&x| !d(x, a) && !d(x, w) && d(x, b)).collect();
        let ys: Vec<usize> = (0..n).filter(|&y| !d(y, b) && !d(y, w) && d(y, a)).collect();
        xs.iter().any(|&x| ys.iter().any(|&y| d(x, y)))
    })
}

fn check_adjacency(ball: &Ball, map: &VertexMap) -> Result<LemmaOutcome> {
    let n = ball.len();
    let v = ball.vertices();
    let im = map.images();
    let enc: Vec<BTreeSet<usize>> = v.iter().map(Curve::enclosed).collect();
    let mut stats = AdjacencyStats { adjacent_pairs: 0, with_ball_witness: 0, undecided: 0, search_radius: ball.radius() };
    for i in 0..n {
        if !v[i].is_two_curve() {
            continue;
        }
        for j in (i + 1)..n {
            if !v[j].is_two_curve() || !v[i].is_adjacent(&v[j])? {
                continue;
            }
            stats.adjacent_pairs += 1;
            if has_adjacency_witness(ball, &enc, i, j) {
                stats.with_ball_witness += 1;
            }
            let sphere2 = |c: &Curve| c.topological_type(Ambient::Sphere) == 2;
            if !sphere2(&im[i]) || !sphere2(&im[j]) {
                return Ok(LemmaOutcome::Witness {
                    mode: LemmaMode::Adjacency,
                    vertices: vec![i, j],
                    detail: format!("adjacent 2-curves {i}, {j} map to a non-2-curve"),
                });
            }
            if !im[i].is_two_curve() || !im[j].is_two_curve() {
                stats.undecided += 1;
                continue;
            }
            if !im[i].is_adjacent(&im[j])? {
                return Ok(LemmaOutcome::Witness {
                    mode: LemmaMode::Adjacency,
                    vertices: vec![i, j],
                    detail: format!("adjacent 2-curves {i}, {j} have non-adjacent images"),
                });
            }
        }
    }
    Ok(LemmaOutcome::Pass { mode: LemmaMode::Adjacency, checked: stats.adjacent_pairs, sides: None, adjacency: Some(stats) })
}

/// Searches for vertices `u, v, w` with `u` disjoint from `v` but meeting `w`, and returns the
/// identity map with the images of `v` and `w` exchanged.
pub fn search_swap_control(ball: &Ball) -> Option<(VertexMap, [usize; 3])> {
    let n = ball.len();
    for u in 0..n {
        for v in 0..n {
            if v == u || !ball.is_disjoint(u, v) {
                continue;
            }
            for w in 0..n {
                if w == u || w == v || ball.is_disjoint(u, w) {
                    continue;
                }
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(v, w);
                let map = VertexMap::from_permutation(ball, &perm).ok()?;
                return Some((map, [u, v, w]));
            }
        }
    }
    None
}

/// Searches for a sphere 2-curve vertex `v` and a sphere 3-curve `c` among `candidates`, outside
/// the ball, with the same disjointness pattern towards every other ball vertex. Reassigning
/// `v ↦ c` then gives a map that is superinjective on the ball but breaks curve types.
pub fn search_type_breaking_map(ball: &Ball, candidates: &[Curve]) -> Result<Option<(VertexMap, usize, Curve)>> {
    let n = ball.len();
    let cands: Vec<&Curve> = candidates
        .iter()
        .filter(|c| c.topological_type(Ambient::Sphere) == 3 && ball.position(c).is_none())
        .collect();
    for v in 0..n {
        if ball.vertices()[v].topological_type(Ambient::Sphere) != 2 {
            continue;
        }
        for c in &cands {
            let mut ok = true;
            for u in 0..n {
                if u != v && c.is_disjoint(&ball.vertices()[u])? != ball.is_disjoint(u, v) {
                    ok = false;
                    break;
                }
            }
            if ok {
                let mut images = ball.vertices().to_vec();
                images[v] = (*c).clone();
                return Ok(Some((VertexMap::new(ball, images)?, v, (*c).clone())));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::complex::{induced_map, standard_ball};

    #[test]
    fn induced_maps_pass() {
        let ball = standard_ball(4, 1).unwrap();
        for g in ["s1", "s1 s2", "s3^-1 s2"] {
            let m = induced_map(&BraidWord::parse(4, g).unwrap(), &ball).unwrap();
            let r = check_superinjective(&ball, &m).unwrap();
            assert!(r.pass && r.injective, "{g}");
            for mode in [LemmaMode::Sides, LemmaMode::Ktype, LemmaMode::Adjacency] {
                assert!(check_lemma(&ball, &m, mode).unwrap().is_pass(), "{g} {mode:?}");
            }
        }
    }

    #[test]
    fn constant_map_fails() {
        let ball = standard_ball(4, 1).unwrap();
        let m = VertexMap::new(&ball, vec![ball.vertices()[0].clone(); ball.len()]).unwrap();
        let r = check_superinjective(&ball, &m).unwrap();
        assert!(!r.pass && !r.injective);
        assert!(verify_pair_witness(&ball, &m, r.witness.as_ref().unwrap()).unwrap());
        assert!(matches!(check_lemma(&ball, &m, LemmaMode::Ktype).unwrap(), LemmaOutcome::PreconditionFailed { .. }));
    }

    #[test]
    fn swap_control_is_rejected() {
        let ball = standard_ball(4, 1).unwrap();
        let (m, _) = search_swap_control(&ball).expect("ball has both kinds of pairs");
        let r = check_superinjective(&ball, &m).unwrap();
        assert!(!r.pass);
        assert!(verify_pair_witness(&ball, &m, r.witness.as_ref().unwrap()).unwrap());
    }
}
