//! Finite induced subcomplexes of the curve complex of the punctured disk `D_s`, which is the
//! curve complex of the sphere `S_{s+1}` (the disk boundary is the extra puncture).
//!
//! Everything here is evidence on finite balls, not a statement about the infinite complex:
//! a checker that passes only says no counterexample exists among the ball's vertices.

mod check;
mod clique;
mod farey;

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::curve::{Ambient, Curve, CurveRecord};
use crate::error::{Error, Result};
use crate::report::SCHEMA_VERSION;

pub use check::{
    check_lemma, check_superinjective, search_swap_control, search_type_breaking_map, verify_pair_witness,
    AdjacencyStats, LemmaMode, LemmaOutcome, PairWitness, SidesStats, SuperinjectivityReport,
};
pub use clique::max_disjoint_family;
pub use farey::{farey_ball, farey_extend_triangle, triangle_depth, FareyBall, FareyExtension, Triangle};

pub const DEFAULT_VERTEX_CAP: usize = 5000;

/// How a ball was generated; enough to rebuild it exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallMeta {
    pub seeds: Vec<CurveRecord>,
    pub generators: Vec<String>,
    pub radius: usize,
    pub vertex_cap: usize,
    /// Number of vertices first reached at each BFS layer.
    pub layer_sizes: Vec<usize>,
    /// Set when the vertex cap stopped the search; the ball is then a partial result.
    pub truncated: bool,
}

#[derive(Debug, Clone)]
pub struct Ball {
    strands: usize,
    vertices: Vec<Curve>,
    /// `disjoint[i][j]`: vertices `i` and `j` have disjoint representatives (true on the diagonal).
    disjoint: Vec<Vec<bool>>,
    meta: BallMeta,
}

/// Every letter `σ_i^{±1}` of `B_s`, in the order `σ1, σ1⁻¹, σ2, …`.
pub fn standard_generators(strands: usize) -> Result<Vec<BraidWord>> {
    let mut out = vec![];
    for i in 1..strands {
        out.push(BraidWord::generator(strands, i, true)?);
        out.push(BraidWord::generator(strands, i, false)?);
    }
    Ok(out)
}

/// One round curve of every size, `c[1..k]` for `2 ≤ k ≤ s−1`.
pub fn standard_seeds(strands: usize) -> Result<Vec<Curve>> {
    (2..strands).map(|k| Curve::standard(strands, 1, k)).collect()
}

fn disjointness_matrix(curves: &[Curve]) -> Result<Vec<Vec<bool>>> {
    curves
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            curves
                .iter()
                .enumerate()
                .map(|(j, b)| if i == j { Ok(true) } else { a.is_disjoint(b) })
                .collect::<Result<Vec<bool>>>()
        })
        .collect()
}

/// BFS orbit of `seeds` under `generators` up to `radius`, deduplicated by curve key.
/// Returns the (possibly truncated) ball; `meta.truncated` records whether `vertex_cap` hit.
pub fn build_ball_partial(
    strands: usize,
    seeds: &[Curve],
    generators: &[BraidWord],
    radius: usize,
    vertex_cap: usize,
) -> Result<Ball> {
    if seeds.is_empty() {
        return Err(Error::Unsupported("a ball needs at least one seed".into()));
    }
    for c in seeds {
        if c.strands() != strands {
            return Err(Error::StrandMismatch(c.strands(), strands));
        }
    }
    for g in generators {
        if g.strands() != strands {
            return Err(Error::StrandMismatch(g.strands(), strands));
        }
    }
    let mut vertices: Vec<Curve> = vec![];
    // The cached normal form inside `Curve` never changes its hash.
    #[allow(clippy::mutable_key_type)]
    let mut index: HashMap<Curve, usize> = HashMap::new();
    let mut truncated = false;
    let mut layer_sizes = vec![];
    let mut frontier = vec![];
    for c in seeds {
        if !index.contains_key(c) {
            if vertices.len() >= vertex_cap {
                truncated = true;
                break;
            }
            index.insert(c.clone(), vertices.len());
            frontier.push(vertices.len());
            vertices.push(c.clone());
        }
    }
    layer_sizes.push(frontier.len());
    for _ in 0..radius {
        if truncated || frontier.is_empty() {
            break;
        }
        // Images are computed in parallel; dedup runs in frontier × generator order.
        let images: Vec<Curve> = frontier
            .par_iter()
            .flat_map_iter(|&v| generators.iter().map(move |g| (v, g)))
            .map(|(v, g)| vertices[v].apply_braid(g))
            .collect::<Result<_>>()?;
        let mut next = vec![];
        for c in images {
            if index.contains_key(&c) {
                continue;
            }
            if vertices.len() >= vertex_cap {
                truncated = true;
                break;
            }
            index.insert(c.clone(), vertices.len());
            next.push(vertices.len());
            vertices.push(c);
        }
        layer_sizes.push(next.len());
        frontier = next;
    }
    let disjoint = disjointness_matrix(&vertices)?;
    let meta = BallMeta {
        seeds: seeds.iter().map(CurveRecord::from).collect(),
        generators: generators.iter().map(|g| g.to_string()).collect(),
        radius,
        vertex_cap,
        layer_sizes,
        truncated,
    };
    Ok(Ball { strands, vertices, disjoint, meta })
}

/// As [`build_ball_partial`], but exceeding the vertex cap is an error.
pub fn build_ball(
    strands: usize,
    seeds: &[Curve],
    generators: &[BraidWord],
    radius: usize,
    vertex_cap: usize,
) -> Result<Ball> {
    let ball = build_ball_partial(strands, seeds, generators, radius, vertex_cap)?;
    if ball.meta.truncated {
        return Err(Error::VertexCapExceeded { cap: vertex_cap });
    }
    Ok(ball)
}

/// The ball generated from [`standard_seeds`] by [`standard_generators`].
pub fn standard_ball(strands: usize, radius: usize) -> Result<Ball> {
    build_ball(strands, &standard_seeds(strands)?, &standard_generators(strands)?, radius, DEFAULT_VERTEX_CAP)
}

impl Ball {
    /// A ball on an explicit vertex list (no BFS metadata beyond the seeds).
    pub fn from_vertices(strands: usize, vertices: Vec<Curve>) -> Result<Ball> {
        #[allow(clippy::mutable_key_type)]
        let mut seen = HashMap::new();
        for (i, c) in vertices.iter().enumerate() {
            if c.strands() != strands {
                return Err(Error::StrandMismatch(c.strands(), strands));
            }
            if seen.insert(c.clone(), i).is_some() {
                return Err(Error::InvalidCurve(format!("duplicate vertex {c}")));
            }
        }
        let disjoint = disjointness_matrix(&vertices)?;
        let meta = BallMeta {
            seeds: vertices.iter().map(CurveRecord::from).collect(),
            generators: vec![],
            radius: 0,
            vertex_cap: vertices.len(),
            layer_sizes: vec![vertices.len()],
            truncated: false,
        };
        Ok(Ball { strands, vertices, disjoint, meta })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn vertices(&self) -> &[Curve] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn meta(&self) -> &BallMeta {
        &self.meta
    }

    pub fn radius(&self) -> usize {
        self.meta.radius
    }

    pub fn is_disjoint(&self, i: usize, j: usize) -> bool {
        self.disjoint[i][j]
    }

    pub fn position(&self, c: &Curve) -> Option<usize> {
        self.vertices.iter().position(|v| v == c)
    }

    /// Edges `(i, j)` with `i < j`: distinct disjoint vertices.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).filter(|&(i, j)| self.disjoint[i][j]).collect()
    }

    pub fn to_record(&self) -> BallRecord {
        BallRecord {
            schema_version: SCHEMA_VERSION,
            strands: self.strands,
            vertices: self
                .vertices
                .iter()
                .map(|c| VertexRecord {
                    curve: CurveRecord::from(c),
                    key: c.key().to_string(),
                    disk_type: c.topological_type(Ambient::Disk),
                    sphere_type: c.topological_type(Ambient::Sphere),
                })
                .collect(),
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
            meta: self.meta.clone(),
        }
    }

    /// Rebuilds a ball from its record, recomputing edges and rejecting a stale edge list.
    pub fn from_record(r: &BallRecord) -> Result<Ball> {
        let vertices: Vec<Curve> = r.vertices.iter().map(|v| Curve::try_from(&v.curve)).collect::<Result<_>>()?;
        let mut ball = Ball::from_vertices(r.strands, vertices)?;
        let edges: Vec<[usize; 2]> = ball.edges().into_iter().map(|(i, j)| [i, j]).collect();
        if edges != r.edges {
            return Err(Error::InvalidCurve("edge list does not match recomputed disjointness".into()));
        }
        ball.meta = r.meta.clone();
        Ok(ball)
    }

    /// Graphviz export; vertices are labelled by index, type and curve.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph curve_ball {{");
        let _ = writeln!(s, "  // D_{} = S_{}, radius {}, {} vertices", self.strands, self.strands + 1, self.radius(), self.len());
        for (i, c) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                s,
                "  v{i} [label=\"{i}: {}\\nk={}\"];",
                c.to_string().replace('"', "'"),
                c.topological_type(Ambient::Sphere)
            );
        }
        for (i, j) in self.edges() {
            let _ = writeln!(s, "  v{i} -- v{j};");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub curve: CurveRecord,
    pub key: String,
    pub disk_type: usize,
    pub sphere_type: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallRecord {
    pub schema_version: u32,
    pub strands: usize,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[usize; 2]>,
    pub meta: BallMeta,
}

/// A candidate simplicial map: one image curve per ball vertex, by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    images: Vec<Curve>,
}

impl VertexMap {
    pub fn new(ball: &Ball, images: Vec<Curve>) -> Result<VertexMap> {
        if images.len() != ball.len() {
            return Err(Error::MapNotTotal(images.len().min(ball.len())));
        }
        if let Some(c) = images.iter().find(|c| c.strands() != ball.strands()) {
            return Err(Error::StrandMismatch(c.strands(), ball.strands()));
        }
        Ok(VertexMap { images })
    }

    pub fn images(&self) -> &[Curve] {
        &self.images
    }

    pub fn identity(ball: &Ball) -> VertexMap {
        VertexMap { images: ball.vertices.clone() }
    }

    /// The map `v ↦ vertex[perm[v]]`.
    pub fn from_permutation(ball: &Ball, perm: &[usize]) -> Result<VertexMap> {
        if perm.len() != ball.len() {
            return Err(Error::MapNotTotal(perm.len().min(ball.len())));
        }
        let images = perm
            .iter()
            .map(|&p| ball.vertices.get(p).cloned().ok_or_else(|| Error::IndexOutOfRange(format!("vertex {p}"))))
            .collect::<Result<_>>()?;
        Ok(VertexMap { images })
    }

    pub fn to_record(&self) -> MapRecord {
        MapRecord {
            schema_version: SCHEMA_VERSION,
            strands: self.images.first().map(|c| c.strands()).unwrap_or(0),
            images: self.images.iter().enumerate().map(|(v, c)| MapEntry { vertex: v, image: CurveRecord::from(c) }).collect(),
        }
    }

    /// Reads a map record; every ball vertex must have exactly one image.
    pub fn from_record(ball: &Ball, r: &MapRecord) -> Result<VertexMap> {
        let mut images: Vec<Option<Curve>> = vec![None; ball.len()];
        for e in &r.images {
            let slot = images.get_mut(e.vertex).ok_or_else(|| Error::IndexOutOfRange(format!("vertex {}", e.vertex)))?;
            if slot.is_some() {
                return Err(Error::InvalidCurve(format!("vertex {} has two images", e.vertex)));
            }
            *slot = Some(Curve::try_from(&e.image)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(Error::MapNotTotal(v)))
            .collect::<Result<Vec<_>>>()?;
        VertexMap::new(ball, images)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEntry {
    pub vertex: usize,
    pub image: CurveRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub schema_version: u32,
    pub strands: usize,
    pub images: Vec<MapEntry>,
}

/// The map induced by the homeomorphism `g`: `v ↦ g(v)`.
pub fn induced_map(g: &BraidWord, ball: &Ball) -> Result<VertexMap> {
    if g.strands() != ball.strands() {
        return Err(Error::StrandMismatch(g.strands(), ball.strands()));
    }
    let images = ball.vertices.par_iter().map(|c| c.apply_braid(g)).collect::<Result<_>>()?;
    Ok(VertexMap { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::center_generator;

    #[test]
    fn radius_zero_is_the_seed() {
        let b = build_ball(4, &[Curve::standard(4, 1, 2).unwrap()], &standard_generators(4).unwrap(), 0, 100).unwrap();
        assert_eq!(b.len(), 1);
        assert!(b.edges().is_empty());
    }

    #[test]
    fn radius_one_regression() {
        // σ1^{±1} fix c[1..2]; σ2^{±1} give two new curves; σ3^{±1} fix it.
        let b = build_ball(4, &[Curve::standard(4, 1, 2).unwrap()], &standard_generators(4).unwrap(), 1, 100).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.meta().layer_sizes, vec![1, 2]);
        assert_eq!(b.edges().len(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let r = build_ball(4, &[Curve::standard(4, 1, 2).unwrap()], &standard_generators(4).unwrap(), 3, 5);
        assert_eq!(r.unwrap_err(), Error::VertexCapExceeded { cap: 5 });
        let p = build_ball_partial(4, &[Curve::standard(4, 1, 2).unwrap()], &standard_generators(4).unwrap(), 3, 5).unwrap();
        assert!(p.meta().truncated);
        assert_eq!(p.len(), 5);
    }

    #[test]
    fn deterministic_and_round_trips() {
        let a = standard_ball(4, 1).unwrap();
        let b = standard_ball(4, 1).unwrap();
        assert_eq!(a.to_record(), b.to_record());
        let back = Ball::from_record(&a.to_record()).unwrap();
        assert_eq!(back.to_record(), a.to_record());
        let m = induced_map(&BraidWord::parse(4, "s1 s2").unwrap(), &a).unwrap();
        assert_eq!(VertexMap::from_record(&a, &m.to_record()).unwrap(), m);
        assert!(a.to_dot().starts_with("graph curve_ball {"));
    }

    #[test]
    fn center_and_identity_fix_vertices() {
        let ball = standard_ball(4, 1).unwrap();
        let z = center_generator(4).unwrap();
        assert_eq!(induced_map(&z, &ball).unwrap(), VertexMap::identity(&ball));
        let e = BraidWord::identity(4).unwrap();
        assert_eq!(induced_map(&e, &ball).unwrap(), VertexMap::identity(&ball));
    }

    #[test]
    fn missing_image_is_reported() {
        let ball = standard_ball(4, 1).unwrap();
        let mut r = VertexMap::identity(&ball).to_record();
        r.images.remove(1);
        assert_eq!(VertexMap::from_record(&ball, &r), Err(Error::MapNotTotal(1)));
    }
}
