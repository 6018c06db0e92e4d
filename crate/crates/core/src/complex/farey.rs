//! The Farey graph as the curve complex of the four-punctured sphere (adjacency edges), its
//! finite balls, and the extension of a map from a single triangle.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::curve::farey::{FareySlope, SlopeMatrix};
use crate::error::{Error, Result};

pub type Triangle = [FareySlope; 3];

#[derive(Debug, Clone, Serialize)]
pub struct FareyBall {
    pub depth: usize,
    pub vertices: BTreeSet<FareySlope>,
    pub edges: BTreeSet<(FareySlope, FareySlope)>,
    /// Triangles in reflection order; the first is the base triangle `{0/1, 1/1, 1/0}`.
    pub triangles: Vec<Triangle>,
    /// Reflection depth of each triangle.
    pub triangle_depths: Vec<usize>,
}

fn slope(p: i64, q: i64) -> FareySlope {
    FareySlope::from_primitive(p, q)
}

/// The third vertex of the other triangle on edge `ab`, opposite to `u`.
fn reflect(u: FareySlope, a: FareySlope, b: FareySlope) -> FareySlope {
    let ((ap, aq), (bp, bq)) = (a.vector(), b.vector());
    let plus = slope(ap + bp, aq + bq);
    if u == plus {
        slope(ap - bp, aq - bq)
    } else {
        plus
    }
}

fn edge(a: FareySlope, b: FareySlope) -> (FareySlope, FareySlope) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn base_triangle() -> Triangle {
    [slope(0, 1), slope(1, 1), slope(1, 0)]
}

fn is_triangle(t: &Triangle) -> bool {
    t[0].is_farey_edge(t[1]) && t[1].is_farey_edge(t[2]) && t[0].is_farey_edge(t[2])
}

/// Walks the dual tree: calls `visit(parent triangle, crossed edge, new vertex index)` for
/// every reflection up to `depth`, in breadth-first order.
struct Reflection {
    /// Index of the triangle reflected.
    parent: usize,
    /// Positions (in the parent) of the crossed edge and of the opposite vertex.
    edge: (usize, usize),
    opposite: usize,
}

fn reflections(depth: usize) -> (Vec<Triangle>, Vec<usize>, Vec<Reflection>) {
    let mut triangles = vec![base_triangle()];
    let mut depths = vec![0];
    let mut steps = vec![];
    // open edges: (triangle index, edge positions, opposite position)
    let mut open: Vec<(usize, (usize, usize), usize)> = vec![(0, (0, 1), 2), (0, (1, 2), 0), (0, (0, 2), 1)];
    for d in 1..=depth {
        let mut next = vec![];
        for (t, (i, j), o) in open {
            let tri = triangles[t];
            let v = reflect(tri[o], tri[i], tri[j]);
            let new = [tri[i], tri[j], v];
            let idx = triangles.len();
            triangles.push(new);
            depths.push(d);
            steps.push(Reflection { parent: t, edge: (i, j), opposite: o });
            next.push((idx, (0, 2), 1));
            next.push((idx, (1, 2), 0));
        }
        open = next;
    }
    (triangles, depths, steps)
}

/// All triangles within reflection distance `depth` of the base triangle.
pub fn farey_ball(depth: usize) -> FareyBall {
    let (triangles, triangle_depths, _) = reflections(depth);
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for t in &triangles {
        vertices.extend(t.iter().copied());
        edges.insert(edge(t[0], t[1]));
        edges.insert(edge(t[1], t[2]));
        edges.insert(edge(t[0], t[2]));
    }
    FareyBall { depth, vertices, edges, triangles, triangle_depths }
}

impl FareyBall {
    pub fn contains_triangle(&self, t: &Triangle) -> bool {
        let key: BTreeSet<FareySlope> = t.iter().copied().collect();
        self.triangles.iter().any(|u| u.iter().copied().collect::<BTreeSet<_>>() == key)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FareyExtension {
    /// Images of the base triangle `(0/1, 1/1, 1/0)`.
    pub triangle_image: Triangle,
    pub depth: usize,
    pub map: BTreeMap<FareySlope, FareySlope>,
    /// Reflection propagation agrees with the unique `PGL(2, Z)` matrix sending the base
    /// triangle to the image triangle, and the propagation never assigned two images.
    pub unique: bool,
    pub injective: bool,
    /// Reflection depth of the image triangle.
    pub image_depth: usize,
    /// `image(ball(depth + image_depth)) ⊇ ball(depth)`.
    pub surjective_at_matched_depth: bool,
}

fn propagate(images: Triangle, depth: usize) -> (BTreeMap<FareySlope, FareySlope>, bool) {
    let (triangles, _, steps) = reflections(depth);
    let mut tri_images: Vec<Triangle> = vec![images];
    let mut map = BTreeMap::new();
    let mut consistent = true;
    for (v, w) in triangles[0].iter().zip(images) {
        map.insert(*v, w);
    }
    for (k, st) in steps.iter().enumerate() {
        let pi = tri_images[st.parent];
        let (i, j) = st.edge;
        let w = reflect(pi[st.opposite], pi[i], pi[j]);
        let tri = triangles[k + 1];
        if let Some(old) = map.insert(tri[2], w) {
            consistent &= old == w;
        }
        tri_images.push([pi[i], pi[j], w]);
    }
    (map, consistent)
}

fn matrix_for(images: &Triangle) -> Option<SlopeMatrix> {
    let (yp, yq) = images[0].vector(); // image of 0/1
    let (xp, xq) = images[2].vector(); // image of 1/0
    for sign in [1, -1] {
        let m = SlopeMatrix([[xp, sign * yp], [xq, sign * yq]]);
        if m.apply(slope(1, 1)) == images[1] {
            return Some(m);
        }
    }
    None
}

fn size(v: FareySlope) -> i64 {
    v.numerator().abs() + v.denominator()
}

/// Reflection depth of a Farey triangle: repeatedly replace its newest vertex (the one of
/// largest `|p| + q`) by its reflection until the base triangle is reached.
pub fn triangle_depth(t: &Triangle) -> Result<usize> {
    if !is_triangle(t) {
        return Err(Error::NotATriangle(format!("{} {} {}", t[0], t[1], t[2])));
    }
    let base: BTreeSet<FareySlope> = base_triangle().into_iter().collect();
    let mut cur = *t;
    let mut depth = 0;
    while cur.iter().copied().collect::<BTreeSet<_>>() != base {
        cur.sort_by_key(|v| size(*v));
        cur[2] = reflect(cur[2], cur[0], cur[1]);
        depth += 1;
    }
    Ok(depth)
}

/// Extends `base triangle ↦ images` to the ball of the given depth by reflecting across
/// shared edges, and reports uniqueness and matched-depth surjectivity.
pub fn farey_extend_triangle(images: Triangle, depth: usize) -> Result<FareyExtension> {
    if !is_triangle(&images) {
        return Err(Error::NotATriangle(format!("{} {} {}", images[0], images[1], images[2])));
    }
    let (map, consistent) = propagate(images, depth);
    let m = matrix_for(&images).ok_or_else(|| Error::NotATriangle("no unimodular matrix".into()))?;
    let agrees = map.iter().all(|(v, w)| m.apply(*v) == *w);
    let injective = map.values().collect::<HashSet<_>>().len() == map.len();
    let image_depth = triangle_depth(&images)?;
    let (big, _) = propagate(images, depth + image_depth);
    let covered: HashSet<FareySlope> = big.values().copied().collect();
    let surjective = farey_ball(depth).vertices.iter().all(|v| covered.contains(v));
    Ok(FareyExtension {
        triangle_image: images,
        depth,
        map,
        unique: consistent && agrees,
        injective,
        image_depth,
        surjective_at_matched_depth: surjective,
    })
}
