//! The graph of injections among the finite-index subgroups `G_k` of the extended mapping class
//! group of the sphere with `m` punctures (`G_k`: orientation-preserving classes fixing
//! punctures `1..=k`), together with their indices.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct GraphNode {
    pub name: String,
    /// Number of fixed punctures, or `None` for the node of the extended affine type.
    pub k: Option<usize>,
    /// `[Mod(S_m) : G]` by the formula `2·m!/(m−k)!`.
    pub index: Option<u128>,
    /// The same index by coset enumeration, when computed.
    pub enumerated_index: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectionGraph {
    pub m: usize,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<(usize, usize)>,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn index_formula(m: usize, k: usize) -> u128 {
    2 * factorial(m) / factorial(m - k)
}

/// `[Z/2 × S_m : {+1} × Fix(1..k)]` by enumerating `Z/2 × S_m` and merging right cosets.
pub fn coset_enumeration_index(m: usize, k: usize) -> usize {
    type Elt = (bool, Vec<u8>);
    let id: Elt = (false, (0..m as u8).collect());
    let mul_transposition = |x: &Elt, i: usize| -> Elt {
        let mut p = x.1.clone();
        p.swap(i, i + 1);
        (x.0, p)
    };
    let mut ids: HashMap<Elt, usize> = HashMap::new();
    let mut elts = vec![];
    let mut queue = VecDeque::from([id.clone()]);
    ids.insert(id.clone(), 0);
    elts.push(id);
    while let Some(x) = queue.pop_front() {
        let mut next: Vec<Elt> = (0..m - 1).map(|i| mul_transposition(&x, i)).collect();
        next.push((!x.0, x.1.clone()));
        for y in next {
            if !ids.contains_key(&y) {
                ids.insert(y.clone(), elts.len());
                elts.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut parent: Vec<usize> = (0..elts.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    // H acts on the left: position-swaps among the moveable punctures k+1..m.
    for (xi, x) in elts.iter().enumerate() {
        for i in k..m.saturating_sub(1) {
            let mut p = x.1.clone();
            let (a, b) = (p.iter().position(|&v| v as usize == i).unwrap(), p.iter().position(|&v| v as usize == i + 1).unwrap());
            p.swap(a, b);
            let y = ids[&(x.0, p)];
            let (ra, rb) = (find(&mut parent, xi), find(&mut parent, y));
            parent[ra] = rb;
        }
    }
    (0..elts.len()).filter(|&x| find(&mut parent, x) == x).count()
}

/// Nodes `PMod(S_m) = G_{m−1}, G_{m−2}, …, G_0` and the extended affine node, with edges
/// `G_k → G_{k−1}` and affine `→ G_2`. Coset enumeration runs when `enumerate` is set.
pub fn injection_graph(m: usize, enumerate: bool) -> Result<InjectionGraph> {
    if m < 5 {
        return Err(Error::Unsupported(format!("the injection graph needs m >= 5, got {m}")));
    }
    let mut nodes = vec![];
    for k in (0..m).rev() {
        let name = if k == m - 1 { format!("PMod(S_{m})") } else { format!("G_{k}") };
        nodes.push(GraphNode {
            name,
            k: Some(k),
            index: Some(index_formula(m, k)),
            enumerated_index: enumerate.then(|| coset_enumeration_index(m, k) as u128),
        });
    }
    let mut edges: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
    nodes.push(GraphNode { name: "Atilde".into(), k: None, index: None, enumerated_index: None });
    edges.push((m, m - 1 - 2));
    Ok(InjectionGraph { m, nodes, edges })
}

impl InjectionGraph {
    /// Node by name; `G_m` and `G_{m−1}` both name `PMod(S_m)`.
    pub fn node(&self, name: &str) -> Option<usize> {
        if name == format!("G_{}", self.m) || name == format!("G_{}", self.m - 1) {
            return Some(0);
        }
        self.nodes.iter().position(|n| n.name == name)
    }

    /// A directed path from `from` to `to` (a node reaches itself).
    pub fn reachable(&self, from: usize, to: usize) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(x) = queue.pop_front() {
            if x == to {
                return true;
            }
            for &(a, b) in &self.edges {
                if a == x && !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        false
    }

    pub fn injection_exists(&self, from: &str, to: &str) -> Result<bool> {
        let f = self.node(from).ok_or_else(|| Error::Parse(format!("unknown node `{from}`")))?;
        let t = self.node(to).ok_or_else(|| Error::Parse(format!("unknown node `{to}`")))?;
        Ok(self.reachable(f, t))
    }

    /// An injection is conjugation into the target, so the source index is at least the
    /// target index along every edge with known indices.
    pub fn indices_monotone(&self) -> bool {
        self.edges.iter().all(|&(a, b)| match (self.nodes[a].index, self.nodes[b].index) {
            (Some(x), Some(y)) => x >= y,
            _ => true,
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph injections {\n");
        for n in &self.nodes {
            match n.index {
                Some(i) => out.push_str(&format!("  \"{}\" [label=\"{} (index {i})\"];\n", n.name, n.name)),
                None => out.push_str(&format!("  \"{}\";\n", n.name)),
            }
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", self.nodes[a].name, self.nodes[b].name));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m6_examples() {
        let g = injection_graph(6, false).unwrap();
        assert!(g.injection_exists("G_6", "G_0").unwrap());
        assert!(g.injection_exists("PMod(S_6)", "G_0").unwrap());
        assert!(!g.injection_exists("G_0", "G_4").unwrap());
        assert!(!g.injection_exists("G_2", "G_4").unwrap());
        assert!(g.injection_exists("Atilde", "G_0").unwrap());
        assert!(!g.injection_exists("Atilde", "G_3").unwrap());
        assert_eq!(g.nodes[g.node("G_0").unwrap()].index, Some(2));
        assert_eq!(g.nodes[g.node("PMod(S_6)").unwrap()].index, Some(2 * 720));
        assert!(g.indices_monotone());
        assert!(injection_graph(4, false).is_err());
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(coset_enumeration_index(5, 0), 2);
        assert_eq!(coset_enumeration_index(5, 1), 10);
        assert_eq!(coset_enumeration_index(5, 4), 240);
    }
}
