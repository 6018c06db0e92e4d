use crate::complex::Ball;

/// A largest family of pairwise disjoint distinct ball vertices (Bron–Kerbosch with pivoting).
pub fn max_disjoint_family(ball: &Ball) -> Vec<usize> {
    let n = ball.len();
    let mut best = vec![];
    let mut r = vec![];
    bron_kerbosch(ball, &mut r, (0..n).collect(), vec![], &mut best);
    best.sort_unstable();
    best
}

fn bron_kerbosch(ball: &Ball, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, best: &mut Vec<usize>) {
    if p.is_empty() && x.is_empty() {
        if r.len() > best.len() {
            *best = r.clone();
        }
        return;
    }
    if r.len() + p.len() <= best.len() {
        return;
    }
    let adj = |a: usize, b: usize| a != b && ball.is_disjoint(a, b);
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj(u, v)).count())
        .expect("p or x is nonempty");
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj(pivot, v)).collect();
    for v in candidates {
        r.push(v);
        let np = p.iter().copied().filter(|&u| adj(u, v)).collect();
        let nx = x.iter().copied().filter(|&u| adj(u, v)).collect();
        bron_kerbosch(ball, r, np, nx, best);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}
