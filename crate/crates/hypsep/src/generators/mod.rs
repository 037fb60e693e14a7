//! Instance families: grids with diagonals, wheels, cylinders, binary
//! tilings, and seeded random planar triangulations.
//!
//! Every generator returns a validated [`PlaneGraph`] whose rotation
//! system encodes the intended drawing; identifiers and rotations are
//! fixed functions of the parameters, so equal calls build identical
//! graphs. Families that can explode in size refuse oversized parameters
//! instead of allocating.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::embedding::PlaneGraph;
use crate::graph::{Graph, Vertex};

/// Hard ceiling on generated vertex counts; parameters past it are refused.
pub const SIZE_CAP: usize = 2_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("instance would have {requested} vertices, over the cap of {cap}")]
    TooLarge { requested: usize, cap: usize },
}

fn check_size(requested: usize) -> Result<(), GenError> {
    if requested > SIZE_CAP {
        Err(GenError::TooLarge { requested, cap: SIZE_CAP })
    } else {
        Ok(())
    }
}

/// The `n × n` grid with a parallel diagonal in every unit cell.
///
/// Vertex `(i, j)` (row-major) connects to its four grid neighbours and
/// along the diagonals `(i, j)–(i+1, j+1)`. `grid_diag(1)` is a single
/// vertex.
pub fn grid_diag(n: usize) -> Result<PlaneGraph, GenError> {
    if n == 0 {
        return Err(GenError::BadParameter("side must be at least 1".into()));
    }
    check_size(n * n)?;
    let id = |i: usize, j: usize| i * n + j;
    let mut g = Graph::new(n * n);
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            // Clockwise on screen (x right, y down): N, E, SE, S, W, NW.
            let mut around: Vec<Vertex> = Vec::new();
            if i > 0 {
                around.push(id(i - 1, j));
            }
            if j + 1 < n {
                around.push(id(i, j + 1));
            }
            if i + 1 < n && j + 1 < n {
                around.push(id(i + 1, j + 1));
            }
            if i + 1 < n {
                around.push(id(i + 1, j));
            }
            if j > 0 {
                around.push(id(i, j - 1));
            }
            if i > 0 && j > 0 {
                around.push(id(i - 1, j - 1));
            }
            for &w in &around {
                if w > id(i, j) {
                    g.add_edge(id(i, j), w);
                }
            }
            rot[id(i, j)] = around;
        }
    }
    Ok(PlaneGraph::new(g, rot).expect("grid rotations are planar"))
}

/// The wheel on `k` vertices: a hub joined to a rim cycle of `k − 1`
/// vertices, hub drawn inside. `wheel(1)` is a vertex, `wheel(2)` an
/// edge, `wheel(3)` a triangle. Rim vertices are `0..k−1`, the hub is
/// `k − 1`.
pub fn wheel(k: usize) -> Result<PlaneGraph, GenError> {
    if k == 0 {
        return Err(GenError::BadParameter("order must be at least 1".into()));
    }
    check_size(k)?;
    let rim = k - 1;
    let hub = rim;
    let mut g = Graph::new(k);
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new(); k];
    match rim {
        0 => {}
        1 => {
            g.add_edge(0, hub);
            rot[0] = vec![hub];
            rot[hub] = vec![0];
        }
        2 => {
            g.add_edge(0, 1);
            g.add_edge(0, hub);
            g.add_edge(1, hub);
            rot[0] = vec![1, hub];
            rot[1] = vec![hub, 0];
            rot[hub] = vec![0, 1];
        }
        _ => {
            for i in 0..rim {
                g.add_edge(i, (i + 1) % rim);
                g.add_edge(i, hub);
                rot[i] = vec![(i + 1) % rim, hub, (i + rim - 1) % rim];
            }
            rot[hub] = (0..rim).collect();
        }
    }
    Ok(PlaneGraph::new(g, rot).expect("wheel rotations are planar"))
}

/// A cylinder: `rings` concentric cycles of length `delta`, consecutive
/// rings joined column to column. `cylinder(3, 1)` is a triangle,
/// `cylinder(4, 2)` the cube graph. Vertex `(r, c)` has id
/// `r * delta + c`.
pub fn cylinder(delta: usize, rings: usize) -> Result<PlaneGraph, GenError> {
    if delta < 3 {
        return Err(GenError::BadParameter("circumference must be at least 3".into()));
    }
    if rings == 0 {
        return Err(GenError::BadParameter("need at least one ring".into()));
    }
    check_size(delta * rings)?;
    let id = |r: usize, c: usize| r * delta + c;
    let mut g = Graph::new(delta * rings);
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new(); delta * rings];
    for r in 0..rings {
        for c in 0..delta {
            let succ = id(r, (c + 1) % delta);
            let pred = id(r, (c + delta - 1) % delta);
            g.add_edge(id(r, c), succ);
            if r + 1 < rings {
                g.add_edge(id(r, c), id(r + 1, c));
            }
            let mut around = vec![succ];
            if r + 1 < rings {
                around.push(id(r + 1, c));
            }
            around.push(pred);
            if r > 0 {
                around.push(id(r - 1, c));
            }
            rot[id(r, c)] = around;
        }
    }
    Ok(PlaneGraph::new(g, rot).expect("cylinder rotations are planar"))
}

/// A patch of the binary tiling of the hyperbolic plane: `m` rows of
/// square tiles, row `i` holding `2^i` tiles of width `2^{-i}`, each
/// tile's bottom side split in half by the corner of the two tiles below
/// it. `binary_tiling_patch(1)` is the 2-tile strip.
pub fn binary_tiling_patch(m: usize) -> Result<PlaneGraph, GenError> {
    if m == 0 {
        return Err(GenError::BadParameter("need at least one row".into()));
    }
    if m > 24 {
        // 3 · 2^m vertices; refuse before the arithmetic below overflows.
        return Err(GenError::TooLarge { requested: usize::MAX, cap: SIZE_CAP });
    }
    // Work in units of 2^{-(m+1)}: the strip spans x ∈ [0, 2^{m+1}].
    // Level ℓ is the horizontal line under row ℓ (level 0 is the top).
    let width: usize = 1 << (m + 1);
    let spacing = |l: usize| -> usize {
        if l == 0 {
            1 << m
        } else if l < m {
            1 << (m - l)
        } else {
            2
        }
    };
    let count = |l: usize| width / spacing(l) + 1;
    let mut level_start = vec![0usize; m + 2];
    for l in 0..=m {
        level_start[l + 1] = level_start[l] + count(l);
    }
    let n = level_start[m + 1];
    check_size(n)?;
    let id = |l: usize, x: usize| level_start[l] + x / spacing(l);

    let mut g = Graph::new(n);
    let mut rot: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for l in 0..=m {
        let sp = spacing(l);
        for k in 0..count(l) {
            let x = k * sp;
            let v = id(l, x);
            // Clockwise: N (vertical up), E, S (vertical down), W.
            let mut around = Vec::new();
            if l > 0 && x % (1 << (m + 1 - l)) == 0 {
                around.push(id(l - 1, x));
            }
            if x + sp <= width {
                around.push(id(l, x + sp));
            }
            if l < m && x % (1 << (m - l)) == 0 {
                around.push(id(l + 1, x));
            }
            if x >= sp {
                around.push(id(l, x - sp));
            }
            for &w in &around {
                if w > v {
                    g.add_edge(v, w);
                }
            }
            rot[v] = around;
        }
    }
    Ok(PlaneGraph::new(g, rot).expect("tiling rotations are planar"))
}

/// A seeded random stacked triangulation: start from a triangle and
/// repeatedly insert a vertex into a uniformly random inner face, joined
/// to that face's three corners. All faces stay triangles (plus the
/// fixed outer triangle), the graph stays 2-connected, and a given
/// `(n, seed)` always builds the same graph.
pub fn random_triangulation(n: usize, seed: u64) -> Result<PlaneGraph, GenError> {
    if n < 3 {
        return Err(GenError::BadParameter("triangulations need at least 3 vertices".into()));
    }
    check_size(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Inner faces as corner triples in consistent cyclic orientation.
    let mut faces: Vec<[Vertex; 3]> = vec![[0, 1, 2]];
    let mut g = Graph::new(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    for v in 3..n {
        let pick = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(pick);
        faces.push([a, b, v]);
        faces.push([b, c, v]);
        faces.push([c, a, v]);
        g.add_edge(a, v);
        g.add_edge(b, v);
        g.add_edge(c, v);
    }
    // Recover rotations from the oriented triangles: in each face the
    // neighbour after `x` in cyclic order succeeds the neighbour before
    // `x` in the rotation at `x`.
    let mut succ: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
    for &[a, b, c] in &faces {
        succ[a].push((b, c));
        succ[b].push((c, a));
        succ[c].push((a, b));
    }
    let mut rot: Vec<Vec<Vertex>> = Vec::with_capacity(n);
    for v in 0..n {
        let pairs = &succ[v];
        let mut next = std::collections::HashMap::new();
        let mut has_pred = std::collections::HashSet::new();
        for &(x, y) in pairs {
            next.insert(x, y);
            has_pred.insert(y);
        }
        // Boundary vertices (the outer triangle) have an open chain;
        // interior vertices a full cycle, entered at the lowest neighbour.
        let start = pairs
            .iter()
            .map(|&(x, _)| x)
            .filter(|x| !has_pred.contains(x))
            .min()
            .or_else(|| pairs.iter().map(|&(x, _)| x).min())
            .expect("every vertex lies on a face");
        let mut order = vec![start];
        let mut cur = start;
        while let Some(&y) = next.get(&cur) {
            if y == start {
                break;
            }
            order.push(y);
            cur = y;
        }
        rot.push(order);
    }
    Ok(PlaneGraph::new(g, rot).expect("triangulation rotations are planar"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::hyperbolicity_exact;
    use crate::rational::Rational;

    #[test]
    fn small_grids_have_the_expected_sizes() {
        let g2 = grid_diag(2).unwrap();
        assert_eq!((g2.n(), g2.m()), (4, 5));
        assert_eq!(g2.face_count(), 3);
        let g3 = grid_diag(3).unwrap();
        assert_eq!((g3.n(), g3.m()), (9, 16));
        assert_eq!(g3.face_count(), 9);
        assert_eq!(grid_diag(1).unwrap().n(), 1);
    }

    #[test]
    fn wheel_ladder_of_small_cases() {
        assert_eq!(wheel(1).unwrap().n(), 1);
        let w2 = wheel(2).unwrap();
        assert_eq!((w2.n(), w2.m()), (2, 1));
        let w3 = wheel(3).unwrap();
        assert_eq!((w3.n(), w3.m()), (3, 3));
        let w6 = wheel(6).unwrap();
        assert_eq!((w6.n(), w6.m()), (6, 10));
        // Hub inside: the rim cycle bounds a face of length 5.
        assert!((0..w6.face_count()).any(|f| w6.face_len(f) == 5));
    }

    #[test]
    fn cylinder_small_cases() {
        let t = cylinder(3, 1).unwrap();
        assert_eq!((t.n(), t.m(), t.face_count()), (3, 3, 2));
        let cube = cylinder(4, 2).unwrap();
        assert_eq!((cube.n(), cube.m(), cube.face_count()), (8, 12, 6));
        let c = cylinder(5, 7).unwrap();
        assert_eq!(c.n(), 35);
        assert_eq!(c.face_count(), 5 * 6 + 2);
        assert!(matches!(cylinder(2, 3), Err(GenError::BadParameter(_))));
    }

    #[test]
    fn binary_tiling_counts() {
        let b1 = binary_tiling_patch(1).unwrap();
        // Two tiles plus the outer face.
        assert_eq!(b1.face_count(), 3);
        let b2 = binary_tiling_patch(2).unwrap();
        assert_eq!((b2.n(), b2.m(), b2.face_count()), (13, 18, 7));
        // Row counts: 2^1 + 2^2 tiles plus the outer face.
        assert_eq!(b2.face_count(), 2 + 4 + 1);
        assert!(matches!(binary_tiling_patch(30), Err(GenError::TooLarge { .. })));
    }

    #[test]
    fn binary_tiling_is_negatively_curved() {
        // Wider and wider patches keep constant hyperbolicity — the
        // defining feature of the family.
        let d3 = hyperbolicity_exact(binary_tiling_patch(3).unwrap().graph()).unwrap();
        let d5 = hyperbolicity_exact(binary_tiling_patch(5).unwrap().graph()).unwrap();
        assert!(d5.delta <= d3.delta + Rational::from_int(1));
    }

    #[test]
    fn random_triangulations_are_reproducible_triangulations() {
        let a = random_triangulation(40, 7).unwrap();
        let b = random_triangulation(40, 7).unwrap();
        assert_eq!(a.graph().edges(), b.graph().edges());
        assert_eq!(a.rotations(), b.rotations());
        let c = random_triangulation(40, 8).unwrap();
        assert_ne!(a.graph().edges(), c.graph().edges());
        // Stacked triangulation invariants.
        assert_eq!(a.m(), 3 + 3 * (40 - 3));
        assert_eq!(a.face_count(), 2 + 2 * (40 - 3));
        let tri_faces = (0..a.face_count()).filter(|&f| a.face_len(f) == 3).count();
        assert_eq!(tri_faces, a.face_count());
    }
}
