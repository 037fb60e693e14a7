//! Measures of negative curvature: four-point hyperbolicity, triangle
//! slimness over canonical geodesics, Gromov products, local-geodesic
//! checks, and the geodesic-subgraph test.
//!
//! The exact computations are brute force by design — quartic in the vertex
//! count for hyperbolicity — and refuse to run above a size guard instead of
//! silently taking hours. The algorithmic modules never call these on large
//! inputs; they take a curvature parameter from the caller and only need
//! *some* valid bound.

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, Vertex, INF};
use crate::rational::Rational;

/// Default vertex-count ceiling for the quartic hyperbolicity scan.
pub const HYPERBOLICITY_GUARD: usize = 400;
/// Default vertex-count ceiling for the cubic slimness scan.
pub const SLIMNESS_GUARD: usize = 200;

#[derive(Debug, Error)]
pub enum MetricError {
    #[error("graph is disconnected; metric quantities are undefined")]
    Disconnected,
    #[error("instance has {n} vertices, over the exact-computation guard {guard}")]
    TooLarge { n: usize, guard: usize },
    #[error("walk step {i} is not an edge of the graph")]
    NotAWalk { i: usize },
}

/// Hyperbolicity value with the quadruple that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperbolicityReport {
    /// Half-integer hyperbolicity (four-point condition).
    pub delta: Rational,
    /// A quadruple attaining `delta`; `None` only when n < 4.
    pub witness: Option<[Vertex; 4]>,
}

/// Slimness bound over canonical geodesic triangles, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlimnessReport {
    /// Max over canonical triangles and sides of the distance from a side
    /// vertex to the union of the other two sides.
    pub slim: usize,
    /// Triangle corners attaining the bound; `None` when n < 3.
    pub witness_triangle: Option<[Vertex; 3]>,
    /// The side vertex realizing the distance.
    pub witness_vertex: Option<Vertex>,
}

/// A failed local-geodesic check: the walk window from position `i` to
/// position `j` has length `walk_dist` but the graph knows a shorter route.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalViolation {
    pub i: usize,
    pub j: usize,
    pub walk_dist: usize,
    pub graph_dist: usize,
}

/// Whether a vertex sequence is read as an open path or a closed cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WalkKind {
    Path,
    Cycle,
}

/// All-pairs BFS distances, one row per source.
pub fn all_pairs_distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .into_par_iter()
        .map(|s| g.bfs(s))
        .collect()
}

/// The Gromov product (y·z) with respect to w: half of
/// `d(w,y) + d(w,z) − d(y,z)`.
pub fn gromov_product(g: &Graph, w: Vertex, y: Vertex, z: Vertex) -> Result<Rational, MetricError> {
    let dw = g.bfs(w);
    let dy = g.bfs(y);
    if dw[y] == INF || dw[z] == INF || dy[z] == INF {
        return Err(MetricError::Disconnected);
    }
    Ok(Rational::new((dw[y] + dw[z]) as i64 - dy[z] as i64, 2))
}

/// Exact four-point hyperbolicity with the default size guard.
pub fn hyperbolicity_exact(g: &Graph) -> Result<HyperbolicityReport, MetricError> {
    hyperbolicity_exact_guarded(g, HYPERBOLICITY_GUARD)
}

/// Exact four-point hyperbolicity: over every vertex quadruple, half the
/// difference between the largest and second-largest of the three pairing
/// sums. Quartic time; refuses above `guard` vertices.
pub fn hyperbolicity_exact_guarded(
    g: &Graph,
    guard: usize,
) -> Result<HyperbolicityReport, MetricError> {
    let n = g.n();
    if n > guard {
        return Err(MetricError::TooLarge { n, guard });
    }
    if !g.is_connected() {
        return Err(MetricError::Disconnected);
    }
    if n < 4 {
        return Ok(HyperbolicityReport {
            delta: Rational::ZERO,
            witness: None,
        });
    }
    let dist = all_pairs_distances(g);

    // Per leading index: best (doubled delta, witness), witness already
    // lexicographically smallest for that x. The reduction keeps the
    // larger value, then the smaller witness, so the parallel schedule
    // cannot change the answer.
    let best = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut loc: (usize, [Vertex; 4]) = (0, [0; 4]);
            let mut have = false;
            for y in (x + 1)..n {
                for z in (y + 1)..n {
                    for w in (z + 1)..n {
                        let s1 = dist[x][y] + dist[z][w];
                        let s2 = dist[x][z] + dist[y][w];
                        let s3 = dist[x][w] + dist[y][z];
                        let (mut a, mut b) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
                        if s3 > a {
                            b = a;
                            a = s3;
                        } else if s3 > b {
                            b = s3;
                        }
                        let d2 = a - b;
                        if !have || d2 > loc.0 {
                            loc = (d2, [x, y, z, w]);
                            have = true;
                        }
                    }
                }
            }
            (have, loc)
        })
        .reduce(
            || (false, (0, [0; 4])),
            |l, r| match (l.0, r.0) {
                (false, _) => r,
                (_, false) => l,
                _ => {
                    if r.1 .0 > l.1 .0 || (r.1 .0 == l.1 .0 && r.1 .1 < l.1 .1) {
                        r
                    } else {
                        l
                    }
                }
            },
        );
    let (delta2, witness) = best.1;
    Ok(HyperbolicityReport {
        delta: Rational::new(delta2 as i64, 2),
        witness: Some(witness),
    })
}

/// Sampled lower estimate of four-point hyperbolicity: run the exact
/// quadruple scan over a seeded set of `landmarks` vertices instead of
/// all of `V`. One BFS per landmark, then all landmark quadruples. The
/// result never exceeds the true hyperbolicity and is deterministic in
/// `(landmarks, seed)`.
pub fn hyperbolicity_sampled(g: &Graph, landmarks: usize, seed: u64) -> Result<Rational, MetricError> {
    use rand::{Rng, SeedableRng};
    if !g.is_connected() {
        return Err(MetricError::Disconnected);
    }
    let n = g.n();
    let mut picked: Vec<Vertex> = if landmarks >= n {
        (0..n).collect()
    } else {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut set = std::collections::BTreeSet::new();
        while set.len() < landmarks {
            set.insert(rng.gen_range(0..n));
        }
        set.into_iter().collect()
    };
    picked.sort_unstable();
    let k = picked.len();
    if k < 4 {
        return Ok(Rational::ZERO);
    }
    let dist: Vec<Vec<usize>> = picked.iter().map(|&v| g.bfs(v)).collect();
    let mut best = 0usize;
    for a in 0..k {
        for b in (a + 1)..k {
            for c in (b + 1)..k {
                for d in (c + 1)..k {
                    let s1 = dist[a][picked[b]] + dist[c][picked[d]];
                    let s2 = dist[a][picked[c]] + dist[b][picked[d]];
                    let s3 = dist[a][picked[d]] + dist[b][picked[c]];
                    let (mut hi, mut mid) = if s1 >= s2 { (s1, s2) } else { (s2, s1) };
                    if s3 > hi {
                        mid = hi;
                        hi = s3;
                    } else if s3 > mid {
                        mid = s3;
                    }
                    best = best.max(hi - mid);
                }
            }
        }
    }
    Ok(Rational::new(best as i64, 2))
}

/// Slimness over canonical geodesic triangles with the default guard.
pub fn slimness_upper_bound(g: &Graph) -> Result<SlimnessReport, MetricError> {
    slimness_upper_bound_guarded(g, SLIMNESS_GUARD)
}

/// Max over vertex triples (a,b,c) of the slimness of the triangle formed
/// by the three *canonical* shortest paths: how far a vertex of one side
/// can be from the union of the other two. This is the parameter the
/// algorithms consume; it upper-bounds nothing about non-canonical
/// geodesics (the brute-force oracle covers those on tiny inputs).
pub fn slimness_upper_bound_guarded(
    g: &Graph,
    guard: usize,
) -> Result<SlimnessReport, MetricError> {
    let n = g.n();
    if n > guard {
        return Err(MetricError::TooLarge { n, guard });
    }
    if !g.is_connected() {
        return Err(MetricError::Disconnected);
    }
    if n < 3 {
        return Ok(SlimnessReport {
            slim: 0,
            witness_triangle: None,
            witness_vertex: None,
        });
    }
    let dist = all_pairs_distances(g);
    // Canonical side between u < v: descend from v along the BFS field of
    // u, which is exactly the graph-wide canonical path convention.
    let side = |u: Vertex, v: Vertex| -> Vec<Vertex> {
        debug_assert!(u < v);
        g.descend(&dist[u], v)
    };

    let best = (0..n)
        .into_par_iter()
        .map(|a| {
            // (slim, triangle, vertex), witness lexicographically smallest
            // within this leading corner.
            let mut loc: (usize, [Vertex; 3], Vertex) = (0, [0; 3], 0);
            let mut have = false;
            for b in (a + 1)..n {
                let side_ab = side(a, b);
                for c in (b + 1)..n {
                    let side_bc = side(b, c);
                    let side_ac = side(a, c);
                    let sides = [&side_ab, &side_bc, &side_ac];
                    for s in 0..3 {
                        let others: Vec<Vertex> = sides[(s + 1) % 3]
                            .iter()
                            .chain(sides[(s + 2) % 3].iter())
                            .copied()
                            .collect();
                        for &v in sides[s] {
                            let d = others.iter().map(|&u| dist[v][u]).min().unwrap();
                            if !have || d > loc.0 {
                                loc = (d, [a, b, c], v);
                                have = true;
                            }
                        }
                    }
                }
            }
            (have, loc)
        })
        .reduce(
            || (false, (0, [0; 3], 0)),
            |l, r| match (l.0, r.0) {
                (false, _) => r,
                (_, false) => l,
                _ => {
                    let lk = (l.1 .0, std::cmp::Reverse((l.1 .1, l.1 .2)));
                    let rk = (r.1 .0, std::cmp::Reverse((r.1 .1, r.1 .2)));
                    if rk > lk {
                        r
                    } else {
                        l
                    }
                }
            },
        );
    let (slim, tri, v) = best.1;
    Ok(SlimnessReport {
        slim,
        witness_triangle: Some(tri),
        witness_vertex: Some(v),
    })
}

/// Checks whether a path or cycle is a k-local geodesic: every window of
/// walk-length at most `k` must be a shortest path in `g`. Returns the
/// first violation in scan order — window length ascending, then start
/// position ascending — which is exactly the minimal window the filling
/// and shortening procedures want to replace. `Ok(None)` means the walk
/// passes.
pub fn is_k_local_geodesic(
    g: &Graph,
    walk: &[Vertex],
    kind: WalkKind,
    k: usize,
) -> Result<Option<LocalViolation>, MetricError> {
    let len = walk.len();
    // Validate the walk's edges.
    let steps = match kind {
        WalkKind::Path => len.saturating_sub(1),
        WalkKind::Cycle => len,
    };
    for i in 0..steps {
        let (u, v) = (walk[i], walk[(i + 1) % len]);
        if !g.has_edge(u, v) {
            return Err(MetricError::NotAWalk { i });
        }
    }
    let max_l = match kind {
        WalkKind::Path => k.min(len.saturating_sub(1)),
        WalkKind::Cycle => k.min(len / 2),
    };
    if max_l < 2 {
        return Ok(None);
    }
    // One capped BFS per start; windows checked in (length, start) order.
    // A capped BFS from each walk vertex is reused across window lengths.
    let dists: Vec<Vec<usize>> = walk
        .iter()
        .map(|&u| g.bfs_limited(&[u], None, Some(max_l)))
        .collect();
    for l in 2..=max_l {
        let starts = match kind {
            WalkKind::Path => len - l,
            WalkKind::Cycle => len,
        };
        for i in 0..starts {
            let j = (i + l) % len;
            let d = dists[i][walk[j]];
            if d < l {
                return Ok(Some(LocalViolation {
                    i,
                    j,
                    walk_dist: l,
                    graph_dist: d,
                }));
            }
        }
    }
    Ok(None)
}

/// Outcome of the geodesic-subgraph test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeodesicSubgraphReport {
    pub ok: bool,
    /// On failure, a pair whose induced distance exceeds (or loses, when
    /// the induced subgraph is disconnected) the ambient distance.
    pub witness: Option<(Vertex, Vertex)>,
}

/// True iff the subgraph induced on `sub` preserves all pairwise ambient
/// distances (which also forces it to be connected).
pub fn verify_geodesic_subgraph(g: &Graph, sub: &[Vertex]) -> GeodesicSubgraphReport {
    let mut verts: Vec<Vertex> = sub.to_vec();
    verts.sort_unstable();
    verts.dedup();
    let h = g.induced(&verts);
    for (i, &u) in verts.iter().enumerate() {
        let dh = h.bfs(i);
        let dg = g.bfs(u);
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if dh[j] != dg[v] {
                return GeodesicSubgraphReport {
                    ok: false,
                    witness: Some((u, v)),
                };
            }
        }
    }
    GeodesicSubgraphReport {
        ok: true,
        witness: None,
    }
}

/// The curvature parameter handed to the algorithms: at least 1, and
/// integral (half-integers round up).
pub fn algorithm_delta(delta: Rational) -> usize {
    let num = delta.num().max(0) as usize;
    let den = delta.den() as usize;
    let ceil = num.div_ceil(den);
    ceil.max(1)
}
