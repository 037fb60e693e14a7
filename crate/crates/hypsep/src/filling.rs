//! Greedy filling of a face cycle by pockets of short cycles.
//!
//! Given a plane 2-connected graph, a face cycle `C`, and a curvature
//! parameter `delta`, the filling procedure repeatedly finds the minimal
//! window of the current cycle that is not a shortest path inside the
//! current region, replaces it by a shortest path, and carves off the
//! pocket between the two. It terminates when every surviving cycle is a
//! `10·delta`-local geodesic of its region. The union of the start cycle
//! and all replacement paths is a plane subgraph `H` whose internal faces
//! are the carved pockets plus the terminal cycles; on suitably curved
//! inputs every pocket has length at most `20·delta` and every terminal
//! cycle length at most `10·delta`.
//!
//! Regions are tracked as sets of faces of the fixed host embedding, so
//! all vertices keep their original ids throughout. A replacement path
//! may touch the cycle it is shortcutting outside the replaced window; the
//! resulting pinched walk is split into simple cycles and each piece is
//! filled independently in its own sub-region.

use std::collections::VecDeque;

use thiserror::Error;

use crate::embedding::PlaneGraph;
use crate::graph::{decompose_into_simple_cycles, is_two_connected, Vertex, INF};

/// Failure modes of the filling procedure.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FillError {
    /// The host graph must be 2-connected so that all faces are simple
    /// cycles.
    #[error("host graph is not 2-connected")]
    NotTwoConnected,
    /// The face id passed as the cycle to fill does not exist.
    #[error("face {0} out of range")]
    NoSuchFace(usize),
    /// The curvature parameter must be positive.
    #[error("delta must be positive")]
    ZeroDelta,
}

/// One replacement step: the window `p` that was not a shortest path and
/// the shortest path `q` that replaced it. Both run from the same first
/// to the same last vertex and share no other vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingStep {
    pub p: Vec<Vertex>,
    pub q: Vec<Vertex>,
}

/// Why a face of the filling subgraph exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKind {
    /// The pocket carved off by the given step (index into `steps`).
    Pocket { step: usize },
    /// A terminal cycle that was already a local geodesic of its region.
    Terminal,
}

/// A face of the filling subgraph, along with the set of host faces that
/// compose its interior.
#[derive(Debug, Clone)]
pub struct FillingFace {
    /// The simple cycle bounding the face.
    pub cycle: Vec<Vertex>,
    /// Host face ids strictly inside the cycle (on the side away from the
    /// start cycle's own face).
    pub region: Vec<usize>,
    pub kind: FaceKind,
}

impl FillingFace {
    /// Number of edges on the face boundary.
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

/// Result of the greedy filling procedure.
#[derive(Debug, Clone)]
pub struct Filling {
    /// The filled face cycle, rotated to start at its smallest vertex and
    /// oriented toward that vertex's smaller cycle neighbor.
    pub start_cycle: Vec<Vertex>,
    /// The host face bounded by the start cycle (the side that is not
    /// filled).
    pub c_face: usize,
    /// Replacement steps in the order they were performed.
    pub steps: Vec<FillingStep>,
    /// All internal faces of the filling subgraph: one pocket per step
    /// plus one face per terminal cycle.
    pub faces: Vec<FillingFace>,
    /// The terminal cycles. Normally a single cycle; empty when the last
    /// replacement closed the region exactly, and several when a
    /// replacement path pinched the cycle into independent pieces.
    pub final_cycles: Vec<Vec<Vertex>>,
    /// Edge set of the filling subgraph `H` (start cycle plus all
    /// replacement paths), as normalized sorted pairs.
    pub edges: Vec<(Vertex, Vertex)>,
    /// Invariant violations observed while building. Empty on inputs that
    /// actually have the promised curvature; populated, never fatal,
    /// otherwise.
    pub anomalies: Vec<String>,
}

impl Filling {
    /// Number of edges of the filling subgraph (its area).
    pub fn area(&self) -> usize {
        self.edges.len()
    }

    /// Sorted vertices of the filling subgraph.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// True iff the normalized edge lies on the filling subgraph.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let e = norm(u, v);
        self.edges.binary_search(&e).is_ok()
    }

    /// Re-checks the length and area invariants for the given `delta`,
    /// returning one message per violation.
    pub fn validate(&self, delta: usize) -> Vec<String> {
        let mut out = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            let bound = match f.kind {
                FaceKind::Pocket { .. } => 20 * delta,
                FaceKind::Terminal => 10 * delta,
            };
            if f.len() > bound {
                out.push(format!(
                    "face {} has length {} > {}",
                    i,
                    f.len(),
                    bound
                ));
            }
        }
        let area_bound = 21 * delta * self.start_cycle.len();
        if self.area() > area_bound {
            out.push(format!("area {} > {}", self.area(), area_bound));
        }
        out
    }
}

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Bounded-distance queries inside one region of a plane graph.
///
/// A region is a set of host faces. Its graph consists of every vertex
/// and edge incident to at least one region face; distances are measured
/// in that graph only. Searches can be capped at a radius, in which case
/// vertices farther away report [`INF`].
pub struct RegionSearch<'a> {
    plane: &'a PlaneGraph,
    in_region: Vec<bool>,
    allowed: Vec<bool>,
}

impl<'a> RegionSearch<'a> {
    pub fn new(plane: &'a PlaneGraph, region_faces: &[usize]) -> Self {
        let mut in_region = vec![false; plane.face_count()];
        let mut allowed = vec![false; plane.n()];
        for &f in region_faces {
            in_region[f] = true;
        }
        for &f in region_faces {
            for &(u, _) in plane.face_darts(f) {
                allowed[u] = true;
            }
        }
        RegionSearch {
            plane,
            in_region,
            allowed,
        }
    }

    /// True iff the vertex touches the region.
    pub fn allows(&self, v: Vertex) -> bool {
        self.allowed[v]
    }

    /// True iff the edge borders or crosses the region.
    pub fn edge_ok(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = self.plane.face_pair(u, v);
        self.in_region[a] || self.in_region[b]
    }

    /// Distances from `source` to all region vertices within `cap` steps
    /// (no cap when `None`).
    pub fn bfs(&self, source: Vertex, cap: Option<usize>) -> Vec<usize> {
        assert!(self.allowed[source], "source {source} outside region");
        let g = self.plane.graph();
        let mut dist = vec![INF; g.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            if let Some(c) = cap {
                if dist[v] == c {
                    continue;
                }
            }
            for &w in g.neighbors(v) {
                if dist[w] == INF && self.allowed[w] && self.edge_ok(v, w) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distance between two region vertices, [`INF`] if beyond `cap`.
    pub fn distance(&self, u: Vertex, v: Vertex, cap: Option<usize>) -> usize {
        self.bfs(u, cap)[v]
    }

    /// The canonical shortest path between two region vertices: grown
    /// from the smaller endpoint, always stepping to the lowest-numbered
    /// usable neighbor, then oriented to run `u → v`. `None` when the
    /// endpoints are disconnected inside the region.
    pub fn canonical_path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        if u == v {
            return Some(vec![u]);
        }
        let root = u.min(v);
        let far = u.max(v);
        let dist = self.bfs(root, None);
        if dist[far] == INF {
            return None;
        }
        let g = self.plane.graph();
        let mut path = vec![far];
        let mut cur = far;
        while cur != root {
            let step = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| {
                    self.allowed[w] && dist[w] + 1 == dist[cur] && self.edge_ok(cur, w)
                })
                .expect("region BFS always leaves a descent step");
            path.push(step);
            cur = step;
        }
        path.reverse(); // now root → far
        if root != u {
            path.reverse();
        }
        Some(path)
    }
}

/// Rotates a cycle to start at its smallest vertex and orients it toward
/// that vertex's smaller neighbor on the cycle.
pub fn canonical_cycle(c: &[Vertex]) -> Vec<Vertex> {
    let n = c.len();
    let pos = (0..n).min_by_key(|&i| c[i]).expect("empty cycle");
    let forward = c[(pos + 1) % n] <= c[(pos + n - 1) % n];
    (0..n)
        .map(|t| {
            if forward {
                c[(pos + t) % n]
            } else {
                c[(pos + n - t) % n]
            }
        })
        .collect()
}

/// One unfinished piece of the filling: a boundary cycle and the host
/// faces of the disk it bounds.
struct ActiveCycle {
    cycle: Vec<Vertex>,
    region: Vec<usize>,
}

/// Fills the side of face `c_face` away from the face itself.
///
/// Repeatedly replaces the minimal non-shortest window (scanning window
/// lengths `2, 3, …` in increasing order, and start positions in cycle
/// order within a length) of each active cycle by the canonical shortest
/// path between the window's endpoints inside the cycle's region, carving
/// off the pocket between window and path, until every active cycle is a
/// `10·delta`-local geodesic of its region.
pub fn greedy_fill(p: &PlaneGraph, c_face: usize, delta: usize) -> Result<Filling, FillError> {
    if delta == 0 {
        return Err(FillError::ZeroDelta);
    }
    if c_face >= p.face_count() {
        return Err(FillError::NoSuchFace(c_face));
    }
    if !is_two_connected(p.graph()) {
        return Err(FillError::NotTwoConnected);
    }
    let k = 10 * delta;
    let start_cycle = canonical_cycle(
        &p.face_darts(c_face)
            .iter()
            .map(|&(u, _)| u)
            .collect::<Vec<_>>(),
    );
    let initial_region: Vec<usize> = (0..p.face_count()).filter(|&f| f != c_face).collect();

    let mut steps: Vec<FillingStep> = Vec::new();
    let mut faces: Vec<FillingFace> = Vec::new();
    let mut final_cycles: Vec<Vec<Vertex>> = Vec::new();
    let anomalies: Vec<String> = Vec::new();
    let mut q_edges: Vec<(Vertex, Vertex)> = Vec::new();

    let mut work = VecDeque::from([ActiveCycle {
        cycle: start_cycle.clone(),
        region: initial_region,
    }]);
    let step_budget = start_cycle.len() + 4;

    while let Some(active) = work.pop_front() {
        let cycle = active.cycle;
        let len = cycle.len();
        let search = RegionSearch::new(p, &active.region);
        // Scan for the minimal violating window: lengths ascending, then
        // start positions ascending. Window lengths stay strictly below
        // 10·delta so every replaced window has fewer than 10·delta edges.
        let max_l = (k - 1).min(len / 2);
        let mut violation: Option<(usize, usize, usize)> = None; // (start, len, dist)
        if max_l >= 2 {
            // dmat[i][o-2] = capped region distance from cycle[i] to
            // cycle[i+o], for window lengths o = 2..=max_l.
            let cap = max_l - 1;
            let dmat: Vec<Vec<usize>> = (0..len)
                .map(|i| {
                    let dist = search.bfs(cycle[i], Some(cap));
                    (2..=max_l).map(|o| dist[cycle[(i + o) % len]]).collect()
                })
                .collect();
            'scan: for l in 2..=max_l {
                for (i, row) in dmat.iter().enumerate() {
                    let d = row[l - 2];
                    if d < l {
                        violation = Some((i, l, d));
                        break 'scan;
                    }
                }
            }
        }

        let Some((start, l, d)) = violation else {
            // Terminal cycle: a local geodesic of its region. Length
            // violations are collected by the final validate pass.
            final_cycles.push(cycle.clone());
            faces.push(FillingFace {
                cycle,
                region: active.region,
                kind: FaceKind::Terminal,
            });
            continue;
        };

        assert!(
            steps.len() < step_budget,
            "filling exceeded its step budget"
        );
        // The window P and its canonical replacement Q.
        let window: Vec<Vertex> = (0..=l).map(|t| cycle[(start + t) % len]).collect();
        let (u, v) = (window[0], window[l]);
        let q = search
            .canonical_path(u, v)
            .expect("window endpoints lie in one region");
        assert_eq!(q.len(), d + 1, "replacement path must realize the distance");
        // Interior disjointness: the replacement may touch the rest of
        // the cycle, but never the window it is shortcutting.
        let interior_hits = q[1..q.len() - 1]
            .iter()
            .filter(|w| window.contains(w))
            .count();
        assert_eq!(
            interior_hits, 0,
            "replacement path re-enters the minimal window"
        );

        // Pocket between window and replacement: a simple cycle.
        let mut pocket_cycle = window.clone();
        pocket_cycle.extend(q[1..q.len() - 1].iter().rev());
        let pocket_cycle = canonical_cycle(&pocket_cycle);

        // Blocked edges for region flood fills: the current cycle plus
        // the replacement path.
        let mut blocked: Vec<(Vertex, Vertex)> = (0..len)
            .map(|i| norm(cycle[i], cycle[(i + 1) % len]))
            .collect();
        blocked.extend(q.windows(2).map(|w| norm(w[0], w[1])));
        blocked.sort_unstable();
        blocked.dedup();
        let is_blocked =
            |a: Vertex, b: Vertex| blocked.binary_search(&norm(a, b)).is_ok();

        // Seed the pocket flood from the region side of the window's
        // first edge.
        let in_region = |f: usize| active.region.binary_search(&f).is_ok();
        let seed = {
            let (fa, fb) = p.face_pair(window[0], window[1]);
            match (in_region(fa), in_region(fb)) {
                (true, false) => fa,
                (false, true) => fb,
                _ => unreachable!("window edge must bound the region"),
            }
        };
        let pocket_faces = flood_faces(p, &active.region, seed, &is_blocked);

        // New boundary: symmetric difference of (cycle − window) and the
        // replacement, split into simple cycles.
        let mut new_edges: Vec<(Vertex, Vertex)> = (0..len)
            .map(|i| norm(cycle[i], cycle[(i + 1) % len]))
            .collect();
        let window_edges: Vec<(Vertex, Vertex)> =
            window.windows(2).map(|w| norm(w[0], w[1])).collect();
        new_edges.retain(|e| !window_edges.contains(e));
        for w in q.windows(2) {
            let e = norm(w[0], w[1]);
            if let Some(at) = new_edges.iter().position(|&x| x == e) {
                new_edges.remove(at); // doubled edge cancels
            } else {
                new_edges.push(e);
            }
        }
        let pieces = decompose_into_simple_cycles(&new_edges);

        // Distribute the remaining region faces among the pieces.
        let base: Vec<usize> = active
            .region
            .iter()
            .copied()
            .filter(|f| pocket_faces.binary_search(f).is_err())
            .collect();
        let mut assigned = 0usize;
        let mut next_active = Vec::new();
        for piece in &pieces {
            let (fa, fb) = p.face_pair(piece[0], piece[1]);
            let in_base = |f: usize| base.binary_search(&f).is_ok();
            let seed = match (in_base(fa), in_base(fb)) {
                (true, false) => fa,
                (false, true) => fb,
                _ => unreachable!("piece edge must bound exactly one live lobe"),
            };
            let lobe = flood_faces(p, &base, seed, &is_blocked);
            assigned += lobe.len();
            next_active.push(ActiveCycle {
                cycle: canonical_cycle(piece),
                region: lobe,
            });
        }
        assert_eq!(
            assigned,
            base.len(),
            "region faces must be partitioned among the pieces"
        );

        for a in next_active {
            work.push_back(a);
        }
        q_edges.extend(q.windows(2).map(|w| norm(w[0], w[1])));
        faces.push(FillingFace {
            cycle: pocket_cycle,
            region: pocket_faces,
            kind: FaceKind::Pocket { step: steps.len() },
        });
        steps.push(FillingStep { p: window, q });
    }

    // Assemble H.
    let mut edges: Vec<(Vertex, Vertex)> = (0..start_cycle.len())
        .map(|i| norm(start_cycle[i], start_cycle[(i + 1) % start_cycle.len()]))
        .collect();
    edges.extend(q_edges);
    edges.sort_unstable();
    edges.dedup();

    let mut filling = Filling {
        start_cycle,
        c_face,
        steps,
        faces,
        final_cycles,
        edges,
        anomalies,
    };
    let mut more = filling.validate(delta);
    filling.anomalies.append(&mut more);
    Ok(filling)
}

/// Flood fill over host faces: all faces of `region` (sorted) reachable
/// from `seed` without crossing a blocked edge. Returns a sorted list.
fn flood_faces(
    p: &PlaneGraph,
    region: &[usize],
    seed: usize,
    is_blocked: &dyn Fn(Vertex, Vertex) -> bool,
) -> Vec<usize> {
    debug_assert!(region.binary_search(&seed).is_ok());
    let mut seen = vec![false; p.face_count()];
    seen[seed] = true;
    let mut queue = VecDeque::from([seed]);
    let mut out = vec![seed];
    while let Some(f) = queue.pop_front() {
        for &(u, v) in p.face_darts(f) {
            if is_blocked(u, v) {
                continue;
            }
            let g = p.face_of_dart(v, u);
            if !seen[g] && region.binary_search(&g).is_ok() {
                seen[g] = true;
                out.push(g);
                queue.push_back(g);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Report of [`check_isoperimetry`].
#[derive(Debug, Clone)]
pub struct IsoperimetryReport {
    /// Indices into `filling.faces` of the interacting faces.
    pub interacting: Vec<usize>,
    /// The bound the count is compared against.
    pub bound: usize,
    /// Whether the probe cycle runs entirely on the filling subgraph.
    pub on_filling: bool,
    pub ok: bool,
}

/// The filling faces that interact with a probe cycle `gamma`: those with
/// at least one host face on the side of `gamma` away from the filled
/// face cycle. This covers both faces whose interior `gamma` enters and
/// faces `gamma` separates from the start cycle.
pub fn interacting_faces(p: &PlaneGraph, filling: &Filling, gamma: &[Vertex]) -> Vec<usize> {
    let labels = p.cycle_sides(gamma);
    let outside = labels[filling.c_face];
    (0..filling.faces.len())
        .filter(|&i| {
            filling.faces[i]
                .region
                .iter()
                .any(|&f| labels[f] != outside)
        })
        .collect()
}

/// Checks the interaction bound for a probe cycle: at most
/// `(k+1)·|gamma|` interacting faces in general, and at most `|gamma|`
/// when `gamma` runs on the filling subgraph itself.
pub fn check_isoperimetry(
    p: &PlaneGraph,
    filling: &Filling,
    gamma: &[Vertex],
    k: usize,
) -> IsoperimetryReport {
    let interacting = interacting_faces(p, filling, gamma);
    let on_filling = (0..gamma.len())
        .all(|i| filling.has_edge(gamma[i], gamma[(i + 1) % gamma.len()]));
    let bound = if on_filling {
        gamma.len()
    } else {
        (k + 1) * gamma.len()
    };
    let ok = interacting.len() <= bound;
    IsoperimetryReport {
        interacting,
        bound,
        on_filling,
        ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::PlaneGraph;
    use crate::graph::Graph;

    /// Wheel with `n` rim vertices `0..n` and hub `n`, rim face is the
    /// outer face.
    fn wheel(n: usize) -> PlaneGraph {
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n).map(|i| (i, n)));
        let g = Graph::from_edges(n + 1, &edges);
        // Counterclockwise rotations: rim vertex i sees successor, hub,
        // predecessor; the hub sees the rim in order.
        let mut rot: Vec<Vec<usize>> = (0..n)
            .map(|i| vec![(i + 1) % n, n, (i + n - 1) % n])
            .collect();
        rot.push((0..n).collect());
        PlaneGraph::new(g, rot).unwrap()
    }

    fn rim_face(p: &PlaneGraph, n: usize) -> usize {
        (0..p.face_count())
            .find(|&f| p.face_len(f) == n && !p.face_vertices(f).contains(&n))
            .unwrap()
    }

    #[test]
    fn short_geodesic_face_fills_trivially() {
        // W5: the 4-rim is already a 10-local geodesic of the inside
        // (the hub shortcut ties at distance 2 but never beats it).
        let p = wheel(4);
        let f = rim_face(&p, 4);
        let fill = greedy_fill(&p, f, 1).unwrap();
        assert!(fill.steps.is_empty());
        assert_eq!(fill.final_cycles, vec![vec![0, 1, 2, 3]]);
        assert_eq!(fill.faces.len(), 1);
        assert_eq!(fill.faces[0].kind, FaceKind::Terminal);
        assert_eq!(fill.faces[0].region.len(), 4); // the four triangles
        assert_eq!(fill.area(), 4);
        assert!(fill.anomalies.is_empty());
    }

    #[test]
    fn wheel_rim_fills_through_the_hub() {
        // W9: the 8-rim admits the hub shortcut 0-8-3 against the window
        // 0-1-2-3; afterwards single triangles peel off one by one.
        let p = wheel(8);
        let f = rim_face(&p, 8);
        let fill = greedy_fill(&p, f, 1).unwrap();
        assert_eq!(fill.start_cycle, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(fill.steps.len(), 5);
        assert_eq!(
            fill.steps[0],
            FillingStep {
                p: vec![0, 1, 2, 3],
                q: vec![0, 8, 3],
            }
        );
        // Every later replacement is a single hub edge.
        for s in &fill.steps[1..] {
            assert_eq!(s.p.len(), 3);
            assert_eq!(s.q.len(), 2);
        }
        assert_eq!(fill.final_cycles, vec![vec![0, 7, 8]]);
        assert_eq!(fill.faces.len(), 6);
        // H = rim + six hub spokes (the first step contributes two).
        assert_eq!(fill.area(), 14);
        assert!(fill.anomalies.is_empty());
        // Face regions partition the inside triangles.
        let total: usize = fill.faces.iter().map(|f| f.region.len()).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn areas_and_faces_obey_validate_bounds() {
        let p = wheel(8);
        let f = rim_face(&p, 8);
        let fill = greedy_fill(&p, f, 1).unwrap();
        assert!(fill.validate(1).is_empty());
        // With delta = 0 rejected up front.
        assert!(matches!(greedy_fill(&p, f, 0), Err(FillError::ZeroDelta)));
    }

    #[test]
    fn rejects_non_two_connected_hosts() {
        // A path is not 2-connected (and has no faces to speak of).
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let rot = vec![vec![1], vec![0, 2], vec![1]];
        let p = PlaneGraph::new(g, rot).unwrap();
        assert!(matches!(
            greedy_fill(&p, 0, 1),
            Err(FillError::NotTwoConnected)
        ));
    }

    #[test]
    fn interaction_counts_on_the_wheel_filling() {
        let p = wheel(8);
        let f = rim_face(&p, 8);
        let fill = greedy_fill(&p, f, 1).unwrap();
        // The terminal face interacts only with itself.
        let term = fill
            .faces
            .iter()
            .position(|x| x.kind == FaceKind::Terminal)
            .unwrap();
        let got = interacting_faces(&p, &fill, &fill.faces[term].cycle.clone());
        assert_eq!(got, vec![term]);
        // The start cycle interacts with every face.
        let all = interacting_faces(&p, &fill, &fill.start_cycle.clone());
        assert_eq!(all, (0..fill.faces.len()).collect::<Vec<_>>());
        // The first pocket interacts only with itself.
        let got = interacting_faces(&p, &fill, &fill.faces[0].cycle.clone());
        assert_eq!(got, vec![0]);
    }

    #[test]
    fn isoperimetry_bounds_hold_on_and_off_the_filling() {
        let p = wheel(8);
        let f = rim_face(&p, 8);
        let fill = greedy_fill(&p, f, 1).unwrap();
        let k = 10;
        // On-filling probe: the start cycle.
        let rep = check_isoperimetry(&p, &fill, &fill.start_cycle.clone(), k);
        assert!(rep.on_filling);
        assert_eq!(rep.bound, 8);
        assert_eq!(rep.interacting.len(), fill.faces.len());
        assert!(rep.ok);
        // Off-filling probe: a rim-hub triangle using a spoke H lacks.
        let rep = check_isoperimetry(&p, &fill, &[1, 2, 8], k);
        assert!(!rep.on_filling);
        assert_eq!(rep.bound, (k + 1) * 3);
        assert!(rep.ok);
    }

    #[test]
    fn region_search_masks_vertices_and_edges() {
        let p = wheel(4);
        let f = rim_face(&p, 4);
        // Region = two of the four triangles: {0,1,4} and {1,2,4}.
        let t01 = p.face_of_dart(0, 1);
        let t12 = p.face_of_dart(1, 2);
        let rs = RegionSearch::new(&p, &[t01, t12]);
        assert!(rs.allows(0) && rs.allows(1) && rs.allows(2) && rs.allows(4));
        assert!(!rs.allows(3));
        // Edge 2-3 has no face in the region.
        assert!(!rs.edge_ok(2, 3));
        assert!(rs.edge_ok(0, 1));
        // Distance 0→2 inside the region: via 1 or 4, both length 2.
        assert_eq!(rs.distance(0, 2, None), 2);
        assert_eq!(rs.canonical_path(0, 2), Some(vec![0, 1, 2]));
        // Mark the rim face too and the region still avoids vertex 3.
        assert_eq!(rs.distance(0, 2, Some(1)), INF);
        let _ = f;
    }

    #[test]
    fn canonical_cycle_orients_deterministically() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[2, 1, 3]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[5, 4, 9, 7]), vec![4, 5, 7, 9]);
    }
}
