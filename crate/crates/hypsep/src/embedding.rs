//! Combinatorial plane embeddings.
//!
//! An embedding is a rotation system: for every vertex, the cyclic
//! counterclockwise order of its neighbors. Faces are recovered by the
//! standard dart-walking rule — the dart following `u → v` is `v → w`
//! where `w` is the *predecessor* of `u` in the rotation at `v` — which
//! puts every face on the *left* of each of its darts: bounded faces come
//! out counterclockwise, the outer face clockwise. Construction checks the
//! Euler relation, so a rotation system of positive genus is rejected
//! rather than silently producing nonsense.
//!
//! Face ids are canonical: each face's dart list is rotated so its
//! lexicographically smallest dart comes first, and faces are numbered in
//! order of those leading darts. Two runs over the same rotation system
//! therefore agree on every face id.

use thiserror::Error;

use crate::graph::{Graph, Vertex, INF};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum EmbeddingError {
    #[error("rotation at vertex {v} is not a permutation of its neighbors")]
    RotationMismatch { v: Vertex },
    #[error("rotation system has genus > 0: traced {found} faces, Euler needs {expected}")]
    NotPlanar { found: usize, expected: usize },
    #[error("vertex {v} has no incident triangle; weighted dual needs a triangulation")]
    NotTriangulated { v: Vertex },
}

/// A connected graph together with a planar rotation system and its traced
/// faces.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    g: Graph,
    rot: Vec<Vec<Vertex>>,
    /// `rot_index[v][j]` is the position in `rot[v]` of `neighbors(v)[j]`.
    rot_index: Vec<Vec<usize>>,
    /// Each face as its dart cycle, smallest dart first.
    faces: Vec<Vec<(Vertex, Vertex)>>,
    /// `face_at[v][k]` is the face left of dart `v → rot[v][k]`.
    face_at: Vec<Vec<usize>>,
    /// Designated outer face.
    pub outer: usize,
}

impl PlaneGraph {
    /// Builds the embedding and traces its faces. `rot[v]` must be a
    /// permutation of `g.neighbors(v)`; the face count must satisfy the
    /// Euler relation for the graph's number of components.
    pub fn new(g: Graph, rot: Vec<Vec<Vertex>>) -> Result<PlaneGraph, EmbeddingError> {
        assert_eq!(rot.len(), g.n(), "one rotation per vertex");
        let mut rot_index = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let mut sorted: Vec<Vertex> = rot[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(EmbeddingError::RotationMismatch { v });
            }
            // Invert: for the j-th smallest neighbor, where does it sit in
            // the rotation?
            let mut idx = vec![0usize; rot[v].len()];
            for (pos, &w) in rot[v].iter().enumerate() {
                let j = g.neighbors(v).binary_search(&w).unwrap();
                idx[j] = pos;
            }
            rot_index.push(idx);
        }

        let mut pg = PlaneGraph {
            g,
            rot,
            rot_index,
            faces: Vec::new(),
            face_at: Vec::new(),
            outer: 0,
        };
        pg.trace_faces();
        // A single isolated vertex has no darts to trace but still lives
        // on a sphere with one face.
        if pg.g.n() == 1 && pg.g.m() == 0 {
            pg.faces.push(Vec::new());
        }

        let comps = pg.g.components(None).len();
        let expected = 1 + comps + pg.g.m() - pg.g.n();
        if pg.faces.len() != expected {
            return Err(EmbeddingError::NotPlanar {
                found: pg.faces.len(),
                expected,
            });
        }
        Ok(pg)
    }

    fn trace_faces(&mut self) {
        let n = self.g.n();
        let mut face_at: Vec<Vec<usize>> = (0..n).map(|v| vec![INF; self.rot[v].len()]).collect();
        let mut faces: Vec<Vec<(Vertex, Vertex)>> = Vec::new();
        for v in 0..n {
            for k in 0..self.rot[v].len() {
                if face_at[v][k] != INF {
                    continue;
                }
                let fid = faces.len();
                let mut walk = Vec::new();
                let (mut cv, mut ck) = (v, k);
                loop {
                    face_at[cv][ck] = fid;
                    let head = self.rot[cv][ck];
                    walk.push((cv, head));
                    // Next dart: predecessor of cv in the rotation at head.
                    let p = self.rot_pos(head, cv);
                    let deg = self.rot[head].len();
                    (cv, ck) = (head, (p + deg - 1) % deg);
                    if (cv, ck) == (v, k) {
                        break;
                    }
                }
                faces.push(walk);
            }
        }
        // Canonicalize: rotate each face to start at its smallest dart,
        // then renumber faces by those leading darts.
        for f in &mut faces {
            let lead = f
                .iter()
                .enumerate()
                .min_by_key(|&(_, d)| d)
                .map(|(i, _)| i)
                .unwrap();
            f.rotate_left(lead);
        }
        let mut order: Vec<usize> = (0..faces.len()).collect();
        order.sort_by_key(|&i| faces[i][0]);
        let mut renumber = vec![0usize; faces.len()];
        for (new, &old) in order.iter().enumerate() {
            renumber[old] = new;
        }
        let mut new_faces = vec![Vec::new(); faces.len()];
        for (old, f) in faces.into_iter().enumerate() {
            new_faces[renumber[old]] = f;
        }
        for row in &mut face_at {
            for slot in row.iter_mut() {
                *slot = renumber[*slot];
            }
        }
        self.faces = new_faces;
        self.face_at = face_at;
    }

    /// Position of `u` in the rotation at `v`. `u` must be a neighbor.
    fn rot_pos(&self, v: Vertex, u: Vertex) -> usize {
        let j = self.g.neighbors(v).binary_search(&u).expect("not a neighbor");
        self.rot_index[v][j]
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn m(&self) -> usize {
        self.g.m()
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[Vec<Vertex>] {
        &self.rot
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// The dart cycle of face `f`, smallest dart first.
    pub fn face_darts(&self, f: usize) -> &[(Vertex, Vertex)] {
        &self.faces[f]
    }

    /// Number of darts on the face (edges counted with multiplicity —
    /// a bridge contributes twice to its single face).
    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Distinct vertices on face `f`, sorted.
    pub fn face_vertices(&self, f: usize) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.faces[f].iter().map(|&(u, _)| u).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// The face to the left of dart `u → v`.
    pub fn face_of_dart(&self, u: Vertex, v: Vertex) -> usize {
        self.face_at[u][self.rot_pos(u, v)]
    }

    /// Faces on both sides of edge `{u, v}`: `(left of u→v, left of v→u)`.
    pub fn face_pair(&self, u: Vertex, v: Vertex) -> (usize, usize) {
        (self.face_of_dart(u, v), self.face_of_dart(v, u))
    }

    /// The dart that follows `u → v` around their common left face.
    pub fn next_dart(&self, u: Vertex, v: Vertex) -> (Vertex, Vertex) {
        let p = self.rot_pos(v, u);
        let deg = self.rot[v].len();
        let w = self.rot[v][(p + deg - 1) % deg];
        (v, w)
    }

    /// Any face incident to `v` (the one left of its first rotation dart).
    pub fn some_face_at(&self, v: Vertex) -> usize {
        assert!(!self.rot[v].is_empty(), "isolated vertex {v} has no face");
        self.face_at[v][0]
    }

    /// Splits the faces in two along a simple cycle: label 0 for the side
    /// seen from the left of dart `cycle[0] → cycle[1]`, label 1 for the
    /// other. The cycle is given as its vertex sequence (closed
    /// implicitly); chords are fine and do not block the flood fill.
    pub fn cycle_sides(&self, cycle: &[Vertex]) -> Vec<u8> {
        assert!(cycle.len() >= 3, "cycle needs at least 3 vertices");
        let mut ce: Vec<(Vertex, Vertex)> = (0..cycle.len())
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                (a.min(b), a.max(b))
            })
            .collect();
        ce.sort_unstable();
        let on_cycle = |a: Vertex, b: Vertex| {
            ce.binary_search(&(a.min(b), a.max(b))).is_ok()
        };

        let mut label = vec![u8::MAX; self.faces.len()];
        let seed0 = self.face_of_dart(cycle[0], cycle[1]);
        let seed1 = self.face_of_dart(cycle[1], cycle[0]);
        assert_ne!(seed0, seed1, "cycle edge with the same face on both sides");
        for (seed, side) in [(seed0, 0u8), (seed1, 1u8)] {
            let mut stack = vec![seed];
            label[seed] = side;
            while let Some(f) = stack.pop() {
                for &(u, v) in &self.faces[f] {
                    if on_cycle(u, v) {
                        continue;
                    }
                    let across = self.face_of_dart(v, u);
                    if label[across] == u8::MAX {
                        label[across] = side;
                        stack.push(across);
                    }
                }
            }
        }
        assert!(
            label.iter().all(|&l| l != u8::MAX),
            "cycle does not separate the faces in two"
        );
        label
    }

    /// Side label per vertex under a [`Self::cycle_sides`] labeling:
    /// `None` for cycle vertices, otherwise the label shared by all the
    /// vertex's incident faces.
    pub fn vertex_sides(&self, cycle: &[Vertex], face_label: &[u8]) -> Vec<Option<u8>> {
        let mut on = vec![false; self.n()];
        for &c in cycle {
            on[c] = true;
        }
        (0..self.n())
            .map(|v| {
                if on[v] {
                    None
                } else {
                    Some(face_label[self.some_face_at(v)])
                }
            })
            .collect()
    }

    /// The embedding induced on the kept vertices and edges. Rotations are
    /// inherited (filtered in place), faces are re-traced. An edge
    /// survives iff both endpoints are kept and `keep_edge` approves it.
    pub fn subplane(
        &self,
        keep_vertex: &[bool],
        mut keep_edge: impl FnMut(Vertex, Vertex) -> bool,
    ) -> Subplane {
        let to_old: Vec<Vertex> = (0..self.n()).filter(|&v| keep_vertex[v]).collect();
        let mut from_old = vec![None; self.n()];
        for (new, &old) in to_old.iter().enumerate() {
            from_old[old] = Some(new);
        }
        let mut g = Graph::new(to_old.len());
        let mut rot = Vec::with_capacity(to_old.len());
        for &old in &to_old {
            let filtered: Vec<Vertex> = self.rot[old]
                .iter()
                .copied()
                .filter(|&w| keep_vertex[w] && keep_edge(old, w))
                .map(|w| from_old[w].unwrap())
                .collect();
            let me = from_old[old].unwrap();
            for &w in &filtered {
                if me < w {
                    g.add_edge(me, w);
                }
            }
            rot.push(filtered);
        }
        // Edges must be symmetric under keep_edge for the rotation filter
        // to be consistent; catch asymmetry in debug builds.
        debug_assert!((0..g.n()).all(|v| {
            let mut s = rot[v].clone();
            s.sort_unstable();
            s == g.neighbors(v)
        }));
        let plane = PlaneGraph::new(g, rot).expect("subplane of a plane graph is plane");
        Subplane {
            plane,
            to_old,
            from_old,
        }
    }
}

/// Result of [`PlaneGraph::subplane`]: the induced embedding plus the
/// vertex renumbering in both directions.
pub struct Subplane {
    pub plane: PlaneGraph,
    pub to_old: Vec<Vertex>,
    pub from_old: Vec<Option<Vertex>>,
}

impl PlaneGraph {
    /// Partitions `V ∖ V(cycle)` by side of the cycle: vertices on the
    /// side of `reference_face` are "outside", the rest "inside". Both
    /// lists come back sorted.
    pub fn cycle_split(
        &self,
        cycle: &[Vertex],
        reference_face: usize,
    ) -> (Vec<Vertex>, Vec<Vertex>) {
        assert!(reference_face < self.face_count());
        let labels = self.cycle_sides(cycle);
        let out_label = labels[reference_face];
        let sides = self.vertex_sides(cycle, &labels);
        let mut inside = Vec::new();
        let mut outside = Vec::new();
        for (v, side) in sides.iter().enumerate() {
            match side {
                None => {}
                Some(l) if *l == out_label => outside.push(v),
                Some(_) => inside.push(v),
            }
        }
        (inside, outside)
    }
}

/// A plane graph whose faces carry integer weights — the record of
/// vertices carved away and re-accounted to the face that swallowed them.
/// The invariant `n + total weight = original n` is the caller's to keep;
/// [`Self::conserves`] checks it.
#[derive(Clone, Debug)]
pub struct FaceWeightedPlaneGraph {
    pub plane: PlaneGraph,
    pub face_weight: Vec<usize>,
}

/// One face region of a subgraph: the faces it glues together, the
/// non-subgraph vertices strictly within, and its total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionInfo {
    pub faces: Vec<usize>,
    pub verts: Vec<Vertex>,
    /// `verts.len()` plus the face weights of `faces`.
    pub weight: usize,
}

/// Face-region decomposition relative to a subgraph.
#[derive(Clone, Debug)]
pub struct SubgraphRegions {
    pub region_of_face: Vec<usize>,
    pub regions: Vec<RegionInfo>,
}

impl FaceWeightedPlaneGraph {
    pub fn new(plane: PlaneGraph, face_weight: Vec<usize>) -> FaceWeightedPlaneGraph {
        assert_eq!(face_weight.len(), plane.face_count());
        FaceWeightedPlaneGraph { plane, face_weight }
    }

    /// All weights zero — the starting point before any carving.
    pub fn unweighted(plane: PlaneGraph) -> FaceWeightedPlaneGraph {
        let w = vec![0; plane.face_count()];
        FaceWeightedPlaneGraph {
            plane,
            face_weight: w,
        }
    }

    pub fn total_face_weight(&self) -> usize {
        self.face_weight.iter().sum()
    }

    /// Weight conservation: present vertices plus face weights equal the
    /// original vertex count.
    pub fn conserves(&self, original_n: usize) -> bool {
        self.plane.n() + self.total_face_weight() == original_n
    }

    /// Face regions of the subgraph induced on `sub`: faces are merged
    /// across every edge *not* of the induced subgraph; each region
    /// collects its faces, its strictly interior non-`sub` vertices, and
    /// its weight (interior vertices + contained face weights).
    pub fn subgraph_regions(&self, sub: &[Vertex]) -> SubgraphRegions {
        assert!(!sub.is_empty(), "region decomposition of the empty subgraph");
        let p = &self.plane;
        let mut in_sub = vec![false; p.n()];
        for &v in sub {
            in_sub[v] = true;
        }
        let nf = p.face_count();
        let mut region_of_face = vec![usize::MAX; nf];
        let mut regions: Vec<RegionInfo> = Vec::new();
        for f0 in 0..nf {
            if region_of_face[f0] != usize::MAX {
                continue;
            }
            let rid = regions.len();
            let mut faces = Vec::new();
            let mut stack = vec![f0];
            region_of_face[f0] = rid;
            while let Some(f) = stack.pop() {
                faces.push(f);
                for &(u, v) in p.face_darts(f) {
                    if in_sub[u] && in_sub[v] {
                        continue; // crossing blocked by a subgraph edge
                    }
                    let across = p.face_of_dart(v, u);
                    if region_of_face[across] == usize::MAX {
                        region_of_face[across] = rid;
                        stack.push(across);
                    }
                }
            }
            faces.sort_unstable();
            let weight: usize = faces.iter().map(|&f| self.face_weight[f]).sum();
            regions.push(RegionInfo {
                faces,
                verts: Vec::new(),
                weight,
            });
        }
        // Every non-subgraph vertex sits strictly inside one region: none
        // of its incident edges is blocked, so all its faces agree.
        for v in 0..p.n() {
            if !in_sub[v] {
                let rid = region_of_face[p.some_face_at(v)];
                regions[rid].verts.push(v);
                regions[rid].weight += 1;
            }
        }
        SubgraphRegions {
            region_of_face,
            regions,
        }
    }

    /// Split balance of the subgraph on `sub`: one minus the heaviest
    /// region's share of `original_n`.
    pub fn split_balance(&self, sub: &[Vertex], original_n: usize) -> Rational {
        let regions = self.subgraph_regions(sub);
        let heaviest = regions.regions.iter().map(|r| r.weight).max().unwrap_or(0);
        Rational::ONE - Rational::new(heaviest as i64, original_n as i64)
    }
}

/// The weighted dual of a triangulated face-weighted plane graph.
#[derive(Clone, Debug)]
pub struct DualGraph {
    /// Per face: its carried weight plus one unit for every primal vertex
    /// charged to it.
    pub node_weight: Vec<usize>,
    /// One dual edge per primal edge, in primal lexicographic order.
    pub edges: Vec<DualEdge>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub a: usize,
    pub b: usize,
    pub primal: (Vertex, Vertex),
}

/// Builds the weighted dual: every face becomes a node carrying its face
/// weight; every primal vertex adds one unit to its charge face — the
/// lowest-id triangle incident to it. Parallel dual edges are kept (one
/// per primal edge). Fails if some vertex touches no triangle.
pub fn dual_with_weights(fwp: &FaceWeightedPlaneGraph) -> Result<DualGraph, EmbeddingError> {
    let p = &fwp.plane;
    let mut node_weight = fwp.face_weight.clone();
    for v in 0..p.n() {
        let charge = (0..p.rotation(v).len())
            .map(|k| p.face_at[v][k])
            .filter(|&f| p.face_len(f) == 3)
            .min()
            .ok_or(EmbeddingError::NotTriangulated { v })?;
        node_weight[charge] += 1;
    }
    let edges = p
        .graph()
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = p.face_pair(u, v);
            DualEdge { a, b, primal: (u, v) }
        })
        .collect();
    Ok(DualGraph { node_weight, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle with counterclockwise rotations.
    fn triangle() -> PlaneGraph {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        PlaneGraph::new(g, rot).unwrap()
    }

    /// Planar K4: vertex 3 in the middle of triangle 0,1,2.
    fn k4() -> PlaneGraph {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let rot = vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ];
        PlaneGraph::new(g, rot).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let pg = triangle();
        assert_eq!(pg.face_count(), 2);
        assert_eq!(pg.face_len(0), 3);
        assert_eq!(pg.face_len(1), 3);
        // Canonical order: face 0 leads with dart (0,1), face 1 with (0,2).
        assert_eq!(pg.face_darts(0)[0], (0, 1));
        assert_eq!(pg.face_darts(1)[0], (0, 2));
        // The two sides of edge {0,1} are the two faces.
        assert_eq!(pg.face_pair(0, 1), (0, 1));
    }

    #[test]
    fn k4_has_four_triangles() {
        let pg = k4();
        assert_eq!(pg.face_count(), 4);
        for f in 0..4 {
            assert_eq!(pg.face_len(f), 3);
        }
    }

    #[test]
    fn twisted_rotation_is_rejected() {
        // Flip the orientation at one vertex of K4: the rotation system
        // then describes a torus embedding with 2 faces, not 4.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let rot = vec![
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 2, 1], // reversed
        ];
        match PlaneGraph::new(g, rot) {
            Err(EmbeddingError::NotPlanar { found, expected }) => {
                assert_eq!(expected, 4);
                assert!(found < 4, "twisted K4 traced {found} faces");
            }
            other => panic!("expected NotPlanar, got {other:?}"),
        }
    }

    #[test]
    fn bad_rotation_content_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let rot = vec![vec![1, 1], vec![2, 0], vec![0, 1]];
        assert!(matches!(
            PlaneGraph::new(g, rot),
            Err(EmbeddingError::RotationMismatch { v: 0 })
        ));
    }

    #[test]
    fn cycle_sides_of_k4_outer_triangle() {
        let pg = k4();
        // Cycle 0,1,2 (the outer triangle of this drawing): one side holds
        // the three inner triangular faces (everything incident to vertex
        // 3), the other is just the outer face.
        let label = pg.cycle_sides(&[0, 1, 2]);
        let inner_side = label[pg.some_face_at(3)];
        let inner_count = label.iter().filter(|&&l| l == inner_side).count();
        assert_eq!(inner_count, 3);
        let vs = pg.vertex_sides(&[0, 1, 2], &label);
        assert_eq!(vs[0], None);
        assert_eq!(vs[3], Some(inner_side));
    }

    #[test]
    fn subplane_drops_vertex_and_stays_plane() {
        let pg = k4();
        let keep = vec![true, true, true, false];
        let sub = pg.subplane(&keep, |_, _| true);
        assert_eq!(sub.plane.n(), 3);
        assert_eq!(sub.plane.m(), 3);
        assert_eq!(sub.plane.face_count(), 2);
        assert_eq!(sub.to_old, vec![0, 1, 2]);
    }

    #[test]
    fn subplane_can_drop_edges_only() {
        let pg = k4();
        let keep = vec![true; 4];
        // Cut the edge {0,3}: faces merge from 4 to 3.
        let sub = pg.subplane(&keep, |a, b| !(a.min(b) == 0 && a.max(b) == 3));
        assert_eq!(sub.plane.m(), 5);
        assert_eq!(sub.plane.face_count(), 3);
    }

    #[test]
    fn next_dart_walks_a_face() {
        let pg = triangle();
        let mut dart = (0, 1);
        let mut seen = vec![dart];
        loop {
            dart = pg.next_dart(dart.0, dart.1);
            if dart == (0, 1) {
                break;
            }
            seen.push(dart);
        }
        assert_eq!(seen, vec![(0, 1), (1, 2), (2, 0)]);
    }

    /// Wheel on 5 vertices: rim 0..3 counterclockwise, hub 4 in the
    /// middle. Rotations written from the planar drawing.
    fn w5() -> PlaneGraph {
        let g = Graph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        );
        let rot = vec![
            vec![1, 4, 3],
            vec![2, 4, 0],
            vec![3, 4, 1],
            vec![0, 4, 2],
            vec![0, 1, 2, 3],
        ];
        PlaneGraph::new(g, rot).unwrap()
    }

    #[test]
    fn faces_lie_left_of_their_darts() {
        let pg = w5();
        assert_eq!(pg.face_count(), 5);
        // Rim dart 0→1 runs counterclockwise, so the hub triangle is on
        // its left; the reversed dart sees the outer face (length 4).
        let f = pg.face_of_dart(0, 1);
        assert_eq!(pg.face_vertices(f), vec![0, 1, 4]);
        let outer = pg.face_of_dart(1, 0);
        assert_eq!(pg.face_len(outer), 4);
        assert_eq!(pg.face_vertices(outer), vec![0, 1, 2, 3]);
    }

    #[test]
    fn wheel_rim_split() {
        let pg = w5();
        let outer = pg.face_of_dart(1, 0);
        let (inside, outside) = pg.cycle_split(&[0, 1, 2, 3], outer);
        assert_eq!(inside, vec![4]);
        assert!(outside.is_empty());
    }

    /// 3×3 grid in rook layout, row-major ids, canonical E/N/W/S rotation.
    fn grid3() -> PlaneGraph {
        let n = 3;
        let id = |r: usize, c: usize| r * n + c;
        let mut g = Graph::new(n * n);
        let mut rot = vec![Vec::new(); n * n];
        for r in 0..n {
            for c in 0..n {
                let mut order = Vec::new();
                if c + 1 < n {
                    order.push(id(r, c + 1)); // east
                }
                if r > 0 {
                    order.push(id(r - 1, c)); // north
                }
                if c > 0 {
                    order.push(id(r, c - 1)); // west
                }
                if r + 1 < n {
                    order.push(id(r + 1, c)); // south
                }
                for &w in &order {
                    if id(r, c) < w {
                        g.add_edge(id(r, c), w);
                    }
                }
                rot[id(r, c)] = order;
            }
        }
        PlaneGraph::new(g, rot).unwrap()
    }

    #[test]
    fn grid_ring_isolates_center() {
        let pg = grid3();
        assert_eq!(pg.face_count(), 5);
        let ring = [0, 1, 2, 5, 8, 7, 6, 3];
        let outer = pg.face_of_dart(0, 1); // boundary walked clockwise
        assert_eq!(pg.face_len(outer), 8);
        let (inside, outside) = pg.cycle_split(&ring, outer);
        assert_eq!(inside, vec![4]);
        assert!(outside.is_empty());
    }

    #[test]
    fn split_balance_of_wheel_rim() {
        let fwp = FaceWeightedPlaneGraph::unweighted(w5());
        assert_eq!(
            fwp.split_balance(&[0, 1, 2, 3], 5),
            Rational::ONE - Rational::new(1, 5)
        );
        // The whole vertex set splits perfectly.
        assert_eq!(fwp.split_balance(&[0, 1, 2, 3, 4], 5), Rational::ONE);
    }

    #[test]
    fn regions_carry_face_weights() {
        let pg = w5();
        let hub_face = pg.face_of_dart(0, 1);
        let mut weights = vec![0; pg.face_count()];
        weights[hub_face] = 7;
        let fwp = FaceWeightedPlaneGraph::new(pg, weights);
        assert!(fwp.conserves(12)); // 5 live vertices + 7 carved
        let regions = fwp.subgraph_regions(&[0, 1, 2, 3]);
        assert_eq!(regions.regions.len(), 2);
        let heavy = regions.regions.iter().map(|r| r.weight).max().unwrap();
        assert_eq!(heavy, 1 + 7); // hub vertex + carved weight inside
        assert_eq!(
            fwp.split_balance(&[0, 1, 2, 3], 12),
            Rational::ONE - Rational::new(8, 12)
        );
    }

    #[test]
    fn weighted_dual_of_k4() {
        let fwp = FaceWeightedPlaneGraph::unweighted(k4());
        let dual = dual_with_weights(&fwp).unwrap();
        assert_eq!(dual.node_weight.len(), 4);
        assert_eq!(dual.node_weight.iter().sum::<usize>(), 4);
        assert!(dual.node_weight.iter().all(|&w| w <= 3));
        assert_eq!(dual.edges.len(), 6);
    }

    #[test]
    fn weighted_dual_keeps_parallel_edges() {
        let fwp = FaceWeightedPlaneGraph::unweighted(triangle());
        let dual = dual_with_weights(&fwp).unwrap();
        assert_eq!(dual.node_weight.len(), 2);
        assert_eq!(dual.edges.len(), 3);
        assert_eq!(dual.node_weight.iter().sum::<usize>(), 3);
    }

    #[test]
    fn dual_requires_triangles() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let rot = vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]];
        let pg = PlaneGraph::new(g, rot).unwrap();
        let fwp = FaceWeightedPlaneGraph::unweighted(pg);
        assert!(matches!(
            dual_with_weights(&fwp),
            Err(EmbeddingError::NotTriangulated { v: 0 })
        ));
    }
}
