//! Star triangulation and balanced dual-tree cuts.
//!
//! Placing a center vertex in every face of a 2-connected plane graph
//! and joining it to the face's corners triangulates the sphere without
//! touching distances between real vertices (centers are new). In the
//! triangulation, the duals of the non-tree edges of any spanning tree
//! form a spanning tree of the dual; removing one dual edge splits the
//! triangles into the two sides of the primal edge's fundamental cycle.
//! Scanning all dual edges for the best split yields a cycle separator
//! whose sides are balanced with respect to any triangle weighting —
//! the engine behind both the halving separator and the final
//! path-extraction step.

use crate::embedding::PlaneGraph;
use crate::graph::{Graph, Vertex, INF};

/// A plane graph with a star center in every face of its base.
#[derive(Clone, Debug)]
pub struct StarSystem {
    /// The triangulated plane graph; vertices `0..base_n` are the base
    /// vertices, vertex `base_n + f` is the center of base face `f`.
    pub plane: PlaneGraph,
    pub base_n: usize,
    /// For each face of the triangulation, the base face it lies in.
    pub base_face_of_tri: Vec<usize>,
}

impl StarSystem {
    /// Star-triangulates every face. Faces of the base must be simple
    /// cycles (guaranteed by 2-connectivity).
    pub fn new(base: &PlaneGraph) -> StarSystem {
        let n = base.n();
        let nf = base.face_count();
        let mut g = Graph::new(n + nf);
        for (u, v) in base.graph().edges() {
            g.add_edge(u, v);
        }
        for f in 0..nf {
            let vs = base.face_vertices(f);
            debug_assert_eq!(
                vs.iter().collect::<std::collections::BTreeSet<_>>().len(),
                vs.len(),
                "face {f} is not simple; star triangulation needs a 2-connected base"
            );
            for &v in &vs {
                g.add_edge(n + f, v);
            }
        }
        // Rotations: the center of face f sees the face boundary in
        // trace order. A real vertex keeps its rotation with the center
        // of the face at corner k spliced in after neighbour k.
        let mut rot: Vec<Vec<Vertex>> = Vec::with_capacity(n + nf);
        for v in 0..n {
            let old = base.rotation(v);
            let mut row = Vec::with_capacity(2 * old.len());
            for (k, &w) in old.iter().enumerate() {
                row.push(w);
                row.push(n + base.face_of_dart(v, w));
                let _ = k;
            }
            rot.push(row);
        }
        for f in 0..nf {
            rot.push(base.face_darts(f).iter().map(|&(_, head)| head).collect());
        }
        let plane = PlaneGraph::new(g, rot).expect("star rotations stay planar");
        debug_assert_eq!(plane.face_count(), 2 * base.m());
        let base_face_of_tri = (0..plane.face_count())
            .map(|t| {
                debug_assert_eq!(plane.face_len(t), 3);
                let center = plane
                    .face_vertices(t)
                    .into_iter()
                    .find(|&v| v >= n)
                    .expect("every triangle has a center corner");
                center - n
            })
            .collect();
        StarSystem { plane, base_n: n, base_face_of_tri }
    }

    pub fn is_center(&self, v: Vertex) -> bool {
        v >= self.base_n
    }

    pub fn center_of_face(&self, f: usize) -> Vertex {
        self.base_n + f
    }

    /// Per-triangle weights charging `vert_weight[v]` to the lowest
    /// triangle incident to each real vertex.
    pub fn charge_vertices(&self, vert_weight: &[usize]) -> Vec<usize> {
        assert_eq!(vert_weight.len(), self.base_n);
        let mut w = vec![0usize; self.plane.face_count()];
        let first = self.first_triangle_at();
        for v in 0..self.base_n {
            w[first[v].expect("every real vertex lies on a triangle")] += vert_weight[v];
        }
        w
    }

    /// Lowest incident triangle per vertex of the triangulation.
    pub fn first_triangle_at(&self) -> Vec<Option<usize>> {
        let mut first = vec![None; self.plane.n()];
        for t in 0..self.plane.face_count() {
            for &(a, _) in self.plane.face_darts(t) {
                if first[a].is_none() {
                    first[a] = Some(t);
                }
            }
        }
        first
    }

    /// Lowest triangle inside each base face.
    pub fn first_triangle_in_face(&self) -> Vec<usize> {
        let nf = self.plane.n() - self.base_n;
        let mut first = vec![usize::MAX; nf];
        for (t, &f) in self.base_face_of_tri.iter().enumerate() {
            if first[f] == usize::MAX {
                first[f] = t;
            }
        }
        first
    }
}

/// Canonical BFS tree: distances plus, for every reached non-root
/// vertex, the lowest neighbour one step closer to the root.
pub fn canonical_parents(g: &Graph, root: Vertex) -> (Vec<usize>, Vec<Option<Vertex>>) {
    let dist = g.bfs(root);
    let mut parent = vec![None; g.n()];
    for v in 0..g.n() {
        if v != root && dist[v] != INF {
            parent[v] = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| dist[w] + 1 == dist[v])
                .min();
        }
    }
    (dist, parent)
}

/// A fundamental-cycle cut of a triangulated plane graph.
#[derive(Clone, Debug)]
pub struct DualCut {
    /// The non-tree primal edge whose dual edge was removed.
    pub edge: (Vertex, Vertex),
    /// Fundamental cycle `u … lca … v` (closing edge `v–u` implied).
    pub cycle: Vec<Vertex>,
    /// Triangle weight on the two sides of the cycle; `sides.0` is the
    /// side holding the dual subtree under the removed edge.
    pub sides: (usize, usize),
}

impl DualCut {
    pub fn max_side(&self) -> usize {
        self.sides.0.max(self.sides.1)
    }
}

/// Scans every non-tree edge of the spanning tree given by `parent` and
/// returns the one whose fundamental cycle splits the triangle weights
/// best (smallest heavier side; ties to the lexicographically smallest
/// primal edge). Returns `None` when the graph is a tree.
pub fn best_dual_cut(
    plane: &PlaneGraph,
    dist: &[usize],
    parent: &[Option<Vertex>],
    tri_weight: &[usize],
) -> Option<DualCut> {
    let nf = plane.face_count();
    let is_tree_edge = |u: Vertex, v: Vertex| parent[u] == Some(v) || parent[v] == Some(u);
    // Dual spanning tree: one node per face, one edge per non-tree
    // primal edge.
    let mut non_tree: Vec<(usize, usize, (Vertex, Vertex))> = Vec::new();
    let mut dual_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nf];
    for (u, v) in plane.graph().edges() {
        if is_tree_edge(u, v) {
            continue;
        }
        let a = plane.face_of_dart(u, v);
        let b = plane.face_of_dart(v, u);
        let e = non_tree.len();
        non_tree.push((a, b, (u, v)));
        dual_adj[a].push((b, e));
        dual_adj[b].push((a, e));
    }
    if non_tree.is_empty() {
        return None;
    }
    debug_assert_eq!(non_tree.len(), nf - 1, "non-tree duals span the dual graph");

    // Root the dual tree at face 0 and accumulate subtree weights.
    let total: usize = tri_weight.iter().sum();
    let mut order = Vec::with_capacity(nf);
    let mut seen = vec![false; nf];
    let mut up_edge = vec![usize::MAX; nf];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(f) = stack.pop() {
        order.push(f);
        for &(to, e) in &dual_adj[f] {
            if !seen[to] {
                seen[to] = true;
                up_edge[to] = e;
                stack.push(to);
            }
        }
    }
    debug_assert_eq!(order.len(), nf);
    let mut below = tri_weight.to_vec();
    let mut side_of_edge = vec![0usize; non_tree.len()];
    for &f in order.iter().rev() {
        if f == 0 {
            continue;
        }
        let e = up_edge[f];
        side_of_edge[e] = below[f];
        let (a, b, _) = non_tree[e];
        let parent_face = if up_edge[a] == e { b } else { a };
        below[parent_face] += below[f];
    }

    // Best split; the scan order is the lexicographic primal edge
    // order, so the first strict improvement rule is deterministic.
    let mut best: Option<(usize, usize)> = None; // (max side, edge idx)
    for (e, &w) in side_of_edge.iter().enumerate() {
        let hi = w.max(total - w);
        if best.map_or(true, |(bh, _)| hi < bh) {
            best = Some((hi, e));
        }
    }
    let (_, e) = best.expect("at least one non-tree edge");
    let (_, _, (u, v)) = non_tree[e];

    // Fundamental cycle via the spanning tree.
    let mut pu = vec![u];
    let mut pv = vec![v];
    let (mut a, mut b) = (u, v);
    while dist[a] > dist[b] {
        a = parent[a].expect("below the root");
        pu.push(a);
    }
    while dist[b] > dist[a] {
        b = parent[b].expect("below the root");
        pv.push(b);
    }
    while a != b {
        a = parent[a].expect("distinct branches meet at the root");
        pu.push(a);
        b = parent[b].expect("distinct branches meet at the root");
        pv.push(b);
    }
    pv.pop();
    pv.reverse();
    pu.extend(pv);
    debug_assert!(pu.len() >= 3);
    let w_sub = side_of_edge[e];
    Some(DualCut { edge: (u, v), cycle: pu, sides: (w_sub, total - w_sub) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cylinder;

    #[test]
    fn star_of_the_cube_is_a_triangulation() {
        let cube = cylinder(4, 2).unwrap();
        let stars = StarSystem::new(&cube);
        assert_eq!(stars.plane.n(), 8 + 6);
        assert_eq!(stars.plane.m(), 3 * 12);
        assert_eq!(stars.plane.face_count(), 2 * 12);
        assert!((0..stars.plane.face_count()).all(|t| stars.plane.face_len(t) == 3));
        // Each base face contributes as many triangles as its length.
        let mut per_face = vec![0usize; 6];
        for &f in &stars.base_face_of_tri {
            per_face[f] += 1;
        }
        assert_eq!(per_face, vec![4; 6]);
    }

    #[test]
    fn dual_cut_splits_a_triangle_evenly() {
        let c3 = cylinder(3, 1).unwrap();
        let stars = StarSystem::new(&c3);
        let (dist, parent) = canonical_parents(stars.plane.graph(), 0);
        let w = stars.charge_vertices(&[1, 1, 1]);
        assert_eq!(w.iter().sum::<usize>(), 3);
        let cut = best_dual_cut(&stars.plane, &dist, &parent, &w).unwrap();
        assert_eq!(cut.max_side(), 2);
        // The cycle is a closed walk of the star plane.
        let g = stars.plane.graph();
        for i in 0..cut.cycle.len() {
            let (x, y) = (cut.cycle[i], cut.cycle[(i + 1) % cut.cycle.len()]);
            assert!(g.has_edge(x, y));
        }
    }

    #[test]
    fn dual_cut_balances_a_cylinder() {
        let c = cylinder(4, 4).unwrap();
        let stars = StarSystem::new(&c);
        let (dist, parent) = canonical_parents(stars.plane.graph(), 0);
        let w = stars.charge_vertices(&vec![1; 16]);
        let cut = best_dual_cut(&stars.plane, &dist, &parent, &w).unwrap();
        assert_eq!(cut.sides.0 + cut.sides.1, 16);
        // A fundamental-cycle split of unit weights is never worse than
        // two thirds against one third here.
        assert!(cut.max_side() <= 11, "got {:?}", cut.sides);
        // Deterministic.
        let again = best_dual_cut(&stars.plane, &dist, &parent, &w).unwrap();
        assert_eq!(again.cycle, cut.cycle);
        assert_eq!(again.edge, cut.edge);
    }
}
