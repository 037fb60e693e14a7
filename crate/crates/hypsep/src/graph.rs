//! Undirected simple graphs as sorted adjacency lists, with the
//! deterministic search primitives the rest of the crate is built on.
//!
//! Determinism is a hard requirement here: separators, divisions and the
//! approximation schemes must reproduce bit-for-bit across runs, so every
//! tie in a traversal is broken by vertex number. Adjacency lists are kept
//! sorted, BFS queues pop in insertion order with sources seeded in sorted
//! order, and shortest paths are reconstructed by always stepping to the
//! lowest-numbered predecessor. The path produced that way is called the
//! *canonical* shortest path between its endpoints, and the whole crate
//! agrees on it.

use std::collections::VecDeque;

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

/// Distance value for "unreachable".
pub const INF: usize = usize::MAX;

/// An undirected simple graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted ascending; parallel edges and
/// self-loops are rejected at insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Inserts edge `{u, v}`, keeping adjacency sorted. Duplicate edges are
    /// ignored; self-loops are a caller bug.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "self-loop at vertex {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u},{v}) out of range");
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos2 = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos2, u);
            self.m += 1;
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Single-source BFS distances.
    pub fn bfs(&self, src: Vertex) -> Vec<usize> {
        self.bfs_limited(&[src], None, None)
    }

    /// Multi-source BFS distances (all sources at distance 0).
    pub fn bfs_multi(&self, sources: &[Vertex]) -> Vec<usize> {
        self.bfs_limited(sources, None, None)
    }

    /// BFS restricted to `allowed` vertices (when given) and cut off beyond
    /// distance `cap` (when given). Sources outside `allowed` are skipped.
    /// Sources are seeded in sorted order so reconstruction is stable no
    /// matter how the caller ordered them.
    pub fn bfs_limited(
        &self,
        sources: &[Vertex],
        allowed: Option<&[bool]>,
        cap: Option<usize>,
    ) -> Vec<usize> {
        let mut dist = vec![INF; self.n()];
        let mut srcs: Vec<Vertex> = sources.to_vec();
        srcs.sort_unstable();
        srcs.dedup();
        let mut queue = VecDeque::new();
        for &s in &srcs {
            if allowed.map_or(true, |a| a[s]) && dist[s] == INF {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            if let Some(c) = cap {
                if dist[u] >= c {
                    continue;
                }
            }
            for &w in &self.adj[u] {
                if dist[w] == INF && allowed.map_or(true, |a| a[w]) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Walks from `from` down a BFS distance field to a distance-0 vertex,
    /// always stepping to the lowest-numbered neighbor that is one closer.
    /// Returns the path oriented source → `from`.
    pub fn descend(&self, dist: &[usize], from: Vertex) -> Vec<Vertex> {
        assert!(dist[from] != INF, "descend from unreachable vertex {from}");
        let mut path = vec![from];
        let mut cur = from;
        while dist[cur] > 0 {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&w| dist[w] != INF && dist[w] + 1 == dist[cur])
                .expect("broken BFS distance field");
            path.push(next);
            cur = next;
        }
        path.reverse();
        path
    }

    /// The canonical shortest `u`–`v` path: BFS from `min(u, v)`,
    /// reconstructed through lowest-numbered predecessors, then oriented
    /// from `u` to `v`. `None` if `v` is unreachable from `u`.
    pub fn canonical_shortest_path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        self.canonical_shortest_path_limited(u, v, None)
    }

    /// As [`Self::canonical_shortest_path`], restricted to `allowed`.
    pub fn canonical_shortest_path_limited(
        &self,
        u: Vertex,
        v: Vertex,
        allowed: Option<&[bool]>,
    ) -> Option<Vec<Vertex>> {
        let root = u.min(v);
        let far = u.max(v);
        let dist = self.bfs_limited(&[root], allowed, None);
        if dist[far] == INF {
            return None;
        }
        let mut path = self.descend(&dist, far);
        if u != root {
            path.reverse();
        }
        Some(path)
    }

    /// Shortest-path distance, or `INF` if disconnected.
    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        self.bfs(u)[v]
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member. With `allowed`, only permitted vertices are considered.
    pub fn components(&self, allowed: Option<&[bool]>) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] || !allowed.map_or(true, |a| a[s]) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] && allowed.map_or(true, |a| a[w]) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components(None).len() == 1
    }

    /// Induced subgraph on `verts` (sorted, deduplicated). Vertex `i` of the
    /// result is `verts[i]`; map back through the slice.
    pub fn induced(&self, verts: &[Vertex]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for &w in &self.adj[u] {
                if w > u {
                    if let Ok(j) = verts.binary_search(&w) {
                        g.add_edge(i, j);
                    }
                }
            }
        }
        g
    }
}

/// Splits an even-degree edge set into edge-disjoint simple cycles.
///
/// The edges must be distinct (no multiset) and every vertex must have
/// even degree in them — the shape produced by symmetric differences of
/// closed walks. The decomposition is deterministic: walks start at the
/// lowest live vertex, always leave through the lowest unused edge, and a
/// cycle is peeled the moment the walk revisits a vertex on its stack.
/// Each returned cycle lists its vertices once, in walk order.
pub fn decompose_into_simple_cycles(edges: &[(Vertex, Vertex)]) -> Vec<Vec<Vertex>> {
    if edges.is_empty() {
        return Vec::new();
    }
    // Local compact adjacency with "used" flags.
    let mut verts: Vec<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let idx = |v: Vertex| verts.binary_search(&v).unwrap();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()]; // (nbr, edge id)
    for (e, &(a, b)) in edges.iter().enumerate() {
        adj[idx(a)].push((idx(b), e));
        adj[idx(b)].push((idx(a), e));
    }
    for l in &mut adj {
        l.sort_unstable();
        debug_assert!(l.len() % 2 == 0, "odd degree in closed-walk edge set");
    }
    let mut used = vec![false; edges.len()];
    let mut next_slot = vec![0usize; verts.len()];
    let mut on_stack = vec![usize::MAX; verts.len()];
    let mut cycles = Vec::new();
    for start in 0..verts.len() {
        let mut stack: Vec<usize> = Vec::new();
        let push = |stack: &mut Vec<usize>, on_stack: &mut Vec<usize>, v: usize| {
            on_stack[v] = stack.len();
            stack.push(v);
        };
        if next_slot[start] >= adj[start].len() {
            continue;
        }
        push(&mut stack, &mut on_stack, start);
        while let Some(&v) = stack.last() {
            // Advance past used edges.
            while next_slot[v] < adj[v].len() && used[adj[v][next_slot[v]].1] {
                next_slot[v] += 1;
            }
            if next_slot[v] == adj[v].len() {
                on_stack[v] = usize::MAX;
                stack.pop();
                continue;
            }
            let (w, e) = adj[v][next_slot[v]];
            used[e] = true;
            if on_stack[w] != usize::MAX {
                // Peel the cycle w .. v off the stack.
                let at = on_stack[w];
                let cyc: Vec<Vertex> = stack[at..].iter().map(|&i| verts[i]).collect();
                debug_assert!(cyc.len() >= 3, "parallel edge produced a 2-cycle");
                for &i in &stack[at + 1..] {
                    on_stack[i] = usize::MAX;
                }
                stack.truncate(at + 1);
                cycles.push(cyc);
            } else {
                push(&mut stack, &mut on_stack, w);
            }
        }
    }
    debug_assert!(used.iter().all(|&u| u), "leftover edges after decomposition");
    cycles
}

/// True iff the graph is 2-connected: connected, at least 3 vertices, and
/// free of cut vertices.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && BlockCutTree::new(g).cut_vertices.is_empty()
}

/// Nodes of the block–cut tree: biconnected blocks first, then cut
/// vertices. The flat id of `Block(i)` is `i`; of `Cut(j)` it is
/// `blocks.len() + j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BctNode {
    Block(usize),
    Cut(usize),
}

/// The block–cut tree of a connected graph: biconnected blocks, cut
/// vertices, and the bipartite tree between them, annotated with the
/// vertex weight hanging off each (block, cut) edge.
///
/// Weights count *graph* vertices. The two sides of a tree edge share its
/// cut vertex, so their weights sum to `n + 1`.
#[derive(Clone, Debug)]
pub struct BlockCutTree {
    /// Vertex set of each block, sorted. Blocks appear in the order the
    /// DFS closes them, which is deterministic.
    pub blocks: Vec<Vec<Vertex>>,
    /// All cut vertices, sorted.
    pub cut_vertices: Vec<Vertex>,
    /// Per block, its cut vertices (sorted).
    pub block_cuts: Vec<Vec<Vertex>>,
    /// Per cut vertex (indexed as in `cut_vertices`), the blocks containing
    /// it, ascending.
    pub cut_blocks: Vec<Vec<usize>>,
    /// `beyond_weight[b][k]`: for the tree edge between block `b` and its
    /// `k`-th cut vertex `x`, the number of graph vertices on the far side
    /// of `x` — counting `x` itself but nothing else of block `b`'s side.
    pub beyond_weight: Vec<Vec<usize>>,
    n: usize,
}

impl BlockCutTree {
    /// Builds the tree. The graph must be connected (single-vertex graphs
    /// count as one block).
    pub fn new(g: &Graph) -> BlockCutTree {
        let n = g.n();
        assert!(n > 0, "block-cut tree of the empty graph");
        debug_assert!(g.is_connected(), "block-cut tree needs a connected graph");

        let mut disc = vec![INF; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0usize;
        let mut estack: Vec<(Vertex, Vertex)> = Vec::new();
        let mut block_edge_sets: Vec<Vec<(Vertex, Vertex)>> = Vec::new();

        struct Frame {
            v: Vertex,
            parent: Vertex,
            idx: usize,
        }

        for start in 0..n {
            if disc[start] != INF {
                continue;
            }
            if g.degree(start) == 0 {
                disc[start] = timer;
                timer += 1;
                block_edge_sets.push(Vec::new()); // singleton block, patched below
                continue;
            }
            disc[start] = timer;
            low[start] = timer;
            timer += 1;
            let mut root_children = 0usize;
            let mut stack = vec![Frame {
                v: start,
                parent: INF,
                idx: 0,
            }];
            while let Some(f) = stack.last_mut() {
                let v = f.v;
                let parent = f.parent;
                if f.idx < g.neighbors(v).len() {
                    let w = g.neighbors(v)[f.idx];
                    f.idx += 1;
                    if disc[w] == INF {
                        estack.push((v, w));
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == start {
                            root_children += 1;
                        }
                        stack.push(Frame {
                            v: w,
                            parent: v,
                            idx: 0,
                        });
                    } else if w != parent && disc[w] < disc[v] {
                        estack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(pf) = stack.last() {
                        let u = pf.v;
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            if u != start {
                                is_cut[u] = true;
                            }
                            let mut be = Vec::new();
                            while let Some(&(a, b)) = estack.last() {
                                estack.pop();
                                be.push((a, b));
                                if (a, b) == (u, v) {
                                    break;
                                }
                            }
                            block_edge_sets.push(be);
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[start] = true;
            }
        }

        // Vertex sets per block (singleton blocks were left empty above).
        let mut blocks: Vec<Vec<Vertex>> = Vec::with_capacity(block_edge_sets.len());
        {
            let mut singleton_iter = (0..n).filter(|&v| g.degree(v) == 0);
            for be in &block_edge_sets {
                if be.is_empty() {
                    let v = singleton_iter.next().expect("singleton bookkeeping");
                    blocks.push(vec![v]);
                } else {
                    let mut vs: Vec<Vertex> = be.iter().flat_map(|&(a, b)| [a, b]).collect();
                    vs.sort_unstable();
                    vs.dedup();
                    blocks.push(vs);
                }
            }
        }

        let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| is_cut[v]).collect();
        let cut_id = |v: Vertex| cut_vertices.binary_search(&v).ok();

        let block_cuts: Vec<Vec<Vertex>> = blocks
            .iter()
            .map(|vs| vs.iter().copied().filter(|&v| is_cut[v]).collect())
            .collect();
        let mut cut_blocks = vec![Vec::new(); cut_vertices.len()];
        for (b, cuts) in block_cuts.iter().enumerate() {
            for &x in cuts {
                cut_blocks[cut_id(x).unwrap()].push(b);
            }
        }

        let mut bct = BlockCutTree {
            blocks,
            cut_vertices,
            block_cuts,
            cut_blocks,
            beyond_weight: Vec::new(),
            n,
        };
        bct.beyond_weight = bct.compute_beyond_weights();
        bct
    }

    pub fn node_count(&self) -> usize {
        self.blocks.len() + self.cut_vertices.len()
    }

    pub fn node_id(&self, node: BctNode) -> usize {
        match node {
            BctNode::Block(i) => i,
            BctNode::Cut(j) => self.blocks.len() + j,
        }
    }

    pub fn node_of_id(&self, id: usize) -> BctNode {
        if id < self.blocks.len() {
            BctNode::Block(id)
        } else {
            BctNode::Cut(id - self.blocks.len())
        }
    }

    /// Graph vertices owned exclusively by this node: non-cut vertices for
    /// a block, the vertex itself for a cut.
    pub fn own_weight(&self, node: BctNode) -> usize {
        match node {
            BctNode::Block(i) => self.blocks[i].len() - self.block_cuts[i].len(),
            BctNode::Cut(_) => 1,
        }
    }

    pub fn cut_index(&self, v: Vertex) -> Option<usize> {
        self.cut_vertices.binary_search(&v).ok()
    }

    fn tree_adj(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for (b, cuts) in self.block_cuts.iter().enumerate() {
            for &x in cuts {
                let c = self.blocks.len() + self.cut_index(x).unwrap();
                adj[b].push(c);
                adj[c].push(b);
            }
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// For each (block, cut) tree edge, the number of graph vertices on the
    /// cut's side (the cut vertex itself included).
    fn compute_beyond_weights(&self) -> Vec<Vec<usize>> {
        let adj = self.tree_adj();
        let nodes = self.node_count();
        if nodes == 0 {
            return Vec::new();
        }
        // Iterative rooted DFS from node 0 for subtree own-weight sums.
        let mut parent = vec![INF; nodes];
        let mut order = Vec::with_capacity(nodes);
        let mut stack = vec![0usize];
        let mut seen = vec![false; nodes];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    stack.push(w);
                }
            }
        }
        debug_assert_eq!(order.len(), nodes, "block-cut tree is disconnected");
        let mut sub = vec![0usize; nodes];
        for &u in order.iter().rev() {
            sub[u] += self.own_weight(self.node_of_id(u));
            if parent[u] != INF {
                sub[parent[u]] += sub[u];
            }
        }
        let total: usize = self.n;

        self.block_cuts
            .iter()
            .enumerate()
            .map(|(b, cuts)| {
                cuts.iter()
                    .map(|&x| {
                        let c = self.blocks.len() + self.cut_index(x).unwrap();
                        // Own-weight sum of the cut's side of edge (b, c);
                        // that side's vertex union already contains x, so
                        // the own-weight sum *is* the union size.
                        if parent[c] == b {
                            sub[c]
                        } else {
                            debug_assert_eq!(parent[b], c);
                            total - sub[b]
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// The weight-centroid of the tree: orient every edge toward its
    /// heavier side (tie: toward the lower node id) and return the unique
    /// sink. If ties produce several sinks, the one with the larger own
    /// weight wins, then the lower id.
    pub fn find_sink(&self) -> BctNode {
        let nodes = self.node_count();
        if nodes == 1 {
            return self.node_of_id(0);
        }
        let mut outdeg = vec![0usize; nodes];
        for (b, cuts) in self.block_cuts.iter().enumerate() {
            for (k, &x) in cuts.iter().enumerate() {
                let c = self.blocks.len() + self.cut_index(x).unwrap();
                let w_cut_side = self.beyond_weight[b][k];
                let w_block_side = self.n + 1 - w_cut_side;
                // Direct the edge toward the heavier side's endpoint; the
                // other endpoint pays an out-edge.
                if w_block_side > w_cut_side {
                    outdeg[c] += 1;
                } else if w_cut_side > w_block_side {
                    outdeg[b] += 1;
                } else if b < c {
                    outdeg[c] += 1;
                } else {
                    outdeg[b] += 1;
                }
            }
        }
        let mut best: Option<usize> = None;
        for id in 0..nodes {
            if outdeg[id] == 0 {
                best = Some(match best {
                    None => id,
                    Some(prev) => {
                        let (wp, wi) = (
                            self.own_weight(self.node_of_id(prev)),
                            self.own_weight(self.node_of_id(id)),
                        );
                        if wi > wp {
                            id
                        } else {
                            prev
                        }
                    }
                });
            }
        }
        self.node_of_id(best.expect("edge orientation always has a sink"))
    }
}
