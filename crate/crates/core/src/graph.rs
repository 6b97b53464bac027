//! Simple undirected graphs with dense vertex ids and stable edge ids,
//! plus the traversal and metric computations the constructions consume.

use std::collections::HashSet;
use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Simple undirected graph. Vertices are `0..n`, edge ids are `0..m` in
/// insertion order. Self-loops and duplicate edges are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
        }
        Ok(Graph {
            n,
            edges: edge_list.to_vec(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e` in insertion order.
    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Adjacency lists sorted ascending by (neighbor, edge id). Every
    /// "arbitrary" choice downstream iterates neighbors in this order.
    pub fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Connected components ordered by their smallest vertex id, each with
    /// ascending vertex and edge id lists.
    pub fn connected_components(&self) -> Vec<Component> {
        let adj = self.adjacency();
        let mut comp_of = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let idx = components.len();
            let mut vertices = Vec::new();
            let mut queue = VecDeque::from([start]);
            comp_of[start] = idx;
            while let Some(u) = queue.pop_front() {
                vertices.push(u);
                for &(w, _) in &adj[u] {
                    if comp_of[w] == usize::MAX {
                        comp_of[w] = idx;
                        queue.push_back(w);
                    }
                }
            }
            vertices.sort_unstable();
            components.push(Component {
                vertices,
                edges: Vec::new(),
            });
        }
        for (e, &(u, _)) in self.edges.iter().enumerate() {
            components[comp_of[u]].edges.push(e);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Canonical breadth-first levels from `root`: queue order, neighbors in
    /// ascending vertex id, parent is the first discoverer. Errors if any
    /// vertex is unreachable from `root`.
    pub fn bfs_levels(&self, root: VertexId) -> Result<LevelStructure> {
        if root >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: self.n,
            });
        }
        let adj = self.adjacency();
        let mut level_of = vec![usize::MAX; self.n];
        let mut parent = vec![None; self.n];
        let mut tree_edge = vec![None; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        level_of[root] = 0;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &(w, e) in &adj[u] {
                if level_of[w] == usize::MAX {
                    level_of[w] = level_of[u] + 1;
                    parent[w] = Some(u);
                    tree_edge[w] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = level_of.iter().position(|&l| l == usize::MAX) {
            return Err(Error::DisconnectedFromRoot { root, vertex: v });
        }
        let depth = level_of.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); depth + 1];
        for v in order {
            levels[level_of[v]].push(v);
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        Ok(LevelStructure {
            root,
            level_of,
            levels,
            parent,
            tree_edge,
        })
    }

    /// Eccentricity of every vertex; errors on empty or disconnected graphs.
    pub fn eccentricities(&self) -> Result<Vec<usize>> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let adj = self.adjacency();
        let mut ecc = vec![0usize; self.n];
        let mut dist = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            let mut seen = 1usize;
            let mut far = 0usize;
            while let Some(u) = queue.pop_front() {
                far = far.max(dist[u]);
                for &(w, _) in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        seen += 1;
                        queue.push_back(w);
                    }
                }
            }
            if seen != self.n {
                return Err(Error::Disconnected);
            }
            ecc[s] = far;
        }
        Ok(ecc)
    }

    pub fn eccentricity(&self, v: VertexId) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.eccentricities()?[v])
    }

    /// Radius together with the smallest-id center vertex.
    pub fn radius(&self) -> Result<(usize, VertexId)> {
        let ecc = self.eccentricities()?;
        let r = *ecc.iter().min().expect("nonempty");
        let center = ecc.iter().position(|&e| e == r).expect("nonempty");
        Ok((r, center))
    }

    pub fn diameter(&self) -> Result<usize> {
        let ecc = self.eccentricities()?;
        Ok(*ecc.iter().max().expect("nonempty"))
    }

    /// Subgraph induced by `vertices` (must be ascending and duplicate-free),
    /// with vertices renumbered to `0..k` and edges keeping their relative
    /// id order. The mappings translate back to the parent graph.
    pub fn induced(&self, vertices: &[VertexId]) -> InducedSubgraph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
                edge_map.push(e);
            }
        }
        InducedSubgraph {
            graph: Graph {
                n: vertices.len(),
                edges,
            },
            vertex_map: vertices.to_vec(),
            edge_map,
        }
    }
}

/// One connected component: ascending vertex ids plus the ids of edges with
/// both endpoints inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

/// An induced subgraph plus the maps from its dense ids back to the parent
/// graph's vertex and edge ids.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// new vertex id -> original vertex id (ascending)
    pub vertex_map: Vec<VertexId>,
    /// new edge id -> original edge id (ascending)
    pub edge_map: Vec<EdgeId>,
}

/// Breadth-first level decomposition rooted at `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStructure {
    pub root: VertexId,
    /// `level_of[v]` = distance from the root
    pub level_of: Vec<usize>,
    /// `levels[i]` = vertices at distance i, ascending
    pub levels: Vec<Vec<VertexId>>,
    /// `parent[v]` = first discoverer; None for the root
    pub parent: Vec<Option<VertexId>>,
    /// `tree_edge[v]` = the edge joining v to `parent[v]`; None for the root
    pub tree_edge: Vec<Option<EdgeId>>,
}

impl LevelStructure {
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }
}

/// Multigraph used during eulerization: the original edges plus augmented
/// pairing edges. Parallel copies are only allowed when at least one copy is
/// augmented; self-loops are never allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<MultiEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub augmented: bool,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<MultiEdge>) -> Result<Self> {
        let mut real_pairs = HashSet::new();
        for edge in &edges {
            let (u, v) = (edge.u, edge.v);
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !edge.augmented && !real_pairs.insert(key) {
                return Err(Error::ParallelRealEdges(key.0, key.1));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> MultiEdge {
        self.edges[e]
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for edge in &self.edges {
            deg[edge.u] += 1;
            deg[edge.v] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, edge) in self.edges.iter().enumerate() {
            adj[edge.u].push((edge.v, e));
            adj[edge.v].push((edge.u, e));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }
}
