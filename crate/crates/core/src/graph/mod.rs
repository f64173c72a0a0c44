//! Simple undirected graphs over dense vertex ids, with bitset adjacency rows.

mod bitset;
pub mod families;
mod io;

pub use bitset::{Iter, VertexSet};
pub use io::{parse_graph, read_graph_file, write_graph};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex set over universe {found} used with a graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; both are enforced at construction
/// and the graph is immutable afterwards.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph { n, m, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            m: 0,
            adj: vec![VertexSet::new(n); n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighbourhood row of `v`.
    #[inline]
    pub fn nbrs(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        if fresh {
            self.m += 1;
        }
        Ok(fresh)
    }

    /// Returns whether the edge was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let present = self.adj[u].remove(v);
        self.adj[v].remove(u);
        if present {
            self.m -= 1;
        }
        Ok(present)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].above(u).iter() {
                out.push((u, v));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<(), GraphError> {
        if x.universe() == self.n {
            Ok(())
        } else {
            Err(GraphError::UniverseMismatch {
                expected: self.n,
                found: x.universe(),
            })
        }
    }

    /// `G[X]` relabelled to `0..|X|` in increasing id order. The returned
    /// vector maps each new id to its original id.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(x)?;
        let map = x.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let k = map.len();
        let mut adj = vec![VertexSet::new(k); k];
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].intersection(x).iter() {
                adj[i].insert(index[w]);
            }
        }
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok((Graph { n: k, m, adj }, map))
    }

    /// Neighbours of `v` inside `x`.
    pub fn neighbours_in(&self, v: usize, x: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        self.check_set(x)?;
        Ok(self.adj[v].intersection(x))
    }

    /// Members of `x` other than `v` that are not adjacent to `v`.
    pub fn non_neighbours_in(&self, v: usize, x: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        self.check_set(x)?;
        let mut s = x.difference(&self.adj[v]);
        s.remove(v);
        Ok(s)
    }

    /// Number of non-neighbours of `v` in `x`, excluding `v` itself.
    pub fn non_nbr_count(&self, v: usize, x: &VertexSet) -> usize {
        x.difference_len(&self.adj[v]) - usize::from(x.contains(v))
    }

    /// Vertices of `x` adjacent to every member of `y`.
    pub fn common_nbrs(&self, y: &VertexSet, x: &VertexSet) -> VertexSet {
        let mut c = x.clone();
        for v in y.iter() {
            c.intersect_with(&self.adj[v]);
        }
        c
    }

    pub fn is_clique(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| {
            let mut rest = x.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_stable(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| self.adj[v].is_disjoint(x))
    }

    /// Minimum-degree elimination of the whole graph; see
    /// [`Graph::degeneracy_order_of`].
    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        self.degeneracy_order_of(&self.vertices())
    }

    /// Repeatedly removes a vertex of minimum degree in what remains of
    /// `G[x]` (lowest id on ties). Returns the removal order and the largest
    /// degree seen at removal time, which is the degeneracy of `G[x]`.
    ///
    /// In the returned order every vertex has at most `degeneracy` neighbours
    /// that appear after it, so it is directly an elimination-order
    /// certificate in the sense of [`crate::degen`].
    pub fn degeneracy_order_of(&self, x: &VertexSet) -> (Vec<usize>, usize) {
        let mut alive = x.clone();
        let mut deg = vec![0usize; self.n];
        for v in x.iter() {
            deg[v] = self.adj[v].intersection_len(x);
        }
        let mut order = Vec::with_capacity(x.len());
        let mut degeneracy = 0;
        while let Some(v) = alive.iter().min_by_key(|&v| (deg[v], v)) {
            degeneracy = degeneracy.max(deg[v]);
            alive.remove(v);
            for w in self.adj[v].intersection(&alive).iter() {
                deg[w] -= 1;
            }
            order.push(v);
        }
        (order, degeneracy)
    }

    pub fn complement(&self) -> Graph {
        let adj: Vec<VertexSet> = (0..self.n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { n: self.n, m, adj }
    }
}
