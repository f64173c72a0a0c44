//! Named graph families used across tests, examples and the CLI.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).expect("valid complete graph")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::build(n, &edges).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Graph::build(n, &edges).expect("valid cycle")
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::build(10, &edges).expect("valid petersen")
}

/// Complete multipartite graph; part `i` occupies a contiguous id block.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("valid multipartite graph")
}

/// The double star `H_s`: centers `0` and `1`, leaves `2..s+2` on `0` and
/// `s+2..2s+2` on `1`.
pub fn double_star(s: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    for i in 0..s {
        edges.push((0, 2 + i));
        edges.push((1, 2 + s + i));
    }
    Graph::build(2 * s + 2, &edges).expect("valid double star")
}

/// Disjoint union; the vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let off = a.n();
    let mut edges = a.edges();
    edges.extend(b.edges().into_iter().map(|(u, v)| (u + off, v + off)));
    Graph::build(a.n() + b.n(), &edges).expect("valid union")
}
