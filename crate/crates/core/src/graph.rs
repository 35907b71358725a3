//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Vertices are 1-based throughout; edges are stored as ordered pairs
//! `(u, v)` with `u < v` in a sorted set, so iteration order is fixed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// A simple graph on `1..=vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Validates `edges` against `1..=n`. Pairs may be given in either
    /// orientation; loops and duplicates (in any orientation) are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph {
            vertex_count: n,
            edges: set,
        })
    }

    /// The `n`-cycle with edges `{1,2}, {2,3}, ..., {n-1,n}, {1,n}`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((1, n))))
    }

    /// `K_{m,n}` on `{1..m} ∪ {m+1..m+n}`, requiring `m >= n >= 1`.
    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self, GraphError> {
        if n < 1 || m < n {
            return Err(GraphError::InvalidFamily(format!(
                "complete bipartite graph needs m >= n >= 1, got ({m}, {n})"
            )));
        }
        let edges = (1..=m).flat_map(|i| (1..=n).map(move |j| (i, m + j)));
        Graph::new(m + n, edges)
    }

    /// Path `1..7`, hub `8` joined to `2, 3, 5, 6`, pendant `9` on the hub.
    ///
    /// A fixed labeling of an unlabeled picture: the initial ideal depends
    /// on it, the binomial edge ideal does not.
    pub fn two_extremal_example() -> Self {
        let edges = (1..7)
            .map(|i| (i, i + 1))
            .chain([(2, 8), (3, 8), (5, 8), (6, 8), (8, 9)]);
        Graph::new(9, edges).expect("fixed example is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Sorted neighbour lists, indexed by vertex (index 0 unused).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Parses the edge-list text format: first non-comment line `n`, then
    /// one `u v` pair per line. Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut n = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_num = |tok: &str| {
                tok.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("`{tok}` is not a non-negative integer"),
                })
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match (n, tokens.as_slice()) {
                (None, [count]) => n = Some(parse_num(count)?),
                (None, _) => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: "expected the vertex count on its own line".into(),
                    })
                }
                (Some(_), [u, v]) => edges.push((parse_num(u)?, parse_num(v)?)),
                (Some(_), _) => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: "expected `u v`".into(),
                    })
                }
            }
        }
        let n = n.ok_or(GraphError::Parse {
            line: 0,
            message: "missing vertex count".into(),
        })?;
        Graph::new(n, edges)
    }

    /// Renders the graph in the format accepted by [`Graph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count);
        for (a, b) in self.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices with edges ", self.vertex_count)?;
        let parts: Vec<String> = self.edges().map(|(a, b)| format!("{{{a},{b}}}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_four_has_natural_labeling() {
        let g = Graph::cycle(4).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(1, 2), (1, 4), (2, 3), (3, 4)]);
    }

    #[test]
    fn triangle_is_smallest_cycle() {
        assert_eq!(Graph::cycle(3).unwrap().edge_count(), 3);
        assert!(matches!(Graph::cycle(2), Err(GraphError::InvalidFamily(_))));
    }

    #[test]
    fn complete_bipartite_conventions() {
        let g = Graph::complete_bipartite(2, 2).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
        let k11 = Graph::complete_bipartite(1, 1).unwrap();
        assert_eq!(k11.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        assert!(Graph::complete_bipartite(1, 2).is_err());
        assert!(Graph::complete_bipartite(3, 0).is_err());
    }

    #[test]
    fn family_edge_counts() {
        for n in 3..15 {
            assert_eq!(Graph::cycle(n).unwrap().edge_count(), n);
        }
        for m in 1..6 {
            for n in 1..=m {
                assert_eq!(Graph::complete_bipartite(m, n).unwrap().edge_count(), m * n);
            }
        }
    }

    #[test]
    fn validation_errors() {
        assert_eq!(Graph::new(3, [(1, 2), (1, 2)]), Err(GraphError::DuplicateEdge(1, 2)));
        assert_eq!(Graph::new(3, [(1, 2), (2, 1)]), Err(GraphError::DuplicateEdge(1, 2)));
        assert_eq!(Graph::new(3, [(2, 2)]), Err(GraphError::Loop(2)));
        assert_eq!(Graph::new(3, [(1, 4)]), Err(GraphError::VertexOutOfRange(1, 4, 3)));
        assert_eq!(Graph::new(2, []).unwrap().edge_count(), 0);
    }

    #[test]
    fn example_graph_incidences() {
        let g = Graph::two_extremal_example();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 11);
        let hub: Vec<usize> = g.adjacency()[8].clone();
        assert_eq!(hub, vec![2, 3, 5, 6, 9]);
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# a square\n4\n1 2\n2 3\n\n3 4\n# closing edge\n4 1\n";
        let g: Graph = text.parse().unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(matches!(
            Graph::parse("4\n1 2 3\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("4\n1 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(Graph::parse("# nothing\n").is_err());
    }
}
