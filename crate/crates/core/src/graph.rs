//! Loopless undirected multigraphs with stable edge ids.
//!
//! Vertices are always the dense range `0..vertex_count`. Edges carry an id
//! assigned at construction; deletion and contraction preserve the ids of
//! surviving edges, so per-edge statistics can be compared across a graph
//! and its minors. Parallel edges are representable (contraction creates
//! them transiently) but every operation that counts circuits expects a
//! simplified graph.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Stable identifier of an edge. Survives `delete_edge` and `contract_edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct EdgeId(pub u32);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge between two distinct vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Endpoints with the smaller one first, for order-insensitive lookups.
    pub fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    /// Whether `w` is one of the endpoints.
    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint that is not `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if self.u == w {
            Some(self.v)
        } else if self.v == w {
            Some(self.u)
        } else {
            None
        }
    }
}

/// Undirected loopless multigraph on vertices `0..vertex_count`.
///
/// Edges are kept in ascending id order. Loops are rejected at every
/// constructor; parallel edges are allowed and removed by [`Graph::simplify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a multigraph from endpoint pairs; ids are assigned `0..`.
    ///
    /// Rejects loops, out-of-range endpoints, and an empty vertex set.
    pub fn multigraph(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::InvalidParams("graph needs at least one vertex".into()));
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if u >= vertex_count {
                return Err(Error::VertexOutOfRange(u, vertex_count));
            }
            if v >= vertex_count {
                return Err(Error::VertexOutOfRange(v, vertex_count));
            }
            if u == v {
                return Err(Error::InvalidParams(format!("loop edge {u}-{v} not allowed")));
            }
            edges.push(Edge { id: EdgeId(i as u32), u, v });
        }
        Ok(Graph { vertex_count, edges })
    }

    /// Builds a simple graph: like [`Graph::multigraph`] but with parallel
    /// edges merged (smallest id of each family survives).
    pub fn simple(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        Ok(Graph::multigraph(vertex_count, pairs)?.simplify())
    }

    /// Parses the plain edge-list format: one edge per line as two
    /// whitespace-separated nonnegative integers; `#` starts a comment;
    /// blank lines are ignored; duplicate edges are merged.
    ///
    /// Vertex labels are normalized to `0..v` in order of first appearance.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut relabel: BTreeMap<u64, usize> = BTreeMap::new();
        let mut order: Vec<u64> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let mut tokens = content.split_whitespace();
            let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
                (None, _, _) => continue, // blank or comment-only line
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(Error::Parse {
                        line,
                        reason: "expected exactly two vertex labels".into(),
                    })
                }
            };
            let parse = |tok: &str| -> Result<u64> {
                tok.parse::<u64>().map_err(|_| Error::Parse {
                    line,
                    reason: format!("`{tok}` is not a nonnegative integer"),
                })
            };
            let (a, b) = (parse(a)?, parse(b)?);
            if a == b {
                return Err(Error::Parse {
                    line,
                    reason: format!("loop edge {a}-{b} not allowed"),
                });
            }
            let mut intern = |label: u64| -> usize {
                *relabel.entry(label).or_insert_with(|| {
                    order.push(label);
                    order.len() - 1
                })
            };
            let (u, v) = (intern(a), intern(b));
            pairs.push((u, v));
        }
        if pairs.is_empty() {
            return Err(Error::InvalidParams(
                "empty edge list: the format cannot describe a graph without edges".into(),
            ));
        }
        Graph::simple(order.len(), &pairs)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of edges (counting parallels).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges, ascending by id.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Looks up an edge by id.
    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges
            .iter()
            .find(|e| e.id == id)
            .ok_or(Error::UnknownEdge(id.0))
    }

    /// The smallest-id edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.edges
            .iter()
            .find(|e| e.key() == (u.min(v), u.max(v)))
            .map(|e| e.id)
    }

    /// Neighbor lists (parallel edges contribute repeats), each sorted.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Degree of `u`, counting parallel edges.
    pub fn degree(&self, u: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(u)).count()
    }

    /// True when no two edges share both endpoints.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.key()))
    }

    /// Merges every family of parallel edges down to its smallest-id member.
    pub fn simplify(&self) -> Graph {
        let mut seen = std::collections::BTreeSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert(e.key()))
            .copied()
            .collect();
        Graph { vertex_count: self.vertex_count, edges }
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertex_count];
        let mut components = 0;
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// True when the graph has a single connected component.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// The graph with one edge removed; vertices and other ids unchanged.
    pub fn delete_edge(&self, id: EdgeId) -> Result<Graph> {
        self.edge(id)?;
        let edges = self.edges.iter().filter(|e| e.id != id).copied().collect();
        Ok(Graph { vertex_count: self.vertex_count, edges })
    }

    /// Contracts an edge: its endpoints merge into the smaller label, any
    /// loops this creates are dropped, and parallel families are merged
    /// (smallest id survives). The result has one vertex fewer and is simple
    /// whenever the input was.
    pub fn contract_edge(&self, id: EdgeId) -> Result<Graph> {
        let &Edge { u: x, v: y, .. } = self.edge(id)?;
        let keep = x.min(y);
        let gone = x.max(y);
        let map = |w: usize| -> usize {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for e in &self.edges {
            if e.id == id {
                continue;
            }
            let (u, v) = (map(e.u), map(e.v));
            if u == v {
                continue; // edge parallel to the contracted one collapses to a loop
            }
            edges.push(Edge { id: e.id, u, v });
        }
        let contracted = Graph { vertex_count: self.vertex_count - 1, edges };
        Ok(contracted.simplify())
    }

    /// Renders the edge list in the format [`Graph::parse_edge_list`] reads.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    /// Relabels vertices in order of first appearance along the edge list and
    /// reassigns ids `0..e`, so that parsing the rendered edge list
    /// reproduces the result exactly. Returns the relabeled graph and the
    /// old-to-new vertex map.
    ///
    /// Isolated vertices cannot appear in an edge list and are dropped; the
    /// map sends them to `usize::MAX`.
    pub fn normalize_labels(&self) -> (Graph, Vec<usize>) {
        let mut map = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            for w in [e.u, e.v] {
                if map[w] == usize::MAX {
                    map[w] = next;
                    next += 1;
                }
            }
            edges.push(Edge { id: EdgeId(i as u32), u: map[e.u], v: map[e.v] });
        }
        (Graph { vertex_count: next.max(1), edges }, map)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn parse_normalizes_labels_and_merges_duplicates() {
        let g = Graph::parse_edge_list("5 9\n9 7\n7 5\n5 9 # duplicate\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        // 5 -> 0, 9 -> 1, 7 -> 2 by first appearance.
        assert!(g.edge_between(0, 1).is_some());
        assert!(g.edge_between(1, 2).is_some());
        assert!(g.edge_between(2, 0).is_some());
    }

    #[test]
    fn parse_skips_comments_and_blank_lines() {
        let g = Graph::parse_edge_list("# triangle\n0 1\n\n1 2\n2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn parse_rejects_loops_naming_the_line() {
        let err = Graph::parse_edge_list("0 1\n2 2\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_bad_tokens_and_arity() {
        assert!(Graph::parse_edge_list("0\n").is_err());
        assert!(Graph::parse_edge_list("0 1 2\n").is_err());
        assert!(Graph::parse_edge_list("0 -1\n").is_err());
        assert!(Graph::parse_edge_list("a b\n").is_err());
        assert!(Graph::parse_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn delete_preserves_ids() {
        let g = k4();
        let d = g.delete_edge(EdgeId(2)).unwrap();
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.edge_count(), 5);
        assert!(d.edge(EdgeId(2)).is_err());
        assert!(d.edge(EdgeId(5)).is_ok());
    }

    #[test]
    fn contract_k4_edge_gives_triangle() {
        let g = k4();
        // Contract 0-1: vertices 2,3 keep adjacency, parallels merge.
        let c = g.contract_edge(EdgeId(0)).unwrap();
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.edge_count(), 3);
        assert!(c.is_simple());
        assert!(c.is_connected());
    }

    #[test]
    fn contract_keeps_smallest_id_in_each_parallel_family() {
        let g = k4();
        let c = g.contract_edge(EdgeId(0)).unwrap();
        // 0-2 (id 1) and 1-2 (id 3) become parallel; id 1 survives.
        let mut ids: Vec<u32> = c.edges().iter().map(|e| e.id.0).collect();
        ids.sort_unstable();
        assert_eq!(ids, vec![1, 2, 5]);
    }

    #[test]
    fn simplify_merges_parallels_keeping_smallest_id() {
        let g = Graph::multigraph(3, &[(0, 1), (1, 2), (1, 0), (0, 1)]).unwrap();
        assert!(!g.is_simple());
        let s = g.simplify();
        assert_eq!(s.edge_count(), 2);
        assert_eq!(s.edges()[0].id, EdgeId(0));
        assert!(s.is_simple());
        // Idempotent.
        assert_eq!(s.simplify(), s);
    }

    #[test]
    fn connectivity_and_components() {
        let g = Graph::simple(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.component_count(), 2);
        assert!(k4().is_connected());
    }

    #[test]
    fn normalize_labels_round_trips_through_parse() {
        // Edge order that starts away from vertex 0.
        let g = Graph::simple(4, &[(2, 3), (0, 3), (0, 1), (1, 2)]).unwrap();
        let (norm, map) = g.normalize_labels();
        let reparsed = Graph::parse_edge_list(&norm.to_edge_list()).unwrap();
        assert_eq!(reparsed, norm);
        assert_eq!(map[2], 0); // 2 appeared first
        assert_eq!(map[3], 1);
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert!(Graph::multigraph(0, &[]).is_err());
        assert!(Graph::multigraph(2, &[(0, 0)]).is_err());
        assert!(Graph::multigraph(2, &[(0, 2)]).is_err());
    }
}
