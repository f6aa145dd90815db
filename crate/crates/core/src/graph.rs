//! Finite undirected simple graphs as sorted adjacency lists.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n_vertices: usize,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list; loops and duplicate edges are
    /// rejected.
    pub fn from_edges(n_vertices: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph> {
        let mut adjacency = vec![Vec::new(); n_vertices];
        for &(u, v) in edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(Error::PointOutOfRange {
                    point: u.max(v),
                    degree: n_vertices,
                });
            }
            if u == v {
                return Err(Error::Invalid(format!("loop at vertex {u}")));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::Invalid(format!("duplicate edge {u} {v}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(SimpleGraph {
            n_vertices,
            adjacency,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for u in 0..self.n_vertices {
            for &v in &self.adjacency[u] {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    pub fn n_edges(&self) -> usize {
        self.adjacency.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Arcs: both orientations of every edge.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for u in 0..self.n_vertices {
            for &v in &self.adjacency[u] {
                arcs.push((u, v));
            }
        }
        arcs
    }

    pub fn is_connected(&self) -> bool {
        if self.n_vertices == 0 {
            return true;
        }
        let mut seen = vec![false; self.n_vertices];
        let mut queue = vec![0];
        seen[0] = true;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push(v);
                }
            }
        }
        queue.len() == self.n_vertices
    }

    /// Two-coloring of a bipartite graph (colors 0/1 per component, the
    /// smallest vertex of each component colored 0), or `None`.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n_vertices];
        for start in 0..self.n_vertices {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = vec![start];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for &v in &self.adjacency[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether the graph is a complete bipartite graph `K_{a,b}` with
    /// `a, b >= 1`. Stars (`a = 1`) count.
    pub fn is_complete_bipartite(&self) -> bool {
        if self.n_vertices < 2 || !self.is_connected() {
            return false;
        }
        let Some(color) = self.bipartition() else {
            return false;
        };
        let a = color.iter().filter(|&&c| c == 0).count();
        let b = self.n_vertices - a;
        a >= 1 && b >= 1 && self.n_edges() == a * b
    }

    /// Whether a permutation of the vertices preserves the edge set.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.n_vertices {
            return false;
        }
        for u in 0..self.n_vertices {
            for &v in &self.adjacency[u] {
                if !self.has_edge(p.image(u), p.image(v)) {
                    return false;
                }
            }
        }
        true
    }

    /// Parses the graph file format: a `vertices n` line, then one `u v`
    /// edge per line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<SimpleGraph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for raw in text.lines() {
            let line = match raw.find('#') {
                Some(pos) => raw[..pos].trim(),
                None => raw.trim(),
            };
            if line.is_empty() {
                continue;
            }
            match n {
                None => {
                    let Some(rest) = line.strip_prefix("vertices") else {
                        return Err(Error::Parse(format!(
                            "expected 'vertices n' first, found {line:?}"
                        )));
                    };
                    n = Some(
                        rest.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad vertex count in {line:?}")))?,
                    );
                }
                Some(_) => {
                    let mut it = line.split_whitespace();
                    let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
                        return Err(Error::Parse(format!("expected 'u v', found {line:?}")));
                    };
                    let u: usize = u
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad vertex {u:?}")))?;
                    let v: usize = v
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad vertex {v:?}")))?;
                    edges.push((u, v));
                }
            }
        }
        let Some(n) = n else {
            return Err(Error::Parse("missing 'vertices n' line".into()));
        };
        SimpleGraph::from_edges(n, &edges)
    }

    /// Canonical printing; `parse` of the output reproduces it byte for byte.
    pub fn print(&self) -> String {
        let mut out = String::new();
        writeln!(out, "vertices {}", self.n_vertices).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Cycle graph `C_n`.
    pub fn cycle(n: usize) -> Result<SimpleGraph> {
        if n < 3 {
            return Err(Error::Invalid("cycle needs at least 3 vertices".into()));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<SimpleGraph> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::from_edges(n, &edges)
    }

    /// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<SimpleGraph> {
        if a == 0 || b == 0 {
            return Err(Error::Invalid("both parts must be nonempty".into()));
        }
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        SimpleGraph::from_edges(a + b, &edges)
    }

    /// Graph in LCF notation: a Hamiltonian cycle on `len * reps` vertices
    /// plus the chord `i -> i + pattern[i mod len]`.
    pub fn lcf(pattern: &[i64], reps: usize) -> Result<SimpleGraph> {
        let n = pattern.len() * reps;
        if n < 3 {
            return Err(Error::Invalid("LCF graph too small".into()));
        }
        let mut edges: std::collections::BTreeSet<(usize, usize)> = (0..n)
            .map(|i| (i.min((i + 1) % n), i.max((i + 1) % n)))
            .collect();
        for i in 0..n {
            let offset = pattern[i % pattern.len()].rem_euclid(n as i64) as usize;
            let j = (i + offset) % n;
            edges.insert((i.min(j), i.max(j)));
        }
        let edges: Vec<_> = edges.into_iter().collect();
        SimpleGraph::from_edges(n, &edges)
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        SimpleGraph::from_edges(10, &edges).expect("valid construction")
    }

    /// The `n`-prism `C_n x K_2`: two `n`-cycles joined by spokes.
    pub fn prism(n: usize) -> Result<SimpleGraph> {
        if n < 3 {
            return Err(Error::Invalid("prism needs n >= 3".into()));
        }
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((n + i, n + (i + 1) % n));
            edges.push((i, n + i));
        }
        SimpleGraph::from_edges(2 * n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = SimpleGraph::from_edges(4, &[(2, 0), (0, 1), (3, 1)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.neighbors(1), &[0, 3]);
        assert!(g.has_edge(1, 3) && g.has_edge(3, 1));
        assert_eq!(g.n_edges(), 3);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 5)]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(SimpleGraph::cycle(5).unwrap().is_connected());
        let two_triangles =
            SimpleGraph::from_edges(6, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (5, 1)]).unwrap();
        assert!(!two_triangles.is_connected());
    }

    #[test]
    fn complete_bipartite_detection() {
        assert!(SimpleGraph::complete_bipartite(3, 3)
            .unwrap()
            .is_complete_bipartite());
        assert!(!SimpleGraph::petersen().is_complete_bipartite());
        // A single edge is K_{1,1}.
        assert!(SimpleGraph::from_edges(2, &[(0, 1)])
            .unwrap()
            .is_complete_bipartite());
        // Stars are complete bipartite.
        assert!(SimpleGraph::complete_bipartite(1, 4)
            .unwrap()
            .is_complete_bipartite());
        // A path on 4 vertices is bipartite but not complete bipartite.
        let path = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path.is_bipartite());
        assert!(!path.is_complete_bipartite());
    }

    #[test]
    fn heawood_via_lcf() {
        let heawood = SimpleGraph::lcf(&[5, -5], 7).unwrap();
        assert_eq!(heawood.n_vertices(), 14);
        assert_eq!(heawood.n_edges(), 21);
        assert!(heawood.is_bipartite());
        assert!((0..14).all(|v| heawood.degree_of(v) == 3));
    }

    #[test]
    fn petersen_shape() {
        let p = SimpleGraph::petersen();
        assert_eq!(p.n_vertices(), 10);
        assert_eq!(p.n_edges(), 15);
        assert!(!p.is_bipartite());
        assert!((0..10).all(|v| p.degree_of(v) == 3));
    }

    #[test]
    fn parse_print_roundtrip() {
        let text = "# triangle plus isolated vertex\nvertices 4\n0 1\n1 2\n2 0\n";
        let g = SimpleGraph::parse(text).unwrap();
        let printed = g.print();
        assert_eq!(SimpleGraph::parse(&printed).unwrap().print(), printed);
    }

    #[test]
    fn automorphism_check() {
        let g = SimpleGraph::cycle(4).unwrap();
        let rot = Permutation::parse_cycles(4, "(0 1 2 3)").unwrap();
        let bad = Permutation::parse_cycles(4, "(0 1)").unwrap();
        assert!(g.is_automorphism(&rot));
        assert!(!g.is_automorphism(&bad));
    }
}
