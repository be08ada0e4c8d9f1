//! Undirected graphs with sorted adjacency lists and breadth-first
//! distances.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Nodes are facet indices; edges join facets sharing a ridge.
pub type DualGraph = Graph;
/// Nodes are vertex indices; edges are the 1-faces.
pub type VertexGraph = Graph;

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g.finish();
        g
    }

    /// Adds an edge; call [`Graph::finish`] afterwards to restore sorted,
    /// duplicate-free neighbor lists.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "self loop at {a}");
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    pub fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
            list.dedup();
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, list)| list.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// Breadth-first distances from every source in `sources`.
    pub fn bfs_multi(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adj.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued nodes have a distance");
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        self.bfs_multi(&[source])
    }

    pub fn distance(&self, a: usize, b: usize) -> Result<usize> {
        let n = self.adj.len();
        for x in [a, b] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, len: n });
            }
        }
        self.bfs(a)[b].ok_or(Error::Disconnected)
    }

    /// Shortest distance between two node sets.
    pub fn set_distance(&self, from: &[usize], to: &[usize]) -> Option<usize> {
        let dist = self.bfs_multi(from);
        to.iter().filter_map(|&t| dist[t]).min()
    }

    /// One shortest path from `a` to `b`, endpoints included.
    pub fn shortest_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let dist = self.bfs(b);
        dist[a]?;
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            let d = dist[cur].expect("reachable");
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| dist[w] == Some(d - 1))
                .expect("a predecessor on a shortest path exists");
            path.push(cur);
        }
        Some(path)
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        self.bfs(v).into_iter().try_fold(0, |m, d| d.map(|d| m.max(d))).ok_or(Error::Disconnected)
    }

    /// Maximum shortest-path distance over all node pairs.
    pub fn diameter(&self) -> Result<usize> {
        (0..self.adj.len()).try_fold(0, |m, v| Ok(m.max(self.eccentricity(v)?)))
    }

    /// Two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.adj.len()];
        for s in 0..self.adj.len() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].expect("colored");
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// Subgraph induced by `nodes`, renumbered in the given order.
    pub fn induced(&self, nodes: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.adj.len()];
        for (i, &v) in nodes.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(nodes.len());
        for (i, &v) in nodes.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && i < pos[w] {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        g.finish();
        g
    }

    /// Whether this is the graph of the 3-cube. A 3-regular bipartite graph
    /// on 8 nodes is K_{4,4} minus a perfect matching, which is that graph.
    pub fn is_cube_graph(&self) -> bool {
        self.node_count() == 8 && (0..8).all(|v| self.degree(v) == 3) && self.bipartition().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn cycle_distances() {
        let g = cycle(6);
        assert_eq!(g.distance(0, 3).unwrap(), 3);
        assert_eq!(g.diameter().unwrap(), 3);
        assert_eq!(g.shortest_path(0, 2).unwrap(), [0, 1, 2]);
        assert!(g.bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
    }

    #[test]
    fn disconnected_graph_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert_eq!(g.distance(0, 3), Err(Error::Disconnected));
        assert_eq!(g.diameter(), Err(Error::Disconnected));
        assert!(!g.is_connected());
    }

    #[test]
    fn cube_graph_recognition() {
        let cube = Graph::from_edges(
            8,
            (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|(a, b)| a < b),
        );
        assert!(cube.is_cube_graph());
        assert!(!cycle(8).is_cube_graph());
    }
}
