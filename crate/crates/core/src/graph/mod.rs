//! Simple undirected graphs on vertices `0..n`, stored as adjacency bitsets.

mod chromatic;
mod families;
mod io;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Composition;

pub use families::{build_family, FamilyKind, FamilySpec};
pub use io::{parse_graph, GraphFormat};

/// Vertex sets are `u64` bitsets, which caps the vertex count.
pub const MAX_VERTICES: usize = 64;

pub(crate) type VertexSet = u64;

#[inline]
pub(crate) fn bit(v: usize) -> VertexSet {
    1u64 << v
}

pub(crate) fn vertices_of(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

fn full_set(n: usize) -> VertexSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Construction(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Construction(format!(
                "edge {{{u},{v}}} is out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Construction(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| vertices_of(self.adj[u] & !full_set(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        vertices_of(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub(crate) fn all_vertices(&self) -> VertexSet {
        full_set(self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_vertices();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// The join `G + H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let mut next = 0;
            for v in vertices_of(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.all_vertices()
    }

    /// Component orders of the spanning subgraph `(V(G), S)`, listed by
    /// smallest vertex of each component.
    pub fn component_orders(&self, subset: &[(usize, usize)]) -> Result<Composition> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in subset {
            if !self.has_edge(u, v) {
                return Err(Error::Construction(format!(
                    "{{{u},{v}}} is not an edge of the graph"
                )));
            }
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut sizes = vec![0usize; self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            sizes[r] += 1;
        }
        Ok(Composition::from_vec_unchecked(
            sizes.into_iter().filter(|&s| s > 0).collect(),
        ))
    }

    /// Size of a largest stable set, by branch and bound on cliques of the
    /// complement with a greedy-colouring bound.
    pub fn independence_number(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let comp = self.complement();
        let mut best = 0;
        max_clique(&comp.adj, 0, self.all_vertices(), &mut best);
        Ok(best)
    }

    /// Colour classes of a proper 2-colouring, or `None` if the graph has an
    /// odd cycle. Each component's smallest vertex goes in the first class,
    /// so vertex 0 is always in the first class.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let s = side[v].expect("queued vertices are coloured");
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (first, second): (Vec<usize>, Vec<usize>) =
            (0..self.n).partition(|&v| side[v] == Some(false));
        Some((first, second))
    }

    /// Number of proper colourings with `k` colours, by deletion-contraction.
    pub fn chromatic_polynomial_at(&self, k: usize) -> num_bigint::BigUint {
        chromatic::chromatic_polynomial_at(self, k)
    }

    /// graph6 encoding of this graph.
    pub fn to_graph6(&self) -> String {
        io::to_graph6(self)
    }
}

fn max_clique(adj: &[VertexSet], size: usize, candidates: VertexSet, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    // Greedy colouring of the candidates; a vertex with colour c can extend
    // the current clique by at most c.
    let mut order = Vec::new();
    let mut uncoloured = candidates;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut available = uncoloured;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !bit(v) & !adj[v];
            uncoloured &= !bit(v);
            order.push((v, colour));
        }
    }
    let mut remaining = candidates;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        max_clique(adj, size + 1, remaining & adj[v], best);
        remaining &= !bit(v);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
