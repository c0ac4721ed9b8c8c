//! Hypergraph data model.
//!
//! Vertices are the dense ids `1..=n`. Edges are kept in insertion order and
//! each edge is a strictly increasing list of vertex ids. Parallel edges are
//! allowed; graphs are simply the 2-uniform case.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Summary statistics of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats {
    pub n: usize,
    pub m: usize,
    /// Maximum vertex degree, parallel edges counted with multiplicity.
    pub max_degree: usize,
    /// Maximum number of other edges meeting a single edge.
    pub max_edge_degree: usize,
    pub uniformity: Option<usize>,
    pub regularity: Option<usize>,
    pub connected: bool,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge. Edge order is preserved.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = edges;
        for (i, edge) in edges.iter_mut().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { edge: i + 1 });
            }
            edge.sort_unstable();
            for w in edge.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::RepeatedVertex {
                        edge: i + 1,
                        vertex: w[0],
                    });
                }
            }
            if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange {
                    edge: i + 1,
                    vertex: v,
                    n,
                });
            }
        }
        Ok(Self { n, edges })
    }

    /// A hypergraph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    /// Builds a graph from vertex pairs.
    pub fn graph(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(n, pairs.into_iter().map(|(u, v)| vec![u, v]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in storage order; `edges()[i]` is edge `i + 1` in the file formats.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// For every vertex (indexed by id, slot 0 unused) the 0-based indices of
    /// the edges containing it, ascending.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n + 1];
        for (i, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Vertex degrees indexed by id (slot 0 unused).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for edge in &self.edges {
            for &v in edge {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Common edge size, or `None` if sizes differ or there are no edges.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == first).then_some(first)
    }

    /// Common vertex degree, or `None` if degrees differ or `n == 0`.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degrees();
        let first = *deg.get(1)?;
        deg[1..].iter().all(|&d| d == first).then_some(first)
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    pub fn max_edge_degree(&self) -> usize {
        let inc = self.incidence();
        let mut mark = vec![usize::MAX; self.edges.len()];
        let mut best = 0;
        for (i, edge) in self.edges.iter().enumerate() {
            let mut count = 0;
            mark[i] = i;
            for &v in edge {
                for &j in &inc[v] {
                    if mark[j] != i {
                        mark[j] = i;
                        count += 1;
                    }
                }
            }
            best = best.max(count);
        }
        best
    }

    /// Connected components of the primal graph, each an ascending vertex
    /// list; components are ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let inc = self.incidence();
        let mut seen = vec![false; self.n + 1];
        let mut edge_seen = vec![false; self.edges.len()];
        let mut out = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &e in &inc[v] {
                    if edge_seen[e] {
                        continue;
                    }
                    edge_seen[e] = true;
                    for &w in &self.edges[e] {
                        if !seen[w] {
                            seen[w] = true;
                            comp.push(w);
                            stack.push(w);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connectivity of the primal graph. Hypergraphs with at most one vertex
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn stats(&self) -> Stats {
        Stats {
            n: self.n,
            m: self.edges.len(),
            max_degree: self.max_degree(),
            max_edge_degree: self.max_edge_degree(),
            uniformity: self.uniformity(),
            regularity: self.regularity(),
            connected: self.is_connected(),
        }
    }

    /// The dual hypergraph: dual vertex `i` is edge `i`, and for every
    /// vertex `v` (ascending) there is a dual edge listing the edges that
    /// contain `v`.
    pub fn dual(&self) -> Result<Hypergraph> {
        let inc = self.incidence();
        let mut edges = Vec::with_capacity(self.n);
        for (v, list) in inc.into_iter().enumerate().skip(1) {
            if list.is_empty() {
                return Err(Error::IsolatedVertex { vertex: v });
            }
            edges.push(list.into_iter().map(|e| e + 1).collect());
        }
        Ok(Hypergraph {
            n: self.edges.len(),
            edges,
        })
    }

    /// `H - S`: deletes the vertices of `removed` and shrinks every edge to
    /// `E - S`, dropping edges that become empty.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<Relabeled> {
        let mut gone = vec![false; self.n + 1];
        for &v in removed {
            if v == 0 || v > self.n {
                return Err(Error::Precondition(format!(
                    "vertex {v} out of range 1..={}",
                    self.n
                )));
            }
            gone[v] = true;
        }
        let keep: Vec<usize> = (1..=self.n).filter(|&v| !gone[v]).collect();
        let mut edges_kept = Vec::new();
        for edge in &self.edges {
            let shrunk: Vec<usize> = edge.iter().copied().filter(|&v| !gone[v]).collect();
            if !shrunk.is_empty() {
                edges_kept.push(shrunk);
            }
        }
        Ok(Relabeled::build(self.n, keep, edges_kept))
    }

    /// The sub-hypergraph induced by the vertices in `keep` together with
    /// those edges `i` (0-based) for which `keep_edge[i]` holds. Every kept
    /// edge must lie inside `keep`.
    pub fn restrict(&self, keep: &[usize], keep_edge: &[bool]) -> Relabeled {
        let edges = self
            .edges
            .iter()
            .zip(keep_edge)
            .filter(|(_, &k)| k)
            .map(|(e, _)| e.clone())
            .collect();
        Relabeled::build(self.n, keep.to_vec(), edges)
    }
}

/// A hypergraph on relabeled vertices together with the map back to the
/// original ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeled {
    pub hypergraph: Hypergraph,
    /// `original[i]` is the original id of new vertex `i + 1`.
    pub original: Vec<usize>,
}

impl Relabeled {
    fn build(old_n: usize, mut keep: Vec<usize>, edges: Vec<Vec<usize>>) -> Self {
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![0; old_n + 1];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i + 1;
        }
        let edges = edges
            .into_iter()
            .map(|e| {
                let mapped: Vec<usize> = e.iter().map(|&v| new_id[v]).collect();
                debug_assert!(mapped.iter().all(|&v| v != 0));
                mapped
            })
            .collect();
        // Relabeling is monotone, so edges stay sorted.
        Relabeled {
            hypergraph: Hypergraph { n: keep.len(), edges },
            original: keep,
        }
    }

    /// Maps a value per new vertex back onto the original vertices.
    pub fn lift<T: Copy>(&self, values: &[T], target: &mut [T]) {
        for (i, &v) in self.original.iter().enumerate() {
            target[v - 1] = values[i];
        }
    }
}

/// Label of a vertex inside a generated construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoleKind {
    /// Vertex of a `U` side of the complete bipartite block.
    U,
    /// Unmatched vertex of a `V` side.
    V,
    /// `V` vertex covered by the matching `M`.
    M,
    /// The apex joined to the unmatched `V` vertices of one block.
    Apex,
    /// The identified apex shared by all blocks of one `G'` copy.
    Hub,
    Plain,
}

impl RoleKind {
    pub fn name(self) -> &'static str {
        match self {
            RoleKind::U => "U",
            RoleKind::V => "V",
            RoleKind::M => "M",
            RoleKind::Apex => "u",
            RoleKind::Hub => "w",
            RoleKind::Plain => "plain",
        }
    }
}

/// Role of one vertex. `copy` is the 1-based block index inside a `G'`
/// copy (0 when not applicable); `layer` is the 1-based `G'` copy index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexRole {
    pub kind: RoleKind,
    pub copy: usize,
    pub layer: usize,
}

/// Per-vertex role labels; `roles[v - 1]` belongs to vertex `v`. Empty for
/// loaded instances.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexRoleMap {
    pub roles: Vec<VertexRole>,
}

impl VertexRoleMap {
    pub fn role(&self, v: usize) -> Option<VertexRole> {
        self.roles.get(v.checked_sub(1)?).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Hypergraph {
        let mut pairs = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                pairs.push((i, j));
            }
        }
        Hypergraph::graph(n, pairs).unwrap()
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            Hypergraph::new(2, vec![vec![1, 1]]),
            Err(Error::RepeatedVertex { edge: 1, vertex: 1 })
        );
        assert_eq!(
            Hypergraph::new(2, vec![vec![1, 3]]),
            Err(Error::VertexOutOfRange { edge: 1, vertex: 3, n: 2 })
        );
        assert_eq!(Hypergraph::new(2, vec![vec![]]), Err(Error::EmptyEdge { edge: 1 }));
    }

    #[test]
    fn single_edge_stats() {
        let h = Hypergraph::new(4, vec![vec![4, 2, 1, 3]]).unwrap();
        assert_eq!(h.edges()[0], vec![1, 2, 3, 4]);
        let s = h.stats();
        assert_eq!(s.max_degree, 1);
        assert_eq!(s.max_edge_degree, 0);
        assert_eq!(s.uniformity, Some(4));
        assert!(s.connected);
    }

    #[test]
    fn parallel_edges_count_in_degrees() {
        let h = Hypergraph::graph(2, [(1, 2), (1, 2), (2, 1)]).unwrap();
        let s = h.stats();
        assert_eq!(s.max_degree, 3);
        assert_eq!(s.max_edge_degree, 2);
        assert_eq!(s.regularity, Some(3));
    }

    #[test]
    fn triangle_is_self_dual() {
        let t = k(3);
        let d = t.dual().unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.uniformity(), Some(2));
        assert_eq!(d.regularity(), Some(2));
        assert!(d.is_connected());
    }

    #[test]
    fn dual_rejects_isolated_vertex() {
        let h = Hypergraph::graph(3, [(1, 2)]).unwrap();
        assert_eq!(h.dual(), Err(Error::IsolatedVertex { vertex: 3 }));
    }

    #[test]
    fn remove_whole_single_edge() {
        let h = Hypergraph::new(3, vec![vec![1, 2, 3]]).unwrap();
        let r = h.remove_vertices(&[1, 2, 3]).unwrap();
        assert_eq!(r.hypergraph.n(), 0);
        assert_eq!(r.hypergraph.m(), 0);
        assert!(r.hypergraph.is_connected());
    }

    #[test]
    fn remove_shrinks_and_relabels() {
        let h = Hypergraph::new(5, vec![vec![1, 2, 3], vec![3, 4, 5], vec![2, 3]]).unwrap();
        let r = h.remove_vertices(&[3]).unwrap();
        assert_eq!(r.original, vec![1, 2, 4, 5]);
        assert_eq!(r.hypergraph.edges(), &[vec![1, 2], vec![3, 4], vec![2]]);
        assert!(!r.hypergraph.is_connected());
        for (old, new) in h.edges().iter().zip(r.hypergraph.edges()) {
            assert_eq!(new.len(), old.len() - old.iter().filter(|&&v| v == 3).count());
        }
    }

    #[test]
    fn components_and_singletons() {
        let h = Hypergraph::new(4, vec![vec![1], vec![2, 3]]).unwrap();
        assert_eq!(h.components(), vec![vec![1], vec![2, 3], vec![4]]);
        assert!(!h.is_connected());
        assert!(Hypergraph::edgeless(1).is_connected());
        assert!(Hypergraph::edgeless(0).is_connected());
    }

    #[test]
    fn k4_edge_degree() {
        let s = k(4).stats();
        assert_eq!((s.n, s.m, s.max_degree, s.max_edge_degree), (4, 6, 3, 4));
        assert_eq!(s.regularity, Some(3));
    }
}
