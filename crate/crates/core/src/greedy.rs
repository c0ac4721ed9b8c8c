//! Layered coloring with at most `Δ + 1` colors.
//!
//! Each layer is a maximal strongly independent set `S` (every edge meets it
//! at most once). Removing `S` together with the edges it touches lowers the
//! maximum degree by at least one, and every removed edge holds exactly one
//! vertex of `S`, which is therefore uniquely colored in that edge.

use crate::coloring::Coloring;
use crate::error::Result;
use crate::hypergraph::{Hypergraph, Relabeled};

/// A vertex set meeting every edge of its host at most once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StronglyIndependentSet {
    pub members: Vec<usize>,
}

/// Live part of a hypergraph during peeling.
struct PeelState<'a> {
    h: &'a Hypergraph,
    inc: Vec<Vec<usize>>,
    vertex_alive: Vec<bool>,
    edge_alive: Vec<bool>,
    live_edges: usize,
}

impl<'a> PeelState<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        let mut vertex_alive = vec![true; h.n() + 1];
        vertex_alive[0] = false;
        Self {
            h,
            inc: h.incidence(),
            vertex_alive,
            edge_alive: vec![true; h.m()],
            live_edges: h.m(),
        }
    }

    fn max_degree(&self) -> usize {
        (1..=self.h.n())
            .filter(|&v| self.vertex_alive[v])
            .map(|v| self.inc[v].iter().filter(|&&e| self.edge_alive[e]).count())
            .max()
            .unwrap_or(0)
    }

    /// Greedy maximal strongly independent set of the live hypergraph,
    /// scanning vertices by ascending id.
    fn independent_set(&self) -> Vec<usize> {
        let mut hit = vec![false; self.h.m()];
        let mut members = Vec::new();
        for v in 1..=self.h.n() {
            if !self.vertex_alive[v] {
                continue;
            }
            let live = || self.inc[v].iter().filter(|&&e| self.edge_alive[e]);
            if live().all(|&e| !hit[e]) {
                for &e in live() {
                    hit[e] = true;
                }
                members.push(v);
            }
        }
        members
    }

    fn remove(&mut self, layer: &[usize]) {
        for &v in layer {
            self.vertex_alive[v] = false;
            for &e in &self.inc[v] {
                if self.edge_alive[e] {
                    self.edge_alive[e] = false;
                    self.live_edges -= 1;
                }
            }
        }
    }

    fn alive_vertices(&self) -> Vec<usize> {
        (1..=self.h.n()).filter(|&v| self.vertex_alive[v]).collect()
    }
}

/// Greedy maximal strongly independent set, by ascending vertex id. Vertices
/// in no edge are always included.
pub fn maximal_strongly_independent_set(h: &Hypergraph) -> StronglyIndependentSet {
    StronglyIndependentSet {
        members: PeelState::new(h).independent_set(),
    }
}

/// Checks strong independence of `set` in `h`.
pub fn is_strongly_independent(h: &Hypergraph, set: &[usize]) -> bool {
    let mut member = vec![false; h.n() + 1];
    for &v in set {
        member[v] = true;
    }
    h.edges().iter().all(|e| e.iter().filter(|&&v| member[v]).count() <= 1)
}

/// Conflict-free coloring with at most `Δ(H) + 1` colors: layer `i` gets
/// color `i`; once no edges remain the leftover vertices share one last
/// color.
pub fn greedy_cf_coloring(h: &Hypergraph) -> Coloring {
    let mut state = PeelState::new(h);
    let mut colors = vec![0; h.n()];
    let mut next = 1;
    while state.live_edges > 0 {
        let layer = state.independent_set();
        for &v in &layer {
            colors[v - 1] = next;
        }
        state.remove(&layer);
        next += 1;
    }
    let rest = state.alive_vertices();
    for v in rest {
        colors[v - 1] = next;
    }
    Coloring::from_vec_unchecked(colors)
}

/// Layers peeled until the maximum degree is at most `target`, plus the
/// remaining hypergraph.
#[derive(Debug, Clone)]
pub struct Peeling {
    pub layers: Vec<Vec<usize>>,
    pub remainder: Relabeled,
}

pub fn peel_layers(h: &Hypergraph, target: usize) -> Peeling {
    let mut state = PeelState::new(h);
    let mut layers = Vec::new();
    while state.max_degree() > target {
        let layer = state.independent_set();
        state.remove(&layer);
        layers.push(layer);
    }
    let keep = state.alive_vertices();
    let remainder = h.restrict(&keep, &state.edge_alive);
    Peeling { layers, remainder }
}

/// Colors `h` by peeling layers down to maximum degree `target`, coloring the
/// remainder with `base`, and giving every peeled layer one fresh color above
/// the base palette.
pub fn peel_then_solve<F>(h: &Hypergraph, target: usize, base: F) -> Result<Coloring>
where
    F: FnOnce(&Hypergraph) -> Result<Coloring>,
{
    let peeling = peel_layers(h, target);
    let inner = base(&peeling.remainder.hypergraph)?;
    let mut colors = vec![0; h.n()];
    peeling.remainder.lift(inner.colors(), &mut colors);
    let offset = inner.palette();
    for (i, layer) in peeling.layers.iter().enumerate() {
        for &v in layer {
            colors[v - 1] = offset + i + 1;
        }
    }
    Ok(Coloring::from_vec_unchecked(colors))
}
