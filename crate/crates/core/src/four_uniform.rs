//! Conflict-free colorings of 4-uniform hypergraphs.
//!
//! A connected uniform hypergraph has a set `S` of `r - 1` vertices inside
//! one edge whose removal keeps it connected. The natural candidate takes a
//! pair of edges at maximum distance whose geodesic ends in the smallest
//! possible intersection and removes the last edge minus one vertex of that
//! final intersection; [`safe_separator`] verifies it and falls back to
//! other candidates when it fails. For 4-uniform input with maximum degree 3 this yields a
//! 3-coloring: order the vertices so that `S` comes first, the kept vertex
//! last, and every other vertex shares an edge with a later one; then each
//! vertex closes at most two edges and can dodge one color per edge.

use crate::batch::{self, Exec};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::exact;
use crate::factors::{cf2_via_duality, Cf2Outcome, FactorSearch};
use crate::greedy::peel_then_solve;
use crate::hypergraph::Hypergraph;

/// A sequence of pairwise consecutive-intersecting edges (1-based indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePath {
    pub edges: Vec<usize>,
}

impl EdgePath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Size of the intersection of the last two edges; `None` for a
    /// single-edge path.
    pub fn tail_size(&self, h: &Hypergraph) -> Option<usize> {
        let k = self.edges.len();
        if k < 2 {
            return None;
        }
        let a = &h.edges()[self.edges[k - 2] - 1];
        let b = &h.edges()[self.edges[k - 1] - 1];
        Some(intersection(a, b).len())
    }
}

/// Vertices removed from one host edge, and the vertex of it that stays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    /// 1-based index of the host edge.
    pub host_edge: usize,
    pub removed: Vec<usize>,
    pub kept: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}

/// Neighbors of every edge in the intersection graph, ascending.
fn edge_adjacency(h: &Hypergraph) -> Vec<Vec<usize>> {
    let inc = h.incidence();
    h.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut nb: Vec<usize> = e.iter().flat_map(|&v| inc[v].iter().copied()).filter(|&j| j != i).collect();
            nb.sort_unstable();
            nb.dedup();
            nb
        })
        .collect()
}

const FAR: usize = usize::MAX;

/// Hop distances in the edge intersection graph from a set of sources.
fn bfs(adj: &[Vec<usize>], sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![FAR; adj.len()];
    let mut queue = std::collections::VecDeque::new();
    for &s in sources {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == FAR {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Lexicographically smallest path `from -> ... ` that reaches `to` after
/// exactly `dist_to[from]` hops, where `dist_to` are hop distances to the
/// target set.
fn smallest_path(adj: &[Vec<usize>], from: usize, dist_to: &[usize]) -> Vec<usize> {
    let mut path = vec![from];
    let mut cur = from;
    while dist_to[cur] > 0 {
        cur = *adj[cur]
            .iter()
            .find(|&&y| dist_to[y] + 1 == dist_to[cur])
            .expect("a neighbor one step closer exists");
        path.push(cur);
    }
    path
}

/// A shortest edge path from `e` to `f` (1-based), smallest in lexicographic
/// order among shortest ones. `e == f` gives the one-edge path.
pub fn edge_distance(h: &Hypergraph, e: usize, f: usize) -> Result<Option<EdgePath>> {
    for i in [e, f] {
        if i == 0 || i > h.m() {
            return Err(Error::EdgeIndexOutOfRange { index: i, m: h.m() });
        }
    }
    let adj = edge_adjacency(h);
    let to_f = bfs(&adj, &[f - 1]);
    if to_f[e - 1] == FAR {
        return Ok(None);
    }
    Ok(Some(EdgePath {
        edges: smallest_path(&adj, e - 1, &to_f).into_iter().map(|i| i + 1).collect(),
    }))
}

/// Vertex set `S` of size `r - 1` inside one edge such that `H - S` stays
/// connected.
///
/// Among ordered edge pairs `(e, f)` at maximum distance, picks the one with
/// the smallest possible final intersection (ties to the smallest `(e, f)`),
/// then the lexicographically smallest such geodesic, and keeps the smallest
/// vertex of the final intersection. A single edge keeps its largest vertex.
///
/// That choice can still disconnect the hypergraph when a second edge at
/// maximum distance, reached through a different penultimate edge with an
/// equally small intersection, hangs off `S`. The result is therefore always
/// checked; on failure the remaining candidates are tried in the order
/// (tail, e, f, penultimate edge, kept vertex), then every (edge, vertex)
/// pair.
pub fn safe_separator(h: &Hypergraph) -> Result<Separator> {
    if h.m() == 0 {
        return Err(Error::Precondition("hypergraph has no edges".into()));
    }
    let r = h.uniformity().ok_or(Error::NotUniform)?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let sep = if h.m() == 1 {
        let edge = &h.edges()[0];
        Separator {
            host_edge: 1,
            removed: edge[..r - 1].to_vec(),
            kept: edge[r - 1],
        }
    } else {
        choose_separator(h)
    };
    if keeps_connected(h, &sep)? {
        return Ok(sep);
    }
    for sep in fallback_candidates(h) {
        if keeps_connected(h, &sep)? {
            return Ok(sep);
        }
    }
    Err(Error::Internal("no vertex set inside an edge keeps the hypergraph connected".into()))
}

fn keeps_connected(h: &Hypergraph, sep: &Separator) -> Result<bool> {
    Ok(h.remove_vertices(&sep.removed)?.hypergraph.is_connected())
}

fn separator_at(h: &Hypergraph, f: usize, kept: usize) -> Separator {
    Separator {
        host_edge: f + 1,
        removed: h.edges()[f].iter().copied().filter(|&v| v != kept).collect(),
        kept,
    }
}

fn fallback_candidates(h: &Hypergraph) -> impl Iterator<Item = Separator> + '_ {
    let adj = edge_adjacency(h);
    let dist: Vec<Vec<usize>> = (0..h.m()).map(|e| bfs(&adj, &[e])).collect();
    let hops = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut ranked = Vec::new();
    for e in 0..h.m() {
        for f in 0..h.m() {
            if e == f || dist[e][f] != hops {
                continue;
            }
            for &g in adj[f].iter().filter(|&&g| dist[e][g] + 1 == hops) {
                let meet = intersection(&h.edges()[g], &h.edges()[f]);
                for &v in &meet {
                    ranked.push((meet.len(), e, f, g, v));
                }
            }
        }
    }
    ranked.sort_unstable();
    let ranked = ranked.into_iter().map(|(_, _, f, _, v)| separator_at(h, f, v));
    let every = (0..h.m()).flat_map(move |f| h.edges()[f].iter().map(move |&v| separator_at(h, f, v)));
    ranked.chain(every)
}

fn choose_separator(h: &Hypergraph) -> Separator {
    let adj = edge_adjacency(h);
    let m = h.m();
    // (hops, tail, e, f); larger hops first, then smaller tail, e, f.
    let mut best: Option<(usize, usize, usize, usize)> = None;
    for e in 0..m {
        let dist = bfs(&adj, &[e]);
        for f in 0..m {
            if f == e {
                continue;
            }
            let hops = dist[f];
            if let Some((bh, ..)) = best {
                if hops < bh {
                    continue;
                }
            }
            let tail = adj[f]
                .iter()
                .filter(|&&g| dist[g] + 1 == hops)
                .map(|&g| intersection(&h.edges()[g], &h.edges()[f]).len())
                .min()
                .expect("a geodesic has a penultimate edge");
            let better = match best {
                None => true,
                Some((bh, bt, ..)) => hops > bh || (hops == bh && tail < bt),
            };
            if better {
                best = Some((hops, tail, e, f));
            }
        }
    }
    let (hops, tail, e, f) = best.expect("at least two edges");
    let from_e = bfs(&adj, &[e]);
    let penultimate: Vec<usize> = adj[f]
        .iter()
        .copied()
        .filter(|&g| from_e[g] + 1 == hops && intersection(&h.edges()[g], &h.edges()[f]).len() == tail)
        .collect();
    // Walk from e towards the best penultimate edges, staying on geodesics.
    let to_pen = bfs(&adj, &penultimate);
    let mut path = smallest_path(&adj, e, &to_pen);
    path.push(f);
    let last = &h.edges()[f];
    let before = &h.edges()[path[path.len() - 2]];
    separator_at(h, f, intersection(before, last)[0])
}

/// `S` ascending, then the reverse breadth-first order of `H - S` from the
/// kept vertex, ending with the kept vertex itself.
pub fn elimination_ordering(h: &Hypergraph, sep: &Separator) -> Result<EliminationOrdering> {
    let host = h
        .edges()
        .get(sep.host_edge.wrapping_sub(1))
        .ok_or(Error::EdgeIndexOutOfRange { index: sep.host_edge, m: h.m() })?;
    let mut expected: Vec<usize> = sep.removed.clone();
    expected.push(sep.kept);
    expected.sort_unstable();
    if &expected != host {
        return Err(Error::Precondition("separator does not match its host edge".into()));
    }
    let mut removed = vec![false; h.n() + 1];
    for &v in &sep.removed {
        removed[v] = true;
    }
    let inc = h.incidence();
    let mut seen = removed.clone();
    seen[sep.kept] = true;
    let mut bfs_order = vec![sep.kept];
    let mut head = 0;
    while head < bfs_order.len() {
        let x = bfs_order[head];
        head += 1;
        let mut nb: Vec<usize> = inc[x].iter().flat_map(|&e| h.edges()[e].iter().copied()).filter(|&w| !seen[w]).collect();
        nb.sort_unstable();
        nb.dedup();
        for w in nb {
            seen[w] = true;
            bfs_order.push(w);
        }
    }
    if bfs_order.len() + sep.removed.len() != h.n() {
        return Err(Error::Precondition("hypergraph minus the separator is disconnected".into()));
    }
    let mut order = sep.removed.clone();
    order.sort_unstable();
    order.extend(bfs_order[1..].iter().rev());
    order.push(sep.kept);
    Ok(EliminationOrdering { order })
}

/// The color that must be avoided to keep an edge good when its last vertex
/// is colored: the common color of a monochromatic remainder, else the
/// smallest color occurring once in it.
fn blocked_color(rest: &[usize]) -> Option<usize> {
    if rest.iter().all(|&c| c == rest[0]) {
        return Some(rest[0]);
    }
    let mut once: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&c| rest.iter().filter(|&&d| d == c).count() == 1)
        .collect();
    once.sort_unstable();
    once.first().copied()
}

/// Conflict-free coloring with colors from `{1, 2, 3}` for a connected
/// 4-uniform hypergraph of maximum degree at most 3.
pub fn three_color_4uniform(h: &Hypergraph) -> Result<Coloring> {
    if h.m() == 0 {
        if h.n() > 1 {
            return Err(Error::Disconnected);
        }
        return Ok(Coloring::from_vec_unchecked(vec![1; h.n()]));
    }
    if h.uniformity() != Some(4) {
        return Err(Error::WrongUniformity(4));
    }
    if h.max_degree() > 3 {
        return Err(Error::Precondition("maximum degree exceeds 3".into()));
    }
    let sep = safe_separator(h)?;
    let ord = elimination_ordering(h, &sep)?;
    let n = h.n();
    let mut pos = vec![0; n + 1];
    for (i, &v) in ord.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        let last = e.iter().map(|&v| pos[v]).max().unwrap();
        closing[last].push(i);
    }
    let host = sep.host_edge - 1;
    let mut colors = vec![0; n];
    for (i, &v) in ord.order.iter().take(3).enumerate() {
        colors[v - 1] = i + 1;
    }
    for j in 3..n {
        let v = ord.order[j];
        if j == n - 1 && closing[j].len() > 3 {
            return Err(Error::Internal(format!("last vertex {v} closes {} edges", closing[j].len())));
        }
        let edges: Vec<usize> = closing[j].iter().copied().filter(|&e| e != host).collect();
        if edges.len() > 2 {
            return Err(Error::Internal(format!("vertex {v} closes {} edges", edges.len())));
        }
        let mut blocked = Vec::with_capacity(2);
        for e in edges {
            let rest: Vec<usize> = h.edges()[e].iter().filter(|&&w| w != v).map(|&w| colors[w - 1]).collect();
            let q = blocked_color(&rest)
                .ok_or_else(|| Error::Internal(format!("edge {} has no unique color in its remainder", e + 1)))?;
            blocked.push(q);
        }
        colors[v - 1] = (1..=3).find(|c| !blocked.contains(c)).unwrap();
    }
    Ok(Coloring::from_vec_unchecked(colors))
}

/// Colors every connected component independently with `solve` and merges
/// the results; vertices in no edge get color 1.
fn per_component<F>(h: &Hypergraph, exec: Exec, solve: F) -> Result<Coloring>
where
    F: Fn(&Hypergraph) -> Result<Coloring> + Sync + Send,
{
    let comps = h.components();
    let parts = batch::map(exec, &comps, |comp| {
        let keep: Vec<bool> = h.edges().iter().map(|e| comp.binary_search(&e[0]).is_ok()).collect();
        let sub = h.restrict(comp, &keep);
        let c = if sub.hypergraph.m() == 0 {
            Coloring::from_vec_unchecked(vec![1; sub.hypergraph.n()])
        } else {
            solve(&sub.hypergraph)?
        };
        Ok((sub, c))
    });
    let mut colors = vec![0; h.n()];
    for part in parts {
        let (sub, c) = part?;
        sub.lift(c.colors(), &mut colors);
    }
    Ok(Coloring::from_vec_unchecked(colors))
}

pub fn color_4uniform(h: &Hypergraph) -> Result<Coloring> {
    color_4uniform_with(h, Exec::Sequential)
}

/// Conflict-free coloring of a 4-uniform hypergraph with at most
/// `max(Δ, 3)` colors (optimal when `Δ <= 2`). Components are colored
/// independently, concurrently under [`Exec::Parallel`].
pub fn color_4uniform_with(h: &Hypergraph, exec: Exec) -> Result<Coloring> {
    if h.m() > 0 && h.uniformity() != Some(4) {
        return Err(Error::WrongUniformity(4));
    }
    if h.max_degree() >= 3 {
        peel_then_solve(h, 3, |rest| per_component(rest, exec, three_color_4uniform))
    } else {
        per_component(h, exec, |c| characterize_4uniform(c).map(|r| r.coloring))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Characterization {
    pub chi_cf: usize,
    pub coloring: Coloring,
    /// Set if a non-regular instance of maximum degree 2 turned out not to
    /// be 2-colorable, which should never happen.
    pub anomaly: bool,
}

/// Exact conflict-free chromatic number of a connected 4-uniform
/// hypergraph with maximum degree at most 2, with an optimal coloring.
///
/// Degree 1 means a single edge (2 colors). A 2-regular instance is
/// 2-colorable exactly when its dual 4-regular graph has a `{1,3}`-factor;
/// otherwise the 3-coloring above is optimal. Non-regular instances go
/// through the exact 2-coloring search.
pub fn characterize_4uniform(h: &Hypergraph) -> Result<Characterization> {
    if h.m() == 0 {
        if h.n() > 1 {
            return Err(Error::Disconnected);
        }
        return Ok(Characterization {
            chi_cf: h.n(),
            coloring: Coloring::from_vec_unchecked(vec![1; h.n()]),
            anomaly: false,
        });
    }
    if h.uniformity() != Some(4) {
        return Err(Error::WrongUniformity(4));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let delta = h.max_degree();
    let done = |chi_cf, coloring| Characterization {
        chi_cf,
        coloring,
        anomaly: false,
    };
    match delta {
        1 => {
            let edge = &h.edges()[0];
            let colors = h.vertices().map(|v| if v == edge[0] { 1 } else { 2 }).collect();
            Ok(done(2, Coloring::from_vec_unchecked(colors)))
        }
        2 if h.regularity() == Some(2) => match cf2_via_duality(h, &FactorSearch::default())? {
            Cf2Outcome::Colored(c) => Ok(done(2, c)),
            Cf2Outcome::None => Ok(done(3, three_color_4uniform(h)?)),
            Cf2Outcome::BudgetExceeded => Err(Error::BudgetExceeded),
        },
        2 => match exact::cf_colorable(h, 2) {
            Some(c) => Ok(done(2, c)),
            None => Ok(Characterization {
                chi_cf: 3,
                coloring: three_color_4uniform(h)?,
                anomaly: true,
            }),
        },
        _ => Err(Error::Precondition(format!("maximum degree {delta} exceeds 2"))),
    }
}
