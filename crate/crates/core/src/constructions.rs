//! Generators for the explicit extremal instances.
//!
//! `G(t, r)` for odd `t, r` with `r >= (t+1)(t+2)` is an r-regular graph
//! without a `{t, r-t}`-factor. It is assembled from blocks `H`: a complete
//! bipartite `K_{r-1,r}` on sides `U` and `V`, a matching on `r-t-2` vertices
//! of `V`, and an apex joined to the remaining `t+2` vertices of `V`.
//! `G'` glues `t+1` copies of `H` at their apexes into one hub `w`, and
//! `G(t, r)` takes `δ+1` copies of `G'` (`δ = r - (t+1)(t+2)`) with a clique
//! on the hubs. Copies are numbered contiguously.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, RoleKind, VertexRole, VertexRoleMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    GTr,
    HBlock,
    GPrime,
    CompleteGraph,
    OddCycle,
    GapNested,
    TwoCliques,
    K4eGadget,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 8] = [
        ConstructionKind::GTr,
        ConstructionKind::HBlock,
        ConstructionKind::GPrime,
        ConstructionKind::CompleteGraph,
        ConstructionKind::OddCycle,
        ConstructionKind::GapNested,
        ConstructionKind::TwoCliques,
        ConstructionKind::K4eGadget,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::GTr => "g_tr",
            ConstructionKind::HBlock => "h_block",
            ConstructionKind::GPrime => "g_prime",
            ConstructionKind::CompleteGraph => "complete_graph",
            ConstructionKind::OddCycle => "odd_cycle",
            ConstructionKind::GapNested => "gap_nested",
            ConstructionKind::TwoCliques => "two_cliques",
            ConstructionKind::K4eGadget => "k4e_gadget",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// A construction request. Unused parameters are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionSpec {
    pub kind: ConstructionKind,
    pub t: Option<usize>,
    pub r: Option<usize>,
    pub n: Option<usize>,
    pub delta: Option<usize>,
}

/// A generated instance with its role labels (empty for kinds without
/// distinguished vertices).
#[derive(Debug, Clone)]
pub struct Construction {
    pub hypergraph: Hypergraph,
    pub roles: VertexRoleMap,
}

fn missing(kind: ConstructionKind, what: &str) -> Error {
    Error::InvalidParameters(format!("{} needs --{what}", kind.name()))
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Construction> {
        use ConstructionKind::*;
        let need = |v: Option<usize>, what| v.ok_or_else(|| missing(self.kind, what));
        let plain = |h: Hypergraph| Construction {
            hypergraph: h,
            roles: VertexRoleMap::default(),
        };
        match self.kind {
            GTr => build_g(need(self.t, "t")?, need(self.r, "r")?),
            HBlock => build_h(need(self.t, "t")?, need(self.r, "r")?),
            GPrime => build_g_prime(need(self.t, "t")?, need(self.r, "r")?),
            CompleteGraph => Ok(plain(complete_graph(need(self.n, "n")?)?)),
            OddCycle => Ok(plain(odd_cycle(need(self.n, "n")?)?)),
            GapNested => Ok(plain(gap_nested(need(self.delta, "delta")?)?)),
            TwoCliques => Ok(plain(two_cliques(need(self.delta, "delta")?)?)),
            K4eGadget => Ok(plain(k4e_gadget(need(self.r, "r")?)?)),
        }
    }
}

fn check_tr(t: usize, r: usize) -> Result<()> {
    if t == 0 || t.is_multiple_of(2) || r.is_multiple_of(2) || r < (t + 1) * (t + 2) {
        return Err(Error::InvalidParameters(format!(
            "t and r must be odd with t >= 1 and r >= (t+1)(t+2); got t={t}, r={r}"
        )));
    }
    Ok(())
}

/// Edges of one `H` block on ids `base+1 ..= base+2r-1` with apex `apex`,
/// plus roles for the `2r-1` non-apex vertices.
fn h_edges(t: usize, r: usize, base: usize, apex: usize, copy: usize, layer: usize) -> (Vec<Vec<usize>>, Vec<VertexRole>) {
    let u_side: Vec<usize> = (base + 1..=base + r - 1).collect();
    let v_side: Vec<usize> = (base + r..=base + 2 * r - 1).collect();
    let matched = r - t - 2;
    let mut edges = Vec::with_capacity(r * (r - 1) + matched / 2 + t + 2);
    for &u in &u_side {
        for &v in &v_side {
            edges.push(vec![u, v]);
        }
    }
    for pair in v_side[..matched].chunks(2) {
        edges.push(vec![pair[0], pair[1]]);
    }
    for &v in &v_side[matched..] {
        let mut e = vec![v, apex];
        e.sort_unstable();
        edges.push(e);
    }
    let role = |kind| VertexRole { kind, copy, layer };
    let mut roles = vec![role(RoleKind::U); r - 1];
    roles.extend((0..r).map(|i| role(if i < matched { RoleKind::M } else { RoleKind::V })));
    (edges, roles)
}

/// The block `H`: `2r` vertices, apex `u` last.
pub fn build_h(t: usize, r: usize) -> Result<Construction> {
    check_tr(t, r)?;
    let (edges, mut roles) = h_edges(t, r, 0, 2 * r, 1, 1);
    roles.push(VertexRole {
        kind: RoleKind::Apex,
        copy: 1,
        layer: 1,
    });
    Ok(Construction {
        hypergraph: Hypergraph::new(2 * r, edges)?,
        roles: VertexRoleMap { roles },
    })
}

fn g_prime_parts(t: usize, r: usize, base: usize, layer: usize) -> (usize, Vec<Vec<usize>>, Vec<VertexRole>) {
    let per = 2 * r - 1;
    let hub = base + (t + 1) * per + 1;
    let mut edges = Vec::new();
    let mut roles = Vec::new();
    for copy in 1..=t + 1 {
        let (e, ro) = h_edges(t, r, base + (copy - 1) * per, hub, copy, layer);
        edges.extend(e);
        roles.extend(ro);
    }
    roles.push(VertexRole {
        kind: RoleKind::Hub,
        copy: 0,
        layer,
    });
    (hub, edges, roles)
}

/// `t+1` copies of `H` sharing the hub `w` (the last vertex).
pub fn build_g_prime(t: usize, r: usize) -> Result<Construction> {
    check_tr(t, r)?;
    let (hub, edges, roles) = g_prime_parts(t, r, 0, 1);
    Ok(Construction {
        hypergraph: Hypergraph::new(hub, edges)?,
        roles: VertexRoleMap { roles },
    })
}

/// The r-regular graph `G(t, r)`.
pub fn build_g(t: usize, r: usize) -> Result<Construction> {
    check_tr(t, r)?;
    let copies = r - (t + 1) * (t + 2) + 1;
    let mut edges = Vec::new();
    let mut roles = Vec::new();
    let mut hubs = Vec::with_capacity(copies);
    let mut base = 0;
    for layer in 1..=copies {
        let (hub, e, ro) = g_prime_parts(t, r, base, layer);
        edges.extend(e);
        roles.extend(ro);
        hubs.push(hub);
        base = hub;
    }
    for (i, &x) in hubs.iter().enumerate() {
        for &y in &hubs[i + 1..] {
            edges.push(vec![x, y]);
        }
    }
    Ok(Construction {
        hypergraph: Hypergraph::new(base, edges)?,
        roles: VertexRoleMap { roles },
    })
}

pub fn complete_graph(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::InvalidParameters("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push(vec![i, j]);
        }
    }
    Hypergraph::new(n, edges)
}

/// The cycle `1-2-...-n-1`; the closing edge `{1, n}` comes last.
pub fn odd_cycle(n: usize) -> Result<Hypergraph> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("odd cycle needs odd n >= 3, got {n}")));
    }
    let mut edges: Vec<Vec<usize>> = (1..n).map(|i| vec![i, i + 1]).collect();
    edges.push(vec![1, n]);
    Hypergraph::new(n, edges)
}

/// Two disjoint copies of the level below plus one edge spanning both;
/// level 1 is a single 2-vertex edge. Chromatic number 2, conflict-free
/// chromatic number `Δ + 1`.
pub fn gap_nested(delta: usize) -> Result<Hypergraph> {
    if delta == 0 {
        return Err(Error::InvalidParameters("gap_nested needs delta >= 1".into()));
    }
    let mut n = 2;
    let mut edges = vec![vec![1, 2]];
    for _ in 1..delta {
        let shifted: Vec<Vec<usize>> = edges
            .iter()
            .map(|e| e.iter().map(|&v| v + n).collect())
            .collect();
        edges.extend(shifted);
        n *= 2;
        edges.push((1..=n).collect());
    }
    Hypergraph::new(n, edges)
}

/// Two disjoint `K_Δ` plus one edge through all `2Δ` vertices.
pub fn two_cliques(delta: usize) -> Result<Hypergraph> {
    if delta < 2 {
        return Err(Error::InvalidParameters("two_cliques needs delta >= 2".into()));
    }
    let mut edges = Vec::new();
    for offset in [0, delta] {
        for i in 1..=delta {
            for j in i + 1..=delta {
                edges.push(vec![offset + i, offset + j]);
            }
        }
    }
    edges.push((1..=2 * delta).collect());
    Hypergraph::new(2 * delta, edges)
}

/// `r/2` disjoint copies of `K_4` minus the edge `{3, 4}` of each copy, plus
/// one edge on the `r` degree-2 vertices; `r = 2` gives plain `K_4`. Every
/// vertex has degree 3 and the conflict-free chromatic number exceeds 3.
pub fn k4e_gadget(r: usize) -> Result<Hypergraph> {
    if r < 2 || r % 2 == 1 {
        return Err(Error::InvalidParameters(format!("k4e_gadget needs even r >= 2, got {r}")));
    }
    if r == 2 {
        return complete_graph(4);
    }
    let copies = r / 2;
    let mut edges = Vec::new();
    let mut low = Vec::new();
    for c in 0..copies {
        let o = 4 * c;
        edges.extend([
            vec![o + 1, o + 2],
            vec![o + 1, o + 3],
            vec![o + 1, o + 4],
            vec![o + 2, o + 3],
            vec![o + 2, o + 4],
        ]);
        low.extend([o + 3, o + 4]);
    }
    edges.push(low);
    Hypergraph::new(4 * copies, edges)
}
