//! Exact search for `{a,b}`-factors: spanning subgraphs in which every
//! vertex has degree `a` or `b`.
//!
//! The graph is split into blocks (biconnected components). The block-cut
//! tree is rooted at the block holding the smallest edge of each component
//! and solved bottom-up: for a block with parent cut vertex `p`, we record
//! every degree of `p` inside the block that extends to a valid assignment of
//! the block and everything hanging below it. A cut vertex then accepts the
//! sums of its child blocks' values. Each block question is answered by the
//! exhaustive search in [`search`], so a negative verdict is a proof of
//! nonexistence.

mod blocks;
mod search;

pub use blocks::{biconnected_blocks, Blocks};

use crate::batch::{self, Exec};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use search::{BlockProblem, Budget, BudgetExceeded};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Selected edges (1-based, ascending) of a host graph whose degrees all lie
/// in `{a, b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub selected: Vec<usize>,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parity {
    /// Not refuted by parity; a search is still needed.
    Feasible,
    /// `a` and `b` are odd and this component has an odd number of vertices.
    OddComponent { component: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorOutcome {
    Found(Factor),
    /// Exhaustively refuted.
    None,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub outcome: FactorOutcome,
    /// Search nodes spent (branching decisions).
    pub nodes: u64,
    /// Set when the parity check alone refuted the instance.
    pub parity: Option<Parity>,
}

fn graph_edges(g: &Hypergraph) -> Result<Vec<(usize, usize)>> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| match e.as_slice() {
            &[u, v] => Ok((u - 1, v - 1)),
            _ => Err(Error::NotGraph {
                edge: i + 1,
                size: e.len(),
            }),
        })
        .collect()
}

fn check_targets(a: usize, b: usize) -> Result<()> {
    if a == 0 || a > b {
        return Err(Error::InvalidParameters(format!(
            "degree targets need 0 < a <= b, got a={a}, b={b}"
        )));
    }
    Ok(())
}

/// With `a` and `b` both odd, every component of a factor has an even number
/// of vertices; an odd component refutes the instance.
pub fn parity_precheck(g: &Hypergraph, a: usize, b: usize) -> Result<Parity> {
    graph_edges(g)?;
    check_targets(a, b)?;
    if a % 2 == 1 && b % 2 == 1 {
        if let Some(c) = g.components().into_iter().find(|c| c.len() % 2 == 1) {
            return Ok(Parity::OddComponent { component: c });
        }
    }
    Ok(Parity::Feasible)
}

/// Checks that `selected` (1-based) gives every vertex degree `a` or `b`.
pub fn is_ab_factor(g: &Hypergraph, selected: &[usize], a: usize, b: usize) -> bool {
    let mut deg = vec![0; g.n() + 1];
    for &i in selected {
        let Some(e) = i.checked_sub(1).and_then(|i| g.edges().get(i)) else {
            return false;
        };
        for &v in e {
            deg[v] += 1;
        }
    }
    deg[1..].iter().all(|&d| d == a || d == b)
}

/// The edges (1-based) of `g` not in `selected`.
pub fn complement(g: &Hypergraph, selected: &[usize]) -> Vec<usize> {
    let mut mark = vec![false; g.m() + 1];
    for &i in selected {
        mark[i] = true;
    }
    (1..=g.m()).filter(|&i| !mark[i]).collect()
}

/// Exact search for an `{a,b}`-factor with the default sequential settings.
pub fn find_ab_factor(g: &Hypergraph, a: usize, b: usize, budget: u64) -> Result<FactorOutcome> {
    let search = FactorSearch {
        budget,
        ..FactorSearch::default()
    };
    Ok(search.run(g, a, b)?.outcome)
}

#[derive(Debug, Clone, Copy)]
pub struct FactorSearch {
    pub budget: u64,
    /// Parallel mode evaluates the candidate boundary degrees of a block
    /// concurrently. Verdicts and witnesses match sequential mode.
    pub exec: Exec,
    /// Skip the parity shortcut and let the search refute everything.
    pub skip_parity: bool,
}

impl Default for FactorSearch {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            exec: Exec::Sequential,
            skip_parity: false,
        }
    }
}

struct Tree {
    parent_cut: Vec<Option<usize>>,
    child_cuts: Vec<Vec<usize>>,
    /// Child blocks of each vertex acting as a cut vertex.
    child_blocks: Vec<Vec<usize>>,
    /// Blocks in breadth-first order from the roots.
    order: Vec<usize>,
}

fn build_tree(n: usize, blocks: &Blocks, edges: &[(usize, usize)]) -> Tree {
    let nb = blocks.blocks.len();
    let mut tree = Tree {
        parent_cut: vec![None; nb],
        child_cuts: vec![Vec::new(); nb],
        child_blocks: vec![Vec::new(); n],
        order: Vec::with_capacity(nb),
    };
    let mut seen = vec![false; nb];
    for root in 0..nb {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut head = tree.order.len();
        tree.order.push(root);
        while head < tree.order.len() {
            let b = tree.order[head];
            head += 1;
            for v in block_vertices(&blocks.blocks[b], edges) {
                if !blocks.is_cut(v) || tree.parent_cut[b] == Some(v) {
                    continue;
                }
                tree.child_cuts[b].push(v);
                for &c in &blocks.vertex_blocks[v] {
                    if c != b && !seen[c] {
                        seen[c] = true;
                        tree.parent_cut[c] = Some(v);
                        tree.child_blocks[v].push(c);
                        tree.order.push(c);
                    }
                }
            }
        }
    }
    tree
}

fn block_vertices(block: &[usize], edges: &[(usize, usize)]) -> Vec<usize> {
    let mut vs: Vec<usize> = block.iter().flat_map(|&e| [edges[e].0, edges[e].1]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// `{x + y}` over two degree sets given as membership vectors.
fn sumset(x: &[bool], y: &[bool]) -> Vec<bool> {
    let mut out = vec![false; x.len() + y.len() - 1];
    for (i, _) in x.iter().enumerate().filter(|(_, &b)| b) {
        for (j, _) in y.iter().enumerate().filter(|(_, &b)| b) {
            out[i + j] = true;
        }
    }
    out
}

struct Solver<'g> {
    edges: &'g [(usize, usize)],
    blocks: Blocks,
    tree: Tree,
    targets: Vec<usize>,
    /// Per block: achievable degrees of the parent cut vertex inside it.
    achievable: Vec<Vec<bool>>,
    /// Per cut vertex: achievable total degree over its child blocks.
    below: Vec<Vec<bool>>,
    budget: Budget,
    exec: Exec,
}

impl<'g> Solver<'g> {
    /// The block as a search problem with the parent cut vertex pinned to
    /// `parent_degree` (ignored for roots).
    fn problem(&self, b: usize, parent_degree: usize) -> (BlockProblem, Vec<usize>) {
        let block = &self.blocks.blocks[b];
        let verts = block_vertices(block, self.edges);
        let local = |v: usize| verts.binary_search(&v).unwrap();
        let local_edges: Vec<(usize, usize)> = block
            .iter()
            .map(|&e| (local(self.edges[e].0), local(self.edges[e].1)))
            .collect();
        let mut deg = vec![0; verts.len()];
        for &(u, v) in &local_edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let allowed = verts
            .iter()
            .zip(&deg)
            .map(|(&v, &d)| {
                let set: Vec<usize> = if self.tree.parent_cut[b] == Some(v) {
                    vec![parent_degree]
                } else if self.blocks.is_cut(v) {
                    let below = &self.below[v];
                    (0..=d)
                        .filter(|&k| {
                            self.targets
                                .iter()
                                .any(|&t| t >= k && below.get(t - k).copied().unwrap_or(false))
                        })
                        .collect()
                } else {
                    self.targets.clone()
                };
                set.into_iter().filter(|&x| x <= d).collect()
            })
            .collect();
        (
            BlockProblem {
                edges: local_edges,
                allowed,
            },
            verts,
        )
    }

    fn parent_degree_in(&self, b: usize) -> usize {
        let p = self.tree.parent_cut[b].expect("non-root block");
        self.blocks.blocks[b]
            .iter()
            .filter(|&&e| self.edges[e].0 == p || self.edges[e].1 == p)
            .count()
    }

    /// Bottom-up pass. Returns false as soon as some block admits nothing.
    fn analyze(&mut self) -> std::result::Result<bool, BudgetExceeded> {
        for idx in (0..self.tree.order.len()).rev() {
            let b = self.tree.order[idx];
            for &c in &self.tree.child_cuts[b] {
                let mut acc = vec![true];
                for &child in &self.tree.child_blocks[c] {
                    acc = sumset(&acc, &self.achievable[child]);
                }
                self.below[c] = acc;
            }
            let verdicts = if self.tree.parent_cut[b].is_some() {
                let deg = self.parent_degree_in(b);
                let this = &*self;
                batch::map_range(self.exec, deg + 1, |x| {
                    let (p, _) = this.problem(b, x);
                    search::solve(&p, &this.budget).map(|s| s.is_some())
                })
            } else {
                let (p, _) = self.problem(b, 0);
                vec![search::solve(&p, &self.budget).map(|s| s.is_some())]
            };
            let mut set = Vec::with_capacity(verdicts.len());
            for v in verdicts {
                set.push(v?);
            }
            let any = set.iter().any(|&x| x);
            self.achievable[b] = set;
            if !any {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Top-down pass building the witness (0-based global edge indices).
    fn realize(&self) -> std::result::Result<Result<Vec<usize>>, BudgetExceeded> {
        let mut chosen = Vec::new();
        let mut work: Vec<(usize, usize)> = self
            .tree
            .order
            .iter()
            .filter(|&&b| self.tree.parent_cut[b].is_none())
            .map(|&b| (b, 0))
            .collect();
        work.reverse();
        while let Some((b, x)) = work.pop() {
            let (p, verts) = self.problem(b, x);
            let Some(sol) = search::solve(&p, &self.budget)? else {
                return Ok(Err(Error::Internal(format!("block {b} lost its solution"))));
            };
            let mut local_deg = vec![0; verts.len()];
            for &i in &sol {
                let (u, v) = p.edges[i];
                local_deg[u] += 1;
                local_deg[v] += 1;
                chosen.push(self.blocks.blocks[b][i]);
            }
            let mut pushes = Vec::new();
            for &c in &self.tree.child_cuts[b] {
                let k = local_deg[verts.binary_search(&c).unwrap()];
                let below = &self.below[c];
                let Some(need) = self
                    .targets
                    .iter()
                    .filter(|&&t| t >= k)
                    .map(|&t| t - k)
                    .find(|&d| below.get(d).copied().unwrap_or(false))
                else {
                    return Ok(Err(Error::Internal(format!("cut vertex {c} has no completion"))));
                };
                let kids = &self.tree.child_blocks[c];
                // suffix[i]: sums reachable by kids[i..]
                let mut suffix = vec![vec![true]; kids.len() + 1];
                for i in (0..kids.len()).rev() {
                    suffix[i] = sumset(&self.achievable[kids[i]], &suffix[i + 1]);
                }
                let mut rest = need;
                for (i, &kid) in kids.iter().enumerate() {
                    let pick = (0..=rest)
                        .find(|&x| {
                            self.achievable[kid].get(x).copied().unwrap_or(false)
                                && suffix[i + 1].get(rest - x).copied().unwrap_or(false)
                        })
                        .expect("split exists by construction of the sumsets");
                    rest -= pick;
                    pushes.push((kid, pick));
                }
            }
            work.extend(pushes.into_iter().rev());
        }
        chosen.sort_unstable();
        Ok(Ok(chosen))
    }
}

impl FactorSearch {
    pub fn run(&self, g: &Hypergraph, a: usize, b: usize) -> Result<FactorReport> {
        let edges = graph_edges(g)?;
        check_targets(a, b)?;
        if !self.skip_parity {
            let parity = parity_precheck(g, a, b)?;
            if parity != Parity::Feasible {
                return Ok(FactorReport {
                    outcome: FactorOutcome::None,
                    nodes: 0,
                    parity: Some(parity),
                });
            }
        }
        let report = |outcome, nodes| FactorReport {
            outcome,
            nodes,
            parity: None,
        };
        // Isolated vertices cannot reach a positive degree.
        if g.degrees()[1..].contains(&0) {
            return Ok(report(FactorOutcome::None, 0));
        }
        let blocks = biconnected_blocks(g.n(), &edges);
        let tree = build_tree(g.n(), &blocks, &edges);
        let mut targets = vec![a, b];
        targets.dedup();
        let mut solver = Solver {
            edges: &edges,
            achievable: vec![Vec::new(); blocks.blocks.len()],
            below: vec![Vec::new(); g.n()],
            blocks,
            tree,
            targets,
            budget: Budget::new(self.budget),
            exec: self.exec,
        };
        match solver.analyze() {
            Err(BudgetExceeded) => return Ok(report(FactorOutcome::BudgetExceeded, solver.budget.used())),
            Ok(false) => return Ok(report(FactorOutcome::None, solver.budget.used())),
            Ok(true) => {}
        }
        let chosen = match solver.realize() {
            Err(BudgetExceeded) => return Ok(report(FactorOutcome::BudgetExceeded, solver.budget.used())),
            Ok(r) => r?,
        };
        let selected: Vec<usize> = chosen.into_iter().map(|e| e + 1).collect();
        if !is_ab_factor(g, &selected, a, b) {
            return Err(Error::Internal("witness failed the degree check".into()));
        }
        Ok(report(
            FactorOutcome::Found(Factor { selected, a, b }),
            solver.budget.used(),
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cf2Outcome {
    /// A conflict-free 2-coloring built from a `{1, r-1}`-factor of the dual.
    Colored(Coloring),
    /// The dual has no `{1, r-1}`-factor, so no conflict-free 2-coloring
    /// exists.
    None,
    BudgetExceeded,
}

/// Conflict-free 2-coloring of a 2-regular r-uniform hypergraph through a
/// `{1, r-1}`-factor of its dual graph: vertices whose dual edges lie in the
/// factor get color 1, the rest color 2.
pub fn cf2_via_duality(h: &Hypergraph, search: &FactorSearch) -> Result<Cf2Outcome> {
    let r = h.uniformity().ok_or(Error::NotUniform)?;
    if h.regularity() != Some(2) {
        return Err(Error::NotTwoRegular);
    }
    if r < 2 {
        return Err(Error::InvalidParameters("uniformity must be at least 2".into()));
    }
    let g = h.dual()?;
    let (a, b) = (1.min(r - 1), 1.max(r - 1));
    Ok(match search.run(&g, a, b)?.outcome {
        FactorOutcome::Found(f) => {
            let mut colors = vec![2; h.n()];
            for &i in &f.selected {
                colors[i - 1] = 1;
            }
            Cf2Outcome::Colored(Coloring::from_vec_unchecked(colors))
        }
        FactorOutcome::None => Cf2Outcome::None,
        FactorOutcome::BudgetExceeded => Cf2Outcome::BudgetExceeded,
    })
}
