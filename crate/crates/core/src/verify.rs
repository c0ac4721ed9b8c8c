//! Checkers for proper, conflict-free and strong (more than r/2 colors)
//! colorings. Edge indices in results are 1-based.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Outcome of a check: `Ok(())` or the sorted 1-based indices of the
/// offending edges.
pub type Verdict = std::result::Result<(), Vec<usize>>;

fn check_len(h: &Hypergraph, c: &Coloring) -> Result<()> {
    if h.n() != c.len() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            actual: c.len(),
        });
    }
    Ok(())
}

fn edge_colors(edge: &[usize], c: &Coloring) -> Vec<usize> {
    let mut colors: Vec<usize> = edge.iter().map(|&v| c.color(v)).collect();
    colors.sort_unstable();
    colors
}

/// Smallest vertex of `edge` whose color appears exactly once in it.
pub(crate) fn witness_in(edge: &[usize], c: &Coloring) -> Option<usize> {
    let sorted = edge_colors(edge, c);
    let once = |col: usize| {
        let lo = sorted.partition_point(|&x| x < col);
        sorted.get(lo + 1) != Some(&col)
    };
    edge.iter().copied().find(|&v| once(c.color(v)))
}

fn distinct_in(edge: &[usize], c: &Coloring) -> usize {
    let mut colors = edge_colors(edge, c);
    colors.dedup();
    colors.len()
}

/// The smallest vertex of edge `e` (1-based) whose color is unique in `e`.
pub fn unique_color_witness(h: &Hypergraph, c: &Coloring, e: usize) -> Result<Option<usize>> {
    check_len(h, c)?;
    let edge = e
        .checked_sub(1)
        .and_then(|i| h.edges().get(i))
        .ok_or(Error::EdgeIndexOutOfRange { index: e, m: h.m() })?;
    Ok(witness_in(edge, c))
}

fn collect_bad(h: &Hypergraph, bad: impl Fn(&[usize]) -> bool) -> Verdict {
    let list: Vec<usize> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| bad(e))
        .map(|(i, _)| i + 1)
        .collect();
    if list.is_empty() {
        Ok(())
    } else {
        Err(list)
    }
}

pub fn is_conflict_free(h: &Hypergraph, c: &Coloring) -> Result<Verdict> {
    check_len(h, c)?;
    Ok(collect_bad(h, |e| witness_in(e, c).is_none()))
}

/// Proper means no monochromatic edge; singleton edges always fail.
pub fn is_proper(h: &Hypergraph, c: &Coloring) -> Result<Verdict> {
    check_len(h, c)?;
    Ok(collect_bad(h, |e| distinct_in(e, c) == 1))
}

/// Every edge of an r-uniform hypergraph must carry more than r/2 distinct
/// colors. Edgeless input passes vacuously.
pub fn strong_condition(h: &Hypergraph, c: &Coloring) -> Result<Verdict> {
    check_len(h, c)?;
    if h.m() == 0 {
        return Ok(Ok(()));
    }
    let r = h.uniformity().ok_or(Error::NotUniform)?;
    Ok(collect_bad(h, |e| 2 * distinct_in(e, c) <= r))
}
