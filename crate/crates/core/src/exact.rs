//! Brute-force conflict-free chromatic number.
//!
//! Vertices are colored in ascending id order. Vertex `i` only tries colors
//! up to one more than the largest color used so far (and never above `k`),
//! which removes color-permutation symmetry. An edge is checked once its
//! largest vertex is colored. Meant for small instances (a few dozen
//! vertices at most, fewer when the structure prunes badly).

use crate::coloring::Coloring;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiCfResult {
    pub chi_cf: usize,
    pub witness: Coloring,
    /// Search nodes over all palette sizes tried.
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiCfOutcome {
    Exact(ChiCfResult),
    /// No coloring with at most `k_max` colors.
    AboveKMax { k_max: usize, nodes: u64 },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    ConflictFree,
    Proper,
}

fn edge_ok(rule: Rule, edge: &[usize], colors: &[usize]) -> bool {
    match rule {
        Rule::ConflictFree => edge.iter().any(|&v| {
            let c = colors[v - 1];
            edge.iter().filter(|&&w| colors[w - 1] == c).count() == 1
        }),
        Rule::Proper => {
            let c = colors[edge[0] - 1];
            edge.iter().any(|&w| colors[w - 1] != c)
        }
    }
}

fn backtrack(h: &Hypergraph, k: usize, rule: Rule, nodes: &mut u64) -> Option<Coloring> {
    let n = h.n();
    if n == 0 {
        return Some(Coloring::from_vec_unchecked(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    // closing[i]: edges whose largest vertex is i + 1
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, e) in h.edges().iter().enumerate() {
        closing[e[e.len() - 1] - 1].push(i);
    }
    let mut colors = vec![0usize; n];
    let mut max_used = vec![0usize; n + 1];
    let mut pos = 0usize;
    loop {
        let limit = k.min(max_used[pos] + 1);
        let c = colors[pos] + 1;
        if c > limit {
            colors[pos] = 0;
            if pos == 0 {
                return None;
            }
            pos -= 1;
            continue;
        }
        colors[pos] = c;
        *nodes += 1;
        if closing[pos]
            .iter()
            .all(|&e| edge_ok(rule, &h.edges()[e], &colors))
        {
            max_used[pos + 1] = max_used[pos].max(c);
            pos += 1;
            if pos == n {
                return Some(Coloring::from_vec_unchecked(colors));
            }
        }
    }
}

/// A conflict-free coloring with at most `k` colors, if one exists.
pub fn cf_colorable(h: &Hypergraph, k: usize) -> Option<Coloring> {
    backtrack(h, k, Rule::ConflictFree, &mut 0)
}

/// A proper coloring (no monochromatic edge) with at most `k` colors.
pub fn proper_colorable(h: &Hypergraph, k: usize) -> Option<Coloring> {
    backtrack(h, k, Rule::Proper, &mut 0)
}

fn smallest(h: &Hypergraph, k_max: usize, rule: Rule) -> ChiCfOutcome {
    let mut nodes = 0;
    let start = if h.n() == 0 { 0 } else { 1 };
    for k in start..=k_max.max(start) {
        if let Some(witness) = backtrack(h, k, rule, &mut nodes) {
            return ChiCfOutcome::Exact(ChiCfResult {
                chi_cf: k,
                witness,
                nodes,
            });
        }
    }
    ChiCfOutcome::AboveKMax { k_max, nodes }
}

/// Smallest palette admitting a conflict-free coloring, searched up to
/// `k_max` (default `Δ + 1`, which always suffices).
pub fn chi_cf_exact(h: &Hypergraph, k_max: Option<usize>) -> ChiCfOutcome {
    smallest(h, k_max.unwrap_or(h.max_degree() + 1), Rule::ConflictFree)
}

/// Exact chromatic number (no monochromatic edge), searched up to `k_max`.
/// Hypergraphs with a singleton edge have none.
pub fn chromatic_number(h: &Hypergraph, k_max: usize) -> Option<usize> {
    match smallest(h, k_max, Rule::Proper) {
        ChiCfOutcome::Exact(r) => Some(r.chi_cf),
        ChiCfOutcome::AboveKMax { .. } => None,
    }
}

impl ChiCfOutcome {
    pub fn chi_cf(&self) -> Option<usize> {
        match self {
            ChiCfOutcome::Exact(r) => Some(r.chi_cf),
            ChiCfOutcome::AboveKMax { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_graph, odd_cycle};
    use crate::verify::is_conflict_free;

    #[test]
    fn single_edge() {
        let h = Hypergraph::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        let c = cf_colorable(&h, 2).unwrap();
        assert_eq!(is_conflict_free(&h, &c), Ok(Ok(())));
        assert_eq!(cf_colorable(&h, 1), None);
        assert_eq!(chi_cf_exact(&h, None).chi_cf(), Some(2));
    }

    #[test]
    fn k4_needs_four() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(cf_colorable(&k4, 3), None);
        assert_eq!(chi_cf_exact(&k4, None).chi_cf(), Some(4));
    }

    #[test]
    fn odd_cycles_need_three() {
        for n in [3, 5, 7] {
            assert_eq!(chi_cf_exact(&odd_cycle(n).unwrap(), None).chi_cf(), Some(3));
        }
    }

    #[test]
    fn witness_uses_exactly_chi_colors() {
        let h = odd_cycle(5).unwrap();
        let ChiCfOutcome::Exact(r) = chi_cf_exact(&h, None) else { panic!() };
        assert_eq!(r.witness.palette(), 3);
        assert_eq!(r.witness.distinct(), 3);
        assert_eq!(is_conflict_free(&h, &r.witness), Ok(Ok(())));
    }

    #[test]
    fn k_max_respected() {
        let k4 = complete_graph(4).unwrap();
        assert!(matches!(chi_cf_exact(&k4, Some(3)), ChiCfOutcome::AboveKMax { k_max: 3, .. }));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(chi_cf_exact(&Hypergraph::edgeless(0), None).chi_cf(), Some(0));
        assert_eq!(chi_cf_exact(&Hypergraph::edgeless(3), None).chi_cf(), Some(1));
        let single = Hypergraph::new(1, vec![vec![1]]).unwrap();
        assert_eq!(chi_cf_exact(&single, None).chi_cf(), Some(1));
        assert_eq!(chromatic_number(&single, 5), None);
    }

    #[test]
    fn chromatic_number_of_small_graphs() {
        assert_eq!(chromatic_number(&odd_cycle(5).unwrap(), 5), Some(3));
        assert_eq!(chromatic_number(&complete_graph(5).unwrap(), 5), Some(5));
    }
}
