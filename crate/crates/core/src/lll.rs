//! Random coloring with resampling of edges that carry too few colors.
//!
//! A uniform random coloring from `k` colors is repaired by repeatedly
//! picking the lowest-index edge with at most `⌊r/2⌋` distinct colors and
//! recoloring all of its vertices. An edge with more than `r/2` colors always
//! has a uniquely colored vertex, so any result is conflict-free.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`; vertices draw
//! their colors in ascending id order via `random_range(1..=k)`, so a seed
//! fully determines the output.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_MAX_RESAMPLES: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LllParams {
    pub colors: usize,
    pub seed: u64,
    /// Maximum number of edge resamples before giving up.
    pub max_resamples: u64,
}

impl LllParams {
    pub fn new(colors: usize, seed: u64) -> Self {
        Self {
            colors,
            seed,
            max_resamples: DEFAULT_MAX_RESAMPLES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LllOutcome {
    Colored { coloring: Coloring, resamples: u64 },
    Exhausted { resamples: u64 },
}

impl LllOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            LllOutcome::Colored { coloring, .. } => Some(coloring),
            LllOutcome::Exhausted { .. } => None,
        }
    }
}

/// `⌈(e·r)^(2/r) · (e·r/2) · Δ^(2/r)⌉`, the palette size for which the
/// local lemma guarantees a coloring with more than `r/2` colors per edge.
pub fn color_bound(r: usize, max_degree: usize) -> Result<usize> {
    if r < 2 || max_degree < 2 {
        return Err(Error::InvalidParameters(format!(
            "color bound needs r >= 2 and degree >= 2, got r={r}, degree={max_degree}"
        )));
    }
    let er = std::f64::consts::E * r as f64;
    let exp = 2.0 / r as f64;
    let k = er.powf(exp) * (er / 2.0) * (max_degree as f64).powf(exp);
    Ok(k.ceil() as usize)
}

struct EdgeCheck {
    r: usize,
    seen: Vec<u64>,
    stamp: u64,
}

impl EdgeCheck {
    fn violated(&mut self, edge: &[usize], colors: &[usize]) -> bool {
        self.stamp += 1;
        let mut distinct = 0;
        for &v in edge {
            let c = colors[v - 1];
            if self.seen[c] != self.stamp {
                self.seen[c] = self.stamp;
                distinct += 1;
            }
        }
        2 * distinct <= self.r
    }
}

pub fn randomized_cf_coloring(h: &Hypergraph, params: &LllParams) -> Result<LllOutcome> {
    if params.colors == 0 {
        return Err(Error::InvalidParameters("palette size must be at least 1".into()));
    }
    let r = match h.uniformity() {
        Some(r) => r,
        None if h.m() == 0 => 0,
        None => return Err(Error::NotUniform),
    };
    let k = params.colors;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut colors: Vec<usize> = (0..h.n()).map(|_| rng.random_range(1..=k)).collect();

    let inc = h.incidence();
    let mut check = EdgeCheck {
        r,
        seen: vec![0; k + 1],
        stamp: 0,
    };
    let mut bad: BTreeSet<usize> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| check.violated(e, &colors))
        .map(|(i, _)| i)
        .collect();

    let mut resamples = 0;
    while let Some(&e) = bad.iter().next() {
        if resamples == params.max_resamples {
            return Ok(LllOutcome::Exhausted { resamples });
        }
        resamples += 1;
        for &v in &h.edges()[e] {
            colors[v - 1] = rng.random_range(1..=k);
        }
        for &v in &h.edges()[e] {
            for &f in &inc[v] {
                if check.violated(&h.edges()[f], &colors) {
                    bad.insert(f);
                } else {
                    bad.remove(&f);
                }
            }
        }
    }
    Ok(LllOutcome::Colored {
        coloring: Coloring::from_vec_unchecked(colors),
        resamples,
    })
}
