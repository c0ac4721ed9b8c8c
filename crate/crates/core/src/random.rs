//! Seeded random instance generators for tests, benchmarks and the CLI.
//!
//! Every generator takes an explicit RNG; [`seeded`] gives the reproducible
//! stream used throughout the crate.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `m` random edges with sizes drawn uniformly from `sizes`, no vertex
/// exceeding degree `max_degree`.
///
/// Vertices are drawn uniformly among those with spare capacity; generation
/// stops early once too few such vertices remain for the next edge.
pub fn random_hypergraph<R: Rng>(
    rng: &mut R,
    n: usize,
    sizes: std::ops::RangeInclusive<usize>,
    max_degree: usize,
    m: usize,
) -> Result<Hypergraph> {
    if *sizes.start() == 0 || sizes.is_empty() || *sizes.end() > n {
        return Err(Error::InvalidParameters(format!(
            "edge sizes {sizes:?} must lie in 1..={n}"
        )));
    }
    let mut spare = vec![max_degree; n + 1];
    let mut open: Vec<usize> = if max_degree == 0 { Vec::new() } else { (1..=n).collect() };
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let size = rng.random_range(sizes.clone());
        if open.len() < size {
            break;
        }
        let mut picks = index::sample(rng, open.len(), size).into_vec();
        let edge: Vec<usize> = picks.iter().map(|&i| open[i]).collect();
        // Remove exhausted vertices from the highest slot down so the
        // remaining picked slots stay valid under swap_remove.
        picks.sort_unstable_by(|a, b| b.cmp(a));
        for i in picks {
            let v = open[i];
            spare[v] -= 1;
            if spare[v] == 0 {
                open.swap_remove(i);
            }
        }
        edges.push(edge);
    }
    Hypergraph::new(n, edges)
}

/// r-uniform variant of [`random_hypergraph`].
pub fn random_uniform<R: Rng>(rng: &mut R, n: usize, r: usize, max_degree: usize, m: usize) -> Result<Hypergraph> {
    random_hypergraph(rng, n, r..=r, max_degree, m)
}

/// A connected 4-uniform hypergraph with at most `n_max` vertices and
/// maximum degree exactly 3.
///
/// Grows edges that each reuse at least one earlier vertex with spare degree,
/// then adds edges among existing vertices. Retries until degree 3 is hit.
pub fn random_connected_4uniform<R: Rng>(rng: &mut R, n_max: usize) -> Result<Hypergraph> {
    if n_max < 7 {
        return Err(Error::InvalidParameters(format!(
            "a connected 4-uniform hypergraph of maximum degree 3 needs at least 7 vertices, got {n_max}"
        )));
    }
    loop {
        let h = grow_4uniform(rng, n_max)?;
        if h.max_degree() == 3 {
            return Ok(h);
        }
    }
}

fn grow_4uniform<R: Rng>(rng: &mut R, n_max: usize) -> Result<Hypergraph> {
    let mut deg = vec![0usize; n_max + 1];
    let mut n = 4;
    let mut edges = vec![vec![1, 2, 3, 4]];
    deg[1..=4].fill(1);
    let open = |deg: &[usize], n: usize| (1..=n).filter(|&v| deg[v] < 3).collect::<Vec<_>>();
    while n < n_max {
        let avail = open(&deg, n);
        if avail.is_empty() {
            break;
        }
        let fresh = rng.random_range(1..=3).min(n_max - n);
        let old = 4 - fresh;
        if avail.len() < old {
            break;
        }
        let mut edge: Vec<usize> = index::sample(rng, avail.len(), old).iter().map(|i| avail[i]).collect();
        edge.extend(n + 1..=n + fresh);
        n += fresh;
        for &v in &edge {
            deg[v] += 1;
        }
        edges.push(edge);
    }
    let extra = rng.random_range(0..=n / 4);
    for _ in 0..extra {
        let avail = open(&deg, n);
        if avail.len() < 4 {
            break;
        }
        let edge: Vec<usize> = index::sample(rng, avail.len(), 4).iter().map(|i| avail[i]).collect();
        for &v in &edge {
            deg[v] += 1;
        }
        edges.push(edge);
    }
    Hypergraph::new(n, edges)
}

/// A random loopless `r`-regular multigraph on `n` vertices from the
/// configuration model; its dual is a 2-regular `r`-uniform hypergraph.
pub fn random_regular_multigraph<R: Rng>(rng: &mut R, n: usize, r: usize) -> Result<Hypergraph> {
    if n < 2 || r == 0 || (n * r) % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2, r >= 1 and n*r even; got n={n}, r={r}"
        )));
    }
    let mut stubs: Vec<usize> = (1..=n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    for _ in 0..10_000 {
        stubs.shuffle(rng);
        if stubs.chunks(2).all(|p| p[0] != p[1]) {
            let pairs = stubs.chunks(2).map(|p| (p[0], p[1]));
            return Hypergraph::graph(n, pairs);
        }
    }
    Err(Error::InvalidParameters(format!(
        "could not sample a loopless {r}-regular multigraph on {n} vertices"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_cap_respected() {
        let h = random_uniform(&mut seeded(1), 50, 5, 3, 1000).unwrap();
        assert!(h.max_degree() <= 3);
        assert_eq!(h.uniformity(), Some(5));
        assert!(h.m() >= 25);
    }

    #[test]
    fn lll_scale_instance_is_nearly_full() {
        let h = random_uniform(&mut seeded(7), 2000, 8, 100, 25_000).unwrap();
        assert!(h.m() > 24_900, "{}", h.m());
        assert_eq!(h.max_degree(), 100);
    }

    #[test]
    fn mixed_sizes_stay_in_range() {
        let h = random_hypergraph(&mut seeded(3), 20, 2..=6, 4, 30).unwrap();
        assert!(h.edges().iter().all(|e| (2..=6).contains(&e.len())));
        assert!(random_hypergraph(&mut seeded(3), 3, 2..=6, 4, 30).is_err());
    }

    #[test]
    fn connected_4uniform_instances() {
        let mut rng = seeded(11);
        for _ in 0..50 {
            let h = random_connected_4uniform(&mut rng, 60).unwrap();
            assert!(h.n() <= 60);
            assert!(h.is_connected());
            assert_eq!(h.uniformity(), Some(4));
            assert_eq!(h.max_degree(), 3);
        }
    }

    #[test]
    fn regular_multigraph() {
        let g = random_regular_multigraph(&mut seeded(5), 10, 4).unwrap();
        assert_eq!(g.regularity(), Some(4));
        assert!(g.edges().iter().all(|e| e.len() == 2));
        let d = g.dual().unwrap();
        assert_eq!((d.uniformity(), d.regularity()), (Some(4), Some(2)));
        assert!(random_regular_multigraph(&mut seeded(5), 5, 3).is_err());
    }

    #[test]
    fn reproducible() {
        let a = random_uniform(&mut seeded(9), 30, 3, 4, 20).unwrap();
        let b = random_uniform(&mut seeded(9), 30, 3, 4, 20).unwrap();
        assert_eq!(a, b);
    }
}
