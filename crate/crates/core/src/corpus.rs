//! A fixed regression corpus: the extremal constructions, a few classical
//! small hypergraphs and seeded random instances.

use crate::constructions::{build_g, build_g_prime, build_h, complete_graph, gap_nested, k4e_gadget, odd_cycle, two_cliques};
use crate::hypergraph::Hypergraph;
use crate::random::{random_connected_4uniform, random_hypergraph, random_regular_multigraph, seeded};

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub hypergraph: Hypergraph,
}

/// K_{2,2,2}: 6 vertices, every vertex adjacent to all but its antipode.
pub fn octahedron() -> Hypergraph {
    let pairs = (1..=6).flat_map(|a| (a + 1..=6).map(move |b| (a, b))).filter(|&(a, b)| !(a % 2 == 1 && b == a + 1));
    Hypergraph::graph(6, pairs).unwrap()
}

pub fn petersen() -> Hypergraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i + 1, (i + 1) % 5 + 1));
        pairs.push((i + 1, i + 6));
        pairs.push((i + 6, (i + 2) % 5 + 6));
    }
    Hypergraph::graph(10, pairs).unwrap()
}

/// Lines of the Fano plane.
pub fn fano() -> Hypergraph {
    let lines = [[1, 2, 3], [1, 4, 5], [1, 6, 7], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 5, 6]];
    Hypergraph::new(7, lines.iter().map(|l| l.to_vec()).collect()).unwrap()
}

pub fn regression_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    let mut push = |name: String, h: Hypergraph| out.push(Instance { name, hypergraph: h });
    for n in [3, 5, 7, 9] {
        push(format!("odd_cycle_{n}"), odd_cycle(n).unwrap());
    }
    for n in 2..=6 {
        push(format!("complete_{n}"), complete_graph(n).unwrap());
    }
    for d in 2..=4 {
        push(format!("gap_nested_{d}"), gap_nested(d).unwrap());
        push(format!("two_cliques_{d}"), two_cliques(d).unwrap());
    }
    for r in [2, 4, 6] {
        push(format!("k4e_gadget_{r}"), k4e_gadget(r).unwrap());
    }
    push("single_4_edge".into(), Hypergraph::new(4, vec![vec![1, 2, 3, 4]]).unwrap());
    push(
        "two_4_edges".into(),
        Hypergraph::new(8, vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]]).unwrap(),
    );
    push("octahedron".into(), octahedron());
    push("petersen".into(), petersen());
    push("fano".into(), fano());
    push("dual_k5".into(), complete_graph(5).unwrap().dual().unwrap());
    push("dual_octahedron".into(), octahedron().dual().unwrap());
    push("dual_petersen".into(), petersen().dual().unwrap());
    push("h_1_7".into(), build_h(1, 7).unwrap().hypergraph);
    push("g_prime_1_7".into(), build_g_prime(1, 7).unwrap().hypergraph);
    push("g_1_7".into(), build_g(1, 7).unwrap().hypergraph);
    push("dual_g_1_7".into(), build_g(1, 7).unwrap().hypergraph.dual().unwrap());
    for seed in 0..8u64 {
        let mut rng = seeded(seed);
        let r = 2 + (seed as usize) % 4;
        let h = random_hypergraph(&mut rng, 12, r..=r, 3, 10).unwrap();
        push(format!("random_uniform_{seed}"), h);
        let h = random_hypergraph(&mut rng, 14, 2..=5, 3, 12).unwrap();
        push(format!("random_mixed_{seed}"), h);
        let h = random_connected_4uniform(&mut rng, 16 + 4 * seed as usize).unwrap();
        push(format!("random_4u_{seed}"), h);
        let g = random_regular_multigraph(&mut rng, 4 + 2 * (seed as usize % 3), 4).unwrap();
        push(format!("dual_random_4reg_{seed}"), g.dual().unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        let o = octahedron();
        assert_eq!((o.n(), o.m(), o.regularity()), (6, 12, Some(4)));
        let p = petersen();
        assert_eq!((p.n(), p.m(), p.regularity()), (10, 15, Some(3)));
        let f = fano();
        assert_eq!((f.m(), f.regularity(), f.max_edge_degree()), (7, Some(3), 6));
    }

    #[test]
    fn names_are_unique() {
        let c = regression_corpus();
        let mut names: Vec<&str> = c.iter().map(|i| i.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), c.len());
    }
}
