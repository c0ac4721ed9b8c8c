//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Verdicts are checked with small oracles written here rather than with the
//! crate's own verifiers. Time limits are wall-clock and pinned below.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cfcolor::batch::{self, Exec};
use cfcolor::constructions::{build_g, complete_graph, gap_nested, k4e_gadget, odd_cycle};
use cfcolor::corpus::{octahedron, regression_corpus};
use cfcolor::exact::{chi_cf_exact, chromatic_number};
use cfcolor::factors::{cf2_via_duality, find_ab_factor, parity_precheck, Cf2Outcome, FactorOutcome, FactorSearch, Parity, DEFAULT_BUDGET};
use cfcolor::four_uniform::{characterize_4uniform, elimination_ordering, safe_separator, three_color_4uniform};
use cfcolor::greedy::greedy_cf_coloring;
use cfcolor::lll::{color_bound, randomized_cf_coloring, LllOutcome, LllParams};
use cfcolor::random::{random_connected_4uniform, random_hypergraph, random_uniform, seeded};
use cfcolor::Hypergraph;
use rand::Rng;

const FACTOR_LIMIT: Duration = Duration::from_secs(120);
const PARITY_LIMIT: Duration = Duration::from_millis(1);
const EXACT_LIMIT: Duration = Duration::from_secs(10);
const SWEEP_4U_LIMIT: Duration = Duration::from_secs(60);
const GREEDY_INSTANCES: usize = 1000;
const FOUR_U_INSTANCES: usize = 500;
const LLL_SEEDS: u64 = 50;
const LLL_MIN_SUCCESS: usize = 49;

// ---- independent oracles ------------------------------------------------

fn counts(edge: &[usize], colors: &[usize]) -> std::collections::HashMap<usize, usize> {
    let mut m = std::collections::HashMap::new();
    for &v in edge {
        *m.entry(colors[v - 1]).or_insert(0) += 1;
    }
    m
}

fn oracle_cf(h: &Hypergraph, colors: &[usize]) -> bool {
    colors.len() == h.n()
        && colors.iter().all(|&c| c > 0)
        && h.edges().iter().all(|e| counts(e, colors).values().any(|&k| k == 1))
}

fn oracle_strong(h: &Hypergraph, colors: &[usize]) -> bool {
    h.edges().iter().all(|e| 2 * counts(e, colors).len() > e.len())
}

fn palette(colors: &[usize]) -> usize {
    colors.iter().copied().max().unwrap_or(0)
}

fn oracle_degrees(h: &Hypergraph) -> Vec<usize> {
    let mut d = vec![0; h.n() + 1];
    for e in h.edges() {
        for &v in e {
            d[v] += 1;
        }
    }
    d
}

/// Connectivity of the vertex set minus `removed`, joining vertices that
/// share an edge (edges are shrunk, not deleted).
fn oracle_connected_without(h: &Hypergraph, removed: &BTreeSet<usize>) -> bool {
    let alive: Vec<usize> = (1..=h.n()).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else { return true };
    let mut parent: Vec<usize> = (0..=h.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for e in h.edges() {
        let live: Vec<usize> = e.iter().copied().filter(|v| !removed.contains(v)).collect();
        for w in live.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, start);
    alive.iter().all(|&v| find(&mut parent, v) == root)
}

fn oracle_is_factor(g: &Hypergraph, selected: &[usize], a: usize, b: usize) -> bool {
    let mut d = vec![0; g.n() + 1];
    for &i in selected {
        for &v in &g.edges()[i - 1] {
            d[v] += 1;
        }
    }
    (1..=g.n()).all(|v| d[v] == a || d[v] == b)
}

// ---- criteria ------------------------------------------------------------

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn c1_g17_has_no_1_6_factor() -> Outcome {
    let (t, r) = (1usize, 7usize);
    let g = build_g(t, r).map_err(|e| e.to_string())?.hypergraph;
    let copies = r - (t + 1) * (t + 2) + 1;
    let n = copies * ((t + 1) * (2 * r - 1) + 1);
    let d = oracle_degrees(&g);
    ensure(g.n() == n && n == 54, format!("n = {}", g.n()))?;
    ensure(g.m() == 189 && 2 * g.m() == n * r, format!("m = {}", g.m()))?;
    ensure(d[1..].iter().all(|&x| x == r), "not 7-regular")?;
    ensure(d.iter().sum::<usize>() == 2 * g.m(), "degree sum")?;
    ensure(g.edges().iter().all(|e| e.len() == 2), "not a graph")?;
    let (out, dt) = timed(|| find_ab_factor(&g, 1, r - 1, DEFAULT_BUDGET));
    ensure(out == Ok(FactorOutcome::None), format!("factor search returned {out:?}"))?;
    ensure(dt <= FACTOR_LIMIT, format!("took {dt:?}"))?;
    Ok(format!("54 vertices, 189 edges, 7-regular; {{1,6}}-factor refuted in {dt:.2?}"))
}

fn c2_parity_and_octahedron() -> Outcome {
    let k5 = complete_graph(5).map_err(|e| e.to_string())?;
    let (p, dt) = timed(|| parity_precheck(&k5, 1, 3));
    ensure(matches!(p, Ok(Parity::OddComponent { .. })), format!("K5 parity: {p:?}"))?;
    ensure(dt < PARITY_LIMIT, format!("parity took {dt:?}"))?;
    let o = octahedron();
    match find_ab_factor(&o, 1, 3, DEFAULT_BUDGET) {
        Ok(FactorOutcome::Found(f)) => ensure(oracle_is_factor(&o, &f.selected, 1, 3), "octahedron witness invalid")?,
        other => return Err(format!("octahedron: {other:?}")),
    }
    Ok(format!("K5 refuted by parity in {dt:.2?}; octahedron witness verified"))
}

fn c3_dual_g17_needs_three() -> Outcome {
    let h = build_g(1, 7).map_err(|e| e.to_string())?.hypergraph.dual().map_err(|e| e.to_string())?;
    ensure(h.uniformity() == Some(7) && h.regularity() == Some(2), "dual is not 7-uniform 2-regular")?;
    let (lower, dt1) = timed(|| cf2_via_duality(&h, &FactorSearch::default()));
    ensure(lower == Ok(Cf2Outcome::None), format!("cf2_via_duality: {lower:?}"))?;
    let (c, dt2) = timed(|| greedy_cf_coloring(&h));
    ensure(oracle_cf(&h, c.colors()), "greedy coloring not conflict-free")?;
    ensure(palette(c.colors()) <= h.max_degree() + 1 && palette(c.colors()) == 3, format!("greedy palette {}", palette(c.colors())))?;
    ensure(dt1 <= FACTOR_LIMIT && dt2 <= FACTOR_LIMIT, "time limit")?;
    Ok(format!("no 2-coloring ({dt1:.2?}), greedy 3-coloring ({dt2:.2?})"))
}

fn c4_four_uniform_exact_values() -> Outcome {
    let mut notes = Vec::new();
    for (name, g, want) in [("dual(K5)", complete_graph(5).unwrap(), 3), ("dual(octahedron)", octahedron(), 2)] {
        let h = g.dual().map_err(|e| e.to_string())?;
        let (ex, dt) = timed(|| chi_cf_exact(&h, None));
        ensure(ex.chi_cf() == Some(want), format!("{name}: exact {:?}", ex.chi_cf()))?;
        ensure(dt < EXACT_LIMIT, format!("{name}: exact took {dt:?}"))?;
        let ch = characterize_4uniform(&h).map_err(|e| e.to_string())?;
        ensure(ch.chi_cf == want && !ch.anomaly, format!("{name}: characterize {}", ch.chi_cf))?;
        ensure(oracle_cf(&h, ch.coloring.colors()) && palette(ch.coloring.colors()) == want, format!("{name}: bad witness"))?;
        notes.push(format!("{name}={want}"));
    }
    Ok(notes.join(", "))
}

fn c5_greedy_sweep() -> Outcome {
    let bad: Vec<usize> = batch::map_range(Exec::Parallel, GREEDY_INSTANCES, |i| {
        let mut rng = seeded(5_000 + i as u64);
        let r = rng.random_range(2..=6);
        let delta = rng.random_range(1..=6);
        let n = rng.random_range(r..=60);
        let m = rng.random_range(1..=n * delta / r + 1);
        let sizes = if i % 2 == 0 { r..=r } else { 2..=r };
        let h = random_hypergraph(&mut rng, n, sizes, delta, m).unwrap();
        let c = greedy_cf_coloring(&h);
        let ok = oracle_cf(&h, c.colors()) && palette(c.colors()) <= h.max_degree() + 1 && h.max_degree() <= delta;
        (!ok).then_some(i)
    })
    .into_iter()
    .flatten()
    .collect();
    ensure(bad.is_empty(), format!("failing instances: {bad:?}"))?;
    Ok(format!("{GREEDY_INSTANCES}/{GREEDY_INSTANCES} conflict-free within Δ+1 colors"))
}

fn c6_four_uniform_sweep() -> Outcome {
    let (bad, dt) = timed(|| {
        batch::map_range(Exec::Parallel, FOUR_U_INSTANCES, |i| {
            let mut rng = seeded(6_000 + i as u64);
            let n_max = rng.random_range(10..=200);
            let h = random_connected_4uniform(&mut rng, n_max).unwrap();
            let check = || -> Result<(), String> {
                let sep = safe_separator(&h).map_err(|e| e.to_string())?;
                let s: BTreeSet<usize> = sep.removed.iter().copied().collect();
                ensure(s.len() == 3, "|S| != 3")?;
                ensure(h.edges().iter().any(|e| s.iter().all(|v| e.contains(v))), "S not inside an edge")?;
                ensure(oracle_connected_without(&h, &s), "H - S disconnected")?;
                elimination_ordering(&h, &sep).map_err(|e| e.to_string())?;
                let c = three_color_4uniform(&h).map_err(|e| e.to_string())?;
                ensure(palette(c.colors()) <= 3 && oracle_cf(&h, c.colors()), "bad coloring")
            };
            check().err().map(|e| format!("#{i}: {e}"))
        })
    });
    let bad: Vec<String> = bad.into_iter().flatten().collect();
    ensure(bad.is_empty(), bad.join("; "))?;
    ensure(dt <= SWEEP_4U_LIMIT, format!("took {dt:?}"))?;
    Ok(format!("{FOUR_U_INSTANCES}/{FOUR_U_INSTANCES} valid separators and 3-colorings in {dt:.2?}"))
}

fn c7_exact_anchors() -> Outcome {
    let single = Hypergraph::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
    let cases = [
        ("C5", odd_cycle(5).unwrap(), 3),
        ("K4", complete_graph(4).unwrap(), 4),
        ("single 4-edge", single, 2),
        ("k4e_gadget(4)", k4e_gadget(4).unwrap(), 4),
        ("gap_nested(3)", gap_nested(3).unwrap(), 4),
    ];
    for (name, h, want) in cases {
        let (got, dt) = timed(|| chi_cf_exact(&h, None));
        ensure(got.chi_cf() == Some(want), format!("{name}: {:?}", got.chi_cf()))?;
        ensure(dt < EXACT_LIMIT, format!("{name}: took {dt:?}"))?;
    }
    let (chi, dt) = timed(|| chromatic_number(&gap_nested(3).unwrap(), 4));
    ensure(chi == Some(2) && dt < EXACT_LIMIT, format!("χ(gap_nested(3)) = {chi:?}"))?;
    Ok("C5=3, K4=4, 4-edge=2, k4e_gadget(4)=4, gap_nested(3)=4 with χ=2".into())
}

fn c8_lll_suite() -> Outcome {
    let k = color_bound(8, 100).map_err(|e| e.to_string())?;
    ensure(k == 75, format!("color_bound(8,100) = {k}"))?;
    let runs = batch::map_range(Exec::Parallel, LLL_SEEDS as usize, |s| {
        let seed = s as u64;
        let h = random_uniform(&mut seeded(8_000 + seed), 2000, 8, 100, 25_000).unwrap();
        let delta = h.max_degree();
        match randomized_cf_coloring(&h, &LllParams::new(k, seed)).unwrap() {
            LllOutcome::Colored { coloring, .. } => Some((oracle_strong(&h, coloring.colors()) && oracle_cf(&h, coloring.colors()), delta)),
            LllOutcome::Exhausted { .. } => None,
        }
    });
    let ok = runs.iter().filter(|r| matches!(r, Some((true, _)))).count();
    let invalid = runs.iter().filter(|r| matches!(r, Some((false, _)))).count();
    ensure(invalid == 0, format!("{invalid} successes violate the strong condition"))?;
    ensure(ok >= LLL_MIN_SUCCESS, format!("only {ok}/{LLL_SEEDS} seeds succeeded"))?;
    Ok(format!("k = 75; {ok}/{LLL_SEEDS} seeds succeeded, all strong"))
}

fn c9_oracle_cross_validation() -> Outcome {
    let corpus: Vec<_> = regression_corpus().into_iter().filter(|i| i.hypergraph.n() <= 16).collect();
    let bad: Vec<String> = batch::map(Exec::Parallel, &corpus, |inst| {
        let h = &inst.hypergraph;
        let exact = chi_cf_exact(h, None).chi_cf()?;
        let greedy = palette(greedy_cf_coloring(h).colors());
        if exact > greedy {
            return Some(format!("{}: exact {exact} > greedy {greedy}", inst.name));
        }
        if matches!(h.uniformity(), Some(2 | 3)) {
            let chi = chromatic_number(h, h.n());
            if chi != Some(exact) {
                return Some(format!("{}: χ_cf {exact} != χ {chi:?}", inst.name));
            }
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!("{} corpus instances agree", corpus.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("G(1,7) counts and {1,6}-factor refutation", c1_g17_has_no_1_6_factor),
        ("K5 parity certificate, octahedron factor", c2_parity_and_octahedron),
        ("dual(G(1,7)) has conflict-free chromatic number 3", c3_dual_g17_needs_three),
        ("exact values on 2-regular 4-uniform duals", c4_four_uniform_exact_values),
        ("greedy Δ+1 property sweep", c5_greedy_sweep),
        ("4-uniform Δ=3 separator and 3-coloring sweep", c6_four_uniform_sweep),
        ("exact anchor values", c7_exact_anchors),
        ("resampling coloring at k = color_bound(8,100)", c8_lll_suite),
        ("exact oracle cross-validation on the corpus", c9_oracle_cross_validation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (res, dt) = timed(|| catch_unwind(AssertUnwindSafe(run)));
        let res = res.unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match res {
            Ok(detail) => println!("criterion {}: PASS  {name} — {detail} [{dt:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} — {why} [{dt:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
