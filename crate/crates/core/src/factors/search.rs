//! Exhaustive in/out search over the edges of one block, with per-vertex
//! sets of admissible degrees.
//!
//! Each vertex tracks how many incident edges are chosen and how many are
//! still undecided. A vertex is dead when no admissible degree lies in
//! `[chosen, chosen + undecided]`; when the smallest admissible degree in
//! that window equals `chosen + undecided` all its open edges are forced in,
//! and when the largest equals `chosen` they are forced out.

use std::sync::atomic::{AtomicU64, Ordering};

/// Shared node budget. Nodes are flushed in batches so that parallel
/// searches do not contend on every step.
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

const FLUSH: u64 = 4096;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Self {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Records `n` nodes; false once the limit is exceeded.
    fn charge(&self, n: u64) -> bool {
        self.used.fetch_add(n, Ordering::Relaxed) + n <= self.limit
    }
}

pub struct BudgetExceeded;

/// One block: local vertices `0..allowed.len()`, local edges in decision
/// order.
pub struct BlockProblem {
    pub edges: Vec<(usize, usize)>,
    /// Admissible degrees per vertex, ascending.
    pub allowed: Vec<Vec<usize>>,
}

const OPEN: u8 = 0;
const IN: u8 = 1;
const OUT: u8 = 2;

struct Search<'p> {
    p: &'p BlockProblem,
    inc: Vec<Vec<usize>>,
    state: Vec<u8>,
    chosen: Vec<usize>,
    open: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'p> Search<'p> {
    fn new(p: &'p BlockProblem) -> Self {
        let nv = p.allowed.len();
        let mut inc = vec![Vec::new(); nv];
        for (i, &(u, v)) in p.edges.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        let open = inc.iter().map(Vec::len).collect();
        Self {
            p,
            inc,
            state: vec![OPEN; p.edges.len()],
            chosen: vec![0; nv],
            open,
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn assign(&mut self, e: usize, val: u8) {
        self.state[e] = val;
        self.trail.push(e);
        let (u, v) = self.p.edges[e];
        for x in [u, v] {
            self.open[x] -= 1;
            if val == IN {
                self.chosen[x] += 1;
            }
            self.queue.push(x);
        }
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let e = self.trail.pop().unwrap();
            let val = self.state[e];
            self.state[e] = OPEN;
            let (u, v) = self.p.edges[e];
            for x in [u, v] {
                self.open[x] += 1;
                if val == IN {
                    self.chosen[x] -= 1;
                }
            }
        }
    }

    /// Runs propagation to a fixpoint; false on a dead vertex.
    fn propagate(&mut self) -> bool {
        while let Some(v) = self.queue.pop() {
            let lo = self.chosen[v];
            let hi = lo + self.open[v];
            let allowed = &self.p.allowed[v];
            let first = allowed.partition_point(|&d| d < lo);
            let Some(&min_ok) = allowed.get(first).filter(|&&d| d <= hi) else {
                self.queue.clear();
                return false;
            };
            if self.open[v] == 0 {
                continue;
            }
            let max_ok = allowed[..allowed.partition_point(|&d| d <= hi)]
                .last()
                .copied()
                .unwrap_or(min_ok);
            let force = if min_ok == hi {
                IN
            } else if max_ok == lo {
                OUT
            } else {
                continue;
            };
            for i in 0..self.inc[v].len() {
                let e = self.inc[v][i];
                if self.state[e] == OPEN {
                    self.assign(e, force);
                }
            }
        }
        true
    }

    /// Depth-first search with "in" tried before "out". Returns the chosen
    /// edges of the first solution in that order.
    fn run(&mut self, budget: &Budget) -> Result<Option<Vec<usize>>, BudgetExceeded> {
        let mut pending = 0u64;
        let tick = |n: &mut u64| -> Result<(), BudgetExceeded> {
            *n += 1;
            if *n == FLUSH {
                *n = 0;
                if !budget.charge(FLUSH) {
                    return Err(BudgetExceeded);
                }
            }
            Ok(())
        };

        let finish = |n: u64| if budget.charge(n) { Ok(()) } else { Err(BudgetExceeded) };
        self.queue.extend(0..self.p.allowed.len());
        if !self.propagate() {
            return Ok(None);
        }
        // (edge, trail length before the decision, already tried out)
        let mut frames: Vec<(usize, usize, bool)> = Vec::new();
        let mut cursor = 0;
        loop {
            while cursor < self.state.len() && self.state[cursor] != OPEN {
                cursor += 1;
            }
            let mut ok = if cursor == self.state.len() {
                finish(pending)?;
                let sol = (0..self.state.len()).filter(|&e| self.state[e] == IN).collect();
                return Ok(Some(sol));
            } else {
                tick(&mut pending)?;
                frames.push((cursor, self.trail.len(), false));
                self.assign(cursor, IN);
                self.propagate()
            };
            while !ok {
                let Some(top) = frames.last_mut() else {
                    finish(pending)?;
                    return Ok(None);
                };
                let (e, len, tried_out) = *top;
                self.undo_to(len);
                if tried_out {
                    frames.pop();
                    continue;
                }
                top.2 = true;
                tick(&mut pending)?;
                self.assign(e, OUT);
                ok = self.propagate();
                cursor = e;
            }
        }
    }
}

/// First solution of `p` in search order, as indices into `p.edges`.
pub fn solve(p: &BlockProblem, budget: &Budget) -> Result<Option<Vec<usize>>, BudgetExceeded> {
    Search::new(p).run(budget)
}
