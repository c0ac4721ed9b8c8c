//! Biconnected components of a multigraph (edge-based Tarjan, iterative).

/// Blocks of a graph. Parallel edges land in the same block; a bridge is a
/// block on its own.
#[derive(Debug, Clone)]
pub struct Blocks {
    /// Edge indices of each block, ascending; blocks sorted by first edge.
    pub blocks: Vec<Vec<usize>>,
    /// Blocks containing each vertex (vertex ids are 0-based here).
    pub vertex_blocks: Vec<Vec<usize>>,
}

impl Blocks {
    pub fn is_cut(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() >= 2
    }
}

const UNSEEN: usize = usize::MAX;

/// `edges[i] = (u, v)` with 0-based, distinct endpoints.
pub fn biconnected_blocks(n: usize, edges: &[(usize, usize)]) -> Blocks {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    // (vertex, edge used to enter it, next adjacency slot)
    let mut frames: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN || adj[root].is_empty() {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        frames.push((root, UNSEEN, 0));
        while let Some(top) = frames.last_mut() {
            let (v, parent_edge, slot) = *top;
            if slot < adj[v].len() {
                top.2 += 1;
                let (w, e) = adj[v][slot];
                if e == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(u, _, _)) = frames.last() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == parent_edge {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
    }

    blocks.sort_unstable_by_key(|b| b[0]);
    let mut vertex_blocks = vec![Vec::new(); n];
    for (bi, block) in blocks.iter().enumerate() {
        for &e in block {
            let (u, v) = edges[e];
            for x in [u, v] {
                if vertex_blocks[x].last() != Some(&bi) {
                    vertex_blocks[x].push(bi);
                }
            }
        }
    }
    Blocks {
        blocks,
        vertex_blocks,
    }
}
