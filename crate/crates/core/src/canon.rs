//! Canonical labelling of small graphs by partition refinement and backtracking.
//!
//! The key is the lexicographically least packed upper-triangular adjacency
//! matrix over every leaf of the individualisation-refinement tree, so two
//! graphs get equal keys exactly when they are isomorphic. Branches that only
//! differ by swapping twin vertices are skipped.

type Cells = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | 1u64 << v)
}

/// Split every cell by neighbor counts into each splitter until the ordered
/// partition is equitable.
fn refine(adj: &[u64], mut cells: Cells) -> Cells {
    loop {
        let mut changed = false;
        let mut si = 0;
        while si < cells.len() {
            let splitter = cell_mask(&cells[si]);
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell.iter().map(|&v| ((adj[v] & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                if keyed.first().map(|k| k.0) == keyed.last().map(|k| k.0) {
                    next.push(cell.clone());
                    continue;
                }
                changed = true;
                let mut group: Vec<usize> = Vec::new();
                let mut current = keyed[0].0;
                for (count, v) in keyed {
                    if count != current {
                        next.push(std::mem::take(&mut group));
                        current = count;
                    }
                    group.push(v);
                }
                next.push(group);
            }
            cells = next;
            si += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn encode(adj: &[u64], order: &[usize]) -> Vec<u8> {
    let k = order.len();
    let mut out = Vec::with_capacity(2 + k * k / 16 + 1);
    out.extend_from_slice(&(k as u16).to_be_bytes());
    let mut byte = 0u8;
    let mut filled = 0;
    for i in 0..k {
        let row = adj[order[i]];
        for &vj in &order[i + 1..] {
            byte = byte << 1 | (row >> vj & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    out
}

fn twins(adj: &[u64], u: usize, v: usize) -> bool {
    let bu = 1u64 << u;
    let bv = 1u64 << v;
    adj[u] & !bv == adj[v] & !bu
}

fn search(adj: &[u64], cells: Cells, best: &mut Option<Vec<u8>>) {
    let cells = refine(adj, cells);
    let target = cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i);
    let Some(ti) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = encode(adj, &order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[ti] {
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..ti]);
        next.push(vec![v]);
        next.push(cells[ti].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[ti + 1..]);
        search(adj, next, best);
    }
}

/// Canonical code of the graph with adjacency `adj` on vertices `0..adj.len()`.
pub(crate) fn canonical_code(adj: &[u64]) -> Vec<u8> {
    let k = adj.len();
    if k == 0 {
        return encode(adj, &[]);
    }
    let mut best = None;
    search(adj, vec![(0..k).collect()], &mut best);
    best.expect("search visits at least one leaf")
}

/// Canonical code of the subgraph induced on `mask`.
pub(crate) fn canonical_code_masked(adj: &[u64], mask: u64) -> Vec<u8> {
    canonical_code(&crate::bits::compress(adj, mask))
}
