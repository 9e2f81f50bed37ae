//! Independent brute-force oracles and exhaustive comparisons against the
//! pruned searches shipped in `encodings`.
//!
//! Both naive procedures below enumerate the full assignment space with no
//! pruning at all, so they share no code path with the checked functions.

use crate::encodings::{embedding_exists, is_k_colorable, FiniteGraph};

use super::{CaseReport, Report};
use crate::verdict::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrosscheckKind {
    Colorability,
    Embedding,
}

fn pair_list(n: u64) -> Vec<(u64, u64)> {
    let mut pairs = Vec::new();
    for b in 1..n {
        for a in 0..b {
            pairs.push((a, b));
        }
    }
    pairs
}

fn graph_from_mask(n: u64, pairs: &[(u64, u64)], mask: u64) -> FiniteGraph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    FiniteGraph::new(n, edges).expect("mask edges are in range")
}

/// Every assignment of `k` colors, checked edge by edge.
fn naive_colorable(g: &FiniteGraph, k: u64) -> bool {
    let n = g.num_vertices();
    let total = k.pow(n as u32);
    'assignment: for code in 0..total {
        let mut colors = Vec::with_capacity(n as usize);
        let mut rest = code;
        for _ in 0..n {
            colors.push(rest % k);
            rest /= k;
        }
        for (a, b) in g.edges() {
            if colors[a as usize] == colors[b as usize] {
                continue 'assignment;
            }
        }
        return true;
    }
    n == 0
}

fn naive_embed_rec(
    h_edges: &[(u64, u64)],
    hn: u64,
    g_adj: &[Vec<bool>],
    map: &mut Vec<u64>,
) -> bool {
    if map.len() as u64 == hn {
        return h_edges
            .iter()
            .all(|&(a, b)| g_adj[map[a as usize] as usize][map[b as usize] as usize]);
    }
    for t in 0..g_adj.len() as u64 {
        if map.contains(&t) {
            continue;
        }
        map.push(t);
        if naive_embed_rec(h_edges, hn, g_adj, map) {
            map.pop();
            return true;
        }
        map.pop();
    }
    false
}

/// Every injective map, with the edge condition checked only at the leaves.
fn naive_embedding(h: &FiniteGraph, g: &FiniteGraph) -> bool {
    if h.num_vertices() > g.num_vertices() {
        return false;
    }
    let h_edges: Vec<(u64, u64)> = h.edges().collect();
    naive_embed_rec(&h_edges, h.num_vertices(), &g.adjacency(), &mut Vec::new())
}

/// Compares the pruned searches against unpruned enumeration on every graph
/// (or graph pair) with at most `size_bound` vertices. `size_bound <= 6`.
pub fn oracle_crosscheck(kind: CrosscheckKind, size_bound: u64) -> Report {
    assert!(
        size_bound <= 6,
        "exhaustive enumeration needs size_bound <= 6"
    );
    let mut report = Report {
        reduction: match kind {
            CrosscheckKind::Colorability => "crosscheck_colorability".into(),
            CrosscheckKind::Embedding => "crosscheck_embedding".into(),
        },
        family: format!("all graphs with <= {size_bound} vertices"),
        seed: 0,
        cases: 0,
        valid: 0,
        invalid: 0,
        unknown: 0,
        failures: Vec::new(),
    };
    // All graphs on n vertices, built once up front; the pair loop below
    // would otherwise reconstruct the same graphs a million times over.
    let all_graphs: Vec<Vec<FiniteGraph>> = (1..=size_bound)
        .map(|n| {
            let pairs = pair_list(n);
            (0..1u64 << pairs.len())
                .map(|mask| graph_from_mask(n, &pairs, mask))
                .collect()
        })
        .collect();
    match kind {
        CrosscheckKind::Colorability => {
            for (n, graphs) in all_graphs.iter().enumerate() {
                for (mask, g) in graphs.iter().enumerate() {
                    for k in 2..=4 {
                        report.cases += 1;
                        if is_k_colorable(g, k) == naive_colorable(g, k) {
                            report.valid += 1;
                        } else {
                            report.invalid += 1;
                            report.failures.push(disagreement(
                                report.cases,
                                format!("n={} mask={mask} k={k}", n + 1),
                            ));
                        }
                    }
                }
            }
        }
        CrosscheckKind::Embedding => {
            // The quadratic pair space is large enough to fan out over
            // threads; chunks are contiguous in pattern order and carry
            // their case offsets, so the merged report is identical to a
            // serial run.
            let flat: Vec<(usize, usize, &FiniteGraph)> = all_graphs
                .iter()
                .enumerate()
                .flat_map(|(n, gs)| gs.iter().enumerate().map(move |(mask, g)| (n + 1, mask, g)))
                .collect();
            let total = flat.len() as u64;
            let workers = std::thread::available_parallelism()
                .map(|p| p.get())
                .unwrap_or(1)
                .min(8)
                .max(1);
            let chunk_len = flat.len().div_ceil(workers);
            let chunks: Vec<(u64, u64, Vec<CaseReport>)> = std::thread::scope(|s| {
                let handles: Vec<_> = flat
                    .chunks(chunk_len)
                    .enumerate()
                    .map(|(ci, hs)| {
                        let flat = &flat;
                        let base = (ci * chunk_len) as u64 * total;
                        s.spawn(move || {
                            let mut case = base;
                            let (mut valid, mut invalid) = (0u64, 0u64);
                            let mut failures = Vec::new();
                            for &(hn, h_mask, h) in hs {
                                for &(gn, g_mask, g) in flat.iter() {
                                    case += 1;
                                    if embedding_exists(h, g) == naive_embedding(h, g) {
                                        valid += 1;
                                    } else {
                                        invalid += 1;
                                        failures.push(disagreement(
                                            case,
                                            format!(
                                                "h: n={hn} mask={h_mask}; g: n={gn} mask={g_mask}"
                                            ),
                                        ));
                                    }
                                }
                            }
                            (valid, invalid, failures)
                        })
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            });
            report.cases = total * total;
            for (valid, invalid, failures) in chunks {
                report.valid += valid;
                report.invalid += invalid;
                report.failures.extend(failures);
            }
        }
    }
    report
}

fn disagreement(index: u64, witness: String) -> CaseReport {
    CaseReport {
        index,
        seed: 0,
        stage: "crosscheck".into(),
        verdict: Verdict::invalid(witness),
        instance: String::new(),
        forward: String::new(),
        solution: String::new(),
        back: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_into_k3_both_true() {
        let k3 = FiniteGraph::complete(3);
        assert!(naive_embedding(&k3, &k3));
        assert!(embedding_exists(&k3, &k3));
    }

    #[test]
    fn colorability_agrees_up_to_four_vertices() {
        let report = oracle_crosscheck(CrosscheckKind::Colorability, 4);
        assert_eq!(report.invalid, 0, "{}", report.to_json());
        assert_eq!(report.valid, report.cases);
    }

    #[test]
    fn embedding_agrees_up_to_three_vertices() {
        let report = oracle_crosscheck(CrosscheckKind::Embedding, 3);
        assert_eq!(report.invalid, 0, "{}", report.to_json());
        assert_eq!(report.valid, report.cases);
    }
}
