//! K-best order-preserving matchings between a column sequence and a
//! pattern, enumerated lazily in descending weight order.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::symbol::Symbol;

/// A matchable slot on the target side (one alignment column).
#[derive(Clone, Debug)]
pub(crate) struct TargetCol {
    pub symbol: Symbol,
    /// Bits gained by unifying this column with the incoming row.
    pub weight: f64,
}

/// A set of (column index, row position) pairs, strictly increasing in both.
#[derive(Clone, Debug)]
pub(crate) struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub weight: f64,
}

#[derive(Clone)]
struct Node {
    ti: usize,
    rj: usize,
    /// Once the row side has been skipped, the target side may not be
    /// skipped again until the next match. This canonical move order makes
    /// paths and matchings one-to-one.
    row_skipped: bool,
    gained: f64,
    pairs: Vec<(usize, usize)>,
}

struct Entry {
    bound: f64,
    seq: u64,
    node: Node,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Entry {}
impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Max-heap on bound; FIFO among equal bounds for determinism.
        self.bound
            .total_cmp(&other.bound)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Enumerates up to `k` distinct matchings with at least one matched pair,
/// best first. `pop_budget` caps the search frontier so pathological tie
/// plateaus stay bounded; the cut is deterministic.
pub(crate) fn k_best_matchings(
    target: &[TargetCol],
    row: &[Symbol],
    k: usize,
    pop_budget: usize,
) -> Vec<Matching> {
    let n = target.len();
    let m = row.len();
    if k == 0 || n == 0 || m == 0 {
        return Vec::new();
    }

    // Best achievable remaining weight from (ti, rj), ignoring the
    // canonical-order flag; admissible and consistent for the search below.
    let mut h = vec![0.0f64; (n + 1) * (m + 1)];
    let idx = |i: usize, j: usize| i * (m + 1) + j;
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            let mut best = h[idx(i + 1, j)].max(h[idx(i, j + 1)]);
            if target[i].symbol == row[j] {
                best = best.max(target[i].weight + h[idx(i + 1, j + 1)]);
            }
            h[idx(i, j)] = best;
        }
    }
    for i in (0..n).rev() {
        h[idx(i, m)] = h[idx(i + 1, m)];
    }
    for j in (0..m).rev() {
        h[idx(n, j)] = h[idx(n, j + 1)];
    }

    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    heap.push(Entry {
        bound: h[idx(0, 0)],
        seq,
        node: Node {
            ti: 0,
            rj: 0,
            row_skipped: false,
            gained: 0.0,
            pairs: Vec::new(),
        },
    });

    let mut out = Vec::new();
    let mut pops = 0;
    while let Some(Entry { node, .. }) = heap.pop() {
        pops += 1;
        if pops > pop_budget {
            break;
        }
        if node.ti == n && node.rj == m {
            if !node.pairs.is_empty() {
                out.push(Matching {
                    pairs: node.pairs,
                    weight: node.gained,
                });
                if out.len() == k {
                    break;
                }
            }
            continue;
        }
        // Match.
        if node.ti < n && node.rj < m && target[node.ti].symbol == row[node.rj] {
            let mut pairs = node.pairs.clone();
            pairs.push((node.ti, node.rj));
            let gained = node.gained + target[node.ti].weight;
            seq += 1;
            heap.push(Entry {
                bound: gained + h[idx(node.ti + 1, node.rj + 1)],
                seq,
                node: Node {
                    ti: node.ti + 1,
                    rj: node.rj + 1,
                    row_skipped: false,
                    gained,
                    pairs,
                },
            });
        }
        // Skip a target column.
        if node.ti < n && !node.row_skipped {
            seq += 1;
            heap.push(Entry {
                bound: node.gained + h[idx(node.ti + 1, node.rj)],
                seq,
                node: Node {
                    ti: node.ti + 1,
                    ..node.clone()
                },
            });
        }
        // Skip a row symbol.
        if node.rj < m {
            seq += 1;
            heap.push(Entry {
                bound: node.gained + h[idx(node.ti, node.rj + 1)],
                seq,
                node: Node {
                    rj: node.rj + 1,
                    row_skipped: true,
                    ..node
                },
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::parse_symbols;

    fn cols(text: &str, weights: &[f64]) -> Vec<TargetCol> {
        parse_symbols(text)
            .unwrap()
            .into_iter()
            .zip(weights)
            .map(|(symbol, &weight)| TargetCol { symbol, weight })
            .collect()
    }

    #[test]
    fn finds_unique_full_match() {
        let target = cols("a b c", &[1.0, 1.0, 1.0]);
        let row = parse_symbols("a b c").unwrap();
        let best = k_best_matchings(&target, &row, 4, 10_000);
        assert_eq!(best[0].pairs, vec![(0, 0), (1, 1), (2, 2)]);
        assert!((best[0].weight - 3.0).abs() < 1e-12);
    }

    #[test]
    fn descending_weight_order_and_distinctness() {
        let target = cols("a b a", &[2.0, 1.0, 3.0]);
        let row = parse_symbols("a").unwrap();
        let ms = k_best_matchings(&target, &row, 8, 10_000);
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0].pairs, vec![(2, 0)]);
        assert_eq!(ms[1].pairs, vec![(0, 0)]);
    }

    #[test]
    fn respects_ordering_constraint() {
        // `b a` against target `a b`: both symbols match somewhere but a
        // joint matching would cross, so the best matching has one pair.
        let target = cols("a b", &[1.0, 1.0]);
        let row = parse_symbols("b a").unwrap();
        let ms = k_best_matchings(&target, &row, 8, 10_000);
        assert!(ms.iter().all(|m| m.pairs.len() == 1));
    }

    #[test]
    fn no_shared_symbols_yields_nothing() {
        let target = cols("a b", &[1.0, 1.0]);
        let row = parse_symbols("x y").unwrap();
        assert!(k_best_matchings(&target, &row, 4, 10_000).is_empty());
    }

    #[test]
    fn exhaustive_count_matches_closed_form() {
        // All increasing matchings of `a a a` into `a a`: choose pairs of
        // an increasing injection; sum over sizes 1 and 2: 3*2=6? size 1:
        // 3*2 = 6 positions... counted directly below by enumeration.
        let target = cols("a a a", &[1.0, 1.0, 1.0]);
        let row = parse_symbols("a a").unwrap();
        let ms = k_best_matchings(&target, &row, 1000, 100_000);
        // size-2 matchings: C(3,2) = 3; size-1: 3 cols x 2 row slots = 6.
        assert_eq!(ms.len(), 9);
        assert_eq!(ms[0].pairs.len(), 2);
    }
}
