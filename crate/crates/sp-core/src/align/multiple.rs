//! Beam search building multiple alignments from pairwise extensions.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::pairwise::{k_best_matchings, Matching, TargetCol};
use super::Alignment;
use crate::pattern::Pattern;
use crate::score::score_alignment;
use crate::store::OldStore;

/// Search knobs for callers that wrap the alignment engine.
#[derive(Clone, Copy, Debug)]
pub struct AlignConfig {
    pub beam_width: usize,
    pub max_rows: usize,
}

impl Default for AlignConfig {
    fn default() -> Self {
        AlignConfig {
            beam_width: 20,
            max_rows: 16,
        }
    }
}

const POP_BUDGET: usize = 20_000;

/// Deterministic ranking: larger saving first, then fewer Old rows, then
/// lexicographically smaller sorted row-id list, then the more unified
/// (fewer columns) arrangement, then coverage in fewer contiguous spans,
/// then the column layout itself.
pub(crate) fn cmp_alignments(a: &Alignment, b: &Alignment) -> Ordering {
    b.score
        .saving
        .total_cmp(&a.score.saving)
        .then_with(|| a.old_row_count().cmp(&b.old_row_count()))
        .then_with(|| {
            let mut ids_a: Vec<&str> = a.old_row_ids().iter().map(|i| i.as_str()).collect();
            let mut ids_b: Vec<&str> = b.old_row_ids().iter().map(|i| i.as_str()).collect();
            ids_a.sort_unstable();
            ids_b.sort_unstable();
            ids_a.cmp(&ids_b)
        })
        .then_with(|| a.columns().len().cmp(&b.columns().len()))
        .then_with(|| {
            // Coherence: prefer coverage in fewer contiguous spans.
            let runs = |x: &Alignment| {
                let mask = x.covered_new_mask();
                mask.iter()
                    .enumerate()
                    .filter(|(i, c)| **c && (*i == 0 || !mask[i - 1]))
                    .count()
            };
            runs(a).cmp(&runs(b))
        })
        .then_with(|| {
            let layout = |x: &Alignment| -> Vec<Vec<(usize, usize)>> {
                x.columns()
                    .iter()
                    .map(|c| c.cells.iter().map(|(&r, &p)| (r, p)).collect())
                    .collect()
            };
            layout(a).cmp(&layout(b))
        })
}

/// Column slots of a partial alignment as seen by an incoming row: a column
/// pays its New symbol's bits when it holds a New cell not yet unified with
/// any Old row, and nothing otherwise.
fn target_columns(alignment: &Alignment, store: &OldStore) -> Vec<TargetCol> {
    alignment
        .columns()
        .iter()
        .map(|col| {
            let symbol = alignment.column_symbol(col).clone();
            let newly_coverable =
                col.cells.contains_key(&0) && col.cells.keys().all(|&r| r == 0);
            let weight = if newly_coverable {
                store.symbol_bits(&symbol)
            } else {
                0.0
            };
            TargetCol { symbol, weight }
        })
        .collect()
}

/// Aligns one New pattern against one Old pattern, returning up to
/// `max_alternatives` distinct arrangements with at least one unified
/// column, best saving first. Scores are taken against a store holding
/// just `old`, so alternatives rank by how much of the New pattern the
/// single Old pattern explains.
pub fn pairwise_align(new: &Pattern, old: &Pattern, max_alternatives: usize) -> Vec<Alignment> {
    let store = OldStore::from_patterns(vec![old.clone()]).expect("single-pattern store");
    let mut base = Alignment::baseline(new);
    base.score = score_alignment(&base, &store);
    let targets = target_columns(&base, &store);
    let matchings = k_best_matchings(&targets, old.symbols(), max_alternatives, POP_BUDGET);
    let mut out: Vec<Alignment> = matchings
        .iter()
        .map(|m| {
            let mut a = base.extend_with(old, &m.pairs);
            a.score = score_alignment(&a, &store);
            a
        })
        .collect();
    out.sort_by(cmp_alignments);
    out.truncate(max_alternatives);
    out
}

/// Builds multiple alignments of `new` against the store by repeatedly
/// pairwise-aligning the current unified structure with store patterns,
/// keeping the `beam_width` best new arrangements each round. A row is only
/// added while it strictly improves the saving; the ranked list of every
/// distinct arrangement encountered (including the bare New pattern) is
/// returned, best first.
pub fn build_multiple_alignment(
    new: &Pattern,
    store: &OldStore,
    beam_width: usize,
    max_rows: usize,
) -> Vec<Alignment> {
    let beam_width = beam_width.max(1);
    let mut baseline = Alignment::baseline(new);
    baseline.score = score_alignment(&baseline, store);

    let mut pool: BTreeMap<Vec<(String, Vec<usize>)>, Alignment> = BTreeMap::new();
    pool.insert(baseline.coverage_signature(), baseline.clone());

    // A row's marginal saving is the bits it newly covers minus its
    // reference-plus-marker cost, so matchsets below that floor (the
    // enumeration is weight-descending) cannot improve and are cut early.
    let row_cost: Vec<f64> = store
        .patterns()
        .iter()
        .map(|p| store.reference_bits(p.id()).expect("stored pattern") + crate::score::ROW_MARKER_BITS)
        .collect();

    let mut frontier = vec![baseline];
    while !frontier.is_empty() {
        let mut fresh: Vec<Alignment> = Vec::new();
        for parent in &frontier {
            if parent.old_row_count() >= max_rows {
                continue;
            }
            let targets = target_columns(parent, store);
            let coverable: std::collections::BTreeSet<&crate::symbol::Symbol> = targets
                .iter()
                .filter(|t| t.weight > 0.0)
                .map(|t| &t.symbol)
                .collect();
            if coverable.is_empty() {
                continue;
            }
            for (pi, pattern) in store.patterns().iter().enumerate() {
                // Each stored pattern contributes at most one row.
                if parent.old_rows().iter().any(|r| r.id() == pattern.id()) {
                    continue;
                }
                if !pattern.symbols().iter().any(|s| coverable.contains(s)) {
                    continue;
                }
                let mut matchings =
                    k_best_matchings(&targets, pattern.symbols(), beam_width, POP_BUDGET);
                matchings.retain(|m| m.weight > row_cost[pi]);
                // Coverage-dominated matchsets of the same row can never
                // beat their dominator: covering more is free under the
                // bit model and matches never conflict across rows.
                let coverage: Vec<Vec<usize>> = matchings
                    .iter()
                    .map(|m| {
                        m.pairs
                            .iter()
                            .map(|&(t, _)| t)
                            .filter(|&t| targets[t].weight > 0.0)
                            .collect()
                    })
                    .collect();
                let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
                let keep: Vec<bool> = (0..matchings.len())
                    .map(|i| {
                        !(0..matchings.len()).any(|j| {
                            j != i
                                && coverage[i].len() < coverage[j].len()
                                && is_subset(&coverage[i], &coverage[j])
                        })
                    })
                    .collect();
                for (mi, Matching { pairs, .. }) in matchings.iter().enumerate() {
                    if !keep[mi] {
                        continue;
                    }
                    let mut child = parent.extend_with(pattern, &pairs);
                    child.score = score_alignment(&child, store);
                    if child.score.saving <= parent.score.saving {
                        continue;
                    }
                    let sig = child.coverage_signature();
                    match pool.get_mut(&sig) {
                        None => {
                            pool.insert(sig, child.clone());
                            fresh.push(child);
                        }
                        Some(existing) => {
                            if cmp_alignments(&child, existing) == Ordering::Less {
                                *existing = child;
                            }
                        }
                    }
                }
            }
        }
        fresh.sort_by(cmp_alignments);
        fresh.truncate(beam_width);
        frontier = fresh;
    }

    let mut out: Vec<Alignment> = pool.into_values().map(|a| a.canonical_row_order()).collect();
    out.sort_by(cmp_alignments);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Pattern;

    #[test]
    fn identity_pairwise_alignment() {
        let new = Pattern::incoming("n", "a b c").unwrap();
        let old = Pattern::old("p", "a b c", 1).unwrap();
        let out = pairwise_align(&new, &old, 4);
        assert!(!out.is_empty());
        let best = &out[0];
        assert_eq!(best.columns().len(), 3);
        assert!(best.columns().iter().all(|c| c.cells.len() == 2));
        assert_eq!(best.unmatched_new_count(), 0);
        best.check_invariants().unwrap();
    }

    #[test]
    fn insertion_leaves_unmatched_column() {
        let new = Pattern::incoming("n", "a x b").unwrap();
        let old = Pattern::old("p", "a b", 1).unwrap();
        let best = &pairwise_align(&new, &old, 4)[0];
        assert_eq!(best.columns().len(), 3);
        assert_eq!(best.new_positions_of_row(1), vec![0, 2]);
        assert_eq!(best.uncovered_new_positions(), vec![1]);
        best.check_invariants().unwrap();
    }

    #[test]
    fn kitten_word_binds_its_span() {
        let new = Pattern::incoming("n", "t w o k i t t e n s p l a y").unwrap();
        let old = Pattern::old("w", "N Nr 5 k i t t e n #N", 1).unwrap();
        let best = &pairwise_align(&new, &old, 4)[0];
        assert_eq!(best.new_positions_of_row(1), vec![3, 4, 5, 6, 7, 8]);
        best.check_invariants().unwrap();
    }

    #[test]
    fn disjoint_symbols_align_to_nothing() {
        let new = Pattern::incoming("n", "a b").unwrap();
        let old = Pattern::old("p", "x y", 1).unwrap();
        assert!(pairwise_align(&new, &old, 4).is_empty());
    }
}
