use std::collections::HashMap;

use sp_core::{raw_cost, OldStore, Origin, Pattern, Symbol};

/// A partition of a corpus into units together with its description cost.
#[derive(Clone, Debug)]
pub struct SegmentationResult {
    /// The units in corpus order; concatenating them reproduces the corpus.
    pub units: Vec<Vec<Symbol>>,
    /// Distinct unit types with their counts, in first-occurrence order.
    pub lexicon: Vec<(Vec<Symbol>, u32)>,
    /// Description cost of lexicon plus encoded corpus, in bits.
    pub total_cost: f64,
    /// Cost after the initial segmentation and after each accepted merge.
    pub cost_history: Vec<f64>,
}

fn lexicon_of(units: &[Vec<Symbol>]) -> Vec<(Vec<Symbol>, u32)> {
    let mut counts: HashMap<&[Symbol], u32> = HashMap::new();
    let mut order: Vec<&[Symbol]> = Vec::new();
    for u in units {
        let e = counts.entry(u.as_slice()).or_insert(0);
        if *e == 0 {
            order.push(u.as_slice());
        }
        *e += 1;
    }
    order
        .into_iter()
        .map(|u| (u.to_vec(), counts[u]))
        .collect()
}

/// Two-part description cost of a segmentation, assembled from the store's
/// bit model: every token pays its pattern-reference bits plus a one-bit
/// continuation marker, and every lexicon entry pays its symbols at the raw
/// rate plus the two-bit row marker.
pub fn segmentation_cost(units: &[Vec<Symbol>]) -> f64 {
    let lexicon = lexicon_of(units);
    let mut store = OldStore::new();
    let mut ids: HashMap<&[Symbol], sp_core::PatternId> = HashMap::new();
    for (i, (symbols, count)) in lexicon.iter().enumerate() {
        let id = format!("u{}", i + 1);
        store
            .insert(Pattern::new(&id, symbols.clone(), *count, Origin::Old).expect("unit is non-empty"))
            .expect("fresh unit id");
        ids.insert(symbols.as_slice(), sp_core::PatternId::new(&id));
    }
    let tokens: f64 = units
        .iter()
        .map(|u| store.reference_bits(&ids[u.as_slice()]).expect("unit stored") + 1.0)
        .sum();
    let definitions: f64 = lexicon
        .iter()
        .map(|(symbols, _)| raw_cost(symbols, &store) + sp_core::ROW_MARKER_BITS)
        .sum();
    tokens + definitions
}

fn merge_pair(units: &[Vec<Symbol>], pair: (&[Symbol], &[Symbol])) -> Vec<Vec<Symbol>> {
    let mut out = Vec::with_capacity(units.len());
    let mut i = 0;
    while i < units.len() {
        if i + 1 < units.len() && units[i] == pair.0 && units[i + 1] == pair.1 {
            let mut merged = units[i].clone();
            merged.extend_from_slice(&units[i + 1]);
            out.push(merged);
            i += 2;
        } else {
            out.push(units[i].clone());
            i += 1;
        }
    }
    out
}

/// Chunks an unsegmented corpus by iterative pair merging: each round the
/// most frequent adjacent unit pair (ties to the leftmost first occurrence)
/// is merged, and the merge is kept only when the total description cost
/// strictly decreases. Stops after `rounds` rounds or when no candidate
/// merge pays for itself.
pub fn segment_corpus(corpus: &[Symbol], max_unit_len: usize, rounds: usize) -> SegmentationResult {
    assert!(corpus.len() >= 2, "corpus must hold at least two symbols");
    assert!(max_unit_len >= 2, "units of length one cannot merge");

    let mut units: Vec<Vec<Symbol>> = corpus.iter().map(|s| vec![s.clone()]).collect();
    let mut cost = segmentation_cost(&units);
    let mut history = vec![cost];

    for _ in 0..rounds {
        // Rank adjacent pairs by frequency, leftmost first occurrence
        // breaking ties; only pairs seen at least twice are candidates.
        let mut counts: HashMap<(&[Symbol], &[Symbol]), (u32, usize)> = HashMap::new();
        for i in 0..units.len().saturating_sub(1) {
            let key = (units[i].as_slice(), units[i + 1].as_slice());
            let entry = counts.entry(key).or_insert((0, i));
            entry.0 += 1;
        }
        let mut candidates: Vec<((&[Symbol], &[Symbol]), (u32, usize))> = counts
            .into_iter()
            .filter(|((a, b), (count, _))| *count >= 2 && a.len() + b.len() <= max_unit_len)
            .collect();
        candidates.sort_by(|x, y| y.1 .0.cmp(&x.1 .0).then_with(|| x.1 .1.cmp(&y.1 .1)));

        let mut accepted = None;
        for (pair, _) in &candidates {
            let trial = merge_pair(&units, *pair);
            let trial_cost = segmentation_cost(&trial);
            if trial_cost < cost - 1e-9 {
                accepted = Some((trial, trial_cost));
                break;
            }
        }
        match accepted {
            Some((trial, trial_cost)) => {
                units = trial;
                cost = trial_cost;
                history.push(cost);
            }
            None => break,
        }
    }

    SegmentationResult {
        lexicon: lexicon_of(&units),
        total_cost: cost,
        cost_history: history,
        units,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sp_core::parse_symbols;

    fn syms(s: &str) -> Vec<Symbol> {
        parse_symbols(s).unwrap()
    }

    #[test]
    fn alternating_corpus_settles_on_the_pair() {
        let res = segment_corpus(&syms("a b a b a b a b"), 8, 32);
        assert_eq!(res.units.len(), 4);
        assert!(res.units.iter().all(|u| u == &syms("a b")));
        assert!(res.lexicon.iter().any(|(u, c)| u == &syms("a b") && *c == 4));
    }

    #[test]
    fn repeated_symbol_merges_and_beats_unsegmented_cost() {
        let corpus = syms("q q q q");
        let unsegmented: Vec<Vec<Symbol>> = corpus.iter().map(|s| vec![s.clone()]).collect();
        let res = segment_corpus(&corpus, 8, 32);
        assert!(res.lexicon.iter().any(|(u, _)| u == &syms("q q")));
        assert!(res.total_cost < segmentation_cost(&unsegmented));
    }

    #[test]
    fn all_distinct_symbols_stay_singletons() {
        let res = segment_corpus(&syms("a b c d e"), 8, 32);
        assert_eq!(res.units.len(), 5);
        assert!(res.units.iter().all(|u| u.len() == 1));
        assert_eq!(res.cost_history.len(), 1);
    }

    #[test]
    fn units_always_reconstruct_the_corpus() {
        let corpus = syms("x y x y z x y x y z z x y");
        let res = segment_corpus(&corpus, 6, 64);
        let flat: Vec<Symbol> = res.units.iter().flatten().cloned().collect();
        assert_eq!(flat, corpus);
    }

    #[test]
    fn cost_history_is_strictly_decreasing() {
        let res = segment_corpus(&syms("a b a b a b a b c c c c"), 8, 64);
        for w in res.cost_history.windows(2) {
            assert!(w[1] < w[0]);
        }
        assert_eq!(*res.cost_history.last().unwrap(), res.total_cost);
    }
}
