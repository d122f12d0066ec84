use std::fmt;

use sp_core::{build_multiple_alignment, AlignConfig, OldStore, Origin, Pattern, PatternId};

/// What one learning step did to the store.
#[derive(Clone, Debug)]
pub struct LearningEvent {
    pub source_new: Pattern,
    pub created: Vec<Pattern>,
    pub reinforced: Vec<(PatternId, u32)>,
}

impl fmt::Display for LearningEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let created = if self.created.is_empty() {
            "-".to_string()
        } else {
            self.created
                .iter()
                .map(|p| {
                    let syms = p
                        .symbols()
                        .iter()
                        .map(|s| s.as_str())
                        .collect::<Vec<_>>()
                        .join(" ");
                    format!("[{}: {syms}]", p.id())
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let reinforced = if self.reinforced.is_empty() {
            "-".to_string()
        } else {
            self.reinforced
                .iter()
                .map(|(id, freq)| format!("[{id}: {freq}]"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "created: {created} | reinforced: {reinforced}")
    }
}

/// Absorbs one New pattern into the store.
///
/// The pattern is aligned against the store; Old rows it matches end to end
/// are reinforced, and the maximal runs of New symbols — both the runs
/// shared with Old rows and the leftover unmatched runs of length two or
/// more — become stored patterns of their own. A pattern the store has
/// never seen anything like is stored verbatim.
pub fn derive_old(new: &Pattern, store: &mut OldStore, config: &AlignConfig) -> LearningEvent {
    assert_eq!(new.origin(), Origin::New, "derive_old consumes New patterns");

    let mut created = Vec::new();
    let mut reinforced = Vec::new();

    let best = if store.is_empty() {
        None
    } else {
        build_multiple_alignment(new, store, config.beam_width, config.max_rows)
            .into_iter()
            .next()
    };

    let store_verbatim = match &best {
        None => true,
        Some(a) => a.old_row_count() == 0,
    };
    if store_verbatim {
        let id = store.fresh_id("g");
        let p = Pattern::new(id.as_str(), new.symbols().to_vec(), 1, Origin::Old)
            .expect("new pattern is non-empty");
        store.insert(p.clone()).expect("fresh id");
        created.push(p);
        return LearningEvent {
            source_new: new.clone(),
            created,
            reinforced,
        };
    }

    let best = best.expect("store non-empty");
    let covered = best.covered_new_mask();

    // Fully matched rows: every symbol of the row is unified with the New
    // pattern. Those patterns are confirmed knowledge and gain frequency.
    let mut full_rows: Vec<usize> = Vec::new();
    for (r, _row) in best.rows().iter().enumerate().skip(1) {
        let matched = best.new_positions_of_row(r).len();
        if matched == best.rows()[r].len() {
            full_rows.push(r);
        }
    }
    for &r in &full_rows {
        let id = best.rows()[r].id().clone();
        let freq = store.reinforce(&id, 1).expect("row pattern is stored");
        reinforced.push((id, freq));
    }

    // Candidate segments: runs shared with partially matched rows (the
    // common structure those rows expose) and runs nothing explains at
    // all. Coverage owned by fully matched rows is settled knowledge and
    // is not re-chunked, which keeps repeated inputs from creating again.
    let n = new.len();
    let mut partial = vec![false; n];
    for (r, _row) in best.rows().iter().enumerate().skip(1) {
        if full_rows.contains(&r) {
            continue;
        }
        for pos in best.new_positions_of_row(r) {
            partial[pos] = true;
        }
    }
    fn runs(mask: &[bool]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < mask.len() {
            if !mask[i] {
                i += 1;
                continue;
            }
            let mut j = i;
            while j < mask.len() && mask[j] {
                j += 1;
            }
            if j - i >= 2 {
                out.push((i, j));
            }
            i = j;
        }
        out
    }
    let uncovered: Vec<bool> = covered.iter().map(|c| !c).collect();
    let mut spans = runs(&partial);
    spans.extend(runs(&uncovered));
    spans.sort_unstable();
    let segments: Vec<&[sp_core::Symbol]> = spans
        .into_iter()
        .map(|(i, j)| &new.symbols()[i..j])
        .collect();

    for run in segments {
        if let Some(existing) = store.find_by_symbols(run) {
            let id = existing.id().clone();
            if !reinforced.iter().any(|(r, _)| r == &id) {
                let freq = store.reinforce(&id, 1).expect("existing pattern");
                reinforced.push((id, freq));
            }
            continue;
        }
        let id = store.fresh_id("g");
        let p = Pattern::new(id.as_str(), run.to_vec(), 1, Origin::Old).expect("run length >= 2");
        store.insert(p.clone()).expect("fresh id");
        created.push(p);
    }

    LearningEvent {
        source_new: new.clone(),
        created,
        reinforced,
    }
}
