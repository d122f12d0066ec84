//! Error-tolerant recognition of part/whole hierarchies.
//!
//! A hierarchy root is a pattern whose body references parts through
//! adjacent bracket pairs `X #X`; a part pattern opens with `X` and closes
//! with `#X`. Recognition aligns the symbol stream against the store and
//! reads part bindings off the alignment rows, so a part whose symbols are
//! absent (occluded, or edited away) is reported as inferred rather than
//! breaking the class.

use std::collections::{BTreeMap, BTreeSet};

use crate::align::{build_multiple_alignment, AlignConfig, Alignment};
use crate::error::{Error, Result};
use crate::pattern::{Pattern, PatternId};
use crate::store::OldStore;
use crate::symbol::Symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartBinding {
    /// The part's row covers stream positions `start..=end`.
    Bound { start: usize, end: usize },
    /// No visible symbols; the part is implied by the class.
    Inferred,
}

#[derive(Clone, Debug)]
pub struct Recognition {
    pub class_id: PatternId,
    pub bound_parts: BTreeMap<String, PartBinding>,
    /// Saving of the winning alignment normalized by its raw cost.
    pub confidence: f64,
}

/// Part slots of a root pattern: every adjacent `X #X` pair in its body.
fn part_slots(root: &Pattern) -> Vec<String> {
    let syms = root.symbols();
    let mut out = Vec::new();
    for w in syms.windows(2) {
        let name = w[0].as_str();
        if !name.starts_with('#') && w[1].as_str() == format!("#{name}") {
            out.push(name.to_string());
        }
    }
    out
}

fn is_part_pattern(p: &Pattern, name: &str) -> bool {
    p.symbols().first().map(|s| s.as_str()) == Some(name)
        && p.symbols().last().map(|s| s.as_str()) == Some(format!("#{name}").as_str())
}

fn bindings_for(root: &Pattern, alignment: &Alignment) -> BTreeMap<String, PartBinding> {
    let mut out = BTreeMap::new();
    for name in part_slots(root) {
        let mut binding = PartBinding::Inferred;
        for (r, row) in alignment.rows().iter().enumerate().skip(1) {
            if !is_part_pattern(row, &name) {
                continue;
            }
            let covered = alignment.new_positions_of_row(r);
            if let (Some(&start), Some(&end)) = (covered.first(), covered.last()) {
                binding = PartBinding::Bound { start, end };
                break;
            }
        }
        out.insert(name, binding);
    }
    out
}

/// Recognizes hierarchy roots in a symbol stream. Alignments leaving more
/// than `error_budget` stream symbols unexplained are discarded; each root
/// is reported from the best surviving alignment that binds at least one
/// of its parts. Results are sorted by confidence, best first.
pub fn recognize(
    stream: &[Symbol],
    store: &OldStore,
    hierarchy_roots: &BTreeSet<PatternId>,
    error_budget: usize,
    config: &AlignConfig,
) -> Result<Vec<Recognition>> {
    for id in hierarchy_roots {
        if !store.contains(id) {
            return Err(Error::UnknownId(id.as_str().to_string()));
        }
    }
    if stream.is_empty() {
        return Ok(Vec::new());
    }
    let new = Pattern::incoming_symbols("stream", stream.to_vec())?;
    let ranked = build_multiple_alignment(&new, store, config.beam_width, config.max_rows);
    let surviving: Vec<&Alignment> = ranked
        .iter()
        .filter(|a| a.unmatched_new_count() <= error_budget)
        .collect();

    let mut out = Vec::new();
    for root_id in hierarchy_roots {
        let root = store.get(root_id).expect("checked above");
        for alignment in &surviving {
            let bound = bindings_for(root, alignment);
            if bound
                .values()
                .any(|b| matches!(b, PartBinding::Bound { .. }))
            {
                let raw = alignment.score.raw_cost;
                let confidence = if raw > 0.0 {
                    (alignment.score.saving / raw).clamp(0.0, 1.0)
                } else {
                    0.0
                };
                out.push(Recognition {
                    class_id: root_id.clone(),
                    bound_parts: bound,
                    confidence,
                });
                break;
            }
        }
    }
    out.sort_by(|a, b| {
        b.confidence
            .total_cmp(&a.confidence)
            .then_with(|| a.class_id.cmp(&b.class_id))
    });
    Ok(out)
}
