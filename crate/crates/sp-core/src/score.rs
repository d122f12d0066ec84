use crate::align::Alignment;
use crate::store::OldStore;
use crate::symbol::Symbol;

/// Fixed structural overhead charged for every Old row in an alignment.
pub const ROW_MARKER_BITS: f64 = 2.0;

/// Bit costs of encoding a New pattern with and without stored knowledge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompressionScore {
    /// Bits to spell the New pattern symbol by symbol.
    pub raw_cost: f64,
    /// Bits to encode it through the alignment's Old rows.
    pub encoded_cost: f64,
    /// `raw_cost - encoded_cost`.
    pub saving: f64,
}

impl CompressionScore {
    pub fn zero() -> Self {
        CompressionScore {
            raw_cost: 0.0,
            encoded_cost: 0.0,
            saving: 0.0,
        }
    }
}

/// Cost of spelling a symbol sequence at the store's raw symbol rates.
pub fn raw_cost(symbols: &[Symbol], store: &OldStore) -> f64 {
    symbols.iter().map(|s| store.symbol_bits(s)).sum()
}

/// Scores an alignment under the bit model: each Old row costs its
/// reference bits plus a row marker, and every New symbol not unified with
/// an Old row is spelled at the raw rate.
pub fn score_alignment(alignment: &Alignment, store: &OldStore) -> CompressionScore {
    let new_symbols = alignment.new_row().symbols();
    let raw = raw_cost(new_symbols, store);

    let mut encoded = 0.0;
    for row in alignment.old_rows() {
        // Rows may reference patterns absent from `store` (e.g. a scoring
        // store narrower than the one that built the alignment); those fall
        // back to a uniform one-of-(n+1) reference.
        let reference = store
            .reference_bits(row.id())
            .unwrap_or_else(|_| ((store.len() + 1) as f64).log2());
        encoded += reference + ROW_MARKER_BITS;
    }
    for &pos in &alignment.uncovered_new_positions() {
        encoded += store.symbol_bits(&new_symbols[pos]);
    }

    CompressionScore {
        raw_cost: raw,
        encoded_cost: encoded,
        saving: raw - encoded,
    }
}
