use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::pattern::{Origin, Pattern, PatternId};
use crate::symbol::Symbol;

/// The knowledge base of Old patterns.
///
/// The store also carries the frequency tables behind the bit-cost model:
/// a symbol's cost is its Shannon information under the store-wide symbol
/// distribution (occurrences weighted by pattern frequency), and a pattern
/// reference costs the Shannon information of picking that pattern among
/// all stored patterns by frequency.
#[derive(Clone, Debug, Default)]
pub struct OldStore {
    patterns: Vec<Pattern>,
    index: HashMap<PatternId, usize>,
    symbol_freq: HashMap<Symbol, u64>,
    total_symbols: u64,
    total_pattern_freq: u64,
}

impl OldStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_patterns(patterns: Vec<Pattern>) -> Result<Self> {
        let mut store = Self::new();
        for p in patterns {
            store.insert(p)?;
        }
        Ok(store)
    }

    pub fn insert(&mut self, pattern: Pattern) -> Result<()> {
        if pattern.origin() != Origin::Old {
            return Err(Error::InvalidSymbol(format!(
                "pattern {} is not an Old pattern",
                pattern.id()
            )));
        }
        if self.index.contains_key(pattern.id()) {
            return Err(Error::DuplicateId(pattern.id().as_str().to_string()));
        }
        let weight = pattern.frequency() as u64;
        for sym in pattern.symbols() {
            *self.symbol_freq.entry(sym.clone()).or_insert(0) += weight;
            self.total_symbols += weight;
        }
        self.total_pattern_freq += weight;
        self.index.insert(pattern.id().clone(), self.patterns.len());
        self.patterns.push(pattern);
        Ok(())
    }

    /// Raises a pattern's frequency, keeping the cost tables in step.
    pub fn reinforce(&mut self, id: &PatternId, by: u32) -> Result<u32> {
        let idx = *self
            .index
            .get(id)
            .ok_or_else(|| Error::UnknownId(id.as_str().to_string()))?;
        let delta = by as u64;
        let symbols: Vec<Symbol> = self.patterns[idx].symbols().to_vec();
        for sym in &symbols {
            *self.symbol_freq.entry(sym.clone()).or_insert(0) += delta;
            self.total_symbols += delta;
        }
        self.total_pattern_freq += delta;
        self.patterns[idx].add_frequency(by);
        Ok(self.patterns[idx].frequency())
    }

    pub fn get(&self, id: &PatternId) -> Option<&Pattern> {
        self.index.get(id).map(|&i| &self.patterns[i])
    }

    pub fn contains(&self, id: &PatternId) -> bool {
        self.index.contains_key(id)
    }

    /// Looks up a pattern with exactly this symbol sequence, if any.
    pub fn find_by_symbols(&self, symbols: &[Symbol]) -> Option<&Pattern> {
        self.patterns.iter().find(|p| p.symbols() == symbols)
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn alphabet(&self) -> BTreeSet<Symbol> {
        self.symbol_freq.keys().cloned().collect()
    }

    pub fn alphabet_size(&self) -> usize {
        self.symbol_freq.len()
    }

    /// Bits to encode one occurrence of `sym` at the store-wide symbol rate.
    /// Symbols outside the alphabet cost the escape code
    /// `log2(alphabet_size + 1)` rather than being errors.
    pub fn symbol_bits(&self, sym: &Symbol) -> f64 {
        match self.symbol_freq.get(sym) {
            Some(&f) if f > 0 && self.total_symbols > 0 => {
                -((f as f64) / (self.total_symbols as f64)).log2()
            }
            _ => ((self.alphabet_size() + 1) as f64).log2(),
        }
    }

    /// Bits to reference a stored pattern by id, frequency-weighted.
    pub fn reference_bits(&self, id: &PatternId) -> Result<f64> {
        let p = self
            .get(id)
            .ok_or_else(|| Error::UnknownId(id.as_str().to_string()))?;
        Ok(-((p.frequency() as f64) / (self.total_pattern_freq as f64)).log2())
    }

    /// First id of the form `{prefix}{n}` not yet present.
    pub fn fresh_id(&self, prefix: &str) -> PatternId {
        let mut n = 1;
        loop {
            let candidate = PatternId::new(&format!("{prefix}{n}"));
            if !self.index.contains_key(&candidate) {
                return candidate;
            }
            n += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn store() -> OldStore {
        OldStore::from_patterns(vec![
            Pattern::old("p1", "a b c", 3).unwrap(),
            Pattern::old("p2", "a d", 1).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn frequency_tables_weight_by_pattern_frequency() {
        let s = store();
        // a: 3 (p1) + 1 (p2) = 4 of 11 total symbol slots
        assert!((s.symbol_bits(&Symbol::new("a").unwrap()) - (11f64 / 4.0).log2()).abs() < 1e-12);
        assert!((s.reference_bits(&PatternId::new("p1")).unwrap() - (4f64 / 3.0).log2()).abs() < 1e-12);
    }

    #[test]
    fn unknown_symbols_use_escape_code() {
        let s = store();
        let esc = s.symbol_bits(&Symbol::new("zz").unwrap());
        assert!((esc - ((s.alphabet_size() + 1) as f64).log2()).abs() < 1e-12);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let mut s = store();
        let dup = Pattern::old("p1", "x", 1).unwrap();
        assert!(matches!(s.insert(dup), Err(Error::DuplicateId(_))));
    }

    #[test]
    fn reinforce_updates_tables() {
        let mut s = store();
        let before = s.symbol_bits(&Symbol::new("d").unwrap());
        s.reinforce(&PatternId::new("p2"), 2).unwrap();
        assert_eq!(s.get(&PatternId::new("p2")).unwrap().frequency(), 3);
        assert!(s.symbol_bits(&Symbol::new("d").unwrap()) < before);
    }

    #[test]
    fn rejects_new_origin() {
        let mut s = OldStore::new();
        assert!(s.insert(Pattern::incoming("n", "a").unwrap()).is_err());
    }
}
