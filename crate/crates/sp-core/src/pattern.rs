use std::fmt;

use crate::error::{Error, Result};
use crate::symbol::{parse_symbols, Symbol};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternId(String);

impl PatternId {
    pub fn new(id: &str) -> Self {
        PatternId(id.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Whether a pattern is incoming sensory data (New) or stored knowledge (Old).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Origin {
    New,
    Old,
}

/// An ordered sequence of symbols with an occurrence count.
#[derive(Clone, PartialEq, Debug)]
pub struct Pattern {
    id: PatternId,
    symbols: Vec<Symbol>,
    frequency: u32,
    origin: Origin,
}

impl Pattern {
    pub fn new(id: &str, symbols: Vec<Symbol>, frequency: u32, origin: Origin) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyPattern);
        }
        if frequency == 0 {
            return Err(Error::ZeroFrequency);
        }
        Ok(Pattern {
            id: PatternId::new(id),
            symbols,
            frequency,
            origin,
        })
    }

    /// Builds an Old pattern from a whitespace-separated symbol string.
    pub fn old(id: &str, text: &str, frequency: u32) -> Result<Self> {
        Self::new(id, parse_symbols(text)?, frequency, Origin::Old)
    }

    /// Builds a New pattern (frequency 1) from a symbol string.
    pub fn incoming(id: &str, text: &str) -> Result<Self> {
        Self::new(id, parse_symbols(text)?, 1, Origin::New)
    }

    /// Builds a New pattern from an already-parsed symbol sequence.
    pub fn incoming_symbols(id: &str, symbols: Vec<Symbol>) -> Result<Self> {
        Self::new(id, symbols, 1, Origin::New)
    }

    pub fn id(&self) -> &PatternId {
        &self.id
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn frequency(&self) -> u32 {
        self.frequency
    }

    pub(crate) fn add_frequency(&mut self, by: u32) {
        self.frequency += by;
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }
}
