use std::fmt;

use crate::error::{Error, Result};

/// An atomic symbol. Symbols compare by exact string equality and are never
/// interpreted numerically, so `1`, `11` and `#X` are three unrelated tokens.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(text: &str) -> Result<Self> {
        if text.is_empty() || text.chars().any(char::is_whitespace) {
            return Err(Error::InvalidSymbol(text.to_string()));
        }
        Ok(Symbol(text.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Splits a whitespace-separated token string into symbols.
pub fn parse_symbols(text: &str) -> Result<Vec<Symbol>> {
    text.split_whitespace().map(Symbol::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_whitespace() {
        assert!(Symbol::new("").is_err());
        assert!(Symbol::new("a b").is_err());
        assert!(Symbol::new("\t").is_err());
    }

    #[test]
    fn equality_is_textual() {
        let one = Symbol::new("1").unwrap();
        let eleven = Symbol::new("11").unwrap();
        assert_ne!(one, eleven);
        assert_eq!(Symbol::new("#X").unwrap(), Symbol::new("#X").unwrap());
    }

    #[test]
    fn parses_token_lists() {
        let syms = parse_symbols("a  b\tc").unwrap();
        assert_eq!(syms.len(), 3);
        assert_eq!(syms[2].as_str(), "c");
        assert!(parse_symbols("").unwrap().is_empty());
    }
}
