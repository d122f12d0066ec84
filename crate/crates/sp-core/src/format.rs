//! The `.sp` pattern file format: UTF-8 text, one pattern per line,
//! whitespace-separated symbols, optional trailing `*N` frequency (default
//! 1). Lines whose first non-blank character is `#` are comments; blank
//! lines are ignored. Patterns are numbered `p1`, `p2`, ... in file order.

use crate::error::{Error, Result};
use crate::pattern::{Origin, Pattern};
use crate::symbol::Symbol;

pub fn parse_patterns(text: &str) -> Result<Vec<Pattern>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens: Vec<&str> = line.split_whitespace().collect();
        let mut frequency = 1u32;
        if let Some(last) = tokens.last() {
            if let Some(num) = last.strip_prefix('*') {
                frequency = num.parse::<u32>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    message: format!("invalid frequency suffix {last:?}"),
                })?;
                tokens.pop();
            }
        }
        if tokens.is_empty() {
            return Err(Error::Parse {
                line: lineno + 1,
                message: "pattern has no symbols".to_string(),
            });
        }
        if frequency == 0 {
            return Err(Error::Parse {
                line: lineno + 1,
                message: "frequency must be at least 1".to_string(),
            });
        }
        let symbols = tokens
            .iter()
            .map(|t| Symbol::new(t))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse {
                line: lineno + 1,
                message: e.to_string(),
            })?;
        let id = format!("p{}", out.len() + 1);
        out.push(Pattern::new(&id, symbols, frequency, Origin::Old)?);
    }
    Ok(out)
}

/// One `.sp` line for a pattern (frequency suffix omitted when 1).
pub fn format_pattern(pattern: &Pattern) -> String {
    let body = pattern
        .symbols()
        .iter()
        .map(|s| s.as_str())
        .collect::<Vec<_>>()
        .join(" ");
    if pattern.frequency() == 1 {
        body
    } else {
        format!("{body} *{}", pattern.frequency())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_frequencies_and_defaults() {
        let text = "# grammar\n\nD Dp 4 t w o #D *300\na b\n";
        let ps = parse_patterns(text).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].id().as_str(), "p1");
        assert_eq!(ps[0].frequency(), 300);
        assert_eq!(ps[0].len(), 7);
        assert_eq!(ps[1].frequency(), 1);
    }

    #[test]
    fn bad_frequency_is_a_line_error() {
        let err = parse_patterns("a b *x").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_patterns("a\nb *0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn round_trips_through_format() {
        let ps = parse_patterns("a b c *7").unwrap();
        assert_eq!(format_pattern(&ps[0]), "a b c *7");
        let ps = parse_patterns(&format_pattern(&ps[0])).unwrap();
        assert_eq!(ps[0].frequency(), 7);
    }
}
