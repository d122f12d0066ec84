//! Run-length codec for sequences that repeat a fixed unit.
//!
//! A repeated unit encodes to `X 1 ... 1 #X` with one `1` per repetition
//! (unary count), or to the bare brackets `X #X` when the count is dropped
//! (lossy). The bracket and count tokens are ordinary symbols with no
//! numeric meaning anywhere else in the system.

use crate::error::{Error, Result};
use crate::symbol::Symbol;

fn open() -> Symbol {
    Symbol::new("X").unwrap()
}

fn close() -> Symbol {
    Symbol::new("#X").unwrap()
}

fn count_mark() -> Symbol {
    Symbol::new("1").unwrap()
}

/// Encodes `seq`, which must be one or more whole repetitions of `unit`.
/// Lossless mode records the repetition count in unary; lossy mode keeps
/// only the fact that the unit repeats.
pub fn run_length_compress(seq: &[Symbol], unit: &[Symbol], lossless: bool) -> Result<Vec<Symbol>> {
    if unit.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if seq.is_empty() || seq.len() % unit.len() != 0 {
        let position = residue_position(seq, unit);
        return Err(Error::NotARepetition { position });
    }
    let reps = seq.len() / unit.len();
    for (i, sym) in seq.iter().enumerate() {
        if sym != &unit[i % unit.len()] {
            return Err(Error::NotARepetition { position: i });
        }
    }
    let mut out = vec![open()];
    if lossless {
        out.extend(std::iter::repeat_with(count_mark).take(reps));
    }
    out.push(close());
    Ok(out)
}

fn residue_position(seq: &[Symbol], unit: &[Symbol]) -> usize {
    for (i, sym) in seq.iter().enumerate() {
        if sym != &unit[i % unit.len()] {
            return i;
        }
    }
    // Length mismatch only: the residue is the trailing partial unit.
    seq.len() - seq.len() % unit.len()
}

/// Inverts a lossless code: `X 1 ... 1 #X` with `n` count marks expands to
/// `n` repetitions of `unit`. Lossy codes (`X #X`) carry no count and are
/// rejected.
pub fn run_length_decompress(code: &[Symbol], unit: &[Symbol]) -> Result<Vec<Symbol>> {
    if unit.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if code.len() < 2 || code[0] != open() || code[code.len() - 1] != close() {
        return Err(Error::MalformedCode(
            "expected X ... #X bracket symbols".to_string(),
        ));
    }
    let interior = &code[1..code.len() - 1];
    if interior.is_empty() {
        return Err(Error::MalformedCode(
            "lossy code X #X carries no repetition count".to_string(),
        ));
    }
    if let Some(bad) = interior.iter().find(|s| **s != count_mark()) {
        return Err(Error::MalformedCode(format!(
            "interior symbol {bad} is not a count mark"
        )));
    }
    let mut out = Vec::with_capacity(interior.len() * unit.len());
    for _ in 0..interior.len() {
        out.extend_from_slice(unit);
    }
    Ok(out)
}
