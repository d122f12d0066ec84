//! Symbolic pattern store and multiple-alignment engine.
//!
//! Knowledge is held as flat sequences of atomic symbols ("patterns").
//! An incoming (New) pattern is aligned against stored (Old) patterns by
//! beam search over pairwise extensions, and each candidate arrangement is
//! scored by how many bits it saves relative to encoding the New pattern
//! without any stored knowledge. On top of the alignment engine sit a
//! run-length codec for periodic sequences and an error-tolerant
//! recognizer for part/whole hierarchies.

mod align;
mod error;
pub mod fixtures;
mod format;
mod grid;
mod pattern;
mod recognize;
mod rle;
mod score;
mod store;
mod symbol;

pub use align::{build_multiple_alignment, pairwise_align, AlignConfig, Alignment, AlignmentColumn};
pub use error::{Error, Result};
pub use format::{format_pattern, parse_patterns};
pub use grid::{render_grid, render_machine};
pub use pattern::{Origin, Pattern, PatternId};
pub use recognize::{recognize, PartBinding, Recognition};
pub use rle::{run_length_compress, run_length_decompress};
pub use score::{raw_cost, score_alignment, CompressionScore, ROW_MARKER_BITS};
pub use store::OldStore;
pub use symbol::{parse_symbols, Symbol};
