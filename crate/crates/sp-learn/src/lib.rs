//! Unsupervised learning on top of the alignment engine: new knowledge is
//! carved out of incoming patterns by aligning them against what is already
//! stored, and unsegmented corpora are chunked by merging frequent unit
//! pairs for as long as the merged description is cheaper.

mod derive;
mod segment;

pub use derive::{derive_old, LearningEvent};
pub use segment::{segment_corpus, SegmentationResult};
