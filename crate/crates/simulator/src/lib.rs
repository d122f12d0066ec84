//! Synthetic scenes with exact ground truth: rectangular textured objects
//! moving along waypoint trajectories over a noisy background, plus the
//! measurement side — template detectors that turn frames into symbol
//! streams, and position/failure metrics for tracker output.

mod error;
mod eval;
mod features;
mod frame;
mod pgm;
mod render;
mod scenario;

pub use error::{Error, Result};
pub use eval::{evaluate, iou, EvalReport, ObjectEval, TrackPoint};
pub use features::{detect_features, extract_symbols, Detection, Detector};
pub use frame::{Frame, PixelRect};
pub use pgm::{read_pgm, write_pgm};
pub use render::{render, ObjectTruth};
pub use scenario::{seeded_texture, ObjectSpec, Scenario, Waypoint};
