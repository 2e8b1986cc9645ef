//! The window subshift of a word.
//!
//! A sequence `x` satisfies `c ≤ σⁿ(x) ≤ c*` (shifts compared with `c^∞`
//! and `(c*)^∞`) exactly when every length-`|c|` factor of `x` lies in the
//! closed range `[c, c*]` of length-`|c|` words. That range is a contiguous
//! block of integer codes, so the transition graph is implicit.

mod count;
mod scc;
mod spectral;
mod system;

pub use count::{count_in, count_words, count_words_naive};
pub use scc::{is_primitive, period, sccs, Component};
pub use spectral::{entropy_upper_gap, gap_position, iteration_cap, spectral_radius, SpectralResult};
pub use system::{build_sft, build_sft_with, MatrixExport, TransitionSystem, DEFAULT_MAX_WINDOW};
