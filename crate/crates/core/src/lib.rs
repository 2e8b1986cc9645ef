//! Hausdorff dimension of the dyadically badly approximable numbers
//!
//! For `c ∈ (0, 1)` let `F(c) = {x : ‖2ⁿx‖ ≥ c for all n ≥ 0}`. This crate
//! computes `φ(c) = dim_H F(c)` exactly on the plateaus of the devil's
//! staircase and with certified bounds elsewhere:
//!
//! * [`word`]: finite and eventually periodic binary words, exact values
//!   and lexicographic order.
//! * [`calculus`]: the word maps (`f`, `d`, `e`, `g`, `p`, the block
//!   substitution `μ`), shift-bounded words, level classification and
//!   minimal prefixes.
//! * [`sft`]: the window subshift of a word, SCCs, primitivity,
//!   Perron value enclosures and word-counting oracles.
//! * [`dimension`]: `φ`, plateau intervals, the zero threshold and the
//!   plateau enumeration behind the dimension graph.
//! * [`cli`]: the command surface used by the `dyadic` binary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod calculus;
pub mod cli;
pub mod dimension;
pub mod error;
pub mod sft;
pub mod word;

pub use error::{Error, Result};
