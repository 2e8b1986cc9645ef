//! The combinatorial calculus on binary words.
//!
//! `f(s) = s~ s'` doubles a word ending in 1 and its iterates converge to
//! `d(s)`; `d(1)` is the shifted inverse Thue–Morse word and marks the
//! zero-dimension threshold. `e(s) = s~ (s*)^∞` gives the level thresholds
//! `e_i = e(f^i(1))`. A word's minimal prefix picks the representative of
//! the plateau containing it, and the substitution `μ_u` with
//! `u = f^{i-1}(1)` carries level `i` down to level 1.

mod accumulate;
mod maps;
mod minimal;
mod substitution;
mod thue_morse;

pub use accumulate::{accumulate_a, accumulate_b, bridge_to_01, p_chain_to_01};
pub use maps::{
    d_prefix, e_map, e_threshold, f_iter, f_map, f_power_of_one, g_map, mirror_limit_real,
    p_decompose, p_reduce, MAX_LEVEL,
};
pub use minimal::{
    compare_with_threshold, is_minimal, is_minimal_word, is_shift_bounded, level_of,
    minimal_prefix, LevelClass, MinimalityReport, DEFAULT_SEARCH_LIMIT, D_PREFIX_CAP,
};
pub use substitution::{mu_forward, mu_forward_periodic, mu_inverse};
pub use thue_morse::{thue_morse, tm_constant};
