//! The dimension function `φ(c) = dim_H F(c)`.
//!
//! On a plateau `[e(r), r^∞]` with level-`i` representative `r`, the value
//! is `log₂ ρ / 2^{i-1}` where `ρ` is the Perron value of the window system
//! of `μ_u(r)`, `u = f^{i-1}(1)`. Points above `d(1)` have dimension 0.
//! Points with no finite minimal prefix get a certified bracket from
//! monotonicity instead.

mod cache;
mod graph;
mod phi;

pub use cache::{CachedEnclosure, SpectralCache, ENGINE_VERSION};
pub use graph::{
    coverage, e1_minimal_words, plateaus, plateaus_with, sample_words, verify_plateau_constancy,
    MAX_ENUM_LEN, MAX_ENUM_LEVEL,
};
pub use phi::{
    dim_bounds, dim_bounds_with, interval, interval_with, phi, phi_with, zero_threshold,
    zero_threshold_upper, DimensionResult, Plateau, Settings, DEFAULT_BOUNDS_LEN,
};
