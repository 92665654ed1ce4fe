//! Benchmark generators, the brute-force oracle and run counters.

pub mod cyclic;
pub mod gf2n;
pub mod hfe;
pub mod random;
pub mod stats;
pub mod variety;

pub use cyclic::gen_cyclic;
pub use hfe::{allowed_exponents, gen_hfe, HfeInstance};
pub use random::random_system;
pub use stats::{RunStats, StatEvent, StatsReport};
pub use variety::{brute_force_variety, MAX_BRUTE_FORCE_VARS};
