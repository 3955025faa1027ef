//! Experiment plumbing: channel model, brute-force oracles, Monte-Carlo
//! simulation, timing and file formats.

pub mod bench;
pub mod channel;
pub mod io;
pub mod oracle;
pub mod selftest;
pub mod simulate;

pub use channel::{random_error, ChannelSpec};
pub use oracle::{brute_force_decode, min_distance_bruteforce, Nearest};
pub use simulate::{simulate, Simulation, TrialReport};
