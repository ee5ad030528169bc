//! Fixtures, parallel sweeps, reports and the command-line interface
//! around `hitbox-core`.

pub mod cli;
pub mod fixture;
pub mod report;
pub mod sweep;
