//! Command implementations behind the CLI surface.

pub mod asymptotics;
pub mod checks;
pub mod kappa;
pub mod sweep;
