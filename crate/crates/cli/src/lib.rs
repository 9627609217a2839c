//! Command-line front end: enumeration commands, DOT rendering and the seeded
//! verification suites.

pub mod commands;
pub mod dot;
pub mod oracle;
pub mod suites;
