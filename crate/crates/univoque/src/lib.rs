//! Command-line front end and file formats for `univoque-core`.

pub mod commands;
pub mod render;
pub mod spec;

pub use univoque_core;
