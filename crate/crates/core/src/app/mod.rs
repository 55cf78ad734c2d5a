//! CLI support: input parsing, output rendering, and the parallel
//! verification sweep harness.

pub mod parse;
pub mod render;
pub mod sweep;
