//! Support code for the `rainbow` binary: file input and the claim registry.

pub mod input;
pub mod repro;
