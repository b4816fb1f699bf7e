//! IO companion to `penta2p-core`: JSON/edge-list/DOT formats and the
//! `penta2p` command-line interface.

pub mod cli;
pub mod formats;

pub use penta2p_core as core;
