//! Combinatorial core for optimal 2-planar graphs.
//!
//! An optimal 2-planar graph on `n` vertices has exactly `5n - 10` edges and
//! is obtained from a 3-connected pentagulation (a plane graph whose faces
//! are all 5-cycles) by drawing a pentagram inside every face. This crate
//! provides the pieces needed to build, inspect and certify such graphs:
//!
//! * [`graph`] — abstract simple graphs with connectivity, girth, components
//!   and Tutte–Berge matching bounds;
//! * [`planemap`] — combinatorial plane embeddings via rotation systems;
//! * [`generators`] — the dodecahedron, prisms, stacked triangulations and
//!   the two pentagon gadgets used by the counterexample construction;
//! * [`stellation`] — face-stellation and its structural checks;
//! * [`op2planar`] — pentagram insertion, planar skeletons, crossing
//!   discipline and planarization;
//! * [`ham`] — exact Hamiltonian path/cycle search, path lifting through a
//!   stellation, and non-Hamiltonicity certificates.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `penta2p` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod generators;
pub mod graph;
pub mod ham;
pub mod op2planar;
pub mod planemap;
pub mod stellation;

pub use generators::Gadget;
pub use graph::{Graph, VertexSet};
pub use ham::{Certificate, HamWitness};
pub use op2planar::OpDrawing;
pub use planemap::{Face, PlaneMap};
pub use stellation::StellatedMap;
