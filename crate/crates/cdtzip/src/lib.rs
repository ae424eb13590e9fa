//! Catalog reconstruction and verification for the cubic distance-transitive
//! graphs: girth-cycle enumeration, orientation assignments by signed-graph
//! balance, cycle-power zipping into quotient graphs, surface embeddings,
//! and the downstream configuration and decomposition checks.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod catalog;
pub mod color;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod hamilton;
pub mod incidence;
pub mod iso;
pub mod oac;
pub mod planar;
pub mod report;
pub mod zip;

pub use error::{Error, Result};
