//! Exact tools for layered drawings of subset-inclusion graphs: generation,
//! verification, classification, search and bound evaluation.

pub mod bounds;
pub mod cli;
pub mod classify;
pub mod construct;
pub mod drawing;
pub mod error;
pub mod format;
pub mod geometry;
pub mod graph;
pub mod incidence;
pub mod planarity;
pub mod search;
pub mod svg;

pub use error::{Error, Result};
