//! Toolkit for simultaneous straight-line embeddings of planar 3-trees.
//!
//! The library builds exponential conflict collections of stacked
//! triangulations, decides straight-line embeddability of planar 3-trees on
//! integer point sets with exact arithmetic, and evaluates the counting
//! bounds attached to the construction.

pub mod bounds;
pub mod embed;
pub mod family;
pub mod gadgets;
pub mod geom;
pub mod iso;
pub mod pointsets;
pub mod tritree;

pub use geom::{Point, PointSet, Sign};
pub use tritree::TriTree;
