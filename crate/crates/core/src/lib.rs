//! Polygon dissections, nested sets, set partitions with all blocks of
//! size two or more, internally ordered partitions and coding triples,
//! together with the explicit bijections between these families and the
//! counting formulas they prove.
//!
//! The crate pairs every closed formula with an exhaustive generator so
//! each identity can be checked both ways:
//!
//! * [`counting`] has the Kirkman-Cayley dissection numbers, the
//!   distinguished-partition count, the 2-associated Stirling recurrence
//!   and the prescribed-type formula, all in exact big integers;
//! * [`enumeration`] generates every object family exhaustively in a
//!   deterministic order;
//! * [`bijections`] maps the families onto each other through the labelled
//!   level trees of [`tree`];
//! * [`dissect`] ties parenthesizations to convex polygon dissections and
//!   renders them as SVG.

pub mod bijections;
pub mod counting;
pub mod dissect;
pub mod enumeration;
mod error;
pub mod tree;
pub mod types;

pub use error::{Error, Result};
pub use tree::LevelTree;
pub use types::{
    block_order, BlockOrder, InternallyOrderedPartition, NestedSet, ParenthesizedList, Params,
    Partition2, Triple,
};
