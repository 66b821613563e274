//! Pattern avoidance in flattened set partitions.
//!
//! A partition of `[n]` in standard increasing form flattens to a permutation
//! by erasing the block dividers. This crate counts the partitions whose
//! flattening avoids each pattern of length 3, three ways: by exhaustive
//! enumeration ([`enumerate`]), by closed forms and recurrences
//! ([`closedform`]), and through explicit bijections ([`biject`]).

pub mod biject;
pub mod closedform;
pub mod dyck;
pub mod enumerate;
pub mod error;
pub mod partition;
pub mod pattern;
pub mod seq;

pub use dyck::{CSeq, DyckPath, Step};
pub use enumerate::Refinement;
pub use error::{Error, Result};
pub use partition::{Permutation, SetPartition};
pub use pattern::Pattern;
