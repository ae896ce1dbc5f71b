//! Combinatorial characteristics of digraphs, rooted trees and integer
//! partitions, closed-form sharp bounds linking them, and exhaustive
//! enumeration harnesses that check validity and attainment of those bounds
//! on every small instance.

pub mod bounds;
pub mod digraph;
pub mod document;
pub mod enumerate;
mod error;
pub mod ordered;
pub mod verify;

pub use bounds::{CaseId, LeafInterval};
pub use digraph::{Digraph, DigraphCharacteristics};
pub use document::{GraphDocument, ParseError};
pub use enumerate::{Caps, EnumerationSpec, ObjectKind, Shard};
pub use error::{Error, Result};
pub use ordered::{PartitionCharacteristics, PartitionInstance, RootedTree, RootedTreeCharacteristics};
pub use verify::{Conjecture, Mode, VerificationReport};
