//! Power-commutator presentations of finite p-groups and their
//! class-preserving automorphisms.

pub mod aut;
pub mod catalogue;
pub mod consistency;
pub mod element;
pub mod error;
pub mod oracle;
pub mod pcp;
pub mod subgroup;
pub mod table;
pub mod word;

pub use consistency::{check_consistency, ConsistencyReport, Violation};
pub use element::{Element, MAX_GENS};
pub use error::{Error, Result};
pub use pcp::{PcBuilder, PcPresentation, Relation};
pub use table::GroupTable;
pub use word::Word;
