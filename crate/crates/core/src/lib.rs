//! Starters in cyclic groups: verification, products and search.
//!
//! A 2-partition of `Z_n*` (n odd) splits the nonzero residues into
//! `(n - 1) / 2` unordered pairs. The crate checks the classical predicates
//! (starter, strong, skew, Skolem, cardioidal), multiplies 2-partitions of
//! orders `n` and `m` into one of order `nm`, converts between Skolem
//! sequences and Skolem starters, and searches small orders.
//!
//! ```
//! use starter_forge::{fixtures, Predicate};
//!
//! let s17 = fixtures::partition("s17");
//! assert!(s17.is_strong() && s17.is_skolem());
//! assert!(!s17.satisfies(Predicate::Skew));
//! ```

pub mod composite;
pub mod cover;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod nucleus;
pub mod partition;
pub mod product;
pub mod properties;
pub mod search;
pub mod skolem;
pub mod zn;

pub use composite::{build_composite, Composite, Factor, NucleusChoice};
pub use cover::{
    build_ordered_cover, orient, OrderedCover, Orientation, OrientedList, OrientedPair,
};
pub use error::{Error, Result};
pub use nucleus::Nucleus;
pub use partition::{TwoPartition, UnorderedPair};
pub use product::{PairKind, ProductResult};
pub use properties::{Predicate, PredicateSet, PropertyReport};
pub use search::{search, SearchMode, SearchOutcome, SearchSpec, Shard, Strategy};
pub use skolem::SkolemSequence;
pub use zn::{Modulus, Residue};
