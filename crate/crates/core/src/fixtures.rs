//! Named partitions shipped with the crate.
//!
//! The pairs are kept in the order they are usually quoted, so `as-given`
//! orientations of a fixture are reproducible.

use crate::document::PartitionDocument;
use crate::error::{Error, Result};
use crate::partition::TwoPartition;

const FIXTURES: &[(&str, &str)] = &[
    ("z3", include_str!("../data/z3.json")),
    ("s5", include_str!("../data/s5.json")),
    ("r5", include_str!("../data/r5.json")),
    ("t7", include_str!("../data/t7.json")),
    ("q9", include_str!("../data/q9.json")),
    ("r11", include_str!("../data/r11.json")),
    ("t11", include_str!("../data/t11.json")),
    ("s17", include_str!("../data/s17.json")),
    ("t19", include_str!("../data/t19.json")),
    ("s27", include_str!("../data/s27.json")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

/// Case-insensitive lookup of the raw document text.
pub fn text(name: &str) -> Option<&'static str> {
    let name = name.to_ascii_lowercase();
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn document(name: &str) -> Result<PartitionDocument> {
    let text = text(name).ok_or_else(|| Error::Parse {
        line: 0,
        column: 0,
        message: format!(
            "unknown fixture `{name}` (known: {})",
            names().collect::<Vec<_>>().join(", ")
        ),
    })?;
    PartitionDocument::parse(text)
}

/// Panics on unknown names; meant for tests and examples.
pub fn partition(name: &str) -> TwoPartition {
    document(name)
        .and_then(|d| d.partition())
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}
