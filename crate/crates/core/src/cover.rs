//! Oriented pair lists and ordered covers.
//!
//! An ordered cover orients each pair of a 2-partition so that the first
//! coordinates, taken up to sign, exhaust `Z_n*`. Every 2-partition admits
//! one; [`build_ordered_cover`] produces it deterministically by chaining
//! pairs through negation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{TwoPartition, UnorderedPair};
use crate::zn::{Modulus, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrientedPair {
    pub first: Residue,
    pub second: Residue,
}

impl OrientedPair {
    pub fn new(first: Residue, second: Residue) -> Self {
        OrientedPair { first, second }
    }

    pub fn unordered(self) -> UnorderedPair {
        UnorderedPair::new(self.first, self.second)
    }

    pub fn reversed(self) -> Self {
        OrientedPair::new(self.second, self.first)
    }

    pub fn negated(self, z: Modulus) -> Self {
        OrientedPair::new(z.neg(self.first), z.neg(self.second))
    }
}

impl From<(Residue, Residue)> for OrientedPair {
    fn from((first, second): (Residue, Residue)) -> Self {
        OrientedPair { first, second }
    }
}

impl fmt::Display for OrientedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// How to orient the pairs of a partition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    #[default]
    LoFirst,
    HiFirst,
}

impl FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "lo-first" => Ok(Orientation::LoFirst),
            "hi-first" => Ok(Orientation::HiFirst),
            other => Err(format!(
                "unknown orientation `{other}` (expected lo-first or hi-first)"
            )),
        }
    }
}

/// One orientation per pair of a source 2-partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedList {
    source: TwoPartition,
    entries: Vec<OrientedPair>,
}

impl OrientedList {
    /// Validates that `entries` orient exactly the pairs of `source`.
    pub fn new(source: &TwoPartition, entries: Vec<OrientedPair>) -> Result<Self> {
        let n = source.order();
        if let Some(bad) = entries
            .iter()
            .find(|e| e.first >= n || e.second >= n || e.first == e.second)
        {
            return Err(Error::NotAnOrientation(format!(
                "{bad} is not a pair of distinct residues mod {n}"
            )));
        }
        let mut forgotten: Vec<UnorderedPair> = entries.iter().map(|e| e.unordered()).collect();
        forgotten.sort_unstable();
        if forgotten != source.pairs() {
            return Err(Error::NotAnOrientation(format!(
                "entries do not match the pairs of {source}"
            )));
        }
        Ok(OrientedList {
            source: source.clone(),
            entries,
        })
    }

    pub fn source(&self) -> &TwoPartition {
        &self.source
    }

    pub fn order(&self) -> u32 {
        self.source.order()
    }

    pub fn modulus(&self) -> Modulus {
        self.source.modulus()
    }

    pub fn entries(&self) -> &[OrientedPair] {
        &self.entries
    }

    pub fn as_tuples(&self) -> Vec<(Residue, Residue)> {
        self.entries.iter().map(|e| (e.first, e.second)).collect()
    }
}

/// Orients every pair of `partition` by a fixed policy, in canonical pair order.
pub fn orient(partition: &TwoPartition, policy: Orientation) -> OrientedList {
    let entries = partition
        .pairs()
        .iter()
        .map(|p| match policy {
            Orientation::LoFirst => OrientedPair::new(p.lo(), p.hi()),
            Orientation::HiFirst => OrientedPair::new(p.hi(), p.lo()),
        })
        .collect();
    OrientedList {
        source: partition.clone(),
        entries,
    }
}

/// Entrywise negation; the source becomes the conjugate partition.
pub fn negate_list(list: &OrientedList) -> OrientedList {
    let z = list.modulus();
    OrientedList {
        source: list.source.conjugate(),
        entries: list.entries.iter().map(|e| e.negated(z)).collect(),
    }
}

/// First residue not covered by `±first`, if any.
pub(crate) fn uncovered_first(list: &OrientedList) -> Option<Residue> {
    let z = list.modulus();
    let mut hit = vec![false; z.get() as usize];
    for e in list.entries() {
        hit[e.first as usize] = true;
        hit[z.neg(e.first) as usize] = true;
    }
    z.nonzero().find(|&r| !hit[r as usize])
}

/// `∪ {±first_i} = Z_n*`.
pub fn verify_cover(list: &OrientedList) -> bool {
    uncovered_first(list).is_none()
}

/// An [`OrientedList`] whose first coordinates cover `Z_n*` up to sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedCover(OrientedList);

impl OrderedCover {
    pub fn as_list(&self) -> &OrientedList {
        &self.0
    }

    pub fn into_list(self) -> OrientedList {
        self.0
    }

    pub fn entries(&self) -> &[OrientedPair] {
        self.0.entries()
    }

    pub fn source(&self) -> &TwoPartition {
        self.0.source()
    }

    pub fn order(&self) -> u32 {
        self.0.order()
    }
}

impl TryFrom<OrientedList> for OrderedCover {
    type Error = Error;

    fn try_from(list: OrientedList) -> Result<Self> {
        match uncovered_first(&list) {
            None => Ok(OrderedCover(list)),
            Some(missing) => Err(Error::InvalidCover {
                order: list.order(),
                missing,
            }),
        }
    }
}

/// Deterministic ordered cover.
///
/// Pairs `{a, -a}` go last as `(lo, hi)`. The remaining pairs are consumed
/// in chains: a chain opens at the least unused residue `x1`, and each
/// following pair is oriented so that its first coordinate is the negation
/// of the previous second coordinate. The chain closes on the pair whose
/// second coordinate is `-x1`.
pub fn build_ordered_cover(partition: &TwoPartition) -> OrderedCover {
    let z = partition.modulus();
    let partner = partition.partner_table();
    let mut used = vec![false; z.get() as usize];
    let mut entries = Vec::with_capacity(partition.pairs().len());
    let mut tail = Vec::new();

    for p in partition.pairs() {
        if z.add(p.lo(), p.hi()) == 0 {
            used[p.lo() as usize] = true;
            used[p.hi() as usize] = true;
            tail.push(OrientedPair::new(p.lo(), p.hi()));
        }
    }

    for start in z.nonzero() {
        if used[start as usize] {
            continue;
        }
        let closing = z.neg(start);
        let mut x = start;
        loop {
            let y = partner[x as usize];
            debug_assert!(!used[x as usize] && !used[y as usize]);
            used[x as usize] = true;
            used[y as usize] = true;
            entries.push(OrientedPair::new(x, y));
            if y == closing {
                break;
            }
            x = z.neg(y);
        }
    }
    entries.extend(tail);
    OrderedCover(OrientedList {
        source: partition.clone(),
        entries,
    })
}
