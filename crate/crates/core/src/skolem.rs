//! Skolem sequences and their correspondence with Skolem starters.
//!
//! A Skolem sequence of order `q` has length `2q`; each `k` in `1..=q`
//! occupies exactly two positions, `k` apart. Reading off the position pairs
//! (1-based) gives a Skolem starter of order `2q + 1`, and every Skolem
//! starter arises this way.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{TwoPartition, UnorderedPair};
use crate::zn::Modulus;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkolemSequence {
    entries: Vec<u32>,
}

impl SkolemSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let len = entries.len();
        if len == 0 || len % 2 == 1 {
            return Err(Error::InvalidSequence(format!(
                "length {len} is not a positive even number"
            )));
        }
        let q = (len / 2) as u32;
        let mut first_seen: Vec<Option<usize>> = vec![None; q as usize + 1];
        let mut complete = vec![false; q as usize + 1];
        for (pos, &k) in entries.iter().enumerate() {
            if k == 0 || k > q {
                return Err(Error::InvalidSequence(format!(
                    "entry {k} at position {} is outside 1..={q}",
                    pos + 1
                )));
            }
            match first_seen[k as usize] {
                None => first_seen[k as usize] = Some(pos),
                Some(prev) => {
                    if complete[k as usize] {
                        return Err(Error::InvalidSequence(format!(
                            "{k} appears more than twice"
                        )));
                    }
                    if pos - prev != k as usize {
                        return Err(Error::InvalidSequence(format!(
                            "the two {k}s sit at positions {} and {}, not {k} apart",
                            prev + 1,
                            pos + 1
                        )));
                    }
                    complete[k as usize] = true;
                }
            }
        }
        // len == 2q entries with no value more than twice forces every value
        // to appear exactly twice.
        debug_assert!(complete[1..].iter().all(|&c| c));
        Ok(SkolemSequence { entries })
    }

    pub fn order(&self) -> u32 {
        (self.entries.len() / 2) as u32
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Pairs of positions holding equal values, as a starter of order `2q + 1`.
    pub fn to_starter(&self) -> TwoPartition {
        let q = self.order();
        let modulus = Modulus::new(2 * q + 1).expect("2q + 1 is odd and at least 3");
        let mut first = vec![0u32; q as usize + 1];
        let mut pairs = Vec::with_capacity(q as usize);
        for (pos, &k) in self.entries.iter().enumerate() {
            let p = pos as u32 + 1;
            if first[k as usize] == 0 {
                first[k as usize] = p;
            } else {
                pairs.push(UnorderedPair::new(first[k as usize], p));
            }
        }
        pairs.sort_unstable();
        TwoPartition::from_sorted_unchecked(modulus, pairs)
    }

    /// Inverse of [`to_starter`](Self::to_starter).
    pub fn from_starter(partition: &TwoPartition) -> Result<Self> {
        if let Some(w) = partition.witness(crate::properties::Predicate::Skolem) {
            return Err(Error::NotSkolemStarter(format!(
                "pair {} spans more than {}",
                w[0],
                partition.half()
            )));
        }
        if let Some(w) = partition.witness(crate::properties::Predicate::Starter) {
            let shown: Vec<String> = w.iter().map(ToString::to_string).collect();
            return Err(Error::NotSkolemStarter(format!(
                "pairs {} share a difference",
                shown.join(" and ")
            )));
        }
        let mut entries = vec![0u32; partition.order() as usize - 1];
        for p in partition.pairs() {
            entries[p.lo() as usize - 1] = p.span();
            entries[p.hi() as usize - 1] = p.span();
        }
        SkolemSequence::new(entries)
    }
}

impl FromStr for SkolemSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| {
                    Error::InvalidSequence(format!("`{tok}` is not a positive integer"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SkolemSequence::new(entries)
    }
}

impl fmt::Display for SkolemSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// One sequence per non-blank line.
pub fn parse_sequences(text: &str) -> Result<Vec<SkolemSequence>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(str::parse)
        .collect()
}
