//! Direct constructions: canonical partitions and cardioidal partitions from
//! the cycle structure of doubling.

use crate::error::{Error, Result};
use crate::partition::{TwoPartition, UnorderedPair};
use crate::zn::{Modulus, Residue};

/// `{{i, n - i} : 1 <= i <= q}`, always a starter.
pub fn gen_canonical(order: u32) -> Result<TwoPartition> {
    let z = Modulus::new(order)?;
    let pairs = (1..=z.half())
        .map(|i| UnorderedPair::new(i, order - i))
        .collect();
    Ok(TwoPartition::from_sorted_unchecked(z, pairs))
}

/// Cycle decomposition of `i ↦ 2i mod n` on `Z_n*`.
///
/// Each cycle starts at its least element; cycles are sorted by that element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingCycles {
    modulus: Modulus,
    cycles: Vec<Vec<Residue>>,
}

impl DoublingCycles {
    pub fn order(&self) -> u32 {
        self.modulus.get()
    }

    pub fn cycles(&self) -> &[Vec<Residue>] {
        &self.cycles
    }

    pub fn all_even(&self) -> bool {
        self.cycles.iter().all(|c| c.len() % 2 == 0)
    }

    pub fn first_odd(&self) -> Option<&[Residue]> {
        self.cycles
            .iter()
            .find(|c| c.len() % 2 == 1)
            .map(Vec::as_slice)
    }
}

pub fn doubling_cycles(order: u32) -> Result<DoublingCycles> {
    let z = Modulus::new(order)?;
    let mut seen = vec![false; order as usize];
    let mut cycles = Vec::new();
    for start in z.nonzero() {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i as usize] {
            seen[i as usize] = true;
            cycle.push(i);
            i = z.double(i);
        }
        cycles.push(cycle);
    }
    Ok(DoublingCycles { modulus: z, cycles })
}

/// A cardioidal 2-partition built from perfect matchings on the doubling
/// cycles.
///
/// An even cycle `(c0, c1, ..., c_{L-1})` has two matchings by edges
/// `{c, 2c}`: offset 0 takes `{c0,c1}, {c2,c3}, ...` and offset 1 takes
/// `{c1,c2}, ..., {c_{L-1},c0}`. `offsets[k]` selects the matching on cycle
/// `k`; missing entries mean 0. Returns `None` when some cycle is odd.
pub fn gen_cardioidal(order: u32, offsets: &[u8]) -> Result<Option<TwoPartition>> {
    let cycles = doubling_cycles(order)?;
    if !cycles.all_even() {
        return Ok(None);
    }
    let mut pairs = Vec::with_capacity(cycles.modulus.half() as usize);
    for (k, cycle) in cycles.cycles.iter().enumerate() {
        let shift = offsets.get(k).copied().unwrap_or(0) as usize % 2;
        let len = cycle.len();
        for j in (shift..len + shift).step_by(2) {
            pairs.push(UnorderedPair::new(cycle[j % len], cycle[(j + 1) % len]));
        }
    }
    pairs.sort_unstable();
    Ok(Some(TwoPartition::from_sorted_unchecked(
        cycles.modulus,
        pairs,
    )))
}

/// Like [`gen_cardioidal`] but reports the offending odd cycle.
pub fn require_cardioidal(order: u32, offsets: &[u8]) -> Result<TwoPartition> {
    match gen_cardioidal(order, offsets)? {
        Some(p) => Ok(p),
        None => {
            let cycles = doubling_cycles(order)?;
            Err(Error::NoCardioidalPartition {
                order,
                cycle: cycles.first_odd().unwrap_or_default().to_vec(),
            })
        }
    }
}
