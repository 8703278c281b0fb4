//! Products of 2-partitions.
//!
//! For `S` of order `n` and `T` of order `m`, every construction emits pairs
//! `{n·r + x, n·t + y}` with `(x, y)` drawn from an orientation of `S` (or
//! `(0, 0)`) and `(r, t)` drawn from ordered pairs over `Z_m` (or `(0, 0)`).
//! The constructions differ only in where the two families come from:
//!
//! | construction | `(x, y)` over               | `(r, t)` over             | multiples of `n` from |
//! |--------------|-----------------------------|---------------------------|-----------------------|
//! | standard     | `S~`                        | `T̄ ∪ T̄' ∪ {(0,0)}`        | `T̄`                   |
//! | starred      | `S̄ ∪ S̄'` (and `S̄` at 0)     | `T~` (and `(0,0)`)        | `T~`                  |
//! | nucleus      | `S~`                        | `X ∪ {(0,0)}`             | `T~`                  |
//!
//! Here a bar marks an ordered cover, a prime its negation, and a tilde an
//! arbitrary orientation.

use serde::Serialize;

use crate::cover::{negate_list, uncovered_first, OrientedList, OrientedPair};
use crate::error::{Error, Result};
use crate::nucleus::Nucleus;
use crate::partition::{TwoPartition, UnorderedPair};
use crate::zn::{Modulus, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairKind {
    #[serde(rename = "type-i")]
    TypeI,
    #[serde(rename = "type-ii")]
    TypeII,
    #[serde(rename = "type-i*")]
    TypeIStar,
    #[serde(rename = "type-ii*")]
    TypeIIStar,
    #[serde(rename = "type-iX")]
    TypeIX,
    #[serde(rename = "type-iiX")]
    TypeIIX,
}

impl PairKind {
    pub fn label(self) -> &'static str {
        match self {
            PairKind::TypeI => "type-i",
            PairKind::TypeII => "type-ii",
            PairKind::TypeIStar => "type-i*",
            PairKind::TypeIIStar => "type-ii*",
            PairKind::TypeIX => "type-iX",
            PairKind::TypeIIX => "type-iiX",
        }
    }
}

/// How one product pair was generated: `u = n·r + x`, `v = n·t + y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Provenance {
    pub kind: PairKind,
    pub rt: (Residue, Residue),
    pub xy: (Residue, Residue),
    pub u: Residue,
    pub v: Residue,
}

impl Provenance {
    pub fn pair(&self) -> UnorderedPair {
        UnorderedPair::new(self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductResult {
    partition: TwoPartition,
    left_order: u32,
    right_order: u32,
    provenance: Vec<Provenance>,
}

impl ProductResult {
    pub fn partition(&self) -> &TwoPartition {
        &self.partition
    }

    pub fn into_partition(self) -> TwoPartition {
        self.partition
    }

    pub fn left_order(&self) -> u32 {
        self.left_order
    }

    pub fn right_order(&self) -> u32 {
        self.right_order
    }

    /// One record per pair, in canonical pair order.
    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    pub fn count(&self, kind: PairKind) -> usize {
        self.provenance.iter().filter(|p| p.kind == kind).count()
    }
}

struct Assembler {
    n: u32,
    m: u32,
    modulus: Modulus,
    records: Vec<Provenance>,
}

impl Assembler {
    fn new(left: Modulus, right: Modulus) -> Result<Self> {
        let modulus = left.checked_mul(right)?;
        Ok(Assembler {
            n: left.get(),
            m: right.get(),
            modulus,
            records: Vec::with_capacity(modulus.half() as usize),
        })
    }

    fn push(&mut self, kind: PairKind, rt: (Residue, Residue), xy: (Residue, Residue)) {
        self.records.push(Provenance {
            kind,
            rt,
            xy,
            u: self.n * rt.0 + xy.0,
            v: self.n * rt.1 + xy.1,
        });
    }

    fn finish(mut self) -> Result<ProductResult> {
        let nm = self.modulus.get();
        let mut seen = vec![false; nm as usize];
        seen[0] = true;
        for rec in &self.records {
            let overlap = rec.u == rec.v
                || std::mem::replace(&mut seen[rec.u as usize], true)
                || std::mem::replace(&mut seen[rec.v as usize], true);
            if overlap {
                return Err(Error::ProductOverlap {
                    u: rec.u,
                    v: rec.v,
                    order: nm,
                });
            }
        }
        debug_assert_eq!(self.records.len(), self.modulus.half() as usize);
        self.records.sort_by_key(Provenance::pair);
        let pairs = self.records.iter().map(Provenance::pair).collect();
        Ok(ProductResult {
            partition: TwoPartition::from_sorted_unchecked(self.modulus, pairs),
            left_order: self.n,
            right_order: self.m,
            provenance: self.records,
        })
    }
}

fn check_orients(list: &OrientedList, partition: &TwoPartition) -> Result<()> {
    if list.order() != partition.order() {
        return Err(Error::OrderMismatch {
            expected: partition.order(),
            found: list.order(),
        });
    }
    if list.source() != partition {
        return Err(Error::NotAnOrientation(format!(
            "list orients {} rather than {}",
            list.source(),
            partition
        )));
    }
    Ok(())
}

fn check_cover(list: &OrientedList) -> Result<()> {
    match uncovered_first(list) {
        None => Ok(()),
        Some(missing) => Err(Error::InvalidCover {
            order: list.order(),
            missing,
        }),
    }
}

fn tuple(e: &OrientedPair) -> (Residue, Residue) {
    (e.first, e.second)
}

/// The standard product `W_ST` from an orientation `S~` of `S` and an
/// ordered cover `T̄` of `T`.
pub fn product(
    s: &TwoPartition,
    t: &TwoPartition,
    tilde_s: &OrientedList,
    bar_t: &OrientedList,
) -> Result<ProductResult> {
    check_orients(tilde_s, s)?;
    check_orients(bar_t, t)?;
    check_cover(bar_t)?;
    let mut out = Assembler::new(s.modulus(), t.modulus())?;
    let bar_t_neg = negate_list(bar_t);
    let outer = std::iter::once((0, 0))
        .chain(bar_t.entries().iter().map(tuple))
        .chain(bar_t_neg.entries().iter().map(tuple));
    for rt in outer {
        for xy in tilde_s.entries() {
            out.push(PairKind::TypeI, rt, tuple(xy));
        }
    }
    for rt in bar_t.entries() {
        out.push(PairKind::TypeII, tuple(rt), (0, 0));
    }
    out.finish()
}

/// The starred product: the cover sits on the left factor and an arbitrary
/// orientation on the right.
pub fn product_starred(
    s: &TwoPartition,
    t: &TwoPartition,
    bar_s: &OrientedList,
    tilde_t: &OrientedList,
) -> Result<ProductResult> {
    check_orients(bar_s, s)?;
    check_orients(tilde_t, t)?;
    check_cover(bar_s)?;
    let mut out = Assembler::new(s.modulus(), t.modulus())?;
    let bar_s_neg = negate_list(bar_s);
    for xy in bar_s.entries() {
        out.push(PairKind::TypeIStar, (0, 0), tuple(xy));
    }
    for xy in bar_s.entries().iter().chain(bar_s_neg.entries()) {
        for rt in tilde_t.entries() {
            out.push(PairKind::TypeIStar, tuple(rt), tuple(xy));
        }
    }
    for rt in tilde_t.entries() {
        out.push(PairKind::TypeIIStar, tuple(rt), (0, 0));
    }
    out.finish()
}

/// The `X`-generated product `W^X_ST`.
pub fn product_with_nucleus(
    s: &TwoPartition,
    t: &TwoPartition,
    tilde_s: &OrientedList,
    tilde_t: &OrientedList,
    nucleus: &Nucleus,
) -> Result<ProductResult> {
    check_orients(tilde_s, s)?;
    check_orients(tilde_t, t)?;
    if nucleus.order() != t.order() {
        return Err(Error::OrderMismatch {
            expected: t.order(),
            found: nucleus.order(),
        });
    }
    let mut out = Assembler::new(s.modulus(), t.modulus())?;
    let outer = std::iter::once((0, 0)).chain(nucleus.entries().iter().map(tuple));
    for rt in outer {
        for xy in tilde_s.entries() {
            out.push(PairKind::TypeIX, rt, tuple(xy));
        }
    }
    for rt in tilde_t.entries() {
        out.push(PairKind::TypeIIX, tuple(rt), (0, 0));
    }
    out.finish()
}

/// `W^c_ST`: the nucleus product with the cardioidal nucleus of `T`'s order.
pub fn cardioidal_product(
    s: &TwoPartition,
    t: &TwoPartition,
    tilde_s: &OrientedList,
    tilde_t: &OrientedList,
) -> Result<ProductResult> {
    let c = Nucleus::cardioidal(t.order())?;
    product_with_nucleus(s, t, tilde_s, tilde_t, &c)
}

/// A fully specified product. The factors are the sources of the lists.
#[derive(Debug, Clone)]
pub enum ProductRecipe {
    Standard {
        tilde_s: OrientedList,
        bar_t: OrientedList,
    },
    Starred {
        bar_s: OrientedList,
        tilde_t: OrientedList,
    },
    Nucleus {
        tilde_s: OrientedList,
        tilde_t: OrientedList,
        nucleus: Nucleus,
    },
}

impl ProductRecipe {
    pub fn build(&self) -> Result<ProductResult> {
        match self {
            ProductRecipe::Standard { tilde_s, bar_t } => {
                product(tilde_s.source(), bar_t.source(), tilde_s, bar_t)
            }
            ProductRecipe::Starred { bar_s, tilde_t } => {
                product_starred(bar_s.source(), tilde_t.source(), bar_s, tilde_t)
            }
            ProductRecipe::Nucleus {
                tilde_s,
                tilde_t,
                nucleus,
            } => product_with_nucleus(
                tilde_s.source(),
                tilde_t.source(),
                tilde_s,
                tilde_t,
                nucleus,
            ),
        }
    }
}
