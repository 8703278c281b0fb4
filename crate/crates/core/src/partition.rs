//! Unordered pairs and 2-partitions of `Z_n*`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zn::{Modulus, Residue};

/// An unordered pair stored as `lo < hi` in natural order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UnorderedPair {
    lo: Residue,
    hi: Residue,
}

impl UnorderedPair {
    /// Panics if `a == b`.
    pub fn new(a: Residue, b: Residue) -> Self {
        assert_ne!(a, b, "degenerate pair");
        if a < b {
            UnorderedPair { lo: a, hi: b }
        } else {
            UnorderedPair { lo: b, hi: a }
        }
    }

    #[inline]
    pub fn lo(self) -> Residue {
        self.lo
    }

    #[inline]
    pub fn hi(self) -> Residue {
        self.hi
    }

    /// `hi - lo` under natural order.
    #[inline]
    pub fn span(self) -> u32 {
        self.hi - self.lo
    }

    pub fn contains(self, e: Residue) -> bool {
        self.lo == e || self.hi == e
    }
}

impl fmt::Display for UnorderedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A partition of `Z_n*` into `(n - 1) / 2` unordered pairs.
///
/// Pairs are kept sorted by `lo`, so two partitions with the same pair set
/// compare equal structurally, and the derived `Ord` is the canonical order
/// used for sorting search results.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoPartition {
    modulus: Modulus,
    pairs: Vec<UnorderedPair>,
}

impl TwoPartition {
    /// Validated constructor. Entries are reduced modulo `order` first.
    pub fn new(order: u32, raw_pairs: &[(i64, i64)]) -> Result<Self> {
        let modulus = Modulus::new(order)?;
        let mut seen = vec![false; order as usize];
        let mut pairs = Vec::with_capacity(raw_pairs.len());
        for &(x, y) in raw_pairs {
            let (a, b) = (modulus.reduce(x), modulus.reduce(y));
            if a == 0 || b == 0 {
                return Err(Error::ZeroElement { x, y, order });
            }
            if a == b {
                return Err(Error::DegeneratePair { x, y, order });
            }
            for e in [a, b] {
                if std::mem::replace(&mut seen[e as usize], true) {
                    return Err(Error::RepeatedElement { element: e, order });
                }
            }
            pairs.push(UnorderedPair::new(a, b));
        }
        let expected = modulus.half() as usize;
        if pairs.len() != expected {
            return Err(Error::WrongCount {
                order,
                expected,
                found: pairs.len(),
            });
        }
        pairs.sort_unstable();
        Ok(TwoPartition { modulus, pairs })
    }

    /// Builds from already-reduced pairs, checking the partition invariant.
    pub fn from_residue_pairs(
        modulus: Modulus,
        pairs: impl IntoIterator<Item = (Residue, Residue)>,
    ) -> Result<Self> {
        let raw: Vec<(i64, i64)> = pairs
            .into_iter()
            .map(|(a, b)| (a as i64, b as i64))
            .collect();
        Self::new(modulus.get(), &raw)
    }

    /// Skips validation; callers guarantee the invariant.
    pub(crate) fn from_sorted_unchecked(modulus: Modulus, pairs: Vec<UnorderedPair>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(pairs.len(), modulus.half() as usize);
        TwoPartition { modulus, pairs }
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.modulus.get()
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// `q = (n - 1) / 2`.
    #[inline]
    pub fn half(&self) -> u32 {
        self.modulus.half()
    }

    pub fn pairs(&self) -> &[UnorderedPair] {
        &self.pairs
    }

    /// `partner[e]` is the element paired with `e`; `partner[0] == 0`.
    pub fn partner_table(&self) -> Vec<Residue> {
        let mut partner = vec![0; self.order() as usize];
        for p in &self.pairs {
            partner[p.lo as usize] = p.hi;
            partner[p.hi as usize] = p.lo;
        }
        partner
    }

    /// The pair containing `e`, if `e` is nonzero and in range.
    pub fn pair_of(&self, e: Residue) -> Option<UnorderedPair> {
        self.pairs.iter().copied().find(|p| p.contains(e))
    }

    /// The 2-partition `{{-x, -y}}`.
    pub fn conjugate(&self) -> TwoPartition {
        let z = self.modulus;
        let mut pairs: Vec<UnorderedPair> = self
            .pairs
            .iter()
            .map(|p| UnorderedPair::new(z.neg(p.lo), z.neg(p.hi)))
            .collect();
        pairs.sort_unstable();
        TwoPartition::from_sorted_unchecked(z, pairs)
    }

    pub fn as_tuples(&self) -> Vec<(Residue, Residue)> {
        self.pairs.iter().map(|p| (p.lo, p.hi)).collect()
    }
}

impl fmt::Display for TwoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}: {{", self.order())?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}
