//! Single-partition predicates (starter, strong, skew, Skolem, cardioidal,
//! canonical) and the full diagnostic report.
//!
//! Each predicate is computed through a witness search: `None` means the
//! property holds, `Some(pairs)` names the first offending pair (or pair of
//! pairs) in canonical order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::partition::{TwoPartition, UnorderedPair};
use crate::zn::{Modulus, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Predicate {
    Starter,
    Strong,
    Skew,
    Skolem,
    Cardioidal,
    Canonical,
}

impl Predicate {
    pub const ALL: [Predicate; 6] = [
        Predicate::Starter,
        Predicate::Strong,
        Predicate::Skew,
        Predicate::Skolem,
        Predicate::Cardioidal,
        Predicate::Canonical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Starter => "starter",
            Predicate::Strong => "strong",
            Predicate::Skew => "skew",
            Predicate::Skolem => "skolem",
            Predicate::Cardioidal => "cardioidal",
            Predicate::Canonical => "canonical",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}

/// A set of predicates, parsed from a comma-separated list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct PredicateSet(u8);

impl PredicateSet {
    pub fn empty() -> Self {
        PredicateSet(0)
    }

    pub fn with(mut self, p: Predicate) -> Self {
        self.0 |= p.bit();
        self
    }

    pub fn contains(self, p: Predicate) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Predicate> {
        Predicate::ALL
            .into_iter()
            .filter(move |p| self.contains(*p))
    }
}

impl FromIterator<Predicate> for PredicateSet {
    fn from_iter<I: IntoIterator<Item = Predicate>>(iter: I) -> Self {
        iter.into_iter()
            .fold(PredicateSet::empty(), PredicateSet::with)
    }
}

impl FromStr for PredicateSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for PredicateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.iter().map(Predicate::name).collect();
        f.write_str(&names.join(","))
    }
}

/// `hi - lo <= q` in natural order.
#[inline]
pub fn is_skolem_pair(modulus: Modulus, a: Residue, b: Residue) -> bool {
    a.abs_diff(b) <= modulus.half()
}

/// `{a, b} = {i, 2i mod n}` for some nonzero `i`.
#[inline]
pub fn is_cardioidal_pair(modulus: Modulus, a: Residue, b: Residue) -> bool {
    modulus.double(a) == b || modulus.double(b) == a
}

/// `{a, b} = {i, -i mod n}`.
#[inline]
pub fn is_canonical_pair(modulus: Modulus, a: Residue, b: Residue) -> bool {
    modulus.add(a, b) == 0
}

/// First pair of pairs whose keys collide; a pair whose key is `forbidden`
/// is reported alone.
fn first_collision(
    pairs: &[UnorderedPair],
    slots: usize,
    forbidden: Option<usize>,
    key: impl Fn(UnorderedPair) -> usize,
) -> Option<Vec<UnorderedPair>> {
    let mut owner: Vec<Option<UnorderedPair>> = vec![None; slots];
    for &p in pairs {
        let k = key(p);
        if Some(k) == forbidden {
            return Some(vec![p]);
        }
        if let Some(prev) = owner[k] {
            return Some(vec![prev, p]);
        }
        owner[k] = Some(p);
    }
    None
}

fn first_offender(
    pairs: &[UnorderedPair],
    ok: impl Fn(UnorderedPair) -> bool,
) -> Option<Vec<UnorderedPair>> {
    pairs.iter().copied().find(|&p| !ok(p)).map(|p| vec![p])
}

impl TwoPartition {
    /// Witness against property `p`, or `None` when it holds.
    pub fn witness(&self, p: Predicate) -> Option<Vec<UnorderedPair>> {
        let z = self.modulus();
        let pairs = self.pairs();
        let q = z.half() as usize;
        match p {
            // The ± differences cover Z_n* iff the q classes {d, -d} are distinct.
            Predicate::Starter => first_collision(pairs, q + 1, None, |pr| {
                z.sign_class(z.sub(pr.hi(), pr.lo())) as usize
            }),
            Predicate::Strong => first_collision(pairs, z.get() as usize, Some(0), |pr| {
                z.add(pr.lo(), pr.hi()) as usize
            }),
            Predicate::Skew => first_collision(pairs, q + 1, Some(0), |pr| {
                z.sign_class(z.add(pr.lo(), pr.hi())) as usize
            }),
            Predicate::Skolem => first_offender(pairs, |pr| is_skolem_pair(z, pr.lo(), pr.hi())),
            Predicate::Cardioidal => {
                first_offender(pairs, |pr| is_cardioidal_pair(z, pr.lo(), pr.hi()))
            }
            Predicate::Canonical => {
                first_offender(pairs, |pr| is_canonical_pair(z, pr.lo(), pr.hi()))
            }
        }
    }

    pub fn satisfies(&self, p: Predicate) -> bool {
        self.witness(p).is_none()
    }

    pub fn satisfies_all(&self, set: PredicateSet) -> bool {
        set.iter().all(|p| self.satisfies(p))
    }

    pub fn is_starter(&self) -> bool {
        self.satisfies(Predicate::Starter)
    }

    pub fn is_strong(&self) -> bool {
        self.satisfies(Predicate::Strong)
    }

    pub fn is_skew(&self) -> bool {
        self.satisfies(Predicate::Skew)
    }

    pub fn is_skolem(&self) -> bool {
        self.satisfies(Predicate::Skolem)
    }

    pub fn is_cardioidal(&self) -> bool {
        self.satisfies(Predicate::Cardioidal)
    }

    pub fn is_canonical(&self) -> bool {
        self.satisfies(Predicate::Canonical)
    }

    /// Every predicate evaluated, with multisets and witnesses.
    pub fn report(&self) -> PropertyReport {
        let z = self.modulus();
        let mut differences: Vec<Residue> = self
            .pairs()
            .iter()
            .flat_map(|p| {
                let d = z.sub(p.hi(), p.lo());
                [d, z.neg(d)]
            })
            .collect();
        differences.sort_unstable();
        let mut sums: Vec<Residue> = self.pairs().iter().map(|p| z.add(p.lo(), p.hi())).collect();
        sums.sort_unstable();

        let mut verdict = [false; 6];
        let mut violations = Vec::new();
        for (slot, p) in verdict.iter_mut().zip(Predicate::ALL) {
            match self.witness(p) {
                None => *slot = true,
                Some(pairs) => violations.push(Violation {
                    predicate: p,
                    pairs: pairs.iter().map(|pr| [pr.lo(), pr.hi()]).collect(),
                }),
            }
        }
        let [is_starter, is_strong, is_skew, is_skolem, is_cardioidal, is_canonical] = verdict;
        PropertyReport {
            order: self.order(),
            starter: is_starter,
            strong: is_strong,
            skew: is_skew,
            skolem: is_skolem,
            cardioidal: is_cardioidal,
            canonical: is_canonical,
            differences,
            sums,
            violations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub predicate: Predicate,
    pub pairs: Vec<[Residue; 2]>,
}

/// Diagnostic of one 2-partition. Field order is the rendering order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub order: u32,
    pub starter: bool,
    pub strong: bool,
    pub skew: bool,
    pub skolem: bool,
    pub cardioidal: bool,
    pub canonical: bool,
    /// The `2q` values `±(x - y) mod n`, sorted.
    pub differences: Vec<Residue>,
    /// The `q` values `(x + y) mod n`, sorted.
    pub sums: Vec<Residue>,
    pub violations: Vec<Violation>,
}

impl PropertyReport {
    pub fn holds(&self, p: Predicate) -> bool {
        match p {
            Predicate::Starter => self.starter,
            Predicate::Strong => self.strong,
            Predicate::Skew => self.skew,
            Predicate::Skolem => self.skolem,
            Predicate::Cardioidal => self.cardioidal,
            Predicate::Canonical => self.canonical,
        }
    }

    pub fn violation(&self, p: Predicate) -> Option<&Violation> {
        self.violations.iter().find(|v| v.predicate == p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: u32, pairs: &[(i64, i64)]) -> TwoPartition {
        TwoPartition::new(n, pairs).unwrap()
    }

    fn r5() -> TwoPartition {
        part(5, &[(1, 2), (3, 4)])
    }
    fn t7() -> TwoPartition {
        part(7, &[(2, 3), (4, 6), (5, 1)])
    }
    fn q9() -> TwoPartition {
        part(9, &[(1, 3), (2, 5), (4, 6), (7, 8)])
    }
    fn s17() -> TwoPartition {
        part(
            17,
            &[
                (1, 2),
                (10, 12),
                (3, 6),
                (4, 8),
                (11, 16),
                (9, 15),
                (7, 14),
                (5, 13),
            ],
        )
    }
    fn r11() -> TwoPartition {
        part(11, &[(1, 2), (7, 9), (3, 6), (4, 8), (5, 10)])
    }

    #[test]
    fn starter_examples() {
        assert!(!r5().is_starter());
        assert!(t7().is_starter());
        assert!(part(5, &[(1, 4), (2, 3)]).is_starter());
    }

    #[test]
    fn strong_examples() {
        assert!(r5().is_strong());
        assert!(s17().is_strong());
        assert!(!part(5, &[(1, 4), (2, 3)]).is_strong());
    }

    #[test]
    fn skew_examples() {
        assert!(q9().is_skew());
        assert!(!s17().is_skew());
        assert!(t7().is_skew());
    }

    #[test]
    fn skolem_examples() {
        assert!(s17().is_skolem());
        assert!(!t7().is_skolem());
        assert!(q9().is_skolem());
        assert_eq!(
            t7().witness(Predicate::Skolem),
            Some(vec![UnorderedPair::new(1, 5)])
        );
    }

    #[test]
    fn cardioidal_examples() {
        assert!(r5().is_cardioidal());
        assert!(r11().is_cardioidal());
        assert!(!q9().is_cardioidal());
    }

    #[test]
    fn canonical_examples() {
        assert!(part(5, &[(1, 4), (2, 3)]).is_canonical());
        assert!(!r5().is_canonical());
        assert!(part(7, &[(1, 6), (2, 5), (3, 4)]).is_canonical());
    }

    #[test]
    fn s17_report_and_skew_witness() {
        let rep = s17().report();
        assert!(rep.starter && rep.strong && rep.skolem);
        assert!(!rep.skew && !rep.cardioidal && !rep.canonical);
        assert_eq!(rep.differences.len(), 16);
        assert_eq!(rep.sums.len(), 8);
        let skew = rep.violation(Predicate::Skew).unwrap();
        assert_eq!(skew.pairs, vec![[4, 8], [10, 12]]);
        assert_eq!(
            rep.violation(Predicate::Cardioidal).unwrap().pairs,
            vec![[5, 13]]
        );
    }

    #[test]
    fn r5_report() {
        let rep = r5().report();
        assert_eq!(
            (
                rep.starter,
                rep.strong,
                rep.skew,
                rep.skolem,
                rep.cardioidal,
                rep.canonical
            ),
            (false, true, false, true, true, false)
        );
        assert_eq!(
            rep.violation(Predicate::Starter).unwrap().pairs,
            vec![[1, 2], [3, 4]]
        );
        assert_eq!(rep.violations.len(), 3);
    }

    #[test]
    fn canonical_order_7_report() {
        let rep = part(7, &[(1, 6), (2, 5), (3, 4)]).report();
        assert!(rep.starter && rep.canonical);
        assert!(!rep.strong && !rep.skew);
        assert_eq!(rep.sums, vec![0, 0, 0]);
        // {1,6} spans 5 > 3
        assert!(!rep.skolem);
        assert_eq!(
            rep.violation(Predicate::Strong).unwrap().pairs,
            vec![[1, 6]]
        );
    }

    #[test]
    fn predicate_parsing() {
        let set: PredicateSet = "starter, Skolem,strong".parse().unwrap();
        assert!(set.contains(Predicate::Starter));
        assert!(set.contains(Predicate::Skolem));
        assert!(!set.contains(Predicate::Skew));
        assert_eq!(set.to_string(), "starter,strong,skolem");
        assert!("starter,bogus".parse::<PredicateSet>().is_err());
        assert!("".parse::<PredicateSet>().unwrap().is_empty());
    }
}
