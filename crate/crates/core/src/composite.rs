//! Iterated nucleus products.
//!
//! Factors are folded left to right: `((F0 × F1) × F2) × ...`, each step
//! being `W^X` with lo-first orientations on both sides and the nucleus `X`
//! chosen by the right factor. The nucleus choice of the first factor is
//! ignored.

use crate::cover::{build_ordered_cover, orient, Orientation};
use crate::error::{Error, Result};
use crate::nucleus::Nucleus;
use crate::partition::TwoPartition;
use crate::product::{product_with_nucleus, ProductResult};
use crate::properties::PropertyReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NucleusChoice {
    /// `X = T̄ ∪ T̄'` for the ordered cover of the right factor.
    FromCover,
    /// The cardioidal nucleus of the right factor's order.
    Cardioidal,
    /// `X = R̄ ∪ R̄'` for a separate partition `R` of the right factor's order.
    FromStarter(TwoPartition),
}

impl NucleusChoice {
    pub fn nucleus_for(&self, t: &TwoPartition) -> Result<Nucleus> {
        match self {
            NucleusChoice::FromCover => Ok(Nucleus::from_cover(&build_ordered_cover(t))),
            NucleusChoice::Cardioidal => Nucleus::cardioidal(t.order()),
            NucleusChoice::FromStarter(r) => {
                if r.order() != t.order() {
                    return Err(Error::OrderMismatch {
                        expected: t.order(),
                        found: r.order(),
                    });
                }
                Ok(Nucleus::from_cover(&build_ordered_cover(r)))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub partition: TwoPartition,
    pub nucleus: NucleusChoice,
}

impl Factor {
    pub fn new(partition: TwoPartition, nucleus: NucleusChoice) -> Self {
        Factor { partition, nucleus }
    }
}

#[derive(Debug, Clone)]
pub struct Composite {
    /// The last product step.
    pub result: ProductResult,
    /// Reports of every intermediate product, in folding order.
    pub steps: Vec<PropertyReport>,
}

impl Composite {
    pub fn partition(&self) -> &TwoPartition {
        self.result.partition()
    }
}

pub fn build_composite(factors: &[Factor]) -> Result<Composite> {
    if factors.len() < 2 {
        return Err(Error::TooFewFactors(factors.len()));
    }
    let mut acc = factors[0].partition.clone();
    let mut steps = Vec::with_capacity(factors.len() - 1);
    let mut last = None;
    for f in &factors[1..] {
        let t = &f.partition;
        let x = f.nucleus.nucleus_for(t)?;
        let w = product_with_nucleus(
            &acc,
            t,
            &orient(&acc, Orientation::LoFirst),
            &orient(t, Orientation::LoFirst),
            &x,
        )?;
        steps.push(w.partition().report());
        acc = w.partition().clone();
        last = Some(w);
    }
    Ok(Composite {
        result: last.expect("at least one step"),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: u32, pairs: &[(i64, i64)]) -> TwoPartition {
        TwoPartition::new(n, pairs).unwrap()
    }

    #[test]
    fn three_factor_fold() {
        let z3 = part(3, &[(1, 2)]);
        let s5 = part(5, &[(1, 2), (3, 4)]);
        let out = build_composite(&[
            Factor::new(z3.clone(), NucleusChoice::Cardioidal),
            Factor::new(s5, NucleusChoice::Cardioidal),
            Factor::new(z3, NucleusChoice::FromCover),
        ])
        .unwrap();
        assert_eq!(out.steps.len(), 2);
        assert_eq!(out.steps[0].order, 15);
        assert_eq!(out.partition().order(), 45);
        assert_eq!(out.result.left_order(), 15);
    }

    #[test]
    fn from_starter_order_checked() {
        let z3 = part(3, &[(1, 2)]);
        let s5 = part(5, &[(1, 4), (2, 3)]);
        let err = build_composite(&[
            Factor::new(z3.clone(), NucleusChoice::FromCover),
            Factor::new(z3, NucleusChoice::FromStarter(s5)),
        ])
        .unwrap_err();
        assert_eq!(
            err,
            Error::OrderMismatch {
                expected: 3,
                found: 5
            }
        );
    }

    #[test]
    fn needs_two_factors() {
        let z3 = part(3, &[(1, 2)]);
        assert!(build_composite(&[Factor::new(z3, NucleusChoice::FromCover)]).is_err());
    }
}
