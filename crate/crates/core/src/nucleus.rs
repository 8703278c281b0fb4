//! Nuclei: `m - 1` ordered pairs over `Z_m*` whose first coordinates and
//! whose second coordinates each run through `Z_m*` once.

use crate::cover::{negate_list, OrderedCover, OrientedPair};
use crate::error::{Error, Result};
use crate::properties::is_skolem_pair;
use crate::zn::{Modulus, Residue};

/// Default ceiling for the exhaustive strong-permutation branch.
pub const DEFAULT_PERMUTATION_SEARCH_BOUND: u32 = 9;

/// Entries keep insertion order; equality ignores it.
#[derive(Debug, Clone, Eq)]
pub struct Nucleus {
    modulus: Modulus,
    entries: Vec<OrientedPair>,
}

impl PartialEq for Nucleus {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.sorted_entries() == other.sorted_entries()
    }
}

impl Nucleus {
    pub fn new(order: u32, entries: Vec<OrientedPair>) -> Result<Self> {
        let modulus = Modulus::new(order)?;
        let invalid = |reason: String| Error::InvalidNucleus { order, reason };
        if entries.len() != (order - 1) as usize {
            return Err(invalid(format!(
                "expected {} entries, found {}",
                order - 1,
                entries.len()
            )));
        }
        let mut firsts = vec![false; order as usize];
        let mut seconds = vec![false; order as usize];
        for e in &entries {
            if e.first == 0 || e.second == 0 || e.first >= order || e.second >= order {
                return Err(invalid(format!(
                    "entry {e} is not in Z_{order}* x Z_{order}*"
                )));
            }
            if std::mem::replace(&mut firsts[e.first as usize], true) {
                return Err(invalid(format!("first coordinate {} repeats", e.first)));
            }
            if std::mem::replace(&mut seconds[e.second as usize], true) {
                return Err(invalid(format!("second coordinate {} repeats", e.second)));
            }
        }
        Ok(Nucleus { modulus, entries })
    }

    /// `X = C ∪ -C` for an ordered cover `C`.
    pub fn from_cover(cover: &OrderedCover) -> Nucleus {
        let negated = negate_list(cover.as_list());
        let entries: Vec<OrientedPair> = cover
            .entries()
            .iter()
            .chain(negated.entries())
            .copied()
            .collect();
        let modulus = cover.source().modulus();
        debug_assert!(Nucleus::new(modulus.get(), entries.clone()).is_ok());
        Nucleus { modulus, entries }
    }

    /// `{(i, 2i mod m) : i in Z_m*}`.
    pub fn cardioidal(order: u32) -> Result<Nucleus> {
        let z = Modulus::new(order)?;
        let entries = z
            .nonzero()
            .map(|i| OrientedPair::new(i, z.double(i)))
            .collect();
        Ok(Nucleus {
            modulus: z,
            entries,
        })
    }

    /// `{(i, π(i))}` for a permutation `π` of `Z_m` fixing 0, given as a table.
    fn from_permutation(z: Modulus, pi: &[Residue]) -> Nucleus {
        let entries = z
            .nonzero()
            .map(|i| OrientedPair::new(i, pi[i as usize]))
            .collect();
        Nucleus {
            modulus: z,
            entries,
        }
    }

    pub fn order(&self) -> u32 {
        self.modulus.get()
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn entries(&self) -> &[OrientedPair] {
        &self.entries
    }

    pub fn sorted_entries(&self) -> Vec<OrientedPair> {
        let mut e = self.entries.clone();
        e.sort_unstable();
        e
    }

    fn covers_nonzero(&self, f: impl Fn(OrientedPair) -> Residue) -> bool {
        let mut hit = vec![false; self.order() as usize];
        for &e in &self.entries {
            let v = f(e);
            if v == 0 || std::mem::replace(&mut hit[v as usize], true) {
                return false;
            }
        }
        true
    }

    /// `{first - second} = Z_m*`.
    pub fn is_subtractive(&self) -> bool {
        let z = self.modulus;
        self.covers_nonzero(|e| z.sub(e.first, e.second))
    }

    /// `{first + second} = Z_m*`.
    pub fn is_skew(&self) -> bool {
        let z = self.modulus;
        self.covers_nonzero(|e| z.add(e.first, e.second))
    }

    /// Every entry is a Skolem pair of order `m`.
    pub fn is_skolem(&self) -> bool {
        self.entries
            .iter()
            .all(|e| is_skolem_pair(self.modulus, e.first, e.second))
    }
}

/// All strong permutations of `Z_m` fixing 0, as lookup tables `π[i]`.
///
/// `π` is strong when `i ↦ π(i) - i` and `i ↦ π(i) + i` are permutations too.
/// The search is exhaustive with pruning on repeated differences and sums.
pub fn strong_permutations(order: u32) -> Result<Vec<Vec<Residue>>> {
    let z = Modulus::new(order)?;
    let mut found = Vec::new();
    let mut state = PermState::new(z);
    state.extend(1, &mut |pi| {
        found.push(pi.to_vec());
        true
    });
    Ok(found)
}

struct PermState {
    z: Modulus,
    pi: Vec<Residue>,
    image_used: Vec<bool>,
    diff_used: Vec<bool>,
    sum_used: Vec<bool>,
}

impl PermState {
    fn new(z: Modulus) -> Self {
        let n = z.get() as usize;
        let mut s = PermState {
            z,
            pi: vec![0; n],
            image_used: vec![false; n],
            diff_used: vec![false; n],
            sum_used: vec![false; n],
        };
        // π(0) = 0 uses image 0, difference 0 and sum 0.
        s.image_used[0] = true;
        s.diff_used[0] = true;
        s.sum_used[0] = true;
        s
    }

    /// Returns false once `visit` asks to stop.
    fn extend(&mut self, i: Residue, visit: &mut dyn FnMut(&[Residue]) -> bool) -> bool {
        let z = self.z;
        if i == z.get() {
            return visit(&self.pi);
        }
        for image in z.nonzero() {
            let d = z.sub(image, i) as usize;
            let s = z.add(image, i) as usize;
            if self.image_used[image as usize] || self.diff_used[d] || self.sum_used[s] {
                continue;
            }
            self.pi[i as usize] = image;
            self.image_used[image as usize] = true;
            self.diff_used[d] = true;
            self.sum_used[s] = true;
            let go_on = self.extend(i + 1, visit);
            self.image_used[image as usize] = false;
            self.diff_used[d] = false;
            self.sum_used[s] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// A nucleus that is both skew and subtractive, if one exists.
///
/// For `3 ∤ m` this is the cardioidal nucleus. For `3 | m` an exhaustive
/// strong-permutation search runs, up to `search_bound`.
pub fn find_skew_subtractive_nucleus(order: u32, search_bound: u32) -> Result<Option<Nucleus>> {
    let z = Modulus::new(order)?;
    if !order.is_multiple_of(3) {
        return Nucleus::cardioidal(order).map(Some);
    }
    if order > search_bound {
        return Err(Error::SearchInfeasible {
            order,
            reason: format!(
                "exhaustive strong-permutation search is bounded at m <= {search_bound}"
            ),
        });
    }
    let mut state = PermState::new(z);
    let mut hit = None;
    state.extend(1, &mut |pi| {
        hit = Some(Nucleus::from_permutation(z, pi));
        false
    });
    Ok(hit)
}
