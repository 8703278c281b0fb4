//! Search for 2-partitions satisfying a set of predicates.
//!
//! Two strategies are available:
//!
//! * **exhaustive** walks every 2-partition of `Z_n*` (there are `(n-2)!!`)
//!   and filters with the full predicates. It is the reference oracle and is
//!   bounded by [`SearchSpec::max_exhaustive`].
//! * **backtrack** requires `starter`. It assigns one pair `{x, x + d}` to
//!   each difference class `d`, from `d = q` down to `d = 1`, and prunes on
//!   the remaining predicates incrementally. When `skolem` is required the
//!   pair must satisfy `x + d <= 2q`, which makes the search a Skolem
//!   sequence search.
//!
//! Both strategies split their work by top-level branch (the partner of 1,
//! or the placement of class `q`). A shard `(i, k)` visits the branches
//! whose index is `i mod k`, so the sorted union over all shards equals the
//! unsharded result.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{TwoPartition, UnorderedPair};
use crate::properties::{is_canonical_pair, is_cardioidal_pair, Predicate, PredicateSet};
use crate::zn::Modulus;

pub const DEFAULT_MAX_EXHAUSTIVE: u32 = 13;
pub const MAX_EXHAUSTIVE_ENV: &str = "STARTER_FORGE_MAX_EXHAUSTIVE";

/// The exhaustive bound from the environment, or the default when unset.
pub fn max_exhaustive_from_env() -> Result<u32> {
    match std::env::var(MAX_EXHAUSTIVE_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::InvalidSearch(format!(
                "{MAX_EXHAUSTIVE_ENV}={v} is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_EXHAUSTIVE),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Stop at the first hit in traversal order.
    First,
    All,
    Count,
}

impl FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "first" => Ok(SearchMode::First),
            "all" => Ok(SearchMode::All),
            "count" => Ok(SearchMode::Count),
            other => Err(format!(
                "unknown mode `{other}` (expected first, all or count)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Backtracking when `starter` is required, otherwise exhaustive.
    #[default]
    Auto,
    Exhaustive,
    Backtrack,
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "backtrack" => Ok(Strategy::Backtrack),
            other => Err(format!(
                "unknown strategy `{other}` (expected auto, exhaustive or backtrack)"
            )),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Auto => "auto",
            Strategy::Exhaustive => "exhaustive",
            Strategy::Backtrack => "backtrack",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shard {
    pub index: u32,
    pub total: u32,
}

impl Shard {
    pub fn new(index: u32, total: u32) -> Result<Self> {
        if total == 0 || index >= total {
            return Err(Error::InvalidSearch(format!(
                "shard {index}/{total} is out of range"
            )));
        }
        Ok(Shard { index, total })
    }

    fn owns(self, branch: usize) -> bool {
        branch % self.total as usize == self.index as usize
    }
}

impl FromStr for Shard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSearch(format!("shard `{s}` is not of the form INDEX/TOTAL"));
        let (i, k) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(
            i.trim().parse().map_err(|_| bad())?,
            k.trim().parse().map_err(|_| bad())?,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub order: u32,
    pub required: PredicateSet,
    pub mode: SearchMode,
    /// Stop after this many hits (traversal order).
    pub limit: Option<usize>,
    pub shard: Option<Shard>,
    pub strategy: Strategy,
    pub max_exhaustive: u32,
    /// Stop after visiting this many search nodes.
    pub node_budget: Option<u64>,
    /// Keep only partitions that are not larger than their conjugate.
    pub reduce_conjugates: bool,
}

impl SearchSpec {
    pub fn new(order: u32, required: PredicateSet, mode: SearchMode) -> Self {
        SearchSpec {
            order,
            required,
            mode,
            limit: None,
            shard: None,
            strategy: Strategy::Auto,
            max_exhaustive: DEFAULT_MAX_EXHAUSTIVE,
            node_budget: None,
            reduce_conjugates: false,
        }
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn shard(mut self, shard: Shard) -> Self {
        self.shard = Some(shard);
        self
    }

    pub fn node_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Sorted canonically. Empty in count mode.
    pub partitions: Vec<TwoPartition>,
    pub count: u64,
    /// False when the limit or node budget cut the search short.
    pub complete: bool,
    pub strategy: Strategy,
    pub nodes: u64,
}

struct Sink {
    keep: bool,
    required: PredicateSet,
    reduce_conjugates: bool,
    stop_after: Option<u64>,
    budget: Option<u64>,
    found: Vec<TwoPartition>,
    count: u64,
    nodes: u64,
    truncated: bool,
}

impl Sink {
    fn enter_node(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.truncated = true;
            return false;
        }
        true
    }

    /// Returns false once no further hits are wanted.
    fn offer(&mut self, p: TwoPartition) -> bool {
        debug_assert!(p.satisfies_all(self.required));
        if self.reduce_conjugates && p > p.conjugate() {
            return true;
        }
        self.count += 1;
        if self.keep {
            self.found.push(p);
        }
        if self.stop_after.is_some_and(|s| self.count >= s) {
            self.truncated = true;
            return false;
        }
        true
    }
}

trait Enumerator: Sync {
    fn branches(&self) -> usize;
    /// Returns false if the sink asked to stop.
    fn run_branch(&self, branch: usize, sink: &mut Sink) -> bool;
}

struct Exhaustive {
    modulus: Modulus,
    required: PredicateSet,
}

impl Exhaustive {
    fn recurse(&self, used: &mut [bool], pairs: &mut Vec<UnorderedPair>, sink: &mut Sink) -> bool {
        if !sink.enter_node() {
            return false;
        }
        let n = self.modulus.get();
        let Some(a) = (1..n).find(|&e| !used[e as usize]) else {
            let p = TwoPartition::from_sorted_unchecked(self.modulus, pairs.clone());
            if p.satisfies_all(self.required) {
                return sink.offer(p);
            }
            return true;
        };
        used[a as usize] = true;
        for b in a + 1..n {
            if used[b as usize] {
                continue;
            }
            if !self.place(a, b, used, pairs, sink) {
                used[a as usize] = false;
                return false;
            }
        }
        used[a as usize] = false;
        true
    }

    fn place(
        &self,
        a: u32,
        b: u32,
        used: &mut [bool],
        pairs: &mut Vec<UnorderedPair>,
        sink: &mut Sink,
    ) -> bool {
        used[b as usize] = true;
        pairs.push(UnorderedPair::new(a, b));
        let go_on = self.recurse(used, pairs, sink);
        pairs.pop();
        used[b as usize] = false;
        go_on
    }
}

impl Enumerator for Exhaustive {
    fn branches(&self) -> usize {
        self.modulus.get() as usize - 2
    }

    fn run_branch(&self, branch: usize, sink: &mut Sink) -> bool {
        let n = self.modulus.get() as usize;
        let mut used = vec![false; n];
        let mut pairs = Vec::with_capacity(n / 2);
        used[1] = true;
        self.place(1, branch as u32 + 2, &mut used, &mut pairs, sink)
    }
}

struct Backtrack {
    modulus: Modulus,
    skolem: bool,
    strong: bool,
    skew: bool,
    cardioidal: bool,
    canonical: bool,
}

struct BacktrackState {
    used: Vec<bool>,
    sum_used: Vec<bool>,
    pairs: Vec<UnorderedPair>,
}

impl Backtrack {
    fn new(modulus: Modulus, required: PredicateSet) -> Self {
        Backtrack {
            modulus,
            skolem: required.contains(Predicate::Skolem),
            strong: required.contains(Predicate::Strong),
            skew: required.contains(Predicate::Skew),
            cardioidal: required.contains(Predicate::Cardioidal),
            canonical: required.contains(Predicate::Canonical),
        }
    }

    /// Partner of `x` in class `d`, if the placement is admissible.
    fn candidate(&self, x: u32, d: u32, st: &BacktrackState) -> Option<(u32, Option<usize>)> {
        let z = self.modulus;
        let n = z.get();
        let y = if self.skolem {
            if x + d > n - 1 {
                return None;
            }
            x + d
        } else {
            z.add(x, d)
        };
        if y == 0 || st.used[x as usize] || st.used[y as usize] {
            return None;
        }
        let mut sum_slot = None;
        if self.strong || self.skew {
            let s = z.add(x, y);
            if s == 0 {
                return None;
            }
            let slot = if self.skew { z.sign_class(s) } else { s } as usize;
            if st.sum_used[slot] {
                return None;
            }
            sum_slot = Some(slot);
        }
        if self.cardioidal && !is_cardioidal_pair(z, x, y) {
            return None;
        }
        if self.canonical && !is_canonical_pair(z, x, y) {
            return None;
        }
        Some((y, sum_slot))
    }

    fn place(&self, x: u32, d: u32, st: &mut BacktrackState, sink: &mut Sink) -> bool {
        let Some((y, slot)) = self.candidate(x, d, st) else {
            return true;
        };
        st.used[x as usize] = true;
        st.used[y as usize] = true;
        if let Some(s) = slot {
            st.sum_used[s] = true;
        }
        st.pairs.push(UnorderedPair::new(x, y));
        let go_on = self.recurse(d - 1, st, sink);
        st.pairs.pop();
        if let Some(s) = slot {
            st.sum_used[s] = false;
        }
        st.used[x as usize] = false;
        st.used[y as usize] = false;
        go_on
    }

    fn recurse(&self, d: u32, st: &mut BacktrackState, sink: &mut Sink) -> bool {
        if !sink.enter_node() {
            return false;
        }
        if d == 0 {
            let mut pairs = st.pairs.clone();
            pairs.sort_unstable();
            return sink.offer(TwoPartition::from_sorted_unchecked(self.modulus, pairs));
        }
        for x in self.modulus.nonzero() {
            if !self.place(x, d, st, sink) {
                return false;
            }
        }
        true
    }
}

impl Enumerator for Backtrack {
    fn branches(&self) -> usize {
        self.modulus.get() as usize - 1
    }

    fn run_branch(&self, branch: usize, sink: &mut Sink) -> bool {
        let n = self.modulus.get() as usize;
        let mut st = BacktrackState {
            used: vec![false; n],
            sum_used: vec![false; n],
            pairs: Vec::with_capacity(n / 2),
        };
        if !sink.enter_node() {
            return false;
        }
        self.place(branch as u32 + 1, self.modulus.half(), &mut st, sink)
    }
}

fn resolve(spec: &SearchSpec) -> Result<Strategy> {
    let wants_starter = spec.required.contains(Predicate::Starter);
    let strategy = match spec.strategy {
        Strategy::Auto if wants_starter => Strategy::Backtrack,
        Strategy::Auto => Strategy::Exhaustive,
        s => s,
    };
    match strategy {
        Strategy::Exhaustive if spec.order > spec.max_exhaustive => Err(Error::SearchInfeasible {
            order: spec.order,
            reason: format!(
                "exhaustive enumeration is bounded at n <= {} and `starter` is not required",
                spec.max_exhaustive
            ),
        }),
        Strategy::Backtrack if !wants_starter => Err(Error::InvalidSearch(
            "backtracking enumerates starters; add `starter` to the required predicates".into(),
        )),
        s => Ok(s),
    }
}

pub fn search(spec: &SearchSpec) -> Result<SearchOutcome> {
    let modulus = Modulus::new(spec.order)?;
    if spec.limit == Some(0) {
        return Err(Error::InvalidSearch("limit must be at least 1".into()));
    }
    if let Some(s) = spec.shard {
        Shard::new(s.index, s.total)?;
    }
    let strategy = resolve(spec)?;
    let enumerator: Box<dyn Enumerator> = match strategy {
        Strategy::Exhaustive => Box::new(Exhaustive {
            modulus,
            required: spec.required,
        }),
        _ => Box::new(Backtrack::new(modulus, spec.required)),
    };

    let stop_after = match spec.mode {
        SearchMode::First => Some(1),
        _ => spec.limit.map(|l| l as u64),
    };
    let new_sink = || Sink {
        keep: spec.mode != SearchMode::Count,
        required: spec.required,
        reduce_conjugates: spec.reduce_conjugates,
        stop_after,
        budget: spec.node_budget,
        found: Vec::new(),
        count: 0,
        nodes: 0,
        truncated: false,
    };
    let branches: Vec<usize> = (0..enumerator.branches())
        .filter(|&b| spec.shard.is_none_or(|s| s.owns(b)))
        .collect();

    let sequential = stop_after.is_some() || spec.node_budget.is_some();
    let (mut found, count, nodes, truncated) = if sequential {
        let mut sink = new_sink();
        for &b in &branches {
            if !enumerator.run_branch(b, &mut sink) {
                break;
            }
        }
        (sink.found, sink.count, sink.nodes, sink.truncated)
    } else {
        let parts: Vec<Sink> = branches
            .par_iter()
            .map(|&b| {
                let mut sink = new_sink();
                enumerator.run_branch(b, &mut sink);
                sink
            })
            .collect();
        parts.into_iter().fold(
            (Vec::new(), 0, 0, false),
            |(mut found, count, nodes, truncated), s| {
                found.extend(s.found);
                (
                    found,
                    count + s.count,
                    nodes + s.nodes,
                    truncated || s.truncated,
                )
            },
        )
    };
    found.sort_unstable();
    debug_assert!(found.windows(2).all(|w| w[0] != w[1]));
    Ok(SearchOutcome {
        partitions: found,
        count,
        complete: !truncated,
        strategy,
        nodes,
    })
}
