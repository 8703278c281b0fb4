//! Reference implementations used as oracles by the integration tests.
//!
//! Everything here is written from the definitions with plain vectors and
//! sorting, without calling into the library, so that agreement between the
//! two is meaningful.

#![allow(dead_code)]

pub type Pairs = Vec<(u32, u32)>;

fn md(v: i64, n: u32) -> u32 {
    v.rem_euclid(n as i64) as u32
}

fn is_one_to_n_minus_one(mut v: Vec<u32>, n: u32) -> bool {
    v.sort_unstable();
    v == (1..n).collect::<Vec<_>>()
}

/// Every 2-partition of `Z_n*`, each as a sorted list of `(lo, hi)`.
pub fn all_partitions(n: u32) -> Vec<Pairs> {
    fn go(rest: &[u32], acc: &mut Pairs, out: &mut Vec<Pairs>) {
        if rest.is_empty() {
            let mut p = acc.clone();
            p.sort_unstable();
            out.push(p);
            return;
        }
        let a = rest[0];
        for i in 1..rest.len() {
            let b = rest[i];
            let remaining: Vec<u32> = rest[1..].iter().copied().filter(|&e| e != b).collect();
            acc.push((a, b));
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let elems: Vec<u32> = (1..n).collect();
    let mut out = Vec::new();
    go(&elems, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn starter(n: u32, p: &[(u32, u32)]) -> bool {
    let diffs = p
        .iter()
        .flat_map(|&(a, b)| [md(a as i64 - b as i64, n), md(b as i64 - a as i64, n)])
        .collect();
    is_one_to_n_minus_one(diffs, n)
}

pub fn strong(n: u32, p: &[(u32, u32)]) -> bool {
    let mut sums: Vec<u32> = p.iter().map(|&(a, b)| (a + b) % n).collect();
    sums.sort_unstable();
    let len = sums.len();
    sums.dedup();
    sums.len() == len && sums[0] != 0
}

pub fn skew(n: u32, p: &[(u32, u32)]) -> bool {
    let vals = p
        .iter()
        .flat_map(|&(a, b)| {
            let s = (a + b) % n;
            [s, md(-(s as i64), n)]
        })
        .collect();
    is_one_to_n_minus_one(vals, n)
}

pub fn skolem(n: u32, p: &[(u32, u32)]) -> bool {
    p.iter().all(|&(a, b)| a.abs_diff(b) <= (n - 1) / 2)
}

pub fn cardioidal(n: u32, p: &[(u32, u32)]) -> bool {
    p.iter().all(|&(a, b)| (2 * a) % n == b || (2 * b) % n == a)
}

pub fn canonical(n: u32, p: &[(u32, u32)]) -> bool {
    p.iter().all(|&(a, b)| (a + b) % n == 0)
}

/// Predicates by name, in the library's vocabulary.
pub fn holds(name: &str, n: u32, p: &[(u32, u32)]) -> bool {
    match name {
        "starter" => starter(n, p),
        "strong" => strong(n, p),
        "skew" => skew(n, p),
        "skolem" => skolem(n, p),
        "cardioidal" => cardioidal(n, p),
        "canonical" => canonical(n, p),
        other => panic!("unknown predicate {other}"),
    }
}

pub const PREDICATES: [&str; 6] = [
    "starter",
    "strong",
    "skew",
    "skolem",
    "cardioidal",
    "canonical",
];

fn normalize(mut pairs: Vec<(u32, u32)>) -> Pairs {
    for p in pairs.iter_mut() {
        if p.0 > p.1 {
            *p = (p.1, p.0);
        }
    }
    pairs.sort_unstable();
    pairs
}

/// The standard product from the defining formula `{n·r + x, n·t + y}`.
pub fn product(n: u32, tilde_s: &[(u32, u32)], m: u32, bar_t: &[(u32, u32)]) -> Pairs {
    let nm = n * m;
    let mut outer: Vec<(u32, u32)> = vec![(0, 0)];
    outer.extend(bar_t.iter().copied());
    outer.extend(bar_t.iter().map(|&(r, t)| ((m - r) % m, (m - t) % m)));
    let mut pairs = Vec::new();
    for &(r, t) in &outer {
        for &(x, y) in tilde_s {
            pairs.push(((n * r + x) % nm, (n * t + y) % nm));
        }
    }
    for &(r, t) in bar_t {
        pairs.push((n * r, n * t));
    }
    normalize(pairs)
}

/// The nucleus product from its defining formula.
pub fn nucleus_product(
    n: u32,
    tilde_s: &[(u32, u32)],
    m: u32,
    x: &[(u32, u32)],
    tilde_t: &[(u32, u32)],
) -> Pairs {
    let nm = n * m;
    let mut pairs = Vec::new();
    for &(r, t) in std::iter::once(&(0, 0)).chain(x) {
        for &(a, b) in tilde_s {
            pairs.push(((n * r + a) % nm, (n * t + b) % nm));
        }
    }
    for &(r, t) in tilde_t {
        pairs.push((n * r, n * t));
    }
    normalize(pairs)
}

/// True when the list covers `Z_n*` with its first coordinates up to sign.
pub fn is_cover(n: u32, list: &[(u32, u32)]) -> bool {
    let firsts = list
        .iter()
        .flat_map(|&(x, _)| [x, md(-(x as i64), n)])
        .collect();
    is_one_to_n_minus_one(firsts, n)
}

/// `X = T̄ ∪ T̄'`.
pub fn nucleus_from_cover(m: u32, bar_t: &[(u32, u32)]) -> Pairs {
    let mut x: Pairs = bar_t.to_vec();
    x.extend(bar_t.iter().map(|&(r, t)| ((m - r) % m, (m - t) % m)));
    x
}

pub fn cardioidal_nucleus(m: u32) -> Pairs {
    (1..m).map(|i| (i, 2 * i % m)).collect()
}

pub fn nucleus_subtractive(m: u32, x: &[(u32, u32)]) -> bool {
    is_one_to_n_minus_one(
        x.iter().map(|&(u, v)| md(u as i64 - v as i64, m)).collect(),
        m,
    )
}

pub fn nucleus_skew(m: u32, x: &[(u32, u32)]) -> bool {
    is_one_to_n_minus_one(x.iter().map(|&(u, v)| (u + v) % m).collect(), m)
}

pub fn nucleus_skolem(m: u32, x: &[(u32, u32)]) -> bool {
    x.iter().all(|&(u, v)| u.abs_diff(v) <= (m - 1) / 2)
}

/// Every Skolem sequence of order `q`, found by placing values into
/// positions from the largest value down.
pub fn skolem_sequences(q: u32) -> Vec<Vec<u32>> {
    fn go(k: u32, slots: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(slots.clone());
            return;
        }
        let len = slots.len();
        for i in 0..len.saturating_sub(k as usize) {
            let j = i + k as usize;
            if slots[i] == 0 && slots[j] == 0 {
                slots[i] = k;
                slots[j] = k;
                go(k - 1, slots, out);
                slots[i] = 0;
                slots[j] = 0;
            }
        }
    }
    let mut out = Vec::new();
    go(q, &mut vec![0; 2 * q as usize], &mut out);
    out.sort();
    out
}

/// The starter of a Skolem sequence: value `k` at 1-based positions `a < b`
/// gives the pair `{a, b}`.
pub fn sequence_to_pairs(seq: &[u32]) -> Pairs {
    let q = seq.len() / 2;
    let mut first = vec![0u32; q + 1];
    let mut pairs = Vec::new();
    for (i, &k) in seq.iter().enumerate() {
        let pos = i as u32 + 1;
        if first[k as usize] == 0 {
            first[k as usize] = pos;
        } else {
            pairs.push((first[k as usize], pos));
        }
    }
    normalize(pairs)
}
