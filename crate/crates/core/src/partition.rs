//! Integer partitions. Parts are stored non-increasing; lists of partitions of
//! a fixed `n` are in ascending lexicographic order, e.g. `[1,1,1], [2,1], [3]`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_of(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// Parts ascending and comma-joined: `"1,1,2"`.
    pub fn key(&self) -> String {
        let mut v = self.0.clone();
        v.reverse();
        v.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Chern-class notation, e.g. `c1c1c2`.
    pub fn chern_label(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().rev().map(|p| format!("c{p}")).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

/// All partitions of `n` in ascending lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(n, n, &mut cur, &mut out);
    out.sort();
    out
}

fn gen(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        gen(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    // Euler's recurrence via the product of 1/(1-t^k).
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            p[m] += p[m - k];
        }
    }
    p[n]
}

/// Coefficients through `t^cap` of `prod 1/(1 - t^w)` over the given weights.
pub fn free_ring_dims(weights: &[usize], cap: usize) -> Vec<usize> {
    let mut d = vec![0usize; cap + 1];
    d[0] = 1;
    for &w in weights {
        for m in w..=cap {
            d[m] += d[m - w];
        }
    }
    d
}
