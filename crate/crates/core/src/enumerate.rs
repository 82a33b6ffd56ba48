//! Exhaustive enumeration of partitions, perfect matchings and type fibers.

use thiserror::Error;

use crate::partition::{assemble, PartitionType, SetPartition};

/// Environment variable overriding the enumeration caps.
pub const CAP_ENV: &str = "PSTAT_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("size {requested} exceeds the enumeration cap {cap}")]
    AboveCap { requested: usize, cap: usize },
    #[error("perfect matchings need an even ground set, got {0}")]
    OddMatching(usize),
}

/// Upper bounds on the ground-set size accepted by the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub partitions: usize,
    pub matchings: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { partitions: 14, matchings: 16 }
    }
}

impl Limits {
    /// Default limits, with both caps replaced by `PSTAT_CAP` when it holds an integer.
    pub fn from_env() -> Self {
        match std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(cap) => Limits { partitions: cap, matchings: cap },
            None => Limits::default(),
        }
    }

    pub fn check_partitions(&self, n: usize) -> Result<(), EnumerateError> {
        check(n, self.partitions)
    }

    pub fn check_matchings(&self, m: usize) -> Result<(), EnumerateError> {
        check(m, self.matchings)
    }
}

fn check(requested: usize, cap: usize) -> Result<(), EnumerateError> {
    if requested > cap {
        Err(EnumerateError::AboveCap { requested, cap })
    } else {
        Ok(())
    }
}

/// All partitions of `[n]` in lexicographic order of their restricted growth strings.
pub fn enumerate_partitions(n: usize) -> Result<Partitions, EnumerateError> {
    enumerate_partitions_with(n, Limits::default())
}

pub fn enumerate_partitions_with(n: usize, limits: Limits) -> Result<Partitions, EnumerateError> {
    limits.check_partitions(n)?;
    Ok(Partitions::new(n))
}

/// Restricted-growth-string iterator over `Π_n`.
#[derive(Debug, Clone)]
pub struct Partitions {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[..=i])
    prefix_max: Vec<usize>,
    // positions below `fixed` never change
    fixed: usize,
    done: bool,
}

impl Partitions {
    fn new(n: usize) -> Self {
        Partitions { rgs: vec![0; n], prefix_max: vec![0; n], fixed: 1, done: false }
    }

    /// Partitions of `[n]` whose RGS starts with `prefix`, in the same
    /// order as the full stream. Splitting on all valid prefixes of a given
    /// length partitions `Π_n`.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Self {
        assert!(prefix.len() <= n, "prefix longer than n");
        let mut it = Partitions::new(n);
        let mut max = 0;
        for (i, &b) in prefix.iter().enumerate() {
            let bound = if i == 0 { 0 } else { max + 1 };
            assert!(b <= bound, "prefix is not a restricted growth string");
            max = max.max(b);
            it.rgs[i] = b;
            it.prefix_max[i] = max;
        }
        for i in prefix.len()..n {
            it.prefix_max[i] = max;
        }
        it.fixed = prefix.len().max(1);
        it
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = SetPartition::from_rgs(&self.rgs);
        let n = self.rgs.len();
        let mut i = n;
        loop {
            if i <= self.fixed {
                self.done = true;
                break;
            }
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for k in i + 1..n {
                    self.rgs[k] = 0;
                    self.prefix_max[k] = self.prefix_max[i];
                }
                break;
            }
        }
        Some(current)
    }
}

/// All perfect matchings of `[m]`.
pub fn enumerate_matchings(m: usize) -> Result<Matchings, EnumerateError> {
    enumerate_matchings_with(m, Limits::default())
}

pub fn enumerate_matchings_with(m: usize, limits: Limits) -> Result<Matchings, EnumerateError> {
    if m % 2 == 1 {
        return Err(EnumerateError::OddMatching(m));
    }
    limits.check_matchings(m)?;
    Ok(Matchings { m, choice: vec![0; m / 2], done: false })
}

/// Odometer over matchings: at round `t` the smallest unmatched element is
/// paired with the `choice[t]`-th remaining element (`m - 2t - 1` options).
#[derive(Debug, Clone)]
pub struct Matchings {
    m: usize,
    choice: Vec<usize>,
    done: bool,
}

impl Matchings {
    fn build(&self) -> SetPartition {
        let mut remaining: Vec<usize> = (1..=self.m).collect();
        let mut blocks = Vec::with_capacity(self.m / 2);
        for &c in &self.choice {
            let first = remaining.remove(0);
            let second = remaining.remove(c);
            blocks.push(vec![first, second]);
        }
        SetPartition::new(self.m, blocks).expect("odometer yields a matching")
    }
}

impl Iterator for Matchings {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = self.build();
        let rounds = self.choice.len();
        let mut t = rounds;
        loop {
            if t == 0 {
                self.done = true;
                break;
            }
            t -= 1;
            let options = self.m - 2 * t - 1;
            if self.choice[t] + 1 < options {
                self.choice[t] += 1;
                for c in &mut self.choice[t + 1..] {
                    *c = 0;
                }
                break;
            }
        }
        Some(current)
    }
}

/// All partitions of type `ty`. Each closer or transient `j` picks one of
/// the `l_j` vacant vertices, so the stream has `ty.fiber_size()` items.
pub fn enumerate_by_type(ty: &PartitionType) -> ByType {
    let open = ty.open_before();
    let slots: Vec<(usize, usize)> = ty
        .roles()
        .iter()
        .zip(&open)
        .enumerate()
        .filter(|(_, (r, _))| r.closes())
        .map(|(i, (_, &l))| (i + 1, l))
        .collect();
    ByType { ty: ty.clone(), ranks: vec![1; slots.len()], slots, done: false }
}

#[derive(Debug, Clone)]
pub struct ByType {
    ty: PartitionType,
    // (element, number of vacant vertices before it)
    slots: Vec<(usize, usize)>,
    ranks: Vec<usize>,
    done: bool,
}

impl Iterator for ByType {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let mut k = 0;
        let ranks = &self.ranks;
        let current = assemble(&self.ty, |_, _| {
            k += 1;
            ranks[k - 1]
        });
        let mut t = self.ranks.len();
        loop {
            if t == 0 {
                self.done = true;
                break;
            }
            t -= 1;
            if self.ranks[t] < self.slots[t].1 {
                self.ranks[t] += 1;
                for r in &mut self.ranks[t + 1..] {
                    *r = 1;
                }
                break;
            }
        }
        Some(current)
    }
}

/// Bell numbers `B_0..=B_n` by the Bell triangle.
pub fn bell_numbers(n: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev + x);
        }
        out.push(next[0]);
        row = next;
    }
    out
}

/// Catalan numbers `C_0..=C_n` by the convolution recurrence.
pub fn catalan_numbers(n: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for k in 1..=n {
        c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
    }
    c
}

/// `(m - 1)!!` for even `m`; 1 for `m = 0`.
pub fn double_factorial_odd(m: usize) -> u128 {
    (1..m).step_by(2).map(|x| x as u128).product()
}
