//! Exhaustive verification suites behind `pstat verify`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use pstat_core::series::{bell_cf_spec, bell_poly_enum_with, bell_poly_paths_with, cf_expand};
use pstat_core::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Involution,
    /// per-endpoint counts against `l_j` and `gamma_j`
    #[value(name = "lemma22", alias = "endpoints")]
    Endpoints,
    /// step counts of Charlier diagrams against block statistics, injectivity
    #[value(name = "prop32", alias = "charlier")]
    Charlier,
    /// `phi_r = phi o phi_l` and the stepwise xi identities
    #[value(name = "prop35", alias = "factorization")]
    Factorization,
    Catalan,
    Symmetry,
    Threeroute,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Involution => "involution",
            Suite::Endpoints => "lemma22",
            Suite::Charlier => "prop32",
            Suite::Factorization => "prop35",
            Suite::Catalan => "catalan",
            Suite::Symmetry => "symmetry",
            Suite::Threeroute => "threeroute",
        };
        f.write_str(name)
    }
}

/// Outcome of a suite that found no violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub n_max: usize,
    /// Objects checked per ground-set size, index = n.
    pub checked: Vec<u64>,
}

impl Report {
    pub fn total(&self) -> u64 {
        self.checked.iter().sum()
    }
}

/// First counterexample found by a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub suite: Suite,
    pub n: usize,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at n={}: {}", self.suite, self.n, self.detail)
    }
}

macro_rules! ensure {
    ($suite:expr, $n:expr, $cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(Violation { suite: $suite, n: $n, detail: format!($($msg)+) });
        }
    };
}

pub fn run(suite: Suite, n_max: usize, limits: Limits) -> Result<Result<Report, Violation>, EnumerateError> {
    limits.check_partitions(n_max)?;
    let mut checked = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let count = match suite {
            Suite::Involution => involution(n),
            Suite::Endpoints => endpoints(n),
            Suite::Charlier => charlier(n),
            Suite::Factorization => factorization(n),
            Suite::Catalan => catalan(n),
            Suite::Symmetry => symmetry(n),
            Suite::Threeroute => threeroute(n, limits),
        };
        match count {
            Ok(c) => checked.push(c),
            Err(v) => return Ok(Err(v)),
        }
    }
    Ok(Ok(Report { suite: suite.to_string(), n_max, checked }))
}

// callers have already checked n against the cap
fn partitions(n: usize) -> impl Iterator<Item = SetPartition> {
    let limits = Limits { partitions: n, matchings: n };
    pstat_core::enumerate::enumerate_partitions_with(n, limits).expect("within cap")
}

fn closing_elements(pi: &SetPartition) -> impl Iterator<Item = usize> + '_ {
    let ty = pi.partition_type();
    (1..=pi.n()).filter(move |&j| ty.role(j).closes())
}

fn involution(n: usize) -> Result<u64, Violation> {
    let s = Suite::Involution;
    let mut count = 0;
    for pi in partitions(n) {
        let image = phi(&pi);
        ensure!(s, n, phi(&image) == pi, "phi(phi({pi})) = {}", phi(&image));
        ensure!(s, n, image.partition_type() == pi.partition_type(), "type of {pi} not preserved by {image}");
        let (a, b) = (StatTriple::of(&pi), StatTriple::of(&image));
        ensure!(s, n, b == a.swapped(), "{pi}: {a:?} vs image {image}: {b:?}");
        for j in closing_elements(&pi) {
            let (x, y) = (stats_at(&pi, j).unwrap(), stats_at(&image, j).unwrap());
            ensure!(s, n, y == x.swapped(), "{pi} at j={j}: {x:?} vs {y:?}");
        }
        count += 1;
    }
    Ok(count)
}

fn endpoints(n: usize) -> Result<u64, Violation> {
    let s = Suite::Endpoints;
    let mut count = 0;
    for pi in partitions(n) {
        let ty = pi.partition_type();
        for j in closing_elements(&pi) {
            let at = stats_at(&pi, j).unwrap();
            let g = gamma(&pi, j).unwrap();
            let l = vacancy_count(&pi, j).unwrap();
            ensure!(s, n, at.ne + 1 == g, "{pi} at j={j}: ne_at={} gamma={g}", at.ne);
            ensure!(s, n, at.cr + g == l, "{pi} at j={j}: cr_at={} l={l} gamma={g}", at.cr);
            let later = (j..=n).filter(|&x| ty.role(x).opens()).count();
            ensure!(s, n, at.al == later, "{pi} at j={j}: al_at={} expected {later}", at.al);
        }
        count += 1;
    }
    Ok(count)
}

fn charlier(n: usize) -> Result<u64, Violation> {
    let s = Suite::Charlier;
    let bell = bell_numbers(n)[n];
    let mut left = HashSet::new();
    let mut right = HashSet::new();
    let mut count = 0;
    for h in enumerate_charlier(n) {
        let w = h.path();
        for pi in [phi_l(&h), phi_r(&h)] {
            let c = count_stats(&pi);
            let expected = (w.count(Step::Red), w.count(Step::Up), w.count(Step::Blue));
            ensure!(s, n, (c.sg, c.bl, c.tr) == expected, "{h} -> {pi}: {c:?}");
        }
        ensure!(s, n, left.insert(phi_l(&h)), "phi_l not injective at {h}");
        ensure!(s, n, right.insert(phi_r(&h)), "phi_r not injective at {h}");
        count += 1;
    }
    ensure!(s, n, left.len() as u128 == bell, "phi_l image has {} elements, Bell = {bell}", left.len());
    ensure!(s, n, right.len() as u128 == bell, "phi_r image has {} elements, Bell = {bell}", right.len());
    Ok(count)
}

fn factorization(n: usize) -> Result<u64, Violation> {
    let s = Suite::Factorization;
    let mut count = 0;
    for h in enumerate_charlier(n) {
        let (l, r) = (phi_l(&h), phi_r(&h));
        ensure!(s, n, r == phi(&l), "phi_r({h}) = {r} but phi(phi_l) = {}", phi(&l));
        let heights = h.path().heights();
        for (idx, step) in h.path().steps().iter().enumerate() {
            if !step.has_choice() {
                continue;
            }
            let j = idx + 1;
            let (k, xi) = (heights[idx], h.xi()[idx]);
            let (at_l, at_r) = (stats_at(&l, j).unwrap(), stats_at(&r, j).unwrap());
            ensure!(s, n, at_r.cr == xi - 1 && at_l.ne == xi - 1, "{h} at j={j}: {at_l:?} {at_r:?}");
            ensure!(s, n, at_r.ne == k - xi && at_l.cr == k - xi, "{h} at j={j}: {at_l:?} {at_r:?}");
        }
        count += 1;
    }
    Ok(count)
}

fn catalan(n: usize) -> Result<u64, Violation> {
    let s = Suite::Catalan;
    let c = catalan_numbers(n)[n];
    let mut nc = HashSet::new();
    let mut nn = HashSet::new();
    let mut count = 0;
    for pi in partitions(n) {
        let t = StatTriple::of(&pi);
        if t.cr == 0 {
            nc.insert(pi.clone());
        }
        if t.ne == 0 {
            nn.insert(pi);
        }
        count += 1;
    }
    ensure!(s, n, nc.len() as u128 == c, "|NC| = {}, Catalan = {c}", nc.len());
    ensure!(s, n, nn.len() as u128 == c, "|NN| = {}, Catalan = {c}", nn.len());
    let mut from_right = HashSet::new();
    let mut from_left = HashSet::new();
    for w in enumerate_rbm(n) {
        let h = CharlierDiagram::ones(w).expect("all-ones diagram is valid");
        from_right.insert(phi_r(&h));
        from_left.insert(phi_l(&h));
    }
    ensure!(s, n, from_right == nc, "phi_r(w, 1) does not enumerate NC");
    ensure!(s, n, from_left == nn, "phi_l(w, 1) does not enumerate NN");
    let image: HashSet<SetPartition> = nc.iter().map(phi).collect();
    ensure!(s, n, image == nn, "phi(NC) != NN");
    Ok(count)
}

fn symmetry(n: usize) -> Result<u64, Violation> {
    let s = Suite::Symmetry;
    let mut dist: HashMap<PartitionType, BTreeMap<StatTriple, u64>> = HashMap::new();
    let mut count = 0;
    for pi in partitions(n) {
        *dist.entry(pi.partition_type()).or_default().entry(StatTriple::of(&pi)).or_default() += 1;
        count += 1;
    }
    for (ty, d) in &dist {
        for (t, c) in d {
            let mirrored = d.get(&t.swapped()).copied().unwrap_or(0);
            ensure!(s, n, mirrored == *c, "type {ty:?}: {t:?} occurs {c} times, swap occurs {mirrored}");
        }
    }
    Ok(count)
}

fn threeroute(n: usize, limits: Limits) -> Result<u64, Violation> {
    let s = Suite::Threeroute;
    let by_enum = bell_poly_enum_with(n, limits).expect("cap checked");
    let by_paths = bell_poly_paths_with(n, limits).expect("cap checked");
    let by_cf = cf_expand(&bell_cf_spec(), n).coefficients.swap_remove(n);
    ensure!(s, n, by_enum == by_paths, "enumeration {by_enum} != paths {by_paths}");
    ensure!(s, n, by_enum == by_cf, "enumeration {by_enum} != continued fraction {by_cf}");
    let bell = bell_numbers(n)[n];
    ensure!(s, n, by_enum.eval([1; 5]) == bell.into(), "B_n(1,…,1) != Bell({n})");
    Ok(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_on_small_sizes() {
        for suite in [
            Suite::Involution,
            Suite::Endpoints,
            Suite::Charlier,
            Suite::Factorization,
            Suite::Catalan,
            Suite::Symmetry,
            Suite::Threeroute,
        ] {
            let report = run(suite, 5, Limits::default()).unwrap().unwrap();
            assert_eq!(report.checked.len(), 6);
        }
    }

    #[test]
    fn involution_counts_partitions() {
        let report = run(Suite::Involution, 6, Limits::default()).unwrap().unwrap();
        let bell = bell_numbers(6);
        assert_eq!(report.checked, bell.iter().map(|&b| b as u64).collect::<Vec<_>>());
    }

    #[test]
    fn cap_applies() {
        let limits = Limits { partitions: 4, matchings: 4 };
        assert!(run(Suite::Involution, 5, limits).is_err());
    }
}
