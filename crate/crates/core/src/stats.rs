//! Crossings, nestings and alignments of a partition graph, their
//! per-endpoint refinements, and the trace / vacant-vertex machinery.
//!
//! For two arcs `(i1, j1)` and `(i2, j2)` with `i1 < i2`:
//!
//! * crossing: `i1 < i2 < j1 < j2`, initial arc `(i1, j1)`;
//! * nesting: `i1 < i2 < j2 < j1`, interior arc `(i2, j2)`;
//! * alignment: `i1 < j1 <= i2 < j2`, initial arc `(i1, j1)`.
//!
//! The alignment case includes `j1 == i2`, two arcs of the same block
//! meeting at a transient. Since no vertex is the left (or right) end of two
//! arcs, every pair of distinct arcs falls in exactly one case.

use serde::Serialize;
use thiserror::Error;

use crate::partition::{Edge, Role, SetPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("{0} is not a closer or transient")]
    NotClosing(usize),
    #[error("{index} is outside [{lo}, {n}]")]
    OutOfRange { index: usize, lo: usize, n: usize },
}

/// Relative position of two distinct arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    Crossing,
    Nesting,
    Alignment,
}

/// Classifies a pair of distinct arcs of the same partition graph.
pub fn classify(a: Edge, b: Edge) -> Pattern {
    let (first, second) = if a.left < b.left { (a, b) } else { (b, a) };
    if first.right <= second.left {
        Pattern::Alignment
    } else if first.right < second.right {
        Pattern::Crossing
    } else {
        Pattern::Nesting
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StatTriple {
    pub cr: usize,
    pub ne: usize,
    pub al: usize,
}

impl StatTriple {
    pub fn of(pi: &SetPartition) -> Self {
        let edges = pi.edges();
        let mut t = StatTriple::default();
        for (k, &a) in edges.iter().enumerate() {
            for &b in &edges[k + 1..] {
                match classify(a, b) {
                    Pattern::Crossing => t.cr += 1,
                    Pattern::Nesting => t.ne += 1,
                    Pattern::Alignment => t.al += 1,
                }
            }
        }
        t
    }

    pub fn total(&self) -> usize {
        self.cr + self.ne + self.al
    }

    /// The triple with crossings and nestings exchanged.
    pub fn swapped(&self) -> Self {
        StatTriple { cr: self.ne, ne: self.cr, al: self.al }
    }
}

pub fn crossings(pi: &SetPartition) -> usize {
    StatTriple::of(pi).cr
}

pub fn nestings(pi: &SetPartition) -> usize {
    StatTriple::of(pi).ne
}

pub fn alignments(pi: &SetPartition) -> usize {
    StatTriple::of(pi).al
}

/// Edge ending at `j`, provided `j` is a closer or transient.
fn closing_edge(pi: &SetPartition, j: usize) -> Result<Edge, StatsError> {
    if j == 0 || j > pi.n() {
        return Err(StatsError::OutOfRange { index: j, lo: 1, n: pi.n() });
    }
    pi.edges()
        .into_iter()
        .find(|e| e.right == j)
        .ok_or(StatsError::NotClosing(j))
}

/// Per-endpoint statistics: the crossings and alignments whose initial arc
/// ends at `j`, and the nestings whose interior arc ends at `j`.
pub fn stats_at(pi: &SetPartition, j: usize) -> Result<StatTriple, StatsError> {
    let target = closing_edge(pi, j)?;
    let mut t = StatTriple::default();
    for e in pi.edges() {
        if e == target {
            continue;
        }
        let (first, second) = if target.left < e.left { (target, e) } else { (e, target) };
        match classify(target, e) {
            Pattern::Crossing if first == target => t.cr += 1,
            Pattern::Alignment if first == target => t.al += 1,
            Pattern::Nesting if second == target => t.ne += 1,
            _ => {}
        }
    }
    Ok(t)
}

pub fn cr_at(pi: &SetPartition, j: usize) -> Result<usize, StatsError> {
    stats_at(pi, j).map(|t| t.cr)
}

pub fn ne_at(pi: &SetPartition, j: usize) -> Result<usize, StatsError> {
    stats_at(pi, j).map(|t| t.ne)
}

pub fn al_at(pi: &SetPartition, j: usize) -> Result<usize, StatsError> {
    stats_at(pi, j).map(|t| t.al)
}

/// Graph `D_i`: the partition graph restricted to `[i]`, with a half-edge
/// on each vertex `x <= i` whose arc `(x, y)` has `y > i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceGraph {
    pub i: usize,
    pub edges: Vec<Edge>,
    pub vacant: Vec<usize>,
}

pub fn trace(pi: &SetPartition, i: usize) -> Result<TraceGraph, StatsError> {
    if i > pi.n() {
        return Err(StatsError::OutOfRange { index: i, lo: 0, n: pi.n() });
    }
    let all = pi.edges();
    let edges = all.iter().copied().filter(|e| e.right <= i).collect();
    let mut vacant: Vec<usize> =
        all.iter().filter(|e| e.left <= i && i < e.right).map(|e| e.left).collect();
    vacant.sort_unstable();
    Ok(TraceGraph { i, edges, vacant })
}

/// What the left-to-right sweep records at element `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepStep {
    pub role: Role,
    /// Number of vacant vertices of `D_{i-1}`.
    pub vacancies: usize,
    /// 1-based left-to-right rank of the partner of `i` among those
    /// vacancies; `None` at openers and singletons.
    pub gamma: Option<usize>,
}

/// One pass over `[n]` maintaining the ascending list of vacant vertices.
/// Entry `i - 1` describes element `i`.
pub fn sweep(pi: &SetPartition) -> Vec<SweepStep> {
    let partner = pi.left_partners();
    let ty = pi.partition_type();
    let mut vacant: Vec<usize> = Vec::new();
    let mut out = Vec::with_capacity(pi.n());
    for i in 1..=pi.n() {
        let role = ty.role(i);
        let vacancies = vacant.len();
        let mut gamma = None;
        if role.closes() {
            let pos = vacant.binary_search(&partner[i]).expect("partner is vacant");
            vacant.remove(pos);
            gamma = Some(pos + 1);
        }
        if role.opens() {
            vacant.push(i);
        }
        out.push(SweepStep { role, vacancies, gamma });
    }
    out
}

/// `l_i`: number of vacant vertices of `D_{i-1}`.
pub fn vacancy_count(pi: &SetPartition, i: usize) -> Result<usize, StatsError> {
    if i == 0 || i > pi.n() {
        return Err(StatsError::OutOfRange { index: i, lo: 1, n: pi.n() });
    }
    Ok(sweep(pi)[i - 1].vacancies)
}

/// `γ_i`: left-to-right rank of the partner of `i` among the vacant vertices of `D_{i-1}`.
pub fn gamma(pi: &SetPartition, i: usize) -> Result<usize, StatsError> {
    if i == 0 || i > pi.n() {
        return Err(StatsError::OutOfRange { index: i, lo: 1, n: pi.n() });
    }
    sweep(pi)[i - 1].gamma.ok_or(StatsError::NotClosing(i))
}

/// Singletons, blocks of size at least two, transients and edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub sg: usize,
    pub bl: usize,
    pub tr: usize,
    pub ed: usize,
}

pub fn count_stats(pi: &SetPartition) -> Counts {
    let mut c = Counts { sg: 0, bl: 0, tr: 0, ed: 0 };
    for r in pi.partition_type().roles() {
        match r {
            Role::Singleton => c.sg += 1,
            Role::Opener => c.bl += 1,
            Role::Transient => c.tr += 1,
            Role::Closer => {}
        }
    }
    c.ed = c.bl + c.tr;
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_partition;

    fn pi_star() -> SetPartition {
        parse_partition("1,9,10/2,3,7/4/5,6,11/8").unwrap()
    }

    #[test]
    fn global_stats_of_worked_example() {
        assert_eq!(StatTriple::of(&pi_star()), StatTriple { cr: 2, ne: 5, al: 8 });
    }

    #[test]
    fn the_three_matchings_of_four() {
        let t = |s| StatTriple::of(&parse_partition(s).unwrap());
        assert_eq!(t("1,3/2,4"), StatTriple { cr: 1, ne: 0, al: 0 });
        assert_eq!(t("1,4/2,3"), StatTriple { cr: 0, ne: 1, al: 0 });
        assert_eq!(t("1,2/3,4"), StatTriple { cr: 0, ne: 0, al: 1 });
        assert_eq!(t("1,2"), StatTriple::default());
    }

    #[test]
    fn touching_arcs_align() {
        let p = parse_partition("1,2,3").unwrap();
        assert_eq!(StatTriple::of(&p), StatTriple { cr: 0, ne: 0, al: 1 });
        assert_eq!(classify(Edge::new(1, 2), Edge::new(2, 3)), Pattern::Alignment);
    }

    #[test]
    fn per_endpoint_values() {
        let p = pi_star();
        assert_eq!(ne_at(&p, 7), Ok(1));
        assert_eq!(cr_at(&p, 7), Ok(1));
        let mut sum = StatTriple::default();
        for j in [3, 6, 7, 9, 10, 11] {
            let t = stats_at(&p, j).unwrap();
            sum.cr += t.cr;
            sum.ne += t.ne;
            sum.al += t.al;
        }
        assert_eq!(sum, StatTriple { cr: 2, ne: 5, al: 8 });
        let q = parse_partition("1,2/3").unwrap();
        assert_eq!(stats_at(&q, 2), Ok(StatTriple::default()));
    }

    #[test]
    fn per_endpoint_rejects_openers_and_singletons() {
        let p = pi_star();
        assert_eq!(cr_at(&p, 1), Err(StatsError::NotClosing(1)));
        assert_eq!(ne_at(&p, 4), Err(StatsError::NotClosing(4)));
        assert!(al_at(&p, 12).is_err());
    }

    #[test]
    fn traces() {
        let p = pi_star();
        let d6 = trace(&p, 6).unwrap();
        assert_eq!(d6.vacant, vec![1, 3, 6]);
        assert_eq!(d6.edges, vec![Edge::new(2, 3), Edge::new(5, 6)]);
        let d5 = trace(&p, 5).unwrap();
        assert_eq!(d5.vacant, vec![1, 3, 5]);
        assert_eq!(d5.edges, vec![Edge::new(2, 3)]);
        let d0 = trace(&p, 0).unwrap();
        assert!(d0.edges.is_empty() && d0.vacant.is_empty());
        let d11 = trace(&p, 11).unwrap();
        assert_eq!(d11.edges.len(), 6);
        assert!(d11.vacant.is_empty());
        assert!(trace(&p, 12).is_err());
    }

    #[test]
    fn vacancies_and_ranks() {
        let p = pi_star();
        assert_eq!(vacancy_count(&p, 6), Ok(3));
        assert_eq!(gamma(&p, 6), Ok(3));
        assert_eq!(vacancy_count(&p, 1), Ok(0));
        assert_eq!(vacancy_count(&p, 10), Ok(2));
        assert_eq!(gamma(&p, 3), Ok(2));
        assert_eq!(gamma(&p, 11), Ok(1));
        assert_eq!(gamma(&p, 5), Err(StatsError::NotClosing(5)));
        let gammas: Vec<Option<usize>> = sweep(&p).iter().map(|s| s.gamma).collect();
        assert_eq!(
            gammas,
            vec![None, None, Some(2), None, None, Some(3), Some(2), None, Some(1), Some(2), Some(1)]
        );
    }

    #[test]
    fn counts() {
        assert_eq!(count_stats(&pi_star()), Counts { sg: 2, bl: 3, tr: 3, ed: 6 });
        assert_eq!(count_stats(&SetPartition::singletons(5)), Counts { sg: 5, bl: 0, tr: 0, ed: 0 });
        let block = parse_partition("1,2,3,4,5").unwrap();
        assert_eq!(count_stats(&block), Counts { sg: 0, bl: 1, tr: 3, ed: 4 });
    }
}
