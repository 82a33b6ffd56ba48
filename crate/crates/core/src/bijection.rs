//! The crossing/nesting involution and the two Charlier-diagram encodings
//! of set partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{assemble, Edge, PartitionType, Role, SetPartition, TypeError};
use crate::stats::{sweep, TraceGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("unknown step letter {0:?} (expected U, D, R or B)")]
    BadStep(char),
    #[error("step {0} goes below height 0")]
    BelowZero(usize),
    #[error("path ends at height {0}, not 0")]
    DoesNotReturn(usize),
    #[error("blue east step {0} at height 0")]
    BlueAtZero(usize),
    #[error("xi has {got} entries, path has {expected} steps")]
    XiLength { expected: usize, got: usize },
    #[error("xi_{index} = {value} must be 1 on an up or red step")]
    XiNotOne { index: usize, value: usize },
    #[error("xi_{index} = {value} outside [1, {height}]")]
    XiOutOfRange { index: usize, value: usize, height: usize },
    #[error("malformed diagram text: {0}")]
    Syntax(String),
}

/// A step of a bicolored Motzkin path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// North-East, `U`.
    Up,
    /// South-East, `D`.
    Down,
    /// Red East, `R`.
    Red,
    /// Blue East, `B`.
    Blue,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
            Step::Red => 'R',
            Step::Blue => 'B',
        }
    }

    pub fn from_letter(c: char) -> Result<Self, PathError> {
        match c {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            'R' => Ok(Step::Red),
            'B' => Ok(Step::Blue),
            other => Err(PathError::BadStep(other)),
        }
    }

    fn from_role(role: Role) -> Self {
        match role {
            Role::Opener => Step::Up,
            Role::Closer => Step::Down,
            Role::Singleton => Step::Red,
            Role::Transient => Step::Blue,
        }
    }

    fn role(self) -> Role {
        match self {
            Step::Up => Role::Opener,
            Step::Down => Role::Closer,
            Step::Red => Role::Singleton,
            Step::Blue => Role::Transient,
        }
    }

    /// Down and blue steps carry a choice `ξ` in `[1, height]`.
    pub fn has_choice(self) -> bool {
        matches!(self, Step::Down | Step::Blue)
    }
}

/// A bicolored Motzkin path. The height of step `i` is the height at which
/// it starts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    /// Accepts any nonnegative path returning to 0; blue steps at height 0
    /// are allowed here (see [`LatticePath::is_restricted`]).
    pub fn bicolored(steps: Vec<Step>) -> Result<Self, PathError> {
        let mut h: usize = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => h += 1,
                Step::Down => h = h.checked_sub(1).ok_or(PathError::BelowZero(i + 1))?,
                _ => {}
            }
        }
        if h != 0 {
            return Err(PathError::DoesNotReturn(h));
        }
        Ok(LatticePath { steps })
    }

    /// A restricted bicolored Motzkin path: no blue step at height 0.
    pub fn restricted(steps: Vec<Step>) -> Result<Self, PathError> {
        let path = Self::bicolored(steps)?;
        if let Some(i) = path.first_blue_at_zero() {
            return Err(PathError::BlueAtZero(i));
        }
        Ok(path)
    }

    fn first_blue_at_zero(&self) -> Option<usize> {
        self.steps
            .iter()
            .zip(self.heights())
            .position(|(s, h)| *s == Step::Blue && h == 0)
            .map(|i| i + 1)
    }

    pub fn is_restricted(&self) -> bool {
        self.first_blue_at_zero().is_none()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Starting height of every step.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0;
        self.steps
            .iter()
            .map(|s| {
                let start = h;
                match s {
                    Step::Up => h += 1,
                    Step::Down => h -= 1,
                    _ => {}
                }
                start
            })
            .collect()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// The type whose openers, closers, singletons and transients are the
    /// indices of the up, down, red and blue steps.
    pub fn to_type(&self) -> Result<PartitionType, TypeError> {
        PartitionType::from_roles(self.steps.iter().map(|s| s.role()).collect())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for LatticePath {
    type Err = PathError;

    /// Parses a restricted path from `U`/`D`/`R`/`B` letters, ignoring whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(Step::from_letter)
            .collect::<Result<Vec<_>, _>>()?;
        LatticePath::restricted(steps)
    }
}

/// The lattice path of a partition type.
pub fn type_to_path(ty: &PartitionType) -> LatticePath {
    // realizable types give restricted paths
    LatticePath { steps: ty.roles().iter().map(|&r| Step::from_role(r)).collect() }
}

pub fn path_to_type(path: &LatticePath) -> Result<PartitionType, TypeError> {
    path.to_type()
}

/// A restricted bicolored Motzkin path with a choice `ξ_i` at every step:
/// `ξ_i = 1` on up and red steps, `1 <= ξ_i <= k` on down and blue steps
/// of height `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharlierDiagram {
    path: LatticePath,
    xi: Vec<usize>,
}

impl CharlierDiagram {
    pub fn new(path: LatticePath, xi: Vec<usize>) -> Result<Self, PathError> {
        if let Some(i) = path.first_blue_at_zero() {
            return Err(PathError::BlueAtZero(i));
        }
        if xi.len() != path.len() {
            return Err(PathError::XiLength { expected: path.len(), got: xi.len() });
        }
        for (i, ((&s, h), &x)) in path.steps.iter().zip(path.heights()).zip(&xi).enumerate() {
            if s.has_choice() {
                if x < 1 || x > h {
                    return Err(PathError::XiOutOfRange { index: i + 1, value: x, height: h });
                }
            } else if x != 1 {
                return Err(PathError::XiNotOne { index: i + 1, value: x });
            }
        }
        Ok(CharlierDiagram { path, xi })
    }

    /// The diagram with every `ξ_i = 1`.
    pub fn ones(path: LatticePath) -> Result<Self, PathError> {
        let n = path.len();
        Self::new(path, vec![1; n])
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn xi(&self) -> &[usize] {
        &self.xi
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    fn partition_type(&self) -> PartitionType {
        self.path.to_type().expect("restricted paths are realizable")
    }
}

impl fmt::Display for CharlierDiagram {
    /// `UUBRUBDRBDD | 1,1,2,1,1,3,2,1,1,2,1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xi: Vec<String> = self.xi.iter().map(|x| x.to_string()).collect();
        write!(f, "{} | {}", self.path, xi.join(","))
    }
}

impl FromStr for CharlierDiagram {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (steps, xi) = s
            .split_once('|')
            .ok_or_else(|| PathError::Syntax("expected `<steps> | <xi>`".into()))?;
        let path: LatticePath = steps.parse()?;
        let xi = xi
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| PathError::Syntax(format!("bad xi entry {t:?}"))))
            .collect::<Result<Vec<usize>, _>>()?;
        CharlierDiagram::new(path, xi)
    }
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    steps: String,
    xi: Vec<usize>,
}

impl Serialize for CharlierDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawDiagram { steps: self.path.to_string(), xi: self.xi.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharlierDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawDiagram::deserialize(d)?;
        let path: LatticePath = raw.steps.parse().map_err(serde::de::Error::custom)?;
        CharlierDiagram::new(path, raw.xi).map_err(serde::de::Error::custom)
    }
}

/// The involution exchanging crossings and nestings.
///
/// Reads `π` left to right. Openers become vacant, singletons stay
/// isolated, and each closer or transient `i` is joined to the vacant
/// vertex whose rank counted from the right equals the left-to-right rank
/// `γ_i(π)` of its partner in `π`. Transients then become vacant.
pub fn phi(pi: &SetPartition) -> SetPartition {
    let mut edges = Vec::with_capacity(pi.n());
    involution_sweep(pi, |_, _, e| edges.extend(e));
    SetPartition::from_edges(pi.n(), &edges)
}

/// The intermediate graphs `D'_0, …, D'_n` built while computing [`phi`].
/// `D'_i` coincides with `trace(&phi(pi), i)`.
pub fn phi_traces(pi: &SetPartition) -> Vec<TraceGraph> {
    let mut out = vec![TraceGraph { i: 0, edges: Vec::new(), vacant: Vec::new() }];
    let mut edges = Vec::new();
    involution_sweep(pi, |i, vacant, e| {
        edges.extend(e);
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        out.push(TraceGraph { i, edges: sorted, vacant: vacant.to_vec() });
    });
    out
}

/// Runs the sweep, reporting after each element `i` the ascending vacant
/// list of `D'_i` and the edge added at `i`, if any.
fn involution_sweep(pi: &SetPartition, mut visit: impl FnMut(usize, &[usize], Option<Edge>)) {
    let steps = sweep(pi);
    let mut vacant: Vec<usize> = Vec::new();
    for (k, step) in steps.iter().enumerate() {
        let i = k + 1;
        let mut added = None;
        if let Some(g) = step.gamma {
            let l = vacant.len();
            debug_assert_eq!(l, step.vacancies);
            let left = vacant.remove(l - g);
            added = Some(Edge::new(left, i));
        }
        if step.role.opens() {
            vacant.push(i);
        }
        visit(i, &vacant, added);
    }
}

/// Decodes a diagram, joining `j` to the `ξ_j`-th vacant vertex from the left.
pub fn phi_l(h: &CharlierDiagram) -> SetPartition {
    assemble(&h.partition_type(), |j, _| h.xi[j - 1])
}

/// Decodes a diagram, joining `j` to the `ξ_j`-th vacant vertex from the right.
pub fn phi_r(h: &CharlierDiagram) -> SetPartition {
    assemble(&h.partition_type(), |j, l| l + 1 - h.xi[j - 1])
}

fn encode(pi: &SetPartition, from_right: bool) -> CharlierDiagram {
    let path = type_to_path(&pi.partition_type());
    let xi = sweep(pi)
        .iter()
        .map(|s| match s.gamma {
            Some(g) if from_right => s.vacancies + 1 - g,
            Some(g) => g,
            None => 1,
        })
        .collect();
    CharlierDiagram { path, xi }
}

/// Inverse of [`phi_l`]: `ξ_j = γ_j(π)`.
pub fn phi_l_inv(pi: &SetPartition) -> CharlierDiagram {
    encode(pi, false)
}

/// Inverse of [`phi_r`]: `ξ_j = l_j(π) - γ_j(π) + 1`.
pub fn phi_r_inv(pi: &SetPartition) -> CharlierDiagram {
    encode(pi, true)
}

fn paths(n: usize, restricted: bool) -> Vec<LatticePath> {
    fn go(n: usize, restricted: bool, h: usize, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        let left = n - cur.len();
        if left == 0 {
            if h == 0 {
                out.push(LatticePath { steps: cur.clone() });
            }
            return;
        }
        for s in [Step::Up, Step::Down, Step::Red, Step::Blue] {
            let ok = match s {
                Step::Up => h + 2 <= left,
                Step::Down => h > 0,
                Step::Red => h < left,
                Step::Blue => h < left && (h > 0 || !restricted),
            };
            if ok {
                cur.push(s);
                let nh = match s {
                    Step::Up => h + 1,
                    Step::Down => h - 1,
                    _ => h,
                };
                go(n, restricted, nh, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, restricted, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All restricted bicolored Motzkin paths of length `n`.
pub fn enumerate_rbm(n: usize) -> impl Iterator<Item = LatticePath> {
    paths(n, true).into_iter()
}

/// All bicolored Motzkin paths of length `n`, blue steps at height 0 included.
pub fn enumerate_bm(n: usize) -> impl Iterator<Item = LatticePath> {
    paths(n, false).into_iter()
}

/// All Charlier diagrams of length `n`.
pub fn enumerate_charlier(n: usize) -> impl Iterator<Item = CharlierDiagram> {
    enumerate_rbm(n).flat_map(|path| {
        let bounds: Vec<usize> = path
            .steps
            .iter()
            .zip(path.heights())
            .map(|(s, h)| if s.has_choice() { h } else { 1 })
            .collect();
        XiOdometer { path, bounds, xi: None }
    })
}

struct XiOdometer {
    path: LatticePath,
    bounds: Vec<usize>,
    xi: Option<Vec<usize>>,
}

impl Iterator for XiOdometer {
    type Item = CharlierDiagram;

    fn next(&mut self) -> Option<CharlierDiagram> {
        match &mut self.xi {
            None => {
                let ones = vec![1; self.bounds.len()];
                self.xi = Some(ones.clone());
                Some(CharlierDiagram { path: self.path.clone(), xi: ones })
            }
            Some(xi) => {
                let t = (0..xi.len()).rev().find(|&t| xi[t] < self.bounds[t])?;
                xi[t] += 1;
                for x in &mut xi[t + 1..] {
                    *x = 1;
                }
                Some(CharlierDiagram { path: self.path.clone(), xi: xi.clone() })
            }
        }
    }
}
