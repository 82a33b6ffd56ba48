//! Set partitions of `[n] = {1, …, n}`, their arc diagrams and types.
//!
//! A partition is kept in canonical form: elements ascending inside each
//! block, blocks ordered by their minimum. Equality and hashing are
//! structural on that form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised when a list of blocks does not describe a partition of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("element {0} appears more than once")]
    Duplicate(usize),
    #[error("element {element} is outside [1, {n}]")]
    OutOfRange { element: usize, n: usize },
    #[error("element {0} is missing from the partition")]
    Gap(usize),
    #[error("empty block")]
    EmptyBlock,
}

/// Parse failure with the byte offset at which it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {pos}: {kind}")]
pub struct ParseError {
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("invalid number {0:?}")]
    BadNumber(String),
    #[error("malformed `n=` prefix")]
    BadPrefix,
    #[error(transparent)]
    Invalid(#[from] PartitionError),
}

/// An arc of the partition graph joining two consecutive elements of a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub left: usize,
    pub right: usize,
}

impl Edge {
    pub fn new(left: usize, right: usize) -> Self {
        debug_assert!(left < right);
        Edge { left, right }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// A partition of `[n]` in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition of `[n]` from blocks given in any order.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(PartitionError::OutOfRange { element: x, n });
                }
                if seen[x] {
                    return Err(PartitionError::Duplicate(x));
                }
                seen[x] = true;
            }
            block.sort_unstable();
        }
        if let Some(missing) = (1..=n).find(|&x| !seen[x]) {
            return Err(PartitionError::Gap(missing));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// The partition of `[0]`, with no blocks.
    pub fn empty() -> Self {
        SetPartition { n: 0, blocks: Vec::new() }
    }

    /// Partition of `[n]` into singletons.
    pub fn singletons(n: usize) -> Self {
        SetPartition { n, blocks: (1..=n).map(|x| vec![x]).collect() }
    }

    /// Builds the partition encoded by a restricted growth string
    /// (`rgs[i]` is the 0-based block index of element `i + 1`).
    pub fn from_rgs(rgs: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &b) in rgs.iter().enumerate() {
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            assert!(b < blocks.len(), "not a restricted growth string");
            blocks[b].push(i + 1);
        }
        SetPartition { n: rgs.len(), blocks }
    }

    /// Assembles a partition from its edges; every vertex must be the left
    /// endpoint of at most one edge and the right endpoint of at most one.
    pub(crate) fn from_edges(n: usize, edges: &[Edge]) -> Self {
        let mut next = vec![0usize; n + 1];
        let mut has_prev = vec![false; n + 1];
        for e in edges {
            debug_assert_eq!(next[e.left], 0);
            debug_assert!(!has_prev[e.right]);
            next[e.left] = e.right;
            has_prev[e.right] = true;
        }
        let mut blocks = Vec::new();
        for start in 1..=n {
            if has_prev[start] {
                continue;
            }
            let mut block = vec![start];
            let mut x = start;
            while next[x] != 0 {
                x = next[x];
                block.push(x);
            }
            blocks.push(block);
        }
        SetPartition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Restricted growth string of the partition (0-based block labels).
    pub fn rgs(&self) -> Vec<usize> {
        let mut rgs = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                rgs[x - 1] = b;
            }
        }
        rgs
    }

    /// True when every block has exactly two elements.
    pub fn is_matching(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    /// Arcs joining consecutive elements of each block, sorted by `(left, right)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges: Vec<Edge> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| Edge::new(w[0], w[1])))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// `partner[j]` is the left end of the arc ending at `j`, or 0 if none.
    pub(crate) fn left_partners(&self) -> Vec<usize> {
        let mut partner = vec![0; self.n + 1];
        for b in &self.blocks {
            for w in b.windows(2) {
                partner[w[1]] = w[0];
            }
        }
        partner
    }

    /// Classification of every element as opener, closer, singleton or transient.
    pub fn partition_type(&self) -> PartitionType {
        let mut roles = vec![Role::Singleton; self.n];
        for b in &self.blocks {
            if b.len() < 2 {
                continue;
            }
            roles[b[0] - 1] = Role::Opener;
            roles[b[b.len() - 1] - 1] = Role::Closer;
            for &x in &b[1..b.len() - 1] {
                roles[x - 1] = Role::Transient;
            }
        }
        PartitionType { roles }
    }

    /// Canonical text with an explicit `n=` prefix.
    pub fn to_text_with_n(&self) -> String {
        format!("n={};{}", self.n, self)
    }
}

/// Convenience wrapper for [`SetPartition::edges`].
pub fn edges(pi: &SetPartition) -> Vec<Edge> {
    pi.edges()
}

/// Convenience wrapper for [`SetPartition::partition_type`].
pub fn type_of(pi: &SetPartition) -> PartitionType {
    pi.partition_type()
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (k, x) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl SetPartition {
    /// Brace notation, e.g. `{1,9,10}-{2,3,7}-{4}`.
    pub fn to_brace_notation(&self) -> String {
        self.blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect::<Vec<_>>()
            .join("-")
    }
}

/// Parses block notation: blocks separated by `/` or `-`, elements by
/// commas or spaces, optional braces around blocks and an optional
/// `n=<k>;` prefix. Without the prefix `n` is the largest element.
pub fn parse_partition(text: &str) -> Result<SetPartition, ParseError> {
    let mut body = text;
    let mut offset = 0;
    let mut explicit_n = None;
    let trimmed = text.trim_start();
    if let Some(rest) = trimmed.strip_prefix("n=") {
        let start = text.len() - trimmed.len();
        let semi = rest.find(';').ok_or(ParseError { pos: start, kind: ParseErrorKind::BadPrefix })?;
        let digits = rest[..semi].trim();
        let n: usize = digits
            .parse()
            .map_err(|_| ParseError { pos: start + 2, kind: ParseErrorKind::BadPrefix })?;
        explicit_n = Some(n);
        offset = start + 2 + semi + 1;
        body = &text[offset..];
    }

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut chars = body.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        match c {
            '0'..='9' => {
                let mut end = i + c.len_utf8();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_ascii_digit() {
                        end = j + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let lit = &body[i..end];
                let value = lit.parse().map_err(|_| ParseError {
                    pos: offset + i,
                    kind: ParseErrorKind::BadNumber(lit.to_string()),
                })?;
                current.push(value);
            }
            '/' | '-' => {
                if current.is_empty() {
                    return Err(ParseError { pos: offset + i, kind: ParseErrorKind::UnexpectedChar(c) });
                }
                blocks.push(std::mem::take(&mut current));
            }
            ',' | ' ' | '\t' | '{' | '}' | '\n' | '\r' => {}
            other => {
                return Err(ParseError { pos: offset + i, kind: ParseErrorKind::UnexpectedChar(other) });
            }
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    } else if !blocks.is_empty() {
        return Err(ParseError { pos: text.len(), kind: ParseErrorKind::Invalid(PartitionError::EmptyBlock) });
    }
    let n = explicit_n.unwrap_or_else(|| blocks.iter().flatten().copied().max().unwrap_or(0));
    SetPartition::new(n, blocks).map_err(|e| ParseError { pos: text.len(), kind: e.into() })
}

impl FromStr for SetPartition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawPartition::deserialize(d)?;
        SetPartition::new(raw.n, raw.blocks).map_err(serde::de::Error::custom)
    }
}

/// Role of an element in the arc diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    /// Minimum of a block with at least two elements.
    Opener,
    /// Maximum of a block with at least two elements.
    Closer,
    Singleton,
    /// Interior element of a block.
    Transient,
}

impl Role {
    /// Whether an arc ends at this element.
    pub fn closes(self) -> bool {
        matches!(self, Role::Closer | Role::Transient)
    }

    /// Whether an arc starts at this element.
    pub fn opens(self) -> bool {
        matches!(self, Role::Opener | Role::Transient)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("element {0} is assigned to more than one of O, C, S, T")]
    Overlap(usize),
    #[error("element {0} is in none of O, C, S, T")]
    Uncovered(usize),
    #[error("element {element} is outside [1, {n}]")]
    OutOfRange { element: usize, n: usize },
    #[error("element {0} closes an arc but no arc is open")]
    NothingOpen(usize),
    #[error("{0} arcs are still open at the end")]
    Unclosed(usize),
}

/// The type `(O, C, S, T)` of a partition, stored as one role per element.
///
/// Only realizable types can be constructed: reading roles left to right
/// the number of open arcs never goes negative, a transient never occurs
/// with no open arc, and every arc is closed at the end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartitionType {
    roles: Vec<Role>,
}

impl PartitionType {
    pub fn from_roles(roles: Vec<Role>) -> Result<Self, TypeError> {
        let mut open = 0usize;
        for (i, r) in roles.iter().enumerate() {
            match r {
                Role::Opener => open += 1,
                Role::Closer => {
                    open = open.checked_sub(1).ok_or(TypeError::NothingOpen(i + 1))?;
                }
                Role::Transient if open == 0 => return Err(TypeError::NothingOpen(i + 1)),
                _ => {}
            }
        }
        if open != 0 {
            return Err(TypeError::Unclosed(open));
        }
        Ok(PartitionType { roles })
    }

    /// Builds a type from the four sets of openers, closers, singletons and transients.
    pub fn from_sets(
        n: usize,
        openers: &[usize],
        closers: &[usize],
        singletons: &[usize],
        transients: &[usize],
    ) -> Result<Self, TypeError> {
        let mut roles: Vec<Option<Role>> = vec![None; n];
        for (set, role) in [
            (openers, Role::Opener),
            (closers, Role::Closer),
            (singletons, Role::Singleton),
            (transients, Role::Transient),
        ] {
            for &x in set {
                if x == 0 || x > n {
                    return Err(TypeError::OutOfRange { element: x, n });
                }
                if roles[x - 1].replace(role).is_some() {
                    return Err(TypeError::Overlap(x));
                }
            }
        }
        let roles = roles
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or(TypeError::Uncovered(i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_roles(roles)
    }

    pub fn n(&self) -> usize {
        self.roles.len()
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    /// Role of element `i` (1-based).
    pub fn role(&self, i: usize) -> Role {
        self.roles[i - 1]
    }

    fn elements(&self, role: Role) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.roles[i - 1] == role).collect()
    }

    pub fn openers(&self) -> Vec<usize> {
        self.elements(Role::Opener)
    }

    pub fn closers(&self) -> Vec<usize> {
        self.elements(Role::Closer)
    }

    pub fn singletons(&self) -> Vec<usize> {
        self.elements(Role::Singleton)
    }

    pub fn transients(&self) -> Vec<usize> {
        self.elements(Role::Transient)
    }

    /// Number of arcs open just before element `i` is read, i.e. the number
    /// of vacant vertices `l_i` any partition of this type has at step `i`.
    pub fn open_before(&self) -> Vec<usize> {
        let mut open = 0;
        self.roles
            .iter()
            .map(|r| {
                let before = open;
                match r {
                    Role::Opener => open += 1,
                    Role::Closer => open -= 1,
                    _ => {}
                }
                before
            })
            .collect()
    }

    /// True for a type with no singletons and no transients.
    pub fn is_matching_type(&self) -> bool {
        self.roles.iter().all(|r| matches!(r, Role::Opener | Role::Closer))
    }

    /// Size of `Π_n(λ)`: the product of the vacancy counts at closers and transients.
    pub fn fiber_size(&self) -> u128 {
        self.roles
            .iter()
            .zip(self.open_before())
            .filter(|(r, _)| r.closes())
            .map(|(_, l)| l as u128)
            .product()
    }
}

/// A partition type without singletons or transients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatchingType(PartitionType);

impl MatchingType {
    pub fn new(ty: PartitionType) -> Option<Self> {
        ty.is_matching_type().then_some(MatchingType(ty))
    }

    pub fn as_type(&self) -> &PartitionType {
        &self.0
    }
}

/// Sweeps a type left to right, joining each closer or transient to the
/// vacant vertex selected by `pick(i, l)`, a 1-based rank counted from the
/// left among the `l` vacant vertices. Shared by the Charlier decoders and
/// the fiber enumeration.
pub(crate) fn assemble<F>(ty: &PartitionType, mut pick: F) -> SetPartition
where
    F: FnMut(usize, usize) -> usize,
{
    let n = ty.n();
    let mut vacant: Vec<usize> = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n);
    for i in 1..=n {
        let role = ty.role(i);
        if role.closes() {
            let l = vacant.len();
            let rank = pick(i, l);
            assert!((1..=l).contains(&rank), "rank {rank} out of range 1..={l} at {i}");
            let left = vacant.remove(rank - 1);
            edges.push(Edge::new(left, i));
        }
        if role.opens() {
            vacant.push(i);
        }
    }
    SetPartition::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pi_star() -> SetPartition {
        parse_partition("1,9,10/2,3,7/4/5,6,11/8").unwrap()
    }

    #[test]
    fn parses_worked_example() {
        let p = pi_star();
        assert_eq!(p.n(), 11);
        assert_eq!(p.blocks(), &[vec![1, 9, 10], vec![2, 3, 7], vec![4], vec![5, 6, 11], vec![8]]);
        assert_eq!(p.to_string(), "1,9,10/2,3,7/4/5,6,11/8");
        assert_eq!(p.to_brace_notation(), "{1,9,10}-{2,3,7}-{4}-{5,6,11}-{8}");
    }

    #[test]
    fn parse_normalizes_and_accepts_variants() {
        assert_eq!(parse_partition("2,1/3").unwrap().blocks(), &[vec![1, 2], vec![3]]);
        assert_eq!(parse_partition("1").unwrap(), SetPartition::singletons(1));
        let braces = parse_partition("{1,9,10}-{2,3,7}-{4}-{5,6,11}-{8}").unwrap();
        assert_eq!(braces, pi_star());
        let spaces = parse_partition("8 / 11 6 5/4/ 7 3 2/10 9 1").unwrap();
        assert_eq!(spaces, pi_star());
        assert_eq!(parse_partition("n=11;1,9,10/2,3,7/4/5,6,11/8").unwrap(), pi_star());
        assert_eq!(parse_partition("").unwrap(), SetPartition::empty());
        assert_eq!(parse_partition("n=0;").unwrap(), SetPartition::empty());
    }

    #[test]
    fn parse_errors() {
        let e = parse_partition("1,2/2,3").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Invalid(PartitionError::Duplicate(2)));
        let e = parse_partition("1,2/4").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Invalid(PartitionError::Gap(3)));
        let e = parse_partition("n=3;1,2/3,4").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Invalid(PartitionError::OutOfRange { element: 4, n: 3 }));
        let e = parse_partition("n=4;1,2/3").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Invalid(PartitionError::Gap(4)));
        let e = parse_partition("1,x").unwrap_err();
        assert_eq!(e, ParseError { pos: 2, kind: ParseErrorKind::UnexpectedChar('x') });
        let e = parse_partition("1//2").unwrap_err();
        assert_eq!(e.pos, 2);
        let e = parse_partition("0,1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Invalid(PartitionError::OutOfRange { element: 0, .. })));
    }

    #[test]
    fn edges_of_examples() {
        let e: Vec<(usize, usize)> = pi_star().edges().iter().map(|e| (e.left, e.right)).collect();
        assert_eq!(e, vec![(1, 9), (2, 3), (3, 7), (5, 6), (6, 11), (9, 10)]);
        assert!(SetPartition::singletons(5).edges().is_empty());
        let one_block = parse_partition("1,2,3").unwrap();
        assert_eq!(one_block.edges(), vec![Edge::new(1, 2), Edge::new(2, 3)]);
    }

    #[test]
    fn type_of_examples() {
        let t = pi_star().partition_type();
        assert_eq!(t.openers(), vec![1, 2, 5]);
        assert_eq!(t.closers(), vec![7, 10, 11]);
        assert_eq!(t.singletons(), vec![4, 8]);
        assert_eq!(t.transients(), vec![3, 6, 9]);

        let t = SetPartition::singletons(3).partition_type();
        assert_eq!(t.singletons(), vec![1, 2, 3]);
        assert!(t.openers().is_empty() && t.closers().is_empty() && t.transients().is_empty());

        let t = parse_partition("1,3/2,4").unwrap().partition_type();
        assert_eq!((t.openers(), t.closers()), (vec![1, 2], vec![3, 4]));
        assert!(t.is_matching_type());
    }

    #[test]
    fn type_validation() {
        assert_eq!(
            PartitionType::from_sets(3, &[1], &[2], &[3], &[1]),
            Err(TypeError::Overlap(1))
        );
        assert_eq!(PartitionType::from_sets(3, &[1], &[2], &[], &[]), Err(TypeError::Uncovered(3)));
        assert_eq!(PartitionType::from_sets(2, &[2], &[1], &[], &[]), Err(TypeError::NothingOpen(1)));
        assert_eq!(PartitionType::from_sets(2, &[], &[], &[1], &[2]), Err(TypeError::NothingOpen(2)));
        assert_eq!(PartitionType::from_sets(2, &[1], &[], &[2], &[]), Err(TypeError::Unclosed(1)));
        assert!(PartitionType::from_sets(11, &[1, 2, 5], &[7, 10, 11], &[4, 8], &[3, 6, 9]).is_ok());
    }

    #[test]
    fn rgs_roundtrip() {
        let p = pi_star();
        assert_eq!(p.rgs(), vec![0, 1, 1, 2, 3, 3, 1, 4, 0, 0, 3]);
        assert_eq!(SetPartition::from_rgs(&p.rgs()), p);
    }

    #[test]
    fn json_form() {
        let p = pi_star();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":11,"blocks":[[1,9,10],[2,3,7],[4],[5,6,11],[8]]}"#);
        let back: SetPartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<SetPartition>(r#"{"n":3,"blocks":[[1,2]]}"#).is_err());
    }
}
