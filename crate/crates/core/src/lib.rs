//! Crossings, nestings and alignments of set partitions.
//!
//! * [`partition`]: canonical set partitions, arcs and types.
//! * [`enumerate`]: exhaustive streams over partitions, matchings and type fibers.
//! * [`stats`]: pattern counts, per-endpoint counts, traces and vacant vertices.
//! * [`bijection`]: the involution exchanging crossings with nestings, and
//!   the left/right Charlier-diagram encodings.
//! * [`poly`] and [`series`]: exact generating polynomials and continued fractions.

pub mod bijection;
pub mod enumerate;
pub mod partition;
pub mod poly;
pub mod series;
pub mod stats;

pub use bijection::{
    enumerate_bm, enumerate_charlier, enumerate_rbm, path_to_type, phi, phi_l, phi_l_inv, phi_r,
    phi_r_inv, phi_traces, type_to_path, CharlierDiagram, LatticePath, PathError, Step,
};
pub use enumerate::{
    bell_numbers, catalan_numbers, double_factorial_odd, enumerate_by_type, enumerate_matchings,
    enumerate_partitions, EnumerateError, Limits,
};
pub use partition::{
    edges, parse_partition, type_of, Edge, MatchingType, ParseError, PartitionError, PartitionType, Role,
    SetPartition, TypeError,
};
pub use poly::{Monomial, MultiPoly, Var};
pub use stats::{
    al_at, alignments, count_stats, cr_at, crossings, gamma, ne_at, nestings, stats_at, trace,
    vacancy_count, Counts, StatTriple, StatsError, TraceGraph,
};
