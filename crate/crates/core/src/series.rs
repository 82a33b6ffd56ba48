//! Generating polynomials of partitions and matchings by crossings,
//! nestings and alignments, and the Jacobi-type continued fractions that
//! produce them.
//!
//! `B_n(p,q,u1,u2,v)` records `p^cr q^ne u1^sg u2^bl v^tr` over `Π_n`. It is
//! computed three ways: by enumerating partitions, by summing weighted
//! bicolored Motzkin paths, and by expanding a continued fraction.

use thiserror::Error;

use crate::bijection::{enumerate_bm, Step};
use crate::enumerate::{enumerate_matchings_with, enumerate_partitions_with, EnumerateError, Limits};
use crate::partition::SetPartition;
use crate::poly::{MultiPoly, Var};
use crate::stats::{count_stats, StatTriple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("coefficient reflection produced a negative exponent at k = {0}")]
    Reflection(u32),
}

/// `[k]_{p,q} = p^{k-1} + p^{k-2} q + … + q^{k-1}`, with `[0] = 0`.
pub fn pq_integer(k: u32) -> MultiPoly {
    (0..k)
        .map(|a| &MultiPoly::var_pow(Var::P, a) * &MultiPoly::var_pow(Var::Q, k - 1 - a))
        .sum()
}

/// `k q^{k-1}`, the value of `[k]_{p,q}` at `p = q`.
fn q_integer_diagonal(k: u32) -> MultiPoly {
    if k == 0 {
        MultiPoly::zero()
    } else {
        &MultiPoly::constant(k) * &MultiPoly::var_pow(Var::Q, k - 1)
    }
}

/// The monomial `p^cr q^ne u1^sg u2^bl v^tr` of a partition.
pub fn partition_weight(pi: &SetPartition) -> MultiPoly {
    let t = StatTriple::of(pi);
    let c = count_stats(pi);
    MultiPoly::monomial([t.cr as u32, t.ne as u32, c.sg as u32, c.bl as u32, c.tr as u32])
}

/// `B_n` by summing over every partition of `[n]`.
pub fn bell_poly_enum(n: usize) -> Result<MultiPoly, SeriesError> {
    bell_poly_enum_with(n, Limits::default())
}

pub fn bell_poly_enum_with(n: usize, limits: Limits) -> Result<MultiPoly, SeriesError> {
    Ok(enumerate_partitions_with(n, limits)?.map(|pi| partition_weight(&pi)).sum())
}

/// Weight of one step of a bicolored Motzkin path starting at height `k`.
fn step_weight(step: Step, k: u32) -> MultiPoly {
    match step {
        Step::Up => MultiPoly::var(Var::U2),
        Step::Down => pq_integer(k),
        Step::Red => MultiPoly::var(Var::U1),
        Step::Blue => &MultiPoly::var(Var::V) * &pq_integer(k),
    }
}

/// `B_n` as a sum of path weights over all bicolored Motzkin paths of
/// length `n`. Blue steps at height 0 are enumerated and weigh zero.
pub fn bell_poly_paths(n: usize) -> Result<MultiPoly, SeriesError> {
    bell_poly_paths_with(n, Limits::default())
}

pub fn bell_poly_paths_with(n: usize, limits: Limits) -> Result<MultiPoly, SeriesError> {
    limits.check_partitions(n)?;
    Ok(enumerate_bm(n)
        .map(|w| {
            w.steps()
                .iter()
                .zip(w.heights())
                .fold(MultiPoly::one(), |acc, (&s, h)| &acc * &step_weight(s, h as u32))
        })
        .sum())
}

type LevelFn = Box<dyn Fn(u32) -> MultiPoly + Send + Sync>;

/// Coefficients of the continued fraction
/// `1/(1 - diag(0) z - sub(1) z^2/(1 - diag(1) z - sub(2) z^2/(…)))`.
pub struct CFSpec {
    diag: LevelFn,
    sub: LevelFn,
}

impl CFSpec {
    pub fn new(
        diag: impl Fn(u32) -> MultiPoly + Send + Sync + 'static,
        sub: impl Fn(u32) -> MultiPoly + Send + Sync + 'static,
    ) -> Self {
        CFSpec { diag: Box::new(diag), sub: Box::new(sub) }
    }

    /// Coefficient of `z` at level `k`.
    pub fn diag(&self, k: u32) -> MultiPoly {
        (self.diag)(k)
    }

    /// Coefficient of `z^2` feeding level `k >= 1`.
    pub fn sub(&self, k: u32) -> MultiPoly {
        (self.sub)(k)
    }
}

/// Truncated power series in `z` with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub coefficients: Vec<MultiPoly>,
}

impl SeriesExpansion {
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coefficients[n]
    }
}

/// Default truncation depth for order `n`: `⌈n/2⌉ + 1` levels.
pub fn default_depth(n: usize) -> u32 {
    (n.div_ceil(2) + 1) as u32
}

/// Expands the continued fraction up to `z^n`.
pub fn cf_expand(spec: &CFSpec, n: usize) -> SeriesExpansion {
    cf_expand_to_depth(spec, n, default_depth(n))
}

/// Expands the continued fraction up to `z^n` keeping levels `0..depth`
/// (the fraction below level `depth - 1` is dropped). Exact on the first
/// `n + 1` coefficients as soon as `2 * depth > n`.
///
/// Works bottom-up: `F_{depth-1} = 1/(1 - diag z)`, then
/// `F_k = 1/(1 - diag(k) z - sub(k+1) z^2 F_{k+1})` as truncated series.
pub fn cf_expand_to_depth(spec: &CFSpec, n: usize, depth: u32) -> SeriesExpansion {
    assert!(depth >= 1, "depth must be at least 1");
    let mut inner: Option<Vec<MultiPoly>> = None;
    for k in (0..depth).rev() {
        let mut x = vec![MultiPoly::zero(); n + 1];
        if n >= 1 {
            x[1] = spec.diag(k);
        }
        if let Some(f) = &inner {
            let s = spec.sub(k + 1);
            for m in 2..=n {
                let t = &s * &f[m - 2];
                x[m] += &t;
            }
        }
        inner = Some(one_over_one_minus(&x));
    }
    SeriesExpansion { coefficients: inner.expect("depth >= 1") }
}

/// `1/(1 - x)` for a series `x` with zero constant term.
fn one_over_one_minus(x: &[MultiPoly]) -> Vec<MultiPoly> {
    debug_assert!(x.first().map_or(true, MultiPoly::is_zero));
    let mut b = vec![MultiPoly::one()];
    for m in 1..x.len() {
        let mut acc = MultiPoly::zero();
        for k in 1..=m {
            if !x[k].is_zero() && !b[m - k].is_zero() {
                acc += &(&x[k] * &b[m - k]);
            }
        }
        b.push(acc);
    }
    b
}

/// Division-free expansion of the same continued fraction: the coefficient
/// of `z^m` is the total weight of Motzkin paths of length `m`, where a
/// level step at height `k` weighs `diag(k)`, a down step from `k` weighs
/// `sub(k)` and up steps weigh 1.
pub fn cf_expand_paths(spec: &CFSpec, n: usize) -> SeriesExpansion {
    let max_h = n / 2 + 1;
    let diag: Vec<MultiPoly> = (0..=max_h as u32).map(|k| spec.diag(k)).collect();
    let sub: Vec<MultiPoly> = (0..=max_h as u32).map(|k| spec.sub(k)).collect();
    // weight[h] = total weight of prefixes ending at height h
    let mut weight = vec![MultiPoly::zero(); max_h + 1];
    weight[0] = MultiPoly::one();
    let mut coefficients = vec![MultiPoly::one()];
    for step in 1..=n {
        let mut next = vec![MultiPoly::zero(); max_h + 1];
        for h in 0..=max_h {
            if weight[h].is_zero() {
                continue;
            }
            // a prefix must be able to return to 0 within the remaining steps
            let remaining = n - step;
            if h + 1 <= max_h && h < remaining {
                next[h + 1] += &weight[h];
            }
            if h <= remaining {
                next[h] += &(&weight[h] * &diag[h]);
            }
            if h >= 1 {
                next[h - 1] += &(&weight[h] * &sub[h]);
            }
        }
        weight = next;
        coefficients.push(weight[0].clone());
    }
    SeriesExpansion { coefficients }
}

/// The continued fraction of `Σ B_n z^n`: `diag(k) = u1 + [k]_{p,q} v`,
/// `sub(k) = u2 [k]_{p,q}`.
pub fn bell_cf_spec() -> CFSpec {
    CFSpec::new(
        |k| &MultiPoly::var(Var::U1) + &(&pq_integer(k) * &MultiPoly::var(Var::V)),
        |k| &MultiPoly::var(Var::U2) * &pq_integer(k),
    )
}

/// `B_n` read off the continued fraction.
pub fn bell_poly_cf(n: usize) -> MultiPoly {
    cf_expand(&bell_cf_spec(), n).coefficients.swap_remove(n)
}

/// The continued fraction of `Σ L_n z^{2n}`: no level steps, `sub(k) = [k]_{p,q}`.
pub fn touchard_cf_spec() -> CFSpec {
    CFSpec::new(|_| MultiPoly::zero(), pq_integer)
}

/// `L_n(p, q)`, the distribution of `(cr, ne)` over perfect matchings of `[2n]`.
#[allow(non_snake_case)]
pub fn touchard_L(n: usize) -> MultiPoly {
    cf_expand(&touchard_cf_spec(), 2 * n).coefficients.swap_remove(2 * n)
}

/// `L_n` by enumerating the matchings of `[2n]`.
pub fn touchard_l_enum(n: usize) -> Result<MultiPoly, SeriesError> {
    Ok(enumerate_matchings_with(2 * n, Limits::default())?
        .map(|m| {
            let t = StatTriple::of(&m);
            MultiPoly::monomial([t.cr as u32, t.ne as u32, 0, 0, 0])
        })
        .sum())
}

/// The continued fraction of `Σ E_n z^n`: `diag(k) = 1 + k q^{k-1} v`,
/// `sub(k) = k q^{k-1} v`.
pub fn e_cf_spec() -> CFSpec {
    CFSpec::new(
        |k| &MultiPoly::one() + &(&q_integer_diagonal(k) * &MultiPoly::var(Var::V)),
        |k| &q_integer_diagonal(k) * &MultiPoly::var(Var::V),
    )
}

/// `E_n(v, q) = Σ q^{cr+ne} v^{ed}`, as the specialization
/// `p = q, u1 = 1, u2 = v` of the enumerated `B_n`.
pub fn e_poly(n: usize) -> Result<MultiPoly, SeriesError> {
    Ok(bell_poly_enum(n)?.substitute(|x| match x {
        Var::P => MultiPoly::var(Var::Q),
        Var::U1 => MultiPoly::one(),
        Var::U2 => MultiPoly::var(Var::V),
        other => MultiPoly::var(other),
    }))
}

/// `E_n` read off its continued fraction.
pub fn e_poly_cf(n: usize) -> MultiPoly {
    cf_expand(&e_cf_spec(), n).coefficients.swap_remove(n)
}

fn binom2(k: u32) -> u32 {
    k * k.saturating_sub(1) / 2
}

/// `F_n(q) = Σ q^{al}` over `Π_n`, obtained from `E_n = Σ e_k(q) v^k` as
/// `Σ q^{C(k,2)} e_k(1/q)`.
pub fn f_poly(n: usize) -> Result<MultiPoly, SeriesError> {
    let e = e_poly(n)?;
    let mut out = MultiPoly::zero();
    for k in 0..=e.max_exp(Var::V) {
        let ek = e.coeff_of(Var::V, k);
        out += &ek.reflect(Var::Q, binom2(k)).ok_or(SeriesError::Reflection(k))?;
    }
    Ok(out)
}

/// `F_n` by direct enumeration.
pub fn f_poly_direct(n: usize) -> Result<MultiPoly, SeriesError> {
    Ok(enumerate_partitions_with(n, Limits::default())?
        .map(|pi| MultiPoly::var_pow(Var::Q, StatTriple::of(&pi).al as u32))
        .sum())
}

/// `T_n(q) = Σ q^{al}` over matchings of `[2n]`, as `q^{C(n,2)} L_n(1/q, 1/q)`.
pub fn t_poly(n: usize) -> Result<MultiPoly, SeriesError> {
    let diagonal = touchard_L(n).substitute(|x| match x {
        Var::P => MultiPoly::var(Var::Q),
        other => MultiPoly::var(other),
    });
    let bound = binom2(n as u32);
    diagonal.reflect(Var::Q, bound).ok_or(SeriesError::Reflection(n as u32))
}

/// `T_n` by direct enumeration of matchings.
pub fn t_poly_direct(n: usize) -> Result<MultiPoly, SeriesError> {
    Ok(enumerate_matchings_with(2 * n, Limits::default())?
        .map(|m| MultiPoly::var_pow(Var::Q, StatTriple::of(&m).al as u32))
        .sum())
}
