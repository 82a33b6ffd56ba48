//! Sparse polynomials with arbitrary-precision integer coefficients in the
//! five variables `p, q, u1, u2, v`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    P,
    Q,
    U1,
    U2,
    V,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::P, Var::Q, Var::U1, Var::U2, Var::V];

    fn slot(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::P => "p",
            Var::Q => "q",
            Var::U1 => "u1",
            Var::U2 => "u2",
            Var::V => "v",
        }
    }
}

/// Exponent vector over `(p, q, u1, u2, v)`.
///
/// Ordered graded-lexicographically: lower total degree first, then within
/// a degree the lexicographically larger exponent vector first, so that
/// `p^2 < pq < q^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 5]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.slot()]
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::default())
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = Monomial::default();
        m.0[v.slot()] = e;
        Self::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c.into());
        p
    }

    /// `p^cr q^ne u1^sg u2^bl v^tr` style monomial from raw exponents.
    pub fn monomial(exps: [u32; 5]) -> Self {
        Self::term(1, Monomial(exps))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Monomial::default()).map_or(false, |c| c.is_one())
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Replaces each variable by a polynomial.
    pub fn substitute(&self, image: impl Fn(Var) -> MultiPoly) -> MultiPoly {
        let images: Vec<MultiPoly> = Var::ALL.iter().map(|&v| image(v)).collect();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (slot, img) in images.iter().enumerate() {
                if m.0[slot] > 0 {
                    t = &t * &img.pow(m.0[slot]);
                }
            }
            out += &t;
        }
        out
    }

    /// Exchanges two variables.
    pub fn swap(&self, a: Var, b: Var) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            e.swap(a.slot(), b.slot());
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Value at integer point `(p, q, u1, u2, v)`.
    pub fn eval(&self, point: [i64; 5]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.clone();
                for (slot, &x) in point.iter().enumerate() {
                    t *= num_traits::pow(BigInt::from(x), m.0[slot] as usize);
                }
                t
            })
            .sum()
    }

    /// Coefficient of `v^k` as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.0[v.slot()] == k {
                let mut e = m.0;
                e[v.slot()] = 0;
                out.add_term(Monomial(e), c.clone());
            }
        }
        out
    }

    pub fn max_exp(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// `var^bound · f(1/var)`: reflects the exponent of `var` against `bound`.
    /// Returns `None` when some exponent exceeds `bound`, in which case the
    /// result would not be a polynomial.
    pub fn reflect(&self, var: Var, bound: u32) -> Option<MultiPoly> {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            e[var.slot()] = bound.checked_sub(e[var.slot()])?;
            out.add_term(Monomial(e), c.clone());
        }
        Some(out)
    }

    /// Human form, e.g. `1+2p+2q+p^2+2pq+q^2`, in graded-lexicographic order.
    pub fn to_text(&self) -> String {
        self.render(self.terms.iter().collect())
    }

    /// Human form with terms grouped by total degree and, inside a degree,
    /// ordered by decreasing coefficient and then graded-lexicographically.
    /// This is the layout of hand-written tables such as
    /// `1+2p+2q+2pq+p^2+q^2+…`.
    pub fn to_text_by_weight(&self) -> String {
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|(ma, ca), (mb, cb)| {
            ma.degree().cmp(&mb.degree()).then_with(|| cb.cmp(ca)).then_with(|| ma.cmp(mb))
        });
        self.render(terms)
    }

    fn render(&self, terms: Vec<(&Monomial, &BigInt)>) -> String {
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            if c.is_negative() {
                s.push('-');
            } else if k > 0 {
                s.push('+');
            }
            let abs = c.abs();
            let is_const = m.degree() == 0;
            if is_const || !abs.is_one() {
                s.push_str(&abs.to_string());
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => s.push_str(v.name()),
                    e => {
                        s.push_str(v.name());
                        s.push('^');
                        s.push_str(&e.to_string());
                    }
                }
            }
        }
        s
    }

    /// Machine form `[{"exp":[e_p,e_q,e_u1,e_u2,e_v],"coef":"…"}]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

#[derive(Serialize)]
struct JsonTerm {
    exp: [u32; 5],
    coef: String,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> =
            self.terms.iter().map(|(m, c)| JsonTerm { exp: m.0, coef: c.to_string() }).collect();
        terms.serialize(s)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        let mut out = MultiPoly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}
