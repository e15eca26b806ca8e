//! Exact values of the form `Σ qᵢ·√nᵢ` with rational `qᵢ` and distinct
//! square-free `nᵢ`.
//!
//! Square roots of distinct square-free integers are linearly independent
//! over the rationals, so two normalized sums are equal exactly when their
//! term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// A single term `coef·√radicand`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Radical {
    pub coef: Rational,
    pub radicand: u64,
}

impl Radical {
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coef) * (self.radicand as f64).sqrt()
    }
}

/// Pulls square factors out of `radicand`: returns `(coef·k, r)` with
/// `radicand = k²·r` and `r` square-free.
pub fn normalize_radical(coef: Rational, radicand: u64) -> Result<Radical> {
    if radicand == 0 {
        return Err(Error::InvalidParameter("radicand must be positive".into()));
    }
    let (outside, inside) = square_free_split(radicand);
    Ok(Radical {
        coef: coef * Rational::from_integer(i128::from(outside)),
        radicand: inside,
    })
}

/// Splits `x = k²·r` with `r` square-free, by trial division.
pub fn square_free_split(mut x: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut inside = 1u64;
    let mut p = 2u64;
    while p * p <= x {
        while x.is_multiple_of(p * p) {
            x /= p * p;
            outside *= p;
        }
        if x.is_multiple_of(p) {
            x /= p;
            inside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, inside * x)
}

pub fn is_square_free(x: u64) -> bool {
    x >= 1 && square_free_split(x).0 == 1
}

/// Normalized radical sum. The empty map is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<u64, Rational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn rational(q: Rational) -> Self {
        Self::from(Radical {
            coef: q,
            radicand: 1,
        })
    }

    /// `coef·√radicand`, normalized.
    pub fn term(coef: Rational, radicand: u64) -> Result<Self> {
        normalize_radical(coef, radicand).map(Self::from)
    }

    /// Terms as `(radicand, coefficient)`, radicands ascending.
    pub fn terms(&self) -> impl Iterator<Item = (u64, Rational)> + '_ {
        self.terms.iter().map(|(&n, &q)| (n, q))
    }

    pub fn coefficient(&self, radicand: u64) -> Rational {
        self.terms
            .get(&radicand)
            .copied()
            .unwrap_or_else(Rational::zero)
    }

    /// Adds a term whose radicand is already square-free.
    fn push(&mut self, radicand: u64, coef: Rational) {
        debug_assert!(is_square_free(radicand));
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(radicand).or_insert_with(Rational::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&radicand);
        }
    }

    pub fn add_radical(&mut self, r: Radical) {
        self.push(r.radicand, r.coef);
    }

    pub fn scale(&self, q: Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RadicalSum {
            terms: self.terms.iter().map(|(&n, &c)| (n, c * q)).collect(),
        }
    }

    /// Double-precision value, summed in ascending radicand order.
    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&n, q)| rational_to_f64(q) * (n as f64).sqrt())
            .sum()
    }
}

impl From<Radical> for RadicalSum {
    fn from(r: Radical) -> Self {
        let mut s = RadicalSum::zero();
        s.push(r.radicand, r.coef);
        s
    }
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (&n, &q) in &rhs.terms {
            self.push(n, q);
        }
    }
}

impl AddAssign<Radical> for RadicalSum {
    fn add_assign(&mut self, rhs: Radical) {
        self.add_radical(rhs);
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += &rhs;
        self
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul<Rational> for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, q: Rational) -> RadicalSum {
        self.scale(q)
    }
}

impl std::iter::Sum for RadicalSum {
    fn sum<I: Iterator<Item = RadicalSum>>(iter: I) -> Self {
        iter.fold(RadicalSum::zero(), |acc, x| acc + x)
    }
}

pub fn radsum_add(a: &RadicalSum, b: &RadicalSum) -> RadicalSum {
    a + b
}

pub fn radsum_scale(a: &RadicalSum, q: Rational) -> RadicalSum {
    a.scale(q)
}

pub fn radsum_eq(a: &RadicalSum, b: &RadicalSum) -> bool {
    a == b
}

pub fn radsum_to_float(a: &RadicalSum) -> f64 {
    a.to_f64()
}

fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `q1*sqrt(n1) + q2*sqrt(n2) + ...`, radicands ascending; the `sqrt(1)`
/// term is rendered as a bare rational. Zero renders as `0`.
impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&n, q)) in self.terms.iter().enumerate() {
            let mag = fmt_rational(&q.abs());
            match (i, q.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if n == 1 {
                f.write_str(&mag)?;
            } else {
                write!(f, "{mag}*sqrt({n})")?;
            }
        }
        Ok(())
    }
}
