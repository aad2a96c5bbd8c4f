//! Truncated bivariate power series in `x` and `t` with exact integer
//! coefficients.
//!
//! Every series here has t-degree at most its x-degree in each monomial, so
//! truncation is by x-degree alone: a series with order `N` knows all of its
//! coefficients of `x^n t^k` with `n <= N` exactly. Square roots are never
//! taken; the named series are built from quadratic fixed points,
//! substitution and inversion of series whose `x^0` part is `1`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    /// Nonzero coefficients keyed by `(x-degree, t-degree)`.
    coeffs: BTreeMap<(usize, usize), BigInt>,
    order: usize,
}

/// Dense working form: `rows[n][k]` is the coefficient of `x^n t^k`.
type Dense = Vec<Vec<BigInt>>;

fn trim(row: &mut Vec<BigInt>) {
    while row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
}

fn poly_mul_add(acc: &mut Vec<BigInt>, a: &[BigInt], b: &[BigInt]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    if acc.len() < a.len() + b.len() - 1 {
        acc.resize(a.len() + b.len() - 1, BigInt::zero());
    }
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc[i + j] += ai * bj;
            }
        }
    }
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            coeffs: BTreeMap::new(),
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, 0, BigInt::one(), order)
    }

    /// `coeff * x^x_deg * t^t_deg`, dropped if beyond `order`.
    pub fn monomial(x_deg: usize, t_deg: usize, coeff: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        if x_deg <= order && !coeff.is_zero() {
            s.coeffs.insert((x_deg, t_deg), coeff);
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(1, 0, BigInt::one(), order)
    }

    pub fn t(order: usize) -> Self {
        Self::monomial(0, 1, BigInt::one(), order)
    }

    /// Builds a series from `(x-degree, t-degree, coefficient)` triples.
    pub fn from_terms<I>(terms: I, order: usize) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut s = Self::zero(order);
        for (n, k, c) in terms {
            if n <= order {
                *s.coeffs.entry((n, k)).or_insert_with(BigInt::zero) += c;
            }
        }
        s.coeffs.retain(|_, c| !c.is_zero());
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^n t^k`. Panics if `n` is beyond the truncation order,
    /// where the coefficient is unknown.
    pub fn coeff(&self, n: usize, k: usize) -> BigInt {
        assert!(
            n <= self.order,
            "x-degree {n} is beyond truncation order {}",
            self.order
        );
        self.coeffs.get(&(n, k)).cloned().unwrap_or_default()
    }

    /// Coefficients of `x^n` as a polynomial in `t`, lowest degree first.
    pub fn t_polynomial(&self, n: usize) -> Vec<BigInt> {
        let dense = self.to_dense();
        dense[n].clone()
    }

    /// Nonzero terms in `(x-degree, t-degree)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.coeffs.iter().map(|(&(n, k), c)| (n, k, c))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        BivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((n, _), _)| *n <= order)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            order,
        }
    }

    fn to_dense(&self) -> Dense {
        let mut rows: Dense = vec![Vec::new(); self.order + 1];
        for (&(n, k), c) in &self.coeffs {
            let row = &mut rows[n];
            if row.len() <= k {
                row.resize(k + 1, BigInt::zero());
            }
            row[k] = c.clone();
        }
        rows
    }

    fn from_dense(rows: Dense, order: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        for (n, row) in rows.into_iter().enumerate().take(order + 1) {
            for (k, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    coeffs.insert((n, k), c);
                }
            }
        }
        BivariateSeries { coeffs, order }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        for (&(n, k), c) in &other.coeffs {
            if n <= order {
                *out.coeffs.entry((n, k)).or_insert_with(BigInt::zero) += c;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    pub fn neg(&self) -> Self {
        BivariateSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v)).collect(),
            order: self.order,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.order);
        }
        BivariateSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * factor)).collect(),
            order: self.order,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let a = self.to_dense();
        let b = other.to_dense();
        let mut out: Dense = vec![Vec::new(); order + 1];
        for (i, ai) in a.iter().enumerate().take(order + 1) {
            for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
                poly_mul_add(&mut out[i + j], ai, bj);
            }
        }
        out.iter_mut().for_each(trim);
        Self::from_dense(out, order)
    }

    /// Multiplies by `x`. The product is exact to the same order, since the
    /// dropped terms are the ones beyond it.
    pub fn mul_x(&self) -> Self {
        BivariateSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((n, _), _)| *n < self.order)
                .map(|(&(n, k), v)| ((n + 1, k), v.clone()))
                .collect(),
            order: self.order,
        }
    }

    /// Multiplicative inverse of a series whose `x^0` part is exactly `1`.
    pub fn inverse(&self) -> Result<Self> {
        let a = self.to_dense();
        if a[0].len() != 1 || !a[0][0].is_one() {
            return Err(Error::domain("series inverse needs x^0 part equal to 1"));
        }
        // v_0 = 1, v_n = -sum_{j=1..n} a_j v_{n-j}
        let mut v: Dense = vec![vec![BigInt::one()]];
        for n in 1..=self.order {
            let mut acc = Vec::new();
            for j in 1..=n {
                poly_mul_add(&mut acc, &a[j], &v[n - j]);
            }
            let mut row: Vec<BigInt> = acc.into_iter().map(|c| -c).collect();
            trim(&mut row);
            v.push(row);
        }
        Ok(Self::from_dense(v, self.order))
    }

    /// `self(T, X)` with `T = t_image` and `X = x_image`. `X` must have no
    /// `x^0` part so that the result stays exact to `min` of the orders.
    pub fn substitute(&self, t_image: &Self, x_image: &Self) -> Result<Self> {
        if x_image.coeffs.keys().any(|(n, _)| *n == 0) {
            return Err(Error::domain(
                "substituted x must have positive x-valuation",
            ));
        }
        let order = self.order.min(t_image.order).min(x_image.order);
        let dense = self.to_dense();
        let mut x_pow = Self::one(order);
        let mut out = Self::zero(order);
        for row in dense.iter().take(order + 1) {
            // Horner in T for the t-polynomial of this x-degree.
            let mut poly = Self::zero(order);
            for c in row.iter().rev() {
                poly = poly.mul(t_image);
                if !c.is_zero() {
                    poly = poly.add(&Self::monomial(0, 0, c.clone(), order));
                }
            }
            out = out.add(&poly.mul(&x_pow));
            x_pow = x_pow.mul(x_image);
        }
        Ok(out)
    }

    /// Sum over `k` of the coefficients of `x^n t^k`, i.e. the `x^n`
    /// coefficient at `t = 1`.
    pub fn at_t_one(&self, n: usize) -> BigInt {
        self.t_polynomial(n).into_iter().sum()
    }
}

impl fmt::Display for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, k, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            match n {
                0 => {}
                1 => f.write_str("*x")?,
                _ => write!(f, "*x^{n}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("*t")?,
                _ => write!(f, "*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

/// The series the crate knows how to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesName {
    /// Catalan numbers `C(x)`.
    CatalanC,
    /// Catalan's triangle `C(t,x) = C(tx) / (1 - x C(tx))`.
    CatalanBivariate,
    /// Borel's triangle `B(t,x) = C(1+t, x)`.
    BorelBivariate,
    /// Marked Dyck paths by semilength: `F = 1 + x B(t,x)`.
    F,
    /// Binary trees by vertices and leaves: `A(t,x) = x C(1-x+tx, x)`.
    A,
    /// Leaf-marked binary trees: `P(t,x) = x B(tx, x)`.
    P,
    /// Generalized Catalan numbers `1 / (1 - x C(2x))`.
    GenCatalan,
}

impl core::str::FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "c" | "catalan" => SeriesName::CatalanC,
            "C" | "catalan-bivariate" => SeriesName::CatalanBivariate,
            "B" | "borel" => SeriesName::BorelBivariate,
            "F" => SeriesName::F,
            "A" => SeriesName::A,
            "P" => SeriesName::P,
            "G" | "gen-catalan" => SeriesName::GenCatalan,
            _ => return Err(Error::parse(alloc::format!("unknown series {s:?}"))),
        })
    }
}

/// `C(x)` from its fixed point `C = 1 + x C^2`.
fn catalan_c(order: usize) -> BivariateSeries {
    let one = BivariateSeries::one(order);
    let mut c = one.clone();
    for _ in 0..=order {
        c = one.add(&c.mul(&c).mul_x());
    }
    c
}

fn catalan_bivariate(order: usize) -> BivariateSeries {
    let t = BivariateSeries::t(order);
    let tx = t.mul_x();
    let c_tx = catalan_c(order)
        .substitute(&t, &tx)
        .expect("tx has positive x-valuation");
    let denom = BivariateSeries::one(order).sub(&c_tx.mul_x());
    c_tx.mul(&denom.inverse().expect("unit denominator"))
}

fn borel_bivariate(order: usize) -> BivariateSeries {
    let one_plus_t = BivariateSeries::one(order).add(&BivariateSeries::t(order));
    catalan_bivariate(order)
        .substitute(&one_plus_t, &BivariateSeries::x(order))
        .expect("x has positive x-valuation")
}

/// Expands a named series to x-degree `order`.
pub fn expand_series(name: SeriesName, order: usize) -> BivariateSeries {
    let x = BivariateSeries::x(order);
    let t = BivariateSeries::t(order);
    let one = BivariateSeries::one(order);
    match name {
        SeriesName::CatalanC => catalan_c(order),
        SeriesName::CatalanBivariate => catalan_bivariate(order),
        SeriesName::BorelBivariate => borel_bivariate(order),
        SeriesName::F => one.add(&borel_bivariate(order).mul_x()),
        SeriesName::A => {
            // 1 - x + t x
            let arg = one.sub(&x).add(&t.mul_x());
            catalan_bivariate(order)
                .substitute(&arg, &x)
                .expect("x has positive x-valuation")
                .mul_x()
        }
        SeriesName::P => borel_bivariate(order)
            .substitute(&t.mul_x(), &x)
            .expect("x has positive x-valuation")
            .mul_x(),
        SeriesName::GenCatalan => {
            let two_x = x.scale(&BigInt::from(2));
            let c2x = catalan_c(order)
                .substitute(&t, &two_x)
                .expect("2x has positive x-valuation");
            one.sub(&c2x.mul_x()).inverse().expect("unit denominator")
        }
    }
}

/// Solves `F = 1 + x F^2 / (1 - t (F - 1))` by fixed-point iteration from
/// `F = 1`; each step fixes one more x-degree, so `order + 1` steps are exact.
pub fn solve_functional_equation(order: usize) -> BivariateSeries {
    let one = BivariateSeries::one(order);
    let t = BivariateSeries::t(order);
    let mut f = one.clone();
    for _ in 0..=order {
        let denom = one.sub(&t.mul(&f.sub(&one)));
        let rhs = f
            .mul(&f)
            .mul(&denom.inverse().expect("x^0 part of F is 1"))
            .mul_x();
        f = one.add(&rhs);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::{borel_entry, catalan_entry, BorelRoute, CatalanRoute};

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn catalan_series_constant_term() {
        assert_eq!(expand_series(SeriesName::CatalanC, 0).coeff(0, 0), int(1));
        let c = expand_series(SeriesName::CatalanC, 8);
        let expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &v) in expected.iter().enumerate() {
            assert_eq!(c.coeff(n, 0), int(v));
        }
    }

    #[test]
    fn borel_series_example() {
        let b = expand_series(SeriesName::BorelBivariate, 3);
        assert_eq!(b.coeff(3, 2), int(20));
    }

    #[test]
    fn p_series_example() {
        let p = expand_series(SeriesName::P, 7);
        assert_eq!(p.coeff(7, 3), int(5));
    }

    #[test]
    fn catalan_bivariate_matches_triangle() {
        let c = expand_series(SeriesName::CatalanBivariate, 10);
        for n in 0..=10 {
            for k in 0..=n {
                let want = catalan_entry(n, k, CatalanRoute::ClosedForm).unwrap();
                assert_eq!(c.coeff(n, k), BigInt::from(want));
            }
            assert!(c.coeff(n, n + 1).is_zero());
        }
    }

    #[test]
    fn functional_equation_examples() {
        let f = solve_functional_equation(5);
        assert_eq!(f.coeff(0, 0), int(1));
        assert_eq!(f.coeff(3, 1), int(6));
        assert_eq!(f.coeff(5, 4), int(14));
        for n in 1..=5 {
            for k in 0..n {
                let want = borel_entry(n - 1, k, BorelRoute::Transform).unwrap();
                assert_eq!(f.coeff(n, k), BigInt::from(want));
            }
        }
    }

    #[test]
    fn inverse_rejects_non_unit() {
        let s = BivariateSeries::t(3);
        assert!(s.inverse().is_err());
        let s = BivariateSeries::one(3).scale(&int(2));
        assert!(s.inverse().is_err());
    }

    #[test]
    fn inverse_times_self_is_one() {
        let s = BivariateSeries::one(6)
            .sub(&BivariateSeries::x(6))
            .add(&BivariateSeries::t(6).mul_x().scale(&int(3)));
        let prod = s.mul(&s.inverse().unwrap());
        assert_eq!(prod, BivariateSeries::one(6));
    }

    #[test]
    fn substitution_rejects_constant_x_image() {
        let s = BivariateSeries::x(3);
        assert!(s
            .substitute(&BivariateSeries::t(3), &BivariateSeries::one(3))
            .is_err());
    }

    #[test]
    fn display_is_readable() {
        let s = BivariateSeries::one(2).add(&BivariateSeries::t(2).mul_x().scale(&int(-3)));
        assert_eq!(alloc::format!("{s}"), "1 + -3*x*t + O(x^3)");
    }
}
