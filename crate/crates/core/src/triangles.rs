//! Catalan's triangle, Borel's triangle and the arrays derived from them.
//!
//! All values are exact. Closed forms multiply binomials first and divide
//! last; each such division is asserted to be exact.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = binom(n, i) here, so the division below is exact.
        acc *= n - i;
        acc = exact_div(acc, &BigUint::from(i + 1));
    }
    acc
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = (&num / den, &num % den);
    assert!(r.is_zero(), "inexact division {num} / {den}");
    q
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> BigUint {
    let n = n as u64;
    exact_div(binomial(2 * n, n), &BigUint::from(n + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalanRoute {
    Recurrence,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BorelRoute {
    /// Binomial transform of the Catalan row.
    Transform,
    ClosedForm,
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::domain(alloc::format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

/// Rows of Catalan's triangle built from `C(n,k) = C(n-1,k) + C(n,k-1)`,
/// extended on demand.
#[derive(Debug, Clone)]
pub struct CatalanRecurrence {
    rows: Vec<Vec<BigUint>>,
}

impl Default for CatalanRecurrence {
    fn default() -> Self {
        Self::new()
    }
}

impl CatalanRecurrence {
    pub fn new() -> Self {
        CatalanRecurrence {
            rows: vec![vec![BigUint::one()]],
        }
    }

    pub fn row(&mut self, n: usize) -> &[BigUint] {
        while self.rows.len() <= n {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigUint::one());
            for k in 1..m {
                let v = &prev[k] + &row[k - 1];
                row.push(v);
            }
            let last = row[m - 1].clone();
            row.push(last);
            self.rows.push(row);
        }
        &self.rows[n]
    }
}

/// Entry `C(n,k)` of Catalan's triangle.
pub fn catalan_entry(n: usize, k: usize, route: CatalanRoute) -> Result<BigUint> {
    check_range(n, k)?;
    Ok(match route {
        CatalanRoute::Recurrence => CatalanRecurrence::new().row(n)[k].clone(),
        CatalanRoute::ClosedForm => {
            let (n, k) = (n as u64, k as u64);
            let num = binomial(n + k, n) * (n - k + 1);
            exact_div(num, &BigUint::from(n + 1))
        }
    })
}

/// Row `n` of Catalan's triangle via the closed form.
pub fn catalan_row(n: usize) -> Vec<BigUint> {
    (0..=n)
        .map(|k| catalan_entry(n, k, CatalanRoute::ClosedForm).unwrap())
        .collect()
}

/// Entry `B(n,k)` of Borel's triangle.
pub fn borel_entry(n: usize, k: usize, route: BorelRoute) -> Result<BigUint> {
    check_range(n, k)?;
    Ok(match route {
        BorelRoute::Transform => {
            let mut rec = CatalanRecurrence::new();
            let row = rec.row(n);
            (k..=n)
                .map(|s| binomial(s as u64, k as u64) * &row[s])
                .sum()
        }
        BorelRoute::ClosedForm => {
            let (n, k) = (n as u64, k as u64);
            let num = binomial(2 * n + 2, n - k) * binomial(n + k, n);
            exact_div(num, &BigUint::from(n + 1))
        }
    })
}

/// Row `n` of Borel's triangle via the closed form.
pub fn borel_row(n: usize) -> Vec<BigUint> {
    (0..=n)
        .map(|k| borel_entry(n, k, BorelRoute::ClosedForm).unwrap())
        .collect()
}

/// Generalized Catalan number `C(2,n)`: 1 for `n = 0`, otherwise the sum of
/// Borel row `n - 1`.
pub fn generalized_catalan(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    borel_row(n - 1).into_iter().sum()
}

/// Second route to `C(2,n)`: `sum_k C(n-1,k) 2^k`.
pub fn generalized_catalan_weighted(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let mut rec = CatalanRecurrence::new();
    rec.row(n - 1).iter().enumerate().map(|(k, c)| c << k).sum()
}

/// Largest admissible `k` in row `n` of the `a` and `P` arrays.
pub fn half_row_max(n: usize) -> usize {
    n.saturating_sub(1) / 2
}

fn check_half_range(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("row index must be positive"));
    }
    if k > half_row_max(n) {
        return Err(Error::domain(alloc::format!(
            "k = {k} exceeds floor((n-1)/2) = {} for n = {n}",
            half_row_max(n)
        )));
    }
    Ok(())
}

/// Number of binary trees on `n` vertices with `k + 1` leaves:
/// `2^(n-2k-1) binom(n-1, 2k) C_k`.
pub fn a_entry(n: usize, k: usize) -> Result<BigUint> {
    check_half_range(n, k)?;
    Ok((binomial((n - 1) as u64, (2 * k) as u64) * catalan_number(k)) << (n - 2 * k - 1))
}

/// Number of leaf-marked binary trees on `n` vertices with `k` marked
/// leaves, read diagonally off Borel's triangle as `B(n-1-k, k)`.
pub fn p_entry(n: usize, k: usize) -> Result<BigUint> {
    check_half_range(n, k)?;
    borel_entry(n - 1 - k, k, BorelRoute::ClosedForm)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleName {
    Catalan,
    Borel,
    AArray,
    PArray,
}

impl TriangleName {
    /// Index of the first row: 0 for the two triangles, 1 for `a` and `P`.
    pub fn first_row(self) -> usize {
        match self {
            TriangleName::Catalan | TriangleName::Borel => 0,
            TriangleName::AArray | TriangleName::PArray => 1,
        }
    }

    pub fn row(self, n: usize) -> Result<Vec<BigUint>> {
        match self {
            TriangleName::Catalan => Ok(catalan_row(n)),
            TriangleName::Borel => Ok(borel_row(n)),
            TriangleName::AArray => (0..=half_row_max(n)).map(|k| a_entry(n, k)).collect(),
            TriangleName::PArray => (0..=half_row_max(n)).map(|k| p_entry(n, k)).collect(),
        }
    }
}

impl fmt::Display for TriangleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleName::Catalan => "catalan",
            TriangleName::Borel => "borel",
            TriangleName::AArray => "a",
            TriangleName::PArray => "p",
        })
    }
}

impl core::str::FromStr for TriangleName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalan" | "C" => Ok(TriangleName::Catalan),
            "borel" | "B" => Ok(TriangleName::Borel),
            "a" | "A" => Ok(TriangleName::AArray),
            "p" | "P" => Ok(TriangleName::PArray),
            _ => Err(Error::parse(alloc::format!("unknown triangle {s:?}"))),
        }
    }
}

/// The first `rows` rows of a named array, starting at its first row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    pub name: TriangleName,
    pub rows: Vec<Vec<BigUint>>,
}

impl TriangleTable {
    pub fn new(name: TriangleName, rows: usize) -> Self {
        let first = name.first_row();
        let rows = (first..first + rows)
            .map(|n| name.row(n).expect("row index in range"))
            .collect();
        TriangleTable { name, rows }
    }

    /// Row with the array's own index `n`.
    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        n.checked_sub(self.name.first_row())
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    /// Entries in row-major order, as OEIS lists triangles.
    pub fn flatten(&self) -> impl Iterator<Item = &BigUint> {
        self.rows.iter().flatten()
    }
}
