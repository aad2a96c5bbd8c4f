//! Small independent oracles shared by the integration tests. They use
//! plain `u128` dynamic programming and avoid the library's own formulas.
#![allow(dead_code)]

use borel_core::BigUint;

/// Lattice paths to `(n, k)` with east and north steps staying weakly
/// below `y = x`, by a grid DP.
pub fn ballot(n: usize, k: usize) -> u128 {
    let mut grid = vec![vec![0u128; n + 1]; n + 1];
    grid[0][0] = 1;
    for x in 0..=n {
        for y in 0..=x {
            if x == 0 && y == 0 {
                continue;
            }
            let from_west = if x > 0 && y < x { grid[x - 1][y] } else { 0 };
            let from_south = if y > 0 { grid[x][y - 1] } else { 0 };
            grid[x][y] = from_west + from_south;
        }
    }
    grid[n][k]
}

pub fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k]
}

/// `sum_j binom(j, k) C(n, j)`.
pub fn borel(n: usize, k: usize) -> u128 {
    (k..=n).map(|j| choose(j, k) * ballot(n, j)).sum()
}

pub fn borel_row(n: usize) -> Vec<u128> {
    (0..=n).map(|k| borel(n, k)).collect()
}

pub fn catalan_row(n: usize) -> Vec<u128> {
    (0..=n).map(|k| ballot(n, k)).collect()
}

pub fn big(v: &[u128]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

pub fn gen_catalan(n: usize) -> u128 {
    if n == 0 {
        1
    } else {
        borel_row(n - 1).iter().sum()
    }
}

/// Dense histogram `0..len` from an iterator of statistic values.
pub fn hist(values: impl IntoIterator<Item = usize>, len: usize) -> Vec<u128> {
    let mut out = vec![0u128; len];
    for v in values {
        assert!(v < len, "statistic value {v} outside 0..{len}");
        out[v] += 1;
    }
    out
}
