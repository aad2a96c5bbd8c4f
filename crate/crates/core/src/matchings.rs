//! Perfect matchings, full rook placements on Ferrers boards, pattern
//! avoidance and the nesting/crossing bijections to marked Dyck paths.
//!
//! Matching points and rook coordinates are 1-based; rows count up from the
//! bottom edge of the board.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::dyck::{DyckPath, Step};
use crate::marked::{MarkedDyckPath, PathFlavor};
use crate::perm::Permutation;
use crate::{Error, Result};

/// A perfect matching on `1..=2n`, arcs sorted by opener.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    arcs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        for a in &mut arcs {
            if a.0 > a.1 {
                *a = (a.1, a.0);
            }
        }
        arcs.sort_unstable();
        let m = 2 * arcs.len();
        let mut seen = alloc::vec![false; m + 1];
        for &(i, j) in &arcs {
            for v in [i, j] {
                if v == 0 || v > m || seen[v] {
                    return Err(Error::domain(alloc::format!(
                        "arcs do not partition 1..={m}"
                    )));
                }
                seen[v] = true;
            }
        }
        Ok(Matching { arcs })
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Number of arcs.
    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    /// `partner[v]` for `v` in `1..=2n`; index 0 is unused.
    pub fn partners(&self) -> Vec<usize> {
        let mut p = alloc::vec![0; 2 * self.size() + 1];
        for &(i, j) in &self.arcs {
            p[i] = j;
            p[j] = i;
        }
        p
    }

    pub fn nestings(&self) -> usize {
        pairs(&self.arcs)
            .filter(|(a, b)| a.0 < b.0 && b.1 < a.1)
            .count()
    }

    pub fn crossings(&self) -> usize {
        pairs(&self.arcs)
            .filter(|(a, b)| a.0 < b.0 && b.0 < a.1 && a.1 < b.1)
            .count()
    }
}

fn pairs<T: Copy>(xs: &[T]) -> impl Iterator<Item = (T, T)> + '_ {
    xs.iter()
        .enumerate()
        .flat_map(move |(i, &a)| xs[i + 1..].iter().map(move |&b| (a, b)))
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arcs
            .iter()
            .map(|(i, j)| alloc::format!("{i}-{j}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Matching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Matching::new(Vec::new());
        }
        let arcs = s
            .split(',')
            .map(|part| {
                let (a, b) = part
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| Error::parse(alloc::format!("bad arc {part:?}")))?;
                let num = |x: &str| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(alloc::format!("bad arc {part:?}")))
                };
                Ok((num(a)?, num(b)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Matching::new(arcs)
    }
}

/// All matchings on `1..=2n`: the smallest unmatched point is paired with
/// each later point in increasing order.
pub fn enumerate_matchings(n: usize) -> Vec<Matching> {
    enumerate_avoiding(n, &[])
}

/// Matchings avoiding every pattern in `patterns`. A partial matching
/// already containing a pattern is abandoned, since every completion
/// contains it too.
pub fn enumerate_avoiding(n: usize, patterns: &[Permutation]) -> Vec<Matching> {
    fn go(
        m: usize,
        patterns: &[Permutation],
        used: &mut [bool],
        arcs: &mut Vec<(usize, usize)>,
        out: &mut Vec<Matching>,
    ) {
        let Some(i) = (1..=m).find(|&v| !used[v]) else {
            let mut sorted = arcs.clone();
            sorted.sort_unstable();
            out.push(Matching { arcs: sorted });
            return;
        };
        used[i] = true;
        for j in i + 1..=m {
            if used[j] {
                continue;
            }
            arcs.push((i, j));
            let last = arcs.len() - 1;
            if !patterns
                .iter()
                .any(|p| arcs_contain(arcs, p.values(), Some(last)))
            {
                used[j] = true;
                go(m, patterns, used, arcs, out);
                used[j] = false;
            }
            arcs.pop();
        }
        used[i] = false;
    }
    let mut out = Vec::new();
    go(
        2 * n,
        patterns,
        &mut alloc::vec![false; 2 * n + 1],
        &mut Vec::with_capacity(n),
        &mut out,
    );
    out
}

/// Whether some `k` of `arcs` form an occurrence of `sigma`: all openers
/// precede all closers and, taking the arcs by opener, the closer ranks
/// read `k + 1 - sigma(r)`.
fn arcs_contain(arcs: &[(usize, usize)], sigma: &[usize], must_use: Option<usize>) -> bool {
    let k = sigma.len();
    let fits = |chosen: &[usize]| {
        let mut sel: Vec<(usize, usize)> = chosen.iter().map(|&c| arcs[c]).collect();
        sel.sort_unstable();
        let max_open = sel.iter().map(|a| a.0).max().unwrap_or(0);
        if sel.iter().any(|a| a.1 < max_open) {
            return false;
        }
        sel.iter().enumerate().all(|(r, a)| {
            let rank = sel.iter().filter(|b| b.1 <= a.1).count();
            rank == k + 1 - sigma[r]
        })
    };
    let idx: Vec<usize> = (0..arcs.len()).filter(|&i| Some(i) != must_use).collect();
    let need = k - usize::from(must_use.is_some());
    let found = combinations(&idx, need).any(|mut c| {
        c.extend(must_use);
        fits(&c)
    });
    found
}

/// `k`-subsets of `items` in lexicographic order.
fn combinations(items: &[usize], k: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = items.len();
    let mut idx: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    core::iter::from_fn(move || {
        let cur = idx.take()?;
        let out = cur.iter().map(|&i| items[i]).collect();
        let mut next = cur;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                idx = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Literal scan over all `2k`-subsets `i_1 < ... < i_2k` of points, looking
/// for arcs `(i_r, i_{2k+1-sigma(r)})` for every `r`.
pub fn avoids_pattern(m: &Matching, sigma: &Permutation) -> bool {
    let k = sigma.len();
    let partner = m.partners();
    let points: Vec<usize> = (1..=2 * m.size()).collect();
    let found = combinations(&points, 2 * k)
        .any(|sel| (0..k).all(|r| partner[sel[r]] == sel[2 * k - sigma.values()[r]]));
    !found
}

/// Left- and bottom-aligned columns of weakly decreasing heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FerrersBoard {
    heights: Vec<usize>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.contains(&0) || heights.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(alloc::format!(
                "column heights {heights:?} are not positive and weakly decreasing"
            )));
        }
        Ok(FerrersBoard { heights })
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn columns(&self) -> usize {
        self.heights.len()
    }

    pub fn contains(&self, col: usize, row: usize) -> bool {
        col >= 1 && row >= 1 && self.heights.get(col - 1).is_some_and(|&h| row <= h)
    }

    /// The border from top-left to lower-right of an `n`-column board of
    /// height `n`, east steps as U and south steps as D.
    pub fn border(&self) -> Result<DyckPath> {
        let n = self.columns();
        let mut steps = Vec::with_capacity(2 * n);
        let mut downs = 0;
        for &h in &self.heights {
            if h > n {
                return Err(Error::domain("column taller than the number of columns"));
            }
            while downs < n - h {
                steps.push(Step::D);
                downs += 1;
            }
            steps.push(Step::U);
        }
        steps.extend(core::iter::repeat_n(Step::D, n - downs));
        DyckPath::new(steps)
    }

    pub fn from_border(p: &DyckPath) -> FerrersBoard {
        let n = p.semilength();
        let mut downs = 0;
        let mut heights = Vec::with_capacity(n);
        for s in p.steps() {
            match s {
                Step::U => heights.push(n - downs),
                Step::D => downs += 1,
            }
        }
        FerrersBoard { heights }
    }
}

/// One rook per row and column of a Ferrers board; `rows[c - 1]` is the row
/// of the rook in column `c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RookPlacement {
    board: FerrersBoard,
    rows: Vec<usize>,
}

impl RookPlacement {
    pub fn new(board: FerrersBoard, rows: Vec<usize>) -> Result<Self> {
        if rows.len() != board.columns() {
            return Err(Error::domain("need one rook per column"));
        }
        Permutation::new(rows.clone()).map_err(|_| Error::domain("need one rook per row"))?;
        for (c, &r) in rows.iter().enumerate() {
            if !board.contains(c + 1, r) {
                return Err(Error::domain(alloc::format!(
                    "rook ({}, {r}) lies outside the board",
                    c + 1
                )));
            }
        }
        Ok(RookPlacement { board, rows })
    }

    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `(column, row)` pairs by column.
    pub fn rooks(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .map(|(c, &r)| (c + 1, r))
            .collect()
    }

    /// Pairs `(sw, ne)` with `sw` strictly southwest of `ne`.
    pub fn nesting_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        pairs(&self.rooks()).filter(|(a, b)| a.1 < b.1).collect()
    }

    /// Pairs `(nw, se)` with `se` southeast of `nw` and the square in the
    /// column of `se` and row of `nw` inside the board.
    pub fn crossing_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        pairs(&self.rooks())
            .filter(|(a, b)| a.1 > b.1 && self.board.contains(b.0, a.1))
            .collect()
    }
}

impl fmt::Display for RookPlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self
            .board
            .heights
            .iter()
            .map(|h| alloc::format!("{h}"))
            .collect();
        let r: Vec<String> = self
            .rooks()
            .iter()
            .map(|(c, r)| alloc::format!("({c},{r})"))
            .collect();
        write!(f, "heights={}; rooks={}", h.join(","), r.join(","))
    }
}

impl FromStr for RookPlacement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(alloc::format!("bad rook placement {s:?}"));
        let (h, r) = s.split_once(';').ok_or_else(bad)?;
        let h = h.trim().strip_prefix("heights=").ok_or_else(bad)?;
        let r = r.trim().strip_prefix("rooks=").ok_or_else(bad)?;
        let heights = h
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let mut rows = alloc::vec![0; heights.len()];
        let r = r.trim();
        if !r.is_empty() {
            let inner = r
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .ok_or_else(bad)?;
            for pair in inner.split("),(") {
                let (c, row) = pair.split_once(',').ok_or_else(bad)?;
                let c: usize = c.trim().parse().map_err(|_| bad())?;
                let row: usize = row.trim().parse().map_err(|_| bad())?;
                if c == 0 || c > rows.len() || rows[c - 1] != 0 {
                    return Err(Error::domain("need exactly one rook per column"));
                }
                rows[c - 1] = row;
            }
        }
        RookPlacement::new(FerrersBoard::new(heights)?, rows)
    }
}

/// Openers become columns and closers rows: the arc `(s, t)` puts a rook in
/// the column of the `s`-th border step and the row of the `t`-th.
pub fn matching_to_rook(m: &Matching) -> RookPlacement {
    let n = m.size();
    let partner = m.partners();
    let mut closer_rank = alloc::vec![0; 2 * n + 1];
    let mut heights = Vec::with_capacity(n);
    let mut rows = Vec::with_capacity(n);
    let mut closers = 0;
    for v in 1..=2 * n {
        if partner[v] < v {
            closers += 1;
            closer_rank[v] = closers;
        }
    }
    let mut closers_before = 0;
    for v in 1..=2 * n {
        if partner[v] < v {
            closers_before += 1;
        } else {
            heights.push(n - closers_before);
            rows.push(n + 1 - closer_rank[partner[v]]);
        }
    }
    RookPlacement {
        board: FerrersBoard { heights },
        rows,
    }
}

pub fn rook_to_matching(r: &RookPlacement) -> Result<Matching> {
    let n = r.size();
    let word = r.board.border()?;
    let mut opener_label = Vec::with_capacity(n);
    let mut closer_label = Vec::with_capacity(n);
    for (i, s) in word.steps().iter().enumerate() {
        match s {
            Step::U => opener_label.push(i + 1),
            Step::D => closer_label.push(i + 1),
        }
    }
    Matching::new(
        r.rows
            .iter()
            .enumerate()
            .map(|(c, &row)| (opener_label[c], closer_label[n - row]))
            .collect(),
    )
}

/// Occurrence of `sigma` among `k` rooks: columns `c_1 < ... < c_k` whose
/// rows have relative order `sigma`, inside a square subboard whose top
/// row reaches the last chosen column.
pub fn rook_avoids(r: &RookPlacement, sigma: &Permutation) -> bool {
    let k = sigma.len();
    let rooks = r.rooks();
    let cols: Vec<usize> = (0..rooks.len()).collect();
    let found = combinations(&cols, k).any(|sel| {
        let rows: Vec<usize> = sel.iter().map(|&c| rooks[c].1).collect();
        let top = rows.iter().copied().max().unwrap_or(0);
        let last_col = sel.last().map_or(0, |&c| rooks[c].0);
        (k == 0 || r.board.contains(last_col, top))
            && (0..k).all(|a| {
                (0..k).all(|b| (rows[a] < rows[b]) == (sigma.values()[a] < sigma.values()[b]))
            })
    });
    !found
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("valid pattern")
}

/// Marks the down-step of the row of the northeast rook of each nesting.
pub fn nesting_to_marked_path(r: &RookPlacement) -> Result<MarkedDyckPath> {
    if !(rook_avoids(r, &perm("123")) && rook_avoids(r, &perm("213"))) {
        return Err(Error::domain("placement contains 123 or 213"));
    }
    let path = r.board.border()?;
    let n = r.size();
    let downs: Vec<usize> = step_indices(&path, Step::D);
    let marks = r
        .nesting_pairs()
        .into_iter()
        .map(|(_, ne)| downs[n - ne.1])
        .collect();
    MarkedDyckPath::new(path, PathFlavor::DownNotGround, marks)
}

/// Rows top to bottom: an unmarked row takes the leftmost empty column, a
/// marked row the second leftmost.
pub fn marked_path_to_nesting(p: &MarkedDyckPath) -> Result<RookPlacement> {
    if p.flavor() != PathFlavor::DownNotGround {
        return Err(Error::domain("expected marks on down-steps"));
    }
    p.validate()
        .map_err(|v| Error::domain(alloc::format!("{v}")))?;
    let board = FerrersBoard::from_border(p.path());
    let n = board.columns();
    let mut rows = alloc::vec![0; n];
    for (q, d) in step_indices(p.path(), Step::D).into_iter().enumerate() {
        let skip = usize::from(p.marks().contains(&d));
        let col = (0..n)
            .filter(|&c| rows[c] == 0)
            .nth(skip)
            .expect("free column");
        rows[col] = n - q;
    }
    RookPlacement::new(board, rows)
}

/// Marks the up-step of the column of the southeast rook of each crossing.
pub fn crossing_to_marked_path(r: &RookPlacement) -> Result<MarkedDyckPath> {
    if !(rook_avoids(r, &perm("231")) && rook_avoids(r, &perm("321"))) {
        return Err(Error::domain("placement contains 231 or 321"));
    }
    let path = r.board.border()?;
    let ups = step_indices(&path, Step::U);
    let marks = r
        .crossing_pairs()
        .into_iter()
        .map(|(_, se)| ups[se.0 - 1])
        .collect();
    MarkedDyckPath::new(path, PathFlavor::UpNotGround, marks)
}

/// Columns right to left: an unmarked column takes the highest empty row
/// it reaches, a marked column the second highest.
pub fn marked_path_to_crossing(p: &MarkedDyckPath) -> Result<RookPlacement> {
    if p.flavor() != PathFlavor::UpNotGround {
        return Err(Error::domain("expected marks on up-steps"));
    }
    p.validate()
        .map_err(|v| Error::domain(alloc::format!("{v}")))?;
    let board = FerrersBoard::from_border(p.path());
    let n = board.columns();
    let ups = step_indices(p.path(), Step::U);
    let mut used = alloc::vec![false; n + 1];
    let mut rows = alloc::vec![0; n];
    for c in (0..n).rev() {
        let skip = usize::from(p.marks().contains(&ups[c]));
        let row = (1..=board.heights[c])
            .rev()
            .filter(|&r| !used[r])
            .nth(skip)
            .expect("free row");
        used[row] = true;
        rows[c] = row;
    }
    RookPlacement::new(board, rows)
}

fn step_indices(p: &DyckPath, which: Step) -> Vec<usize> {
    p.steps()
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == which)
        .map(|(i, _)| i)
        .collect()
}

/// The seven pattern pairs with a conjectured Borel-distributed statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AvoidancePair {
    P231_312,
    P132_213,
    P213_231,
    P132_312,
    P321_312,
    P213_312,
    P132_231,
}

impl AvoidancePair {
    pub const ALL: [AvoidancePair; 7] = [
        AvoidancePair::P231_312,
        AvoidancePair::P132_213,
        AvoidancePair::P213_231,
        AvoidancePair::P132_312,
        AvoidancePair::P321_312,
        AvoidancePair::P213_312,
        AvoidancePair::P132_231,
    ];

    pub fn names(self) -> (&'static str, &'static str) {
        match self {
            AvoidancePair::P231_312 => ("231", "312"),
            AvoidancePair::P132_213 => ("132", "213"),
            AvoidancePair::P213_231 => ("213", "231"),
            AvoidancePair::P132_312 => ("132", "312"),
            AvoidancePair::P321_312 => ("321", "312"),
            AvoidancePair::P213_312 => ("213", "312"),
            AvoidancePair::P132_231 => ("132", "231"),
        }
    }

    pub fn patterns(self) -> [Permutation; 2] {
        let (a, b) = self.names();
        [perm(a), perm(b)]
    }
}

impl fmt::Display for AvoidancePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.names();
        write!(f, "{a},{b}")
    }
}

impl FromStr for AvoidancePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(char::is_ascii_digit).collect();
        AvoidancePair::ALL
            .into_iter()
            .find(|p| {
                let (a, b) = p.names();
                norm == alloc::format!("{a}{b}") || norm == alloc::format!("{b}{a}")
            })
            .ok_or_else(|| Error::parse(alloc::format!("unknown pattern pair {s:?}")))
    }
}

/// Number of arcs `(i, j)` meeting the pair's condition, read literally.
pub fn pair_statistic(pair: AvoidancePair, m: &Matching) -> Result<usize> {
    if !pair.patterns().iter().all(|p| avoids_pattern(m, p)) {
        return Err(Error::domain(alloc::format!("{m} contains {{{pair}}}")));
    }
    let arcs = m.arcs();
    let partner = m.partners();
    let last = 2 * m.size();
    let any_arc = |f: &dyn Fn(usize, usize) -> bool| arcs.iter().any(|&(a, b)| f(a, b));
    let count = arcs
        .iter()
        .filter(|&&(i, j)| {
            let nested = any_arc(&|k, l| k < i && j < l);
            match pair {
                AvoidancePair::P231_312 => nested && !any_arc(&|r, s| r < i && i < s && s < j),
                AvoidancePair::P132_213 | AvoidancePair::P132_312 | AvoidancePair::P132_231 => {
                    nested
                }
                AvoidancePair::P213_231 => {
                    nested && i >= 2 && {
                        let r = partner[i - 1];
                        r > i - 1 && i < r && r < j
                    }
                }
                AvoidancePair::P321_312 => any_arc(&|k, l| i < k && k < j && j < l),
                AvoidancePair::P213_312 => {
                    nested && j < last && {
                        let r = partner[j + 1];
                        i < r && r < j
                    }
                }
            }
        })
        .count();
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn fig2() -> Matching {
        "1-5,2-3,4-10,6-8,7-9".parse().unwrap()
    }

    #[test]
    fn rook_of_the_example_matching() {
        let r = matching_to_rook(&fig2());
        assert_eq!(
            r.to_string(),
            "heights=5,5,4,3,3; rooks=(1,4),(2,5),(3,1),(4,3),(5,2)"
        );
        assert_eq!(rook_to_matching(&r).unwrap(), fig2());
        assert_eq!(r.to_string().parse::<RookPlacement>().unwrap(), r);
        let one: Matching = "1-2".parse().unwrap();
        assert_eq!(matching_to_rook(&one).to_string(), "heights=1; rooks=(1,1)");
    }

    #[test]
    fn nesting_and_crossing_counts() {
        let m: Matching = "1-4,2-3".parse().unwrap();
        assert_eq!((m.nestings(), m.crossings()), (1, 0));
        let m: Matching = "1-3,2-4".parse().unwrap();
        assert_eq!((m.nestings(), m.crossings()), (0, 1));
        assert_eq!((fig2().nestings(), fig2().crossings()), (3, 2));
        let r = matching_to_rook(&fig2());
        assert_eq!(r.nesting_pairs().len(), 3);
        assert_eq!(r.crossing_pairs().len(), 2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_matchings(2).len(), 3);
        assert_eq!(enumerate_matchings(5).len(), 945);
        let p = [perm("123"), perm("213")];
        assert_eq!(enumerate_avoiding(3, &p).len(), 13);
        assert_eq!(enumerate_matchings(0).len(), 1);
    }

    #[test]
    fn pattern_scans() {
        for m in enumerate_matchings(2) {
            assert!(avoids_pattern(&m, &perm("123")));
        }
        let m: Matching = "1-6,2-5,3-4".parse().unwrap();
        assert!(!avoids_pattern(&m, &perm("123")));
        assert!(avoids_pattern(&m, &perm("321")));
        let m: Matching = "1-4,2-5,3-6".parse().unwrap();
        assert!(!avoids_pattern(&m, &perm("321")));
        assert!(!rook_avoids(&matching_to_rook(&m), &perm("321")));
    }

    #[test]
    fn marked_path_bijections() {
        let staircase: RookPlacement = "heights=2,1; rooks=(1,2),(2,1)".parse().unwrap();
        assert_eq!(
            nesting_to_marked_path(&staircase).unwrap().to_string(),
            "UDUD []"
        );
        let p = MarkedDyckPath::parse("UUDD [1]", PathFlavor::UpNotGround).unwrap();
        let r = marked_path_to_crossing(&p).unwrap();
        assert_eq!(r.to_string(), "heights=2,2; rooks=(1,2),(2,1)");
        assert_eq!(crossing_to_marked_path(&r).unwrap(), p);
        let p = MarkedDyckPath::parse("UUDD [2]", PathFlavor::DownNotGround).unwrap();
        let r = marked_path_to_nesting(&p).unwrap();
        assert_eq!(r.to_string(), "heights=2,2; rooks=(1,1),(2,2)");
        assert_eq!(nesting_to_marked_path(&r).unwrap(), p);
    }

    #[test]
    fn pair_statistic_examples() {
        let m: Matching = "1-4,2-3".parse().unwrap();
        assert_eq!(pair_statistic(AvoidancePair::P132_213, &m).unwrap(), 1);
        let m: Matching = "1-2,3-4,5-6".parse().unwrap();
        assert_eq!(pair_statistic(AvoidancePair::P132_213, &m).unwrap(), 0);
        let m: Matching = "1-4,2-5,3-6".parse().unwrap();
        assert!(pair_statistic(AvoidancePair::P321_312, &m).is_err());
        assert_eq!(
            "312,231".parse::<AvoidancePair>().unwrap(),
            AvoidancePair::P231_312
        );
        assert_eq!(AvoidancePair::P213_312.to_string(), "213,312");
    }
}
