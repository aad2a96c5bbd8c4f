//! Dyck paths, plane forests and nondecreasing parking functions, with the
//! statistics whose distributions are the rows of Catalan's triangle.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use num_bigint::BigUint;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// A balanced U/D word whose every prefix has at least as many U's as D's.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h < 0 {
                return Err(Error::domain(alloc::format!(
                    "path goes below ground after step {i}"
                )));
            }
        }
        if h != 0 {
            return Err(Error::domain("path does not end at ground level"));
        }
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath { steps }
    }

    pub fn empty() -> Self {
        Self::default()
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

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// `heights()[i]` is the height after step `i`.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.steps
            .iter()
            .map(|s| {
                match s {
                    Step::U => h += 1,
                    Step::D => h -= 1,
                }
                h
            })
            .collect()
    }

    /// Height of the lower endpoint of every step: the start of a U, the end
    /// of a D. A step is at ground level iff its level is 0.
    pub fn levels(&self) -> Vec<usize> {
        let mut h = 0usize;
        self.steps
            .iter()
            .map(|s| match s {
                Step::U => {
                    h += 1;
                    h - 1
                }
                Step::D => {
                    h -= 1;
                    h
                }
            })
            .collect()
    }

    /// Touches ground only at its two endpoints (the empty path is not
    /// primitive).
    pub fn is_primitive(&self) -> bool {
        let heights = self.heights();
        !heights.is_empty() && heights[..heights.len() - 1].iter().all(|&h| h > 0)
    }

    /// Splits after every return to ground.
    pub fn primitive_factors(&self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, h) in self.heights().into_iter().enumerate() {
            if h == 0 {
                out.push(DyckPath {
                    steps: self.steps[start..=i].to_vec(),
                });
                start = i + 1;
            }
        }
        out
    }

    pub fn concat(parts: &[&DyckPath]) -> DyckPath {
        DyckPath {
            steps: parts.iter().flat_map(|p| p.steps.iter().copied()).collect(),
        }
    }

    /// `U self D`.
    pub fn lift(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.len() + 2);
        steps.push(Step::U);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::D);
        DyckPath { steps }
    }

    /// Index of the first step of the maximal terminal run of D's.
    pub fn last_run_start(&self) -> usize {
        let n = self.steps.len();
        n - self
            .steps
            .iter()
            .rev()
            .take_while(|s| **s == Step::D)
            .count()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                _ => Err(Error::parse(alloc::format!("unexpected step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// Dyck paths of one semilength in lexicographic order with `U < D`.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    semilength: usize,
    next: Option<Vec<Step>>,
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let current = self.next.take()?;
        self.next = successor(&current, self.semilength);
        Some(DyckPath { steps: current })
    }
}

fn successor(steps: &[Step], n: usize) -> Option<Vec<Step>> {
    // Rightmost U that can become D: it must start above ground.
    let mut height_before = vec![0usize; steps.len()];
    let mut ups_before = vec![0usize; steps.len()];
    let (mut h, mut ups) = (0usize, 0usize);
    for (i, s) in steps.iter().enumerate() {
        height_before[i] = h;
        ups_before[i] = ups;
        match s {
            Step::U => {
                h += 1;
                ups += 1;
            }
            Step::D => h -= 1,
        }
    }
    let i = (0..steps.len())
        .rev()
        .find(|&i| steps[i] == Step::U && height_before[i] >= 1)?;
    let mut out = steps[..i].to_vec();
    out.push(Step::D);
    let remaining_ups = n - ups_before[i];
    out.extend(core::iter::repeat_n(Step::U, remaining_ups));
    out.resize(2 * n, Step::D);
    Some(out)
}

/// All `catalan_number(n)` Dyck paths of semilength `n`, lexicographically.
pub fn enumerate_dyck(n: usize) -> DyckPaths {
    let mut first = vec![Step::U; n];
    first.resize(2 * n, Step::D);
    DyckPaths {
        semilength: n,
        next: Some(first),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DyckStat {
    UpNotGround,
    DownNotGround,
    Returns,
    FirstPeakHeight,
    LastPeakHeight,
    LastRunLength,
}

impl FromStr for DyckStat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "up_not_ground" | "up-not-ground" => DyckStat::UpNotGround,
            "down_not_ground" | "down-not-ground" => DyckStat::DownNotGround,
            "returns" => DyckStat::Returns,
            "first_peak_height" | "first-peak-height" => DyckStat::FirstPeakHeight,
            "last_peak_height" | "last-peak-height" => DyckStat::LastPeakHeight,
            "last_run_length" | "last-run-length" => DyckStat::LastRunLength,
            _ => return Err(Error::parse(alloc::format!("unknown Dyck statistic {s:?}"))),
        })
    }
}

pub fn dyck_statistic(p: &DyckPath, stat: DyckStat) -> Result<usize> {
    let steps = p.steps();
    let levels = p.levels();
    let count = |dir: Step, pred: fn(usize) -> bool| {
        steps
            .iter()
            .zip(&levels)
            .filter(|(s, l)| **s == dir && pred(**l))
            .count()
    };
    let peak_heights = || {
        let heights = p.heights();
        (0..steps.len().saturating_sub(1))
            .filter(|&i| steps[i] == Step::U && steps[i + 1] == Step::D)
            .map(move |i| heights[i])
    };
    Ok(match stat {
        DyckStat::UpNotGround => count(Step::U, |l| l >= 1),
        DyckStat::DownNotGround => count(Step::D, |l| l >= 1),
        DyckStat::Returns => count(Step::D, |l| l == 0),
        DyckStat::FirstPeakHeight => peak_heights()
            .next()
            .ok_or_else(|| Error::domain("empty path has no peak"))?,
        DyckStat::LastPeakHeight => peak_heights()
            .next_back()
            .ok_or_else(|| Error::domain("empty path has no peak"))?,
        DyckStat::LastRunLength => steps.len() - p.last_run_start(),
    })
}

/// Number of east/north lattice paths from `(0,0)` to `(n,k)` that never go
/// above `y = x`, by exhaustive depth-first walk.
pub fn count_ballot_paths(n: usize, k: usize) -> Result<BigUint> {
    if k > n {
        return Err(Error::domain(alloc::format!("k = {k} exceeds n = {n}")));
    }
    fn walk(x: usize, y: usize, n: usize, k: usize) -> u64 {
        if x == n && y == k {
            return 1;
        }
        let mut total = 0;
        if x < n {
            total += walk(x + 1, y, n, k);
        }
        if y < k && y < x {
            total += walk(x, y + 1, n, k);
        }
        total
    }
    Ok(BigUint::from(walk(0, 0, n, k)))
}

/// A rooted ordered tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        Self::default()
    }

    pub fn with_children(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(PlaneTree::vertex_count)
            .sum::<usize>()
    }

    fn push_word(&self, out: &mut Vec<Step>) {
        out.push(Step::U);
        for c in &self.children {
            c.push_word(out);
        }
        out.push(Step::D);
    }
}

/// An ordered sequence of plane trees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PlaneForest {
    pub trees: Vec<PlaneTree>,
}

impl PlaneForest {
    pub fn new(trees: Vec<PlaneTree>) -> Self {
        PlaneForest { trees }
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.iter().map(PlaneTree::vertex_count).sum()
    }

    pub fn components(&self) -> usize {
        self.trees.len()
    }

    /// Each tree becomes `U (children) D`; components become primitive
    /// factors, so the component count is the number of returns.
    pub fn to_dyck(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * self.vertex_count());
        for t in &self.trees {
            t.push_word(&mut steps);
        }
        DyckPath { steps }
    }

    pub fn from_dyck(p: &DyckPath) -> PlaneForest {
        // Stack of open vertices' child lists; the bottom collects roots.
        let mut stack: Vec<Vec<PlaneTree>> = vec![Vec::new()];
        for s in p.steps() {
            match s {
                Step::U => stack.push(Vec::new()),
                Step::D => {
                    let children = stack.pop().expect("balanced word");
                    stack
                        .last_mut()
                        .expect("balanced word")
                        .push(PlaneTree { children });
                }
            }
        }
        PlaneForest {
            trees: stack.pop().unwrap_or_default(),
        }
    }
}

impl fmt::Display for PlaneForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_dyck().fmt(f)
    }
}

impl FromStr for PlaneForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(PlaneForest::from_dyck(&s.parse()?))
    }
}

/// All plane forests on `v` vertices, in lexicographic order of their Dyck
/// encodings.
pub fn enumerate_plane_forests(v: usize) -> impl Iterator<Item = PlaneForest> {
    enumerate_dyck(v).map(|p| PlaneForest::from_dyck(&p))
}

/// A nondecreasing sequence `a_1 <= ... <= a_m` with `a_i <= i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NondecParkingFunction {
    entries: Vec<usize>,
}

impl NondecParkingFunction {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        for (i, &a) in entries.iter().enumerate() {
            if a == 0 || a > i + 1 {
                return Err(Error::domain(alloc::format!(
                    "entry {a} at position {} violates 1 <= a_i <= i",
                    i + 1
                )));
            }
            if i > 0 && a < entries[i - 1] {
                return Err(Error::domain("entries are not nondecreasing"));
            }
        }
        Ok(NondecParkingFunction { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for NondecParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.iter().all(|&a| a <= 9) {
            for a in &self.entries {
                write!(f, "{a}")?;
            }
        } else {
            let parts: Vec<String> = self.entries.iter().map(|a| alloc::format!("{a}")).collect();
            f.write_str(&parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for NondecParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let entries = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(alloc::format!("bad entry {p:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(alloc::format!("bad digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        NondecParkingFunction::new(entries)
    }
}

/// Nondecreasing parking functions of length `m` in lexicographic order.
pub fn enumerate_ndpf(m: usize) -> impl Iterator<Item = NondecParkingFunction> {
    fn extend(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<NondecParkingFunction>) {
        let i = prefix.len();
        if i == m {
            out.push(NondecParkingFunction {
                entries: prefix.clone(),
            });
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for a in lo..=i + 1 {
            prefix.push(a);
            extend(prefix, m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(m), m, &mut out);
    out.into_iter()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NdpfStat {
    MaxElement,
    UnluckyCount,
    OnesCount,
}

impl FromStr for NdpfStat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "max_element" | "max-element" => NdpfStat::MaxElement,
            "unlucky_count" | "unlucky-count" => NdpfStat::UnluckyCount,
            "ones_count" | "ones-count" => NdpfStat::OnesCount,
            _ => return Err(Error::parse(alloc::format!("unknown ndpf statistic {s:?}"))),
        })
    }
}

pub fn ndpf_statistic(f: &NondecParkingFunction, stat: NdpfStat) -> usize {
    let e = f.entries();
    match stat {
        NdpfStat::MaxElement => e.last().copied().unwrap_or(0),
        NdpfStat::UnluckyCount => e.iter().enumerate().filter(|(i, &a)| a != i + 1).count(),
        NdpfStat::OnesCount => e.iter().filter(|&&a| a == 1).count(),
    }
}
