//! Marked Dyck paths and marked binary trees.
//!
//! Path marks are 0-based step indices; a marked UDD pattern is recorded by
//! the index of its U. Tree marks are preorder node ids.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;

use crate::dyck::{enumerate_dyck, DyckPath, Step};
use crate::tree::{enumerate_binary_trees, BinaryTree};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathFlavor {
    /// Down-steps whose lower endpoint is above ground.
    DownNotGround,
    /// Up-steps whose lower endpoint is above ground.
    UpNotGround,
    /// UDD factors disjoint from the last run of down-steps.
    UddPattern,
}

impl core::str::FromStr for PathFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "down" | "down_not_ground" | "down-not-ground" => PathFlavor::DownNotGround,
            "up" | "up_not_ground" | "up-not-ground" => PathFlavor::UpNotGround,
            "udd" | "udd_pattern" | "udd-pattern" => PathFlavor::UddPattern,
            _ => return Err(Error::parse(alloc::format!("unknown path flavor {s:?}"))),
        })
    }
}

/// The first violated invariant of a marked structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Offending mark (step index or node id).
    pub mark: usize,
    pub reason: &'static str,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mark {})", self.reason, self.mark)
    }
}

/// Legal mark positions of `p` under `flavor`.
pub fn markable_positions(p: &DyckPath, flavor: PathFlavor) -> BTreeSet<usize> {
    let steps = p.steps();
    match flavor {
        PathFlavor::DownNotGround | PathFlavor::UpNotGround => {
            let dir = if flavor == PathFlavor::DownNotGround {
                Step::D
            } else {
                Step::U
            };
            p.levels()
                .into_iter()
                .enumerate()
                .filter(|&(i, l)| steps[i] == dir && l >= 1)
                .map(|(i, _)| i)
                .collect()
        }
        PathFlavor::UddPattern => {
            let last_run = p.last_run_start();
            (0..steps.len().saturating_sub(2))
                .filter(|&i| {
                    steps[i] == Step::U
                        && steps[i + 1] == Step::D
                        && steps[i + 2] == Step::D
                        && i + 2 < last_run
                })
                .collect()
        }
    }
}

fn path_violation(p: &DyckPath, flavor: PathFlavor, mark: usize) -> Option<&'static str> {
    let steps = p.steps();
    if mark >= steps.len() {
        return Some("mark index out of range");
    }
    match flavor {
        PathFlavor::DownNotGround | PathFlavor::UpNotGround => {
            let dir = if flavor == PathFlavor::DownNotGround {
                Step::D
            } else {
                Step::U
            };
            if steps[mark] != dir {
                return Some(if dir == Step::D {
                    "mark is not a down-step"
                } else {
                    "mark is not an up-step"
                });
            }
            if p.levels()[mark] == 0 {
                return Some("mark at ground level");
            }
            None
        }
        PathFlavor::UddPattern => {
            let is_udd = mark + 2 < steps.len()
                && steps[mark] == Step::U
                && steps[mark + 1] == Step::D
                && steps[mark + 2] == Step::D;
            if !is_udd {
                Some("mark is not the U of a UDD factor")
            } else if mark + 2 >= p.last_run_start() {
                Some("marked UDD pattern meets the last run of down-steps")
            } else {
                None
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedDyckPath {
    path: DyckPath,
    flavor: PathFlavor,
    marks: BTreeSet<usize>,
}

impl MarkedDyckPath {
    pub fn new(path: DyckPath, flavor: PathFlavor, marks: BTreeSet<usize>) -> Result<Self> {
        let m = MarkedDyckPath {
            path,
            flavor,
            marks,
        };
        match m.validate() {
            Ok(()) => Ok(m),
            Err(v) => Err(Error::domain(alloc::format!("{v}"))),
        }
    }

    pub(crate) fn new_unchecked(
        path: DyckPath,
        flavor: PathFlavor,
        marks: BTreeSet<usize>,
    ) -> Self {
        MarkedDyckPath {
            path,
            flavor,
            marks,
        }
    }

    pub fn unmarked(path: DyckPath, flavor: PathFlavor) -> Self {
        Self::new_unchecked(path, flavor, BTreeSet::new())
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn flavor(&self) -> PathFlavor {
        self.flavor
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    pub fn semilength(&self) -> usize {
        self.path.semilength()
    }

    pub fn into_parts(self) -> (DyckPath, BTreeSet<usize>) {
        (self.path, self.marks)
    }

    /// Checks every mark against the flavor's rule, reporting the first
    /// (lowest-index) offender.
    pub fn validate(&self) -> core::result::Result<(), Violation> {
        for &m in &self.marks {
            if let Some(reason) = path_violation(&self.path, self.flavor, m) {
                return Err(Violation { mark: m, reason });
            }
        }
        Ok(())
    }

    /// Parses `UUDD [2]`; the bracketed list may be omitted when empty.
    pub fn parse(s: &str, flavor: PathFlavor) -> Result<Self> {
        let s = s.trim();
        let (word, marks) = match s.find('[') {
            None => (s, BTreeSet::new()),
            Some(open) => {
                let close = s
                    .rfind(']')
                    .filter(|&c| c > open && s[c + 1..].trim().is_empty())
                    .ok_or_else(|| Error::parse("unterminated mark list"))?;
                let marks = parse_index_list(&s[open + 1..close])?;
                (s[..open].trim(), marks)
            }
        };
        MarkedDyckPath::new(word.parse()?, flavor, marks)
    }
}

pub(crate) fn parse_index_list(s: &str) -> Result<BTreeSet<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(BTreeSet::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(alloc::format!("bad mark index {p:?}")))
        })
        .collect()
}

impl fmt::Display for MarkedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let marks: Vec<String> = self.marks.iter().map(|m| alloc::format!("{m}")).collect();
        write!(f, "{} [{}]", self.path, marks.join(","))
    }
}

/// Every subset of `items`, by bitmask order.
fn subsets(items: &[usize]) -> impl Iterator<Item = BTreeSet<usize>> + '_ {
    assert!(items.len() < 64, "too many markable positions");
    (0u64..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &i)| i)
            .collect()
    })
}

/// Every `k`-subset of `items` in lexicographic order of positions.
fn k_subsets(items: &[usize], k: usize) -> Vec<BTreeSet<usize>> {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Every marked path of semilength `n`: each path in lexicographic order
/// paired with every subset of its markable positions.
pub fn enumerate_marked_dyck(n: usize, flavor: PathFlavor) -> impl Iterator<Item = MarkedDyckPath> {
    enumerate_dyck(n).flat_map(move |p| {
        let positions: Vec<usize> = markable_positions(&p, flavor).into_iter().collect();
        let all: Vec<BTreeSet<usize>> = subsets(&positions).collect();
        all.into_iter()
            .map(move |marks| MarkedDyckPath::new_unchecked(p.clone(), flavor, marks))
    })
}

/// Exhaustive count of Dyck paths of the given semilength with exactly `k`
/// marked UDD patterns.
pub fn count_udd_marked(semilength: usize, k: usize) -> BigUint {
    enumerate_dyck(semilength)
        .map(|p| {
            let m = markable_positions(&p, PathFlavor::UddPattern).len();
            crate::triangles::binomial(m as u64, k as u64)
        })
        .sum()
}

/// The marked paths themselves behind [`count_udd_marked`].
pub fn enumerate_udd_marked(semilength: usize, k: usize) -> impl Iterator<Item = MarkedDyckPath> {
    enumerate_dyck(semilength).flat_map(move |p| {
        let positions: Vec<usize> = markable_positions(&p, PathFlavor::UddPattern)
            .into_iter()
            .collect();
        k_subsets(&positions, k).into_iter().map(move |marks| {
            MarkedDyckPath::new_unchecked(p.clone(), PathFlavor::UddPattern, marks)
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeFlavor {
    /// Marked leaves, never the rightmost one; marks add to the vertex count.
    LeafMarked,
    /// Marked branching vertices; marks add to the vertex count.
    BranchMarked,
    /// Marks anywhere off the right spine; the vertex count is fixed.
    RightSpineFree,
}

impl core::str::FromStr for TreeFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "leaf" | "leaf_marked" | "leaf-marked" => TreeFlavor::LeafMarked,
            "branch" | "branch_marked" | "branch-marked" => TreeFlavor::BranchMarked,
            "spine" | "right_spine_free" | "right-spine-free" => TreeFlavor::RightSpineFree,
            _ => return Err(Error::parse(alloc::format!("unknown tree flavor {s:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedBinaryTree {
    tree: BinaryTree,
    flavor: TreeFlavor,
    marks: BTreeSet<usize>,
}

fn tree_violation(t: &BinaryTree, flavor: TreeFlavor, mark: usize) -> Option<&'static str> {
    if mark >= t.size() {
        return Some("mark refers to no vertex");
    }
    match flavor {
        TreeFlavor::LeafMarked => {
            if !t.is_leaf(mark) {
                Some("mark is not a leaf")
            } else if t.rightmost_leaf() == Some(mark) {
                Some("rightmost leaf is marked")
            } else {
                None
            }
        }
        TreeFlavor::BranchMarked => {
            (!t.is_branching(mark)).then_some("mark is not a branching vertex")
        }
        TreeFlavor::RightSpineFree => t
            .right_spine()
            .contains(&mark)
            .then_some("mark on the right spine"),
    }
}

impl MarkedBinaryTree {
    pub fn new(tree: BinaryTree, flavor: TreeFlavor, marks: BTreeSet<usize>) -> Result<Self> {
        let m = MarkedBinaryTree {
            tree,
            flavor,
            marks,
        };
        match m.validate() {
            Ok(()) => Ok(m),
            Err(v) => Err(Error::domain(alloc::format!("{v}"))),
        }
    }

    pub(crate) fn new_unchecked(
        tree: BinaryTree,
        flavor: TreeFlavor,
        marks: BTreeSet<usize>,
    ) -> Self {
        MarkedBinaryTree {
            tree,
            flavor,
            marks,
        }
    }

    pub fn tree(&self) -> &BinaryTree {
        &self.tree
    }

    pub fn flavor(&self) -> TreeFlavor {
        self.flavor
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    pub fn unmarked_count(&self) -> usize {
        self.tree.size() - self.marks.len()
    }

    pub fn validate(&self) -> core::result::Result<(), Violation> {
        for &m in &self.marks {
            if let Some(reason) = tree_violation(&self.tree, self.flavor, m) {
                return Err(Violation { mark: m, reason });
            }
        }
        Ok(())
    }

    pub fn parse(s: &str, flavor: TreeFlavor) -> Result<Self> {
        let (tree, marks) = BinaryTree::parse_marked(s)?;
        MarkedBinaryTree::new(tree, flavor, marks)
    }
}

impl fmt::Display for MarkedBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.write_marked(f, &self.marks)
    }
}

/// Every marked tree of the given flavor.
///
/// For `LeafMarked` and `BranchMarked`, `budget` is the number of unmarked
/// vertices and trees with `k` marks have `budget + k` vertices. For
/// `RightSpineFree`, `budget` is the total number of vertices.
pub fn enumerate_marked_trees(flavor: TreeFlavor, budget: usize) -> Vec<MarkedBinaryTree> {
    let mut out = Vec::new();
    match flavor {
        TreeFlavor::LeafMarked | TreeFlavor::BranchMarked => {
            // k marks need k + 1 leaves among budget + k vertices, so
            // k <= budget - 1.
            let max_k = budget.saturating_sub(1);
            for k in 0..=max_k {
                for t in enumerate_binary_trees(budget + k) {
                    let candidates: Vec<usize> = match flavor {
                        TreeFlavor::LeafMarked => {
                            let mut leaves = t.leaves();
                            leaves.pop();
                            leaves
                        }
                        _ => t.branching_vertices(),
                    };
                    for marks in k_subsets(&candidates, k) {
                        out.push(MarkedBinaryTree::new_unchecked(t.clone(), flavor, marks));
                    }
                }
            }
        }
        TreeFlavor::RightSpineFree => {
            for t in enumerate_binary_trees(budget) {
                let spine = t.right_spine();
                let candidates: Vec<usize> = (0..t.size()).filter(|i| !spine.contains(i)).collect();
                for marks in subsets(&candidates) {
                    out.push(MarkedBinaryTree::new_unchecked(t.clone(), flavor, marks));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::histogram::Histogram;
    use alloc::string::ToString;
    use alloc::vec;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn markable_examples() {
        assert_eq!(
            markable_positions(&path("UUDD"), PathFlavor::DownNotGround),
            set(&[2])
        );
        assert!(markable_positions(&path("UDUDUD"), PathFlavor::DownNotGround).is_empty());
        assert_eq!(
            markable_positions(&path("UUDDUD"), PathFlavor::UddPattern),
            set(&[1])
        );
        assert_eq!(
            markable_positions(&path("UUDD"), PathFlavor::UpNotGround),
            set(&[1])
        );
        // The only UDD of UUDD touches the last run.
        assert!(markable_positions(&path("UUDD"), PathFlavor::UddPattern).is_empty());
    }

    #[test]
    fn distinct_udd_marks_never_share_a_step() {
        for n in 1..=8 {
            for p in enumerate_dyck(n) {
                let m: Vec<usize> = markable_positions(&p, PathFlavor::UddPattern)
                    .into_iter()
                    .collect();
                assert!(m.windows(2).all(|w| w[1] >= w[0] + 3));
            }
        }
    }

    #[test]
    fn validation_messages() {
        let m = MarkedDyckPath::new_unchecked(path("UDUD"), PathFlavor::DownNotGround, set(&[1]));
        assert_eq!(m.validate().unwrap_err().reason, "mark at ground level");
        let m = MarkedDyckPath::new_unchecked(path("UUDD"), PathFlavor::DownNotGround, set(&[2]));
        assert!(m.validate().is_ok());
        let m = MarkedDyckPath::new_unchecked(path("UUDD"), PathFlavor::DownNotGround, set(&[1]));
        assert_eq!(m.validate().unwrap_err().reason, "mark is not a down-step");
        let t: BinaryTree = "((..)(..))".parse().unwrap();
        let bad = MarkedBinaryTree::new_unchecked(t.clone(), TreeFlavor::LeafMarked, set(&[2]));
        assert_eq!(
            bad.validate().unwrap_err().reason,
            "rightmost leaf is marked"
        );
        let ok = MarkedBinaryTree::new_unchecked(t.clone(), TreeFlavor::LeafMarked, set(&[1]));
        assert!(ok.validate().is_ok());
        let bad = MarkedBinaryTree::new_unchecked(t, TreeFlavor::RightSpineFree, set(&[0]));
        assert_eq!(
            bad.validate().unwrap_err().reason,
            "mark on the right spine"
        );
    }

    #[test]
    fn text_forms() {
        let m = MarkedDyckPath::parse("UUDD [2]", PathFlavor::DownNotGround).unwrap();
        assert_eq!(m.to_string(), "UUDD [2]");
        let m = MarkedDyckPath::parse("UUDUDD", PathFlavor::DownNotGround).unwrap();
        assert_eq!(m.to_string(), "UUDUDD []");
        assert!(MarkedDyckPath::parse("UDUD [1]", PathFlavor::DownNotGround).is_err());
        assert!(MarkedDyckPath::parse("UUDD [2", PathFlavor::DownNotGround).is_err());
        let t = MarkedBinaryTree::parse("((..)*(..))", TreeFlavor::LeafMarked).unwrap();
        assert_eq!(t.to_string(), "((..)*(..))");
        assert_eq!(t.unmarked_count(), 2);
    }

    #[test]
    fn marked_dyck_examples() {
        let two: Vec<String> = enumerate_marked_dyck(2, PathFlavor::DownNotGround)
            .map(|m| m.to_string())
            .collect();
        assert_eq!(two, ["UUDD []", "UUDD [2]", "UDUD []"]);
        assert_eq!(
            enumerate_marked_dyck(1, PathFlavor::DownNotGround).count(),
            1
        );
        let k1 = enumerate_marked_dyck(3, PathFlavor::UpNotGround)
            .filter(|m| m.marks().len() == 1)
            .count();
        assert_eq!(k1, 6);
    }

    #[test]
    fn udd_examples() {
        assert_eq!(count_udd_marked(4, 0), BigUint::from(14u8));
        assert_eq!(count_udd_marked(4, 1), BigUint::from(6u8));
        assert_eq!(count_udd_marked(5, 2), BigUint::from(2u8));
        assert_eq!(enumerate_udd_marked(5, 2).count(), 2);
    }

    #[test]
    fn marked_tree_examples() {
        let hist = |flavor, budget| -> Vec<(usize, u64)> {
            let h: Histogram = enumerate_marked_trees(flavor, budget)
                .iter()
                .map(|m| m.marks().len())
                .collect();
            h.iter().collect()
        };
        assert_eq!(hist(TreeFlavor::LeafMarked, 2), vec![(0, 2), (1, 1)]);
        assert_eq!(
            hist(TreeFlavor::BranchMarked, 3),
            vec![(0, 5), (1, 6), (2, 2)]
        );
        assert_eq!(
            hist(TreeFlavor::RightSpineFree, 4),
            vec![(0, 14), (1, 28), (2, 20), (3, 5)]
        );
        for flavor in [
            TreeFlavor::LeafMarked,
            TreeFlavor::BranchMarked,
            TreeFlavor::RightSpineFree,
        ] {
            for m in enumerate_marked_trees(flavor, 4) {
                assert!(m.validate().is_ok(), "{m}");
            }
        }
    }

    #[test]
    fn empty_budget_gives_empty_tree() {
        let all = enumerate_marked_trees(TreeFlavor::LeafMarked, 0);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_string(), ".");
        assert_eq!(
            markable_positions(&DyckPath::empty(), PathFlavor::UddPattern),
            BTreeSet::new()
        );
    }
}
