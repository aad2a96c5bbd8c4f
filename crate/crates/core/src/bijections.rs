//! Constructive bijections between the marked families, each with its
//! inverse.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::dumont::{decompose_unchecked, in_class, FirstBlock};
use crate::dyck::{DyckPath, PlaneForest, PlaneTree, Step};
use crate::marked::{MarkedBinaryTree, MarkedDyckPath, PathFlavor, TreeFlavor};
use crate::perm::{flatten, Permutation};
use crate::tree::{BinaryTree, Node};
use crate::{Error, Result};

/// Gives every node two children by hanging new leaves; returns the full
/// tree and the full-tree id of each original node. The empty tree stays
/// empty.
pub fn to_full_binary(t: &BinaryTree) -> (BinaryTree, Vec<usize>) {
    fn build(t: &BinaryTree, id: Option<usize>, nodes: &mut Vec<Node>, emb: &mut [usize]) -> usize {
        let me = nodes.len();
        nodes.push(Node {
            left: None,
            right: None,
        });
        if let Some(x) = id {
            emb[x] = me;
            let l = build(t, t.left(x), nodes, emb);
            let r = build(t, t.right(x), nodes, emb);
            nodes[me] = Node {
                left: Some(l),
                right: Some(r),
            };
        }
        me
    }
    let mut emb = alloc::vec![0; t.size()];
    if t.is_empty() {
        return (BinaryTree::empty(), emb);
    }
    let mut nodes = Vec::with_capacity(2 * t.size() + 1);
    build(t, t.root(), &mut nodes, &mut emb);
    (BinaryTree::from_nodes(nodes), emb)
}

/// Deletes every leaf of a full tree; returns the tree and, for each full
/// node id, its id in the result (`None` for deleted leaves).
pub fn strip_leaves(full: &BinaryTree) -> Result<(BinaryTree, Vec<Option<usize>>)> {
    if !full.is_full() {
        return Err(Error::domain("tree is not full"));
    }
    let mut map = alloc::vec![None; full.size()];
    let mut next = 0;
    for (id, slot) in map.iter_mut().enumerate() {
        if !full.is_leaf(id) {
            *slot = Some(next);
            next += 1;
        }
    }
    let nodes = (0..full.size())
        .filter(|&id| !full.is_leaf(id))
        .map(|id| Node {
            left: full.left(id).and_then(|c| map[c]),
            right: full.right(id).and_then(|c| map[c]),
        })
        .collect();
    Ok((BinaryTree::from_nodes(nodes), map))
}

/// Preorder word of a full tree, U for internal nodes and D for leaves,
/// without the final D of the rightmost leaf. Step `i` of the word is node
/// `i`.
pub fn full_binary_to_word(t: &BinaryTree) -> Result<DyckPath> {
    if !t.is_full() {
        return Err(Error::domain("tree is not full"));
    }
    let mut steps: Vec<Step> = (0..t.size())
        .map(|id| if t.is_leaf(id) { Step::D } else { Step::U })
        .collect();
    steps.pop();
    Ok(DyckPath::from_steps_unchecked(steps))
}

/// Inverse of [`full_binary_to_word`]; the empty path gives a single leaf.
pub fn word_to_full_binary(p: &DyckPath) -> BinaryTree {
    let mut letters: Vec<Step> = p.steps().to_vec();
    letters.push(Step::D);
    let mut nodes: Vec<Node> = Vec::with_capacity(letters.len());
    // Internal nodes still waiting for a right child.
    let mut open: Vec<usize> = Vec::new();
    for (id, s) in letters.iter().enumerate() {
        if id > 0 {
            let parent = id - 1;
            if nodes[parent].left.is_none() && letters[parent] == Step::U {
                nodes[parent].left = Some(id);
            } else {
                let p = open.pop().expect("well-formed word");
                nodes[p].right = Some(id);
            }
        }
        nodes.push(Node {
            left: None,
            right: None,
        });
        if *s == Step::U {
            open.push(id);
        }
    }
    BinaryTree::from_nodes(nodes)
}

/// Leaf-marked tree to Dyck path with marked UDD patterns: a marked leaf
/// becomes an internal node with two leaf children, whose letters are UDD.
pub fn leafmarked_to_uddpath(m: &MarkedBinaryTree) -> Result<MarkedDyckPath> {
    if m.flavor() != TreeFlavor::LeafMarked {
        return Err(Error::domain("expected a leaf-marked tree"));
    }
    m.validate()
        .map_err(|v| Error::domain(alloc::format!("{v}")))?;
    let (full, emb) = to_full_binary(m.tree());
    let path = full_binary_to_word(&full)?;
    let marks = m.marks().iter().map(|&x| emb[x]).collect();
    MarkedDyckPath::new(path, PathFlavor::UddPattern, marks)
}

pub fn uddpath_to_leafmarked(p: &MarkedDyckPath) -> Result<MarkedBinaryTree> {
    if p.flavor() != PathFlavor::UddPattern {
        return Err(Error::domain("expected a UDD-marked path"));
    }
    p.validate()
        .map_err(|v| Error::domain(alloc::format!("{v}")))?;
    let full = word_to_full_binary(p.path());
    let (tree, map) = strip_leaves(&full)?;
    let tree = if p.path().is_empty() {
        BinaryTree::empty()
    } else {
        tree
    };
    let marks = p
        .marks()
        .iter()
        .map(|&i| map[i].expect("UDD starts at an internal node"))
        .collect();
    MarkedBinaryTree::new(tree, TreeFlavor::LeafMarked, marks)
}

/// First child becomes the left child, next sibling the right child.
/// Forest and tree share preorder, so vertex `i` maps to node `i`.
pub fn forest_to_binary(f: &PlaneForest) -> BinaryTree {
    fn conv(trees: &[PlaneTree]) -> BinaryTree {
        match trees.split_first() {
            None => BinaryTree::empty(),
            Some((first, rest)) => BinaryTree::join(&conv(&first.children), &conv(rest)),
        }
    }
    conv(&f.trees)
}

pub fn binary_to_forest(t: &BinaryTree) -> PlaneForest {
    fn back(t: &BinaryTree, id: Option<usize>) -> Vec<PlaneTree> {
        let mut out = Vec::new();
        let mut cur = id;
        while let Some(x) = cur {
            out.push(PlaneTree {
                children: back(t, t.left(x)),
            });
            cur = t.right(x);
        }
        out
    }
    PlaneForest::new(back(t, t.root()))
}

/// Preorder ids of the component roots of `f`.
pub fn forest_roots(f: &PlaneForest) -> Vec<usize> {
    let mut at = 0;
    f.trees
        .iter()
        .map(|t| {
            let r = at;
            at += t.vertex_count();
            r
        })
        .collect()
}

/// Marks on non-root forest vertices become marks off the right spine.
pub fn marked_forest_to_binary(
    f: &PlaneForest,
    marks: &BTreeSet<usize>,
) -> Result<MarkedBinaryTree> {
    MarkedBinaryTree::new(
        forest_to_binary(f),
        TreeFlavor::RightSpineFree,
        marks.clone(),
    )
}

pub fn marked_binary_to_forest(m: &MarkedBinaryTree) -> Result<(PlaneForest, BTreeSet<usize>)> {
    m.validate()
        .map_err(|v| Error::domain(alloc::format!("{v}")))?;
    Ok((binary_to_forest(m.tree()), m.marks().clone()))
}

/// A marked path cut at each return to ground, marks re-based per factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveFactorization {
    pub factors: Vec<MarkedDyckPath>,
}

impl PrimitiveFactorization {
    pub fn concat(&self) -> MarkedDyckPath {
        let flavor = self
            .factors
            .first()
            .map_or(PathFlavor::DownNotGround, |f| f.flavor());
        let mut raw = Raw::default();
        for f in &self.factors {
            raw.append(&Raw::of(f));
        }
        raw.into_marked(flavor)
    }
}

pub fn primitive_factors(p: &MarkedDyckPath) -> PrimitiveFactorization {
    PrimitiveFactorization {
        factors: Raw::of(p)
            .factors()
            .into_iter()
            .map(|r| r.into_marked(p.flavor()))
            .collect(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Raw {
    steps: Vec<Step>,
    marks: BTreeSet<usize>,
}

impl Raw {
    fn of(p: &MarkedDyckPath) -> Raw {
        Raw {
            steps: p.path().steps().to_vec(),
            marks: p.marks().clone(),
        }
    }

    fn into_marked(self, flavor: PathFlavor) -> MarkedDyckPath {
        MarkedDyckPath::new_unchecked(
            DyckPath::from_steps_unchecked(self.steps),
            flavor,
            self.marks,
        )
    }

    fn len(&self) -> usize {
        self.steps.len()
    }

    fn slice(&self, r: core::ops::Range<usize>) -> Raw {
        Raw {
            steps: self.steps[r.clone()].to_vec(),
            marks: self.marks.range(r.clone()).map(|m| m - r.start).collect(),
        }
    }

    fn append(&mut self, other: &Raw) {
        let off = self.len();
        self.steps.extend_from_slice(&other.steps);
        self.marks.extend(other.marks.iter().map(|m| m + off));
    }

    fn lift(&self) -> Raw {
        let mut out = Raw {
            steps: alloc::vec![Step::U],
            marks: BTreeSet::new(),
        };
        out.append(self);
        out.steps.push(Step::D);
        out
    }

    /// End index of each step that returns to ground.
    fn returns(&self) -> Vec<usize> {
        let mut h = 0i64;
        let mut out = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if h == 0 {
                out.push(i);
            }
        }
        out
    }

    fn factors(&self) -> Vec<Raw> {
        let mut start = 0;
        self.returns()
            .into_iter()
            .map(|e| {
                let f = self.slice(start..e + 1);
                start = e + 1;
                f
            })
            .collect()
    }

    fn is_primitive(&self) -> bool {
        !self.steps.is_empty() && self.returns().len() == 1
    }

    /// Marked down-steps ending at height 1.
    fn level_one_marks(&self) -> Vec<usize> {
        let mut h = 0i64;
        let mut out = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            h += if *s == Step::U { 1 } else { -1 };
            if *s == Step::D && h == 1 && self.marks.contains(&i) {
                out.push(i);
            }
        }
        out
    }
}

fn sqcup_raw(p1: &Raw, p2: &Raw) -> Raw {
    let mut p1 = p1.clone();
    p1.marks.insert(p1.len() - 1);
    let factors = p2.factors();
    let (last, head) = factors.split_last().expect("nonempty operand");
    let mut out = Raw {
        steps: alloc::vec![Step::U],
        marks: BTreeSet::new(),
    };
    out.append(&p1);
    for (i, q) in head.iter().enumerate() {
        let mut q = q.clone();
        if i + 1 == head.len() {
            q.marks.insert(q.len() - 1);
        }
        out.append(&q);
    }
    out.append(&last.slice(1..last.len() - 1));
    out.steps.push(Step::D);
    out
}

/// Inverse of [`sqcup_raw`] on primitive paths with a level-1 mark: the
/// first level-1 mark closes P1, a second one closes the factor before the
/// last factor of P2.
fn sqcup_split_raw(p: &Raw) -> Option<(Raw, Raw)> {
    if !p.is_primitive() {
        return None;
    }
    let ones = p.level_one_marks();
    let e1 = *ones.first()?;
    let inner = p.slice(1..p.len() - 1);
    let mut p1 = inner.slice(0..e1);
    p1.marks.remove(&(p1.len() - 1));
    let (mut p2, r_start) = match ones.get(1) {
        Some(&e2) => {
            let mut q = inner.slice(e1..e2);
            q.marks.remove(&(q.len() - 1));
            (q, e2)
        }
        None => (Raw::default(), e1),
    };
    p2.append(&inner.slice(r_start..inner.len()).lift());
    Some((p1, p2))
}

fn check_down_flavor(p: &MarkedDyckPath) -> Result<()> {
    if p.flavor() != PathFlavor::DownNotGround {
        return Err(Error::domain("expected marks on down-steps"));
    }
    p.validate()
        .map_err(|v| Error::domain(alloc::format!("{v}")))
}

/// `U P1~ Q1 ... Q~_{j-1} R_j D` where `P1~` has its last down-step marked,
/// `P2 = Q1 ... Qj`, `Q~_{j-1}` has its last down-step marked when `j >= 2`
/// and `Qj = U R_j D`.
pub fn sqcup(p1: &MarkedDyckPath, p2: &MarkedDyckPath) -> Result<MarkedDyckPath> {
    check_down_flavor(p1)?;
    check_down_flavor(p2)?;
    if p1.path().is_empty() || p2.path().is_empty() {
        return Err(Error::domain("sqcup needs nonempty operands"));
    }
    Ok(sqcup_raw(&Raw::of(p1), &Raw::of(p2)).into_marked(PathFlavor::DownNotGround))
}

/// Recovers the operands of [`sqcup`]. Exact whenever the second operand is
/// either non-primitive or primitive without level-1 marks, which covers
/// every use inside [`rho`].
pub fn sqcup_split(p: &MarkedDyckPath) -> Result<(MarkedDyckPath, MarkedDyckPath)> {
    check_down_flavor(p)?;
    let (a, b) = sqcup_split_raw(&Raw::of(p))
        .ok_or_else(|| Error::domain("not a primitive path with a level-1 mark"))?;
    Ok((
        a.into_marked(PathFlavor::DownNotGround),
        b.into_marked(PathFlavor::DownNotGround),
    ))
}

/// How a permutation or marked path enters the recursion of [`rho`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoCase {
    Empty,
    /// `(2n) A_0 (2n-1)`; images are primitive with no level-1 marks.
    Lift,
    /// First block is a B block; images are not primitive.
    Juxtapose,
    /// First block is an A block; images are primitive with
    /// `level_one_marks >= 1`.
    Splice {
        level_one_marks: usize,
    },
}

/// Case of a class member, from its block decomposition. For `Splice`,
/// `level_one_marks` is 1 when π is `A_1 (2n) A_0 (2n-1)` and 2 otherwise.
pub fn rho_case_of_permutation(p: &Permutation) -> Result<RhoCase> {
    if p.is_empty() {
        return Ok(RhoCase::Empty);
    }
    let d = crate::dumont::block_decompose(p)?;
    Ok(match d.first_block() {
        FirstBlock::Top => RhoCase::Lift,
        FirstBlock::B(_) => RhoCase::Juxtapose,
        FirstBlock::A(1) if d.b_blocks[0].is_empty() => RhoCase::Splice { level_one_marks: 1 },
        FirstBlock::A(_) => RhoCase::Splice { level_one_marks: 2 },
    })
}

/// Case of a marked path read off its shape; `level_one_marks` is capped
/// at 2 to match [`rho_case_of_permutation`].
pub fn rho_case_of_path(p: &MarkedDyckPath) -> RhoCase {
    let raw = Raw::of(p);
    if raw.steps.is_empty() {
        RhoCase::Empty
    } else if !raw.is_primitive() {
        RhoCase::Juxtapose
    } else {
        match raw.level_one_marks().len() {
            0 => RhoCase::Lift,
            n => RhoCase::Splice {
                level_one_marks: n.min(2),
            },
        }
    }
}

fn rho_rec(v: &[usize]) -> Raw {
    if v.is_empty() {
        return Raw::default();
    }
    let pi = Permutation::from_vec_unchecked(v.to_vec());
    let d = decompose_unchecked(&pi);
    let flat = |w: &[usize]| flatten(w).expect("distinct entries");
    match d.first_block() {
        FirstBlock::Top => rho_rec(flat(&v[1..v.len() - 1]).values()).lift(),
        FirstBlock::B(i) => {
            let r = d.b_blocks[i].clone();
            let block = flat(&v[r.clone()]).complement();
            let rest: Vec<usize> = v[..r.start].iter().chain(&v[r.end..]).copied().collect();
            let mut out = rho_rec(block.values());
            out.append(&rho_rec(&rest));
            out
        }
        FirstBlock::A(i) => {
            let r = d.a_blocks[i].clone();
            let s1 = flat(&v[r.clone()]);
            let s2 = flat(&v[r.end..]);
            sqcup_raw(&rho_rec(s1.values()), &rho_rec(s2.values()))
        }
    }
}

/// The bijection from (2413, 3142)-avoiding Dumont permutations of length
/// 2n to Dyck paths of semilength n with marked down-steps off the ground.
pub fn rho(p: &Permutation) -> Result<MarkedDyckPath> {
    if !in_class(p) {
        return Err(Error::domain(alloc::format!(
            "{p} is not a (2413, 3142)-avoiding Dumont permutation"
        )));
    }
    Ok(rho_rec(p.values()).into_marked(PathFlavor::DownNotGround))
}

fn rho_inverse_rec(p: &Raw) -> Vec<usize> {
    let len = p.len();
    if len == 0 {
        return Vec::new();
    }
    if !p.is_primitive() {
        let returns = p.returns();
        let cut = returns[returns.len() - 2] + 1;
        let head = rho_inverse_rec(&p.slice(0..cut));
        let mut out: Vec<usize> = head.iter().map(|&x| len + 1 - x).collect();
        out.extend(rho_inverse_rec(&p.slice(cut..len)));
        return out;
    }
    match sqcup_split_raw(p) {
        None => {
            let mut out = alloc::vec![len];
            out.extend(rho_inverse_rec(&p.slice(1..len - 1)));
            out.push(len - 1);
            out
        }
        Some((p1, p2)) => {
            let mut out = rho_inverse_rec(&p1);
            let shift = out.len();
            out.extend(rho_inverse_rec(&p2).into_iter().map(|x| x + shift));
            out
        }
    }
}

pub fn rho_inverse(p: &MarkedDyckPath) -> Result<Permutation> {
    check_down_flavor(p)?;
    Ok(Permutation::from_vec_unchecked(rho_inverse_rec(&Raw::of(
        p,
    ))))
}
