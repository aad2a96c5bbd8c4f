//! Plane binary trees stored as preorder-indexed arenas.
//!
//! Node identifiers are preorder positions, so two trees are equal exactly
//! when they have the same shape, and mark sets keyed by node id are stable
//! across serialization.
//!
//! Text form: the empty tree is `.`, a node is `(` left right `)`; a `*`
//! after the closing parenthesis marks the node, e.g. `((..)*.)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub left: Option<usize>,
    pub right: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryTree {
    nodes: Vec<Node>,
}

impl BinaryTree {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Nodes must already be in preorder with valid child ids.
    pub(crate) fn from_nodes(nodes: Vec<Node>) -> Self {
        BinaryTree { nodes }
    }

    pub fn leaf() -> Self {
        BinaryTree::join(&BinaryTree::empty(), &BinaryTree::empty())
    }

    /// A new root with the given (possibly empty) subtrees.
    pub fn join(left: &BinaryTree, right: &BinaryTree) -> Self {
        let mut nodes = Vec::with_capacity(1 + left.size() + right.size());
        let l_off = 1;
        let r_off = 1 + left.size();
        nodes.push(Node {
            left: (!left.is_empty()).then_some(l_off),
            right: (!right.is_empty()).then_some(r_off),
        });
        let shift = |n: &Node, off: usize| Node {
            left: n.left.map(|i| i + off),
            right: n.right.map(|i| i + off),
        };
        nodes.extend(left.nodes.iter().map(|n| shift(n, l_off)));
        nodes.extend(right.nodes.iter().map(|n| shift(n, r_off)));
        BinaryTree { nodes }
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        (!self.is_empty()).then_some(0)
    }

    pub fn node(&self, id: usize) -> Node {
        self.nodes[id]
    }

    pub fn left(&self, id: usize) -> Option<usize> {
        self.nodes[id].left
    }

    pub fn right(&self, id: usize) -> Option<usize> {
        self.nodes[id].right
    }

    pub fn is_leaf(&self, id: usize) -> bool {
        let n = self.nodes[id];
        n.left.is_none() && n.right.is_none()
    }

    pub fn is_branching(&self, id: usize) -> bool {
        let n = self.nodes[id];
        n.left.is_some() && n.right.is_some()
    }

    /// Every node has zero or two children.
    pub fn is_full(&self) -> bool {
        (0..self.size()).all(|i| self.is_leaf(i) || self.is_branching(i))
    }

    /// Leaves in preorder.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.is_leaf(i)).collect()
    }

    pub fn branching_vertices(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| self.is_branching(i)).collect()
    }

    /// Last leaf in preorder.
    pub fn rightmost_leaf(&self) -> Option<usize> {
        (0..self.size()).rev().find(|&i| self.is_leaf(i))
    }

    /// The root and every node reached from it by right edges only.
    pub fn right_spine(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.root();
        while let Some(i) = cur {
            out.push(i);
            cur = self.right(i);
        }
        out
    }

    /// Preorder id range covered by the subtree rooted at `id`.
    pub fn subtree_range(&self, id: usize) -> core::ops::Range<usize> {
        let mut end = id + 1;
        let mut stack = vec![id];
        while let Some(i) = stack.pop() {
            end = end.max(i + 1);
            let n = self.nodes[i];
            stack.extend(n.left);
            stack.extend(n.right);
        }
        id..end
    }

    pub fn subtree(&self, id: Option<usize>) -> BinaryTree {
        match id {
            None => BinaryTree::empty(),
            Some(id) => {
                let range = self.subtree_range(id);
                let shift = |o: Option<usize>| o.map(|i| i - id);
                BinaryTree {
                    nodes: self.nodes[range]
                        .iter()
                        .map(|n| Node {
                            left: shift(n.left),
                            right: shift(n.right),
                        })
                        .collect(),
                }
            }
        }
    }

    /// Writes the text form, appending `*` to every node in `marks`.
    pub fn write_marked(&self, f: &mut impl fmt::Write, marks: &BTreeSet<usize>) -> fmt::Result {
        fn go(
            t: &BinaryTree,
            id: Option<usize>,
            marks: &BTreeSet<usize>,
            f: &mut impl fmt::Write,
        ) -> fmt::Result {
            match id {
                None => f.write_char('.'),
                Some(i) => {
                    f.write_char('(')?;
                    go(t, t.left(i), marks, f)?;
                    go(t, t.right(i), marks, f)?;
                    f.write_char(')')?;
                    if marks.contains(&i) {
                        f.write_char('*')?;
                    }
                    Ok(())
                }
            }
        }
        go(self, self.root(), marks, f)
    }

    /// Parses the text form, returning the tree and the ids of `*` nodes.
    pub fn parse_marked(s: &str) -> Result<(BinaryTree, BTreeSet<usize>)> {
        struct Parser<'a> {
            chars: core::iter::Peekable<core::str::Chars<'a>>,
            nodes: Vec<Node>,
            marks: BTreeSet<usize>,
        }
        impl Parser<'_> {
            fn next_token(&mut self) -> Option<char> {
                while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                    self.chars.next();
                }
                self.chars.next()
            }
            fn peek_token(&mut self) -> Option<char> {
                while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
                    self.chars.next();
                }
                self.chars.peek().copied()
            }
            fn tree(&mut self) -> Result<Option<usize>> {
                match self.next_token() {
                    Some('.') => Ok(None),
                    Some('(') => {
                        let id = self.nodes.len();
                        self.nodes.push(Node {
                            left: None,
                            right: None,
                        });
                        let left = self.tree()?;
                        let right = self.tree()?;
                        if self.next_token() != Some(')') {
                            return Err(Error::parse("expected ')'"));
                        }
                        if self.peek_token() == Some('*') {
                            self.chars.next();
                            self.marks.insert(id);
                        }
                        self.nodes[id] = Node { left, right };
                        Ok(Some(id))
                    }
                    Some(c) => Err(Error::parse(alloc::format!("unexpected {c:?} in tree"))),
                    None => Err(Error::parse("unexpected end of tree")),
                }
            }
        }
        let mut p = Parser {
            chars: s.chars().peekable(),
            nodes: Vec::new(),
            marks: BTreeSet::new(),
        };
        p.tree()?;
        if let Some(c) = p.next_token() {
            return Err(Error::parse(alloc::format!("trailing {c:?} after tree")));
        }
        Ok((BinaryTree { nodes: p.nodes }, p.marks))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_marked(f, &BTreeSet::new())
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (t, marks) = BinaryTree::parse_marked(s)?;
        if !marks.is_empty() {
            return Err(Error::parse("unmarked tree expected"));
        }
        Ok(t)
    }
}

/// All binary trees on `v` vertices, ordered by left-subtree size and then
/// recursively.
pub fn enumerate_binary_trees(v: usize) -> impl Iterator<Item = BinaryTree> {
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::empty()]];
    for m in 1..=v {
        let mut level = Vec::new();
        for l in 0..m {
            for left in &by_size[l] {
                for right in &by_size[m - 1 - l] {
                    level.push(BinaryTree::join(left, right));
                }
            }
        }
        by_size.push(level);
    }
    by_size.swap_remove(v).into_iter()
}
