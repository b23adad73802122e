//! Ordered (plane) rooted trees graded by their downdegree type.
//!
//! Trees serialize in bracket form: a leaf is `()`, an internal node is `(`
//! followed by its children and `)`. A marked leaf is written `*`.
//!
//! Nodes are addressed by [`NodeId`], the sequence of child indices on the
//! path from the root.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::series::{BigCount, TypeVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("cannot parse {input:?} at byte {position}: {reason}")]
    Parse { input: String, position: usize, reason: &'static str },
    #[error("the single-node tree has no internal node")]
    TrivialTree,
    #[error("a composed node needs at least one child")]
    ZeroArity,
    #[error("mark {mark} is not an initial leaf (only {limit} available)")]
    InvalidMark { mark: usize, limit: usize },
    #[error("not a Lukasiewicz word: {0:?}")]
    InvalidWord(Vec<usize>),
}

/// Path of child indices from the root; the root is the empty path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeId(Vec<usize>);

impl NodeId {
    pub fn root() -> Self {
        NodeId(Vec::new())
    }

    pub fn from_path(path: Vec<usize>) -> Self {
        NodeId(path)
    }

    pub fn path(&self) -> &[usize] {
        &self.0
    }

    pub fn child(&self, i: usize) -> Self {
        let mut p = self.0.clone();
        p.push(i);
        NodeId(p)
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for i in &self.0 {
            write!(f, ".{i}")?;
        }
        Ok(())
    }
}

/// A rooted tree whose children are ordered left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> Self {
        OrderedTree { children: Vec::new() }
    }

    /// Joins the given trees under a new root, in order.
    pub fn node(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    /// A node with `n` leaf children.
    pub fn claw(n: usize) -> Self {
        OrderedTree { children: vec![OrderedTree::leaf(); n] }
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn degree(&self) -> usize {
        self.children.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn is_clawed(&self) -> bool {
        !self.is_leaf() && self.children.iter().all(OrderedTree::is_leaf)
    }

    pub fn get(&self, id: &NodeId) -> Option<&OrderedTree> {
        id.path().iter().try_fold(self, |t, &i| t.children.get(i))
    }

    fn get_mut(&mut self, id: &NodeId) -> Option<&mut OrderedTree> {
        id.path().iter().try_fold(self, |t, &i| t.children.get_mut(i))
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(OrderedTree::node_count).sum::<usize>()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(OrderedTree::leaf_count).sum()
        }
    }

    /// Downdegree type: `m_n` is the number of nodes with exactly `n` children.
    pub fn tree_type(&self) -> TypeVector {
        let mut counts = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            let d = t.degree();
            if d > 0 {
                if counts.len() < d {
                    counts.resize(d, 0);
                }
                counts[d - 1] += 1;
            }
            stack.extend(t.children.iter());
        }
        TypeVector::new(counts)
    }

    /// Preorder sequence of node degrees.
    pub fn lukasiewicz_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.node_count());
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            word.push(t.degree());
            stack.extend(t.children.iter().rev());
        }
        word
    }

    pub fn from_lukasiewicz(word: &[usize]) -> Result<Self, TreeError> {
        fn build(word: &[usize], pos: &mut usize) -> Option<OrderedTree> {
            let d = *word.get(*pos)?;
            *pos += 1;
            let children = (0..d).map(|_| build(word, pos)).collect::<Option<Vec<_>>>()?;
            Some(OrderedTree { children })
        }
        let mut pos = 0;
        match build(word, &mut pos) {
            Some(t) if pos == word.len() => Ok(t),
            _ => Err(TreeError::InvalidWord(word.to_vec())),
        }
    }

    /// Post-order: children left to right, then the node itself.
    pub fn post_order(&self) -> Vec<NodeId> {
        fn go(t: &OrderedTree, path: &mut Vec<usize>, out: &mut Vec<NodeId>) {
            for (i, c) in t.children.iter().enumerate() {
                path.push(i);
                go(c, path, out);
                path.pop();
            }
            out.push(NodeId(path.clone()));
        }
        let mut out = Vec::with_capacity(self.node_count());
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Leaves in post-order (equivalently, left to right).
    pub fn post_order_leaves(&self) -> Vec<NodeId> {
        self.post_order().into_iter().filter(|id| self.get(id).is_some_and(OrderedTree::is_leaf)).collect()
    }

    /// Internal nodes all of whose children are leaves, in post-order.
    pub fn clawed_nodes(&self) -> Vec<NodeId> {
        self.post_order().into_iter().filter(|id| self.get(id).is_some_and(OrderedTree::is_clawed)).collect()
    }

    /// Number of leaves visited before the first internal node in post-order.
    pub fn count_initial_leaves(&self) -> usize {
        let mut t = self;
        let mut count = 0;
        // The first internal node in post-order is reached by repeatedly
        // descending into the first non-leaf child.
        loop {
            match t.children.iter().position(|c| !c.is_leaf()) {
                Some(i) => {
                    count += i;
                    t = &t.children[i];
                }
                None => {
                    return count + t.degree().max(1);
                }
            }
        }
    }

    fn write_bracket(
        &self,
        f: &mut impl fmt::Write,
        mark: Option<usize>,
        leaf_index: &mut usize,
    ) -> fmt::Result {
        if self.is_leaf() {
            let is_mark = mark == Some(*leaf_index);
            *leaf_index += 1;
            return f.write_str(if is_mark { "*" } else { "()" });
        }
        f.write_char('(')?;
        for c in &self.children {
            c.write_bracket(f, mark, leaf_index)?;
        }
        f.write_char(')')
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_bracket(f, None, &mut 0)
    }
}

/// Result of the bracket parser: the tree and the leaf index of `*`, if any.
fn parse_bracket(input: &str, allow_mark: bool) -> Result<(OrderedTree, Option<usize>), TreeError> {
    struct Parser<'a> {
        input: &'a str,
        bytes: &'a [u8],
        pos: usize,
        leaves: usize,
        mark: Option<usize>,
        allow_mark: bool,
    }
    impl Parser<'_> {
        fn err(&self, reason: &'static str) -> TreeError {
            TreeError::Parse { input: self.input.to_string(), position: self.pos, reason }
        }
        fn node(&mut self) -> Result<OrderedTree, TreeError> {
            match self.bytes.get(self.pos) {
                Some(b'*') => {
                    if !self.allow_mark {
                        return Err(self.err("unexpected mark"));
                    }
                    if self.mark.is_some() {
                        return Err(self.err("more than one mark"));
                    }
                    self.mark = Some(self.leaves);
                    self.leaves += 1;
                    self.pos += 1;
                    Ok(OrderedTree::leaf())
                }
                Some(b'(') => {
                    self.pos += 1;
                    let mut children = Vec::new();
                    loop {
                        match self.bytes.get(self.pos) {
                            Some(b')') => {
                                self.pos += 1;
                                break;
                            }
                            Some(b'(') | Some(b'*') => children.push(self.node()?),
                            Some(_) => return Err(self.err("unexpected character")),
                            None => return Err(self.err("unterminated node")),
                        }
                    }
                    if children.is_empty() {
                        self.leaves += 1;
                    }
                    Ok(OrderedTree { children })
                }
                Some(_) => Err(self.err("expected '('")),
                None => Err(self.err("empty input")),
            }
        }
    }
    let trimmed = input.trim();
    let mut p = Parser { input, bytes: trimmed.as_bytes(), pos: 0, leaves: 0, mark: None, allow_mark };
    let tree = p.node()?;
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok((tree, p.mark))
}

impl FromStr for OrderedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bracket(s, false).map(|(t, _)| t)
    }
}

/// An ordered tree with one marked leaf among its initial leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedTree {
    tree: OrderedTree,
    mark: usize,
}

impl MarkedTree {
    /// `mark` indexes the post-order leaf sequence and must be below
    /// [`OrderedTree::count_initial_leaves`].
    pub fn new(tree: OrderedTree, mark: usize) -> Result<Self, TreeError> {
        let limit = tree.count_initial_leaves();
        if mark >= limit {
            return Err(TreeError::InvalidMark { mark, limit });
        }
        Ok(MarkedTree { tree, mark })
    }

    pub fn tree(&self) -> &OrderedTree {
        &self.tree
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    pub fn marked_leaf(&self) -> NodeId {
        self.tree.post_order_leaves().swap_remove(self.mark)
    }

    pub fn tree_type(&self) -> TypeVector {
        self.tree.tree_type()
    }
}

impl fmt::Display for MarkedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.write_bracket(f, Some(self.mark), &mut 0)
    }
}

impl FromStr for MarkedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse_bracket(s, true)? {
            (tree, Some(mark)) => MarkedTree::new(tree, mark),
            (_, None) => Err(TreeError::Parse { input: s.to_string(), position: 0, reason: "missing mark" }),
        }
    }
}

/// Every ordered tree of type `m`, each once, in lexicographic order of
/// Łukasiewicz words.
pub fn enumerate_trees(m: &TypeVector) -> Vec<OrderedTree> {
    // remaining[d] = unused nodes of degree d
    let mut remaining: Vec<usize> =
        std::iter::once(m.leaf_count()).chain(m.entries().iter().copied()).collect();
    let total = m.node_count();
    let mut word = Vec::with_capacity(total);
    let mut out = Vec::new();

    fn go(
        remaining: &mut [usize],
        open: usize,
        total: usize,
        word: &mut Vec<usize>,
        out: &mut Vec<OrderedTree>,
    ) {
        if word.len() == total {
            debug_assert_eq!(open, 0);
            out.push(OrderedTree::from_lukasiewicz(word).expect("valid word"));
            return;
        }
        for d in 0..remaining.len() {
            if remaining[d] == 0 {
                continue;
            }
            let next_open = open - 1 + d;
            let last = word.len() + 1 == total;
            if next_open == 0 && !last {
                continue;
            }
            remaining[d] -= 1;
            word.push(d);
            go(remaining, next_open, total, word, out);
            word.pop();
            remaining[d] += 1;
        }
    }

    go(&mut remaining, 1, total, &mut word, &mut out);
    out
}

/// All marked trees of type `m`, grouped by tree in [`enumerate_trees`] order.
pub fn enumerate_marked_trees(m: &TypeVector) -> Vec<MarkedTree> {
    enumerate_trees(m)
        .into_iter()
        .flat_map(|t| {
            let k = t.count_initial_leaves();
            (0..k).map(move |mark| MarkedTree { tree: t.clone(), mark })
        })
        .collect()
}

/// `L_m`: total number of initial leaves over all trees of type `m`.
pub fn count_marked_trees(m: &TypeVector) -> BigCount {
    enumerate_trees(m).iter().map(|t| BigCount::from(t.count_initial_leaves())).sum()
}

/// Removes the leaves of the first clawed node in post-order and marks it.
///
/// Returns the number of removed leaves and the marked tree, whose type is
/// `tree_type(t) - e_n`.
pub fn decompose_tree(t: &OrderedTree) -> Result<(usize, MarkedTree), TreeError> {
    let order = t.post_order();
    let v = order
        .into_iter()
        .find(|id| !t.get(id).expect("id from traversal").is_leaf())
        .ok_or(TreeError::TrivialTree)?;
    let mut reduced = t.clone();
    let node = reduced.get_mut(&v).expect("id from traversal");
    let n = node.degree();
    debug_assert!(node.is_clawed());
    node.children.clear();
    let mark = reduced.post_order_leaves().iter().position(|id| *id == v).expect("v is now a leaf");
    let marked = MarkedTree::new(reduced, mark)?;
    Ok((n, marked))
}

/// Inverse of [`decompose_tree`]: gives the marked leaf `n` leaf children.
pub fn compose_tree(n: usize, marked: &MarkedTree) -> Result<OrderedTree, TreeError> {
    if n == 0 {
        return Err(TreeError::ZeroArity);
    }
    let leaf = marked.marked_leaf();
    let mut t = marked.tree.clone();
    *t.get_mut(&leaf).expect("marked leaf exists") = OrderedTree::claw(n);
    Ok(t)
}

/// Splits off the subtrees rooted at the root's children.
pub fn root_decompose(t: &OrderedTree) -> Result<Vec<OrderedTree>, TreeError> {
    if t.is_leaf() {
        return Err(TreeError::TrivialTree);
    }
    Ok(t.children.clone())
}

/// Inverse of [`root_decompose`].
pub fn root_join(children: Vec<OrderedTree>) -> Result<OrderedTree, TreeError> {
    if children.is_empty() {
        return Err(TreeError::ZeroArity);
    }
    Ok(OrderedTree::node(children))
}
