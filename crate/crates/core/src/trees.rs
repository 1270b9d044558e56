//! Binary trees: shapes, labeled trees, BST and sylvester insertion,
//! bracketed expressions, and the covers of the lattice of binary trees and
//! of the reflected bracket tree.
//!
//! Text format: `-` is the empty tree, `(L,R)` a node with subtrees `L`
//! and `R`; labeled nodes are written `(L a R)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("operation needs a nonempty tree")]
    EmptyTree,
    #[error("syntax error at byte {pos} in `{text}`")]
    Syntax { text: String, pos: usize },
}

/// An unlabeled plane binary tree.
///
/// Trees of one size are ordered by decreasing left-subtree size, then
/// recursively by left subtree and right subtree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Empty,
    Node { size: usize, left: Box<BinaryTree>, right: Box<BinaryTree> },
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        BinaryTree::Node { size: left.size() + right.size() + 1, left: Box::new(left), right: Box::new(right) }
    }

    pub fn leaf() -> BinaryTree {
        BinaryTree::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node { size, .. } => *size,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node { left, right, .. } => Some((left, right)),
        }
    }

    /// Number of right steps from the root to the rightmost node.
    pub fn right_spine_depth(&self) -> Option<usize> {
        let (_, mut right) = self.children()?;
        let mut depth = 0;
        while let Some((_, r)) = right.children() {
            depth += 1;
            right = r;
        }
        Some(depth)
    }

    /// All trees with `n` nodes, in canonical order.
    pub fn all_of_size(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Empty]];
        for m in 1..=n {
            let mut trees = Vec::new();
            for left_size in (0..m).rev() {
                for l in &table[left_size] {
                    for r in &table[m - 1 - left_size] {
                        trees.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            table.push(trees);
        }
        table.swap_remove(n)
    }

    /// Left chain of `n` nodes.
    pub fn left_comb(n: usize) -> BinaryTree {
        (0..n).fold(BinaryTree::Empty, |t, _| BinaryTree::node(t, BinaryTree::Empty))
    }

    /// Right chain of `n` nodes.
    pub fn right_comb(n: usize) -> BinaryTree {
        (0..n).fold(BinaryTree::Empty, |t, _| BinaryTree::node(BinaryTree::Empty, t))
    }
}

impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BinaryTree::Empty, BinaryTree::Empty) => Ordering::Equal,
            (BinaryTree::Empty, _) => Ordering::Less,
            (_, BinaryTree::Empty) => Ordering::Greater,
            (
                BinaryTree::Node { size: sa, left: la, right: ra },
                BinaryTree::Node { size: sb, left: lb, right: rb },
            ) => sa.cmp(sb).then_with(|| lb.size().cmp(&la.size())).then_with(|| la.cmp(lb)).then_with(|| ra.cmp(rb)),
        }
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => write!(f, "-"),
            BinaryTree::Node { left, right, .. } => write!(f, "({left},{right})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser::new(s);
        let t = parser.shape()?;
        parser.finish()?;
        Ok(t)
    }
}

impl Serialize for BinaryTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A binary tree with a positive label on every node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LabeledBinaryTree {
    Empty,
    Node { label: u32, left: Box<LabeledBinaryTree>, right: Box<LabeledBinaryTree> },
}

impl LabeledBinaryTree {
    pub fn node(label: u32, left: LabeledBinaryTree, right: LabeledBinaryTree) -> Self {
        LabeledBinaryTree::Node { label, left: Box::new(left), right: Box::new(right) }
    }

    pub fn leaf(label: u32) -> Self {
        Self::node(label, LabeledBinaryTree::Empty, LabeledBinaryTree::Empty)
    }

    pub fn label(&self) -> Option<u32> {
        match self {
            LabeledBinaryTree::Empty => None,
            LabeledBinaryTree::Node { label, .. } => Some(*label),
        }
    }

    pub fn shape(&self) -> BinaryTree {
        match self {
            LabeledBinaryTree::Empty => BinaryTree::Empty,
            LabeledBinaryTree::Node { left, right, .. } => BinaryTree::node(left.shape(), right.shape()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            LabeledBinaryTree::Empty => 0,
            LabeledBinaryTree::Node { left, right, .. } => 1 + left.size() + right.size(),
        }
    }

    /// Labels in infix order.
    pub fn infix(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.walk_infix(&mut out);
        out
    }

    fn walk_infix(&self, out: &mut Vec<u32>) {
        if let LabeledBinaryTree::Node { label, left, right } = self {
            left.walk_infix(out);
            out.push(*label);
            right.walk_infix(out);
        }
    }

    /// Left subtree labels < node label < right subtree labels everywhere.
    pub fn is_binary_search_tree(&self) -> bool {
        self.infix().windows(2).all(|w| w[0] < w[1])
    }

    /// Every node's label is smaller than all labels below it.
    pub fn is_increasing(&self) -> bool {
        self.heap_ordered(|parent, child| parent < child)
    }

    /// Every node's label is greater than all labels below it.
    pub fn is_decreasing(&self) -> bool {
        self.heap_ordered(|parent, child| parent > child)
    }

    fn heap_ordered(&self, ok: fn(u32, u32) -> bool) -> bool {
        match self {
            LabeledBinaryTree::Empty => true,
            LabeledBinaryTree::Node { label, left, right } => {
                [left, right].iter().all(|child| child.label().is_none_or(|c| ok(*label, c)) && child.heap_ordered(ok))
            }
        }
    }

    /// Leaf insertion of `label` as in a binary search tree.
    pub fn bst_insert(&self, value: u32) -> LabeledBinaryTree {
        self.bst_insert_recording(value).0
    }

    /// Inserts `value` and returns the path (`false` = left) to the new node.
    fn bst_insert_recording(&self, value: u32) -> (LabeledBinaryTree, Vec<bool>) {
        let mut path = Vec::new();
        let t = self.insert_at(value, &mut path);
        (t, path)
    }

    fn insert_at(&self, value: u32, path: &mut Vec<bool>) -> LabeledBinaryTree {
        match self {
            LabeledBinaryTree::Empty => LabeledBinaryTree::leaf(value),
            LabeledBinaryTree::Node { label, left, right } => {
                if value < *label {
                    path.push(false);
                    Self::node(*label, left.insert_at(value, path), (**right).clone())
                } else {
                    path.push(true);
                    Self::node(*label, (**left).clone(), right.insert_at(value, path))
                }
            }
        }
    }

    /// Places a new leaf labeled `label` at the end of `path`, which must
    /// lead to an empty slot.
    fn graft(&self, path: &[bool], label: u32) -> LabeledBinaryTree {
        match (self, path.split_first()) {
            (LabeledBinaryTree::Empty, None) => LabeledBinaryTree::leaf(label),
            (LabeledBinaryTree::Node { label: l, left, right }, Some((&go_right, rest))) => {
                if go_right {
                    Self::node(*l, (**left).clone(), right.graft(rest, label))
                } else {
                    Self::node(*l, left.graft(rest, label), (**right).clone())
                }
            }
            _ => panic!("graft path does not end at an empty slot"),
        }
    }
}

impl fmt::Display for LabeledBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabeledBinaryTree::Empty => write!(f, "-"),
            LabeledBinaryTree::Node { label, left, right } => write!(f, "({left} {label} {right})"),
        }
    }
}

impl FromStr for LabeledBinaryTree {
    type Err = TreeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser::new(s);
        let t = parser.labeled()?;
        parser.finish()?;
        Ok(t)
    }
}

/// JSON: `null` or `{"label":k,"left":...,"right":...}`.
#[derive(Serialize, Deserialize)]
struct LabeledRepr {
    label: u32,
    left: Option<Box<LabeledRepr>>,
    right: Option<Box<LabeledRepr>>,
}

impl LabeledBinaryTree {
    fn to_repr(&self) -> Option<Box<LabeledRepr>> {
        match self {
            LabeledBinaryTree::Empty => None,
            LabeledBinaryTree::Node { label, left, right } => {
                Some(Box::new(LabeledRepr { label: *label, left: left.to_repr(), right: right.to_repr() }))
            }
        }
    }

    fn from_repr(repr: Option<Box<LabeledRepr>>) -> Self {
        match repr {
            None => LabeledBinaryTree::Empty,
            Some(r) => Self::node(r.label, Self::from_repr(r.left), Self::from_repr(r.right)),
        }
    }
}

impl Serialize for LabeledBinaryTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LabeledBinaryTree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Self::from_repr(Option::<Box<LabeledRepr>>::deserialize(deserializer)?))
    }
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text, bytes: text.as_bytes(), pos: 0 }
    }

    fn error(&self) -> TreeError {
        TreeError::Syntax { text: self.text.to_string(), pos: self.pos }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> Result<(), TreeError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn finish(&mut self) -> Result<(), TreeError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error()),
        }
    }

    fn shape(&mut self) -> Result<BinaryTree, TreeError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(BinaryTree::Empty)
            }
            Some(b'(') => {
                self.pos += 1;
                let l = self.shape()?;
                self.eat(b',')?;
                let r = self.shape()?;
                self.eat(b')')?;
                Ok(BinaryTree::node(l, r))
            }
            _ => Err(self.error()),
        }
    }

    fn labeled(&mut self) -> Result<LabeledBinaryTree, TreeError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(LabeledBinaryTree::Empty)
            }
            Some(b'(') => {
                self.pos += 1;
                let l = self.labeled()?;
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let label: u32 = self.text[start..self.pos].parse().map_err(|_| self.error())?;
                let r = self.labeled()?;
                self.eat(b')')?;
                Ok(LabeledBinaryTree::node(label, l, r))
            }
            _ => Err(self.error()),
        }
    }
}

/// Reading order for BST insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    /// Classical binary search tree insertion; recording tree is increasing.
    LeftToRight,
    /// Sylvester insertion; recording tree is decreasing.
    RightToLeft,
}

/// BST insertion of the letters of `p` in the given reading order.
///
/// Returns the insertion tree and a recording tree of the same shape whose
/// nodes carry the position in `p` of the letter inserted there.
pub fn bst_insert(p: &Permutation, reading: Reading) -> (LabeledBinaryTree, LabeledBinaryTree) {
    let positions: Vec<usize> = match reading {
        Reading::LeftToRight => (1..=p.len()).collect(),
        Reading::RightToLeft => (1..=p.len()).rev().collect(),
    };
    let mut insertion = LabeledBinaryTree::Empty;
    let mut recording = LabeledBinaryTree::Empty;
    for i in positions {
        let (t, path) = insertion.bst_insert_recording(p.at(i));
        recording = recording.graft(&path, i as u32);
        insertion = t;
    }
    (insertion, recording)
}

/// A fully parenthesized non-associative product of atoms `x1, x2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BracketedExpression {
    Atom(usize),
    Product(Box<BracketedExpression>, Box<BracketedExpression>),
}

impl BracketedExpression {
    pub fn atom_count(&self) -> usize {
        match self {
            BracketedExpression::Atom(_) => 1,
            BracketedExpression::Product(a, b) => a.atom_count() + b.atom_count(),
        }
    }

    /// Inverse of [`tree_to_bracketed_expression`]. Fails unless the atoms
    /// read `x1, x2, ...` left to right.
    pub fn to_tree(&self) -> Option<BinaryTree> {
        let mut next = 1;
        let t = self.to_tree_from(&mut next)?;
        Some(t)
    }

    fn to_tree_from(&self, next: &mut usize) -> Option<BinaryTree> {
        match self {
            BracketedExpression::Atom(i) => (*i == *next).then(|| {
                *next += 1;
                BinaryTree::Empty
            }),
            BracketedExpression::Product(a, b) => {
                let right = a.to_tree_from(next)?;
                let left = b.to_tree_from(next)?;
                Some(BinaryTree::node(left, right))
            }
        }
    }

    fn write_factor(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketedExpression::Atom(i) => write!(f, "x{}", subscript(*i)),
            BracketedExpression::Product(a, b) => {
                write!(f, "(")?;
                a.write_factor(f)?;
                b.write_factor(f)?;
                write!(f, ")")
            }
        }
    }
}

fn subscript(i: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    i.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Outermost product is written without brackets: `(x₁x₂)((x₃x₄)x₅)`.
impl fmt::Display for BracketedExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketedExpression::Atom(_) => self.write_factor(f),
            BracketedExpression::Product(a, b) => {
                a.write_factor(f)?;
                b.write_factor(f)
            }
        }
    }
}

impl FromStr for BracketedExpression {
    type Err = TreeError;

    /// Accepts subscript or ASCII digits (`(x1x2)x3`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap(),
                other => other,
            })
            .collect();
        let err = |pos| TreeError::Syntax { text: s.to_string(), pos };
        let chars: Vec<char> = normalized.chars().collect();
        let mut pos = 0;
        let factors = parse_factors(&chars, &mut pos).ok_or_else(|| err(pos))?;
        if pos != chars.len() {
            return Err(err(pos));
        }
        match <[BracketedExpression; 2]>::try_from(factors) {
            Ok([a, b]) => Ok(BracketedExpression::Product(Box::new(a), Box::new(b))),
            Err(mut v) if v.len() == 1 && matches!(v[0], BracketedExpression::Atom(_)) => Ok(v.remove(0)),
            Err(_) => Err(err(0)),
        }
    }
}

fn parse_factors(chars: &[char], pos: &mut usize) -> Option<Vec<BracketedExpression>> {
    let mut out = Vec::new();
    while let Some(&c) = chars.get(*pos) {
        match c {
            'x' => {
                *pos += 1;
                let start = *pos;
                while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                    *pos += 1;
                }
                let n: String = chars[start..*pos].iter().collect();
                out.push(BracketedExpression::Atom(n.parse().ok()?));
            }
            '(' => {
                *pos += 1;
                let inner = parse_factors(chars, pos)?;
                if chars.get(*pos) != Some(&')') {
                    return None;
                }
                *pos += 1;
                let [a, b] = <[BracketedExpression; 2]>::try_from(inner).ok()?;
                out.push(BracketedExpression::Product(Box::new(a), Box::new(b)));
            }
            _ => break,
        }
    }
    Some(out)
}

/// Completes `t` with leaves, numbers the leaves right to left, and reads
/// the product right subtree first.
pub fn tree_to_bracketed_expression(t: &BinaryTree) -> BracketedExpression {
    fn go(t: &BinaryTree, next: &mut usize) -> BracketedExpression {
        match t.children() {
            None => {
                let atom = BracketedExpression::Atom(*next);
                *next += 1;
                atom
            }
            Some((l, r)) => {
                let a = go(r, next);
                let b = go(l, next);
                BracketedExpression::Product(Box::new(a), Box::new(b))
            }
        }
    }
    go(t, &mut 1)
}

/// Up-neighbors in the lattice of binary trees: one node attached at any
/// empty child slot. There are exactly `size + 1` of them.
pub fn lattice_covers(t: &BinaryTree) -> BTreeSet<BinaryTree> {
    fn go(t: &BinaryTree) -> Vec<BinaryTree> {
        match t.children() {
            None => vec![BinaryTree::leaf()],
            Some((l, r)) => {
                let mut out: Vec<BinaryTree> = go(l).into_iter().map(|nl| BinaryTree::node(nl, r.clone())).collect();
                out.extend(go(r).into_iter().map(|nr| BinaryTree::node(l.clone(), nr)));
                out
            }
        }
    }
    go(t).into_iter().collect()
}

/// Removes the end of the right spine (the root when it has no right
/// child) and puts that node's left subtree in its place.
pub fn delete_rightmost(t: &BinaryTree) -> Result<BinaryTree, TreeError> {
    let (l, r) = t.children().ok_or(TreeError::EmptyTree)?;
    if r.is_empty() {
        Ok(l.clone())
    } else {
        Ok(BinaryTree::node(l.clone(), delete_rightmost(r)?))
    }
}

/// Up-neighbors in the reflected bracket tree: every `y` with one more node
/// and `delete_rightmost(y) == t`.
///
/// Such a `y` replaces the subtree hanging at some depth `d` of the right
/// spine of `t` (possibly the empty slot past its end) by a new node whose
/// left subtree is that subtree.
pub fn reflected_bracket_covers(t: &BinaryTree) -> BTreeSet<BinaryTree> {
    fn go(t: &BinaryTree, out: &mut Vec<BinaryTree>) {
        out.push(BinaryTree::node(t.clone(), BinaryTree::Empty));
        if let Some((l, r)) = t.children() {
            let mut deeper = Vec::new();
            go(r, &mut deeper);
            out.extend(deeper.into_iter().map(|nr| BinaryTree::node(l.clone(), nr)));
        }
    }
    let mut out = Vec::new();
    go(t, &mut out);
    out.into_iter().collect()
}

/// Adds a node as right child of the rightmost node; `∅` becomes `•`.
pub fn with_right_child_at_rightmost(t: &BinaryTree) -> BinaryTree {
    match t.children() {
        None => BinaryTree::leaf(),
        Some((l, r)) => {
            if r.is_empty() {
                BinaryTree::node(l.clone(), BinaryTree::leaf())
            } else {
                BinaryTree::node(l.clone(), with_right_child_at_rightmost(r))
            }
        }
    }
}

/// Adds a node as left child of the rightmost node; an existing left
/// subtree of the rightmost node moves under the new node.
pub fn with_left_child_at_rightmost(t: &BinaryTree) -> Result<BinaryTree, TreeError> {
    let (l, r) = t.children().ok_or(TreeError::EmptyTree)?;
    if r.is_empty() {
        Ok(BinaryTree::node(BinaryTree::node(l.clone(), BinaryTree::Empty), BinaryTree::Empty))
    } else {
        Ok(BinaryTree::node(l.clone(), with_left_child_at_rightmost(r)?))
    }
}
