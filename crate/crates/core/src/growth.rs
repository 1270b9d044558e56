//! Growth diagrams: local rules for the composition and tree pairs, grid
//! construction over a permutation matrix, and conversion of the boundary
//! chains back into tableaux and trees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::compositions::{binword_covers, binword_deletion_positions, lifted_covers, Composition};
use crate::perm::{Permutation, PermutationMatrix};
use crate::ribbon::{QuasiRibbonTableau, RibbonTableau, TableauError};
use crate::trees::{
    delete_rightmost, lattice_covers, reflected_bracket_covers, with_left_child_at_rightmost,
    with_right_child_at_rightmost, BinaryTree, LabeledBinaryTree, TreeError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("local rule precondition violated for t={t}, x={x}, y={y}, alpha={alpha}: {reason}")]
    Precondition { t: String, x: String, y: String, alpha: bool, reason: &'static str },
    #[error("local rule found {count} completions for t={t}, x={x}, y={y}; expected exactly one")]
    NotUnique { t: String, x: String, y: String, count: usize },
    #[error("local rule produced {z} for x={x}, y={y}, which is not a common cover")]
    Postcondition { x: String, y: String, z: String },
    #[error("chain is not saturated at step {step}: {from} -> {to}")]
    NotSaturated { step: usize, from: String, to: String },
    #[error("malformed grid at row {row}, column {col}: {reason}")]
    Malformed { row: usize, col: usize, reason: &'static str },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Composition,
    Tree,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Composition => "composition",
            Family::Tree => "tree",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "composition" => Ok(Family::Composition),
            "tree" => Ok(Family::Tree),
            _ => Err(format!("unknown family `{s}` (expected composition or tree)")),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A dual pair with the ingredients of its local rule. Vertical edges of a
/// growth diagram are covers in the first graph, horizontal edges covers in
/// the second.
pub trait DualPair {
    type V: Clone + Ord + fmt::Display + Serialize;

    const FAMILY: Family;

    fn empty() -> Self::V;
    fn vertical_covers(v: &Self::V) -> BTreeSet<Self::V>;
    fn horizontal_covers(v: &Self::V) -> BTreeSet<Self::V>;
    /// Completion of a marked square with `t = x = y`.
    fn marked(t: &Self::V) -> Self::V;
    /// Completion when `x = y` differ from `t`.
    fn coincident(x: &Self::V) -> Result<Self::V, GrowthError>;
    /// Candidate completions when `x`, `y` and `t` are pairwise distinct.
    fn candidates(x: &Self::V, y: &Self::V) -> Vec<Self::V>;
}

/// Lifted binary tree (vertical) and Binword (horizontal).
pub struct CompositionPair;

impl DualPair for CompositionPair {
    type V = Composition;

    const FAMILY: Family = Family::Composition;

    fn empty() -> Composition {
        Composition::empty()
    }

    fn vertical_covers(v: &Composition) -> BTreeSet<Composition> {
        lifted_covers(v)
    }

    fn horizontal_covers(v: &Composition) -> BTreeSet<Composition> {
        binword_covers(v)
    }

    fn marked(t: &Composition) -> Composition {
        t.with_last_increased()
    }

    fn coincident(x: &Composition) -> Result<Composition, GrowthError> {
        Ok(x.with_one_appended())
    }

    fn candidates(x: &Composition, y: &Composition) -> Vec<Composition> {
        let over_x = binword_covers(x);
        lifted_covers(y).into_iter().filter(|z| over_x.contains(z)).collect()
    }
}

/// Reflected bracket tree (vertical) and lattice of binary trees (horizontal).
pub struct TreePair;

impl DualPair for TreePair {
    type V = BinaryTree;

    const FAMILY: Family = Family::Tree;

    fn empty() -> BinaryTree {
        BinaryTree::Empty
    }

    fn vertical_covers(v: &BinaryTree) -> BTreeSet<BinaryTree> {
        reflected_bracket_covers(v)
    }

    fn horizontal_covers(v: &BinaryTree) -> BTreeSet<BinaryTree> {
        lattice_covers(v)
    }

    fn marked(t: &BinaryTree) -> BinaryTree {
        with_right_child_at_rightmost(t)
    }

    fn coincident(x: &BinaryTree) -> Result<BinaryTree, GrowthError> {
        Ok(with_left_child_at_rightmost(x)?)
    }

    fn candidates(x: &BinaryTree, y: &BinaryTree) -> Vec<BinaryTree> {
        lattice_covers(x).into_iter().filter(|z| delete_rightmost(z).as_ref() == Ok(y)).collect()
    }
}

/// Completes the square with corners `t` (bottom left), `x` (top left),
/// `y` (bottom right) and mark `alpha`, returning the top-right corner.
pub fn local_rule<F: DualPair>(t: &F::V, x: &F::V, y: &F::V, alpha: bool) -> Result<F::V, GrowthError> {
    let pre =
        |reason| GrowthError::Precondition { t: t.to_string(), x: x.to_string(), y: y.to_string(), alpha, reason };
    if x != t && !F::vertical_covers(t).contains(x) {
        return Err(pre("x is neither t nor a vertical cover of t"));
    }
    if y != t && !F::horizontal_covers(t).contains(y) {
        return Err(pre("y is neither t nor a horizontal cover of t"));
    }
    if alpha && !(x == t && y == t) {
        return Err(pre("a marked square needs t = x = y"));
    }
    let z = if x == t && y == t {
        if alpha {
            F::marked(t)
        } else {
            t.clone()
        }
    } else if x == t {
        y.clone()
    } else if y == t {
        x.clone()
    } else if x == y {
        F::coincident(x)?
    } else {
        let mut found = F::candidates(x, y);
        if found.len() != 1 {
            return Err(GrowthError::NotUnique {
                t: t.to_string(),
                x: x.to_string(),
                y: y.to_string(),
                count: found.len(),
            });
        }
        found.pop().unwrap()
    };
    let over_y = z == *y || F::vertical_covers(y).contains(&z);
    let over_x = z == *x || F::horizontal_covers(x).contains(&z);
    if !(over_x && over_y) {
        return Err(GrowthError::Postcondition { x: x.to_string(), y: y.to_string(), z: z.to_string() });
    }
    Ok(z)
}

pub fn local_rule_composition(
    t: &Composition,
    x: &Composition,
    y: &Composition,
    alpha: bool,
) -> Result<Composition, GrowthError> {
    local_rule::<CompositionPair>(t, x, y, alpha)
}

pub fn local_rule_tree(t: &BinaryTree, x: &BinaryTree, y: &BinaryTree, alpha: bool) -> Result<BinaryTree, GrowthError> {
    local_rule::<TreePair>(t, x, y, alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillOrder {
    AntiDiagonal,
    RowMajor,
}

/// An `(n+1) × (n+1)` array of vertices over a permutation matrix.
/// `grid[row][col]`, rows counted from the bottom, columns from the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthGrid<V> {
    pub n: usize,
    pub grid: Vec<Vec<V>>,
    pub marks: PermutationMatrix,
}

/// The top row read left to right and the right column read bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryChains<V> {
    pub top: Vec<V>,
    pub right: Vec<V>,
}

pub fn build_growth_diagram<F: DualPair>(p: &Permutation) -> Result<GrowthGrid<F::V>, GrowthError> {
    build_growth_diagram_in_order::<F>(p, FillOrder::AntiDiagonal)
}

pub fn build_growth_diagram_in_order<F: DualPair>(
    p: &Permutation,
    order: FillOrder,
) -> Result<GrowthGrid<F::V>, GrowthError> {
    let n = p.len();
    let mut grid = vec![vec![F::empty(); n + 1]; n + 1];
    let squares: Vec<(usize, usize)> = match order {
        FillOrder::AntiDiagonal => {
            (2..=2 * n).flat_map(|s| (1..=n).filter(move |&r| s > r && s - r <= n).map(move |r| (r, s - r))).collect()
        }
        FillOrder::RowMajor => (1..=n).flat_map(|r| (1..=n).map(move |c| (r, c))).collect(),
    };
    for (r, c) in squares {
        let z = local_rule::<F>(&grid[r - 1][c - 1], &grid[r][c - 1], &grid[r - 1][c], p.at(c) as usize == r)?;
        grid[r][c] = z;
    }
    Ok(GrowthGrid { n, grid, marks: p.matrix() })
}

impl<V: Clone + Ord> GrowthGrid<V> {
    pub fn boundary_chains(&self) -> BoundaryChains<V> {
        BoundaryChains {
            top: self.grid[self.n].clone(),
            right: self.grid.iter().map(|row| row[self.n].clone()).collect(),
        }
    }

    /// Checks the empty boundaries, the cover relations between neighbors
    /// and that every interior vertex is its square's local rule output.
    pub fn validate<F: DualPair<V = V>>(&self) -> Result<(), GrowthError> {
        let n = self.n;
        if self.grid.len() != n + 1 || self.grid.iter().any(|row| row.len() != n + 1) {
            return Err(GrowthError::Malformed { row: 0, col: 0, reason: "grid is not (n+1) x (n+1)" });
        }
        let empty = F::empty();
        for k in 0..=n {
            if self.grid[0][k] != empty {
                return Err(GrowthError::Malformed { row: 0, col: k, reason: "bottom row must be empty" });
            }
            if self.grid[k][0] != empty {
                return Err(GrowthError::Malformed { row: k, col: 0, reason: "left column must be empty" });
            }
        }
        for r in 0..=n {
            for c in 0..=n {
                let v = &self.grid[r][c];
                if c > 0 {
                    let left = &self.grid[r][c - 1];
                    if left != v && !F::horizontal_covers(left).contains(v) {
                        return Err(GrowthError::Malformed {
                            row: r,
                            col: c,
                            reason: "horizontal edge is not a cover",
                        });
                    }
                }
                if r > 0 {
                    let below = &self.grid[r - 1][c];
                    if below != v && !F::vertical_covers(below).contains(v) {
                        return Err(GrowthError::Malformed { row: r, col: c, reason: "vertical edge is not a cover" });
                    }
                }
                if r > 0 && c > 0 {
                    let alpha = self.marks.contains(c, r);
                    let z =
                        local_rule::<F>(&self.grid[r - 1][c - 1], &self.grid[r][c - 1], &self.grid[r - 1][c], alpha)?;
                    if z != *v {
                        return Err(GrowthError::Malformed {
                            row: r,
                            col: c,
                            reason: "vertex differs from local rule",
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

impl<V: fmt::Display> GrowthGrid<V> {
    /// Text picture with the top row first; `X` marks sit between the
    /// vertex rows and columns they belong to.
    pub fn render_ascii(&self) -> String {
        let width = self.grid.iter().flatten().map(|v| v.to_string().chars().count()).max().unwrap_or(1).max(1);
        let cell = width + 3;
        let mut out = String::new();
        for r in (0..=self.n).rev() {
            let line: Vec<String> = self.grid[r].iter().map(|v| format!("{:>width$}", v.to_string())).collect();
            out.push_str(line.join("   ").trim_end());
            out.push('\n');
            if r > 0 {
                let mut marks = String::new();
                if let Some(&(c, _)) = self.marks.cells.iter().find(|&&(_, row)| row == r) {
                    // centered between column c-1 and c
                    let at = (c - 1) * cell + width + 1;
                    marks.push_str(&" ".repeat(at));
                    marks.push('X');
                }
                out.push_str(&marks);
                out.push('\n');
            }
        }
        out
    }
}

fn not_saturated<V: fmt::Display>(step: usize, from: &V, to: &V) -> GrowthError {
    GrowthError::NotSaturated { step, from: from.to_string(), to: to.to_string() }
}

fn check_start<V: fmt::Display + Eq>(chain: &[V], empty: V) -> Result<(), GrowthError> {
    match chain.first() {
        Some(c) if *c == empty => Ok(()),
        Some(c) => Err(GrowthError::NotSaturated { step: 0, from: "∅".into(), to: c.to_string() }),
        None => Err(GrowthError::NotSaturated { step: 0, from: "∅".into(), to: "nothing".into() }),
    }
}

/// Labels the cell created at step `k` of a lifted-binary-tree chain by `k`.
pub fn chain_to_quasi_ribbon(chain: &[Composition]) -> Result<QuasiRibbonTableau, GrowthError> {
    check_start(chain, Composition::empty())?;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (k, pair) in chain.windows(2).enumerate() {
        let (prev, cur) = (&pair[0], &pair[1]);
        let label = k as u32 + 1;
        if prev.is_empty() && cur.rank() == 1 {
            rows.push(vec![label]);
        } else if *cur == prev.with_last_increased() {
            rows.last_mut().unwrap().push(label);
        } else if *cur == prev.with_one_appended() {
            rows.push(vec![label]);
        } else {
            return Err(not_saturated(k + 1, prev, cur));
        }
    }
    Ok(QuasiRibbonTableau::new(rows)?)
}

/// Builds the ribbon tableau recorded by a Binword chain: at step `k` the
/// label `k` enters the reading order where the new letter of the word
/// says, and the final shape splits the reading order into rows.
pub fn chain_to_ribbon(chain: &[Composition]) -> Result<RibbonTableau, GrowthError> {
    check_start(chain, Composition::empty())?;
    let mut reading: Vec<u32> = Vec::new();
    for (k, pair) in chain.windows(2).enumerate() {
        let (prev, cur) = (&pair[0], &pair[1]);
        let label = k as u32 + 1;
        if !binword_covers(prev).contains(cur) {
            return Err(not_saturated(k + 1, prev, cur));
        }
        if prev.is_empty() {
            reading.push(label);
            continue;
        }
        let new_word = cur.to_word();
        let dq = binword_deletion_positions(&prev.to_word(), &new_word);
        let (&first, &last) = (dq.first().unwrap(), dq.last().unwrap());
        let index = if new_word.letters()[first - 1] == 0 { last - 1 } else { first - 2 };
        reading.insert(index, label);
    }
    let shape = chain.last().unwrap();
    Ok(RibbonTableau::from_reading(shape, &reading)?)
}

/// Labels the node added at step `k` of a tree-lattice chain by `k`.
pub fn chain_to_increasing_tree(chain: &[BinaryTree]) -> Result<LabeledBinaryTree, GrowthError> {
    fn graft(labeled: &LabeledBinaryTree, target: &BinaryTree, label: u32) -> LabeledBinaryTree {
        match (labeled, target.children()) {
            (LabeledBinaryTree::Empty, None) => LabeledBinaryTree::Empty,
            (LabeledBinaryTree::Empty, Some(_)) => LabeledBinaryTree::leaf(label),
            (LabeledBinaryTree::Node { label: a, left, right }, Some((tl, tr))) => {
                LabeledBinaryTree::node(*a, graft(left, tl, label), graft(right, tr, label))
            }
            (LabeledBinaryTree::Node { .. }, None) => unreachable!("target contains the labeled shape"),
        }
    }
    check_start(chain, BinaryTree::Empty)?;
    let mut tree = LabeledBinaryTree::Empty;
    for (k, pair) in chain.windows(2).enumerate() {
        let (prev, cur) = (&pair[0], &pair[1]);
        if !lattice_covers(prev).contains(cur) {
            return Err(not_saturated(k + 1, prev, cur));
        }
        tree = graft(&tree, cur, k as u32 + 1);
    }
    Ok(tree)
}

/// Labels the rightmost node of chain element `i` of a reflected-bracket
/// chain by `i`; the other nodes keep their labels from element `i - 1`.
pub fn chain_to_bst(chain: &[BinaryTree]) -> Result<LabeledBinaryTree, GrowthError> {
    fn splice(t: &LabeledBinaryTree, depth: usize, label: u32) -> LabeledBinaryTree {
        if depth == 0 {
            return LabeledBinaryTree::node(label, t.clone(), LabeledBinaryTree::Empty);
        }
        match t {
            LabeledBinaryTree::Node { label: a, left, right } => {
                LabeledBinaryTree::node(*a, (**left).clone(), splice(right, depth - 1, label))
            }
            LabeledBinaryTree::Empty => unreachable!("right spine is long enough"),
        }
    }
    check_start(chain, BinaryTree::Empty)?;
    let mut tree = LabeledBinaryTree::Empty;
    for (k, pair) in chain.windows(2).enumerate() {
        let (prev, cur) = (&pair[0], &pair[1]);
        if !reflected_bracket_covers(prev).contains(cur) {
            return Err(not_saturated(k + 1, prev, cur));
        }
        let depth = cur.right_spine_depth().expect("covers are nonempty");
        tree = splice(&tree, depth, k as u32 + 1);
    }
    Ok(tree)
}

pub fn growth_insert_composition(p: &Permutation) -> Result<(QuasiRibbonTableau, RibbonTableau), GrowthError> {
    let chains = build_growth_diagram::<CompositionPair>(p)?.boundary_chains();
    Ok((chain_to_quasi_ribbon(&chains.right)?, chain_to_ribbon(&chains.top)?))
}

pub fn growth_insert_tree(p: &Permutation) -> Result<(LabeledBinaryTree, LabeledBinaryTree), GrowthError> {
    let chains = build_growth_diagram::<TreePair>(p)?.boundary_chains();
    Ok((chain_to_bst(&chains.right)?, chain_to_increasing_tree(&chains.top)?))
}

/// The pair produced by a growth diagram of either family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GrowthPair {
    Composition(QuasiRibbonTableau, RibbonTableau),
    Tree(LabeledBinaryTree, LabeledBinaryTree),
}

pub fn growth_insert(p: &Permutation, family: Family) -> Result<GrowthPair, GrowthError> {
    Ok(match family {
        Family::Composition => {
            let (a, b) = growth_insert_composition(p)?;
            GrowthPair::Composition(a, b)
        }
        Family::Tree => {
            let (a, b) = growth_insert_tree(p)?;
            GrowthPair::Tree(a, b)
        }
    })
}

/// Serializable summary of a growth diagram and the pair it encodes.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthReport<V, P, Q> {
    pub n: usize,
    pub family: Family,
    pub grid: Vec<Vec<V>>,
    /// `[column, row]`, both 1-based
    pub marks: Vec<(usize, usize)>,
    #[serde(rename = "P")]
    pub p: P,
    #[serde(rename = "Q")]
    pub q: Q,
}

impl<V, P, Q> GrowthReport<V, P, Q> {
    pub fn new<F: DualPair<V = V>>(grid: GrowthGrid<V>, p: P, q: Q) -> Self {
        GrowthReport { n: grid.n, family: F::FAMILY, marks: grid.marks.cells, grid: grid.grid, p, q }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;
    use crate::ribbon::hypoplactic_insert;
    use crate::trees::{bst_insert, Reading};
    use std::collections::HashSet;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn cs(s: &str) -> Vec<Composition> {
        s.split(',').map(c).collect()
    }

    fn t(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn composition_rule_examples() {
        assert_eq!(local_rule_composition(&c("22"), &c("23"), &c("212"), false).unwrap(), c("213"));
        assert_eq!(local_rule_composition(&c("22"), &c("22"), &c("22"), true).unwrap(), c("23"));
        assert_eq!(local_rule_composition(&c("1"), &c("2"), &c("2"), false).unwrap(), c("21"));
        assert_eq!(local_rule_composition(&c("21"), &c("22"), &c("211"), false).unwrap(), c("212"));
        let e = Composition::empty();
        assert_eq!(local_rule_composition(&e, &e, &e, true).unwrap(), c("1"));
        assert_eq!(local_rule_composition(&e, &e, &e, false).unwrap(), e);
        assert_eq!(local_rule_composition(&c("2"), &c("2"), &c("21"), false).unwrap(), c("21"));
        assert_eq!(local_rule_composition(&c("2"), &c("3"), &c("2"), false).unwrap(), c("3"));
    }

    #[test]
    fn composition_rule_preconditions() {
        // 2 -> 12 is a Binword cover but not a lifted one
        assert!(matches!(
            local_rule_composition(&c("2"), &c("12"), &c("2"), false),
            Err(GrowthError::Precondition { .. })
        ));
        assert!(matches!(
            local_rule_composition(&c("2"), &c("2"), &c("4"), false),
            Err(GrowthError::Precondition { .. })
        ));
        assert!(matches!(
            local_rule_composition(&c("2"), &c("3"), &c("2"), true),
            Err(GrowthError::Precondition { .. })
        ));
    }

    #[test]
    fn tree_rule_examples() {
        let e = BinaryTree::Empty;
        assert_eq!(local_rule_tree(&e, &e, &e, true).unwrap(), BinaryTree::leaf());
        let dot = BinaryTree::leaf();
        let right = t("(-,(-,-))");
        assert_eq!(local_rule_tree(&dot, &right, &right, false).unwrap(), t("(-,((-,-),-))"));
        let left = t("((-,-),-)");
        assert_eq!(local_rule_tree(&dot, &left, &right, false).unwrap(), t("((-,(-,-)),-)"));
        // the answer is found by brute force over node additions
        let brute: Vec<BinaryTree> = BinaryTree::all_of_size(3)
            .into_iter()
            .filter(|z| lattice_covers(&left).contains(z) && delete_rightmost(z).unwrap() == right)
            .collect();
        assert_eq!(brute, vec![t("((-,(-,-)),-)")]);
        assert!(matches!(local_rule_tree(&dot, &dot, &dot, false), Ok(ref z) if *z == dot));
        assert!(local_rule_tree(&e, &dot, &e, true).is_err());
    }

    /// Every reachable square of every diagram, with both rules' outputs
    /// checked against brute-force common-cover searches.
    #[test]
    fn local_rules_are_closed_and_unique() {
        for n in 0..=6 {
            for q in Permutation::all(n) {
                let g = build_growth_diagram::<CompositionPair>(&q).unwrap();
                for r in 1..=n {
                    for col in 1..=n {
                        let (tt, x, y, z) =
                            (&g.grid[r - 1][col - 1], &g.grid[r][col - 1], &g.grid[r - 1][col], &g.grid[r][col]);
                        if x != tt && y != tt && x != y {
                            let common: Vec<Composition> = Composition::all_of_rank(tt.rank() + 2)
                                .into_iter()
                                .filter(|w| lifted_covers(y).contains(w) && binword_covers(x).contains(w))
                                .collect();
                            assert_eq!(common, vec![z.clone()]);
                        }
                    }
                }
                build_growth_diagram::<TreePair>(&q).unwrap();
            }
        }
    }

    #[test]
    fn chains_of_415362() {
        let g = build_growth_diagram::<CompositionPair>(&p("415362")).unwrap();
        let chains = g.boundary_chains();
        assert_eq!(chains.right, [vec![Composition::empty()], cs("1,2,21,211,212,213")].concat());
        assert_eq!(chains.top, [vec![Composition::empty()], cs("1,11,12,22,23,213")].concat());
        assert_eq!(g.grid[6][6], c("213"));
        g.validate::<CompositionPair>().unwrap();
    }

    #[test]
    fn tree_chains_351426() {
        let q = p("351426");
        let g = build_growth_diagram::<TreePair>(&q).unwrap();
        let chains = g.boundary_chains();
        let (bst, rec) = bst_insert(&q, Reading::LeftToRight);
        assert_eq!(chains.top.last().unwrap(), &bst.shape());
        for k in 0..=6 {
            let prefix = Permutation::new(standardize(&q.restrict_prefix(k))).unwrap();
            assert_eq!(chains.top[k], bst_insert(&prefix, Reading::LeftToRight).0.shape());
        }
        assert_eq!(chain_to_bst(&chains.right).unwrap(), bst);
        assert_eq!(chain_to_increasing_tree(&chains.top).unwrap(), rec);
        assert_eq!(bst.label(), Some(3));
    }

    #[test]
    fn empty_permutation() {
        let e = Permutation::identity(0);
        let g = build_growth_diagram::<CompositionPair>(&e).unwrap();
        assert_eq!(g.grid, vec![vec![Composition::empty()]]);
        let (a, b) = growth_insert_composition(&e).unwrap();
        assert_eq!((a.size(), b.size()), (0, 0));
        assert_eq!(growth_insert_tree(&e).unwrap(), (LabeledBinaryTree::Empty, LabeledBinaryTree::Empty));
    }

    #[test]
    fn single_letter() {
        let one = p("1");
        let (a, b) = growth_insert_composition(&one).unwrap();
        assert_eq!((a.rows(), b.rows()), (&[vec![1]][..], &[vec![1]][..]));
        assert_eq!(growth_insert_tree(&one).unwrap(), (LabeledBinaryTree::leaf(1), LabeledBinaryTree::leaf(1)));
    }

    #[test]
    fn chain_conversion_examples() {
        let e = Composition::empty();
        let chain = [vec![e.clone()], cs("1,2,21,211,212,213")].concat();
        assert_eq!(chain_to_quasi_ribbon(&chain).unwrap().rows(), &[vec![1, 2], vec![3], vec![4, 5, 6]]);
        let chain = [vec![e.clone()], cs("1,11,111")].concat();
        assert_eq!(chain_to_quasi_ribbon(&chain).unwrap().rows(), &[vec![1], vec![2], vec![3]]);
        let chain = [vec![e.clone()], cs("1,11,12,22,23,213")].concat();
        assert_eq!(chain_to_ribbon(&chain).unwrap().rows(), &[vec![2, 6], vec![4], vec![1, 3, 5]]);
        assert_eq!(chain_to_ribbon(&[e.clone(), c("1")]).unwrap().rows(), &[vec![1]]);
        // 2 -> 3 -> 22 splits a part; oracle is the recording tableau of 1342
        let chain = [vec![e.clone()], cs("1,2,3,22")].concat();
        let q = p("1342");
        assert_eq!(hypoplactic_insert(&q).1.rows(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(chain_to_ribbon(&chain).unwrap().rows(), &[vec![1, 4], vec![2, 3]]);
        assert_eq!(
            chain_to_increasing_tree(&[BinaryTree::Empty, BinaryTree::leaf()]).unwrap(),
            LabeledBinaryTree::leaf(1)
        );
        assert_eq!(chain_to_bst(&[BinaryTree::Empty, BinaryTree::leaf()]).unwrap(), LabeledBinaryTree::leaf(1));
        let spine: Vec<BinaryTree> = (0..=5).map(BinaryTree::right_comb).collect();
        assert_eq!(
            chain_to_increasing_tree(&spine).unwrap(),
            bst_insert(&Permutation::identity(5), Reading::LeftToRight).0
        );
        let comb: Vec<BinaryTree> = (0..=5).map(BinaryTree::left_comb).collect();
        assert_eq!(chain_to_bst(&comb).unwrap(), bst_insert(&p("54321"), Reading::LeftToRight).0);
    }

    #[test]
    fn non_saturated_chains_are_rejected() {
        let e = Composition::empty();
        assert!(matches!(chain_to_quasi_ribbon(&[e.clone(), c("2")]), Err(GrowthError::NotSaturated { step: 1, .. })));
        assert!(matches!(
            chain_to_quasi_ribbon(&[e.clone(), c("1"), c("12")]),
            Err(GrowthError::NotSaturated { step: 2, .. })
        ));
        assert!(matches!(chain_to_ribbon(&[c("1")]), Err(GrowthError::NotSaturated { step: 0, .. })));
        assert!(matches!(chain_to_ribbon(&[e, c("1"), c("3")]), Err(GrowthError::NotSaturated { .. })));
        let (dot, right, left) = (BinaryTree::leaf(), t("(-,(-,-))"), t("((-,-),-)"));
        // every two-node tree is a lattice cover of the one-node tree
        assert!(chain_to_increasing_tree(&[BinaryTree::Empty, dot.clone(), left.clone()]).is_ok());
        assert!(chain_to_increasing_tree(&[BinaryTree::Empty, right.clone()]).is_err());
        assert!(chain_to_bst(&[BinaryTree::Empty, dot.clone(), t("((-,-),(-,-))")]).is_err());
        assert!(chain_to_bst(&[dot]).is_err());
    }

    #[test]
    fn fill_orders_agree_and_grids_are_well_formed() {
        for n in 0..=6 {
            for q in Permutation::all(n) {
                let a = build_growth_diagram_in_order::<CompositionPair>(&q, FillOrder::AntiDiagonal).unwrap();
                let b = build_growth_diagram_in_order::<CompositionPair>(&q, FillOrder::RowMajor).unwrap();
                assert_eq!(a, b);
                a.validate::<CompositionPair>().unwrap();
                let a = build_growth_diagram_in_order::<TreePair>(&q, FillOrder::AntiDiagonal).unwrap();
                let b = build_growth_diagram_in_order::<TreePair>(&q, FillOrder::RowMajor).unwrap();
                assert_eq!(a, b);
                a.validate::<TreePair>().unwrap();
            }
        }
    }

    #[test]
    fn tampered_grid_fails_validation() {
        let mut g = build_growth_diagram::<CompositionPair>(&p("415362")).unwrap();
        g.grid[3][4] = c("111");
        assert!(g.validate::<CompositionPair>().is_err());
        let mut g = build_growth_diagram::<TreePair>(&p("2413")).unwrap();
        g.grid[0][2] = BinaryTree::leaf();
        assert!(matches!(g.validate::<TreePair>(), Err(GrowthError::Malformed { row: 0, col: 2, .. })));
    }

    fn standardize(word: &[u32]) -> Vec<u32> {
        let mut sorted = word.to_vec();
        sorted.sort_unstable();
        word.iter().map(|v| sorted.binary_search(v).unwrap() as u32 + 1).collect()
    }

    #[test]
    fn prefix_and_value_shape_laws() {
        for n in 0..=6 {
            for q in Permutation::all(n) {
                let chains = build_growth_diagram::<CompositionPair>(&q).unwrap().boundary_chains();
                let trees = build_growth_diagram::<TreePair>(&q).unwrap().boundary_chains();
                for k in 0..=n {
                    let prefix = Permutation::new(standardize(&q.restrict_prefix(k))).unwrap();
                    let values = Permutation::new(q.restrict_values(k)).unwrap();
                    assert_eq!(chains.top[k], prefix.recoils_composition());
                    assert_eq!(chains.right[k], values.recoils_composition());
                    assert_eq!(trees.top[k], bst_insert(&prefix, Reading::LeftToRight).0.shape());
                    assert_eq!(trees.right[k], bst_insert(&values, Reading::LeftToRight).0.shape());
                }
            }
        }
    }

    #[test]
    fn growth_matches_direct_insertion() {
        for n in 0..=7 {
            for q in Permutation::all(n) {
                assert_eq!(growth_insert_composition(&q).unwrap(), hypoplactic_insert(&q), "{q}");
                assert_eq!(growth_insert_tree(&q).unwrap(), bst_insert(&q, Reading::LeftToRight), "{q}");
            }
        }
    }

    #[test]
    fn growth_is_injective() {
        for n in 0..=6 {
            let perms = Permutation::all(n);
            let comps: HashSet<_> = perms.iter().map(|q| growth_insert_composition(q).unwrap()).collect();
            let trees: HashSet<_> = perms.iter().map(|q| growth_insert_tree(q).unwrap()).collect();
            assert_eq!(comps.len(), perms.len());
            assert_eq!(trees.len(), perms.len());
        }
    }

    #[test]
    fn report_json_and_ascii() {
        let q = p("415362");
        let g = build_growth_diagram::<CompositionPair>(&q).unwrap();
        let (a, b) = growth_insert_composition(&q).unwrap();
        let text = g.render_ascii();
        assert_eq!(text.lines().count(), 13);
        assert_eq!(text.matches('X').count(), 6);
        assert!(text.lines().next().unwrap().ends_with("213"));
        let report = GrowthReport::new::<CompositionPair>(g, a, b);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["n"], 6);
        assert_eq!(json["family"], "composition");
        assert_eq!(json["grid"][6][6], serde_json::json!([2, 1, 3]));
        assert_eq!(json["marks"][0], serde_json::json!([1, 4]));
        assert_eq!(json["P"]["rows"], serde_json::json!([[1, 2], [3], [4, 5, 6]]));
        assert_eq!(json["Q"]["rows"], serde_json::json!([[2, 6], [4], [1, 3, 5]]));
    }
}
