//! Graded graphs on compositions and binary trees, their up and down
//! operators as exact integer matrices, and duality checking.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::compositions::{binword_covers, lifted_covers, Composition};
use crate::trees::{lattice_covers, reflected_bracket_covers, BinaryTree};

/// Largest rank for which composition vertices are enumerated.
pub const MAX_COMPOSITION_RANK: usize = 12;
/// Largest rank for which tree vertices are enumerated.
pub const MAX_TREE_RANK: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown graph `{0}` (expected lifted-binary-tree, binword, tree-lattice or reflected-bracket-tree)")]
    UnknownGraph(String),
    #[error("rank {rank} exceeds the limit {limit} for {graph}")]
    RankTooLarge { graph: String, rank: usize, limit: usize },
    #[error("{first} and {second} have different vertices at rank {rank}")]
    VertexMismatch { first: String, second: String, rank: usize },
    #[error("{graph}: cover {to} of {from} is not a vertex of the next rank")]
    InvalidCover { graph: String, from: String, to: String },
}

pub trait Vertex: Clone + Ord + Hash + fmt::Display + Serialize + Send + Sync {}
impl<T: Clone + Ord + Hash + fmt::Display + Serialize + Send + Sync> Vertex for T {}

/// A graded graph with a unique rank-0 vertex and positively weighted
/// up-edges that raise rank by one.
pub trait GradedGraph: Sync {
    type V: Vertex;

    fn name(&self) -> &'static str;
    fn root(&self) -> Self::V;
    fn rank_of(&self, v: &Self::V) -> usize;
    /// Up-neighbors with edge weights.
    fn up_covers(&self, v: &Self::V) -> Vec<(Self::V, i64)>;
    fn max_rank(&self) -> usize;
    /// Vertices of rank `n` in canonical order.
    fn vertices(&self, n: usize) -> Result<Arc<Vec<Self::V>>, GraphError>;
}

/// Per-rank vertex lists, computed once and shared between threads.
struct RankCache<V> {
    ranks: Mutex<BTreeMap<usize, Arc<Vec<V>>>>,
}

impl<V> RankCache<V> {
    fn new() -> Self {
        RankCache { ranks: Mutex::new(BTreeMap::new()) }
    }

    fn get_or_compute(&self, n: usize, compute: impl FnOnce() -> Vec<V>) -> Arc<Vec<V>> {
        if let Some(v) = self.ranks.lock().unwrap().get(&n) {
            return Arc::clone(v);
        }
        let computed = Arc::new(compute());
        Arc::clone(self.ranks.lock().unwrap().entry(n).or_insert(computed))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphName {
    LiftedBinaryTree,
    Binword,
    TreeLattice,
    ReflectedBracketTree,
}

impl GraphName {
    pub const ALL: [GraphName; 4] =
        [GraphName::LiftedBinaryTree, GraphName::Binword, GraphName::TreeLattice, GraphName::ReflectedBracketTree];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphName::LiftedBinaryTree => "lifted-binary-tree",
            GraphName::Binword => "binword",
            GraphName::TreeLattice => "tree-lattice",
            GraphName::ReflectedBracketTree => "reflected-bracket-tree",
        }
    }
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphName {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphName::ALL.into_iter().find(|g| g.as_str() == s).ok_or_else(|| GraphError::UnknownGraph(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionGraphKind {
    LiftedBinaryTree,
    Binword,
}

/// The lifted binary tree or Binword, on compositions.
pub struct CompositionGraph {
    kind: CompositionGraphKind,
    cache: RankCache<Composition>,
}

impl CompositionGraph {
    pub fn new(kind: CompositionGraphKind) -> Self {
        CompositionGraph { kind, cache: RankCache::new() }
    }

    pub fn lifted_binary_tree() -> Self {
        Self::new(CompositionGraphKind::LiftedBinaryTree)
    }

    pub fn binword() -> Self {
        Self::new(CompositionGraphKind::Binword)
    }
}

impl GradedGraph for CompositionGraph {
    type V = Composition;

    fn name(&self) -> &'static str {
        match self.kind {
            CompositionGraphKind::LiftedBinaryTree => "lifted-binary-tree",
            CompositionGraphKind::Binword => "binword",
        }
    }

    fn root(&self) -> Composition {
        Composition::empty()
    }

    fn rank_of(&self, v: &Composition) -> usize {
        v.rank()
    }

    fn up_covers(&self, v: &Composition) -> Vec<(Composition, i64)> {
        let covers = match self.kind {
            CompositionGraphKind::LiftedBinaryTree => lifted_covers(v),
            CompositionGraphKind::Binword => binword_covers(v),
        };
        covers.into_iter().map(|c| (c, 1)).collect()
    }

    fn max_rank(&self) -> usize {
        MAX_COMPOSITION_RANK
    }

    fn vertices(&self, n: usize) -> Result<Arc<Vec<Composition>>, GraphError> {
        guard(self, n)?;
        Ok(self.cache.get_or_compute(n, || Composition::all_of_rank(n)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeGraphKind {
    Lattice,
    ReflectedBracket,
}

/// The lattice of binary trees or the reflected bracket tree.
pub struct TreeGraph {
    kind: TreeGraphKind,
    cache: RankCache<BinaryTree>,
}

impl TreeGraph {
    pub fn new(kind: TreeGraphKind) -> Self {
        TreeGraph { kind, cache: RankCache::new() }
    }

    pub fn lattice() -> Self {
        Self::new(TreeGraphKind::Lattice)
    }

    pub fn reflected_bracket_tree() -> Self {
        Self::new(TreeGraphKind::ReflectedBracket)
    }
}

impl GradedGraph for TreeGraph {
    type V = BinaryTree;

    fn name(&self) -> &'static str {
        match self.kind {
            TreeGraphKind::Lattice => "tree-lattice",
            TreeGraphKind::ReflectedBracket => "reflected-bracket-tree",
        }
    }

    fn root(&self) -> BinaryTree {
        BinaryTree::Empty
    }

    fn rank_of(&self, v: &BinaryTree) -> usize {
        v.size()
    }

    fn up_covers(&self, v: &BinaryTree) -> Vec<(BinaryTree, i64)> {
        let covers = match self.kind {
            TreeGraphKind::Lattice => lattice_covers(v),
            TreeGraphKind::ReflectedBracket => reflected_bracket_covers(v),
        };
        covers.into_iter().map(|c| (c, 1)).collect()
    }

    fn max_rank(&self) -> usize {
        MAX_TREE_RANK
    }

    fn vertices(&self, n: usize) -> Result<Arc<Vec<BinaryTree>>, GraphError> {
        guard(self, n)?;
        Ok(self.cache.get_or_compute(n, || BinaryTree::all_of_size(n)))
    }
}

fn guard<G: GradedGraph + ?Sized>(g: &G, n: usize) -> Result<(), GraphError> {
    if n > g.max_rank() {
        return Err(GraphError::RankTooLarge { graph: g.name().to_string(), rank: n, limit: g.max_rank() });
    }
    Ok(())
}

/// One of the four graphs, selected by name.
pub enum AnyGraph {
    Compositions(CompositionGraph),
    Trees(TreeGraph),
}

pub fn make_graph(name: &str) -> Result<AnyGraph, GraphError> {
    Ok(match name.parse::<GraphName>()? {
        GraphName::LiftedBinaryTree => AnyGraph::Compositions(CompositionGraph::lifted_binary_tree()),
        GraphName::Binword => AnyGraph::Compositions(CompositionGraph::binword()),
        GraphName::TreeLattice => AnyGraph::Trees(TreeGraph::lattice()),
        GraphName::ReflectedBracketTree => AnyGraph::Trees(TreeGraph::reflected_bracket_tree()),
    })
}

/// A sparse integer matrix mapping the vertices of rank `from_rank`
/// (columns) to those of rank `to_rank` (rows).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedOperatorMatrix {
    pub from_rank: usize,
    pub to_rank: usize,
    pub rows: usize,
    pub cols: usize,
    /// nonzero entries of each column, sorted by row
    columns: Vec<Vec<(usize, i64)>>,
}

impl RankedOperatorMatrix {
    fn from_columns(from_rank: usize, to_rank: usize, rows: usize, columns: Vec<BTreeMap<usize, i64>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|col| col.into_iter().filter(|&(_, w)| w != 0).collect())
            .collect::<Vec<Vec<(usize, i64)>>>();
        RankedOperatorMatrix { from_rank, to_rank, rows, cols: columns.len(), columns }
    }

    pub fn zero(from_rank: usize, to_rank: usize, rows: usize, cols: usize) -> Self {
        RankedOperatorMatrix { from_rank, to_rank, rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col].iter().find(|&&(r, _)| r == row).map_or(0, |&(_, w)| w)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut dense = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, w) in col {
                dense[r][c] = w;
            }
        }
        dense
    }

    pub fn transpose(&self) -> Self {
        let mut columns = vec![BTreeMap::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, w) in col {
                columns[r].insert(c, w);
            }
        }
        Self::from_columns(self.to_rank, self.from_rank, self.cols, columns)
    }

    /// `self * rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc = BTreeMap::new();
                for &(k, w) in col {
                    for &(r, v) in &self.columns[k] {
                        *acc.entry(r).or_insert(0) += w * v;
                    }
                }
                acc
            })
            .collect();
        Self::from_columns(rhs.from_rank, self.to_rank, self.rows, columns)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, i64> = a.iter().copied().collect();
                for &(r, w) in b {
                    *acc.entry(r).or_insert(0) -= w;
                }
                acc
            })
            .collect();
        Self::from_columns(self.from_rank, self.to_rank, self.rows, columns)
    }

    /// Column sums: the weighted out-degree of each source vertex.
    pub fn column_sums(&self) -> Vec<i64> {
        self.columns.iter().map(|c| c.iter().map(|&(_, w)| w).sum()).collect()
    }

    /// Row sums: the weighted in-degree of each target vertex.
    pub fn row_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rows];
        for col in &self.columns {
            for &(r, w) in col {
                sums[r] += w;
            }
        }
        sums
    }

    /// First entry `(row, col, actual)` differing from `scalar * I`.
    pub fn first_deviation_from_scalar(&self, scalar: i64) -> Option<(usize, usize, i64)> {
        for c in 0..self.cols {
            let mut diag_seen = false;
            for &(r, w) in &self.columns[c] {
                if r == c {
                    diag_seen = true;
                    if w != scalar {
                        return Some((r, c, w));
                    }
                } else {
                    return Some((r, c, w));
                }
            }
            if !diag_seen && scalar != 0 && c < self.rows {
                return Some((c, c, 0));
            }
        }
        None
    }
}

/// `U_n`: rows are rank `n + 1` vertices, columns rank `n` vertices.
pub fn up_matrix<G: GradedGraph + ?Sized>(g: &G, n: usize) -> Result<RankedOperatorMatrix, GraphError> {
    let sources = g.vertices(n)?;
    let targets = g.vertices(n + 1)?;
    let index: HashMap<&G::V, usize> = targets.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut columns = Vec::with_capacity(sources.len());
    for x in sources.iter() {
        let mut col = BTreeMap::new();
        for (y, w) in g.up_covers(x) {
            let &i = index.get(&y).ok_or_else(|| GraphError::InvalidCover {
                graph: g.name().to_string(),
                from: x.to_string(),
                to: y.to_string(),
            })?;
            *col.entry(i).or_insert(0) += w;
        }
        columns.push(col);
    }
    Ok(RankedOperatorMatrix::from_columns(n, n + 1, targets.len(), columns))
}

/// `D_n`: rows are rank `n - 1` vertices, columns rank `n` vertices; the
/// transpose of `U_{n-1}`. `D_0` is the empty map.
pub fn down_matrix<G: GradedGraph + ?Sized>(g: &G, n: usize) -> Result<RankedOperatorMatrix, GraphError> {
    if n == 0 {
        return Ok(RankedOperatorMatrix::zero(0, 0, 0, g.vertices(0)?.len()));
    }
    Ok(up_matrix(g, n - 1)?.transpose())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub row: String,
    pub col: String,
    pub expected: i64,
    pub actual: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankVerdict {
    pub rank: usize,
    pub vertices: usize,
    pub r: i64,
    pub dual: bool,
    pub counterexample: Option<Counterexample>,
}

/// Outcome of checking `D_{n+1} U_n - U_{n-1} D_n = r_n I_n` rank by rank,
/// with `U` taken from the first graph and `D` from the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub pair: String,
    pub max_rank: usize,
    pub ranks: Vec<RankVerdict>,
}

impl DualityReport {
    pub fn is_dual(&self) -> bool {
        self.ranks.iter().all(|r| r.dual)
    }

    pub fn first_failure(&self) -> Option<&RankVerdict> {
        self.ranks.iter().find(|r| !r.dual)
    }
}

/// Checks the commutation relation at every rank `0..=max_rank` in exact
/// integer arithmetic. `r` gives `r_n`; use `|_| 1` for ordinary duality.
pub fn check_duality<G1, G2>(
    g1: &G1,
    g2: &G2,
    max_rank: usize,
    r: impl Fn(usize) -> i64 + Sync,
) -> Result<DualityReport, GraphError>
where
    G1: GradedGraph,
    G2: GradedGraph<V = G1::V>,
{
    for n in 0..=max_rank + 1 {
        if g1.vertices(n)? != g2.vertices(n)? {
            return Err(GraphError::VertexMismatch { first: g1.name().into(), second: g2.name().into(), rank: n });
        }
    }
    let ranks = (0..=max_rank)
        .into_par_iter()
        .map(|n| -> Result<RankVerdict, GraphError> {
            let vertices = g1.vertices(n)?;
            let up = up_matrix(g1, n)?;
            let down = down_matrix(g2, n + 1)?;
            let mut commutator = down.mul(&up);
            if n > 0 {
                let lower = up_matrix(g1, n - 1)?.mul(&down_matrix(g2, n)?);
                commutator = commutator.sub(&lower);
            }
            let r_n = r(n);
            let counterexample = commutator.first_deviation_from_scalar(r_n).map(|(row, col, actual)| Counterexample {
                row: vertices[row].to_string(),
                col: vertices[col].to_string(),
                expected: if row == col { r_n } else { 0 },
                actual,
            });
            Ok(RankVerdict {
                rank: n,
                vertices: vertices.len(),
                r: r_n,
                dual: counterexample.is_none(),
                counterexample,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DualityReport { pair: format!("{} / {}", g1.name(), g2.name()), max_rank, ranks })
}

/// Number of saturated chains from the root to each vertex of rank `n`,
/// weighted by edge multiplicities.
pub fn chain_counts<G: GradedGraph + ?Sized>(g: &G, n: usize) -> Result<Vec<u128>, GraphError> {
    let mut counts: HashMap<G::V, u128> = HashMap::from([(g.root(), 1)]);
    for k in 0..n {
        let mut next: HashMap<G::V, u128> = HashMap::new();
        for x in g.vertices(k)?.iter() {
            let e = counts.get(x).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            for (y, w) in g.up_covers(x) {
                *next.entry(y).or_insert(0) += e * w as u128;
            }
        }
        counts = next;
    }
    Ok(g.vertices(n)?.iter().map(|v| counts.get(v).copied().unwrap_or(0)).collect())
}

/// `(Σ_v e1(v) e2(v), n!)` over the rank-`n` vertices.
pub fn path_count_identity<G1, G2>(g1: &G1, g2: &G2, n: usize) -> Result<(u128, u128), GraphError>
where
    G1: GradedGraph,
    G2: GradedGraph<V = G1::V>,
{
    let e1 = chain_counts(g1, n)?;
    let e2 = chain_counts(g2, n)?;
    let lhs = e1.iter().zip(&e2).map(|(a, b)| a * b).sum();
    let rhs = (1..=n as u128).product();
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Serialize)]
struct RankExport<'a, V: Serialize> {
    n: usize,
    vertices: &'a [V],
    edges: Vec<(&'a V, &'a V)>,
}

#[derive(Serialize)]
struct GraphExport<'a, V: Serialize> {
    ranks: Vec<RankExport<'a, V>>,
}

/// Renders ranks `0..=max_rank` as Graphviz DOT or as JSON
/// (`{"ranks":[{"n":k,"vertices":[...],"edges":[[u,v],...]}]}`, where the
/// edges listed under rank `k` come up from rank `k - 1`).
pub fn export<G: GradedGraph + ?Sized>(g: &G, max_rank: usize, format: ExportFormat) -> Result<String, GraphError> {
    let levels: Vec<Arc<Vec<G::V>>> = (0..=max_rank).map(|n| g.vertices(n)).collect::<Result<_, _>>()?;
    let mut edges_into: Vec<Vec<(usize, usize)>> = vec![Vec::new(); max_rank + 1];
    for n in 1..=max_rank {
        let index: HashMap<&G::V, usize> = levels[n].iter().enumerate().map(|(i, v)| (v, i)).collect();
        for (i, x) in levels[n - 1].iter().enumerate() {
            for (y, _) in g.up_covers(x) {
                let j = *index.get(&y).ok_or_else(|| GraphError::InvalidCover {
                    graph: g.name().to_string(),
                    from: x.to_string(),
                    to: y.to_string(),
                })?;
                edges_into[n].push((i, j));
            }
        }
    }
    Ok(match format {
        ExportFormat::Json => {
            let ranks = levels
                .iter()
                .enumerate()
                .map(|(n, vs)| RankExport {
                    n,
                    vertices: vs.as_slice(),
                    edges: edges_into[n].iter().map(|&(i, j)| (&levels[n - 1][i], &vs[j])).collect(),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&GraphExport { ranks }).expect("vertices serialize");
            s.push('\n');
            s
        }
        ExportFormat::Dot => {
            let mut s = format!("digraph g {{\n  // {}\n  rankdir=BT;\n  node [shape=plaintext];\n", g.name());
            for (n, vs) in levels.iter().enumerate() {
                s.push_str("  { rank=same;");
                for (i, v) in vs.iter().enumerate() {
                    s.push_str(&format!(" v{n}_{i} [label=\"{v}\"];"));
                }
                s.push_str(" }\n");
            }
            for (n, edges) in edges_into.iter().enumerate() {
                for &(i, j) in edges {
                    s.push_str(&format!("  v{}_{i} -> v{n}_{j};\n", n - 1));
                }
            }
            s.push_str("}\n");
            s
        }
    })
}
