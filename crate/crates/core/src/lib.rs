//! Hypoplactic and binary-search-tree insertion, the dual graded graphs
//! they live on, and growth diagrams built from local rules.
//!
//! - [`perm`]: permutations and their descent statistics.
//! - [`compositions`]: compositions, binary words, lifted binary tree and Binword covers.
//! - [`ribbon`]: quasi-ribbon / ribbon tableaux and hypoplactic insertion.
//! - [`trees`]: binary trees, BST / sylvester insertion, tree-graph covers.
//! - [`graphs`]: graded graphs, up/down operators, duality checking, export.
//! - [`growth`]: local rules, growth diagrams, chain conversions.
//! - [`cli`]: the `dualgraded` command-line front end.

pub mod cli;
pub mod compositions;
pub mod graphs;
pub mod growth;
pub mod perm;
pub mod ribbon;
pub mod trees;

pub use compositions::{BinaryWord, Composition};
pub use perm::{parse_permutation, Permutation};
pub use ribbon::{QuasiRibbonTableau, RibbonTableau};
pub use trees::{BinaryTree, LabeledBinaryTree, Reading};
