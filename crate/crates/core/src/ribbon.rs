//! Quasi-ribbon and ribbon tableaux, hypoplactic insertion, and the
//! shadow-line construction.
//!
//! A tableau stores its label rows only. The physical layout follows from
//! the shape: row `i + 1` starts in the column of the last cell of row `i`,
//! so consecutive rows share exactly one column. In a quasi-ribbon tableau
//! the lower entry of a shared column is the greater one; in a ribbon
//! tableau it is the smaller one.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compositions::Composition;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("empty row {0}")]
    EmptyRow(usize),
    #[error("row {0} is not strictly increasing")]
    RowNotIncreasing(usize),
    #[error("shared column between rows {0} and {} violates the column order", .0 + 1)]
    ColumnOrder(usize),
    #[error("label {0} appears twice")]
    DuplicateLabel(u32),
    #[error("labels are not exactly 1..={0}")]
    NotStandard(usize),
    #[error("shape {shape} does not match {cells} labels")]
    ShapeMismatch { shape: Composition, cells: usize },
    #[error("letter {0} is already in the tableau")]
    DuplicateLetter(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnRule {
    /// lower entry greater than the upper one
    IncreasingDown,
    /// lower entry smaller than the upper one
    IncreasingUp,
}

fn validate_rows(rows: &[Vec<u32>], rule: ColumnRule) -> Result<(), TableauError> {
    let mut seen = std::collections::BTreeSet::new();
    for (i, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return Err(TableauError::EmptyRow(i));
        }
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(TableauError::RowNotIncreasing(i));
        }
        for &l in row {
            if !seen.insert(l) {
                return Err(TableauError::DuplicateLabel(l));
            }
        }
    }
    for (i, pair) in rows.windows(2).enumerate() {
        let upper = *pair[0].last().unwrap();
        let lower = pair[1][0];
        let ok = match rule {
            ColumnRule::IncreasingDown => lower > upper,
            ColumnRule::IncreasingUp => lower < upper,
        };
        if !ok {
            return Err(TableauError::ColumnOrder(i));
        }
    }
    Ok(())
}

fn shape_of(rows: &[Vec<u32>]) -> Composition {
    Composition::new(rows.iter().map(Vec::len).collect()).expect("rows are nonempty")
}

fn split_by_shape(labels: &[u32], shape: &Composition) -> Vec<Vec<u32>> {
    let mut rows = Vec::with_capacity(shape.parts().len());
    let mut start = 0;
    for &part in shape.parts() {
        rows.push(labels[start..start + part].to_vec());
        start += part;
    }
    rows
}

fn is_standard(rows: &[Vec<u32>]) -> bool {
    let mut labels: Vec<u32> = rows.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.iter().enumerate().all(|(i, &l)| l as usize == i + 1)
}

macro_rules! tableau_type {
    ($name:ident, $rule:expr) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
        #[serde(try_from = "TableauRepr", into = "TableauRepr")]
        pub struct $name {
            rows: Vec<Vec<u32>>,
        }

        impl $name {
            /// Rows top to bottom; labels must be distinct but need not be `1..=n`.
            pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
                validate_rows(&rows, $rule)?;
                Ok($name { rows })
            }

            /// A standard tableau of `shape` whose reading word is `labels`.
            pub fn from_reading(shape: &Composition, labels: &[u32]) -> Result<Self, TableauError> {
                if shape.rank() != labels.len() {
                    return Err(TableauError::ShapeMismatch { shape: shape.clone(), cells: labels.len() });
                }
                let t = Self::new(split_by_shape(labels, shape))?;
                if !t.is_standard() {
                    return Err(TableauError::NotStandard(labels.len()));
                }
                Ok(t)
            }

            pub fn empty() -> Self {
                $name { rows: Vec::new() }
            }

            pub fn rows(&self) -> &[Vec<u32>] {
                &self.rows
            }

            pub fn shape(&self) -> Composition {
                shape_of(&self.rows)
            }

            pub fn size(&self) -> usize {
                self.rows.iter().map(Vec::len).sum()
            }

            /// Labels left to right, top to bottom.
            pub fn reading_word(&self) -> Vec<u32> {
                self.rows.iter().flatten().copied().collect()
            }

            pub fn is_standard(&self) -> bool {
                is_standard(&self.rows)
            }

            /// ASCII drawing with each row starting under the last cell of
            /// the previous one.
            pub fn render_ascii(&self) -> String {
                render_ribbon(&self.rows)
            }
        }

        impl TryFrom<TableauRepr> for $name {
            type Error = TableauError;
            fn try_from(repr: TableauRepr) -> Result<Self, Self::Error> {
                let t = $name::new(repr.rows)?;
                if t.shape() != repr.shape {
                    return Err(TableauError::ShapeMismatch { shape: repr.shape, cells: t.size() });
                }
                Ok(t)
            }
        }

        impl From<$name> for TableauRepr {
            fn from(t: $name) -> Self {
                TableauRepr { shape: t.shape(), rows: t.rows }
            }
        }

        /// Rows separated by ` / `, e.g. `1 2 / 3 / 4 5 6`.
        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.rows.is_empty() {
                    return f.write_str("∅");
                }
                let rows: Vec<String> =
                    self.rows.iter().map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")).collect();
                write!(f, "{}", rows.join(" / "))
            }
        }
    };
}

/// JSON form `{"shape":[...],"rows":[[...],...]}`.
#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Composition,
    rows: Vec<Vec<u32>>,
}

tableau_type!(QuasiRibbonTableau, ColumnRule::IncreasingDown);
tableau_type!(RibbonTableau, ColumnRule::IncreasingUp);

fn render_ribbon(rows: &[Vec<u32>]) -> String {
    let width = rows.iter().flatten().map(|l| l.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    let mut offset = 0;
    for row in rows {
        out.push_str(&" ".repeat(offset * (width + 1)));
        let cells: Vec<String> = row.iter().map(|l| format!("{l:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
        offset += row.len() - 1;
    }
    out
}

/// Result of inserting one letter: the new tableau and the 0-based reading
/// position of the cell that was created.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionStep {
    pub tableau: QuasiRibbonTableau,
    pub position: usize,
}

/// Inserts `a` into a quasi-ribbon tableau with distinct labels.
///
/// If `a` exceeds the last letter of the last row it is appended there.
/// Otherwise it goes right after the last entry `y <= a` in reading order
/// and the cells after it drop into a new row; when no such `y` exists,
/// `a` becomes a new first row.
pub fn hypoplactic_insert_letter(t: &QuasiRibbonTableau, a: u32) -> Result<InsertionStep, TableauError> {
    if t.rows.iter().flatten().any(|&l| l == a) {
        return Err(TableauError::DuplicateLetter(a));
    }
    let mut rows = t.rows.clone();
    let last = t.rows.last().and_then(|r| r.last().copied());
    let position = match last {
        None => {
            rows.push(vec![a]);
            0
        }
        Some(z) if a > z => {
            rows.last_mut().unwrap().push(a);
            t.size()
        }
        Some(_) => match t.reading_word().iter().rposition(|&y| y <= a) {
            None => {
                rows.insert(0, vec![a]);
                0
            }
            Some(idx) => {
                let (r, c) = locate(&rows, idx);
                let tail: Vec<u32> = rows[r].split_off(c + 1);
                rows[r].push(a);
                if !tail.is_empty() {
                    rows.insert(r + 1, tail);
                }
                idx + 1
            }
        },
    };
    Ok(InsertionStep { tableau: QuasiRibbonTableau { rows }, position })
}

fn locate(rows: &[Vec<u32>], mut idx: usize) -> (usize, usize) {
    for (r, row) in rows.iter().enumerate() {
        if idx < row.len() {
            return (r, idx);
        }
        idx -= row.len();
    }
    unreachable!("reading index out of range")
}

/// Hypoplactic insertion of `p` read left to right. `P` is relabeled
/// canonically; `Q` records, in each cell, the position in `p` of the
/// letter that `P` holds there.
pub fn hypoplactic_insert(p: &Permutation) -> (QuasiRibbonTableau, RibbonTableau) {
    let mut tableau = QuasiRibbonTableau::empty();
    let mut recording: Vec<u32> = Vec::with_capacity(p.len());
    for (i, &a) in p.word().iter().enumerate() {
        let step = hypoplactic_insert_letter(&tableau, a).expect("permutation letters are distinct");
        recording.insert(step.position, i as u32 + 1);
        tableau = step.tableau;
    }
    let shape = tableau.shape();
    let mut values = tableau.reading_word();
    // canonical relabeling: rank of each label in reading order
    let mut sorted = values.clone();
    sorted.sort_unstable();
    for v in &mut values {
        *v = sorted.binary_search(v).unwrap() as u32 + 1;
    }
    let big_p = QuasiRibbonTableau::from_reading(&shape, &values).expect("insertion keeps the quasi-ribbon order");
    let big_q = RibbonTableau::from_reading(&shape, &recording).expect("recording is a ribbon tableau");
    (big_p, big_q)
}

/// Broken lines over the permutation matrix, one tableau row per line.
///
/// Values are scanned bottom to top; the mark of `v + 1` continues the
/// line of `v` when it lies strictly to the right, otherwise it starts a
/// new line. `P` reads the values along the lines, `Q` the positions.
pub fn shadow_lines(p: &Permutation) -> (QuasiRibbonTableau, RibbonTableau) {
    let pos = p.inverse();
    let mut value_rows: Vec<Vec<u32>> = Vec::new();
    let mut pos_rows: Vec<Vec<u32>> = Vec::new();
    for v in 1..=p.len() {
        let x = pos.at(v);
        let extends = v > 1 && x > pos.at(v - 1);
        if !extends {
            value_rows.push(Vec::new());
            pos_rows.push(Vec::new());
        }
        value_rows.last_mut().unwrap().push(v as u32);
        pos_rows.last_mut().unwrap().push(x);
    }
    (
        QuasiRibbonTableau::new(value_rows).expect("lines hold consecutive values"),
        RibbonTableau::new(pos_rows).expect("lines break at position descents"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_permutation;

    fn qr(rows: &[&[u32]]) -> QuasiRibbonTableau {
        QuasiRibbonTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn rt(rows: &[&[u32]]) -> RibbonTableau {
        RibbonTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn insert_letter_examples() {
        let step = hypoplactic_insert_letter(&qr(&[&[1, 3], &[4, 5]]), 6).unwrap();
        assert_eq!(step.tableau, qr(&[&[1, 3], &[4, 5, 6]]));
        assert_eq!(step.position, 4);

        let step = hypoplactic_insert_letter(&qr(&[&[1, 3], &[4, 5, 6]]), 2).unwrap();
        assert_eq!(step.tableau, qr(&[&[1, 2], &[3], &[4, 5, 6]]));
        assert_eq!(step.position, 1);

        let step = hypoplactic_insert_letter(&qr(&[&[2, 3]]), 1).unwrap();
        assert_eq!(step.tableau, qr(&[&[1], &[2, 3]]));
        assert_eq!(step.position, 0);

        assert_eq!(hypoplactic_insert_letter(&qr(&[&[2, 3]]), 3), Err(TableauError::DuplicateLetter(3)));
    }

    #[test]
    fn insertion_trace_for_415362() {
        // intermediate tableaux shown step by step
        let mut t = QuasiRibbonTableau::empty();
        let expected: [&[&[u32]]; 6] = [
            &[&[4]],
            &[&[1], &[4]],
            &[&[1], &[4, 5]],
            &[&[1, 3], &[4, 5]],
            &[&[1, 3], &[4, 5, 6]],
            &[&[1, 2], &[3], &[4, 5, 6]],
        ];
        for (a, rows) in [4, 1, 5, 3, 6, 2].into_iter().zip(expected) {
            t = hypoplactic_insert_letter(&t, a).unwrap().tableau;
            assert_eq!(t, qr(rows));
        }
    }

    #[test]
    fn insert_examples() {
        let (p, q) = hypoplactic_insert(&perm("415362"));
        assert_eq!(p, qr(&[&[1, 2], &[3], &[4, 5, 6]]));
        assert_eq!(q, rt(&[&[2, 6], &[4], &[1, 3, 5]]));
        assert_eq!(p.to_string(), "1 2 / 3 / 4 5 6");
        assert_eq!(q.to_string(), "2 6 / 4 / 1 3 5");

        let (p, q) = hypoplactic_insert(&perm("123"));
        assert_eq!((p, q), (qr(&[&[1, 2, 3]]), rt(&[&[1, 2, 3]])));

        let (p, q) = hypoplactic_insert(&perm("321"));
        assert_eq!((p, q), (qr(&[&[1], &[2], &[3]]), rt(&[&[3], &[2], &[1]])));

        let (p, q) = hypoplactic_insert(&perm(""));
        assert_eq!(p.size() + q.size(), 0);
    }

    #[test]
    fn shadow_line_examples() {
        let (p, q) = shadow_lines(&perm("415362"));
        assert_eq!(p, qr(&[&[1, 2], &[3], &[4, 5, 6]]));
        assert_eq!(q, rt(&[&[2, 6], &[4], &[1, 3, 5]]));
        let (p, q) = shadow_lines(&perm("123"));
        assert_eq!((p, q), (qr(&[&[1, 2, 3]]), rt(&[&[1, 2, 3]])));
        let (p, q) = shadow_lines(&perm("21"));
        assert_eq!((p, q), (qr(&[&[1], &[2]]), rt(&[&[2], &[1]])));
    }

    #[test]
    fn exhaustive_properties() {
        for n in 0..=7 {
            for s in Permutation::all(n) {
                let (p, q) = hypoplactic_insert(&s);
                assert_eq!((p.clone(), q.clone()), shadow_lines(&s), "{s}");
                let shape = s.recoils_composition();
                assert_eq!(p.shape(), shape);
                assert_eq!(q.shape(), shape);
                assert!(p.is_standard() && q.is_standard());
                let identity: Vec<u32> = (1..=n as u32).collect();
                assert_eq!(p.reading_word(), identity);
                // Q's reading word lists the positions of 1, 2, ..., n
                assert_eq!(q.reading_word(), s.inverse().word());
                assert!(RibbonTableau::new(q.rows().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn validation_errors() {
        assert_eq!(QuasiRibbonTableau::new(vec![vec![2, 1]]), Err(TableauError::RowNotIncreasing(0)));
        assert_eq!(QuasiRibbonTableau::new(vec![vec![1, 3], vec![2]]), Err(TableauError::ColumnOrder(0)));
        assert_eq!(RibbonTableau::new(vec![vec![1, 2], vec![3]]), Err(TableauError::ColumnOrder(0)));
        assert_eq!(RibbonTableau::new(vec![vec![1], vec![]]), Err(TableauError::EmptyRow(1)));
        assert_eq!(RibbonTableau::new(vec![vec![2], vec![2]]), Err(TableauError::DuplicateLabel(2)));
        let shape = Composition::new(vec![2]).unwrap();
        assert_eq!(RibbonTableau::from_reading(&shape, &[1, 3]), Err(TableauError::NotStandard(2)));
    }

    #[test]
    fn json_shape() {
        let q = rt(&[&[2, 6], &[4], &[1, 3, 5]]);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, r#"{"shape":[2,1,3],"rows":[[2,6],[4],[1,3,5]]}"#);
        assert_eq!(serde_json::from_str::<RibbonTableau>(&json).unwrap(), q);
        assert!(serde_json::from_str::<RibbonTableau>(r#"{"shape":[3],"rows":[[2,6]]}"#).is_err());
    }

    #[test]
    fn ascii_layout() {
        let p = qr(&[&[1, 2], &[3], &[4, 5, 6]]);
        assert_eq!(p.render_ascii(), "1 2\n  3\n  4 5 6\n");
    }
}
