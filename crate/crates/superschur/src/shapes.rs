//! Partitions, skew shapes, and their cells.
//!
//! Cells are addressed matrix-style with 1-based `(row, col)`; the *content*
//! of a cell is `col - row`, so contents are constant along diagonals and
//! increase to the upper right.  A skew shape `lambda/mu` owns its cell list
//! in row-major order together with left/upper neighbour lookups, which is
//! all the tableau enumerator needs.

use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};
use std::fmt;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, trimming trailing zeros.  Rejects sequences that
    /// increase or contain an interior zero.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must weakly decrease, got {parts:?}"
                )));
            }
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "interior zero part in {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part (1-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Containment of Young diagrams: `other` fits inside `self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// One cell of a diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Diagonal index `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A skew shape `lambda/mu` with its cells materialized row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
    cells: Vec<Cell>,
    index: HashMap<(usize, usize), usize>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
}

/// Builds the skew shape `lambda/mu`, checking containment.
pub fn skew_shape(lambda: &Partition, mu: &Partition) -> Result<SkewShape> {
    if !lambda.contains(mu) {
        return Err(Error::ContainmentViolation(format!("{mu}/{lambda}")));
    }
    let mut cells = Vec::new();
    for i in 1..=lambda.len() {
        for j in mu.part(i) + 1..=lambda.part(i) {
            cells.push(Cell::new(i, j));
        }
    }
    let index: HashMap<(usize, usize), usize> = cells
        .iter()
        .enumerate()
        .map(|(k, c)| ((c.row, c.col), k))
        .collect();
    let left = cells
        .iter()
        .map(|c| index.get(&(c.row, c.col.wrapping_sub(1))).copied())
        .collect();
    let up = cells
        .iter()
        .map(|c| index.get(&(c.row.wrapping_sub(1), c.col)).copied())
        .collect();
    Ok(SkewShape {
        lambda: lambda.clone(),
        mu: mu.clone(),
        cells,
        index,
        left,
        up,
    })
}

impl SkewShape {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn has_cell(&self, row: usize, col: usize) -> bool {
        self.index.contains_key(&(row, col))
    }

    /// Row-major index of the cell at `(row, col)`, if present.
    pub fn cell_index(&self, row: usize, col: usize) -> Option<usize> {
        self.index.get(&(row, col)).copied()
    }

    /// Index of the left neighbour of cell `i`, if it belongs to the shape.
    pub fn left_of(&self, i: usize) -> Option<usize> {
        self.left[i]
    }

    /// Index of the upper neighbour of cell `i`, if it belongs to the shape.
    pub fn above(&self, i: usize) -> Option<usize> {
        self.up[i]
    }

    /// Minimum and maximum content over all cells.
    pub fn content_range(&self) -> Result<(i64, i64)> {
        let mut range: Option<(i64, i64)> = None;
        for c in &self.cells {
            let v = c.content();
            range = Some(match range {
                None => (v, v),
                Some((lo, hi)) => (lo.min(v), hi.max(v)),
            });
        }
        range.ok_or(Error::EmptyShape)
    }

    /// True if any two cells are joined by a path of edge-adjacent cells.
    /// The empty shape counts as connected.
    pub fn is_edgewise_connected(&self) -> bool {
        if self.cells.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.cells.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            let Cell { row, col } = self.cells[i];
            let nbrs = [
                (row.wrapping_sub(1), col),
                (row + 1, col),
                (row, col.wrapping_sub(1)),
                (row, col + 1),
            ];
            for rc in nbrs {
                if let Some(&j) = self.index.get(&rc) {
                    if !seen[j] {
                        seen[j] = true;
                        count += 1;
                        queue.push_back(j);
                    }
                }
            }
        }
        count == self.cells.len()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lambda, self.mu)
    }
}

/// Enumerates every skew shape with `1..=max_cells` cells, normalized so
/// that no row and no column is empty (translations are not repeated).
/// Disconnected shapes are included.
pub fn enumerate_skew_shapes(max_cells: usize) -> Vec<SkewShape> {
    // Rows are column intervals [start, end]; listed bottom-to-top they must
    // have weakly increasing starts and ends, start <= previous end + 1 to
    // keep every column inhabited, and the bottom start pinned at 1.
    let mut rows: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    fn rec(
        rows: &mut Vec<(usize, usize)>,
        used: usize,
        max_cells: usize,
        out: &mut Vec<SkewShape>,
    ) {
        if !rows.is_empty() {
            let lambda =
                Partition::new(rows.iter().rev().map(|&(_, e)| e).collect()).expect("valid ends");
            let mu = Partition::new(rows.iter().rev().map(|&(s, _)| s - 1).collect())
                .expect("valid starts");
            out.push(skew_shape(&lambda, &mu).expect("containment by construction"));
        }
        // prev_end = 0 for the bottom row pins its start at column 1.
        let (min_start, min_end, prev_end) = match rows.last() {
            None => (1, 1, 0),
            Some(&(s, e)) => (s, e, e),
        };
        let budget = max_cells - used;
        if budget == 0 {
            return;
        }
        let max_start = prev_end.saturating_add(1).min(min_start + budget);
        for start in min_start..=max_start {
            let lo_end = min_end.max(start);
            if lo_end - start + 1 > budget {
                continue;
            }
            for end in lo_end..=start + budget - 1 {
                rows.push((start, end));
                rec(rows, used + (end - start + 1), max_cells, out);
                rows.pop();
            }
        }
    }
    rec(&mut rows, 0, max_cells, &mut out);
    out.sort_by(|a, b| {
        (a.len(), a.lambda.parts(), a.mu.parts()).cmp(&(b.len(), b.lambda.parts(), b.mu.parts()))
    });
    out
}
