//! Cutting strips, outside decompositions, and the strip hash product.
//!
//! A *cutting strip* over a content interval `[a, b]` records, for every
//! content `c` in `(a, b]`, whether the box of content `c-1` sits to the
//! left of the box of content `c` (an `L` step) or below it (a `B` step).
//! Superimposing translated copies of the cutting strip over a connected
//! skew shape slices it into strips — an *outside decomposition* — and any
//! two strips combine through the hash product `theta_p # theta_q`, which
//! is again a strip (or degenerates to a null/empty marker).  The shift
//! `m(p,q)` locates the main-diagonal box of that combined strip; it feeds
//! the content shift of the determinant entries.

use crate::error::{Error, Result};
use crate::shapes::{skew_shape, Partition, SkewShape};
use std::collections::BTreeSet;
use std::fmt;

/// Direction of the step from the box of content `c-1` to the box of
/// content `c` within a strip.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    /// The box of content `c-1` lies to the left (same row).
    Left,
    /// The box of content `c-1` lies below (same column).
    Below,
}

/// A cutting strip: the interval `[lo, hi]` of contents and the set of
/// contents in `(lo, hi]` whose step is [`Step::Below`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CuttingStrip {
    lo: i64,
    hi: i64,
    below: BTreeSet<i64>,
}

/// Builds a cutting strip over `range`.  Entries of `below` must lie in
/// the range; the minimum content itself carries no step label and is
/// silently dropped.
pub fn cutting_strip(
    range: (i64, i64),
    below: impl IntoIterator<Item = i64>,
) -> Result<CuttingStrip> {
    let (lo, hi) = range;
    if lo > hi {
        return Err(Error::InvalidCuttingStrip(format!(
            "empty content range [{lo},{hi}]"
        )));
    }
    let mut set = BTreeSet::new();
    for c in below {
        if c == lo {
            continue;
        }
        if c < lo || c > hi {
            return Err(Error::InvalidCuttingStrip(format!(
                "below-entry {c} outside [{lo},{hi}]"
            )));
        }
        set.insert(c);
    }
    Ok(CuttingStrip { lo, hi, below: set })
}

impl CuttingStrip {
    /// The all-`L` strip: a single row.  Decomposing with it yields the
    /// maximal-row decomposition.
    pub fn rows(range: (i64, i64)) -> CuttingStrip {
        cutting_strip(range, []).expect("valid range")
    }

    /// The all-`B` strip: a single column.  Decomposing with it yields the
    /// maximal-column decomposition.
    pub fn columns(range: (i64, i64)) -> CuttingStrip {
        cutting_strip(range, range.0 + 1..=range.1).expect("valid range")
    }

    pub fn range(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn below(&self) -> &BTreeSet<i64> {
        &self.below
    }

    /// Contents of `(lo, hi]` stepping from the left.
    pub fn left(&self) -> Vec<i64> {
        (self.lo + 1..=self.hi)
            .filter(|c| !self.below.contains(c))
            .collect()
    }

    /// Step at content `c`, defined for `c` in `(lo, hi]`.
    pub fn step(&self, c: i64) -> Option<Step> {
        if c <= self.lo || c > self.hi {
            None
        } else if self.below.contains(&c) {
            Some(Step::Below)
        } else {
            Some(Step::Left)
        }
    }

    /// Step extended beyond the interval: everything at or below the
    /// minimum content continues downward, everything above the maximum
    /// continues leftward.
    pub fn extended_step(&self, c: i64) -> Step {
        if c <= self.lo {
            Step::Below
        } else if c > self.hi {
            Step::Left
        } else {
            self.step(c).expect("interior content")
        }
    }

    /// Number of `B` steps with contents in `(a, d]`.
    pub fn below_count(&self, a: i64, d: i64) -> i64 {
        if a >= d {
            return 0;
        }
        self.below.range(a + 1..=d).count() as i64
    }
}

impl fmt::Display for CuttingStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi[{},{}]{{", self.lo, self.hi)?;
        for (i, c) in self.below.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Every cutting strip over the shape's content range, in ascending order
/// of the below-set bitmask (rows first, columns last).
pub fn enumerate_cutting_strips(shape: &SkewShape) -> Result<Vec<CuttingStrip>> {
    if !shape.is_edgewise_connected() || shape.is_empty() {
        if shape.is_empty() {
            return Err(Error::EmptyShape);
        }
        return Err(Error::DisconnectedShape);
    }
    let (lo, hi) = shape.content_range()?;
    let n = (hi - lo) as u32;
    if n > 30 {
        return Err(Error::TooLarge {
            estimate: 1u128 << n,
            limit: 1u128 << 30,
        });
    }
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u64..(1 << n) {
        let below = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| lo + 1 + i as i64);
        out.push(cutting_strip((lo, hi), below).expect("in-range below set"));
    }
    Ok(out)
}

/// One strip of an outside decomposition: cell indices into the decomposed
/// shape, ordered by increasing content, plus the content range `[a, b]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StripPiece {
    cells: Vec<usize>,
    a: i64,
    b: i64,
}

impl StripPiece {
    pub fn cell_indices(&self) -> &[usize] {
        &self.cells
    }

    /// Content range `[a, b]`: `a` is the starting (bottom-left) box's
    /// content, `b` the ending (top-right) box's.
    pub fn range(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// An outside decomposition: the shape's cells partitioned into strips
/// compatible with a cutting strip, ordered by starting content.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OutsideDecomposition {
    shape: SkewShape,
    phi: CuttingStrip,
    strips: Vec<StripPiece>,
}

impl OutsideDecomposition {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn phi(&self) -> &CuttingStrip {
        &self.phi
    }

    pub fn strips(&self) -> &[StripPiece] {
        &self.strips
    }

    pub fn len(&self) -> usize {
        self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strips.is_empty()
    }
}

/// Slices a connected skew shape along a cutting strip covering exactly its
/// content range: edge-adjacent boxes of contents `c-1, c` share a strip
/// iff their adjacency direction matches the strip's step at `c`.
pub fn cut(shape: &SkewShape, phi: &CuttingStrip) -> Result<OutsideDecomposition> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    if !shape.is_edgewise_connected() {
        return Err(Error::DisconnectedShape);
    }
    let range = shape.content_range()?;
    if range != phi.range() {
        return Err(Error::ContentMismatch {
            phi: phi.range(),
            shape: range,
        });
    }

    // Union-find over cells.
    let n = shape.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let union = |parent: &mut Vec<usize>, i: usize, j: usize| {
        let (ri, rj) = (find(parent, i), find(parent, j));
        if ri != rj {
            parent[ri] = rj;
        }
    };
    for (i, cell) in shape.cells().iter().enumerate() {
        let c = cell.content();
        // Right neighbour has content c+1; cohere iff step(c+1) = Left.
        if let Some(j) = shape.cell_index(cell.row, cell.col + 1) {
            if phi.step(c + 1) == Some(Step::Left) {
                union(&mut parent, i, j);
            }
        }
        // The box below has content c-1; cohere iff step(c) = Below.
        if let Some(j) = shape.cell_index(cell.row + 1, cell.col) {
            if phi.step(c) == Some(Step::Below) {
                union(&mut parent, i, j);
            }
        }
    }

    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    let mut strips = Vec::new();
    for (_, mut cells) in groups {
        cells.sort_by_key(|&i| shape.cells()[i].content());
        let a = shape.cells()[cells[0]].content();
        let b = shape.cells()[*cells.last().unwrap()].content();
        // One box of each content, and the internal steps must reproduce
        // the cutting strip's profile.
        assert_eq!(b - a + 1, cells.len() as i64, "strip covers {a}..{b} once each");
        for w in cells.windows(2) {
            let (prev, next) = (shape.cells()[w[0]], shape.cells()[w[1]]);
            let step = if prev.row == next.row {
                Step::Left
            } else {
                Step::Below
            };
            debug_assert_eq!(phi.step(next.content()), Some(step));
        }
        strips.push(StripPiece { cells, a, b });
    }
    strips.sort_by_key(|s| s.a);
    Ok(OutsideDecomposition {
        shape: shape.clone(),
        phi: phi.clone(),
        strips,
    })
}

/// The hash product of two strips, named by content endpoints: with
/// `theta_p ~ phi[a,b]` and `theta_q ~ phi[c,d]`, the product spans
/// `[a, d]` when that interval is nonempty.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HashStrip {
    /// A genuine strip `phi[a, d]` (`a <= d`).
    Proper { a: i64, d: i64 },
    /// `a = d + 1`: contributes the multiplicative identity.
    Null,
    /// `a > d + 1`: contributes zero.
    Empty,
}

/// `theta_p # theta_q` for two strips of one decomposition (0-based
/// indices).
pub fn hash_product(decomp: &OutsideDecomposition, p: usize, q: usize) -> HashStrip {
    let a = decomp.strips()[p].range().0;
    let d = decomp.strips()[q].range().1;
    if a <= d {
        HashStrip::Proper { a, d }
    } else if a == d + 1 {
        HashStrip::Null
    } else {
        HashStrip::Empty
    }
}

/// The content of the main-diagonal box of a proper hash strip: walking
/// `phi[a,d]` with `u` below-steps puts its start `u` rows under its end,
/// so the box with embedded content 0 carries original content `a + u`.
pub fn shift_param(h: HashStrip, phi: &CuttingStrip) -> Result<i64> {
    match h {
        HashStrip::Proper { a, d } => Ok(a + phi.below_count(a, d)),
        _ => Err(Error::NotProper),
    }
}

/// Realizes the sub-strip `phi[a, d]` as a standalone skew shape by
/// walking its steps from the bottom-left box, placed so the ending box
/// lands in row 1.  Returns the shape together with the shift `m` from
/// embedded contents back to original ones (`original = embedded + m`).
pub fn substrip_shape(phi: &CuttingStrip, a: i64, d: i64) -> Result<(SkewShape, i64)> {
    if a > d {
        return Err(Error::NotProper);
    }
    let u = phi.below_count(a, d);
    let mut row = u + 1;
    let mut col = 1i64;
    let mut cells = vec![(row, col)];
    for c in a + 1..=d {
        match phi.step(c) {
            Some(Step::Left) => col += 1,
            Some(Step::Below) => row -= 1,
            None => {
                return Err(Error::InvalidCuttingStrip(format!(
                    "content {c} outside {phi}"
                )))
            }
        }
        cells.push((row, col));
    }
    let rows = u as usize + 1;
    let mut max_col = vec![0i64; rows];
    let mut min_col = vec![i64::MAX; rows];
    for &(r, c) in &cells {
        let r = r as usize - 1;
        max_col[r] = max_col[r].max(c);
        min_col[r] = min_col[r].min(c);
    }
    let lambda = Partition::new(max_col.iter().map(|&c| c as usize).collect())?;
    let mu = Partition::new(min_col.iter().map(|&c| (c - 1) as usize).collect())?;
    let shape = skew_shape(&lambda, &mu)?;
    Ok((shape, a + u))
}
