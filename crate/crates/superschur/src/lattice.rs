//! The directed lattice underlying the determinant identity, and the
//! bijection between supertableaux and tuples of non-intersecting paths.
//!
//! Vertices are points `(r, c)` with `r` in `0 ..= m+n+1` (letters plus two
//! boundary rows) and `c` running over the shape's content range extended
//! one column below the minimum.  An entry `r` (unprimed) or `r'` (primed)
//! in a box of content `c` becomes an edge whose head is `(r, c)`; the
//! head's predecessor is dictated by the alphabet and the cutting strip:
//!
//! | condition                      | edge into `(r, c)` from |
//! |--------------------------------|-------------------------|
//! | `r` unprimed, step `c` = Left  | `(r, c-1)`              |
//! | `r` primed,   step `c` = Below | `(r, c-1)`              |
//! | `r` unprimed, step `c` = Below | `(r+1, c-1)`            |
//! | `r` primed,   step `c` = Left  | `(r-1, c-1)`            |
//!
//! Within a fixed column `c` the connector edges all point one way —
//! toward larger `r` when the extended step at `c+1` is Left, toward
//! smaller `r` when it is Below — and carry weight 1.  Each strip of an
//! outside decomposition contributes one path between endpoints read off
//! the strip's boundary behaviour, and a tableau corresponds to a tuple of
//! pairwise vertex-disjoint paths.

use crate::alphabets::MarkedAlphabet;
use crate::error::{Error, Result};
use crate::polyring::{x, y, Monomial, Variable};
use crate::strips::{CuttingStrip, OutsideDecomposition, Step};
use crate::tableaux::{self, SuperTableau};
use std::collections::HashSet;

/// A lattice vertex `(r, c)`.
pub type Point = (i64, i64);

/// The lattice determined by an alphabet and a cutting strip.  The edge
/// table is realized as queries rather than stored.
#[derive(Clone, Debug)]
pub struct LatticeModel {
    alphabet: MarkedAlphabet,
    phi: CuttingStrip,
}

/// Builds the lattice for an alphabet and cutting strip.
pub fn build_lattice(alphabet: &MarkedAlphabet, phi: &CuttingStrip) -> LatticeModel {
    LatticeModel {
        alphabet: alphabet.clone(),
        phi: phi.clone(),
    }
}

impl LatticeModel {
    pub fn alphabet(&self) -> &MarkedAlphabet {
        &self.alphabet
    }

    pub fn phi(&self) -> &CuttingStrip {
        &self.phi
    }

    /// Index of the bottom boundary row.
    pub fn top_row(&self) -> i64 {
        self.alphabet.size() as i64 + 1
    }

    /// Inclusive column range: contents extended one below the minimum.
    pub fn column_range(&self) -> (i64, i64) {
        let (lo, hi) = self.phi.range();
        (lo - 1, hi)
    }

    pub fn contains(&self, v: Point) -> bool {
        let (clo, chi) = self.column_range();
        0 <= v.0 && v.0 <= self.top_row() && clo <= v.1 && v.1 <= chi
    }

    /// Row increment of the weight-1 connector edges in column `c`: `+1`
    /// when they point toward larger rows, `-1` toward smaller.
    pub fn connector_delta(&self, c: i64) -> i64 {
        match self.phi.extended_step(c + 1) {
            Step::Left => 1,
            Step::Below => -1,
        }
    }

    /// The edge carrying letter `r` in a box of content `c`, as
    /// `(tail, head)` with head `(r, c)`.
    pub fn entry_edge(&self, letter: usize, c: i64) -> (Point, Point) {
        let r = letter as i64;
        let tail_row = match (self.alphabet.is_primed(letter), self.phi.extended_step(c)) {
            (false, Step::Left) => r,
            (true, Step::Below) => r,
            (false, Step::Below) => r + 1,
            (true, Step::Left) => r - 1,
        };
        ((tail_row, c - 1), (r, c))
    }

    /// Weight of the entry edge with head `(r, c)`.
    pub fn entry_weight(&self, letter: usize, c: i64) -> Variable {
        if self.alphabet.is_primed(letter) {
            y(self.alphabet.y_index(letter).expect("primed letter"), c)
        } else {
            x(self.alphabet.x_index(letter).expect("unprimed letter"), c)
        }
    }

    /// All edges leaving `v`, in a fixed deterministic order.
    pub fn successors(&self, v: Point) -> Vec<Point> {
        let (vr, vc) = v;
        let mut out = Vec::new();
        let next = (vr + self.connector_delta(vc), vc);
        if self.contains(next) {
            out.push(next);
        }
        let c = vc + 1;
        let (lo, hi) = self.phi.range();
        if lo <= c && c <= hi {
            let letter_ok = |r: i64| r >= 1 && r <= self.alphabet.size() as i64;
            match self.phi.extended_step(c) {
                Step::Left => {
                    if letter_ok(vr) && !self.alphabet.is_primed(vr as usize) {
                        out.push((vr, c));
                    }
                    if letter_ok(vr + 1) && self.alphabet.is_primed(vr as usize + 1) {
                        out.push((vr + 1, c));
                    }
                }
                Step::Below => {
                    if letter_ok(vr) && self.alphabet.is_primed(vr as usize) {
                        out.push((vr, c));
                    }
                    if letter_ok(vr - 1) && !self.alphabet.is_primed(vr as usize - 1) {
                        out.push((vr - 1, c));
                    }
                }
            }
        }
        out
    }

    /// Every directed path from `start` to `goal`, vertex lists in DFS
    /// order.
    pub fn all_paths(&self, start: Point, goal: Point) -> Vec<Vec<Point>> {
        let mut out = Vec::new();
        let mut cur = vec![start];
        self.extend_paths(&mut cur, goal, &mut out);
        out
    }

    fn extend_paths(&self, cur: &mut Vec<Point>, goal: Point, out: &mut Vec<Vec<Point>>) {
        let v = *cur.last().unwrap();
        if v == goal {
            out.push(cur.clone());
            return;
        }
        if v.1 > goal.1 {
            return;
        }
        for w in self.successors(v) {
            // One-way columns and rightward-only column changes make
            // revisits impossible except via the immediate connector,
            // which strictly advances as well; no cycle check needed.
            cur.push(w);
            self.extend_paths(cur, goal, out);
            cur.pop();
        }
    }
}

/// An ordered tuple of directed lattice paths, one per strip.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathTuple {
    paths: Vec<Vec<Point>>,
}

impl PathTuple {
    pub fn new(paths: Vec<Vec<Point>>) -> PathTuple {
        PathTuple { paths }
    }

    pub fn paths(&self) -> &[Vec<Point>] {
        &self.paths
    }

    /// True when the paths are pairwise vertex-disjoint.
    pub fn is_nonintersecting(&self) -> bool {
        let mut seen = HashSet::new();
        for path in &self.paths {
            for &v in path {
                if !seen.insert(v) {
                    return false;
                }
            }
        }
        true
    }

    /// Product of the entry-edge weights (connector edges weigh 1).
    pub fn weight(&self, lattice: &LatticeModel) -> Monomial {
        let mut w = Monomial::one();
        for path in &self.paths {
            for pair in path.windows(2) {
                if pair[1].1 == pair[0].1 + 1 {
                    let letter = pair[1].0 as usize;
                    w = w.mul(&Monomial::var(lattice.entry_weight(letter, pair[1].1)));
                }
            }
        }
        w
    }
}

/// Start and end points `(P_p, Q_p)` for each strip of the decomposition:
/// a strip beginning with a Left step starts on the left boundary (row 0),
/// otherwise on the bottom (row m+n+1); a strip whose continuation would
/// step Left ends on the right boundary (row m+n+1), otherwise on the top.
pub fn endpoints(
    decomp: &OutsideDecomposition,
    alphabet: &MarkedAlphabet,
) -> Vec<(Point, Point)> {
    let bottom = alphabet.size() as i64 + 1;
    let phi = decomp.phi();
    decomp
        .strips()
        .iter()
        .map(|s| {
            let (a, b) = s.range();
            let p = match phi.extended_step(a) {
                Step::Left => (0, a - 1),
                Step::Below => (bottom, a - 1),
            };
            let q = match phi.extended_step(b + 1) {
                Step::Left => (bottom, b),
                Step::Below => (0, b),
            };
            (p, q)
        })
        .collect()
}

/// Maps a tableau to its path tuple: the entry in each box of content `c`
/// becomes the entry edge with head in column `c`, and each column is
/// completed with its one-way connector edges.
pub fn tableau_to_paths(
    t: &SuperTableau,
    decomp: &OutsideDecomposition,
    alphabet: &MarkedAlphabet,
) -> Result<PathTuple> {
    if t.shape() != decomp.shape() {
        return Err(Error::MalformedPath(
            "tableau shape differs from the decomposition's".into(),
        ));
    }
    let lattice = build_lattice(alphabet, decomp.phi());
    let eps = endpoints(decomp, alphabet);
    let mut paths = Vec::with_capacity(decomp.len());
    for (strip, &(p, q)) in decomp.strips().iter().zip(&eps) {
        let (a, b) = strip.range();
        let mut verts = vec![p];
        let mut cur = p.0;
        for (offset, &i) in strip.cell_indices().iter().enumerate() {
            let c = a + offset as i64;
            let letter = t.entry(i);
            let ((tail_row, _), head) = lattice.entry_edge(letter, c);
            let delta = lattice.connector_delta(c - 1);
            if (tail_row - cur).signum() * delta < 0 {
                return Err(Error::MalformedPath(format!(
                    "entry {letter} at content {c} unreachable from row {cur}"
                )));
            }
            while cur != tail_row {
                cur += delta;
                verts.push((cur, c - 1));
            }
            verts.push(head);
            cur = head.0;
        }
        let delta = lattice.connector_delta(b);
        if (q.0 - cur).signum() * delta < 0 {
            return Err(Error::MalformedPath(format!(
                "end point {q:?} unreachable from row {cur}"
            )));
        }
        while cur != q.0 {
            cur += delta;
            verts.push((cur, b));
        }
        paths.push(verts);
    }
    Ok(PathTuple::new(paths))
}

/// Inverse of [`tableau_to_paths`]: reads the entry letters off the
/// rightward edges of each path.  Rejects tuples that stray from the edge
/// table, have wrong endpoints, or decode to an invalid filling.
pub fn paths_to_tableau(
    pt: &PathTuple,
    decomp: &OutsideDecomposition,
    alphabet: &MarkedAlphabet,
) -> Result<SuperTableau> {
    if pt.paths().len() != decomp.len() {
        return Err(Error::MalformedPath(format!(
            "{} paths for {} strips",
            pt.paths().len(),
            decomp.len()
        )));
    }
    let lattice = build_lattice(alphabet, decomp.phi());
    let eps = endpoints(decomp, alphabet);
    let mut entries = vec![0usize; decomp.shape().len()];
    for ((strip, &(p, q)), path) in decomp.strips().iter().zip(&eps).zip(pt.paths()) {
        if path.first() != Some(&p) || path.last() != Some(&q) {
            return Err(Error::MalformedPath(format!(
                "path endpoints differ from ({p:?}, {q:?})"
            )));
        }
        let (a, _) = strip.range();
        let mut next_cell = 0usize;
        for pair in path.windows(2) {
            let (v, w) = (pair[0], pair[1]);
            if !lattice.contains(v) || !lattice.contains(w) {
                return Err(Error::MalformedPath(format!("vertex off the lattice: {w:?}")));
            }
            if w.1 == v.1 {
                if w.0 - v.0 != lattice.connector_delta(v.1) {
                    return Err(Error::MalformedPath(format!(
                        "connector {v:?} -> {w:?} against the column direction"
                    )));
                }
            } else if w.1 == v.1 + 1 {
                let letter = w.0;
                if letter < 1 || letter > alphabet.size() as i64 {
                    return Err(Error::MalformedPath(format!(
                        "rightward edge into non-letter row {letter}"
                    )));
                }
                let letter = letter as usize;
                if lattice.entry_edge(letter, w.1) != (v, w) {
                    return Err(Error::MalformedPath(format!(
                        "edge {v:?} -> {w:?} not in the edge table"
                    )));
                }
                let expected = a + next_cell as i64;
                if w.1 != expected || next_cell >= strip.len() {
                    return Err(Error::MalformedPath(format!(
                        "entry edge at content {} where {expected} was expected",
                        w.1
                    )));
                }
                entries[strip.cell_indices()[next_cell]] = letter;
                next_cell += 1;
            } else {
                return Err(Error::MalformedPath(format!("jump {v:?} -> {w:?}")));
            }
        }
        if next_cell != strip.len() {
            return Err(Error::MalformedPath(format!(
                "path carries {next_cell} entries for a strip of {}",
                strip.len()
            )));
        }
    }
    if !tableaux::is_valid(decomp.shape(), alphabet, &entries) {
        return Err(Error::MalformedPath(
            "decoded filling violates the tableau conditions".into(),
        ));
    }
    Ok(SuperTableau::from_entries(decomp.shape(), entries))
}

/// All non-intersecting path tuples with the decomposition's endpoints,
/// found by independent depth-first search over the edge table.
pub fn enumerate_nonintersecting_tuples(
    decomp: &OutsideDecomposition,
    alphabet: &MarkedAlphabet,
) -> Vec<PathTuple> {
    let lattice = build_lattice(alphabet, decomp.phi());
    let eps = endpoints(decomp, alphabet);
    let per_strip: Vec<Vec<Vec<Point>>> = eps
        .iter()
        .map(|&(p, q)| lattice.all_paths(p, q))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut used: HashSet<Point> = HashSet::new();
    fn backtrack(
        per_strip: &[Vec<Vec<Point>>],
        chosen: &mut Vec<usize>,
        used: &mut HashSet<Point>,
        out: &mut Vec<PathTuple>,
    ) {
        let p = chosen.len();
        if p == per_strip.len() {
            out.push(PathTuple::new(
                chosen
                    .iter()
                    .enumerate()
                    .map(|(i, &j)| per_strip[i][j].clone())
                    .collect(),
            ));
            return;
        }
        'next: for (j, path) in per_strip[p].iter().enumerate() {
            for v in path {
                if used.contains(v) {
                    continue 'next;
                }
            }
            used.extend(path.iter().copied());
            chosen.push(j);
            backtrack(per_strip, chosen, used, out);
            chosen.pop();
            for v in path {
                used.remove(v);
            }
        }
    }
    backtrack(&per_strip, &mut chosen, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabets::make_alphabet;
    use crate::shapes::{skew_shape, Partition};
    use crate::strips::{cut, cutting_strip, enumerate_cutting_strips, CuttingStrip};
    use crate::tableaux::{enumerate, weight9};
    use std::collections::HashMap;

    fn shape_of(lambda: &[usize], mu: &[usize]) -> crate::shapes::SkewShape {
        skew_shape(
            &Partition::new(lambda.to_vec()).unwrap(),
            &Partition::new(mu.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn paper_setup() -> (crate::shapes::SkewShape, MarkedAlphabet, CuttingStrip) {
        let shape = shape_of(&[6, 5, 5, 4, 4, 3], &[3, 2]);
        let alphabet = make_alphabet(9, [3, 5, 6, 7]).unwrap();
        let phi = cutting_strip((-5, 5), [-5, -3, -2, 0, 4]).unwrap();
        (shape, alphabet, phi)
    }

    #[test]
    fn edge_table_matches_the_figure() {
        let (_, alphabet, phi) = paper_setup();
        let lattice = build_lattice(&alphabet, &phi);
        assert_eq!(lattice.top_row(), 10);
        assert_eq!(lattice.column_range(), (-6, 5));

        // Horizontal entry edges (tail on the same row) exist for unprimed
        // rows exactly in the Left columns and for primed rows exactly in
        // the Below columns, the minimum content counting as Below.
        let left = [-4, -1, 1, 2, 3, 5];
        let below = [-5, -3, -2, 0, 4];
        for r in 1..=9usize {
            for c in -5i64..=5 {
                let (tail, head) = lattice.entry_edge(r, c);
                assert_eq!(head, (r as i64, c));
                let horizontal = tail.0 == r as i64;
                let expected = if alphabet.is_primed(r) {
                    below.contains(&c)
                } else {
                    left.contains(&c)
                };
                assert_eq!(horizontal, expected, "letter {r} content {c}");
                if !horizontal {
                    // Diagonals: unprimed from one row beyond, primed from
                    // one row before.
                    let shift = if alphabet.is_primed(r) { -1 } else { 1 };
                    assert_eq!(tail, (r as i64 + shift, c - 1));
                }
            }
        }

        // Connector directions per column.
        for c in [-5, -2, 0, 1, 2, 4, 5] {
            assert_eq!(lattice.connector_delta(c), 1, "column {c}");
        }
        for c in [-6, -4, -3, -1, 3] {
            assert_eq!(lattice.connector_delta(c), -1, "column {c}");
        }
    }

    #[test]
    fn degenerate_alphabets_give_one_way_grids() {
        // All unprimed, all Left: every entry edge is horizontal except in
        // the minimum-content column, and all interior connectors point
        // the same way.
        let alphabet = make_alphabet(3, []).unwrap();
        let phi = CuttingStrip::rows((0, 2));
        let lattice = build_lattice(&alphabet, &phi);
        assert_eq!(lattice.connector_delta(-1), -1);
        for c in 0..=2 {
            assert_eq!(lattice.connector_delta(c), 1);
        }
        for r in 1..=3usize {
            for c in 1..=2 {
                assert_eq!(lattice.entry_edge(r, c).0, (r as i64, c - 1));
            }
            // The starting column counts as Below, so unprimed entries
            // there ride a diagonal.
            assert_eq!(lattice.entry_edge(r, 0).0, (r as i64 + 1, -1));
        }

        // All primed, all Below: horizontal entry edges throughout, and
        // connectors one-way toward row 0 except past the last content.
        let alphabet = make_alphabet(3, [1, 2, 3]).unwrap();
        let phi = CuttingStrip::columns((0, 2));
        let lattice = build_lattice(&alphabet, &phi);
        for c in -1..=1 {
            assert_eq!(lattice.connector_delta(c), -1);
        }
        assert_eq!(lattice.connector_delta(2), 1);
        for r in 1..=3usize {
            for c in 0..=2 {
                assert_eq!(lattice.entry_edge(r, c).0, (r as i64, c - 1));
            }
        }
    }

    #[test]
    fn endpoint_goldens() {
        let (shape, alphabet, phi) = paper_setup();
        let decomp = cut(&shape, &phi).unwrap();
        let eps = endpoints(&decomp, &alphabet);
        assert_eq!(
            eps,
            vec![
                ((10, -6), (10, 2)),
                ((0, -5), (0, -1)),
                ((10, -4), (10, 0)),
                ((0, 0), (10, 5)),
                ((0, 2), (0, 3)),
            ]
        );

        // A single box starts on the bottom boundary and ends on the
        // right: its strip begins at the minimum content (a Below step)
        // and its continuation leaves the range (a Left step).
        let single = shape_of(&[1], &[]);
        let phi = CuttingStrip::rows((0, 0));
        let decomp = cut(&single, &phi).unwrap();
        let alphabet = make_alphabet(2, [2]).unwrap();
        assert_eq!(endpoints(&decomp, &alphabet), vec![((3, -1), (3, 0))]);
    }

    #[test]
    fn paper_tableau_maps_to_the_figure_paths() {
        let (shape, alphabet, phi) = paper_setup();
        let decomp = cut(&shape, &phi).unwrap();
        let entries = vec![
            3, 5, 8, 2, 3, 5, 1, 1, 3, 4, 9, 3, 4, 4, 6, 3, 7, 8, 8, 4, 8, 9,
        ];
        let t = SuperTableau::from_entries(&shape, entries);
        let pt = tableau_to_paths(&t, &decomp, &alphabet).unwrap();
        assert!(pt.is_nonintersecting());

        let expected: Vec<Vec<Point>> = vec![
            vec![
                (10, -6), (9, -6), (8, -6), (7, -6), (6, -6), (5, -6), (4, -5),
                (5, -5), (6, -5), (7, -5), (8, -5), (8, -4), (7, -4), (7, -3),
                (6, -3), (5, -3), (4, -2), (4, -1), (3, -1), (3, 0), (4, 0),
                (4, 1), (5, 1), (6, 1), (7, 1), (8, 1), (9, 1), (9, 2), (10, 2),
            ],
            vec![
                (0, -5), (1, -5), (2, -5), (3, -4), (3, -3), (2, -3), (1, -2),
                (1, -1), (0, -1),
            ],
            vec![
                (10, -4), (9, -3), (8, -2), (8, -1), (7, -1), (6, -1), (6, 0),
                (7, 0), (8, 0), (9, 0), (10, 0),
            ],
            vec![
                (0, 0), (1, 0), (2, 0), (2, 1), (3, 2), (4, 2), (5, 3), (5, 4),
                (6, 4), (7, 4), (8, 4), (8, 5), (9, 5), (10, 5),
            ],
            vec![(0, 2), (1, 2), (2, 2), (3, 3), (2, 3), (1, 3), (0, 3)],
        ];
        assert_eq!(pt.paths(), expected.as_slice());

        let back = paths_to_tableau(&pt, &decomp, &alphabet).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn round_trip_is_the_identity_exhaustively() {
        let shape = shape_of(&[2, 1], &[]);
        let alphabet = make_alphabet(2, [2]).unwrap();
        let (lo, hi) = shape.content_range().unwrap();
        for phi in [CuttingStrip::rows((lo, hi)), CuttingStrip::columns((lo, hi))] {
            let decomp = cut(&shape, &phi).unwrap();
            for t in enumerate(&shape, &alphabet) {
                let pt = tableau_to_paths(&t, &decomp, &alphabet).unwrap();
                assert!(pt.is_nonintersecting());
                assert_eq!(paths_to_tableau(&pt, &decomp, &alphabet).unwrap(), t);
            }
        }
    }

    #[test]
    fn tuple_counting_and_weights_match_the_tableaux() {
        let shapes = [
            shape_of(&[2], &[]),
            shape_of(&[1, 1], &[]),
            shape_of(&[2, 1], &[]),
            shape_of(&[2, 2], &[1]),
        ];
        let alphabets = [
            make_alphabet(2, []).unwrap(),
            make_alphabet(2, [1]).unwrap(),
            make_alphabet(2, [2]).unwrap(),
            make_alphabet(2, [1, 2]).unwrap(),
            make_alphabet(3, [2]).unwrap(),
        ];
        for shape in &shapes {
            for phi in enumerate_cutting_strips(shape).unwrap() {
                let decomp = cut(shape, &phi).unwrap();
                for alphabet in &alphabets {
                    let tableaux = enumerate(shape, alphabet);
                    let tuples = enumerate_nonintersecting_tuples(&decomp, alphabet);
                    assert_eq!(tableaux.len(), tuples.len(), "{shape} with {phi}");

                    let lattice = build_lattice(alphabet, &phi);
                    let mut lhs: HashMap<String, usize> = HashMap::new();
                    for t in &tableaux {
                        let w = weight9(shape, alphabet, t.entries());
                        *lhs.entry(format!("{:?}", w.factors())).or_default() += 1;
                    }
                    let mut rhs: HashMap<String, usize> = HashMap::new();
                    for pt in &tuples {
                        let w = pt.weight(&lattice);
                        *rhs.entry(format!("{:?}", w.factors())).or_default() += 1;
                    }
                    assert_eq!(lhs, rhs, "{shape} with {phi}");

                    // The forward map lands inside the enumerated tuples.
                    for t in &tableaux {
                        let pt = tableau_to_paths(t, &decomp, alphabet).unwrap();
                        assert!(pt.is_nonintersecting());
                        assert!(tuples.contains(&pt));
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_tuples_are_rejected() {
        let shape = shape_of(&[2, 1], &[]);
        let alphabet = make_alphabet(2, [2]).unwrap();
        let (lo, hi) = shape.content_range().unwrap();
        let phi = CuttingStrip::rows((lo, hi));
        let decomp = cut(&shape, &phi).unwrap();
        let t = enumerate(&shape, &alphabet).remove(0);
        let good = tableau_to_paths(&t, &decomp, &alphabet).unwrap();

        // Wrong endpoint.
        let mut bad = good.paths().to_vec();
        let first = bad[0][0];
        bad[0].insert(0, (first.0 - 1, first.1));
        assert!(matches!(
            paths_to_tableau(&PathTuple::new(bad), &decomp, &alphabet),
            Err(Error::MalformedPath(_))
        ));

        // A jump that is neither connector nor entry edge.
        let mut bad = good.paths().to_vec();
        let last = *bad[0].last().unwrap();
        bad[0].push((last.0, last.1 + 2));
        assert!(matches!(
            paths_to_tableau(&PathTuple::new(bad), &decomp, &alphabet),
            Err(Error::MalformedPath(_))
        ));

        // Wrong number of paths.
        assert!(matches!(
            paths_to_tableau(&PathTuple::new(vec![]), &decomp, &alphabet),
            Err(Error::MalformedPath(_))
        ));
    }
}
