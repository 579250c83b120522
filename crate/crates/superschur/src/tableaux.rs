//! Supertableaux: fillings of a skew shape from a marked alphabet.
//!
//! A filling is valid when rows and columns weakly increase, no unprimed
//! letter repeats within a column, and no primed letter repeats within a
//! row.  Enumeration is by backtracking in row-major cell order; an
//! independent brute-force oracle filters every raw filling against the
//! validity predicate.
//!
//! Three weightings share the one enumeration core:
//! * *ninth*: each cell contributes the doubly indexed variable `x[k,c]` or
//!   `y[l,c]` (rank within the unprimed/primed letters, cell content);
//! * *sixth* (factorial): `xs[k] + a[sigma(r)+c]` or `ys[l] - a[sigma(r)+c]`,
//!   obtained from the ninth form by substitution;
//! * *first*: `xs[k]` / `ys[l]`, forgetting contents.
//!
//! The module also implements the adjacent-letter cyclic rotation that
//! re-orders a mixed pair `r, r+1` of opposite primedness: entries of every
//! maximal `{r, r+1}`-component rotate one step toward the component's
//! upper-right end, and the two letters trade places in the alphabet.

use crate::alphabets::MarkedAlphabet;
use crate::error::{Error, Result};
use crate::polyring::{self, Family, Monomial, Polynomial};
use crate::shapes::SkewShape;

/// Default ceiling on `size^cells`, the raw-filling count a brute-force
/// enumeration would visit.
pub const DEFAULT_MAX_TABLEAUX: u128 = 10_000_000;

/// A filled skew shape.  Entries are letters of some marked alphabet,
/// stored in row-major cell order; primedness lives in the alphabet, so all
/// weight computations take the alphabet as an argument.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperTableau {
    shape: SkewShape,
    entries: Vec<usize>,
}

impl std::hash::Hash for SuperTableau {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shape.lambda().parts().hash(state);
        self.shape.mu().parts().hash(state);
        self.entries.hash(state);
    }
}

impl SuperTableau {
    /// Wraps raw entries (row-major, one per cell).  Validity is not
    /// checked here; see [`is_valid`].
    pub fn from_entries(shape: &SkewShape, entries: Vec<usize>) -> SuperTableau {
        assert_eq!(
            entries.len(),
            shape.len(),
            "one entry per cell of {shape}"
        );
        SuperTableau { shape: shape.clone(), entries }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> usize {
        self.entries[i]
    }

    /// Text form: rows top to bottom, `*` for cells of the inner shape,
    /// a trailing apostrophe on primed letters.
    pub fn render(&self, alphabet: &MarkedAlphabet) -> String {
        let mut lines = Vec::new();
        for row in 1..=self.shape.lambda().len() {
            let mut parts = Vec::new();
            for col in 1..=self.shape.lambda().part(row) {
                if col <= self.shape.mu().part(row) {
                    parts.push("*".to_string());
                } else {
                    let e = self.entries[self.shape.cell_index(row, col).expect("cell")];
                    if alphabet.is_primed(e) {
                        parts.push(format!("{e}'"));
                    } else {
                        parts.push(e.to_string());
                    }
                }
            }
            lines.push(parts.join(" "));
        }
        lines.join("\n")
    }
}

/// The full validity predicate, checked pairwise per row and per column
/// (deliberately not sharing logic with the backtracking bounds).
pub fn is_valid(shape: &SkewShape, alphabet: &MarkedAlphabet, entries: &[usize]) -> bool {
    let cells = shape.cells();
    for i in 0..cells.len() {
        for j in (i + 1)..cells.len() {
            let (a, b) = (cells[i], cells[j]);
            let (ea, eb) = (entries[i], entries[j]);
            if a.row == b.row {
                // row-major order gives a.col < b.col
                if ea > eb || (ea == eb && alphabet.is_primed(ea)) {
                    return false;
                }
            }
            if a.col == b.col {
                // a.row < b.row: a is the upper cell
                if ea > eb || (ea == eb && !alphabet.is_primed(ea)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Visits every valid filling once, in row-major lexicographic order.
pub fn for_each_tableau(
    shape: &SkewShape,
    alphabet: &MarkedAlphabet,
    mut visit: impl FnMut(&[usize]),
) {
    fn rec(
        shape: &SkewShape,
        alphabet: &MarkedAlphabet,
        entries: &mut Vec<usize>,
        i: usize,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if i == shape.len() {
            visit(entries);
            return;
        }
        // Weak increase along rows and columns, with equality permitted
        // rightwards only for unprimed letters and downwards only for
        // primed ones.
        let mut lo = 1;
        if let Some(l) = shape.left_of(i) {
            let e = entries[l];
            lo = lo.max(if alphabet.is_primed(e) { e + 1 } else { e });
        }
        if let Some(u) = shape.above(i) {
            let e = entries[u];
            lo = lo.max(if alphabet.is_primed(e) { e } else { e + 1 });
        }
        for t in lo..=alphabet.size() {
            entries[i] = t;
            rec(shape, alphabet, entries, i + 1, visit);
        }
    }
    let mut entries = vec![0; shape.len()];
    rec(shape, alphabet, &mut entries, 0, &mut visit);
}

/// All valid tableaux, materialized in enumeration order.
pub fn enumerate(shape: &SkewShape, alphabet: &MarkedAlphabet) -> Vec<SuperTableau> {
    let mut out = Vec::new();
    for_each_tableau(shape, alphabet, |entries| {
        out.push(SuperTableau::from_entries(shape, entries.to_vec()));
    });
    out
}

/// `size^cells`, the number of raw fillings; `None` on u128 overflow.
pub fn raw_fill_estimate(shape: &SkewShape, alphabet: &MarkedAlphabet) -> Option<u128> {
    (alphabet.size() as u128).checked_pow(shape.len() as u32)
}

/// Brute-force oracle: walks all `size^cells` fillings and keeps the valid
/// ones.  Refuses to start when the raw count exceeds `limit`.
pub fn enumerate_oracle(
    shape: &SkewShape,
    alphabet: &MarkedAlphabet,
    limit: u128,
) -> Result<Vec<SuperTableau>> {
    let estimate = raw_fill_estimate(shape, alphabet).unwrap_or(u128::MAX);
    if estimate > limit {
        return Err(Error::TooLarge { estimate, limit });
    }
    let n = shape.len();
    let size = alphabet.size();
    let mut out = Vec::new();
    let mut entries = vec![1usize; n];
    loop {
        if is_valid(shape, alphabet, &entries) {
            out.push(SuperTableau::from_entries(shape, entries.clone()));
        }
        // Odometer increment, last cell fastest: lexicographic order.
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if entries[i] < size {
                entries[i] += 1;
                break;
            }
            entries[i] = 1;
        }
    }
}

/// The ninth-variation factor of one cell: `x[k,c]` for unprimed letters,
/// `y[l,c]` for primed ones.
pub fn factor9(alphabet: &MarkedAlphabet, letter: usize, content: i64) -> polyring::Variable {
    match alphabet.y_index(letter) {
        Some(l) => polyring::y(l, content),
        None => polyring::x(alphabet.x_index(letter).expect("unprimed rank"), content),
    }
}

/// The sixth-variation (factorial) factor of one cell:
/// `xs[k] + a[sigma(r)+c]` or `ys[l] - a[sigma(r)+c]`.
pub fn factor6(alphabet: &MarkedAlphabet, letter: usize, content: i64) -> Polynomial {
    let shift = alphabet.sigma(letter).expect("letter in alphabet") + content;
    let a = Polynomial::var(polyring::a(shift));
    match alphabet.y_index(letter) {
        Some(l) => &Polynomial::var(polyring::ys(l)) - &a,
        None => {
            let k = alphabet.x_index(letter).expect("unprimed rank");
            &Polynomial::var(polyring::xs(k)) + &a
        }
    }
}

/// Ninth-variation weight of one filling: the product of its cell factors,
/// a single monomial.
pub fn weight9(shape: &SkewShape, alphabet: &MarkedAlphabet, entries: &[usize]) -> Monomial {
    Monomial::from_pairs(
        shape
            .cells()
            .iter()
            .zip(entries)
            .map(|(cell, &e)| (factor9(alphabet, e, cell.content()), 1)),
    )
}

/// Sixth-variation weight of one filling: the product of its factorial
/// factors.
pub fn weight6(shape: &SkewShape, alphabet: &MarkedAlphabet, entries: &[usize]) -> Polynomial {
    let mut w = Polynomial::one();
    for (cell, &e) in shape.cells().iter().zip(entries) {
        w *= &factor6(alphabet, e, cell.content());
    }
    w
}

/// The ninth-variation skew Schur function: the weight sum over all
/// tableaux, with each cell's content shifted by `shift`.
pub fn schur9_shifted(shape: &SkewShape, alphabet: &MarkedAlphabet, shift: i64) -> Polynomial {
    let mut acc = Polynomial::zero();
    for_each_tableau(shape, alphabet, |entries| {
        let m = Monomial::from_pairs(
            shape
                .cells()
                .iter()
                .zip(entries)
                .map(|(cell, &e)| (factor9(alphabet, e, cell.content() + shift), 1)),
        );
        acc.add_monomial(m, 1);
    });
    acc
}

/// The ninth-variation skew Schur function.
pub fn schur9(shape: &SkewShape, alphabet: &MarkedAlphabet) -> Polynomial {
    schur9_shifted(shape, alphabet, 0)
}

fn require_ninth(p: &Polynomial) -> Result<()> {
    for v in p.variables_used() {
        if v.family != Family::X && v.family != Family::Y {
            return Err(Error::ForeignFamily(v));
        }
    }
    Ok(())
}

/// First-variation specialization: `x[k,c] -> xs[k]`, `y[l,c] -> ys[l]`.
pub fn specialize_first(p: &Polynomial) -> Result<Polynomial> {
    require_ninth(p)?;
    Ok(p.substitute_with(|v| {
        Some(Polynomial::var(match v.family {
            Family::X => polyring::xs(v.i as usize),
            Family::Y => polyring::ys(v.i as usize),
            _ => unreachable!("checked ninth-variation"),
        }))
    }))
}

/// Sixth-variation specialization: `x[k,c] -> xs[k] + a[sigma+c]` and
/// `y[l,c] -> ys[l] - a[sigma+c]`, recovering each variable's letter (and
/// hence sigma) from the alphabet.
pub fn specialize_sixth(p: &Polynomial, alphabet: &MarkedAlphabet) -> Result<Polynomial> {
    require_ninth(p)?;
    for v in p.variables_used() {
        let rank = v.i as usize;
        let in_range = match v.family {
            Family::X => rank >= 1 && rank <= alphabet.m(),
            Family::Y => rank >= 1 && rank <= alphabet.n(),
            _ => unreachable!("checked ninth-variation"),
        };
        if !in_range {
            return Err(Error::OutOfRangeLetter { letter: rank, size: alphabet.size() });
        }
    }
    Ok(p.substitute_with(|v| {
        let letter = match v.family {
            Family::X => alphabet.unprimed_letter(v.i as usize),
            Family::Y => alphabet.primed_letter(v.i as usize),
            _ => unreachable!("checked ninth-variation"),
        };
        Some(factor6(alphabet, letter, v.j))
    }))
}

/// The factorial (sixth-variation) skew Schur function, defined as the
/// sixth specialization of the ninth form.
pub fn schur6(shape: &SkewShape, alphabet: &MarkedAlphabet) -> Polynomial {
    specialize_sixth(&schur9(shape, alphabet), alphabet).expect("ninth form by construction")
}

/// The classical supersymmetric skew Schur function in `xs[1..=m]`,
/// `ys[1..=n]`: first specialization over the all-primes-last alphabet.
pub fn schur1(shape: &SkewShape, m: usize, n: usize) -> Polynomial {
    let alphabet = crate::alphabets::make_alphabet(m + n, m + 1..=m + n)
        .expect("primes-last alphabet");
    specialize_first(&schur9(shape, &alphabet)).expect("ninth form by construction")
}

/// Cells of one maximal `{r, r+1}`-component, ordered along the strip from
/// its bottom-left end to its top-right end.
fn component_paths(t: &SuperTableau, r: usize) -> Vec<Vec<usize>> {
    let shape = t.shape();
    let in_pair: Vec<bool> = t.entries().iter().map(|&e| e == r || e == r + 1).collect();
    let mut comp = vec![usize::MAX; shape.len()];
    let mut n_comps = 0;
    for i in 0..shape.len() {
        if !in_pair[i] || comp[i] != usize::MAX {
            continue;
        }
        let mut stack = vec![i];
        comp[i] = n_comps;
        while let Some(j) = stack.pop() {
            let cell = shape.cells()[j];
            let nbrs = [
                (cell.row.wrapping_sub(1), cell.col),
                (cell.row + 1, cell.col),
                (cell.row, cell.col.wrapping_sub(1)),
                (cell.row, cell.col + 1),
            ];
            for (nr, nc) in nbrs {
                if let Some(k) = shape.cell_index(nr, nc) {
                    if in_pair[k] && comp[k] == usize::MAX {
                        comp[k] = n_comps;
                        stack.push(k);
                    }
                }
            }
        }
        n_comps += 1;
    }
    let mut paths = Vec::with_capacity(n_comps);
    for c in 0..n_comps {
        let members: Vec<usize> = (0..shape.len()).filter(|&i| comp[i] == c).collect();
        let is_member = |row: usize, col: usize| {
            shape
                .cell_index(row, col)
                .is_some_and(|k| comp[k] == c)
        };
        // The start has no component neighbour to its left or below.
        let &start = members
            .iter()
            .find(|&&i| {
                let cell = shape.cells()[i];
                !is_member(cell.row, cell.col.wrapping_sub(1)) && !is_member(cell.row + 1, cell.col)
            })
            .expect("strip has a bottom-left end");
        let mut path = vec![start];
        loop {
            let cell = shape.cells()[*path.last().unwrap()];
            if is_member(cell.row, cell.col + 1) {
                path.push(shape.cell_index(cell.row, cell.col + 1).unwrap());
            } else if is_member(cell.row.wrapping_sub(1), cell.col) {
                path.push(shape.cell_index(cell.row - 1, cell.col).unwrap());
            } else {
                break;
            }
        }
        assert_eq!(
            path.len(),
            members.len(),
            "a valid tableau's {{r, r+1}}-component is a strip"
        );
        paths.push(path);
    }
    paths
}

fn rotate_and_swap(
    t: &SuperTableau,
    alphabet: &MarkedAlphabet,
    r: usize,
    forward: bool,
) -> Result<(SuperTableau, MarkedAlphabet)> {
    let swapped = alphabet.swap_adjacent(r)?;
    let mut entries = t.entries().to_vec();
    for path in component_paths(t, r) {
        let old: Vec<usize> = path.iter().map(|&i| t.entry(i)).collect();
        let len = path.len();
        for (pos, &i) in path.iter().enumerate() {
            entries[i] = if forward {
                old[(pos + len - 1) % len]
            } else {
                old[(pos + 1) % len]
            };
        }
    }
    // The two letters trade places in the swapped alphabet.
    for e in &mut entries {
        if *e == r {
            *e = r + 1;
        } else if *e == r + 1 {
            *e = r;
        }
    }
    debug_assert!(is_valid(t.shape(), &swapped, &entries));
    Ok((SuperTableau::from_entries(t.shape(), entries), swapped))
}

/// Rotates every maximal `{r, r+1}`-component one step toward its
/// upper-right end (the end entry wrapping to the start) and re-reads the
/// result over the alphabet with `r` and `r+1` interchanged.  Requires the
/// two letters to have opposite primedness.
///
/// The map is a bijection between the tableau sets of the two alphabets and
/// preserves the *sum* of factorial weights strip-pair by strip-pair (not
/// each tableau's weight individually).
pub fn cyclic_shift_map(
    t: &SuperTableau,
    alphabet: &MarkedAlphabet,
    r: usize,
) -> Result<(SuperTableau, MarkedAlphabet)> {
    rotate_and_swap(t, alphabet, r, true)
}

/// Inverse of [`cyclic_shift_map`]: rotates each component one step toward
/// its bottom-left end.
pub fn cyclic_shift_inverse(
    t: &SuperTableau,
    alphabet: &MarkedAlphabet,
    r: usize,
) -> Result<(SuperTableau, MarkedAlphabet)> {
    rotate_and_swap(t, alphabet, r, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabets::{enumerate_splits, make_alphabet};
    use crate::shapes::{enumerate_skew_shapes, skew_shape, Partition};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn shape_of(lambda: &[usize], mu: &[usize]) -> SkewShape {
        skew_shape(
            &Partition::new(lambda.to_vec()).unwrap(),
            &Partition::new(mu.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn single_cell_enumeration_and_weight_sum() {
        let shape = shape_of(&[1], &[]);
        let alphabet = make_alphabet(2, [2]).unwrap();
        let ts = enumerate(&shape, &alphabet);
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].entries(), &[1]);
        assert_eq!(ts[1].entries(), &[2]);
        assert_eq!(schur9(&shape, &alphabet).to_string(), "x[1,0] + y[1,0]");
        assert_eq!(schur6(&shape, &alphabet).to_string(), "xs[1] + ys[1]");
    }

    #[test]
    fn two_cell_row_with_leading_prime() {
        // {1'<2}: 1'1' repeats a primed letter in a row, leaving two fillings.
        let shape = shape_of(&[2], &[]);
        let alphabet = make_alphabet(2, [1]).unwrap();
        let ts = enumerate(&shape, &alphabet);
        assert_eq!(
            ts.iter().map(|t| t.entries().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 2], vec![2, 2]]
        );
    }

    #[test]
    fn hook_over_two_unprimed_letters() {
        let shape = shape_of(&[2, 1], &[]);
        let alphabet = make_alphabet(2, []).unwrap();
        let ts = enumerate(&shape, &alphabet);
        assert_eq!(
            ts.iter().map(|t| t.entries().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 1, 2], vec![1, 2, 2]]
        );
        assert_eq!(
            schur9(&shape, &alphabet).to_string(),
            "x[1,0]*x[1,1]*x[2,-1] + x[1,0]*x[2,-1]*x[2,1]"
        );
    }

    #[test]
    fn oracle_matches_and_counts() {
        let row2 = shape_of(&[2], &[]);
        let plain = make_alphabet(2, []).unwrap();
        let ts = enumerate_oracle(&row2, &plain, DEFAULT_MAX_TABLEAUX).unwrap();
        assert_eq!(
            ts.iter().map(|t| t.entries().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 1], vec![1, 2], vec![2, 2]]
        );

        let empty = shape_of(&[2, 1], &[2, 1]);
        let ts = enumerate_oracle(&empty, &plain, DEFAULT_MAX_TABLEAUX).unwrap();
        assert_eq!(ts.len(), 1);
        assert!(ts[0].entries().is_empty());

        // All-primed column pair: primes repeat freely down a column, so
        // only weak increase filters the raw fillings.
        let col2 = shape_of(&[1, 1], &[]);
        let primed = make_alphabet(2, [1, 2]).unwrap();
        let ts = enumerate_oracle(&col2, &primed, DEFAULT_MAX_TABLEAUX).unwrap();
        assert_eq!(
            ts.iter().map(|t| t.entries().to_vec()).collect::<Vec<_>>(),
            vec![vec![1, 1], vec![1, 2], vec![2, 2]]
        );
    }

    #[test]
    fn oracle_guard_rejects_large_instances() {
        let shape = shape_of(&[6, 5, 5, 4, 4, 3], &[3, 2]);
        let alphabet = make_alphabet(9, [3, 5, 6, 7]).unwrap();
        let err = enumerate_oracle(&shape, &alphabet, DEFAULT_MAX_TABLEAUX).unwrap_err();
        match err {
            Error::TooLarge { estimate, limit } => {
                assert_eq!(estimate, (9u128).pow(22));
                assert_eq!(limit, DEFAULT_MAX_TABLEAUX);
            }
            other => panic!("expected TooLarge, got {other:?}"),
        }
    }

    #[test]
    fn enumerators_agree_on_small_instances() {
        for shape in enumerate_skew_shapes(4) {
            for size in 1..=3usize {
                for mask in 0u32..(1 << size) {
                    let primed: Vec<usize> =
                        (1..=size).filter(|r| mask >> (r - 1) & 1 == 1).collect();
                    let alphabet = make_alphabet(size, primed).unwrap();
                    let fast = enumerate(&shape, &alphabet);
                    let slow =
                        enumerate_oracle(&shape, &alphabet, DEFAULT_MAX_TABLEAUX).unwrap();
                    assert_eq!(fast, slow, "shape {shape}, alphabet {alphabet}");
                }
            }
        }
    }

    /// The 22-cell running example: its filling, ninth-variation weight,
    /// and factorial factor array.
    fn running_example() -> (SkewShape, MarkedAlphabet, SuperTableau) {
        let shape = shape_of(&[6, 5, 5, 4, 4, 3], &[3, 2]);
        let alphabet = make_alphabet(9, [3, 5, 6, 7]).unwrap();
        let entries = vec![
            3, 5, 8, // row 1
            2, 3, 5, // row 2
            1, 1, 3, 4, 9, // row 3
            3, 4, 4, 6, // row 4
            3, 7, 8, 8, // row 5
            4, 8, 9, // row 6
        ];
        let t = SuperTableau::from_entries(&shape, entries);
        (shape, alphabet, t)
    }

    #[test]
    fn running_example_ninth_weight() {
        let (shape, alphabet, t) = running_example();
        assert!(is_valid(&shape, &alphabet, t.entries()));
        let w = weight9(&shape, &alphabet, t.entries());
        assert_eq!(w.degree(), 22);
        assert_eq!(
            w.to_string(),
            "x[1,-2]*x[1,-1]*x[2,1]*x[3,-5]*x[3,-2]*x[3,-1]*x[3,1]\
             *x[4,-4]*x[4,-2]*x[4,-1]*x[4,5]*x[5,-3]*x[5,2]\
             *y[1,-4]*y[1,-3]*y[1,0]*y[1,2]*y[1,3]*y[2,3]*y[2,4]*y[3,0]*y[4,-3]"
        );
    }

    #[test]
    fn running_example_factorial_factors() {
        let (shape, alphabet, t) = running_example();
        let factors: Vec<String> = shape
            .cells()
            .iter()
            .zip(t.entries())
            .map(|(cell, &e)| factor6(&alphabet, e, cell.content()).to_string())
            .collect();
        let expected = [
            "ys[1] - a[5]", "ys[2] - a[6]", "xs[4] + a[5]",
            "xs[2] + a[3]", "ys[1] - a[4]", "ys[2] - a[5]",
            "xs[1] + a[-1]", "xs[1] + a[0]", "ys[1] - a[2]", "xs[3] + a[3]", "xs[5] + a[3]",
            "ys[1] - a[-1]", "xs[3] + a[0]", "xs[3] + a[1]", "ys[3] - a[1]",
            "ys[1] - a[-2]", "ys[4] - a[-3]", "xs[4] + a[-2]", "xs[4] + a[-1]",
            "xs[3] + a[-3]", "xs[4] + a[-4]", "xs[5] + a[-2]",
        ];
        assert_eq!(factors, expected);
    }

    #[test]
    fn running_example_render() {
        let (_, alphabet, t) = running_example();
        let text = t.render(&alphabet);
        let expected = "\
* * * 3' 5' 8
* * 2 3' 5'
1 1 3' 4 9
3' 4 4 6'
3' 7' 8 8
4 8 9";
        assert_eq!(text, expected);
    }

    #[test]
    fn first_specialization() {
        let p = Polynomial::var(polyring::x(3, 7));
        assert_eq!(specialize_first(&p).unwrap().to_string(), "xs[3]");

        let with_t = Polynomial::var(polyring::t());
        assert!(matches!(
            specialize_first(&with_t),
            Err(Error::ForeignFamily(_))
        ));
    }

    #[test]
    fn sixth_specialization_checks_ranks() {
        let alphabet = make_alphabet(2, [2]).unwrap();
        let p = Polynomial::var(polyring::x(2, 0));
        assert!(matches!(
            specialize_sixth(&p, &alphabet),
            Err(Error::OutOfRangeLetter { .. })
        ));
    }

    #[test]
    fn classical_schur_is_split_independent() {
        let shape = shape_of(&[2, 1], &[]);
        for (m, n) in [(1usize, 1usize), (2, 1), (1, 2)] {
            let direct = schur1(&shape, m, n);
            for alphabet in enumerate_splits(m, n) {
                let via = specialize_first(&schur9(&shape, &alphabet)).unwrap();
                assert_eq!(via, direct, "split {alphabet}");
            }
        }
    }

    /// The 12-cell strip used to illustrate the cyclic rotation, with its
    /// two fillings over {1 < 2'} and their images over {1' < 2}.
    fn rotation_strip() -> SkewShape {
        shape_of(&[6, 5, 5, 5, 5, 2, 2], &[4, 4, 4, 4, 1, 1])
    }

    #[test]
    fn cyclic_map_matches_worked_example() {
        let shape = rotation_strip();
        let before = make_alphabet(2, [2]).unwrap(); // {1 < 2'}
        let after = make_alphabet(2, [1]).unwrap(); // {1' < 2}

        let ts = enumerate(&shape, &before);
        // Entries are forced along the strip except at the upper-right end.
        assert_eq!(ts.len(), 2);
        let left1 = vec![1, 1, 2, 2, 2, 1, 1, 1, 2, 2, 1, 2];
        let left2 = vec![1, 2, 2, 2, 2, 1, 1, 1, 2, 2, 1, 2];
        assert_eq!(
            ts.iter().map(|t| t.entries().to_vec()).collect::<Vec<_>>(),
            vec![left1.clone(), left2.clone()]
        );

        let right1 = vec![1, 2, 1, 1, 1, 1, 2, 2, 2, 1, 2, 2];
        let right2 = vec![1, 2, 1, 1, 1, 1, 2, 2, 2, 1, 1, 2];
        let (img1, alph1) = cyclic_shift_map(&ts[0], &before, 1).unwrap();
        assert_eq!(img1.entries(), &right1[..]);
        assert_eq!(alph1, after);
        let (img2, _) = cyclic_shift_map(&ts[1], &before, 1).unwrap();
        assert_eq!(img2.entries(), &right2[..]);

        // The pair-sum of factorial weights survives the rotation even
        // though the individual weights do not.
        let sum_before = &weight6(&shape, &before, &left1) + &weight6(&shape, &before, &left2);
        let sum_after = &weight6(&shape, &after, &right1) + &weight6(&shape, &after, &right2);
        assert_eq!(sum_before, sum_after);
        assert_ne!(
            weight6(&shape, &before, &left1),
            weight6(&shape, &after, &right1)
        );
    }

    #[test]
    fn cyclic_map_round_trip_and_bijectivity() {
        let shape = shape_of(&[2, 2], &[]);
        let before = make_alphabet(2, [2]).unwrap();
        let after = before.swap_adjacent(1).unwrap();
        let source = enumerate(&shape, &before);
        let target = enumerate(&shape, &after);

        let mut images = HashSet::new();
        for t in &source {
            let (img, alph) = cyclic_shift_map(t, &before, 1).unwrap();
            assert_eq!(alph, after);
            assert!(is_valid(&shape, &after, img.entries()));
            let (back, alph_back) = cyclic_shift_inverse(&img, &after, 1).unwrap();
            assert_eq!(&back, t);
            assert_eq!(alph_back, before);
            images.insert(img);
        }
        assert_eq!(images.len(), source.len());
        assert_eq!(images, target.iter().cloned().collect::<HashSet<_>>());
    }

    #[test]
    fn cyclic_map_requires_mixed_pair() {
        let shape = shape_of(&[1], &[]);
        let alphabet = make_alphabet(2, []).unwrap();
        let t = SuperTableau::from_entries(&shape, vec![1]);
        assert!(matches!(
            cyclic_shift_map(&t, &alphabet, 1),
            Err(Error::SamePrimedness { r: 1 })
        ));
    }

    #[test]
    fn singleton_component_keeps_its_symbol() {
        // A single cell holding the unprimed letter of the pair maps to the
        // letter's new position, preserving the ninth-variation weight.
        let shape = shape_of(&[1], &[]);
        let before = make_alphabet(2, [2]).unwrap();
        let t = SuperTableau::from_entries(&shape, vec![1]);
        let (img, after) = cyclic_shift_map(&t, &before, 1).unwrap();
        assert_eq!(img.entries(), &[2]);
        assert_eq!(
            weight9(&shape, &before, t.entries()),
            weight9(&shape, &after, img.entries())
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn factorial_sum_is_invariant_under_adjacent_swap(
            shape_idx in 0usize..26,
            size in 2usize..4,
            mask in 0u32..8,
            r in 1usize..3,
        ) {
            let shapes = enumerate_skew_shapes(4);
            prop_assume!(shape_idx < shapes.len());
            let shape = &shapes[shape_idx];
            prop_assume!(r < size);
            let primed: Vec<usize> = (1..=size).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let alphabet = make_alphabet(size, primed).unwrap();
            prop_assume!(alphabet.is_primed(r) != alphabet.is_primed(r + 1));
            let swapped = alphabet.swap_adjacent(r).unwrap();
            prop_assert_eq!(schur6(shape, &alphabet), schur6(shape, &swapped));
        }

        #[test]
        fn diagonals_never_repeat_a_letter(shape_idx in 0usize..26, mask in 0u32..8) {
            let shapes = enumerate_skew_shapes(4);
            prop_assume!(shape_idx < shapes.len());
            let shape = &shapes[shape_idx];
            let primed: Vec<usize> = (1..=3).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let alphabet = make_alphabet(3, primed).unwrap();
            for t in enumerate(shape, &alphabet) {
                let mut seen = HashSet::new();
                for (cell, &e) in shape.cells().iter().zip(t.entries()) {
                    prop_assert!(seen.insert((cell.content(), e)),
                        "letter {e} repeats on diagonal {} of {shape}", cell.content());
                }
            }
        }
    }
}
