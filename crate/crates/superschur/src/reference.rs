//! Frozen reference data for the bundled 22-box worked example, plus
//! recomputation and cell-level diffing.
//!
//! The example fixes the shape `(6,5,5,4,4,3)/(3,2)`, the nine-letter
//! alphabet with primed letters `{3,5,6,7}`, the cutting strip over
//! `[-5,5]` with below-steps at `{-3,-2,0,4}`, and one distinguished
//! supertableau.  [`golden`] returns the hand-checked tables; [`recompute`]
//! derives the same tables from the engine; [`diff`] names every cell on
//! which two table sets disagree, so a clean [`check`] pins the engine's
//! combinatorial conventions end to end.

use crate::alphabets::{make_alphabet, MarkedAlphabet};
use crate::shapes::{skew_shape, Partition, SkewShape};
use crate::strips::{
    cut, cutting_strip, hash_product, shift_param, CuttingStrip, HashStrip, OutsideDecomposition,
};
use crate::tableaux::{factor6, weight9, SuperTableau};
use serde::{Deserialize, Serialize};
use std::fmt;

/// One cell of the hash-product table: either a genuine strip (with its
/// shift parameter) or one of the two degenerate kinds, whose determinant
/// entries are the constants 1 and 0.
#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HashCell {
    Proper { a: i64, d: i64, m: i64 },
    Null,
    Empty,
}

impl fmt::Display for HashCell {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HashCell::Proper { a, d, m } => write!(out, "phi[{a},{d}] m={m}"),
            HashCell::Null => write!(out, "null (entry 1)"),
            HashCell::Empty => write!(out, "empty (entry 0)"),
        }
    }
}

/// The reference tables of the worked example.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ReferenceTables {
    /// `sigma(r)` for the letters `r = 1..=9`.
    pub sigma: Vec<i64>,
    /// Content ranges of the five decomposition strips, in order.
    pub strip_ranges: Vec<(i64, i64)>,
    /// The 5x5 table of hash products and shift parameters.
    pub hash: Vec<Vec<HashCell>>,
    /// Canonical rendering of the distinguished tableau's weight monomial.
    pub ninth_monomial: String,
    /// Canonical renderings of its factorial weight factors, one per box
    /// in row-major order.
    pub factorial_factors: Vec<String>,
}

/// The example's skew shape `(6,5,5,4,4,3)/(3,2)`.
pub fn example_shape() -> SkewShape {
    skew_shape(
        &Partition::new(vec![6, 5, 5, 4, 4, 3]).unwrap(),
        &Partition::new(vec![3, 2]).unwrap(),
    )
    .unwrap()
}

/// The example's alphabet `{1<2<3'<4<5'<6'<7'<8<9}`.
pub fn example_alphabet() -> MarkedAlphabet {
    make_alphabet(9, [3, 5, 6, 7]).unwrap()
}

/// The example's cutting strip.
pub fn example_phi() -> CuttingStrip {
    cutting_strip((-5, 5), [-5, -3, -2, 0, 4]).unwrap()
}

/// The example's distinguished supertableau.
pub fn example_tableau() -> SuperTableau {
    SuperTableau::from_entries(
        &example_shape(),
        vec![3, 5, 8, 2, 3, 5, 1, 1, 3, 4, 9, 3, 4, 4, 6, 3, 7, 8, 8, 4, 8, 9],
    )
}

/// The hand-checked tables.
pub fn golden() -> ReferenceTables {
    use HashCell::{Empty, Null, Proper};
    let p = |a, d, m| Proper { a, d, m };
    ReferenceTables {
        sigma: vec![1, 2, 2, 2, 2, 1, 0, 0, 1],
        strip_ranges: vec![(-5, 2), (-4, -1), (-3, 0), (1, 5), (3, 3)],
        hash: vec![
            vec![p(-5, 2, -2), p(-5, -1, -3), p(-5, 0, -2), p(-5, 5, -1), p(-5, 3, -2)],
            vec![p(-4, 2, -1), p(-4, -1, -2), p(-4, 0, -1), p(-4, 5, 0), p(-4, 3, -1)],
            vec![p(-3, 2, -1), p(-3, -1, -2), p(-3, 0, -1), p(-3, 5, 0), p(-3, 3, -1)],
            vec![p(1, 2, 1), Empty, Null, p(1, 5, 2), p(1, 3, 1)],
            vec![Null, Empty, Empty, p(3, 5, 4), p(3, 3, 3)],
        ],
        ninth_monomial: "x[1,-2]*x[1,-1]*x[2,1]*x[3,-5]*x[3,-2]*x[3,-1]*x[3,1]*x[4,-4]\
                         *x[4,-2]*x[4,-1]*x[4,5]*x[5,-3]*x[5,2]*y[1,-4]*y[1,-3]*y[1,0]\
                         *y[1,2]*y[1,3]*y[2,3]*y[2,4]*y[3,0]*y[4,-3]"
            .replace(char::is_whitespace, ""),
        factorial_factors: [
            "ys[1] - a[5]",
            "ys[2] - a[6]",
            "xs[4] + a[5]",
            "xs[2] + a[3]",
            "ys[1] - a[4]",
            "ys[2] - a[5]",
            "xs[1] + a[-1]",
            "xs[1] + a[0]",
            "ys[1] - a[2]",
            "xs[3] + a[3]",
            "xs[5] + a[3]",
            "ys[1] - a[-1]",
            "xs[3] + a[0]",
            "xs[3] + a[1]",
            "ys[3] - a[1]",
            "ys[1] - a[-2]",
            "ys[4] - a[-3]",
            "xs[4] + a[-2]",
            "xs[4] + a[-1]",
            "xs[3] + a[-3]",
            "xs[4] + a[-4]",
            "xs[5] + a[-2]",
        ]
        .map(str::to_string)
        .to_vec(),
    }
}

/// The full hash-product/shift-parameter table of a decomposition.
pub fn hash_table(decomp: &OutsideDecomposition) -> Vec<Vec<HashCell>> {
    let s = decomp.len();
    (0..s)
        .map(|p| {
            (0..s)
                .map(|q| match hash_product(decomp, p, q) {
                    h @ HashStrip::Proper { a, d } => HashCell::Proper {
                        a,
                        d,
                        m: shift_param(h, decomp.phi()).expect("proper strip"),
                    },
                    HashStrip::Null => HashCell::Null,
                    HashStrip::Empty => HashCell::Empty,
                })
                .collect()
        })
        .collect()
}

/// The same tables derived from the engine.
pub fn recompute() -> ReferenceTables {
    let shape = example_shape();
    let alphabet = example_alphabet();
    let phi = example_phi();
    let tableau = example_tableau();

    let sigma = (1..=alphabet.size())
        .map(|r| alphabet.sigma(r).expect("letter in range"))
        .collect();

    let decomp = cut(&shape, &phi).expect("example decomposes");
    let strip_ranges = decomp.strips().iter().map(|s| s.range()).collect();
    let hash = hash_table(&decomp);

    let ninth_monomial = weight9(&shape, &alphabet, tableau.entries()).to_string();
    let factorial_factors = shape
        .cells()
        .iter()
        .zip(tableau.entries())
        .map(|(cell, &letter)| factor6(&alphabet, letter, cell.content()).to_string())
        .collect();

    ReferenceTables {
        sigma,
        strip_ranges,
        hash,
        ninth_monomial,
        factorial_factors,
    }
}

/// Cell-level differences between two table sets, empty when identical.
pub fn diff(expected: &ReferenceTables, actual: &ReferenceTables) -> Vec<String> {
    let mut out = Vec::new();
    if expected.sigma != actual.sigma {
        for (i, (e, a)) in expected.sigma.iter().zip(&actual.sigma).enumerate() {
            if e != a {
                out.push(format!("sigma[r={}]: expected {e}, found {a}", i + 1));
            }
        }
        if expected.sigma.len() != actual.sigma.len() {
            out.push(format!(
                "sigma length: expected {}, found {}",
                expected.sigma.len(),
                actual.sigma.len()
            ));
        }
    }
    if expected.strip_ranges != actual.strip_ranges {
        for (i, (e, a)) in expected
            .strip_ranges
            .iter()
            .zip(&actual.strip_ranges)
            .enumerate()
        {
            if e != a {
                out.push(format!(
                    "strip theta{}: expected phi[{},{}], found phi[{},{}]",
                    i + 1,
                    e.0,
                    e.1,
                    a.0,
                    a.1
                ));
            }
        }
        if expected.strip_ranges.len() != actual.strip_ranges.len() {
            out.push(format!(
                "strip count: expected {}, found {}",
                expected.strip_ranges.len(),
                actual.strip_ranges.len()
            ));
        }
    }
    for (p, (erow, arow)) in expected.hash.iter().zip(&actual.hash).enumerate() {
        for (q, (e, a)) in erow.iter().zip(arow).enumerate() {
            if e != a {
                out.push(format!(
                    "hash[p={}][q={}]: expected {e}, found {a}",
                    p + 1,
                    q + 1
                ));
            }
        }
    }
    if expected.hash.len() != actual.hash.len() {
        out.push(format!(
            "hash table size: expected {}, found {}",
            expected.hash.len(),
            actual.hash.len()
        ));
    }
    if expected.ninth_monomial != actual.ninth_monomial {
        out.push(format!(
            "weight monomial: expected {}, found {}",
            expected.ninth_monomial, actual.ninth_monomial
        ));
    }
    for (i, (e, a)) in expected
        .factorial_factors
        .iter()
        .zip(&actual.factorial_factors)
        .enumerate()
    {
        if e != a {
            out.push(format!("factor[box {}]: expected {e}, found {a}", i + 1));
        }
    }
    if expected.factorial_factors.len() != actual.factorial_factors.len() {
        out.push(format!(
            "factor count: expected {}, found {}",
            expected.factorial_factors.len(),
            actual.factorial_factors.len()
        ));
    }
    out
}

/// Diffs the engine's recomputation against the hand-checked tables.
pub fn check() -> Vec<String> {
    diff(&golden(), &recompute())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recomputation_matches_the_golden_tables() {
        let diffs = check();
        assert!(diffs.is_empty(), "{diffs:#?}");
    }

    #[test]
    fn corrupted_cells_are_named() {
        let mut bad = golden();
        bad.sigma[2] = 7;
        bad.hash[3][2] = HashCell::Empty;
        bad.factorial_factors[6] = "xs[9] + a[9]".to_string();
        let diffs = diff(&bad, &recompute());
        assert_eq!(diffs.len(), 3);
        assert!(diffs[0].contains("sigma[r=3]"), "{}", diffs[0]);
        assert!(diffs[1].contains("hash[p=4][q=3]"), "{}", diffs[1]);
        assert!(diffs[1].contains("expected empty (entry 0), found null (entry 1)"));
        assert!(diffs[2].contains("factor[box 7]"), "{}", diffs[2]);
    }

    #[test]
    fn tables_serialize_round_trip() {
        let tables = golden();
        let json = serde_json::to_string(&tables).unwrap();
        let back: ReferenceTables = serde_json::from_str(&json).unwrap();
        assert_eq!(tables, back);
        assert!(json.contains("\"kind\":\"null\""));
        assert!(json.contains("\"kind\":\"empty\""));
    }
}
