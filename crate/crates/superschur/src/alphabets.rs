//! Marked alphabets: totally ordered letters `1..=size` with a primed subset.
//!
//! Letters are always referred to by their position in the order; primedness
//! is a lookup, never encoded in the letter value.  Unprimed letters are
//! ranked `1..=m` (the `x` indices), primed letters `1..=n` (the `y`
//! indices).  The statistic
//!
//! ```text
//! sigma(r) = #{unprimed <= r} - #{primed <= r} + [r primed]
//! ```
//!
//! drives the factorial weighting: it is precomputed for every letter when
//! the alphabet is built.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// An ordered alphabet of `size` letters with a distinguished primed subset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedAlphabet {
    size: usize,
    primed: BTreeSet<usize>,
    is_primed: Vec<bool>,    // 1-based; [0] unused
    sigma: Vec<i64>,         // 1-based; [0] unused
    x_index: Vec<usize>,     // rank among unprimed letters, 0 if primed
    y_index: Vec<usize>,     // rank among primed letters, 0 if unprimed
    unprimed_letters: Vec<usize>,
    primed_letters: Vec<usize>,
}

/// Builds an alphabet of `size` letters whose primed subset is `primed`.
pub fn make_alphabet(size: usize, primed: impl IntoIterator<Item = usize>) -> Result<MarkedAlphabet> {
    let primed: BTreeSet<usize> = primed.into_iter().collect();
    if size == 0 {
        return Err(Error::OutOfRangeLetter { letter: 0, size });
    }
    if let Some(&bad) = primed.iter().find(|&&r| r == 0 || r > size) {
        return Err(Error::OutOfRangeLetter { letter: bad, size });
    }
    let mut is_primed = vec![false; size + 1];
    for &r in &primed {
        is_primed[r] = true;
    }
    let mut sigma = vec![0i64; size + 1];
    let mut x_index = vec![0usize; size + 1];
    let mut y_index = vec![0usize; size + 1];
    let mut unprimed_letters = Vec::new();
    let mut primed_letters = Vec::new();
    let (mut m_seen, mut n_seen) = (0i64, 0i64);
    for r in 1..=size {
        if is_primed[r] {
            n_seen += 1;
            primed_letters.push(r);
            y_index[r] = n_seen as usize;
            sigma[r] = m_seen - n_seen + 1;
        } else {
            m_seen += 1;
            unprimed_letters.push(r);
            x_index[r] = m_seen as usize;
            sigma[r] = m_seen - n_seen;
        }
    }
    Ok(MarkedAlphabet {
        size,
        primed,
        is_primed,
        sigma,
        x_index,
        y_index,
        unprimed_letters,
        primed_letters,
    })
}

impl MarkedAlphabet {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of unprimed letters.
    pub fn m(&self) -> usize {
        self.unprimed_letters.len()
    }

    /// Number of primed letters.
    pub fn n(&self) -> usize {
        self.primed_letters.len()
    }

    pub fn primed_set(&self) -> &BTreeSet<usize> {
        &self.primed
    }

    fn check(&self, r: usize) -> Result<()> {
        if r == 0 || r > self.size {
            Err(Error::OutOfRangeLetter {
                letter: r,
                size: self.size,
            })
        } else {
            Ok(())
        }
    }

    pub fn is_primed(&self, r: usize) -> bool {
        self.is_primed[r]
    }

    /// `sigma(r)`; errs on letters outside the alphabet.
    pub fn sigma(&self, r: usize) -> Result<i64> {
        self.check(r)?;
        Ok(self.sigma[r])
    }

    /// Rank of an unprimed letter among the unprimed (its `x` index).
    pub fn x_index(&self, r: usize) -> Option<usize> {
        match self.x_index[r] {
            0 => None,
            k => Some(k),
        }
    }

    /// Rank of a primed letter among the primed (its `y` index).
    pub fn y_index(&self, r: usize) -> Option<usize> {
        match self.y_index[r] {
            0 => None,
            l => Some(l),
        }
    }

    /// The `k`-th unprimed letter (1-based).
    pub fn unprimed_letter(&self, k: usize) -> usize {
        self.unprimed_letters[k - 1]
    }

    /// The `l`-th primed letter (1-based).
    pub fn primed_letter(&self, l: usize) -> usize {
        self.primed_letters[l - 1]
    }

    /// Alphabet with the primedness of letters `r` and `r+1` exchanged.
    /// Errs unless they have opposite primedness.
    pub fn swap_adjacent(&self, r: usize) -> Result<MarkedAlphabet> {
        self.check(r)?;
        self.check(r + 1)?;
        if self.is_primed(r) == self.is_primed(r + 1) {
            return Err(Error::SamePrimedness { r });
        }
        let mut primed = self.primed.clone();
        if primed.contains(&r) {
            primed.remove(&r);
            primed.insert(r + 1);
        } else {
            primed.remove(&(r + 1));
            primed.insert(r);
        }
        make_alphabet(self.size, primed)
    }
}

impl fmt::Display for MarkedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for r in 1..=self.size {
            if r > 1 {
                write!(f, "<")?;
            }
            write!(f, "{r}")?;
            if self.is_primed(r) {
                write!(f, "'")?;
            }
        }
        write!(f, "}}")
    }
}

/// Every alphabet with `m` unprimed and `n` primed letters, i.e. every
/// n-element primed subset of `1..=m+n`, in lexicographic subset order.
pub fn enumerate_splits(m: usize, n: usize) -> Vec<MarkedAlphabet> {
    let size = m + n;
    let mut out = Vec::new();
    let mut subset = Vec::new();
    fn rec(next: usize, size: usize, n: usize, subset: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if subset.len() == n {
            out.push(subset.clone());
            return;
        }
        for r in next..=size {
            if size - r + 1 < n - subset.len() {
                break;
            }
            subset.push(r);
            rec(r + 1, size, n, subset, out);
            subset.pop();
        }
    }
    let mut subsets = Vec::new();
    rec(1, size, n, &mut subset, &mut subsets);
    for s in subsets {
        out.push(make_alphabet(size, s).expect("subset within range"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sigma_row_of_running_example() {
        let a = make_alphabet(9, [3, 5, 6, 7]).unwrap();
        let row: Vec<i64> = (1..=9).map(|r| a.sigma(r).unwrap()).collect();
        assert_eq!(row, vec![1, 2, 2, 2, 2, 1, 0, 0, 1]);
        assert_eq!(a.m(), 5);
        assert_eq!(a.n(), 4);
        assert_eq!(a.x_index(8), Some(4));
        assert_eq!(a.x_index(9), Some(5));
        assert_eq!(a.y_index(7), Some(4));
        assert_eq!(a.x_index(3), None);
        assert_eq!(a.unprimed_letter(3), 4);
        assert_eq!(a.primed_letter(2), 5);
    }

    #[test]
    fn sigma_extremes() {
        let unprimed = make_alphabet(4, []).unwrap();
        for r in 1..=4 {
            assert_eq!(unprimed.sigma(r).unwrap(), r as i64);
        }
        let primed = make_alphabet(3, [1, 2, 3]).unwrap();
        for r in 1..=3 {
            assert_eq!(primed.sigma(r).unwrap(), 1 - r as i64);
        }
        assert_eq!(primed.sigma(2).unwrap(), -1);
    }

    #[test]
    fn out_of_range_letters_rejected() {
        assert!(matches!(
            make_alphabet(3, [4]),
            Err(Error::OutOfRangeLetter { letter: 4, size: 3 })
        ));
        let a = make_alphabet(3, [1]).unwrap();
        assert!(a.sigma(0).is_err());
        assert!(a.sigma(4).is_err());
    }

    #[test]
    fn split_enumeration_counts() {
        assert_eq!(enumerate_splits(1, 1).len(), 2);
        assert_eq!(enumerate_splits(2, 1).len(), 3);
        assert_eq!(enumerate_splits(2, 2).len(), 6);
        let splits = enumerate_splits(2, 2);
        let sets: std::collections::HashSet<_> =
            splits.iter().map(|a| a.primed_set().clone()).collect();
        assert_eq!(sets.len(), 6);
        for a in &splits {
            assert_eq!(a.m(), 2);
            assert_eq!(a.n(), 2);
        }
    }

    #[test]
    fn swap_adjacent_swaps_only_the_pair() {
        let a = make_alphabet(4, [2, 4]).unwrap();
        let b = a.swap_adjacent(2).unwrap();
        assert_eq!(b.primed_set().iter().copied().collect::<Vec<_>>(), vec![3, 4]);
        let c = make_alphabet(4, [1, 2]).unwrap();
        assert!(matches!(c.swap_adjacent(1), Err(Error::SamePrimedness { r: 1 })));
        assert!(c.swap_adjacent(2).is_ok());
    }

    proptest! {
        #[test]
        fn sigma_telescopes(size in 1usize..10, mask in 0u32..1024) {
            let primed: Vec<usize> = (1..=size).filter(|r| mask >> (r - 1) & 1 == 1).collect();
            let a = make_alphabet(size, primed).unwrap();
            for r in 1..size {
                let (p, q) = (a.is_primed(r), a.is_primed(r + 1));
                let (s, t) = (a.sigma(r).unwrap(), a.sigma(r + 1).unwrap());
                if !p && !q {
                    prop_assert_eq!(t, s + 1);
                } else if p && q {
                    prop_assert_eq!(t, s - 1);
                } else {
                    prop_assert_eq!(t, s);
                }
            }
        }
    }
}
