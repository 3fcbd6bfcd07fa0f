//! Deletion distance to the nearest symmetric word.
//!
//! `S_d(w) = l(w) - max(LPS(w), LAS(w))`, where LPS/LAS are the longest
//! palindromic and antipalindromic subsequences. Both are filled by the same
//! interval recurrence, differing only in which endpoint pairs may be kept:
//!
//! ```text
//! P(i,j) = max(P(i+1,j), P(i,j-1), [w_i = w_j] * (2 + P(i+1,j-1)))   P(i,i) = 1
//! A(i,j) = max(A(i+1,j), A(i,j-1), [w_i != w_j] * (2 + A(i+1,j-1)))  A(i,i) = 0
//! ```
//!
//! with empty windows scoring zero.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Word, MAX_WORD_LEN};

/// Longest word accepted by [`brute_force_sd`].
pub const BRUTE_FORCE_MAX_LEN: usize = 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TargetKind {
    Palindrome,
    Antipalindrome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdValue {
    pub value: usize,
    pub lps: usize,
    pub las: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionWitness {
    /// Strictly increasing, 1-based.
    pub deleted_positions: Vec<usize>,
    pub target: TargetKind,
    pub residual: Word,
}

/// LPS and LAS in one O(n^2) pass with O(n) rolling rows.
///
/// Row `i` of the interval table is kept in `p[j]`/`a[j]` for `j >= i`; the
/// diagonal `(i+1, j-1)` value is carried in a register while sweeping `j`.
#[inline]
pub fn symmetric_subsequence_lengths(w: Word) -> (usize, usize) {
    let mut buf = [0u8; MAX_WORD_LEN];
    let x = w.to_bytes(&mut buf);
    let n = x.len();
    let mut p = [0u8; MAX_WORD_LEN];
    let mut a = [0u8; MAX_WORD_LEN];
    for i in (0..n).rev() {
        // P(i+1, i) and A(i+1, i): empty window.
        let mut diag_p = 0u8;
        let mut diag_a = 0u8;
        p[i] = 1;
        a[i] = 0;
        for j in i + 1..n {
            // p[j] still holds P(i+1, j); p[j-1] already holds P(i, j-1).
            let below_p = p[j];
            let below_a = a[j];
            let same = x[i] == x[j];
            let mut best_p = below_p.max(p[j - 1]);
            let mut best_a = below_a.max(a[j - 1]);
            if same {
                best_p = best_p.max(diag_p + 2);
            } else {
                best_a = best_a.max(diag_a + 2);
            }
            p[j] = best_p;
            a[j] = best_a;
            diag_p = below_p;
            diag_a = below_a;
        }
    }
    if n == 0 {
        (0, 0)
    } else {
        (p[n - 1] as usize, a[n - 1] as usize)
    }
}

pub fn lps_length(w: Word) -> usize {
    symmetric_subsequence_lengths(w).0
}

pub fn las_length(w: Word) -> usize {
    symmetric_subsequence_lengths(w).1
}

pub fn sd(w: Word) -> SdValue {
    let (lps, las) = symmetric_subsequence_lengths(w);
    SdValue {
        value: w.len() - lps.max(las),
        lps,
        las,
    }
}

/// Full `(i, j)` tables for backtracking; indices are 0-based, `j < i` is empty.
struct IntervalTables {
    n: usize,
    letters: Vec<u8>,
    pal: Vec<u8>,
    anti: Vec<u8>,
}

impl IntervalTables {
    fn build(w: Word) -> Self {
        let mut buf = [0u8; MAX_WORD_LEN];
        let letters = w.to_bytes(&mut buf).to_vec();
        let n = letters.len();
        let mut t = IntervalTables {
            n,
            letters,
            pal: vec![0; n * n],
            anti: vec![0; n * n],
        };
        for i in 0..n {
            t.pal[i * n + i] = 1;
        }
        for width in 2..=n {
            for i in 0..=n - width {
                let j = i + width - 1;
                let same = t.letters[i] == t.letters[j];
                let mut p = t.get(TargetKind::Palindrome, i + 1, j as isize).max(t.get(
                    TargetKind::Palindrome,
                    i,
                    j as isize - 1,
                ));
                let mut a = t
                    .get(TargetKind::Antipalindrome, i + 1, j as isize)
                    .max(t.get(TargetKind::Antipalindrome, i, j as isize - 1));
                if same {
                    p = p.max(2 + t.get(TargetKind::Palindrome, i + 1, j as isize - 1));
                } else {
                    a = a.max(2 + t.get(TargetKind::Antipalindrome, i + 1, j as isize - 1));
                }
                t.pal[i * n + j] = p;
                t.anti[i * n + j] = a;
            }
        }
        t
    }

    #[inline]
    fn get(&self, kind: TargetKind, i: usize, j: isize) -> u8 {
        if j < i as isize {
            return 0;
        }
        let idx = i * self.n + j as usize;
        match kind {
            TargetKind::Palindrome => self.pal[idx],
            TargetKind::Antipalindrome => self.anti[idx],
        }
    }

    /// Walks one optimal path for `kind`, returning the 0-based indices dropped.
    ///
    /// Ties: keep a compatible endpoint pair when that is optimal, otherwise
    /// drop the right endpoint before the left one.
    fn backtrack(&self, kind: TargetKind) -> Vec<usize> {
        let mut dropped = Vec::new();
        if self.n == 0 {
            return dropped;
        }
        let (mut i, mut j) = (0usize, self.n as isize - 1);
        while j >= i as isize {
            let ju = j as usize;
            let here = self.get(kind, i, j);
            if i == ju {
                if kind == TargetKind::Antipalindrome {
                    dropped.push(i);
                }
                break;
            }
            let compatible = match kind {
                TargetKind::Palindrome => self.letters[i] == self.letters[ju],
                TargetKind::Antipalindrome => self.letters[i] != self.letters[ju],
            };
            if compatible && here == 2 + self.get(kind, i + 1, j - 1) {
                i += 1;
                j -= 1;
            } else if here == self.get(kind, i, j - 1) {
                dropped.push(ju);
                j -= 1;
            } else {
                debug_assert_eq!(here, self.get(kind, i + 1, j));
                dropped.push(i);
                i += 1;
            }
        }
        dropped.sort_unstable();
        dropped
    }
}

/// One minimum deletion set, chosen deterministically.
///
/// Targets a palindrome when `lps >= las`, otherwise an antipalindrome.
pub fn sd_witness(w: Word) -> DeletionWitness {
    let tables = IntervalTables::build(w);
    let (lps, las) = if tables.n == 0 {
        (0, 0)
    } else {
        (
            tables.get(TargetKind::Palindrome, 0, tables.n as isize - 1),
            tables.get(TargetKind::Antipalindrome, 0, tables.n as isize - 1),
        )
    };
    let target = if lps >= las {
        TargetKind::Palindrome
    } else {
        TargetKind::Antipalindrome
    };
    let deleted_positions: Vec<usize> = tables
        .backtrack(target)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    let residual = w
        .remove_positions(&deleted_positions)
        .expect("backtracking yields in-range positions");
    DeletionWitness {
        deleted_positions,
        target,
        residual,
    }
}

/// Independent oracle: tries every deletion set of size 0, 1, 2, ... and
/// returns the first size that leaves a symmetric word.
pub fn brute_force_sd(w: Word) -> Result<usize> {
    let n = w.len();
    if n > BRUTE_FORCE_MAX_LEN {
        return Err(Error::LengthBudgetExceeded {
            what: "brute-force oracle",
            length: n,
            limit: BRUTE_FORCE_MAX_LEN,
        });
    }
    let full = (1u64 << n) - 1;
    for k in 0..=n {
        if k == n {
            return Ok(n);
        }
        // Gosper's hack over the k-subsets of positions to delete.
        let mut drop: u64 = (1u64 << k) - 1;
        while drop <= full {
            if w.keep_mask(full & !drop).is_symmetric() {
                return Ok(k);
            }
            if drop == 0 {
                break;
            }
            let c = drop & drop.wrapping_neg();
            let r = drop + c;
            drop = (((r ^ drop) >> 2) / c) | r;
        }
    }
    unreachable!("deleting every letter leaves the empty word, which is symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, SymmetryClass};

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn all_words(min: usize, max: usize) -> impl Iterator<Item = Word> {
        (min..=max).flat_map(Word::all_of_length)
    }

    /// Longest symmetric subsequence by scanning every subset; used only to
    /// freeze small expected values.
    fn subset_scan(x: Word, want: impl Fn(Word) -> bool) -> usize {
        let n = x.len();
        (0..1u64 << n)
            .map(|keep| x.keep_mask(keep))
            .filter(|s| want(*s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn lps_examples() {
        assert_eq!(lps_length(w("abba")), 4);
        assert_eq!(lps_length(w("aab")), 2);
        assert_eq!(subset_scan(w("aab"), |s| s == s.reverse()), 2);
        assert_eq!(lps_length(w("")), 0);
    }

    #[test]
    fn las_examples() {
        assert_eq!(las_length(w("aabb")), 4);
        assert_eq!(las_length(w("aba")), 2);
        assert_eq!(las_length(w("aaa")), 0);
    }

    #[test]
    fn sd_examples() {
        assert_eq!(sd(w("ab")).value, 0);
        assert_eq!(brute_force_sd(w("aabbbb")).unwrap(), 2);
        assert_eq!(sd(w("aabbbb")).value, 2);
        assert_eq!(sd(w("bbabbbbaaa")).value, 4);
        assert_eq!(
            sd(w("")),
            SdValue {
                value: 0,
                lps: 0,
                las: 0
            }
        );
    }

    #[test]
    fn witness_examples() {
        let ab = sd_witness(w("ab"));
        assert!(ab.deleted_positions.is_empty());
        assert_eq!(ab.target, TargetKind::Antipalindrome);
        assert_eq!(ab.residual, w("ab"));

        let aab = sd_witness(w("aab"));
        assert_eq!(brute_force_sd(w("aab")).unwrap(), 1);
        assert_eq!(aab.deleted_positions.len(), 1);
        assert_eq!(aab.residual.len(), 2);
        assert!(aab.residual.is_symmetric());
        // lps = las = 2, so the palindrome target wins; the right endpoint
        // is dropped first, leaving "aa".
        assert_eq!(aab.target, TargetKind::Palindrome);
        assert_eq!(aab.deleted_positions, vec![3]);

        let aaa = sd_witness(w("aaa"));
        assert!(aaa.deleted_positions.is_empty());
        assert_eq!(aaa.target, TargetKind::Palindrome);
        assert_eq!(aaa.residual, w("aaa"));

        let empty = sd_witness(w(""));
        assert!(empty.deleted_positions.is_empty());
        assert_eq!(empty.residual, w(""));
    }

    #[test]
    fn brute_force_examples_and_guard() {
        assert_eq!(brute_force_sd(w("aab")).unwrap(), 1);
        assert_eq!(brute_force_sd(w("abba")).unwrap(), 0);
        assert_eq!(brute_force_sd(w("")).unwrap(), 0);
        let long = Word::repeat(crate::word::Letter::A, 23).unwrap();
        assert!(matches!(
            brute_force_sd(long),
            Err(Error::LengthBudgetExceeded { limit: 22, .. })
        ));
    }

    #[test]
    fn dp_matches_subset_scan_small() {
        for x in all_words(0, 9) {
            let lps = subset_scan(x, |s| s == s.reverse());
            let las = subset_scan(x, |s| s == s.complement().reverse());
            assert_eq!(symmetric_subsequence_lengths(x), (lps, las), "{x}");
        }
    }

    #[test]
    fn full_table_agrees_with_rolling_rows() {
        for x in all_words(0, 11) {
            let t = IntervalTables::build(x);
            let n = x.len() as isize;
            let full = (
                t.get(TargetKind::Palindrome, 0, n - 1) as usize,
                t.get(TargetKind::Antipalindrome, 0, n - 1) as usize,
            );
            assert_eq!(full, symmetric_subsequence_lengths(x), "{x}");
        }
    }

    #[test]
    fn oracle_equivalence_exhaustive() {
        for x in all_words(0, 14) {
            assert_eq!(sd(x).value, brute_force_sd(x).unwrap(), "{x}");
        }
    }

    #[test]
    fn witness_invariants_exhaustive() {
        for x in all_words(0, 12) {
            let v = sd(x);
            let wit = sd_witness(x);
            assert_eq!(wit.deleted_positions.len(), v.value, "{x}");
            assert!(wit.deleted_positions.windows(2).all(|p| p[0] < p[1]));
            assert_eq!(
                x.remove_positions(&wit.deleted_positions).unwrap(),
                wit.residual
            );
            let class = wit.residual.symmetry_class();
            let ok = match wit.target {
                TargetKind::Palindrome => {
                    matches!(class, SymmetryClass::Palindrome | SymmetryClass::Both)
                }
                TargetKind::Antipalindrome => {
                    matches!(class, SymmetryClass::Antipalindrome | SymmetryClass::Both)
                }
            };
            assert!(ok, "{x}: {wit:?}");
        }
    }

    #[test]
    fn peeling_identities_exhaustive() {
        for x in all_words(2, 14) {
            let n = x.len();
            if x.letter(1) == x.letter(n) {
                assert_eq!(lps_length(x), 2 + lps_length(x.inner()), "{x}");
            } else {
                assert_eq!(las_length(x), 2 + las_length(x.inner()), "{x}");
            }
        }
    }

    #[test]
    fn structural_properties_exhaustive() {
        for x in all_words(0, 14) {
            let v = sd(x);
            assert_eq!(v.value, x.len() - v.lps.max(v.las));
            assert!(v.value <= x.len() / 2, "{x}");
            assert_eq!(v.las % 2, 0);
            assert!(v.lps >= x.len().min(1));
            if x.len() <= 12 {
                assert_eq!(v.value == 0, x.is_symmetric(), "{x}");
                assert_eq!(v.value, sd(x.reverse()).value);
                assert_eq!(v.value, sd(x.complement()).value);
            }
        }
    }
}
