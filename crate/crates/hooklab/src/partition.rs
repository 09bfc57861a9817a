//! Integer partitions and their hook statistics.
//!
//! A [`Partition`] is stored as its list of positive parts in weakly
//! decreasing order; the empty list is the partition of `0`. Squares of the
//! Young diagram are addressed with 1-based `(row, col)` coordinates, row 1
//! at the top.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigUint;
use num::{Integer, One};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and positive: {0}")]
    NotWeaklyDecreasing(String),
    #[error("cannot parse partition part {0:?}")]
    BadPart(String),
    #[error("square ({row},{col}) lies outside the partition")]
    SquareOutsidePartition { row: u32, col: u32 },
}

/// A square `(i, j)` of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Square {
    pub row: u32,
    pub col: u32,
}

impl Square {
    pub fn new(row: u32, col: u32) -> Self {
        Square { row, col }
    }
}

/// A partition: weakly decreasing positive parts (empty = partition of 0).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(PartitionError::NotWeaklyDecreasing(format!("{parts:?}")))
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `λ_i` for any `i ≥ 1`, with the zero tail.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, s: Square) -> bool {
        s.row >= 1 && s.col >= 1 && s.col <= self.part(s.row as usize)
    }

    /// The conjugate partition `λ′` with `λ′_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().take_while(|&&p| p as usize >= j).count() as u32);
        }
        Partition { parts }
    }

    /// Multiplicity `m_i(λ)` of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Arm, leg and hook length of the square `s ∈ λ`:
    /// `a(s) = λ_i − j`, `l(s) = λ′_j − i`, `h(s) = a(s) + l(s) + 1`.
    pub fn hook_stats(&self, s: Square) -> Result<(u32, u32, u32), PartitionError> {
        if !self.contains(s) {
            return Err(PartitionError::SquareOutsidePartition { row: s.row, col: s.col });
        }
        let arm = self.part(s.row as usize) - s.col;
        let leg = self
            .parts
            .iter()
            .skip(s.row as usize)
            .take_while(|&&p| p >= s.col)
            .count() as u32;
        Ok((arm, leg, arm + leg + 1))
    }

    fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Square::new(i as u32 + 1, j)))
    }

    /// Multiset of hook lengths of `λ` divisible by `r`.
    pub fn hook_multiset_mod(&self, r: u32) -> HookMultiset {
        assert!(r >= 1, "modulus must be positive");
        let mut m = HookMultiset::default();
        for s in self.squares() {
            let (_, _, h) = self.hook_stats(s).expect("square from iterator");
            if h % r == 0 {
                m.insert(h as u64);
            }
        }
        m
    }

    /// Multiset of hook lengths divisible by `r` over bottom squares
    /// (squares with leg length 0).
    pub fn bottom_hooks_mod(&self, r: u32) -> HookMultiset {
        assert!(r >= 1, "modulus must be positive");
        let mut m = HookMultiset::default();
        let conj = self.conjugate();
        for j in 1..=self.part(1) {
            let i = conj.part(j as usize);
            // h of the bottom square of column j equals its arm + 1
            let h = self.part(i as usize) - j + 1;
            if h % r == 0 {
                m.insert(h as u64);
            }
        }
        m
    }

    /// Multiset of hook lengths divisible by `r` over squares with arm
    /// length 0 (the right edge); equals `bottom_hooks_mod` of the conjugate.
    pub fn right_hooks_mod(&self, r: u32) -> HookMultiset {
        self.conjugate().bottom_hooks_mod(r)
    }

    /// Modular length `ℓ_r(λ) = Σ_i ⌊m_i(λ)/r⌋`.
    pub fn modular_length(&self, r: u32) -> u32 {
        assert!(r >= 1, "modulus must be positive");
        let mut total = 0;
        let mut i = 0;
        while i < self.parts.len() {
            let mut run = 1;
            while i + run < self.parts.len() && self.parts[i + run] == self.parts[i] {
                run += 1;
            }
            total += (run as u32) / r;
            i += run;
        }
        total
    }

    /// `λ` is an `r`-core when no hook length is divisible by `r`.
    pub fn is_r_core(&self, r: u32) -> bool {
        assert!(r >= 1, "modulus must be positive");
        self.hook_multiset_mod(r).is_empty()
    }

    /// `λ` is an `r`-kernel when consecutive part differences (including the
    /// final part against the zero tail) are all `< r`.
    pub fn is_r_kernel(&self, r: u32) -> bool {
        assert!(r >= 1, "modulus must be positive");
        let tail_ok = self.parts.last().map_or(true, |&p| p < r);
        tail_ok && self.parts.windows(2).all(|w| w[0] - w[1] < r)
    }

    /// The set of squares with `α·l(s) = β·a(s) + β` and `h(s) ≡ 0 (mod α+β)`,
    /// in row-major order.
    pub fn bf_set(&self, alpha: u32, beta: u32) -> Vec<Square> {
        assert!(alpha >= 1, "alpha must be positive");
        let r = alpha + beta;
        self.squares()
            .filter(|&s| {
                let (a, l, h) = self.hook_stats(s).expect("square from iterator");
                u64::from(alpha) * u64::from(l) == u64::from(beta) * (u64::from(a) + 1)
                    && h % r == 0
            })
            .collect()
    }

    /// Cardinality of [`Partition::bf_set`].
    pub fn bf_stat(&self, alpha: u32, beta: u32) -> u32 {
        self.bf_set(alpha, beta).len() as u32
    }

    /// Number of standard Young tableaux of shape `λ`: `n!` divided by the
    /// product of all hook lengths, in exact integer arithmetic.
    ///
    /// Panics if the division is not exact, which would signal a hook
    /// computation bug.
    pub fn count_syt(&self) -> BigUint {
        let mut num = BigUint::one();
        for k in 1..=self.size() {
            num *= BigUint::from(k);
        }
        let mut den = BigUint::one();
        for s in self.squares() {
            let (_, _, h) = self.hook_stats(s).expect("square from iterator");
            den *= BigUint::from(h);
        }
        let (q, rem) = num.div_rem(&den);
        assert!(rem == BigUint::ZERO, "hook product does not divide n!");
        q
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses `"6,5,5,3,1,1"`; whitespace and an optional surrounding `[ ]`
    /// are ignored, and the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let p: u32 = tok
                .parse()
                .map_err(|_| PartitionError::BadPart(tok.to_string()))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// Multiset of hook lengths, stored as value → multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HookMultiset {
    counts: BTreeMap<u64, u64>,
}

impl HookMultiset {
    pub fn insert(&mut self, h: u64) {
        *self.counts.entry(h).or_insert(0) += 1;
    }

    pub fn len(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn counts(&self) -> &BTreeMap<u64, u64> {
        &self.counts
    }

    pub fn multiplicity(&self, h: u64) -> u64 {
        self.counts.get(&h).copied().unwrap_or(0)
    }

    /// The multiset `{r·h}`.
    pub fn scaled(&self, r: u64) -> HookMultiset {
        HookMultiset {
            counts: self.counts.iter().map(|(&h, &c)| (h * r, c)).collect(),
        }
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &HookMultiset) -> HookMultiset {
        let mut counts = self.counts.clone();
        for (&h, &c) in &other.counts {
            *counts.entry(h).or_insert(0) += c;
        }
        HookMultiset { counts }
    }
}

impl FromIterator<u64> for HookMultiset {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut m = HookMultiset::default();
        for h in iter {
            m.insert(h);
        }
        m
    }
}

/// Iterator over all partitions of `n` in reverse-lexicographic order,
/// starting at `(n)` and ending at `(1^n)`.
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Partitions {
    pub fn of(n: u32) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // find the last part > 1 and redistribute everything after it
        if let Some(k) = cur.iter().rposition(|&p| p > 1) {
            let mut succ: Vec<u32> = cur[..k].to_vec();
            let v = cur[k] - 1;
            let mut rem: u64 = cur[k..].iter().map(|&p| u64::from(p)).sum();
            while rem > 0 {
                let take = rem.min(u64::from(v)) as u32;
                succ.push(take);
                rem -= u64::from(take);
            }
            self.next = Some(succ);
        } else {
            self.next = None;
        }
        Some(Partition { parts: cur })
    }
}

/// All partitions of every `n ≤ max_size`, grouped by size, each in
/// reverse-lexicographic order.
pub fn partitions_up_to(max_size: u32) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(Partitions::of)
}

/// Every `r`-core of size `≤ max_size`, by filtering the partition stream.
pub fn r_cores_up_to(r: u32, max_size: u32) -> impl Iterator<Item = Partition> {
    partitions_up_to(max_size).filter(move |p| p.is_r_core(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn multiset(pairs: &[(u64, u64)]) -> HookMultiset {
        HookMultiset {
            counts: pairs.iter().copied().collect(),
        }
    }

    #[test]
    fn conjugate_matches_running_example() {
        assert_eq!(p(&[6, 5, 5, 3, 1, 1]).conjugate(), p(&[6, 4, 4, 3, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn hook_stats_examples() {
        assert_eq!(
            p(&[6, 5, 5, 3, 1, 1]).hook_stats(Square::new(2, 2)).unwrap(),
            (3, 2, 6)
        );
        assert_eq!(p(&[1]).hook_stats(Square::new(1, 1)).unwrap(), (0, 0, 1));
        assert_eq!(
            p(&[5, 4, 4, 1]).hook_stats(Square::new(1, 2)).unwrap(),
            (3, 2, 6)
        );
        assert_eq!(
            p(&[2]).hook_stats(Square::new(2, 1)),
            Err(PartitionError::SquareOutsidePartition { row: 2, col: 1 })
        );
    }

    /// Oracle: arm and leg by literally counting squares of the arm/leg sets.
    fn hook_stats_by_counting(lam: &Partition, s: Square) -> (u32, u32, u32) {
        let arm = (s.col + 1..=lam.part(s.row as usize)).count() as u32;
        let leg = (s.row + 1..=u32::MAX)
            .take_while(|&k| lam.contains(Square::new(k, s.col)))
            .count() as u32;
        (arm, leg, arm + leg + 1)
    }

    #[test]
    fn hook_stats_agree_with_counting_oracle() {
        for lam in partitions_up_to(12) {
            for s in lam.squares().collect::<Vec<_>>() {
                assert_eq!(lam.hook_stats(s).unwrap(), hook_stats_by_counting(&lam, s));
            }
        }
    }

    #[test]
    fn hook_multisets_of_running_example() {
        let lam = p(&[6, 5, 5, 3, 1, 1]);
        assert_eq!(
            lam.hook_multiset_mod(1),
            multiset(&[(1, 4), (2, 4), (3, 1), (4, 2), (5, 4), (6, 1), (7, 1), (8, 2), (9, 1), (11, 1)])
        );
        assert_eq!(
            lam.hook_multiset_mod(2),
            multiset(&[(2, 4), (4, 2), (6, 1), (8, 2)])
        );
        assert!(lam.hook_multiset_mod(12).is_empty());
        assert_eq!(lam.bottom_hooks_mod(1), multiset(&[(1, 4), (2, 2)]));
        assert_eq!(lam.bottom_hooks_mod(2), multiset(&[(2, 2)]));
        assert!(Partition::empty().bottom_hooks_mod(3).is_empty());
    }

    #[test]
    fn bottom_hook_count_is_first_part() {
        for lam in partitions_up_to(14) {
            assert_eq!(lam.bottom_hooks_mod(1).len(), u64::from(lam.part(1)));
            assert_eq!(lam.hook_multiset_mod(1).len(), lam.size());
        }
    }

    #[test]
    fn modular_length_examples() {
        let lam = p(&[3, 2, 2, 1, 1, 1, 1]);
        assert_eq!(lam.modular_length(1), 7);
        assert_eq!(lam.modular_length(2), 3);
        assert_eq!(lam.modular_length(3), 1);
        assert_eq!(lam.modular_length(4), 1);
        assert_eq!(lam.modular_length(5), 0);
    }

    #[test]
    fn modular_length_matches_right_hooks() {
        for lam in partitions_up_to(14) {
            for r in 1..=5 {
                assert_eq!(
                    u64::from(lam.modular_length(r)),
                    lam.right_hooks_mod(r).len(),
                    "λ={lam} r={r}"
                );
            }
        }
    }

    #[test]
    fn cores_and_kernels() {
        assert!(p(&[2]).is_r_core(3));
        assert!(p(&[5, 3, 3, 1]).is_r_kernel(3));
        assert!(!p(&[5, 3, 3, 1]).is_r_core(3));
        assert!(!p(&[3, 1]).is_r_core(2));
        // cores are kernels
        for lam in partitions_up_to(16) {
            for r in 1..=5 {
                if lam.is_r_core(r) {
                    assert!(lam.is_r_kernel(r), "λ={lam} r={r}");
                }
                // difference criterion against the defining bottom-hook test
                assert_eq!(lam.is_r_kernel(r), lam.bottom_hooks_mod(r).is_empty());
            }
        }
    }

    #[test]
    fn mod_r_multiset_is_restriction_of_full_multiset() {
        for lam in partitions_up_to(14) {
            let full = lam.hook_multiset_mod(1);
            for r in 2..=5u32 {
                let modr = lam.hook_multiset_mod(r);
                for (&h, &c) in modr.counts() {
                    assert_eq!(full.multiplicity(h), c);
                    assert_eq!(h % u64::from(r), 0);
                }
                for (&h, &c) in full.counts() {
                    if h % u64::from(r) == 0 {
                        assert_eq!(modr.multiplicity(h), c);
                    }
                }
            }
        }
    }

    #[test]
    fn hook_multiset_is_conjugation_invariant() {
        for lam in partitions_up_to(14) {
            assert_eq!(lam.hook_multiset_mod(1), lam.conjugate().hook_multiset_mod(1));
        }
    }

    #[test]
    fn bf_examples() {
        let lam = p(&[7, 6, 4, 4, 2, 1]);
        let set21 = lam.bf_set(2, 1);
        assert_eq!(set21.len(), 5);
        assert_eq!(
            set21,
            vec![
                Square::new(1, 6),
                Square::new(2, 3),
                Square::new(3, 3),
                Square::new(4, 1),
                Square::new(5, 1)
            ]
        );
        assert_eq!(lam.bf_stat(4, 2), 2);
        assert_eq!(lam.bf_set(4, 2), vec![Square::new(2, 3), Square::new(4, 1)]);
        for k in 3..=6 {
            assert_eq!(lam.bf_stat(2 * k, k), 0);
        }
    }

    #[test]
    fn bf_beta_zero_counts_bottom_hooks() {
        for lam in partitions_up_to(12) {
            for r in 1..=4 {
                assert_eq!(u64::from(lam.bf_stat(r, 0)), lam.bottom_hooks_mod(r).len());
            }
        }
    }

    #[test]
    fn bf_congruence_is_automatic_for_coprime_pairs() {
        for lam in partitions_up_to(12) {
            for &(alpha, beta) in &[(1u32, 1u32), (2, 1), (1, 2), (3, 2), (4, 3)] {
                let without: Vec<Square> = lam
                    .squares()
                    .filter(|&s| {
                        let (a, l, _) = lam.hook_stats(s).unwrap();
                        u64::from(alpha) * u64::from(l) == u64::from(beta) * (u64::from(a) + 1)
                    })
                    .collect();
                assert_eq!(lam.bf_set(alpha, beta), without, "λ={lam} ({alpha},{beta})");
            }
        }
    }

    /// Oracle: count standard Young tableaux by peeling removable corners.
    fn syt_by_enumeration(lam: &Partition) -> u64 {
        fn go(parts: &mut Vec<u32>, memo: &mut std::collections::HashMap<Vec<u32>, u64>) -> u64 {
            if parts.is_empty() {
                return 1;
            }
            if let Some(&v) = memo.get(parts.as_slice()) {
                return v;
            }
            let mut total = 0;
            for i in 0..parts.len() {
                if i + 1 == parts.len() || parts[i] > parts[i + 1] {
                    let mut next = parts.clone();
                    next[i] -= 1;
                    if next[i] == 0 {
                        next.remove(i);
                    }
                    total += go(&mut next, memo);
                }
            }
            memo.insert(parts.clone(), total);
            total
        }
        go(&mut lam.parts.to_vec(), &mut Default::default())
    }

    #[test]
    fn count_syt_examples() {
        assert_eq!(p(&[2, 1]).count_syt(), BigUint::from(2u32));
        assert_eq!(p(&[7]).count_syt(), BigUint::from(1u32));
        assert_eq!(Partition::empty().count_syt(), BigUint::from(1u32));
        for lam in partitions_up_to(8) {
            assert_eq!(lam.count_syt(), BigUint::from(syt_by_enumeration(&lam)), "λ={lam}");
        }
        // footnote identity Σ_{λ⊢4} (f^λ)² = 4!
        let total: BigUint = Partitions::of(4).map(|lam| lam.count_syt().pow(2)).sum();
        assert_eq!(total, BigUint::from(24u32));
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(Partitions::of(9).count(), 30);
        assert_eq!(Partitions::of(0).collect::<Vec<_>>(), vec![Partition::empty()]);
        let four: Vec<Partition> = Partitions::of(4).collect();
        assert_eq!(
            four,
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        // staircases are exactly the 2-cores
        let cores: Vec<u64> = r_cores_up_to(2, 10).map(|c| c.size()).collect();
        assert_eq!(cores, vec![0, 1, 3, 6, 10]);
        for c in r_cores_up_to(2, 10) {
            let n = c.length() as u32 + 1;
            let staircase: Vec<u32> = (1..n).rev().collect();
            assert_eq!(c.parts(), staircase.as_slice());
        }
    }

    #[test]
    fn parse_and_display() {
        let lam: Partition = "6,5,5,3,1,1".parse().unwrap();
        assert_eq!(lam, p(&[6, 5, 5, 3, 1, 1]));
        assert_eq!(lam.to_string(), "[6,5,5,3,1,1]");
        assert_eq!(" 3 , 2 ,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }
}
