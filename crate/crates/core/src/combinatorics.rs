//! Partitions, bipartitions and the box moves on their Young diagrams.
//!
//! Both types derive `Ord`. For partitions the derived order on the stored
//! parts coincides with lexicographic order after padding with zeros (a
//! proper prefix is smaller, just as a zero is smaller than a positive part),
//! and bipartitions compare on the first component, then the second. The
//! enumeration functions list everything from greatest to smallest.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition, dropping trailing zeros. Fails if the parts are not
    /// weakly decreasing.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary positive parts into a partition. Zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().map_or(true, |&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of each part size: `counts[j]` is the number of parts equal to `j`.
    pub fn part_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.parts.first().map_or(1, |&p| p + 1)];
        for &p in &self.parts {
            counts[p] += 1;
        }
        counts
    }

    /// Adds one box to the first row.
    pub fn first_row_extend(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => *first += 1,
            None => parts.push(1),
        }
        Partition { parts }
    }

    /// Partitions obtained by deleting one removable corner, ordered from the
    /// top row down.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by adding one box at an addable cell.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn hook_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let n = self.size();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
                hooks *= hook as u128;
            }
        }
        factorial(n) / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "partition", input: s.to_string() };
        let inner = s.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(err)?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(err());
        }
        Partition::new(parts)
    }
}

/// An ordered pair of partitions. Labels both irreducible representations and
/// conjugacy classes of the signed symmetric group.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Self { first, second }
    }

    /// Convenience constructor from raw parts; panics on invalid input.
    pub fn from_parts(first: &[usize], second: &[usize]) -> Self {
        Self {
            first: Partition::new(first.to_vec()).expect("invalid first component"),
            second: Partition::new(second.to_vec()).expect("invalid second component"),
        }
    }

    pub fn size(&self) -> usize {
        self.first.size() + self.second.size()
    }

    /// All bipartitions obtained by deleting one removable corner from either
    /// component.
    pub fn remove_box(&self) -> Result<Vec<Bipartition>> {
        if self.size() == 0 {
            return Err(Error::NoBoxToRemove);
        }
        let mut out: Vec<Bipartition> = self
            .first
            .remove_box()
            .into_iter()
            .map(|p| Bipartition::new(p, self.second.clone()))
            .chain(self.second.remove_box().into_iter().map(|p| Bipartition::new(self.first.clone(), p)))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// All bipartitions obtained by adding one box to either component.
    pub fn add_box(&self) -> Vec<Bipartition> {
        let mut out: Vec<Bipartition> = self
            .first
            .add_box()
            .into_iter()
            .map(|p| Bipartition::new(p, self.second.clone()))
            .chain(self.second.add_box().into_iter().map(|p| Bipartition::new(self.first.clone(), p)))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Extends the first row of the first component by one box.
    pub fn first_row_extend(&self) -> Bipartition {
        Bipartition::new(self.first.first_row_extend(), self.second.clone())
    }

    /// Dimension of the irreducible representation labelled by `self`:
    /// `C(n, |first|) * f^first * f^second`.
    pub fn irrep_dimension(&self) -> u128 {
        binomial(self.size(), self.first.size()) * self.first.hook_dimension() * self.second.hook_dimension()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse { what: "bipartition", input: s.to_string() })?;
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

/// Lexicographic comparison of two bipartitions of the same size.
pub fn compare_lex(a: &Bipartition, b: &Bipartition) -> Result<Ordering> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { expected: a.size(), found: b.size() });
    }
    Ok(a.cmp(b))
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted_unchecked(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// All bipartitions of `n`, greatest first.
pub fn bipartitions_of(n: usize) -> Vec<Bipartition> {
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    for first_size in (0..=n).rev() {
        for first in &by_size[first_size] {
            for second in &by_size[n - first_size] {
                out.push(Bipartition::new(first.clone(), second.clone()));
            }
        }
    }
    // Sizes interleave in lexicographic order ((1,1) > (1) > (0,...)), so a sort is needed.
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bp(a: &[usize], b: &[usize]) -> Bipartition {
        Bipartition::from_parts(a, b)
    }

    /// Independent partition counter: partitions of n with parts at most k.
    fn count_bounded(n: usize, k: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        if k > n {
            return count_bounded(n, n);
        }
        count_bounded(n, k - 1) + count_bounded(n - k, k)
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(partitions_of(7).len(), 15);
        assert_eq!(count_bounded(7, 7), 15);
    }

    #[test]
    fn partition_counts_match_reference() {
        for n in 0..=30 {
            assert_eq!(partitions_of(n).len() as u64, count_bounded(n, n), "n = {n}");
        }
    }

    #[test]
    fn bipartition_lists() {
        assert_eq!(bipartitions_of(1), vec![bp(&[1], &[]), bp(&[], &[1])]);
        assert_eq!(
            bipartitions_of(2),
            vec![bp(&[2], &[]), bp(&[1, 1], &[]), bp(&[1], &[1]), bp(&[], &[2]), bp(&[], &[1, 1])]
        );
        for n in 0..=10 {
            let expected: u64 = (0..=n).map(|k| count_bounded(k, k) * count_bounded(n - k, n - k)).sum();
            assert_eq!(bipartitions_of(n).len() as u64, expected);
        }
    }

    #[test]
    fn bipartitions_match_brute_force_pairs() {
        for n in 0..=6 {
            let mut brute = Vec::new();
            for a in 0..=n {
                for first in partitions_of(a) {
                    for second in partitions_of(n - a) {
                        brute.push(Bipartition::new(first.clone(), second));
                    }
                }
            }
            brute.sort();
            brute.reverse();
            assert_eq!(bipartitions_of(n), brute);
        }
    }

    #[test]
    fn remove_box_examples() {
        assert_eq!(bp(&[2], &[1]).remove_box().unwrap(), vec![bp(&[2], &[]), bp(&[1], &[1])]);
        assert_eq!(bp(&[2, 1], &[]).remove_box().unwrap(), vec![bp(&[2], &[]), bp(&[1, 1], &[])]);
        assert_eq!(bp(&[1], &[]).remove_box().unwrap(), vec![bp(&[], &[])]);
        assert_eq!(bp(&[], &[]).remove_box(), Err(Error::NoBoxToRemove));
    }

    #[test]
    fn remove_box_sizes() {
        for n in 1..=7 {
            for b in bipartitions_of(n) {
                let removed = b.remove_box().unwrap();
                assert!(!removed.is_empty());
                assert!(removed.iter().all(|r| r.size() == n - 1));
                for r in &removed {
                    assert!(r.add_box().contains(&b));
                }
            }
        }
    }

    #[test]
    fn first_row_extend_examples() {
        assert_eq!(Partition::empty().first_row_extend(), p(&[1]));
        assert_eq!(p(&[2, 2]).first_row_extend(), p(&[3, 2]));
        assert_eq!(p(&[3, 1]).first_row_extend(), p(&[4, 1]));
    }

    #[test]
    fn compare_lex_examples() {
        assert_eq!(compare_lex(&bp(&[2], &[]), &bp(&[1, 1], &[])), Ok(Ordering::Greater));
        assert_eq!(compare_lex(&bp(&[1], &[1]), &bp(&[1], &[1])), Ok(Ordering::Equal));
        assert_eq!(compare_lex(&bp(&[], &[2]), &bp(&[], &[1, 1])), Ok(Ordering::Greater));
        assert!(compare_lex(&bp(&[1], &[]), &bp(&[2], &[])).is_err());
    }

    /// Zero-padded lexicographic comparison written out explicitly.
    fn padded_cmp(a: &Partition, b: &Partition) -> Ordering {
        let len = a.rows().max(b.rows());
        (0..len).map(|i| a.part(i).cmp(&b.part(i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }

    #[test]
    fn derived_order_is_padded_lex() {
        for n in 0..=6 {
            let all: Vec<Partition> = (0..=n).flat_map(partitions_of).collect();
            for a in &all {
                for b in &all {
                    assert_eq!(a.cmp(b), padded_cmp(a, b));
                }
            }
        }
    }

    #[test]
    fn first_row_extend_preserves_order() {
        for n in 1..=6 {
            let all = bipartitions_of(n);
            for w in all.windows(2) {
                assert_eq!(w[0].first_row_extend().cmp(&w[1].first_row_extend()), Ordering::Greater);
            }
        }
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(bp(&[2, 1], &[1]).to_string(), "[2,1]|[1]");
        assert_eq!(bp(&[], &[]).to_string(), "[]|[]");
        assert_eq!("[2,1]|[1]".parse::<Bipartition>().unwrap(), bp(&[2, 1], &[1]));
        assert_eq!("[]|[]".parse::<Bipartition>().unwrap(), bp(&[], &[]));
        assert!("[1,2]|[]".parse::<Bipartition>().is_err());
        assert!("[0]|[]".parse::<Bipartition>().is_err());
        assert!("2,1|1".parse::<Bipartition>().is_err());
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[2, 1]).hook_dimension(), 2);
        assert_eq!(p(&[3, 2]).hook_dimension(), 5);
        assert_eq!(p(&[3, 2, 1]).hook_dimension(), 16);
        assert_eq!(Partition::empty().hook_dimension(), 1);
        assert_eq!(bp(&[1], &[1]).irrep_dimension(), 2);
    }
}
