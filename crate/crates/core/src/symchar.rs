//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama
//! rule.
//!
//! Rim hooks are removed on the beta-set (abacus) encoding of a shape: a hook
//! of length `r` corresponds to sliding one bead from position `b` to the
//! empty position `b - r`, with sign given by the parity of the beads jumped.

use std::collections::HashMap;

use crate::combinatorics::{factorial, partitions_of, Partition};
use crate::error::{Error, Result};

/// Shapes reachable from `shape` by removing a rim hook of length `len`,
/// paired with the sign `(-1)^(height)` of each removed hook.
pub fn rim_hook_removals(shape: &Partition, len: usize) -> Vec<(Partition, i64)> {
    let rows = shape.rows();
    if len == 0 || len > shape.size() {
        return Vec::new();
    }
    let beta: Vec<usize> = (0..rows).map(|i| shape.part(i) + (rows - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < len || beta.contains(&(b - len)) {
            continue;
        }
        let target = b - len;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = moved.iter().enumerate().map(|(i, &x)| x - (rows - 1 - i)).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_unsorted(parts), sign));
    }
    out
}

/// Memoized Murnaghan–Nakayama evaluator for a single cycle type.
struct Evaluator<'a> {
    class_parts: &'a [usize],
    memo: HashMap<(Partition, usize), i64>,
}

impl Evaluator<'_> {
    fn eval(&mut self, shape: &Partition, next: usize) -> i64 {
        if next == self.class_parts.len() {
            return i64::from(shape.is_empty());
        }
        let key = (shape.clone(), next);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let value = rim_hook_removals(shape, self.class_parts[next])
            .into_iter()
            .map(|(smaller, sign)| sign * self.eval(&smaller, next + 1))
            .sum();
        self.memo.insert(key, value);
        value
    }
}

/// The character of the irreducible `S_n`-representation `lambda` at the
/// class of cycle type `alpha`.
pub fn sym_character(lambda: &Partition, alpha: &Partition) -> Result<i64> {
    if lambda.size() != alpha.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), found: alpha.size() });
    }
    // Parts are stored largest first, which fixes the consumption order.
    let mut eval = Evaluator { class_parts: alpha.parts(), memo: HashMap::new() };
    Ok(eval.eval(lambda, 0))
}

/// `z_alpha = prod_j j^{m_j} m_j!`, the centralizer order of a permutation of
/// cycle type `alpha`.
pub fn centralizer_order(alpha: &Partition) -> u128 {
    alpha
        .part_counts()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, &m)| (j as u128).pow(m as u32) * factorial(m))
        .product()
}

/// Number of permutations of cycle type `alpha`.
pub fn sym_class_size(alpha: &Partition) -> u128 {
    factorial(alpha.size()) / centralizer_order(alpha)
}

/// Full character table of `S_n`. Rows are irreducible labels and columns
/// are cycle types, both in decreasing lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymCharacterTable {
    n: usize,
    labels: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl SymCharacterTable {
    pub fn new(n: usize) -> Self {
        let labels = partitions_of(n);
        let values = labels
            .iter()
            .map(|lambda| {
                labels
                    .iter()
                    .map(|alpha| sym_character(lambda, alpha).expect("sizes agree"))
                    .collect()
            })
            .collect();
        Self::assemble(n, labels, values)
    }

    /// Rebuilds a table from a row-major value matrix, e.g. one read from disk.
    pub fn from_values(n: usize, values: Vec<Vec<i64>>) -> Result<Self> {
        let labels = partitions_of(n);
        if values.len() != labels.len() || values.iter().any(|row| row.len() != labels.len()) {
            return Err(Error::Dimension(format!(
                "S_{n} table must be {0}x{0}",
                labels.len()
            )));
        }
        Ok(Self::assemble(n, labels, values))
    }

    fn assemble(n: usize, labels: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let index = labels.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self { n, labels, index, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row labels; also the column labels.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn value(&self, lambda: &Partition, alpha: &Partition) -> Option<i64> {
        Some(self.values[*self.index.get(lambda)?][*self.index.get(alpha)?])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn documented_values() {
        for n in 1..=6 {
            for alpha in partitions_of(n) {
                assert_eq!(sym_character(&p(&[n]), &alpha).unwrap(), 1);
            }
        }
        assert_eq!(sym_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(sym_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(sym_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn sign_character() {
        for n in 1..=7 {
            let sign_label = p(&vec![1; n]);
            for alpha in partitions_of(n) {
                let parity = alpha.parts().iter().map(|&j| j - 1).sum::<usize>() % 2;
                let expected = if parity == 0 { 1 } else { -1 };
                assert_eq!(sym_character(&sign_label, &alpha).unwrap(), expected);
            }
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(sym_class_size(&p(&[1, 1, 1])), 1);
        assert_eq!(sym_class_size(&p(&[2, 1])), 3);
        assert_eq!(sym_class_size(&p(&[3])), 2);
        for n in 0..=10 {
            let total: u128 = partitions_of(n).iter().map(sym_class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn identity_column_is_hook_dimension() {
        for n in 0..=8 {
            let identity = p(&vec![1; n]);
            for lambda in partitions_of(n) {
                assert_eq!(sym_character(&lambda, &identity).unwrap() as u128, lambda.hook_dimension());
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 1..=8 {
            let table = SymCharacterTable::new(n);
            let labels = table.labels();
            let sizes: Vec<i128> = labels.iter().map(|a| sym_class_size(a) as i128).collect();
            let order = factorial(n) as i128;
            for (i, ri) in table.values().iter().enumerate() {
                for (j, rj) in table.values().iter().enumerate() {
                    let s: i128 = (0..labels.len()).map(|c| sizes[c] * ri[c] as i128 * rj[c] as i128).sum();
                    assert_eq!(s, if i == j { order } else { 0 });
                }
            }
            for c in 0..labels.len() {
                for d in 0..labels.len() {
                    let s: i128 = table.values().iter().map(|row| row[c] as i128 * row[d] as i128).sum();
                    let expected = if c == d { centralizer_order(&labels[c]) as i128 } else { 0 };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn rim_hooks_of_staircase() {
        // (2,1) has no rim hook of length 2; its only 3-hook is the whole shape.
        assert!(rim_hook_removals(&p(&[2, 1]), 2).is_empty());
        assert_eq!(rim_hook_removals(&p(&[2, 1]), 3), vec![(Partition::empty(), -1)]);
    }

    #[test]
    fn table_lookup_and_rebuild() {
        let t = SymCharacterTable::new(4);
        assert_eq!(t.value(&p(&[3, 1]), &p(&[2, 2])), Some(-1));
        let rebuilt = SymCharacterTable::from_values(4, t.values().to_vec()).unwrap();
        assert_eq!(rebuilt, t);
        assert!(SymCharacterTable::from_values(4, vec![vec![1]]).is_err());
    }
}
