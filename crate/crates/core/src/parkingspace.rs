//! The representations `C[(Z/mZ)^n]` of `B_n`, where `B_n` permutes and
//! negates coordinates, and their decomposition into irreducibles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::combinatorics::{bipartitions_of, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::hypchar::{ClassFunction, SignedClass};

/// The pair `(n, m)` naming the `B_n`-representation `C[(Z/mZ)^n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingSpec {
    pub n: usize,
    pub m: u64,
}

/// Parity split of the modulus: `m = 2k + 1` or `m = 2l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulus {
    Odd { k: u64 },
    Even { l: u64 },
}

impl ParkingSpec {
    /// `m = 1` is allowed and gives the trivial representation.
    pub fn new(n: usize, m: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if m == 0 {
            return Err(Error::InvalidArgument("m must be at least 1".into()));
        }
        Ok(Self { n, m })
    }

    pub fn modulus(&self) -> Modulus {
        if self.m % 2 == 1 {
            Modulus::Odd { k: (self.m - 1) / 2 }
        } else {
            Modulus::Even { l: self.m / 2 }
        }
    }

    /// Number of coordinate vectors, `m^n`.
    pub fn dimension(&self) -> u128 {
        (self.m as u128).pow(self.n as u32)
    }

    /// Weyl-dimension arguments `(a, b)` such that the multiplicity of
    /// `V_{λ,μ}` is `d(λ, a) d(μ, b)`.
    fn weyl_arguments(&self) -> (u64, u64) {
        match self.modulus() {
            Modulus::Odd { k } => (k + 1, k),
            Modulus::Even { l } => (l + 1, l - 1),
        }
    }
}

impl fmt::Display for ParkingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C[(Z/{}Z)^{}]", self.m, self.n)
    }
}

/// A representation up to isomorphism: multiplicity of each irreducible.
/// Zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiplicityVector {
    n: usize,
    entries: BTreeMap<Bipartition, u64>,
}

impl MultiplicityVector {
    pub fn zero(n: usize) -> Self {
        Self { n, entries: BTreeMap::new() }
    }

    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (Bipartition, u64)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (b, m) in entries {
            if b.size() != n {
                return Err(Error::SizeMismatch { expected: n, found: b.size() });
            }
            out.add(b, m);
        }
        Ok(out)
    }

    /// The vector with a single copy of `b`.
    pub fn indicator(b: &Bipartition) -> Self {
        let mut out = Self::zero(b.size());
        out.set(b.clone(), 1);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, b: &Bipartition) -> u64 {
        self.entries.get(b).copied().unwrap_or(0)
    }

    pub fn set(&mut self, b: Bipartition, mult: u64) {
        debug_assert_eq!(b.size(), self.n);
        if mult == 0 {
            self.entries.remove(&b);
        } else {
            self.entries.insert(b, mult);
        }
    }

    pub fn add(&mut self, b: Bipartition, mult: u64) {
        if mult > 0 {
            *self.entries.entry(b).or_insert(0) += mult;
        }
    }

    /// Nonzero entries, greatest label first.
    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, u64)> {
        self.entries.iter().rev().map(|(b, &m)| (b, m))
    }

    /// Labels with nonzero multiplicity, greatest first.
    pub fn support(&self) -> impl Iterator<Item = &Bipartition> {
        self.entries.keys().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Dimension of the represented space.
    pub fn total_dimension(&self) -> u128 {
        self.iter().map(|(b, m)| m as u128 * b.irrep_dimension()).sum()
    }
}

/// The permutation character of `C[(Z/mZ)^n]` at class `c`:
/// `m^{even cycles}` for odd `m`, `2^{odd cycles} m^{even cycles}` for even `m`.
pub fn parking_character(spec: &ParkingSpec, c: &SignedClass) -> Result<u64> {
    if c.size() != spec.n {
        return Err(Error::SizeMismatch { expected: spec.n, found: c.size() });
    }
    let even = spec.m.pow(c.even_cycles() as u32);
    Ok(match spec.modulus() {
        Modulus::Odd { .. } => even,
        Modulus::Even { .. } => (1u64 << c.odd_cycles()) * even,
    })
}

/// The parking character as a class function of `B_n`.
pub fn parking_character_fn(spec: &ParkingSpec) -> ClassFunction {
    ClassFunction::from_fn(spec.n, |c| {
        let v = parking_character(spec, c).expect("class of the right size");
        i64::try_from(v).expect("character value overflows i64")
    })
}

/// Dimension of the Schur functor `S^λ` applied to an `a`-dimensional space:
/// `Π_{i<j≤a} (λ_i - λ_j + j - i)/(j - i)`, or 0 when `λ` has more than `a` rows.
pub fn weyl_dim(lambda: &Partition, a: u64) -> u64 {
    let a = a as usize;
    if lambda.rows() > a {
        return 0;
    }
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for i in 0..a {
        for j in (i + 1)..a {
            numerator *= BigUint::from(lambda.part(i) - lambda.part(j) + j - i);
            denominator *= BigUint::from(j - i);
        }
    }
    let (q, r) = numerator.div_rem(&denominator);
    assert!(r.is_zero(), "Weyl dimension of {lambda} at {a} is not integral");
    q.to_u64().expect("Weyl dimension overflows u64")
}

/// Irreducible decomposition of `C[(Z/mZ)^n]` by the Schur–Weyl closed form:
/// `V_{λ,μ}` appears `d(λ, k+1) d(μ, k)` times for `m = 2k+1` and
/// `d(λ, l+1) d(μ, l-1)` times for `m = 2l`.
pub fn parking_decomposition(spec: &ParkingSpec) -> MultiplicityVector {
    let (a, b) = spec.weyl_arguments();
    let mut out = MultiplicityVector::zero(spec.n);
    for bp in bipartitions_of(spec.n) {
        let mult = weyl_dim(&bp.first, a) * weyl_dim(&bp.second, b);
        out.set(bp, mult);
    }
    out
}

/// The labels appearing in the decomposition, greatest first.
pub fn support(spec: &ParkingSpec) -> Vec<Bipartition> {
    parking_decomposition(spec).support().cloned().collect()
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

    fn spec(n: usize, m: u64) -> ParkingSpec {
        ParkingSpec::new(n, m).unwrap()
    }

    /// Semistandard tableaux of shape `lambda` with entries in `1..=a`,
    /// counted by filling cells row by row.
    fn count_ssyt(lambda: &Partition, a: usize) -> u64 {
        let cells: Vec<(usize, usize)> =
            (0..lambda.rows()).flat_map(|i| (0..lambda.part(i)).map(move |j| (i, j))).collect();
        let mut grid = vec![vec![0usize; lambda.part(0)]; lambda.rows()];
        fn rec(cells: &[(usize, usize)], idx: usize, grid: &mut Vec<Vec<usize>>, a: usize) -> u64 {
            if idx == cells.len() {
                return 1;
            }
            let (i, j) = cells[idx];
            let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=a {
                grid[i][j] = v;
                total += rec(cells, idx + 1, grid, a);
            }
            grid[i][j] = 0;
            total
        }
        rec(&cells, 0, &mut grid, a)
    }

    #[test]
    fn weyl_dim_examples() {
        for k in 0..=12 {
            assert_eq!(weyl_dim(&Partition::empty(), k), 1);
            assert_eq!(weyl_dim(&p(&[1]), k), k);
            assert_eq!(weyl_dim(&p(&[2]), k), k * (k + 1) / 2);
            assert_eq!(weyl_dim(&p(&[1, 1]), k), k * k.saturating_sub(1) / 2);
        }
        assert_eq!(weyl_dim(&p(&[1, 1, 1]), 2), 0);
    }

    #[test]
    fn weyl_dim_counts_semistandard_tableaux() {
        for n in 0..=5 {
            for lambda in crate::combinatorics::partitions_of(n) {
                for a in 0..=5 {
                    assert_eq!(weyl_dim(&lambda, a as u64), count_ssyt(&lambda, a), "{lambda} at {a}");
                }
            }
        }
    }

    #[test]
    fn character_examples() {
        for k in 1..=5 {
            let s = spec(1, 2 * k + 1);
            assert_eq!(parking_character(&s, &SignedClass::identity(1)).unwrap(), 2 * k + 1);
            assert_eq!(parking_character(&spec(1, 2 * k), &SignedClass::from_parts(&[], &[1])).unwrap(), 2);
        }
        assert_eq!(parking_character(&spec(2, 3), &SignedClass::from_parts(&[1], &[1])).unwrap(), 3);
        assert!(parking_character(&spec(2, 3), &SignedClass::identity(3)).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = parking_decomposition(&spec(2, 3));
        let expected = [(bp(&[2], &[]), 3), (bp(&[1, 1], &[]), 1), (bp(&[1], &[1]), 2), (bp(&[], &[2]), 1)];
        assert_eq!(d.iter().map(|(b, m)| (b.clone(), m)).collect::<Vec<_>>(), expected);
        for l in 1..=8 {
            let d = parking_decomposition(&spec(1, 2 * l));
            assert_eq!(d.get(&bp(&[1], &[])), l + 1);
            assert_eq!(d.get(&bp(&[], &[1])), l - 1);
        }
        for k in 0..=6 {
            assert_eq!(parking_decomposition(&spec(2, 2 * k + 1)).total_dimension(), ((2 * k + 1) as u128).pow(2));
        }
    }

    #[test]
    fn support_examples() {
        assert_eq!(support(&spec(2, 3)), vec![bp(&[2], &[]), bp(&[1, 1], &[]), bp(&[1], &[1]), bp(&[], &[2])]);
        for m in 3..=12 {
            assert_eq!(support(&spec(1, m)), vec![bp(&[1], &[]), bp(&[], &[1])]);
        }
        assert!(support(&spec(2, 2)).iter().all(|b| b.second.is_empty()));
        assert_eq!(support(&spec(4, 1)), vec![bp(&[4], &[])]);
    }

    #[test]
    fn support_matches_row_bounds() {
        for n in 1..=5 {
            for m in 1..=9u64 {
                let (a, b) = match spec(n, m).modulus() {
                    Modulus::Odd { k } => (k + 1, k),
                    Modulus::Even { l } => (l + 1, l - 1),
                };
                let expected: Vec<_> = bipartitions_of(n)
                    .into_iter()
                    .filter(|x| x.first.rows() as u64 <= a && x.second.rows() as u64 <= b)
                    .collect();
                assert_eq!(support(&spec(n, m)), expected);
            }
        }
    }

    #[test]
    fn dimensions_add_up() {
        for n in 1..=6 {
            for m in 1..=9 {
                let s = spec(n, m);
                assert_eq!(parking_decomposition(&s).total_dimension(), s.dimension());
            }
        }
    }

    #[test]
    fn rejects_degenerate_specs() {
        assert!(ParkingSpec::new(0, 3).is_err());
        assert!(ParkingSpec::new(2, 0).is_err());
        assert_eq!(spec(3, 1).modulus(), Modulus::Odd { k: 0 });
    }
}
