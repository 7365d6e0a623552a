//! Conjugacy classes and irreducible characters of the signed symmetric
//! group `B_n`, plus the class-function inner product.
//!
//! Irreducible characters are computed by inducing
//! `L_lambda ⊠ (L_mu ⊗ ε)` from `B_l × B_{n-l}` and evaluating the induced
//! class function directly: a class of `B_n` meets the Young subgroup in the
//! classes obtained by splitting its signed cycles between the two blocks.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::combinatorics::{bipartitions_of, binomial, factorial, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::parkingspace::MultiplicityVector;
use crate::symchar::SymCharacterTable;

/// A conjugacy class of `B_n`, identified by its signed cycle type: the
/// cycle type of the even cycles (an even number of sign changes) and of the
/// odd cycles.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedClass(Bipartition);

impl SignedClass {
    pub fn new(even_type: Partition, odd_type: Partition) -> Self {
        Self(Bipartition::new(even_type, odd_type))
    }

    pub fn from_parts(even: &[usize], odd: &[usize]) -> Self {
        Self(Bipartition::from_parts(even, odd))
    }

    /// The identity of `B_n`: `n` even one-cycles.
    pub fn identity(n: usize) -> Self {
        Self::new(Partition::from_unsorted(vec![1; n]), Partition::empty())
    }

    pub fn even_type(&self) -> &Partition {
        &self.0.first
    }

    pub fn odd_type(&self) -> &Partition {
        &self.0.second
    }

    pub fn as_bipartition(&self) -> &Bipartition {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn even_cycles(&self) -> usize {
        self.even_type().rows()
    }

    pub fn odd_cycles(&self) -> usize {
        self.odd_type().rows()
    }

    /// Cycle type of the underlying permutation.
    pub fn merged_cycle_type(&self) -> Partition {
        let mut parts = self.even_type().parts().to_vec();
        parts.extend_from_slice(self.odd_type().parts());
        Partition::from_unsorted(parts)
    }

    /// The class of `B_{n+1}` containing this class's elements when they fix
    /// the extra letter.
    pub fn embed_with_fixed_point(&self) -> SignedClass {
        let mut even = self.even_type().parts().to_vec();
        even.push(1);
        SignedClass::new(Partition::from_unsorted(even), self.odd_type().clone())
    }
}

impl From<Bipartition> for SignedClass {
    fn from(b: Bipartition) -> Self {
        Self(b)
    }
}

impl fmt::Display for SignedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All conjugacy classes of `B_n`, greatest first.
pub fn classes_of(n: usize) -> Vec<SignedClass> {
    bipartitions_of(n).into_iter().map(SignedClass).collect()
}

pub fn group_order(n: usize) -> u128 {
    (1u128 << n) * factorial(n)
}

fn half_centralizer(counts: &[usize]) -> u128 {
    counts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, &m)| (2 * j as u128).pow(m as u32) * factorial(m))
        .product()
}

/// Centralizer order of an element of class `c`.
pub fn centralizer_order(c: &SignedClass) -> u128 {
    half_centralizer(&c.even_type().part_counts()) * half_centralizer(&c.odd_type().part_counts())
}

/// Number of elements of `B_n` in class `c`.
pub fn class_size(n: usize, c: &SignedClass) -> Result<u128> {
    if c.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: c.size() });
    }
    Ok(group_order(n) / centralizer_order(c))
}

/// The sign character: the product of the nonzero matrix entries, i.e.
/// `(-1)^(number of odd cycles)`.
pub fn epsilon(c: &SignedClass) -> i64 {
    if c.odd_cycles() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Calls `visit(c1, c2)` for every way of distributing the signed cycles of
/// `class` into a class `c1` of size `first_size` and a complementary `c2`.
fn for_each_split(class: &SignedClass, first_size: usize, mut visit: impl FnMut(&SignedClass, &SignedClass)) {
    // (cycle length, multiplicity, odd?)
    let mut groups = Vec::new();
    for (odd, counts) in [(false, class.even_type().part_counts()), (true, class.odd_type().part_counts())] {
        for (len, &count) in counts.iter().enumerate().skip(1) {
            if count > 0 {
                groups.push((len, count, odd));
            }
        }
    }
    let mut taken = vec![0usize; groups.len()];
    split_rec(&groups, 0, first_size, &mut taken, &mut visit);
}

fn split_rec(
    groups: &[(usize, usize, bool)],
    idx: usize,
    remaining: usize,
    taken: &mut Vec<usize>,
    visit: &mut impl FnMut(&SignedClass, &SignedClass),
) {
    if idx == groups.len() {
        if remaining == 0 {
            let mut parts = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
            for (&(len, count, odd), &k) in groups.iter().zip(taken.iter()) {
                let slot = usize::from(odd);
                parts[slot].extend(std::iter::repeat(len).take(k));
                parts[2 + slot].extend(std::iter::repeat(len).take(count - k));
            }
            let [e1, o1, e2, o2] = parts;
            let c1 = SignedClass::new(Partition::from_unsorted(e1), Partition::from_unsorted(o1));
            let c2 = SignedClass::new(Partition::from_unsorted(e2), Partition::from_unsorted(o2));
            visit(&c1, &c2);
        }
        return;
    }
    let (len, count, _) = groups[idx];
    for k in 0..=count.min(remaining / len) {
        taken[idx] = k;
        split_rec(groups, idx + 1, remaining - k * len, taken, visit);
    }
    taken[idx] = 0;
}

/// Symmetric group tables for every size up to some bound, shared by the
/// character computations of one `B_n` table.
pub struct SymTables {
    tables: Vec<SymCharacterTable>,
}

impl SymTables {
    pub fn up_to(n: usize) -> Self {
        Self { tables: (0..=n).map(SymCharacterTable::new).collect() }
    }

    fn value(&self, lambda: &Partition, alpha: &Partition) -> i64 {
        self.tables[lambda.size()].value(lambda, alpha).expect("sym tables cover every size used")
    }

    /// Induced-character evaluation for one label and one class.
    fn hyp_character(&self, label: &Bipartition, class: &SignedClass) -> Result<i64> {
        let n = label.size();
        let l = label.first.size();
        let mut weighted = BigInt::zero();
        let mut failure = None;
        for_each_split(class, l, |c1, c2| {
            let sizes = class_size(l, c1).and_then(|a| Ok(a * class_size(n - l, c2)?));
            match sizes {
                Ok(d) => {
                    let inner = self.value(&label.first, &c1.merged_cycle_type())
                        * self.value(&label.second, &c2.merged_cycle_type())
                        * epsilon(c2);
                    weighted += BigInt::from(d) * BigInt::from(inner);
                }
                Err(e) => failure = Some(e),
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        // |B_n| / |B_l x B_{n-l}| = C(n, l).
        let numerator = weighted * BigInt::from(binomial(n, l));
        let denominator = BigInt::from(class_size(n, class)?);
        let (q, r) = numerator.div_rem(&denominator);
        if !r.is_zero() {
            return Err(Error::Inconsistent(format!(
                "induced character of {label} at {class} is not an integer"
            )));
        }
        q.to_i64()
            .ok_or_else(|| Error::Inconsistent(format!("character of {label} at {class} overflows i64")))
    }
}

/// Value of the irreducible character `label` of `B_n` at `class`.
pub fn irreducible_character(n: usize, label: &Bipartition, class: &SignedClass) -> Result<i64> {
    if label.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: label.size() });
    }
    if class.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: class.size() });
    }
    SymTables::up_to(n).hyp_character(label, class)
}

/// An integer-valued function on the conjugacy classes of `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<SignedClass, i64>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&SignedClass) -> i64) -> Self {
        let values = classes_of(n).into_iter().map(|c| {
            let v = f(&c);
            (c, v)
        });
        Self { n, values: values.collect() }
    }

    pub fn try_from_fn(n: usize, mut f: impl FnMut(&SignedClass) -> Result<i64>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for c in classes_of(n) {
            let v = f(&c)?;
            values.insert(c, v);
        }
        Ok(Self { n, values })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, c: &SignedClass) -> Option<i64> {
        self.values.get(c).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SignedClass, i64)> {
        self.values.iter().map(|(c, &v)| (c, v))
    }
}

/// `<f, g> = (1/|B_n|) Σ_C |C| f(C) g(C)`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n != g.n {
        return Err(Error::SizeMismatch { expected: f.n, found: g.n });
    }
    let mut total = BigInt::zero();
    for (c, fv) in f.iter() {
        let gv = g.get(c).ok_or_else(|| Error::Inconsistent(format!("class {c} missing")))?;
        total += BigInt::from(class_size(f.n, c)?) * BigInt::from(fv) * BigInt::from(gv);
    }
    Ok(BigRational::new(total, BigInt::from(group_order(f.n))))
}

/// Character table of `B_n`; rows are bipartition labels and columns are
/// signed classes, both greatest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypCharacterTable {
    n: usize,
    labels: Vec<Bipartition>,
    classes: Vec<SignedClass>,
    label_index: HashMap<Bipartition, usize>,
    class_index: HashMap<SignedClass, usize>,
    values: Vec<Vec<i64>>,
}

impl HypCharacterTable {
    pub fn new(n: usize) -> Self {
        let sym = SymTables::up_to(n);
        let labels = bipartitions_of(n);
        let classes = classes_of(n);
        let values = labels
            .iter()
            .map(|label| {
                classes
                    .iter()
                    .map(|c| sym.hyp_character(label, c).expect("induced character is integral"))
                    .collect()
            })
            .collect();
        Self::assemble(n, labels, classes, values)
    }

    pub fn from_values(n: usize, values: Vec<Vec<i64>>) -> Result<Self> {
        let labels = bipartitions_of(n);
        let classes = classes_of(n);
        if values.len() != labels.len() || values.iter().any(|row| row.len() != classes.len()) {
            return Err(Error::Dimension(format!("B_{n} table must be {0}x{0}", labels.len())));
        }
        Ok(Self::assemble(n, labels, classes, values))
    }

    fn assemble(n: usize, labels: Vec<Bipartition>, classes: Vec<SignedClass>, values: Vec<Vec<i64>>) -> Self {
        let label_index = labels.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let class_index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Self { n, labels, classes, label_index, class_index, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Bipartition] {
        &self.labels
    }

    pub fn classes(&self) -> &[SignedClass] {
        &self.classes
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn value(&self, label: &Bipartition, class: &SignedClass) -> Option<i64> {
        Some(self.values[*self.label_index.get(label)?][*self.class_index.get(class)?])
    }

    pub fn character(&self, label: &Bipartition) -> Option<ClassFunction> {
        let row = &self.values[*self.label_index.get(label)?];
        Some(ClassFunction::from_fn(self.n, |c| row[self.class_index[c]]))
    }

    /// Multiplicity of every irreducible in `f`; fails if `f` is not the
    /// character of a genuine representation.
    pub fn decompose(&self, f: &ClassFunction) -> Result<MultiplicityVector> {
        if f.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: f.n() });
        }
        let mut out = MultiplicityVector::zero(self.n);
        for label in &self.labels {
            let chi = self.character(label).expect("label from this table");
            let mult = inner_product(f, &chi)?;
            if !mult.is_integer() || mult.is_negative() {
                return Err(Error::NotACharacter { label: label.to_string(), value: mult.to_string() });
            }
            let m = mult
                .to_integer()
                .to_u64()
                .ok_or_else(|| Error::Inconsistent(format!("multiplicity of {label} overflows u64")))?;
            out.set(label.clone(), m);
        }
        Ok(out)
    }
}

/// Decomposes `f` into irreducibles of `B_n`, building the table on the fly.
pub fn decompose(f: &ClassFunction) -> Result<MultiplicityVector> {
    HypCharacterTable::new(f.n()).decompose(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parkingspace::{parking_character_fn, ParkingSpec};

    fn bp(a: &[usize], b: &[usize]) -> Bipartition {
        Bipartition::from_parts(a, b)
    }

    fn sc(a: &[usize], b: &[usize]) -> SignedClass {
        SignedClass::from_parts(a, b)
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(class_size(1, &sc(&[1], &[])).unwrap(), 1);
        assert_eq!(class_size(2, &sc(&[1], &[1])).unwrap(), 2);
        assert_eq!(class_size(2, &sc(&[], &[2])).unwrap(), 2);
        assert!(class_size(3, &sc(&[1], &[])).is_err());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=7 {
            let total: u128 = classes_of(n).iter().map(|c| class_size(n, c).unwrap()).sum();
            assert_eq!(total, group_order(n));
        }
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(&sc(&[3], &[])), 1);
        assert_eq!(epsilon(&sc(&[], &[1])), -1);
        assert_eq!(epsilon(&sc(&[1], &[1])), -1);
        assert_eq!(epsilon(&sc(&[], &[1, 1])), 1);
    }

    #[test]
    fn b1_and_b2_values() {
        assert_eq!(irreducible_character(1, &bp(&[1], &[]), &sc(&[1], &[])).unwrap(), 1);
        assert_eq!(irreducible_character(1, &bp(&[1], &[]), &sc(&[], &[1])).unwrap(), 1);
        assert_eq!(irreducible_character(1, &bp(&[], &[1]), &sc(&[1], &[])).unwrap(), 1);
        assert_eq!(irreducible_character(1, &bp(&[], &[1]), &sc(&[], &[1])).unwrap(), -1);
        assert_eq!(irreducible_character(2, &bp(&[1], &[1]), &sc(&[1, 1], &[])).unwrap(), 2);
        assert!(irreducible_character(2, &bp(&[1], &[]), &sc(&[1, 1], &[])).is_err());
    }

    #[test]
    fn splits_cover_every_subgroup_class() {
        // Summing |D| over all splits of all classes gives |B_l x B_{n-l}|.
        for n in 0..=6 {
            for l in 0..=n {
                let mut total = 0u128;
                for c in classes_of(n) {
                    for_each_split(&c, l, |c1, c2| {
                        total += class_size(l, c1).unwrap() * class_size(n - l, c2).unwrap();
                    });
                }
                assert_eq!(total, group_order(l) * group_order(n - l));
            }
        }
    }

    #[test]
    fn table_orthogonality() {
        for n in 0..=5 {
            let t = HypCharacterTable::new(n);
            let sizes: Vec<i128> = t.classes().iter().map(|c| class_size(n, c).unwrap() as i128).collect();
            for (i, ri) in t.values().iter().enumerate() {
                for (j, rj) in t.values().iter().enumerate() {
                    let s: i128 = (0..sizes.len()).map(|c| sizes[c] * ri[c] as i128 * rj[c] as i128).sum();
                    assert_eq!(s, if i == j { group_order(n) as i128 } else { 0 });
                }
            }
            for (c, class) in t.classes().iter().enumerate() {
                for d in 0..sizes.len() {
                    let s: i128 = t.values().iter().map(|row| row[c] as i128 * row[d] as i128).sum();
                    assert_eq!(s, if c == d { centralizer_order(class) as i128 } else { 0 });
                }
            }
        }
    }

    #[test]
    fn identity_column_is_dimension() {
        for n in 0..=5 {
            let t = HypCharacterTable::new(n);
            for label in t.labels() {
                assert_eq!(t.value(label, &SignedClass::identity(n)).unwrap() as u128, label.irrep_dimension());
            }
        }
    }

    #[test]
    fn self_inner_products() {
        for n in 1..=4 {
            let t = HypCharacterTable::new(n);
            for label in t.labels() {
                let chi = t.character(label).unwrap();
                assert_eq!(inner_product(&chi, &chi).unwrap(), BigRational::from_integer(1.into()));
                let d = t.decompose(&chi).unwrap();
                assert_eq!(d.support().collect::<Vec<_>>(), vec![label]);
            }
        }
        let z = ClassFunction::zero(3);
        assert!(inner_product(&z, &z).unwrap().is_zero());
        assert!(inner_product(&z, &ClassFunction::zero(2)).is_err());
    }

    #[test]
    fn parking_decompositions_in_rank_one() {
        for k in 1..=5u64 {
            let f = parking_character_fn(&ParkingSpec::new(1, 2 * k + 1).unwrap());
            let trivial = ClassFunction::from_fn(1, |_| 1);
            assert_eq!(inner_product(&trivial, &f).unwrap(), BigRational::from_integer((k + 1).into()));
        }
        let op11 = decompose(&parking_character_fn(&ParkingSpec::new(1, 3).unwrap())).unwrap();
        assert_eq!(op11.get(&bp(&[1], &[])), 2);
        assert_eq!(op11.get(&bp(&[], &[1])), 1);
        let ep12 = decompose(&parking_character_fn(&ParkingSpec::new(1, 4).unwrap())).unwrap();
        assert_eq!(ep12.get(&bp(&[1], &[])), 3);
        assert_eq!(ep12.get(&bp(&[], &[1])), 1);
    }

    #[test]
    fn decompose_rejects_virtual_characters() {
        let t = HypCharacterTable::new(2);
        let chi = t.character(&bp(&[1], &[1])).unwrap();
        let negated = ClassFunction::from_fn(2, |c| -chi.get(c).unwrap());
        assert!(matches!(t.decompose(&negated), Err(Error::NotACharacter { .. })));
        let half = ClassFunction::from_fn(2, |c| if *c == SignedClass::identity(2) { 1 } else { 0 });
        assert!(matches!(t.decompose(&half), Err(Error::NotACharacter { .. })));
    }

    #[test]
    fn embedding_adds_a_fixed_point() {
        assert_eq!(sc(&[2], &[1]).embed_with_fixed_point(), sc(&[2, 1], &[1]));
        assert_eq!(SignedClass::identity(2).embed_with_fixed_point(), SignedClass::identity(3));
    }
}
