//! Restriction from `B_{n+1}` to `B_n` and the constructions of extensions
//! built on it.
//!
//! Restriction of an irreducible is multiplicity free: `V_{λ,μ}` restricts to
//! the sum of the irreducibles obtained by deleting one box. The restriction
//! matrix pairs the support `X` of a parking decomposition with its image `X̃`
//! under first-row extension; in decreasing lexicographic order it is upper
//! unitriangular, so the candidate extension supported on `X̃` is found by
//! back-substitution.

use std::collections::HashSet;

use crate::combinatorics::Bipartition;
use crate::error::{Error, Result};
use crate::parkingspace::{parking_decomposition, MultiplicityVector, ParkingSpec};
use crate::scalar::ExactInteger;

/// Restriction of a `B_{n+1}`-representation to `B_n`.
pub fn restrict(v: &MultiplicityVector) -> Result<MultiplicityVector> {
    if v.n() == 0 {
        return Err(Error::NoBoxToRemove);
    }
    let mut out = MultiplicityVector::zero(v.n() - 1);
    for (b, mult) in v.iter() {
        for smaller in b.remove_box()? {
            out.add(smaller, mult);
        }
    }
    Ok(out)
}

/// Square 0/1 matrix with rows indexed by `X_{n,m}` and columns by
/// `X̃_{n,m}`, both greatest first. Entry `(r, c)` is 1 when the row label
/// occurs in the restriction of the column label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionMatrix {
    pub n: usize,
    pub m: u64,
    pub rows: Vec<Bipartition>,
    pub columns: Vec<Bipartition>,
    pub entries: Vec<Vec<u8>>,
}

impl RestrictionMatrix {
    pub fn is_unitriangular(&self) -> bool {
        self.entries.len() == self.columns.len()
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.len() == self.columns.len() && row[i] == 1 && row[..i].iter().all(|&x| x == 0)
            })
    }
}

pub fn build_restriction_matrix(n: usize, m: u64) -> Result<RestrictionMatrix> {
    let spec = ParkingSpec::new(n, m)?;
    let rows: Vec<Bipartition> = parking_decomposition(&spec).support().cloned().collect();
    let columns: Vec<Bipartition> = rows.iter().map(Bipartition::first_row_extend).collect();
    if columns.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Inconsistent("first-row extension did not preserve order".into()));
    }
    let entries = rows
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| {
                    let below: HashSet<Bipartition> = c.remove_box().expect("columns are nonempty").into_iter().collect();
                    u8::from(below.contains(r))
                })
                .collect()
        })
        .collect();
    let matrix = RestrictionMatrix { n, m, rows, columns, entries };
    if !matrix.is_unitriangular() {
        return Err(Error::Inconsistent(format!("restriction matrix for n={n}, m={m} is not unitriangular")));
    }
    Ok(matrix)
}

/// Solves `U x = v` for an upper unitriangular 0/1 matrix `U` exactly.
pub fn back_substitute<T: ExactInteger>(upper: &[Vec<u8>], v: &[T]) -> Result<Vec<T>> {
    let size = v.len();
    if upper.len() != size || upper.iter().any(|row| row.len() != size) {
        return Err(Error::Dimension(format!("expected a {size}x{size} matrix")));
    }
    let mut x = vec![T::zero(); size];
    for i in (0..size).rev() {
        if upper[i][i] != 1 || upper[i][..i].iter().any(|&a| a != 0) {
            return Err(Error::Inconsistent(format!("row {i} is not unitriangular")));
        }
        let mut acc = v[i].clone();
        for j in (i + 1)..size {
            if upper[i][j] == 1 {
                acc = acc - x[j].clone();
            }
        }
        x[i] = acc;
    }
    Ok(x)
}

/// A `B_{n+1}`-representation offered as an extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateExtension {
    pub entries: MultiplicityVector,
}

impl CandidateExtension {
    pub fn new(entries: MultiplicityVector) -> Self {
        Self { entries }
    }

    pub fn n_plus_one(&self) -> usize {
        self.entries.n()
    }
}

/// Result of the back-substitution over `X̃_{n,m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TildeSolution {
    pub columns: Vec<Bipartition>,
    /// Solution of `R c = v`, possibly with negative entries.
    pub solved: Vec<i64>,
}

impl TildeSolution {
    /// The extension, present only when every coefficient is nonnegative.
    pub fn extension(&self) -> Option<CandidateExtension> {
        if self.solved.iter().any(|&c| c < 0) {
            return None;
        }
        let n1 = self.columns.first().map_or(0, Bipartition::size);
        let entries = self.columns.iter().cloned().zip(self.solved.iter().map(|&c| c as u64));
        Some(CandidateExtension::new(MultiplicityVector::from_entries(n1, entries).expect("columns share a size")))
    }
}

/// Finds the unique combination of irreducibles indexed by `X̃_{n,m}` whose
/// restriction is `C[(Z/mZ)^n]`, if its coefficients are nonnegative.
pub fn solve_tilde_extension(n: usize, m: u64) -> Result<TildeSolution> {
    let spec = ParkingSpec::new(n, m)?;
    let matrix = build_restriction_matrix(n, m)?;
    let decomposition = parking_decomposition(&spec);
    if decomposition.support().any(|b| !matrix.rows.contains(b)) {
        return Err(Error::Inconsistent("decomposition is not supported on X".into()));
    }
    let v: Vec<i64> = matrix.rows.iter().map(|b| i64::from_u64(decomposition.get(b))).collect();
    let solved = back_substitute(&matrix.entries, &v)?;
    Ok(TildeSolution { columns: matrix.columns, solved })
}

/// `⌈a/3⌉`.
pub fn ceil_third(a: u64) -> u64 {
    a.div_ceil(3)
}

/// Coefficients `c_1..=c_max` from `c_a = 1` for `a ≤ 2` and
/// `c_a = a - c_{a-1} - c_{a-2}` otherwise. Index 0 is unused and set to 0.
pub fn recursive_coefficients(max: usize) -> Vec<i64> {
    let mut c = vec![0i64; max + 1];
    for a in 1..=max {
        c[a] = if a <= 2 { 1 } else { a as i64 - c[a - 1] - c[a - 2] };
    }
    c
}

/// Extension of `C[(Z/3Z)^n]` assigning `⌈(λ_1 + 1 - λ_2)/3⌉` copies of
/// `V_{λ',μ}` to each `(λ, μ)` in the support.
pub fn closed_form_m3(n: usize) -> Result<CandidateExtension> {
    let spec = ParkingSpec::new(n, 3)?;
    let mut out = MultiplicityVector::zero(n + 1);
    for b in parking_decomposition(&spec).support() {
        let gap = (b.first.part(0) + 1 - b.first.part(1)) as u64;
        out.add(b.first_row_extend(), ceil_third(gap));
    }
    Ok(CandidateExtension::new(out))
}

/// The `B_3`-representation restricting to `C[(Z/2lZ)^2]`.
///
/// Both `V_{(1,1),(1)}` and `V_{(2),(1)}` restrict onto `V_{(1),(1)}`, so
/// they carry `l - 1` copies each; see [`ep2_doubled_family`] for the variant
/// with `2(l - 1)` copies, which overshoots.
pub fn ep2_extension(l: u64) -> Result<CandidateExtension> {
    ep2_family(l, 1)
}

/// The variant of [`ep2_extension`] with `2(l - 1)` copies of both
/// `V_{(1,1),(1)}` and `V_{(2),(1)}`, and `l(l+1)/2 - 2(l-1)` copies of
/// `V_{(2,1),∅}`. It restricts to `C[(Z/2lZ)^2]` plus `2(l - 1)` extra copies
/// of `V_{(1),(1)}`, so it is an extension only for `l = 1`.
pub fn ep2_doubled_family(l: u64) -> Result<CandidateExtension> {
    ep2_family(l, 2)
}

fn ep2_family(l: u64, weight: u64) -> Result<CandidateExtension> {
    if l < 1 {
        return Err(Error::InvalidArgument("l must be at least 1".into()));
    }
    let entries = [
        (Bipartition::from_parts(&[1], &[1, 1]), (l - 1) * (l.saturating_sub(2)) / 2),
        (Bipartition::from_parts(&[1], &[2]), l * (l - 1) / 2),
        (Bipartition::from_parts(&[1, 1], &[1]), weight * (l - 1)),
        (Bipartition::from_parts(&[2], &[1]), weight * (l - 1)),
        // l(l+1)/2 - w(l-1) is positive for w <= 2: (l^2 - 3l + 4)/2 has no real roots.
        (Bipartition::from_parts(&[2, 1], &[]), l * (l + 1) / 2 + weight - weight * l),
        (Bipartition::from_parts(&[3], &[]), l + 1),
    ];
    Ok(CandidateExtension::new(MultiplicityVector::from_entries(3, entries)?))
}

/// One label where the restriction and the target disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub label: Bipartition,
    pub expected: u64,
    pub found: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub discrepancies: Vec<Discrepancy>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Checks that `cand` restricts to `C[(Z/mZ)^n]`.
pub fn verify_extension(cand: &CandidateExtension, spec: &ParkingSpec) -> Verification {
    let target = parking_decomposition(spec);
    if cand.n_plus_one() != spec.n + 1 {
        let discrepancies = target
            .iter()
            .map(|(b, m)| Discrepancy { label: b.clone(), expected: m, found: 0 })
            .collect();
        return Verification { discrepancies };
    }
    let restricted = restrict(&cand.entries).expect("n + 1 >= 1");
    let mut labels: Vec<&Bipartition> = target.support().chain(restricted.support()).collect();
    labels.sort_unstable_by(|a, b| b.cmp(a));
    labels.dedup();
    let discrepancies = labels
        .into_iter()
        .filter(|b| target.get(b) != restricted.get(b))
        .map(|b| Discrepancy { label: b.clone(), expected: target.get(b), found: restricted.get(b) })
        .collect();
    Verification { discrepancies }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bipartitions_of;

    fn bp(a: &[usize], b: &[usize]) -> Bipartition {
        Bipartition::from_parts(a, b)
    }

    fn spec(n: usize, m: u64) -> ParkingSpec {
        ParkingSpec::new(n, m).unwrap()
    }

    fn entries(c: &CandidateExtension) -> Vec<(Bipartition, u64)> {
        c.entries.iter().map(|(b, m)| (b.clone(), m)).collect()
    }

    #[test]
    fn restrict_examples() {
        let r = restrict(&MultiplicityVector::indicator(&bp(&[2], &[1]))).unwrap();
        assert_eq!(r.iter().map(|(b, m)| (b.clone(), m)).collect::<Vec<_>>(), vec![(bp(&[2], &[]), 1), (bp(&[1], &[1]), 1)]);
        let r = restrict(&MultiplicityVector::indicator(&bp(&[3], &[]))).unwrap();
        assert_eq!(r.iter().map(|(b, m)| (b.clone(), m)).collect::<Vec<_>>(), vec![(bp(&[2], &[]), 1)]);
        assert!(restrict(&MultiplicityVector::zero(0)).is_err());
    }

    #[test]
    fn restrict_preserves_dimension() {
        for n in 1..=7 {
            for b in bipartitions_of(n) {
                let v = MultiplicityVector::indicator(&b);
                assert_eq!(restrict(&v).unwrap().total_dimension(), v.total_dimension());
            }
        }
    }

    #[test]
    fn printed_matrices() {
        let r23 = build_restriction_matrix(2, 3).unwrap();
        assert_eq!(r23.entries, vec![vec![1, 1, 1, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 1], vec![0, 0, 0, 1]]);
        assert_eq!(
            r23.columns,
            vec![bp(&[3], &[]), bp(&[2, 1], &[]), bp(&[2], &[1]), bp(&[1], &[2])]
        );
        for m in 3..=15 {
            assert_eq!(build_restriction_matrix(1, m).unwrap().entries, vec![vec![1, 1], vec![0, 1]]);
        }
        for m in 5..=15 {
            assert_eq!(
                build_restriction_matrix(2, m).unwrap().entries,
                vec![
                    vec![1, 1, 1, 0, 0],
                    vec![0, 1, 0, 0, 0],
                    vec![0, 0, 1, 1, 1],
                    vec![0, 0, 0, 1, 0],
                    vec![0, 0, 0, 0, 1],
                ]
            );
        }
    }

    #[test]
    fn printed_inverse_of_r2m() {
        // Columns of the inverse solve R x = e_j.
        let r = build_restriction_matrix(2, 7).unwrap();
        let expected = [
            [1, -1, -1, 1, 1],
            [0, 1, 0, 0, 0],
            [0, 0, 1, -1, -1],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
        ];
        for j in 0..5 {
            let e: Vec<i64> = (0..5).map(|i| i64::from(i == j)).collect();
            let col = back_substitute(&r.entries, &e).unwrap();
            for i in 0..5 {
                assert_eq!(col[i], expected[i][j]);
            }
        }
    }

    #[test]
    fn unitriangular_everywhere() {
        for n in 1..=6 {
            for m in 1..=9 {
                assert!(build_restriction_matrix(n, m).unwrap().is_unitriangular());
            }
        }
    }

    #[test]
    fn tilde_solutions_for_small_n() {
        for k in 1..=10i64 {
            let s = solve_tilde_extension(1, 2 * k as u64 + 1).unwrap();
            assert_eq!(s.solved, vec![1, k]);
            assert_eq!(s.columns, vec![bp(&[2], &[]), bp(&[1], &[1])]);
            let s = solve_tilde_extension(2, 2 * k as u64 + 1).unwrap();
            let expected = [1, k * (k + 1) / 2, k, k * (k + 1) / 2, k * (k - 1) / 2];
            // At k = 1 the last label leaves the support and its zero is dropped.
            assert_eq!(s.solved, expected[..s.columns.len()]);
            assert_eq!(s.columns.len(), if k == 1 { 4 } else { 5 });
        }
        for l in 2..=10i64 {
            assert_eq!(solve_tilde_extension(1, 2 * l as u64).unwrap().solved, vec![2, l - 1]);
        }
        let s = solve_tilde_extension(1, 2).unwrap();
        assert_eq!((s.columns, s.solved), (vec![bp(&[2], &[])], vec![2]));
    }

    #[test]
    fn squared_middle_entry_does_not_restrict() {
        // k(k+1) - k(k+1)/2 - k(k-1)/2 is k, not k^2.
        for k in 2..=10u64 {
            let mut entries = solve_tilde_extension(2, 2 * k + 1).unwrap().extension().unwrap().entries;
            entries.set(bp(&[2], &[1]), k * k);
            assert!(!verify_extension(&CandidateExtension::new(entries), &spec(2, 2 * k + 1)).is_valid());
        }
    }

    #[test]
    fn ep24_has_no_tilde_extension() {
        let s = solve_tilde_extension(2, 8).unwrap();
        assert_eq!(s.solved, vec![-1, 10, 6, 6, 3]);
        assert!(s.extension().is_none());
    }

    #[test]
    fn tilde_solutions_verify() {
        for n in 1..=5 {
            for m in 1..=9 {
                if let Some(ext) = solve_tilde_extension(n, m).unwrap().extension() {
                    assert!(verify_extension(&ext, &spec(n, m)).is_valid(), "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn generic_back_substitution_agrees() {
        let r = build_restriction_matrix(2, 8).unwrap();
        let v64 = [15i64, 10, 15, 6, 3];
        let v128: Vec<i128> = v64.iter().map(|&x| x as i128).collect();
        let vbig: Vec<num_bigint::BigInt> = v64.iter().map(|&x| x.into()).collect();
        let x64 = back_substitute(&r.entries, &v64).unwrap();
        let x128 = back_substitute(&r.entries, &v128).unwrap();
        let xbig = back_substitute(&r.entries, &vbig).unwrap();
        assert_eq!(x64, vec![-1, 10, 6, 6, 3]);
        assert!(x128.iter().zip(&x64).all(|(a, b)| *a == *b as i128));
        assert!(xbig.iter().zip(&x64).all(|(a, b)| *a == (*b).into()));
        assert!(back_substitute(&[vec![0u8]], &[1i64]).is_err());
        assert!(back_substitute(&r.entries, &[1i64]).is_err());
    }

    #[test]
    fn m3_closed_form() {
        let c = closed_form_m3(1).unwrap();
        assert_eq!(entries(&c), vec![(bp(&[2], &[]), 1), (bp(&[1], &[1]), 1)]);
        let c = closed_form_m3(2).unwrap();
        assert_eq!(
            entries(&c),
            vec![(bp(&[3], &[]), 1), (bp(&[2, 1], &[]), 1), (bp(&[2], &[1]), 1), (bp(&[1], &[2]), 1)]
        );
        for n in 1..=6 {
            let c = closed_form_m3(n).unwrap();
            assert!(verify_extension(&c, &spec(n, 3)).is_valid());
            assert_eq!(Some(c), solve_tilde_extension(n, 3).unwrap().extension());
        }
    }

    #[test]
    fn coefficient_recursion() {
        let c = recursive_coefficients(50);
        for a in 1..=50 {
            assert_eq!(c[a], ceil_third(a as u64) as i64);
        }
    }

    #[test]
    fn ep2_family() {
        let expected_coeffs = |l: u64| {
            let c = ep2_extension(l).unwrap();
            [
                bp(&[1], &[1, 1]),
                bp(&[1], &[2]),
                bp(&[1, 1], &[1]),
                bp(&[2], &[1]),
                bp(&[2, 1], &[]),
                bp(&[3], &[]),
            ]
            .map(|b| c.entries.get(&b))
        };
        assert_eq!(expected_coeffs(1), [0, 0, 0, 0, 1, 2]);
        assert_eq!(expected_coeffs(2), [0, 1, 1, 1, 2, 3]);
        assert_eq!(expected_coeffs(4), [3, 6, 3, 3, 7, 5]);
        for l in 1..=20 {
            assert!(verify_extension(&ep2_extension(l).unwrap(), &spec(2, 2 * l)).is_valid(), "l={l}");
        }
        assert!(ep2_extension(0).is_err());
    }

    #[test]
    fn doubled_family_overcounts() {
        assert_eq!(ep2_doubled_family(1).unwrap(), ep2_extension(1).unwrap());
        for l in 2..=10 {
            let v = verify_extension(&ep2_doubled_family(l).unwrap(), &spec(2, 2 * l));
            assert_eq!(v.discrepancies, vec![Discrepancy {
                label: bp(&[1], &[1]),
                expected: (l - 1) * (l + 1),
                found: (l - 1) * (l + 3),
            }]);
        }
    }

    #[test]
    fn verification_reports_discrepancies() {
        let v = verify_extension(&CandidateExtension::new(MultiplicityVector::zero(2)), &spec(1, 3));
        assert!(!v.is_valid());
        assert_eq!(
            v.discrepancies,
            vec![
                Discrepancy { label: bp(&[1], &[]), expected: 2, found: 0 },
                Discrepancy { label: bp(&[], &[1]), expected: 1, found: 0 },
            ]
        );
        assert!(verify_extension(&closed_form_m3(3).unwrap(), &spec(3, 3)).is_valid());
        assert!(verify_extension(&ep2_extension(10).unwrap(), &spec(2, 20)).is_valid());
        // Wrong rank never verifies.
        assert!(!verify_extension(&closed_form_m3(2).unwrap(), &spec(3, 3)).is_valid());
    }
}
