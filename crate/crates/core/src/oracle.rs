//! Brute-force reference computations.
//!
//! Nothing here shares code paths with the fast implementations it checks:
//! groups are enumerated element by element, characters come from explicit
//! matrices or fixed-point counts, and feasibility from exhaustive search.
//! Everything is exponential and meant for tiny inputs only.

use std::collections::{BTreeMap, HashMap};

use crate::combinatorics::{partitions_of, Bipartition, Partition};
use crate::hypchar::SignedClass;

/// Number of partitions of `n`, by the recursion on the largest part.
pub fn partition_count(n: usize) -> u64 {
    fn bounded(n: usize, k: usize, memo: &mut HashMap<(usize, usize), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&(n, k)) {
            return v;
        }
        let v = bounded(n, k - 1, memo) + if k <= n { bounded(n - k, k, memo) } else { 0 };
        memo.insert((n, k), v);
        v
    }
    bounded(n, n, &mut HashMap::new())
}

/// Number of standard Young tableaux, by removing the cell holding the
/// largest entry in every possible way.
pub fn count_standard_tableaux(shape: &Partition) -> u128 {
    if shape.is_empty() {
        return 1;
    }
    shape.remove_box().iter().map(count_standard_tableaux).sum()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // Next permutation.
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("successor exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    Partition::from_unsorted(lengths)
}

fn perm_sign(perm: &[usize]) -> i64 {
    let ct = cycle_type(perm);
    if ct.parts().iter().map(|&l| l - 1).sum::<usize>() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A signed permutation: `i ↦ sign[i] * image[i]` on `±{0..n}`, i.e. the
/// monomial matrix with entry `sign[i]` at row `image[i]`, column `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    pub image: Vec<usize>,
    pub sign: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect(), sign: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let image = other.image.iter().map(|&k| self.image[k]).collect();
        let sign = (0..other.len()).map(|i| other.sign[i] * self.sign[other.image[i]]).collect();
        Self { image, sign }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.len()];
        let mut sign = vec![1; self.len()];
        for i in 0..self.len() {
            image[self.image[i]] = i;
            sign[self.image[i]] = self.sign[i];
        }
        Self { image, sign }
    }

    /// Product of the nonzero matrix entries.
    pub fn sign_product(&self) -> i64 {
        self.sign.iter().map(|&s| i64::from(s)).product()
    }

    /// Cycle types of the even cycles (even number of `-1`s) and odd cycles.
    pub fn signed_cycle_type(&self) -> SignedClass {
        let mut seen = vec![false; self.len()];
        let (mut even, mut odd) = (Vec::new(), Vec::new());
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let (mut len, mut negatives, mut i) = (0, 0, start);
            while !seen[i] {
                seen[i] = true;
                if self.sign[i] < 0 {
                    negatives += 1;
                }
                i = self.image[i];
                len += 1;
            }
            if negatives % 2 == 0 {
                even.push(len);
            } else {
                odd.push(len);
            }
        }
        SignedClass::new(Partition::from_unsorted(even), Partition::from_unsorted(odd))
    }

    /// Fixed points of the coordinate action on `(Z/mZ)^n`, counted by
    /// enumerating all `m^n` vectors. The element sends coordinate `i` to
    /// position `image[i]` with sign `sign[i]`.
    pub fn fixed_vectors(&self, m: u64) -> u64 {
        let n = self.len();
        let m = m as i64;
        let mut a = vec![0i64; n];
        let mut count = 0;
        loop {
            if (0..n).all(|i| (a[self.image[i]] - i64::from(self.sign[i]) * a[i]).rem_euclid(m) == 0) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == n {
                    return count;
                }
                a[k] += 1;
                if a[k] < m {
                    break;
                }
                a[k] = 0;
                k += 1;
            }
        }
    }
}

/// Every element of `B_n`.
pub fn signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for perm in permutations(n) {
        for mask in 0u32..(1 << n) {
            let sign = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push(SignedPermutation { image: perm.clone(), sign });
        }
    }
    out
}

/// Class sizes of `B_n` by classifying every element.
pub fn brute_class_sizes(n: usize) -> BTreeMap<SignedClass, u128> {
    let mut out = BTreeMap::new();
    for g in signed_permutations(n) {
        *out.entry(g.signed_cycle_type()).or_insert(0) += 1;
    }
    out
}

/// The permutation character of `(Z/mZ)^n`, by counting fixed vectors of
/// every group element. Returns `None` if two elements of one class
/// disagree, which would mean the classification is wrong.
pub fn brute_parking_character(n: usize, m: u64) -> Option<BTreeMap<SignedClass, u64>> {
    let mut out: BTreeMap<SignedClass, u64> = BTreeMap::new();
    for g in signed_permutations(n) {
        let fixed = g.fixed_vectors(m);
        match out.insert(g.signed_cycle_type(), fixed) {
            Some(prev) if prev != fixed => return None,
            _ => {}
        }
    }
    Some(out)
}

/// Character table of `S_n` without Murnaghan–Nakayama: characters of the
/// permutation modules on row tabloids are counted directly, and the
/// irreducibles are peeled off in decreasing lexicographic order, each
/// permutation module containing its own irreducible exactly once above
/// lexicographically larger ones.
pub fn sym_table_by_gram(n: usize) -> BTreeMap<(Partition, Partition), i64> {
    let perms = permutations(n);
    let labels = partitions_of(n);
    let mut class_rep: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
    let mut class_count: BTreeMap<Partition, i128> = BTreeMap::new();
    for p in &perms {
        let ct = cycle_type(p);
        *class_count.entry(ct.clone()).or_insert(0) += 1;
        class_rep.entry(ct).or_insert_with(|| p.clone());
    }
    let order = perms.len() as i128;
    let classes: Vec<Partition> = class_rep.keys().cloned().collect();

    let tabloid_character = |shape: &Partition| -> Vec<i128> {
        // Row assignment of each point, with row i used shape[i] times.
        let mut tabloids = Vec::new();
        let mut rows = vec![0usize; n];
        let mut left: Vec<usize> = shape.parts().to_vec();
        fn fill(i: usize, rows: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == rows.len() {
                out.push(rows.clone());
                return;
            }
            for r in 0..left.len() {
                if left[r] > 0 {
                    left[r] -= 1;
                    rows[i] = r;
                    fill(i + 1, rows, left, out);
                    left[r] += 1;
                }
            }
        }
        fill(0, &mut rows, &mut left, &mut tabloids);
        classes
            .iter()
            .map(|c| {
                let sigma = &class_rep[c];
                tabloids.iter().filter(|t| (0..n).all(|i| t[sigma[i]] == t[i])).count() as i128
            })
            .collect()
    };

    let inner = |f: &[i128], g: &[i128]| -> i128 {
        let s: i128 = classes.iter().enumerate().map(|(i, c)| class_count[c] * f[i] * g[i]).sum();
        assert_eq!(s % order, 0, "inner product of characters is integral");
        s / order
    };

    let mut found: Vec<(Partition, Vec<i128>)> = Vec::new();
    for lambda in &labels {
        let mut chi = tabloid_character(lambda);
        for (_, prev) in &found {
            let k = inner(&chi, prev);
            chi.iter_mut().zip(prev).for_each(|(x, p)| *x -= k * p);
        }
        found.push((lambda.clone(), chi));
    }
    let mut out = BTreeMap::new();
    for (lambda, chi) in found {
        for (c, v) in classes.iter().zip(chi) {
            out.insert((lambda.clone(), c.clone()), v as i64);
        }
    }
    out
}

type Matrix = Vec<Vec<i64>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..r).map(|i| (0..c).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, ca, rb, cb) = (a.len(), a[0].len(), b.len(), b[0].len());
    let mut out = vec![vec![0; ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

fn trace(a: &Matrix) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

/// Explicit integer matrices of the irreducible `S_l` representations for
/// `l <= 3`: trivial, sign, and the two-dimensional reflection
/// representation of `S_3` on `{v in C^3 : Σ v = 0}` in the basis
/// `e1 - e2, e2 - e3`.
pub fn sym_irrep_matrix(lambda: &Partition, perm: &[usize]) -> Option<Matrix> {
    let l = lambda.size();
    if l > 3 {
        return None;
    }
    if lambda.rows() <= 1 {
        return Some(vec![vec![1]]);
    }
    if lambda.part(0) == 1 {
        return Some(vec![vec![perm_sign(perm)]]);
    }
    // Shape (2,1). Coordinates of a sum-zero v in the basis are (v1, v1 + v2).
    let image = |basis_vec: [i64; 3]| -> [i64; 3] {
        let mut out = [0; 3];
        for i in 0..3 {
            out[perm[i]] += basis_vec[i];
        }
        out
    };
    let columns = [image([1, -1, 0]), image([0, 1, -1])];
    let coords: Vec<[i64; 2]> = columns.iter().map(|v| [v[0], v[0] + v[1]]).collect();
    Some(vec![vec![coords[0][0], coords[1][0]], vec![coords[0][1], coords[1][1]]])
}

/// Character table of `B_n` (`n <= 3`) from explicit matrices: each
/// `V_{λ,μ}` is built as the representation induced from
/// `B_l × B_{n-l}` on the coset basis, checked to be a homomorphism, and its
/// trace taken at every element. Returns `None` if some matrix model fails
/// the homomorphism check.
pub fn hyp_table_by_matrices(n: usize) -> Option<BTreeMap<(Bipartition, SignedClass), i64>> {
    if n > 3 {
        return None;
    }
    let group = signed_permutations(n);
    let mut out = BTreeMap::new();
    for label in crate::combinatorics::bipartitions_of(n) {
        let l = label.first.size();
        let in_subgroup = |g: &SignedPermutation| (0..l).all(|i| g.image[i] < l);
        let mut reps: Vec<SignedPermutation> = Vec::new();
        for g in &group {
            if !reps.iter().any(|r| in_subgroup(&r.inverse().compose(g))) {
                reps.push(g.clone());
            }
        }
        let inner = |h: &SignedPermutation| -> Matrix {
            let first: Vec<usize> = h.image[..l].to_vec();
            let second: Vec<usize> = h.image[l..].iter().map(|&x| x - l).collect();
            let eps: i64 = h.sign[l..].iter().map(|&s| i64::from(s)).product();
            let a = sym_irrep_matrix(&label.first, &first).expect("small shape");
            let b = sym_irrep_matrix(&label.second, &second).expect("small shape");
            kron(&a, &b).into_iter().map(|row| row.into_iter().map(|x| x * eps).collect()).collect()
        };
        let block = inner(&SignedPermutation::identity(n)).len();
        let dim = block * reps.len();
        let induced = |g: &SignedPermutation| -> Matrix {
            let mut mat = vec![vec![0; dim]; dim];
            for (i, gi) in reps.iter().enumerate() {
                let ggi = g.compose(gi);
                let (j, h) = reps
                    .iter()
                    .enumerate()
                    .map(|(j, gj)| (j, gj.inverse().compose(&ggi)))
                    .find(|(_, h)| in_subgroup(h))
                    .expect("cosets partition the group");
                let rho = inner(&h);
                for r in 0..block {
                    for c in 0..block {
                        mat[j * block + r][i * block + c] = rho[r][c];
                    }
                }
            }
            mat
        };
        let matrices: HashMap<&SignedPermutation, Matrix> = group.iter().map(|g| (g, induced(g))).collect();
        for g in &group {
            for h in &group {
                if mat_mul(&matrices[g], &matrices[h]) != matrices[&g.compose(h)] {
                    return None;
                }
            }
        }
        for g in &group {
            let value = trace(&matrices[g]);
            match out.insert((label.clone(), g.signed_cycle_type()), value) {
                Some(prev) if prev != value => return None,
                _ => {}
            }
        }
    }
    Some(out)
}

/// Searches every `x` with `0 <= x_j <= bounds[j]` for `Σ x_j columns[j] = target`.
pub fn exhaustive_solution(columns: &[Vec<i64>], target: &[i64], bounds: &[u64]) -> Option<Vec<u64>> {
    let k = columns.len();
    let mut x = vec![0u64; k];
    loop {
        let hit = (0..target.len()).all(|i| {
            columns.iter().zip(&x).map(|(c, &v)| i128::from(c[i]) * i128::from(v)).sum::<i128>() == i128::from(target[i])
        });
        if hit {
            return Some(x);
        }
        let mut j = 0;
        loop {
            if j == k {
                return None;
            }
            x[j] += 1;
            if x[j] <= bounds[j] {
                break;
            }
            x[j] = 0;
            j += 1;
        }
    }
}
