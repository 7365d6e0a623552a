//! The acceptance suite: nine reproducible checks of the library against
//! brute-force oracles and against the published matrices and vectors.
//!
//! Every check is exact and deterministic. Criterion 9 draws its instances
//! from a fixed-seed generator, so reruns see the same instances.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::branching::{
    build_restriction_matrix, closed_form_m3, ceil_third, ep2_doubled_family, ep2_extension, recursive_coefficients, restrict,
    solve_tilde_extension, verify_extension,
};
use crate::combinatorics::{binomial, bipartitions_of, Bipartition};
use crate::hypchar::{class_size, classes_of, group_order, HypCharacterTable};
use crate::ilpsolve::{
    extension_exists_with, feasible, feasible_with, witness_extension, Budget, FeasibilityProblem, SolverKind, Space,
    Status,
};
use crate::oracle;
use crate::parkingspace::{parking_character, parking_character_fn, parking_decomposition, MultiplicityVector, ParkingSpec};
use crate::symchar::SymCharacterTable;

/// Seed of the instance generator for the solver soundness check.
pub const SOUNDNESS_SEED: u64 = 0x6f63_7461_7265_70;

/// Titles of the nine criteria, indexed from 1.
pub const CRITERIA: [&str; 9] = [
    "character formula vs fixed-point counting",
    "decomposition by inner products vs closed form",
    "printed restriction matrices and tilde vectors",
    "negative instance (2, 8)",
    "closed form for m = 3",
    "even family for n = 2",
    "character table integrity",
    "ILP sweep at desk scale",
    "solver soundness on generated instances",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {} ({}): {} [{:.1}s]",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn spec(n: usize, m: u64) -> std::result::Result<ParkingSpec, String> {
    lib(ParkingSpec::new(n, m))
}

/// Runs criterion `id` (1 to 9).
pub fn run(id: usize) -> Option<CriterionReport> {
    let check: fn() -> Check = match id {
        1 => character_formula,
        2 => dual_route_decomposition,
        3 => golden_matrices,
        4 => negative_instance,
        5 => closed_form_three,
        6 => even_family,
        7 => table_integrity,
        8 => ilp_sweep,
        9 => solver_soundness,
        _ => return None,
    };
    let start = Instant::now();
    let result = check();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionReport { id, title: CRITERIA[id - 1], passed, detail, elapsed: start.elapsed() })
}

/// Runs all criteria in order, calling `report` after each one.
pub fn run_all(mut report: impl FnMut(&CriterionReport)) -> Vec<CriterionReport> {
    (1..=CRITERIA.len())
        .map(|id| {
            let r = run(id).expect("id in range");
            report(&r);
            r
        })
        .collect()
}

fn character_formula() -> Check {
    let mut compared = 0;
    for n in 1..=4 {
        for m in 2..=7 {
            let s = spec(n, m)?;
            let brute = oracle::brute_parking_character(n, m)
                .ok_or_else(|| format!("fixed-point counts not constant on a class for n={n} m={m}"))?;
            ensure(brute.len() == classes_of(n).len(), || format!("class count mismatch for n={n}"))?;
            for (c, &count) in &brute {
                let formula = lib(parking_character(&s, c))?;
                ensure(formula == count, || format!("n={n} m={m} class {c}: formula {formula}, fixed points {count}"))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} class values agree for n <= 4, 2 <= m <= 7"))
}

fn dual_route_decomposition() -> Check {
    let mut compared = 0;
    for n in 1..=5 {
        let table = HypCharacterTable::new(n);
        for m in 1..=9 {
            let s = spec(n, m)?;
            let by_inner = lib(table.decompose(&parking_character_fn(&s)))?;
            let closed = parking_decomposition(&s);
            ensure(by_inner == closed, || format!("n={n} m={m}: inner products {by_inner:?} vs closed form {closed:?}"))?;
            ensure(closed.total_dimension() == s.dimension(), || format!("n={n} m={m}: dimension mismatch"))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} decompositions agree for n <= 5, m <= 9"))
}

fn solved_by_label(n: usize, m: u64) -> std::result::Result<BTreeMap<Bipartition, i64>, String> {
    let s = lib(solve_tilde_extension(n, m))?;
    Ok(s.columns.into_iter().zip(s.solved).filter(|(_, v)| *v != 0).collect())
}

fn expect_labelled(
    n: usize,
    m: u64,
    labels: &[Bipartition],
    values: &[i64],
) -> std::result::Result<(), String> {
    let got = solved_by_label(n, m)?;
    let want: BTreeMap<Bipartition, i64> =
        labels.iter().cloned().zip(values.iter().copied()).filter(|(_, v)| *v != 0).collect();
    ensure(got == want, || format!("tilde solution for ({n}, {m}): got {got:?}, expected {want:?}"))
}

fn golden_matrices() -> Check {
    let bp = Bipartition::from_parts;
    let r23 = lib(build_restriction_matrix(2, 3))?;
    ensure(r23.entries == [[1, 1, 1, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, 0, 1]].map(Vec::from), || {
        format!("R_(2,3) = {:?}", r23.entries)
    })?;
    ensure(r23.columns == [bp(&[3], &[]), bp(&[2, 1], &[]), bp(&[2], &[1]), bp(&[1], &[2])], || {
        format!("R_(2,3) columns {:?}", r23.columns)
    })?;
    let r1 = [[1, 1], [0, 1]].map(Vec::from);
    let r2 = [[1, 1, 1, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 1, 1], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]].map(Vec::from);
    let x1 = [bp(&[1], &[]), bp(&[], &[1])];
    let x2 = [bp(&[2], &[]), bp(&[1, 1], &[]), bp(&[1], &[1]), bp(&[], &[2]), bp(&[], &[1, 1])];
    for m in 3..=21 {
        let r = lib(build_restriction_matrix(1, m))?;
        ensure(r.entries == r1 && r.rows == x1, || format!("R_(1,{m}) = {:?}", r.entries))?;
    }
    for m in 5..=21 {
        let r = lib(build_restriction_matrix(2, m))?;
        ensure(r.entries == r2 && r.rows == x2, || format!("R_(2,{m}) = {:?}", r.entries))?;
    }
    let t1 = [bp(&[2], &[]), bp(&[1], &[1])];
    let t2 = [bp(&[3], &[]), bp(&[2, 1], &[]), bp(&[2], &[1]), bp(&[1], &[2]), bp(&[1], &[1, 1])];
    for k in 1..=10i64 {
        expect_labelled(1, 2 * k as u64 + 1, &t1, &[1, k])?;
    }
    for l in 1..=10i64 {
        expect_labelled(1, 2 * l as u64, &t1, &[2, l - 1])?;
    }
    // The n = 2 odd vectors are compared against the stated formula with k^2
    // in the middle; every mismatch is collected and explained.
    let mut mismatched = Vec::new();
    for k in 1..=10i64 {
        let m = 2 * k as u64 + 1;
        let stated = [1, k * (k + 1) / 2, k * k, k * (k + 1) / 2, k * (k - 1) / 2];
        if expect_labelled(2, m, &t2, &stated).is_ok() {
            continue;
        }
        let computed = [1, k * (k + 1) / 2, k, k * (k + 1) / 2, k * (k - 1) / 2];
        expect_labelled(2, m, &t2, &computed)?;
        let ext = lib(solve_tilde_extension(2, m))?.extension().ok_or("tilde solve failed")?;
        ensure(verify_extension(&ext, &spec(2, m)?).is_valid(), || format!("k={k}: computed vector does not restrict"))?;
        let mut squared = ext.entries.clone();
        squared.set(t2[2].clone(), (k * k) as u64);
        let v = verify_extension(&crate::branching::CandidateExtension::new(squared), &spec(2, m)?);
        let off: Vec<String> = v.discrepancies.iter().map(|d| format!("{} {}/{}", d.label, d.found, d.expected)).collect();
        mismatched.push(format!("k={k}: [2]|[1] is {k} not {}; with {} the restriction has {}", k * k, k * k, off.join(", ")));
    }
    ensure(mismatched.is_empty(), || {
        format!(
            "matrices and n = 1 vectors match, but for (2, 2k+1) the middle entry solves to k, which verifies, \
             while the expected k^2 does not restrict correctly: {}",
            mismatched.join("; ")
        )
    })?;
    Ok("R_(2,3), R_(1,m) for 3 <= m <= 21, R_(2,m) for 5 <= m <= 21 and 30 tilde vectors match".into())
}

fn negative_instance() -> Check {
    let s = lib(solve_tilde_extension(2, 8))?;
    ensure(s.solved == [-1, 10, 6, 6, 3], || format!("solved vector {:?}", s.solved))?;
    ensure(s.extension().is_none(), || "tilde solve reported an extension".into())?;
    let target = spec(2, 8)?;
    let table = HypCharacterTable::new(3);
    for space in [Space::Multiplicity, Space::Character] {
        let outcome = lib(extension_exists_with(2, 8, space, Budget::default(), Some(&table)))?;
        ensure(outcome.status == Status::Feasible, || format!("{} space: {}", space.as_str(), outcome.status))?;
        let ext = witness_extension(2, &outcome).ok_or("feasible outcome without witness")?;
        ensure(verify_extension(&ext, &target).is_valid(), || format!("{} space witness does not restrict", space.as_str()))?;
    }
    let ep = lib(ep2_extension(4))?;
    ensure(verify_extension(&ep, &target).is_valid(), || "EP_(2,4) closed form does not restrict".into())?;
    Ok("solved vector (-1, 10, 6, 6, 3); ILP feasible in both spaces; closed form verifies".into())
}

fn closed_form_three() -> Check {
    for n in 1..=6 {
        let c = lib(closed_form_m3(n))?;
        let restricted = lib(restrict(&c.entries))?;
        ensure(restricted == parking_decomposition(&spec(n, 3)?), || format!("n={n}: restriction differs"))?;
        let tilde = lib(solve_tilde_extension(n, 3))?.extension();
        ensure(tilde.as_ref() == Some(&c), || format!("n={n}: tilde solve {tilde:?} differs"))?;
    }
    let c = recursive_coefficients(50);
    for a in 1..=50 {
        ensure(c[a] == ceil_third(a as u64) as i64, || format!("a={a}: recursion {} vs ceiling {}", c[a], ceil_third(a as u64)))?;
    }
    Ok("n <= 6 restrict correctly and equal the tilde solution; recursion matches for a <= 50".into())
}

fn even_family() -> Check {
    for l in 1..=10 {
        let c = lib(ep2_extension(l))?;
        let v = verify_extension(&c, &spec(2, 2 * l)?);
        ensure(v.is_valid(), || format!("l={l}: {:?}", v.discrepancies))?;
        let doubled = verify_extension(&lib(ep2_doubled_family(l))?, &spec(2, 2 * l)?);
        let overshoot: Vec<_> = doubled
            .discrepancies
            .iter()
            .map(|d| (d.label.to_string(), d.found as i64 - d.expected as i64))
            .collect();
        let expected = if l == 1 { vec![] } else { vec![("[1]|[1]".to_string(), 2 * (l as i64 - 1))] };
        ensure(overshoot == expected, || format!("l={l}: doubled family discrepancies {overshoot:?}"))?;
    }
    Ok("l <= 10 verify with nonnegative coefficients; the variant with 2(l-1) copies of [1,1]|[1] and [2]|[1] \
        overshoots [1]|[1] by exactly 2(l-1) for 2 <= l <= 10"
        .into())
}

fn table_integrity() -> Check {
    for n in 0..=7 {
        let total: u128 = classes_of(n).iter().map(|c| class_size(n, c)).collect::<crate::Result<Vec<_>>>().map_err(|e| e.to_string())?.into_iter().sum();
        ensure(total == group_order(n), || format!("n={n}: class sizes sum to {total}"))?;
    }
    for n in 1..=4 {
        let brute = oracle::brute_class_sizes(n);
        for (c, &size) in &brute {
            ensure(lib(class_size(n, c))? == size, || format!("n={n} class {c}: size differs from enumeration"))?;
        }
    }
    for n in 1..=5 {
        let table = HypCharacterTable::new(n);
        let order = group_order(n) as i128;
        let sizes: Vec<i128> = table.classes().iter().map(|c| class_size(n, c).map(|s| s as i128)).collect::<crate::Result<_>>().map_err(|e| e.to_string())?;
        let values = table.values();
        let k = values.len();
        for i in 0..k {
            for j in 0..k {
                let row: i128 = (0..k).map(|c| sizes[c] * i128::from(values[i][c]) * i128::from(values[j][c])).sum();
                ensure(row == if i == j { order } else { 0 }, || format!("n={n}: rows {i},{j} not orthogonal"))?;
                let col: i128 = (0..k).map(|r| i128::from(values[r][i]) * i128::from(values[r][j])).sum();
                ensure(col * if i == j { sizes[i] } else { 1 } == if i == j { order } else { 0 }, || {
                    format!("n={n}: columns {i},{j} not orthogonal")
                })?;
            }
        }
        let identity = table.classes().iter().position(|c| c.even_type().parts().iter().all(|&p| p == 1) && c.odd_type().is_empty()).ok_or("identity class missing")?;
        for (r, label) in table.labels().iter().enumerate() {
            let dim = binomial(n, label.first.size())
                * oracle::count_standard_tableaux(&label.first)
                * oracle::count_standard_tableaux(&label.second);
            ensure(values[r][identity] as u128 == dim, || format!("n={n}: dimension of {label}"))?;
        }
    }
    for n in 1..=5 {
        let gram = oracle::sym_table_by_gram(n);
        let table = SymCharacterTable::new(n);
        for ((lambda, alpha), v) in gram {
            ensure(table.value(&lambda, &alpha) == Some(v), || format!("S_{n} value at {lambda}, {alpha}"))?;
        }
    }
    for n in 1..=3 {
        let explicit = oracle::hyp_table_by_matrices(n).ok_or("explicit matrices are not homomorphisms")?;
        let table = HypCharacterTable::new(n);
        ensure(explicit.len() == table.labels().len() * table.classes().len(), || format!("n={n}: explicit table incomplete"))?;
        for ((label, class), v) in explicit {
            ensure(table.value(&label, &class) == Some(v), || format!("n={n}: value at {label}, {class}"))?;
        }
    }
    Ok("class sizes (n <= 7), orthogonality and dimensions (n <= 5), S_n oracle (n <= 5), explicit matrices (n <= 3)".into())
}

/// Moduli covered by the sweep check: odd up to 21, even up to 20.
pub fn sweep_moduli() -> impl Iterator<Item = u64> {
    (1..=21).filter(|m| m % 2 == 1 || *m <= 20)
}

fn ilp_sweep() -> Check {
    let mut runs = 0;
    let mut nodes = 0;
    for n in 1..=4 {
        let table = HypCharacterTable::new(n + 1);
        for m in sweep_moduli() {
            let target = spec(n, m)?;
            let mut statuses = Vec::new();
            for space in [Space::Multiplicity, Space::Character] {
                let outcome = lib(extension_exists_with(n, m, space, Budget::default(), Some(&table)))?;
                ensure(outcome.status == Status::Feasible, || {
                    format!("n={n} m={m} {} space: {} ({})", space.as_str(), outcome.status, outcome.certificate_note)
                })?;
                let ext = witness_extension(n, &outcome).ok_or("feasible outcome without witness")?;
                ensure(verify_extension(&ext, &target).is_valid(), || format!("n={n} m={m}: witness does not restrict"))?;
                statuses.push(outcome.status);
                nodes += outcome.nodes;
                runs += 1;
            }
            ensure(statuses[0] == statuses[1], || format!("n={n} m={m}: spaces disagree"))?;
        }
    }
    Ok(format!(
        "{runs} runs feasible with verified witnesses for n <= 4, odd m <= 21, even m <= 20 ({nodes} nodes); n = 5..7 is left to explicit budgets"
    ))
}

fn branching_columns(n: usize) -> (Vec<Bipartition>, Vec<Vec<i64>>) {
    let rows = bipartitions_of(n);
    let labels = bipartitions_of(n + 1);
    let columns = labels
        .iter()
        .map(|b| {
            let r = restrict(&MultiplicityVector::indicator(b)).expect("positive rank");
            rows.iter().map(|row| r.get(row) as i64).collect()
        })
        .collect();
    (labels, columns)
}

fn combine(columns: &[Vec<i64>], coeffs: &[u64]) -> Vec<i64> {
    (0..columns[0].len()).map(|i| columns.iter().zip(coeffs).map(|(c, &x)| c[i] * x as i64).sum()).collect()
}

fn solver_soundness() -> Check {
    const INSTANCES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(SOUNDNESS_SEED);
    let pools: Vec<_> = (1..=4).map(branching_columns).collect();

    let pick = |rng: &mut ChaCha8Rng, max_cols: usize| {
        let (labels, columns) = &pools[rng.gen_range(0..pools.len())];
        let k = rng.gen_range(1..=max_cols.min(labels.len()));
        let chosen = sample(rng, labels.len(), k).into_vec();
        let labels: Vec<Bipartition> = chosen.iter().map(|&j| labels[j].clone()).collect();
        let columns: Vec<Vec<i64>> = chosen.iter().map(|&j| columns[j].clone()).collect();
        (labels, columns)
    };

    for t in 0..INSTANCES {
        let (labels, columns) = pick(&mut rng, 8);
        let coeffs: Vec<u64> = (0..labels.len()).map(|_| rng.gen_range(0..=3)).collect();
        let target = combine(&columns, &coeffs);
        let problem = lib(FeasibilityProblem::new(columns.clone(), labels.clone(), target.clone()))?;
        let outcome = lib(feasible(&problem, Budget::default()))?;
        ensure(outcome.status == Status::Feasible, || format!("instance {t}: {} on a constructed target", outcome.status))?;
        let witness = outcome.witness.ok_or("feasible outcome without witness")?;
        let x: Vec<u64> = labels.iter().map(|b| witness.get(b).copied().unwrap_or(0)).collect();
        ensure(combine(&columns, &x) == target, || format!("instance {t}: witness does not re-substitute"))?;
    }

    let mut confirmed = 0;
    let mut inside_cone = 0;
    while confirmed < INSTANCES {
        let (labels, columns) = pick(&mut rng, 6);
        let coeffs: Vec<u64> = (0..labels.len()).map(|_| rng.gen_range(0..=2)).collect();
        let mut target = combine(&columns, &coeffs);
        let row = rng.gen_range(0..target.len());
        target[row] += if rng.gen_bool(0.5) { 1 } else { -1 };
        // Columns are nonnegative and nonzero, so any solution is bounded by
        // the smallest target entry in the column's support.
        let bounds: Vec<u64> = columns
            .iter()
            .map(|c| c.iter().zip(&target).filter(|(a, _)| **a > 0).map(|(_, &b)| b.max(0) as u64).min().unwrap_or(0))
            .collect();
        if target.iter().all(|&b| b >= 0) && oracle::exhaustive_solution(&columns, &target, &bounds).is_some() {
            inside_cone += 1;
            continue;
        }
        let problem = lib(FeasibilityProblem::new(columns, labels, target))?;
        let outcome = lib(feasible(&problem, Budget::default()))?;
        ensure(outcome.status == Status::Infeasible, || format!("perturbed instance {confirmed}: {}", outcome.status))?;
        let bounded = lib(problem.with_upper_bounds(bounds.iter().map(|&b| Some(b as i64)).collect()))?;
        let dfs = lib(feasible_with(&bounded, Budget::default(), SolverKind::DepthFirst))?;
        ensure(dfs.status == Status::Infeasible, || format!("perturbed instance {confirmed}: depth-first says {}", dfs.status))?;
        confirmed += 1;
    }
    Ok(format!(
        "{INSTANCES} constructed instances feasible with verified witnesses; {confirmed} perturbed instances infeasible by exhaustive search and both solvers ({inside_cone} perturbations stayed in the cone)"
    ))
}
