//! Exact nonnegative-integer feasibility: does `A x = b` have a solution with
//! `x` a vector of nonnegative integers (within optional upper bounds)?
//!
//! The primary method is branch-and-bound over exact rational LP relaxations.
//! A depth-first enumeration with residual pruning is kept as an independent
//! second method. Both respect a node and wall-clock budget and report
//! [`Status::ResourceLimit`] instead of guessing when it runs out.

mod bnb;
mod dfs;
pub mod simplex;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use crate::combinatorics::{bipartitions_of, Bipartition};
use crate::branching::{restrict, CandidateExtension};
use crate::error::{Error, Result};
use crate::hypchar::{classes_of, HypCharacterTable, SignedClass};
use crate::parkingspace::{parking_character, parking_decomposition, MultiplicityVector, ParkingSpec};
use crate::scalar::ExactField;
use crate::Rational;

pub use bnb::BranchAndBound;
pub use dfs::DepthFirst;

/// Meaning of one equation of a [`FeasibilityProblem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowLabel {
    Irrep(Bipartition),
    Class(SignedClass),
    Index(usize),
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Irrep(b) => write!(f, "V{b}"),
            RowLabel::Class(c) => write!(f, "C{c}"),
            RowLabel::Index(i) => write!(f, "row {i}"),
        }
    }
}

/// `Σ_j x_j columns[j] = target` with `x_j` nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityProblem {
    columns: Vec<Vec<i64>>,
    labels: Vec<Bipartition>,
    target: Vec<i64>,
    row_labels: Vec<RowLabel>,
    upper_bounds: Vec<Option<i64>>,
    weights: Vec<u128>,
}

impl FeasibilityProblem {
    pub fn new(columns: Vec<Vec<i64>>, labels: Vec<Bipartition>, target: Vec<i64>) -> Result<Self> {
        if columns.len() != labels.len() {
            return Err(Error::Dimension(format!("{} columns but {} labels", columns.len(), labels.len())));
        }
        if let Some(bad) = columns.iter().position(|c| c.len() != target.len()) {
            return Err(Error::Dimension(format!(
                "column {bad} has length {}, target has length {}",
                columns[bad].len(),
                target.len()
            )));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l, i) {
                return Err(Error::InvalidArgument(format!("columns {j} and {i} share label {l}")));
            }
        }
        let vars = columns.len();
        Ok(Self {
            row_labels: (0..target.len()).map(RowLabel::Index).collect(),
            weights: labels.iter().map(Bipartition::irrep_dimension).collect(),
            upper_bounds: vec![None; vars],
            columns,
            labels,
            target,
        })
    }

    pub fn with_row_labels(mut self, row_labels: Vec<RowLabel>) -> Result<Self> {
        if row_labels.len() != self.target.len() {
            return Err(Error::Dimension("one row label per equation".into()));
        }
        self.row_labels = row_labels;
        Ok(self)
    }

    pub fn with_upper_bounds(mut self, upper_bounds: Vec<Option<i64>>) -> Result<Self> {
        if upper_bounds.len() != self.columns.len() {
            return Err(Error::Dimension("one upper bound per variable".into()));
        }
        self.upper_bounds = upper_bounds;
        Ok(self)
    }

    /// Per-variable weights; larger weights win branching ties and are
    /// enumerated first by depth-first search. Defaults to the dimension of
    /// the irreducible labelling each column.
    pub fn with_weights(mut self, weights: Vec<u128>) -> Result<Self> {
        if weights.len() != self.columns.len() {
            return Err(Error::Dimension("one weight per variable".into()));
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn labels(&self) -> &[Bipartition] {
        &self.labels
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn row_labels(&self) -> &[RowLabel] {
        &self.row_labels
    }

    pub fn upper_bounds(&self) -> &[Option<i64>] {
        &self.upper_bounds
    }

    pub fn weights(&self) -> &[u128] {
        &self.weights
    }

    pub fn variables(&self) -> usize {
        self.columns.len()
    }

    /// Row-major copy of the constraint matrix.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.target.len()).map(|i| self.columns.iter().map(|c| c[i]).collect()).collect()
    }

    /// True when `x` is a nonnegative integer solution within bounds.
    pub fn satisfied_by(&self, x: &[u64]) -> bool {
        if x.len() != self.columns.len() {
            return false;
        }
        if x.iter().zip(&self.upper_bounds).any(|(&v, u)| u.is_some_and(|u| u < 0 || v > u as u64)) {
            return false;
        }
        (0..self.target.len()).all(|i| {
            let lhs: i128 = self.columns.iter().zip(x).map(|(c, &v)| i128::from(c[i]) * i128::from(v)).sum();
            lhs == i128::from(self.target[i])
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Feasible,
    Infeasible,
    ResourceLimit,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Feasible => "feasible",
            Status::Infeasible => "infeasible",
            Status::ResourceLimit => "resource-limit",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityOutcome {
    pub status: Status,
    /// Nonzero entries of a verified solution; present iff feasible.
    pub witness: Option<BTreeMap<Bipartition, u64>>,
    pub certificate_note: String,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Limits on a single solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_nodes: 200_000, time_limit: Some(Duration::from_secs(120)) }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { max_nodes: u64::MAX, time_limit: None }
    }
}

pub(crate) struct Clock {
    start: Instant,
    budget: Budget,
    pub nodes: u64,
}

impl Clock {
    pub fn new(budget: Budget) -> Self {
        Self { start: Instant::now(), budget, nodes: 0 }
    }

    /// Counts one node; false once the budget is spent.
    pub fn tick(&mut self) -> bool {
        if self.nodes >= self.budget.max_nodes {
            return false;
        }
        self.nodes += 1;
        // Checking the clock every node is cheap next to an exact LP solve.
        self.budget.time_limit.map_or(true, |limit| self.start.elapsed() < limit)
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SolverKind {
    #[default]
    BranchAndBound,
    DepthFirst,
}

/// Common interface of the two search methods.
pub(crate) trait FeasibilitySolver {
    /// Searches for a solution, charging every node to `clock`.
    fn search(&self, problem: &FeasibilityProblem, clock: &mut Clock) -> Result<SearchResult>;
}

pub(crate) enum SearchResult {
    Found(Vec<u64>),
    Exhausted(String),
    OutOfBudget,
}

fn run(solver: &dyn FeasibilitySolver, problem: &FeasibilityProblem, budget: Budget) -> Result<FeasibilityOutcome> {
    let mut clock = Clock::new(budget);
    let result = solver.search(problem, &mut clock)?;
    let (status, witness, note) = match result {
        SearchResult::Found(x) => {
            if !problem.satisfied_by(&x) {
                return Err(Error::Inconsistent("solver produced a witness that does not re-substitute".into()));
            }
            let witness = problem.labels.iter().cloned().zip(x).filter(|(_, v)| *v > 0).collect();
            (Status::Feasible, Some(witness), "witness re-substituted exactly".to_string())
        }
        SearchResult::Exhausted(note) => (Status::Infeasible, None, note),
        SearchResult::OutOfBudget => (
            Status::ResourceLimit,
            None,
            format!("budget exhausted after {} nodes in {:?}", clock.nodes, clock.elapsed()),
        ),
    };
    Ok(FeasibilityOutcome { status, witness, certificate_note: note, nodes: clock.nodes, elapsed: clock.elapsed() })
}

/// Decides feasibility with branch-and-bound over exact rationals.
pub fn feasible(problem: &FeasibilityProblem, budget: Budget) -> Result<FeasibilityOutcome> {
    feasible_with(problem, budget, SolverKind::BranchAndBound)
}

pub fn feasible_with(problem: &FeasibilityProblem, budget: Budget, kind: SolverKind) -> Result<FeasibilityOutcome> {
    match kind {
        SolverKind::BranchAndBound => run(&BranchAndBound::<Rational>::new(), problem, budget),
        SolverKind::DepthFirst => run(&DepthFirst, problem, budget),
    }
}

/// Branch-and-bound with a caller-chosen exact field.
pub fn feasible_in<F: ExactField + 'static>(problem: &FeasibilityProblem, budget: Budget) -> Result<FeasibilityOutcome> {
    run(&BranchAndBound::<F>::new(), problem, budget)
}

/// How the extension question is written as a linear system.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Space {
    /// One equation per irreducible of `B_n`; columns are branching rules.
    #[default]
    Multiplicity,
    /// One equation per class of `B_n`; columns are restricted characters.
    Character,
}

impl Space {
    pub fn as_str(&self) -> &'static str {
        match self {
            Space::Multiplicity => "multiplicity",
            Space::Character => "character",
        }
    }
}

/// Builds the feasibility problem whose solutions are the `B_{n+1}`
/// representations restricting to `C[(Z/mZ)^n]`. `table` must be the
/// character table of `B_{n+1}` when given; it is only used in character space.
pub fn extension_problem(
    n: usize,
    m: u64,
    space: Space,
    table: Option<&HypCharacterTable>,
) -> Result<FeasibilityProblem> {
    let spec = ParkingSpec::new(n, m)?;
    let labels = bipartitions_of(n + 1);
    let (columns, target, row_labels) = match space {
        Space::Multiplicity => {
            let rows = bipartitions_of(n);
            let columns = labels
                .iter()
                .map(|b| {
                    let r = restrict(&MultiplicityVector::indicator(b))?;
                    Ok(rows.iter().map(|row| r.get(row) as i64).collect())
                })
                .collect::<Result<Vec<Vec<i64>>>>()?;
            let decomposition = parking_decomposition(&spec);
            let target = rows.iter().map(|row| to_i64(decomposition.get(row))).collect::<Result<_>>()?;
            (columns, target, rows.into_iter().map(RowLabel::Irrep).collect())
        }
        Space::Character => {
            let owned;
            let table = match table {
                Some(t) if t.n() == n + 1 => t,
                Some(t) => return Err(Error::SizeMismatch { expected: n + 1, found: t.n() }),
                None => {
                    owned = HypCharacterTable::new(n + 1);
                    &owned
                }
            };
            let classes = classes_of(n);
            let embedded: Vec<SignedClass> = classes.iter().map(SignedClass::embed_with_fixed_point).collect();
            let columns = labels
                .iter()
                .map(|b| embedded.iter().map(|c| table.value(b, c).expect("table covers B_{n+1}")).collect())
                .collect();
            let target = classes.iter().map(|c| to_i64(parking_character(&spec, c)?)).collect::<Result<_>>()?;
            (columns, target, classes.into_iter().map(RowLabel::Class).collect())
        }
    };
    // Each copy of V_b contributes dim V_b <= m^n dimensions.
    let total = spec.dimension();
    let bounds = labels
        .iter()
        .map(|b| i64::try_from(total / b.irrep_dimension()).ok())
        .collect();
    FeasibilityProblem::new(columns, labels, target)?.with_row_labels(row_labels)?.with_upper_bounds(bounds)
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::InvalidArgument(format!("{v} exceeds the supported range")))
}

/// Decides whether `C[(Z/mZ)^n]` extends to `B_{n+1}`.
pub fn extension_exists(n: usize, m: u64, space: Space) -> Result<FeasibilityOutcome> {
    extension_exists_with(n, m, space, Budget::default(), None)
}

pub fn extension_exists_with(
    n: usize,
    m: u64,
    space: Space,
    budget: Budget,
    table: Option<&HypCharacterTable>,
) -> Result<FeasibilityOutcome> {
    feasible(&extension_problem(n, m, space, table)?, budget)
}

/// The `B_{n+1}`-representation described by a feasible outcome.
pub fn witness_extension(n: usize, outcome: &FeasibilityOutcome) -> Option<CandidateExtension> {
    let witness = outcome.witness.as_ref()?;
    let entries = MultiplicityVector::from_entries(n + 1, witness.iter().map(|(b, &m)| (b.clone(), m))).ok()?;
    Some(CandidateExtension::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::verify_extension;

    fn bp(a: &[usize], b: &[usize]) -> Bipartition {
        Bipartition::from_parts(a, b)
    }

    fn single(columns: Vec<Vec<i64>>, target: Vec<i64>) -> FeasibilityProblem {
        let labels = crate::combinatorics::bipartitions_of(4).into_iter().take(columns.len()).collect();
        FeasibilityProblem::new(columns, labels, target).unwrap()
    }

    #[test]
    fn parity_obstruction() {
        let p = single(vec![vec![2]], vec![1]);
        for kind in [SolverKind::BranchAndBound, SolverKind::DepthFirst] {
            let p = p.clone().with_upper_bounds(vec![Some(1)]).unwrap();
            let out = feasible_with(&p, Budget::default(), kind).unwrap();
            assert_eq!(out.status, Status::Infeasible, "{kind:?}");
            assert!(out.witness.is_none());
        }
        assert_eq!(feasible(&p, Budget::default()).unwrap().status, Status::Infeasible);
    }

    #[test]
    fn zero_target() {
        let p = single(vec![vec![1, 2], vec![3, -1]], vec![0, 0]);
        let out = feasible(&p, Budget::default()).unwrap();
        assert_eq!(out.status, Status::Feasible);
        assert_eq!(out.witness, Some(BTreeMap::new()));
    }

    #[test]
    fn dimension_errors() {
        let labels = vec![bp(&[1], &[])];
        assert!(FeasibilityProblem::new(vec![vec![1, 2]], labels.clone(), vec![1]).is_err());
        assert!(FeasibilityProblem::new(vec![vec![1], vec![1]], labels, vec![1]).is_err());
        let dup = vec![bp(&[1], &[]), bp(&[1], &[])];
        assert!(FeasibilityProblem::new(vec![vec![1], vec![1]], dup, vec![1]).is_err());
    }

    #[test]
    fn budget_exhaustion_is_not_infeasibility() {
        let p = single(vec![vec![2, 0], vec![0, 2]], vec![3, 1]);
        let out = feasible(&p, Budget { max_nodes: 0, time_limit: None }).unwrap();
        assert_eq!(out.status, Status::ResourceLimit);
        let out = feasible(&p, Budget::default()).unwrap();
        assert_eq!(out.status, Status::Infeasible);
    }

    #[test]
    fn rank_one_instances() {
        for k in 1..=6u64 {
            let out = extension_exists(1, 2 * k + 1, Space::Multiplicity).unwrap();
            assert_eq!(out.status, Status::Feasible);
            let ext = witness_extension(1, &out).unwrap();
            assert!(verify_extension(&ext, &ParkingSpec::new(1, 2 * k + 1).unwrap()).is_valid());
        }
        // The tilde witness itself satisfies the system.
        let p = extension_problem(1, 5, Space::Multiplicity, None).unwrap();
        let x: Vec<u64> = p
            .labels()
            .iter()
            .map(|b| if *b == bp(&[2], &[]) { 1 } else if *b == bp(&[1], &[1]) { 2 } else { 0 })
            .collect();
        assert!(p.satisfied_by(&x));
    }

    #[test]
    fn both_spaces_agree_on_small_cases() {
        for n in 1..=2 {
            for m in 1..=6 {
                let a = extension_exists(n, m, Space::Multiplicity).unwrap();
                let b = extension_exists(n, m, Space::Character).unwrap();
                assert_eq!(a.status, b.status, "n={n} m={m}");
                for out in [a, b] {
                    let ext = witness_extension(n, &out).unwrap();
                    assert!(verify_extension(&ext, &ParkingSpec::new(n, m).unwrap()).is_valid());
                }
            }
        }
    }

    #[test]
    fn ep24_is_feasible() {
        let out = extension_exists(2, 8, Space::Multiplicity).unwrap();
        assert_eq!(out.status, Status::Feasible);
    }

    #[test]
    fn character_problem_rejects_wrong_table() {
        let t = HypCharacterTable::new(2);
        assert!(extension_problem(2, 3, Space::Character, Some(&t)).is_err());
    }
}
