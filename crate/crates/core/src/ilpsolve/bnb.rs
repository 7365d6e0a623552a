use std::marker::PhantomData;

use super::simplex::{BoundedSimplex, LpResult};
use super::{Clock, FeasibilityProblem, FeasibilitySolver, SearchResult};
use crate::error::Result;
use crate::scalar::ExactField;

/// Depth-first branch-and-bound on the exact LP relaxation.
///
/// Branches on the most fractional variable; ties go to the larger weight,
/// then the lower index. The `x <= floor` child is explored first.
pub struct BranchAndBound<F> {
    _field: PhantomData<F>,
}

impl<F> BranchAndBound<F> {
    pub fn new() -> Self {
        Self { _field: PhantomData }
    }
}

impl<F> Default for BranchAndBound<F> {
    fn default() -> Self {
        Self::new()
    }
}

struct Node {
    lower: Vec<i64>,
    upper: Vec<Option<i64>>,
}

impl<F: ExactField> FeasibilitySolver for BranchAndBound<F> {
    fn search(&self, problem: &FeasibilityProblem, clock: &mut Clock) -> Result<SearchResult> {
        let matrix = problem.matrix();
        let vars = problem.variables();
        let mut stack = vec![Node { lower: vec![0; vars], upper: problem.upper_bounds().to_vec() }];
        let mut lp_infeasible = 0u64;
        while let Some(node) = stack.pop() {
            if !clock.tick() {
                return Ok(SearchResult::OutOfBudget);
            }
            let lp = BoundedSimplex { matrix: &matrix, rhs: problem.target(), lower: &node.lower, upper: &node.upper };
            let x: Vec<F> = match lp.solve::<F>()? {
                LpResult::Infeasible => {
                    lp_infeasible += 1;
                    continue;
                }
                LpResult::Feasible(x) => x,
            };

            let mut branch: Option<(usize, F)> = None;
            for (j, v) in x.iter().enumerate() {
                if v.is_integral() {
                    continue;
                }
                let frac = v.fractionality();
                let better = match &branch {
                    None => true,
                    Some((b, f)) => frac > *f || (frac == *f && problem.weights()[j] > problem.weights()[*b]),
                };
                if better {
                    branch = Some((j, frac));
                }
            }

            let Some((j, _)) = branch else {
                let integral: Vec<u64> = x
                    .iter()
                    .map(|v| v.to_exact_i64().and_then(|i| u64::try_from(i).ok()))
                    .collect::<Option<_>>()
                    .ok_or_else(|| crate::error::Error::Inconsistent("LP vertex outside u64 range".into()))?;
                return Ok(SearchResult::Found(integral));
            };

            let floor = x[j].floor_value().to_exact_i64().expect("floor is integral");
            let mut up = Node { lower: node.lower.clone(), upper: node.upper.clone() };
            up.lower[j] = floor + 1;
            let mut down = node;
            down.upper[j] = Some(floor);
            stack.push(up);
            stack.push(down);
        }
        Ok(SearchResult::Exhausted(format!(
            "branch-and-bound tree exhausted after {} nodes; {lp_infeasible} leaf relaxations infeasible over exact rationals",
            clock.nodes
        )))
    }
}
