use super::{Clock, FeasibilityProblem, FeasibilitySolver, SearchResult};
use crate::error::{Error, Result};

/// Enumerates assignments variable by variable, heaviest column first,
/// pruning on rows whose remaining columns all share a sign.
///
/// Every variable needs a finite upper bound.
pub struct DepthFirst;

struct Search<'a> {
    problem: &'a FeasibilityProblem,
    order: Vec<usize>,
    upper: Vec<u64>,
    /// `reach_max[d][i]` / `reach_min[d][i]`: extreme contributions to row `i`
    /// from variables `order[d..]`.
    reach_max: Vec<Vec<i128>>,
    reach_min: Vec<Vec<i128>>,
    assignment: Vec<u64>,
}

impl FeasibilitySolver for DepthFirst {
    fn search(&self, problem: &FeasibilityProblem, clock: &mut Clock) -> Result<SearchResult> {
        let upper = problem
            .upper_bounds()
            .iter()
            .map(|u| match u {
                Some(u) => Ok((*u).max(0) as u64),
                None => Err(Error::InvalidArgument("depth-first search needs an upper bound on every variable".into())),
            })
            .collect::<Result<Vec<u64>>>()?;
        let vars = problem.variables();
        let rows = problem.target().len();
        let mut order: Vec<usize> = (0..vars).collect();
        order.sort_by(|&a, &b| problem.weights()[b].cmp(&problem.weights()[a]).then(a.cmp(&b)));

        let mut reach_max = vec![vec![0i128; rows]; vars + 1];
        let mut reach_min = vec![vec![0i128; rows]; vars + 1];
        for d in (0..vars).rev() {
            let j = order[d];
            for i in 0..rows {
                let extreme = i128::from(problem.columns()[j][i]) * i128::from(upper[j]);
                reach_max[d][i] = reach_max[d + 1][i] + extreme.max(0);
                reach_min[d][i] = reach_min[d + 1][i] + extreme.min(0);
            }
        }
        let mut search = Search { problem, order, upper, reach_max, reach_min, assignment: vec![0; vars] };
        let residual: Vec<i128> = problem.target().iter().map(|&t| i128::from(t)).collect();
        match search.descend(0, residual, clock) {
            Some(true) => Ok(SearchResult::Found(search.assignment)),
            Some(false) => Ok(SearchResult::Exhausted(format!(
                "depth-first enumeration of the bounded box exhausted after {} nodes",
                clock.nodes
            ))),
            None => Ok(SearchResult::OutOfBudget),
        }
    }
}

impl Search<'_> {
    /// `Some(found)` on completion, `None` when the budget ran out.
    fn descend(&mut self, depth: usize, residual: Vec<i128>, clock: &mut Clock) -> Option<bool> {
        if !clock.tick() {
            return None;
        }
        let reachable = residual
            .iter()
            .enumerate()
            .all(|(i, &r)| r <= self.reach_max[depth][i] && r >= self.reach_min[depth][i]);
        if !reachable {
            return Some(false);
        }
        if depth == self.order.len() {
            return Some(residual.iter().all(|&r| r == 0));
        }
        let j = self.order[depth];
        let column = &self.problem.columns()[j];
        for value in 0..=self.upper[j] {
            let next: Vec<i128> = residual
                .iter()
                .zip(column)
                .map(|(&r, &a)| r - i128::from(a) * i128::from(value))
                .collect();
            self.assignment[j] = value;
            match self.descend(depth + 1, next, clock) {
                Some(false) => {}
                other => return other,
            }
        }
        self.assignment[j] = 0;
        Some(false)
    }
}
