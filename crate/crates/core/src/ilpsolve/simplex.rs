//! Phase-one primal simplex with variable bounds, over an exact field.
//!
//! Only feasibility of `A x = b, lower <= x <= upper` is decided, so there is
//! no objective beyond the sum of artificials. Artificial variables never
//! re-enter once they leave the basis, which lets the tableau carry the
//! structural columns only.

use crate::error::{Error, Result};
use crate::scalar::ExactField;

/// Outcome of one LP relaxation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult<F> {
    Feasible(Vec<F>),
    Infeasible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    Structural(usize),
    Artificial,
}

/// Consecutive degenerate pivots tolerated before switching from Dantzig's
/// rule to Bland's rule.
const DEGENERATE_STREAK: usize = 30;

pub struct BoundedSimplex<'a> {
    pub matrix: &'a [Vec<i64>],
    pub rhs: &'a [i64],
    pub lower: &'a [i64],
    pub upper: &'a [Option<i64>],
}

impl BoundedSimplex<'_> {
    pub fn solve<F: ExactField>(&self) -> Result<LpResult<F>> {
        let rows = self.matrix.len();
        let cols = self.lower.len();
        if self.rhs.len() != rows || self.upper.len() != cols || self.matrix.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("simplex input shapes disagree".into()));
        }
        if (0..cols).any(|j| self.upper[j].is_some_and(|u| u < self.lower[j])) {
            return Ok(LpResult::Infeasible);
        }

        // Shift x = lower + y with 0 <= y <= upper - lower, then make rhs >= 0.
        let width: Vec<Option<F>> =
            (0..cols).map(|j| self.upper[j].map(|u| F::from_int(u - self.lower[j]))).collect();
        let mut tableau: Vec<Vec<F>> = Vec::with_capacity(rows);
        let mut values: Vec<F> = Vec::with_capacity(rows);
        for (row, &b) in self.matrix.iter().zip(self.rhs) {
            let shifted = i128::from(b) - row.iter().zip(self.lower).map(|(&a, &l)| i128::from(a) * i128::from(l)).sum::<i128>();
            let shifted = i64::try_from(shifted).map_err(|_| Error::Inconsistent("rhs overflow".into()))?;
            let flip = shifted < 0;
            tableau.push(row.iter().map(|&a| F::from_int(if flip { -a } else { a })).collect());
            values.push(F::from_int(shifted.abs()));
        }

        let mut basis = vec![Var::Artificial; rows];
        let mut at_upper = vec![false; cols];
        let mut is_basic = vec![false; cols];
        // Phase-one reduced costs of the structural columns.
        let mut reduced: Vec<F> = (0..cols)
            .map(|j| tableau.iter().fold(F::zero(), |acc, row| acc - row[j].clone()))
            .collect();

        let mut degenerate = 0usize;
        let max_iterations = 50 * (rows + cols + 10) * (rows + 1);
        for _ in 0..max_iterations {
            let bland = degenerate >= DEGENERATE_STREAK;
            let Some(enter) = choose_entering(&reduced, &at_upper, &is_basic, &width, bland) else {
                return Ok(finish(&basis, &values, &at_upper, &width, self.lower));
            };
            let dir = if at_upper[enter] { -F::one() } else { F::one() };

            // Ratio test. `step` bounds the change of the entering variable.
            let mut step: Option<F> = width[enter].clone();
            let mut leave: Option<usize> = None;
            for i in 0..rows {
                let rate = -(tableau[i][enter].clone() * dir.clone());
                if rate.is_zero() {
                    continue;
                }
                let limit = if rate.is_negative() {
                    values[i].clone() / (-rate)
                } else {
                    match basis[i] {
                        Var::Structural(b) => match &width[b] {
                            Some(w) => (w.clone() - values[i].clone()) / rate,
                            None => continue,
                        },
                        Var::Artificial => continue,
                    }
                };
                let better = match (&step, leave) {
                    (None, _) => true,
                    (Some(s), _) if limit < *s => true,
                    (Some(s), Some(cur)) if limit == *s => bland && var_rank(basis[i], cols) < var_rank(basis[cur], cols),
                    _ => false,
                };
                if better {
                    step = Some(limit);
                    leave = Some(i);
                }
            }
            let Some(step) = step else {
                return Err(Error::Inconsistent("phase-one objective unbounded".into()));
            };
            degenerate = if step.is_zero() { degenerate + 1 } else { 0 };

            for i in 0..rows {
                let rate = -(tableau[i][enter].clone() * dir.clone());
                if !rate.is_zero() {
                    values[i] = values[i].clone() + rate * step.clone();
                }
            }
            let entering_value = if at_upper[enter] {
                width[enter].clone().expect("at upper implies finite") - step.clone()
            } else {
                step.clone()
            };

            match leave {
                None => {
                    // Bound flip; basis unchanged.
                    at_upper[enter] = !at_upper[enter];
                }
                Some(r) => {
                    if let Var::Structural(old) = basis[r] {
                        is_basic[old] = false;
                        // A basic variable that rose to its upper bound leaves there.
                        at_upper[old] = width[old].as_ref().is_some_and(|w| values[r] == *w) && !values[r].is_zero();
                    }
                    pivot(&mut tableau, &mut reduced, r, enter);
                    basis[r] = Var::Structural(enter);
                    is_basic[enter] = true;
                    at_upper[enter] = false;
                    values[r] = entering_value;
                }
            }
        }
        Err(Error::Inconsistent("simplex iteration limit reached".into()))
    }
}

fn var_rank(v: Var, cols: usize) -> usize {
    match v {
        Var::Structural(j) => j,
        Var::Artificial => cols,
    }
}

fn choose_entering<F: ExactField>(
    reduced: &[F],
    at_upper: &[bool],
    is_basic: &[bool],
    width: &[Option<F>],
    bland: bool,
) -> Option<usize> {
    let mut best: Option<(usize, F)> = None;
    for j in 0..reduced.len() {
        if is_basic[j] || width[j].as_ref().is_some_and(|w| w.is_zero()) {
            continue;
        }
        let gain = if at_upper[j] { reduced[j].clone() } else { -reduced[j].clone() };
        if !gain.is_positive() {
            continue;
        }
        if bland {
            return Some(j);
        }
        if best.as_ref().map_or(true, |(_, g)| gain > *g) {
            best = Some((j, gain));
        }
    }
    best.map(|(j, _)| j)
}

fn pivot<F: ExactField>(tableau: &mut [Vec<F>], reduced: &mut [F], r: usize, enter: usize) {
    let piv = tableau[r][enter].clone();
    if !piv.is_one() {
        for x in tableau[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() / piv.clone();
            }
        }
    }
    let pivot_row = tableau[r].clone();
    for (i, row) in tableau.iter_mut().enumerate() {
        if i == r {
            continue;
        }
        let factor = row[enter].clone();
        if factor.is_zero() {
            continue;
        }
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
    }
    let factor = reduced[enter].clone();
    if !factor.is_zero() {
        for (x, p) in reduced.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x = x.clone() - factor.clone() * p.clone();
            }
        }
    }
}

fn finish<F: ExactField>(
    basis: &[Var],
    values: &[F],
    at_upper: &[bool],
    width: &[Option<F>],
    lower: &[i64],
) -> LpResult<F> {
    let mut y: Vec<F> = (0..lower.len())
        .map(|j| if at_upper[j] { width[j].clone().expect("finite") } else { F::zero() })
        .collect();
    for (var, v) in basis.iter().zip(values) {
        match var {
            Var::Structural(j) => y[*j] = v.clone(),
            Var::Artificial if v.is_positive() => return LpResult::Infeasible,
            Var::Artificial => {}
        }
    }
    LpResult::Feasible(y.into_iter().zip(lower).map(|(v, &l)| v + F::from_int(l)).collect())
}
