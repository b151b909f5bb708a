//! Exact maximin over the probability simplex: max_p min_i (M p)_i.
//!
//! The column player (a lottery over cuts) maximizes the worst row (group).
//! After shifting M by its smallest entry so that z ≥ 0, the LP
//!
//! ```text
//! max z   s.t.  z − Σ_k M[i][k] p_k + s_i = 0   (every row i)
//!               Σ_k p_k = 1,   z, p, s ≥ 0
//! ```
//!
//! is solved by a dense primal simplex on γ + 1 rows with exact rational
//! pivots and Bland's rule. The reduced costs of the slacks at optimality
//! are the dual row weights, which certify the value independently.

use num_traits::{Signed, Zero};

use crate::distribution::CutDistribution;
use crate::error::{Error, Result};
use crate::exact::{Enumerator, Mode, PayoffMatrix};
use crate::graph::{Graph, GroupPartition};
use crate::rational::Rational;
use crate::utility::UtilityModel;

/// Optimal mixed strategies of the maximin matrix game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSolution {
    pub value: Rational,
    /// Probability of every column; sums to 1.
    pub column_probabilities: Vec<Rational>,
    /// Optimal mixture over rows; sums to 1.
    pub row_weights: Vec<Rational>,
    /// min_i (M p)_i recomputed from the original matrix.
    pub primal_value: Rational,
    /// max_k (qᵀ M)_k recomputed from the original matrix.
    pub dual_value: Rational,
    pub pivots: usize,
}

impl GameSolution {
    /// Column indices with positive probability.
    pub fn support(&self) -> Vec<usize> {
        self.column_probabilities.iter().enumerate().filter(|(_, p)| p.is_positive()).map(|(k, _)| k).collect()
    }
}

struct Tableau {
    /// (γ + 1) constraint rows, each with `width` coefficients then the rhs.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs c_B B⁻¹ a_j − c_j, then the objective value.
    objective: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let pivot = self.rows[row][col].clone();
        if pivot != Rational::from_integer(1.into()) {
            for x in self.rows[row].iter_mut() {
                if !x.is_zero() {
                    *x /= &pivot;
                }
            }
        }
        let pivot_row = self.rows[row].clone();
        let nonzero: Vec<usize> = (0..=self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (r, target) in self.rows.iter_mut().enumerate() {
            if r == row || target[col].is_zero() {
                continue;
            }
            let factor = target[col].clone();
            for &j in &nonzero {
                target[j] -= &factor * &pivot_row[j];
            }
        }
        if !self.objective[col].is_zero() {
            let factor = self.objective[col].clone();
            for &j in &nonzero {
                self.objective[j] -= &factor * &pivot_row[j];
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: lowest-index improving column, then the lowest-index
    /// basic variable among minimum-ratio rows.
    fn run(&mut self) -> Result<usize> {
        let mut pivots = 0;
        loop {
            let Some(col) = (0..self.width).find(|&j| self.objective[j].is_negative()) else {
                return Ok(pivots);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[col].is_positive() {
                    continue;
                }
                let ratio = &row[self.width] / &row[col];
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*best_r]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((row, _)) = leave else {
                // z is bounded by the largest entry, so this cannot happen.
                return Err(Error::Certificate { primal: "unbounded".into(), dual: "infeasible".into() });
            };
            self.pivot(row, col);
            pivots += 1;
        }
    }
}

/// Indices of the columns not weakly dominated by another column. Among
/// identical columns the lowest index survives.
fn undominated_columns(matrix: &[Vec<Rational>]) -> Vec<usize> {
    let cols = matrix[0].len();
    let sums: Vec<Rational> = (0..cols).map(|k| matrix.iter().map(|r| &r[k]).sum()).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&a, &b| sums[b].cmp(&sums[a]).then(a.cmp(&b)));
    // a dominating column has at least the same sum, so it is met first
    let mut kept: Vec<usize> = Vec::new();
    for k in order {
        if !kept.iter().any(|&j| matrix.iter().all(|r| r[j] >= r[k])) {
            kept.push(k);
        }
    }
    kept.sort_unstable();
    kept
}

/// Solves max_p min_i (M p)_i for a non-empty rectangular matrix given as
/// rows.
///
/// Dominated and duplicate columns are dropped before the simplex runs; the
/// certificate is still checked against every column.
pub fn solve_matrix_game(matrix: &[Vec<Rational>]) -> Result<GameSolution> {
    let rows = matrix.len();
    let all_cols = matrix.first().map_or(0, Vec::len);
    if rows == 0 || all_cols == 0 || matrix.iter().any(|r| r.len() != all_cols) {
        return Err(Error::InvalidParameter("payoff matrix must be non-empty and rectangular".into()));
    }
    let kept = undominated_columns(matrix);
    let reduced: Vec<Vec<Rational>> = matrix.iter().map(|r| kept.iter().map(|&k| r[k].clone()).collect()).collect();
    let (reduced_probabilities, row_weights, value, pivots) = solve_reduced(&reduced)?;
    let mut probabilities = vec![Rational::zero(); all_cols];
    for (p, &k) in reduced_probabilities.into_iter().zip(&kept) {
        probabilities[k] = p;
    }

    let primal_value = (0..rows)
        .map(|i| {
            matrix[i].iter().zip(&probabilities).filter(|(_, p)| !p.is_zero()).map(|(m, p)| m * p).sum::<Rational>()
        })
        .min()
        .expect("rows > 0");
    let dual_value = (0..all_cols)
        .map(|k| {
            row_weights.iter().zip(matrix).filter(|(q, _)| !q.is_zero()).map(|(q, row)| q * &row[k]).sum::<Rational>()
        })
        .max()
        .expect("cols > 0");

    if primal_value != value || dual_value != value {
        return Err(Error::Certificate { primal: primal_value.to_string(), dual: dual_value.to_string() });
    }
    Ok(GameSolution { value, column_probabilities: probabilities, row_weights, primal_value, dual_value, pivots })
}

/// Column probabilities, normalized row weights, value and pivot count.
type Reduced = (Vec<Rational>, Vec<Rational>, Rational, usize);

fn solve_reduced(matrix: &[Vec<Rational>]) -> Result<Reduced> {
    let rows = matrix.len();
    let cols = matrix[0].len();
    let shift = matrix.iter().flatten().min().cloned().expect("non-empty");

    // variables: 0 = z, 1..=cols = p_k, cols+1..=cols+rows = s_i
    let width = 1 + cols + rows;
    let mut tableau_rows = Vec::with_capacity(rows + 1);
    for (i, row) in matrix.iter().enumerate() {
        let mut line = vec![Rational::zero(); width + 1];
        line[0] = Rational::from_integer(1.into());
        for (k, entry) in row.iter().enumerate() {
            line[1 + k] = -(entry - &shift);
        }
        line[1 + cols + i] = Rational::from_integer(1.into());
        tableau_rows.push(line);
    }
    let mut simplex_row = vec![Rational::zero(); width + 1];
    for k in 0..cols {
        simplex_row[1 + k] = Rational::from_integer(1.into());
    }
    simplex_row[width] = Rational::from_integer(1.into());
    tableau_rows.push(simplex_row);

    let mut objective = vec![Rational::zero(); width + 1];
    objective[0] = Rational::from_integer((-1).into());

    let mut tableau = Tableau {
        rows: tableau_rows,
        objective,
        basis: (0..rows).map(|i| 1 + cols + i).chain([usize::MAX]).collect(),
        width,
    };
    // Start from the pure strategy with the best worst row, which makes the
    // slack rows feasible (their rhs becomes the shifted column entries).
    let start = (0..cols)
        .max_by(|&a, &b| {
            let worst = |k: usize| matrix.iter().map(|r| &r[k]).min().expect("rows > 0");
            worst(a).cmp(worst(b)).then(b.cmp(&a))
        })
        .expect("cols > 0");
    tableau.pivot(rows, 1 + start);
    let pivots = tableau.run()?;

    let mut probabilities = vec![Rational::zero(); cols];
    for (r, &var) in tableau.basis.iter().enumerate() {
        if (1..=cols).contains(&var) {
            probabilities[var - 1] = tableau.rows[r][width].clone();
        }
    }
    let value = &tableau.objective[width] + &shift;

    let raw: Vec<Rational> = (0..rows).map(|i| tableau.objective[1 + cols + i].clone()).collect();
    let total: Rational = raw.iter().sum();
    let row_weights: Vec<Rational> = raw.iter().map(|y| y / &total).collect();

    Ok((probabilities, row_weights, value, pivots))
}

/// DF objective with its optimal lottery over cuts and certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximinSolution {
    pub value: Rational,
    pub distribution: CutDistribution,
    pub dual_weights: Vec<Rational>,
    /// Payoff-matrix columns with positive probability.
    pub support: Vec<usize>,
    pub primal_value: Rational,
    pub dual_value: Rational,
}

pub fn solve_maximin(matrix: &PayoffMatrix) -> Result<MaximinSolution> {
    let game = solve_matrix_game(&matrix.rows)?;
    let support = game.support();
    let distribution = CutDistribution::new(
        support.iter().map(|&k| (matrix.col_cuts[k].clone(), game.column_probabilities[k].clone())),
    )?;
    Ok(MaximinSolution {
        value: game.value,
        distribution,
        dual_weights: game.row_weights,
        support,
        primal_value: game.primal_value,
        dual_value: game.dual_value,
    })
}

impl Enumerator {
    /// DF-MV or DF-MP over all canonical cuts.
    pub fn dynamic_fair(
        &self,
        g: &Graph,
        model: UtilityModel,
        partition: &GroupPartition,
        mode: Mode,
    ) -> Result<MaximinSolution> {
        solve_maximin(&self.payoff_matrix(g, model, partition, mode)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[(i64, i64)]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&(a, b)| rat(a, b)).collect()).collect()
    }

    #[test]
    fn identity_is_uniform() {
        for n in 1..=5 {
            let id: Vec<Vec<Rational>> = (0..n).map(|i| (0..n).map(|j| int(i64::from(i == j))).collect()).collect();
            let s = solve_matrix_game(&id).unwrap();
            assert_eq!(s.value, rat(1, n as i64));
            assert!(s.column_probabilities.iter().all(|p| *p == rat(1, n as i64)));
        }
    }

    #[test]
    fn dominated_column_is_avoided() {
        let s = solve_matrix_game(&m(&[&[(1, 1), (0, 1), (2, 1)], &[(1, 1), (0, 1), (2, 1)]])).unwrap();
        assert_eq!(s.value, int(2));
        assert_eq!(s.support(), vec![2]);
    }

    #[test]
    fn negative_entries_are_shifted() {
        // matching pennies with payoffs ±1
        let s = solve_matrix_game(&m(&[&[(1, 1), (-1, 1)], &[(-1, 1), (1, 1)]])).unwrap();
        assert_eq!(s.value, int(0));
        assert_eq!(s.column_probabilities, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(s.row_weights, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn diamond_matrix_value() {
        // rows: group proportions for the seven non-empty canonical cuts
        let rows = m(&[
            &[(0, 1), (1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 2), (1, 1)],
            &[(0, 1), (1, 1), (0, 1), (0, 1), (1, 1), (1, 1), (1, 1), (0, 1)],
        ]);
        let s = solve_matrix_game(&rows).unwrap();
        assert_eq!(s.value, rat(2, 3));
        assert_eq!(s.primal_value, s.dual_value);
    }

    #[test]
    fn rejects_empty() {
        assert!(solve_matrix_game(&[]).is_err());
        assert!(solve_matrix_game(&[vec![]]).is_err());
        assert!(solve_matrix_game(&[vec![int(1)], vec![int(1), int(2)]]).is_err());
    }
}
