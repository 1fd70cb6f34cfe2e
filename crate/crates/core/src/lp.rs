//! Exact linear programming over the rationals.
//!
//! A dense two-phase simplex with Bland's anti-cycling pivot rule. All
//! pivoting is done in [`Rational`] arithmetic, so reported optima and
//! witnesses are exact; the duality assertions made elsewhere in the crate
//! compare these values with `==`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{Rational, RationalMatrix};

/// Row sense of a constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Eq,
    Le,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// `objective . x` subject to `constraints x (sense) rhs` and per-variable
/// bounds. A `None` bound leaves that side free.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub objective: Vec<Rational>,
    pub constraints: RationalMatrix,
    pub rhs: Vec<Rational>,
    pub senses: Vec<Sense>,
    pub bounds: Vec<(Option<Rational>, Option<Rational>)>,
}

impl LpProblem {
    /// Problem with all variables free and the given rows.
    pub fn new(
        objective: Vec<Rational>,
        constraints: RationalMatrix,
        rhs: Vec<Rational>,
        senses: Vec<Sense>,
    ) -> Result<Self> {
        let n = objective.len();
        if constraints.cols() != n {
            return Err(Error::Input("objective/constraint column mismatch".into()));
        }
        if constraints.rows() != rhs.len() || rhs.len() != senses.len() {
            return Err(Error::Input("constraint/rhs/sense row mismatch".into()));
        }
        Ok(LpProblem {
            objective,
            constraints,
            rhs,
            senses,
            bounds: vec![(None, None); n],
        })
    }

    pub fn with_bounds(mut self, bounds: Vec<(Option<Rational>, Option<Rational>)>) -> Result<Self> {
        if bounds.len() != self.objective.len() {
            return Err(Error::Input("bounds length mismatch".into()));
        }
        self.bounds = bounds;
        Ok(self)
    }
}

#[derive(Clone, Debug)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Objective value in the original orientation, present iff optimal.
    pub value: Option<Rational>,
    /// Optimal point in the original variables, present iff optimal.
    pub witness: Option<Vec<Rational>>,
}

// How each original variable was translated into standard-form columns.
enum VarMap {
    // x = x'_col + shift
    Shifted { col: usize, shift: Rational },
    // x = shift - x'_col
    Mirrored { col: usize, shift: Rational },
    // x = x'_pos - x'_neg
    Split { pos: usize, neg: usize },
}

/// Solves an [`LpProblem`] exactly. Every returned witness satisfies the
/// constraints with exact rational arithmetic.
pub fn lp_solve(problem: &LpProblem, direction: Direction) -> Result<LpOutcome> {
    let n = problem.objective.len();
    let m = problem.constraints.rows();

    // Translate to standard form: min c.x, A x = b, x >= 0.
    //
    // Bounded-below variables are shifted, bounded-above-only variables are
    // mirrored, free variables split into positive/negative parts. Two-sided
    // bounds keep the shift and gain an extra <= row.
    let mut maps = Vec::with_capacity(n);
    let mut cols = 0usize;
    let mut extra_rows: Vec<(usize, Rational)> = Vec::new(); // (column, upper bound on x')
    for (lo, hi) in &problem.bounds {
        match (lo, hi) {
            (Some(l), Some(h)) => {
                if h < l {
                    return Err(Error::Input("empty variable bound interval".into()));
                }
                maps.push(VarMap::Shifted { col: cols, shift: l.clone() });
                extra_rows.push((cols, h - l));
                cols += 1;
            }
            (Some(l), None) => {
                maps.push(VarMap::Shifted { col: cols, shift: l.clone() });
                cols += 1;
            }
            (None, Some(h)) => {
                maps.push(VarMap::Mirrored { col: cols, shift: h.clone() });
                cols += 1;
            }
            (None, None) => {
                maps.push(VarMap::Split { pos: cols, neg: cols + 1 });
                cols += 2;
            }
        }
    }

    let total_rows = m + extra_rows.len();
    // Slack columns for Le/Ge rows and for the bound rows.
    let slack_count = problem.senses.iter().filter(|s| **s != Sense::Eq).count() + extra_rows.len();
    let width = cols + slack_count;

    let mut a = RationalMatrix::zero(total_rows, width);
    let mut b = vec![Rational::zero(); total_rows];

    let fill_row = |a: &mut RationalMatrix, row: usize, var: usize, coeff: &Rational| {
        if coeff.is_zero() {
            return Rational::zero();
        }
        match &maps[var] {
            VarMap::Shifted { col, shift } => {
                let cur = a.get(row, *col) + coeff;
                a.set(row, *col, cur);
                coeff * shift
            }
            VarMap::Mirrored { col, shift } => {
                let cur = a.get(row, *col) - coeff;
                a.set(row, *col, cur);
                coeff * shift
            }
            VarMap::Split { pos, neg } => {
                let cur = a.get(row, *pos) + coeff;
                a.set(row, *pos, cur);
                let cur = a.get(row, *neg) - coeff;
                a.set(row, *neg, cur);
                Rational::zero()
            }
        }
    };

    let mut slack_col = cols;
    for i in 0..m {
        let mut constant = Rational::zero();
        for j in 0..n {
            constant += fill_row(&mut a, i, j, problem.constraints.get(i, j));
        }
        b[i] = &problem.rhs[i] - constant;
        match problem.senses[i] {
            Sense::Eq => {}
            Sense::Le => {
                a.set(i, slack_col, Rational::one());
                slack_col += 1;
            }
            Sense::Ge => {
                a.set(i, slack_col, -Rational::one());
                slack_col += 1;
            }
        }
    }
    for (k, (col, ub)) in extra_rows.iter().enumerate() {
        let row = m + k;
        a.set(row, *col, Rational::one());
        a.set(row, slack_col, Rational::one());
        slack_col += 1;
        b[row] = ub.clone();
    }
    debug_assert_eq!(slack_col, width);

    // Standard-form objective (minimization); constant from shifts is added
    // back at the end.
    let mut c = vec![Rational::zero(); width];
    let mut obj_constant = Rational::zero();
    let sign = match direction {
        Direction::Minimize => Rational::one(),
        Direction::Maximize => -Rational::one(),
    };
    for j in 0..n {
        let coeff = &sign * &problem.objective[j];
        if coeff.is_zero() {
            continue;
        }
        match &maps[j] {
            VarMap::Shifted { col, shift } => {
                c[*col] += &coeff;
                obj_constant += &coeff * shift;
            }
            VarMap::Mirrored { col, shift } => {
                c[*col] -= &coeff;
                obj_constant += &coeff * shift;
            }
            VarMap::Split { pos, neg } => {
                c[*pos] += &coeff;
                c[*neg] -= &coeff;
            }
        }
    }

    let std = match simplex_standard_form(a, b, c)? {
        StandardOutcome::Infeasible => {
            return Ok(LpOutcome { status: LpStatus::Infeasible, value: None, witness: None })
        }
        StandardOutcome::Unbounded => {
            return Ok(LpOutcome { status: LpStatus::Unbounded, value: None, witness: None })
        }
        StandardOutcome::Optimal { value, point } => (value, point),
    };
    let (std_value, point) = std;

    let mut witness = Vec::with_capacity(n);
    for map in &maps {
        witness.push(match map {
            VarMap::Shifted { col, shift } => &point[*col] + shift,
            VarMap::Mirrored { col, shift } => shift - &point[*col],
            VarMap::Split { pos, neg } => &point[*pos] - &point[*neg],
        });
    }
    let value = &sign * (std_value + obj_constant);
    Ok(LpOutcome {
        status: LpStatus::Optimal,
        value: Some(value),
        witness: Some(witness),
    })
}

enum StandardOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

/// Two-phase simplex for `min c.x, A x = b, x >= 0`.
fn simplex_standard_form(
    mut a: RationalMatrix,
    mut b: Vec<Rational>,
    c: Vec<Rational>,
) -> Result<StandardOutcome> {
    let m = a.rows();
    let n = a.cols();

    for i in 0..m {
        if b[i].is_negative() {
            for j in 0..n {
                let v = -a.get(i, j).clone();
                a.set(i, j, v);
            }
            b[i] = -b[i].clone();
        }
    }

    // Tableau layout: columns 0..n are structural, n..n+m artificial, last
    // column is the rhs. Row m is the objective row (reduced costs, with the
    // negated objective value in the rhs cell).
    let width = n + m + 1;
    let mut t = vec![vec![Rational::zero(); width]; m + 1];
    for i in 0..m {
        for j in 0..n {
            t[i][j] = a.get(i, j).clone();
        }
        t[i][n + i] = Rational::one();
        t[i][width - 1] = b[i].clone();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1: minimize the sum of artificials.
    for j in 0..width {
        let mut acc = Rational::zero();
        for i in 0..m {
            acc -= &t[i][j];
        }
        t[m][j] = acc;
    }
    for i in 0..m {
        t[m][n + i] = Rational::zero();
    }
    run_simplex(&mut t, &mut basis, n + m)?;
    let phase1 = -t[m][width - 1].clone();
    if !phase1.is_zero() {
        return Ok(StandardOutcome::Infeasible);
    }

    // Drive leftover artificials out of the basis; rows that cannot pivot on
    // a structural column are redundant and are blanked out.
    for row in 0..m {
        if basis[row] < n {
            continue;
        }
        if let Some(col) = (0..n).find(|&j| !t[row][j].is_zero()) {
            pivot(&mut t, basis.as_mut_slice(), row, col);
        } else {
            for j in 0..width {
                t[row][j] = Rational::zero();
            }
        }
    }

    // Phase 2: install the real objective row and forbid artificials.
    for j in 0..width {
        t[m][j] = Rational::zero();
    }
    for j in 0..n {
        t[m][j] = c[j].clone();
    }
    for row in 0..m {
        let bj = basis[row];
        if bj < n && !c[bj].is_zero() {
            let factor = c[bj].clone();
            for j in 0..width {
                let v = &t[m][j] - &factor * &t[row][j];
                t[m][j] = v;
            }
        }
    }
    for j in n..n + m {
        // Artificial columns are out of play in phase 2.
        t[m][j] = Rational::zero();
    }
    let bounded = run_simplex(&mut t, &mut basis, n)?;
    if !bounded {
        return Ok(StandardOutcome::Unbounded);
    }

    let mut point = vec![Rational::zero(); n];
    for (row, &bj) in basis.iter().enumerate() {
        if bj < n {
            point[bj] = t[row][width - 1].clone();
        }
    }
    let value = -t[m][width - 1].clone();
    Ok(StandardOutcome::Optimal { value, point })
}

/// Bland's rule simplex on an explicit tableau. `limit` is the number of
/// pivotable columns (structural, or structural+artificial in phase 1).
/// Returns `false` when the objective is unbounded below.
fn run_simplex(t: &mut [Vec<Rational>], basis: &mut [usize], limit: usize) -> Result<bool> {
    let m = basis.len();
    let width = t[0].len();
    loop {
        // Bland: entering column is the smallest index with negative reduced
        // cost; this guarantees termination without any tolerance fiddling.
        let Some(enter) = (0..limit).find(|&j| t[m][j].is_negative()) else {
            return Ok(true);
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(cur) => {
                        ratio < *cur || (ratio == *cur && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(leave) = leave else {
            return Ok(false);
        };
        pivot(t, basis, leave, enter);
    }
}

fn pivot(t: &mut [Vec<Rational>], basis: &mut [usize], row: usize, col: usize) {
    let width = t[0].len();
    let inv = t[row][col].recip();
    for j in 0..width {
        if !t[row][j].is_zero() {
            let v = &t[row][j] * &inv;
            t[row][j] = v;
        }
    }
    for i in 0..t.len() {
        if i == row || t[i][col].is_zero() {
            continue;
        }
        let factor = t[i][col].clone();
        for j in 0..width {
            if !t[row][j].is_zero() {
                let v = &t[i][j] - &factor * &t[row][j];
                t[i][j] = v;
            }
        }
    }
    basis[row] = col;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn single_var_problem(sense: Sense, rhs: i64) -> LpProblem {
        LpProblem::new(
            vec![rat(1)],
            RationalMatrix::from_int_rows(&[&[1]]),
            vec![rat(rhs)],
            vec![sense],
        )
        .unwrap()
    }

    #[test]
    fn min_with_lower_bound() {
        let p = single_var_problem(Sense::Ge, 3);
        let out = lp_solve(&p, Direction::Minimize).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value.unwrap(), rat(3));
        assert_eq!(out.witness.unwrap(), vec![rat(3)]);
    }

    #[test]
    fn max_unbounded() {
        let p = single_var_problem(Sense::Ge, 0);
        let out = lp_solve(&p, Direction::Maximize).unwrap();
        assert_eq!(out.status, LpStatus::Unbounded);
    }

    #[test]
    fn infeasible_box() {
        let p = LpProblem::new(
            vec![rat(1)],
            RationalMatrix::from_int_rows(&[&[1], &[1]]),
            vec![rat(0), rat(1)],
            vec![Sense::Le, Sense::Ge],
        )
        .unwrap();
        let out = lp_solve(&p, Direction::Minimize).unwrap();
        assert_eq!(out.status, LpStatus::Infeasible);
    }

    #[test]
    fn textbook_max() {
        // max 2x + 3y st 2x + y <= 18, 6x + 5y <= 60, 2x + 5y <= 40, x,y >= 0
        let p = LpProblem::new(
            vec![rat(2), rat(3)],
            RationalMatrix::from_int_rows(&[&[2, 1], &[6, 5], &[2, 5]]),
            vec![rat(18), rat(60), rat(40)],
            vec![Sense::Le, Sense::Le, Sense::Le],
        )
        .unwrap()
        .with_bounds(vec![(Some(rat(0)), None), (Some(rat(0)), None)])
        .unwrap();
        let out = lp_solve(&p, Direction::Maximize).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value.unwrap(), rat(28));
        assert_eq!(out.witness.unwrap(), vec![rat(5), rat(6)]);
    }

    #[test]
    fn free_variable_split() {
        // min x st x >= -5 encoded with a free variable and a Ge row.
        let p = LpProblem::new(
            vec![rat(1)],
            RationalMatrix::from_int_rows(&[&[1]]),
            vec![rat(-5)],
            vec![Sense::Ge],
        )
        .unwrap();
        let out = lp_solve(&p, Direction::Minimize).unwrap();
        assert_eq!(out.value.unwrap(), rat(-5));
    }

    #[test]
    fn two_sided_bounds() {
        // max x + y with -1 <= x <= 2, y <= 1, x + y <= 5/2.
        let p = LpProblem::new(
            vec![rat(1), rat(1)],
            RationalMatrix::from_int_rows(&[&[1, 1]]),
            vec![ratio(5, 2)],
            vec![Sense::Le],
        )
        .unwrap()
        .with_bounds(vec![(Some(rat(-1)), Some(rat(2))), (None, Some(rat(1)))])
        .unwrap();
        let out = lp_solve(&p, Direction::Maximize).unwrap();
        assert_eq!(out.value.unwrap(), ratio(5, 2));
        let w = out.witness.unwrap();
        assert!(w[0] <= rat(2) && w[0] >= rat(-1));
        assert!(w[1] <= rat(1));
    }

    #[test]
    fn beale_cycling_example_terminates() {
        // Degenerate instance on which the classical most-negative pivot
        // rule cycles forever; Bland's rule must terminate at -1/20.
        let p = LpProblem::new(
            vec![ratio(-3, 4), rat(150), ratio(-1, 50), rat(6)],
            RationalMatrix::from_rows(vec![
                vec![ratio(1, 4), rat(-60), ratio(-1, 25), rat(9)],
                vec![ratio(1, 2), rat(-90), ratio(-1, 50), rat(3)],
                vec![rat(0), rat(0), rat(1), rat(0)],
            ])
            .unwrap(),
            vec![rat(0), rat(0), rat(1)],
            vec![Sense::Le, Sense::Le, Sense::Le],
        )
        .unwrap()
        .with_bounds(vec![(Some(rat(0)), None); 4])
        .unwrap();
        let out = lp_solve(&p, Direction::Minimize).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value.unwrap(), ratio(-1, 20));
        let w = out.witness.unwrap();
        assert_eq!(w, vec![ratio(1, 25), rat(0), rat(1), rat(0)]);
    }

    #[test]
    fn equality_with_negative_rhs() {
        let p = LpProblem::new(
            vec![rat(0), rat(1)],
            RationalMatrix::from_int_rows(&[&[1, 0], &[1, 1]]),
            vec![rat(-2), rat(0)],
            vec![Sense::Eq, Sense::Eq],
        )
        .unwrap();
        let out = lp_solve(&p, Direction::Minimize).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.witness.unwrap(), vec![rat(-2), rat(2)]);
    }
}
