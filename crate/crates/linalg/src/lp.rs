//! General-form linear programs and an exact two-phase simplex method.
//!
//! A [`LinearProgram`] minimizes `c^T y` subject to rows `a_i^T y (<=|>=|=) b_i`
//! and per-variable bounds `l_j <= y_j <= u_j` (either side may be absent).
//! The solver normalizes to `A'z = b', z >= 0` internally and reports every
//! answer in the caller's coordinates together with a certificate:
//!
//! * optimal: a primal point and a dual point `(pi, lambda_L, lambda_U)` with
//!   `A^T pi + lambda_L - lambda_U = c`, `pi_i <= 0` on `<=` rows, `pi_i >= 0` on
//!   `>=` rows, `lambda >= 0`, and `b^T pi + l^T lambda_L - u^T lambda_U = c^T y`;
//! * infeasible: a Farkas ray of the same shape with `c = 0` and positive value;
//! * unbounded: a feasible point and a recession direction with `c^T d < 0`.
//!
//! Pivoting follows Bland's rule, so the method terminates and its output is a
//! deterministic function of the input.

use serde::{Deserialize, Serialize};

use crate::{RatVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    /// Sparse coefficients; repeated indices are summed.
    pub coeffs: Vec<(usize, Rational)>,
    pub sense: Sense,
    pub rhs: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl Bounds {
    pub fn free() -> Self {
        Bounds { lower: None, upper: None }
    }

    pub fn nonneg() -> Self {
        Bounds { lower: Some(Rational::zero()), upper: None }
    }

    pub fn nonpos() -> Self {
        Bounds { lower: None, upper: Some(Rational::zero()) }
    }

    pub fn range(lower: Rational, upper: Rational) -> Self {
        Bounds { lower: Some(lower), upper: Some(upper) }
    }

    pub fn fixed(v: Rational) -> Self {
        Bounds { lower: Some(v.clone()), upper: Some(v) }
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lower.as_ref().is_none_or(|l| l <= v) && self.upper.as_ref().is_none_or(|u| v <= u)
    }
}

/// `min objective^T y` over the constraints and bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub bounds: Vec<Bounds>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dual multipliers in the convention described in the module docs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSolution {
    pub rows: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub upper: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    pub value: Rational,
    pub primal: RatVector,
    pub dual: DualSolution,
}

/// Infeasibility certificate: `A^T pi + lambda_L - lambda_U = 0` with positive value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasRay(pub DualSolution);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnboundedRay {
    pub point: RatVector,
    pub direction: RatVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(Optimum),
    Infeasible(FarkasRay),
    Unbounded(UnboundedRay),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(RatVector),
    Infeasible(FarkasRay),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

impl LpOutcome {
    pub fn optimum(&self) -> Option<&Optimum> {
        match self {
            LpOutcome::Optimal(o) => Some(o),
            _ => None,
        }
    }

    pub fn into_optimum(self) -> Option<Optimum> {
        match self {
            LpOutcome::Optimal(o) => Some(o),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible(_))
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, LpOutcome::Unbounded(_))
    }
}

impl LinearProgram {
    /// `n` free variables with zero objective and no rows.
    pub fn new(n: usize) -> Self {
        LinearProgram { objective: vec![Rational::zero(); n], bounds: vec![Bounds::free(); n], constraints: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_var(&mut self, bounds: Bounds) -> usize {
        self.objective.push(Rational::zero());
        self.bounds.push(bounds);
        self.objective.len() - 1
    }

    pub fn add_constraint(&mut self, coeffs: Vec<(usize, Rational)>, sense: Sense, rhs: Rational) -> usize {
        self.constraints.push(Constraint { coeffs, sense, rhs });
        self.constraints.len() - 1
    }

    fn validate(&self) -> Result<(), LpError> {
        let n = self.num_vars();
        if self.bounds.len() != n {
            return Err(LpError::DimensionMismatch(format!(
                "{} objective entries but {} bounds",
                n,
                self.bounds.len()
            )));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if let Some((j, _)) = c.coeffs.iter().find(|(j, _)| *j >= n) {
                return Err(LpError::DimensionMismatch(format!("row {i} references variable {j} of {n}")));
            }
        }
        Ok(())
    }

    /// Dense row `i` of the constraint matrix.
    pub fn dense_row(&self, i: usize) -> Vec<Rational> {
        let mut r = vec![Rational::zero(); self.num_vars()];
        for (j, v) in &self.constraints[i].coeffs {
            r[*j] += v;
        }
        r
    }

    pub fn row_activity(&self, i: usize, y: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (j, v) in &self.constraints[i].coeffs {
            if !v.is_zero() && !y[*j].is_zero() {
                s += v * &y[*j];
            }
        }
        s
    }

    pub fn objective_value(&self, y: &[Rational]) -> Rational {
        crate::matrix::dot(&self.objective, y)
    }

    /// Exact primal feasibility check.
    pub fn is_feasible_point(&self, y: &[Rational]) -> bool {
        if y.len() != self.num_vars() {
            return false;
        }
        if !self.bounds.iter().zip(y).all(|(b, v)| b.contains(v)) {
            return false;
        }
        self.constraints.iter().enumerate().all(|(i, c)| {
            let a = self.row_activity(i, y);
            match c.sense {
                Sense::Le => a <= c.rhs,
                Sense::Ge => a >= c.rhs,
                Sense::Eq => a == c.rhs,
            }
        })
    }

    /// Returns `A^T pi + lambda_L - lambda_U` and the dual value, or `None` if a
    /// sign or support condition fails.
    fn dual_combination(&self, d: &DualSolution) -> Option<(Vec<Rational>, Rational)> {
        let n = self.num_vars();
        if d.rows.len() != self.constraints.len() || d.lower.len() != n || d.upper.len() != n {
            return None;
        }
        let mut g = vec![Rational::zero(); n];
        let mut value = Rational::zero();
        for (c, p) in self.constraints.iter().zip(&d.rows) {
            let ok = match c.sense {
                Sense::Le => !p.is_positive(),
                Sense::Ge => !p.is_negative(),
                Sense::Eq => true,
            };
            if !ok {
                return None;
            }
            if p.is_zero() {
                continue;
            }
            for (j, v) in &c.coeffs {
                g[*j] += v * p;
            }
            value += &c.rhs * p;
        }
        for j in 0..n {
            let (ll, lu) = (&d.lower[j], &d.upper[j]);
            if ll.is_negative() || lu.is_negative() {
                return None;
            }
            if !ll.is_zero() {
                value += self.bounds[j].lower.as_ref()? * ll;
                g[j] += ll;
            }
            if !lu.is_zero() {
                value -= self.bounds[j].upper.as_ref()? * lu;
                g[j] -= lu;
            }
        }
        Some((g, value))
    }

    /// Recession-cone membership of a direction.
    fn is_recession_direction(&self, d: &[Rational]) -> bool {
        if d.len() != self.num_vars() {
            return false;
        }
        for (b, v) in self.bounds.iter().zip(d) {
            if (b.lower.is_some() && v.is_negative()) || (b.upper.is_some() && v.is_positive()) {
                return false;
            }
        }
        self.constraints.iter().enumerate().all(|(i, c)| {
            let a = self.row_activity(i, d);
            match c.sense {
                Sense::Le => !a.is_positive(),
                Sense::Ge => !a.is_negative(),
                Sense::Eq => a.is_zero(),
            }
        })
    }
}

impl Optimum {
    /// Checks primal feasibility, dual feasibility and equal objective values.
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        if !lp.is_feasible_point(&self.primal.0) || lp.objective_value(&self.primal.0) != self.value {
            return false;
        }
        match lp.dual_combination(&self.dual) {
            Some((g, v)) => g == lp.objective && v == self.value,
            None => false,
        }
    }
}

impl FarkasRay {
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        match lp.dual_combination(&self.0) {
            Some((g, v)) => g.iter().all(Rational::is_zero) && v.is_positive(),
            None => false,
        }
    }
}

impl UnboundedRay {
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        lp.is_feasible_point(&self.point.0)
            && lp.is_recession_direction(&self.direction.0)
            && lp.objective_value(&self.direction.0).is_negative()
    }
}

impl LpOutcome {
    pub fn verify(&self, lp: &LinearProgram) -> bool {
        match self {
            LpOutcome::Optimal(o) => o.verify(lp),
            LpOutcome::Infeasible(f) => f.verify(lp),
            LpOutcome::Unbounded(u) => u.verify(lp),
        }
    }
}

/// How an original variable is expressed through nonnegative columns.
#[derive(Clone, Debug)]
enum VarMap {
    Fixed(Rational),
    /// `y = l + z`
    Shifted { col: usize, lower: Rational },
    /// `y = u - z`
    Mirrored { col: usize, upper: Rational },
    /// `y = z+ - z-`
    Split { pos: usize, neg: usize },
    /// `y = l + z` with `z + w = u - l` on row `row`
    Boxed { col: usize, lower: Rational, row: usize },
}

struct Tableau {
    /// Constraint rows followed by the objective row; the last column is the rhs.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    m: usize,
    /// Columns `0..n_na` are eligible to enter; `n_na..n_na+m` are artificials.
    n_na: usize,
}

impl Tableau {
    fn rhs_col(&self) -> usize {
        self.n_na + self.m
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.t[r][c].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in self.t[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let prow = std::mem::take(&mut self.t[r]);
        let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] -= &f * &prow[j];
            }
        }
        self.t[r] = prow;
        self.basis[r] = c;
    }

    /// Loads `cost` into the objective row and prices out the basis.
    fn set_objective(&mut self, cost: &[Rational]) {
        let width = self.rhs_col() + 1;
        let mut obj: Vec<Rational> = cost.to_vec();
        obj.resize(width, Rational::zero());
        for r in 0..self.m {
            let cb = &cost[self.basis[r]];
            if cb.is_zero() {
                continue;
            }
            for (j, x) in self.t[r].iter().enumerate() {
                if !x.is_zero() {
                    obj[j] -= cb * x;
                }
            }
        }
        self.t[self.m] = obj;
    }

    /// Bland's rule. Returns `Err(col)` if column `col` proves unboundedness.
    fn run(&mut self) -> Result<(), usize> {
        let rc = self.rhs_col();
        loop {
            let Some(enter) = (0..self.n_na).find(|&j| self.t[self.m][j].is_negative()) else {
                return Ok(());
            };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.m {
                let a = &self.t[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.t[r][rc] / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, enter),
                None => return Err(enter),
            }
        }
    }

    /// `pi = c_B^T B^{-1}` read off the artificial columns.
    fn row_duals(&self, cost: &[Rational]) -> Vec<Rational> {
        (0..self.m)
            .map(|i| {
                let col = self.n_na + i;
                let mut s = Rational::zero();
                for r in 0..self.m {
                    let cb = &cost[self.basis[r]];
                    if !cb.is_zero() && !self.t[r][col].is_zero() {
                        s += cb * &self.t[r][col];
                    }
                }
                s
            })
            .collect()
    }

    fn column_values(&self) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); self.n_na + self.m];
        let rc = self.rhs_col();
        for r in 0..self.m {
            z[self.basis[r]] = self.t[r][rc].clone();
        }
        z
    }
}

/// Solves the program exactly.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpOutcome, LpError> {
    lp.validate()?;
    let n = lp.num_vars();

    // Contradictory bounds are certified directly.
    for (j, b) in lp.bounds.iter().enumerate() {
        if let (Some(l), Some(u)) = (&b.lower, &b.upper) {
            if l > u {
                let mut d = zero_dual(lp);
                d.lower[j] = Rational::one();
                d.upper[j] = Rational::one();
                return Ok(LpOutcome::Infeasible(FarkasRay(d)));
            }
        }
    }

    // Column layout: structural | slacks | box slacks | artificials.
    let mut maps = Vec::with_capacity(n);
    let mut ncols = 0usize;
    let mut boxed = 0usize;
    let mcons = lp.constraints.len();
    for b in &lp.bounds {
        let map = match (&b.lower, &b.upper) {
            (Some(l), Some(u)) if l == u => VarMap::Fixed(l.clone()),
            (Some(l), Some(_)) => {
                boxed += 1;
                ncols += 1;
                VarMap::Boxed { col: ncols - 1, lower: l.clone(), row: mcons + boxed - 1 }
            }
            (Some(l), None) => {
                ncols += 1;
                VarMap::Shifted { col: ncols - 1, lower: l.clone() }
            }
            (None, Some(u)) => {
                ncols += 1;
                VarMap::Mirrored { col: ncols - 1, upper: u.clone() }
            }
            (None, None) => {
                ncols += 2;
                VarMap::Split { pos: ncols - 2, neg: ncols - 1 }
            }
        };
        maps.push(map);
    }
    let mut slack_col = vec![None; mcons];
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.sense != Sense::Eq {
            slack_col[i] = Some(ncols);
            ncols += 1;
        }
    }
    let box_slack_start = ncols;
    ncols += boxed;
    let n_na = ncols;
    let m = mcons + boxed;
    let width = n_na + m + 1;
    let rc = n_na + m;

    let mut t = vec![vec![Rational::zero(); width]; m + 1];
    let mut sigma = vec![1i32; m];
    let mut cost = vec![Rational::zero(); n_na + m];

    for (i, c) in lp.constraints.iter().enumerate() {
        let row = &mut t[i];
        let mut rhs = c.rhs.clone();
        for (j, v) in &c.coeffs {
            if v.is_zero() {
                continue;
            }
            match &maps[*j] {
                VarMap::Fixed(val) => rhs -= v * val,
                VarMap::Shifted { col, lower } | VarMap::Boxed { col, lower, .. } => {
                    row[*col] += v;
                    rhs -= v * lower;
                }
                VarMap::Mirrored { col, upper } => {
                    row[*col] -= v;
                    rhs -= v * upper;
                }
                VarMap::Split { pos, neg } => {
                    row[*pos] += v;
                    row[*neg] -= v;
                }
            }
        }
        match c.sense {
            Sense::Le => row[slack_col[i].unwrap()] = Rational::one(),
            Sense::Ge => row[slack_col[i].unwrap()] = -Rational::one(),
            Sense::Eq => {}
        }
        row[rc] = rhs;
    }
    for (j, map) in maps.iter().enumerate() {
        if let VarMap::Boxed { col, row, lower } = map {
            let r = &mut t[*row];
            r[*col] = Rational::one();
            r[box_slack_start + (row - mcons)] = Rational::one();
            r[rc] = lp.bounds[j].upper.as_ref().unwrap() - lower;
        }
    }
    let mut basis = vec![0usize; m];
    for i in 0..m {
        if t[i][rc].is_negative() {
            sigma[i] = -1;
            for x in t[i].iter_mut() {
                if !x.is_zero() {
                    *x = -&*x;
                }
            }
        }
        t[i][n_na + i] = Rational::one();
        // A +1 slack column can start in the basis.
        let own_slack = if i < mcons { slack_col[i] } else { Some(box_slack_start + (i - mcons)) };
        basis[i] = match own_slack {
            Some(s) if t[i][s].is_one() => s,
            _ => n_na + i,
        };
    }
    let mut tab = Tableau { t, basis, m, n_na };

    // Phase 1.
    let phase1: Vec<Rational> = (0..n_na + m)
        .map(|j| if j >= n_na && tab.basis.contains(&j) { Rational::one() } else { Rational::zero() })
        .collect();
    let needs_phase1 = tab.basis.iter().any(|&b| b >= n_na);
    if needs_phase1 {
        tab.set_objective(&phase1);
        tab.run().expect("phase 1 is bounded");
        if tab.t[m][rc].is_negative() {
            let pi = tab.row_duals(&phase1);
            let d = map_dual(lp, &maps, &sigma, &pi, mcons, None);
            return Ok(LpOutcome::Infeasible(FarkasRay(d)));
        }
        // Drive zero-level artificials out of the basis where possible.
        for r in 0..m {
            if tab.basis[r] >= n_na {
                if let Some(j) = (0..n_na).find(|&j| !tab.t[r][j].is_zero()) {
                    tab.pivot(r, j);
                }
            }
        }
    }

    // Phase 2.
    for (j, map) in maps.iter().enumerate() {
        let cj = &lp.objective[j];
        match map {
            VarMap::Fixed(_) => {}
            VarMap::Shifted { col, .. } | VarMap::Boxed { col, .. } => cost[*col] = cj.clone(),
            VarMap::Mirrored { col, .. } => cost[*col] = -cj,
            VarMap::Split { pos, neg } => {
                cost[*pos] = cj.clone();
                cost[*neg] = -cj;
            }
        }
    }
    tab.set_objective(&cost);
    let status = tab.run();
    let z = tab.column_values();
    let point = map_point(&maps, &z);
    match status {
        Ok(()) => {
            let pi = tab.row_duals(&cost);
            let dual = map_dual(lp, &maps, &sigma, &pi, mcons, Some(&lp.objective));
            let value = lp.objective_value(&point.0);
            Ok(LpOutcome::Optimal(Optimum { value, primal: point, dual }))
        }
        Err(enter) => {
            let mut dz = vec![Rational::zero(); n_na + m];
            dz[enter] = Rational::one();
            for r in 0..m {
                let a = &tab.t[r][enter];
                if !a.is_zero() {
                    dz[tab.basis[r]] = -a;
                }
            }
            let direction = map_direction(&maps, &dz);
            Ok(LpOutcome::Unbounded(UnboundedRay { point, direction }))
        }
    }
}

/// Feasibility of the constraint system, ignoring the objective.
pub fn check_feasible(lp: &LinearProgram) -> Result<Feasibility, LpError> {
    let mut sys = lp.clone();
    sys.objective.iter_mut().for_each(|c| *c = Rational::zero());
    Ok(match solve_lp(&sys)? {
        LpOutcome::Optimal(o) => Feasibility::Feasible(o.primal),
        LpOutcome::Infeasible(f) => Feasibility::Infeasible(f),
        LpOutcome::Unbounded(_) => unreachable!("zero objective cannot be unbounded"),
    })
}

fn zero_dual(lp: &LinearProgram) -> DualSolution {
    let n = lp.num_vars();
    DualSolution {
        rows: vec![Rational::zero(); lp.constraints.len()],
        lower: vec![Rational::zero(); n],
        upper: vec![Rational::zero(); n],
    }
}

fn map_point(maps: &[VarMap], z: &[Rational]) -> RatVector {
    maps.iter()
        .map(|m| match m {
            VarMap::Fixed(v) => v.clone(),
            VarMap::Shifted { col, lower } | VarMap::Boxed { col, lower, .. } => lower + &z[*col],
            VarMap::Mirrored { col, upper } => upper - &z[*col],
            VarMap::Split { pos, neg } => &z[*pos] - &z[*neg],
        })
        .collect()
}

fn map_direction(maps: &[VarMap], dz: &[Rational]) -> RatVector {
    maps.iter()
        .map(|m| match m {
            VarMap::Fixed(_) => Rational::zero(),
            VarMap::Shifted { col, .. } | VarMap::Boxed { col, .. } => dz[*col].clone(),
            VarMap::Mirrored { col, .. } => -&dz[*col],
            VarMap::Split { pos, neg } => &dz[*pos] - &dz[*neg],
        })
        .collect()
}

/// Translates internal row duals into `(pi, lambda_L, lambda_U)`. With
/// `cost = None` the target is the zero vector (Farkas ray).
fn map_dual(
    lp: &LinearProgram,
    maps: &[VarMap],
    sigma: &[i32],
    pi: &[Rational],
    mcons: usize,
    cost: Option<&[Rational]>,
) -> DualSolution {
    let n = lp.num_vars();
    let signed = |i: usize| if sigma[i] < 0 { -&pi[i] } else { pi[i].clone() };
    let rows: Vec<Rational> = (0..mcons).map(signed).collect();
    let mut g = vec![Rational::zero(); n];
    for (c, p) in lp.constraints.iter().zip(&rows) {
        if p.is_zero() {
            continue;
        }
        for (j, v) in &c.coeffs {
            g[*j] += v * p;
        }
    }
    let mut lower = vec![Rational::zero(); n];
    let mut upper = vec![Rational::zero(); n];
    for (j, map) in maps.iter().enumerate() {
        // Residual that the bound multipliers must absorb.
        let target = cost.map_or_else(Rational::zero, |c| c[j].clone());
        let r = &target - &g[j];
        match map {
            VarMap::Boxed { row, .. } => {
                let tau = signed(*row);
                lower[j] = &r - &tau;
                upper[j] = -tau;
            }
            VarMap::Shifted { .. } => lower[j] = r,
            VarMap::Mirrored { .. } => upper[j] = -r,
            VarMap::Split { .. } => debug_assert!(r.is_zero()),
            VarMap::Fixed(_) => {
                if r.is_negative() {
                    upper[j] = -r;
                } else {
                    lower[j] = r;
                }
            }
        }
    }
    DualSolution { rows, lower, upper }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn one_var(obj: i64, bounds: Bounds) -> LinearProgram {
        let mut lp = LinearProgram::new(1);
        lp.objective[0] = q(obj);
        lp.bounds[0] = bounds;
        lp
    }

    #[test]
    fn spec_examples() {
        let mut lp = one_var(-1, Bounds::nonneg());
        lp.add_constraint(vec![(0, q(1))], Sense::Le, q(1));
        let out = solve_lp(&lp).unwrap();
        let opt = out.optimum().unwrap();
        assert_eq!(opt.value, q(-1));
        assert_eq!(opt.primal.0, vec![q(1)]);
        assert!(out.verify(&lp));

        let mut lp = one_var(0, Bounds::nonneg());
        lp.add_constraint(vec![(0, q(1))], Sense::Le, q(-1));
        let out = solve_lp(&lp).unwrap();
        assert!(out.is_infeasible());
        assert!(out.verify(&lp));

        let lp = one_var(-1, Bounds::nonneg());
        let out = solve_lp(&lp).unwrap();
        assert!(out.is_unbounded());
        assert!(out.verify(&lp));
    }

    #[test]
    fn feasibility_examples() {
        let mut lp = LinearProgram::new(1);
        lp.add_constraint(vec![(0, q(1))], Sense::Ge, q(0));
        lp.add_constraint(vec![(0, q(1))], Sense::Le, q(1));
        match check_feasible(&lp).unwrap() {
            Feasibility::Feasible(p) => assert!(lp.is_feasible_point(&p.0)),
            other => panic!("{other:?}"),
        }
        let mut lp = LinearProgram::new(2);
        lp.bounds = vec![Bounds::nonneg(); 2];
        lp.add_constraint(vec![(0, q(1)), (1, q(1))], Sense::Eq, q(1));
        match check_feasible(&lp).unwrap() {
            Feasibility::Feasible(p) => assert!(lp.is_feasible_point(&p.0)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn boxed_mirrored_and_fixed_variables() {
        // max y0 + y1 + y2 with y0 in [-1, 2], y1 <= 3, y2 = 5, y0 + y1 <= 4.
        let mut lp = LinearProgram::new(3);
        lp.objective = vec![q(-1), q(-1), q(-1)];
        lp.bounds = vec![Bounds::range(q(-1), q(2)), Bounds { lower: None, upper: Some(q(3)) }, Bounds::fixed(q(5))];
        lp.add_constraint(vec![(0, q(1)), (1, q(1))], Sense::Le, q(4));
        let out = solve_lp(&lp).unwrap();
        assert_eq!(out.optimum().unwrap().value, q(-9));
        assert!(out.verify(&lp));
    }

    #[test]
    fn contradictory_bounds_and_zero_rows() {
        let lp = one_var(0, Bounds::range(q(2), q(1)));
        let out = solve_lp(&lp).unwrap();
        assert!(out.is_infeasible() && out.verify(&lp));

        let mut lp = LinearProgram::new(2);
        lp.add_constraint(vec![], Sense::Ge, q(1));
        let out = solve_lp(&lp).unwrap();
        assert!(out.is_infeasible() && out.verify(&lp));
    }

    #[test]
    fn redundant_equalities_keep_certificates_valid() {
        let mut lp = LinearProgram::new(2);
        lp.objective = vec![q(1), q(2)];
        lp.bounds = vec![Bounds::nonneg(); 2];
        lp.add_constraint(vec![(0, q(1)), (1, q(1))], Sense::Eq, q(1));
        lp.add_constraint(vec![(0, q(2)), (1, q(2))], Sense::Eq, q(2));
        let out = solve_lp(&lp).unwrap();
        assert_eq!(out.optimum().unwrap().value, q(1));
        assert!(out.verify(&lp));
    }

    #[test]
    fn out_of_range_index_is_dimension_error() {
        let mut lp = LinearProgram::new(1);
        lp.add_constraint(vec![(3, q(1))], Sense::Le, q(0));
        assert!(matches!(solve_lp(&lp), Err(LpError::DimensionMismatch(_))));
    }
}
