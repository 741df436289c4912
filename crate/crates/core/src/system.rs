//! Building blocks for the linear systems the deciders solve.
//!
//! [`Sys`] wraps a [`LinearProgram`] with named variable blocks and affine
//! constraint helpers. Instance-aware helpers write primal rows, dual rows and
//! parameter constraints in terms of those blocks.

use invlfp_linalg::{solve_lp, Bounds, LinearProgram, LpOutcome, RatVector, Rational, Sense};

use crate::error::{Error, Result};
use crate::model::Instance;

/// `sum(coef * var) + constant`.
#[derive(Clone, Debug, Default)]
pub struct Affine {
    pub terms: Vec<(usize, Rational)>,
    pub constant: Rational,
}

impl Affine {
    pub fn constant(c: Rational) -> Self {
        Affine { terms: Vec::new(), constant: c }
    }

    pub fn var(v: usize) -> Self {
        Affine { terms: vec![(v, Rational::one())], constant: Rational::zero() }
    }

    pub fn add_term(&mut self, v: usize, coef: &Rational) {
        if !coef.is_zero() {
            self.terms.push((v, coef.clone()));
        }
    }

    pub fn add_affine(&mut self, other: &Affine, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (v, c) in &other.terms {
            self.terms.push((*v, c * scale));
        }
        self.constant += &other.constant * scale;
    }

    pub fn minus(mut self, other: &Affine) -> Self {
        self.add_affine(other, &-Rational::one());
        self
    }

    pub fn plus_var(mut self, v: usize, coef: &Rational) -> Self {
        self.add_term(v, coef);
        self
    }
}

/// A linear system under construction.
#[derive(Clone, Debug, Default)]
pub struct Sys {
    pub lp: LinearProgram,
}

impl Sys {
    pub fn new() -> Self {
        Sys::default()
    }

    pub fn var(&mut self, bounds: Bounds) -> usize {
        self.lp.add_var(bounds)
    }

    pub fn vars(&mut self, n: usize, bounds: Bounds) -> Vec<usize> {
        (0..n).map(|_| self.lp.add_var(bounds.clone())).collect()
    }

    /// `lhs (sense) rhs`.
    pub fn constrain(&mut self, lhs: Affine, sense: Sense, rhs: Affine) {
        let diff = lhs.minus(&rhs);
        let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(diff.terms.len());
        for (v, c) in diff.terms {
            match merged.iter_mut().find(|(w, _)| *w == v) {
                Some((_, acc)) => *acc += c,
                None => merged.push((v, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        self.lp.add_constraint(merged, sense, -diff.constant);
    }

    pub fn fix(&mut self, v: usize, value: Rational) {
        self.lp.bounds[v] = Bounds::fixed(value);
    }

    pub fn set_objective(&mut self, v: usize, coef: Rational) {
        self.lp.objective[v] = coef;
    }

    pub fn solve(&self) -> LpOutcome {
        solve_lp(&self.lp).expect("systems are built with consistent dimensions")
    }

    pub fn feasible_point(&self) -> Option<RatVector> {
        let mut sys = self.lp.clone();
        sys.objective.iter_mut().for_each(|c| *c = Rational::zero());
        solve_lp(&sys).expect("consistent dimensions").into_optimum().map(|o| o.primal)
    }

    /// Adds `eps <= cap`, maximizes `eps` and returns the solution point when the
    /// optimum is strictly positive.
    pub fn maximize_positive(&mut self, eps: usize, cap: &Rational) -> Option<(Rational, RatVector)> {
        self.lp.bounds[eps] = Bounds { lower: None, upper: Some(cap.clone()) };
        self.lp.objective.iter_mut().for_each(|c| *c = Rational::zero());
        self.lp.objective[eps] = -Rational::one();
        match self.solve() {
            LpOutcome::Optimal(o) => {
                let e = o.primal[eps].clone();
                e.is_positive().then_some((e, o.primal))
            }
            LpOutcome::Infeasible(_) => None,
            LpOutcome::Unbounded(_) => unreachable!("epsilon is capped"),
        }
    }
}

pub fn pick(point: &RatVector, vars: &[usize]) -> RatVector {
    point.select(vars)
}

/// `sum_j A_ij y_j`.
pub fn row_expr(inst: &Instance, i: usize, y: &[usize]) -> Affine {
    let mut e = Affine::default();
    for (j, &v) in y.iter().enumerate() {
        e.add_term(v, &inst.a[(i, j)]);
    }
    e
}

/// `(B x + b)_i`.
pub fn rhs_expr(inst: &Instance, i: usize, x: &[usize]) -> Affine {
    let mut e = Affine::constant(inst.b[i].clone());
    for (l, &v) in x.iter().enumerate() {
        e.add_term(v, &inst.b_mat[(i, l)]);
    }
    e
}

/// `(C x + c)_j`.
pub fn cost_expr(inst: &Instance, j: usize, x: &[usize]) -> Affine {
    let mut e = Affine::constant(inst.c[j].clone());
    for (l, &v) in x.iter().enumerate() {
        e.add_term(v, &inst.c_mat[(j, l)]);
    }
    e
}

/// `(A^T mu)_j`.
pub fn dual_expr(inst: &Instance, j: usize, mu: &[usize]) -> Affine {
    let mut e = Affine::default();
    for (i, &v) in mu.iter().enumerate() {
        e.add_term(v, &inst.a[(i, j)]);
    }
    e
}

/// `D x <= d`.
pub fn add_param_rows(sys: &mut Sys, inst: &Instance, x: &[usize]) {
    let xs = &inst.x_set;
    for i in 0..xs.d_mat.rows() {
        let mut e = Affine::default();
        for (l, &v) in x.iter().enumerate() {
            e.add_term(v, &xs.d_mat[(i, l)]);
        }
        sys.constrain(e, Sense::Le, Affine::constant(xs.d[i].clone()));
    }
}

/// Fresh free parameter variables constrained to `X`.
pub fn param_vars(sys: &mut Sys, inst: &Instance) -> Vec<usize> {
    let x = sys.vars(inst.k(), Bounds::free());
    add_param_rows(sys, inst, &x);
    x
}

/// Counts solved systems and enforces the search budget.
#[derive(Clone, Debug)]
pub struct Budget {
    pub used: u64,
    pub limit: u64,
    pub what: &'static str,
}

impl Budget {
    pub fn new(limit: u64, what: &'static str) -> Self {
        Budget { used: 0, limit, what }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::SizeGuard { what: self.what.to_string(), budget: self.limit });
        }
        Ok(())
    }
}
