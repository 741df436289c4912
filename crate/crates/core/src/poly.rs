//! Polynomial-time deciders: singleton targets in standard form, singleton
//! targets in natural form with a fixed right-hand side, and the pessimistic
//! basis problem. Each one solves a single linear system or capped epsilon-LP.

use invlfp_linalg::{Bounds, RatMatrix, RatVector, Rational, Sense};

use crate::certificate::{certificate_at, face_system, states_from_active};
use crate::error::{Error, Result, ValidationError};
use crate::model::{validate, validate_basis, Decision, Form, Instance, Scenario, SolveOptions, TargetSet};
use crate::system::{self, Affine, Sys};

fn require_form(inst: &Instance, form: Form, what: &str) -> Result<()> {
    if inst.form != form {
        return Err(ValidationError::FormMismatch(format!("{what} needs a {form:?} instance")).into());
    }
    Ok(())
}

fn finish(inst: &Instance, target: &TargetSet, scenario: Scenario, x: RatVector, examined: u64) -> Result<Decision> {
    let cert = certificate_at(inst, target, scenario, &x)?;
    Ok(Decision::yes(scenario, x, cert, examined))
}

/// Singleton target, standard form.
pub fn decide_singleton_standard(
    inst: &Instance,
    ybar: &RatVector,
    scenario: Scenario,
    opts: &SolveOptions,
) -> Result<Decision> {
    let target = TargetSet::Singleton { ybar: ybar.clone() };
    validate(inst, &target)?;
    require_form(inst, Form::Standard, "the standard-form singleton decider")?;
    if ybar.iter().any(Rational::is_negative) {
        return Ok(Decision::no(scenario, 0));
    }
    let (m, n) = (inst.m(), inst.n());
    let support: Vec<usize> = (0..n).filter(|&i| ybar[i].is_positive()).collect();
    let mut examined = 0;
    if scenario == Scenario::Pessimistic {
        examined += 1;
        if inst.a.select_cols(&support).rank() < support.len() {
            return Ok(Decision::no(scenario, examined));
        }
    }
    let mut sys = Sys::new();
    let x = system::param_vars(&mut sys, inst);
    let mu = sys.vars(m, Bounds::free());
    let eps = (scenario == Scenario::Pessimistic).then(|| sys.var(Bounds::free()));
    let ay = inst.a.mul_vec(ybar);
    for i in 0..m {
        sys.constrain(Affine::constant(ay[i].clone()), Sense::Eq, system::rhs_expr(inst, i, &x));
    }
    for j in 0..n {
        let lhs = system::dual_expr(inst, j, &mu);
        let rhs = system::cost_expr(inst, j, &x);
        match eps {
            _ if ybar[j].is_positive() => sys.constrain(lhs, Sense::Eq, rhs),
            Some(e) => sys.constrain(lhs.plus_var(e, &Rational::one()), Sense::Le, rhs),
            None => sys.constrain(lhs, Sense::Le, rhs),
        }
    }
    examined += 1;
    let point = match eps {
        Some(e) => sys.maximize_positive(e, &opts.eps_cap).map(|(_, p)| p),
        None => sys.feasible_point(),
    };
    match point {
        Some(p) => finish(inst, &target, scenario, p.select(&x), examined),
        None => Ok(Decision::no(scenario, examined)),
    }
}

/// Singleton target, natural form, right-hand side independent of `x`.
pub fn decide_singleton_natural_of(
    inst: &Instance,
    ybar: &RatVector,
    scenario: Scenario,
    opts: &SolveOptions,
) -> Result<Decision> {
    let target = TargetSet::Singleton { ybar: ybar.clone() };
    validate(inst, &target)?;
    require_form(inst, Form::Natural, "the fixed right-hand-side decider")?;
    if !inst.b_mat.is_zero() {
        return Err(ValidationError::FormMismatch("the fixed right-hand-side decider needs B = 0".into()).into());
    }
    let (m, n) = (inst.m(), inst.n());
    let ay = inst.a.mul_vec(ybar);
    if (0..m).any(|j| ay[j] > inst.b[j]) {
        return Ok(Decision::no(scenario, 0));
    }
    let active: Vec<usize> = (0..m).filter(|&j| ay[j] == inst.b[j]).collect();
    let strict = scenario == Scenario::Pessimistic;
    let mut examined = 0;
    if strict {
        examined += 1;
        if inst.a.select_rows(&active).rank() < n {
            return Ok(Decision::no(scenario, examined));
        }
    }
    let mut fs = face_system(inst, &states_from_active(m, &active), strict, None);
    for (v, val) in fs.y.clone().into_iter().zip(ybar.iter()) {
        fs.sys.fix(v, val.clone());
    }
    examined += 1;
    let point = match fs.eps {
        Some(e) => fs.sys.maximize_positive(e, &opts.eps_cap).map(|(_, p)| p),
        None => fs.sys.feasible_point(),
    };
    match point {
        Some(p) => finish(inst, &target, scenario, p.select(&fs.x), examined),
        None => Ok(Decision::no(scenario, examined)),
    }
}

/// Basis indices that can be exchanged for some non-basic column.
pub fn compute_nonessential_part(a: &RatMatrix, basis: &[usize]) -> Result<Vec<usize>> {
    validate_basis(a, basis).map_err(|e| Error::InvalidBasis(e.to_string()))?;
    let (m, n) = (a.rows(), a.cols());
    let mut out: Vec<usize> = basis
        .iter()
        .copied()
        .filter(|&i| {
            let rest: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            a.select_cols(&rest).rank() == m
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Is there an `x` for which the basis is the unique optimal basis?
pub fn decide_basis_pessimistic(inst: &Instance, basis: &[usize], opts: &SolveOptions) -> Result<Decision> {
    let target = TargetSet::Basis { basis: basis.to_vec() };
    validate(inst, &target)?;
    let scenario = Scenario::Pessimistic;
    let (m, n) = (inst.m(), inst.n());
    let b0 = compute_nonessential_part(&inst.a, basis)?;
    let mut sys = Sys::new();
    let x = system::param_vars(&mut sys, inst);
    let y = sys.vars(n, Bounds::nonneg());
    let mu = sys.vars(m, Bounds::free());
    let eps = sys.var(Bounds::free());
    for i in 0..m {
        sys.constrain(system::row_expr(inst, i, &y), Sense::Eq, system::rhs_expr(inst, i, &x));
    }
    for j in 0..n {
        let lhs = system::dual_expr(inst, j, &mu);
        let rhs = system::cost_expr(inst, j, &x);
        if !basis.contains(&j) {
            sys.fix(y[j], Rational::zero());
            sys.constrain(lhs.plus_var(eps, &Rational::one()), Sense::Le, rhs);
        } else if b0.binary_search(&j).is_ok() {
            sys.constrain(Affine::var(eps), Sense::Le, Affine::var(y[j]));
            sys.constrain(lhs, Sense::Eq, rhs);
        } else {
            sys.constrain(lhs, Sense::Le, rhs);
        }
    }
    match sys.maximize_positive(eps, &opts.eps_cap) {
        Some((_, p)) => finish(inst, &target, scenario, p.select(&x), 2),
        None => Ok(Decision::no(scenario, 2)),
    }
}
