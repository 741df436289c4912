//! Partial targets in standard form: the first `n - l` coordinates are
//! prescribed, the last `l` are free. The decider guesses which free
//! coordinates vanish, so it runs at most `2^l` linear systems.

use invlfp_linalg::{Bounds, RatMatrix, RatVector, Rational, Sense};

use crate::certificate::certificate_at;
use crate::error::Result;
use crate::model::{validate, Decision, Instance, Scenario, SolveOptions, TargetSet};
use crate::oracle::for_each_subset;
use crate::poly::decide_singleton_standard;
use crate::system::{self, Affine, Budget, Sys};

/// Decides a partial target `y_i = ybar_i` for `i < ybar.len()`.
pub fn decide_partial_standard(
    inst: &Instance,
    ybar: &RatVector,
    scenario: Scenario,
    opts: &SolveOptions,
) -> Result<Decision> {
    let target = TargetSet::PartialFix { ybar: ybar.clone() };
    validate(inst, &target)?;
    let (n, p) = (inst.n(), ybar.len());
    if p == n {
        let d = decide_singleton_standard(inst, ybar, scenario, opts)?;
        return match d.witness_x {
            Some(x) => {
                let cert = certificate_at(inst, &target, scenario, &x)?;
                Ok(Decision::yes(scenario, x, cert, d.systems_examined))
            }
            None => Ok(d),
        };
    }
    if ybar.iter().any(Rational::is_negative) {
        return Ok(Decision::no(scenario, 0));
    }
    let zero_fixed: Vec<usize> = (0..p).filter(|&i| ybar[i].is_zero()).collect();
    let free = n - p;
    let mut budget = Budget::new(opts.budget, "partial-target guesses");
    let mut found: Option<RatVector> = None;
    for size in 0..=free {
        for_each_subset(free, size, &mut |idx| {
            if found.is_some() {
                return Ok(());
            }
            let guess: Vec<usize> = idx.iter().map(|&i| p + i).collect();
            found = check_guess(inst, ybar, &zero_fixed, &guess, scenario, opts, &mut budget)?;
            Ok(())
        })?;
        if found.is_some() {
            break;
        }
    }
    match found {
        Some(x) => {
            let cert = certificate_at(inst, &target, scenario, &x)?;
            Ok(Decision::yes(scenario, x, cert, budget.used))
        }
        None => Ok(Decision::no(scenario, budget.used)),
    }
}

/// Every fixed unit vector lies in the span of the rows of `A` and the unit
/// vectors of `zeros`.
fn fixed_coordinates_pinned(a: &RatMatrix, zeros: &[usize], p: usize) -> bool {
    let n = a.cols();
    let mut rows = a.to_rows();
    for &i in zeros {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        rows.push(e);
    }
    let base = RatMatrix::from_rows(rows.clone(), n).rank();
    (0..p).all(|h| {
        let mut e = vec![Rational::zero(); n];
        e[h] = Rational::one();
        let mut with = rows.clone();
        with.push(e);
        RatMatrix::from_rows(with, n).rank() == base
    })
}

fn check_guess(
    inst: &Instance,
    ybar: &RatVector,
    zero_fixed: &[usize],
    guess: &[usize],
    scenario: Scenario,
    opts: &SolveOptions,
    budget: &mut Budget,
) -> Result<Option<RatVector>> {
    budget.tick()?;
    let (m, n, p) = (inst.m(), inst.n(), ybar.len());
    let mut zeros: Vec<usize> = zero_fixed.iter().chain(guess).copied().collect();
    zeros.sort_unstable();
    let strict = scenario == Scenario::Pessimistic;
    if strict && !fixed_coordinates_pinned(&inst.a, &zeros, p) {
        return Ok(None);
    }
    let mut sys = Sys::new();
    let x = system::param_vars(&mut sys, inst);
    let y = sys.vars(n, Bounds::nonneg());
    let mu = sys.vars(m, Bounds::free());
    let eps = strict.then(|| sys.var(Bounds::free()));
    for i in 0..m {
        sys.constrain(system::row_expr(inst, i, &y), Sense::Eq, system::rhs_expr(inst, i, &x));
    }
    for i in 0..p {
        sys.fix(y[i], ybar[i].clone());
    }
    for &i in guess {
        sys.fix(y[i], Rational::zero());
    }
    for j in 0..n {
        let lhs = system::dual_expr(inst, j, &mu);
        let rhs = system::cost_expr(inst, j, &x);
        let vanishing = zeros.binary_search(&j).is_ok();
        match eps {
            _ if !vanishing => sys.constrain(lhs, Sense::Eq, rhs),
            Some(e) => sys.constrain(lhs.plus_var(e, &Rational::one()), Sense::Le, rhs),
            None => sys.constrain(lhs, Sense::Le, rhs),
        }
        if let (Some(e), true) = (eps, j >= p && !vanishing) {
            sys.constrain(Affine::var(e), Sense::Le, Affine::var(y[j]));
        }
    }
    let point = match eps {
        Some(e) => sys.maximize_positive(e, &opts.eps_cap).map(|(_, pt)| pt),
        None => sys.feasible_point(),
    };
    Ok(point.map(|pt| pt.select(&x)))
}
