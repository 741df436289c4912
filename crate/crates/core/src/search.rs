//! Complete searches for the NP-hard variants.
//!
//! Each search ranges over the same certificates the verifiers accept, but
//! instead of listing all `2^m` active sets it branches on complementarity:
//! every undecided row is either tight (`In`) or has a zero multiplier
//! (`Out`). A relaxation LP at each node keeps only the sign constraints for
//! undecided rows. When its solution already satisfies complementarity the
//! certificate is read off directly; otherwise the first violated row is
//! split. Infeasible relaxations prune whole subtrees. Every yes-instance has
//! a complete assignment that stays feasible, so the search is complete.

use std::collections::HashSet;

use invlfp_linalg::{RatMatrix, RatVector, Rational};

use crate::certificate::{add_containment_row, basis_system, face_system, Certificate, RowState, SupportPair};
use crate::error::Result;
use crate::model::{validate, validate_basis, Decision, Form, Instance, Scenario, SolveOptions, TargetSet};
use crate::oracle::for_each_subset;
use crate::system::{self, Budget};

fn require_natural(inst: &Instance) -> Result<()> {
    if inst.form != Form::Natural {
        return Err(crate::error::ValidationError::FormMismatch("polyhedral search needs a natural-form instance".into()).into());
    }
    Ok(())
}

fn slack(nat: &Instance, j: usize, x: &RatVector, y: &RatVector) -> Rational {
    let rhs = &nat.b[j] + &invlfp_linalg::matrix::dot(nat.b_mat.row(j), &x.0);
    rhs - invlfp_linalg::matrix::dot(nat.a.row(j), &y.0)
}

/// Is there `x` in `X` with an optimal point of `LP_x` inside `{S y <= t}`?
pub fn solve_polyhedral_optimistic(
    nat: &Instance,
    s: &RatMatrix,
    t: &RatVector,
    opts: &SolveOptions,
) -> Result<Decision> {
    validate(nat, &TargetSet::Polyhedron { s: s.clone(), t: t.clone() })?;
    require_natural(nat)?;
    let scenario = Scenario::Optimistic;
    let m = nat.m();
    let mut budget = Budget::new(opts.budget, "polyhedral optimistic search");
    let mut stack = vec![vec![RowState::Free; m]];
    while let Some(states) = stack.pop() {
        budget.tick()?;
        let mut fs = face_system(nat, &states, false, Some((s, t)));
        // Push multipliers towards zero so fewer rows need splitting.
        for &v in &fs.mu {
            fs.sys.set_objective(v, -Rational::one());
        }
        let Some(o) = fs.sys.solve().into_optimum() else { continue };
        let x = o.primal.select(&fs.x);
        let y = o.primal.select(&fs.y);
        let mu = o.primal.select(&fs.mu);
        let violated = (0..m)
            .find(|&j| states[j] == RowState::Free && mu[j].is_negative() && slack(nat, j, &x, &y).is_positive());
        match violated {
            None => {
                let active = (0..m)
                    .filter(|&j| states[j] == RowState::In || (states[j] == RowState::Free && mu[j].is_negative()))
                    .collect();
                return Ok(Decision::yes(scenario, x, Certificate::ActiveSet { active }, budget.used));
            }
            Some(j) => {
                let mut out = states.clone();
                out[j] = RowState::Out;
                let mut tight = states;
                tight[j] = RowState::In;
                stack.push(out);
                stack.push(tight);
            }
        }
    }
    Ok(Decision::no(scenario, budget.used))
}

/// Is there `x` in `X` for which the basis yields an optimal basic solution?
pub fn solve_basis_optimistic(inst: &Instance, basis: &[usize], opts: &SolveOptions) -> Result<Decision> {
    validate(inst, &TargetSet::Basis { basis: basis.to_vec() })?;
    validate_basis(&inst.a, basis)?;
    let scenario = Scenario::Optimistic;
    let n = inst.n();
    let mut budget = Budget::new(opts.budget, "basis optimistic search");
    let mut start = vec![RowState::In; n];
    for &i in basis {
        start[i] = RowState::Free;
    }
    let mut stack = vec![start];
    while let Some(states) = stack.pop() {
        budget.tick()?;
        let mut bs = basis_system(inst, &states);
        // Minimize the total reduced cost over basic columns.
        let x_mu: Vec<usize> = bs.x.clone();
        for &i in basis {
            for (l, &v) in x_mu.iter().enumerate() {
                let c = &bs.sys.lp.objective[v] + &inst.c_mat[(i, l)];
                bs.sys.set_objective(v, c);
            }
            for (r, &v) in bs.mu.clone().iter().enumerate() {
                let c = &bs.sys.lp.objective[v] - &inst.a[(r, i)];
                bs.sys.set_objective(v, c);
            }
        }
        let Some(o) = bs.sys.solve().into_optimum() else { continue };
        let x = o.primal.select(&bs.x);
        let y = o.primal.select(&bs.y);
        let mu = o.primal.select(&bs.mu);
        let cost = inst.cost_at(&x);
        let reduced = |i: usize| {
            let amu: Rational = (0..inst.m()).map(|r| &inst.a[(r, i)] * &mu[r]).sum();
            &cost[i] - &amu
        };
        let violated =
            basis.iter().copied().find(|&i| states[i] == RowState::Free && y[i].is_positive() && reduced(i).is_positive());
        match violated {
            None => {
                let zero = (0..n).filter(|&i| states[i] == RowState::In || y[i].is_zero()).collect();
                return Ok(Decision::yes(scenario, x, Certificate::BasisZeroSet { zero }, budget.used));
            }
            Some(i) => {
                let mut out = states.clone();
                out[i] = RowState::Out;
                let mut tight = states;
                tight[i] = RowState::In;
                stack.push(out);
                stack.push(tight);
            }
        }
    }
    Ok(Decision::no(scenario, budget.used))
}

/// Is there `x` in `X` whose (nonempty) optimal set lies inside `{S y <= t}`?
pub fn solve_polyhedral_pessimistic(
    nat: &Instance,
    s: &RatMatrix,
    t: &RatVector,
    opts: &SolveOptions,
) -> Result<Decision> {
    validate(nat, &TargetSet::Polyhedron { s: s.clone(), t: t.clone() })?;
    require_natural(nat)?;
    let scenario = Scenario::Pessimistic;
    let m = nat.m();
    let mut budget = Budget::new(opts.budget, "polyhedral pessimistic search");
    let mut tried: HashSet<Vec<usize>> = HashSet::new();
    let mut stack = vec![vec![RowState::Free; m]];
    while let Some(states) = stack.pop() {
        budget.tick()?;
        let mut fs = face_system(nat, &states, true, Some((s, t)));
        let eps = fs.eps.expect("strict system");
        let Some((e, p)) = fs.sys.maximize_positive(eps, &opts.eps_cap) else { continue };
        let x = p.select(&fs.x);
        let y = p.select(&fs.y);
        let mu = p.select(&fs.mu);
        let mut inferred = Vec::new();
        let mut violated = None;
        for j in (0..m).filter(|&j| states[j] == RowState::Free) {
            let sl = slack(nat, j, &x, &y);
            if sl >= e && mu[j].is_zero() {
                continue;
            }
            if sl.is_zero() && mu[j] <= -&e {
                inferred.push(j);
                continue;
            }
            violated = Some(j);
            break;
        }
        let split = match violated {
            Some(j) => Some(j),
            None => {
                let mut active: Vec<usize> =
                    (0..m).filter(|&j| states[j] == RowState::In).chain(inferred).collect();
                active.sort_unstable();
                if tried.insert(active.clone()) {
                    if let Some((x, supports)) = leaf_supports(nat, s, t, &active, opts, &mut budget)? {
                        let cert = Certificate::SupportFamily { active, supports };
                        return Ok(Decision::yes(scenario, x, cert, budget.used));
                    }
                }
                (0..m).find(|&j| states[j] == RowState::Free)
            }
        };
        if let Some(j) = split {
            let mut out = states.clone();
            out[j] = RowState::Out;
            let mut tight = states;
            tight[j] = RowState::In;
            stack.push(out);
            stack.push(tight);
        }
    }
    Ok(Decision::no(scenario, budget.used))
}

/// A support candidate: the pair and the combined multiplier over all rows.
type Candidate = (SupportPair, Vec<Rational>);

/// Candidate supports for one target row on the face `active`.
fn support_candidates(nat: &Instance, active: &[usize], s_row: &[Rational], budget: &mut Budget) -> Result<Vec<Candidate>> {
    let (m, n) = (nat.m(), nat.n());
    let act_rows = nat.a.select_rows(active);
    let basis: Vec<usize> = act_rows.independent_rows().into_iter().map(|p| active[p]).collect();
    let off: Vec<usize> = (0..m).filter(|j| active.binary_search(j).is_err()).collect();
    let mut out = Vec::new();
    let mut try_subset = |u: &[usize]| -> Result<bool> {
        budget.tick()?;
        let rows: Vec<usize> = u.iter().chain(&basis).copied().collect();
        let mt = nat.a.select_rows(&rows).transpose();
        let Ok(coeff) = mt.solve_unique(&RatVector(s_row.to_vec()), &[]) else { return Ok(false) };
        if coeff.iter().take(u.len()).any(|c| !c.is_positive()) {
            return Ok(false);
        }
        let mut w = vec![Rational::zero(); m];
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (p, &j) in rows.iter().enumerate() {
            w[j] = coeff[p].clone();
            match coeff[p].signum() {
                1 => plus.push(j),
                -1 => minus.push(j),
                _ => {}
            }
        }
        plus.sort_unstable();
        minus.sort_unstable();
        out.push((SupportPair { plus, minus }, w));
        Ok(true)
    };
    // Target rows spanned by the face rows are constant on the face; the
    // empty extra support is then optimal at every parameter.
    if try_subset(&[])? {
        return Ok(out);
    }
    let room = n - basis.len();
    for size in 1..=room.min(off.len()) {
        let mut picked = Vec::new();
        for_each_subset(off.len(), size, &mut |idx| {
            picked.clear();
            picked.extend(idx.iter().map(|&p| off[p]));
            try_subset(&picked).map(|_| ())
        })?;
    }
    Ok(out)
}

/// Searches support pairs for every target row on a fixed face, returning a
/// parameter and the supports when the strict system stays positive.
fn leaf_supports(
    nat: &Instance,
    s: &RatMatrix,
    t: &RatVector,
    active: &[usize],
    opts: &SolveOptions,
    budget: &mut Budget,
) -> Result<Option<(RatVector, Vec<SupportPair>)>> {
    let mut per_row = Vec::with_capacity(s.rows());
    for h in 0..s.rows() {
        let c = support_candidates(nat, active, s.row(h), budget)?;
        if c.is_empty() {
            return Ok(None);
        }
        per_row.push(c);
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(s.rows());
    dfs_supports(nat, t, active, &per_row, &mut chosen, opts, budget)
}

fn dfs_supports(
    nat: &Instance,
    t: &RatVector,
    active: &[usize],
    per_row: &[Vec<Candidate>],
    chosen: &mut Vec<usize>,
    opts: &SolveOptions,
    budget: &mut Budget,
) -> Result<Option<(RatVector, Vec<SupportPair>)>> {
    budget.tick()?;
    let mut fs = face_system(nat, &crate::certificate::states_from_active(nat.m(), active), true, None);
    for (h, &c) in chosen.iter().enumerate() {
        add_containment_row(&mut fs, nat, &per_row[h][c].1, &t[h]);
    }
    let e = fs.eps.expect("strict");
    let Some((_, p)) = fs.sys.maximize_positive(e, &opts.eps_cap) else { return Ok(None) };
    let h = chosen.len();
    if h == per_row.len() {
        let supports = chosen.iter().enumerate().map(|(h, &c)| per_row[h][c].0.clone()).collect();
        return Ok(Some((system::pick(&p, &fs.x), supports)));
    }
    for c in 0..per_row[h].len() {
        chosen.push(c);
        let found = dfs_supports(nat, t, active, per_row, chosen, opts, budget)?;
        chosen.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
