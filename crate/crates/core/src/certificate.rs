//! Certificates, their verification, and exact checks at a fixed parameter.
//!
//! Every yes-decision ships a [`Certificate`]. [`verify_certificate`] re-checks
//! it with one rank test and one LP (or one LP per support), searching over
//! `x` again, so a certificate never has to carry a rational parameter.
//! [`evaluate_fixed_parameter`] is the independent referee: once `x` is fixed,
//! both scenarios reduce to plain LPs.

use invlfp_linalg::{Bounds, LpOutcome, RatMatrix, RatVector, Rational, Sense};

use crate::error::{Error, Result};
use crate::model::{validate, Form, Instance, Scenario, SolveOptions, TargetSet, Verdict};
use crate::oracle::{self, Backing, OracleCert};
use crate::poly::compute_nonessential_part;
use crate::system::{self, Affine, Sys};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Active rows (of the natural form, after conversion if needed).
    ActiveSet { active: Vec<usize> },
    /// Active rows plus one support pair per target row.
    SupportFamily { active: Vec<usize>, supports: Vec<SupportPair> },
    /// Coordinates that vanish in the basic solution; must contain the non-basis.
    BasisZeroSet { zero: Vec<usize> },
    Oracle(OracleCert),
}

/// Positive supports of `s^(h,1)` (any row) and `s^(h,2)` (active rows only).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportPair {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectReason {
    Incompatible(String),
    RankDeficient { rank: usize, needed: usize },
    InvalidSupport { row: usize, why: String },
    SystemInfeasible,
    NotStrict,
    OracleRejected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Accept { witness_x: RatVector },
    Reject(RejectReason),
}

impl Verification {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verification::Accept { .. })
    }
}

fn incompatible(why: impl Into<String>) -> Verification {
    Verification::Reject(RejectReason::Incompatible(why.into()))
}

/// Per-row role in a face system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum RowState {
    /// Row holds with equality; its multiplier may be (strictly) negative.
    In,
    /// Multiplier is zero; the row is (strictly) slack in strict mode.
    Out,
    /// Undecided: plain feasibility and sign constraints only.
    Free,
}

pub(crate) struct FaceSys {
    pub sys: Sys,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub mu: Vec<usize>,
    pub eps: Option<usize>,
}

/// The natural-form optimality system over `(x, y, mu[, eps])`:
/// primal rows, `A^T mu = Cx + c`, `mu <= 0`, the per-row roles, `x in X`,
/// and optionally `S y <= t`. In strict mode the roles carry an `eps` margin.
pub(crate) fn face_system(
    nat: &Instance,
    states: &[RowState],
    strict: bool,
    target: Option<(&RatMatrix, &RatVector)>,
) -> FaceSys {
    debug_assert_eq!(nat.form, Form::Natural);
    let (m, n) = (nat.m(), nat.n());
    let mut sys = Sys::new();
    let x = system::param_vars(&mut sys, nat);
    let y = sys.vars(n, Bounds::free());
    let mu = sys.vars(m, Bounds::nonpos());
    let eps = strict.then(|| sys.var(Bounds::free()));
    for j in 0..m {
        let lhs = system::row_expr(nat, j, &y);
        let rhs = system::rhs_expr(nat, j, &x);
        match (states[j], eps) {
            (RowState::In, e) => {
                sys.constrain(lhs, Sense::Eq, rhs);
                if let Some(e) = e {
                    sys.constrain(Affine::var(mu[j]).plus_var(e, &Rational::one()), Sense::Le, Affine::default());
                }
            }
            (RowState::Out, Some(e)) => {
                sys.constrain(lhs.plus_var(e, &Rational::one()), Sense::Le, rhs);
                sys.fix(mu[j], Rational::zero());
            }
            (RowState::Out, None) => {
                sys.constrain(lhs, Sense::Le, rhs);
                sys.fix(mu[j], Rational::zero());
            }
            (RowState::Free, _) => sys.constrain(lhs, Sense::Le, rhs),
        }
    }
    for j in 0..n {
        sys.constrain(system::dual_expr(nat, j, &mu), Sense::Eq, system::cost_expr(nat, j, &x));
    }
    if let Some((s, t)) = target {
        for h in 0..s.rows() {
            let mut e = Affine::default();
            for (j, &v) in y.iter().enumerate() {
                e.add_term(v, &s[(h, j)]);
            }
            sys.constrain(e, Sense::Le, Affine::constant(t[h].clone()));
        }
    }
    FaceSys { sys, x, y, mu, eps }
}

/// `sum_j w_j (Bx+b)_j <= t_h` for a fixed combined multiplier `w = s1 - s2`.
pub(crate) fn add_containment_row(fs: &mut FaceSys, nat: &Instance, w: &[Rational], t_h: &Rational) {
    let mut e = Affine::default();
    for (j, wj) in w.iter().enumerate() {
        if !wj.is_zero() {
            e.add_affine(&system::rhs_expr(nat, j, &fs.x), wj);
        }
    }
    fs.sys.constrain(e, Sense::Le, Affine::constant(t_h.clone()));
}

pub(crate) fn states_from_active(m: usize, active: &[usize]) -> Vec<RowState> {
    let mut s = vec![RowState::Out; m];
    for &j in active {
        s[j] = RowState::In;
    }
    s
}

fn sorted_unique_in_range(idx: &[usize], bound: usize) -> bool {
    idx.windows(2).all(|w| w[0] < w[1]) && idx.iter().all(|&j| j < bound)
}

/// Solves the support-determined system for `(s1, s2)` and returns the
/// combined multiplier `s1 - s2` over all rows.
pub(crate) fn solve_support(
    a: &RatMatrix,
    active: &[usize],
    s_row: &[Rational],
    pair: &SupportPair,
) -> std::result::Result<Vec<Rational>, String> {
    let m = a.rows();
    if !sorted_unique_in_range(&pair.plus, m) || !sorted_unique_in_range(&pair.minus, m) {
        return Err("support indices must be sorted, distinct and in range".into());
    }
    if pair.minus.iter().any(|j| active.binary_search(j).is_err()) {
        return Err("second support must lie inside the active set".into());
    }
    if pair.plus.iter().any(|j| pair.minus.binary_search(j).is_ok()) {
        return Err("supports overlap".into());
    }
    let rows: Vec<usize> = pair.plus.iter().chain(&pair.minus).copied().collect();
    let sel = a.select_rows(&rows);
    if sel.rank() < rows.len() {
        return Err("selected rows are linearly dependent".into());
    }
    // Columns are A_j^T for the first support and -A_j^T for the second.
    let np = pair.plus.len();
    let mut mt = sel.transpose();
    for r in 0..mt.rows() {
        for c in np..rows.len() {
            mt[(r, c)] = -&mt[(r, c)];
        }
    }
    let coeff = mt
        .solve_unique(&RatVector(s_row.to_vec()), &[])
        .map_err(|e| format!("support system has no unique solution: {e}"))?;
    if coeff.iter().any(Rational::is_negative) {
        return Err("support solution has a negative entry".into());
    }
    let mut w = vec![Rational::zero(); m];
    for (p, &j) in rows.iter().enumerate() {
        w[j] = if p < np { coeff[p].clone() } else { -&coeff[p] };
    }
    Ok(w)
}

fn rank_of_rows(a: &RatMatrix, rows: &[usize]) -> usize {
    a.select_rows(rows).rank()
}

/// Checks a certificate against an instance, target and scenario.
pub fn verify_certificate(
    inst: &Instance,
    target: &TargetSet,
    scenario: Scenario,
    cert: &Certificate,
    opts: &SolveOptions,
) -> Result<Verification> {
    validate(inst, target)?;
    let nat = inst.to_natural();
    let m = nat.m();
    use Scenario::*;
    Ok(match (target, scenario, cert) {
        (TargetSet::Singleton { ybar }, _, Certificate::ActiveSet { active }) => {
            if !sorted_unique_in_range(active, m) {
                return Ok(incompatible("active indices must be sorted, distinct and in range"));
            }
            let strict = scenario == Pessimistic;
            if strict {
                let r = rank_of_rows(&nat.a, active);
                if r < nat.n() {
                    return Ok(Verification::Reject(RejectReason::RankDeficient { rank: r, needed: nat.n() }));
                }
            }
            let mut fs = face_system(&nat, &states_from_active(m, active), strict, None);
            for (j, v) in fs.y.clone().into_iter().zip(ybar.iter()) {
                fs.sys.fix(j, v.clone());
            }
            solve_face(fs, &opts.eps_cap)
        }
        (TargetSet::Polyhedron { .. } | TargetSet::PartialFix { .. }, Optimistic, Certificate::ActiveSet { active }) => {
            if !sorted_unique_in_range(active, m) {
                return Ok(incompatible("active indices must be sorted, distinct and in range"));
            }
            let (s, t) = target.as_polyhedron(nat.n()).expect("polyhedral target");
            let fs = face_system(&nat, &states_from_active(m, active), false, Some((&s, &t)));
            solve_face(fs, &opts.eps_cap)
        }
        (
            TargetSet::Polyhedron { .. } | TargetSet::PartialFix { .. },
            Pessimistic,
            Certificate::SupportFamily { active, supports },
        ) => {
            if !sorted_unique_in_range(active, m) {
                return Ok(incompatible("active indices must be sorted, distinct and in range"));
            }
            let (s, t) = target.as_polyhedron(nat.n()).expect("polyhedral target");
            if supports.len() != s.rows() {
                return Ok(incompatible(format!("{} support pairs for {} target rows", supports.len(), s.rows())));
            }
            let mut ws = Vec::with_capacity(s.rows());
            for (h, pair) in supports.iter().enumerate() {
                match solve_support(&nat.a, active, s.row(h), pair) {
                    Ok(w) => ws.push(w),
                    Err(why) => return Ok(Verification::Reject(RejectReason::InvalidSupport { row: h, why })),
                }
            }
            let mut fs = face_system(&nat, &states_from_active(m, active), true, None);
            for (h, w) in ws.iter().enumerate() {
                add_containment_row(&mut fs, &nat, w, &t[h]);
            }
            solve_face(fs, &opts.eps_cap)
        }
        (TargetSet::Basis { basis }, Optimistic, Certificate::BasisZeroSet { zero }) => {
            let n = inst.n();
            if !sorted_unique_in_range(zero, n) {
                return Ok(incompatible("zero-set indices must be sorted, distinct and in range"));
            }
            if let Some(j) = (0..n).find(|j| !basis.contains(j) && zero.binary_search(j).is_err()) {
                return Ok(incompatible(format!("zero set misses non-basic index {}", j + 1)));
            }
            let states: Vec<RowState> =
                (0..n).map(|i| if zero.binary_search(&i).is_ok() { RowState::In } else { RowState::Out }).collect();
            let bs = basis_system(inst, &states);
            match bs.sys.feasible_point() {
                Some(p) => Verification::Accept { witness_x: p.select(&bs.x) },
                None => Verification::Reject(RejectReason::SystemInfeasible),
            }
        }
        (TargetSet::Basis { basis }, Pessimistic, Certificate::ActiveSet { active }) => {
            if !sorted_unique_in_range(active, m) {
                return Ok(incompatible("active indices must be sorted, distinct and in range"));
            }
            let (sm, n) = (inst.m(), inst.n());
            let b0 = compute_nonessential_part(&inst.a, basis)?;
            // Row 2m+i of the natural form is -y_i <= 0.
            let sign_row = |i: usize| 2 * sm + i;
            if let Some(i) = (0..n).find(|i| !basis.contains(i) && active.binary_search(&sign_row(*i)).is_err()) {
                return Ok(incompatible(format!("non-basic coordinate {} is not active", i + 1)));
            }
            if let Some(i) = b0.iter().find(|&&i| active.binary_search(&sign_row(i)).is_ok()) {
                return Ok(incompatible(format!("non-essential coordinate {} may not vanish", i + 1)));
            }
            let r = rank_of_rows(&nat.a, active);
            if r < n {
                return Ok(Verification::Reject(RejectReason::RankDeficient { rank: r, needed: n }));
            }
            let fs = face_system(&nat, &states_from_active(m, active), true, None);
            solve_face(fs, &opts.eps_cap)
        }
        (TargetSet::Oracle(o), Optimistic, Certificate::Oracle(oc)) => oracle::verify_oracle_certificate(&nat, oc, o)?,
        (TargetSet::Oracle(_), Pessimistic, _) => {
            incompatible("pessimistic oracle targets admit no verifiable certificates")
        }
        (t, s, c) => incompatible(format!(
            "{} certificate does not fit a {} target in the {:?} scenario",
            cert_kind(c),
            t.kind(),
            s
        )),
    })
}

pub fn cert_kind(c: &Certificate) -> &'static str {
    match c {
        Certificate::ActiveSet { .. } => "active-set",
        Certificate::SupportFamily { .. } => "support-family",
        Certificate::BasisZeroSet { .. } => "basis-zero-set",
        Certificate::Oracle(_) => "oracle",
    }
}

fn solve_face(mut fs: FaceSys, cap: &Rational) -> Verification {
    match fs.eps {
        Some(e) => match fs.sys.maximize_positive(e, cap) {
            Some((_, p)) => Verification::Accept { witness_x: p.select(&fs.x) },
            None => Verification::Reject(RejectReason::NotStrict),
        },
        None => match fs.sys.feasible_point() {
            Some(p) => Verification::Accept { witness_x: p.select(&fs.x) },
            None => Verification::Reject(RejectReason::SystemInfeasible),
        },
    }
}

pub(crate) struct BasisSys {
    pub sys: Sys,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub mu: Vec<usize>,
}

/// Standard-form system over `(x, y, mu)`: `Ay = Bx+b`, `y >= 0`,
/// `A^T mu <= Cx+c`; `In` columns force `y_i = 0`, `Out` columns force
/// `(A^T mu)_i = (Cx+c)_i`.
pub(crate) fn basis_system(inst: &Instance, states: &[RowState]) -> BasisSys {
    let (m, n) = (inst.m(), inst.n());
    let mut sys = Sys::new();
    let x = system::param_vars(&mut sys, inst);
    let y = sys.vars(n, Bounds::nonneg());
    let mu = sys.vars(m, Bounds::free());
    for i in 0..m {
        sys.constrain(system::row_expr(inst, i, &y), Sense::Eq, system::rhs_expr(inst, i, &x));
    }
    for j in 0..n {
        let sense = if states[j] == RowState::Out { Sense::Eq } else { Sense::Le };
        sys.constrain(system::dual_expr(inst, j, &mu), sense, system::cost_expr(inst, j, &x));
        if states[j] == RowState::In {
            sys.fix(y[j], Rational::zero());
        }
    }
    BasisSys { sys, x, y, mu }
}

/// The basic solution of `basis` at right-hand side `rhs`.
pub fn basic_solution(a: &RatMatrix, basis: &[usize], rhs: &RatVector) -> Result<RatVector> {
    let yb = a.select_cols(basis).solve_unique(rhs, &[])?;
    let mut y = RatVector::zeros(a.cols());
    for (p, &j) in basis.iter().enumerate() {
        y[j] = yb[p].clone();
    }
    Ok(y)
}

fn check_param(inst: &Instance, x: &RatVector) -> Result<()> {
    if x.len() != inst.k() {
        return Err(crate::error::ValidationError::DimensionMismatch(format!(
            "x has length {}, expected {}",
            x.len(),
            inst.k()
        ))
        .into());
    }
    match inst.x_set.violated_row(x) {
        Some(r) => Err(Error::XViolation(r)),
        None => Ok(()),
    }
}

/// Decides the scenario condition exactly at a fixed parameter.
pub fn evaluate_fixed_parameter(
    inst: &Instance,
    target: &TargetSet,
    scenario: Scenario,
    x: &RatVector,
) -> Result<Verdict> {
    validate(inst, target)?;
    check_param(inst, x)?;
    let lp = inst.lp_at(x);
    let Some(opt) = invlfp_linalg::solve_lp(&lp)?.into_optimum() else {
        return Ok(Verdict::No);
    };
    let vstar = opt.value;
    let verdict = |b: bool| if b { Verdict::Yes } else { Verdict::No };

    if let TargetSet::Basis { basis } = target {
        let y = basic_solution(&inst.a, basis, &inst.rhs_at(x))?;
        let cost = inst.cost_at(x);
        if y.iter().any(Rational::is_negative) || cost.dot(&y) != vstar {
            return Ok(Verdict::No);
        }
        if scenario == Scenario::Optimistic {
            return Ok(Verdict::Yes);
        }
        let b0 = compute_nonessential_part(&inst.a, basis)?;
        if b0.iter().any(|&i| !y[i].is_positive()) {
            return Ok(Verdict::No);
        }
        return Ok(verdict(strictly_complementary_standard(inst, &y, &cost)));
    }

    let (s, t) = match target {
        TargetSet::Oracle(o) => match &o.backing {
            Backing::Ball { .. } => {
                return Err(Error::Unsupported("ball-backed targets have no exact polyhedral description".into()))
            }
            b => b.as_polyhedron().expect("box and polytope backings are polyhedra"),
        },
        other => other.as_polyhedron(inst.n()).expect("polyhedral target"),
    };
    let mut face = lp.clone();
    face.add_constraint(
        lp.objective.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j, c.clone())).collect(),
        Sense::Le,
        vstar,
    );
    match scenario {
        Scenario::Optimistic => {
            for h in 0..s.rows() {
                face.add_constraint(dense_terms(s.row(h)), Sense::Le, t[h].clone());
            }
            Ok(verdict(invlfp_linalg::check_feasible(&face)?.is_feasible()))
        }
        Scenario::Pessimistic => {
            for h in 0..s.rows() {
                face.objective = s.row(h).iter().map(|v| -v).collect();
                match invlfp_linalg::solve_lp(&face)? {
                    LpOutcome::Optimal(o) if -&o.value <= t[h] => {}
                    _ => return Ok(Verdict::No),
                }
            }
            Ok(Verdict::Yes)
        }
    }
}

fn dense_terms(row: &[Rational]) -> Vec<(usize, Rational)> {
    row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()
}

/// Strict complementarity for a standard-form vertex `y` at fixed costs.
fn strictly_complementary_standard(inst: &Instance, y: &RatVector, cost: &RatVector) -> bool {
    let (m, n) = (inst.m(), inst.n());
    let mut sys = Sys::new();
    let mu = sys.vars(m, Bounds::free());
    let eps = sys.var(Bounds::free());
    for j in 0..n {
        let lhs = system::dual_expr(inst, j, &mu);
        let rhs = Affine::constant(cost[j].clone());
        if y[j].is_positive() {
            sys.constrain(lhs, Sense::Eq, rhs);
        } else {
            sys.constrain(lhs.plus_var(eps, &Rational::one()), Sense::Le, rhs);
        }
    }
    sys.maximize_positive(eps, &Rational::one()).is_some()
}

/// Whether the face cut out by `active` is the whole optimal set of
/// `min cost^T y s.t. A y <= rhs`.
pub fn check_unique_optimal_face(
    a: &RatMatrix,
    rhs: &RatVector,
    cost: &RatVector,
    active: &[usize],
    opts: &SolveOptions,
) -> Result<bool> {
    let (m, n) = (a.rows(), a.cols());
    if rhs.len() != m || cost.len() != n {
        return Err(crate::error::ValidationError::DimensionMismatch("A, rhs and cost disagree".into()).into());
    }
    if !sorted_unique_in_range(active, m) {
        return Err(crate::error::ValidationError::InvalidTarget("active set out of range".into()).into());
    }
    let mut face = invlfp_linalg::LinearProgram::new(n);
    for j in 0..m {
        let sense = if active.binary_search(&j).is_ok() { Sense::Eq } else { Sense::Le };
        face.add_constraint(dense_terms(a.row(j)), sense, rhs[j].clone());
    }
    if !invlfp_linalg::check_feasible(&face)?.is_feasible() {
        return Err(Error::EmptyFace);
    }
    let mut sys = Sys::new();
    let mu = sys.vars(m, Bounds::nonpos());
    let eps = sys.var(Bounds::free());
    for j in 0..n {
        let mut e = Affine::default();
        for i in 0..m {
            e.add_term(mu[i], &a[(i, j)]);
        }
        sys.constrain(e, Sense::Eq, Affine::constant(cost[j].clone()));
    }
    for j in 0..m {
        if active.binary_search(&j).is_ok() {
            sys.constrain(Affine::var(mu[j]).plus_var(eps, &Rational::one()), Sense::Le, Affine::default());
        } else {
            sys.fix(mu[j], Rational::zero());
        }
    }
    Ok(sys.maximize_positive(eps, &opts.eps_cap).is_some())
}

/// Active rows of the optimal face of the natural-form LP at `x`, or `None`
/// when `LP_x` has no optimum.
pub(crate) fn optimal_face_active_set(nat: &Instance, x: &RatVector) -> Result<Option<Vec<usize>>> {
    let lp = nat.lp_at(x);
    let Some(opt) = invlfp_linalg::solve_lp(&lp)?.into_optimum() else {
        return Ok(None);
    };
    let rhs = nat.rhs_at(x);
    let (m, n) = (nat.m(), nat.n());
    // Homogenized relative-interior search: every non-implicit row reaches tau = 1.
    let mut sys = Sys::new();
    let z = sys.vars(n, Bounds::free());
    let lam = sys.var(Bounds { lower: Some(Rational::one()), upper: None });
    let tau = sys.vars(m, Bounds::range(Rational::zero(), Rational::one()));
    for j in 0..m {
        let lhs = system::row_expr(nat, j, &z).plus_var(tau[j], &Rational::one());
        sys.constrain(lhs, Sense::Le, Affine::default().plus_var(lam, &rhs[j]));
    }
    let mut obj = Affine::default();
    for (j, c) in lp.objective.iter().enumerate() {
        obj.add_term(z[j], c);
    }
    sys.constrain(obj, Sense::Le, Affine::default().plus_var(lam, &opt.value));
    for &tj in &tau {
        sys.set_objective(tj, -Rational::one());
    }
    let sol = sys.solve().into_optimum().expect("the optimal face is nonempty and tau is bounded");
    Ok(Some((0..m).filter(|&j| sol.primal[tau[j]].is_zero()).collect()))
}

/// For each target row, supports of an optimal conic combination proving
/// `max S_h y <= t_h` over the face `active` at fixed `x`.
pub(crate) fn supports_at(
    nat: &Instance,
    x: &RatVector,
    active: &[usize],
    s: &RatMatrix,
) -> Result<Option<Vec<SupportPair>>> {
    let rhs = nat.rhs_at(x);
    let (m, n) = (nat.m(), nat.n());
    let act_rows = nat.a.select_rows(active);
    let basis: Vec<usize> = act_rows.independent_rows().into_iter().map(|p| active[p]).collect();
    let off: Vec<usize> = (0..m).filter(|j| active.binary_search(j).is_err()).collect();
    let mut out = Vec::with_capacity(s.rows());
    for h in 0..s.rows() {
        let mut sys = Sys::new();
        let w = sys.vars(off.len(), Bounds::nonneg());
        let v = sys.vars(basis.len(), Bounds::free());
        for col in 0..n {
            let mut e = Affine::default();
            for (p, &j) in off.iter().enumerate() {
                e.add_term(w[p], &nat.a[(j, col)]);
            }
            for (p, &j) in basis.iter().enumerate() {
                e.add_term(v[p], &nat.a[(j, col)]);
            }
            sys.constrain(e, Sense::Eq, Affine::constant(s[(h, col)].clone()));
        }
        for (p, &j) in off.iter().enumerate() {
            sys.set_objective(w[p], rhs[j].clone());
        }
        for (p, &j) in basis.iter().enumerate() {
            sys.set_objective(v[p], rhs[j].clone());
        }
        let Some(o) = sys.solve().into_optimum() else {
            return Ok(None);
        };
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (p, &j) in off.iter().enumerate() {
            if o.primal[w[p]].is_positive() {
                plus.push(j);
            }
        }
        for (p, &j) in basis.iter().enumerate() {
            match o.primal[v[p]].signum() {
                1 => plus.push(j),
                -1 => minus.push(j),
                _ => {}
            }
        }
        plus.sort_unstable();
        minus.sort_unstable();
        out.push(SupportPair { plus, minus });
    }
    Ok(Some(out))
}

/// Builds the certificate for a parameter already known to be a witness.
pub fn certificate_at(
    inst: &Instance,
    target: &TargetSet,
    scenario: Scenario,
    x: &RatVector,
) -> Result<Certificate> {
    validate(inst, target)?;
    check_param(inst, x)?;
    let nat = inst.to_natural();
    let no_witness = || Error::Unsupported("parameter is not a witness for this target".into());
    match target {
        TargetSet::Singleton { ybar } => {
            let rhs = nat.rhs_at(x);
            let ay = nat.a.mul_vec(ybar);
            Ok(Certificate::ActiveSet { active: (0..nat.m()).filter(|&j| ay[j] == rhs[j]).collect() })
        }
        TargetSet::Basis { basis } => {
            let y = basic_solution(&inst.a, basis, &inst.rhs_at(x))?;
            match scenario {
                Scenario::Optimistic => {
                    Ok(Certificate::BasisZeroSet { zero: (0..inst.n()).filter(|&i| y[i].is_zero()).collect() })
                }
                Scenario::Pessimistic => {
                    let rhs = nat.rhs_at(x);
                    let ay = nat.a.mul_vec(&y);
                    Ok(Certificate::ActiveSet { active: (0..nat.m()).filter(|&j| ay[j] == rhs[j]).collect() })
                }
            }
        }
        TargetSet::Oracle(o) => {
            if scenario == Scenario::Pessimistic {
                return Err(Error::Unsupported("pessimistic oracle targets admit no verifiable certificates".into()));
            }
            oracle::certificate_at(&nat, o, x)?.ok_or_else(no_witness).map(Certificate::Oracle)
        }
        TargetSet::Polyhedron { .. } | TargetSet::PartialFix { .. } => {
            let active = optimal_face_active_set(&nat, x)?.ok_or_else(no_witness)?;
            match scenario {
                Scenario::Optimistic => Ok(Certificate::ActiveSet { active }),
                Scenario::Pessimistic => {
                    let (s, _) = target.as_polyhedron(nat.n()).expect("polyhedral target");
                    let supports = supports_at(&nat, x, &active, &s)?.ok_or_else(no_witness)?;
                    Ok(Certificate::SupportFamily { active, supports })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ParamPolyhedron;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn i1_natural() -> Instance {
        crate::model::convert_standard_to_natural(&Instance {
            form: Form::Standard,
            a: RatMatrix::from_ints(&[&[1, 1]], 2),
            b_mat: RatMatrix::zeros(1, 1),
            b: RatVector::from_ints(&[1]),
            c_mat: RatMatrix::from_ints(&[&[1], &[-1]], 1),
            c: RatVector::from_ints(&[0, 0]),
            x_set: ParamPolyhedron::boxed(&[q(-1)], &[q(1)]),
        })
    }

    #[test]
    fn unique_face_examples() {
        // Unit square rows: y1 <= 1, y2 <= 1, -y1 <= 0, -y2 <= 0.
        let a = RatMatrix::from_ints(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]], 2);
        let rhs = RatVector::from_ints(&[1, 1, 0, 0]);
        let cost = RatVector::from_ints(&[0, -1]);
        let o = SolveOptions::default();
        assert!(check_unique_optimal_face(&a, &rhs, &cost, &[1], &o).unwrap());
        assert!(!check_unique_optimal_face(&a, &rhs, &cost, &[0, 1], &o).unwrap());
        assert!(check_unique_optimal_face(&a, &rhs, &RatVector::from_ints(&[0, 0]), &[], &o).unwrap());
        assert_eq!(check_unique_optimal_face(&a, &rhs, &cost, &[0, 2], &o), Err(Error::EmptyFace));
    }

    #[test]
    fn face_active_set_of_segment() {
        let nat = i1_natural();
        // x = 0: the whole segment is optimal, only the two equality rows are implicit.
        assert_eq!(optimal_face_active_set(&nat, &RatVector::from_ints(&[0])).unwrap(), Some(vec![0, 1]));
        // x = -1: the vertex (1, 0).
        assert_eq!(optimal_face_active_set(&nat, &RatVector::from_ints(&[-1])).unwrap(), Some(vec![0, 1, 3]));
    }

    #[test]
    fn support_solution_signs() {
        let a = RatMatrix::from_ints(&[&[1, 0], &[0, 1]], 2);
        let pair = SupportPair { plus: vec![0], minus: vec![1] };
        let w = solve_support(&a, &[1], &[q(2), q(-3)], &pair).unwrap();
        assert_eq!(w, vec![q(2), q(-3)]);
        let bad = SupportPair { plus: vec![0, 1], minus: vec![] };
        assert!(solve_support(&a, &[], &[q(2), q(-3)], &bad).is_err());
    }
}
