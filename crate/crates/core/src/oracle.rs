//! Targets known only through a weak outer membership oracle.
//!
//! An oracle answers, for a point `y` and radius `delta > 0`, either that `y`
//! lies outside the `delta`-neighbourhood of `Y` or that it lies inside the
//! `2 delta`-neighbourhood. The concrete oracles here are exact: they compute
//! the squared Euclidean distance and compare it against `delta^2`.
//!
//! Only the optimistic scenario admits certificates: a rounded point `yhat`
//! plus an active set, checked with one oracle call and one linear system.

use invlfp_linalg::{RatMatrix, RatVector, Rational, Sense};

use crate::certificate::{face_system, states_from_active, Verification, RejectReason};
use crate::error::{Error, Result, ValidationError};
use crate::model::Instance;
use crate::system::{Affine, Budget};

/// Default budget for the active-set enumeration in [`polytope_distance_sq`].
pub const DISTANCE_BUDGET: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    NotInOuter,
    InWiderOuter,
}

pub trait WeakOuterMembership {
    fn query(&self, y: &RatVector, delta: &Rational) -> Result<OracleAnswer>;
}

/// Exact description of the set behind an oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backing {
    Box { lower: RatVector, upper: RatVector },
    Ball { center: RatVector, radius: Rational },
    Polytope { s: RatMatrix, t: RatVector },
}

impl Backing {
    pub fn dim(&self) -> usize {
        match self {
            Backing::Box { lower, .. } => lower.len(),
            Backing::Ball { center, .. } => center.len(),
            Backing::Polytope { s, .. } => s.cols(),
        }
    }

    /// `S y <= t` for box and polytope backings.
    pub fn as_polyhedron(&self) -> Option<(RatMatrix, RatVector)> {
        match self {
            Backing::Box { lower, upper } => {
                let p = crate::model::ParamPolyhedron::boxed(&lower.0, &upper.0);
                Some((p.d_mat, p.d))
            }
            Backing::Polytope { s, t } => Some((s.clone(), t.clone())),
            Backing::Ball { .. } => None,
        }
    }

    /// Exact squared Euclidean distance from `y` to the set.
    pub fn distance_sq(&self, y: &RatVector) -> Result<Rational> {
        match self {
            Backing::Box { lower, upper } => Ok(y
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let gap = if v < &lower[i] {
                        &lower[i] - v
                    } else if v > &upper[i] {
                        v - &upper[i]
                    } else {
                        Rational::zero()
                    };
                    &gap * &gap
                })
                .sum()),
            Backing::Polytope { s, t } => polytope_distance_sq(s, t, y, DISTANCE_BUDGET),
            Backing::Ball { .. } => Err(Error::Unsupported("ball distances are irrational in general".into())),
        }
    }
}

impl WeakOuterMembership for Backing {
    fn query(&self, y: &RatVector, delta: &Rational) -> Result<OracleAnswer> {
        let outside = match self {
            Backing::Ball { center, radius } => {
                // dist = max(0, |y - c| - r) > delta  iff  |y - c|^2 > (r + delta)^2.
                let d2: Rational = y.iter().zip(center.iter()).map(|(a, b)| (a - b) * (a - b)).sum();
                let reach = radius + delta;
                d2 > &reach * &reach
            }
            _ => self.distance_sq(y)? > delta * delta,
        };
        Ok(if outside { OracleAnswer::NotInOuter } else { OracleAnswer::InWiderOuter })
    }
}

/// An oracle-backed target: the backing set, a bounding radius and the
/// neighbourhood width `delta` the certificate speaks about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTarget {
    pub backing: Backing,
    pub bound: Rational,
    pub delta: Rational,
}

impl OracleTarget {
    pub fn new(backing: Backing, bound: Rational) -> Self {
        OracleTarget { backing, bound, delta: Rational::new(1, 10) }
    }

    pub fn validate(&self, n: usize) -> Result<(), ValidationError> {
        let dim = self.backing.dim();
        if dim != n {
            return Err(ValidationError::DimensionMismatch(format!("oracle set lives in dimension {dim}, expected {n}")));
        }
        if !self.delta.is_positive() {
            return Err(ValidationError::InvalidTarget("delta must be positive".into()));
        }
        if self.bound.is_negative() {
            return Err(ValidationError::InvalidTarget("bounding radius must be nonnegative".into()));
        }
        match &self.backing {
            Backing::Box { lower, upper } => {
                if upper.len() != n {
                    return Err(ValidationError::DimensionMismatch("box bounds differ in length".into()));
                }
                if lower.iter().zip(upper.iter()).any(|(l, u)| l > u) {
                    return Err(ValidationError::InvalidTarget("box has lower > upper".into()));
                }
            }
            Backing::Ball { radius, .. } if radius.is_negative() => {
                return Err(ValidationError::InvalidTarget("ball radius must be nonnegative".into()));
            }
            Backing::Polytope { s, t } if s.rows() != t.len() => {
                return Err(ValidationError::DimensionMismatch("polytope S and t disagree".into()));
            }
            _ => {}
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCert {
    pub active: Vec<usize>,
    pub yhat: RatVector,
}

/// Exact squared distance from `y` to `{z : S z <= t}`.
///
/// Enumerates linearly independent row subsets by size and returns the first
/// projection that satisfies the KKT conditions; for a convex set the first
/// KKT point is the projection.
pub fn polytope_distance_sq(s: &RatMatrix, t: &RatVector, y: &RatVector, budget: u64) -> Result<Rational> {
    let (r, n) = (s.rows(), s.cols());
    if t.len() != r || y.len() != n {
        return Err(ValidationError::DimensionMismatch("S, t and y disagree".into()).into());
    }
    let mut feas = invlfp_linalg::LinearProgram::new(n);
    for h in 0..r {
        feas.add_constraint(s.row(h).iter().cloned().enumerate().collect(), Sense::Le, t[h].clone());
    }
    if !invlfp_linalg::check_feasible(&feas)?.is_feasible() {
        return Err(Error::EmptySet);
    }
    let mut meter = Budget::new(budget, "polytope distance");
    for size in 0..=r.min(n) {
        let mut found = None;
        for_each_subset(r, size, &mut |rows| {
            if found.is_some() {
                return Ok(());
            }
            meter.tick()?;
            found = projection_candidate(s, t, y, rows);
            Ok(())
        })?;
        if let Some(d) = found {
            return Ok(d);
        }
    }
    unreachable!("a nonempty polyhedron has a projection with an independent active set")
}

fn projection_candidate(s: &RatMatrix, t: &RatVector, y: &RatVector, rows: &[usize]) -> Option<Rational> {
    let si = s.select_rows(rows);
    if si.rank() < rows.len() {
        return None;
    }
    // z = y - S_I^T lam with S_I S_I^T lam = S_I y - t_I.
    let gram = si.mul_mat(&si.transpose());
    let sy = si.mul_vec(y);
    let rhs: RatVector = rows.iter().enumerate().map(|(p, &h)| &sy[p] - &t[h]).collect();
    let lam = gram.solve_unique(&rhs, &[]).ok()?;
    if lam.iter().any(Rational::is_negative) {
        return None;
    }
    let shift = si.transpose().mul_vec(&lam);
    let z: RatVector = y.iter().zip(shift.iter()).map(|(a, b)| a - b).collect();
    if (0..s.rows()).any(|h| invlfp_linalg::matrix::dot(s.row(h), &z.0) > t[h]) {
        return None;
    }
    Some(shift.iter().map(|v| v * v).sum())
}

/// Calls `f` on every `size`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset(
    n: usize,
    size: usize,
    f: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if size > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        f(&idx)?;
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
            if i == 0 {
                return Ok(());
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `ceil(sqrt(n))`, at least 1.
pub fn ceil_sqrt(n: usize) -> usize {
    let mut r = 1;
    while r * r < n {
        r += 1;
    }
    r
}

/// Per-coordinate tolerance of the verification box.
pub fn box_radius(delta: &Rational, n: usize) -> Rational {
    delta / &Rational::from_integer(2 * ceil_sqrt(n) as i64)
}

/// Grid spacing used when rounding an exact optimal point into a certificate.
pub fn grid_spacing(delta: &Rational, n: usize) -> Rational {
    delta / &Rational::from_integer(4 * ceil_sqrt(n) as i64)
}

/// Accepts iff the oracle places `yhat` in the wider neighbourhood at
/// `delta / 4` and some `x` in `X` has an optimal point within the box of
/// radius [`box_radius`] around `yhat` on the face `active`.
pub fn verify_oracle_certificate(nat: &Instance, cert: &OracleCert, target: &OracleTarget) -> Result<Verification> {
    let (m, n) = (nat.m(), nat.n());
    if cert.yhat.len() != n || cert.active.windows(2).any(|w| w[0] >= w[1]) || cert.active.iter().any(|&j| j >= m) {
        return Ok(Verification::Reject(RejectReason::Incompatible("malformed oracle certificate".into())));
    }
    let quarter = &target.delta / &Rational::from_integer(4);
    if target.backing.query(&cert.yhat, &quarter)? == OracleAnswer::NotInOuter {
        return Ok(Verification::Reject(RejectReason::OracleRejected));
    }
    let rho = box_radius(&target.delta, n);
    let mut fs = face_system(nat, &states_from_active(m, &cert.active), false, None);
    for (i, &v) in fs.y.clone().iter().enumerate() {
        fs.sys.constrain(Affine::var(v), Sense::Le, Affine::constant(&cert.yhat[i] + &rho));
        fs.sys.constrain(Affine::var(v), Sense::Ge, Affine::constant(&cert.yhat[i] - &rho));
    }
    Ok(match fs.sys.feasible_point() {
        Some(p) => Verification::Accept { witness_x: p.select(&fs.x) },
        None => Verification::Reject(RejectReason::SystemInfeasible),
    })
}

/// Builds a certificate at a parameter whose optimal set meets the backing
/// set; `None` when it does not.
pub fn certificate_at(nat: &Instance, target: &OracleTarget, x: &RatVector) -> Result<Option<OracleCert>> {
    let Some((s, t)) = target.backing.as_polyhedron() else {
        return Err(Error::Unsupported("ball-backed targets have no exact polyhedral description".into()));
    };
    let mut lp = nat.lp_at(x);
    let Some(opt) = invlfp_linalg::solve_lp(&lp)?.into_optimum() else {
        return Ok(None);
    };
    let obj: Vec<(usize, Rational)> =
        lp.objective.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j, c.clone())).collect();
    lp.add_constraint(obj, Sense::Le, opt.value);
    for h in 0..s.rows() {
        lp.add_constraint(s.row(h).iter().cloned().enumerate().collect(), Sense::Le, t[h].clone());
    }
    lp.objective.iter_mut().for_each(|c| *c = Rational::zero());
    let Some(point) = invlfp_linalg::solve_lp(&lp)?.into_optimum() else {
        return Ok(None);
    };
    let y = point.primal;
    let rhs = nat.rhs_at(x);
    let ay = nat.a.mul_vec(&y);
    let active = (0..nat.m()).filter(|&j| ay[j] == rhs[j]).collect();
    let g = grid_spacing(&target.delta, nat.n());
    let yhat = y.iter().map(|v| (v / &g).round_half_up() * &g).collect();
    Ok(Some(OracleCert { active, yhat }))
}
