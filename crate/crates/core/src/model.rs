//! Parametric LP instances, target sets and decisions.
//!
//! An [`Instance`] describes the family of linear programs
//!
//! * natural form: `min (Cx+c)^T y  s.t.  Ay <= Bx+b`
//! * standard form: `min (Cx+c)^T y  s.t.  Ay = Bx+b, y >= 0`
//!
//! indexed by parameters `x` in the polyhedron `X = {x : Dx <= d}`.
//! All index sets are 0-based in memory; the JSON layer converts to 1-based.

use invlfp_linalg::{Bounds, LinearProgram, RatMatrix, RatVector, Rational, Sense};
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::ValidationError;
use crate::oracle::OracleTarget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Natural,
    Standard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    Optimistic,
    Pessimistic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

/// `X = {x : D x <= d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPolyhedron {
    pub d_mat: RatMatrix,
    pub d: RatVector,
}

impl ParamPolyhedron {
    /// All of `R^k`.
    pub fn whole(k: usize) -> Self {
        ParamPolyhedron { d_mat: RatMatrix::zeros(0, k), d: RatVector::default() }
    }

    /// The box `lower <= x <= upper`.
    pub fn boxed(lower: &[Rational], upper: &[Rational]) -> Self {
        let k = lower.len();
        let mut rows = Vec::with_capacity(2 * k);
        let mut rhs = Vec::with_capacity(2 * k);
        for i in 0..k {
            let mut r = vec![Rational::zero(); k];
            r[i] = Rational::one();
            rows.push(r.clone());
            rhs.push(upper[i].clone());
            r[i] = -Rational::one();
            rows.push(r);
            rhs.push(-&lower[i]);
        }
        ParamPolyhedron { d_mat: RatMatrix::from_rows(rows, k), d: RatVector(rhs) }
    }

    pub fn k(&self) -> usize {
        self.d_mat.cols()
    }

    /// Index of the first violated row, if any.
    pub fn violated_row(&self, x: &RatVector) -> Option<usize> {
        (0..self.d_mat.rows()).find(|&i| invlfp_linalg::matrix::dot(self.d_mat.row(i), &x.0) > self.d[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub form: Form,
    pub a: RatMatrix,
    pub b_mat: RatMatrix,
    pub b: RatVector,
    pub c_mat: RatMatrix,
    pub c: RatVector,
    pub x_set: ParamPolyhedron,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetSet {
    Singleton { ybar: RatVector },
    /// Column indices of a basis of `A` (standard form only).
    Basis { basis: Vec<usize> },
    /// Fixes the first `ybar.len()` coordinates; the remaining ones are free.
    PartialFix { ybar: RatVector },
    /// `Y = {y : S y <= t}`.
    Polyhedron { s: RatMatrix, t: RatVector },
    Oracle(OracleTarget),
}

impl TargetSet {
    pub fn kind(&self) -> &'static str {
        match self {
            TargetSet::Singleton { .. } => "singleton",
            TargetSet::Basis { .. } => "basis",
            TargetSet::PartialFix { .. } => "partial",
            TargetSet::Polyhedron { .. } => "polyhedron",
            TargetSet::Oracle(_) => "oracle",
        }
    }

    /// Inequality description `S y <= t` for targets that are polyhedra.
    /// Equalities become row pairs. `None` for basis and oracle targets.
    pub fn as_polyhedron(&self, n: usize) -> Option<(RatMatrix, RatVector)> {
        let fix = |vals: &RatVector| {
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for (i, v) in vals.iter().enumerate() {
                let mut r = vec![Rational::zero(); n];
                r[i] = Rational::one();
                rows.push(r.clone());
                rhs.push(v.clone());
                r[i] = -Rational::one();
                rows.push(r);
                rhs.push(-v);
            }
            (RatMatrix::from_rows(rows, n), RatVector(rhs))
        };
        match self {
            TargetSet::Singleton { ybar } | TargetSet::PartialFix { ybar } => Some(fix(ybar)),
            TargetSet::Polyhedron { s, t } => Some((s.clone(), t.clone())),
            TargetSet::Basis { .. } | TargetSet::Oracle(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub scenario: Scenario,
    pub witness_x: Option<RatVector>,
    pub certificate: Option<Certificate>,
    /// Linear programs and rank tests evaluated while deciding.
    pub systems_examined: u64,
}

impl Decision {
    pub fn no(scenario: Scenario, systems_examined: u64) -> Self {
        Decision { verdict: Verdict::No, scenario, witness_x: None, certificate: None, systems_examined }
    }

    pub fn yes(scenario: Scenario, x: RatVector, cert: Certificate, systems_examined: u64) -> Self {
        Decision { verdict: Verdict::Yes, scenario, witness_x: Some(x), certificate: Some(cert), systems_examined }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Upper cap on every epsilon in strictness LPs. Only the sign of the
    /// optimum matters, so any positive cap gives the same verdicts.
    pub eps_cap: Rational,
    /// Maximum number of candidate systems an exponential search may solve.
    pub budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { eps_cap: Rational::one(), budget: 1 << 20 }
    }
}

impl Instance {
    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn k(&self) -> usize {
        self.x_set.k()
    }

    /// `B x + b`.
    pub fn rhs_at(&self, x: &RatVector) -> RatVector {
        let bx = self.b_mat.mul_vec(x);
        bx.iter().zip(&self.b).map(|(u, v)| u + v).collect()
    }

    /// `C x + c`.
    pub fn cost_at(&self, x: &RatVector) -> RatVector {
        let cx = self.c_mat.mul_vec(x);
        cx.iter().zip(&self.c).map(|(u, v)| u + v).collect()
    }

    /// The lower-level LP at a fixed parameter.
    pub fn lp_at(&self, x: &RatVector) -> LinearProgram {
        let n = self.n();
        let mut lp = LinearProgram::new(n);
        lp.objective = self.cost_at(x).0;
        let sense = match self.form {
            Form::Natural => Sense::Le,
            Form::Standard => {
                lp.bounds = vec![Bounds::nonneg(); n];
                Sense::Eq
            }
        };
        let rhs = self.rhs_at(x);
        for i in 0..self.m() {
            let coeffs = (0..n).filter(|&j| !self.a[(i, j)].is_zero()).map(|j| (j, self.a[(i, j)].clone())).collect();
            lp.add_constraint(coeffs, sense, rhs[i].clone());
        }
        lp
    }

    pub fn contains_param(&self, x: &RatVector) -> bool {
        x.len() == self.k() && self.x_set.violated_row(x).is_none()
    }

    /// Rewrites a standard-form instance with rows `(A; -A; -I)`,
    /// `B' = (B; -B; 0)` and `b' = (b; -b; 0)`. Natural instances are returned
    /// unchanged.
    pub fn to_natural(&self) -> Instance {
        match self.form {
            Form::Natural => self.clone(),
            Form::Standard => convert_standard_to_natural(self),
        }
    }
}

pub fn convert_standard_to_natural(inst: &Instance) -> Instance {
    let (m, n, k) = (inst.m(), inst.n(), inst.k());
    let neg_a = inst.a.scale(&-Rational::one());
    let neg_i = RatMatrix::identity(n).scale(&-Rational::one());
    let a = inst.a.vstack(&neg_a).vstack(&neg_i);
    let b_mat = inst.b_mat.vstack(&inst.b_mat.scale(&-Rational::one())).vstack(&RatMatrix::zeros(n, k));
    let mut b = inst.b.0.clone();
    b.extend(inst.b.iter().map(|v| -v));
    b.extend(std::iter::repeat_n(Rational::zero(), n));
    debug_assert_eq!(a.rows(), 2 * m + n);
    Instance {
        form: Form::Natural,
        a,
        b_mat,
        b: RatVector(b),
        c_mat: inst.c_mat.clone(),
        c: inst.c.clone(),
        x_set: inst.x_set.clone(),
    }
}

fn dims(what: &str, got: (usize, usize), want: (usize, usize)) -> Result<(), ValidationError> {
    if got == want {
        Ok(())
    } else {
        Err(ValidationError::DimensionMismatch(format!(
            "{what} is {}x{}, expected {}x{}",
            got.0, got.1, want.0, want.1
        )))
    }
}

fn len(what: &str, got: usize, want: usize) -> Result<(), ValidationError> {
    if got == want {
        Ok(())
    } else {
        Err(ValidationError::DimensionMismatch(format!("{what} has length {got}, expected {want}")))
    }
}

/// Checks dimensional consistency of the instance alone.
pub fn validate_instance(inst: &Instance) -> Result<(), ValidationError> {
    let (m, n, k) = (inst.m(), inst.n(), inst.k());
    dims("B", (inst.b_mat.rows(), inst.b_mat.cols()), (m, k))?;
    len("b", inst.b.len(), m)?;
    dims("C", (inst.c_mat.rows(), inst.c_mat.cols()), (n, k))?;
    len("c", inst.c.len(), n)?;
    len("d", inst.x_set.d.len(), inst.x_set.d_mat.rows())
}

pub fn validate(inst: &Instance, target: &TargetSet) -> Result<(), ValidationError> {
    validate_instance(inst)?;
    let n = inst.n();
    match target {
        TargetSet::Singleton { ybar } => len("target ybar", ybar.len(), n),
        TargetSet::Basis { basis } => {
            if inst.form != Form::Standard {
                return Err(ValidationError::FormMismatch("basis targets need a standard-form instance".into()));
            }
            validate_basis(&inst.a, basis)
        }
        TargetSet::PartialFix { ybar } => {
            if inst.form != Form::Standard {
                return Err(ValidationError::FormMismatch("partial targets need a standard-form instance".into()));
            }
            if ybar.len() > n {
                return Err(ValidationError::DimensionMismatch(format!(
                    "partial target fixes {} coordinates of {n}",
                    ybar.len()
                )));
            }
            Ok(())
        }
        TargetSet::Polyhedron { s, t } => {
            dims("S", (s.rows(), s.cols()), (t.len(), n))
        }
        TargetSet::Oracle(o) => o.validate(n),
    }
}

pub fn validate_basis(a: &RatMatrix, basis: &[usize]) -> Result<(), ValidationError> {
    let (m, n) = (a.rows(), a.cols());
    if basis.len() != m {
        return Err(ValidationError::DimensionMismatch(format!("basis has {} indices, A has {m} rows", basis.len())));
    }
    if let Some(&j) = basis.iter().find(|&&j| j >= n) {
        return Err(ValidationError::InvalidTarget(format!("basis index {} exceeds n = {n}", j + 1)));
    }
    let mut sorted = basis.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != basis.len() {
        return Err(ValidationError::InvalidTarget("basis indices repeat".into()));
    }
    if a.select_cols(basis).rank() < m {
        return Err(ValidationError::SingularTargetBasis(format!(
            "columns {:?} of A are linearly dependent",
            basis.iter().map(|j| j + 1).collect::<Vec<_>>()
        )));
    }
    Ok(())
}
