//! Exact deciders for inverse linear programming feasibility.
//!
//! Given a parametric LP `min (Cx+c)^T y` over `Ay <= Bx+b` (natural form) or
//! `Ay = Bx+b, y >= 0` (standard form) and a target set `Y`, the question is
//! whether some `x` in `X = {Dx <= d}` makes an optimal solution land in `Y`
//! (optimistic) or makes the whole nonempty optimal set lie in `Y`
//! (pessimistic). All arithmetic is exact, so every verdict is a sign
//! decision on rationals and never depends on a tolerance.
//!
//! Start with [`decide`]; every yes-answer carries a witness parameter and a
//! [`Certificate`] that [`verify_certificate`] re-checks independently.

#![allow(clippy::needless_range_loop)]

pub mod certificate;
pub mod decide;
pub mod error;
pub mod fpt;
pub mod io;
pub mod model;
pub mod oracle;
pub mod poly;
pub mod reductions;
pub mod search;
mod system;

pub use certificate::{
    certificate_at, check_unique_optimal_face, evaluate_fixed_parameter, verify_certificate, Certificate,
    RejectReason, SupportPair, Verification,
};
pub use decide::{decide, Routed, Solver};
pub use error::{Error, Result, ValidationError};
pub use fpt::decide_partial_standard;
pub use invlfp_linalg::{RatMatrix, RatVector, Rational};
pub use model::{
    convert_standard_to_natural, validate, Decision, Form, Instance, ParamPolyhedron, Scenario, SolveOptions,
    TargetSet, Verdict,
};
pub use oracle::{
    polytope_distance_sq, verify_oracle_certificate, Backing, OracleAnswer, OracleCert, OracleTarget,
    WeakOuterMembership,
};
pub use poly::{compute_nonessential_part, decide_basis_pessimistic, decide_singleton_natural_of, decide_singleton_standard};
pub use reductions::{
    parse_dimacs, reduce_sat_basis, reduce_sat_onevar_of, reduce_sat_onevar_rhs, reduce_sat_rhs, sat_bruteforce,
    CnfFormula, ReductionOutput,
};
pub use search::{solve_basis_optimistic, solve_polyhedral_optimistic, solve_polyhedral_pessimistic};
