//! Exact rational linear algebra and linear programming.
//!
//! Everything here works over [`Rational`]; no floating point value is ever
//! used to make a decision.

#![allow(clippy::needless_range_loop)]

pub mod lp;
pub mod matrix;
pub mod rational;

pub use lp::{
    check_feasible, solve_lp, Bounds, Constraint, DualSolution, FarkasRay, Feasibility, LinearProgram, LpError,
    LpOutcome, Optimum, Sense, UnboundedRay,
};
pub use matrix::{RatMatrix, RatVector, SolveError};
pub use rational::{ParseRationalError, Rational};
