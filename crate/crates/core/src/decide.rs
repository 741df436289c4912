//! Routes an (instance, target, scenario) triple to the matching decider.
//!
//! | target      | form / scenario             | decider                          |
//! |-------------|-----------------------------|----------------------------------|
//! | singleton   | standard                    | [`decide_singleton_standard`]    |
//! | singleton   | natural, `B = 0`            | [`decide_singleton_natural_of`]  |
//! | singleton   | natural, `B != 0`           | polyhedral search                |
//! | basis       | pessimistic                 | [`decide_basis_pessimistic`]     |
//! | basis       | optimistic                  | [`solve_basis_optimistic`]       |
//! | partial     | any                         | [`decide_partial_standard`]      |
//! | polyhedron  | any                         | polyhedral search                |
//! | oracle      | optimistic, box or polytope | polyhedral search on the backing |
//!
//! [`Solver::Exhaustive`] sends singleton and partial targets through the
//! polyhedral search too.

use crate::certificate::{certificate_at, Certificate};
use crate::error::{Error, Result};
use crate::fpt::decide_partial_standard;
use crate::model::{validate, Decision, Form, Instance, Scenario, SolveOptions, TargetSet};
use crate::oracle::{self, Backing};
use crate::poly::{decide_basis_pessimistic, decide_singleton_natural_of, decide_singleton_standard};
use crate::search::{solve_basis_optimistic, solve_polyhedral_optimistic, solve_polyhedral_pessimistic};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Solver {
    #[default]
    Auto,
    Exhaustive,
}

/// A decision plus the name of the decider that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Routed {
    pub decision: Decision,
    pub path: &'static str,
}

pub fn decide(
    inst: &Instance,
    target: &TargetSet,
    scenario: Scenario,
    solver: Solver,
    opts: &SolveOptions,
) -> Result<Routed> {
    validate(inst, target)?;
    let auto = solver == Solver::Auto;
    let routed = |decision, path| Ok(Routed { decision, path });
    match target {
        TargetSet::Singleton { ybar } if auto && inst.form == Form::Standard => {
            routed(decide_singleton_standard(inst, ybar, scenario, opts)?, "singleton-standard")
        }
        TargetSet::Singleton { ybar } if auto && inst.b_mat.is_zero() => {
            routed(decide_singleton_natural_of(inst, ybar, scenario, opts)?, "singleton-natural-fixed-rhs")
        }
        TargetSet::Basis { basis } => match scenario {
            Scenario::Pessimistic => routed(decide_basis_pessimistic(inst, basis, opts)?, "basis-pessimistic"),
            Scenario::Optimistic => routed(solve_basis_optimistic(inst, basis, opts)?, "basis-optimistic-search"),
        },
        TargetSet::PartialFix { ybar } if auto => {
            routed(decide_partial_standard(inst, ybar, scenario, opts)?, "partial-fpt")
        }
        TargetSet::Oracle(o) => {
            if scenario == Scenario::Pessimistic {
                return Err(Error::Unsupported("pessimistic oracle targets admit no verifiable certificates".into()));
            }
            let (s, t) = match &o.backing {
                Backing::Ball { .. } => {
                    return Err(Error::Unsupported("ball-backed targets have no exact polyhedral description".into()))
                }
                b => b.as_polyhedron().expect("box and polytope backings are polyhedra"),
            };
            let nat = inst.to_natural();
            let mut d = solve_polyhedral_optimistic(&nat, &s, &t, opts)?;
            if let Some(x) = &d.witness_x {
                let cert = oracle::certificate_at(&nat, o, x)?.expect("the search witness meets the backing set");
                d.certificate = Some(Certificate::Oracle(cert));
            }
            routed(d, "oracle-polyhedral-search")
        }
        _ => {
            let nat = inst.to_natural();
            let (s, t) = target.as_polyhedron(inst.n()).expect("remaining targets are polyhedral");
            let mut d = match scenario {
                Scenario::Optimistic => solve_polyhedral_optimistic(&nat, &s, &t, opts)?,
                Scenario::Pessimistic => solve_polyhedral_pessimistic(&nat, &s, &t, opts)?,
            };
            // Certificates refer to the caller's target and form.
            let rebuild = !matches!(target, TargetSet::Polyhedron { .. }) || inst.form == Form::Standard;
            if let (true, Some(x)) = (rebuild, &d.witness_x) {
                d.certificate = Some(certificate_at(inst, target, scenario, x)?);
            }
            routed(d, "polyhedral-search")
        }
    }
}
