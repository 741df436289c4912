//! Partial targets: fix the leading coordinates, leave the rest free. The
//! cost grows with the number of free coordinates only.

use invlfp::{decide, Form, Instance, ParamPolyhedron, RatMatrix, RatVector, Rational, Scenario, Solver, SolveOptions, TargetSet};

fn main() -> invlfp::Result<()> {
    // Transportation-like polytope y1 + y2 + y3 + y4 = 3, y1 + y3 = 1 with a
    // two-dimensional cost parameter.
    let inst = Instance {
        form: Form::Standard,
        a: RatMatrix::from_ints(&[&[1, 1, 1, 1], &[1, 0, 1, 0]], 4),
        b_mat: RatMatrix::zeros(2, 2),
        b: RatVector::from_ints(&[3, 1]),
        c_mat: RatMatrix::from_ints(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]], 2),
        c: RatVector::from_ints(&[0, 0, 0, 0]),
        x_set: ParamPolyhedron::boxed(&vec![Rational::from_integer(-1); 2], &vec![Rational::from_integer(1); 2]),
    };
    let opts = SolveOptions::default();
    for fixed in [vec![1], vec![1, 2], vec![1, 2, 0]] {
        let target = TargetSet::PartialFix { ybar: RatVector::from_ints(&fixed) };
        for sc in [Scenario::Optimistic, Scenario::Pessimistic] {
            let fast = decide(&inst, &target, sc, Solver::Auto, &opts)?;
            let slow = decide(&inst, &target, sc, Solver::Exhaustive, &opts)?;
            println!(
                "fix {fixed:?} {sc:?}: {:?} via {} in {} systems (search: {:?} in {})",
                fast.decision.verdict, fast.path, fast.decision.systems_examined, slow.decision.verdict,
                slow.decision.systems_examined
            );
        }
    }
    Ok(())
}
