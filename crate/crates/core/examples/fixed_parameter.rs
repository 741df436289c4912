//! Evaluate both scenarios at fixed parameters by plain LP checks.

use invlfp::{evaluate_fixed_parameter, Form, Instance, ParamPolyhedron, RatMatrix, RatVector, Rational, Scenario, TargetSet};

fn main() -> invlfp::Result<()> {
    let inst = Instance {
        form: Form::Standard,
        a: RatMatrix::from_ints(&[&[1, 1]], 2),
        b_mat: RatMatrix::zeros(1, 1),
        b: RatVector::from_ints(&[1]),
        c_mat: RatMatrix::from_ints(&[&[1], &[-1]], 1),
        c: RatVector::from_ints(&[0, 0]),
        x_set: ParamPolyhedron::boxed(&[Rational::from_integer(-1)], &[Rational::from_integer(1)]),
    };
    let target = TargetSet::Singleton { ybar: RatVector::from_ints(&[1, 0]) };
    println!("{:>6}  optimistic  pessimistic", "x");
    for num in -4..=4 {
        let x = RatVector(vec![Rational::new(num, 4)]);
        let o = evaluate_fixed_parameter(&inst, &target, Scenario::Optimistic, &x)?;
        let p = evaluate_fixed_parameter(&inst, &target, Scenario::Pessimistic, &x)?;
        println!("{:>6}  {:<10}  {p:?}", x[0].to_string(), format!("{o:?}"));
    }
    Ok(())
}
