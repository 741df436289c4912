//! Is `ybar` an optimal (or the unique optimal) solution for some parameter?
//!
//! The instance is `min x*y1 - x*y2` over `y1 + y2 = 1, y >= 0`, `x` in [-1, 1].

use invlfp::{
    convert_standard_to_natural, decide_singleton_natural_of, decide_singleton_standard, Form, Instance,
    ParamPolyhedron, RatMatrix, RatVector, Rational, Scenario, SolveOptions,
};

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
    let opts = SolveOptions::default();
    let vertex = RatVector::from_ints(&[1, 0]);
    let midpoint = RatVector(vec![Rational::new(1, 2), Rational::new(1, 2)]);

    for (name, ybar) in [("vertex (1, 0)", &vertex), ("midpoint", &midpoint)] {
        for sc in [Scenario::Optimistic, Scenario::Pessimistic] {
            let d = decide_singleton_standard(&inst, ybar, sc, &opts)?;
            println!("{name:>14} {sc:?}: {:?} witness={:?}", d.verdict, d.witness_x);
        }
    }

    // The same question in natural form, where the right-hand side is fixed.
    let nat = convert_standard_to_natural(&inst);
    let d = decide_singleton_natural_of(&nat, &vertex, Scenario::Pessimistic, &opts)?;
    println!("natural form, vertex, pessimistic: {:?} certificate={:?}", d.verdict, d.certificate);
    Ok(())
}
