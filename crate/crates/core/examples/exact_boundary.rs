//! The verdict flips at x = 1/N with N = 10^9 + 7. Exact arithmetic decides
//! both sides; any tolerance near 1e-9 would blur them.

use invlfp::{decide, evaluate_fixed_parameter, Form, Instance, ParamPolyhedron, RatMatrix, RatVector, Rational, Scenario, Solver, SolveOptions, TargetSet};

fn main() -> invlfp::Result<()> {
    let big = 1_000_000_007;
    let boundary = Rational::new(1, big);
    // Objective (N x - 1)(y1 - y2) on the segment y1 + y2 = 1.
    let inst = Instance {
        form: Form::Standard,
        a: RatMatrix::from_ints(&[&[1, 1]], 2),
        b_mat: RatMatrix::zeros(1, 1),
        b: RatVector::from_ints(&[1]),
        c_mat: RatMatrix::from_ints(&[&[big], &[-big]], 1),
        c: RatVector::from_ints(&[-1, 1]),
        x_set: ParamPolyhedron::boxed(std::slice::from_ref(&boundary), &[Rational::from_integer(1)]),
    };
    let target = TargetSet::Singleton { ybar: RatVector::from_ints(&[1, 0]) };
    for sc in [Scenario::Optimistic, Scenario::Pessimistic] {
        let d = decide(&inst, &target, sc, Solver::Auto, &SolveOptions::default())?.decision;
        println!("X = [1/N, 1], {sc:?}: {:?} x={:?}", d.verdict, d.witness_x);
    }
    let eps = &boundary * &boundary;
    let wide = Instance { x_set: ParamPolyhedron::boxed(&[Rational::zero()], &[Rational::from_integer(1)]), ..inst.clone() };
    for x in [&boundary - &eps, boundary.clone(), &boundary + &eps] {
        let v = |sc| evaluate_fixed_parameter(&wide, &target, sc, &RatVector(vec![x.clone()]));
        let coupling = big as f64 * x.to_f64() - 1.0;
        println!(
            "x = {x}: optimistic {:?}, pessimistic {:?}; in f64 the coupling N*x - 1 = {coupling:e}",
            v(Scenario::Optimistic)?,
            v(Scenario::Pessimistic)?
        );
    }
    Ok(())
}
