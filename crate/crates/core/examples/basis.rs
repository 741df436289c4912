//! Basis targets: can a prescribed basis be made optimal, or uniquely optimal?

use invlfp::{
    compute_nonessential_part, decide_basis_pessimistic, evaluate_fixed_parameter, solve_basis_optimistic, Form,
    Instance, ParamPolyhedron, RatMatrix, RatVector, Rational, Scenario, SolveOptions, TargetSet,
};

fn main() -> invlfp::Result<()> {
    // min x*y1 - x*y2 + 0*y3 over y1 + y2 + y3 = 2, y2 - y3 = 0, y >= 0.
    let inst = Instance {
        form: Form::Standard,
        a: RatMatrix::from_ints(&[&[1, 1, 1], &[0, 1, -1]], 3),
        b_mat: RatMatrix::zeros(2, 1),
        b: RatVector::from_ints(&[2, 0]),
        c_mat: RatMatrix::from_ints(&[&[1], &[-1], &[0]], 1),
        c: RatVector::from_ints(&[0, 0, 0]),
        x_set: ParamPolyhedron::boxed(&[Rational::from_integer(-1)], &[Rational::from_integer(1)]),
    };
    let opts = SolveOptions::default();
    for basis in [vec![0, 1], vec![1, 2]] {
        let swappable = compute_nonessential_part(&inst.a, &basis)?;
        let opt = solve_basis_optimistic(&inst, &basis, &opts)?;
        let pess = decide_basis_pessimistic(&inst, &basis, &opts)?;
        println!("basis {basis:?}: non-essential {swappable:?}");
        println!("  optimistic  {:?} x={:?}", opt.verdict, opt.witness_x);
        println!("  pessimistic {:?} x={:?}", pess.verdict, pess.witness_x);
        if let Some(x) = &pess.witness_x {
            let t = TargetSet::Basis { basis: basis.clone() };
            println!("  re-evaluated at the witness: {:?}", evaluate_fixed_parameter(&inst, &t, Scenario::Pessimistic, x)?);
        }
    }
    Ok(())
}
