//! Polyhedral targets in natural form with the parameter on the right-hand side.

use invlfp::{
    solve_polyhedral_optimistic, solve_polyhedral_pessimistic, Form, Instance, ParamPolyhedron, RatMatrix, RatVector,
    Rational, SolveOptions,
};

fn main() -> invlfp::Result<()> {
    // max y1 + y2 over y1 <= x1, y2 <= x2, y1 + 2 y2 <= 3, y >= 0; X = [0, 2]^2.
    let inst = Instance {
        form: Form::Natural,
        a: RatMatrix::from_ints(&[&[1, 0], &[0, 1], &[1, 2], &[-1, 0], &[0, -1]], 2),
        b_mat: RatMatrix::from_ints(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0], &[0, 0]], 2),
        b: RatVector::from_ints(&[0, 0, 3, 0, 0]),
        c_mat: RatMatrix::zeros(2, 2),
        c: RatVector::from_ints(&[-1, -1]),
        x_set: ParamPolyhedron::boxed(&vec![Rational::zero(); 2], &vec![Rational::from_integer(2); 2]),
    };
    let opts = SolveOptions::default();
    // Y1 = {y2 >= 1}, Y2 = {y1 >= 2}.
    let targets = [
        ("y2 >= 1", RatMatrix::from_ints(&[&[0, -1]], 2), RatVector::from_ints(&[-1])),
        ("y1 >= 2", RatMatrix::from_ints(&[&[-1, 0]], 2), RatVector::from_ints(&[-2])),
    ];
    for (name, s, t) in &targets {
        let o = solve_polyhedral_optimistic(&inst, s, t, &opts)?;
        let p = solve_polyhedral_pessimistic(&inst, s, t, &opts)?;
        println!("{name}: optimistic {:?} x={:?}", o.verdict, o.witness_x);
        println!("{name}: pessimistic {:?} x={:?} certificate={:?}", p.verdict, p.witness_x, p.certificate);
    }
    Ok(())
}
