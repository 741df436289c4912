//! Certificates are small, serializable and re-checked from scratch.

use invlfp::io::{parse_certificate, serialize_certificate};
use invlfp::{
    decide, verify_certificate, Certificate, Form, Instance, ParamPolyhedron, RatMatrix, RatVector, Rational, Scenario,
    Solver, SolveOptions, TargetSet,
};

fn main() -> invlfp::Result<()> {
    let inst = Instance {
        form: Form::Natural,
        a: RatMatrix::from_ints(&[&[1, 1], &[-1, 0], &[0, -1]], 2),
        b_mat: RatMatrix::zeros(3, 1),
        b: RatVector::from_ints(&[1, 0, 0]),
        c_mat: RatMatrix::from_ints(&[&[1], &[-1]], 1),
        c: RatVector::from_ints(&[-1, 0]),
        x_set: ParamPolyhedron::boxed(&[Rational::from_integer(-2)], &[Rational::from_integer(2)]),
    };
    let target = TargetSet::Singleton { ybar: RatVector::from_ints(&[1, 0]) };
    let opts = SolveOptions::default();
    for sc in [Scenario::Optimistic, Scenario::Pessimistic] {
        let d = decide(&inst, &target, sc, Solver::Auto, &opts)?.decision;
        let Some(cert) = d.certificate else {
            println!("{sc:?}: no");
            continue;
        };
        let json = serialize_certificate(&cert);
        println!("{sc:?}: certificate {json}");
        let back = parse_certificate(&json)?;
        println!("  verifier: {:?}", verify_certificate(&inst, &target, sc, &back, &opts)?);
    }
    // Tampering: drop the active rows and the verifier no longer agrees.
    let forged = Certificate::ActiveSet { active: vec![] };
    println!("forged: {:?}", verify_certificate(&inst, &target, Scenario::Pessimistic, &forged, &opts)?);
    Ok(())
}
