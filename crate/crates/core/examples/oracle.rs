//! Targets known only through a weak membership oracle. The certificate is a
//! grid point near the target plus an active set; the verifier needs one
//! oracle call and one linear system.

use invlfp::oracle::certificate_at;
use invlfp::{
    convert_standard_to_natural, decide, verify_oracle_certificate, Backing, Form, Instance, OracleAnswer,
    OracleTarget, ParamPolyhedron, RatMatrix, RatVector, Rational, Scenario, Solver, SolveOptions, TargetSet,
    WeakOuterMembership,
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
    let nat = convert_standard_to_natural(&inst);
    // A thin box around (1/3, 2/3), which lies on the segment.
    let backing = Backing::Box {
        lower: RatVector(vec![Rational::new(3, 10), Rational::new(6, 10)]),
        upper: RatVector(vec![Rational::new(4, 10), Rational::new(7, 10)]),
    };
    let probe = RatVector(vec![Rational::new(1, 2), Rational::new(1, 2)]);
    for delta in [Rational::new(1, 100), Rational::new(1, 5)] {
        let ans: OracleAnswer = backing.query(&probe, &delta)?;
        println!("oracle at (1/2, 1/2), delta {delta}: {ans:?}");
    }
    let target = OracleTarget::new(backing, Rational::from_integer(2));
    let routed = decide(&nat, &TargetSet::Oracle(target.clone()), Scenario::Optimistic, Solver::Auto, &SolveOptions::default())?;
    println!("decision: {:?} x={:?}", routed.decision.verdict, routed.decision.witness_x);
    if let Some(x) = &routed.decision.witness_x {
        let cert = certificate_at(&nat, &target, x)?.expect("witness meets the target");
        println!("certificate: active={:?} yhat={:?}", cert.active, cert.yhat);
        println!("verifier: {:?}", verify_oracle_certificate(&nat, &cert, &target)?);
    }
    Ok(())
}
