//! Random 3-CNF formulas pushed through the four reductions and decided.
//! Usage: cargo run --example sat_reductions -- [seed] [count]

use invlfp::{
    reduce_sat_basis, reduce_sat_onevar_of, reduce_sat_onevar_rhs, reduce_sat_rhs, sat_bruteforce,
    solve_basis_optimistic, solve_polyhedral_optimistic, solve_polyhedral_pessimistic, CnfFormula, Scenario,
    SolveOptions, TargetSet,
};
use rand::{Rng, SeedableRng};

fn main() -> invlfp::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.first().copied().unwrap_or(1));
    let count = args.get(1).copied().unwrap_or(10);
    let opts = SolveOptions::default();
    let mut agree = 0;
    for _ in 0..count {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=5);
        let phi = CnfFormula::random(&mut rng, n, m);
        let sat = sat_bruteforce(&phi, 20)?;
        let mut answers = Vec::new();
        for out in [reduce_sat_rhs(&phi), reduce_sat_onevar_rhs(&phi), reduce_sat_onevar_of(&phi)] {
            let (s, t) = out.target.as_polyhedron(out.instance.n()).expect("polyhedral target");
            for sc in &out.scenarios {
                let d = match sc {
                    Scenario::Optimistic => solve_polyhedral_optimistic(&out.instance, &s, &t, &opts)?,
                    Scenario::Pessimistic => solve_polyhedral_pessimistic(&out.instance, &s, &t, &opts)?,
                };
                answers.push(d.is_yes());
            }
        }
        let out = reduce_sat_basis(&phi);
        if let TargetSet::Basis { basis } = &out.target {
            answers.push(solve_basis_optimistic(&out.instance, basis, &opts)?.is_yes());
        }
        let ok = answers.iter().all(|&a| a == sat);
        agree += ok as u64;
        println!("{:<40} sat={sat:<5} reductions={answers:?}", phi.to_dimacs().replace('\n', " "));
    }
    println!("{agree}/{count} formulas agree on every reduction");
    Ok(())
}
