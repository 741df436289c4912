//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Every random family is driven by a fixed ChaCha seed.

#![allow(clippy::needless_range_loop)]

mod common;

use std::time::{Duration, Instant};

use common::*;
use invlfp::oracle::{self, grid_spacing};
use invlfp::{
    convert_standard_to_natural, decide, decide_basis_pessimistic, decide_partial_standard, decide_singleton_standard,
    evaluate_fixed_parameter, polytope_distance_sq, reduce_sat_basis, reduce_sat_onevar_of, reduce_sat_onevar_rhs,
    reduce_sat_rhs, sat_bruteforce, solve_basis_optimistic, solve_polyhedral_optimistic, solve_polyhedral_pessimistic,
    verify_certificate, verify_oracle_certificate, Backing, CnfFormula, Decision, Form, Instance, OracleAnswer,
    OracleTarget, ParamPolyhedron, RatMatrix, RatVector, Rational, Scenario, Solver, SolveOptions, TargetSet,
    Verdict, Verification, WeakOuterMembership,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x1f_2024;
const SAT_FORMULAS: usize = 200;
const CROSS_INSTANCES: usize = 500;
const INVARIANCE_INSTANCES: usize = 100;
const BASIS_INSTANCES: usize = 100;
const ORACLE_YES_INSTANCES: usize = 50;
const ORACLE_QUERIES: usize = 10_000;
const SAT_TIME_LIMIT: Duration = Duration::from_secs(300);
const BOUNDARY_DENOMINATOR: i64 = 1_000_000_007;

const SCENARIOS: [Scenario; 2] = [Scenario::Optimistic, Scenario::Pessimistic];

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn report(&self, id: usize, name: &str, extra: &str) -> bool {
        let pass = self.failures.is_empty() && self.checked > 0;
        let status = if pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {id:>2}: {name} ({} checks, {} failures{extra})", self.checked, self.failures.len());
        for f in self.failures.iter().filter(|f| !f.is_empty()) {
            println!("    {f}");
        }
        pass
    }
}

/// Criteria 5 and 6 collect evidence from every other suite.
#[derive(Default)]
struct Shared {
    witness: Tally,
    implication: Tally,
}

impl Shared {
    fn sound(&mut self, inst: &Instance, target: &TargetSet, scenario: Scenario, d: &Decision, label: &str) {
        let Some(x) = &d.witness_x else { return };
        let cert = d.certificate.as_ref().expect("yes-decisions carry certificates");
        let eval = evaluate_fixed_parameter(inst, target, scenario, x);
        let ver = verify_certificate(inst, target, scenario, cert, &SolveOptions::default());
        let ok = matches!(eval, Ok(Verdict::Yes)) && matches!(ver, Ok(Verification::Accept { .. }));
        self.witness.check(ok, || format!("{label}: eval {eval:?}, verify {ver:?}"));
    }

    fn imply(&mut self, opt: &Decision, pess: &Decision, label: &str) {
        self.implication.check(!pess.is_yes() || opt.is_yes(), || format!("{label}: pessimistic yes, optimistic no"));
    }
}

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn polyhedron(inst: &Instance, target: &TargetSet) -> (RatMatrix, RatVector) {
    target.as_polyhedron(inst.n()).expect("polyhedral target")
}

fn solve_poly(nat: &Instance, s: &RatMatrix, t: &RatVector, sc: Scenario) -> Decision {
    match sc {
        Scenario::Optimistic => solve_polyhedral_optimistic(nat, s, t, &opts()),
        Scenario::Pessimistic => solve_polyhedral_pessimistic(nat, s, t, &opts()),
    }
    .expect("polyhedral search")
}

fn random_formula(rng: &mut ChaCha8Rng) -> CnfFormula {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=5);
    CnfFormula::random(rng, n, m)
}

fn criterion_sat_rhs(shared: &mut Shared) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut t = Tally::default();
    let start = Instant::now();
    for i in 0..SAT_FORMULAS {
        let phi = random_formula(&mut rng);
        let sat = sat_bruteforce(&phi, 20).unwrap();
        let out = reduce_sat_rhs(&phi);
        let (s, tt) = polyhedron(&out.instance, &out.target);
        let d = solve_poly(&out.instance, &s, &tt, Scenario::Optimistic);
        t.check(d.is_yes() == sat, || format!("formula {i}: sat={sat}, solver={:?}", d.verdict));
        let target = TargetSet::Polyhedron { s, t: tt };
        shared.sound(&out.instance, &target, Scenario::Optimistic, &d, "rhs reduction");
    }
    let elapsed = start.elapsed();
    t.check(elapsed < SAT_TIME_LIMIT, || format!("took {elapsed:?}"));
    t.report(1, "rhs reduction round-trip", &format!(", {:.1}s", elapsed.as_secs_f64()))
}

fn criterion_sat_others(shared: &mut Shared) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut t = Tally::default();
    let start = Instant::now();
    for i in 0..SAT_FORMULAS {
        let phi = random_formula(&mut rng);
        let sat = sat_bruteforce(&phi, 20).unwrap();

        let out = reduce_sat_basis(&phi);
        let TargetSet::Basis { basis } = &out.target else { unreachable!() };
        let d = solve_basis_optimistic(&out.instance, basis, &opts()).unwrap();
        t.check(d.is_yes() == sat, || format!("basis, formula {i}: sat={sat}, solver={:?}", d.verdict));
        shared.sound(&out.instance, &out.target, Scenario::Optimistic, &d, "basis reduction");

        for (name, out) in [("onevar-rhs", reduce_sat_onevar_rhs(&phi)), ("onevar-of", reduce_sat_onevar_of(&phi))] {
            let (s, tt) = polyhedron(&out.instance, &out.target);
            let target = TargetSet::Polyhedron { s: s.clone(), t: tt.clone() };
            let ds: Vec<Decision> = SCENARIOS.iter().map(|&sc| solve_poly(&out.instance, &s, &tt, sc)).collect();
            for (sc, d) in SCENARIOS.iter().zip(&ds) {
                t.check(d.is_yes() == sat, || format!("{name} {sc:?}, formula {i}: sat={sat}, solver={:?}", d.verdict));
                shared.sound(&out.instance, &target, *sc, d, name);
            }
            shared.imply(&ds[0], &ds[1], name);
        }
    }
    t.report(2, "basis, onevar-rhs and onevar-of round-trips", &format!(", {:.1}s", start.elapsed().as_secs_f64()))
}

struct CrossCase {
    inst: Instance,
    ybar: RatVector,
}

fn cross_family() -> Vec<CrossCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    (0..CROSS_INSTANCES)
        .map(|_| {
            let inst = random_standard(&mut rng);
            let ybar = random_vertex_target(&mut rng, &inst);
            CrossCase { inst, ybar }
        })
        .collect()
}

fn criterion_cross(cases: &[CrossCase], shared: &mut Shared) -> (bool, Vec<[Decision; 2]>) {
    let mut t = Tally::default();
    let mut singles = Vec::new();
    for (i, case) in cases.iter().enumerate() {
        let nat = convert_standard_to_natural(&case.inst);
        let target = TargetSet::Singleton { ybar: case.ybar.clone() };
        let (s, tt) = polyhedron(&case.inst, &target);
        let poly_target = TargetSet::Polyhedron { s: s.clone(), t: tt.clone() };
        let mut fast = Vec::new();
        let mut slow = Vec::new();
        for sc in SCENARIOS {
            let a = decide_singleton_standard(&case.inst, &case.ybar, sc, &opts()).unwrap();
            let b = solve_poly(&nat, &s, &tt, sc);
            t.check(a.verdict == b.verdict, || format!("instance {i} {sc:?}: poly {:?} vs search {:?}", a.verdict, b.verdict));
            shared.sound(&case.inst, &target, sc, &a, "singleton decider");
            shared.sound(&nat, &poly_target, sc, &b, "singleton via search");
            fast.push(a);
            slow.push(b);
        }
        shared.imply(&fast[0], &fast[1], "singleton decider");
        shared.imply(&slow[0], &slow[1], "singleton via search");
        let [o, p]: [Decision; 2] = fast.try_into().unwrap();
        singles.push([o, p]);
    }
    let yes = singles.iter().filter(|d| d[0].is_yes()).count();
    (t.report(3, "singleton decider vs exhaustive search", &format!(", {yes} optimistic yes")), singles)
}

fn criterion_fpt(cases: &[CrossCase], singles: &[[Decision; 2]], shared: &mut Shared) -> bool {
    let mut t = Tally::default();
    for (i, case) in cases.iter().enumerate() {
        let n = case.inst.n();
        for l in 0..=2.min(n) {
            let ybar = RatVector(case.ybar.0[..n - l].to_vec());
            let target = TargetSet::PartialFix { ybar: ybar.clone() };
            let mut ds = Vec::new();
            for (si, sc) in SCENARIOS.into_iter().enumerate() {
                let a = decide_partial_standard(&case.inst, &ybar, sc, &opts()).unwrap();
                let b = decide(&case.inst, &target, sc, Solver::Exhaustive, &opts()).unwrap().decision;
                t.check(a.verdict == b.verdict, || {
                    format!("instance {i} l={l} {sc:?}: fpt {:?} vs search {:?}", a.verdict, b.verdict)
                });
                if l == 0 {
                    let s = &singles[i][si];
                    let same = (a.verdict, &a.witness_x, a.systems_examined) == (s.verdict, &s.witness_x, s.systems_examined);
                    t.check(same, || format!("instance {i} {sc:?}: l=0 differs from the singleton decider"));
                }
                shared.sound(&case.inst, &target, sc, &a, "partial decider");
                shared.sound(&case.inst, &target, sc, &b, "partial via search");
                ds.push(a);
            }
            shared.imply(&ds[0], &ds[1], "partial decider");
        }
    }
    t.report(4, "partial-target decider vs exhaustive search", "")
}

/// Scales row `i` of `(A, B, b)` by `f[i]`.
fn scale_rows(inst: &Instance, f: &[Rational]) -> Instance {
    let mut out = inst.clone();
    for i in 0..inst.m() {
        for j in 0..inst.n() {
            out.a[(i, j)] = &inst.a[(i, j)] * &f[i];
        }
        for j in 0..inst.k() {
            out.b_mat[(i, j)] = &inst.b_mat[(i, j)] * &f[i];
        }
        out.b[i] = &inst.b[i] * &f[i];
    }
    out
}

fn permute_rows(inst: &Instance, perm: &[usize]) -> Instance {
    let mut out = inst.clone();
    out.a = inst.a.select_rows(perm);
    out.b_mat = inst.b_mat.select_rows(perm);
    out.b = inst.b.select(perm);
    out
}

fn criterion_invariance(cases: &[CrossCase], shared: &mut Shared) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let mut t = Tally::default();
    let factors = [qr(1, 2), q(2), q(3), qr(5, 3), q(7)];
    let wide = SolveOptions { eps_cap: q(1000), ..SolveOptions::default() };
    for (i, case) in cases.iter().take(INVARIANCE_INSTANCES).enumerate() {
        let target = TargetSet::Singleton { ybar: case.ybar.clone() };
        let m = case.inst.m();
        let f: Vec<Rational> = (0..m).map(|_| factors.choose(&mut rng).unwrap().clone()).collect();
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut rng);
        if m > 1 && perm.iter().enumerate().all(|(a, &b)| a == b) {
            perm.reverse();
        }
        let scaled = scale_rows(&case.inst, &f);
        let permuted = permute_rows(&case.inst, &perm);
        for solver in [Solver::Auto, Solver::Exhaustive] {
            for sc in SCENARIOS {
                let base = decide(&case.inst, &target, sc, solver, &opts()).unwrap().decision;
                let variants = [
                    ("scaled", decide(&scaled, &target, sc, solver, &opts()).unwrap().decision, &scaled),
                    ("permuted", decide(&permuted, &target, sc, solver, &opts()).unwrap().decision, &permuted),
                    ("cap 1000", decide(&case.inst, &target, sc, solver, &wide).unwrap().decision, &case.inst),
                ];
                for (name, d, inst) in &variants {
                    t.check(d.verdict == base.verdict, || format!("instance {i} {sc:?} {solver:?}: {name} changed the verdict"));
                    shared.sound(inst, &target, sc, d, name);
                }
            }
        }
    }
    t.report(7, "row scaling, row permutation and cap invariance", "")
}

fn random_basis(rng: &mut ChaCha8Rng, a: &RatMatrix) -> Option<Vec<usize>> {
    let (m, n) = (a.rows(), a.cols());
    for _ in 0..20 {
        let mut cols: Vec<usize> = (0..n).collect();
        cols.shuffle(rng);
        let mut basis = cols[..m].to_vec();
        basis.sort_unstable();
        if a.select_cols(&basis).rank() == m {
            return Some(basis);
        }
    }
    None
}

fn criterion_basis(shared: &mut Shared) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let mut t = Tally::default();
    let (mut yes, mut done) = (0, 0);
    while done < BASIS_INSTANCES {
        let inst = random_standard(&mut rng);
        let Some(basis) = random_basis(&mut rng, &inst.a) else { continue };
        done += 1;
        let target = TargetSet::Basis { basis: basis.clone() };
        let d = decide_basis_pessimistic(&inst, &basis, &opts()).unwrap();
        let o = solve_basis_optimistic(&inst, &basis, &opts()).unwrap();
        shared.imply(&o, &d, "basis target");
        shared.sound(&inst, &target, Scenario::Optimistic, &o, "basis optimistic");
        shared.sound(&inst, &target, Scenario::Pessimistic, &d, "basis pessimistic");
        match &d.witness_x {
            Some(x) => {
                yes += 1;
                let v = evaluate_fixed_parameter(&inst, &target, Scenario::Pessimistic, x).unwrap();
                t.check(v == Verdict::Yes, || format!("basis {basis:?}: witness {x:?} fails evaluation"));
            }
            None => {
                let bad = grid(&inst, 4)
                    .into_iter()
                    .find(|x| evaluate_fixed_parameter(&inst, &target, Scenario::Pessimistic, x).unwrap() == Verdict::Yes);
                t.check(bad.is_none(), || format!("basis {basis:?}: grid point {bad:?} evaluates yes"));
            }
        }
    }
    t.report(8, "basis pessimistic witnesses and grid completeness", &format!(", {yes} yes"))
}

/// Natural-form instance inside the unit cube: `0 <= y <= 1` plus random
/// parametric rows.
fn random_cube_instance(rng: &mut ChaCha8Rng) -> Instance {
    let n = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=2);
    let extra = rng.gen_range(1..=2);
    let mut a = Vec::new();
    let mut b_mat = Vec::new();
    let mut b = Vec::new();
    for i in 0..n {
        for (sign, rhs) in [(1, 1), (-1, 0)] {
            let mut row = vec![q(0); n];
            row[i] = q(sign);
            a.push(row);
            b_mat.push(vec![q(0); k]);
            b.push(q(rhs));
        }
    }
    for _ in 0..extra {
        a.push((0..n).map(|_| q(rng.gen_range(-2..=2))).collect());
        b_mat.push((0..k).map(|_| q(rng.gen_range(-2..=2))).collect());
        b.push(q(rng.gen_range(0..=2)));
    }
    let lo: Vec<Rational> = (0..k).map(|_| q(rng.gen_range(-1..=0))).collect();
    let hi: Vec<Rational> = lo.iter().map(|l| l + &q(1)).collect();
    Instance {
        form: Form::Natural,
        a: RatMatrix::from_rows(a, n),
        b_mat: RatMatrix::from_rows(b_mat, k),
        b: b.into_iter().collect(),
        c_mat: RatMatrix::from_rows((0..n).map(|_| (0..k).map(|_| q(rng.gen_range(-2..=2))).collect()).collect(), k),
        c: (0..n).map(|_| q(rng.gen_range(-2..=2))).collect(),
        x_set: ParamPolyhedron::boxed(&lo, &hi),
    }
}

/// A small box `[lo, lo + 1/4]` cut by `sum y <= sum lo + 1/4`.
fn random_target_polytope(rng: &mut ChaCha8Rng, n: usize) -> (RatMatrix, RatVector) {
    let lo: Vec<Rational> = (0..n).map(|_| qr(rng.gen_range(0..=3), 4)).collect();
    let w = qr(1, 4);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        let mut up = vec![q(0); n];
        up[i] = q(1);
        rows.push(up);
        rhs.push(&lo[i] + &w);
        let mut down = vec![q(0); n];
        down[i] = q(-1);
        rows.push(down);
        rhs.push(-lo[i].clone());
    }
    rows.push(vec![q(1); n]);
    rhs.push(lo.iter().sum::<Rational>() + w);
    (RatMatrix::from_rows(rows, n), rhs.into_iter().collect())
}

/// Outer polyhedral bound on the Euclidean `delta`-neighbourhood:
/// `s_j y <= t_j + delta * |s_j|_1`.
fn inflate(s: &RatMatrix, t: &RatVector, delta: &Rational) -> TargetSet {
    let t = (0..s.rows()).map(|j| &t[j] + &(delta * &s.row(j).iter().map(Rational::abs).sum::<Rational>())).collect();
    TargetSet::Polyhedron { s: s.clone(), t }
}

fn box_distance_sq(lo: &[Rational], hi: &[Rational], y: &RatVector) -> Rational {
    y.iter()
        .zip(lo.iter().zip(hi))
        .map(|(v, (l, h))| {
            let g = if v < l { l - v } else if v > h { v - h } else { q(0) };
            &g * &g
        })
        .sum()
}

fn criterion_oracle(shared: &mut Shared) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut t = Tally::default();
    let delta = qr(1, 10);
    let (mut found, mut tried) = (0, 0);
    while found < ORACLE_YES_INSTANCES && tried < 5_000 {
        tried += 1;
        let nat = random_cube_instance(&mut rng);
        let n = nat.n();
        let (s, tt) = random_target_polytope(&mut rng, n);
        let poly = TargetSet::Polyhedron { s: s.clone(), t: tt.clone() };
        let d = decide(&nat, &poly, Scenario::Optimistic, Solver::Exhaustive, &opts()).unwrap().decision;
        let Some(x) = d.witness_x.clone() else { continue };
        found += 1;
        let target = OracleTarget::new(Backing::Polytope { s: s.clone(), t: tt.clone() }, q(n as i64 + 2));
        let cert = oracle::certificate_at(&nat, &target, &x).unwrap();
        let Some(cert) = cert else {
            t.check(false, || format!("oracle instance {found}: no certificate at the witness"));
            continue;
        };
        let spacing = grid_spacing(&delta, n);
        let on_grid = cert.yhat.iter().all(|v| (v / &spacing).is_integer());
        t.check(on_grid, || format!("oracle instance {found}: yhat off the grid"));
        match verify_oracle_certificate(&nat, &cert, &target).unwrap() {
            Verification::Accept { witness_x } => {
                let v = evaluate_fixed_parameter(&nat, &inflate(&s, &tt, &delta), Scenario::Optimistic, &witness_x).unwrap();
                t.check(v == Verdict::Yes, || format!("oracle instance {found}: accepted witness misses the neighbourhood"));
            }
            r => t.check(false, || format!("oracle instance {found}: certificate rejected: {r:?}")),
        }
        let routed = decide(&nat, &TargetSet::Oracle(target.clone()), Scenario::Optimistic, Solver::Auto, &opts()).unwrap();
        t.check(routed.decision.is_yes(), || format!("oracle instance {found}: router says no"));
        shared.sound(&nat, &TargetSet::Oracle(target.clone()), Scenario::Optimistic, &routed.decision, "oracle target");

        // Move Y along the first axis so that it starts 3*delta past the cube.
        let shift = &(&q(1) + &(&q(3) * &delta)) - &(-tt[1].clone());
        let moved_t: RatVector = (0..s.rows()).map(|j| &tt[j] + &(&s[(j, 0)] * &shift)).collect();
        let moved = OracleTarget::new(Backing::Polytope { s: s.clone(), t: moved_t }, q(n as i64 + 4));
        let rebuilt = oracle::certificate_at(&nat, &moved, &x).unwrap();
        t.check(rebuilt.is_none(), || format!("oracle instance {found}: certificate built for the moved target"));
        let reused = verify_oracle_certificate(&nat, &cert, &moved).unwrap();
        t.check(!reused.is_accept(), || format!("oracle instance {found}: old certificate accepted for the moved target"));
        let routed = decide(&nat, &TargetSet::Oracle(moved), Scenario::Optimistic, Solver::Auto, &opts()).unwrap();
        t.check(!routed.decision.is_yes(), || format!("oracle instance {found}: moved target decided yes"));
    }
    t.check(found >= ORACLE_YES_INSTANCES, || format!("only {found} yes-instances in {tried} draws"));

    // Legality against an independent closed-form box distance.
    for i in 0..ORACLE_QUERIES {
        let n = rng.gen_range(1..=3);
        let lo: Vec<Rational> = (0..n).map(|_| qr(rng.gen_range(-8..=8), 8)).collect();
        let hi: Vec<Rational> = lo.iter().map(|l| l + &qr(rng.gen_range(0..=8), 8)).collect();
        let y: RatVector = (0..n).map(|_| qr(rng.gen_range(-24..=24), 8)).collect();
        let d = qr(rng.gen_range(1..=20), 20);
        let boxed = Backing::Box { lower: lo.clone().into(), upper: hi.clone().into() };
        let backing = if i % 2 == 0 {
            boxed
        } else {
            let (s, tt) = boxed.as_polyhedron().unwrap();
            Backing::Polytope { s, t: tt }
        };
        let truth = box_distance_sq(&lo, &hi, &y);
        if let Backing::Polytope { s, t: tt } = &backing {
            let exact = polytope_distance_sq(s, tt, &y, 1 << 16).unwrap();
            t.check(exact == truth, || format!("query {i}: polytope distance {exact} vs {truth}"));
        }
        let ans = backing.query(&y, &d).unwrap();
        let legal = match ans {
            OracleAnswer::NotInOuter => truth > &d * &d,
            OracleAnswer::InWiderOuter => truth <= &(&d * &d) * &q(4),
        };
        t.check(legal, || format!("query {i}: {ans:?} at squared distance {truth}, delta {d}"));
    }
    t.report(9, "oracle certificates and oracle legality", &format!(", {found} yes-instances"))
}

fn criterion_exactness(shared: &mut Shared) -> bool {
    let mut t = Tally::default();
    let big = BOUNDARY_DENOMINATOR;
    let boundary = qr(1, big);
    let tiny = &boundary * &boundary;
    // Objective (N x - 1)(y1 - y2): (1, 0) is optimal iff x <= 1/N.
    let mut inst = i1();
    inst.c_mat = RatMatrix::from_ints(&[&[big], &[-big]], 1);
    inst.c = vec_of(&[-1, 1]);
    let ybar = vec_of(&[1, 0]);
    let target = TargetSet::Singleton { ybar: ybar.clone() };
    let one = q(1);
    let cases = [
        (boundary.clone(), Scenario::Optimistic, true),
        (boundary.clone(), Scenario::Pessimistic, false),
        (&boundary - &tiny, Scenario::Pessimistic, true),
        (&boundary + &tiny, Scenario::Optimistic, false),
    ];
    for (lo, sc, expect) in cases {
        let narrowed = with_box(inst.clone(), std::slice::from_ref(&lo), std::slice::from_ref(&one));
        for solver in [Solver::Auto, Solver::Exhaustive] {
            let d = decide(&narrowed, &target, sc, solver, &opts()).unwrap().decision;
            t.check(d.is_yes() == expect, || format!("X=[{lo}, 1] {sc:?} {solver:?}: got {:?}", d.verdict));
            if let Some(x) = &d.witness_x {
                let big_den = x[0].denom() >= num_bigint::BigInt::from(1_000_000_000i64);
                t.check(big_den && x[0] <= boundary, || format!("witness {} is not at the boundary", x[0]));
            }
            shared.sound(&narrowed, &target, sc, &d, "exactness");
        }
    }
    // In floating point the three parameters collapse onto the same double
    // neighbourhood; exactly, the verdict flips at the boundary.
    let at = |x: &Rational, sc| evaluate_fixed_parameter(&inst, &target, sc, &RatVector(vec![x.clone()])).unwrap();
    t.check(at(&boundary, Scenario::Optimistic) == Verdict::Yes, || "boundary optimistic".into());
    t.check(at(&boundary, Scenario::Pessimistic) == Verdict::No, || "boundary pessimistic".into());
    t.check(at(&(&boundary + &tiny), Scenario::Optimistic) == Verdict::No, || "just past the boundary".into());
    t.check(at(&(&boundary - &tiny), Scenario::Pessimistic) == Verdict::Yes, || "just before the boundary".into());
    t.report(10, "exact decision at a boundary with denominator above 1e9", "")
}

fn main() {
    let start = Instant::now();
    let mut shared = Shared::default();
    let mut results = Vec::new();
    results.push(criterion_sat_rhs(&mut shared));
    results.push(criterion_sat_others(&mut shared));
    let cases = cross_family();
    let (ok, singles) = criterion_cross(&cases, &mut shared);
    results.push(ok);
    results.push(criterion_fpt(&cases, &singles, &mut shared));
    results.push(criterion_invariance(&cases, &mut shared));
    results.push(criterion_basis(&mut shared));
    results.push(criterion_oracle(&mut shared));
    results.push(criterion_exactness(&mut shared));
    results.push(shared.witness.report(5, "witness soundness across all suites", ""));
    results.push(shared.implication.report(6, "pessimistic yes implies optimistic yes", ""));
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("acceptance: {} of {} criteria passed in {:.1}s", results.len() - failed, results.len(), start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
