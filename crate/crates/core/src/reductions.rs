//! 3-SAT reductions to inverse LP feasibility, a DIMACS reader and a
//! brute-force satisfiability check that serves as ground truth.
//!
//! Clause values are affine in the parameter: the literal `x_i` contributes
//! `x_i`, the literal `not x_i` contributes `1 - x_i`. Repeated literals
//! simply accumulate.

use invlfp_linalg::{RatMatrix, RatVector, Rational};
use rand::Rng;

use crate::error::{Error, Result};
use crate::model::{Form, Instance, ParamPolyhedron, Scenario, TargetSet};

/// Largest variable count [`sat_bruteforce`] accepts by default.
pub const BRUTEFORCE_MAX_VARS: usize = 20;

/// A 3-CNF formula. Literals are nonzero signed 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for c in &clauses {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(Error::Unsupported(format!("literal {l} out of range for {num_vars} variables")));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// Coefficients and constant of the affine clause value `c_j1 + c_j2 + c_j3`.
    fn clause_affine(&self, j: usize) -> (Vec<Rational>, Rational) {
        let mut coef = vec![Rational::zero(); self.num_vars];
        let mut constant = Rational::zero();
        for &l in &self.clauses[j] {
            let i = l.unsigned_abs() as usize - 1;
            if l > 0 {
                coef[i] += Rational::one();
            } else {
                coef[i] -= Rational::one();
                constant += Rational::one();
            }
        }
        (coef, constant)
    }

    /// A uniformly random formula with `m` clauses over `n >= 1` variables.
    pub fn random<R: Rng>(rng: &mut R, n: usize, m: usize) -> Self {
        let clauses = (0..m)
            .map(|_| {
                let mut c = [0i32; 3];
                for l in &mut c {
                    let v = rng.gen_range(1..=n as i32);
                    *l = if rng.gen_bool(0.5) { v } else { -v };
                }
                c
            })
            .collect();
        CnfFormula { num_vars: n, clauses }
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        s
    }
}

/// A generated instance with its target and the scenarios it decides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub instance: Instance,
    pub target: TargetSet,
    pub scenarios: Vec<Scenario>,
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn unit(n: usize, i: usize, v: Rational) -> Vec<Rational> {
    let mut r = vec![Rational::zero(); n];
    r[i] = v;
    r
}

fn unit_cube(n: usize) -> ParamPolyhedron {
    ParamPolyhedron::boxed(&vec![q(0); n], &vec![q(1); n])
}

/// Rows shared by the right-hand-side reductions over variables `(y, z, ...)`
/// with `width` columns in total: `y_i <= x_i`, `y_i <= 1 - x_i`, the clause
/// rows `z <= c_j1 + c_j2 + c_j3` and `z <= 1`.
fn rhs_core_rows(phi: &CnfFormula, width: usize) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>, Vec<Rational>) {
    let n = phi.num_vars;
    let (mut a, mut b_mat, mut b) = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..n {
        a.push(unit(width, i, q(1)));
        b_mat.push(unit(n, i, q(1)));
        b.push(q(0));
        a.push(unit(width, i, q(1)));
        b_mat.push(unit(n, i, q(-1)));
        b.push(q(1));
    }
    for j in 0..phi.clauses.len() {
        let (coef, constant) = phi.clause_affine(j);
        a.push(unit(width, n, q(1)));
        b_mat.push(coef);
        b.push(constant);
    }
    a.push(unit(width, n, q(1)));
    b_mat.push(vec![q(0); n]);
    b.push(q(1));
    (a, b_mat, b)
}

fn push_nonneg(a: &mut Vec<Vec<Rational>>, b_mat: &mut Vec<Vec<Rational>>, b: &mut Vec<Rational>, width: usize, k: usize) {
    for i in 0..width {
        a.push(unit(width, i, q(-1)));
        b_mat.push(vec![q(0); k]);
        b.push(q(0));
    }
}

fn pin_coordinate(n: usize, i: usize) -> TargetSet {
    TargetSet::Polyhedron {
        s: RatMatrix::from_rows(vec![unit(n, i, q(1)), unit(n, i, q(-1))], n),
        t: RatVector::from_ints(&[0, 0]),
    }
}

/// Natural form, parameter in the right-hand side, singleton target `(0, 1)`.
pub fn reduce_sat_rhs(phi: &CnfFormula) -> ReductionOutput {
    let n = phi.num_vars;
    let width = n + 1;
    let (mut a, mut b_mat, mut b) = rhs_core_rows(phi, width);
    push_nonneg(&mut a, &mut b_mat, &mut b, width, n);
    let mut ybar = vec![q(0); width];
    ybar[n] = q(1);
    ReductionOutput {
        instance: Instance {
            form: Form::Natural,
            a: RatMatrix::from_rows(a, width),
            b_mat: RatMatrix::from_rows(b_mat, n),
            b: RatVector(b),
            c_mat: RatMatrix::zeros(width, n),
            c: RatVector(vec![q(-1); width]),
            x_set: unit_cube(n),
        },
        target: TargetSet::Singleton { ybar: RatVector(ybar) },
        scenarios: vec![Scenario::Optimistic, Scenario::Pessimistic],
    }
}

/// Standard form with slacks; the target basis is `z` and all slacks but the
/// one of `z <= 1`.
pub fn reduce_sat_basis(phi: &CnfFormula) -> ReductionOutput {
    let n = phi.num_vars;
    let rows = 2 * n + phi.clauses.len() + 1;
    let width = n + 1 + rows;
    let (core, b_mat, b) = rhs_core_rows(phi, n + 1);
    let a: Vec<Vec<Rational>> = core
        .into_iter()
        .enumerate()
        .map(|(r, mut row)| {
            row.resize(width, q(0));
            row[n + 1 + r] = q(1);
            row
        })
        .collect();
    let mut c = vec![q(0); width];
    for ci in c.iter_mut().take(n + 1) {
        *ci = q(-1);
    }
    let basis = (n..n + rows).collect();
    ReductionOutput {
        instance: Instance {
            form: Form::Standard,
            a: RatMatrix::from_rows(a, width),
            b_mat: RatMatrix::from_rows(b_mat, n),
            b: RatVector(b),
            c_mat: RatMatrix::zeros(width, n),
            c: RatVector(c),
            x_set: unit_cube(n),
        },
        target: TargetSet::Basis { basis },
        scenarios: vec![Scenario::Optimistic],
    }
}

/// Adds a variable `t` coupled by `-sum y + z + t = 1`; target `t = 0`.
pub fn reduce_sat_onevar_rhs(phi: &CnfFormula) -> ReductionOutput {
    let n = phi.num_vars;
    let width = n + 2;
    let (mut a, mut b_mat, mut b) = rhs_core_rows(phi, width);
    let mut coupling = vec![q(-1); width];
    coupling[n] = q(1);
    coupling[n + 1] = q(1);
    a.push(coupling.clone());
    b_mat.push(vec![q(0); n]);
    b.push(q(1));
    a.push(coupling.into_iter().map(|v| -v).collect());
    b_mat.push(vec![q(0); n]);
    b.push(q(-1));
    push_nonneg(&mut a, &mut b_mat, &mut b, width, n);
    let mut c = vec![q(-1); width];
    c[n + 1] = q(0);
    ReductionOutput {
        instance: Instance {
            form: Form::Natural,
            a: RatMatrix::from_rows(a, width),
            b_mat: RatMatrix::from_rows(b_mat, n),
            b: RatVector(b),
            c_mat: RatMatrix::zeros(width, n),
            c: RatVector(c),
            x_set: unit_cube(n),
        },
        target: pin_coordinate(width, n + 1),
        scenarios: vec![Scenario::Optimistic, Scenario::Pessimistic],
    }
}

/// Fixed right-hand side, parameter in the objective over `(mu, nu, z)`;
/// clauses move into the parameter set. Target `z = 0`.
pub fn reduce_sat_onevar_of(phi: &CnfFormula) -> ReductionOutput {
    let n = phi.num_vars;
    let width = 2 * n + 1;
    let mut a = Vec::new();
    for i in 0..n {
        let mut r = vec![q(0); width];
        r[i] = q(1);
        r[n + i] = q(1);
        r[2 * n] = q(1);
        a.push(r);
    }
    let mut b = vec![q(1); n];
    for i in 0..width {
        a.push(unit(width, i, q(-1)));
        b.push(q(0));
    }
    let m = a.len();
    // Objective -x^T mu - (1 - x)^T nu - (n - 1/4) z.
    let mut c_rows = vec![vec![q(0); n]; width];
    let mut c = vec![q(0); width];
    for i in 0..n {
        c_rows[i][i] = q(-1);
        c_rows[n + i][i] = q(1);
        c[n + i] = q(-1);
    }
    c[2 * n] = -(q(n as i64) - Rational::new(1, 4));
    let cube = unit_cube(n);
    let mut d_rows = cube.d_mat.to_rows();
    let mut d = cube.d.0;
    for j in 0..phi.clauses.len() {
        let (coef, constant) = phi.clause_affine(j);
        d_rows.push(coef.into_iter().map(|v| -v).collect());
        d.push(constant - q(1));
    }
    ReductionOutput {
        instance: Instance {
            form: Form::Natural,
            a: RatMatrix::from_rows(a, width),
            b_mat: RatMatrix::zeros(m, n),
            b: RatVector(b),
            c_mat: RatMatrix::from_rows(c_rows, n),
            c: RatVector(c),
            x_set: ParamPolyhedron { d_mat: RatMatrix::from_rows(d_rows, n), d: RatVector(d) },
        },
        target: pin_coordinate(width, 2 * n),
        scenarios: vec![Scenario::Optimistic, Scenario::Pessimistic],
    }
}

/// Exhaustive truth-table check.
pub fn sat_bruteforce(phi: &CnfFormula, max_vars: usize) -> Result<bool> {
    let n = phi.num_vars;
    if n > max_vars {
        return Err(Error::SizeGuard { what: format!("truth table over {n} variables"), budget: 1u64 << max_vars.min(63) });
    }
    let mut assignment = vec![false; n];
    for mask in 0u64..(1u64 << n) {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        if phi.eval(&assignment) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn parse_err(message: impl Into<String>, line: usize, column: usize) -> Error {
    Error::Parse { message: message.into(), line, column }
}

/// Reads DIMACS CNF. Clauses shorter than three literals are padded by
/// repeating their first literal.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<(i32, usize, usize)> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            let parts: Vec<&str> = trimmed.split_whitespace().collect();
            match parts.as_slice() {
                ["p", "cnf", n, m] => {
                    let n = n.parse().map_err(|_| parse_err("bad variable count", ln, 1))?;
                    let m = m.parse().map_err(|_| parse_err("bad clause count", ln, 1))?;
                    header = Some((n, m));
                }
                _ => return Err(parse_err("expected `p cnf <vars> <clauses>`", ln, 1)),
            }
            continue;
        }
        let Some((n, _)) = header else {
            return Err(parse_err("clause before the `p cnf` header", ln, 1));
        };
        let mut col = 0;
        for tok in line.split_whitespace() {
            col = line[col..].find(tok).map(|p| p + col).unwrap_or(col);
            let column = col + 1;
            let lit: i32 = tok.parse().map_err(|_| parse_err(format!("bad literal `{tok}`"), ln, column))?;
            col += tok.len();
            if lit == 0 {
                let clause = finish_clause(&current, ln, column)?;
                clauses.push(clause);
                current.clear();
                continue;
            }
            if lit.unsigned_abs() as usize > n {
                return Err(parse_err(format!("literal {lit} exceeds {n} variables"), ln, column));
            }
            current.push((lit, ln, column));
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err("missing `p cnf` header", 1, 1));
    };
    if let Some(&(_, ln, col)) = current.first() {
        return Err(parse_err("last clause is not terminated by 0", ln, col));
    }
    if clauses.len() != m {
        return Err(parse_err(format!("header announces {m} clauses, found {}", clauses.len()), 1, 1));
    }
    Ok(CnfFormula { num_vars: n, clauses })
}

fn finish_clause(lits: &[(i32, usize, usize)], ln: usize, column: usize) -> Result<[i32; 3]> {
    match lits {
        [] => Err(parse_err("empty clause", ln, column)),
        [a] => Ok([a.0, a.0, a.0]),
        [a, b] => Ok([a.0, b.0, a.0]),
        [a, b, c] => Ok([a.0, b.0, c.0]),
        [_, _, _, d, ..] => Err(parse_err("clause has more than three literals", d.1, d.2)),
    }
}
