//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use invlfp::{Form, Instance, ParamPolyhedron, RatMatrix, RatVector, Rational};
use rand::Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn qr(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn vec_of(v: &[i64]) -> RatVector {
    RatVector::from_ints(v)
}

/// The running example: `min x*y1 - x*y2` over the segment `y1 + y2 = 1`,
/// `y >= 0`, with `x` in `[-1, 1]`.
pub fn i1() -> Instance {
    Instance {
        form: Form::Standard,
        a: RatMatrix::from_ints(&[&[1, 1]], 2),
        b_mat: RatMatrix::zeros(1, 1),
        b: vec_of(&[1]),
        c_mat: RatMatrix::from_ints(&[&[1], &[-1]], 1),
        c: vec_of(&[0, 0]),
        x_set: ParamPolyhedron::boxed(&[q(-1)], &[q(1)]),
    }
}

/// `min -y` over `0 <= y <= x` with `x` in `[0, 1]`.
pub fn i2() -> Instance {
    Instance {
        form: Form::Natural,
        a: RatMatrix::from_ints(&[&[1], &[-1]], 1),
        b_mat: RatMatrix::from_ints(&[&[1], &[0]], 1),
        b: vec_of(&[0, 0]),
        c_mat: RatMatrix::zeros(1, 1),
        c: vec_of(&[-1]),
        x_set: ParamPolyhedron::boxed(&[q(0)], &[q(1)]),
    }
}

/// `min x*y` over `0 <= y <= 1` with `x` in `[-1, 1]`.
pub fn i3() -> Instance {
    Instance {
        form: Form::Natural,
        a: RatMatrix::from_ints(&[&[1], &[-1]], 1),
        b_mat: RatMatrix::zeros(2, 1),
        b: vec_of(&[1, 0]),
        c_mat: RatMatrix::from_ints(&[&[1]], 1),
        c: vec_of(&[0]),
        x_set: ParamPolyhedron::boxed(&[q(-1)], &[q(1)]),
    }
}

pub fn with_box(mut inst: Instance, lo: &[Rational], hi: &[Rational]) -> Instance {
    inst.x_set = ParamPolyhedron::boxed(lo, hi);
    inst
}

fn entry<R: Rng>(rng: &mut R) -> Rational {
    q(rng.gen_range(-2..=2))
}

fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_rows((0..rows).map(|_| (0..cols).map(|_| entry(rng)).collect()).collect(), cols)
}

/// Random standard-form instance: `n <= 4`, `m <= 2`, `k <= 2`, entries in
/// `{-2..2}`, `X` a random integer box.
pub fn random_standard<R: Rng>(rng: &mut R) -> Instance {
    let n = rng.gen_range(1..=4);
    let m = rng.gen_range(1..=2usize.min(n));
    let k = rng.gen_range(1..=2);
    let lo: Vec<Rational> = (0..k).map(|_| q(rng.gen_range(-2..=1))).collect();
    let hi: Vec<Rational> = lo.iter().map(|l| l + &q(rng.gen_range(0..=2))).collect();
    Instance {
        form: Form::Standard,
        a: matrix(rng, m, n),
        b_mat: matrix(rng, m, k),
        b: (0..m).map(|_| entry(rng)).collect(),
        c_mat: matrix(rng, n, k),
        c: (0..n).map(|_| entry(rng)).collect(),
        x_set: ParamPolyhedron::boxed(&lo, &hi),
    }
}

/// Box bounds of a boxed parameter set, read back from its rows.
pub fn box_bounds(inst: &Instance) -> (Vec<Rational>, Vec<Rational>) {
    let k = inst.k();
    let (mut lo, mut hi) = (vec![q(0); k], vec![q(0); k]);
    for r in 0..inst.x_set.d_mat.rows() {
        let row = inst.x_set.d_mat.row(r);
        let i = row.iter().position(|v| !v.is_zero()).expect("box row");
        if row[i].is_positive() {
            hi[i] = inst.x_set.d[r].clone();
        } else {
            lo[i] = -inst.x_set.d[r].clone();
        }
    }
    (lo, hi)
}

/// All points of the `steps+1`-per-axis grid on a boxed `X`.
pub fn grid(inst: &Instance, steps: i64) -> Vec<RatVector> {
    let (lo, hi) = box_bounds(inst);
    let mut out = vec![Vec::new()];
    for i in 0..lo.len() {
        let step = (&hi[i] - &lo[i]) / q(steps);
        let axis: Vec<Rational> = (0..=steps).map(|j| &lo[i] + &(&step * &q(j))).collect();
        out = out
            .into_iter()
            .flat_map(|p: Vec<Rational>| {
                axis.iter().map(move |v| {
                    let mut p = p.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
        if hi[i] == lo[i] {
            out.dedup();
        }
    }
    out.into_iter().map(RatVector).collect()
}

pub fn sample_x<R: Rng>(rng: &mut R, inst: &Instance) -> RatVector {
    let (lo, hi) = box_bounds(inst);
    lo.iter().zip(&hi).map(|(l, h)| l + &(&(h - l) * &qr(rng.gen_range(0..=4), 4))).collect()
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if n < size {
        return vec![];
    }
    let mut out = subsets(n - 1, size);
    for mut s in subsets(n - 1, size - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Vertices of `{y >= 0 : A y = rhs}` by enumerating column subsets.
pub fn standard_vertices(a: &RatMatrix, rhs: &RatVector) -> Vec<RatVector> {
    let n = a.cols();
    let rows = a.independent_rows();
    let r = rows.len();
    let (ar, br) = (a.select_rows(&rows), rhs.select(&rows));
    let mut out: Vec<RatVector> = Vec::new();
    for cols in subsets(n, r) {
        let sub = ar.select_cols(&cols);
        if sub.rank() < r {
            continue;
        }
        let Ok(ys) = sub.solve_unique(&br, &[]) else { continue };
        let mut y = RatVector::zeros(n);
        for (p, &c) in cols.iter().enumerate() {
            y[c] = ys[p].clone();
        }
        if y.iter().all(|v| !v.is_negative()) && a.mul_vec(&y) == *rhs && !out.contains(&y) {
            out.push(y);
        }
    }
    out
}

/// Optimal vertices of the standard-form LP at `x` when the optimum is
/// attained; `None` when the LP is infeasible or unbounded. Unboundedness is
/// detected on the recession cone by the exact LP solver.
pub fn optimal_vertices(inst: &Instance, x: &RatVector) -> Option<Vec<RatVector>> {
    let lp = inst.lp_at(x);
    let opt = invlfp_linalg::solve_lp(&lp).ok()?.into_optimum()?;
    let cost = inst.cost_at(x);
    Some(standard_vertices(&inst.a, &inst.rhs_at(x)).into_iter().filter(|v| cost.dot(v) == opt.value).collect())
}

/// A singleton target: a vertex of the feasible region at a sampled `x`, or
/// a random integer point when the region is empty there.
pub fn random_vertex_target<R: Rng>(rng: &mut R, inst: &Instance) -> RatVector {
    let x = sample_x(rng, inst);
    let verts = standard_vertices(&inst.a, &inst.rhs_at(&x));
    if verts.is_empty() {
        (0..inst.n()).map(|_| q(rng.gen_range(0..=2))).collect()
    } else {
        verts[rng.gen_range(0..verts.len())].clone()
    }
}
