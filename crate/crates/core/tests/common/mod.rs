#![allow(dead_code)]

use std::path::PathBuf;

use icis_index::local::{local_dimension, DegreeCap};
use icis_index::pipeline::{load_job_file, Job};
use icis_index::poly::{subsets, Monomial, PolyMatrix, Polynomial, VarContext};
use icis_index::tangency::{tau_prime, verify_tangency};
use icis_index::Field;
use rand::rngs::StdRng;
use rand::Rng;

pub fn job_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../jobs")
        .join(name)
}

pub fn job(name: &str) -> Job {
    load_job_file(&job_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Every job shipped in the jobs directory, sorted by name.
pub fn regression_jobs() -> Vec<(String, Job)> {
    let mut names: Vec<String> = std::fs::read_dir(job_path(""))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".job"))
        .collect();
    names.sort();
    names.into_iter().map(|n| (n.clone(), job(&n))).collect()
}

const NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

pub fn vars(n: usize) -> VarContext {
    VarContext::new(NAMES[..n].iter().copied()).unwrap()
}

fn q(n: i64) -> icis_index::Scalar {
    Field::Rational.from_int(n)
}

fn random_form(rng: &mut StdRng, nvars: usize, degree: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..terms {
        let mut exps = vec![0u32; nvars];
        for _ in 0..degree {
            exps[rng.gen_range(0..nvars)] += 1;
        }
        let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        p = p.add(&Polynomial::term(q(c), Monomial::new(exps)));
    }
    p
}

/// Determinant-built fields annihilated by the Jacobian: for every set `S` of
/// `k+1` variables, `sum_t (-1)^t det(phi[:, S \ s_t]) e_{s_t}`.
pub fn hamiltonian_fields(phi: &PolyMatrix) -> Vec<Vec<Polynomial>> {
    let (k, nvars) = (phi.rows(), phi.cols());
    subsets(nvars, k + 1)
        .into_iter()
        .map(|s| {
            let mut h = vec![Polynomial::zero(nvars); nvars];
            for (t, &st) in s.iter().enumerate() {
                let cols: Vec<usize> = s.iter().copied().filter(|&c| c != st).collect();
                let rows: Vec<Vec<Polynomial>> = (0..k)
                    .map(|r| cols.iter().map(|&c| phi.get(r, c).clone()).collect())
                    .collect();
                let det = PolyMatrix::from_rows(nvars, rows)
                    .unwrap()
                    .determinant()
                    .unwrap();
                h[st] = if t % 2 == 0 { det } else { det.neg() };
            }
            h
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub vars: VarContext,
    pub f: Vec<Polynomial>,
    pub x: Vec<Polynomial>,
    pub c: PolyMatrix,
    pub dim_b: usize,
}

impl Instance {
    pub fn job(&self) -> Job {
        Job {
            vars: self.vars.clone(),
            f: self.f.clone(),
            x: self.x.clone(),
            c: Some(self.c.clone()),
            field: Field::Rational,
        }
    }
}

/// A random ICIS with a tangent vector field `X = sum l_S H_S + sum_a f_a W_a`,
/// where `phi H_S = 0` and `W_a` are random linear fields, so `c = [phi W_1 | ... | phi W_k]`.
/// Draws until `1 <= dim B <= max_dim_b` and `tau'` is finite.
pub fn random_instance(rng: &mut StdRng, k: usize, nvars: usize, max_dim_b: usize) -> Instance {
    // Small quotients never need high degrees; a tight cap rejects hopeless draws quickly.
    let cap = DegreeCap(12);
    let vars = vars(nvars);
    for _ in 0..500 {
        let f: Vec<Polynomial> = (0..k)
            .map(|a| {
                let mut p = random_form(rng, nvars, 2, 3);
                // With three equations in four variables, linear parts in two of
                // them keep the minors (and so dim B) small.
                let linear = if k == 3 {
                    a < 2
                } else {
                    a + 2 < nvars && rng.gen_bool(0.2)
                };
                if linear {
                    p = p.add(&Polynomial::variable(nvars, a, Field::Rational));
                }
                p
            })
            .collect();
        if f.iter().any(Polynomial::is_zero) {
            continue;
        }
        let phi = PolyMatrix::jacobian(&f, nvars);
        let mut x = vec![Polynomial::zero(nvars); nvars];
        for h in hamiltonian_fields(&phi) {
            let l = q(rng.gen_range(-2..=2));
            for (xi, hi) in x.iter_mut().zip(&h) {
                *xi = xi.add(&hi.scale(&l));
            }
        }
        let mut c = PolyMatrix::zeros(k, k, nvars);
        for (a, fa) in f.iter().enumerate() {
            let w: Vec<Polynomial> = (0..nvars).map(|_| random_form(rng, nvars, 1, 2)).collect();
            for (xi, wi) in x.iter_mut().zip(&w) {
                *xi = xi.add(&fa.mul(wi));
            }
            for (b, e) in phi.apply(&w).unwrap().into_iter().enumerate() {
                c.set(b, a, e);
            }
        }
        if x.iter().any(|p| p.constant_term().is_some()) || x.iter().all(Polynomial::is_zero) {
            continue;
        }
        assert!(verify_tangency(&f, &x, &c).unwrap());
        // Cheap screen modulo a prime before the exact computation.
        let fp = Field::prime(32003).unwrap();
        let x_mod: Vec<Polynomial> = x.iter().map(|p| p.to_field(fp).unwrap()).collect();
        let f_mod: Vec<Polynomial> = f.iter().map(|p| p.to_field(fp).unwrap()).collect();
        if !matches!(local_dimension(&x_mod, DegreeCap(8)), Ok(d) if (1..=max_dim_b).contains(&d)) {
            continue;
        }
        if tau_prime(&f_mod, nvars, DegreeCap(8)).is_err() {
            continue;
        }
        let Ok(dim_b) = local_dimension(&x, cap) else {
            continue;
        };
        if dim_b == 0 || dim_b > max_dim_b {
            continue;
        }
        if tau_prime(&f, nvars, cap).is_err() {
            continue;
        }
        return Instance {
            vars,
            f,
            x,
            c,
            dim_b,
        };
    }
    panic!("no admissible random instance for k = {k}, N = {nvars}");
}
