//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use icis_index::gobelin::{
    build_complex, signed_permutation_equivalent, term_basis, term_rank, WeaveBasisElement,
};
use icis_index::local::{local_dimension, DegreeCap};
use icis_index::pipeline::{
    compute_index, cross_check, emit_report, Formula, IndexOptions, IndexReport, Job, OutputFormat,
    Prepared,
};
use icis_index::poly::{parse_polynomial, Monomial, PolyMatrix, VarContext};
use icis_index::Field;
use rand::SeedableRng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn index(job: Job) -> Result<IndexReport, String> {
    compute_index(job, &IndexOptions::default()).map_err(|e| e.to_string())
}

fn example(name: &str, tau: usize, idx: i64, budget: Duration) -> Check {
    let t = Instant::now();
    let r = index(common::job(name))?;
    let elapsed = t.elapsed();
    let expected_sum = format!("9 \u{2212} 4 + {tau} = {idx}");
    ensure(r.dim_b == 16, format!("dim B = {}", r.dim_b))?;
    ensure(r.tau_prime == tau, format!("tau' = {}", r.tau_prime))?;
    ensure(r.h == vec![9, 4, tau], format!("h = {:?}", r.h))?;
    ensure(
        r.index() == idx && r.index_gsv == idx,
        format!("index = {}", r.index()),
    )?;
    ensure(
        emit_report(&r, OutputFormat::Text).contains(&expected_sum),
        "text report lacks the alternating sum",
    )?;
    ensure(elapsed < budget, format!("took {elapsed:?}"))?;
    Ok(format!(
        "dim B 16, tau' {tau}, h (9, 4), {expected_sum} in {elapsed:.2?}"
    ))
}

/// Degree-`i` exponent vectors in `k` variables, by brute force over the box.
fn brute_force_monomials(k: usize, i: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut e = vec![0u32; k];
    loop {
        if e.iter().sum::<u32>() == i {
            out.push(e.clone());
        }
        let mut p = 0;
        loop {
            if p == k {
                return out;
            }
            e[p] += 1;
            if e[p] <= i {
                break;
            }
            e[p] = 0;
            p += 1;
        }
    }
}

fn rank_formula() -> Check {
    let mut checked = 0;
    for k in 1..=4 {
        for i in 0..=8u32 {
            let expected = brute_force_monomials(k, i);
            let t = term_basis(k, i as usize);
            ensure(
                t.rank() == expected.len() && term_rank(k, i as usize) == expected.len(),
                format!("k={k} i={i}: {} vs {}", t.rank(), expected.len()),
            )?;
            for e in &expected {
                let m = Monomial::new(e.clone());
                let w = WeaveBasisElement::mu_inverse(&m);
                ensure(
                    w.mu() == m && w.degree() == i as usize,
                    format!("mu(mu^-1({e:?})) != id"),
                )?;
                ensure(
                    t.position(&w).is_some(),
                    format!("{e:?} missing from the basis"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} monomials, k = 1..4, i = 0..8"))
}

fn random_complexes() -> Check {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let shapes = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)];
    let mut count = 0;
    for t in 0..20 {
        let (k, nvars) = shapes[t % shapes.len()];
        let inst = common::random_instance(&mut rng, k, nvars, 8);
        let prepared =
            Prepared::new(inst.job(), DegreeCap::default()).map_err(|e| e.to_string())?;
        let top = nvars - k + 2;
        let complex = build_complex(k, top, &inst.f, &prepared.c_in_b, &prepared.b)
            .map_err(|e| format!("instance {t}: {e}"))?;
        let maps: Vec<_> = complex
            .gammas
            .iter()
            .map(|g| g.scalarize(&prepared.b))
            .collect();
        for i in 1..maps.len() {
            ensure(
                maps[i - 1].mul(&maps[i]).unwrap().is_zero(),
                format!("instance {t}: gamma_{} gamma_{i} != 0", i - 1),
            )?;
        }
        count += 1;
    }
    Ok(format!(
        "{count} instances (k <= 3, dim B <= 8), all composites zero"
    ))
}

fn printed_display(vars: &VarContext, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(
        vars.len(),
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_polynomial(s, vars).unwrap())
                    .collect()
            })
            .collect(),
    )
    .unwrap()
}

fn specialization() -> Check {
    let mut lines = Vec::new();
    for name in [
        "example1.job",
        "example2.job",
        "cone.job",
        "a1_threefold.job",
        "cusp.job",
        "line.job",
    ] {
        let cc = cross_check(common::job(name), DegreeCap::default())
            .map_err(|e| format!("{name}: {e}"))?;
        for e in &cc.entries {
            ensure(
                e.agrees,
                format!("{name} {}: h {:?} vs {:?}", e.formula, e.h, cc.general.h),
            )?;
            ensure(
                e.matrices_equivalent == Some(true),
                format!(
                    "{name} {}: matrices not signed-permutation equivalent",
                    e.formula
                ),
            )?;
        }
        lines.push(format!("{name} ({})", cc.entries.len()));
    }
    // The second map as displayed with each example.
    let displays: [(&str, &[&[&str]]); 2] = [
        (
            "example1.job",
            &[
                &["-x*y-z^2-w^2", "-2*y-w", "-z"],
                &["x^2+y^2+z*w", "2*x", "-y-1/2*w"],
            ],
        ),
        (
            "example2.job",
            &[
                &["x*y+z^2+w^2", "2304*z*w-576*w^2+12*x-12*y", "0"],
                &[
                    "-x^3-y^2-z*w",
                    "-192*w^2+4*y-z+w",
                    "1920*z*w-576*w^2+12*x-10*y+2*z-2*w",
                ],
            ],
        ),
    ];
    for (name, rows) in displays {
        let job = common::job(name);
        let shown = printed_display(&job.vars, rows);
        let p = Prepared::new(job, DegreeCap::default()).map_err(|e| e.to_string())?;
        let woven = p.complex(Formula::General).map_err(|e| e.to_string())?;
        let shown = icis_index::gobelin::BMatrix::reduced(shown, &p.b);
        ensure(
            signed_permutation_equivalent(woven.gammas[1].as_poly_matrix(), shown.as_poly_matrix())
                .unwrap(),
            format!("{name}: displayed gamma_1 differs"),
        )?;
    }
    Ok(format!(
        "cross-checked {}; displayed gamma_1 of both examples",
        lines.join(", ")
    ))
}

fn two_routes() -> Check {
    let mut n = 0;
    let mut jobs = common::regression_jobs();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for (t, (k, nv)) in [(1, 2), (2, 3), (2, 4), (3, 4)].into_iter().enumerate() {
        jobs.push((
            format!("random{t}"),
            common::random_instance(&mut rng, k, nv, 8).job(),
        ));
    }
    for (name, job) in jobs {
        let p = Prepared::new(job, DegreeCap::default()).map_err(|e| format!("{name}: {e}"))?;
        for f in Formula::ALL
            .into_iter()
            .filter(|f| f.applies(p.job.codim(), p.job.dim()))
        {
            let r = p.route(f).map_err(|e| format!("{name} {f}: {e}"))?;
            ensure(
                r.via_homology == r.via_closed_form,
                format!("{name} {f}: {} vs {}", r.via_homology, r.via_closed_form),
            )?;
            n += 1;
        }
    }
    Ok(format!("{n} (job, formula) pairs agree"))
}

fn cofactor_independence() -> Check {
    let printed = common::job("example1.job");
    let mut lifted = printed.clone();
    lifted.c = None;
    let a = index(printed)?;
    let b = index(lifted)?;
    ensure(
        (a.h.clone(), a.tau_prime, a.index()) == (b.h.clone(), b.tau_prime, b.index()),
        format!("{:?} vs {:?}", a, b),
    )?;
    Ok(format!(
        "printed and computed c both give h {:?}, index {}",
        a.h,
        a.index()
    ))
}

fn locality() -> Check {
    let v = VarContext::new(["x"]).unwrap();
    let g = parse_polynomial("x^2-x^3", &v).unwrap();
    let d = local_dimension(&[g], DegreeCap::default()).map_err(|e| e.to_string())?;
    ensure(d == 2, format!("got {d}"))?;
    Ok("dim O/(x^2 - x^3) = 2".into())
}

fn trivial_cases() -> Check {
    let line = index(common::job("line.job"))?;
    let axis = index(common::job("axis.job"))?;
    let cone = index(common::job("cone.job"))?;
    ensure(line.index() == 1, format!("line: {}", line.index()))?;
    ensure(axis.index() == 1, format!("axis: {}", axis.index()))?;
    ensure(cone.index() == 2, format!("cone: {}", cone.index()))?;
    let curve = compute_index(
        common::job("axis.job"),
        &IndexOptions {
            formula: Formula::Curve,
            ..Default::default()
        },
    )
    .map_err(|e| e.to_string())?;
    let codim1 = compute_index(
        common::job("cone.job"),
        &IndexOptions {
            formula: Formula::Codim1,
            ..Default::default()
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(
        curve.index() == 1,
        format!("axis via curve formula: {}", curve.index()),
    )?;
    ensure(
        codim1.index() == 2,
        format!("cone via codim1 formula: {}", codim1.index()),
    )?;
    Ok("line 1, axis 1 (curve formula 1), cone 2 (hypersurface formula 2)".into())
}

fn field_consistency() -> Check {
    let fp = Field::prime(32003).unwrap();
    let mut n = 0;
    for (name, job) in common::regression_jobs() {
        let q = index(job.clone())?;
        let p = index(job.to_field(fp).map_err(|e| e.to_string())?)?;
        ensure(
            (q.dim_b, q.tau_prime, &q.h) == (p.dim_b, p.tau_prime, &p.h),
            format!("{name}: {:?} vs {:?}", q.h, p.h),
        )?;
        n += 1;
    }
    Ok(format!("{n} jobs agree over Q and F_32003"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("example 1 end to end", || {
            example("example1.job", 7, 12, Duration::from_secs(60))
        }),
        ("example 2 end to end", || {
            example("example2.job", 8, 13, Duration::from_secs(120))
        }),
        ("term ranks and mu bijection", rank_formula),
        ("randomized complexes square to zero", random_complexes),
        ("specialized matrices agree with the weave", specialization),
        ("homology route equals closed form", two_routes),
        ("cofactor independence", cofactor_independence),
        ("local dimension", locality),
        ("smooth and trivial cases", trivial_cases),
        ("rational and prime-field homology", field_consistency),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
