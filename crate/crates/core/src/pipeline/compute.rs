use std::fmt;
use std::str::FromStr;

use crate::error::{IndexError, Result};
use crate::gobelin::{
    build_complex, printed_complex, signed_permutation_equivalent, PrintedFamily,
    SmallGobelinComplex,
};
use crate::homology::cokernel_dimension;
use crate::local::{local_dimension, quotient_algebra, standard_basis, DegreeCap, QuotientAlgebra};
use crate::pipeline::report::{IndexReport, PRIME_FIELD_CAVEAT};
use crate::pipeline::Job;
use crate::poly::{PolyMatrix, Polynomial};
use crate::tangency::{compute_cofactor, tau_prime, verify_tangency, Cofactor};

/// Which formula produces the reported index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// The woven complex for any `k` and the closed form in `coker gamma_{n-1}`.
    General,
    /// One equation: the `f`/`c` alternating complex, with
    /// `dim B - dim B/(c) + tau'` (n even) or `dim B/(f) - tau'` (n odd).
    Codim1,
    /// Two equations: the `phi_i`/`psi_i` complex, with
    /// `i dim B - coker psi_i + tau'` (n = 2i) or `(1-i) dim B + coker phi_i - tau'` (n = 2i-1).
    Codim2,
    /// Curves: `dim O/((X) + (f)) - tau'`.
    Curve,
    /// Surfaces: `dim B - coker gamma_1 + tau'` with the explicit `gamma_1`.
    Surface,
}

impl Formula {
    pub const ALL: [Formula; 5] = [
        Formula::General,
        Formula::Codim1,
        Formula::Codim2,
        Formula::Curve,
        Formula::Surface,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::General => "general",
            Formula::Codim1 => "codim1",
            Formula::Codim2 => "codim2",
            Formula::Curve => "curve",
            Formula::Surface => "surface",
        }
    }

    /// Whether the formula is available for `k` equations and dimension `n`.
    pub fn applies(self, k: usize, n: usize) -> bool {
        match self {
            Formula::General => true,
            Formula::Codim1 => k == 1,
            Formula::Codim2 => k == 2,
            Formula::Curve => n == 1,
            Formula::Surface => n == 2,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| IndexError::Input(format!("unknown formula `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexOptions {
    pub cap: DegreeCap,
    pub formula: Formula,
}

impl Default for IndexOptions {
    fn default() -> Self {
        Self {
            cap: DegreeCap::default(),
            formula: Formula::General,
        }
    }
}

/// Everything shared by the formulas: the validated job, a cofactor matrix
/// reduced into `B`, `B` itself and `tau'`.
pub struct Prepared {
    pub job: Job,
    pub cofactor: Cofactor,
    pub cofactor_supplied: bool,
    pub c_in_b: PolyMatrix,
    pub b: QuotientAlgebra,
    pub tau_prime: usize,
    pub cap: DegreeCap,
}

/// One formula's view of the index.
#[derive(Clone, Debug)]
pub struct RouteResult {
    pub formula: Formula,
    pub complex: Option<SmallGobelinComplex>,
    /// `h_0, ..., h_{n-1}` followed by `h_n = tau'`.
    pub h: Vec<usize>,
    pub via_homology: i64,
    pub via_closed_form: i64,
}

impl Prepared {
    pub fn new(job: Job, cap: DegreeCap) -> Result<Self> {
        let (k, n) = (job.codim(), job.dim());
        if k == 0 || n == 0 {
            return Err(IndexError::Input(format!(
                "n must be positive: {k} equations in {} variables",
                job.ambient_dim()
            )));
        }
        for (name, list) in [("f", &job.f), ("X", &job.x)] {
            if let Some(i) = list.iter().position(|p| p.constant_term().is_some()) {
                return Err(IndexError::Input(format!(
                    "{name}_{} does not vanish at the origin",
                    i + 1
                )));
            }
        }

        let (cofactor, supplied) = match &job.c {
            Some(c) => {
                if !verify_tangency(&job.f, &job.x, c)? {
                    return Err(IndexError::NotTangent(
                        "the supplied c does not satisfy phi X = c f".into(),
                    ));
                }
                (Cofactor::from_matrix(c.clone())?, true)
            }
            None => (compute_cofactor(&job.f, &job.x, cap)?, false),
        };

        let gens: Vec<Polynomial> = job.x.iter().filter(|p| !p.is_zero()).cloned().collect();
        if gens.is_empty() {
            return Err(IndexError::InfiniteDimB);
        }
        let sb = standard_basis(&gens, cap)?;
        if !sb.is_zero_dimensional() {
            return Err(IndexError::InfiniteDimB);
        }
        let b = quotient_algebra(sb).map_err(|e| match e {
            IndexError::NotZeroDimensional => IndexError::InfiniteDimB,
            other => other,
        })?;

        let tau = tau_prime(&job.f, job.ambient_dim(), cap)?;

        let mut c_in_b = PolyMatrix::zeros(k, k, job.ambient_dim());
        for (a, u) in cofactor.units().iter().enumerate() {
            let inv = b.inverse(u)?;
            for col in 0..k {
                let e = b.reduce(&cofactor.numerators().get(a, col).mul(&inv));
                c_in_b.set(a, col, e);
            }
        }

        Ok(Prepared {
            job,
            cofactor,
            cofactor_supplied: supplied,
            c_in_b,
            b,
            tau_prime: tau,
            cap,
        })
    }

    pub fn dim_b(&self) -> usize {
        self.b.dimension()
    }

    pub fn complex(&self, formula: Formula) -> Result<SmallGobelinComplex> {
        let (k, n) = (self.job.codim(), self.job.dim());
        let (f, c, b) = (&self.job.f, &self.c_in_b, &self.b);
        match formula {
            Formula::General => build_complex(k, n, f, c, b),
            Formula::Codim1 => printed_complex(PrintedFamily::Codim1, n, f, c, b),
            Formula::Codim2 => printed_complex(PrintedFamily::Codim2, n, f, c, b),
            Formula::Curve | Formula::Surface => {
                printed_complex(PrintedFamily::LowDegree, n, f, c, b)
            }
        }
    }

    /// Runs one formula; fails with [`IndexError::Inconsistency`] when its
    /// homology route and closed form disagree.
    pub fn route(&self, formula: Formula) -> Result<RouteResult> {
        let (k, n) = (self.job.codim(), self.job.dim());
        if !formula.applies(k, n) {
            return Err(IndexError::Unsupported(format!(
                "formula `{formula}` does not apply to k = {k}, n = {n}"
            )));
        }
        let d = self.dim_b() as i64;
        let tau = self.tau_prime as i64;
        let sign = |i: usize| if i % 2 == 0 { 1 } else { -1 };

        let complex = self.complex(formula)?;
        let scalar = complex.scalarize(&self.b)?;
        let mut h = scalar.homology_dimensions();
        h.truncate(n);
        if formula == Formula::Curve {
            // h_0 = dim B/(f) = dim O/((X) + (f)), from its own standard basis.
            let mut gens = self.job.x.clone();
            gens.extend(self.job.f.iter().cloned());
            h[0] = local_dimension(&gens, self.cap)?;
        }
        h.push(self.tau_prime);
        let via_homology: i64 = h.iter().enumerate().map(|(i, &v)| sign(i) * v as i64).sum();

        let last = &scalar.maps()[n - 1];
        let coker = cokernel_dimension(last) as i64;
        let via_closed_form = match formula {
            Formula::General => {
                let binomial_sum: i64 = (0..n.saturating_sub(1))
                    .map(|j| sign(j) * crate::gobelin::term_rank(k, j) as i64)
                    .sum();
                binomial_sum * d + sign(n - 1) * coker + sign(n) * tau
            }
            Formula::Codim1 => {
                let c = self.c_in_b.get(0, 0);
                let f = &self.job.f[0];
                if n % 2 == 0 {
                    d - cokernel_dimension(&self.b.multiplication_matrix(c)) as i64 + tau
                } else {
                    cokernel_dimension(&self.b.multiplication_matrix(f)) as i64 - tau
                }
            }
            Formula::Codim2 => {
                let i = n.div_ceil(2) as i64;
                if n % 2 == 0 {
                    i * d - coker + tau
                } else {
                    (1 - i) * d + coker - tau
                }
            }
            Formula::Curve => coker - tau,
            Formula::Surface => d - coker + tau,
        };
        if via_homology != via_closed_form {
            return Err(IndexError::Inconsistency(format!(
                "formula `{formula}`: alternating sum {via_homology} != closed form {via_closed_form}"
            )));
        }
        Ok(RouteResult {
            formula,
            complex: Some(complex),
            h,
            via_homology,
            via_closed_form,
        })
    }

    pub fn report(&self, route: &RouteResult) -> IndexReport {
        let mut warnings = Vec::new();
        if !self.job.field.is_rational() {
            warnings.push(PRIME_FIELD_CAVEAT.to_string());
        }
        if !self.cofactor_supplied {
            warnings.push(
                "c was not supplied; a cofactor matrix was computed by local division".into(),
            );
        }
        IndexReport {
            dim_b: self.dim_b(),
            tau_prime: self.tau_prime,
            h: route.h.clone(),
            index_via_homology: route.via_homology,
            index_via_closed_form: route.via_closed_form,
            index_gsv: route.via_homology,
            formula_used: route.formula,
            field: self.job.field,
            warnings,
        }
    }
}

/// A finished computation: the report and the complex it was read from.
pub struct Computation {
    pub report: IndexReport,
    pub complex: Option<SmallGobelinComplex>,
}

pub fn run(job: Job, options: &IndexOptions) -> Result<Computation> {
    let prepared = Prepared::new(job, options.cap)?;
    let route = prepared.route(options.formula)?;
    Ok(Computation {
        report: prepared.report(&route),
        complex: route.complex,
    })
}

pub fn compute_index(job: Job, options: &IndexOptions) -> Result<IndexReport> {
    run(job, options).map(|c| c.report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckEntry {
    pub formula: Formula,
    pub h: Vec<usize>,
    pub index: i64,
    pub agrees: bool,
    /// Whether every map agrees with the woven one up to signed permutations
    /// of rows and columns; `None` when the search was too large.
    pub matrices_equivalent: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub general: IndexReport,
    pub entries: Vec<CrossCheckEntry>,
}

impl CrossCheck {
    pub fn all_agree(&self) -> bool {
        self.entries.iter().all(|e| e.agrees)
    }
}

/// Recomputes the index with every applicable specialized formula and
/// compares with the general route.
pub fn cross_check(job: Job, cap: DegreeCap) -> Result<CrossCheck> {
    let prepared = Prepared::new(job, cap)?;
    let (k, n) = (prepared.job.codim(), prepared.job.dim());
    let general = prepared.route(Formula::General)?;
    let woven = general
        .complex
        .as_ref()
        .expect("general route builds a complex");
    let mut entries = Vec::new();
    for formula in Formula::ALL.into_iter().skip(1).filter(|f| f.applies(k, n)) {
        let r = prepared.route(formula)?;
        let printed = r.complex.as_ref().expect("every route builds a complex");
        let mut equivalent = Some(true);
        for (g, p) in woven.gammas.iter().zip(&printed.gammas) {
            match signed_permutation_equivalent(g.as_poly_matrix(), p.as_poly_matrix()) {
                Ok(true) => {}
                Ok(false) => {
                    equivalent = Some(false);
                    break;
                }
                Err(_) => equivalent = None,
            }
        }
        entries.push(CrossCheckEntry {
            formula,
            agrees: r.h == general.h && r.via_homology == general.via_homology,
            h: r.h,
            index: r.via_homology,
            matrices_equivalent: equivalent,
        });
    }
    if entries.is_empty() {
        return Err(IndexError::Unsupported(format!(
            "no specialized formula applies to k = {k}, n = {n}"
        )));
    }
    Ok(CrossCheck {
        general: prepared.report(&general),
        entries,
    })
}

/// `dim B = dim O/(X)`.
pub fn dim_b(job: &Job, cap: DegreeCap) -> Result<usize> {
    let gens: Vec<Polynomial> = job.x.iter().filter(|p| !p.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Err(IndexError::InfiniteDimB);
    }
    match local_dimension(&gens, cap) {
        Err(IndexError::NotZeroDimensional) => Err(IndexError::InfiniteDimB),
        other => other,
    }
}
