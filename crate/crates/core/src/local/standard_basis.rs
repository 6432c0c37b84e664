//! Mora's tangent cone algorithm: weak normal forms and standard bases in the
//! localization of the polynomial ring at the origin.

use crate::error::{IndexError, Result};
use crate::local::LocalOrdering;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// Upper bound on the total degree of intermediate polynomials during
/// local reduction. Exceeding it is reported, never silently truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeCap(pub u32);

impl Default for DegreeCap {
    fn default() -> Self {
        DegreeCap(64)
    }
}

/// `unit * p == sum(coeffs[i] * symbol[i])`, where the symbols are the
/// polynomials a computation started from.
#[derive(Clone, Debug)]
struct Rep {
    unit: Polynomial,
    coeffs: Vec<Polynomial>,
}

impl Rep {
    fn symbol(nvars: usize, count: usize, which: usize, one: &Scalar) -> Rep {
        let mut coeffs = vec![Polynomial::zero(nvars); count];
        coeffs[which] = Polynomial::constant(nvars, one.clone());
        Rep {
            unit: Polynomial::constant(nvars, one.clone()),
            coeffs,
        }
    }

    /// Representation of `a*p + b*q` given those of `p` and `q`.
    fn combine(a: &Polynomial, p: &Rep, b: &Polynomial, q: &Rep) -> Rep {
        let mut out = if p.unit == q.unit {
            Rep {
                unit: p.unit.clone(),
                coeffs: p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| a.mul(x).add(&b.mul(y)))
                    .collect(),
            }
        } else {
            let a = a.mul(&q.unit);
            let b = b.mul(&p.unit);
            Rep {
                unit: p.unit.mul(&q.unit),
                coeffs: p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| a.mul(x).add(&b.mul(y)))
                    .collect(),
            }
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.unit.is_constant() && !self.unit.is_zero() {
            let c = self.unit.leading_coefficient().unwrap().clone();
            if !c.is_one() {
                let inv = c.inverse();
                for q in &mut self.coeffs {
                    *q = q.scale(&inv);
                }
                self.unit = self.unit.scale(&inv);
            }
        }
    }

    fn extend(&self, count: usize) -> Rep {
        let nvars = self.unit.nvars();
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(count, Polynomial::zero(nvars));
        Rep {
            unit: self.unit.clone(),
            coeffs,
        }
    }
}

#[derive(Clone, Debug)]
struct Tracked {
    poly: Polynomial,
    rep: Option<Rep>,
}

impl Tracked {
    /// `c1*m1*self + c2*m2*other`.
    fn combine(
        &self,
        c1: &Scalar,
        m1: &Monomial,
        other: &Tracked,
        c2: &Scalar,
        m2: &Monomial,
    ) -> Tracked {
        let poly = self
            .poly
            .mul_term(c1, m1)
            .sub_mul_term(&-c2, m2, &other.poly);
        let rep = match (&self.rep, &other.rep) {
            (Some(p), Some(q)) => Some(Rep::combine(
                &Polynomial::term(c1.clone(), m1.clone()),
                p,
                &Polynomial::term(c2.clone(), m2.clone()),
                q,
            )),
            _ => None,
        };
        Tracked { poly, rep }
    }

    /// `self - (LT(self)/LT(g)) * g`, assuming `LM(g) | LM(self)`.
    fn reduce_by(&self, g: &Tracked) -> Tracked {
        let (lm, lc) = self.poly.leading_term().expect("nonzero");
        let (glm, glc) = g.poly.leading_term().expect("nonzero");
        let m = glm.quotient_of(lm).expect("divisible leading monomial");
        let c = lc / glc;
        let one = lc.field().one();
        let one_m = Monomial::one(lm.nvars());
        self.combine(&one, &one_m, g, &-&c, &m)
    }
}

fn spoly(a: &Tracked, b: &Tracked) -> Tracked {
    let (la, ca) = a.poly.leading_term().expect("nonzero");
    let (lb, cb) = b.poly.leading_term().expect("nonzero");
    let l = la.lcm(lb);
    let ma = la.quotient_of(&l).unwrap();
    let mb = lb.quotient_of(&l).unwrap();
    a.combine(&cb.clone(), &ma, b, &-ca, &mb)
}

/// Mora's normal form with ecart-based reducer selection. Returns `h` with
/// `u * g - h` in the local ideal for a unit `u`, and `LM(h)` not divisible
/// by any leading monomial of `basis` (or `h == 0`).
///
/// With `corner = Some(d)`, the ideal is known to contain every monomial of
/// degree `d`, and terms of degree `>= d` are discarded as they appear.
fn mora_normal_form(
    g: Tracked,
    basis: &[Tracked],
    cap: DegreeCap,
    corner: Option<u32>,
) -> Result<Tracked> {
    let truncate = |t: Tracked| match corner {
        Some(d) => Tracked {
            poly: t.poly.truncate_below(d),
            rep: t.rep,
        },
        None => t,
    };
    let mut h = truncate(g);
    let mut extra: Vec<Tracked> = Vec::new();
    loop {
        let Some(lm) = h.poly.leading_monomial() else {
            return Ok(h);
        };
        let mut best: Option<(bool, usize, u32)> = None;
        for (is_extra, list) in [(false, basis), (true, extra.as_slice())] {
            for (i, t) in list.iter().enumerate() {
                let tlm = t.poly.leading_monomial().expect("nonzero reducer");
                if !tlm.divides(lm) {
                    continue;
                }
                let e = t.poly.ecart();
                if best.map_or(true, |(_, _, be)| e < be) {
                    best = Some((is_extra, i, e));
                }
            }
        }
        let Some((is_extra, i, e)) = best else {
            return Ok(h);
        };
        let reducer = if is_extra {
            extra[i].clone()
        } else {
            basis[i].clone()
        };
        if e > h.poly.ecart() {
            extra.push(h.clone());
        }
        h = truncate(h.reduce_by(&reducer));
        if h.poly.degree() > cap.0 {
            return Err(IndexError::DegreeCap { cap: cap.0 });
        }
    }
}

/// Weak normal form of `g` with respect to `gens`.
///
/// The result `r` satisfies `u*g - r ∈ (gens)` for a local unit `u`, and its
/// leading monomial is divisible by no leading monomial of `gens`. When
/// `gens` is a standard basis, `r == 0` exactly when `g` lies in the local
/// ideal.
pub fn weak_normal_form(g: &Polynomial, gens: &[Polynomial], cap: DegreeCap) -> Result<Polynomial> {
    weak_normal_form_with_unit(g, gens, cap).map(|(_, r)| r)
}

/// Like [`weak_normal_form`], also returning the unit `u` with `u*g - r ∈ (gens)`.
pub fn weak_normal_form_with_unit(
    g: &Polynomial,
    gens: &[Polynomial],
    cap: DegreeCap,
) -> Result<(Polynomial, Polynomial)> {
    let nvars = g.nvars();
    if g.is_zero() {
        return Ok((Polynomial::zero(nvars), Polynomial::zero(nvars)));
    }
    let one = g.leading_coefficient().unwrap().field().one();
    let zero_rep = Rep {
        unit: Polynomial::constant(nvars, one.clone()),
        coeffs: vec![Polynomial::zero(nvars)],
    };
    let basis: Vec<Tracked> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Tracked {
            poly: p.clone(),
            rep: Some(zero_rep.clone()),
        })
        .collect();
    let start = Tracked {
        poly: g.clone(),
        rep: Some(Rep::symbol(nvars, 1, 0, &one)),
    };
    let h = mora_normal_form(start, &basis, cap, None)?;
    // U*h ≡ A*g modulo (gens)
    let rep = h.rep.expect("tracked");
    Ok((rep.coeffs[0].clone(), rep.unit.mul(&h.poly)))
}

/// A standard basis of an ideal of the local ring at the origin, for the
/// negative-degree reverse lexicographic ordering.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    generators: Vec<Polynomial>,
    leading: Vec<Monomial>,
    ordering: LocalOrdering,
    nvars: usize,
    reps: Option<Vec<Rep>>,
}

impl StandardBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn ordering(&self) -> LocalOrdering {
        self.ordering
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True when `m` lies in the leading ideal.
    pub fn in_leading_ideal(&self, m: &Monomial) -> bool {
        self.leading.iter().any(|l| l.divides(m))
    }

    /// True when every variable has a pure power among the leading monomials,
    /// i.e. the staircase is finite.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.leading.iter().any(Monomial::is_one) {
            return true;
        }
        (0..self.nvars).all(|v| {
            self.leading
                .iter()
                .any(|m| m.pure_power_variable() == Some(v))
        })
    }

    /// The monomials outside the leading ideal, sorted descending in the
    /// local ordering (so `1` comes first when present).
    pub fn staircase(&self) -> Result<Vec<Monomial>> {
        let mut out =
            staircase_of(&self.leading, self.nvars).ok_or(IndexError::NotZeroDimensional)?;
        out.sort_by(|a, b| self.ordering.compare(b, a));
        Ok(out)
    }

    /// Weak normal form with respect to this basis.
    pub fn normal_form(&self, g: &Polynomial, cap: DegreeCap) -> Result<Polynomial> {
        weak_normal_form(g, &self.generators, cap)
    }

    pub fn contains(&self, g: &Polynomial, cap: DegreeCap) -> Result<bool> {
        Ok(self.normal_form(g, cap)?.is_zero())
    }
}

/// Monomials divisible by no element of `leading`, or `None` when there are
/// infinitely many.
fn staircase_of(leading: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    let finite = leading.iter().any(Monomial::is_one)
        || (0..nvars).all(|v| leading.iter().any(|m| m.pure_power_variable() == Some(v)));
    if !finite {
        return None;
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut frontier = vec![Monomial::one(nvars)];
    while let Some(m) = frontier.pop() {
        if leading.iter().any(|l| l.divides(&m)) || !seen.insert(m.clone()) {
            continue;
        }
        for v in 0..nvars {
            frontier.push(m.mul(&Monomial::variable(nvars, v)));
        }
        out.push(m);
    }
    Some(out)
}

/// The least `d` such that every monomial of degree `d` (hence of any higher
/// degree) is a leading monomial.
fn highest_corner(leading: &[Monomial], nvars: usize) -> Option<u32> {
    staircase_of(leading, nvars).map(|s| s.iter().map(|m| m.degree() + 1).max().unwrap_or(0))
}

/// Standard basis of the local ideal generated by `gens` (Mora's algorithm).
pub fn standard_basis(gens: &[Polynomial], cap: DegreeCap) -> Result<StandardBasis> {
    compute_standard_basis(gens, false, cap)
}

fn compute_standard_basis(
    gens: &[Polynomial],
    track: bool,
    cap: DegreeCap,
) -> Result<StandardBasis> {
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Err(IndexError::Input("standard basis of the zero ideal".into()));
    };
    let nvars = first.nvars();
    let one = first.leading_coefficient().unwrap().field().one();
    let ordering = LocalOrdering;

    let mut basis: Vec<Tracked> = nonzero
        .iter()
        .enumerate()
        .map(|(i, p)| Tracked {
            poly: (*p).clone(),
            rep: track.then(|| Rep::symbol(nvars, nonzero.len(), i, &one)),
        })
        .collect();

    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    let mut done = std::collections::HashSet::new();
    // Once the leading ideal contains all monomials of some degree d, so does
    // the ideal itself, and anything of degree >= d can be dropped. Exact
    // representations are incompatible with that, so tracking never truncates.
    let corner_of = |basis: &[Tracked]| {
        if track {
            None
        } else {
            highest_corner(
                &basis.iter().map(|t| lm(t).clone()).collect::<Vec<_>>(),
                nvars,
            )
        }
    };
    let mut corner = corner_of(&basis);

    while !pending.is_empty() {
        let (pos, _) = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let l = lm(&basis[i]).lcm(lm(&basis[j]));
                (l.degree(), j, i)
            })
            .unwrap();
        let (i, j) = pending.swap_remove(pos);
        done.insert((i, j));

        let (li, lj) = (lm(&basis[i]).clone(), lm(&basis[j]).clone());
        if li.is_coprime(&lj) {
            continue;
        }
        let l = li.lcm(&lj);
        if corner.is_some_and(|d| l.degree() >= d) {
            // Every term of the S-polynomial has degree >= deg(l).
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && done.contains(&key(i, k))
                && done.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = spoly(&basis[i], &basis[j]);
        let h = mora_normal_form(s, &basis, cap, corner)?;
        if h.poly.is_zero() {
            continue;
        }
        let n = basis.len();
        for t in 0..n {
            pending.push((t, n));
        }
        basis.push(h);
        corner = corner_of(&basis);
    }

    // Drop elements whose leading monomial is a proper multiple of another's,
    // keeping the first of any equal ones.
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i && {
                    let (a, b) = (lm(&basis[j]), lm(&basis[i]));
                    a.divides(b) && (a != b || j < i)
                }
            })
        })
        .collect();
    let mut generators = Vec::new();
    let mut leading = Vec::new();
    let mut reps = Vec::new();
    for (t, k) in basis.into_iter().zip(keep) {
        if !k {
            continue;
        }
        leading.push(lm(&t).clone());
        if let Some(r) = t.rep {
            reps.push(r);
        }
        generators.push(t.poly);
    }
    Ok(StandardBasis {
        generators,
        leading,
        ordering,
        nvars,
        reps: track.then_some(reps),
    })
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn lm(t: &Tracked) -> &Monomial {
    t.poly.leading_monomial().expect("nonzero basis element")
}

/// `K`-dimension of `O_0/(gens)`.
pub fn local_dimension(gens: &[Polynomial], cap: DegreeCap) -> Result<usize> {
    Ok(standard_basis(gens, cap)?.staircase()?.len())
}

/// A certified local ideal membership: `unit * g == sum(quotients[i] * gens[i])`
/// as an exact polynomial identity, with `unit` a local unit normalised to
/// `1` whenever it is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub unit: Polynomial,
    pub quotients: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(Lift),
    NotMember,
}

/// Expresses `g` in terms of `gens` in the local ring, recording the quotients.
pub fn lift_membership(g: &Polynomial, gens: &[Polynomial], cap: DegreeCap) -> Result<Membership> {
    let nvars = g.nvars();
    let nonzero: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    if g.is_zero() {
        return Ok(Membership::Member(Lift {
            unit: Polynomial::constant(
                nvars,
                gens.iter()
                    .find_map(|p| p.field())
                    .unwrap_or(crate::Field::Rational)
                    .one(),
            ),
            quotients: vec![Polynomial::zero(nvars); gens.len()],
        }));
    }
    if nonzero.is_empty() {
        return Ok(Membership::NotMember);
    }
    let inputs: Vec<Polynomial> = nonzero.iter().map(|&i| gens[i].clone()).collect();
    let sb = compute_standard_basis(&inputs, true, cap)?;
    let m = inputs.len();
    let one = g.leading_coefficient().unwrap().field().one();
    let basis: Vec<Tracked> = sb
        .generators
        .iter()
        .zip(sb.reps.as_ref().expect("tracked"))
        .map(|(p, r)| Tracked {
            poly: p.clone(),
            rep: Some(r.extend(m + 1)),
        })
        .collect();
    let start = Tracked {
        poly: g.clone(),
        rep: Some(Rep::symbol(nvars, m + 1, m, &one)),
    };
    let h = mora_normal_form(start, &basis, cap, None)?;
    if !h.poly.is_zero() {
        return Ok(Membership::NotMember);
    }
    // 0 = sum(A_i gens_i) + A_m g  =>  A_m g = -sum(A_i gens_i)
    let rep = h.rep.expect("tracked");
    let mut unit = rep.coeffs[m].clone();
    let mut quotients_nz: Vec<Polynomial> = rep.coeffs[..m].iter().map(Polynomial::neg).collect();
    if !unit.is_local_unit() {
        return Err(IndexError::Inconsistency(
            "lift produced a non-unit multiplier".into(),
        ));
    }
    if unit.is_constant() {
        let inv = unit.leading_coefficient().unwrap().inverse();
        unit = unit.scale(&inv);
        quotients_nz = quotients_nz.iter().map(|q| q.scale(&inv)).collect();
    }
    let mut quotients = vec![Polynomial::zero(nvars); gens.len()];
    for (q, &i) in quotients_nz.into_iter().zip(&nonzero) {
        quotients[i] = q;
    }
    let lhs = unit.mul(g);
    let rhs = quotients
        .iter()
        .zip(gens)
        .fold(Polynomial::zero(nvars), |acc, (q, p)| acc.add(&q.mul(p)));
    if lhs != rhs {
        return Err(IndexError::Inconsistency(
            "lift failed re-multiplication check".into(),
        ));
    }
    Ok(Membership::Member(Lift { unit, quotients }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VarContext};

    fn ctx() -> VarContext {
        VarContext::new(["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &ctx()).unwrap()
    }

    fn cap() -> DegreeCap {
        DegreeCap::default()
    }

    #[test]
    fn normal_form_uses_local_units() {
        assert!(weak_normal_form(&p("x^2"), &[p("x^2-x^3")], cap())
            .unwrap()
            .is_zero());
        assert_eq!(weak_normal_form(&p("y"), &[p("x")], cap()).unwrap(), p("y"));
        assert!(weak_normal_form(&p("x^3+x^5"), &[p("x^3")], cap())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn unit_witness() {
        let gens = [p("x^2-x^3")];
        let (u, r) = weak_normal_form_with_unit(&p("x^2+y"), &gens, cap()).unwrap();
        assert!(u.is_local_unit());
        let diff = u.mul(&p("x^2+y")).sub(&r);
        assert!(standard_basis(&gens, cap())
            .unwrap()
            .contains(&diff, cap())
            .unwrap());
    }

    #[test]
    fn leading_ideals() {
        let sb = standard_basis(&[p("x^2-x^3")], cap()).unwrap();
        assert_eq!(sb.leading_monomials(), &[Monomial::new(vec![2, 0, 0])]);
        let sb = standard_basis(&[p("x+x^2*y"), p("y")], cap()).unwrap();
        let mut lms: Vec<_> = sb.leading_monomials().to_vec();
        lms.sort();
        assert_eq!(
            lms,
            vec![Monomial::new(vec![0, 1, 0]), Monomial::new(vec![1, 0, 0])]
        );
    }

    #[test]
    fn dimensions() {
        let c2 = VarContext::new(["x", "y"]).unwrap();
        let q = |s: &str| parse_polynomial(s, &c2).unwrap();
        assert_eq!(local_dimension(&[q("x"), q("y")], cap()).unwrap(), 1);
        assert_eq!(local_dimension(&[q("x^2"), q("y^3")], cap()).unwrap(), 6);
        let c1 = VarContext::new(["x"]).unwrap();
        let g = parse_polynomial("x^2-x^3", &c1).unwrap();
        assert_eq!(local_dimension(&[g], cap()).unwrap(), 2);
        assert_eq!(
            local_dimension(&[q("x")], cap()),
            Err(IndexError::NotZeroDimensional)
        );
    }

    #[test]
    fn lifts() {
        match lift_membership(&p("x^2+x*y"), &[p("x")], cap()).unwrap() {
            Membership::Member(l) => {
                assert!(l.unit.is_one_poly());
                assert_eq!(l.quotients, vec![p("x+y")]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            lift_membership(&p("1"), &[p("x")], cap()).unwrap(),
            Membership::NotMember
        );
    }

    #[test]
    fn lift_with_nonconstant_unit() {
        // x = (1+x)^{-1} (x + x^2): no polynomial quotient exists.
        match lift_membership(&p("x"), &[p("x+x^2")], cap()).unwrap() {
            Membership::Member(l) => {
                assert!(!l.unit.is_constant());
                assert!(l.unit.is_local_unit());
                assert_eq!(l.unit.mul(&p("x")), l.quotients[0].mul(&p("x+x^2")));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degree_cap_is_reported() {
        let r = weak_normal_form(&p("x^2"), &[p("x^2-x^3")], DegreeCap(2));
        assert_eq!(r, Err(IndexError::DegreeCap { cap: 2 }));
    }

    impl Polynomial {
        fn is_one_poly(&self) -> bool {
            self.is_constant() && self.leading_coefficient().is_some_and(Scalar::is_one)
        }
    }
}
