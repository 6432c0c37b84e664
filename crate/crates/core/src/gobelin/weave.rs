use crate::error::{IndexError, Result};
use crate::gobelin::basis::{term_basis, WeaveBasisElement};
use crate::homology::{ScalarComplex, ScalarMatrix};
use crate::local::QuotientAlgebra;
use crate::poly::{PolyMatrix, Polynomial, VarContext};

/// A matrix over `B` whose entries are kept as reduced representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMatrix {
    inner: PolyMatrix,
}

impl BMatrix {
    pub fn reduced(m: PolyMatrix, b: &QuotientAlgebra) -> Self {
        BMatrix {
            inner: m.map(|p| b.reduce(p)),
        }
    }

    pub fn rows(&self) -> usize {
        self.inner.rows()
    }

    pub fn cols(&self) -> usize {
        self.inner.cols()
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        self.inner.get(r, c)
    }

    pub fn as_poly_matrix(&self) -> &PolyMatrix {
        &self.inner
    }

    pub fn mul(&self, other: &BMatrix, b: &QuotientAlgebra) -> Result<BMatrix> {
        Ok(BMatrix::reduced(self.inner.mul(&other.inner)?, b))
    }

    /// Replaces every entry by its multiplication operator on `B`: block
    /// `(r, c)` of the result is `b.multiplication_matrix(self[r][c])`.
    pub fn scalarize(&self, b: &QuotientAlgebra) -> ScalarMatrix {
        let d = b.dimension();
        let mut out = ScalarMatrix::zeros(self.rows() * d, self.cols() * d, b.field());
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                let p = self.get(r, c);
                if !p.is_zero() {
                    out.set_block(r * d, c * d, &b.multiplication_matrix(p));
                }
            }
        }
        out
    }

    pub fn to_text(&self, vars: &VarContext) -> String {
        self.inner.to_text(vars)
    }
}

/// Which construction produced a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Weave,
    Printed(crate::gobelin::PrintedFamily),
}

/// Terms `0..=top` and maps `gammas[i]: term(i+1) -> term(i)`, over `B`.
#[derive(Clone, Debug)]
pub struct SmallGobelinComplex {
    pub k: usize,
    pub ranks: Vec<usize>,
    pub gammas: Vec<BMatrix>,
    pub construction: Construction,
}

impl SmallGobelinComplex {
    pub(crate) fn assemble(
        k: usize,
        ranks: Vec<usize>,
        gammas: Vec<BMatrix>,
        construction: Construction,
        b: &QuotientAlgebra,
    ) -> Result<Self> {
        for (i, g) in gammas.iter().enumerate() {
            if g.rows() != ranks[i] || g.cols() != ranks[i + 1] {
                return Err(IndexError::Inconsistency(format!(
                    "gamma_{i} is {}x{}, expected {}x{}",
                    g.rows(),
                    g.cols(),
                    ranks[i],
                    ranks[i + 1]
                )));
            }
        }
        for i in 1..gammas.len() {
            if !gammas[i - 1].mul(&gammas[i], b)?.as_poly_matrix().is_zero() {
                return Err(IndexError::Inconsistency(format!(
                    "gamma_{} * gamma_{} is not zero in B",
                    i - 1,
                    i
                )));
            }
        }
        Ok(Self {
            k,
            ranks,
            gammas,
            construction,
        })
    }

    /// Index of the last term.
    pub fn top(&self) -> usize {
        self.gammas.len()
    }

    /// The complex of `K`-vector spaces obtained by scalarizing every map.
    pub fn scalarize(&self, b: &QuotientAlgebra) -> Result<ScalarComplex> {
        let d = b.dimension();
        ScalarComplex::new(
            self.ranks.iter().map(|r| r * d).collect(),
            self.gammas.iter().map(|g| g.scalarize(b)).collect(),
        )
    }

    /// `(file name, contents)` for each map, entries printed as polynomials.
    pub fn dump(&self, vars: &VarContext) -> Vec<(String, String)> {
        self.gammas
            .iter()
            .enumerate()
            .map(|(i, g)| (format!("gamma_{i}.txt"), g.to_text(vars)))
            .collect()
    }
}

fn check_data(k: usize, f: &[Polynomial], c: &PolyMatrix) -> Result<()> {
    if k == 0 || f.len() != k || c.rows() != k || c.cols() != k {
        return Err(IndexError::Shape(format!(
            "need k >= 1 equations and a k x k cofactor matrix, got {} equations and {}x{}",
            f.len(),
            c.rows(),
            c.cols()
        )));
    }
    Ok(())
}

/// The map `gamma_{i-1}: term(i) -> term(i-1)`.
///
/// On `x^(alpha) ⊗ e_beta` it is the sum of
/// * the Koszul contraction `sum_p (-1)^p f_{beta_p} x^(alpha) ⊗ e_{beta \ beta_p}`, and
/// * `sum_{a,b} c_ab x^(alpha - e_a) ⊗ e_b ∧ e_beta` over `alpha_a > 0`, `b ∉ beta`.
///
/// Their mixed composites add up to `(c f)_a`, which vanishes in `B`, so the
/// total squares to zero.
pub fn weave_differential(
    k: usize,
    i: usize,
    f: &[Polynomial],
    c: &PolyMatrix,
    b: &QuotientAlgebra,
) -> Result<BMatrix> {
    check_data(k, f, c)?;
    if i == 0 {
        return Err(IndexError::Shape("differentials start in degree 1".into()));
    }
    let source = term_basis(k, i);
    let target = term_basis(k, i - 1);
    let nvars = b.nvars();
    let mut m = PolyMatrix::zeros(target.rank(), source.rank(), nvars);
    let add = |row: &WeaveBasisElement, col: usize, p: Polynomial, m: &mut PolyMatrix| {
        let r = target
            .position(row)
            .expect("image lies in the target basis");
        let sum = m.get(r, col).add(&p);
        m.set(r, col, sum);
    };
    for (col, e) in source.basis.iter().enumerate() {
        for (pos, &l) in e.beta.iter().enumerate() {
            let mut beta = e.beta.clone();
            beta.remove(pos);
            let row = WeaveBasisElement {
                alpha: e.alpha.clone(),
                beta,
            };
            let p = if pos % 2 == 0 {
                f[l].clone()
            } else {
                f[l].neg()
            };
            add(&row, col, p, &mut m);
        }
        for a in (0..k).filter(|&a| e.alpha[a] > 0) {
            let mut alpha = e.alpha.clone();
            alpha[a] -= 1;
            for bb in (0..k).filter(|bb| !e.beta.contains(bb)) {
                let before = e.beta.iter().filter(|&&x| x < bb).count();
                let mut beta = e.beta.clone();
                beta.insert(before, bb);
                let row = WeaveBasisElement {
                    alpha: alpha.clone(),
                    beta,
                };
                let entry = c.get(a, bb);
                let p = if before % 2 == 0 {
                    entry.clone()
                } else {
                    entry.neg()
                };
                add(&row, col, p, &mut m);
            }
        }
    }
    Ok(BMatrix::reduced(m, b))
}

/// Terms `0..=top` of the woven complex and the maps between them, with
/// `gamma_i * gamma_{i+1} = 0` checked in `B`.
pub fn build_complex(
    k: usize,
    top: usize,
    f: &[Polynomial],
    c: &PolyMatrix,
    b: &QuotientAlgebra,
) -> Result<SmallGobelinComplex> {
    check_data(k, f, c)?;
    let ranks = (0..=top).map(|i| crate::gobelin::term_rank(k, i)).collect();
    let gammas = (1..=top)
        .map(|i| weave_differential(k, i, f, c, b))
        .collect::<Result<Vec<_>>>()?;
    SmallGobelinComplex::assemble(k, ranks, gammas, Construction::Weave, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{quotient_algebra, standard_basis, DegreeCap};
    use crate::poly::parse_polynomial;

    fn setup() -> (VarContext, QuotientAlgebra) {
        let v = VarContext::new(["x", "y"]).unwrap();
        let gens = [
            parse_polynomial("x^2", &v).unwrap(),
            parse_polynomial("y^2", &v).unwrap(),
        ];
        let b = quotient_algebra(standard_basis(&gens, DegreeCap::default()).unwrap()).unwrap();
        (v, b)
    }

    #[test]
    fn scalarize_one_by_one() {
        let v = VarContext::new(["x"]).unwrap();
        let x = parse_polynomial("x", &v).unwrap();
        let sb = standard_basis(&[x.mul(&x)], DegreeCap::default()).unwrap();
        let b = quotient_algebra(sb).unwrap();
        let m = BMatrix::reduced(PolyMatrix::from_rows(1, vec![vec![x]]).unwrap(), &b);
        let q = crate::Field::Rational;
        assert_eq!(
            m.scalarize(&b),
            ScalarMatrix::from_ints(q, &[&[0, 0], &[1, 0]])
        );
        let z = BMatrix::reduced(PolyMatrix::zeros(2, 3, 1), &b);
        assert!(z.scalarize(&b).is_zero());
        assert_eq!(z.scalarize(&b).rows(), 4);
    }

    #[test]
    fn first_map_is_the_row_of_equations() {
        let (v, b) = setup();
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        let f = vec![p("x"), p("y")];
        let c = PolyMatrix::zeros(2, 2, 2);
        let g0 = weave_differential(2, 1, &f, &c, &b).unwrap();
        assert_eq!(
            g0.as_poly_matrix(),
            &PolyMatrix::from_rows(2, vec![f.clone()]).unwrap()
        );
    }

    #[test]
    fn second_map_for_two_equations() {
        let (v, b) = setup();
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        let f = vec![p("x"), p("y")];
        let c = PolyMatrix::from_rows(2, vec![vec![p("y"), p("0")], vec![p("0"), p("x")]]).unwrap();
        let g1 = weave_differential(2, 2, &f, &c, &b).unwrap();
        // Columns follow x1^2, x1*x2, x2^2.
        let expected = PolyMatrix::from_rows(
            2,
            vec![vec![p("y"), p("-y"), p("0")], vec![p("0"), p("x"), p("x")]],
        )
        .unwrap();
        assert_eq!(g1.as_poly_matrix(), &expected);
    }

    #[test]
    fn rejects_nonzero_composite() {
        // c f = (x*y, 0) is not zero in O/(x^2, y^2), so gamma_0 gamma_1 != 0.
        let (v, b) = setup();
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        let f = vec![p("x"), p("y")];
        let c = PolyMatrix::from_rows(2, vec![vec![p("0"), p("x")], vec![p("0"), p("0")]]).unwrap();
        assert!(matches!(
            build_complex(2, 3, &f, &c, &b),
            Err(IndexError::Inconsistency(_))
        ));
    }
}
