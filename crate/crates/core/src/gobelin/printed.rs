//! The explicit matrices for one equation, for two equations, and the first
//! two maps for any number of equations.

use crate::error::{IndexError, Result};
use crate::gobelin::basis::binomial;
use crate::gobelin::weave::{BMatrix, Construction, SmallGobelinComplex};
use crate::local::QuotientAlgebra;
use crate::poly::{PolyMatrix, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrintedFamily {
    /// `k = 1`: `B <-f- B <-c- B <-f- ...`
    Codim1,
    /// `k = 2`: the blocks `phi_i: B^{2i} -> B^{2i-1}` and `psi_i: B^{2i+1} -> B^{2i}`.
    Codim2,
    /// Any `k`, only `gamma_0` and `gamma_1`.
    LowDegree,
}

/// The complex with terms `0..=top` built from the explicit matrices.
pub fn printed_complex(
    family: PrintedFamily,
    top: usize,
    f: &[Polynomial],
    c: &PolyMatrix,
    b: &QuotientAlgebra,
) -> Result<SmallGobelinComplex> {
    let k = f.len();
    if c.rows() != k || c.cols() != k {
        return Err(IndexError::Shape(format!("c must be {k}x{k}")));
    }
    let nvars = b.nvars();
    let gammas: Vec<PolyMatrix> = match family {
        PrintedFamily::Codim1 => {
            if k != 1 {
                return Err(IndexError::Unsupported(format!(
                    "the one-equation matrices need k = 1, got k = {k}"
                )));
            }
            (0..top)
                .map(|i| {
                    let e = if i % 2 == 0 { &f[0] } else { c.get(0, 0) };
                    PolyMatrix::from_rows(nvars, vec![vec![e.clone()]])
                })
                .collect::<Result<_>>()?
        }
        PrintedFamily::Codim2 => {
            if k != 2 {
                return Err(IndexError::Unsupported(format!(
                    "the two-equation matrices need k = 2, got k = {k}"
                )));
            }
            (0..top)
                .map(|g| {
                    if g % 2 == 0 {
                        codim2_phi(g / 2 + 1, f, c, nvars)
                    } else {
                        codim2_psi(g / 2 + 1, f, c, nvars)
                    }
                })
                .collect()
        }
        PrintedFamily::LowDegree => {
            if top > 2 {
                return Err(IndexError::Unsupported(format!(
                    "only gamma_0 and gamma_1 are available for general k, need {top} maps"
                )));
            }
            let mut out = Vec::new();
            if top >= 1 {
                out.push(PolyMatrix::from_rows(nvars, vec![f.to_vec()])?);
            }
            if top >= 2 {
                out.push(low_degree_gamma1(f, c, nvars));
            }
            out
        }
    };
    let ranks = match family {
        PrintedFamily::Codim1 => vec![1; top + 1],
        PrintedFamily::Codim2 => (1..=top + 1).collect(),
        PrintedFamily::LowDegree => [1, k, binomial(k, 2) + k][..=top].to_vec(),
    };
    SmallGobelinComplex::assemble(
        k,
        ranks,
        gammas.into_iter().map(|m| BMatrix::reduced(m, b)).collect(),
        Construction::Printed(family),
        b,
    )
}

/// `phi_i`, `(2i-1) x 2i`.
fn codim2_phi(i: usize, f: &[Polynomial], c: &PolyMatrix, nvars: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(2 * i - 1, 2 * i, nvars);
    for r in 0..i - 1 {
        m.set(r, r, c.get(0, 1).neg());
        m.set(r, r + 1, c.get(1, 1).neg());
        m.set(r, i + r, c.get(0, 0).clone());
        m.set(r, i + r + 1, c.get(1, 0).clone());
    }
    for r in 0..i {
        m.set(i - 1 + r, r, f[0].clone());
        m.set(i - 1 + r, i + r, f[1].clone());
    }
    m
}

/// `psi_i`, `2i x (2i+1)`.
fn codim2_psi(i: usize, f: &[Polynomial], c: &PolyMatrix, nvars: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(2 * i, 2 * i + 1, nvars);
    for r in 0..i {
        m.set(r, r, f[1].neg());
        m.set(r, i + r, c.get(0, 0).clone());
        m.set(r, i + r + 1, c.get(1, 0).clone());
        m.set(i + r, r, f[0].clone());
        m.set(i + r, i + r, c.get(0, 1).clone());
        m.set(i + r, i + r + 1, c.get(1, 1).clone());
    }
    m
}

/// `gamma_1` for any `k`: one column per pair `b > a` (ordered by `b`, then
/// `a` descending) with `f_a` in row `b` and `-f_b` in row `a`, then one
/// column `(c_a1, ..., c_ak)` per `a`.
fn low_degree_gamma1(f: &[Polynomial], c: &PolyMatrix, nvars: usize) -> PolyMatrix {
    let k = f.len();
    let mut m = PolyMatrix::zeros(k, binomial(k, 2) + k, nvars);
    let mut col = 0;
    for bb in 1..k {
        for a in (0..bb).rev() {
            m.set(a, col, f[bb].clone());
            m.set(bb, col, f[a].neg());
            col += 1;
        }
    }
    for a in 0..k {
        for bb in 0..k {
            m.set(bb, col, c.get(a, bb).clone());
        }
        col += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{quotient_algebra, standard_basis, DegreeCap};
    use crate::poly::{parse_polynomial, VarContext};

    #[test]
    fn codim2_blocks_compose_to_zero() {
        // B = O/m^2, so c f = 0 in B whenever c has entries in m.
        let v = VarContext::new(["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        let gens = [p("x^2"), p("y^2"), p("z^2"), p("x*y"), p("x*z"), p("y*z")];
        let b = quotient_algebra(standard_basis(&gens, DegreeCap::default()).unwrap()).unwrap();
        let f = vec![p("x"), p("y")];
        let c =
            PolyMatrix::from_rows(3, vec![vec![p("y"), p("z")], vec![p("x+z"), p("-z")]]).unwrap();
        let g = printed_complex(PrintedFamily::Codim2, 5, &f, &c, &b);
        assert!(g.is_ok(), "{g:?}");
        let g = g.unwrap();
        assert_eq!(g.ranks, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(g.gammas[2].rows(), 3);
        assert_eq!(g.gammas[2].cols(), 4);
    }

    #[test]
    fn low_degree_layout_for_three_equations() {
        let v = VarContext::new(["a", "b", "d", "e"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        let f = vec![p("a"), p("b"), p("d")];
        let c = PolyMatrix::zeros(3, 3, 4);
        let m = low_degree_gamma1(&f, &c, 4);
        assert_eq!(m.cols(), 6);
        assert_eq!(m.row(0)[..3], [p("b"), p("0"), p("d")]);
        assert_eq!(m.row(1)[..3], [p("-a"), p("d"), p("0")]);
        assert_eq!(m.row(2)[..3], [p("0"), p("-b"), p("-a")]);
    }

    #[test]
    fn unsupported_combinations() {
        let v = VarContext::new(["x", "y", "z", "w"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        let gens = [p("x"), p("y"), p("z"), p("w")];
        let b = quotient_algebra(standard_basis(&gens, DegreeCap::default()).unwrap()).unwrap();
        let f = vec![p("x"), p("y"), p("z")];
        let c = PolyMatrix::zeros(3, 3, 4);
        assert!(matches!(
            printed_complex(PrintedFamily::LowDegree, 3, &f, &c, &b),
            Err(IndexError::Unsupported(_))
        ));
        assert!(matches!(
            printed_complex(PrintedFamily::Codim2, 2, &f, &c, &b),
            Err(IndexError::Unsupported(_))
        ));
    }
}
