//! Bases of the terms of the small Gobelin: the degree-`i` term is
//! `⊕_j D_j G* ⊗ Λ^{i-2j} H`, identified with degree-`i` monomials in `k`
//! variables by splitting exponents into their even and odd parts.

use crate::poly::Monomial;

/// `x^(alpha) ⊗ e_beta`: a divided power of degree `|alpha|` tensored with a
/// wedge of the basis vectors indexed by `beta` (strictly increasing, 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeaveBasisElement {
    pub alpha: Vec<u32>,
    pub beta: Vec<usize>,
}

impl WeaveBasisElement {
    pub fn degree(&self) -> usize {
        2 * self.alpha.iter().sum::<u32>() as usize + self.beta.len()
    }

    /// The monomial with exponent `2*alpha + 1_beta`.
    pub fn mu(&self) -> Monomial {
        let mut exps: Vec<u32> = self.alpha.iter().map(|a| 2 * a).collect();
        for &b in &self.beta {
            exps[b] += 1;
        }
        Monomial::new(exps)
    }

    /// Inverse of [`mu`](Self::mu): `alpha_l = floor(e_l / 2)`, and `l` is in
    /// `beta` exactly when `e_l` is odd.
    pub fn mu_inverse(m: &Monomial) -> Self {
        let exps = m.exponents();
        WeaveBasisElement {
            alpha: exps.iter().map(|e| e / 2).collect(),
            beta: (0..exps.len()).filter(|&l| exps[l] % 2 == 1).collect(),
        }
    }
}

/// The degree-`i` term together with its ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeaveTerm {
    pub k: usize,
    pub degree: usize,
    pub basis: Vec<WeaveBasisElement>,
}

impl WeaveTerm {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, e: &WeaveBasisElement) -> Option<usize> {
        self.basis.iter().position(|b| b == e)
    }
}

/// `C(k+i-1, i)`, the number of degree-`i` monomials in `k` variables.
pub fn term_rank(k: usize, i: usize) -> usize {
    binomial(k + i - 1, i)
}

pub(crate) fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Degree-`i` monomials in `k` variables, lexicographically descending
/// (`x_1^i` first).
pub fn monomials_of_degree(k: usize, i: usize) -> Vec<Monomial> {
    fn go(k: usize, rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == k {
            prefix.push(rest);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=rest).rev() {
            prefix.push(e);
            go(k, rest - e, prefix, out);
            prefix.pop();
        }
    }
    assert!(k >= 1, "k must be positive");
    let mut out = Vec::new();
    go(k, i as u32, &mut Vec::with_capacity(k), &mut out);
    out
}

pub fn term_basis(k: usize, i: usize) -> WeaveTerm {
    WeaveTerm {
        k,
        degree: i,
        basis: monomials_of_degree(k, i)
            .iter()
            .map(WeaveBasisElement::mu_inverse)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(term_rank(2, 4), 5);
        assert_eq!(term_rank(3, 2), 6);
        for i in 0..10 {
            assert_eq!(term_rank(1, i), 1);
        }
    }

    #[test]
    fn degree_two_in_two_variables() {
        let t = term_basis(2, 2);
        let e = |alpha: &[u32], beta: &[usize]| WeaveBasisElement {
            alpha: alpha.to_vec(),
            beta: beta.to_vec(),
        };
        assert_eq!(
            t.basis,
            vec![e(&[1, 0], &[]), e(&[0, 0], &[0, 1]), e(&[0, 1], &[])]
        );
    }

    #[test]
    fn degree_zero() {
        let t = term_basis(3, 0);
        assert_eq!(t.rank(), 1);
        assert_eq!(t.basis[0].alpha, vec![0, 0, 0]);
        assert!(t.basis[0].beta.is_empty());
    }

    #[test]
    fn mu_roundtrip_low_degree() {
        for k in 1..=3 {
            for i in 0..=6 {
                for m in monomials_of_degree(k, i) {
                    let e = WeaveBasisElement::mu_inverse(&m);
                    assert_eq!(e.degree(), i);
                    assert_eq!(e.mu(), m);
                }
            }
        }
    }
}
