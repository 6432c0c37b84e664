use std::cmp::Ordering;

use crate::poly::Monomial;

/// Negative-degree reverse lexicographic ordering (Singular's `ds`).
///
/// Lower total degree is larger, so `1` is the largest monomial. Ties are
/// broken as in degree reverse lexicographic order: the monomial whose last
/// differing exponent is smaller is the larger one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LocalOrdering;

impl LocalOrdering {
    /// `Greater` means `a` is larger than `b` in the local ordering.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return db.cmp(&da);
        }
        for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn unit_is_largest() {
        let ord = LocalOrdering;
        assert_eq!(ord.compare(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[0, 1]), &m(&[3, 0])), Ordering::Greater);
    }

    #[test]
    fn reverse_lex_tie_break() {
        let ord = LocalOrdering;
        // x > y > z within one degree, and x*z < y^2 as in degrevlex.
        assert_eq!(
            ord.compare(&m(&[1, 0, 0]), &m(&[0, 1, 0])),
            Ordering::Greater
        );
        assert_eq!(
            ord.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])),
            Ordering::Greater
        );
    }

    #[test]
    fn multiplicative() {
        let ord = LocalOrdering;
        let mons = [
            m(&[0, 0, 0]),
            m(&[1, 0, 2]),
            m(&[0, 3, 0]),
            m(&[2, 1, 0]),
            m(&[0, 0, 1]),
        ];
        for a in &mons {
            for b in &mons {
                for c in &mons {
                    if ord.compare(a, b) == Ordering::Greater {
                        assert_eq!(ord.compare(&a.mul(c), &b.mul(c)), Ordering::Greater);
                    }
                }
            }
        }
    }
}
