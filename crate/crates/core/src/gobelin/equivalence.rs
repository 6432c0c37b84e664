use std::collections::HashMap;

use crate::error::{IndexError, Result};
use crate::poly::{PolyMatrix, Polynomial};
use crate::scalar::Scalar;
use num_traits::Signed;

const MAX_ROWS: usize = 7;

/// Whether `P * a * Q == b` for signed permutation matrices `P` and `Q`.
///
/// Row permutations and signs are enumerated exhaustively (at most
/// `MAX_ROWS` rows); columns are then matched as a multiset up to sign.
pub fn signed_permutation_equivalent(a: &PolyMatrix, b: &PolyMatrix) -> Result<bool> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Ok(false);
    }
    let rows = a.rows();
    if rows > MAX_ROWS {
        return Err(IndexError::Unsupported(format!(
            "signed permutation search is limited to {MAX_ROWS} rows, got {rows}"
        )));
    }
    let target = column_multiset(b, &(0..rows).collect::<Vec<_>>(), 0);
    let mut perm: Vec<usize> = (0..rows).collect();
    let mut found = false;
    permutations(&mut perm, 0, &mut |p| {
        for signs in 0u32..(1 << rows) {
            if column_multiset(a, p, signs) == target {
                found = true;
                return true;
            }
        }
        false
    });
    Ok(found)
}

/// Columns of `diag(signs) * a[perm, :]`, each normalized so its first
/// nonzero entry has a positive leading coefficient, counted with multiplicity.
fn column_multiset(a: &PolyMatrix, perm: &[usize], signs: u32) -> HashMap<Vec<Polynomial>, usize> {
    let mut out = HashMap::new();
    for c in 0..a.cols() {
        let mut col: Vec<Polynomial> = perm
            .iter()
            .enumerate()
            .map(|(r, &src)| {
                let e = a.get(src, c);
                if signs >> r & 1 == 1 {
                    e.neg()
                } else {
                    e.clone()
                }
            })
            .collect();
        let flip = col
            .iter()
            .find(|p| !p.is_zero())
            .is_some_and(|p| is_negative_half(p.leading_coefficient().unwrap()));
        if flip {
            col = col.iter().map(Polynomial::neg).collect();
        }
        *out.entry(col).or_insert(0) += 1;
    }
    out
}

/// Picks one of `s`, `-s` as the canonical sign.
fn is_negative_half(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(q) => q.is_negative(),
        Scalar::Prime { value, modulus } => *value > *modulus / 2,
    }
}

/// Calls `visit` on every permutation of `items[from..]`; stops early when
/// `visit` returns `true`.
fn permutations(
    items: &mut Vec<usize>,
    from: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if from == items.len() {
        return visit(items);
    }
    for i in from..items.len() {
        items.swap(from, i);
        if permutations(items, from + 1, visit) {
            return true;
        }
        items.swap(from, i);
    }
    false
}
