//! Exact linear algebra over the base field and homology of finite chain complexes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{IndexError, Result};
use crate::scalar::{Field, Scalar};

/// Dense matrix over the base field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        Self {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(IndexError::Shape("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            field,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
                .collect(),
        )
        .expect("rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Copies `block` into this matrix with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &ScalarMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != other.rows {
            return Err(IndexError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ScalarMatrix::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(t, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(self.field.zero(), |acc, j| acc + self.get(i, j) * &v[j]))
            .collect()
    }

    /// Exact rank: fraction-free (Bareiss) elimination over the integers for
    /// rational matrices, plain Gaussian elimination modulo `p` otherwise.
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rational => bareiss_rank(self.integer_rows(), self.cols),
            Field::Prime(p) => modular_rank(self, p),
        }
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                let lcm = row.iter().fold(BigInt::one(), |acc, s| {
                    acc.lcm(s.as_rational().expect("rational entry").denom())
                });
                row.iter()
                    .map(|s| {
                        let q = s.as_rational().unwrap();
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect()
            })
            .collect()
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let n = self.rows;
        if n != self.cols || b.len() != n {
            return None;
        }
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row: Vec<Scalar> = self.data[r * n..(r + 1) * n].to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            let inv = a[col][col].inverse();
            for v in a[col].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in col..=n {
                    let v = &a[r][c] - &(&factor * &a[col][c]);
                    a[r][c] = v;
                }
            }
        }
        Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }
}

fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for c in col + 1..cols {
                let v = &row[c] * pivot - &lead * &pivot_row[c];
                debug_assert!((&v % &prev).is_zero());
                row[c] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

fn modular_rank(m: &ScalarMatrix, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .map(|c| match m.get(r, c) {
                    Scalar::Prime { value, .. } => *value,
                    Scalar::Rational(_) => panic!("rational entry in a prime-field matrix"),
                })
                .collect()
        })
        .collect();
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let inv = |x: u64| match (Scalar::Prime {
        value: x,
        modulus: p,
    })
    .inverse()
    {
        Scalar::Prime { value, .. } => value,
        Scalar::Rational(_) => unreachable!(),
    };
    let mut rank = 0;
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(piv) = (rank..m.rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let pinv = inv(a[rank][col]);
        for r in rank + 1..m.rows {
            if a[r][col] == 0 {
                continue;
            }
            let factor = mul(a[r][col], pinv);
            for c in col..m.cols {
                let sub = mul(factor, a[rank][c]);
                a[r][c] = (a[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

pub fn exact_rank(m: &ScalarMatrix) -> usize {
    m.rank()
}

/// `rows(M) - rank(M)`.
pub fn cokernel_dimension(m: &ScalarMatrix) -> usize {
    m.rows() - m.rank()
}

/// A finite chain complex `0 <- C_0 <- C_1 <- ... <- C_m <- 0` of vector spaces.
#[derive(Clone, Debug)]
pub struct ScalarComplex {
    dims: Vec<usize>,
    /// `maps[i]` goes from `C_{i+1}` to `C_i`.
    maps: Vec<ScalarMatrix>,
}

impl ScalarComplex {
    /// Checks shapes and that consecutive maps compose to zero.
    pub fn new(dims: Vec<usize>, maps: Vec<ScalarMatrix>) -> Result<Self> {
        if dims.is_empty() || maps.len() + 1 != dims.len() {
            return Err(IndexError::Shape(format!(
                "{} terms need {} maps, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.rows() != dims[i] || m.cols() != dims[i + 1] {
                return Err(IndexError::Shape(format!(
                    "map {} is {}x{}, expected {}x{}",
                    i,
                    m.rows(),
                    m.cols(),
                    dims[i],
                    dims[i + 1]
                )));
            }
        }
        for i in 0..maps.len().saturating_sub(1) {
            if !maps[i].mul(&maps[i + 1])?.is_zero() {
                return Err(IndexError::Inconsistency(format!(
                    "consecutive maps {} and {} do not compose to zero",
                    i,
                    i + 1
                )));
            }
        }
        Ok(Self { dims, maps })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[ScalarMatrix] {
        &self.maps
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(ScalarMatrix::rank).collect()
    }

    /// `h_i = d_i - rank(C_i -> C_{i-1}) - rank(C_{i+1} -> C_i)`, for every term.
    pub fn homology_dimensions(&self) -> Vec<usize> {
        let ranks = self.ranks();
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let out = if i == 0 { 0 } else { ranks[i - 1] };
                let inc = ranks.get(i).copied().unwrap_or(0);
                d - out - inc
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

pub fn homology_dimensions(c: &ScalarComplex) -> Vec<usize> {
    c.homology_dimensions()
}
