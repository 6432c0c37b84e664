use crate::error::{IndexError, Result};
use crate::poly::{Polynomial, VarContext};
use crate::scalar::Field;

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        Self {
            rows,
            cols,
            nvars,
            entries: vec![Polynomial::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize, field: Field) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m.set(i, i, Polynomial::one(nvars, field));
        }
        m
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(IndexError::Shape("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            nvars,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Polynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map(&self, f: impl FnMut(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(IndexError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for t in 0..self.cols {
                    acc = acc.add(&self.get(i, t).mul(other.get(t, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Exact matrix-vector product `M v`.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(IndexError::Shape(format!(
                "{}x{} matrix applied to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Polynomial::zero(self.nvars), |acc, (a, b)| {
                        acc.add(&a.mul(b))
                    })
            })
            .collect())
    }

    /// The `k x N` matrix of partial derivatives `d f_a / d x_b`.
    pub fn jacobian(f: &[Polynomial], nvars: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(f.len(), nvars, nvars);
        for (a, fa) in f.iter().enumerate() {
            for b in 0..nvars {
                out.set(a, b, fa.derivative(b));
            }
        }
        out
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(IndexError::Shape(
                "determinant of a non-square matrix".into(),
            ));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.minor(&rows, &cols))
    }

    fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        match rows.len() {
            0 => panic!("empty minor"),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => self
                .get(rows[0], cols[0])
                .mul(self.get(rows[1], cols[1]))
                .sub(&self.get(rows[0], cols[1]).mul(self.get(rows[1], cols[0]))),
            _ => {
                let mut acc = Polynomial::zero(self.nvars);
                for (j, &c) in cols.iter().enumerate() {
                    let entry = self.get(rows[0], c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let sub = entry.mul(&self.minor(&rows[1..], &rest));
                    acc = if j % 2 == 0 {
                        acc.add(&sub)
                    } else {
                        acc.sub(&sub)
                    };
                }
                acc
            }
        }
    }

    /// All `k x k` minors, ordered lexicographically by (row set, column set).
    pub fn k_minors(&self, k: usize) -> Result<Vec<Polynomial>> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(IndexError::Shape(format!(
                "{k}x{k} minors of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let row_sets = subsets(self.rows, k);
        let col_sets = subsets(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.minor(rs, cs));
            }
        }
        Ok(out)
    }

    /// Renders one row per line, entries separated by `", "`.
    pub fn to_text(&self, vars: &VarContext) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            let line: Vec<String> = self
                .row(r)
                .iter()
                .map(|p| p.display(vars).to_string())
                .collect();
            s.push_str(&line.join(", "));
            s.push('\n');
        }
        s
    }
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
