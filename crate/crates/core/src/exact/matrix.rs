use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{inv_mod, mul_mod, sub_mod, Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix, rejecting a wrong entry count or any entry outside `field`.
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::Malformed(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            field.check_same(e.field())?;
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Malformed("ragged rows".into()));
        }
        Matrix::new(field, nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, data: &[i64]) -> Result<Matrix> {
        Matrix::new(
            field,
            rows,
            cols,
            data.iter().map(|&v| Scalar::from_i64(field, v)).collect(),
        )
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one(field);
        }
        m
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
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            entries,
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.field.check_same(rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::Malformed(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Scalar::zero(self.field);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(r, k) * rhs.get(k, c));
                }
                out.push(acc);
            }
        }
        Matrix::new(self.field, self.rows, rhs.cols, out)
    }

    /// Row rank. Prime fields use ordinary elimination on machine words;
    /// rationals are cleared to integers and reduced fraction-free.
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Prime(m) => {
                let data = self
                    .entries
                    .iter()
                    .map(|e| e.as_residue().expect("entry in field"))
                    .collect();
                rank_mod_p(self.rows, self.cols, data, m.get())
            }
            Field::Rational => {
                let data = integer_rows(self.rows, self.cols, &self.entries);
                rank_integer(self.rows, self.cols, data)
            }
        }
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of `{x : M x = 0}` read off the reduced row echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref();
        let zero = Scalar::zero(self.field);
        let one = Scalar::one(self.field);
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![zero.clone(); self.cols];
            v[free] = one.clone();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref.get(r, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form and the pivot columns, pivoting on the first
    /// nonzero entry in column order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.entries[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.entries[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Vec::with_capacity(2 * n * n);
        for r in 0..n {
            aug.extend_from_slice(self.row(r));
            for c in 0..n {
                aug.push(if r == c {
                    Scalar::one(self.field)
                } else {
                    Scalar::zero(self.field)
                });
            }
        }
        let aug = Matrix::new(self.field, n, 2 * n, aug).ok()?;
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            out.extend_from_slice(&red.row(r)[n..]);
        }
        Matrix::new(self.field, n, n, out).ok()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Clears denominators row by row, producing an integer matrix with the same row space.
fn integer_rows(rows: usize, cols: usize, entries: &[Scalar]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let row = &entries[r * cols..(r + 1) * cols];
        let lcm = row.iter().fold(BigInt::one(), |acc, e| {
            acc.lcm(e.as_rational().expect("rational entry").denom())
        });
        for e in row {
            let q = e.as_rational().expect("rational entry");
            out.push(q.numer() * (&lcm / q.denom()));
        }
    }
    out
}

/// Rank over `GF(p)` of a row-major residue matrix.
pub fn rank_mod_p(rows: usize, cols: usize, mut data: Vec<u64>, p: u64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in c..cols {
                data.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod(data[rank * cols + c], p);
        for j in c..cols {
            data[rank * cols + j] = mul_mod(data[rank * cols + j], inv, p);
        }
        for i in rank + 1..rows {
            let f = data[i * cols + c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let t = mul_mod(f, data[rank * cols + j], p);
                data[i * cols + j] = sub_mod(data[i * cols + j], t, p);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
/// intermediate entry is a minor of the input, so each division is exact.
pub fn rank_integer(rows: usize, cols: usize, mut data: Vec<BigInt>) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                data.swap(piv * cols + j, rank * cols + j);
            }
        }
        let pivot = data[rank * cols + c].clone();
        for i in rank + 1..rows {
            let lead = data[i * cols + c].clone();
            for j in c + 1..cols {
                let v = &pivot * &data[i * cols + j] - &lead * &data[rank * cols + j];
                debug_assert!((&v % &prev).is_zero());
                data[i * cols + j] = v / &prev;
            }
            data[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Row echelon basis over `GF(p)` that accepts rows one at a time.
/// Used where rank is grown sample by sample.
#[derive(Debug, Clone)]
pub struct EchelonFp {
    p: u64,
    cols: usize,
    // (pivot column, row normalized to 1 at the pivot)
    basis: Vec<(usize, Vec<u64>)>,
}

impl EchelonFp {
    pub fn new(p: u64, cols: usize) -> EchelonFp {
        EchelonFp {
            p,
            cols,
            basis: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `row` against the basis; returns true when it was independent.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        assert_eq!(row.len(), self.cols);
        let p = self.p;
        for (pc, b) in &self.basis {
            let f = row[*pc];
            if f == 0 {
                continue;
            }
            for j in *pc..self.cols {
                if b[j] != 0 {
                    row[j] = sub_mod(row[j], mul_mod(f, b[j], p), p);
                }
            }
        }
        let Some(pc) = row.iter().position(|&v| v != 0) else {
            return false;
        };
        let inv = inv_mod(row[pc], p);
        for v in row.iter_mut().skip(pc) {
            *v = mul_mod(*v, inv, p);
        }
        // keep basis sorted by pivot so reductions only touch columns to the right
        let at = self.basis.partition_point(|(c, _)| *c < pc);
        self.basis.insert(at, (pc, row));
        true
    }
}
