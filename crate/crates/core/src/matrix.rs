//! Dense exact matrices and subspaces.
//!
//! Over Q, row reduction is fraction free: rows are scaled to primitive
//! integer vectors, combined by cross multiplication and re-divided by
//! their content after each step. Only the final normalisation of pivot
//! rows produces fractions. Over F_p it is ordinary Gauss-Jordan.
//!
//! All vectors are row vectors; a matrix `m` acts by `v -> v * m`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{inv_mod, mul_mod, Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Solution set of `m * x = b` (column convention).
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Option<Vec<Scalar>>,
    pub nullspace: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::Shape(format!(
                "entry {bad} does not belong to {field}"
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from row vectors; `cols` fixes the width when
    /// `rows` is empty.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Matrix::from_vec(field, n, cols, data)
    }

    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        self.with_data(data)
    }

    /// `self += s * other`, skipping work when `s` is zero.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = &*a + &(s * b);
            }
        }
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(k, j);
                if !b.is_zero() {
                    *o = &*o + &(a * b);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| dot(self.field, self.row(r), v))
            .collect()
    }

    /// Rows selected by index, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for r in 0..self.rows {
            for &c in idx {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: idx.len(),
            data,
        }
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        assert_eq!(a.field, b.field);
        let mut m = Matrix::zeros(a.field, a.rows + b.rows, a.cols + b.cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                m.set(r, c, a.get(r, c).clone());
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                m.set(a.rows + r, a.cols + c, b.get(r, c).clone());
            }
        }
        m
    }

    pub fn vstack(field: Field, cols: usize, parts: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            data.extend_from_slice(&p.data);
            rows += p.rows;
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Kronecker product `a ⊗ b`, indexing rows and columns as
    /// `(i, j) -> i * dim_b + j`.
    pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(a.field, a.rows * b.rows, a.cols * b.cols);
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..b.rows {
                    for l in 0..b.cols {
                        let y = b.get(j, l);
                        if !y.is_zero() {
                            m.set(i * b.rows + j, k * b.cols + l, x * y);
                        }
                    }
                }
            }
        }
        m
    }

    pub fn rref(&self) -> Rref {
        let (rows, pivots) = rref_rows(self.field, self.cols, self.row_vecs());
        let rank = pivots.len();
        let mut full = rows;
        full.resize(self.rows, vec![self.field.zero(); self.cols]);
        Rref {
            matrix: Matrix::from_rows(self.field, self.cols, full).expect("rref shape"),
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        rref_rows(self.field, self.cols, self.row_vecs()).1.len()
    }

    /// Basis of `{v : self * v = 0}` (column vectors).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (rows, pivots) = rref_rows(self.field, self.cols, self.row_vecs());
        nullspace_from_rref(self.field, self.cols, &rows, &pivots)
    }

    /// Basis of `{x : x * self = 0}` (row vectors).
    pub fn left_nullspace(&self) -> Vec<Vec<Scalar>> {
        self.transpose().nullspace()
    }

    /// Solves `self * x = b`.
    pub fn solve(&self, b: &[Scalar]) -> Solution {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let (rows, pivots) = rref_rows(self.field, self.cols + 1, aug);
        let nullspace = {
            let core_pivots: Vec<usize> =
                pivots.iter().copied().filter(|&c| c < self.cols).collect();
            let core_rows: Vec<Vec<Scalar>> = rows
                .iter()
                .zip(&pivots)
                .filter(|(_, &c)| c < self.cols)
                .map(|(r, _)| r[..self.cols].to_vec())
                .collect();
            nullspace_from_rref(self.field, self.cols, &core_rows, &core_pivots)
        };
        if pivots.last() == Some(&self.cols) {
            return Solution {
                particular: None,
                nullspace,
            };
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &c) in rows.iter().zip(&pivots) {
            x[c] = row[self.cols].clone();
        }
        Solution {
            particular: Some(x),
            nullspace,
        }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                for c in 0..n {
                    row.push(if c == r {
                        self.field.one()
                    } else {
                        self.field.zero()
                    });
                }
                row
            })
            .collect();
        let (rows, pivots) = rref_rows(self.field, 2 * n, aug);
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return None;
        }
        let data = rows.into_iter().flat_map(|r| r[n..].to_vec()).collect();
        Some(Matrix {
            field: self.field,
            rows: n,
            cols: n,
            data,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, e: u64) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            write!(f, "\n  [")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

pub fn zero_vec(field: Field, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `a + s * b`, entrywise.
pub fn axpy(a: &mut [Scalar], s: &Scalar, b: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + &(s * y);
        }
    }
}

fn nullspace_from_rref(
    field: Field,
    cols: usize,
    rows: &[Vec<Scalar>],
    pivots: &[usize],
) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = zero_vec(field, cols);
            v[free] = field.one();
            for (row, &pc) in rows.iter().zip(pivots) {
                v[pc] = -&row[free];
            }
            v
        })
        .collect()
}

/// Row-reduces `rows` (each of length `cols`) and returns the nonzero rows
/// of the reduced row echelon form with their pivot columns.
pub fn rref_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    match field {
        Field::Rationals => rref_rational(cols, rows),
        Field::Prime(p) => rref_modular(p, cols, rows),
    }
}

fn primitive_int_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        let r = x.as_rational().expect("rational entry");
        if !r.is_zero() && !r.denom().is_one() {
            lcm = lcm.lcm(r.denom());
        }
    }
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|x| {
            let r = x.as_rational().expect("rational entry");
            if r.is_zero() {
                BigInt::zero()
            } else if lcm.is_one() {
                r.numer().clone()
            } else {
                r.numer() * (&lcm / r.denom())
            }
        })
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
}

/// `target <- (p/g) * target - (a/g) * pivot_row`, where `p` is the pivot
/// entry and `a` the entry of `target` in the pivot column.
fn eliminate_int(target: &mut [BigInt], pivot_row: &[BigInt], col: usize) {
    let p = &pivot_row[col];
    let a = target[col].clone();
    let g = p.gcd(&a);
    let pg = p / &g;
    let ag = &a / &g;
    let scale_target = !pg.is_one();
    for (t, s) in target.iter_mut().zip(pivot_row) {
        if s.is_zero() {
            if scale_target && !t.is_zero() {
                *t = &*t * &pg;
            }
        } else if scale_target {
            *t = &*t * &pg - &ag * s;
        } else {
            *t = &*t - &ag * s;
        }
    }
    debug_assert!(target[col].is_zero());
    make_primitive(target);
}

fn rref_rational(cols: usize, rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| primitive_int_row(r))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr == m.len() {
            break;
        }
        // smallest nonzero entry keeps the cross-multiplied rows small
        let mut best: Option<usize> = None;
        for r in pr..m.len() {
            if !m[r][col].is_zero()
                && best.is_none_or(|b| m[r][col].abs() < m[b][col].abs())
            {
                best = Some(r);
            }
        }
        let Some(b) = best else { continue };
        m.swap(pr, b);
        let (head, tail) = m.split_at_mut(pr);
        let (prow, tail) = tail.split_first_mut().expect("pivot row");
        for r in head.iter_mut().chain(tail.iter_mut()) {
            if !r[col].is_zero() {
                eliminate_int(r, prow, col);
            }
        }
        pivots.push(col);
        pr += 1;
        // drop rows that became zero so later scans stay short
        let mut i = pr;
        while i < m.len() {
            if m[i].iter().all(|x| x.is_zero()) {
                m.swap_remove(i);
            } else {
                i += 1;
            }
        }
    }
    m.truncate(pr);
    let out = m
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let piv = row[c].clone();
            row.into_iter()
                .map(|x| {
                    if x.is_zero() {
                        Scalar::Rational(BigRational::zero())
                    } else {
                        Scalar::Rational(BigRational::new(x, piv.clone()))
                    }
                })
                .collect()
        })
        .collect();
    (out, pivots)
}

fn rref_modular(p: u64, cols: usize, rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| match x {
                    Scalar::Residue { value, .. } => *value,
                    Scalar::Rational(_) => panic!("rational entry in F_{p} matrix"),
                })
                .collect::<Vec<u64>>()
        })
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        if pr == m.len() {
            break;
        }
        let Some(b) = (pr..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(pr, b);
        let inv = inv_mod(m[pr][col], p);
        for x in m[pr].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let (head, tail) = m.split_at_mut(pr);
        let (prow, tail) = tail.split_first_mut().expect("pivot row");
        for r in head.iter_mut().chain(tail.iter_mut()) {
            let f = r[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in r.iter_mut().zip(prow.iter()) {
                if y != 0 {
                    *x = (*x + p - mul_mod(f, y, p)) % p;
                }
            }
        }
        pivots.push(col);
        pr += 1;
    }
    m.truncate(pr);
    let out = m
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|value| Scalar::Residue { value, p })
                .collect()
        })
        .collect();
    (out, pivots)
}

/// A subspace of `field^ambient`, kept as the nonzero rows of a reduced row
/// echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: (0..ambient).map(|i| unit_vec(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let (basis, pivots) = rref_rows(field, ambient, vectors);
        Subspace {
            field,
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis rows as a `dim x ambient` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, self.basis.clone()).expect("basis shape")
    }

    /// Residue of `v` modulo the subspace: zero in every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            if !w[c].is_zero() {
                let f = -&w[c];
                axpy(&mut w, &f, row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Adds `v` to the span. Returns false if it was already inside.
    pub fn extend(&mut self, v: &[Scalar]) -> bool {
        let mut w = self.reduce(v);
        let Some(c) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[c].inv().expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = &*x * &inv;
        }
        for row in self.basis.iter_mut() {
            if !row[c].is_zero() {
                let f = -&row[c];
                axpy(row, &f, &w);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(pos, c);
        self.basis.insert(pos, w);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, vs)
    }

    /// Columns that are not pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}
