//! Dense matrices over an exact field and the elimination kernels everything
//! else is built on.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    /// Builds a matrix with `rows` rows whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    *out.get_mut(i, j) += &prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![self.field.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum shape"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference shape"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `self += s * rhs`.
    pub fn add_scaled(&mut self, s: &Scalar, rhs: &Matrix) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
    }

    /// Linear combination `sum coeffs[k] * mats[k]`.
    pub fn combination(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        coeffs: &[Scalar],
        mats: &[Matrix],
    ) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            out.add_scaled(c, m);
        }
        out
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack rows");
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack cols");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, rhs);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                out.set(r, j, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                out.set(i, c, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = rref_rows(&mut rows, self.cols);
        let field = self.field;
        let cols = self.cols;
        let mut m = Matrix::from_rows(field, rows);
        if m.rows == 0 {
            m.cols = cols;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the null space `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (c, &f) in free.iter().enumerate() {
            k.set(f, c, self.field.one());
            for (pr, &p) in pivots.iter().enumerate() {
                let x = r.get(pr, f);
                if !x.is_zero() {
                    k.set(p, c, -x);
                }
            }
        }
        k
    }

    /// Columns form a basis of the left null space `{y : y^T * self = 0}`.
    pub fn cokernel_basis(&self) -> Matrix {
        self.transpose().kernel_basis()
    }

    /// An independent subset of the columns spanning the column space.
    pub fn column_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(alloc::format!(
                "right-hand side has length {} but matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        Ok(self.solve_matrix(&rhs)?.map(|x| x.column(0)))
    }

    /// Some `X` with `self * X = rhs`.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(Error::Dimension(alloc::format!(
                "right-hand side has {} rows but matrix has {}",
                rhs.rows,
                self.rows
            )));
        }
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (pr, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(pr, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn invert(&self) -> Result<Option<Matrix>> {
        if !self.is_square() {
            return Err(Error::Dimension(alloc::format!(
                "cannot invert a {}x{} matrix",
                self.rows,
                self.cols
            )));
        }
        if self.rank() < self.rows {
            return Ok(None);
        }
        self.solve_matrix(&Matrix::identity(self.field, self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// A matrix `L` with `L * self = I` for a matrix of full column rank.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let (_, pivots) = self.transpose().rref();
        if pivots.len() < self.cols {
            return None;
        }
        let square = self.select_rows(&pivots);
        let inv = square.invert().ok()??;
        let mut l = Matrix::zeros(self.field, self.cols, self.rows);
        for (c, &p) in pivots.iter().enumerate() {
            for i in 0..self.cols {
                l.set(i, p, inv.get(i, c).clone());
            }
        }
        Some(l)
    }

    /// A matrix `R` with `self * R = I` for a matrix of full row rank.
    pub fn right_inverse(&self) -> Option<Matrix> {
        self.transpose().left_inverse().map(|l| l.transpose())
    }

    pub fn pow(&self, mut exp: u64) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Columns of `self` flattened into one long column vector.
    pub fn vectorize(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    pub fn from_vectorized(field: FieldSpec, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m.set(i, j, v[j * rows + i].clone());
            }
        }
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// In-place reduced row echelon form on a list of rows; returns pivots.
pub(crate) fn rref_rows(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("pivot row");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            let f = other[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r.max(0));
    pivots
}

/// An incrementally built subspace of `field^dim` that remembers how each of
/// its echelon vectors is expressed in the accepted generators, so it can
/// answer membership and coordinate queries.
#[derive(Clone, Debug)]
pub struct Span {
    field: FieldSpec,
    dim: usize,
    generators: Vec<Vec<Scalar>>,
    // (pivot, reduced vector with 1 at pivot, combination of generators)
    echelon: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
}

impl Span {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        Span {
            field,
            dim,
            generators: Vec::new(),
            echelon: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(
        field: FieldSpec,
        dim: usize,
        vs: impl IntoIterator<Item = &'a Vec<Scalar>>,
    ) -> Self {
        let mut s = Span::new(field, dim);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Accepted (independent) generators, in insertion order.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.dim, &self.generators)
    }

    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut rest = v.to_vec();
        let mut combo = vec![self.field.zero(); self.generators.len()];
        for (p, e, c) in &self.echelon {
            let f = rest[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in rest.iter_mut().zip(e) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (x, y) in combo.iter_mut().zip(c) {
                if !y.is_zero() {
                    *x += &(&f * y);
                }
            }
        }
        (rest, combo)
    }

    /// Adds `v`; returns `true` if it was independent of the current span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.dim, "span ambient dimension");
        let (rest, combo) = self.reduce(v);
        let Some(p) = rest.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rest[p].inv().expect("nonzero");
        let k = self.generators.len();
        let e: Vec<Scalar> = rest.iter().map(|x| x * &inv).collect();
        // rest = v - combo·gens, so e = inv·(v - combo·gens).
        let mut c: Vec<Scalar> = combo.iter().map(|x| -(x * &inv)).collect();
        c.push(inv);
        for (_, oe, oc) in self.echelon.iter_mut() {
            oc.resize(k + 1, self.field.zero());
            let f = oe[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in oe.iter_mut().zip(&e) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for (x, y) in oc.iter_mut().zip(&c) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        self.generators.push(v.to_vec());
        self.echelon.push((p, e, c));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).0.iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` with respect to [`Span::basis`], if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (rest, combo) = self.reduce(v);
        rest.iter().all(Scalar::is_zero).then_some(combo)
    }
}

pub fn zero_vec(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}
