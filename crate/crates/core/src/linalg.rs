//! Dense linear algebra over an arbitrary finite field.
//!
//! Elimination always takes the first nonzero entry (scanning rows top-down)
//! as pivot and scales it to one, so every routine here is deterministic.

use std::fmt;

use crate::error::{Error, Result};

/// Arithmetic of a field whose elements are plain values.
pub trait FieldOps {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

/// Row-major rectangular matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data has wrong length");
        Self { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    /// Builds a matrix from equally long rows. An empty row list gives a
    /// `0 x cols` matrix.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Self { rows: n, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_rows(rows, self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

pub fn identity<F: FieldOps>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
}

pub fn mat_mul<F: FieldOps>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = Matrix::filled(a.rows, b.cols, f.zero());
    for i in 0..a.rows {
        for l in 0..a.cols {
            let x = a.get(i, l);
            if f.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                let acc = f.add(out.get(i, j), &f.mul(x, b.get(l, j)));
                out.set(i, j, acc);
            }
        }
    }
    Ok(out)
}

/// Row vector times matrix.
pub fn vec_mat<F: FieldOps>(f: &F, v: &[F::Elem], m: &Matrix<F::Elem>) -> Result<Vec<F::Elem>> {
    if v.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} times {}x{} matrix",
            v.len(),
            m.rows,
            m.cols
        )));
    }
    let mut out = vec![f.zero(); m.cols];
    for (i, x) in v.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            *o = f.add(o, &f.mul(x, m.get(i, j)));
        }
    }
    Ok(out)
}

/// Matrix times column vector.
pub fn mat_vec<F: FieldOps>(f: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if v.len() != m.cols {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix times vector of length {}",
            m.rows,
            m.cols,
            v.len()
        )));
    }
    Ok((0..m.rows).map(|i| m.row(i).iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))).collect())
}

/// Brings `m` into reduced row echelon form in place and returns the pivot
/// columns, in increasing order.
pub fn rref<F: FieldOps>(f: &F, m: &mut Matrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..m.cols {
        if prow == m.rows {
            break;
        }
        let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
            continue;
        };
        m.swap_rows(prow, r);
        let inv = f.inv(m.get(prow, col)).expect("pivot is nonzero");
        for j in col..m.cols {
            let v = f.mul(m.get(prow, j), &inv);
            m.set(prow, j, v);
        }
        for i in 0..m.rows {
            if i == prow {
                continue;
            }
            let factor = m.get(i, col).clone();
            if f.is_zero(&factor) {
                continue;
            }
            for j in col..m.cols {
                let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(prow, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    pivots
}

pub fn rank<F: FieldOps>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(f, &mut work).len()
}

/// Basis of the right null space `{x : m x = 0}`, one vector per free column
/// in increasing column order.
pub fn kernel<F: FieldOps>(f: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = rref(f, &mut work);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); m.cols];
        v[free] = f.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = f.neg(work.get(row, free));
        }
        basis.push(v);
    }
    basis
}

/// Solves `m x = rhs`. When the solution is not unique the free variables are
/// set to zero.
pub fn solve<F: FieldOps>(f: &F, m: &Matrix<F::Elem>, rhs: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if rhs.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} equations",
            rhs.len(),
            m.rows
        )));
    }
    let mut aug =
        Matrix::from_fn(m.rows, m.cols + 1, |i, j| if j < m.cols { m.get(i, j).clone() } else { rhs[i].clone() });
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&m.cols) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![f.zero(); m.cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug.get(row, m.cols).clone();
    }
    Ok(x)
}

pub fn inverse<F: FieldOps>(f: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch(format!("cannot invert a {}x{} matrix", m.rows, m.cols)));
    }
    let n = m.rows;
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            f.one()
        } else {
            f.zero()
        }
    });
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    Ok(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

/// Left inverse of a matrix with full column rank, stored as an information
/// set of rows together with the inverse of the square submatrix on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftInverse<T> {
    rows: Vec<usize>,
    inv: Matrix<T>,
}

impl<T: Clone + PartialEq + fmt::Debug> LeftInverse<T> {
    pub fn new<F: FieldOps<Elem = T>>(f: &F, a: &Matrix<T>) -> Result<Self> {
        let mut t = a.transpose();
        let rows = rref(f, &mut t);
        if rows.len() != a.cols {
            return Err(Error::SingularMatrix);
        }
        let inv = inverse(f, &a.select_rows(&rows))?;
        Ok(Self { rows, inv })
    }

    /// The unique `x` with `a x = y`, assuming `y` lies in the column space.
    pub fn apply<F: FieldOps<Elem = T>>(&self, f: &F, y: &[T]) -> Result<Vec<T>> {
        let picked: Vec<T> = self.rows.iter().map(|&i| y[i].clone()).collect();
        mat_vec(f, &self.inv, &picked)
    }
}
