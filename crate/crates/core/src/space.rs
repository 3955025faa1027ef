//! F_q-linear structure of `F_{q^{2n}}`: ordered bases, matrix expansion of
//! vectors, q-Vandermonde (Moore) matrices and the rank weight.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{self, Matrix};

/// An ordered F_q-basis of `F_{q^{2n}}` together with the coordinate map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    elems: Vec<Elem>,
    /// Inverse of the matrix whose columns are the power-basis coefficients
    /// of `elems`; maps power-basis coefficients to coordinates.
    to_coords: Matrix<u32>,
}

impl Basis {
    pub fn new(field: &Field, elems: Vec<Elem>) -> Result<Self> {
        let m = field.degree();
        if elems.len() != m {
            return Err(Error::InvalidParameter(format!(
                "a basis of F_(q^{m}) needs {m} elements, got {}",
                elems.len()
            )));
        }
        let expansion = Matrix::from_fn(m, m, |i, j| elems[j].coeffs()[i]);
        let to_coords = linalg::inverse(field.prime_field(), &expansion).map_err(|_| Error::DependentSpan)?;
        Ok(Self { elems, to_coords })
    }

    /// `(1, α, …, α^{2n-1})`.
    pub fn power(field: &Field) -> Self {
        let elems = (0..field.degree()).map(|i| field.alpha_pow(i)).collect();
        Self::new(field, elems).expect("power basis is a basis")
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Coordinates of `x` with respect to this basis.
    pub fn coords(&self, field: &Field, x: &Elem) -> Vec<u32> {
        linalg::mat_vec(field.prime_field(), &self.to_coords, x.coeffs()).expect("square coordinate map")
    }

    /// `Σ c_i β_i`.
    pub fn combine(&self, field: &Field, coords: &[u32]) -> Elem {
        self.elems.iter().zip(coords).fold(field.zero(), |acc, (b, &c)| field.add(&acc, &field.scale(c, b)))
    }
}

/// `2n x ℓ` matrix over F_q whose column `j` holds the coordinates of `x_j`.
pub fn ext(field: &Field, x: &[Elem], basis: &Basis) -> Matrix<u32> {
    let cols: Vec<Vec<u32>> = x.iter().map(|e| basis.coords(field, e)).collect();
    Matrix::from_fn(field.degree(), x.len(), |i, j| cols[j][i])
}

pub fn ext_inv(field: &Field, mat: &Matrix<u32>, basis: &Basis) -> Result<Vec<Elem>> {
    if mat.rows() != field.degree() {
        return Err(Error::DimensionMismatch(format!(
            "expanded matrix has {} rows, expected {}",
            mat.rows(),
            field.degree()
        )));
    }
    Ok((0..mat.cols()).map(|j| basis.combine(field, &mat.column(j))).collect())
}

/// Dimension over F_q of the span of the entries of `x`.
pub fn rank_weight(field: &Field, x: &[Elem]) -> usize {
    let mat = Matrix::from_fn(x.len(), field.degree(), |i, j| x[i].coeffs()[j]);
    linalg::rank(field.prime_field(), &mat)
}

/// True when the entries of `x` are linearly independent over F_q.
pub fn independent(field: &Field, x: &[Elem]) -> bool {
    rank_weight(field, x) == x.len()
}

/// The `s x ℓ` Moore matrix whose row `i` is `x^(q^i)`.
pub fn qvan(field: &Field, x: &[Elem], s: usize) -> Matrix<Elem> {
    let rows = (0..s).map(|i| x.iter().map(|e| field.frobenius(e, i as i64)).collect()).collect();
    Matrix::from_rows(rows, x.len())
}

/// `⟨x, y⟩ = Σ x_i y_i`.
pub fn inner(field: &Field, x: &[Elem], y: &[Elem]) -> Elem {
    x.iter().zip(y).fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
}

/// Entrywise `x^(q^i)`.
pub fn frobenius_vec(field: &Field, x: &[Elem], i: i64) -> Vec<Elem> {
    x.iter().map(|e| field.frobenius(e, i)).collect()
}
