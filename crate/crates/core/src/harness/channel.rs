//! Random rank errors `e = a B`.

use rand::Rng;

use crate::code::TzCode;
use crate::decoder::ErrorDecomposition;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{self, Matrix};
use crate::space;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChannelSpec {
    /// Rank of the injected error.
    pub t: usize,
    /// Draw the span `a` from `F_{q^n}` only.
    pub subfield_only: bool,
    pub seed: u64,
}

impl ChannelSpec {
    pub fn new(t: usize, subfield_only: bool, seed: u64) -> Self {
        Self { t, subfield_only, seed }
    }

    pub fn validate(&self, code: &TzCode) -> Result<()> {
        if self.t > code.length() {
            return Err(Error::InvalidParameter(format!(
                "error rank {} exceeds the code length {}",
                self.t,
                code.length()
            )));
        }
        if self.subfield_only && self.t > code.n() {
            return Err(Error::InvalidParameter(format!(
                "a subfield-only error has rank at most {}, got {}",
                code.n(),
                self.t
            )));
        }
        Ok(())
    }
}

/// `t` F_q-independent elements, from the whole field or from `F_{q^n}`.
pub fn random_independent<R: Rng + ?Sized>(field: &Field, t: usize, subfield: bool, rng: &mut R) -> Vec<Elem> {
    loop {
        let a: Vec<Elem> =
            (0..t).map(|_| if subfield { field.random_subfield(rng) } else { field.random(rng) }).collect();
        if space::independent(field, &a) {
            return a;
        }
    }
}

/// A uniformly random full-rank `rows x cols` matrix over F_q, by rejection.
pub fn random_full_rank<R: Rng + ?Sized>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix<u32> {
    let q = field.q();
    loop {
        let b = Matrix::from_fn(rows, cols, |_, _| rng.gen_range(0..q));
        if linalg::rank(field.prime_field(), &b) == rows {
            return b;
        }
    }
}

/// `e_j = Σ_ℓ a_ℓ B_{ℓ,j}`.
pub fn combine(field: &Field, a: &[Elem], b: &Matrix<u32>) -> Vec<Elem> {
    (0..b.cols())
        .map(|j| a.iter().enumerate().fold(field.zero(), |acc, (l, x)| field.add(&acc, &field.scale(*b.get(l, j), x))))
        .collect()
}

/// Draws an error of rank exactly `spec.t` together with its decomposition.
pub fn random_error<R: Rng + ?Sized>(
    code: &TzCode,
    spec: &ChannelSpec,
    rng: &mut R,
) -> Result<(Vec<Elem>, ErrorDecomposition)> {
    spec.validate(code)?;
    let field = code.field();
    let a = random_independent(field, spec.t, spec.subfield_only, rng);
    let b = random_full_rank(field, spec.t, code.length(), rng);
    let e = combine(field, &a, &b);
    let d = (0..spec.t).map(|l| code.mu_qk().combine(field, b.row(l))).collect();
    Ok((e, ErrorDecomposition { a, b, d }))
}

/// A uniformly random message: `2k` elements of `F_{q^n}`.
pub fn random_message<R: Rng + ?Sized>(code: &TzCode, rng: &mut R) -> Vec<Elem> {
    (0..code.message_len()).map(|_| code.field().random_subfield(rng)).collect()
}
