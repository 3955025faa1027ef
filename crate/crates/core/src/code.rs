//! Construction and encoding of TZ codes.
//!
//! A TZ code of dimension parameter `k` over `F_{q^{2n}}` is the evaluation on
//! an F_q-basis `λ` of the linearized polynomials
//! `a x + Σ_{i=1}^{k-1} f_i x^(q^i) + γ b x^(q^k)` with `a, b ∈ F_{q^n}`,
//! where `N(γ)` is a non-square of `F_q`. The code is only `F_{q^n}`-linear;
//! its parity-check matrix is built from the trace almost dual basis `μ` of
//! `λ`, and a word is a codeword exactly when every entry of its syndrome has
//! zero relative trace.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{self, LeftInverse, Matrix};
use crate::space::{self, Basis};

/// Optional overrides for [`TzCode::build`]; anything left `None` is chosen
/// deterministically.
#[derive(Debug, Clone, Default)]
pub struct CodeParams {
    pub lambda: Option<Basis>,
    pub gamma: Option<Elem>,
    pub xi: Option<Elem>,
}

#[derive(Debug, Clone)]
pub struct TzCode {
    field: Field,
    k: usize,
    gamma: Elem,
    xi: Elem,
    lambda: Basis,
    mu: Basis,
    g: Matrix<Elem>,
    h: Matrix<Elem>,
    /// `μ^(q^k)`, the basis error locators are expanded in.
    mu_qk: Basis,
    msg_inverse: LeftInverse<u32>,
}

/// `N(γ)` is a non-square in `F_q`.
pub fn has_nonsquare_norm(field: &Field, gamma: &Elem) -> bool {
    let norm = field.norm_abs(gamma);
    match field.as_scalar(&norm) {
        Some(c) => c != 0 && !field.prime_field().is_square(c),
        None => false,
    }
}

/// First element, in index order (see [`Field::elem_from_index`]), whose
/// absolute norm is a non-square.
pub fn find_gamma(field: &Field) -> Result<Elem> {
    if field.q().is_multiple_of(2) {
        return Err(Error::UnsupportedCharacteristic(field.q()));
    }
    (1..field.order())
        .map(|i| field.elem_from_index(i))
        .find(|g| has_nonsquare_norm(field, g))
        .ok_or_else(|| Error::InvalidParameter("no element with non-square norm".into()))
}

/// `ξ = η / γ` where `η` is the first echelon vector of the F_q-kernel of the
/// relative trace, so that `Tr(γ ξ) = 0`.
pub fn find_xi(field: &Field, gamma: &Elem) -> Result<Elem> {
    if gamma.is_zero() {
        return Err(Error::InvalidParameter("gamma must be nonzero".into()));
    }
    let m = field.degree();
    let images: Vec<Elem> = (0..m).map(|j| field.trace_rel(&field.alpha_pow(j))).collect();
    let trace_map = Matrix::from_fn(m, m, |i, j| images[j].coeffs()[i]);
    let kernel = linalg::kernel(field.prime_field(), &trace_map);
    let eta = field.elem(kernel.first().expect("relative trace has a nontrivial kernel"));
    field.div(&eta, gamma)
}

/// The unique basis `μ` with `⟨λ^(q^i), μ^(q^j)⟩ = 0` for `i ≠ j` and
/// `⟨λ^(q^k), μ^(q^k)⟩ = ξ`, from the Moore system
/// `V(λ) μ^T = (ξ^(q^(2n-k)), 0, …, 0)^T`.
pub fn trace_almost_dual(field: &Field, lambda: &Basis, xi: &Elem, k: usize) -> Result<Basis> {
    if xi.is_zero() {
        return Err(Error::InvalidParameter("xi must be nonzero".into()));
    }
    let m = field.degree();
    let system = space::qvan(field, lambda.elems(), m);
    let mut rhs = vec![field.zero(); m];
    rhs[0] = field.frobenius(xi, (m - k) as i64);
    let mu = linalg::solve(field, &system, &rhs)?;
    Basis::new(field, mu)
}

/// Rows `x, x^q, γx^q, …, x^(q^(k-1)), γx^(q^(k-1)), γx^(q^k)` evaluated on
/// `points`.
fn basis_evaluations(field: &Field, k: usize, gamma: &Elem, points: &[Elem]) -> Matrix<Elem> {
    let scaled = |v: Vec<Elem>| v.iter().map(|e| field.mul(gamma, e)).collect::<Vec<_>>();
    let mut rows = Vec::with_capacity(2 * k);
    rows.push(points.to_vec());
    for i in 1..k {
        let p = space::frobenius_vec(field, points, i as i64);
        rows.push(p.clone());
        rows.push(scaled(p));
    }
    rows.push(scaled(space::frobenius_vec(field, points, k as i64)));
    Matrix::from_rows(rows, points.len())
}

impl TzCode {
    /// Builds the code with all defaults: power basis, first valid `γ`, and
    /// the echelon choice of `ξ`.
    pub fn new(field: Field, k: usize) -> Result<Self> {
        Self::build(field, k, CodeParams::default())
    }

    pub fn build(field: Field, k: usize, params: CodeParams) -> Result<Self> {
        let m = field.degree();
        if k == 0 || k >= m {
            return Err(Error::InvalidParameter(format!("k = {k} must satisfy 1 <= k <= {}", m - 1)));
        }
        let lambda = params.lambda.unwrap_or_else(|| Basis::power(&field));
        if lambda.len() != m {
            return Err(Error::InvalidParameter("lambda has the wrong length".into()));
        }
        let gamma = match params.gamma {
            Some(g) => {
                if !has_nonsquare_norm(&field, &g) {
                    return Err(Error::InvalidParameter("gamma: norm is not a non-square of F_q".into()));
                }
                g
            }
            None => find_gamma(&field)?,
        };
        let xi = match params.xi {
            Some(x) => {
                if x.is_zero() {
                    return Err(Error::InvalidParameter("xi: must be nonzero".into()));
                }
                if !field.trace_rel(&field.mul(&gamma, &x)).is_zero() {
                    return Err(Error::InvalidParameter("xi: relative trace of gamma*xi is not zero".into()));
                }
                x
            }
            None => find_xi(&field, &gamma)?,
        };
        let mu = trace_almost_dual(&field, &lambda, &xi, k)?;

        let g = basis_evaluations(&field, k, &gamma, lambda.elems());

        let mu_pow = |i: usize| space::frobenius_vec(&field, mu.elems(), i as i64);
        let times_gamma = |v: &[Elem], c: &Elem| v.iter().map(|e| field.mul(c, e)).collect::<Vec<_>>();
        let mut hrows = Vec::with_capacity(2 * m - 2 * k);
        hrows.push(times_gamma(mu.elems(), &field.frobenius(&gamma, (m - k) as i64)));
        for i in k + 1..m {
            let p = mu_pow(i);
            hrows.push(p.clone());
            hrows.push(times_gamma(&p, &gamma));
        }
        hrows.push(mu_pow(k));
        let h = Matrix::from_rows(hrows, m);

        let mu_qk = Basis::new(&field, mu_pow(k))?;
        let msg_inverse = Self::message_inverse(&field, &g)?;

        Ok(Self { field, k, gamma, xi, lambda, mu, g, h, mu_qk, msg_inverse })
    }

    /// Expands `msg ↦ msg G` into an F_q matrix (columns: message coordinates
    /// in the subfield basis; rows: codeword coefficients) and stores a left
    /// inverse of it.
    fn message_inverse(field: &Field, g: &Matrix<Elem>) -> Result<LeftInverse<u32>> {
        let m = field.degree();
        let sub = field.subfield_basis();
        let mut cols = Vec::with_capacity(g.rows() * sub.len());
        for r in 0..g.rows() {
            for b in sub {
                let mut col = Vec::with_capacity(m * m);
                for e in g.row(r) {
                    col.extend_from_slice(field.mul(b, e).coeffs());
                }
                cols.push(col);
            }
        }
        let expanded = Matrix::from_fn(m * m, cols.len(), |i, j| cols[j][i]);
        LeftInverse::new(field.prime_field(), &expanded)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.field.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Code length `2n`.
    pub fn length(&self) -> usize {
        self.field.degree()
    }

    /// Number of `F_{q^n}` message symbols, `2k`.
    pub fn message_len(&self) -> usize {
        2 * self.k
    }

    /// Syndrome length `4n - 2k`.
    pub fn syndrome_len(&self) -> usize {
        self.h.rows()
    }

    pub fn min_distance(&self) -> usize {
        self.length() - self.k + 1
    }

    /// Unique decoding radius `⌊(2n - k) / 2⌋`.
    pub fn radius(&self) -> usize {
        (self.length() - self.k) / 2
    }

    /// `n - k/2` when `k` is even: the error rank that needs the
    /// trace-augmented system.
    pub fn limit_rank(&self) -> Option<usize> {
        self.k.is_multiple_of(2).then(|| self.n() - self.k / 2)
    }

    pub fn gamma(&self) -> &Elem {
        &self.gamma
    }

    pub fn xi(&self) -> &Elem {
        &self.xi
    }

    pub fn lambda(&self) -> &Basis {
        &self.lambda
    }

    pub fn mu(&self) -> &Basis {
        &self.mu
    }

    pub fn mu_qk(&self) -> &Basis {
        &self.mu_qk
    }

    pub fn generator(&self) -> &Matrix<Elem> {
        &self.g
    }

    pub fn parity_check(&self) -> &Matrix<Elem> {
        &self.h
    }

    pub fn gh_transpose(&self) -> Matrix<Elem> {
        linalg::mat_mul(&self.field, &self.g, &self.h.transpose()).expect("conformable")
    }

    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.message_len() {
            return Err(Error::DimensionMismatch(format!(
                "message has {} symbols, expected {}",
                msg.len(),
                self.message_len()
            )));
        }
        if let Some(index) = msg.iter().position(|e| !self.field.in_subfield(e)) {
            return Err(Error::MessageNotInSubfield { index });
        }
        linalg::vec_mat(&self.field, msg, &self.g)
    }

    /// `r H^T`.
    pub fn syndrome(&self, r: &[Elem]) -> Result<Vec<Elem>> {
        if r.len() != self.length() {
            return Err(Error::DimensionMismatch(format!("word has length {}, expected {}", r.len(), self.length())));
        }
        Ok((0..self.h.rows()).map(|i| space::inner(&self.field, r, self.h.row(i))).collect())
    }

    pub fn is_codeword(&self, r: &[Elem]) -> Result<bool> {
        Ok(self.syndrome(r)?.iter().all(|s| self.field.trace_rel(s).is_zero()))
    }

    /// The message that encodes to `c`.
    pub fn unmap(&self, c: &[Elem]) -> Result<Vec<Elem>> {
        if !self.is_codeword(c)? {
            return Err(Error::NotACodeword);
        }
        let flat: Vec<u32> = c.iter().flat_map(|e| e.coeffs().iter().copied()).collect();
        let coords = self.msg_inverse.apply(self.field.prime_field(), &flat)?;
        let sub = self.field.subfield_basis();
        Ok(coords
            .chunks(sub.len())
            .map(|chunk| {
                chunk
                    .iter()
                    .zip(sub)
                    .fold(self.field.zero(), |acc, (&x, b)| self.field.add(&acc, &self.field.scale(x, b)))
            })
            .collect())
    }

    /// Generator matrix of the code evaluated on `ℓ` F_q-independent points,
    /// `k <= ℓ <= 2n`.
    pub fn punctured_generator(&self, points: &[Elem]) -> Result<Matrix<Elem>> {
        let l = points.len();
        if l < self.k || l > self.length() {
            return Err(Error::InvalidParameter(format!(
                "number of evaluation points {l} must lie in [{}, {}]",
                self.k,
                self.length()
            )));
        }
        if linalg::rank(&self.field, &space::qvan(&self.field, points, l)) != l {
            return Err(Error::DependentEvaluationPoints);
        }
        Ok(basis_evaluations(&self.field, self.k, &self.gamma, points))
    }
}


#[cfg(test)]
mod worked_example {
    use super::*;

    fn e(f: &Field, c: [u32; 4]) -> Elem {
        f.elem(&c)
    }

    fn example() -> TzCode {
        let f = Field::with_modulus(5, 2, &[2, 0, 0, 0, 1]).unwrap();
        let params =
            CodeParams { gamma: Some(f.elem(&[3, 2, 1, 1])), xi: Some(f.elem(&[4, 2, 4])), ..Default::default() };
        TzCode::build(f, 2, params).unwrap()
    }

    #[test]
    fn mu_matches() {
        let code = example();
        let f = code.field();
        let expect = [[1, 2, 1, 0], [2, 1, 0, 2], [1, 0, 2, 4], [0, 2, 4, 2]];
        let mu: Vec<Elem> = expect.iter().map(|c| e(f, *c)).collect();
        assert_eq!(code.mu().elems(), &mu[..]);
        assert_eq!(f.frobenius(code.xi(), 2), f.elem(&[4, 3, 4]));
    }

    #[test]
    fn generator_matches() {
        let code = example();
        let f = code.field();
        let rows = [
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            [[1, 0, 0, 0], [0, 3, 0, 0], [0, 0, 4, 0], [0, 0, 0, 2]],
            [[3, 2, 1, 1], [4, 4, 1, 3], [2, 2, 2, 3], [2, 1, 1, 1]],
            [[3, 2, 1, 1], [2, 2, 3, 4], [3, 3, 3, 2], [4, 2, 2, 2]],
        ];
        for (i, row) in rows.iter().enumerate() {
            let expect: Vec<Elem> = row.iter().map(|c| e(f, *c)).collect();
            assert_eq!(code.generator().row(i), &expect[..], "row {i}");
        }
    }

    #[test]
    fn parity_check_matches() {
        let code = example();
        let f = code.field();
        let rows = [
            [[0, 1, 0, 4], [1, 0, 4, 0], [0, 4, 0, 2], [4, 0, 2, 0]],
            [[1, 4, 4, 0], [2, 2, 0, 1], [1, 0, 3, 2], [0, 4, 1, 1]],
            [[2, 1, 1, 3], [3, 3, 4, 2], [4, 2, 1, 3], [1, 3, 4, 4]],
            [[1, 3, 1, 0], [2, 4, 0, 3], [1, 0, 2, 1], [0, 3, 4, 3]],
        ];
        for (i, row) in rows.iter().enumerate() {
            let expect: Vec<Elem> = row.iter().map(|c| e(f, *c)).collect();
            assert_eq!(code.parity_check().row(i), &expect[..], "row {i}");
        }
    }

    #[test]
    fn gh_transpose_has_two_corner_entries() {
        let code = example();
        let f = code.field();
        let p = code.gh_transpose();
        for i in 0..4 {
            for j in 0..4 {
                let expect = match (i, j) {
                    (0, 0) => f.elem(&[0, 4, 0, 1]),
                    (3, 3) => f.elem(&[0, 1, 0, 4]),
                    _ => f.zero(),
                };
                assert_eq!(p.get(i, j), &expect, "({i},{j})");
            }
        }
    }

    #[test]
    fn default_choices_give_valid_code() {
        let f = Field::with_modulus(5, 2, &[2, 0, 0, 0, 1]).unwrap();
        let code = TzCode::new(f.clone(), 2).unwrap();
        let p = code.gh_transpose();
        for i in 0..p.rows() {
            for j in 0..p.cols() {
                assert!(f.trace_rel(p.get(i, j)).is_zero());
            }
        }
        let gx = f.mul(code.gamma(), code.xi());
        assert_eq!(p.get(3, 3), &gx);
        assert_eq!(p.get(0, 0), &f.frobenius(&gx, 2));
    }
}
