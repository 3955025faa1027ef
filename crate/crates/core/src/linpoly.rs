//! Linearized polynomials `Σ f_i x^(q^i)` over `F_{q^{2n}}`.

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg;
use crate::space::{self, Basis};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinPoly {
    /// `coeffs[i]` multiplies `x^(q^i)`.
    coeffs: Vec<Elem>,
}

impl LinPoly {
    pub fn new(coeffs: Vec<Elem>) -> Self {
        Self { coeffs }
    }

    /// The identity map `x`.
    pub fn identity(field: &Field) -> Self {
        Self { coeffs: vec![field.one()] }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Elem::is_zero)
    }

    /// q-degree, `None` for the zero polynomial.
    pub fn q_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, field: &Field, x: &Elem) -> Elem {
        self.coeffs.iter().enumerate().fold(field.zero(), |acc, (i, c)| {
            if c.is_zero() {
                acc
            } else {
                field.add(&acc, &field.mul(c, &field.frobenius(x, i as i64)))
            }
        })
    }

    /// Scales so the coefficient of the top q-power is one.
    pub fn normalized(&self, field: &Field) -> Result<Self> {
        let top = self.q_degree().ok_or(Error::DivisionByZero)?;
        let inv = field.inv(&self.coeffs[top])?;
        Ok(Self { coeffs: self.coeffs[..=top].iter().map(|c| field.mul(c, &inv)).collect() })
    }
}

/// The subspace polynomial of `⟨vecs⟩_{F_q}`: monic, of q-degree
/// `vecs.len()`, vanishing exactly on the span.
///
/// Built incrementally: `P_{j+1}(x) = P_j(x)^q - P_j(v)^(q-1) P_j(x)` with
/// `v` the next spanning vector.
pub fn span_poly(field: &Field, vecs: &[Elem]) -> Result<LinPoly> {
    let mut p = LinPoly::identity(field);
    for v in vecs {
        let w = p.eval(field, v);
        if w.is_zero() {
            return Err(Error::DependentSpan);
        }
        // w^(q-1) = w^q / w
        let factor = field.div(&field.frobenius(&w, 1), &w)?;
        let mut next = vec![field.zero(); p.coeffs.len() + 1];
        for (i, c) in p.coeffs.iter().enumerate() {
            next[i + 1] = field.add(&next[i + 1], &field.frobenius(c, 1));
            next[i] = field.sub(&next[i], &field.mul(&factor, c));
        }
        p = LinPoly::new(next);
    }
    Ok(p)
}

/// An F_q-basis of `{x : f(x) = 0}` from the kernel of the expanded matrix of
/// `f` on `basis`. The vectors come out in reduced-echelon order.
pub fn root_space(field: &Field, f: &LinPoly, basis: &Basis) -> Vec<Elem> {
    let images: Vec<Elem> = basis.elems().iter().map(|b| f.eval(field, b)).collect();
    let mat = space::ext(field, &images, basis);
    linalg::kernel(field.prime_field(), &mat).into_iter().map(|coords| basis.combine(field, &coords)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f81() -> Field {
        Field::new(3, 2).unwrap()
    }

    fn random_independent(field: &Field, t: usize, rng: &mut ChaCha8Rng) -> Vec<Elem> {
        loop {
            let v: Vec<Elem> = (0..t).map(|_| field.random(rng)).collect();
            if space::independent(field, &v) {
                return v;
            }
        }
    }

    #[test]
    fn identity_polynomial() {
        let f = f81();
        let x = LinPoly::identity(&f);
        for idx in 0..f.order() {
            let a = f.elem_from_index(idx);
            assert_eq!(x.eval(&f, &a), a);
        }
    }

    #[test]
    fn small_span_polynomials() {
        let f = f81();
        assert_eq!(span_poly(&f, &[]).unwrap(), LinPoly::identity(&f));
        let p = span_poly(&f, &[f.one()]).unwrap();
        assert_eq!(p.coeffs(), &[f.scalar(2), f.one()]);
        assert_eq!(span_poly(&f, &[f.one(), f.scalar(2)]), Err(Error::DependentSpan));
    }

    #[test]
    fn span_of_one_and_alpha_exhaustive() {
        let f = f81();
        let v = [f.one(), f.alpha_pow(1)];
        let p = span_poly(&f, &v).unwrap();
        assert_eq!(p.q_degree(), Some(2));
        let mut span = std::collections::HashSet::new();
        for a in 0..3 {
            for b in 0..3 {
                span.insert(f.add(&f.scale(a, &v[0]), &f.scale(b, &v[1])));
            }
        }
        for idx in 0..f.order() {
            let x = f.elem_from_index(idx);
            assert_eq!(p.eval(&f, &x).is_zero(), span.contains(&x), "x = {x}");
        }
    }

    #[test]
    fn root_space_of_small_polynomials() {
        let f = f81();
        let basis = Basis::power(&f);
        let xq_minus_x = LinPoly::new(vec![f.scalar(2), f.one()]);
        let roots = root_space(&f, &xq_minus_x, &basis);
        assert_eq!(roots, vec![f.one()]);
        assert!(root_space(&f, &LinPoly::identity(&f), &basis).is_empty());
    }

    #[test]
    fn root_space_recovers_planted_spans() {
        let f = f81();
        let basis = Basis::power(&f);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..50 {
            let t = 1 + trial % 3;
            let v = random_independent(&f, t, &mut rng);
            let p = span_poly(&f, &v).unwrap();
            let roots = root_space(&f, &p, &basis);
            assert_eq!(roots.len(), t);
            let mut both = v.clone();
            both.extend(roots);
            assert_eq!(space::rank_weight(&f, &both), t);
        }
    }

    #[test]
    fn eval_matches_exponentiation() {
        let f = Field::new(3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let coeffs: Vec<Elem> = (0..4).map(|_| f.random(&mut rng)).collect();
            let p = LinPoly::new(coeffs.clone());
            let a = f.random(&mut rng);
            let mut expect = f.zero();
            let mut e: u128 = 1;
            for c in &coeffs {
                expect = f.add(&expect, &f.mul(c, &f.pow(&a, e)));
                e *= 3;
            }
            assert_eq!(p.eval(&f, &a), expect);
        }
    }

    #[test]
    fn subfield_inputs_give_subfield_coefficients() {
        let f = Field::new(3, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for t in 1..=3 {
            let v = loop {
                let v: Vec<Elem> = (0..t).map(|_| f.random_subfield(&mut rng)).collect();
                if space::independent(&f, &v) {
                    break v;
                }
            };
            let p = span_poly(&f, &v).unwrap();
            assert!(p.coeffs().iter().all(|c| f.in_subfield(c)));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn eval_is_fq_linear(seed in any::<u64>(), c in 0u32..3) {
            let f = Field::new(3, 2).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = LinPoly::new((0..3).map(|_| f.random(&mut rng)).collect());
            let x = f.random(&mut rng);
            let y = f.random(&mut rng);
            prop_assert_eq!(p.eval(&f, &f.add(&x, &y)), f.add(&p.eval(&f, &x), &p.eval(&f, &y)));
            prop_assert_eq!(p.eval(&f, &f.scale(c, &x)), f.scale(c, &p.eval(&f, &x)));
        }

        #[test]
        fn kernel_dimension_bounded_by_q_degree(seed in any::<u64>(), deg in 0usize..4) {
            let f = Field::new(3, 2).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut coeffs: Vec<Elem> = (0..=deg).map(|_| f.random(&mut rng)).collect();
            if coeffs[deg].is_zero() {
                coeffs[deg] = f.one();
            }
            let p = LinPoly::new(coeffs);
            let roots = root_space(&f, &p, &Basis::power(&f));
            prop_assert!(roots.len() <= deg);
        }
    }
}
