//! Arithmetic in the tower `F_q ⊂ F_{q^n} ⊂ F_{q^{2n}}`.
//!
//! `F_{q^{2n}}` is realised as `F_q[α]/(f)` for a monic irreducible `f` of
//! degree `2n`; elements are coefficient vectors in the power basis of `α`.
//! The q-power Frobenius map is F_q-linear, so all of its powers are
//! precomputed once as `2n x 2n` matrices and applied as matrix-vector
//! products.

mod poly;

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{self, FieldOps, Matrix};

/// Largest supported characteristic. Keeps every coefficient product and the
/// lazily reduced accumulators of a multiplication inside `u64`.
pub const MAX_CHARACTERISTIC: u32 = 65_521;

/// The prime field `F_q`, elements are `u32` in `[0, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::InvalidParameter(format!("q = {q} is not prime")));
        }
        if q > MAX_CHARACTERISTIC {
            return Err(Error::InvalidParameter(format!("q = {q} exceeds the supported maximum {MAX_CHARACTERISTIC}")));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn add_u32(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub_u32(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn mul_u32(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow_u32(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.q;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_u32(acc, a);
            }
            a = self.mul_u32(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv_u32(&self, a: u32) -> Option<u32> {
        if a.is_multiple_of(self.q) {
            None
        } else {
            Some(self.pow_u32(a, self.q as u64 - 2))
        }
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.q == 2 || self.pow_u32(a, (self.q as u64 - 1) / 2) == 1
    }
}

impl FieldOps for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.add_u32(*a, *b)
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.sub_u32(*a, *b)
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.mul_u32(*a, *b)
    }
    fn inv(&self, a: &u32) -> Result<u32> {
        self.inv_u32(*a).ok_or(Error::DivisionByZero)
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_{q^{2n}}`: coefficients of `1, α, …, α^{2n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(Vec<u32>);

impl Elem {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "α")?,
                (1, _) => write!(f, "{c}α")?,
                (_, 1) => write!(f, "α^{i}")?,
                _ => write!(f, "{c}α^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The field tower context. Immutable after construction.
#[derive(Clone)]
pub struct Field {
    fq: PrimeField,
    n: usize,
    m: usize,
    modulus: Vec<u32>,
    /// `α^(m+j) mod f` for `j < m - 1`.
    reduction: Vec<Vec<u32>>,
    /// `frob[i]` is the row-major matrix of `a ↦ a^(q^i)`, `i < m`.
    frob: Vec<Vec<u32>>,
    subfield_basis: Vec<Elem>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field").field("q", &self.fq.q).field("n", &self.n).field("modulus", &self.modulus).finish()
    }
}

impl Field {
    /// `F_{q^{2n}}` over the default modulus, see [`default_modulus`].
    pub fn new(q: u32, n: usize) -> Result<Self> {
        let modulus = default_modulus(q, n)?;
        Self::with_modulus(q, n, &modulus)
    }

    /// `modulus` holds `2n + 1` coefficients, low degree first; it must be
    /// monic and irreducible.
    pub fn with_modulus(q: u32, n: usize, modulus: &[u32]) -> Result<Self> {
        let fq = check_characteristic(q)?;
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        let m = 2 * n;
        if modulus.len() != m + 1 {
            return Err(Error::InvalidParameter(format!(
                "modulus needs {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= q) {
            return Err(Error::InvalidParameter(format!("modulus coefficient {c} is not below q = {q}")));
        }
        if modulus[m] != 1 {
            return Err(Error::InvalidParameter("modulus is not monic".into()));
        }
        let frob1 = frobenius_matrix(&fq, modulus);
        if !rabin_irreducible(&fq, modulus, &frob1) {
            return Err(Error::InvalidParameter("modulus is not irreducible".into()));
        }

        let mut reduction = Vec::with_capacity(m.saturating_sub(1));
        let mut cur: Vec<u32> = modulus[..m].iter().map(|&c| fq.sub_u32(0, c)).collect();
        for _ in 0..m.saturating_sub(1) {
            reduction.push(cur.clone());
            cur = times_alpha(&fq, &cur, modulus);
        }

        let mut frob = Vec::with_capacity(m);
        let mut ident = vec![0u32; m * m];
        for i in 0..m {
            ident[i * m + i] = 1;
        }
        frob.push(ident);
        for i in 1..m {
            frob.push(compose(&fq, m, &frob1, &frob[i - 1]));
        }

        let mut field = Self { fq, n, m, modulus: modulus.to_vec(), reduction, frob, subfield_basis: Vec::new() };
        field.subfield_basis = field.compute_subfield_basis();
        Ok(field)
    }

    pub fn q(&self) -> u32 {
        self.fq.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Extension degree `2n` over `F_q`.
    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn prime_field(&self) -> &PrimeField {
        &self.fq
    }

    /// `q^{2n}`, saturating.
    pub fn order(&self) -> u128 {
        (self.fq.q as u128).saturating_pow(self.m as u32)
    }

    pub fn zero(&self) -> Elem {
        Elem(vec![0; self.m])
    }

    pub fn one(&self) -> Elem {
        self.scalar(1)
    }

    pub fn scalar(&self, c: u32) -> Elem {
        let mut v = vec![0; self.m];
        v[0] = c % self.fq.q;
        Elem(v)
    }

    pub fn alpha_pow(&self, i: usize) -> Elem {
        if i < self.m {
            let mut v = vec![0; self.m];
            v[i] = 1;
            Elem(v)
        } else {
            let a = self.alpha_pow(1);
            self.pow(&a, i as u128)
        }
    }

    /// Element from up to `2n` coefficients (low first). Missing coefficients
    /// are zero and values are reduced modulo `q`.
    pub fn elem(&self, coeffs: &[u32]) -> Elem {
        assert!(coeffs.len() <= self.m, "too many coefficients for F_(q^2n)");
        let mut v = vec![0; self.m];
        for (d, &c) in v.iter_mut().zip(coeffs) {
            *d = c % self.fq.q;
        }
        Elem(v)
    }

    /// Strict variant of [`Field::elem`] for untrusted input: exactly `2n`
    /// coefficients, each below `q`.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() != self.m {
            return Err(Error::Parse(format!("field element needs {} coefficients, got {}", self.m, coeffs.len())));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.fq.q) {
            return Err(Error::Parse(format!("coefficient {c} is not below q = {}", self.fq.q)));
        }
        Ok(Elem(coeffs.to_vec()))
    }

    /// The element whose base-q digits (least significant first) are its
    /// coefficients. Enumerating indices `0..q^{2n}` walks the field in
    /// coefficient-lexicographic order with the top coefficient most
    /// significant.
    pub fn elem_from_index(&self, mut idx: u128) -> Elem {
        let q = self.fq.q as u128;
        let mut v = vec![0; self.m];
        for d in v.iter_mut() {
            *d = (idx % q) as u32;
            idx /= q;
        }
        Elem(v)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        Elem((0..self.m).map(|_| rng.gen_range(0..self.fq.q)).collect())
    }

    /// Uniform element of the subfield `F_{q^n}`.
    pub fn random_subfield<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        let mut acc = self.zero();
        for b in &self.subfield_basis {
            let c = rng.gen_range(0..self.fq.q);
            acc = self.add(&acc, &self.scale(c, b));
        }
        acc
    }

    /// An F_q-basis of `F_{q^n}` (echelon kernel of `frob^n - id`).
    pub fn subfield_basis(&self) -> &[Elem] {
        &self.subfield_basis
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        Elem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.fq.add_u32(x, y)).collect())
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        Elem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.fq.sub_u32(x, y)).collect())
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        Elem(a.0.iter().map(|&x| self.fq.sub_u32(0, x)).collect())
    }

    /// Multiplication by a prime-field scalar.
    pub fn scale(&self, c: u32, a: &Elem) -> Elem {
        Elem(a.0.iter().map(|&x| self.fq.mul_u32(c, x)).collect())
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let m = self.m;
        let q = self.fq.q as u64;
        let mut acc = vec![0u64; 2 * m - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u64;
            for (slot, &y) in acc[i..i + m].iter_mut().zip(&b.0) {
                *slot += x * y as u64;
            }
        }
        for (j, red) in self.reduction.iter().enumerate() {
            let h = acc[m + j] % q;
            if h == 0 {
                continue;
            }
            for (slot, &r) in acc[..m].iter_mut().zip(red) {
                *slot += h * r as u64;
            }
        }
        Elem(acc[..m].iter().map(|&v| (v % q) as u32).collect())
    }

    pub fn square(&self, a: &Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = poly::inv_mod(&self.fq, &a.0, &self.modulus).ok_or(Error::DivisionByZero)?;
        Ok(self.elem(&inv))
    }

    pub fn div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Square-and-multiply exponentiation. The Frobenius map never goes
    /// through here; this is the independent route used by the oracles.
    pub fn pow(&self, a: &Elem, mut e: u128) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            e >>= 1;
        }
        acc
    }

    /// `a^(q^i)`, with `i` taken modulo `2n` (negative `i` is the inverse
    /// Frobenius).
    pub fn frobenius(&self, a: &Elem, i: i64) -> Elem {
        let k = i.rem_euclid(self.m as i64) as usize;
        if k == 0 {
            return a.clone();
        }
        let mat = &self.frob[k];
        let q = self.fq.q as u64;
        let m = self.m;
        Elem(
            (0..m)
                .map(|r| {
                    let row = &mat[r * m..(r + 1) * m];
                    let s: u64 = row.iter().zip(&a.0).map(|(&x, &y)| x as u64 * y as u64).sum();
                    (s % q) as u32
                })
                .collect(),
        )
    }

    /// Matrix of `a ↦ a^(q^i)` on power-basis coefficients.
    pub fn frobenius_matrix(&self, i: i64) -> Matrix<u32> {
        let k = i.rem_euclid(self.m as i64) as usize;
        Matrix::new(self.m, self.m, self.frob[k].clone())
    }

    /// Relative trace `Tr_{q^{2n}/q^n}(a) = a + a^(q^n)`.
    pub fn trace_rel(&self, a: &Elem) -> Elem {
        self.add(a, &self.frobenius(a, self.n as i64))
    }

    /// Absolute trace to `F_q`, returned as a constant element.
    pub fn trace_abs(&self, a: &Elem) -> Elem {
        (1..self.m).fold(a.clone(), |acc, i| self.add(&acc, &self.frobenius(a, i as i64)))
    }

    /// Absolute norm to `F_q`, returned as a constant element.
    pub fn norm_abs(&self, a: &Elem) -> Elem {
        (1..self.m).fold(a.clone(), |acc, i| self.mul(&acc, &self.frobenius(a, i as i64)))
    }

    /// The prime-field value of `a` if `a ∈ F_q`.
    pub fn as_scalar(&self, a: &Elem) -> Option<u32> {
        if a.0[1..].iter().all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }

    pub fn in_subfield(&self, a: &Elem) -> bool {
        self.frobenius(a, self.n as i64) == *a
    }

    pub fn in_prime_field(&self, a: &Elem) -> bool {
        self.frobenius(a, 1) == *a
    }

    fn compute_subfield_basis(&self) -> Vec<Elem> {
        let m = self.m;
        let fixed = self.frobenius_matrix(self.n as i64);
        let map = Matrix::from_fn(m, m, |i, j| {
            let v = *fixed.get(i, j);
            if i == j {
                self.fq.sub_u32(v, 1)
            } else {
                v
            }
        });
        linalg::kernel(&self.fq, &map).into_iter().map(Elem).collect()
    }
}

impl FieldOps for Field {
    type Elem = Elem;

    fn zero(&self) -> Elem {
        Field::zero(self)
    }
    fn one(&self) -> Elem {
        Field::one(self)
    }
    fn is_zero(&self, a: &Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        Field::add(self, a, b)
    }
    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        Field::sub(self, a, b)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        Field::mul(self, a, b)
    }
    fn inv(&self, a: &Elem) -> Result<Elem> {
        Field::inv(self, a)
    }
    fn neg(&self, a: &Elem) -> Elem {
        Field::neg(self, a)
    }
}

fn check_characteristic(q: u32) -> Result<PrimeField> {
    if q == 2 {
        return Err(Error::UnsupportedCharacteristic(q));
    }
    PrimeField::new(q)
}

/// First monic irreducible polynomial of degree `2n` over `F_q`, searching
/// the lower coefficients as base-q digits (constant term least significant).
pub fn default_modulus(q: u32, n: usize) -> Result<Vec<u32>> {
    let fq = check_characteristic(q)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let m = 2 * n;
    let total = (q as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    let mut idx: u128 = 1;
    while idx < total {
        let mut f = vec![0u32; m + 1];
        let mut rest = idx;
        for c in f.iter_mut().take(m) {
            *c = (rest % q as u128) as u32;
            rest /= q as u128;
        }
        f[m] = 1;
        if f[0] != 0 {
            let frob1 = frobenius_matrix(&fq, &f);
            if rabin_irreducible(&fq, &f, &frob1) {
                return Ok(f);
            }
        }
        idx += 1;
    }
    Err(Error::InvalidParameter(format!("no irreducible polynomial of degree {m} over F_{q}")))
}

/// Multiplies a reduced polynomial by `x` modulo the monic `modulus`.
fn times_alpha(fq: &PrimeField, p: &[u32], modulus: &[u32]) -> Vec<u32> {
    let m = p.len();
    let top = p[m - 1];
    let mut out = vec![0u32; m];
    out[1..m].copy_from_slice(&p[..m - 1]);
    if top != 0 {
        for (o, &c) in out.iter_mut().zip(&modulus[..m]) {
            *o = fq.sub_u32(*o, fq.mul_u32(top, c));
        }
    }
    out
}

fn ring_mul(fq: &PrimeField, a: &[u32], b: &[u32], modulus: &[u32]) -> Vec<u32> {
    let m = a.len();
    let mut acc = vec![0u32; m];
    // Horner over the coefficients of b, highest first.
    for &c in b.iter().rev() {
        acc = times_alpha(fq, &acc, modulus);
        if c != 0 {
            for (o, &x) in acc.iter_mut().zip(a) {
                *o = fq.add_u32(*o, fq.mul_u32(c, x));
            }
        }
    }
    acc
}

/// Matrix of `p ↦ p^q` on `F_q[x]/(modulus)`, row-major. Linear for any
/// modulus, irreducible or not.
fn frobenius_matrix(fq: &PrimeField, modulus: &[u32]) -> Vec<u32> {
    let m = modulus.len() - 1;
    let mut x = vec![0u32; m];
    if m == 1 {
        x[0] = fq.sub_u32(0, modulus[0]);
    } else {
        x[1] = 1;
    }
    // x^q by square and multiply.
    let mut xq = vec![0u32; m];
    xq[0] = 1;
    let mut base = x.clone();
    let mut e = fq.q() as u64;
    while e > 0 {
        if e & 1 == 1 {
            xq = ring_mul(fq, &xq, &base, modulus);
        }
        base = ring_mul(fq, &base, &base, modulus);
        e >>= 1;
    }
    let mut mat = vec![0u32; m * m];
    let mut col = vec![0u32; m];
    col[0] = 1;
    for j in 0..m {
        for r in 0..m {
            mat[r * m + j] = col[r];
        }
        col = ring_mul(fq, &col, &xq, modulus);
    }
    mat
}

fn apply(fq: &PrimeField, m: usize, mat: &[u32], v: &[u32]) -> Vec<u32> {
    (0..m)
        .map(|r| {
            let s: u64 = mat[r * m..(r + 1) * m].iter().zip(v).map(|(&x, &y)| x as u64 * y as u64).sum();
            (s % fq.q() as u64) as u32
        })
        .collect()
}

/// `a ∘ b` for row-major `m x m` matrices.
fn compose(fq: &PrimeField, m: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; m * m];
    for j in 0..m {
        let col: Vec<u32> = (0..m).map(|r| b[r * m + j]).collect();
        let img = apply(fq, m, a, &col);
        for r in 0..m {
            out[r * m + j] = img[r];
        }
    }
    out
}

/// Rabin's test: `x^(q^m) = x mod f` and `gcd(x^(q^(m/p)) - x, f) = 1` for
/// every prime `p | m`.
fn rabin_irreducible(fq: &PrimeField, modulus: &[u32], frob1: &[u32]) -> bool {
    let m = modulus.len() - 1;
    if m == 1 {
        return true;
    }
    let mut x = vec![0u32; m];
    x[1] = 1;
    let mut powers = Vec::with_capacity(m + 1);
    powers.push(x.clone());
    for i in 0..m {
        let next = apply(fq, m, frob1, &powers[i]);
        powers.push(next);
    }
    if powers[m] != x {
        return false;
    }
    prime_factors(m).into_iter().all(|p| {
        let mut h = powers[m / p].clone();
        h[1] = fq.sub_u32(h[1], 1);
        let g = poly::gcd(fq, &h, modulus);
        poly::degree(&g) == Some(0)
    })
}

fn prime_factors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}
