//! Syndrome-based bounded-distance decoding.
//!
//! Write the error as `e = a B` with `a ∈ F_{q^{2n}}^t` independent and
//! `B ∈ F_q^{t×2n}` of full rank, and let `d^T = B (μ^(q^k))^T` be the error
//! locators. The odd syndrome entries satisfy `s_{2i-1} = a · d^(q^i)` for
//! `1 <= i <= 2n-k-1`, which makes the subspace polynomial of `⟨a⟩` the
//! kernel of a q-shifted syndrome matrix. Its roots give `a`, a Moore-type
//! system gives `d`, and `B` is the coordinate matrix of `d`.
//!
//! When `k` is even and `2t + k = 2n` there is one equation too few; the
//! system is completed with relative traces of syndrome entries, which is
//! valid for errors with entries in `F_{q^n}`.

use crate::code::TzCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::linalg::{self, Matrix};
use crate::linpoly::{self, LinPoly};
use crate::space::{self, Basis};

/// `s = r H^T` together with the relative traces `s̃_j = Tr(s_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome {
    s: Vec<Elem>,
    traces: Vec<Elem>,
}

impl Syndrome {
    pub fn new(field: &Field, s: Vec<Elem>) -> Self {
        let traces = s.iter().map(|x| field.trace_rel(x)).collect();
        Self { s, traces }
    }

    pub fn entries(&self) -> &[Elem] {
        &self.s
    }

    pub fn traces(&self) -> &[Elem] {
        &self.traces
    }

    pub fn get(&self, j: usize) -> &Elem {
        &self.s[j]
    }

    pub fn trace(&self, j: usize) -> &Elem {
        &self.traces[j]
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// True exactly when the received word is a codeword.
    pub fn is_trace_zero(&self) -> bool {
        self.traces.iter().all(Elem::is_zero)
    }
}

/// A rank decomposition `e = a B` and the locators `d^T = B (μ^(q^k))^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorDecomposition {
    pub a: Vec<Elem>,
    pub b: Matrix<u32>,
    pub d: Vec<Elem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FailureReason {
    /// The syndrome matrix does not have a one-dimensional kernel.
    SpanDimMismatch,
    /// The span polynomial has fewer roots than its q-degree.
    RootCountMismatch,
    /// The trace-augmented kernel is not defined over `F_{q^n}`.
    LambdaNotInSubfield,
    /// No syndrome matrix `S^(u)` has full rank.
    NoRankFound,
    /// The locator system has no solution.
    LocatorSystemInconsistent,
    /// The corrected word fails the parity check.
    CorrectionNotCodeword,
}

impl FailureReason {
    pub const ALL: [FailureReason; 6] = [
        Self::SpanDimMismatch,
        Self::RootCountMismatch,
        Self::LambdaNotInSubfield,
        Self::NoRankFound,
        Self::LocatorSystemInconsistent,
        Self::CorrectionNotCodeword,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::SpanDimMismatch => "SpanDimMismatch",
            Self::RootCountMismatch => "RootCountMismatch",
            Self::LambdaNotInSubfield => "LambdaNotInSubfield",
            Self::NoRankFound => "NoRankFound",
            Self::LocatorSystemInconsistent => "LocatorSystemInconsistent",
            Self::CorrectionNotCodeword => "CorrectionNotCodeword",
        }
    }
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeOutcome {
    Success { codeword: Vec<Elem>, error: Vec<Elem>, message: Vec<Elem>, t: usize },
    Failure(FailureReason),
}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, Self::Success { .. })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DecoderOptions {
    /// Report a failure of the trace-augmented branch directly instead of
    /// retrying with the generic branch.
    pub strict_alg1: bool,
}

pub fn syndrome(code: &TzCode, r: &[Elem]) -> Result<Syndrome> {
    Ok(Syndrome::new(code.field(), code.syndrome(r)?))
}

/// Largest admissible `u`, `⌊(2n-k-1)/2⌋`.
pub fn max_rank(code: &TzCode) -> usize {
    (code.length() - code.k() - 1) / 2
}

/// The `u x (u+1)` matrix with entry `(j, c) = s_{2(u+1+j-c)-1}^(q^c)`.
pub fn build_s(code: &TzCode, s: &Syndrome, u: usize) -> Result<Matrix<Elem>> {
    if u == 0 || u > max_rank(code) {
        return Err(Error::IndexError(format!("u = {u} outside 1..={}", max_rank(code))));
    }
    let f = code.field();
    Ok(Matrix::from_fn(u, u + 1, |j, c| f.frobenius(s.get(2 * (u + 1 + j - c) - 1), c as i64)))
}

/// Scans `u` downwards from [`max_rank`] and returns the first `u` with
/// `rank S^(u) = u`.
pub fn estimate_rank(code: &TzCode, s: &Syndrome) -> Option<usize> {
    (1..=max_rank(code)).rev().find(|&u| {
        let m = build_s(code, s, u).expect("u in range");
        linalg::rank(code.field(), &m) == u
    })
}

/// The `2t x (t+1)` trace-augmented system for `t = n - k/2`.
///
/// Rows `0..t-1` repeat the layout of [`build_s`] with `u = t` (first `t-1`
/// rows only); row `t-1` is `(s̃_{2t-1}, …, s̃_1^(q^(t-1)), s̃_{4t-1}^(q^t))`;
/// rows `t-1+j`, `1 <= j < t`, hold `s̃_{2(t+j-c)-1}^(q^c)`; the last row is
/// `s̃_0` followed by `Tr(γ^(q^(2t)) s_{2(2t-c)-1}^(q^c))` for `c >= 1`.
pub fn build_s_exp(code: &TzCode, s: &Syndrome) -> Result<Matrix<Elem>> {
    let t = code.limit_rank().ok_or(Error::LimitCaseInapplicable)?;
    let f = code.field();
    let g2t = f.frobenius(code.gamma(), 2 * t as i64);
    let frob = |x: &Elem, c: usize| f.frobenius(x, c as i64);
    Ok(Matrix::from_fn(2 * t, t + 1, |row, c| {
        if row + 1 < t {
            frob(s.get(2 * (t + 1 + row - c) - 1), c)
        } else if row + 1 == t {
            if c < t {
                frob(s.trace(2 * (t - c) - 1), c)
            } else {
                frob(s.trace(4 * t - 1), c)
            }
        } else if row + 1 < 2 * t {
            let j = row + 1 - t;
            frob(s.trace(2 * (t + j - c) - 1), c)
        } else if c == 0 {
            s.trace(0).clone()
        } else {
            f.trace_rel(&f.mul(&g2t, &frob(s.get(2 * (2 * t - c) - 1), c)))
        }
    }))
}

/// The kernel vector of `m`, scaled so its last entry is one, when the kernel
/// is one-dimensional.
pub fn solve_span(field: &Field, m: &Matrix<Elem>) -> std::result::Result<LinPoly, FailureReason> {
    let kernel = linalg::kernel(field, m);
    if kernel.len() != 1 {
        return Err(FailureReason::SpanDimMismatch);
    }
    let v = &kernel[0];
    let last = v.last().expect("nonempty kernel vector");
    let inv = field.inv(last).map_err(|_| FailureReason::SpanDimMismatch)?;
    Ok(LinPoly::new(v.iter().map(|x| field.mul(x, &inv)).collect()))
}

/// Solves `Σ_ℓ a_ℓ^(q^-i) d_ℓ = s_{2i-1}^(q^-i)` for `1 <= i <= 2n-k-1`.
pub fn solve_locators(code: &TzCode, a: &[Elem], s: &Syndrome) -> std::result::Result<Vec<Elem>, FailureReason> {
    let f = code.field();
    let rows = code.length() - code.k() - 1;
    let m = Matrix::from_fn(rows, a.len(), |r, l| f.frobenius(&a[l], -(r as i64 + 1)));
    let rhs: Vec<Elem> = (1..=rows).map(|i| f.frobenius(s.get(2 * i - 1), -(i as i64))).collect();
    if linalg::rank(f, &m) != a.len() {
        return Err(FailureReason::LocatorSystemInconsistent);
    }
    linalg::solve(f, &m, &rhs).map_err(|_| FailureReason::LocatorSystemInconsistent)
}

/// Coordinates of each `d_ℓ` in the basis `μ^(q^k)`.
pub fn recover_b(code: &TzCode, d: &[Elem]) -> Matrix<u32> {
    let rows = d.iter().map(|x| code.mu_qk().coords(code.field(), x)).collect();
    Matrix::from_rows(rows, code.length())
}

pub fn decode(code: &TzCode, r: &[Elem]) -> Result<DecodeOutcome> {
    decode_with(code, r, DecoderOptions::default())
}

pub fn decode_with(code: &TzCode, r: &[Elem], opts: DecoderOptions) -> Result<DecodeOutcome> {
    let s = syndrome(code, r)?;
    if s.is_trace_zero() {
        return Ok(DecodeOutcome::Success {
            codeword: r.to_vec(),
            error: vec![code.field().zero(); r.len()],
            message: code.unmap(r)?,
            t: 0,
        });
    }
    if code.limit_rank().is_some() {
        if let Some(outcome) = limit_branch(code, r, &s) {
            match outcome {
                Ok(success) => return Ok(success),
                Err(reason) if opts.strict_alg1 => return Ok(DecodeOutcome::Failure(reason)),
                Err(_) => {}
            }
        }
    }
    Ok(generic_branch(code, r, &s).unwrap_or_else(DecodeOutcome::Failure))
}

/// `None` when `S_exp` does not have the rank of the trace-augmented case.
fn limit_branch(code: &TzCode, r: &[Elem], s: &Syndrome) -> Option<std::result::Result<DecodeOutcome, FailureReason>> {
    let f = code.field();
    let t = code.limit_rank()?;
    let m = build_s_exp(code, s).ok()?;
    if linalg::rank(f, &m) != t {
        return None;
    }
    Some(solve_span(f, &m).and_then(|lambda| {
        if !lambda.coeffs().iter().all(|c| f.in_subfield(c)) {
            return Err(FailureReason::LambdaNotInSubfield);
        }
        finish(code, r, s, &lambda, t)
    }))
}

fn generic_branch(code: &TzCode, r: &[Elem], s: &Syndrome) -> std::result::Result<DecodeOutcome, FailureReason> {
    let t = estimate_rank(code, s).ok_or(FailureReason::NoRankFound)?;
    let m = build_s(code, s, t).expect("rank estimate is in range");
    let lambda = solve_span(code.field(), &m)?;
    finish(code, r, s, &lambda, t)
}

/// Root space, locators, `B`, and the corrected word.
fn finish(
    code: &TzCode,
    r: &[Elem],
    s: &Syndrome,
    lambda: &LinPoly,
    dim: usize,
) -> std::result::Result<DecodeOutcome, FailureReason> {
    let f = code.field();
    let a = linpoly::root_space(f, lambda, &Basis::power(f));
    if a.len() != dim {
        return Err(FailureReason::RootCountMismatch);
    }
    let d = solve_locators(code, &a, s)?;
    let b = recover_b(code, &d);
    let error = crate::harness::channel::combine(f, &a, &b);
    let codeword: Vec<Elem> = r.iter().zip(&error).map(|(x, e)| f.sub(x, e)).collect();
    let message = code.unmap(&codeword).map_err(|_| FailureReason::CorrectionNotCodeword)?;
    // The trace-augmented branch may recover a lower-rank error through a
    // larger span, so report the rank actually found.
    let t = space::rank_weight(f, &error);
    Ok(DecodeOutcome::Success { codeword, error, message, t })
}
