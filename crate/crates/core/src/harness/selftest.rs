//! Golden check against the worked example over `F_625 = F_5[α]/(α^4 + 2)`
//! with `k = 2`, `λ` the power basis, `γ = α³+α²+2α+3` and `ξ = 4α²+2α+4`.

use crate::code::{CodeParams, TzCode};
use crate::error::Result;
use crate::field::{Elem, Field};

pub const MODULUS: [u32; 5] = [2, 0, 0, 0, 1];
pub const GAMMA: [u32; 4] = [3, 2, 1, 1];
pub const XI: [u32; 4] = [4, 2, 4, 0];

pub const MU: [[u32; 4]; 4] = [[1, 2, 1, 0], [2, 1, 0, 2], [1, 0, 2, 4], [0, 2, 4, 2]];

pub const G: [[[u32; 4]; 4]; 4] = [
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[1, 0, 0, 0], [0, 3, 0, 0], [0, 0, 4, 0], [0, 0, 0, 2]],
    [[3, 2, 1, 1], [4, 4, 1, 3], [2, 2, 2, 3], [2, 1, 1, 1]],
    [[3, 2, 1, 1], [2, 2, 3, 4], [3, 3, 3, 2], [4, 2, 2, 2]],
];

pub const H: [[[u32; 4]; 4]; 4] = [
    [[0, 1, 0, 4], [1, 0, 4, 0], [0, 4, 0, 2], [4, 0, 2, 0]],
    [[1, 4, 4, 0], [2, 2, 0, 1], [1, 0, 3, 2], [0, 4, 1, 1]],
    [[2, 1, 1, 3], [3, 3, 4, 2], [4, 2, 1, 3], [1, 3, 4, 4]],
    [[1, 3, 1, 0], [2, 4, 0, 3], [1, 0, 2, 1], [0, 3, 4, 3]],
];

/// Nonzero entries of `G H^T`: `(0,0) = α³+4α` and `(3,3) = 4α³+α`.
pub const GH_CORNERS: [(usize, usize, [u32; 4]); 2] = [(0, 0, [0, 4, 0, 1]), (3, 3, [0, 1, 0, 4])];

pub fn example_code() -> Result<TzCode> {
    let f = Field::with_modulus(5, 2, &MODULUS)?;
    let params = CodeParams { lambda: None, gamma: Some(f.from_coeffs(&GAMMA)?), xi: Some(f.from_coeffs(&XI)?) };
    TzCode::build(f, 2, params)
}

/// `(artifact, passed)` for `μ`, `G`, `H` and `G H^T`.
pub fn run() -> Result<Vec<(&'static str, bool)>> {
    let code = example_code()?;
    let f = code.field();
    let row = |r: &[[u32; 4]; 4]| -> Vec<Elem> { r.iter().map(|c| f.elem(c)).collect() };
    let mu_ok = code.mu().elems() == &row(&MU)[..];
    let g_ok = (0..4).all(|i| code.generator().row(i) == &row(&G[i])[..]);
    let h_ok = (0..4).all(|i| code.parity_check().row(i) == &row(&H[i])[..]);
    let p = code.gh_transpose();
    let gh_ok = (0..4).all(|i| {
        (0..4).all(|j| {
            let expect =
                GH_CORNERS.iter().find(|(a, b, _)| (*a, *b) == (i, j)).map_or_else(|| f.zero(), |(_, _, c)| f.elem(c));
            p.get(i, j) == &expect
        })
    });
    Ok(vec![("mu", mu_ok), ("G", g_ok), ("H", h_ok), ("GH^T", gh_ok)])
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_artifacts_pass() {
        assert!(super::run().unwrap().iter().all(|(_, ok)| *ok));
    }
}
