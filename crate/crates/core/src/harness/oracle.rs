//! Exhaustive searches over all codewords, for small codes.

use crate::code::TzCode;
use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};
use crate::linalg::{self, Matrix};

pub const DEFAULT_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nearest {
    pub codeword: Vec<Elem>,
    pub distance: usize,
    /// Number of codewords at the minimum distance; more than one means the
    /// word lies outside every unique decoding ball.
    pub ties: usize,
}

/// Number of codewords, `q^(2nk)`.
pub fn code_size(code: &TzCode) -> u128 {
    (code.field().q() as u128).pow((code.n() * code.message_len()) as u32)
}

fn check_budget(code: &TzCode, budget: u128) -> Result<()> {
    let needed = code_size(code);
    if needed > budget {
        return Err(Error::OracleBudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Walks through every codeword in flattened form (coefficient `c` of entry
/// `j` at `j * 2n + c`), visiting each exactly once.
///
/// The codewords are enumerated as F_q-combinations of the images of the
/// subfield-basis messages; an odometer step adds one generator, and a wrap
/// of a digit (`q` additions) returns that digit's contribution to zero.
fn for_each_codeword(code: &TzCode, mut visit: impl FnMut(&[u32])) {
    let f = code.field();
    let fq = f.prime_field();
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for r in 0..code.message_len() {
        for b in f.subfield_basis() {
            gens.push(code.generator().row(r).iter().flat_map(|e| f.mul(b, e).coeffs().to_vec()).collect());
        }
    }
    let len = code.length() * code.length();
    let mut word = vec![0u32; len];
    let mut digits = vec![0u32; gens.len()];
    loop {
        visit(&word);
        let mut i = 0;
        loop {
            if i == gens.len() {
                return;
            }
            for (w, g) in word.iter_mut().zip(&gens[i]) {
                *w = fq.add_u32(*w, *g);
            }
            digits[i] += 1;
            if digits[i] < fq.q() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Rank of the `2n x 2n` F_q matrix whose row `j` is the flattened entry `j`.
fn flat_rank(fq: &PrimeField, m: usize, w: &[u32]) -> usize {
    linalg::rank(fq, &Matrix::new(m, m, w.to_vec()))
}

pub fn brute_force_decode(code: &TzCode, r: &[Elem], budget: u128) -> Result<Nearest> {
    check_budget(code, budget)?;
    let f = code.field();
    let fq = f.prime_field();
    let m = code.length();
    if r.len() != m {
        return Err(Error::DimensionMismatch(format!("word has length {}, expected {m}", r.len())));
    }
    let flat_r: Vec<u32> = r.iter().flat_map(|e| e.coeffs().to_vec()).collect();
    let mut best: Option<(usize, Vec<u32>, usize)> = None;
    let mut diff = vec![0u32; m * m];
    for_each_codeword(code, |c| {
        for ((d, x), y) in diff.iter_mut().zip(&flat_r).zip(c) {
            *d = fq.sub_u32(*x, *y);
        }
        let dist = flat_rank(fq, m, &diff);
        match &mut best {
            Some((bd, _, ties)) if dist == *bd => *ties += 1,
            Some((bd, _, _)) if dist > *bd => {}
            _ => best = Some((dist, c.to_vec(), 1)),
        }
    });
    let (distance, flat, ties) = best.expect("a code has at least one codeword");
    let codeword = flat.chunks(m).map(|c| f.elem(c)).collect();
    Ok(Nearest { codeword, distance, ties })
}

/// Minimum rank weight over the nonzero codewords.
pub fn min_distance_bruteforce(code: &TzCode, budget: u128) -> Result<usize> {
    check_budget(code, budget)?;
    let fq = code.field().prime_field();
    let m = code.length();
    let mut best = usize::MAX;
    for_each_codeword(code, |c| {
        if c.iter().any(|&x| x != 0) {
            best = best.min(flat_rank(fq, m, c));
        }
    });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::harness::channel::random_message;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    #[test]
    fn enumeration_visits_every_codeword_once() {
        let code = TzCode::new(Field::new(3, 2).unwrap(), 1).unwrap();
        let mut seen = HashSet::new();
        for_each_codeword(&code, |c| {
            assert!(seen.insert(c.to_vec()));
        });
        assert_eq!(seen.len() as u128, code_size(&code));
        assert_eq!(code_size(&code), 81);
    }

    #[test]
    fn codeword_is_its_own_nearest() {
        let code = TzCode::new(Field::new(3, 2).unwrap(), 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = code.encode(&random_message(&code, &mut rng)).unwrap();
        let near = brute_force_decode(&code, &c, DEFAULT_BUDGET).unwrap();
        assert_eq!(near, Nearest { codeword: c, distance: 0, ties: 1 });
    }

    #[test]
    fn smallest_code_is_mrd() {
        let code = TzCode::new(Field::new(3, 2).unwrap(), 1).unwrap();
        assert_eq!(min_distance_bruteforce(&code, DEFAULT_BUDGET).unwrap(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let code = TzCode::new(Field::new(3, 3).unwrap(), 2).unwrap();
        assert_eq!(
            min_distance_bruteforce(&code, 1000),
            Err(Error::OracleBudgetExceeded { needed: 3u128.pow(12), budget: 1000 })
        );
        assert_eq!(min_distance_bruteforce(&code, DEFAULT_BUDGET).unwrap(), 5);
        let big = TzCode::new(Field::new(3, 3).unwrap(), 3).unwrap();
        assert!(matches!(
            brute_force_decode(&big, &vec![big.field().zero(); 6], DEFAULT_BUDGET),
            Err(Error::OracleBudgetExceeded { .. })
        ));
    }
}
