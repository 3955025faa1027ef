//! Dense univariate polynomials over a prime field, coefficients low to high.
//! Only what modulus search and element inversion need.

use super::PrimeField;

pub(crate) fn trim(p: &mut Vec<u32>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[u32]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo a nonzero `b`.
pub(crate) fn rem(fq: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = fq.inv_u32(b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = fq.mul_u32(r[dr], lead_inv);
        let shift = dr - db;
        for (i, &bi) in b[..=db].iter().enumerate() {
            r[shift + i] = fq.sub_u32(r[shift + i], fq.mul_u32(c, bi));
        }
        trim(&mut r);
    }
    r
}

fn divrem(fq: &PrimeField, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = fq.inv_u32(b[db]).expect("nonzero leading coefficient");
    let mut r = a.to_vec();
    trim(&mut r);
    let mut quot = vec![0u32; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = fq.mul_u32(r[dr], lead_inv);
        let shift = dr - db;
        quot[shift] = c;
        for (i, &bi) in b[..=db].iter().enumerate() {
            r[shift + i] = fq.sub_u32(r[shift + i], fq.mul_u32(c, bi));
        }
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

fn mul(fq: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = fq.add_u32(out[i + j], fq.mul_u32(x, y));
        }
    }
    trim(&mut out);
    out
}

fn sub(fq: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n).map(|i| fq.sub_u32(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect();
    trim(&mut out);
    out
}

/// Greatest common divisor, not normalised.
pub(crate) fn gcd(fq: &PrimeField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(fq, &x, &y);
        x = y;
        y = r;
    }
    x
}

/// Inverse of `a` modulo `m`, or `None` when they share a factor.
pub(crate) fn inv_mod(fq: &PrimeField, a: &[u32], m: &[u32]) -> Option<Vec<u32>> {
    // Invariant: s_i * a = r_i (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Vec<u32> = Vec::new();
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (quo, r) = divrem(fq, &r0, &r1);
        let s = sub(fq, &s0, &mul(fq, &quo, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = fq.inv_u32(r0[0])?;
    let mut out: Vec<u32> = s0.iter().map(|&x| fq.mul_u32(x, c)).collect();
    trim(&mut out);
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_coprime_is_constant() {
        let fq = PrimeField::new(5).unwrap();
        // x^2 + 1 = (x - 2)(x - 3) over F_5, and x + 1 is coprime to it.
        let g = gcd(&fq, &[1, 0, 1], &[1, 1]);
        assert_eq!(degree(&g), Some(0));
        let g = gcd(&fq, &[1, 0, 1], &[3, 1]);
        assert_eq!(degree(&g), Some(1));
    }

    #[test]
    fn modular_inverse() {
        let fq = PrimeField::new(5).unwrap();
        let m = [2, 0, 0, 0, 1];
        let a = [3, 2, 1, 1];
        let inv = inv_mod(&fq, &a, &m).unwrap();
        let prod = rem(&fq, &mul(&fq, &a, &inv), &m);
        assert_eq!(prod, vec![1]);
    }
}
