//! Small helpers for polynomials over Z_p, constant-coefficient-first.
//!
//! Only what the Alexander constructions need: normalization, arithmetic
//! modulo a monic polynomial, and irreducibility by trial division.

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Degree of a coefficient vector, ignoring leading zeros. Returns `None`
/// for the zero polynomial.
pub fn degree(coeffs: &[u32]) -> Option<usize> {
    coeffs.iter().rposition(|&c| c != 0)
}

/// Strips leading zeros; the zero polynomial becomes an empty vector.
pub fn normalize(mut coeffs: Vec<u32>, p: u32) -> Vec<u32> {
    for c in coeffs.iter_mut() {
        *c %= p;
    }
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

/// Remainder of `a` modulo the monic polynomial `m`, over Z_p.
pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let md = degree(m).expect("modulus is nonzero");
    debug_assert_eq!(m[md], 1, "modulus must be monic");
    let mut r = normalize(a.to_vec(), p);
    while let Some(rd) = degree(&r) {
        if rd < md {
            break;
        }
        let lead = r[rd];
        let shift = rd - md;
        for i in 0..=md {
            let sub = (lead * m[i]) % p;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        r = normalize(r, p);
    }
    r
}

pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    normalize(out, p)
}

/// Irreducibility over Z_p by trial division: a polynomial of degree k >= 2
/// is reducible iff it has a monic factor of degree in `1..=k/2`.
pub fn is_irreducible(h: &[u32], p: u32) -> bool {
    let h = normalize(h.to_vec(), p);
    let k = match degree(&h) {
        Some(0) | None => return false,
        Some(1) => return true,
        Some(k) => k,
    };
    for d in 1..=k / 2 {
        // Enumerate all monic polynomials of degree exactly d.
        let mut coeffs = vec![0u32; d + 1];
        coeffs[d] = 1;
        loop {
            if rem(&h, &coeffs, p).is_empty() {
                return false;
            }
            // Odometer over the d low coefficients.
            let mut pos = 0;
            while pos < d {
                coeffs[pos] += 1;
                if coeffs[pos] < p {
                    break;
                }
                coeffs[pos] = 0;
                pos += 1;
            }
            if pos == d {
                break;
            }
        }
    }
    true
}

/// The monic reciprocal polynomial `h*(t) = h(0)^{-1} t^k h(1/t)`;
/// its roots are the inverses of the roots of `h`. Requires `h(0) != 0`.
pub fn reciprocal(h: &[u32], p: u32) -> Vec<u32> {
    let h = normalize(h.to_vec(), p);
    let c0 = h[0];
    debug_assert_ne!(c0, 0, "reciprocal requires h(0) != 0");
    let inv = mod_inverse(c0, p);
    let mut rev: Vec<u32> = h.iter().rev().map(|&c| (c * inv) % p).collect();
    rev = normalize(rev, p);
    rev
}

pub fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat by repeated multiplication is fine.
    let mut acc = 1u64;
    for _ in 0..p.saturating_sub(2) {
        acc = (acc * a as u64) % p as u64;
    }
    acc as u32
}
