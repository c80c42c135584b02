//! Constructors for the named quandle families: trivial, dihedral,
//! Alexander (field and general forms), generalized Alexander, conjugation,
//! and Galkin quandles.

use crate::error::{Error, Result};
use crate::group::GroupModel;
use crate::perm::Permutation;
use crate::poly;
use crate::quandle::QuandleTable;

/// Parameters of an Alexander quandle on `Z_p[t, 1/t] / (h(t))`.
///
/// Coefficients are constant-first; `h` must be monic of degree >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderSpec {
    p: u32,
    h: Vec<u32>,
}

impl AlexanderSpec {
    pub fn new(p: u32, h: Vec<u32>) -> Result<Self> {
        if !poly::is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        let h = poly::normalize(h, p);
        match poly::degree(&h) {
            None | Some(0) => return Err(Error::DegreeZero),
            Some(d) => {
                if h[d] != 1 {
                    return Err(Error::NotMonic);
                }
            }
        }
        Ok(AlexanderSpec { p, h })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.h
    }

    pub fn degree(&self) -> usize {
        poly::degree(&self.h).expect("degree >= 1 by construction")
    }

    /// Number of residues, `p^k`.
    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.degree() as u32)
    }

    pub fn is_t(&self) -> bool {
        self.h == [0, 1]
    }

    pub fn is_t_minus_one(&self) -> bool {
        self.h == [self.p - 1, 1]
    }
}

/// The trivial quandle: `i * j = i`.
pub fn trivial_quandle(n: usize) -> QuandleTable {
    assert!(n >= 1);
    QuandleTable::from_fn_unchecked(n, |i, _| i)
}

/// The dihedral quandle: `i * j = 2j - i (mod n)`.
pub fn dihedral(n: usize) -> QuandleTable {
    assert!(n >= 1);
    QuandleTable::from_fn_unchecked(n, |i, j| (2 * j + 2 * n - i) % n)
}

/// Residues of `Z_p[t] / (h)` are encoded as base-p digit vectors with the
/// constant term least significant; this maps an index to its digits.
fn index_to_digits(mut idx: usize, p: u32, k: usize) -> Vec<u32> {
    let mut digits = vec![0u32; k];
    for d in digits.iter_mut() {
        *d = (idx % p as usize) as u32;
        idx /= p as usize;
    }
    digits
}

fn digits_to_index(digits: &[u32], p: u32, k: usize) -> usize {
    let mut idx = 0usize;
    for pos in (0..k).rev() {
        let c = if pos < digits.len() { digits[pos] } else { 0 };
        idx = idx * p as usize + c as usize;
    }
    idx
}

/// Alexander quandle on the residues of `h` with an arbitrary multiplier
/// polynomial `m`: `x * y = m x + (1 - m) y` computed modulo `(p, h)`.
///
/// The multiplier must be invertible in the quotient ring for Axiom 2; the
/// output is validated, so a non-invertible multiplier surfaces as an
/// axiom-2 failure.
pub fn alexander_field_with_multiplier(spec: &AlexanderSpec, m: &[u32]) -> Result<QuandleTable> {
    let p = spec.p;
    let k = spec.degree();
    let n = spec.order();
    let m = poly::rem(m, &spec.h, p);
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let xd = index_to_digits(x, p, k);
            (0..n)
                .map(|y| {
                    let yd = index_to_digits(y, p, k);
                    // x*y = m(x - y) + y, vectorwise.
                    let diff: Vec<u32> = (0..k)
                        .map(|i| (xd[i] + p - yd[i]) % p)
                        .collect();
                    let scaled = poly::rem(&poly::mul(&diff, &m, p), &spec.h, p);
                    let mut out = vec![0u32; k];
                    for i in 0..k {
                        let s = if i < scaled.len() { scaled[i] } else { 0 };
                        out[i] = (s + yd[i]) % p;
                    }
                    digits_to_index(&out, p, k)
                })
                .collect()
        })
        .collect();
    QuandleTable::validate(&rows)
}

/// Alexander quandle `x * y = t x + (1 - t) y` on `Z_p[t] / (h)`.
///
/// Requires `h(0) != 0` so that `t` is invertible modulo `h`.
pub fn alexander_field(spec: &AlexanderSpec) -> Result<QuandleTable> {
    if spec.h[0] == 0 {
        return Err(Error::TNotInvertible);
    }
    alexander_field_with_multiplier(spec, &[0, 1])
}

/// True iff the spec meets the simple-quandle characterization:
/// `h` irreducible over Z_p and different from `t` and `t - 1`.
pub fn is_simple_alexander(spec: &AlexanderSpec) -> bool {
    !spec.is_t() && !spec.is_t_minus_one() && poly::is_irreducible(&spec.h, spec.p)
}

/// The spec of the dual multiplier: the monic reciprocal of `h`, whose
/// roots are the inverses of the roots of `h`. The dual of
/// `alexander_field(spec)` is isomorphic to
/// `alexander_field(reciprocal_spec(spec))`.
pub fn reciprocal_spec(spec: &AlexanderSpec) -> Result<AlexanderSpec> {
    if spec.h[0] == 0 {
        return Err(Error::TNotInvertible);
    }
    AlexanderSpec::new(spec.p, poly::reciprocal(&spec.h, spec.p))
}

/// All monic irreducible polynomials of degree `k` over Z_p meeting the
/// simple-Alexander conditions (excluding `t` and `t - 1`), constant
/// coefficient first, in lexicographic order.
pub fn simple_alexander_polys(p: u32, k: usize) -> Vec<Vec<u32>> {
    assert!(k >= 1);
    let mut out = Vec::new();
    let mut coeffs = vec![0u32; k + 1];
    coeffs[k] = 1;
    loop {
        if coeffs[0] != 0 {
            if let Ok(spec) = AlexanderSpec::new(p, coeffs.clone()) {
                if is_simple_alexander(&spec) {
                    out.push(spec.h.clone());
                }
            }
        }
        let mut pos = 0;
        while pos < k {
            coeffs[pos] += 1;
            if coeffs[pos] < p {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
    }
    out
}

/// Alexander quandle on an abelian group: `x * y = f(x - y) + y`.
pub fn alexander_general(a: &GroupModel, f: &Permutation) -> Result<QuandleTable> {
    if let Some((x, y)) = a.abelian_witness() {
        return Err(Error::NotAbelian { a: x, b: y });
    }
    generalized_alexander(a, f)
}

/// Generalized Alexander quandle: `x * y = f(x y^{-1}) y` for an
/// automorphism `f` of an arbitrary finite group.
pub fn generalized_alexander(g: &GroupModel, f: &Permutation) -> Result<QuandleTable> {
    g.check_automorphism(f)?;
    let rows: Vec<Vec<usize>> = (0..g.order())
        .map(|x| {
            (0..g.order())
                .map(|y| g.op(f.apply(g.op(x, g.inv(y))), y))
                .collect()
        })
        .collect();
    QuandleTable::validate(&rows)
}

/// Conjugation quandle on the conjugacy class of `seed`: `a * b = b^{-1} a b`.
///
/// Elements of the resulting table are the positions of the class members in
/// ascending group-element order.
pub fn conjugation_quandle(g: &GroupModel, seed: usize) -> Result<QuandleTable> {
    if seed >= g.order() {
        return Err(Error::ElementOutOfRange { value: seed, n: g.order() });
    }
    let class = g.conjugacy_class(seed);
    let position = |x: usize| class.binary_search(&x).expect("class is closed under conjugation");
    let rows: Vec<Vec<usize>> = class
        .iter()
        .map(|&a| {
            class
                .iter()
                .map(|&b| position(g.op(g.op(g.inv(b), a), b)))
                .collect()
        })
        .collect();
    QuandleTable::validate(&rows)
}

/// Galkin quandle on `Z_3 x A` for an abelian group `A` and a parameter
/// `tau: Z_3 -> A` with `tau(0) = 0`. The companion function is fixed as
/// `mu(0) = 2, mu(1) = mu(2) = -1`.
///
/// Pair `(x, a)` is encoded as `x * |A| + a`.
pub fn galkin_quandle(a: &GroupModel, tau: [usize; 3]) -> Result<QuandleTable> {
    if let Some((x, y)) = a.abelian_witness() {
        return Err(Error::NotAbelian { a: x, b: y });
    }
    for &t in &tau {
        if t >= a.order() {
            return Err(Error::ElementOutOfRange { value: t, n: a.order() });
        }
    }
    if tau[0] != a.identity() {
        return Err(Error::TauNotNormalized);
    }
    const MU: [i64; 3] = [2, -1, -1];
    let m = a.order();
    let n = 3 * m;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|pair_x| {
            let (x, ax) = (pair_x / m, pair_x % m);
            (0..n)
                .map(|pair_y| {
                    let (y, by) = (pair_y / m, pair_y % m);
                    let d = (x + 3 - y) % 3;
                    let first = (2 * y + 6 - x) % 3;
                    let second = a.op(a.op(a.inv(ax), a.scale(MU[d], by)), tau[d]);
                    first * m + second
                })
                .collect()
        })
        .collect();
    QuandleTable::validate(&rows)
}
