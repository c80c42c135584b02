//! Quandle 2-cocycles, abelian extensions, the connected-extension search,
//! and the 2-cocycle state-sum invariant.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::braid::BraidWord;
use crate::coloring::for_each_coloring;
use crate::error::{CocycleViolation, Error, Result};
use crate::hom::find_isomorphism;
use crate::quandle::QuandleTable;

/// Cap on the number of cocycle-space candidates enumerated by
/// [`find_connected_extensions`].
pub const DEFAULT_EXTENSION_SEARCH_CAP: u64 = 1 << 20;

/// A validated 2-cocycle on a quandle with coefficients in `Z_m`.
///
/// The diagonal vanishes and the cocycle identity
/// `phi(x,y) - phi(x,z) + phi(x*y,z) - phi(x*z,y*z) = 0` holds for all
/// triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle2 {
    base: QuandleTable,
    modulus: u32,
    /// Row-major `values[x * n + y] = phi(x, y)` in `0..m`.
    values: Vec<u32>,
}

impl Cocycle2 {
    pub fn base(&self) -> &QuandleTable {
        &self.base
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn value(&self, x: usize, y: usize) -> u32 {
        self.values[x * self.base.order() + y]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The zero cocycle on any base.
    pub fn zero(base: QuandleTable, modulus: u32) -> Self {
        let n = base.order();
        Cocycle2 { base, modulus: modulus.max(1), values: vec![0; n * n] }
    }

    /// The coboundary of a function `psi: X -> Z_m`:
    /// `d psi (x, y) = psi(x) - psi(x * y)`.
    pub fn coboundary(base: QuandleTable, modulus: u32, psi: &[u32]) -> Result<Self> {
        let n = base.order();
        let m = modulus.max(1);
        let mut values = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                values[x * n + y] = (psi[x] % m + m - psi[base.op(x, y)] % m) % m;
            }
        }
        validate_cocycle(&base, m, &values)
    }
}

/// Validates a raw value table as a 2-cocycle, reporting every violated
/// instance on failure.
pub fn validate_cocycle(base: &QuandleTable, modulus: u32, values: &[u32]) -> Result<Cocycle2> {
    let n = base.order();
    let m = modulus.max(1);
    if values.len() != n * n {
        return Err(Error::CocycleShape { expected: n });
    }
    if values.iter().any(|&v| v >= m) {
        return Err(Error::CocycleValueRange { m });
    }
    let phi = |x: usize, y: usize| values[x * n + y];
    let mut violations = Vec::new();
    for x in 0..n {
        if phi(x, x) != 0 {
            violations.push(CocycleViolation::Diagonal { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = (phi(x, y) + phi(base.op(x, y), z)) % m;
                let rhs = (phi(x, z) + phi(base.op(x, z), base.op(y, z))) % m;
                if lhs != rhs {
                    violations.push(CocycleViolation::Identity { x, y, z });
                }
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::Cocycle(violations));
    }
    Ok(Cocycle2 { base: base.clone(), modulus: m, values: values.to_vec() })
}

/// The abelian extension of the base by `Z_m` twisted by the cocycle:
/// `(x, a) * (y, b) = (x * y, a + phi(x, y))`, pair `(x, a) -> x * m + a`.
pub fn abelian_extension(phi: &Cocycle2) -> QuandleTable {
    let n = phi.base.order();
    let m = phi.modulus as usize;
    QuandleTable::from_fn_unchecked(n * m, |p, q| {
        let (x, a) = (p / m, p % m);
        let (y, _b) = (q / m, q % m);
        phi.base.op(x, y) * m + (a + phi.value(x, y) as usize) % m
    })
}

/// All 2-cocycles with connected extension, one representative per
/// extension-isomorphism class.
///
/// The cocycle identity is linear over `Z_m`, so for prime `m` the full
/// cocycle space is the nullspace of the identity's linear system; the
/// search enumerates that space exhaustively, canonicalizes modulo the
/// coboundary subspace, and deduplicates the surviving extensions with
/// isomorphism tests. Deterministic output order (sorted value tables).
pub fn find_connected_extensions(base: &QuandleTable, modulus: u32) -> Result<Vec<Cocycle2>> {
    let n = base.order();
    if n > 8 || modulus > 3 {
        return Err(Error::SearchCapExceeded {
            detail: format!("extension search caps at |X| <= 8, m <= 3; got |X|={n}, m={modulus}"),
        });
    }
    let m = modulus.max(1);
    if m == 1 {
        // Z_1 coefficients: only the zero cocycle.
        return Ok(vec![Cocycle2::zero(base.clone(), 1)]);
    }
    debug_assert!(m == 2 || m == 3, "m <= 3 and m > 1");

    // Unknowns: phi(x, y) for x != y, in row-major order.
    let mut var_of = vec![usize::MAX; n * n];
    let mut vars = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y {
                var_of[x * n + y] = vars.len();
                vars.push((x, y));
            }
        }
    }
    let coeff_of = |cell: usize, row: &mut Vec<u32>, sign_plus: bool| {
        // The diagonal phi(x, x) is identically 0 and contributes nothing.
        if var_of[cell] != usize::MAX {
            let v = var_of[cell];
            row[v] = (row[v] + if sign_plus { 1 } else { m - 1 }) % m;
        }
    };

    // One equation per triple (x, y, z).
    let mut rows = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut row = vec![0u32; vars.len()];
                coeff_of(x * n + y, &mut row, true);
                coeff_of(x * n + z, &mut row, false);
                coeff_of(base.op(x, y) * n + z, &mut row, true);
                coeff_of(base.op(x, z) * n + base.op(y, z), &mut row, false);
                if row.iter().any(|&c| c != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let cocycle_basis = nullspace(&mut rows, vars.len(), m);

    let combos = (m as u64).checked_pow(cocycle_basis.len() as u32);
    match combos {
        Some(c) if c <= DEFAULT_EXTENSION_SEARCH_CAP => {}
        _ => {
            return Err(Error::SearchCapExceeded {
                detail: format!("cocycle space has dimension {}", cocycle_basis.len()),
            })
        }
    }

    // Reduced row basis of the coboundary subspace, for canonicalization.
    let mut coboundary_rows: Vec<Vec<u32>> = (0..n)
        .map(|c| {
            let mut psi = vec![0u32; n];
            psi[c] = 1;
            let mut row = vec![0u32; vars.len()];
            for (v, &(x, y)) in vars.iter().enumerate() {
                row[v] = (psi[x] + m - psi[base.op(x, y)]) % m;
            }
            row
        })
        .collect();
    let coboundary_basis = row_reduce(&mut coboundary_rows, vars.len(), m);

    // Enumerate the cocycle space; keep connected extensions, one per
    // coboundary coset.
    let mut by_coset: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    let mut counters = vec![0u32; cocycle_basis.len()];
    loop {
        let mut candidate = vec![0u32; vars.len()];
        for (k, &c) in counters.iter().enumerate() {
            if c != 0 {
                for (v, &coeff) in cocycle_basis[k].iter().enumerate() {
                    candidate[v] = (candidate[v] + c * coeff) % m;
                }
            }
        }
        let canonical = reduce_against(&candidate, &coboundary_basis, m);
        by_coset.entry(canonical).or_insert_with(|| candidate.clone());

        let mut pos = 0;
        while pos < counters.len() {
            counters[pos] += 1;
            if counters[pos] < m {
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
        if pos == counters.len() {
            break;
        }
    }

    let mut survivors: Vec<(Cocycle2, QuandleTable)> = Vec::new();
    for candidate in by_coset.into_values() {
        let mut values = vec![0u32; n * n];
        for (v, &(x, y)) in vars.iter().enumerate() {
            values[x * n + y] = candidate[v];
        }
        let phi = validate_cocycle(base, m, &values).expect("nullspace members are cocycles");
        let ext = abelian_extension(&phi);
        if !ext.is_connected() {
            continue;
        }
        if survivors.iter().any(|(_, other)| find_isomorphism(&ext, other).is_some()) {
            continue;
        }
        survivors.push((phi, ext));
    }
    survivors.sort_by(|a, b| a.0.values.cmp(&b.0.values));
    Ok(survivors.into_iter().map(|(phi, _)| phi).collect())
}

/// Gaussian elimination over Z_m (m prime): reduces `rows` in place and
/// returns a basis of the nullspace of the system.
fn nullspace(rows: &mut Vec<Vec<u32>>, cols: usize, m: u32) -> Vec<Vec<u32>> {
    let pivots = eliminate(rows, cols, m);
    let pivot_col: Vec<Option<usize>> = {
        let mut pc = vec![None; cols];
        for (r, &c) in pivots.iter().enumerate() {
            pc[c] = Some(r);
        }
        pc
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_col[free].is_some() {
            continue;
        }
        let mut vec = vec![0u32; cols];
        vec[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot entry is 1 after elimination
            let coeff = rows[r][free];
            if coeff != 0 {
                vec[pc] = (m - coeff) % m;
            }
        }
        basis.push(vec);
    }
    basis
}

/// Row-reduces in place; returns the nonzero rows (a reduced basis).
fn row_reduce(rows: &mut Vec<Vec<u32>>, cols: usize, m: u32) -> Vec<Vec<u32>> {
    eliminate(rows, cols, m);
    rows.iter().filter(|r| r.iter().any(|&c| c != 0)).cloned().collect()
}

/// In-place Gauss-Jordan over Z_m (m prime). Returns the pivot column of
/// each surviving row; zero rows are dropped.
#[allow(clippy::needless_range_loop)] // two rows are read and written at once
fn eliminate(rows: &mut Vec<Vec<u32>>, cols: usize, m: u32) -> Vec<usize> {
    let inv = |a: u32| -> u32 {
        // m is 2 or 3 here; tiny Fermat inverse.
        let mut acc = 1u32;
        for _ in 0..m - 2 {
            acc = (acc * a) % m;
        }
        acc
    };
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(src) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, src);
        let scale = inv(rows[rank][col]);
        if scale != 1 {
            for c in 0..cols {
                rows[rank][c] = (rows[rank][c] * scale) % m;
            }
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..cols {
                    let sub = (factor * rows[rank][c]) % m;
                    rows[r][c] = (rows[r][c] + m - sub) % m;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Canonical coset representative of `vec` modulo the span of a reduced
/// basis: subtract each basis row scaled to clear its pivot position.
fn reduce_against(vec: &[u32], basis: &[Vec<u32>], m: u32) -> Vec<u32> {
    let mut out = vec.to_vec();
    for row in basis {
        let pivot = row.iter().position(|&c| c != 0).expect("basis rows are nonzero");
        let factor = out[pivot]; // pivot entry of a reduced row is 1
        if factor != 0 {
            for (o, &r) in out.iter_mut().zip(row.iter()) {
                *o = (*o + m - (factor * r) % m) % m;
            }
        }
    }
    out
}

/// The multiset of state sums of the 2-cocycle invariant.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CocycleInvariant {
    pub modulus: u32,
    /// Z_m value -> multiplicity over all colorings.
    pub multiset: BTreeMap<u32, u64>,
}

/// Computes the 2-cocycle invariant of the closure of `w`.
///
/// For each coloring the braid is walked top to bottom; a positive letter
/// acting on the strand pair `(a, b)` contributes `+phi(a, b)` and a
/// negative letter contributes `-phi(b /. a, a)`, everything in `Z_m`.
pub fn cocycle_invariant(phi: &Cocycle2, w: &BraidWord, cap: u64) -> Result<CocycleInvariant> {
    let base = &phi.base;
    let n = base.order();
    let m = phi.modulus;
    let dual = base.dual();
    let steps: Vec<(usize, bool)> = w
        .letters()
        .iter()
        .map(|&e| (e.unsigned_abs() as usize - 1, e > 0))
        .collect();
    let mut multiset: BTreeMap<u32, u64> = BTreeMap::new();
    let mut state = vec![0u16; w.strands()];
    for_each_coloring(base, w, cap, |top| {
        state.copy_from_slice(top);
        let mut sum = 0u32;
        for &(i, positive) in &steps {
            let a = state[i] as usize;
            let b = state[i + 1] as usize;
            if positive {
                sum = (sum + phi.value(a, b)) % m;
                state[i] = b as u16;
                state[i + 1] = base.op(a, b) as u16;
            } else {
                let under = dual.op(b, a);
                sum = (sum + m - phi.value(under, a)) % m;
                state[i] = under as u16;
                state[i + 1] = a as u16;
            }
        }
        *multiset.entry(sum).or_insert(0) += 1;
        let _ = n;
    })?;
    Ok(CocycleInvariant { modulus: m, multiset })
}

/// Deadline-aware variant used by long batch runs.
pub fn cocycle_invariant_with_deadline(
    phi: &Cocycle2,
    w: &BraidWord,
    cap: u64,
    deadline: Option<Instant>,
) -> Result<CocycleInvariant> {
    if let Some(d) = deadline {
        if Instant::now() > d {
            return Err(Error::CellTimeout);
        }
    }
    cocycle_invariant(phi, w, cap)
}
