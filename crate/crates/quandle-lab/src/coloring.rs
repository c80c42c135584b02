//! Counting and enumerating quandle colorings of braid closures.
//!
//! The braid action is precomputed per letter sign as an order-squared
//! pair-transformation table, so the hot loop is pure table lookups. For
//! connected quandles the first strand is pinned to element 0 and the
//! total recovered from `total = |Q| * fixed`, cutting the tuple space by
//! a factor of `|Q|`.

use std::time::Instant;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::quandle::QuandleTable;

/// Default cap on full-enumeration tuple counts.
pub const DEFAULT_ENUM_CAP: u64 = 100_000_000;

/// Coloring counts of one (quandle, knot) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ColoringCount {
    pub quandle_order: usize,
    /// All colorings, trivial ones included.
    pub total: u64,
    /// `total - |Q|`.
    pub nontrivial: u64,
    /// Colorings with the first strand pinned to element 0.
    pub fixed_strand: u64,
    /// Quandle-operation evaluations performed (instrumentation).
    pub evaluations: u64,
}

/// One coloring, recorded as the colors at the tops of the strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringVector {
    pub assignment: Vec<usize>,
}

impl ColoringVector {
    /// Derives the full-diagram coloring: the strand colors after each
    /// braid letter, starting from the top assignment. For a coloring the
    /// final row equals the first (the closure condition).
    pub fn arc_colors(&self, q: &QuandleTable, w: &BraidWord) -> Vec<Vec<usize>> {
        let dual = q.dual();
        let mut state = self.assignment.clone();
        let mut rows = vec![state.clone()];
        for &e in w.letters() {
            let i = e.unsigned_abs() as usize - 1;
            let (a, b) = (state[i], state[i + 1]);
            if e > 0 {
                state[i] = b;
                state[i + 1] = q.op(a, b);
            } else {
                state[i] = dual.op(b, a);
                state[i + 1] = a;
            }
            rows.push(state.clone());
        }
        rows
    }
}

/// Knobs for [`count_colorings_with`].
#[derive(Debug, Clone, Copy)]
pub struct CountOptions {
    pub workers: usize,
    /// Enumerate all `|Q|^b` tuples even for connected quandles.
    pub force_full: bool,
    pub deadline: Option<Instant>,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { workers: 1, force_full: false, deadline: None }
    }
}

/// Pair-transformation tables for the two letter signs.
///
/// A positive letter maps the strand pair `(a, b)` to `(b, a*b)`; a
/// negative letter maps it to `(b /. a, a)` where `/.` is the inverse
/// right translation. The two maps are mutually inverse.
struct PairTables {
    n: usize,
    pos: Vec<u32>,
    neg: Vec<u32>,
}

impl PairTables {
    fn build(q: &QuandleTable) -> Self {
        let n = q.order();
        let dual = q.dual();
        let mut pos = vec![0u32; n * n];
        let mut neg = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                pos[a * n + b] = ((b as u32) << 16) | q.op(a, b) as u32;
                neg[a * n + b] = ((dual.op(b, a) as u32) << 16) | a as u32;
            }
        }
        PairTables { n, pos, neg }
    }
}

/// Braid letters compiled to (position, sign) steps.
fn compile(w: &BraidWord) -> Vec<(usize, bool)> {
    w.letters()
        .iter()
        .map(|&e| (e.unsigned_abs() as usize - 1, e > 0))
        .collect()
}

#[inline]
fn closes(state: &mut [u16], top: &[u16], steps: &[(usize, bool)], tables: &PairTables) -> bool {
    state.copy_from_slice(top);
    let n = tables.n;
    for &(i, positive) in steps {
        let a = state[i] as usize;
        let b = state[i + 1] as usize;
        let packed = if positive {
            tables.pos[a * n + b]
        } else {
            tables.neg[a * n + b]
        };
        state[i] = (packed >> 16) as u16;
        state[i + 1] = (packed & 0xffff) as u16;
    }
    state == top
}

/// Counts closure-respecting tuples over one chunk of the leading free
/// strand's color range, the remaining free strands running over all
/// colors. Returns `(matches, matches_with_strand0_color0)`.
fn count_chunk(
    tables: &PairTables,
    steps: &[(usize, bool)],
    strands: usize,
    free: &[usize],
    lo: usize,
    hi: usize,
    deadline: Option<Instant>,
) -> Result<(u64, u64)> {
    let n = tables.n;
    let mut top = vec![0u16; strands];
    let mut state = vec![0u16; strands];
    let mut matches = 0u64;
    let mut matches_zero = 0u64;
    let mut since_check = 0u32;

    if free.is_empty() {
        // Single tuple (the all-zero assignment on pinned strands).
        if closes(&mut state, &top, steps, tables) {
            matches = 1;
            matches_zero = 1;
        }
        return Ok((matches, matches_zero));
    }

    let rest = &free[1..];
    for first in lo..hi {
        top[free[0]] = first as u16;
        for f in rest {
            top[*f] = 0;
        }
        'tuples: loop {
            if closes(&mut state, &top, steps, tables) {
                matches += 1;
                if top[0] == 0 {
                    matches_zero += 1;
                }
            }
            since_check += 1;
            if since_check == 4096 {
                since_check = 0;
                if let Some(d) = deadline {
                    if Instant::now() > d {
                        return Err(Error::CellTimeout);
                    }
                }
            }
            // Odometer over the non-leading free strands, last fastest.
            for pos in (0..rest.len()).rev() {
                let cell = &mut top[rest[pos]];
                *cell += 1;
                if (*cell as usize) < n {
                    continue 'tuples;
                }
                *cell = 0;
            }
            break;
        }
    }
    Ok((matches, matches_zero))
}

fn split_range(n: usize, workers: usize) -> Vec<(usize, usize)> {
    let workers = workers.max(1).min(n.max(1));
    let base = n / workers;
    let extra = n % workers;
    let mut ranges = Vec::with_capacity(workers);
    let mut start = 0;
    for w in 0..workers {
        let len = base + usize::from(w < extra);
        ranges.push((start, start + len));
        start += len;
    }
    ranges
}

/// Runs the tuple scan over the given free strands, fanned out over the
/// color of the leading free strand. Returns the two match counts and the
/// number of tuples examined.
fn scan(
    q: &QuandleTable,
    w: &BraidWord,
    free: Vec<usize>,
    workers: usize,
    deadline: Option<Instant>,
) -> Result<(u64, u64, u128)> {
    let tables = PairTables::build(q);
    let steps = compile(w);
    let n = q.order();
    let strands = w.strands();
    let tuples: u128 = (n as u128)
        .checked_pow(free.len() as u32)
        .ok_or(Error::CounterOverflow)?;

    if free.is_empty() || workers <= 1 || n == 1 {
        let span = if free.is_empty() { (0, 0) } else { (0, n) };
        let (m, mz) = count_chunk(&tables, &steps, strands, &free, span.0, span.1, deadline)?;
        return Ok((m, mz, tuples));
    }

    let ranges = split_range(n, workers);
    let results: Vec<Result<(u64, u64)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| {
                let tables = &tables;
                let steps = &steps;
                let free = &free;
                scope.spawn(move || count_chunk(tables, steps, strands, free, lo, hi, deadline))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });

    let mut matches = 0u64;
    let mut matches_zero = 0u64;
    for r in results {
        let (m, mz) = r?;
        matches += m;
        matches_zero += mz;
    }
    Ok((matches, matches_zero, tuples))
}

fn evaluations_for(tuples: u128, word_len: usize) -> Result<u64> {
    let evals = tuples.checked_mul(word_len as u128).ok_or(Error::CounterOverflow)?;
    u64::try_from(evals).map_err(|_| Error::CounterOverflow)
}

/// Counts colorings of the closure of `w` by `q`.
///
/// Connected quandles take the pinned-first-strand path over
/// `|Q|^(b-1)` tuples; otherwise (or with `force_full`) all `|Q|^b`
/// top tuples are scanned. The result does not depend on the worker
/// count.
pub fn count_colorings_with(
    q: &QuandleTable,
    w: &BraidWord,
    opts: &CountOptions,
) -> Result<ColoringCount> {
    let n = q.order();
    let b = w.strands();
    let fixed_path = !opts.force_full && q.is_connected();
    let free: Vec<usize> = if fixed_path { (1..b).collect() } else { (0..b).collect() };
    let (matches, matches_zero, tuples) = scan(q, w, free, opts.workers, opts.deadline)?;
    let evaluations = evaluations_for(tuples, w.len())?;
    if fixed_path {
        let fixed_strand = matches;
        debug_assert!(fixed_strand >= 1, "the all-zero coloring always closes");
        let nontrivial = (n as u64) * (fixed_strand - 1);
        Ok(ColoringCount {
            quandle_order: n,
            total: nontrivial + n as u64,
            nontrivial,
            fixed_strand,
            evaluations,
        })
    } else {
        let total = matches;
        debug_assert!(total >= n as u64, "constant colorings always close");
        Ok(ColoringCount {
            quandle_order: n,
            total,
            nontrivial: total - n as u64,
            fixed_strand: matches_zero,
            evaluations,
        })
    }
}

pub fn count_colorings(q: &QuandleTable, w: &BraidWord, workers: usize) -> Result<ColoringCount> {
    count_colorings_with(q, w, &CountOptions { workers, ..CountOptions::default() })
}

/// Full `|Q|^b` scan regardless of connectivity.
pub fn count_colorings_full(
    q: &QuandleTable,
    w: &BraidWord,
    workers: usize,
) -> Result<ColoringCount> {
    count_colorings_with(
        q,
        w,
        &CountOptions { workers, force_full: true, deadline: None },
    )
}

/// Visits every coloring (trivial ones included) in lexicographic order of
/// the top tuple. Returns the number of colorings visited.
pub fn for_each_coloring(
    q: &QuandleTable,
    w: &BraidWord,
    cap: u64,
    visit: impl FnMut(&[u16]),
) -> Result<u64> {
    let n = q.order();
    let b = w.strands();
    let tuples = (n as u128).checked_pow(b as u32).ok_or(Error::CounterOverflow)?;
    if tuples > cap as u128 {
        return Err(Error::EnumerationCapExceeded { size: tuples, cap });
    }
    let tables = PairTables::build(q);
    let steps = compile(w);
    Ok(visit_colorings_in_range(&tables, &steps, b, 0, n, visit))
}

/// Colorings whose first strand color lies in `lo..hi`, lexicographic.
/// Used to fan the full scan out over workers.
fn visit_colorings_in_range(
    tables: &PairTables,
    steps: &[(usize, bool)],
    strands: usize,
    lo: usize,
    hi: usize,
    mut visit: impl FnMut(&[u16]),
) -> u64 {
    let n = tables.n;
    let mut top = vec![0u16; strands];
    let mut state = vec![0u16; strands];
    let mut count = 0u64;
    for first in lo..hi {
        top[0] = first as u16;
        for cell in top[1..].iter_mut() {
            *cell = 0;
        }
        'tuples: loop {
            if closes(&mut state, &top, steps, tables) {
                count += 1;
                visit(&top);
            }
            // Last strand fastest; the first is pinned to this chunk.
            for pos in (1..strands).rev() {
                top[pos] += 1;
                if (top[pos] as usize) < n {
                    continue 'tuples;
                }
                top[pos] = 0;
            }
            break;
        }
    }
    count
}

/// Fans the full coloring scan out over `workers` threads, each folding
/// its chunk of first-strand colors into an accumulator; the per-chunk
/// results are merged in chunk order, so the outcome does not depend on
/// scheduling.
pub fn fold_colorings_chunked<A: Send>(
    q: &QuandleTable,
    w: &BraidWord,
    cap: u64,
    workers: usize,
    make: impl Fn() -> A + Sync,
    fold: impl Fn(&mut A, &[u16]) + Sync,
) -> Result<Vec<A>> {
    let n = q.order();
    let b = w.strands();
    let tuples = (n as u128).checked_pow(b as u32).ok_or(Error::CounterOverflow)?;
    if tuples > cap as u128 {
        return Err(Error::EnumerationCapExceeded { size: tuples, cap });
    }
    let tables = PairTables::build(q);
    let steps = compile(w);
    if workers <= 1 || n == 1 {
        let mut acc = make();
        visit_colorings_in_range(&tables, &steps, b, 0, n, |top| fold(&mut acc, top));
        return Ok(vec![acc]);
    }
    let ranges = split_range(n, workers);
    Ok(std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| {
                let tables = &tables;
                let steps = &steps;
                let make = &make;
                let fold = &fold;
                scope.spawn(move || {
                    let mut acc = make();
                    visit_colorings_in_range(tables, steps, b, lo, hi, |top| fold(&mut acc, top));
                    acc
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    }))
}

/// Materializes the full coloring list, lexicographically ordered by top
/// tuple.
pub fn enumerate_colorings(
    q: &QuandleTable,
    w: &BraidWord,
    cap: u64,
) -> Result<Vec<ColoringVector>> {
    let mut out = Vec::new();
    for_each_coloring(q, w, cap, |top| {
        out.push(ColoringVector {
            assignment: top.iter().map(|&c| c as usize).collect(),
        });
    })?;
    Ok(out)
}
