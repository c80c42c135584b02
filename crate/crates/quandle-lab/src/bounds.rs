//! Lower bounds on classical knot invariants from coloring counts: the
//! ceiling-log quantity Lq, its maxima over quandle lists, the bridge and
//! Nakanishi bounds, the tunnel-number conclusion, and the unknotting case
//! analysis.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::knot::{IntRange, KnownInvariants};
use crate::matrix::ColoringMatrix;

/// `lq = ceil(log_order(total))` in exact integer arithmetic: the smallest
/// `e` with `order^e >= total`.
pub fn lq(order: usize, total: u64) -> Result<u32> {
    if order < 2 {
        return Err(Error::ElementOutOfRange { value: order, n: 2 });
    }
    let order = order as u128;
    let total = total as u128;
    let mut power = 1u128;
    let mut e = 0u32;
    while power < total {
        power = power.saturating_mul(order);
        e += 1;
    }
    Ok(e)
}

/// The unknotting cases for knots with a simple-Alexander ceiling-log of 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum UCase {
    U1,
    U2,
    U3,
    U4,
    U5,
    U6,
}

/// Conclusion of the tunnel-number rule.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TunnelConclusion {
    pub tunnel_number: u32,
    /// Name of a simple-Alexander quandle whose lq meets the bridge index.
    pub via_quandle: String,
}

/// Per-knot bound report.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BoundReport {
    pub knot: String,
    /// Ceiling-log per quandle in the configured list.
    pub lq_per_quandle: BTreeMap<String, u32>,
    /// Maximum lq over the whole configured list.
    pub mlq: u32,
    /// Maximum lq over the simple-Alexander sublist (0 if that list is
    /// empty).
    pub mlq_f: u32,
    /// `mlq` is a lower bound for the bridge index.
    pub bridge_lower: u32,
    /// `mlq_f - 1` (floored at 0) is a lower bound for the Nakanishi index.
    pub nakanishi_lower: u32,
    pub tunnel: Option<TunnelConclusion>,
    pub unknotting_case: Option<UCase>,
    /// Narrowed Nakanishi-index interval from the case analysis.
    pub nakanishi_conclusion: Option<IntRange>,
    /// Narrowed unknotting-number interval from the case analysis.
    pub unknotting_conclusion: Option<IntRange>,
    /// Ingested values contradicted by the bounds.
    pub data_errors: Vec<String>,
}

/// Classifies a known unknotting interval for a knot with `mlq_f == 3`.
///
/// The case table is a partition of the observed intervals; anything else
/// comes back `None` (reported as unclassified, since intervals beyond the
/// table were never observed but are not impossible).
fn classify_u(u: IntRange) -> Option<(UCase, IntRange, Option<IntRange>)> {
    // (case, nakanishi conclusion, narrowed unknotting if any)
    match (u.lo, u.hi) {
        (2, 2) => Some((UCase::U1, IntRange::exact(2), None)),
        (1, 2) => Some((UCase::U2, IntRange::exact(2), Some(IntRange::exact(2)))),
        (3, 3) => Some((UCase::U3, IntRange { lo: 2, hi: 3 }, None)),
        (2, 3) => Some((UCase::U4, IntRange { lo: 2, hi: 3 }, None)),
        (1, 3) => Some((UCase::U5, IntRange { lo: 2, hi: 3 }, Some(IntRange { lo: 2, hi: 3 }))),
        (2, 4) | (3, 4) | (4, 4) => Some((UCase::U6, IntRange { lo: 2, hi: 4 }, None)),
        _ => None,
    }
}

/// Builds per-knot bound reports from a complete coloring matrix.
///
/// `known[j]` carries the ingested invariants of knot `j` (aligned with the
/// matrix); `simple_alexander` lists the indices of the quandles that are
/// simple Alexander quandles of prime power order.
pub fn bound_report(
    mx: &ColoringMatrix,
    known: &[KnownInvariants],
    simple_alexander: &[usize],
) -> Result<Vec<BoundReport>> {
    if !mx.is_complete() {
        return Err(Error::IncompleteMatrix("bound_report".into()));
    }
    if known.len() != mx.knot_count() {
        return Err(Error::MatrixMismatch(format!(
            "{} known-invariant rows for {} knots",
            known.len(),
            mx.knot_count()
        )));
    }
    for &i in simple_alexander {
        if i >= mx.quandle_count() {
            return Err(Error::ElementOutOfRange { value: i, n: mx.quandle_count() });
        }
    }
    let mut reports = Vec::with_capacity(mx.knot_count());
    #[allow(clippy::needless_range_loop)] // j indexes several parallel arrays
    for j in 0..mx.knot_count() {
        let mut lq_per_quandle = BTreeMap::new();
        let mut lq_by_index = Vec::with_capacity(mx.quandle_count());
        for i in 0..mx.quandle_count() {
            let order = mx.quandle_orders[i];
            let total = mx.entry(i, j).expect("matrix is complete") + order as u64;
            let value = lq(order, total)?;
            lq_per_quandle.insert(mx.quandle_names[i].clone(), value);
            lq_by_index.push(value);
        }
        let mlq = lq_by_index.iter().copied().max().unwrap_or(0);
        let mlq_f = simple_alexander.iter().map(|&i| lq_by_index[i]).max().unwrap_or(0);
        let mut data_errors = Vec::new();

        let known_j = known[j];
        if let Some(bridge) = known_j.bridge {
            if bridge.hi < mlq {
                data_errors.push(format!(
                    "ingested bridge index {} is below the coloring bound {mlq}",
                    bridge.render()
                ));
            }
        }

        // Tunnel rule: an exactly known bridge index met by some
        // simple-Alexander lq pins the tunnel number to bridge - 1.
        let tunnel = known_j.bridge.and_then(|bridge| {
            if !bridge.is_exact() {
                return None;
            }
            simple_alexander
                .iter()
                .find(|&&i| lq_by_index[i] == bridge.lo)
                .map(|&i| TunnelConclusion {
                    tunnel_number: bridge.lo - 1,
                    via_quandle: mx.quandle_names[i].clone(),
                })
        });

        let mut unknotting_case = None;
        let mut nakanishi_conclusion = None;
        let mut unknotting_conclusion = None;
        if mlq_f == 3 {
            if let Some(u) = known_j.unknotting {
                if let Some((case, ni, narrowed)) = classify_u(u) {
                    unknotting_case = Some(case);
                    nakanishi_conclusion = Some(ni);
                    unknotting_conclusion = narrowed.or(Some(u));
                }
                if u.hi < 2 {
                    data_errors.push(format!(
                        "ingested unknotting number {} contradicts the Nakanishi bound 2",
                        u.render()
                    ));
                }
            }
        }

        reports.push(BoundReport {
            knot: mx.knot_names[j].clone(),
            lq_per_quandle,
            mlq,
            mlq_f,
            bridge_lower: mlq,
            nakanishi_lower: mlq_f.saturating_sub(1),
            tunnel,
            unknotting_case,
            nakanishi_conclusion,
            unknotting_conclusion,
            data_errors,
        });
    }
    Ok(reports)
}
