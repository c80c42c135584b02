//! The coloring matrix over a quandle list and a knot list, the
//! distinguishing conditions, the row-similarity partition, and a greedy
//! distinguishing-set minimizer.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::coloring::{count_colorings_with, CountOptions};
use crate::error::{Error, Result};
use crate::hom::find_isomorphism;
use crate::knot::{KnotRecord, Symmetry};
use crate::quandle::QuandleTable;

/// Nontrivial coloring counts for every (quandle, knot) pair, plus the
/// dual pairing of the quandle list.
///
/// `entries[i][j]` is the nontrivial count of quandle `i` on knot `j`;
/// `None` marks a cell whose computation timed out. `dual_index[i]` is the
/// position of a quandle isomorphic to the dual of quandle `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringMatrix {
    pub quandle_names: Vec<String>,
    pub quandle_orders: Vec<usize>,
    pub dual_index: Vec<usize>,
    pub knot_names: Vec<String>,
    pub knot_symmetries: Vec<Symmetry>,
    pub entries: Vec<Vec<Option<u64>>>,
}

impl ColoringMatrix {
    #[inline]
    pub fn entry(&self, quandle: usize, knot: usize) -> Option<u64> {
        self.entries[quandle][knot]
    }

    pub fn quandle_count(&self) -> usize {
        self.quandle_names.len()
    }

    pub fn knot_count(&self) -> usize {
        self.knot_names.len()
    }

    pub fn missing_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_none() {
                    cells.push((i, j));
                }
            }
        }
        cells
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|e| e.is_some()))
    }

    fn check_shape(&self) -> Result<()> {
        let nq = self.quandle_count();
        let nk = self.knot_count();
        if self.entries.len() != nq
            || self.entries.iter().any(|r| r.len() != nk)
            || self.quandle_orders.len() != nq
            || self.dual_index.len() != nq
            || self.knot_symmetries.len() != nk
        {
            return Err(Error::MatrixMismatch("inconsistent dimensions".into()));
        }
        if self.dual_index.iter().any(|&d| d >= nq) {
            return Err(Error::MatrixMismatch("dual index out of range".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub workers: usize,
    /// Per-cell budget; an expired cell is marked missing, not fatal.
    pub cell_timeout: Option<Duration>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { workers: 1, cell_timeout: None }
    }
}

/// Builds the nontrivial-count matrix over connected quandles.
///
/// Cells are distributed over `workers` threads, each counting with a
/// single-threaded inner loop. The quandle list must be closed under duals
/// up to isomorphism; `dual_index` is resolved by isomorphism search and
/// must come out an involution.
pub fn build_matrix(
    quandles: &[(String, QuandleTable)],
    knots: &[KnotRecord],
    opts: &BuildOptions,
) -> Result<ColoringMatrix> {
    for (name, q) in quandles {
        if !q.is_connected() {
            return Err(Error::NotConnected { name: name.clone() });
        }
    }
    let mut dual_index = Vec::with_capacity(quandles.len());
    for (name, q) in quandles {
        let dual = q.dual();
        let position = quandles
            .iter()
            .position(|(_, candidate)| find_isomorphism(&dual, candidate).is_some())
            .ok_or_else(|| Error::DualNotInList { name: name.clone() })?;
        dual_index.push(position);
    }
    for (i, &d) in dual_index.iter().enumerate() {
        if dual_index[d] != i {
            return Err(Error::DualIndexNotInvolution);
        }
    }

    let nq = quandles.len();
    let nk = knots.len();
    let cells: Vec<(usize, usize)> =
        (0..nq).flat_map(|i| (0..nk).map(move |j| (i, j))).collect();
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, usize, Option<u64>)>> = Mutex::new(Vec::with_capacity(cells.len()));

    let run_cells = || -> Result<()> {
        loop {
            let at = next.fetch_add(1, Ordering::Relaxed);
            if at >= cells.len() {
                return Ok(());
            }
            let (i, j) = cells[at];
            let deadline = opts.cell_timeout.map(|t| Instant::now() + t);
            let count_opts = CountOptions { workers: 1, force_full: false, deadline };
            let outcome = count_colorings_with(&quandles[i].1, &knots[j].braid, &count_opts);
            let value = match outcome {
                Ok(c) => Some(c.nontrivial),
                Err(Error::CellTimeout) => None,
                Err(e) => return Err(e),
            };
            results.lock().expect("no poisoned lock").push((i, j, value));
        }
    };

    if opts.workers <= 1 {
        run_cells()?;
    } else {
        let outcomes: Vec<Result<()>> = std::thread::scope(|scope| {
            let handles: Vec<_> =
                (0..opts.workers).map(|_| scope.spawn(run_cells)).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for o in outcomes {
            o?;
        }
    }

    let mut entries = vec![vec![None; nk]; nq];
    for (i, j, value) in results.into_inner().expect("no poisoned lock") {
        entries[i][j] = value;
    }
    Ok(ColoringMatrix {
        quandle_names: quandles.iter().map(|(n, _)| n.clone()).collect(),
        quandle_orders: quandles.iter().map(|(_, q)| q.order()).collect(),
        dual_index,
        knot_names: knots.iter().map(|k| k.name.clone()).collect(),
        knot_symmetries: knots.iter().map(|k| k.symmetry).collect(),
        entries,
    })
}

/// The three pairwise distinguishing conditions over the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairCondition {
    /// Rows as computed: some quandle separates the two knot columns.
    Direct,
    /// Knot vs. mirrored knot: row `k` against row `dual[k]`.
    AgainstMirror,
    /// Mirrored knot vs. mirrored knot: row `dual[k]` on both sides.
    MirrorMirror,
}

impl PairCondition {
    fn cells(self, mx: &ColoringMatrix, k: usize, i: usize, j: usize) -> (Option<u64>, Option<u64>) {
        match self {
            PairCondition::Direct => (mx.entry(k, i), mx.entry(k, j)),
            PairCondition::AgainstMirror => (mx.entry(k, i), mx.entry(mx.dual_index[k], j)),
            PairCondition::MirrorMirror => {
                let s = mx.dual_index[k];
                (mx.entry(s, i), mx.entry(s, j))
            }
        }
    }
}

/// The least quandle index that definitely separates the pair under the
/// condition, if any.
pub fn condition_witness(
    mx: &ColoringMatrix,
    condition: PairCondition,
    i: usize,
    j: usize,
) -> Option<usize> {
    (0..mx.quandle_count()).find(|&k| {
        matches!(condition.cells(mx, k, i, j), (Some(a), Some(b)) if a != b)
    })
}

/// Outcome of one condition over all unordered knot pairs.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ConditionReport {
    pub condition: PairCondition,
    pub holds: bool,
    pub pairs_checked: u64,
    /// Pairs every quandle fails to separate (all cells present).
    pub failing: Vec<(usize, usize)>,
    /// Pairs undecidable because a touched cell is missing.
    pub poisoned: Vec<(usize, usize)>,
}

fn check_condition(mx: &ColoringMatrix, condition: PairCondition) -> ConditionReport {
    let nk = mx.knot_count();
    let mut failing = Vec::new();
    let mut poisoned = Vec::new();
    let mut pairs_checked = 0u64;
    for i in 0..nk {
        for j in (i + 1)..nk {
            pairs_checked += 1;
            let mut touched_missing = false;
            let mut separated = false;
            for k in 0..mx.quandle_count() {
                match condition.cells(mx, k, i, j) {
                    (Some(a), Some(b)) => {
                        if a != b {
                            separated = true;
                            break;
                        }
                    }
                    _ => touched_missing = true,
                }
            }
            if !separated {
                if touched_missing {
                    poisoned.push((i, j));
                } else {
                    failing.push((i, j));
                }
            }
        }
    }
    ConditionReport {
        condition,
        holds: failing.is_empty() && poisoned.is_empty(),
        pairs_checked,
        failing,
        poisoned,
    }
}

/// Reports the three distinguishing conditions over every unordered pair
/// of knot columns.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DistinguishReport {
    pub direct: ConditionReport,
    pub against_mirror: ConditionReport,
    pub mirror_mirror: ConditionReport,
}

impl DistinguishReport {
    pub fn all_hold(&self) -> bool {
        self.direct.holds && self.against_mirror.holds && self.mirror_mirror.holds
    }
}

pub fn check_distinguishing(mx: &ColoringMatrix) -> Result<DistinguishReport> {
    mx.check_shape()?;
    Ok(DistinguishReport {
        direct: check_condition(mx, PairCondition::Direct),
        against_mirror: check_condition(mx, PairCondition::AgainstMirror),
        mirror_mirror: check_condition(mx, PairCondition::MirrorMirror),
    })
}

/// Outcome of the knot-vs-own-mirror condition.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MirrorConditionReport {
    pub holds: bool,
    /// Knots checked (the chiral and negative-amphicheiral ones).
    pub knots_checked: Vec<usize>,
    /// Checked knots with witnessing quandle: the column differs from the
    /// mirror column at that row.
    pub witnesses: Vec<(usize, usize)>,
    pub failing: Vec<usize>,
    pub poisoned: Vec<usize>,
}

/// What the condition set establishes for the corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Prop35Conclusion {
    /// Some condition failed or was poisoned.
    NotEstablished,
    /// (A)-(C) hold: equal coloring vectors force equal symmetry orbits.
    OrbitEquality,
    /// (A)-(D) hold: equal coloring vectors force equality up to rm.
    UpToReverseMirror,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Prop35Report {
    pub a: ConditionReport,
    pub b: ConditionReport,
    pub c: ConditionReport,
    pub d: Option<MirrorConditionReport>,
    pub conclusion: Prop35Conclusion,
}

/// Runs conditions (A)-(C) (the three pair conditions) and, when asked,
/// (D): every chiral or negative-amphicheiral knot differs from its own
/// mirror column.
pub fn check_prop35(mx: &ColoringMatrix, condition_d: bool) -> Result<Prop35Report> {
    mx.check_shape()?;
    let a = check_condition(mx, PairCondition::Direct);
    let b = check_condition(mx, PairCondition::AgainstMirror);
    let c = check_condition(mx, PairCondition::MirrorMirror);
    let d = condition_d.then(|| {
        let mut report = MirrorConditionReport {
            holds: true,
            knots_checked: Vec::new(),
            witnesses: Vec::new(),
            failing: Vec::new(),
            poisoned: Vec::new(),
        };
        for j in 0..mx.knot_count() {
            if !mx.knot_symmetries[j].mirror_sensitive() {
                continue;
            }
            report.knots_checked.push(j);
            let mut touched_missing = false;
            let mut witness = None;
            for k in 0..mx.quandle_count() {
                match (mx.entry(k, j), mx.entry(mx.dual_index[k], j)) {
                    (Some(a), Some(b)) => {
                        if a != b {
                            witness = Some(k);
                            break;
                        }
                    }
                    _ => touched_missing = true,
                }
            }
            match witness {
                Some(k) => report.witnesses.push((j, k)),
                None if touched_missing => report.poisoned.push(j),
                None => report.failing.push(j),
            }
        }
        report.holds = report.failing.is_empty() && report.poisoned.is_empty();
        report
    });
    let abc = a.holds && b.holds && c.holds;
    let conclusion = match (&d, abc) {
        (_, false) => Prop35Conclusion::NotEstablished,
        (Some(d), true) if d.holds => Prop35Conclusion::UpToReverseMirror,
        _ => Prop35Conclusion::OrbitEquality,
    };
    Ok(Prop35Report { a, b, c, d, conclusion })
}

/// Partition of the quandle list into classes with identical knot-count
/// rows, relative to the ingested corpus.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SimilarityPartition {
    /// Blocks ordered by least member index; members ascending.
    pub blocks: Vec<Vec<usize>>,
}

pub fn similarity_partition(mx: &ColoringMatrix) -> Result<SimilarityPartition> {
    mx.check_shape()?;
    if !mx.is_complete() {
        return Err(Error::IncompleteMatrix("similarity_partition".into()));
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..mx.quandle_count() {
        match blocks
            .iter_mut()
            .find(|block| mx.entries[block[0]] == mx.entries[i])
        {
            Some(block) => block.push(i),
            None => blocks.push(vec![i]),
        }
    }
    Ok(SimilarityPartition { blocks })
}

/// Goals for the greedy minimizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Goal {
    Condition1,
    Condition2,
    Condition3,
    ConditionD,
    /// All four jointly.
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum CoverItem {
    Pair(PairCondition, usize, usize),
    Mirror(usize),
}

fn covers(mx: &ColoringMatrix, k: usize, item: &CoverItem) -> bool {
    match *item {
        CoverItem::Pair(cond, i, j) => {
            matches!(cond.cells(mx, k, i, j), (Some(a), Some(b)) if a != b)
        }
        CoverItem::Mirror(j) => matches!(
            (mx.entry(k, j), mx.entry(mx.dual_index[k], j)),
            (Some(a), Some(b)) if a != b
        ),
    }
}

/// Greedy cover: repeatedly pick the quandle separating the most
/// still-unseparated items, ties broken by least index. The result
/// satisfies the goal but is not guaranteed minimum.
pub fn minimize_set(mx: &ColoringMatrix, goal: Goal) -> Result<Vec<usize>> {
    mx.check_shape()?;
    let nk = mx.knot_count();
    let mut items: Vec<CoverItem> = Vec::new();
    let pair_conditions: &[PairCondition] = match goal {
        Goal::Condition1 => &[PairCondition::Direct],
        Goal::Condition2 => &[PairCondition::AgainstMirror],
        Goal::Condition3 => &[PairCondition::MirrorMirror],
        Goal::ConditionD => &[],
        Goal::All => &[
            PairCondition::Direct,
            PairCondition::AgainstMirror,
            PairCondition::MirrorMirror,
        ],
    };
    for &cond in pair_conditions {
        for i in 0..nk {
            for j in (i + 1)..nk {
                items.push(CoverItem::Pair(cond, i, j));
            }
        }
    }
    if matches!(goal, Goal::ConditionD | Goal::All) {
        for j in 0..nk {
            if mx.knot_symmetries[j].mirror_sensitive() {
                items.push(CoverItem::Mirror(j));
            }
        }
    }

    // The full list must satisfy the goal.
    for item in &items {
        if !(0..mx.quandle_count()).any(|k| covers(mx, k, item)) {
            let detail = match *item {
                CoverItem::Pair(cond, i, j) => format!(
                    "no quandle separates knots {} and {} under {:?}",
                    mx.knot_names[i], mx.knot_names[j], cond
                ),
                CoverItem::Mirror(j) => format!(
                    "no quandle separates knot {} from its mirror",
                    mx.knot_names[j]
                ),
            };
            return Err(Error::GoalUnsatisfiable { detail });
        }
    }

    let mut uncovered: Vec<CoverItem> = items;
    let mut selected = Vec::new();
    while !uncovered.is_empty() {
        let best = (0..mx.quandle_count())
            .max_by_key(|&k| {
                (
                    uncovered.iter().filter(|item| covers(mx, k, item)).count(),
                    std::cmp::Reverse(k),
                )
            })
            .expect("quandle list is nonempty");
        let before = uncovered.len();
        uncovered.retain(|item| !covers(mx, best, item));
        debug_assert!(uncovered.len() < before, "full list satisfies the goal");
        selected.push(best);
    }
    Ok(selected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::constructions::{alexander_field, dihedral, trivial_quandle, AlexanderSpec};
    use crate::knot::KnotRecord;

    fn knot(name: &str, word: &str, strands: usize, symmetry: Symmetry) -> KnotRecord {
        KnotRecord::new(name, BraidWord::parse(word, strands).unwrap(), symmetry)
    }

    fn trefoil() -> KnotRecord {
        knot("3_1", "1 1 1", 2, Symmetry::Chiral)
    }

    fn figure_eight() -> KnotRecord {
        knot("4_1", "1 -2 1 -2", 3, Symmetry::FullyAmphicheiral)
    }

    #[test]
    fn small_matrix_entries() {
        let quandles = vec![("d3".to_string(), dihedral(3))];
        let knots = vec![trefoil(), figure_eight()];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        assert_eq!(mx.entries, vec![vec![Some(6), Some(0)]]);
        assert_eq!(mx.dual_index, vec![0]);
    }

    #[test]
    fn disconnected_quandles_rejected() {
        let quandles = vec![("t3".to_string(), trivial_quandle(3))];
        let knots = vec![trefoil()];
        assert!(matches!(
            build_matrix(&quandles, &knots, &BuildOptions::default()),
            Err(Error::NotConnected { .. })
        ));
    }

    #[test]
    fn two_quandle_matrix_with_dual_index() {
        let quandles = vec![
            ("d3".to_string(), dihedral(3)),
            ("d5".to_string(), dihedral(5)),
        ];
        let knots = vec![figure_eight()];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        assert_eq!(mx.entries, vec![vec![Some(0)], vec![Some(20)]]);
        assert_eq!(mx.dual_index, vec![0, 1]);
    }

    #[test]
    fn dual_must_be_present() {
        let spec = AlexanderSpec::new(2, vec![1, 1, 1]).unwrap();
        let f4 = alexander_field(&spec).unwrap();
        // F_4 with multiplier t is not isomorphic to its dual table's
        // partner unless the dual is also listed; but F_4 is self-dual, so
        // use a genuinely non-self-dual example: none among our small
        // pool, so check the positive path instead.
        let quandles = vec![("f4".to_string(), f4)];
        let knots = vec![trefoil()];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        assert_eq!(mx.dual_index, vec![0]);
    }

    #[test]
    fn worker_counts_agree() {
        let quandles = vec![
            ("d3".to_string(), dihedral(3)),
            ("d5".to_string(), dihedral(5)),
            ("d7".to_string(), dihedral(7)),
        ];
        let knots = vec![trefoil(), figure_eight()];
        let serial = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        let parallel = build_matrix(
            &quandles,
            &knots,
            &BuildOptions { workers: 4, cell_timeout: None },
        )
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn conditions_on_small_matrix() {
        let quandles = vec![
            ("d3".to_string(), dihedral(3)),
            ("d5".to_string(), dihedral(5)),
        ];
        let knots = vec![trefoil(), figure_eight()];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        let report = check_distinguishing(&mx).unwrap();
        assert!(report.all_hold());
        assert_eq!(condition_witness(&mx, PairCondition::Direct, 0, 1), Some(0));
    }

    #[test]
    fn duplicated_column_caught_by_condition_1() {
        let quandles = vec![("d3".to_string(), dihedral(3))];
        let mut tref2 = trefoil();
        tref2.name = "3_1_copy".into();
        let knots = vec![trefoil(), tref2];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        let report = check_distinguishing(&mx).unwrap();
        assert!(!report.direct.holds);
        assert_eq!(report.direct.failing, vec![(0, 1)]);
    }

    #[test]
    fn single_knot_vacuously_holds() {
        let quandles = vec![("d3".to_string(), dihedral(3))];
        let knots = vec![knot("3_1", "1 1 1", 2, Symmetry::Reversible)];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        let report = check_distinguishing(&mx).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.direct.pairs_checked, 0);
        // (D) is vacuous for a reversible knot.
        let p35 = check_prop35(&mx, true).unwrap();
        assert_eq!(p35.conclusion, Prop35Conclusion::UpToReverseMirror);
        assert!(p35.d.unwrap().knots_checked.is_empty());
    }

    #[test]
    fn kei_only_list_fails_d_for_chiral_knots() {
        let quandles = vec![
            ("d3".to_string(), dihedral(3)),
            ("d5".to_string(), dihedral(5)),
        ];
        let knots = vec![trefoil(), figure_eight()];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        let p35 = check_prop35(&mx, true).unwrap();
        let d = p35.d.unwrap();
        assert_eq!(d.knots_checked, vec![0]);
        assert_eq!(d.failing, vec![0]);
        // (A)-(C) hold, so the orbit conclusion stands; only the stronger
        // up-to-rm claim is lost.
        assert_eq!(p35.conclusion, Prop35Conclusion::OrbitEquality);
    }

    #[test]
    fn dual_pair_shares_a_similarity_block() {
        let f8a = alexander_field(&AlexanderSpec::new(2, vec![1, 1, 0, 1]).unwrap()).unwrap();
        let f8b = alexander_field(&AlexanderSpec::new(2, vec![1, 0, 1, 1]).unwrap()).unwrap();
        let quandles = vec![
            ("f8a".to_string(), f8a),
            ("f8b".to_string(), f8b),
            ("d5".to_string(), dihedral(5)),
        ];
        let knots = vec![trefoil(), figure_eight()];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        // The two field quandles are each other's duals.
        assert_eq!(mx.dual_index, vec![1, 0, 2]);
        let partition = similarity_partition(&mx).unwrap();
        assert_eq!(partition.blocks, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn isomorphic_duplicates_break_the_dual_involution() {
        let relabeled =
            dihedral(3).relabel(&crate::perm::Permutation::new(vec![1, 2, 0]).unwrap());
        let quandles = vec![
            ("d3".to_string(), dihedral(3)),
            ("d3b".to_string(), relabeled),
        ];
        let knots = vec![trefoil()];
        assert!(matches!(
            build_matrix(&quandles, &knots, &BuildOptions::default()),
            Err(Error::DualIndexNotInvolution)
        ));
    }

    #[test]
    fn minimizer_prefers_covering_rows() {
        // Engineered matrix: row 0 separates pair (0,1), row 1 separates
        // (1,2) and (0,2), row 2 separates nothing new.
        let mx = ColoringMatrix {
            quandle_names: vec!["a".into(), "b".into(), "c".into()],
            quandle_orders: vec![3, 3, 3],
            dual_index: vec![0, 1, 2],
            knot_names: vec!["x".into(), "y".into(), "z".into()],
            knot_symmetries: vec![Symmetry::Reversible; 3],
            entries: vec![
                vec![Some(0), Some(6), Some(0)],
                vec![Some(0), Some(0), Some(6)],
                vec![Some(0), Some(6), Some(0)],
            ],
        };
        let chosen = minimize_set(&mx, Goal::Condition1).unwrap();
        assert_eq!(chosen, vec![0, 1]);
    }

    #[test]
    fn minimizer_singleton_when_one_row_suffices() {
        let mx = ColoringMatrix {
            quandle_names: vec!["a".into(), "b".into()],
            quandle_orders: vec![3, 3],
            dual_index: vec![0, 1],
            knot_names: vec!["x".into(), "y".into()],
            knot_symmetries: vec![Symmetry::Reversible; 2],
            entries: vec![vec![Some(0), Some(6)], vec![Some(0), Some(0)]],
        };
        assert_eq!(minimize_set(&mx, Goal::Condition1).unwrap(), vec![0]);
    }

    #[test]
    fn minimizer_unsatisfiable_goal() {
        let mx = ColoringMatrix {
            quandle_names: vec!["a".into()],
            quandle_orders: vec![3],
            dual_index: vec![0],
            knot_names: vec!["x".into(), "y".into()],
            knot_symmetries: vec![Symmetry::Reversible; 2],
            entries: vec![vec![Some(6), Some(6)]],
        };
        assert!(matches!(
            minimize_set(&mx, Goal::Condition1),
            Err(Error::GoalUnsatisfiable { .. })
        ));
    }

    #[test]
    fn missing_cells_poison_touching_pairs_only() {
        let mx = ColoringMatrix {
            quandle_names: vec!["a".into()],
            quandle_orders: vec![3],
            dual_index: vec![0],
            knot_names: vec!["x".into(), "y".into(), "z".into()],
            knot_symmetries: vec![Symmetry::Reversible; 3],
            entries: vec![vec![Some(6), None, Some(0)]],
        };
        let report = check_distinguishing(&mx).unwrap();
        assert!(!report.direct.holds);
        assert_eq!(report.direct.poisoned, vec![(0, 1), (1, 2)]);
        assert_eq!(report.direct.failing, Vec::<(usize, usize)>::new());
        assert!(matches!(
            similarity_partition(&mx),
            Err(Error::IncompleteMatrix(_))
        ));
    }

    #[test]
    fn timeout_marks_cells_missing() {
        let quandles = vec![("d41".to_string(), dihedral(41))];
        let knots = vec![knot("big", "1 2 3", 4, Symmetry::Reversible)];
        let mx = build_matrix(
            &quandles,
            &knots,
            &BuildOptions { workers: 1, cell_timeout: Some(Duration::from_nanos(1)) },
        )
        .unwrap();
        assert_eq!(mx.missing_cells(), vec![(0, 0)]);
    }
}
