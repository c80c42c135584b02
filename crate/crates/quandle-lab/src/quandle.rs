//! Quandle tables: validation, translations, inner group, dual, product,
//! and structural property predicates.

use crate::error::{AxiomViolation, Error, Result};
use crate::hom::find_isomorphism;
use crate::perm::{orbit, PermGroup, Permutation};

/// Default cap on the materialized inner-group closure.
pub const DEFAULT_INNER_GROUP_CAP: usize = 10_000_000;
/// Default cap on the order of a product quandle.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

/// An order-`n` quandle given by its full multiplication table.
///
/// Entry `(i, j)` of the table is `i * j`. Elements are the 0-based indices
/// `0, .., n-1`; file I/O converts to the 1-based convention.
///
/// A `QuandleTable` always satisfies the three quandle axioms:
/// construction goes through [`QuandleTable::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuandleTable {
    n: usize,
    /// Row-major cells: `cells[i * n + j] = i * j`.
    cells: Vec<u16>,
}

/// Structural predicates of a quandle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct PropertyRecord {
    pub connected: bool,
    pub latin: bool,
    pub kei: bool,
    pub faithful: bool,
    pub self_dual: bool,
}

impl QuandleTable {
    /// Validates a raw square table against the three quandle axioms.
    ///
    /// On failure, every violated axiom instance is reported with its
    /// witnessing indices.
    pub fn validate(raw: &[Vec<usize>]) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        if n > u16::MAX as usize {
            return Err(Error::OrderTooLarge { n, max: u16::MAX as usize });
        }
        for (i, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, row: i, len: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange { row: i, col: j, value: v, n });
                }
            }
        }
        let mut cells = Vec::with_capacity(n * n);
        for row in raw {
            cells.extend(row.iter().map(|&v| v as u16));
        }
        let q = QuandleTable { n, cells };
        let violations = q.axiom_violations();
        if violations.is_empty() {
            Ok(q)
        } else {
            Err(Error::Axioms(violations))
        }
    }

    /// Builds a table from a closure without axiom checks; used internally
    /// by constructors whose output is validated by the caller or by tests.
    pub(crate) fn from_fn_unchecked(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                cells.push(f(i, j) as u16);
            }
        }
        QuandleTable { n, cells }
    }

    /// Builds and validates a table from a closure.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::validate(&rows)
    }

    fn axiom_violations(&self) -> Vec<AxiomViolation> {
        let n = self.n;
        let mut violations = Vec::new();
        for a in 0..n {
            if self.op(a, a) != a {
                violations.push(AxiomViolation::Idempotence { a });
            }
        }
        for col in 0..n {
            let mut first = vec![usize::MAX; n];
            for a in 0..n {
                let v = self.op(a, col);
                if first[v] != usize::MAX {
                    violations.push(AxiomViolation::RightInvertibility { col, a: first[v], b: a });
                } else {
                    first[v] = a;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(self.op(a, c), self.op(b, c)) {
                        violations.push(AxiomViolation::Distributivity { a, b, c });
                    }
                }
            }
        }
        violations
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The quandle operation `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.op(i, j)).collect())
            .collect()
    }

    /// The right translation `x -> x * a`, a permutation by Axiom 2.
    pub fn right_translation(&self, a: usize) -> Result<Permutation> {
        if a >= self.n {
            return Err(Error::ElementOutOfRange { value: a, n: self.n });
        }
        let images = (0..self.n).map(|x| self.op(x, a) as u16).collect();
        Ok(Permutation::new(images).expect("axiom 2 guarantees a bijection"))
    }

    /// The left translation `x -> a * x`; a permutation iff the quandle is
    /// Latin, so this returns the raw image vector.
    pub fn left_translation(&self, a: usize) -> Result<Vec<usize>> {
        if a >= self.n {
            return Err(Error::ElementOutOfRange { value: a, n: self.n });
        }
        Ok((0..self.n).map(|x| self.op(a, x)).collect())
    }

    fn translations(&self) -> Vec<Permutation> {
        (0..self.n)
            .map(|a| self.right_translation(a).expect("element in range"))
            .collect()
    }

    /// The inner automorphism group: the closure of all right translations.
    pub fn inner_group(&self, cap: usize) -> Result<PermGroup> {
        PermGroup::closure(self.n, self.translations(), cap)
    }

    /// True iff the inner group acts transitively, computed by orbit BFS
    /// over the translation generators without materializing the group.
    pub fn is_connected(&self) -> bool {
        orbit(self.n, &self.translations(), 0).len() == self.n
    }

    /// The dual quandle: entry `(i, j)` is the unique `a` with `a * j = i`.
    pub fn dual(&self) -> QuandleTable {
        let n = self.n;
        let mut cells = vec![0u16; n * n];
        for j in 0..n {
            for a in 0..n {
                let i = self.op(a, j);
                cells[i * n + j] = a as u16;
            }
        }
        QuandleTable { n, cells }
    }

    /// Componentwise product quandle on pairs `(i, j) -> i * |Q2| + j`.
    pub fn product(q1: &QuandleTable, q2: &QuandleTable, cap: usize) -> Result<QuandleTable> {
        let order = q1.n.saturating_mul(q2.n);
        if order > cap {
            return Err(Error::ProductCapExceeded { order, cap });
        }
        let n2 = q2.n;
        Ok(QuandleTable::from_fn_unchecked(order, |a, b| {
            let (a1, a2) = (a / n2, a % n2);
            let (b1, b2) = (b / n2, b % n2);
            q1.op(a1, b1) * n2 + q2.op(a2, b2)
        }))
    }

    /// Relabels the quandle along a permutation `p`: the image table has
    /// `p(a) *' p(b) = p(a * b)`. Always a quandle again.
    pub fn relabel(&self, p: &Permutation) -> QuandleTable {
        debug_assert_eq!(p.degree(), self.n);
        let inv = p.inverse();
        QuandleTable::from_fn_unchecked(self.n, |a, b| {
            p.apply(self.op(inv.apply(a), inv.apply(b)))
        })
    }

    /// True iff every left translation is also a bijection.
    pub fn is_latin(&self) -> bool {
        let n = self.n;
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.fill(false);
            for v in self.left_translation(a).expect("in range") {
                if seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        true
    }

    /// True iff every right translation is an involution.
    pub fn is_kei(&self) -> bool {
        (0..self.n).all(|a| {
            let r = self.right_translation(a).expect("in range");
            r.then(&r).is_identity()
        })
    }

    /// True iff distinct elements have distinct right translations.
    pub fn is_faithful(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.translations().into_iter().all(|r| seen.insert(r))
    }

    /// True iff the quandle is isomorphic to its dual.
    pub fn is_self_dual(&self) -> bool {
        find_isomorphism(self, &self.dual()).is_some()
    }

    /// All property predicates at once.
    pub fn properties(&self) -> PropertyRecord {
        PropertyRecord {
            connected: self.is_connected(),
            latin: self.is_latin(),
            kei: self.is_kei(),
            faithful: self.is_faithful(),
            self_dual: self.is_self_dual(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral, trivial_quandle};

    #[test]
    fn dihedral_3_is_valid() {
        let raw: Vec<Vec<usize>> = (0..3)
            .map(|i| (0..3).map(|j| (2 * j + 2 * 3 - i) % 3).collect())
            .collect();
        let q = QuandleTable::validate(&raw).unwrap();
        assert_eq!(q.order(), 3);
    }

    #[test]
    fn trivial_4_is_valid() {
        let raw: Vec<Vec<usize>> = (0..4).map(|i| vec![i; 4]).collect();
        assert!(QuandleTable::validate(&raw).is_ok());
    }

    #[test]
    fn z3_addition_fails_idempotence() {
        let raw: Vec<Vec<usize>> = (0..3)
            .map(|i| (0..3).map(|j| (i + j) % 3).collect())
            .collect();
        match QuandleTable::validate(&raw) {
            Err(Error::Axioms(violations)) => {
                assert!(violations.contains(&AxiomViolation::Idempotence { a: 1 }));
            }
            other => panic!("expected axiom violations, got {other:?}"),
        }
    }

    #[test]
    fn shape_and_range_errors() {
        assert!(matches!(
            QuandleTable::validate(&[vec![0, 1], vec![0]]),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            QuandleTable::validate(&[vec![0, 7], vec![1, 1]]),
            Err(Error::EntryOutOfRange { .. })
        ));
        assert!(matches!(QuandleTable::validate(&[]), Err(Error::EmptyTable)));
    }

    #[test]
    fn singleton_accepted() {
        let q = QuandleTable::validate(&[vec![0]]).unwrap();
        assert_eq!(q.order(), 1);
        assert!(q.is_connected());
    }

    #[test]
    fn right_translations_of_dihedral_3() {
        let q = dihedral(3);
        assert_eq!(q.right_translation(0).unwrap().images(), &[0, 2, 1]);
        assert_eq!(q.right_translation(1).unwrap().images(), &[2, 1, 0]);
        assert!(q.right_translation(3).is_err());
    }

    #[test]
    fn trivial_translations_are_identity() {
        let q = trivial_quandle(4);
        assert!(q.right_translation(2).unwrap().is_identity());
    }

    #[test]
    fn inner_group_sizes() {
        assert_eq!(dihedral(3).inner_group(1000).unwrap().size(), 6);
        assert_eq!(dihedral(4).inner_group(1000).unwrap().size(), 4);
        assert_eq!(trivial_quandle(5).inner_group(1000).unwrap().size(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(dihedral(3).is_connected());
        assert!(!trivial_quandle(3).is_connected());
        assert!(!dihedral(4).is_connected());
    }

    #[test]
    fn dual_of_kei_is_itself() {
        let q = dihedral(3);
        assert_eq!(q.dual(), q);
        let t = trivial_quandle(4);
        assert_eq!(t.dual(), t);
    }

    #[test]
    fn dual_is_involution_and_valid() {
        for q in [dihedral(5), dihedral(6), trivial_quandle(3)] {
            let d = q.dual();
            assert!(QuandleTable::validate(&d.rows()).is_ok());
            assert_eq!(d.dual(), q);
        }
    }

    #[test]
    fn products() {
        let t2 = trivial_quandle(2);
        let t3 = trivial_quandle(3);
        let p = QuandleTable::product(&t2, &t3, DEFAULT_PRODUCT_CAP).unwrap();
        assert_eq!(p, trivial_quandle(6));

        let d3 = dihedral(3);
        let unit = trivial_quandle(1);
        assert_eq!(QuandleTable::product(&d3, &unit, 10).unwrap(), d3);

        // Products of connected quandles with componentwise operation stay
        // connected here: one translation already moves (0,0) anywhere.
        let p = QuandleTable::product(&d3, &d3, 100).unwrap();
        assert!(QuandleTable::validate(&p.rows()).is_ok());
        assert!(p.is_connected());

        assert!(matches!(
            QuandleTable::product(&d3, &d3, 8),
            Err(Error::ProductCapExceeded { order: 9, cap: 8 })
        ));
    }

    #[test]
    fn property_records() {
        let d3 = dihedral(3).properties();
        assert_eq!(
            d3,
            PropertyRecord { connected: true, latin: true, kei: true, faithful: true, self_dual: true }
        );
        let t3 = trivial_quandle(3).properties();
        assert_eq!(
            t3,
            PropertyRecord { connected: false, latin: false, kei: true, faithful: false, self_dual: true }
        );
    }

    #[test]
    fn orbit_connectivity_matches_full_group_transitivity() {
        for q in [dihedral(3), dihedral(4), dihedral(6), trivial_quandle(4)] {
            let g = q.inner_group(100_000).unwrap();
            assert_eq!(q.is_connected(), g.is_transitive());
        }
    }
}
