//! The lifting invariant of a quandle homomorphism: the multiset of fiber
//! sizes of the induced map on coloring sets.

use std::collections::{BTreeMap, HashMap};

use crate::braid::BraidWord;
use crate::coloring::{fold_colorings_chunked, for_each_coloring};
use crate::error::Result;
use crate::hom::QuandleHom;

/// The multiset `{ [h_1, k_1], .., [h_n, k_n] }` of fiber sizes: `k_i`
/// codomain colorings each lift in exactly `h_i` ways.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LiftMultiset {
    /// Sorted by fiber size `h`; each `h` appears once.
    pairs: Vec<(u64, u64)>,
}

impl LiftMultiset {
    pub fn from_pairs(mut pairs: Vec<(u64, u64)>) -> Self {
        pairs.retain(|&(_, k)| k > 0);
        pairs.sort_unstable();
        LiftMultiset { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    /// Total multiplicity: the number of codomain colorings.
    pub fn codomain_total(&self) -> u64 {
        self.pairs.iter().map(|&(_, k)| k).sum()
    }

    /// Weighted sum: the number of domain colorings.
    pub fn domain_total(&self) -> u64 {
        self.pairs.iter().map(|&(h, k)| h * k).sum()
    }
}

impl std::fmt::Display for LiftMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.pairs.iter().map(|(h, k)| format!("[{h},{k}]")).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Computes the lifting invariant of `f` on the closure of `w`.
///
/// Domain colorings are streamed (fanned out over `workers`) and counted
/// into fibers keyed by their projection; a separate codomain enumeration
/// picks up the empty fibers. The result does not depend on the worker
/// count: per-chunk fiber maps are merged by summation.
pub fn col_f_with(
    f: &QuandleHom,
    w: &BraidWord,
    cap: u64,
    workers: usize,
) -> Result<LiftMultiset> {
    let chunk_maps = fold_colorings_chunked(
        f.domain(),
        w,
        cap,
        workers,
        HashMap::<Vec<u16>, u64>::new,
        |fibers, top| {
            let projected: Vec<u16> = top.iter().map(|&c| f.apply(c as usize) as u16).collect();
            *fibers.entry(projected).or_insert(0) += 1;
        },
    )?;
    let mut fibers: HashMap<Vec<u16>, u64> = HashMap::new();
    for map in chunk_maps {
        for (key, count) in map {
            *fibers.entry(key).or_insert(0) += count;
        }
    }
    let mut by_size: BTreeMap<u64, u64> = BTreeMap::new();
    let mut consumed = 0usize;
    for_each_coloring(f.codomain(), w, cap, |top| {
        let h = match fibers.get(top) {
            Some(&h) => {
                consumed += 1;
                h
            }
            None => 0,
        };
        *by_size.entry(h).or_insert(0) += 1;
    })?;
    debug_assert_eq!(
        consumed,
        fibers.len(),
        "every projected domain coloring is a codomain coloring"
    );
    Ok(LiftMultiset::from_pairs(by_size.into_iter().collect()))
}

pub fn col_f(f: &QuandleHom, w: &BraidWord, cap: u64) -> Result<LiftMultiset> {
    col_f_with(f, w, cap, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{abelian_extension, find_connected_extensions};
    use crate::coloring::{count_colorings, DEFAULT_ENUM_CAP};
    use crate::constructions::{alexander_field, dihedral, AlexanderSpec};
    use crate::quandle::{QuandleTable, DEFAULT_PRODUCT_CAP};

    fn trefoil() -> BraidWord {
        BraidWord::parse("1 1 1", 2).unwrap()
    }

    fn f4() -> QuandleTable {
        alexander_field(&AlexanderSpec::new(2, vec![1, 1, 1]).unwrap()).unwrap()
    }

    #[test]
    fn identity_lifts_uniquely() {
        let d3 = dihedral(3);
        let id = QuandleHom::new(d3.clone(), d3, (0..3).collect()).unwrap();
        let m = col_f(&id, &trefoil(), DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(m.pairs(), &[(1, 9)]);
    }

    #[test]
    fn product_projection_splits_evenly() {
        let q0 = f4();
        let d3 = dihedral(3);
        let q1 = QuandleTable::product(&q0, &d3, DEFAULT_PRODUCT_CAP).unwrap();
        // Pair (i, j) is encoded as i * 3 + j; the projection keeps i.
        let projection =
            QuandleHom::new(q1, q0.clone(), (0..12).map(|p| p / 3).collect()).unwrap();
        let m = col_f(&projection, &trefoil(), DEFAULT_ENUM_CAP).unwrap();
        // k = colorings by the codomain factor, h = colorings by the other.
        assert_eq!(m.pairs(), &[(9, 16)]);
        assert_eq!(m.codomain_total(), count_colorings(&q0, &trefoil(), 1).unwrap().total);
    }

    #[test]
    fn extension_projection_on_trefoil() {
        let base = f4();
        let phi = &find_connected_extensions(&base, 2).unwrap()[0];
        let ext = abelian_extension(phi);
        let m = phi.modulus() as usize;
        let projection =
            QuandleHom::new(ext.clone(), base.clone(), (0..ext.order()).map(|p| p / m).collect())
                .unwrap();
        assert!(projection.is_surjective());
        let lift = col_f(&projection, &trefoil(), DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(lift.pairs(), &[(0, 12), (2, 4)]);
        assert_eq!(lift.codomain_total(), 16);
        assert_eq!(lift.domain_total(), 8);
    }

    #[test]
    fn worker_count_does_not_change_the_multiset() {
        let base = f4();
        let phi = &find_connected_extensions(&base, 2).unwrap()[0];
        let ext = abelian_extension(phi);
        let m = phi.modulus() as usize;
        let projection =
            QuandleHom::new(ext.clone(), base, (0..ext.order()).map(|p| p / m).collect()).unwrap();
        let w = BraidWord::parse("1 1 1 2 -1 2", 3).unwrap();
        let reference = col_f(&projection, &w, DEFAULT_ENUM_CAP).unwrap();
        for workers in [2, 3, 8] {
            let lift = col_f_with(&projection, &w, DEFAULT_ENUM_CAP, workers).unwrap();
            assert_eq!(lift, reference);
        }
    }

    #[test]
    fn sum_identities() {
        let d3 = dihedral(3);
        let d9 = dihedral(9);
        // x -> x mod 3 is a homomorphism of dihedral quandles.
        let f = QuandleHom::new(d9.clone(), d3.clone(), (0..9).map(|x| x % 3).collect()).unwrap();
        for (text, strands) in [("1 1 1", 2), ("1 -2 1 -2", 3), ("1 1 1 1 1", 2)] {
            let w = BraidWord::parse(text, strands).unwrap();
            let lift = col_f(&f, &w, DEFAULT_ENUM_CAP).unwrap();
            assert_eq!(lift.codomain_total(), count_colorings(&d3, &w, 1).unwrap().total);
            assert_eq!(lift.domain_total(), count_colorings(&d9, &w, 1).unwrap().total);
        }
    }
}
