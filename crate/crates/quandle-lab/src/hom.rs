//! Quandle homomorphisms: generating sets, a backtracking search engine,
//! isomorphism testing, and exhaustive homomorphism enumeration.

use crate::error::{Error, Result};
use crate::quandle::QuandleTable;

/// Default branch-count cap for homomorphism enumeration.
pub const DEFAULT_HOM_SEARCH_CAP: u128 = 100_000_000;

/// A quandle homomorphism `f: domain -> codomain`, stored with its tables.
///
/// The defining identity `f(a * b) = f(a) *' f(b)` is checked at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuandleHom {
    domain: QuandleTable,
    codomain: QuandleTable,
    map: Vec<u16>,
}

impl QuandleHom {
    pub fn new(domain: QuandleTable, codomain: QuandleTable, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(Error::NotSquare { rows: domain.order(), row: 0, len: map.len() });
        }
        for &v in &map {
            if v >= codomain.order() {
                return Err(Error::ElementOutOfRange { value: v, n: codomain.order() });
            }
        }
        for a in 0..domain.order() {
            for b in 0..domain.order() {
                if map[domain.op(a, b)] != codomain.op(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(QuandleHom {
            domain,
            codomain,
            map: map.into_iter().map(|v| v as u16).collect(),
        })
    }

    pub fn domain(&self) -> &QuandleTable {
        &self.domain
    }

    pub fn codomain(&self) -> &QuandleTable {
        &self.codomain
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.codomain.order()];
        for &v in &self.map {
            hit[v as usize] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_surjective()
    }
}

/// Canonical generating sequence of a quandle: repeatedly adjoin the least
/// element outside the subquandle generated so far.
pub fn generating_set(q: &QuandleTable) -> Vec<usize> {
    let n = q.order();
    let mut gens = Vec::new();
    let mut generated = vec![false; n];
    let mut members: Vec<usize> = Vec::new();
    let mut head = 0;
    while let Some(next) = (0..n).find(|&x| !generated[x]) {
        gens.push(next);
        generated[next] = true;
        members.push(next);
        // Worklist closure under * in both operand orders.
        while head < members.len() {
            let x = members[head];
            head += 1;
            for idx in 0..members.len() {
                let y = members[idx];
                for v in [q.op(x, y), q.op(y, x)] {
                    if !generated[v] {
                        generated[v] = true;
                        members.push(v);
                    }
                }
            }
        }
    }
    gens
}

struct HomSearch<'a> {
    q1: &'a QuandleTable,
    q0: &'a QuandleTable,
    gens: Vec<usize>,
    bijective: bool,
    /// For bijective search: cycle-type class id per element, in both
    /// quandles; an element may only map to one with the same class.
    class1: Vec<usize>,
    class0: Vec<usize>,
}

enum SearchOutcome {
    FoundFirst(Vec<usize>),
    Exhausted(Vec<Vec<usize>>),
}

impl<'a> HomSearch<'a> {
    fn new(q1: &'a QuandleTable, q0: &'a QuandleTable, bijective: bool) -> Self {
        let (class1, class0) = if bijective {
            cycle_type_classes(q1, q0)
        } else {
            (vec![0; q1.order()], vec![0; q0.order()])
        };
        HomSearch { q1, q0, gens: generating_set(q1), bijective, class1, class0 }
    }

    /// Runs the backtracking search. `first_only` stops at the first
    /// complete homomorphism (images tried in increasing order, so the
    /// witness is the lexicographically least on the generator images).
    fn run(&self, first_only: bool) -> SearchOutcome {
        let n1 = self.q1.order();
        let mut map = vec![u16::MAX; n1];
        let mut used = vec![false; self.q0.order()];
        let mut found = Vec::new();
        self.descend(0, &mut map, &mut used, first_only, &mut found);
        if first_only {
            match found.into_iter().next() {
                Some(m) => SearchOutcome::FoundFirst(m),
                None => SearchOutcome::Exhausted(Vec::new()),
            }
        } else {
            SearchOutcome::Exhausted(found)
        }
    }

    fn descend(
        &self,
        gen_idx: usize,
        map: &mut [u16],
        used: &mut [bool],
        first_only: bool,
        found: &mut Vec<Vec<usize>>,
    ) -> bool {
        if gen_idx == self.gens.len() {
            debug_assert!(map.iter().all(|&v| v != u16::MAX), "generators generate");
            if self.bijective {
                let mut hit = vec![false; self.q0.order()];
                for &v in map.iter() {
                    if hit[v as usize] {
                        return false;
                    }
                    hit[v as usize] = true;
                }
            }
            found.push(map.iter().map(|&v| v as usize).collect());
            return first_only;
        }
        let g = self.gens[gen_idx];
        for image in 0..self.q0.order() {
            if self.bijective
                && (used[image] || self.class1[g] != self.class0[image])
            {
                continue;
            }
            let mut trail = Vec::new();
            if self.assign_and_propagate(g, image, map, used, &mut trail)
                && self.descend(gen_idx + 1, map, used, first_only, found) {
                    return true;
                }
            for x in trail {
                used[map[x] as usize] = false;
                map[x] = u16::MAX;
            }
        }
        false
    }

    /// Assigns `map[g] = image` and closes under the homomorphism identity.
    /// Records every newly assigned element in `trail` for backtracking.
    /// Returns false on inconsistency (the trail is still valid to undo).
    fn assign_and_propagate(
        &self,
        g: usize,
        image: usize,
        map: &mut [u16],
        used: &mut [bool],
        trail: &mut Vec<usize>,
    ) -> bool {
        if map[g] != u16::MAX {
            return map[g] as usize == image;
        }
        if self.bijective && (used[image] || self.class1[g] != self.class0[image]) {
            return false;
        }
        map[g] = image as u16;
        used[image] = true;
        trail.push(g);
        let mut head = trail.len() - 1;
        // Worklist: every freshly assigned x is paired against everything
        // assigned so far.
        while head < trail.len() {
            let x = trail[head];
            head += 1;
            let assigned: Vec<usize> =
                (0..self.q1.order()).filter(|&y| map[y] != u16::MAX).collect();
            for y in assigned {
                for (z, fz) in [
                    (self.q1.op(x, y), self.q0.op(map[x] as usize, map[y] as usize)),
                    (self.q1.op(y, x), self.q0.op(map[y] as usize, map[x] as usize)),
                ] {
                    if map[z] != u16::MAX {
                        if map[z] as usize != fz {
                            return false;
                        }
                    } else {
                        if self.bijective
                            && (used[fz] || self.class1[z] != self.class0[fz])
                        {
                            return false;
                        }
                        map[z] = fz as u16;
                        used[fz] = true;
                        trail.push(z);
                    }
                }
            }
        }
        true
    }
}

/// Partitions elements of both quandles by the cycle type of their right
/// translation, with matching class ids. Returns dummy classes mapping
/// nothing together if the cycle-type multisets differ (the caller treats
/// that as an early non-isomorphism exit).
fn cycle_type_classes(q1: &QuandleTable, q0: &QuandleTable) -> (Vec<usize>, Vec<usize>) {
    use std::collections::HashMap;
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut class_of = |q: &QuandleTable| -> Vec<usize> {
        (0..q.order())
            .map(|a| {
                let ct = q.right_translation(a).expect("in range").cycle_type();
                let next = ids.len();
                *ids.entry(ct).or_insert(next)
            })
            .collect()
    };
    let c1 = class_of(q1);
    let c0 = class_of(q0);
    (c1, c0)
}

/// Searches for a quandle isomorphism `q1 -> q2`.
///
/// Backtracks over images of a canonical generating set, pruning by the
/// cycle types of right translations. Deterministic: candidate images are
/// tried in increasing order, so the returned witness is the
/// lexicographically least on the generator images.
pub fn find_isomorphism(q1: &QuandleTable, q2: &QuandleTable) -> Option<QuandleHom> {
    if q1.order() != q2.order() {
        return None;
    }
    let profile = |q: &QuandleTable| {
        let mut p: Vec<Vec<usize>> = (0..q.order())
            .map(|a| q.right_translation(a).expect("in range").cycle_type())
            .collect();
        p.sort();
        p
    };
    if profile(q1) != profile(q2) {
        return None;
    }
    let search = HomSearch::new(q1, q2, true);
    match search.run(true) {
        SearchOutcome::FoundFirst(map) => Some(
            QuandleHom::new(q1.clone(), q2.clone(), map)
                .expect("search output satisfies the homomorphism identity"),
        ),
        SearchOutcome::Exhausted(_) => None,
    }
}

/// Enumerates all homomorphisms `q1 -> q0` (or only the surjective ones),
/// in lexicographic order of the generator images.
pub fn enumerate_homs(
    q1: &QuandleTable,
    q0: &QuandleTable,
    onto_only: bool,
) -> Result<Vec<QuandleHom>> {
    let gens = generating_set(q1);
    let branches = (q0.order() as u128).checked_pow(gens.len() as u32);
    match branches {
        Some(b) if b <= DEFAULT_HOM_SEARCH_CAP => {}
        _ => {
            return Err(Error::SearchCapExceeded {
                detail: format!(
                    "{} generator images over {} candidates",
                    gens.len(),
                    q0.order()
                ),
            })
        }
    }
    let search = HomSearch::new(q1, q0, false);
    let maps = match search.run(false) {
        SearchOutcome::Exhausted(maps) => maps,
        SearchOutcome::FoundFirst(_) => unreachable!("first_only = false"),
    };
    let mut homs = Vec::new();
    for map in maps {
        let hom = QuandleHom::new(q1.clone(), q0.clone(), map)
            .expect("search output satisfies the homomorphism identity");
        if !onto_only || hom.is_surjective() {
            homs.push(hom);
        }
    }
    Ok(homs)
}
