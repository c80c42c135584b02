//! Finite groups as explicit Cayley tables.
//!
//! All groups in scope have small order, so tables are validated in full
//! at construction (closure, associativity, identity, inverses).

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupModel {
    order: usize,
    /// Row-major: `mult[a * order + b] = a . b`.
    mult: Vec<u16>,
    inverse: Vec<u16>,
    identity: usize,
}

impl GroupModel {
    /// Validates a raw Cayley table as a group.
    pub fn from_cayley(raw: &[Vec<usize>]) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in raw.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, row: i, len: row.len() });
            }
            for &v in row {
                if v >= n {
                    return Err(Error::NotAGroup(format!("entry {v} out of range")));
                }
            }
        }
        // Identity: a two-sided unit.
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| raw[e][a] == a && raw[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        // Inverses.
        let mut inverse = vec![0u16; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| raw[a][b] == identity && raw[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverse[a] = inv as u16;
        }
        // Associativity.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if raw[raw[a][b]][c] != raw[a][raw[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut mult = Vec::with_capacity(n * n);
        for row in raw {
            mult.extend(row.iter().map(|&v| v as u16));
        }
        Ok(GroupModel { order: n, mult, inverse, identity })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mult.push(((a + b) % n) as u16);
            }
        }
        let inverse = (0..n).map(|a| ((n - a) % n) as u16).collect();
        GroupModel { order: n, mult, inverse, identity: 0 }
    }

    /// Direct product; pair `(a, b)` is encoded as `a * |B| + b`.
    pub fn direct_product(g1: &GroupModel, g2: &GroupModel) -> Self {
        let n = g1.order * g2.order;
        let n2 = g2.order;
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let prod = g1.op(a / n2, b / n2) * n2 + g2.op(a % n2, b % n2);
                mult.push(prod as u16);
            }
        }
        let inverse = (0..n)
            .map(|a| (g1.inv(a / n2) * n2 + g2.inv(a % n2)) as u16)
            .collect();
        GroupModel { order: n, mult, inverse, identity: g1.identity * n2 + g2.identity }
    }

    /// The symmetric group on `n` letters, elements ordered lexicographically
    /// by image vector. Intended for small `n` (the table has `(n!)^2` cells).
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=6).contains(&n), "symmetric group tables are for small n");
        let perms = all_permutations(n);
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let order = perms.len();
        let mut mult = Vec::with_capacity(order * order);
        for a in &perms {
            for b in &perms {
                // (a . b)(x) = a(b(x))
                let prod: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
                mult.push(index(&prod) as u16);
            }
        }
        let mut inverse = vec![0u16; order];
        for (i, a) in perms.iter().enumerate() {
            let mut inv = vec![0usize; n];
            for (x, &ax) in a.iter().enumerate() {
                inv[ax] = x;
            }
            inverse[i] = index(&inv) as u16;
        }
        let identity = index(&(0..n).collect());
        GroupModel { order, mult, inverse, identity }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian_witness().is_none()
    }

    /// A pair witnessing non-commutativity, if any.
    pub fn abelian_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if self.op(a, b) != self.op(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Integer scaling `k . a` in an additive reading of the group.
    pub fn scale(&self, k: i64, a: usize) -> usize {
        let mut base = if k < 0 { self.inv(a) } else { a };
        let mut times = k.unsigned_abs();
        let mut acc = self.identity;
        // Double-and-add.
        while times > 0 {
            if times & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            times >>= 1;
        }
        acc
    }

    /// Checks that the permutation is a group automorphism.
    pub fn check_automorphism(&self, f: &Permutation) -> Result<()> {
        if f.degree() != self.order {
            return Err(Error::NotAutomorphism { a: 0, b: 0 });
        }
        for a in 0..self.order {
            for b in 0..self.order {
                if f.apply(self.op(a, b)) != self.op(f.apply(a), f.apply(b)) {
                    return Err(Error::NotAutomorphism { a, b });
                }
            }
        }
        Ok(())
    }

    /// The conjugacy class of `seed`, sorted ascending.
    pub fn conjugacy_class(&self, seed: usize) -> Vec<usize> {
        let mut class: Vec<usize> = (0..self.order)
            .map(|g| self.op(self.op(self.inv(g), seed), g))
            .collect();
        class.sort_unstable();
        class.dedup();
        class
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.op(a, b)).collect())
            .collect()
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permute(&mut current, n, &mut out);
    out.sort();
    out
}

fn heap_permute(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..k {
        heap_permute(current, k - 1, out);
        if k.is_multiple_of(2) {
            current.swap(i, k - 1);
        } else {
            current.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_is_a_group() {
        let z6 = GroupModel::cyclic(6);
        assert!(GroupModel::from_cayley(&z6.rows()).is_ok());
        assert!(z6.is_abelian());
        assert_eq!(z6.scale(2, 4), 2);
        assert_eq!(z6.scale(-1, 2), 4);
    }

    #[test]
    fn symmetric_3() {
        let s3 = GroupModel::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(GroupModel::from_cayley(&s3.rows()).is_ok());
        assert!(!s3.is_abelian());
        // Transpositions form one class of size 3.
        let transposition = all_permutations(3)
            .iter()
            .position(|p| p == &vec![1, 0, 2])
            .unwrap();
        assert_eq!(s3.conjugacy_class(transposition).len(), 3);
    }

    #[test]
    fn rejects_non_groups() {
        // A Latin square that is not associative.
        let raw = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 2, 3, 4, 0],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 0, 1, 2],
            vec![4, 0, 1, 2, 3],
        ];
        assert!(GroupModel::from_cayley(&raw).is_ok()); // Z_5 is fine
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(GroupModel::from_cayley(&bad).is_err());
    }

    #[test]
    fn product_group() {
        let g = GroupModel::direct_product(&GroupModel::cyclic(2), &GroupModel::cyclic(2));
        assert!(GroupModel::from_cayley(&g.rows()).is_ok());
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        // Every element is its own inverse in Z_2 x Z_2.
        for a in 0..4 {
            assert_eq!(g.inv(a), a);
        }
    }
}
