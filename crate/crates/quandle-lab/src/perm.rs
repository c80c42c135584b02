//! Permutations and naive permutation-group closure.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` in image notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// Builds a permutation from its image vector, checking bijectivity.
    pub fn new(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// Composition "self then other": `x -> other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self
            .images
            .iter()
            .map(|&v| other.images[v as usize])
            .collect();
        Permutation { images }
    }

    /// Sorted cycle lengths, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable();
        lens
    }
}

/// A permutation group materialized as its full element set.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    /// Closure elements in breadth-first discovery order from the identity,
    /// generators applied in index order.
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Breadth-first closure of `generators` under composition.
    ///
    /// Returns an error once more than `cap` elements are discovered.
    pub fn closure(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        for g in &generators {
            debug_assert_eq!(g.degree(), degree);
        }
        let id = Permutation::identity(degree);
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        let mut elements = vec![id.clone()];
        index.insert(id, 0);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            head += 1;
            for g in &generators {
                let next = current.then(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// True iff the group acts transitively on `{0, .., degree-1}`.
    pub fn is_transitive(&self) -> bool {
        orbit(self.degree, &self.generators, 0).len() == self.degree
    }
}

/// Orbit of `start` under the group generated by `generators`, computed by
/// BFS over the generators alone (sufficient for finite groups).
pub fn orbit(degree: usize, generators: &[Permutation], start: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    let mut queue = vec![start];
    seen[start] = true;
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for g in generators {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    queue
}
