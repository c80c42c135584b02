//! Braid words whose closures present knots.

use crate::error::{Error, Result};

/// A word in the braid group on `strands` strands whose closure is a knot.
///
/// Letters are nonzero integers `e` with `|e| <= strands - 1`; positive `e`
/// is the generator acting on strand positions `|e|, |e|+1`, negative `e`
/// its inverse. Construction checks that the underlying strand permutation
/// of the closure is a single cycle, i.e. the closure is a knot rather than
/// a multi-component link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse { line: None, msg: "strand count must be >= 1".into() });
        }
        for &e in &word {
            let pos = e.unsigned_abs() as usize;
            if e == 0 || pos > strands - 1 {
                return Err(Error::LetterOutOfRange { letter: e, strands });
            }
        }
        let cycles = closure_cycle_count(strands, &word);
        if cycles != 1 {
            return Err(Error::NotAKnot { cycles });
        }
        Ok(BraidWord { strands, word })
    }

    /// Parses whitespace- or comma-separated signed integers.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut word = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let letter: i32 = token.parse().map_err(|_| Error::Parse {
                line: None,
                msg: format!("'{token}' is not a braid letter"),
            })?;
            word.push(letter);
        }
        BraidWord::new(strands, word)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The mirror image: every letter negated, order preserved.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            word: self.word.iter().map(|&e| -e).collect(),
        }
    }

    /// Markov conjugation `g w g^{-1}` by a single braid letter.
    pub fn conjugate(&self, letter: i32) -> Result<BraidWord> {
        let mut word = Vec::with_capacity(self.word.len() + 2);
        word.push(letter);
        word.extend_from_slice(&self.word);
        word.push(-letter);
        BraidWord::new(self.strands, word)
    }

    /// Markov stabilization: append the positive generator on a new strand.
    pub fn stabilize(&self) -> BraidWord {
        let mut word = self.word.clone();
        word.push(self.strands as i32);
        BraidWord::new(self.strands + 1, word).expect("stabilization keeps a single cycle")
    }

    /// Space-separated letters; inverse of [`BraidWord::parse`].
    pub fn render(&self) -> String {
        self.word
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Number of cycles of the strand permutation of the closure.
fn closure_cycle_count(strands: usize, word: &[i32]) -> usize {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &e in word {
        let i = e.unsigned_abs() as usize - 1;
        perm.swap(i, i + 1);
    }
    let mut seen = vec![false; strands];
    let mut cycles = 0;
    for start in 0..strands {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_parses() {
        let w = BraidWord::parse("1 1 1", 2).unwrap();
        assert_eq!(w.letters(), &[1, 1, 1]);
        assert_eq!(w.strands(), 2);
    }

    #[test]
    fn figure_eight_parses() {
        let w = BraidWord::parse("1 -2 1 -2", 3).unwrap();
        assert_eq!(w.letters(), &[1, -2, 1, -2]);
        let w2 = BraidWord::parse("1,-2,1,-2", 3).unwrap();
        assert_eq!(w, w2);
    }

    #[test]
    fn hopf_link_rejected() {
        assert!(matches!(
            BraidWord::parse("1 1", 2),
            Err(Error::NotAKnot { cycles: 2 })
        ));
    }

    #[test]
    fn letter_range_checked() {
        assert!(matches!(
            BraidWord::parse("1 3", 3),
            Err(Error::LetterOutOfRange { letter: 3, strands: 3 })
        ));
        assert!(BraidWord::parse("0", 2).is_err());
    }

    #[test]
    fn unknot_on_one_strand() {
        let w = BraidWord::parse("", 1).unwrap();
        assert!(w.is_empty());
        // Empty word on 2 strands closes to a 2-component unlink.
        assert!(matches!(BraidWord::parse("", 2), Err(Error::NotAKnot { cycles: 2 })));
    }

    #[test]
    fn mirror_is_involution() {
        let w = BraidWord::parse("1 -2 1 -2", 3).unwrap();
        assert_eq!(w.mirror().letters(), &[-1, 2, -1, 2]);
        assert_eq!(w.mirror().mirror(), w);
        let empty = BraidWord::parse("", 1).unwrap();
        assert_eq!(empty.mirror(), empty);
    }

    #[test]
    fn parse_render_roundtrip() {
        for (text, strands) in [("1 1 1", 2), ("1 -2 1 -2", 3), ("", 1)] {
            let w = BraidWord::parse(text, strands).unwrap();
            assert_eq!(BraidWord::parse(&w.render(), strands).unwrap(), w);
        }
    }

    #[test]
    fn markov_moves_preserve_knottedness() {
        let w = BraidWord::parse("1 1 1", 2).unwrap();
        let c = w.conjugate(1).unwrap();
        assert_eq!(c.letters(), &[1, 1, 1, 1, -1]);
        let s = w.stabilize();
        assert_eq!(s.strands(), 3);
        assert_eq!(s.letters(), &[1, 1, 1, 2]);
    }
}
