//! Knot records: braid presentations, ingested symmetry types, known
//! classical invariants, and symmetry-orbit bookkeeping.

use std::path::Path;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Symmetry type of a knot, as ingested from the knot table.
///
/// The five types record which of reversal `r`, mirroring `m`, and their
/// composite `rm` fix the knot type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    Reversible,
    NegativeAmphicheiral,
    PositiveAmphicheiral,
    Chiral,
    FullyAmphicheiral,
}

impl Symmetry {
    pub fn parse(label: &str) -> Option<Symmetry> {
        let norm: String = label
            .trim()
            .chars()
            .map(|c| if c == '_' || c == ' ' { '-' } else { c.to_ascii_lowercase() })
            .collect();
        match norm.as_str() {
            "reversible" => Some(Symmetry::Reversible),
            "negative-amphicheiral" => Some(Symmetry::NegativeAmphicheiral),
            "positive-amphicheiral" => Some(Symmetry::PositiveAmphicheiral),
            "chiral" => Some(Symmetry::Chiral),
            "fully-amphicheiral" => Some(Symmetry::FullyAmphicheiral),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Symmetry::Reversible => "reversible",
            Symmetry::NegativeAmphicheiral => "negative-amphicheiral",
            Symmetry::PositiveAmphicheiral => "positive-amphicheiral",
            Symmetry::Chiral => "chiral",
            Symmetry::FullyAmphicheiral => "fully-amphicheiral",
        }
    }

    /// True iff colorings can possibly tell the knot from its mirror.
    pub fn mirror_sensitive(&self) -> bool {
        matches!(self, Symmetry::Chiral | Symmetry::NegativeAmphicheiral)
    }
}

/// A closed integer interval, used for partially known invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct IntRange {
    pub lo: u32,
    pub hi: u32,
}

impl IntRange {
    pub fn exact(v: u32) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if lo > hi {
            return Err(Error::Parse { line: None, msg: format!("empty interval {lo}..{hi}") });
        }
        Ok(IntRange { lo, hi })
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Parses `"3"` or `"2..4"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((lo, hi)) = text.split_once("..") {
            let lo = lo.trim().parse().map_err(|_| Error::Parse {
                line: None,
                msg: format!("bad interval '{text}'"),
            })?;
            let hi = hi.trim().parse().map_err(|_| Error::Parse {
                line: None,
                msg: format!("bad interval '{text}'"),
            })?;
            IntRange::new(lo, hi)
        } else {
            let v = text.parse().map_err(|_| Error::Parse {
                line: None,
                msg: format!("bad integer '{text}'"),
            })?;
            Ok(IntRange::exact(v))
        }
    }

    pub fn render(&self) -> String {
        if self.is_exact() {
            self.lo.to_string()
        } else {
            format!("{}..{}", self.lo, self.hi)
        }
    }
}

/// Ingested values of classical invariants; all optional.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct KnownInvariants {
    pub bridge: Option<IntRange>,
    pub unknotting: Option<IntRange>,
    pub nakanishi: Option<IntRange>,
}

/// One row of the ingested knot table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub braid: BraidWord,
    pub symmetry: Symmetry,
    pub known: KnownInvariants,
}

impl KnotRecord {
    pub fn new(name: impl Into<String>, braid: BraidWord, symmetry: Symmetry) -> Self {
        KnotRecord { name: name.into(), braid, symmetry, known: KnownInvariants::default() }
    }

    pub fn with_known(mut self, known: KnownInvariants) -> Self {
        self.known = known;
        self
    }
}

/// Formal labels for the images of a knot under reversal and mirroring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitLabel {
    K,
    RK,
    MK,
    RmK,
}

/// The orbit of a knot under `{1, r, m, rm}`, collapsed by symmetry type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotOrbit {
    pub representative: String,
    pub members: Vec<OrbitLabel>,
}

/// Orbit bookkeeping: one member for fully amphicheiral knots, two for
/// reversible and positive or negative amphicheiral ones, four for chiral
/// knots.
pub fn orbit(record: &KnotRecord) -> KnotOrbit {
    use OrbitLabel::*;
    let members = match record.symmetry {
        Symmetry::FullyAmphicheiral => vec![K],
        Symmetry::Reversible | Symmetry::PositiveAmphicheiral => vec![K, RmK],
        Symmetry::NegativeAmphicheiral => vec![K, MK],
        Symmetry::Chiral => vec![K, RK, MK, RmK],
    };
    KnotOrbit { representative: record.name.clone(), members }
}

/// Loads a knot table CSV.
///
/// Header: `name,braid_index,word,symmetry` with optional trailing columns
/// `bridge,unknotting,nakanishi` holding integers or `a..b` intervals.
/// Every braid is closure-checked; duplicate names are rejected.
pub fn load_knot_table(path: impl AsRef<Path>) -> Result<Vec<KnotRecord>> {
    let text = std::fs::read_to_string(path)?;
    parse_knot_table(&text)
}

pub fn parse_knot_table(text: &str) -> Result<Vec<KnotRecord>> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: Some(1),
        msg: "empty knot table".into(),
    })?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    let col = |name: &str| columns.iter().position(|&c| c == name);
    let (Some(name_col), Some(index_col), Some(word_col), Some(sym_col)) =
        (col("name"), col("braid_index"), col("word"), col("symmetry"))
    else {
        return Err(Error::Parse {
            line: Some(1),
            msg: "header must contain name,braid_index,word,symmetry".into(),
        });
    };
    let bridge_col = col("bridge");
    let unknotting_col = col("unknotting");
    let nakanishi_col = col("nakanishi");

    let mut records: Vec<KnotRecord> = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() < columns.len().min(4).max(sym_col + 1) {
            return Err(Error::Parse {
                line: Some(line_no),
                msg: format!("expected at least {} fields", sym_col + 1),
            });
        }
        let at = |c: usize| fields.get(c).copied().unwrap_or("");
        let name = at(name_col).to_string();
        if name.is_empty() {
            return Err(Error::Parse { line: Some(line_no), msg: "empty knot name".into() });
        }
        if records.iter().any(|r| r.name == name) {
            return Err(Error::DuplicateKnot { name, line: line_no });
        }
        let strands: usize = at(index_col).parse().map_err(|_| Error::Parse {
            line: Some(line_no),
            msg: format!("bad braid_index '{}'", at(index_col)),
        })?;
        let braid = BraidWord::parse(at(word_col), strands).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse { line: Some(line_no), msg },
            other => with_line_context(other, line_no),
        })?;
        let symmetry = Symmetry::parse(at(sym_col)).ok_or_else(|| Error::Parse {
            line: Some(line_no),
            msg: format!("unknown symmetry label '{}'", at(sym_col)),
        })?;
        let parse_opt = |c: Option<usize>| -> Result<Option<IntRange>> {
            match c {
                Some(c) if !at(c).is_empty() => {
                    IntRange::parse(at(c)).map(Some).map_err(|e| with_line_context(e, line_no))
                }
                _ => Ok(None),
            }
        };
        let known = KnownInvariants {
            bridge: parse_opt(bridge_col)?,
            unknotting: parse_opt(unknotting_col)?,
            nakanishi: parse_opt(nakanishi_col)?,
        };
        records.push(KnotRecord { name, braid, symmetry, known });
    }
    Ok(records)
}

fn with_line_context(err: Error, line: usize) -> Error {
    match err {
        Error::Parse { msg, .. } => Error::Parse { line: Some(line), msg },
        Error::NotAKnot { cycles } => Error::Parse {
            line: Some(line),
            msg: format!("closure is not a knot ({cycles} components)"),
        },
        Error::LetterOutOfRange { letter, strands } => Error::Parse {
            line: Some(line),
            msg: format!("letter {letter} out of range for {strands} strands"),
        },
        other => other,
    }
}
