//! Error types shared across the library.

use thiserror::Error;

/// A single violated quandle-axiom instance, with the witnessing indices.
///
/// Indices are 0-based internal element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `a * a != a`.
    Idempotence { a: usize },
    /// Column `col` is not a permutation: rows `a` and `b` collide
    /// (`a * col == b * col`).
    RightInvertibility { col: usize, a: usize, b: usize },
    /// `(a*b)*c != (a*c)*(b*c)`.
    Distributivity { a: usize, b: usize, c: usize },
}

impl std::fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AxiomViolation::Idempotence { a } => write!(f, "axiom 1 at a={a}: a*a != a"),
            AxiomViolation::RightInvertibility { col, a, b } => {
                write!(f, "axiom 2 at column {col}: rows {a} and {b} collide")
            }
            AxiomViolation::Distributivity { a, b, c } => {
                write!(f, "axiom 3 at (a,b,c)=({a},{b},{c})")
            }
        }
    }
}

/// A violated 2-cocycle condition instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleViolation {
    /// `phi(x, x) != 0`.
    Diagonal { x: usize },
    /// The cocycle identity fails at the triple `(x, y, z)`.
    Identity { x: usize, y: usize, z: usize },
}

impl std::fmt::Display for CocycleViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CocycleViolation::Diagonal { x } => write!(f, "phi({x},{x}) != 0"),
            CocycleViolation::Identity { x, y, z } => {
                write!(f, "cocycle identity fails at ({x},{y},{z})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("table is not square: {rows} rows, row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("table of order 0 is not a quandle")]
    EmptyTable,

    #[error("table order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("entry at ({row},{col}) is {value}, out of range for order {n}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, n: usize },

    #[error("{} axiom violation(s): {}", .0.len(), summarize(.0))]
    Axioms(Vec<AxiomViolation>),

    #[error("element {value} out of range for order {n}")]
    ElementOutOfRange { value: usize, n: usize },

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("product order {order} exceeds the cap of {cap}")]
    ProductCapExceeded { order: usize, cap: usize },

    #[error("search space exceeds the configured cap ({detail})")]
    SearchCapExceeded { detail: String },

    #[error("enumeration of {size} tuples exceeds the cap of {cap}")]
    EnumerationCapExceeded { size: u128, cap: u64 },

    #[error("not a permutation: value {value} repeated")]
    NotAPermutation { value: usize },

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("group is not abelian: {a}*{b} != {b}*{a}")]
    NotAbelian { a: usize, b: usize },

    #[error("map is not an automorphism: f({a}*{b}) != f({a})*f({b})")]
    NotAutomorphism { a: usize, b: usize },

    #[error("map is not a quandle homomorphism at ({a},{b})")]
    NotAHomomorphism { a: usize, b: usize },

    #[error("{p} is not prime")]
    NotPrime { p: u32 },

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial must have degree >= 1")]
    DegreeZero,

    #[error("t is not invertible modulo h (constant term is 0)")]
    TNotInvertible,

    #[error("tau(0) must be the identity of the coefficient group")]
    TauNotNormalized,

    #[error("cocycle value table has wrong shape: expected {expected}x{expected}")]
    CocycleShape { expected: usize },

    #[error("{} cocycle violation(s): {}", .0.len(), summarize(.0))]
    Cocycle(Vec<CocycleViolation>),

    #[error("cocycle values out of range for modulus {m}")]
    CocycleValueRange { m: u32 },

    #[error("braid letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("closure is not a knot: the strand permutation has {cycles} cycles")]
    NotAKnot { cycles: usize },

    #[error("parse error{}: {msg}", fmt_line(.line))]
    Parse { line: Option<usize>, msg: String },

    #[error("duplicate knot name '{name}' at line {line}")]
    DuplicateKnot { name: String, line: usize },

    #[error("quandle '{name}' is not connected; this operation requires connected quandles")]
    NotConnected { name: String },

    #[error("no quandle in the list is isomorphic to the dual of '{name}'")]
    DualNotInList { name: String },

    #[error("dual index is not an involution (duplicate isomorphic quandles in the list?)")]
    DualIndexNotInvolution,

    #[error("matrix has missing entries; {0} required a complete matrix")]
    IncompleteMatrix(String),

    #[error("coloring computation exceeded its deadline")]
    CellTimeout,

    #[error("evaluation counter overflowed")]
    CounterOverflow,

    #[error("goal cannot be satisfied even by the full quandle list ({detail})")]
    GoalUnsatisfiable { detail: String },

    #[error("matrix and knot table disagree: {0}")]
    MatrixMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn fmt_line(line: &Option<usize>) -> String {
    match line {
        Some(l) => format!(" at line {l}"),
        None => String::new(),
    }
}

fn summarize<T: std::fmt::Display>(items: &[T]) -> String {
    let shown: Vec<String> = items.iter().take(3).map(|v| v.to_string()).collect();
    let mut s = shown.join("; ");
    if items.len() > 3 {
        s.push_str("; ...");
    }
    s
}

pub type Result<T> = std::result::Result<T, Error>;
