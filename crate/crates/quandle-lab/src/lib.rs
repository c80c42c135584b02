//! Finite quandle algebra and a knot-coloring engine.
//!
//! The library builds and validates finite quandles, counts colorings of
//! knots presented as braid closures, computes lifting and 2-cocycle
//! invariants, and runs batch analyses that use coloring counts to
//! distinguish knots and bound classical knot invariants.

pub mod bounds;
pub mod braid;
pub mod cocycle;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod group;
pub mod hom;
pub mod io;
pub mod knot;
pub mod lift;
pub mod matrix;
pub mod perm;
mod poly;
pub mod quandle;

pub use braid::BraidWord;
pub use coloring::{ColoringCount, ColoringVector};
pub use error::{Error, Result};
pub use hom::QuandleHom;
pub use knot::{KnotRecord, Symmetry};
pub use lift::LiftMultiset;
pub use perm::{PermGroup, Permutation};
pub use quandle::{PropertyRecord, QuandleTable};
