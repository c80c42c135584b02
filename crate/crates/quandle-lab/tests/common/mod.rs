//! Shared fixtures: braid presentations of small knots (verified against
//! their dihedral coloring fingerprints) and small quandle pools.
#![allow(dead_code)] // each test target uses a different slice of these

use quandle_lab::braid::BraidWord;
use quandle_lab::constructions::{
    alexander_field, dihedral, galkin_quandle, trivial_quandle, AlexanderSpec,
};
use quandle_lab::group::GroupModel;
use quandle_lab::knot::{IntRange, KnotRecord, KnownInvariants, Symmetry};
use quandle_lab::QuandleTable;

pub fn braid(word: &str, strands: usize) -> BraidWord {
    BraidWord::parse(word, strands).unwrap()
}

pub fn trefoil() -> BraidWord {
    braid("1 1 1", 2)
}

pub fn figure_eight() -> BraidWord {
    braid("1 -2 1 -2", 3)
}

/// Knots with at most 8 crossings: (name, strands, word, symmetry type,
/// bridge index, unknotting number).
pub const KNOT_ROWS: &[(&str, usize, &str, &str, u32, u32)] = &[
    ("3_1", 2, "1 1 1", "reversible", 2, 1),
    ("4_1", 3, "1 -2 1 -2", "fully-amphicheiral", 2, 1),
    ("5_1", 2, "1 1 1 1 1", "reversible", 2, 2),
    ("5_2", 3, "1 1 1 2 -1 2", "reversible", 2, 1),
    ("6_1", 4, "1 1 2 -1 -3 2 -3", "reversible", 2, 1),
    ("6_2", 3, "1 1 1 -2 1 -2", "reversible", 2, 1),
    ("6_3", 3, "1 1 -2 1 -2 -2", "fully-amphicheiral", 2, 1),
    ("7_1", 2, "1 1 1 1 1 1 1", "reversible", 2, 3),
    ("8_16", 3, "1 1 -2 1 1 -2 1 -2", "reversible", 3, 2),
    ("8_17", 3, "1 1 -2 1 -2 1 -2 -2", "negative-amphicheiral", 3, 1),
    ("8_19", 3, "1 2 1 2 1 2 1 2", "reversible", 3, 3),
    ("8_20", 3, "1 1 1 -2 -1 -1 -1 -2", "reversible", 3, 1),
    ("8_21", 3, "1 1 1 2 -1 -1 2 2", "reversible", 3, 1),
];

pub fn knot_corpus() -> Vec<KnotRecord> {
    KNOT_ROWS
        .iter()
        .map(|&(name, strands, word, symmetry, bridge, unknotting)| {
            KnotRecord::new(name, braid(word, strands), Symmetry::parse(symmetry).unwrap())
                .with_known(KnownInvariants {
                    bridge: Some(IntRange::exact(bridge)),
                    unknotting: Some(IntRange::exact(unknotting)),
                    nakanishi: Some(IntRange::exact(1)),
                })
        })
        .collect()
}

pub fn alexander(p: u32, h: &[u32]) -> QuandleTable {
    alexander_field(&AlexanderSpec::new(p, h.to_vec()).unwrap()).unwrap()
}

pub fn f4() -> QuandleTable {
    alexander(2, &[1, 1, 1])
}

/// Quandles of order <= 13, connected, including non-kei Alexander
/// quandles and a Galkin quandle.
pub fn quandle_pool() -> Vec<(String, QuandleTable)> {
    let mut pool: Vec<(String, QuandleTable)> = vec![
        ("d3".into(), dihedral(3)),
        ("d5".into(), dihedral(5)),
        ("d7".into(), dihedral(7)),
        ("d13".into(), dihedral(13)),
        ("f4".into(), f4()),
        ("f8a".into(), alexander(2, &[1, 1, 0, 1])),
        ("f8b".into(), alexander(2, &[1, 0, 1, 1])),
        ("f9".into(), alexander(3, &[1, 0, 1])),
        ("galkin6".into(), galkin_quandle(&GroupModel::cyclic(2), [0, 0, 1]).unwrap()),
        (
            "d3xf4".into(),
            QuandleTable::product(&dihedral(3), &f4(), 4096).unwrap(),
        ),
    ];
    pool.retain(|(_, q)| q.is_connected());
    pool
}

pub fn trivial(n: usize) -> QuandleTable {
    trivial_quandle(n)
}
