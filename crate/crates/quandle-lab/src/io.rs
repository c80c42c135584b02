//! File formats. All element and index values in files are 1-based; the
//! in-memory types are 0-based.
//!
//! - Quandle matrix file: first token `n`, then `n*n` entries in `1..=n`,
//!   row-major, entry `(i, j)` holding `i * j`.
//! - Cayley table file: same shape, validated as a group.
//! - Homomorphism file: one 1-based image per domain element.
//! - Cocycle file: first token the modulus `m`, then `n*n` values in
//!   `0..m` (values live in `Z_m` and stay 0-based).
//! - Matrix CSV (`quandle,<knot names..>` header, one row per quandle)
//!   with a JSON sidecar carrying names, orders, the dual pairing,
//!   symmetries, and missing cells.

use std::path::Path;

use crate::cocycle::{validate_cocycle, Cocycle2};
use crate::error::{Error, Result};
use crate::group::GroupModel;
use crate::knot::Symmetry;
use crate::matrix::ColoringMatrix;
use crate::quandle::QuandleTable;

fn parse_tokens(text: &str) -> Result<Vec<i64>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>().map_err(|_| Error::Parse {
                line: None,
                msg: format!("'{tok}' is not an integer"),
            })
        })
        .collect()
}

/// Reads `n` and an `n x n` block of 1-based entries.
fn read_square(text: &str, what: &str) -> Result<Vec<Vec<usize>>> {
    let tokens = parse_tokens(text)?;
    let Some((&first, rest)) = tokens.split_first() else {
        return Err(Error::Parse { line: None, msg: format!("empty {what} file") });
    };
    if first < 1 {
        return Err(Error::Parse { line: None, msg: format!("{what} order must be >= 1") });
    }
    let n = first as usize;
    if rest.len() != n * n {
        return Err(Error::Parse {
            line: None,
            msg: format!("expected {} entries after the order, found {}", n * n, rest.len()),
        });
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let v = rest[i * n + j];
            if v < 1 || v > n as i64 {
                return Err(Error::Parse {
                    line: None,
                    msg: format!("entry {v} at ({},{}) out of range 1..={n}", i + 1, j + 1),
                });
            }
            row.push(v as usize - 1);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Parses a quandle matrix file; `transpose` converts a left-distributive
/// source table to the row-operand convention used here.
pub fn parse_quandle(text: &str, transpose: bool) -> Result<QuandleTable> {
    let mut rows = read_square(text, "quandle")?;
    if transpose {
        let n = rows.len();
        let original = rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = original[j][i];
            }
        }
        let _ = n;
    }
    QuandleTable::validate(&rows)
}

pub fn read_quandle(path: impl AsRef<Path>, transpose: bool) -> Result<QuandleTable> {
    parse_quandle(&std::fs::read_to_string(path)?, transpose)
}

pub fn render_quandle(q: &QuandleTable) -> String {
    let n = q.order();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| (q.op(i, j) + 1).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_quandle(path: impl AsRef<Path>, q: &QuandleTable) -> Result<()> {
    std::fs::write(path, render_quandle(q))?;
    Ok(())
}

pub fn parse_group(text: &str) -> Result<GroupModel> {
    GroupModel::from_cayley(&read_square(text, "group")?)
}

pub fn read_group(path: impl AsRef<Path>) -> Result<GroupModel> {
    parse_group(&std::fs::read_to_string(path)?)
}

/// Parses a homomorphism file: one 1-based codomain element per line, one
/// line per domain element.
pub fn parse_hom_map(text: &str, domain_order: usize, codomain_order: usize) -> Result<Vec<usize>> {
    let tokens = parse_tokens(text)?;
    if tokens.len() != domain_order {
        return Err(Error::Parse {
            line: None,
            msg: format!("expected {domain_order} images, found {}", tokens.len()),
        });
    }
    tokens
        .into_iter()
        .map(|v| {
            if v < 1 || v > codomain_order as i64 {
                Err(Error::Parse {
                    line: None,
                    msg: format!("image {v} out of range 1..={codomain_order}"),
                })
            } else {
                Ok(v as usize - 1)
            }
        })
        .collect()
}

/// Parses a cocycle value file against its base quandle.
pub fn parse_cocycle(text: &str, base: &QuandleTable) -> Result<Cocycle2> {
    let tokens = parse_tokens(text)?;
    let Some((&first, rest)) = tokens.split_first() else {
        return Err(Error::Parse { line: None, msg: "empty cocycle file".into() });
    };
    if first < 1 {
        return Err(Error::Parse { line: None, msg: "modulus must be >= 1".into() });
    }
    let m = first as u32;
    let n = base.order();
    if rest.len() != n * n {
        return Err(Error::Parse {
            line: None,
            msg: format!("expected {} values, found {}", n * n, rest.len()),
        });
    }
    let values: Vec<u32> = rest
        .iter()
        .map(|&v| {
            if v < 0 || v >= m as i64 {
                Err(Error::Parse { line: None, msg: format!("value {v} out of range 0..{m}") })
            } else {
                Ok(v as u32)
            }
        })
        .collect::<Result<_>>()?;
    validate_cocycle(base, m, &values)
}

pub fn render_cocycle(phi: &Cocycle2) -> String {
    let n = phi.base().order();
    let mut out = format!("{}\n", phi.modulus());
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| phi.value(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Sidecar metadata persisted next to the matrix CSV. Indices are 1-based.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct MatrixSidecar {
    pub schema: String,
    pub quandle_names: Vec<String>,
    pub quandle_orders: Vec<usize>,
    /// 1-based: `dual_index[i] = j` means quandle `i+1` has dual `j`.
    pub dual_index: Vec<usize>,
    pub knot_names: Vec<String>,
    pub knot_symmetries: Vec<String>,
    /// 1-based (quandle, knot) positions of cells that timed out.
    pub missing_cells: Vec<(usize, usize)>,
}

pub const MATRIX_SCHEMA: &str = "quandle-lab/1";

pub fn render_matrix_csv(mx: &ColoringMatrix) -> String {
    let mut out = String::from("quandle");
    for name in &mx.knot_names {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for (i, name) in mx.quandle_names.iter().enumerate() {
        out.push_str(name);
        for j in 0..mx.knot_count() {
            out.push(',');
            if let Some(v) = mx.entry(i, j) {
                out.push_str(&v.to_string());
            }
        }
        out.push('\n');
    }
    out
}

pub fn matrix_sidecar(mx: &ColoringMatrix) -> MatrixSidecar {
    MatrixSidecar {
        schema: MATRIX_SCHEMA.to_string(),
        quandle_names: mx.quandle_names.clone(),
        quandle_orders: mx.quandle_orders.clone(),
        dual_index: mx.dual_index.iter().map(|&d| d + 1).collect(),
        knot_names: mx.knot_names.clone(),
        knot_symmetries: mx.knot_symmetries.iter().map(|s| s.label().to_string()).collect(),
        missing_cells: mx.missing_cells().iter().map(|&(i, j)| (i + 1, j + 1)).collect(),
    }
}

/// Writes `<path>` (CSV) and `<path>.json` (sidecar).
pub fn write_matrix(path: impl AsRef<Path>, mx: &ColoringMatrix) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, render_matrix_csv(mx))?;
    let sidecar = matrix_sidecar(mx);
    let json = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
    std::fs::write(sidecar_path(path), json)?;
    Ok(())
}

pub fn sidecar_path(path: &Path) -> std::path::PathBuf {
    let mut os = path.as_os_str().to_owned();
    os.push(".json");
    std::path::PathBuf::from(os)
}

/// Reads a matrix CSV plus its sidecar back into a [`ColoringMatrix`].
pub fn read_matrix(path: impl AsRef<Path>) -> Result<ColoringMatrix> {
    let path = path.as_ref();
    let csv = std::fs::read_to_string(path)?;
    let sidecar_text = std::fs::read_to_string(sidecar_path(path))?;
    let sidecar: MatrixSidecar = serde_json::from_str(&sidecar_text).map_err(|e| Error::Parse {
        line: None,
        msg: format!("bad sidecar: {e}"),
    })?;
    parse_matrix_csv(&csv, &sidecar)
}

pub fn parse_matrix_csv(csv: &str, sidecar: &MatrixSidecar) -> Result<ColoringMatrix> {
    let mut lines = csv.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or(Error::Parse { line: Some(1), msg: "empty matrix csv".into() })?;
    let mut columns = header.split(',');
    if columns.next() != Some("quandle") {
        return Err(Error::Parse {
            line: Some(1),
            msg: "matrix header must start with 'quandle'".into(),
        });
    }
    let knot_names: Vec<String> = columns.map(|c| c.trim().to_string()).collect();
    if knot_names != sidecar.knot_names {
        return Err(Error::MatrixMismatch("csv knot names differ from sidecar".into()));
    }
    let mut quandle_names = Vec::new();
    let mut entries = Vec::new();
    for (idx, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let line_no = idx + 1;
        let mut fields = line.split(',');
        let name = fields
            .next()
            .ok_or(Error::Parse { line: Some(line_no), msg: "missing quandle name".into() })?
            .trim()
            .to_string();
        let row: Vec<Option<u64>> = fields
            .map(|f| {
                let f = f.trim();
                if f.is_empty() {
                    Ok(None)
                } else {
                    f.parse::<u64>().map(Some).map_err(|_| Error::Parse {
                        line: Some(line_no),
                        msg: format!("bad count '{f}'"),
                    })
                }
            })
            .collect::<Result<_>>()?;
        if row.len() != knot_names.len() {
            return Err(Error::Parse {
                line: Some(line_no),
                msg: format!("expected {} counts, found {}", knot_names.len(), row.len()),
            });
        }
        quandle_names.push(name);
        entries.push(row);
    }
    if quandle_names != sidecar.quandle_names {
        return Err(Error::MatrixMismatch("csv quandle names differ from sidecar".into()));
    }
    if sidecar.quandle_orders.len() != quandle_names.len()
        || sidecar.dual_index.len() != quandle_names.len()
    {
        return Err(Error::MatrixMismatch("sidecar lengths differ from csv".into()));
    }
    let dual_index: Vec<usize> = sidecar
        .dual_index
        .iter()
        .map(|&d| {
            if d >= 1 && d <= quandle_names.len() {
                Ok(d - 1)
            } else {
                Err(Error::MatrixMismatch(format!("dual index {d} out of range")))
            }
        })
        .collect::<Result<_>>()?;
    let knot_symmetries: Vec<Symmetry> = sidecar
        .knot_symmetries
        .iter()
        .map(|s| {
            Symmetry::parse(s).ok_or_else(|| Error::Parse {
                line: None,
                msg: format!("unknown symmetry label '{s}' in sidecar"),
            })
        })
        .collect::<Result<_>>()?;
    if knot_symmetries.len() != knot_names.len() {
        return Err(Error::MatrixMismatch("sidecar symmetry count differs".into()));
    }
    Ok(ColoringMatrix {
        quandle_names,
        quandle_orders: sidecar.quandle_orders.clone(),
        dual_index,
        knot_names,
        knot_symmetries,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::constructions::dihedral;
    use crate::knot::KnotRecord;
    use crate::matrix::{build_matrix, BuildOptions};

    #[test]
    fn quandle_file_roundtrip() {
        let q = dihedral(5);
        let text = render_quandle(&q);
        assert!(text.starts_with("5\n"));
        let back = parse_quandle(&text, false).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn transpose_flag_converts_left_tables() {
        let q = dihedral(5);
        // A left-distributive source stores j * i at (i, j).
        let n = q.order();
        let mut out = format!("{n}\n");
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| (q.op(j, i) + 1).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        assert_eq!(parse_quandle(&out, true).unwrap(), q);
    }

    #[test]
    fn quandle_file_errors() {
        assert!(parse_quandle("", false).is_err());
        assert!(parse_quandle("2\n1 1\n1", false).is_err());
        assert!(parse_quandle("2\n1 1\n3 2", false).is_err());
        assert!(parse_quandle("2\n1 1\n2 x", false).is_err());
    }

    #[test]
    fn hom_file_parsing() {
        assert_eq!(parse_hom_map("1\n2\n3\n", 3, 3).unwrap(), vec![0, 1, 2]);
        assert!(parse_hom_map("1 2", 3, 3).is_err());
        assert!(parse_hom_map("1 2 4", 3, 3).is_err());
    }

    #[test]
    fn cocycle_file_roundtrip() {
        let base = dihedral(3);
        let phi = crate::cocycle::Cocycle2::coboundary(base.clone(), 2, &[0, 1, 1]).unwrap();
        let text = render_cocycle(&phi);
        let back = parse_cocycle(&text, &base).unwrap();
        assert_eq!(back, phi);
    }

    #[test]
    fn matrix_roundtrip_through_files() {
        let quandles = vec![
            ("d3".to_string(), dihedral(3)),
            ("d5".to_string(), dihedral(5)),
        ];
        let knots = vec![
            KnotRecord::new("3_1", BraidWord::parse("1 1 1", 2).unwrap(), Symmetry::Chiral),
            KnotRecord::new(
                "4_1",
                BraidWord::parse("1 -2 1 -2", 3).unwrap(),
                Symmetry::FullyAmphicheiral,
            ),
        ];
        let mx = build_matrix(&quandles, &knots, &BuildOptions::default()).unwrap();
        let csv = render_matrix_csv(&mx);
        let sidecar = matrix_sidecar(&mx);
        let back = parse_matrix_csv(&csv, &sidecar).unwrap();
        assert_eq!(back, mx);
    }

    #[test]
    fn matrix_csv_with_missing_cells() {
        let mx = ColoringMatrix {
            quandle_names: vec!["a".into()],
            quandle_orders: vec![3],
            dual_index: vec![0],
            knot_names: vec!["x".into(), "y".into()],
            knot_symmetries: vec![Symmetry::Reversible, Symmetry::Chiral],
            entries: vec![vec![Some(6), None]],
        };
        let csv = render_matrix_csv(&mx);
        assert!(csv.contains("a,6,\n"));
        let sidecar = matrix_sidecar(&mx);
        assert_eq!(sidecar.missing_cells, vec![(1, 2)]);
        let back = parse_matrix_csv(&csv, &sidecar).unwrap();
        assert_eq!(back, mx);
    }
}
