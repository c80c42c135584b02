//! Quandle and group sources given on the command line: either a file path
//! or a constructor spec such as `dihedral n=5`, `alexander p=2 h=1,1,1`,
//! `galkin A=Z2 tau=0,0,1`, `conj group=g.cayley seed=3`,
//! `genalex group=g.cayley f=2,1,4,3`.

use std::collections::HashMap;
use std::path::Path;

use quandle_lab::constructions::{
    alexander_field, conjugation_quandle, dihedral, galkin_quandle, generalized_alexander,
    trivial_quandle, AlexanderSpec,
};
use quandle_lab::group::GroupModel;
use quandle_lab::io::read_group;
use quandle_lab::{Permutation, QuandleTable};

use crate::CliError;

/// Loads a quandle from a file or builds one from a constructor spec.
/// Returns the table and a short display name.
pub fn resolve_quandle(source: &str, transpose: bool) -> Result<(String, QuandleTable), CliError> {
    let path = Path::new(source);
    if path.is_file() {
        let q = quandle_lab::io::read_quandle(path, transpose)
            .map_err(|e| CliError::domain(format!("{}: {e}", path.display())))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| source.to_string());
        return Ok((name, q));
    }
    let built = build_from_spec(source)?;
    Ok(built)
}

fn build_from_spec(spec: &str) -> Result<(String, QuandleTable), CliError> {
    let mut parts = spec.split_whitespace();
    let kind = parts.next().ok_or_else(|| CliError::usage("empty quandle spec"))?;
    let mut args: HashMap<&str, &str> = HashMap::new();
    for part in parts {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("expected key=value, got '{part}'")))?;
        args.insert(key, value);
    }
    let get = |key: &str| {
        args.get(key)
            .copied()
            .ok_or_else(|| CliError::usage(format!("{kind} spec needs {key}=")))
    };
    let parse_usize = |key: &str, value: &str| {
        value
            .parse::<usize>()
            .map_err(|_| CliError::usage(format!("bad {key}= value '{value}'")))
    };
    match kind {
        "trivial" => {
            let n = parse_usize("n", get("n")?)?;
            if n == 0 {
                return Err(CliError::usage("trivial quandle needs n >= 1"));
            }
            Ok((format!("trivial{n}"), trivial_quandle(n)))
        }
        "dihedral" => {
            let n = parse_usize("n", get("n")?)?;
            if n == 0 {
                return Err(CliError::usage("dihedral quandle needs n >= 1"));
            }
            Ok((format!("dihedral{n}"), dihedral(n)))
        }
        "alexander" => {
            let p: u32 = get("p")?
                .parse()
                .map_err(|_| CliError::usage("bad p= value"))?;
            let h: Vec<u32> = get("h")?
                .split(',')
                .map(|c| c.parse::<u32>().map_err(|_| CliError::usage("bad h= coefficients")))
                .collect::<Result<_, _>>()?;
            let spec = AlexanderSpec::new(p, h.clone()).map_err(CliError::from_lib)?;
            let q = alexander_field(&spec).map_err(CliError::from_lib)?;
            let coeffs: Vec<String> = h.iter().map(|c| c.to_string()).collect();
            Ok((format!("alex_p{p}_h{}", coeffs.join("_")), q))
        }
        "galkin" => {
            let a = parse_abelian_group(get("A")?)?;
            let tau: Vec<usize> = get("tau")?
                .split(',')
                .map(|c| parse_usize("tau", c))
                .collect::<Result<_, _>>()?;
            if tau.len() != 3 {
                return Err(CliError::usage("tau= needs three comma-separated values"));
            }
            let q = galkin_quandle(&a, [tau[0], tau[1], tau[2]]).map_err(CliError::from_lib)?;
            Ok((format!("galkin_{}_{}_{}_{}", get("A")?, tau[0], tau[1], tau[2]), q))
        }
        "conj" => {
            let group = read_group(get("group")?)
                .map_err(|e| CliError::domain(format!("group file: {e}")))?;
            let seed = parse_usize("seed", get("seed")?)?;
            if seed == 0 || seed > group.order() {
                return Err(CliError::usage(format!(
                    "seed {} out of range 1..={}",
                    seed,
                    group.order()
                )));
            }
            let q = conjugation_quandle(&group, seed - 1).map_err(CliError::from_lib)?;
            Ok((format!("conj_seed{seed}"), q))
        }
        "genalex" => {
            let group = read_group(get("group")?)
                .map_err(|e| CliError::domain(format!("group file: {e}")))?;
            let images: Vec<u16> = get("f")?
                .split(',')
                .map(|c| {
                    let v = parse_usize("f", c)?;
                    if v == 0 || v > group.order() {
                        return Err(CliError::usage(format!("image {v} out of range")));
                    }
                    Ok((v - 1) as u16)
                })
                .collect::<Result<_, _>>()?;
            let f = Permutation::new(images)
                .map_err(|e| CliError::domain(format!("f= is not a permutation: {e}")))?;
            let q = generalized_alexander(&group, &f).map_err(CliError::from_lib)?;
            Ok(("genalex".to_string(), q))
        }
        other => Err(CliError::usage(format!(
            "unknown quandle source '{other}' (not a file; constructors: \
             trivial, dihedral, alexander, galkin, conj, genalex)"
        ))),
    }
}

/// Parses `Z6` or products like `Z2xZ4`.
pub fn parse_abelian_group(text: &str) -> Result<GroupModel, CliError> {
    let mut factors = Vec::new();
    for token in text.split(['x', 'X']) {
        let rest = token
            .strip_prefix(['z', 'Z'])
            .ok_or_else(|| CliError::usage(format!("bad group '{text}', expected like Z2 or Z2xZ4")))?;
        let n: usize = rest
            .parse()
            .map_err(|_| CliError::usage(format!("bad cyclic order '{token}'")))?;
        if n == 0 {
            return Err(CliError::usage("cyclic order must be >= 1"));
        }
        factors.push(GroupModel::cyclic(n));
    }
    let mut iter = factors.into_iter();
    let first = iter.next().ok_or_else(|| CliError::usage("empty group spec"))?;
    Ok(iter.fold(first, |acc, g| GroupModel::direct_product(&acc, &g)))
}
