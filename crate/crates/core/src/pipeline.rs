//! Named builders and constructions, and a small script runner on top.
//!
//! A script has one step per line:
//!
//! ```text
//! build <name> [key=value ...] -> <var>
//! construct <A|B|C|fold|quotient|dual> <var> [key=value ...] -> <var>
//! census <var>
//! classify <var>
//! export <var> <format> [file]
//! ```
//!
//! Every intermediate is hashed over its canonical serialization, and when an
//! output directory is given it is written there together with a manifest.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::builders::{
    build_120cell, build_600cell, build_barrel, build_cube, build_dodecahedron, build_f26,
    build_f28_td, build_f32_d3d, build_icosahedron, build_klein_polyhex,
    build_layered_dodecahedron, build_toroidal_polyhex, PolyhexSpec,
};
use crate::census::{census, census_flags};
use crate::classify::classify_3fullerene;
use crate::constructions::{
    antipodal_fold, chain, corona_B, elongated_barrel, facet_pairing_quotient, subdivide_C,
    FacetPairing,
};
use crate::error::{Error, Result};
use crate::io::{export, write_canonical, Format};
use crate::kernel::{dual, Complex, IncidenceComplex};

pub type Params = BTreeMap<String, String>;

/// Names accepted by [`build_by_name`].
pub const BUILDERS: &[&str] = &[
    "120cell",
    "600cell",
    "dodecahedron",
    "icosahedron",
    "cube",
    "barrel",
    "layered",
    "elongated-barrel",
    "f26",
    "f28",
    "f32",
    "torus-polyhex",
    "klein-polyhex",
    "heawood",
    "klein-k333",
];

/// Names accepted by [`construct_by_name`].
pub const CONSTRUCTIONS: &[&str] = &["A", "B", "C", "fold", "quotient", "dual"];

fn param<T: std::str::FromStr>(params: &Params, key: &str, default: Option<T>) -> Result<T> {
    match params.get(key) {
        Some(s) => s
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("cannot parse {key}={s}"))),
        None => default.ok_or_else(|| Error::InvalidParameter(format!("missing parameter {key}"))),
    }
}

fn vector(params: &Params, key: &str) -> Result<[i64; 2]> {
    let s = params
        .get(key)
        .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {key}")))?;
    let parts: Vec<&str> = s.split(',').collect();
    match parts[..] {
        [x, y] => match (x.trim().parse(), y.trim().parse()) {
            (Ok(x), Ok(y)) => Ok([x, y]),
            _ => Err(Error::InvalidParameter(format!("{key} must be two integers"))),
        },
        _ => Err(Error::InvalidParameter(format!("{key} must look like x,y"))),
    }
}

fn incidence(c: &Complex) -> Result<&IncidenceComplex> {
    c.incidence()
        .ok_or_else(|| Error::NonRegular("operation needs a regular complex".into()))
}

/// Builds a seed complex by name.
pub fn build_by_name(name: &str, params: &Params) -> Result<Complex> {
    let x = match name {
        "120cell" | "120-cell" => build_120cell()?,
        "600cell" | "600-cell" => build_600cell()?,
        "dodecahedron" | "Do" => build_dodecahedron(),
        "icosahedron" => build_icosahedron(),
        "cube" => build_cube(),
        "barrel" => build_barrel(param(params, "i", None)?)?,
        "layered" => build_layered_dodecahedron(param(params, "i", None)?),
        "elongated-barrel" => elongated_barrel(param(params, "i", Some(6))?)?,
        "f26" => build_f26(),
        "f28" => build_f28_td(),
        "f32" => build_f32_d3d(),
        "torus-polyhex" => build_toroidal_polyhex(&PolyhexSpec::torus(vector(params, "a")?, vector(params, "b")?))?,
        "klein-polyhex" => build_klein_polyhex(&PolyhexSpec::klein(vector(params, "a")?, vector(params, "b")?))?,
        "heawood" => build_toroidal_polyhex(&PolyhexSpec::heawood())?,
        "klein-k333" => build_klein_polyhex(&PolyhexSpec::klein_k333())?,
        _ => return Err(Error::InvalidParameter(format!("unknown builder {name:?}"))),
    };
    Ok(Complex::Incidence(x))
}

/// Applies a construction by name. `A` chains `n` copies of the input
/// (default 2), `quotient` glues opposite faces with `twist` tenths of a turn
/// (default 1).
pub fn construct_by_name(name: &str, input: &Complex, params: &Params) -> Result<Complex> {
    Ok(match name {
        "A" => chain(incidence(input)?, param(params, "n", Some(2))?, 0)?.into(),
        "B" => corona_B(incidence(input)?)?.into(),
        "C" => subdivide_C(incidence(input)?)?.into(),
        "fold" => antipodal_fold(incidence(input)?, None)?,
        "quotient" => {
            let pairing =
                FacetPairing::opposite_with_twist(incidence(input)?.clone(), param(params, "twist", Some(1))?)?;
            Complex::Flags(facet_pairing_quotient(&pairing)?)
        }
        "dual" => dual(incidence(input)?)?.into(),
        _ => return Err(Error::InvalidParameter(format!("unknown construction {name:?}"))),
    })
}

/// Census report of a rank-3 complex in either view.
pub fn census_any(c: &Complex) -> Result<crate::census::CensusReport> {
    match c {
        Complex::Incidence(x) => census(x),
        Complex::Flags(f) => census_flags(f),
    }
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

/// Hash of the canonical serialization.
pub fn content_hash(c: &Complex) -> String {
    sha256_hex(&write_canonical(c))
}

#[derive(Debug, Clone, Serialize)]
pub struct StepRecord {
    pub line: usize,
    pub step: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineRun {
    pub steps: Vec<StepRecord>,
    #[serde(skip)]
    pub vars: BTreeMap<String, Complex>,
}

fn split_step(line: &str) -> (Vec<&str>, Option<&str>) {
    match line.split_once("->") {
        Some((lhs, rhs)) => (lhs.split_whitespace().collect(), Some(rhs.trim())),
        None => (line.split_whitespace().collect(), None),
    }
}

fn parse_params(tokens: &[&str], line: usize) -> Result<Params> {
    tokens
        .iter()
        .map(|t| {
            t.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| Error::Parse { line, reason: format!("expected key=value, got {t:?}") })
        })
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("reports serialize")
}

/// Runs a script. With `out_dir`, intermediates, exports and
/// `manifest.json` are written there.
pub fn run_pipeline(script: &str, out_dir: Option<&Path>) -> Result<PipelineRun> {
    let mut vars: BTreeMap<String, Complex> = BTreeMap::new();
    let mut steps = Vec::new();
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| Error::Other(format!("cannot create {}: {e}", dir.display())))?;
    }
    let write = |name: &str, text: &str| -> Result<()> {
        if let Some(dir) = out_dir {
            let path = dir.join(name);
            std::fs::write(&path, text).map_err(|e| Error::Other(format!("cannot write {}: {e}", path.display())))?;
        }
        Ok(())
    };
    for (i, raw) in script.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (toks, target) = split_step(text);
        let get = |name: &str| -> Result<&Complex> {
            vars.get(name)
                .ok_or_else(|| Error::InvalidParameter(format!("line {line}: unknown intermediate {name:?}")))
        };
        let need_target = || target.filter(|t| !t.is_empty()).ok_or_else(|| Error::Parse { line, reason: "missing '-> name'".into() });
        let mut record = StepRecord {
            line,
            step: text.to_string(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            report: None,
        };
        let produced = match toks.first().copied() {
            Some("build") => {
                let name = toks.get(1).ok_or_else(|| Error::Parse { line, reason: "missing builder name".into() })?;
                let c = build_by_name(name, &parse_params(&toks[2..], line)?)?;
                Some((need_target()?.to_string(), c))
            }
            Some("construct") => {
                let (op, input) = match (toks.get(1), toks.get(2)) {
                    (Some(op), Some(input)) => (*op, *input),
                    _ => return Err(Error::Parse { line, reason: "usage: construct <op> <var> -> <var>".into() }),
                };
                let src = get(input)?;
                record.inputs.insert(input.to_string(), content_hash(src));
                let c = construct_by_name(op, src, &parse_params(&toks[3..], line)?)?;
                Some((need_target()?.to_string(), c))
            }
            Some("census") | Some("classify") => {
                let input = toks.get(1).ok_or_else(|| Error::Parse { line, reason: "missing intermediate".into() })?;
                let src = get(input)?;
                record.inputs.insert(input.to_string(), content_hash(src));
                record.report = Some(if toks[0] == "census" {
                    to_json(&census_any(src)?)
                } else {
                    match classify_3fullerene(src) {
                        Ok(c) => to_json(&c),
                        Err(r) => serde_json::json!({ "rejected": r.to_string() }),
                    }
                });
                None
            }
            Some("export") => {
                let (input, fmt) = match (toks.get(1), toks.get(2)) {
                    (Some(v), Some(f)) => (*v, f.parse::<Format>()?),
                    _ => return Err(Error::Parse { line, reason: "usage: export <var> <format> [file]".into() }),
                };
                let src = get(input)?;
                record.inputs.insert(input.to_string(), content_hash(src));
                let text = export(src, fmt, false)?;
                let file = toks.get(3).map_or_else(|| format!("{input}.{}", fmt.extension()), |f| f.to_string());
                write(&file, &text)?;
                record.outputs.insert(file, sha256_hex(&text));
                None
            }
            Some(other) => return Err(Error::Parse { line, reason: format!("unknown step {other:?}") }),
            None => None,
        };
        if let Some((name, c)) = produced {
            let text = write_canonical(&c);
            let ext = if matches!(c, Complex::Incidence(_)) { "cxc" } else { "cxf" };
            write(&format!("{name}.{ext}"), &text)?;
            record.outputs.insert(name.clone(), sha256_hex(&text));
            vars.insert(name, c);
        }
        steps.push(record);
    }
    let run = PipelineRun { steps, vars };
    if out_dir.is_some() {
        let manifest = serde_json::to_string_pretty(&run).expect("manifest serializes");
        write("manifest.json", &(manifest + "\n"))?;
    }
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corona_pipeline() {
        let run = run_pipeline("build dodecahedron -> d\nconstruct B d -> b\ncensus b\n", None).unwrap();
        let report = run.steps[2].report.as_ref().unwrap();
        assert_eq!(report["total"], 120);
        assert_eq!(report["entries"][0]["name"], "Do");
    }

    #[test]
    fn errors_name_the_line() {
        assert!(matches!(run_pipeline("frobnicate x\n", None), Err(Error::Parse { line: 1, .. })));
        assert!(run_pipeline("census nothing\n", None).is_err());
    }
}
