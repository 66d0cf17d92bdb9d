use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cellforge::classify::classify_3fullerene;
use cellforge::constructions::{facet_pairing_quotient, FacetPairing};
use cellforge::io::{export, read_pairing, read_path, write_canonical, Format};
use cellforge::pipeline::{build_by_name, census_any, construct_by_name, content_hash, run_pipeline, Params};
use cellforge::verify::{default_rows, deep_rows, verify_table};
use cellforge::{Complex, Error};

#[derive(Parser)]
#[command(name = "cellforge", version, about = "Build, transform and verify 3- and 4-dimensional fullerenes")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a seed complex, e.g. `build barrel i=6 --out b6.cxc`.
    Build {
        name: String,
        /// Builder parameters as key=value.
        params: Vec<String>,
        /// Builder parameter as key=value; repeatable.
        #[arg(long = "param")]
        param: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a construction: A, B, C, fold, quotient or dual.
    Construct {
        op: String,
        #[arg(long = "in")]
        input: PathBuf,
        /// Number of copies for A.
        #[arg(long)]
        n: Option<usize>,
        /// Twist in tenths of a turn for quotient.
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<i64>,
        /// Facet pairing file for quotient.
        #[arg(long)]
        pairing: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cell census of a rank-3 complex.
    Census {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Surface class of a 3-valent pentagon/hexagon surface.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Reproduce the f-vector and census table.
    VerifyTable {
        /// Include the long-running second subdivision.
        #[arg(long)]
        deep: bool,
    },
    /// Run a step script.
    Pipeline {
        script: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Convert to cxc, cxf, edge-list or face-list.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Refuse formats that drop structure.
        #[arg(long)]
        strict: bool,
    },
}

enum Failure {
    Verification(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_params(raw: &[String]) -> Result<Params, Failure> {
    raw.iter()
        .map(|t| {
            t.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| Failure::Usage(format!("expected key=value, got {t:?}")))
        })
        .collect()
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summarize(c: &Complex, out: Option<&Path>, json: bool) -> Result<(), Failure> {
    let text = write_canonical(c);
    let fv = c.f_vector();
    if let Some(p) = out {
        emit(Some(p), &text)?;
        if json {
            let view = if matches!(c, Complex::Incidence(_)) { "cxc" } else { "cxf" };
            let v = serde_json::json!({ "fvector": fv, "format": view, "sha256": content_hash(c), "out": p });
            println!("{v}");
        } else {
            println!("{fv}");
        }
        Ok(())
    } else {
        emit(None, &text)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Build { name, mut params, param, out } => {
            params.extend(param);
            let c = build_by_name(&name, &parse_params(&params)?)?;
            summarize(&c, out.as_deref(), json)
        }
        Command::Construct { op, input, n, twist, pairing, out } => {
            let src = read_path(&input)?;
            let c = if let Some(file) = pairing {
                if op != "quotient" {
                    return Err(Failure::Usage("--pairing only applies to quotient".into()));
                }
                let text = std::fs::read_to_string(&file)
                    .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
                let poly = src
                    .incidence()
                    .ok_or_else(|| Failure::Usage("quotient needs a regular polyhedron".into()))?
                    .clone();
                Complex::Flags(facet_pairing_quotient(&FacetPairing::new(poly, read_pairing(&text)?)?)?)
            } else {
                let mut params = Params::new();
                if let Some(n) = n {
                    params.insert("n".into(), n.to_string());
                }
                if let Some(t) = twist {
                    params.insert("twist".into(), t.to_string());
                }
                construct_by_name(&op, &src, &params)?
            };
            summarize(&c.normalized(), out.as_deref(), json)
        }
        Command::Census { input } => {
            let report = census_any(&read_path(&input)?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("{report}");
            }
            Ok(())
        }
        Command::Classify { input } => match classify_3fullerene(&read_path(&input)?) {
            Ok(c) => {
                if json {
                    println!("{}", serde_json::to_string_pretty(&c).expect("class serializes"));
                } else {
                    println!("{} p5={} p6={} chi={} {:?}", c.class, c.p5, c.p6, c.euler_characteristic, c.orientability);
                }
                Ok(())
            }
            Err(r) => {
                if json {
                    println!("{}", serde_json::json!({ "rejected": r.to_string() }));
                }
                Err(Failure::Verification(format!("not a 3-fullerene: {r}")))
            }
        },
        Command::VerifyTable { deep } => {
            let rows = if deep { deep_rows() } else { default_rows() };
            let records = verify_table(&rows);
            if json {
                println!("{}", serde_json::to_string_pretty(&records).expect("records serialize"));
            } else {
                for r in &records {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    println!("{status}  {:<16} {:?} ({} ms)", r.name, r.observed_counts, r.duration_ms);
                    if !r.passed {
                        println!("      expected {:?} {:?} {:?}", r.expected_counts, r.expected_gonality, r.expected_census);
                        println!("      observed {:?} {:?} {:?}", r.observed_counts, r.observed_gonality, r.observed_census);
                        for (name, ok) in &r.checks {
                            if !ok {
                                println!("      check failed: {name}");
                            }
                        }
                        if let Some(e) = &r.error {
                            println!("      error: {e}");
                        }
                    }
                }
            }
            let failed = records.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                Err(Failure::Verification(format!("{failed} of {} rows failed", records.len())))
            } else {
                Ok(())
            }
        }
        Command::Pipeline { script, out_dir } => {
            let text = std::fs::read_to_string(&script)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", script.display())))?;
            let run = run_pipeline(&text, out_dir.as_deref())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&run).expect("manifest serializes"));
            } else {
                for s in &run.steps {
                    println!("{:>3}  {}", s.line, s.step);
                    for (name, hash) in &s.outputs {
                        println!("       {name} {}", &hash[..16]);
                    }
                    if let Some(r) = &s.report {
                        println!("       {r}");
                    }
                }
            }
            Ok(())
        }
        Command::Export { input, format, out, strict } => {
            let fmt: Format = format.parse()?;
            let text = export(&read_path(&input)?, fmt, strict)?;
            emit(out.as_deref(), &text)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("cellforge: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("cellforge: {msg}");
            ExitCode::from(2)
        }
    }
}
