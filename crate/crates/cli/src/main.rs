//! `cdp`: command-line front end for CDP sets, CDP matrices and their
//! separability tests.
//!
//! Exit status is 0 on success, 1 when the input is rejected by the library
//! (a JSON error object goes to stderr) and 2 on usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cdp_core::enumerate::{enumerate_bounded, DEFAULT_BOUND};
use cdp_core::io::{self, DenseJson, FamilyJson};
use cdp_core::linalg::CMatrix;
use cdp_core::maps::{
    breuer_hall_family, choi, reduction_family, AntisymUnitary, BreuerHallMap, IcqcChannel, IcqcGroup, LegOrder,
    LinearMap, ReductionMap,
};
use cdp_core::{cdp_set::tables, decompose, separability, CdpError, CdpOperator, CdpSet, Permutation};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cdp", version, about = "Completely different permutations and CDP matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Numerical tolerance for Hermiticity, PSD and criterion checks
    #[arg(long, global = true, default_value_t = cdp_core::DEFAULT_TOL)]
    tol: f64,

    /// Symbol base for cycle notation (input without a declared base, and output)
    #[arg(long, global = true, default_value_t = 0)]
    base: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a CDP set and report its structure
    Check {
        #[arg(long)]
        sigma: PathBuf,
    },
    /// Conjugated set E_j(σ_k(j)) = k (the set is brought to canonical order first)
    Conj {
        #[arg(long)]
        sigma: PathBuf,
    },
    /// The map ξ(i) = σ_i⁻¹(0)
    Xi {
        #[arg(long)]
        sigma: PathBuf,
    },
    /// List every maximal CDP set of degree n
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Rows in canonical order (σ_i(0) = i) instead of sorted
        #[arg(long)]
        canonical: bool,
        /// Print only the number of sets
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Regular representation of a group given by its multiplication table
    Regular {
        #[arg(long)]
        table: PathBuf,
    },
    /// Dense ρ[A, Σ] (text format prints the block grid)
    Build {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
        #[arg(long, default_value_t = 4)]
        precision: usize,
    },
    /// Blockwise spectrum and norms
    Spectrum {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
    },
    /// All separability criteria at once
    Analyze {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
    },
    /// Partial transpose: PPT verdict, and the transposed family when Σ is abelian
    Pt {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
    },
    /// Realignment criterion
    Realign {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
    },
    /// Majorisation of the spectrum by both reduced states
    Majorize {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
    },
    /// Choi matrices of positive maps and their CDP decompositions
    Maps {
        #[command(subcommand)]
        map: MapCommand,
    },
    /// Golden checks against known matrices and sets
    Paper {
        #[command(subcommand)]
        action: PaperCommand,
    },
}

#[derive(Subcommand)]
enum MapCommand {
    /// Reduction map X ↦ tr(X) id − X
    Reduction {
        #[arg(long)]
        n: usize,
    },
    /// Breuer-Hall map for an antisymmetric unitary built from a fixed-point-free involution
    BreuerHall {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pairing: String,
    },
    /// Irreducibly covariant channel of S3 or the quaternion group
    Icqc {
        #[arg(long)]
        group: String,
        /// Comma-separated weights, one per non-trivial irrep
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        weights: Vec<f64>,
    },
}

#[derive(Subcommand)]
enum PaperCommand {
    /// Run every golden check; exits 1 if any fails
    Reproduce,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Domain(#[from] CdpError),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("{failed} of {total} golden checks failed")]
    Golden { failed: usize, total: usize },
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.kind(),
            CliError::Io { .. } => "io-error",
            CliError::Golden { .. } => "golden-mismatch",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// What a command produced: a JSON value and its text rendering.
struct Output {
    json: Value,
    text: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout_only = None;
    let result = run(&cli, &mut stdout_only);
    if let Some(out) = stdout_only {
        emit(&cli, &out);
    }
    match result {
        Ok(out) => {
            emit(&cli, &out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            let err = json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{err}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, out: &Output) {
    use std::io::Write;
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("serialisable") + "\n",
        Format::Text => out.text.clone(),
    };
    // a closed pipe downstream is not our failure
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_sigma(path: &Path, base: usize) -> Result<CdpSet> {
    Ok(io::parse_sigma(&read(path)?, base)?)
}

fn load_operator(family: &Path, sigma: &Path, base: usize) -> Result<CdpOperator> {
    let fam = io::parse_family(&read(family)?)?;
    let sigma = load_sigma(sigma, base)?;
    Ok(CdpOperator::build(fam, sigma)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

fn cycles(s: &CdpSet, base: usize) -> Vec<String> {
    s.perms().iter().map(|p| p.to_cycles(base)).collect()
}

fn set_json(s: &CdpSet, base: usize) -> Value {
    json!({
        "n": s.degree(),
        "base": 0,
        "perms": s.perms().iter().map(|p| p.images().to_vec()).collect::<Vec<_>>(),
        "cycles": cycles(s, base),
    })
}

fn set_text(s: &CdpSet, base: usize) -> String {
    let mut out = String::new();
    if base != 0 {
        out.push_str(&format!("# base: {base}\n"));
    }
    for c in cycles(s, base) {
        out.push_str(&c);
        out.push('\n');
    }
    out
}

fn run(cli: &Cli, early: &mut Option<Output>) -> Result<Output> {
    let base = cli.base;
    let tol = cli.tol;
    match &cli.command {
        Command::Check { sigma } => {
            let s = load_sigma(sigma, base)?;
            let st = s.structure();
            let text = format!(
                "n = {}\ncanonical: {}\nabelian: {}\ngroup: {}\ncontains identity: {}\n{}",
                s.degree(),
                st.is_canonical,
                st.is_abelian,
                st.is_group,
                st.contains_identity,
                set_text(&s, base)
            );
            let mut json = set_json(&s, base);
            json["structure"] = to_value(&st);
            Ok(Output { json, text })
        }
        Command::Conj { sigma } => {
            let s = load_sigma(sigma, base)?.canonicalize();
            let e = s.conjugated_set()?;
            Ok(Output {
                json: json!({ "sigma": set_json(&s, base), "conjugated": set_json(&e, base) }),
                text: set_text(&e, base),
            })
        }
        Command::Xi { sigma } => {
            let s = load_sigma(sigma, base)?.canonicalize();
            let xi = s.xi()?;
            Ok(Output {
                json: json!({
                    "images": xi.0.images(),
                    "cycles": xi.0.to_cycles(base),
                    "involution": xi.is_involution(),
                }),
                text: format!("{}\ninvolution: {}\n", xi.0.to_cycles(base), xi.is_involution()),
            })
        }
        Command::Enumerate { n, canonical, count, bound } => {
            let sets = enumerate_bounded(*n, *canonical, *bound)?;
            if *count {
                let total = sets.count();
                return Ok(Output {
                    json: json!({ "n": n, "count": total }),
                    text: format!("{total}\n"),
                });
            }
            let sets: Vec<CdpSet> = sets.collect();
            let text = sets
                .iter()
                .map(|s| cycles(s, base).join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output {
                json: json!({
                    "n": n,
                    "count": sets.len(),
                    "sets": sets.iter().map(|s| set_json(s, base)).collect::<Vec<_>>(),
                }),
                text: format!("{text}\n"),
            })
        }
        Command::Regular { table } => {
            let t = io::parse_table(&read(table)?)?;
            let s = CdpSet::regular_representation(&t)?;
            Ok(Output {
                json: set_json(&s, base),
                text: set_text(&s, base),
            })
        }
        Command::Build { family, sigma, precision } => {
            let op = load_operator(family, sigma, base)?;
            Ok(Output {
                json: to_value(&DenseJson::from(op.dense())),
                text: op.render_grid(*precision),
            })
        }
        Command::Spectrum { family, sigma } => {
            let op = load_operator(family, sigma, base)?;
            let spec = op.spectrum()?;
            let norms = op.norms();
            let blocks: Vec<Value> = spec
                .blocks
                .iter()
                .map(|b| json!({ "k": b.k, "eigenvalues": b.eigenvalues }))
                .collect();
            let mut text = String::new();
            for b in &spec.blocks {
                let vals: Vec<String> = b.eigenvalues.iter().map(|x| format!("{x:.6}")).collect();
                text.push_str(&format!("k = {}: {}\n", b.k, vals.join(" ")));
            }
            text.push_str(&format!("hs = {:.6}\ntr = {:.6}\n", norms.hs, norms.tr));
            Ok(Output {
                json: json!({ "blocks": blocks, "eigenvalues": spec.eigenvalues(), "norms": to_value(&norms) }),
                text,
            })
        }
        Command::Analyze { family, sigma } => {
            let op = load_operator(family, sigma, base)?;
            let report = separability::analyze(&op, tol)?;
            let text = format!(
                "psd: {}\nppt: {} (min {:.6e}, {:?})\nrealignment: {} (sum {:.6})\nmajorisation: {} / {}\nentangled: {}\n",
                report.psd,
                report.ppt,
                report.pt_min_eigenvalue,
                report.ppt_method,
                report.realignment_pass,
                report.realignment_sum,
                report.majorisation.vs_rho1,
                report.majorisation.vs_rho2,
                report.entangled
            );
            Ok(Output {
                json: to_value(&report),
                text,
            })
        }
        Command::Pt { family, sigma } => {
            let op = load_operator(family, sigma, base)?;
            let verdict = separability::ppt(&op, tol)?;
            let mut json = to_value(&verdict);
            let mut text = format!("ppt: {}\nmin eigenvalue: {:.6e}\n", verdict.ppt, verdict.min_eigenvalue);
            if op.sigma().is_abelian() {
                let pt = separability::pt_as_cdp(&op)?;
                json["family"] = to_value(&FamilyJson::from(pt.family()));
                json["sigma"] = set_json(pt.sigma(), base);
                text.push_str(&set_text(pt.sigma(), base));
            }
            Ok(Output { json, text })
        }
        Command::Realign { family, sigma } => {
            let op = load_operator(family, sigma, base)?;
            let r = separability::realignment(&op, tol)?;
            Ok(Output {
                json: json!({
                    "pass": r.pass,
                    "sum": r.sum,
                    "normalized": r.normalized,
                    "method": to_value(&r.method),
                    "family": r.family.as_ref().map(|f| to_value(&FamilyJson::from(f))),
                }),
                text: format!("pass: {}\nsum: {:.6}\n", r.pass, r.sum),
            })
        }
        Command::Majorize { family, sigma } => {
            let op = load_operator(family, sigma, base)?;
            let v = separability::majorisation_criterion(&op, tol)?;
            Ok(Output {
                json: to_value(&v),
                text: format!("rho1: {}\nrho2: {}\n", v.vs_rho1, v.vs_rho2),
            })
        }
        Command::Maps { map } => run_map(map, base, tol),
        Command::Paper { action: PaperCommand::Reproduce } => {
            let checks = cdp_core::golden::reproduce()?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            let text: String = checks
                .iter()
                .map(|c| format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
                .collect();
            let out = Output {
                json: json!({ "checks": to_value(&checks), "failed": failed }),
                text,
            };
            if failed == 0 {
                Ok(out)
            } else {
                *early = Some(out);
                Err(CliError::Golden {
                    failed,
                    total: checks.len(),
                })
            }
        }
    }
}

/// Choi matrix, and the CDP family if it has one over `sigma`.
fn map_output(map: &dyn LinearMap, sigma: Option<&CdpSet>, family: Option<FamilyJson>, base: usize) -> Output {
    let c = choi(map, LegOrder::InputFirst);
    let n = map.dim();
    let mut text = format!("# {} (n = {n})\n", map.name());
    text.push_str(&dense_text(&c.dense));
    let json = json!({
        "map": map.name(),
        "legs": to_value(&c.legs),
        "choi": to_value(&DenseJson::from(&c.dense)),
        "sigma": sigma.map(|s| set_json(s, base)),
        "family": family.as_ref().map(to_value),
    });
    Output { json, text }
}

fn dense_text(m: &CMatrix) -> String {
    let cells: Vec<Vec<String>> = (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| cdp_core::operator::format_complex(m[(r, c)], 4)).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| row.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

fn run_map(map: &MapCommand, base: usize, tol: f64) -> Result<Output> {
    match map {
        MapCommand::Reduction { n } => {
            let m = ReductionMap::new(*n)?;
            let sigma = CdpSet::cyclic(*n)?;
            let fam = reduction_family(&sigma)?;
            Ok(map_output(&m, Some(&sigma), Some(FamilyJson::from(&fam)), base))
        }
        MapCommand::BreuerHall { n, pairing } => {
            let p = Permutation::parse_cycles(pairing, *n, base)?;
            let m = BreuerHallMap::new(AntisymUnitary::new(p.clone())?);
            // the family exists when the pairing is an element of (Z2)^m acting regularly
            let found = if n.is_power_of_two() && *n >= 2 {
                let table = tables::elementary_abelian_2(n.trailing_zeros());
                let sigma = CdpSet::regular_representation(&table)?;
                sigma.perms().iter().position(|q| *q == p).map(|k| (sigma, k))
            } else {
                None
            };
            match found {
                Some((sigma, k)) => {
                    let fam = breuer_hall_family(&sigma, k)?;
                    Ok(map_output(&m, Some(&sigma), Some(FamilyJson::from(&fam)), base))
                }
                None => Ok(map_output(&m, None, None, base)),
            }
        }
        MapCommand::Icqc { group, weights } => {
            let g: IcqcGroup = group.parse()?;
            let ch = IcqcChannel::new(g, weights.clone())?;
            let sigma = CdpSet::cyclic(ch.dim())?;
            let dense = choi(&ch, LegOrder::InputFirst).dense;
            let fam = decompose(&dense, &sigma, tol).ok();
            let sigma = fam.as_ref().map(|_| &sigma);
            Ok(map_output(&ch, sigma, fam.as_ref().map(FamilyJson::from), base))
        }
    }
}
