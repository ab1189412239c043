//! Command-line front end: parse algebra and module spec files (or builtin
//! names), run the homological computations, and emit deterministic JSON
//! reports on standard output.
//!
//! Exit codes: 0 on success, 1 when `verify-paper` finds a mismatch, 2 for
//! input or parse errors.

mod files;
mod report;
mod verify;

use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use quiverhom::homalg::{
    ext_module, evaluation_map, is_reflexive, is_torsionless, is_two_reflexive, min_resolution,
    transpose,
};
use quiverhom::search::{enumerate_candidates, hunt_2reflexive_not_reflexive, hunt_ext2_projective};
use quiverhom::{presets, BoundQuiverAlgebra, FieldSpec, Module, Side};

use report::{
    BasisCount, CheckPayload, EvaluationPayload, ExtPayload, HuntPayload, Inputs, ReflexivePayload,
    Report, ResolvePayload, SourceDigest, TransposePayload, WitnessPayload,
};

const PAPER_ALGEBRA_JSON: &str = include_str!("../fixtures/paper.json");
const DUAL_NUMBERS_JSON: &str = include_str!("../fixtures/dualnumbers.json");

#[derive(Parser)]
#[command(
    name = "quiverhom",
    version,
    about = "Exact homological algebra over bound quiver algebras",
    long_about = "Computes duals, transposes, syzygies, Ext-modules and \
                  reflexivity verdicts for modules over finite-dimensional \
                  bound quiver algebras, with exact arithmetic. Algebra and \
                  module arguments are JSON file paths or builtin names \
                  (algebras: `paper`, `dualnumbers`; modules over `paper`: \
                  `N`, `Y`, `Y2`, and generally `S<v>`, `e<v>R`, `Re<v>`)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an algebra spec and report its dimension and path basis.
    Check { algebra: String },
    /// Compute Ext^degree(M, R) as a module on the opposite side.
    Ext { algebra: String, module: String, degree: usize },
    /// Compute the transpose of a module.
    Transpose { algebra: String, module: String },
    /// Compute a minimal projective resolution to the given length.
    Resolve { algebra: String, module: String, length: usize },
    /// Decide torsionless / reflexive / 2-reflexive for a module.
    Reflexive { algebra: String, module: String },
    /// Enumerate candidate modules and hunt for witnesses.
    Hunt {
        algebra: String,
        side: SideArg,
        budget: usize,
        mode: HuntMode,
    },
    /// Re-derive the frozen homological facts about the builtin `paper`
    /// algebra; exits nonzero if any of the sixteen checks fails.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Ground field: `rational` or `prime<p>` (e.g. `prime2`).
        #[arg(long, default_value = "rational")]
        field: String,
        /// Corrupt the builtin algebra first (negative-control hook).
        #[arg(long, hide = true)]
        tamper: bool,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum HuntMode {
    #[value(name = "ext2proj")]
    Ext2Proj,
    #[value(name = "2refl-not-refl")]
    TwoReflNotRefl,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Check { algebra } => {
            let (alg, digest) = load_algebra(&algebra)?;
            let quiver = alg.quiver();
            let mut basis_counts = Vec::new();
            for from in 0..quiver.vertex_count() {
                for to in 0..quiver.vertex_count() {
                    let count = alg.paths_between(from, to).len();
                    if count > 0 {
                        basis_counts.push(BasisCount {
                            from: quiver.vertex_label(from).to_string(),
                            to: quiver.vertex_label(to).to_string(),
                            count,
                        });
                    }
                }
            }
            let payload = CheckPayload {
                dimension: alg.dimension(),
                vertices: quiver.vertex_count(),
                arrows: quiver.arrows().len(),
                admissible: true,
                basis_counts,
            };
            Report::new(
                "check",
                Inputs { algebra: Some(digest), ..Inputs::default() },
                payload,
            )
            .print();
            Ok(ExitCode::SUCCESS)
        }
        Command::Ext { algebra, module, degree } => {
            if degree == 0 {
                return Err("degree must be at least 1".into());
            }
            let (alg, alg_digest) = load_algebra(&algebra)?;
            let (m, mod_digest) = load_module(&module, &alg)?;
            let ext = ext_module(&m, degree).map_err(|e| e.to_string())?;
            Report::new(
                "ext",
                Inputs {
                    algebra: Some(alg_digest),
                    module: Some(mod_digest),
                    degree: Some(degree),
                    ..Inputs::default()
                },
                ExtPayload::from_report(&ext),
            )
            .print();
            Ok(ExitCode::SUCCESS)
        }
        Command::Transpose { algebra, module } => {
            let (alg, alg_digest) = load_algebra(&algebra)?;
            let (m, mod_digest) = load_module(&module, &alg)?;
            let tr = transpose(&m);
            Report::new(
                "transpose",
                Inputs {
                    algebra: Some(alg_digest),
                    module: Some(mod_digest),
                    ..Inputs::default()
                },
                TransposePayload::from_module(&tr),
            )
            .print();
            Ok(ExitCode::SUCCESS)
        }
        Command::Resolve { algebra, module, length } => {
            let (alg, alg_digest) = load_algebra(&algebra)?;
            let (m, mod_digest) = load_module(&module, &alg)?;
            let res = min_resolution(&m, length).map_err(|e| e.to_string())?;
            Report::new(
                "resolve",
                Inputs {
                    algebra: Some(alg_digest),
                    module: Some(mod_digest),
                    length: Some(length),
                    ..Inputs::default()
                },
                ResolvePayload::from_resolution(&res),
            )
            .print();
            Ok(ExitCode::SUCCESS)
        }
        Command::Reflexive { algebra, module } => {
            let (alg, alg_digest) = load_algebra(&algebra)?;
            let (m, mod_digest) = load_module(&module, &alg)?;
            let ev = evaluation_map(&m);
            let tr = transpose(&m);
            let ext1 = ext_module(&tr, 1).map_err(|e| e.to_string())?;
            let ext2 = ext_module(&tr, 2).map_err(|e| e.to_string())?;
            let payload = ReflexivePayload {
                torsionless: is_torsionless(&m),
                reflexive: is_reflexive(&m).map_err(|e| e.to_string())?,
                two_reflexive: is_two_reflexive(&m).as_str(),
                evaluation: EvaluationPayload {
                    injective: ev.is_injective(),
                    surjective: ev.is_surjective(),
                    isomorphism: ev.is_isomorphism(),
                    double_dual_dims: ev.target().dims().as_slice().to_vec(),
                },
                ext1_of_transpose: ExtPayload::from_report(&ext1),
                ext2_of_transpose: ExtPayload::from_report(&ext2),
            };
            Report::new(
                "reflexive",
                Inputs {
                    algebra: Some(alg_digest),
                    module: Some(mod_digest),
                    ..Inputs::default()
                },
                payload,
            )
            .print();
            Ok(ExitCode::SUCCESS)
        }
        Command::Hunt { algebra, side, budget, mode } => {
            let (alg, alg_digest) = load_algebra(&algebra)?;
            let side: Side = side.into();
            let set = enumerate_candidates(&alg, side, budget);
            let (mode_name, witnesses) = match mode {
                HuntMode::Ext2Proj => ("ext2proj", hunt_ext2_projective(&set)),
                HuntMode::TwoReflNotRefl => {
                    ("2refl-not-refl", hunt_2reflexive_not_reflexive(&set))
                }
            };
            let payload = HuntPayload {
                mode: mode_name,
                side: side.as_str(),
                budget,
                candidates: set.candidates.len(),
                witnesses: witnesses.iter().map(WitnessPayload::from_witness).collect(),
            };
            Report::new(
                "hunt",
                Inputs {
                    algebra: Some(alg_digest),
                    side: Some(side.as_str().to_string()),
                    budget: Some(budget),
                    mode: Some(mode_name.to_string()),
                    ..Inputs::default()
                },
                payload,
            )
            .print();
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { field, tamper } => {
            let field = parse_field_flag(&field)?;
            let payload = verify::run_verify(field.clone(), tamper);
            let ok = payload.failed == 0;
            Report::new(
                "verify-paper",
                Inputs { field: Some(format!("{field}")), ..Inputs::default() },
                payload,
            )
            .print();
            if ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn parse_field_flag(text: &str) -> Result<FieldSpec, String> {
    if text == "rational" {
        return Ok(FieldSpec::rational());
    }
    if let Some(rest) = text.strip_prefix("prime") {
        let p: u64 = rest
            .parse()
            .map_err(|_| format!("bad field {text:?}; use rational or prime<p>"))?;
        return FieldSpec::prime(p).map_err(|e| e.to_string());
    }
    Err(format!("bad field {text:?}; use rational or prime<p>"))
}

/// Resolves an algebra argument: an existing file path first, then the
/// builtin names.
fn load_algebra(arg: &str) -> Result<(Arc<BoundQuiverAlgebra>, SourceDigest), String> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
        let alg = files::parse_algebra(&text)?;
        return Ok((alg, SourceDigest::new(arg, text.as_bytes())));
    }
    match arg {
        "paper" => Ok((
            files::parse_algebra(PAPER_ALGEBRA_JSON)?,
            SourceDigest::new("builtin:paper", PAPER_ALGEBRA_JSON.as_bytes()),
        )),
        "dualnumbers" => Ok((
            files::parse_algebra(DUAL_NUMBERS_JSON)?,
            SourceDigest::new("builtin:dualnumbers", DUAL_NUMBERS_JSON.as_bytes()),
        )),
        other => Err(format!(
            "algebra {other:?} is neither a file nor a builtin (paper, dualnumbers)"
        )),
    }
}

/// Resolves a module argument: an existing file path, a named builtin over
/// the `paper` algebra (`N`, `Y`, `Y2`), or one of the generic patterns
/// `S<v>` (simple right), `e<v>R` (projective right), `Re<v>` (projective
/// left) over any algebra.
fn load_module(arg: &str, algebra: &Arc<BoundQuiverAlgebra>) -> Result<(Module, SourceDigest), String> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
        let module = files::parse_module(&text, algebra)?;
        return Ok((module, SourceDigest::new(arg, text.as_bytes())));
    }
    let digest = SourceDigest::new(format!("builtin:{arg}"), arg.as_bytes());
    let is_paper = **algebra == *presets::paper_algebra(algebra.field().clone());
    match arg {
        "N" | "Y" | "Y2" if is_paper => {
            let module = match arg {
                "N" => presets::module_n(algebra),
                "Y" => presets::module_y(algebra),
                _ => presets::module_y2(algebra),
            };
            return Ok((module, digest));
        }
        "N" | "Y" | "Y2" => {
            return Err(format!(
                "builtin module {arg:?} is only defined over the builtin `paper` algebra"
            ));
        }
        _ => {}
    }
    let vertex = |label: &str| {
        algebra
            .quiver()
            .vertex_index(label)
            .ok_or_else(|| format!("unknown vertex {label:?} in module name {arg:?}"))
    };
    if let Some(rest) = arg.strip_prefix("Re") {
        let m = Module::projective(algebra, vertex(rest)?, Side::Left)
            .map_err(|e| e.to_string())?;
        return Ok((m, digest));
    }
    if let Some(rest) = arg.strip_prefix('e').and_then(|r| r.strip_suffix('R')) {
        let m = Module::projective(algebra, vertex(rest)?, Side::Right)
            .map_err(|e| e.to_string())?;
        return Ok((m, digest));
    }
    if let Some(rest) = arg.strip_prefix('S') {
        let m = Module::simple(algebra, vertex(rest)?, Side::Right)
            .map_err(|e| e.to_string())?;
        return Ok((m, digest));
    }
    Err(format!(
        "module {arg:?} is neither a file nor a recognized builtin name \
         (N, Y, Y2, S<v>, e<v>R, Re<v>)"
    ))
}
