//! The `skm` command line. [`run`] parses arguments and returns the report and
//! exit code without touching the process, so it can be tested directly.

pub mod report;

use crate::cartan::{is_generalized_cartan, Diagram, DiagramFile, FormatError};
use crate::classify::{
    finite_type_label, is_regular_kac_moody, is_subfinite, qmnt_report, recognize_family,
    solve_qmnt, Family,
};
use crate::integrable::{is_integrable_hw, IntegrableError, Weight};
use crate::reflect::{orbit, principal_roots, Base, CanonMode, ReflectError, DEFAULT_MAX_DEPTH};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

/// Depth used by `verify-corpus` for orbit searches.
pub const CORPUS_DEPTH: usize = 32;

#[derive(Parser, Debug)]
#[command(
    name = "skm",
    version,
    about = "Odd reflections, classification and integrability for contragredient Lie superalgebras"
)]
struct Cli {
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normalized diagram.
    Normalize { file: PathBuf },
    /// Reflect at one vertex (1-based).
    Reflect {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
        /// Even reflection instead of odd.
        #[arg(long)]
        even: bool,
    },
    /// Orbit under odd reflections.
    Orbit {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Identify diagrams that differ by an integer shift of the parameter.
        #[arg(long)]
        mod_shift: bool,
    },
    /// Run one decision procedure.
    Check {
        file: PathBuf,
        #[command(flatten)]
        what: CheckWhat,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Name the family of the diagram.
    Classify { file: PathBuf },
    /// Solve for Q±(m,n,t).
    #[command(allow_negative_numbers = true)]
    Qmnt {
        m: i64,
        n: i64,
        t: i64,
        #[arg(long, value_enum)]
        branch: Option<BranchArg>,
    },
    /// Principal roots with their witnesses.
    PrincipalRoots {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Decide integrability of L(lambda); the weight is given on the coroots of the file's rows.
    Integrable {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
    },
    /// Re-check a fixture directory; files under `negative/` must fail.
    VerifyCorpus { dir: PathBuf },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CheckWhat {
    #[arg(long)]
    gcm: bool,
    #[arg(long)]
    regular: bool,
    #[arg(long)]
    subfinite: bool,
    #[arg(long)]
    finite_type: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BranchArg {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub report: String,
}

enum Outcome {
    /// Verdict `Some(true)` exits 0, anything else 1.
    Report(Option<bool>, Value),
    Input(String),
}

fn verdict(v: Option<bool>, mut body: Value) -> Outcome {
    body["verdict"] = json!(v);
    Outcome::Report(v, body)
}

fn load(path: &Path) -> Result<(DiagramFile, Diagram, Vec<crate::scalars::Scalar>), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file = DiagramFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let (d, scales) = file
        .to_diagram_with_scales()
        .map_err(|e: FormatError| format!("{}: {e}", path.display()))?;
    Ok((file, d, scales))
}

pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandResult {
                code,
                report: e.render().to_string(),
            };
        }
    };
    let outcome = dispatch(cli.command).unwrap_or_else(Outcome::Input);
    match outcome {
        Outcome::Report(v, body) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&body)
            } else {
                serde_json::to_string(&body)
            }
            .expect("report serializes");
            CommandResult {
                code: if v == Some(true) { 0 } else { 1 },
                report: text + "\n",
            }
        }
        Outcome::Input(msg) => CommandResult {
            code: 2,
            report: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, String> {
    Ok(match cmd {
        Command::Normalize { file } => {
            let (_, d, scales) = load(&file)?;
            verdict(
                Some(true),
                json!({"diagram": report::diagram(&d), "scales": report::scalars(&scales)}),
            )
        }
        Command::Reflect { file, vertex, even } => {
            let (_, d, _) = load(&file)?;
            if vertex == 0 || vertex > d.n() {
                return Err(format!("vertex {vertex} out of range 1..={}", d.n()));
            }
            let b = Base::new(&d);
            let r = if even {
                b.even_reflect(vertex - 1)
            } else {
                b.odd_reflect(vertex - 1)
            };
            match r {
                Ok(nb) => verdict(Some(true), json!({"base": report::base(&nb)})),
                Err(e @ (ReflectError::NotRegular(_) | ReflectError::NotIntegral(_))) => {
                    verdict(Some(false), json!({"refused": e.to_string()}))
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        Command::Orbit {
            file,
            max_depth,
            mod_shift,
        } => {
            let (_, d, _) = load(&file)?;
            if mod_shift && !d.is_parametric() {
                return Err("--mod-shift needs a parametric diagram".into());
            }
            let mode = if mod_shift {
                CanonMode::ModShift
            } else {
                CanonMode::Exact
            };
            let o = orbit(&d, max_depth, mode);
            verdict(
                Some(o.status.is_closed()),
                json!({"orbit": report::orbit(&o)}),
            )
        }
        Command::Check {
            file,
            what,
            max_depth,
        } => {
            let (_, d, _) = load(&file)?;
            check(&d, &what, max_depth)?
        }
        Command::Classify { file } => {
            let (_, d, _) = load(&file)?;
            let l = recognize_family(&d);
            verdict(
                Some(l.family != Family::Unknown),
                json!({"family": report::family(&l)}),
            )
        }
        Command::Qmnt { m, n, t, branch } => {
            let (p, q) = solve_qmnt(m, n, t).map_err(|e| e.to_string())?;
            let chosen = match branch {
                Some(BranchArg::Plus) => vec![p],
                Some(BranchArg::Minus) => vec![q],
                None => vec![p, q],
            };
            let sols: Vec<Value> = chosen
                .iter()
                .map(|s| report::qmnt(s, &qmnt_report(s)))
                .collect();
            verdict(Some(true), json!({"solutions": sols}))
        }
        Command::PrincipalRoots { file, max_depth } => {
            let (_, d, _) = load(&file)?;
            let pr = principal_roots(&d, max_depth);
            let v = pr.complete().then_some(true);
            verdict(v, json!({"principal_roots": report::principal(&pr)}))
        }
        Command::Integrable {
            file,
            weight,
            max_depth,
        } => {
            let (_, d, scales) = load(&file)?;
            let w = Weight::parse(&weight).map_err(|e| e.to_string())?;
            if w.len() != d.n() {
                return Err(format!(
                    "weight has {} values, diagram has {} vertices",
                    w.len(),
                    d.n()
                ));
            }
            let wn = w.rescaled(&scales);
            let head = json!({"weight": report::scalars(&w.values), "normalized_weight": report::scalars(&wn.values)});
            match is_integrable_hw(&d, &wn, max_depth) {
                Ok(v) => {
                    let mut body = head;
                    body["conditions"] = report::integrability(&v);
                    verdict(Some(v.integrable), body)
                }
                Err(e @ IntegrableError::NotIntegrableAt { .. }) => {
                    let mut body = head;
                    body["reason"] = json!(e.to_string());
                    verdict(Some(false), body)
                }
                Err(e @ (IntegrableError::Truncated(_) | IntegrableError::Unresolved(_))) => {
                    let mut body = head;
                    body["reason"] = json!(e.to_string());
                    verdict(None, body)
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        Command::VerifyCorpus { dir } => verify_corpus(&dir)?,
    })
}

fn check(d: &Diagram, what: &CheckWhat, max_depth: usize) -> Result<Outcome, String> {
    Ok(if what.gcm {
        let v = is_generalized_cartan(d);
        verdict(
            Some(v.is_empty()),
            json!({"check": "gcm", "violations": report::violations(&v)}),
        )
    } else if what.regular {
        let v = is_regular_kac_moody(d, max_depth);
        verdict(
            v.is_regular(),
            json!({"check": "regular", "detail": report::regular(&v)}),
        )
    } else if what.subfinite {
        let v = is_subfinite(d, max_depth).map_err(|e| e.to_string())?;
        verdict(
            v.is_subfinite(),
            json!({"check": "subfinite", "detail": report::subfinite(&v)}),
        )
    } else {
        match finite_type_label(d) {
            Ok(label) => verdict(
                Some(label.is_some()),
                json!({"check": "finite-type", "label": label}),
            ),
            Err(e) => verdict(
                Some(false),
                json!({"check": "finite-type", "label": null, "reason": e.to_string()}),
            ),
        }
    })
}

fn diagram_files(dir: &Path) -> Result<Vec<PathBuf>, String> {
    let rd = std::fs::read_dir(dir).map_err(|e| format!("cannot read {}: {e}", dir.display()))?;
    let mut files: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "diagram"))
        .collect();
    files.sort();
    Ok(files)
}

fn verify_corpus(dir: &Path) -> Result<Outcome, String> {
    let mut entries = Vec::new();
    let mut all = true;
    for f in diagram_files(dir)? {
        let (file, d, _) = load(&f)?;
        let regular = is_regular_kac_moody(&d, CORPUS_DEPTH).is_regular();
        let subfinite = is_subfinite(&d, CORPUS_DEPTH)
            .ok()
            .and_then(|v| v.is_subfinite());
        let recognized = recognize_family(&d).family.name();
        let name_ok = file.name.as_ref().is_none_or(|n| *n == recognized);
        let ok = regular == Some(true) && subfinite == Some(true) && name_ok;
        all &= ok;
        entries.push(json!({
            "file": f.file_name().map(|s| s.to_string_lossy().into_owned()),
            "name": file.name,
            "recognized": recognized,
            "regular": regular,
            "subfinite": subfinite,
            "ok": ok,
        }));
    }
    let neg_dir = dir.join("negative");
    let mut negatives = Vec::new();
    if neg_dir.is_dir() {
        for f in diagram_files(&neg_dir)? {
            let (_, d, _) = load(&f)?;
            let regular = is_regular_kac_moody(&d, CORPUS_DEPTH).is_regular();
            let subfinite = is_subfinite(&d, CORPUS_DEPTH)
                .ok()
                .and_then(|v| v.is_subfinite());
            let ok = regular == Some(false) || subfinite == Some(false);
            all &= ok;
            negatives.push(json!({
                "file": f.file_name().map(|s| s.to_string_lossy().into_owned()),
                "regular": regular,
                "subfinite": subfinite,
                "ok": ok,
            }));
        }
    }
    Ok(verdict(
        Some(all),
        json!({"checked": entries.len() + negatives.len(), "fixtures": entries, "negative": negatives}),
    ))
}
