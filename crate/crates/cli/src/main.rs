//! Command-line front end: checks algebras, representations, cocycles and
//! extensions read from JSON files, and runs the built-in corpus.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use trilie::algebra::ThreeLieAlgebra;
use trilie::cochain::{ClassicalComplex, CohomologyReport};
use trilie::corpus::{self, RunOptions};
use trilie::extension::{check_extension, mc_defect, ExtensionData};
use trilie::gencohom::{GenComplex, MixedCochain, TwoCochainTriple};
use trilie::io;
use trilie::rep::{
    check_genrep_canonical, check_genrep_eqs_with, check_representation_with, GeneralizedRepresentation,
};
use trilie::sampling::{describe_assignment, resolve_seed, sample_assignments};
use trilie::{Error, Exec, ParameterAssignment, Result};

#[derive(Parser)]
#[command(
    name = "trilie",
    version,
    about = "Exact checks for 3-Lie algebras, their representations, cohomology and extensions"
)]
struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Run every inner loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RepInput {
    /// Algebra file.
    #[arg(long)]
    algebra: PathBuf,
    /// Representation file (rho, and nu for generalized representations).
    #[arg(long)]
    rep: PathBuf,
}

#[derive(Args)]
struct Sampling {
    /// Check parametric data identically in its parameters (the default).
    #[arg(long, conflicts_with = "samples")]
    symbolic: bool,
    /// Check parametric data at this many sampled rational points instead.
    #[arg(long)]
    samples: Option<usize>,
    /// Seed for sampled points; TRILIE_SEED takes precedence.
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Fundamental Identity of an algebra.
    CheckFi { file: PathBuf },
    /// Check that rho is a representation.
    CheckRep(RepInput),
    /// Check that (rho, nu) is a generalized representation.
    CheckGenrep {
        #[command(flatten)]
        input: RepInput,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Check a cochain against the cocycle conditions, or solve for all cocycles.
    Cocycles {
        #[command(flatten)]
        input: RepInput,
        /// 1 for maps g -> V, 2 for 2-cochains on g + V.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        degree: u8,
        /// Print a basis of the cocycle space.
        #[arg(long)]
        solve: bool,
        /// Cochain file to check.
        #[arg(long, conflicts_with = "solve")]
        cochain: Option<PathBuf>,
    },
    /// Cohomology dimensions in degree p.
    Cohomology {
        #[arg(long)]
        algebra: PathBuf,
        /// Coefficients; without it, the adjoint representation is used.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Use the classical complex of rho instead of the generalized complex.
        #[arg(long, requires = "rep")]
        classical: bool,
        #[arg(long)]
        p: usize,
        /// Also print cocycles representing a basis of cohomology.
        #[arg(long)]
        representatives: bool,
    },
    /// Check an abelian extension: identities, Fundamental Identity and Maurer-Cartan.
    CheckExt {
        file: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Evaluate the Maurer-Cartan defect of an extension.
    CheckMc {
        file: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// The built-in corpus.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Reproduce every expected verdict.
    Run {
        /// Entry id; `*` matches any substring.
        #[arg(long)]
        filter: Option<String>,
        /// Sampled points per parametric entry.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Skip the identical-in-parameters checks.
        #[arg(long)]
        no_symbolic: bool,
    },
    /// List entries and their expectations.
    List {
        #[arg(long)]
        filter: Option<String>,
    },
    /// Write every payload as JSON files into a directory.
    Export { dir: PathBuf },
}

/// Outcome of one command: verdict, text lines and the JSON form.
struct Report {
    passed: bool,
    lines: Vec<String>,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    match run(cli.command, exec) {
        Ok(report) => {
            let text = if cli.json {
                let mut body = report.json;
                body["passed"] = json!(report.passed);
                serde_json::to_string_pretty(&body).expect("plain data serializes")
            } else {
                report.lines.join("\n")
            };
            // A closed pipe (e.g. `| head`) is not an error of the check.
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, exec: Exec) -> Result<Report> {
    match command {
        Command::CheckFi { file } => check_fi(&io::load_algebra(&file)?, exec),
        Command::CheckRep(input) => check_rep(&input, exec),
        Command::CheckGenrep { input, sampling } => check_genrep(&input, &sampling, exec),
        Command::Cocycles {
            input,
            degree,
            solve,
            cochain,
        } => cocycles(&input, degree, solve, cochain.as_deref(), exec),
        Command::Cohomology {
            algebra,
            rep,
            classical,
            p,
            representatives,
        } => cohomology(&algebra, rep.as_deref(), classical, p, representatives, exec),
        Command::CheckExt { file, sampling } => check_ext(&io::load_extension(&file)?, &sampling, exec),
        Command::CheckMc { file, sampling } => check_mc(&io::load_extension(&file)?, &sampling, exec),
        Command::Corpus(c) => corpus_command(c, exec),
    }
}

fn load_pair(input: &RepInput) -> Result<(ThreeLieAlgebra, GeneralizedRepresentation)> {
    let alg = io::load_algebra(&input.algebra)?;
    let gr = io::load_genrep(&input.rep, alg.dim())?;
    Ok((alg, gr))
}

/// The points at which parametric data is checked: `None` stands for the data itself.
fn points<F>(
    params: std::collections::BTreeSet<String>,
    sampling: &Sampling,
    instantiate: F,
) -> Result<Vec<Option<ParameterAssignment>>>
where
    F: Fn(&ParameterAssignment) -> Result<()>,
{
    match sampling.samples {
        Some(count) if !params.is_empty() => {
            Ok(
                sample_assignments(&params, count, resolve_seed(sampling.seed), instantiate)?
                    .into_iter()
                    .map(Some)
                    .collect(),
            )
        }
        _ => Ok(vec![None]),
    }
}

fn label(point: &Option<ParameterAssignment>, parametric: bool) -> String {
    match point {
        Some(v) => describe_assignment(v),
        None if parametric => "symbolic".into(),
        None => "exact".into(),
    }
}

fn check_fi(alg: &ThreeLieAlgebra, exec: Exec) -> Result<Report> {
    let report = alg.check_fi(exec);
    let (line, witness) = match &report.witness {
        None => (
            format!("Fundamental Identity holds ({}-dimensional)", alg.dim()),
            Value::Null,
        ),
        Some(w) => {
            let text = alg.describe_witness(w);
            (text.clone(), json!(text))
        }
    };
    Ok(Report {
        passed: report.holds(),
        lines: vec![line],
        json: json!({ "command": "check-fi", "dim": alg.dim(), "witness": witness }),
    })
}

fn check_rep(input: &RepInput, exec: Exec) -> Result<Report> {
    let (alg, gr) = load_pair(input)?;
    let report = check_representation_with(&alg, &gr.rho, exec)?;
    let mut lines = vec![if report.holds() {
        format!("representation identities hold ({})", report.checked.join(", "))
    } else {
        "representation identities fail".into()
    }];
    lines.extend(report.failures.iter().map(|f| format!("  {f}")));
    if !gr.nu.is_zero() {
        lines.push("note: nu is ignored by this check".into());
    }
    Ok(Report {
        passed: report.holds(),
        json: json!({
            "command": "check-rep",
            "checked": report.checked,
            "failures": report.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }),
        lines,
    })
}

fn check_genrep(input: &RepInput, sampling: &Sampling, exec: Exec) -> Result<Report> {
    let (alg, gr) = load_pair(input)?;
    let parametric = !gr.is_rational() || !alg.is_rational();
    let mut params = alg.parameters();
    params.extend(gr.parameters());
    let pts = points(params, sampling, |v| {
        alg.instantiate(v)?;
        gr.instantiate(v).map(|_| ())
    })?;
    let mut passed = true;
    let mut lines = Vec::new();
    let mut results = Vec::new();
    for pt in &pts {
        let (a, g) = match pt {
            Some(v) => (alg.instantiate(v)?, gr.instantiate(v)?),
            None => (alg.clone(), gr.clone()),
        };
        let at = label(pt, parametric);
        let report = check_genrep_eqs_with(&a, &g, exec)?;
        let canonical = if a.is_rational() && g.is_rational() {
            Some(check_genrep_canonical(&a, &g, exec)?)
        } else {
            None
        };
        passed &= report.holds();
        lines.push(format!(
            "{at}: identities {}{}",
            if report.holds() { "hold" } else { "fail" },
            match canonical {
                Some(c) => format!(", canonical structure check {}", if c { "holds" } else { "fails" }),
                None => String::new(),
            }
        ));
        lines.extend(report.failures.iter().map(|f| format!("  {f}")));
        if canonical.is_some_and(|c| c != report.holds()) {
            passed = false;
            lines.push("  the identity check and the canonical structure check disagree".into());
        }
        results.push(json!({
            "at": at,
            "holds": report.holds(),
            "canonical": canonical,
            "failures": report.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }));
    }
    Ok(Report {
        passed,
        lines,
        json: json!({ "command": "check-genrep", "points": results }),
    })
}

fn cocycles(input: &RepInput, degree: u8, solve: bool, cochain: Option<&Path>, exec: Exec) -> Result<Report> {
    let (alg, gr) = load_pair(input)?;
    let cx = GenComplex::new(&alg, &gr, exec)?;
    let (n, m) = (alg.dim(), gr.dim_v());
    if let Some(path) = cochain {
        let c = io::parse_mixed_cochain(&std::fs::read_to_string(path)?, n, m)?;
        if c.degree() + 1 != degree as usize {
            return Err(Error::IncompatibleSignature(format!(
                "a {degree}-cocycle has {} pair slots, the file has {}",
                degree - 1,
                c.degree()
            )));
        }
        let in_kernel = cx.d(&c)?.is_zero();
        let identities = if degree == 1 {
            Some(cx.check_one_cocycle(&c.to_hom())?)
        } else {
            TwoCochainTriple::from_mixed(&c)
                .ok()
                .map(|t| cx.check_two_cocycle(&t))
                .transpose()?
        };
        let holds = identities.as_ref().is_none_or(|r| r.holds());
        let mut lines = vec![format!(
            "d of the cochain {}",
            if in_kernel { "vanishes" } else { "does not vanish" }
        )];
        match &identities {
            Some(r) if r.holds() => lines.push(format!("cocycle identities hold ({})", r.checked.join(", "))),
            Some(r) => {
                lines.push("cocycle identities fail".into());
                lines.extend(r.failures.iter().map(|f| format!("  {f}")));
            }
            None => lines.push("cochain is not fully skew; only d was evaluated".into()),
        }
        return Ok(Report {
            passed: in_kernel && holds,
            lines,
            json: json!({
                "command": "cocycles",
                "degree": degree,
                "in_kernel": in_kernel,
                "failures": identities
                    .map(|r| r.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>())
                    .unwrap_or_default(),
            }),
        });
    }
    let basis: Vec<MixedCochain> = if degree == 1 {
        cx.solve_one_cocycles()?
            .iter()
            .map(|a| MixedCochain::from_hom(n, m, a))
            .collect::<Result<_>>()?
    } else {
        cx.solve_two_cocycles()?
            .iter()
            .map(TwoCochainTriple::to_mixed)
            .collect()
    };
    let what = if degree == 1 {
        "maps g -> V"
    } else {
        "fully skew 2-cochains"
    };
    let mut lines = vec![format!("{degree}-cocycles among {what}: dimension {}", basis.len())];
    let mut files = Vec::new();
    if solve {
        for (k, b) in basis.iter().enumerate() {
            let text = io::mixed_cochain_to_json(b);
            lines.push(format!("basis vector {}:", k + 1));
            lines.push(text.clone());
            files.push(serde_json::from_str::<Value>(&text)?);
        }
    }
    Ok(Report {
        passed: true,
        lines,
        json: json!({ "command": "cocycles", "degree": degree, "dimension": basis.len(), "basis": files }),
    })
}

fn cohomology_lines(r: &CohomologyReport) -> (Vec<String>, Value) {
    let mut lines = vec![
        format!("{:>3} {:>8} {:>8} {:>8} {:>8}", "p", "dim C", "dim Z", "dim B", "dim H"),
        format!(
            "{:>3} {:>8} {:>8} {:>8} {:>8}",
            r.degree, r.dim_cochains, r.dim_z, r.dim_b, r.dim_h
        ),
    ];
    let reps: Option<Vec<Vec<String>>> = r
        .representatives
        .as_ref()
        .map(|rs| rs.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect());
    if let Some(rs) = &reps {
        for (k, v) in rs.iter().enumerate() {
            lines.push(format!("representative {}: [{}]", k + 1, v.join(", ")));
        }
    }
    let value = json!({
        "p": r.degree,
        "dim_c": r.dim_cochains,
        "dim_z": r.dim_z,
        "dim_b": r.dim_b,
        "dim_h": r.dim_h,
        "representatives": reps,
    });
    (lines, value)
}

fn cohomology(
    algebra: &Path,
    rep: Option<&Path>,
    classical: bool,
    p: usize,
    representatives: bool,
    exec: Exec,
) -> Result<Report> {
    let alg = io::load_algebra(algebra)?;
    if !alg.check_fi(exec).holds() {
        return Err(Error::NotAThreeLie("the algebra fails the Fundamental Identity".into()));
    }
    let (mut lines, mut value, complex) = match rep {
        Some(path) if !classical => {
            let gr = io::load_genrep(path, alg.dim())?;
            let report = GenComplex::new(&alg, &gr, exec)?.cohomology(p, representatives)?;
            let (mut lines, mut value) = cohomology_lines(&report.report);
            if let Some(s) = report.skew {
                lines.push(format!(
                    "fully skew part: dim C {}, dim Z {}, dim B {}, dim H {}",
                    s.dim_cochains, s.dim_z, s.dim_b, s.dim_h
                ));
                value["skew"] = json!({
                    "dim_c": s.dim_cochains,
                    "dim_z": s.dim_z,
                    "dim_b": s.dim_b,
                    "dim_h": s.dim_h,
                });
            }
            (lines, value, "generalized")
        }
        Some(path) => {
            let gr = io::load_genrep(path, alg.dim())?;
            let report = ClassicalComplex::new(&alg, &gr.rho)?.cohomology(p, representatives, exec)?;
            let (lines, value) = cohomology_lines(&report);
            (lines, value, "classical")
        }
        None => {
            let ad = alg.adjoint_rep()?;
            let report = ClassicalComplex::new(&alg, &ad)?.cohomology(p, representatives, exec)?;
            let (lines, value) = cohomology_lines(&report);
            (lines, value, "adjoint")
        }
    };
    lines.insert(0, format!("{complex} complex"));
    value["command"] = json!("cohomology");
    value["complex"] = json!(complex);
    Ok(Report {
        passed: true,
        lines,
        json: value,
    })
}

fn extension_points(ext: &ExtensionData, sampling: &Sampling) -> Result<Vec<Option<ParameterAssignment>>> {
    points(ext.parameters(), sampling, |v| ext.instantiate(v).map(|_| ()))
}

fn check_ext(ext: &ExtensionData, sampling: &Sampling, exec: Exec) -> Result<Report> {
    let parametric = !ext.is_rational();
    let mut passed = true;
    let mut lines = Vec::new();
    let mut results = Vec::new();
    for pt in extension_points(ext, sampling)? {
        let e = match &pt {
            Some(v) => ext.instantiate(v)?,
            None => ext.clone(),
        };
        let at = label(&pt, parametric);
        let identities = check_extension(&e, exec)?;
        let fi = e.bracket()?.check_fi(exec);
        let mc = match mc_defect(&e, exec) {
            Ok(d) => Some(d.is_zero()),
            Err(Error::ParametricEntries) => None,
            Err(err) => return Err(err),
        };
        let all = identities.holds() && fi.holds() && mc.unwrap_or(true);
        passed &= all;
        let verdict = |b: bool| if b { "holds" } else { "fails" };
        lines.push(format!(
            "{at}: extension identities {}, Fundamental Identity {}{}",
            if identities.holds() { "hold" } else { "fail" },
            verdict(fi.holds()),
            mc.map(|b| format!(", Maurer-Cartan equation {}", verdict(b)))
                .unwrap_or_default()
        ));
        lines.extend(identities.failures.iter().map(|f| format!("  {f}")));
        if let Some(w) = &fi.witness {
            lines.push(format!("  {}", e.bracket()?.describe_witness(w)));
        }
        results.push(json!({
            "at": at,
            "identities": identities.holds(),
            "fundamental_identity": fi.holds(),
            "maurer_cartan": mc,
            "failures": identities.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }));
    }
    Ok(Report {
        passed,
        lines,
        json: json!({ "command": "check-ext", "points": results }),
    })
}

fn check_mc(ext: &ExtensionData, sampling: &Sampling, exec: Exec) -> Result<Report> {
    let parametric = !ext.is_rational();
    let mut passed = true;
    let mut lines = Vec::new();
    let mut results = Vec::new();
    for pt in extension_points(ext, sampling)? {
        let e = match &pt {
            Some(v) => ext.instantiate(v)?,
            None => ext.clone(),
        };
        let at = label(&pt, parametric);
        let defect = mc_defect(&e, exec)?;
        let zero = defect.is_zero();
        passed &= zero;
        if zero {
            lines.push(format!("{at}: Maurer-Cartan defect vanishes"));
        } else {
            lines.push(format!("{at}: Maurer-Cartan defect is nonzero"));
            lines.push(io::mixed_cochain_to_json(&defect));
        }
        results.push(json!({
            "at": at,
            "vanishes": zero,
            "defect": serde_json::from_str::<Value>(&io::mixed_cochain_to_json(&defect))?,
        }));
    }
    Ok(Report {
        passed,
        lines,
        json: json!({ "command": "check-mc", "points": results }),
    })
}

fn corpus_command(command: CorpusCommand, exec: Exec) -> Result<Report> {
    match command {
        CorpusCommand::Run {
            filter,
            samples,
            seed,
            no_symbolic,
        } => {
            let opts = RunOptions {
                samples,
                seed: resolve_seed(seed),
                symbolic: !no_symbolic,
                exec,
            };
            let reports = corpus::run(filter.as_deref(), &opts)?;
            let mut lines = Vec::new();
            let mut entries = Vec::new();
            for r in &reports {
                lines.push(format!(
                    "{} {}  [{}]",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.id,
                    r.citation
                ));
                for o in &r.outcomes {
                    lines.push(format!(
                        "    {} {}: {}",
                        if o.passed { "ok  " } else { "FAIL" },
                        o.check,
                        o.detail
                    ));
                }
                entries.push(json!({
                    "id": r.id,
                    "citation": r.citation,
                    "passed": r.passed(),
                    "outcomes": r.outcomes.iter().map(|o| json!({
                        "check": o.check,
                        "passed": o.passed,
                        "detail": o.detail,
                    })).collect::<Vec<_>>(),
                }));
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            lines.push(format!(
                "{} entries, {} failed (seed {})",
                reports.len(),
                failed,
                opts.seed
            ));
            Ok(Report {
                passed: failed == 0,
                lines,
                json: json!({ "command": "corpus run", "seed": opts.seed, "entries": entries }),
            })
        }
        CorpusCommand::List { filter } => {
            let chosen = corpus::select(filter.as_deref())?;
            let lines = chosen
                .iter()
                .map(|e| {
                    let checks: Vec<String> = e.expectations.iter().map(|x| x.to_string()).collect();
                    format!("{:<36} {}  ({})", e.id, e.citation, checks.join("; "))
                })
                .collect();
            let entries: Vec<Value> = chosen
                .iter()
                .map(|e| {
                    json!({
                        "id": e.id,
                        "citation": e.citation,
                        "expectations": e.expectations.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(Report {
                passed: true,
                lines,
                json: json!({ "command": "corpus list", "entries": entries }),
            })
        }
        CorpusCommand::Export { dir } => {
            let written = corpus::export(&dir)?;
            let paths: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
            Ok(Report {
                passed: true,
                lines: paths.iter().map(|p| format!("wrote {p}")).collect(),
                json: json!({ "command": "corpus export", "files": paths }),
            })
        }
    }
}
