//! Batch front-end: single constructions on JSON inputs and the seeded
//! property suite.
//!
//! Exit codes: 0 pass, 1 property failure, 2 parse error, 3 invalid input,
//! 4 usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Deserialize;

use polycat::endo::{artin_rees_holds, artin_rees_index, parse_unipoly, EndoDoc, EndoModule, SubmoduleRep};
use polycat::graded::GradedPresentation;
use polycat::k0::{
    check_devissage_classes, check_localization_classes, check_tf_decomposition, kpoly,
};
use polycat::suite::{run_suite, ReplayDoc, SuiteConfig};
use polycat::{theta, FieldSpec};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Core(#[from] polycat::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 4,
            CliError::Io { .. } => 2,
            CliError::Core(e) if e.is_parse() => 2,
            CliError::Core(polycat::Error::IndexOutOfRange { .. }) => 4,
            CliError::Core(_) => 3,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "polycat", version, about = "Graded modules, Koszul homology and k[t]-module checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Koszul homology T_i of a presentation.
    Koszul {
        input: PathBuf,
        /// Homological index.
        index: usize,
        /// Largest degree in the dimension vector.
        #[arg(long, default_value_t = 12)]
        bound: usize,
    },
    /// Canonical filtration quotients and the maps alpha_p.
    Filtration { input: PathBuf },
    /// The k[t]-module theta(x) and the psi-nilpotency verdict.
    Theta { input: PathBuf },
    /// Artin–Rees index of a submodule of a k[t]-module.
    ArtinRees {
        input: PathBuf,
        #[arg(long, default_value_t = 16)]
        bound: usize,
    },
    /// Grothendieck-class checks for a presentation.
    K0Report { input: PathBuf },
    /// The full seeded property suite.
    Suite {
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SuiteConfig::default().instance_count)]
        count: usize,
        #[arg(long, default_value_t = SuiteConfig::default().field)]
        field: FieldSpec,
        /// Piece bound.
        #[arg(long, default_value_t = SuiteConfig::default().piece_bound)]
        bound: usize,
        #[arg(long, default_value_t = SuiteConfig::default().max_gens)]
        max_gens: usize,
        #[arg(long, default_value_t = SuiteConfig::default().max_degree)]
        max_degree: usize,
        #[arg(long, default_value_t = SuiteConfig::default().artin_rees_bound)]
        artin_rees_bound: usize,
        /// Directory for report.json, summary.csv and failures/.
        #[arg(long, default_value = "suite-report")]
        out: PathBuf,
    },
    /// Re-run a serialized failing instance.
    Replay { input: PathBuf },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArtinReesInput {
    module: EndoDoc,
    submodule: Vec<Vec<String>>,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_presentation(path: &Path) -> CliResult<GradedPresentation> {
    Ok(GradedPresentation::from_json(&read(path)?)?)
}

fn dims(x: &GradedPresentation, bound: usize) -> Vec<i64> {
    kpoly(x).series_coefficients(x.nvars(), bound)
}

fn cmd_koszul(input: &Path, index: usize, bound: usize) -> CliResult<bool> {
    let x = load_presentation(input)?;
    let t = x.koszul_homology(index)?;
    println!("T_{index}:");
    println!("{}", t.to_json());
    println!("zero: {}", t.is_zero());
    println!("dims 0..={bound}: {:?}", dims(&t, bound));
    println!("torsion free: {}", x.is_torsion_free()?);
    Ok(true)
}

fn cmd_filtration(input: &Path) -> CliResult<bool> {
    let x = load_presentation(input)?;
    let Some(top) = x.degree() else {
        println!("zero module: trivial filtration");
        return Ok(true);
    };
    for p in 0..=top {
        let (fp, _) = x.canonical_filtration(p);
        let q = x.filtration_quotient(p);
        let alpha = x.alpha_p(p);
        println!(
            "p = {p}: class(F_p) = {}, class(F_p/F_p-1) = {}, quotient generators {}, alpha injective {}, surjective {}",
            kpoly(&fp),
            kpoly(&q),
            q.num_gens(),
            alpha.is_injective()?,
            alpha.is_surjective()?
        );
    }
    Ok(true)
}

fn cmd_theta(input: &Path) -> CliResult<bool> {
    let x = load_presentation(input)?;
    let t = theta::theta(&x)?;
    let torsion: Vec<String> = t.torsion_divisors().iter().map(|d| format!("({d})")).collect();
    println!("free rank: {}", t.free_rank());
    println!("torsion: [{}]", torsion.join(", "));
    match theta::is_psi_nilpotent(&x)? {
        Some(cert) => {
            let label = if t.is_zero() { "zero module, " } else { "" };
            println!("{label}nilpotent index {}", cert.index);
        }
        None => println!("not psi-nilpotent"),
    }
    Ok(true)
}

fn cmd_artin_rees(input: &Path, bound: usize) -> CliResult<bool> {
    let doc: ArtinReesInput =
        serde_json::from_str(&read(input)?).map_err(|e| polycat::Error::Parse(e.to_string()))?;
    let x = EndoModule::from_doc(&doc.module)?;
    let gens = doc
        .submodule
        .iter()
        .map(|v| v.iter().map(|s| parse_unipoly(s, x.field())).collect())
        .collect::<polycat::Result<Vec<_>>>()?;
    let y = SubmoduleRep::new(&x, gens)?;
    let n0 = artin_rees_index(&x, &y, bound)?;
    let holds = artin_rees_holds(&y, n0, bound)?;
    println!("n0: {n0}");
    println!("identity re-verified on [{n0}, {bound}]: {holds}");
    Ok(holds)
}

fn cmd_k0_report(input: &Path) -> CliResult<bool> {
    let x = load_presentation(input)?;
    let class = kpoly(&x);
    println!("class: {class}");
    println!("value at q = 1: {}", class.eval_at_one());
    let mut ok = true;
    if x.nvars() == 2 {
        let t = theta::theta(&x)?;
        let loc = check_localization_classes(&x)?;
        println!("rank of theta: {}", t.rank_class());
        println!("localization classes: {loc}");
        ok &= loc;
        if theta::is_psi_nilpotent(&x)?.is_some() {
            let dev = check_devissage_classes(&x)?;
            println!("devissage classes: {dev}");
            ok &= dev;
        }
    }
    if x.is_torsion_free()? {
        let tf = check_tf_decomposition(&x)?;
        println!("torsion-free decomposition: {tf}");
        ok &= tf;
    }
    Ok(ok)
}

fn cmd_suite(cfg: &SuiteConfig, out: &Path) -> CliResult<bool> {
    cfg.validate()?;
    let report = run_suite(cfg)?;
    fs::create_dir_all(out.join("failures")).map_err(|e| CliError::Io {
        path: out.display().to_string(),
        message: e.to_string(),
    })?;
    write(&out.join("report.json"), &report.to_json())?;
    write(&out.join("summary.csv"), &report.to_csv())?;
    for f in &report.failures {
        let name = format!("{}-{}.json", f.check.name(), f.instance_id);
        write(&out.join("failures").join(name), &f.to_json())?;
    }
    print!("{}", report.to_csv());
    let failed = report.records.iter().filter(|r| !r.pass).count();
    println!("{} records, {failed} failed", report.records.len());
    Ok(report.all_passed())
}

fn cmd_replay(input: &Path) -> CliResult<bool> {
    let doc = ReplayDoc::from_json(&read(input)?)?;
    let records = doc.run()?;
    for r in &records {
        let verdict = if r.pass { "pass" } else { "FAIL" };
        println!(
            "{verdict} {} {}: expected {}, actual {}",
            r.check, r.instance_id, r.expected, r.actual
        );
    }
    Ok(records.iter().all(|r| r.pass))
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Koszul { input, index, bound } => cmd_koszul(&input, index, bound),
        Command::Filtration { input } => cmd_filtration(&input),
        Command::Theta { input } => cmd_theta(&input),
        Command::ArtinRees { input, bound } => cmd_artin_rees(&input, bound),
        Command::K0Report { input } => cmd_k0_report(&input),
        Command::Suite {
            seed,
            count,
            field,
            bound,
            max_gens,
            max_degree,
            artin_rees_bound,
            out,
        } => {
            let cfg = SuiteConfig {
                seed,
                instance_count: count,
                max_gens,
                max_degree,
                piece_bound: bound,
                field,
                artin_rees_bound,
            };
            if let Err(e) = cfg.validate() {
                return Err(CliError::Usage(e.to_string()));
            }
            cmd_suite(&cfg, &out)
        }
        Command::Replay { input } => cmd_replay(&input),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(4) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
