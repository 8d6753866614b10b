//! Command implementations behind the `csym` binary.
//!
//! Exit codes: 0 pass, 1 fail (including refused preconditions), 2 input
//! error, 3 the four equivalence conditions disagree.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use csym::algebra::{g_associativity_violation, sub_adjacent, GClass};
use csym::bialgebra::{bialgebra_report, equivalence_report};
use csym::bimodule::{bimodule_violation, semidirect_sum};
use csym::io::{self, AlgebraFile, BimoduleFile, FormatError};
use csym::manin::{build_standard_manin_triple, verify_manin_triple};
use csym::matched::bicross_product;
use csym::report::{Item, Report};
use csym::search::{enumerate_structures, random_search, SearchSpec};
use csym::{Algebra, Bimodule, Error, Scalar};
use serde::Serialize;
use thiserror::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_THEOREM: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "csym", version, about = "Exact checks for center-symmetric algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Associative,
    CenterSymmetric,
    LieAdmissible,
    G2,
    G3,
    G5,
}

impl Property {
    fn label(self) -> &'static str {
        match self {
            Property::Associative => "associative",
            Property::CenterSymmetric => "center-symmetric",
            Property::LieAdmissible => "Lie-admissible",
            Property::G2 => "G2-associative",
            Property::G3 => "G3-associative",
            Property::G5 => "G5-associative",
        }
    }

    fn class(self) -> GClass {
        match self {
            Property::Associative => GClass::G1,
            Property::CenterSymmetric => GClass::G4,
            Property::LieAdmissible => GClass::G6,
            Property::G2 => GClass::G2,
            Property::G3 => GClass::G3,
            Property::G5 => GClass::G5,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one property of an algebra file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "center-symmetric")]
        property: Property,
        #[arg(long)]
        json: bool,
    },
    /// Write the sub-adjacent Lie bracket of a center-symmetric algebra.
    Lie {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a bimodule and write the semidirect sum.
    Semidirect {
        algebra: PathBuf,
        bimodule: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a matched pair; with --out, write the bicrossed product.
    Matched {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify the standard Manin triple of a bialgebra file.
    Manin {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check the bialgebra axioms and compare the four linked conditions.
    Bialgebra {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate (or sample with --seed) structures on a coefficient grid.
    Search {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,0,1")]
        coeffs: Vec<String>,
        #[arg(long)]
        center_symmetric: bool,
        #[arg(long)]
        non_associative: bool,
        #[arg(long)]
        noncommutative: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Sample randomly from this seed instead of enumerating.
        #[arg(long)]
        seed: Option<u64>,
        /// Maximum number of random draws.
        #[arg(long, default_value_t = 100_000)]
        draws: usize,
        /// Directory receiving one algebra file per result.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Write { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// Refused preconditions are failures; everything else is an input error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NotCenterSymmetric { .. } | Error::Invalid { .. }) => EXIT_FAIL,
            _ => EXIT_INPUT,
        }
    }
}

/// Text for stdout plus the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn report(report: &Report, json: bool) -> Self {
        let stdout = if json { io::to_json(report) } else { report.to_string() };
        Outcome { code: if report.passed() { EXIT_PASS } else { EXIT_FAIL }, stdout }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })
}

fn parse<T>(path: &Path, f: impl FnOnce(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    f(&read(path)?).map_err(|source| CliError::Format { path: path.display().to_string(), source })
}

fn write_or_print(out: Option<&Path>, text: String) -> Result<String, CliError> {
    match out {
        Some(p) => {
            fs::write(p, &text).map_err(|source| CliError::Write { path: p.display().to_string(), source })?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(text),
    }
}

pub fn cmd_check(file: &Path, property: Property, json: bool) -> Result<Outcome, CliError> {
    let a = parse(file, io::parse_algebra)?;
    let witness = match property {
        Property::CenterSymmetric => a.center_symmetry_violation(),
        p => g_associativity_violation(&a, p.class()),
    };
    let subject = a.name().map_or_else(|| file.display().to_string(), str::to_owned);
    let report = Report::new(subject, vec![Item::new(property.label(), property.class().label(), witness)]);
    Ok(Outcome::report(&report, json))
}

pub fn cmd_lie(file: &Path, out: Option<&Path>) -> Result<Outcome, CliError> {
    let a = parse(file, io::parse_algebra)?;
    let lie = sub_adjacent(&a)?;
    let mut bracket = Algebra::new(lie.structure().clone())?;
    if let Some(n) = a.name() {
        bracket = bracket.with_name(format!("G({n})"));
    }
    let stdout = write_or_print(out, io::to_json(&AlgebraFile::from_algebra(&bracket)))?;
    Ok(Outcome { code: EXIT_PASS, stdout })
}

pub fn cmd_semidirect(algebra: &Path, bimodule: &Path, out: Option<&Path>, json: bool) -> Result<Outcome, CliError> {
    let a = parse(algebra, io::parse_algebra)?;
    let file: BimoduleFile = parse(bimodule, io::from_json)?;
    let (l, r) = file.to_actions(a.dim()).map_err(|source| CliError::Format { path: bimodule.display().to_string(), source })?;
    let violation = bimodule_violation(&a, file.vdim, &l, &r)?;
    let (failed, witness) = match violation {
        Some((name, w)) => (Some(name), Some(w)),
        None => (None, None),
    };
    let report = Report::new(
        "bimodule",
        vec![Item::new(failed.unwrap_or("bimodule conditions"), "bimodule", witness)],
    );
    if !report.passed() {
        return Ok(Outcome::report(&report, json));
    }
    let sum = semidirect_sum(&Bimodule::new(a, file.vdim, l, r)?);
    let stdout = write_or_print(out, io::to_json(&AlgebraFile::from_algebra(&sum)))?;
    Ok(Outcome { code: EXIT_PASS, stdout })
}

pub fn cmd_matched(file: &Path, out: Option<&Path>, json: bool) -> Result<Outcome, CliError> {
    let p = parse(file, io::parse_pair)?;
    let report = p.report()?;
    let mut outcome = Outcome::report(&report, json);
    if report.passed() {
        if let Some(path) = out {
            let product = bicross_product(&p)?;
            let note = write_or_print(Some(path), io::to_json(&AlgebraFile::from_algebra(&product)))?;
            if !json {
                outcome.stdout.push_str(&note);
            }
        }
    }
    Ok(outcome)
}

pub fn cmd_manin(file: &Path, json: bool) -> Result<Outcome, CliError> {
    let bg = parse(file, io::parse_bialgebra)?;
    let report = verify_manin_triple(&build_standard_manin_triple(&bg)?)?;
    Ok(Outcome::report(&report, json))
}

#[derive(Serialize)]
struct BialgebraOutput<'a> {
    bialgebra: &'a Report,
    #[serde(skip_serializing_if = "Option::is_none")]
    equivalence: Option<&'a csym::Equivalence>,
    consistent: bool,
}

pub fn cmd_bialgebra(file: &Path, json: bool) -> Result<Outcome, CliError> {
    let bg = parse(file, io::parse_bialgebra)?;
    let axioms = bialgebra_report(&bg)?;
    let hypothesis = axioms.items[0].passed() && axioms.items[1].passed();
    let equivalence = if hypothesis { Some(equivalence_report(&bg)?) } else { None };
    let consistent = equivalence.as_ref().is_none_or(|e| e.consistent());
    let code = match &equivalence {
        Some(e) if !e.consistent() => EXIT_THEOREM,
        _ if axioms.passed() => EXIT_PASS,
        _ => EXIT_FAIL,
    };
    let stdout = if json {
        io::to_json(&BialgebraOutput { bialgebra: &axioms, equivalence: equivalence.as_ref(), consistent })
    } else {
        let mut s = axioms.to_string();
        if let Some(e) = &equivalence {
            s.push_str(&e.to_report().to_string());
            if !consistent {
                s.push_str("THEOREM VIOLATION: the four linked conditions disagree\n");
            }
        }
        s
    };
    Ok(Outcome { code, stdout })
}

pub fn cmd_search(
    spec: &SearchSpec,
    random: bool,
    draws: usize,
    out: Option<&Path>,
    json: bool,
) -> Result<Outcome, CliError> {
    let found = if random { random_search(spec, draws)? } else { enumerate_structures(spec)? };
    let files: Vec<AlgebraFile> = found
        .iter()
        .enumerate()
        .map(|(n, a)| AlgebraFile::from_algebra(&a.clone().with_name(format!("search-{}-{:04}", spec.dim, n + 1))))
        .collect();
    let mut stdout = String::new();
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|source| CliError::Write { path: dir.display().to_string(), source })?;
        for f in &files {
            let path = dir.join(format!("{}.json", f.name.as_deref().expect("named")));
            write_or_print(Some(&path), io::to_json(f))?;
        }
    }
    if json {
        stdout.push_str(&io::to_json(&files));
    } else {
        stdout.push_str(&format!("{} structures found\n", files.len()));
        if let Some(dir) = out {
            stdout.push_str(&format!("written to {}\n", dir.display()));
        }
    }
    Ok(Outcome { code: EXIT_PASS, stdout })
}

fn parse_coeffs(raw: &[String]) -> Result<Vec<Scalar>, CliError> {
    raw.iter()
        .map(|s| s.trim().parse::<Scalar>().map_err(|e| CliError::Usage(format!("--coeffs: {e}"))))
        .collect()
}

pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Check { file, property, json } => cmd_check(file, *property, *json),
        Command::Lie { file, out } => cmd_lie(file, out.as_deref()),
        Command::Semidirect { algebra, bimodule, out, json } => cmd_semidirect(algebra, bimodule, out.as_deref(), *json),
        Command::Matched { file, out, json } => cmd_matched(file, out.as_deref(), *json),
        Command::Manin { file, json } => cmd_manin(file, *json),
        Command::Bialgebra { file, json } => cmd_bialgebra(file, *json),
        Command::Search { dim, coeffs, center_symmetric, non_associative, noncommutative, limit, seed, draws, out, json } => {
            let mut spec = SearchSpec::new(*dim).with_coeffs(parse_coeffs(coeffs)?);
            spec.center_symmetric = *center_symmetric;
            spec.non_associative = *non_associative;
            spec.noncommutative = *noncommutative;
            spec.limit = *limit;
            if let Some(s) = seed {
                spec.seed = *s;
            }
            cmd_search(&spec, seed.is_some(), *draws, out.as_deref(), *json)
        }
    }
}

/// Runs a parsed command, printing to the given streams; returns the exit code.
pub fn run(cli: &Cli, stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    match execute(&cli.command) {
        Ok(o) => {
            let _ = stdout.write_all(o.stdout.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
