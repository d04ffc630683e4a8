//! Command-line front end for the reslat toolkit.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use reslat::claims::{ClaimRegistry, ClaimStatus};
use reslat::classify::{classification_report, Verdict, CLASSES};
use reslat::corpus::{self, CorpusEntry, CorpusError};
use reslat::enumerate::{self, EnumerationTask, HuntOutcome};
use reslat::filters::{self, Filter};
use reslat::property::{HuntSpec, PropertyRegistry};
use reslat::quotient::quotient;
use reslat::{validate, AlgebraError, ElemSet, ResiduatedLattice};

#[derive(Parser)]
#[command(name = "reslat", version, about = "Finite commutative residuated lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classification, filters, Ds, Rad, B(A) and spectra.
    Analyze(Source),
    /// Runs every structural claim and reports PASS, FAIL or N-A.
    CheckClaims(Source),
    /// Quotient by the filter generated by the given elements.
    Quotient {
        #[command(flatten)]
        source: Source,
        /// Comma-separated element names.
        #[arg(long, value_delimiter = ',', required = true)]
        filter: Vec<String>,
        /// Writes the quotient algebra file here.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Hasse diagram in DOT syntax.
    Dot {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Enumerates residuated lattices up to isomorphism, or hunts for a
    /// counterexample to `a,b=>c` over sizes 1..=size.
    Enum {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        hunt: Option<String>,
        /// Only lattices that are chains.
        #[arg(long)]
        chains: bool,
        /// Comma-separated property names every result must satisfy.
        #[arg(long = "where", value_delimiter = ',')]
        properties: Vec<String>,
        /// Writes one algebra file per result into this directory.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Lists the built-in algebras.
    CorpusList {
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

#[derive(Args)]
struct Source {
    /// Algebra file.
    path: Option<PathBuf>,
    /// Built-in corpus key instead of a file.
    #[arg(long, conflicts_with = "path")]
    builtin: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

/// Exit codes: 1 validation failure, 2 claim failure or counterexample,
/// 3 I/O or usage.
#[derive(Debug)]
enum Failure {
    Validation(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation(_) => 1,
            Failure::Usage(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Validation(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<CorpusError> for Failure {
    fn from(e: CorpusError) -> Self {
        match e {
            CorpusError::Invalid(e) => Failure::from(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::UnknownElement(_)
            | AlgebraError::UnknownProperty(_)
            | AlgebraError::EnumerationCapExceeded { .. }
            | AlgebraError::ExhaustiveCapExceeded { .. }
            | AlgebraError::BudgetExceeded { .. } => Failure::Usage(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

struct Loaded {
    algebra: ResiduatedLattice,
    entry: Option<CorpusEntry>,
}

impl Source {
    fn load(&self) -> Result<Loaded, Failure> {
        match (&self.builtin, &self.path) {
            (Some(key), _) => {
                let entry = corpus::builtin(key)?;
                Ok(Loaded { algebra: validate(&entry.spec)?, entry: Some(entry) })
            }
            (None, Some(path)) => Ok(Loaded { algebra: validate(&corpus::load(path)?)?, entry: None }),
            (None, None) => Err(Failure::Usage("give an algebra file or --builtin KEY".into())),
        }
    }
}

fn emit(format: Format, human: String, structured: Value) {
    match format {
        Format::Human => print!("{human}"),
        Format::Structured => println!("{}", serde_json::to_string_pretty(&structured).expect("json value")),
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "yes",
        Verdict::False => "no",
        Verdict::Trivial => "trivial",
    }
}

fn flag_words(f: &Filter) -> String {
    let flags = [
        (f.flags.proper, "proper"),
        (f.flags.prime, "prime"),
        (f.flags.maximal, "maximal"),
        (f.flags.primary, "primary"),
        (f.flags.quasi_primary, "quasi-primary"),
    ];
    flags.iter().filter(|(on, _)| *on).map(|(_, w)| *w).collect::<Vec<_>>().join(" ")
}

fn filter_json(l: &ResiduatedLattice, f: &Filter) -> Value {
    json!({ "members": l.set_names(f.members), "flags": f.flags })
}

fn table(l: &ResiduatedLattice, op: &str, f: impl Fn(usize, usize) -> usize) -> String {
    let width = l.names().iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = format!("{op:>width$} |");
    for b in l.elements() {
        let _ = write!(out, " {:>width$}", l.elem_name(b));
    }
    out.push('\n');
    for a in l.elements() {
        let _ = write!(out, "{:>width$} |", l.elem_name(a));
        for b in l.elements() {
            let _ = write!(out, " {:>width$}", l.elem_name(f(a, b)));
        }
        out.push('\n');
    }
    out
}

fn analyze(src: &Source) -> Outcome {
    let Loaded { algebra: l, .. } = src.load()?;
    let report = classification_report(&l)?;
    let all = filters::all_filters(&l)?;

    let mut h = String::new();
    let _ = writeln!(h, "algebra {} ({} elements)", l.name(), l.n());
    let _ = writeln!(h, "elements: {}", l.names().join(", "));
    let _ = writeln!(h, "filters ({}):", all.len());
    for f in &all {
        let _ = writeln!(h, "  {:<24} {}", l.fmt_set(f.members), flag_words(f));
    }
    let braces = |v: &[String]| format!("{{{}}}", v.join(", "));
    let _ = writeln!(h, "Ds(A) = {}", braces(&report.dense));
    let _ = writeln!(h, "Rad(A) = {}", braces(&report.radical));
    let _ = writeln!(h, "B(A) = {}", braces(&report.boolean_center));
    let _ = writeln!(h, "Reg(A) = {}", braces(&report.regular));
    let _ = writeln!(h, "D(A) = {}", braces(&report.infinite_order));
    let _ = writeln!(h, "|Filters| = {}", report.filter_count);
    let _ = writeln!(h, "|Spec| = {}", report.spec_count);
    let _ = writeln!(h, "|Max| = {}", report.max_count);
    h.push_str("classes:\n");
    for class in CLASSES {
        let v = report.verdict(class).expect("every class is reported");
        let _ = write!(h, "  {class:<28} {}", verdict_word(v));
        if let Some(w) = report.witnesses.get(class) {
            let _ = write!(h, "  ({})", w.detail);
        }
        h.push('\n');
    }
    h.push_str("implications:\n");
    for c in &report.implications {
        let state = match (c.applicable, c.holds) {
            (_, false) => "fails",
            (true, true) => "holds",
            (false, true) => "vacuous",
        };
        let _ = writeln!(h, "  {:<7} {}", state, c.name);
    }

    let s = json!({
        "report": report,
        "filters": all.iter().map(|f| filter_json(&l, f)).collect::<Vec<_>>(),
    });
    emit(src.format, h, s);
    Ok(ExitCode::SUCCESS)
}

fn check_claims(src: &Source) -> Outcome {
    let Loaded { algebra: l, entry } = src.load()?;
    let registry = ClaimRegistry::default();
    let results = registry.run_all(&l);
    let discrepancies = entry.map(|e| e.discrepancies).unwrap_or_default();

    let mut h = String::new();
    for r in &results {
        let _ = writeln!(h, "{:<4} {} : {}", r.status.label(), r.id, r.detail);
        for d in discrepancies.iter().filter(|d| d.claim == r.id) {
            let _ = writeln!(h, "     documented discrepancy. published: {}. computed: {}", d.published, d.note);
        }
    }
    let count = |s: ClaimStatus| results.iter().filter(|r| r.status == s).count();
    let (pass, fail, na) = (count(ClaimStatus::Pass), count(ClaimStatus::Fail), count(ClaimStatus::NotApplicable));
    let _ = writeln!(h, "{pass} pass, {fail} fail, {na} not applicable");

    let s = json!({
        "algebra": l.name(),
        "claims": results,
        "discrepancies": discrepancies,
        "summary": { "pass": pass, "fail": fail, "not_applicable": na },
    });
    emit(src.format, h, s);
    Ok(if fail > 0 { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn resolve(l: &ResiduatedLattice, names: &[String]) -> Result<ElemSet, Failure> {
    names
        .iter()
        .map(|n| l.index_of(n.trim()).ok_or_else(|| Failure::Usage(format!("unknown element name `{}`", n.trim()))))
        .collect()
}

fn quotient_cmd(src: &Source, names: &[String], output: Option<&Path>) -> Outcome {
    let Loaded { algebra: l, .. } = src.load()?;
    let generators = resolve(&l, names)?;
    let f = filters::generated_filter(&l, generators);
    let q = quotient(&l, f.members)?;
    let a = &q.algebra;
    let classes: Vec<Vec<String>> = q.congruence.classes.iter().map(|c| l.set_names(*c)).collect();

    let mut h = String::new();
    let _ = writeln!(h, "F = {} generated by {}", l.fmt_set(f.members), l.fmt_set(generators));
    let _ = writeln!(h, "classes ({}):", classes.len());
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(h, "  {} = {{{}}}", a.elem_name(i), c.join(", "));
    }
    let _ = writeln!(h, "projection: surjective {}, injective {}", q.projection.surjective, q.projection.injective);
    for (op, f) in [
        ("∨", &(|x, y| a.join(x, y)) as &dyn Fn(usize, usize) -> usize),
        ("∧", &|x, y| a.meet(x, y)),
        ("⊙", &|x, y| a.prod(x, y)),
        ("→", &|x, y| a.imp(x, y)),
    ] {
        h.push('\n');
        h.push_str(&table(a, op, f));
    }
    if let Some(path) = output {
        corpus::save(path, &a.to_spec())?;
        let _ = writeln!(h, "\nwrote {}", path.display());
    }

    let s = json!({
        "filter": l.set_names(f.members),
        "classes": classes,
        "projection": { "map": q.projection.map.iter().map(|&c| a.elem_name(c)).collect::<Vec<_>>(),
                        "injective": q.projection.injective, "surjective": q.projection.surjective },
        "algebra": a.to_spec(),
    });
    emit(src.format, h, s);
    Ok(ExitCode::SUCCESS)
}

fn dot_cmd(src: &Source, output: Option<&Path>) -> Outcome {
    let Loaded { algebra: l, .. } = src.load()?;
    match output {
        Some(path) => {
            corpus::export_hasse(&l, path)?;
            println!("wrote {} ({} nodes, {} edges)", path.display(), l.n(), l.covering_pairs().len());
        }
        None => print!("{}", corpus::hasse_dot(&l)),
    }
    Ok(ExitCode::SUCCESS)
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        "algebra"
    } else {
        "algebras"
    }
}

fn enum_cmd(
    size: usize,
    hunt: Option<&str>,
    chains: bool,
    properties: &[String],
    output: Option<&Path>,
    format: Format,
) -> Outcome {
    let registry = PropertyRegistry::default();
    if let Some(spec) = hunt {
        let spec: HuntSpec = spec.parse().map_err(Failure::Usage)?;
        return match enumerate::hunt(&spec, size, &registry)? {
            HuntOutcome::Found { algebra, violation } => {
                let text = corpus::render_spec(&algebra.to_spec());
                let h = format!(
                    "counterexample {} ({} elements)\nviolation: {violation}\n{text}",
                    algebra.name(),
                    algebra.n()
                );
                let s = json!({ "found": true, "algebra": algebra.to_spec(), "violation": violation });
                emit(format, h, s);
                Ok(ExitCode::from(2))
            }
            HuntOutcome::Exhausted { size, examined } => {
                let h = format!("exhausted through size {size}: {examined} {} examined\n", plural(examined));
                emit(format, h, json!({ "found": false, "size": size, "examined": examined }));
                Ok(ExitCode::SUCCESS)
            }
        };
    }

    let mut task = if chains { EnumerationTask::chains(size) } else { EnumerationTask::new(size) };
    task.filters = properties.to_vec();
    let found = task.run(&registry)?;
    if let Some(dir) = output {
        std::fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
        for l in &found {
            corpus::save(dir.join(format!("{}.json", l.name())), &l.to_spec())?;
        }
    }
    let mut h = format!("{} {}\n", found.len(), plural(found.len()));
    for l in &found {
        let _ = writeln!(h, "  {}", l.name());
    }
    let s = json!({
        "size": size,
        "chains_only": chains,
        "count": found.len(),
        "algebras": found.iter().map(|l| l.name()).collect::<Vec<_>>(),
    });
    emit(format, h, s);
    Ok(ExitCode::SUCCESS)
}

fn corpus_list(format: Format) -> Outcome {
    let entries = corpus::all_builtin();
    let mut h = String::new();
    for e in &entries {
        let _ = writeln!(h, "{:<13} {:>2}  {}", e.key, e.spec.elements.len(), e.provenance);
    }
    let s: Vec<Value> = entries
        .iter()
        .map(|e| json!({ "key": e.key, "size": e.spec.elements.len(), "provenance": e.provenance }))
        .collect();
    emit(format, h, Value::Array(s));
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Analyze(src) => analyze(src),
        Command::CheckClaims(src) => check_claims(src),
        Command::Quotient { source, filter, output } => quotient_cmd(source, filter, output.as_deref()),
        Command::Dot { source, output } => dot_cmd(source, output.as_deref()),
        Command::Enum { size, hunt, chains, properties, output, format } => {
            enum_cmd(*size, hunt.as_deref(), *chains, properties, output.as_deref(), *format)
        }
        Command::CorpusList { format } => corpus_list(*format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
