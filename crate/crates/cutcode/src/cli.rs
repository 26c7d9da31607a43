//! Argument parsing and dispatch for the `cutcode` binary.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cutcode_core::construct::{self, ConstructionResult};
use cutcode_core::correspond::{self, ProjectiveSystem};
use cutcode_core::minimal::{self, MinimalityReport};
use cutcode_core::search::{self, stretch, EquivalenceLimits, Mode, SearchOptions, Symmetry};
use cutcode_core::{bounds, Elem, Field, LinearCode, PointSet, ProjectiveSpace};

use crate::format::{self, FileKind, FormatError};
use crate::parallel;
use crate::report::{self, *};

/// Exit status for a run that completed and found the property false.
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit status for usage and input errors.
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "cutcode",
    version,
    about = "Minimal linear codes and cutting blocking sets"
)]
pub struct Cli {
    /// Report wall-clock time on stderr.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code from a geometric construction and write it out.
    Construct(ConstructArgs),
    /// Check minimality of a code or the cutting property of a point set.
    Verify(VerifyArgs),
    /// Print the weight distribution of a code.
    Wdist(WdistArgs),
    /// Evaluate the length and distance bounds.
    Bounds(BoundsArgs),
    /// Exhaustive search for cutting sets in a small projective space.
    Search(SearchArgs),
    /// Decide monomial equivalence of two codes.
    Equiv(EquivArgs),
    /// Partition codes or search results into equivalence classes.
    Classify(ClassifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Tetrahedron,
    Dim4,
    Pentagonal,
    Hexagonal,
    Simplex,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub kind: Kind,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    /// Dimension for `tetrahedron` and `simplex`.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Nonzero field element for `dim4`.
    #[arg(long, default_value_t = 1)]
    pub beta: u32,
    /// Directory receiving the `.gmat`, `.pts` and `.json` files.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Write no files.
    #[arg(long)]
    pub no_files: bool,
    /// Print the generator matrix on stdout and the summary on stderr.
    #[arg(long)]
    pub stdout: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriterionArg {
    Naive,
    Hdz,
    Ab,
    Geometric,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// `.gmat` or `.pts` file; `-` reads stdin.
    #[arg(long = "in", default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = CriterionArg::All)]
    pub criterion: CriterionArg,
    /// Codimension of the flats for point sets.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct WdistArgs {
    #[arg(long = "in", default_value = "-")]
    pub input: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
pub struct BoundsArgs {
    #[command(subcommand)]
    pub table: Option<BoundsCommand>,
    #[arg(long)]
    pub q: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, conflicts_with = "markdown")]
    pub json: bool,
    #[arg(long)]
    pub markdown: bool,
}

#[derive(Subcommand, Debug)]
pub enum BoundsCommand {
    /// Bounds over a grid of prime powers and dimensions (markdown).
    Table {
        /// Inclusive range `a..b`; non-prime-powers are skipped.
        #[arg(long, default_value = "2..9")]
        q_range: String,
        #[arg(long, default_value = "3..6")]
        k_range: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    First,
    All,
    Count,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryArg {
    None,
    FirstPoint,
    Frame,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, required_unless_present = "stretch")]
    pub q: Option<u32>,
    #[arg(long, required_unless_present = "stretch")]
    pub k: Option<usize>,
    /// Set size; with `--shortest`, the largest size tried.
    #[arg(long, required_unless_present = "stretch")]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::First)]
    pub mode: ModeArg,
    /// Total node budget, split evenly over top-level branches.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Worker threads; defaults to `CUTCODE_THREADS` or the core count.
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = SymmetryArg::FirstPoint)]
    pub symmetry: SymmetryArg,
    #[arg(long, default_value_t = 100_000)]
    pub max_results: usize,
    /// Scan sizes upward from the best lower bound to `--n`.
    #[arg(long)]
    pub shortest: bool,
    /// Look for a `[20,5,9]_3` code extending six frame lines of PG(4,3).
    #[arg(long, conflicts_with_all = ["q", "k", "n", "shortest"])]
    pub stretch: bool,
    /// Write each hit as a `.pts` file here.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct EquivArgs {
    pub a: PathBuf,
    pub b: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Code or point files.
    #[arg(conflicts_with_all = ["q", "k", "n"])]
    pub files: Vec<PathBuf>,
    /// Classify all cutting sets of size `n` in `PG(k-1,q)` instead.
    #[arg(long, requires_all = ["k", "n"])]
    pub q: Option<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Symmetry cut for the search; `frame` keeps one set per class.
    #[arg(long, value_enum, default_value_t = SymmetryArg::Frame)]
    pub symmetry: SymmetryArg,
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] cutcode_core::Error),
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

/// Whether the mathematical property under test held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Holds,
    Fails,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn line(&mut self, s: &str) -> CliResult<()> {
        writeln!(self.out, "{s}").map_err(|e| io_error("stdout", e))
    }
}

fn io_error(path: impl Into<String>, source: std::io::Error) -> CliError {
    CliError::Io {
        path: path.into(),
        source,
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, stdin: &mut dyn Read) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let start = Instant::now();
    let timing = cli.timing;
    let mut io = Io { out, err, stdin };
    let result = dispatch(cli.command, &mut io);
    if timing {
        let _ = writeln!(io.err, "elapsed {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(Verdict::Holds) => 0,
        Ok(Verdict::Fails) => EXIT_NEGATIVE,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> CliResult<Verdict> {
    match cmd {
        Command::Construct(a) => construct_cmd(a, io),
        Command::Verify(a) => verify_cmd(a, io),
        Command::Wdist(a) => wdist_cmd(a, io),
        Command::Bounds(a) => bounds_cmd(a, io),
        Command::Search(a) => search_cmd(a, io),
        Command::Equiv(a) => equiv_cmd(a, io),
        Command::Classify(a) => classify_cmd(a, io),
    }
}

fn read_input(input: &str, io: &mut Io) -> CliResult<String> {
    if input == "-" {
        let mut s = String::new();
        io.stdin
            .read_to_string(&mut s)
            .map_err(|e| io_error("<stdin>", e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(input).map_err(|e| io_error(input, e))
    }
}

fn format_error(path: &str) -> impl FnOnce(FormatError) -> CliError + '_ {
    move |source| CliError::Format {
        path: path.to_string(),
        source,
    }
}

fn read_code_file(path: &Path) -> CliResult<LinearCode> {
    let p = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| io_error(&p, e))?;
    format::read_code(&text).map_err(format_error(&p))
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|e| io_error(path.display().to_string(), e))
}

fn build(a: &ConstructArgs) -> CliResult<ConstructionResult> {
    let r = match a.kind {
        Kind::Tetrahedron => construct::tetrahedron(a.q, a.k)?,
        Kind::Dim4 => {
            let f = Field::new(a.q)?;
            let beta = f.elem(a.beta)?;
            if beta.is_zero() {
                return Err(CliError::Usage("--beta must be nonzero".into()));
            }
            construct::dim4(a.q, beta)?
        }
        Kind::Pentagonal => construct::pentagonal(a.q, None)?,
        Kind::Hexagonal => {
            if a.q != 2 {
                return Err(CliError::Usage(
                    "hexagonal is only defined for --q 2".into(),
                ));
            }
            construct::hexagonal_q2()?
        }
        Kind::Simplex => construct::simplex(a.q, a.k)?,
    };
    Ok(r)
}

fn stem(label: &str) -> String {
    label.replace(' ', "_").replace('=', "")
}

fn construct_cmd(a: ConstructArgs, io: &mut Io) -> CliResult<Verdict> {
    let r = build(&a)?;
    let code = &r.code;
    let d = code.min_distance()?;
    let minimal = minimal::is_minimal_geometric(code)?;
    // a simple system is reduced exactly when it is minimal cutting
    let reduced = minimal && r.system.is_simple() && r.system.is_minimal_cutting(1)?;
    let mut files = Vec::new();
    let gmat = format::write_gmat(code);
    let json_body = |files: Vec<String>| -> CliResult<String> {
        Ok(to_json(&ConstructJson {
            label: r.label.clone(),
            q: r.q,
            n: code.n(),
            k: code.k(),
            d,
            minimal,
            reduced,
            predicted: PredictedJson {
                n: r.predicted.n,
                k: r.predicted.k,
                d: r.predicted.d,
            },
            a: weight_map(code.weight_distribution()?),
            files,
        }))
    };
    if !a.no_files {
        let base = stem(&r.label);
        std::fs::create_dir_all(&a.out_dir)
            .map_err(|e| io_error(a.out_dir.display().to_string(), e))?;
        let names = [
            format!("{base}.gmat"),
            format!("{base}.pts"),
            format!("{base}.json"),
        ];
        files = names.to_vec();
        write_file(&a.out_dir.join(&names[0]), &gmat)?;
        let pts = format::write_pts(r.system.space(), r.system.multiplicities());
        write_file(&a.out_dir.join(&names[1]), &pts)?;
        write_file(
            &a.out_dir.join(&names[2]),
            &(json_body(files.clone())? + "\n"),
        )?;
    }
    let summary = if a.json {
        json_body(files)?
    } else {
        format!("{} minimal={minimal} reduced={reduced}", code.parameters())
    };
    if a.stdout {
        write!(io.out, "{gmat}").map_err(|e| io_error("stdout", e))?;
        writeln!(io.err, "{summary}").map_err(|e| io_error("stderr", e))?;
    } else {
        io.line(&summary)?;
    }
    Ok(Verdict::from(minimal))
}

fn minimality_text(r: &MinimalityReport, q: u32) -> String {
    let verdict = if r.minimal { "minimal" } else { "not-minimal" };
    let sep = if q > 10 { "," } else { "" };
    match &r.witness {
        Some((a, b)) => {
            let w = |c: &[Elem]| {
                let v: Vec<String> = c.iter().map(|e| e.value().to_string()).collect();
                v.join(sep)
            };
            format!("{}={verdict} witness={}<{}", r.criterion.name(), w(a), w(b))
        }
        None => format!("{}={verdict}", r.criterion.name()),
    }
}

fn geometric_report(code: &LinearCode) -> CliResult<MinimalityReport> {
    Ok(MinimalityReport {
        minimal: minimal::is_minimal_geometric(code)?,
        witness: None,
        criterion: minimal::Criterion::Geometric,
    })
}

fn verify_cmd(a: VerifyArgs, io: &mut Io) -> CliResult<Verdict> {
    let text = read_input(&a.input, io)?;
    let kind = format::sniff(&text).map_err(format_error(&a.input))?;
    if kind == FileKind::Pts && a.criterion == CriterionArg::All {
        return verify_points(&text, &a, io);
    }
    let code = format::read_code(&text).map_err(format_error(&a.input))?;
    let mut reports = Vec::new();
    let mut ab = None;
    match a.criterion {
        CriterionArg::Naive => reports.push(minimal::is_minimal_naive(&code)?),
        CriterionArg::Hdz => reports.push(minimal::is_minimal_hdz(&code)?),
        CriterionArg::Geometric => reports.push(geometric_report(&code)?),
        CriterionArg::Ab => ab = Some(minimal::ab_sufficient(&code)?),
        CriterionArg::All => {
            reports.push(minimal::is_minimal_naive(&code)?);
            reports.push(minimal::is_minimal_hdz(&code)?);
            reports.push(geometric_report(&code)?);
            ab = Some(minimal::ab_sufficient(&code)?);
        }
    }
    if reports.windows(2).any(|w| w[0].minimal != w[1].minimal) {
        return Err(CliError::Usage(
            "criteria disagree; this is a bug in the exact criteria".into(),
        ));
    }
    let minimal = match (reports.first(), ab) {
        (Some(r), _) => Some(r.minimal),
        (None, Some(w)) if w.applies => Some(true),
        _ => None,
    };
    if a.json {
        if a.criterion != CriterionArg::All && reports.len() == 1 {
            io.line(&to_json(&MinimalityJson::from(&reports[0])))?;
        } else {
            io.line(&to_json(&VerifyCodeJson {
                parameters: code.parameters(),
                minimal,
                reports: reports.iter().map(MinimalityJson::from).collect(),
                ab: ab.map(RatioJson::from),
            }))?;
        }
    } else {
        let mut parts = vec![code.parameters()];
        parts.extend(reports.iter().map(|r| minimality_text(r, code.field().q())));
        if let Some(w) = ab {
            let v = if w.applies { "applies" } else { "inconclusive" };
            parts.push(format!("ab={v} w_min={} w_max={}", w.w_min, w.w_max));
        }
        io.line(&parts.join(" "))?;
    }
    // the ratio test alone cannot show non-minimality
    Ok(Verdict::from(minimal.unwrap_or(true)))
}

fn verify_points(text: &str, a: &VerifyArgs, io: &mut Io) -> CliResult<Verdict> {
    let pf = format::read_pts(text).map_err(format_error(&a.input))?;
    let set = PointSet::from_indices(pf.space.num_points(), pf.mult.keys().copied());
    let n: usize = pf.mult.values().map(|&m| m as usize).sum();
    let cutting = correspond::is_cutting(&pf.space, &set, a.r)?;
    let minimal_cutting = cutting && correspond::is_minimal_cutting(&pf.space, &set, a.r)?;
    let t = correspond::blocking_multiplicity(&pf.space, &set, a.r)?;
    if a.json {
        io.line(&to_json(&VerifyPointsJson {
            n,
            cutting,
            minimal_cutting,
            tfold: TFoldJson { t, r: a.r },
        }))?;
    } else {
        io.line(&format!(
            "PG({},{}) n={n} cutting={cutting} minimal_cutting={minimal_cutting} t={t} r={}",
            pf.space.dim(),
            pf.space.field().q(),
            a.r
        ))?;
    }
    Ok(Verdict::from(cutting))
}

fn wdist_cmd(a: WdistArgs, io: &mut Io) -> CliResult<Verdict> {
    let text = read_input(&a.input, io)?;
    let code = format::read_code(&text).map_err(format_error(&a.input))?;
    let wd = code.weight_distribution()?;
    if a.json {
        io.line(&to_json(&WeightsJson::new(wd)))?;
    } else {
        io.line(&format!("{} {}", code.parameters(), weights_text(wd)))?;
    }
    Ok(Verdict::Holds)
}

fn parse_range(what: &str, s: &str) -> CliResult<(u64, u64)> {
    let bad = || CliError::Usage(format!("{what} must look like a..b, found `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn bounds_cmd(a: BoundsArgs, io: &mut Io) -> CliResult<Verdict> {
    if let Some(BoundsCommand::Table {
        q_range,
        k_range,
        json,
    }) = a.table
    {
        let (q0, q1) = parse_range("--q-range", &q_range)?;
        let (k0, k1) = parse_range("--k-range", &k_range)?;
        let mut rows = Vec::new();
        for q in q0.max(2)..=q1.min(cutcode_core::gf::MAX_Q as u64) {
            if cutcode_core::gf::prime_power(q as u32).is_none() {
                continue;
            }
            for k in k0.max(2)..=k1 {
                rows.push(bounds::report(q as u32, k as usize)?);
            }
        }
        if json {
            let v: Vec<BoundsJson> = rows.iter().map(BoundsJson::from).collect();
            io.line(&to_json(&v))?;
        } else {
            write!(io.out, "{}", bounds_markdown(&rows)).map_err(|e| io_error("stdout", e))?;
        }
        return Ok(Verdict::Holds);
    }
    let (Some(q), Some(k)) = (a.q, a.k) else {
        return Err(CliError::Usage("bounds needs --q and --k".into()));
    };
    let b = bounds::report(q, k)?;
    if a.json {
        io.line(&to_json(&BoundsJson::from(&b)))?;
    } else if a.markdown {
        write!(io.out, "{}", bounds_markdown(&[b])).map_err(|e| io_error("stdout", e))?;
    } else {
        io.line(&bounds_text(&b))?;
    }
    Ok(Verdict::Holds)
}

fn options(
    mode: ModeArg,
    symmetry: SymmetryArg,
    budget: Option<u64>,
    max_results: usize,
) -> SearchOptions {
    SearchOptions {
        mode: match mode {
            ModeArg::First => Mode::First,
            ModeArg::All => Mode::All,
            ModeArg::Count => Mode::Count,
        },
        budget,
        symmetry: match symmetry {
            SymmetryArg::None => Symmetry::None,
            SymmetryArg::FirstPoint => Symmetry::FirstPoint,
            SymmetryArg::Frame => Symmetry::Frame,
        },
        max_results,
    }
}

fn search_cmd(a: SearchArgs, io: &mut Io) -> CliResult<Verdict> {
    if a.stretch {
        let r = stretch::hexagonal_q3_search(usize::MAX)?;
        io.line(&format!(
            "pairs_tried={} hits={} minimal_hits={} best_distance={}",
            r.pairs_tried,
            r.hits.len(),
            r.minimal_hits.len(),
            r.best_distance
        ))?;
        for (x, y) in &r.minimal_hits {
            io.line(&format!("{{frame lines}} + {{{x},{y}}}"))?;
        }
        return Ok(Verdict::from(!r.minimal_hits.is_empty()));
    }
    let (q, k, n) = (a.q.unwrap(), a.k.unwrap(), a.n.unwrap());
    let opts = options(a.mode, a.symmetry, a.budget, a.max_results);
    let threads = a.threads.unwrap_or_else(parallel::default_threads);
    let r = if a.shortest {
        match parallel::shortest(q, k, n, &opts, threads) {
            Ok((_, r)) => r,
            Err(cutcode_core::Error::NoneFound(_)) => {
                io.line(&format!(
                    "no cutting set of size <= {n} in PG({},{q})",
                    k - 1
                ))?;
                return Ok(Verdict::Fails);
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        parallel::find_cutting_sets(q, k, n, &opts, threads)?
    };
    let mut files = Vec::new();
    if let Some(dir) = &a.out_dir {
        std::fs::create_dir_all(dir).map_err(|e| io_error(dir.display().to_string(), e))?;
        let space = ProjectiveSpace::new(Field::new(q)?, k - 1)?;
        for (i, set) in r.found.iter().enumerate() {
            let name = format!("cutting_q{q}_k{k}_n{}_{i}.pts", r.n);
            write_file(&dir.join(&name), &format::write_point_set(&space, set))?;
            files.push(name);
        }
    }
    if a.json {
        io.line(&to_json(&SearchJson::new(&r, files)))?;
    } else {
        io.line(&search_text(&r))?;
    }
    Ok(Verdict::from(r.count > 0))
}

fn equiv_cmd(a: EquivArgs, io: &mut Io) -> CliResult<Verdict> {
    let ca = read_code_file(&a.a)?;
    let cb = read_code_file(&a.b)?;
    let cert = search::are_equivalent(&ca, &cb, &EquivalenceLimits::default())?;
    if let Some(c) = &cert {
        if !c.verify(&ca, &cb) {
            return Err(CliError::Usage("certificate failed to verify".into()));
        }
    }
    if a.json {
        io.line(&to_json(&EquivJson::new(cert.as_ref())))?;
    } else {
        match &cert {
            Some(c) => {
                let perm: Vec<String> = c.perm.iter().map(|p| p.to_string()).collect();
                let sc: Vec<String> = c.scalars.iter().map(|s| s.value().to_string()).collect();
                io.line(&format!(
                    "equivalent perm={} scalars={}",
                    perm.join(","),
                    sc.join(",")
                ))?;
            }
            None => io.line("inequivalent")?,
        }
    }
    Ok(Verdict::from(cert.is_some()))
}

fn classify_cmd(a: ClassifyArgs, io: &mut Io) -> CliResult<Verdict> {
    let limits = EquivalenceLimits::default();
    let (names, codes): (Vec<String>, Vec<LinearCode>) = if let Some(q) = a.q {
        let (k, n) = (a.k.unwrap(), a.n.unwrap());
        let opts = options(ModeArg::All, a.symmetry, None, usize::MAX);
        let threads = a.threads.unwrap_or_else(parallel::default_threads);
        let r = parallel::find_cutting_sets(q, k, n, &opts, threads)?;
        let space = Arc::new(ProjectiveSpace::new(Field::new(q)?, k - 1)?);
        let mut codes = Vec::new();
        for set in &r.found {
            let sys = ProjectiveSystem::from_indices(space.clone(), set.iter().copied())?;
            codes.push(correspond::psi(&sys)?);
        }
        let names = r
            .found
            .iter()
            .map(|s| {
                let v: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                format!("{{{}}}", v.join(","))
            })
            .collect();
        (names, codes)
    } else {
        if a.files.is_empty() {
            return Err(CliError::Usage(
                "classify needs files or --q --k --n".into(),
            ));
        }
        let codes = a
            .files
            .iter()
            .map(|p| read_code_file(p))
            .collect::<CliResult<Vec<_>>>()?;
        (
            a.files.iter().map(|p| p.display().to_string()).collect(),
            codes,
        )
    };
    let classes = search::classify_codes(&codes, &limits)?;
    let out = ClassifyJson {
        inputs: codes.len(),
        classes: classes
            .iter()
            .map(|c| -> CliResult<ClassJson> {
                let rep = &codes[c[0]];
                Ok(ClassJson {
                    size: c.len(),
                    representative: format!("{} {}", rep.parameters(), names[c[0]]),
                    a: report::weight_map(rep.weight_distribution()?),
                    members: c.iter().map(|&i| names[i].clone()).collect(),
                })
            })
            .collect::<CliResult<_>>()?,
    };
    if a.json {
        io.line(&to_json(&out))?;
    } else {
        io.line(&format!(
            "{} inputs, {} classes",
            out.inputs,
            out.classes.len()
        ))?;
        for (i, c) in out.classes.iter().enumerate() {
            let wd: Vec<String> = c.a.iter().map(|(w, n)| format!("A_{w}={n}")).collect();
            io.line(&format!(
                "class {i}: size={} rep={} {}",
                c.size,
                c.representative,
                wd.join(" ")
            ))?;
        }
    }
    Ok(Verdict::Holds)
}
