//! Command-line front end. `run` parses arguments, writes the report to the
//! given sink and returns the process exit code.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::artin::{
    abelianized_image, check_convexity, free_reduce, oracle_for, project_word, random_word,
    scramble, theta, ArtinError, ArtinLetter, ArtinWord, ConvexityReport, EqualityOracle,
};
use crate::braid::{delete_strands, garside_nf, perm_of, BraidError, BraidWord};
use crate::coxeter::{
    Bounds, CoxeterElement, CoxeterError, CoxeterGraph, CoxeterSystem, GeneratorId, GeneratorSet,
};
use crate::salvetti::{SalvettiError, SalvettiPoset};
use crate::sign::Sign;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BOUND: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "artin-convex", version, about = "Coxeter and Artin group word tools")]
pub struct Cli {
    /// Coxeter graph file.
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest group enumerated into a multiplication table.
    #[arg(long, global = true, default_value_t = 200_000)]
    max_elements: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Records,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form and length of a Coxeter word.
    Reduce {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Descents and the parabolic decomposition `u = u0 · u1`.
    Decompose {
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        target: String,
    },
    /// Projection of an Artin word onto the target generators, with its trace.
    Project {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        target: String,
    },
    /// Checks every geodesic of every element of `W_T` (all `T` if omitted).
    CoxeterConvexity {
        #[arg(long)]
        target: Option<String>,
    },
    /// Random campaign of projection checks on scrambled words over the target.
    ArtinConvexity {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        max_len: usize,
        /// Most scramble moves per trial.
        #[arg(long, default_value_t = 40)]
        moves: usize,
        /// Brute-force geodesics when the element has a word this short.
        #[arg(long, default_value_t = 4)]
        geodesic_len: usize,
    },
    /// Cell census of the Salvetti complex.
    Salvetti {
        /// Restrict to cells `B(u, X)` with `lg(u) <= radius`.
        #[arg(long)]
        radius: Option<usize>,
        /// Also print the 1-skeleton edge list.
        #[arg(long)]
        dump_edges: bool,
    },
    /// Garside normal form of a braid word.
    BraidNf {
        #[arg(long)]
        strands: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Deletes every strand not listed in `--keep`.
    BraidDelete {
        #[arg(long)]
        strands: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        keep: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precondition(String),
    Bound(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::Bound(_) => EXIT_BOUND,
            CliError::Io(_) => EXIT_IO,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Precondition(m) | CliError::Bound(m) | CliError::Io(m) => m,
        }
    }
}

impl From<CoxeterError> for CliError {
    fn from(e: CoxeterError) -> Self {
        let m = e.to_string();
        match e {
            CoxeterError::Parse { .. }
            | CoxeterError::DuplicateGenerator(_)
            | CoxeterError::UndeclaredGenerator(_)
            | CoxeterError::InvalidLabel(_)
            | CoxeterError::InvalidName(_)
            | CoxeterError::TooManyGenerators(_) => CliError::Parse(m),
            CoxeterError::ElementBound(_) | CoxeterError::OrbitBound(_) => CliError::Bound(m),
            _ => CliError::Precondition(m),
        }
    }
}

impl From<SalvettiError> for CliError {
    fn from(e: SalvettiError) -> Self {
        match e {
            SalvettiError::Coxeter(c) => c.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<ArtinError> for CliError {
    fn from(e: ArtinError) -> Self {
        match e {
            ArtinError::Coxeter(c) => c.into(),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        let m = e.to_string();
        match e {
            BraidError::BadToken(_) | BraidError::IndexOutOfRange { .. } | BraidError::BadStrand(_) => {
                CliError::Parse(m)
            }
            _ => CliError::Precondition(m),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, passed)) => {
            if let Err(e) = out.write_all(text.as_bytes()) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_IO;
            }
            if passed {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn load_system(cli: &Cli) -> Result<CoxeterSystem, CliError> {
    let path = cli
        .graph
        .as_ref()
        .ok_or_else(|| CliError::Parse("--graph is required for this command".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let graph = CoxeterGraph::parse(&text)?;
    let bounds = Bounds {
        max_elements: cli.max_elements,
        ..Bounds::default()
    };
    Ok(CoxeterSystem::with_bounds(graph, bounds)?)
}

/// Runs the parsed command; returns the report and whether the verdict is PASS.
pub fn execute(cli: &Cli) -> Result<(String, bool), CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Reduce { word } => {
            let sys = load_system(cli)?;
            let e = sys.normalize(&sys.parse_word(word)?)?;
            Ok((render_reduce(&sys, &e, f), true))
        }
        Command::Decompose { word, target } => {
            let sys = load_system(cli)?;
            let target = sys.graph().parse_set(target)?;
            let e = sys.normalize(&sys.parse_word(word)?)?;
            Ok((render_decompose(&sys, &e, target, f)?, true))
        }
        Command::Project { word, target } => {
            let sys = load_system(cli)?;
            let target = sys.graph().parse_set(target)?;
            let w = ArtinWord::parse(sys.graph(), word)?;
            Ok((render_project(&sys, &w, target, f)?, true))
        }
        Command::CoxeterConvexity { target } => {
            let sys = load_system(cli)?;
            let targets = match target {
                Some(t) => vec![sys.graph().parse_set(t)?],
                None => {
                    let mut all: Vec<GeneratorSet> = sys.all().subsets().collect();
                    all.sort_by_key(|x| (x.len(), x.0));
                    all
                }
            };
            coxeter_convexity_report(&sys, &targets, f)
        }
        Command::ArtinConvexity {
            target,
            trials,
            seed,
            max_len,
            moves,
            geodesic_len,
        } => {
            let sys = load_system(cli)?;
            let target = sys.graph().parse_set(target)?;
            let config = CampaignConfig {
                target,
                trials: *trials,
                seed: *seed,
                max_len: *max_len,
                moves: *moves,
                geodesic_len: *geodesic_len,
            };
            artin_convexity_report(&sys, &config, f)
        }
        Command::Salvetti { radius, dump_edges } => {
            let sys = load_system(cli)?;
            let poset = SalvettiPoset::new(sys);
            let summary = poset.build_complex(*radius)?;
            let mut s = String::new();
            match f {
                Format::Text => {
                    for (d, c) in summary.cells.iter().enumerate() {
                        let _ = writeln!(s, "{d}-cells: {c}");
                    }
                    let _ = writeln!(s, "euler characteristic: {}", summary.euler_characteristic);
                }
                Format::Records => {
                    let cells: Vec<String> = summary.cells.iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(
                        s,
                        "census cells={} euler={}",
                        cells.join(","),
                        summary.euler_characteristic
                    );
                }
            }
            if *dump_edges {
                s.push_str(&poset.one_skeleton(*radius)?);
            }
            Ok((s, true))
        }
        Command::BraidNf { strands, word } => {
            let w = BraidWord::parse(*strands, word)?;
            let nf = garside_nf(&w);
            let s = match f {
                Format::Text => format!("normal form: {nf}\npermutation: {}\n", perm_of(&w)),
                Format::Records => format!(
                    "braid infimum={} simples={} permutation={}\n",
                    nf.infimum,
                    nf.simples.iter().map(|p| perm_token(p.images())).collect::<Vec<_>>().join(","),
                    perm_token(perm_of(&w).images()),
                ),
            };
            Ok((s, true))
        }
        Command::BraidDelete { strands, word, keep } => {
            let w = BraidWord::parse(*strands, word)?;
            let keep = parse_keep(keep)?;
            let d = delete_strands(&w, &keep)?;
            let s = match f {
                Format::Text => format!("{}\nstrands: {}\nlength: {} (input {})\n", d, d.strands(), d.len(), w.len()),
                Format::Records => format!(
                    "delete word={} strands={} length={} input_length={}\n",
                    braid_token(&d),
                    d.strands(),
                    d.len(),
                    w.len()
                ),
            };
            Ok((s, true))
        }
    }
}

fn parse_keep(text: &str) -> Result<Vec<usize>, CliError> {
    text.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Parse(format!("bad strand `{t}`"))))
        .collect()
}

fn perm_token(images: &[u8]) -> String {
    images.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(".")
}

fn braid_token(w: &BraidWord) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.letters()
        .iter()
        .map(|&(i, sign)| match sign {
            Sign::Positive => format!("s{i}"),
            Sign::Negative => format!("s{i}^-1"),
        })
        .collect::<Vec<_>>()
        .join(".")
}

/// Element as a single token: dot-joined normal form, `1` for the identity.
fn element_token(sys: &CoxeterSystem, e: &CoxeterElement) -> String {
    if e.is_identity() {
        return "1".into();
    }
    let g = sys.graph();
    e.normal_form().letters().iter().map(|&s| g.name(s)).collect::<Vec<_>>().join(".")
}

fn word_token(graph: &CoxeterGraph, w: &ArtinWord) -> String {
    w.display(graph).to_string().replace(' ', ".")
}

fn set_token(graph: &CoxeterGraph, set: GeneratorSet) -> String {
    set.iter().map(|s| graph.name(s)).collect::<Vec<_>>().join(",")
}

fn letter_text(graph: &CoxeterGraph, l: ArtinLetter) -> String {
    ArtinWord(vec![l]).display(graph).to_string()
}

fn render_reduce(sys: &CoxeterSystem, e: &CoxeterElement, f: Format) -> String {
    match f {
        Format::Text => format!("{}\nlength: {}\n", sys.format(e), e.length()),
        Format::Records => format!("reduce normal_form={} length={}\n", element_token(sys, e), e.length()),
    }
}

fn render_decompose(
    sys: &CoxeterSystem,
    e: &CoxeterElement,
    target: GeneratorSet,
    f: Format,
) -> Result<String, CliError> {
    let g = sys.graph();
    let (u0, u1) = sys.parabolic_decompose(e, target)?;
    let left = sys.left_descents(e)?;
    let right = sys.right_descents(e)?;
    Ok(match f {
        Format::Text => format!(
            "element: {}\nlength: {}\nleft descents: {}\nright descents: {}\nu0: {}\nu1: {}\n",
            sys.format(e),
            e.length(),
            g.format_set(left),
            g.format_set(right),
            sys.format(&u0),
            sys.format(&u1),
        ),
        Format::Records => format!(
            "decompose element={} length={} left_descents={} right_descents={} u0={} u1={}\n",
            element_token(sys, e),
            e.length(),
            set_token(g, left),
            set_token(g, right),
            element_token(sys, &u0),
            element_token(sys, &u1),
        ),
    })
}

fn render_project(
    sys: &CoxeterSystem,
    w: &ArtinWord,
    target: GeneratorSet,
    f: Format,
) -> Result<String, CliError> {
    let g = sys.graph();
    let (p, trace) = project_word(sys, w, target)?;
    let mut s = String::new();
    match f {
        Format::Text => {
            let _ = writeln!(s, "projection: {}", p.display(g));
            let _ = writeln!(s, "length: {} -> {}", w.len(), p.len());
            let rows: Vec<[String; 8]> = trace
                .steps
                .iter()
                .map(|st| {
                    [
                        st.index.to_string(),
                        letter_text(g, st.letter),
                        sys.format(&st.prefix),
                        sys.format(&st.v),
                        sys.format(&st.w),
                        sys.format(&st.conjugate),
                        st.t.map_or("-".into(), |t| g.name(t).to_string()),
                        st.emitted.map_or("1".into(), |l| letter_text(g, l)),
                    ]
                })
                .collect();
            let header = ["i", "letter", "u_i", "v_i", "w_i", "conjugate", "t_i", "tau_i"];
            let mut widths = header.map(str::len);
            for row in &rows {
                for (k, cell) in row.iter().enumerate() {
                    widths[k] = widths[k].max(cell.chars().count());
                }
            }
            let mut line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("{c:<width$}", width = widths[k]))
                    .collect();
                let _ = writeln!(s, "{}", padded.join("  ").trim_end());
            };
            line(header.to_vec());
            for row in &rows {
                line(row.iter().map(String::as_str).collect());
            }
        }
        Format::Records => {
            for st in &trace.steps {
                let _ = writeln!(
                    s,
                    "step i={} letter={} u={} v={} w={} conjugate={} t={} tau={}",
                    st.index,
                    word_token(g, &ArtinWord(vec![st.letter])),
                    element_token(sys, &st.prefix),
                    element_token(sys, &st.v),
                    element_token(sys, &st.w),
                    element_token(sys, &st.conjugate),
                    st.t.map_or("-".into(), |t| g.name(t).to_string()),
                    st.emitted.map_or("1".into(), |l| word_token(g, &ArtinWord(vec![l]))),
                );
            }
            let _ = writeln!(
                s,
                "projection word={} input_length={} length={}",
                word_token(g, &p),
                w.len(),
                p.len()
            );
        }
    }
    Ok(s)
}

/// Geodesic census of `W_T` inside the Cayley graph of `(W, S)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GeodesicCensus {
    pub elements: usize,
    pub geodesics: u64,
    /// Geodesic words using a generator outside `T`.
    pub violations: u64,
}

/// Enumerates every geodesic word of every element of `W_T` by depth-first
/// search down right descents.
pub fn coxeter_convexity(sys: &CoxeterSystem, target: GeneratorSet) -> Result<GeodesicCensus, CoxeterError> {
    if !sys.is_finite_type(sys.all()) {
        return Err(CoxeterError::InfiniteType);
    }
    let elements = sys.parabolic_elements(target)?;
    let counts = elements
        .par_iter()
        .map(|e| {
            let mut census = (0u64, 0u64);
            geodesics_below(sys, e, target, true, &mut census)?;
            Ok(census)
        })
        .collect::<Result<Vec<_>, CoxeterError>>()?;
    Ok(GeodesicCensus {
        elements: elements.len(),
        geodesics: counts.iter().map(|c| c.0).sum(),
        violations: counts.iter().map(|c| c.1).sum(),
    })
}

fn geodesics_below(
    sys: &CoxeterSystem,
    e: &CoxeterElement,
    target: GeneratorSet,
    inside: bool,
    census: &mut (u64, u64),
) -> Result<(), CoxeterError> {
    if e.is_identity() {
        census.0 += 1;
        if !inside {
            census.1 += 1;
        }
        return Ok(());
    }
    for s in sys.right_descents(e)?.iter() {
        let shorter = sys.mul_generator(e, s)?;
        geodesics_below(sys, &shorter, target, inside && target.contains(s), census)?;
    }
    Ok(())
}

fn coxeter_convexity_report(
    sys: &CoxeterSystem,
    targets: &[GeneratorSet],
    f: Format,
) -> Result<(String, bool), CliError> {
    let g = sys.graph();
    let mut s = String::new();
    let mut all_pass = true;
    if f == Format::Text {
        let _ = writeln!(s, "{:<16} {:>9} {:>11} {:>10}  verdict", "T", "elements", "geodesics", "violations");
    }
    for &t in targets {
        let c = coxeter_convexity(sys, t)?;
        let pass = c.violations == 0;
        all_pass &= pass;
        let verdict = if pass { "PASS" } else { "FAIL" };
        match f {
            Format::Text => {
                let _ = writeln!(
                    s,
                    "{:<16} {:>9} {:>11} {:>10}  {verdict}",
                    g.format_set(t),
                    c.elements,
                    c.geodesics,
                    c.violations
                );
            }
            Format::Records => {
                let _ = writeln!(
                    s,
                    "target set={} elements={} geodesics={} violations={} verdict={verdict}",
                    set_token(g, t),
                    c.elements,
                    c.geodesics,
                    c.violations
                );
            }
        }
    }
    let verdict = if all_pass { "PASS" } else { "FAIL" };
    match f {
        Format::Text => {
            let _ = writeln!(s, "verdict: {verdict}");
        }
        Format::Records => {
            let _ = writeln!(s, "summary targets={} verdict={verdict}", targets.len());
        }
    }
    Ok((s, all_pass))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub target: GeneratorSet,
    pub trials: usize,
    pub seed: u64,
    pub max_len: usize,
    pub moves: usize,
    pub geodesic_len: usize,
}

/// Brute-force geodesic check of one element of `A_T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeodesicCheck {
    pub length: usize,
    pub geodesics: usize,
    pub outside: usize,
}

#[derive(Clone, Debug)]
pub struct Trial {
    pub index: usize,
    pub witness: ArtinWord,
    pub moves: usize,
    pub scrambled: ArtinWord,
    pub report: ConvexityReport,
    /// `θ` and the abelianization agree on the witness and its scramble.
    pub invariants: bool,
    pub geodesic: Option<GeodesicCheck>,
}

impl Trial {
    pub fn passes(&self) -> bool {
        self.report.passes() && self.invariants && self.geodesic.is_none_or(|g| g.outside == 0)
    }
}

/// The generator for trial `index`: one ChaCha stream per trial.
pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// One trial: a random word over the target, scrambled with relation moves
/// (never longer than `max_len`), then checked against the projection.
pub fn run_trial(
    sys: &CoxeterSystem,
    oracle: Option<&dyn EqualityOracle>,
    config: &CampaignConfig,
    index: usize,
) -> Result<Trial, ArtinError> {
    let g = sys.graph();
    let mut rng = trial_rng(config.seed, index);
    let target: Vec<GeneratorId> = config.target.iter().collect();
    let base = rng.gen_range(0..=config.max_len / 2);
    let witness = random_word(&mut rng, &target, base);
    let room = (config.max_len - witness.len()) / 2;
    let moves = rng.gen_range(0..=config.moves.min(room));
    let scrambled = scramble(g, &witness, moves, rng.gen());
    let report = check_convexity(sys, &scrambled, config.target, oracle, Some(&witness))?;
    let invariants = theta(sys, &scrambled)? == theta(sys, &witness)?
        && abelianized_image(g, &scrambled) == abelianized_image(g, &witness);
    let geodesic = match oracle {
        Some(o) if free_reduce(&witness).len() <= config.geodesic_len => {
            Some(brute_force_geodesics(g, o, &witness, config.target))
        }
        _ => None,
    };
    Ok(Trial {
        index,
        witness,
        moves,
        scrambled,
        report,
        invariants,
        geodesic,
    })
}

/// Finds the shortest length at which some word equals `x`, by trying every
/// word of each length in turn, and counts how many of those geodesics leave
/// the target. The search stops at the free-reduced length of `x`.
pub fn brute_force_geodesics(
    graph: &CoxeterGraph,
    oracle: &dyn EqualityOracle,
    x: &ArtinWord,
    target: GeneratorSet,
) -> GeodesicCheck {
    let letters: Vec<ArtinLetter> = graph
        .generators()
        .flat_map(|s| [ArtinLetter::positive(s), ArtinLetter::negative(s)])
        .collect();
    let upper = free_reduce(x).len();
    for length in 0..=upper {
        let mut geodesics = 0;
        let mut outside = 0;
        let total = letters.len().pow(length as u32);
        for code in 0..total {
            let mut c = code;
            let word = ArtinWord(
                (0..length)
                    .map(|_| {
                        let l = letters[c % letters.len()];
                        c /= letters.len();
                        l
                    })
                    .collect(),
            );
            if oracle.equal(&word, x) {
                geodesics += 1;
                if !word.lies_in(target) {
                    outside += 1;
                }
            }
        }
        if geodesics > 0 {
            return GeodesicCheck {
                length,
                geodesics,
                outside,
            };
        }
    }
    unreachable!("the free reduction of x has length {upper} and equals x")
}

/// Runs every trial of a campaign in parallel; results are in trial order.
pub fn run_campaign(sys: &CoxeterSystem, config: &CampaignConfig) -> Result<Vec<Trial>, ArtinError> {
    let oracle = oracle_for(sys.graph());
    (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(sys, oracle.as_deref(), config, i))
        .collect()
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn artin_convexity_report(
    sys: &CoxeterSystem,
    config: &CampaignConfig,
    f: Format,
) -> Result<(String, bool), CliError> {
    let oracle = oracle_for(sys.graph());
    let oracle_name = oracle.as_ref().map_or("none", |o| o.name());
    let trials = run_campaign(sys, config)?;
    let g = sys.graph();
    let mut s = String::new();
    if f == Format::Text {
        let _ = writeln!(s, "target: {}  oracle: {oracle_name}  seed: {}", g.format_set(config.target), config.seed);
        if !trials.is_empty() {
            let _ = writeln!(
                s,
                "{:>5} {:>5} {:>5} {:>5} {:>5}  {:<6} {:<6} {:<6} {:<8}  verdict",
                "trial", "base", "moves", "|w|", "|p|", "claim1", "claim2", "claim3", "geodesic"
            );
        }
    }
    let mut failed = 0;
    for t in &trials {
        let r = &t.report;
        let pass = t.passes();
        if !pass {
            failed += 1;
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        let geodesic = t
            .geodesic
            .map_or("-".to_string(), |c| format!("{}/{}", c.geodesics - c.outside, c.geodesics));
        match f {
            Format::Text => {
                let _ = writeln!(
                    s,
                    "{:>5} {:>5} {:>5} {:>5} {:>5}  {:<6} {:<6} {:<6} {:<8}  {verdict}",
                    t.index,
                    t.witness.len(),
                    t.moves,
                    r.input_len,
                    r.projected_len,
                    flag(r.claim1),
                    flag(r.claim2),
                    flag(Some(r.claim3)),
                    geodesic
                );
            }
            Format::Records => {
                let _ = writeln!(
                    s,
                    "trial index={} witness={} moves={} word={} projection={} input_length={} length={} \
                     claim1={} claim2={} claim3={} witness_matches={} theta={} abelian={} invariants={} \
                     geodesic={geodesic} verdict={verdict}",
                    t.index,
                    word_token(g, &t.witness),
                    t.moves,
                    word_token(g, &t.scrambled),
                    word_token(g, &r.projected),
                    r.input_len,
                    r.projected_len,
                    flag(r.claim1),
                    flag(r.claim2),
                    r.claim3,
                    flag(r.witness_matches),
                    flag(r.theta_agrees),
                    flag(r.abelian_agrees),
                    t.invariants,
                );
            }
        }
    }
    let verdict = if failed == 0 { "PASS" } else { "FAIL" };
    match f {
        Format::Text => {
            let _ = writeln!(s, "{} trials, {} failed: {verdict}", trials.len(), failed);
        }
        Format::Records => {
            let _ = writeln!(
                s,
                "summary trials={} failed={failed} oracle={oracle_name} seed={} verdict={verdict}",
                trials.len(),
                config.seed
            );
        }
    }
    Ok((s, failed == 0))
}
