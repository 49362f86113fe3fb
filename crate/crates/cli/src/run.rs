//! Command dispatch.  Every subcommand reads a problem (a bundled dataset
//! name or a file path), prints one JSON or DOT document to stdout, and
//! reports failures on stderr with exit code 2 for bad input and 3 for a
//! computation that cannot be carried out.

use crate::datasets;
use crate::emit;
use crate::problem::{parse_problem, ProblemError, ProblemSpec, RawOptions, ValidationKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gitfan_core::{
    enumerate_afaces_with, extract_semiample_and_mori, minimal_full_dim, moving_cone,
    moving_cone_summary, project_orbit_cones, support_cone, traverse_plain_with,
    traverse_symmetric_with, CheckpointState, CoreError, GitFanResult, OrbitConeTable,
    TraversalOptions,
};
use gitfan_poly::{AfaceMethod, FaceIndexSet};
use gitfan_symmetry::{verify_ideal_invariance, SymmetryGroup};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;

/// Full subset enumeration walks 2^r candidates; past this many variables
/// that is no longer a desk-scale computation.
pub const ENUMERATION_LIMIT: usize = 32;

#[derive(Parser, Debug)]
#[command(
    name = "gitfan",
    about = "Chamber structures of graded polynomial rings",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Parse a problem and print its shape
    Validate { input: String },
    /// List one face per orbit passing the ideal test
    Afaces {
        input: String,
        /// Face test: fast | sat | ra
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Project the surviving faces into the grading space and summarize
    Orbitcones { input: String },
    /// Walk the chamber structure and print the fan
    Gitfan(GitfanArgs),
    /// Intersect the leave-one-out projections and print its facets
    Movingcone { input: String },
    /// Read a fan result and print the distinguished chamber and its dual
    Dual { input: String },
}

#[derive(Args, Debug)]
pub struct GitfanArgs {
    /// Bundled dataset name or path to a problem file
    pub input: String,
    /// Walk every chamber individually instead of one per orbit
    #[arg(long)]
    pub plain: bool,
    /// Restrict the walk to the intersection of leave-one-out projections
    #[arg(long)]
    pub restrict_moving: bool,
    /// Worker pool size (default: all cores)
    #[arg(long)]
    pub threads: Option<usize>,
    /// Snapshot file, updated as the walk progresses
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Continue from the --checkpoint snapshot instead of starting over
    #[arg(long, requires = "checkpoint")]
    pub resume: bool,
    /// Face test: fast | sat | ra
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// Acknowledge that this input is a cluster-scale computation
    #[arg(long)]
    pub i_know_this_is_huge: bool,
    /// Print the orbit graph as DOT instead of the JSON result
    #[arg(long)]
    pub dot: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    /// Weighted-order saturation when a positive weight exists
    Fast,
    /// Iterated ideal quotients
    Sat,
    /// Radical membership through an adjoined inverse
    Ra,
}

impl From<MethodArg> for AfaceMethod {
    fn from(m: MethodArg) -> AfaceMethod {
        match m {
            MethodArg::Fast => AfaceMethod::Fast,
            MethodArg::Sat => AfaceMethod::Saturation,
            MethodArg::Ra => AfaceMethod::Rabinowitsch,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Problem(ProblemError),
    Usage(String),
    Io(String),
    Compute(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Problem(e) => write!(f, "{e}"),
            CliError::Usage(m) | CliError::Io(m) | CliError::Compute(m) => f.write_str(m),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Problem(_) | CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Compute(_) => 3,
        }
    }
}

impl From<ProblemError> for CliError {
    fn from(e: ProblemError) -> CliError {
        CliError::Problem(e)
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> CliError {
        CliError::Compute(e.to_string())
    }
}

/// Run a parsed command line and translate the outcome to an exit code.
pub fn dispatch(cli: Cli) -> i32 {
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("gitfan: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.cmd {
        Cmd::Validate { input } => cmd_validate(input),
        Cmd::Afaces { input, method } => cmd_afaces(input, *method),
        Cmd::Orbitcones { input } => cmd_orbitcones(input),
        Cmd::Gitfan(args) => cmd_gitfan(args),
        Cmd::Movingcone { input } => cmd_movingcone(input),
        Cmd::Dual { input } => cmd_dual(input),
    }
}

struct Loaded {
    spec: ProblemSpec,
    digest: String,
}

fn load_problem(input: &str) -> Result<Loaded, CliError> {
    let text = match datasets::dataset(input) {
        Some(d) => d.text.to_string(),
        None => std::fs::read_to_string(input)
            .map_err(|e| CliError::Io(format!("cannot read {input:?}: {e}")))?,
    };
    let spec = parse_problem(&text)?;
    Ok(Loaded {
        spec,
        digest: datasets::text_digest(&text),
    })
}

fn ensure_enumerable(r: usize) -> Result<(), CliError> {
    if r > ENUMERATION_LIMIT {
        return Err(CliError::Compute(format!(
            "candidate-face enumeration would walk 2^{r} subsets; \
             this build stops at 2^{ENUMERATION_LIMIT}"
        )));
    }
    Ok(())
}

fn ensure_invariant(spec: &ProblemSpec) -> Result<(), CliError> {
    if spec.group().len() > 1 && !verify_ideal_invariance(spec.group(), spec.ideal()) {
        return Err(CliError::Problem(ProblemError::Validation {
            kind: ValidationKind::Group,
            msg: "the ideal is not invariant under the group; the orbit shortcut would \
                  give wrong answers (rerun with --plain or drop the group)"
                .into(),
        }));
    }
    Ok(())
}

fn setup_threads(requested: Option<usize>) {
    if let Some(n) = requested.filter(|n| *n > 0) {
        let built = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        if built.is_err() && rayon::current_num_threads() != n {
            eprintln!(
                "gitfan: worker pool already running with {} threads",
                rayon::current_num_threads()
            );
        }
    }
}

fn resolve_method(cli: Option<MethodArg>, file: &RawOptions) -> AfaceMethod {
    if let Some(m) = cli {
        return m.into();
    }
    match file.method.as_deref() {
        Some("sat") => AfaceMethod::Saturation,
        Some("ra") => AfaceMethod::Rabinowitsch,
        // Unknown strings were rejected at parse time.
        _ => AfaceMethod::Fast,
    }
}

#[derive(Serialize)]
struct ValidateOut {
    digest: String,
    vars: usize,
    grading_rows: usize,
    grading_rank: usize,
    ideal_generators: usize,
    group_order: usize,
}

fn cmd_validate(input: &str) -> Result<(), CliError> {
    let loaded = load_problem(input)?;
    let spec = &loaded.spec;
    let out = ValidateOut {
        digest: loaded.digest,
        vars: spec.var_count(),
        grading_rows: spec.grading().rows(),
        grading_rank: spec.grading().rank(),
        ideal_generators: spec.ideal().gens().len(),
        group_order: spec.group().len(),
    };
    print!("{}", serde_json::to_string_pretty(&out).expect("plain struct"));
    println!();
    Ok(())
}

#[derive(Serialize)]
struct AfaceOut {
    representative: Vec<String>,
    orbit_length: usize,
}

#[derive(Serialize)]
struct AfacesOut {
    total_faces: usize,
    orbit_count: usize,
    orbits: Vec<AfaceOut>,
}

fn cmd_afaces(input: &str, method: Option<MethodArg>) -> Result<(), CliError> {
    let loaded = load_problem(input)?;
    let spec = &loaded.spec;
    let r = spec.var_count();
    ensure_enumerable(r)?;
    ensure_invariant(spec)?;
    setup_threads(spec.options().threads);
    let method = resolve_method(method, spec.options());
    let grading = spec.grading().row_vecs();
    let orbits = enumerate_afaces_with(spec.ideal(), &grading, spec.group(), r, method);
    let out = AfacesOut {
        total_faces: orbits.iter().map(|o| o.orbit_length).sum(),
        orbit_count: orbits.len(),
        orbits: orbits
            .iter()
            .map(|o| AfaceOut {
                representative: o
                    .representative
                    .iter()
                    .map(|i| spec.vars()[i].clone())
                    .collect(),
                orbit_length: o.orbit_length,
            })
            .collect(),
    };
    print!("{}", serde_json::to_string_pretty(&out).expect("plain struct"));
    println!();
    Ok(())
}

/// Sizes of the index orbits of the table under its group, ascending.
fn cone_orbit_lengths(table: &OrbitConeTable) -> Vec<usize> {
    let n = table.len();
    let mut seen = vec![false; n];
    let mut lengths = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut members: BTreeSet<usize> = BTreeSet::new();
        for perm in table.index_perms() {
            members.insert(perm[i]);
        }
        for &m in &members {
            seen[m] = true;
        }
        lengths.push(members.len());
    }
    lengths.sort_unstable();
    lengths
}

#[derive(Serialize)]
struct OrbitconesOut {
    ambient: usize,
    cones: usize,
    full_dimensional: usize,
    minimal_full_dimensional: usize,
    orbit_count: usize,
    orbit_lengths: Vec<usize>,
}

fn cmd_orbitcones(input: &str) -> Result<(), CliError> {
    let loaded = load_problem(input)?;
    let spec = &loaded.spec;
    let r = spec.var_count();
    ensure_enumerable(r)?;
    ensure_invariant(spec)?;
    setup_threads(spec.options().threads);
    let method = resolve_method(None, spec.options());
    let grading = spec.grading().row_vecs();
    let orbits = enumerate_afaces_with(spec.ideal(), &grading, spec.group(), r, method);
    let reps: Vec<FaceIndexSet> = orbits.iter().map(|o| o.representative).collect();
    let table = project_orbit_cones(&reps, spec.grading(), spec.group());
    let k = spec.grading_rank();
    let full = table.cones().iter().filter(|c| c.dim() == k).count();
    let minimal = minimal_full_dim(&table, k);
    let lengths = cone_orbit_lengths(&table);
    let out = OrbitconesOut {
        ambient: k,
        cones: table.len(),
        full_dimensional: full,
        minimal_full_dimensional: minimal.len(),
        orbit_count: lengths.len(),
        orbit_lengths: lengths,
    };
    print!("{}", serde_json::to_string_pretty(&out).expect("plain struct"));
    println!();
    Ok(())
}

fn cmd_gitfan(args: &GitfanArgs) -> Result<(), CliError> {
    let loaded = load_problem(&args.input)?;
    let spec = &loaded.spec;
    let r = spec.var_count();

    if r > ENUMERATION_LIMIT {
        if !args.i_know_this_is_huge {
            return Err(CliError::Usage(format!(
                "this problem has {r} variables; its full chamber walk is a cluster-scale \
                 computation. pass --i-know-this-is-huge together with --checkpoint to insist"
            )));
        }
        if args.checkpoint.is_none() {
            return Err(CliError::Usage(
                "--i-know-this-is-huge requires --checkpoint PATH so the run can survive \
                 interruptions"
                    .into(),
            ));
        }
        // Even with the acknowledgement there is nothing useful to start:
        // stage one enumerates subsets and refuses past the limit.
        return Err(CliError::Compute(format!(
            "candidate-face enumeration would walk 2^{r} subsets; this build stops at \
             2^{ENUMERATION_LIMIT} and cannot begin the walk"
        )));
    }

    setup_threads(args.threads.or(spec.options().threads));
    let method = resolve_method(args.method, spec.options());
    let restrict = args.restrict_moving || spec.options().restrict_moving == Some(true);

    // Load the snapshot before any heavy work so stale files are refused
    // up front; the traversal re-verifies everything in depth.
    let checkpoint = args
        .checkpoint
        .clone()
        .or_else(|| spec.options().checkpoint.as_deref().map(PathBuf::from));
    let resume_from = match (&checkpoint, args.resume) {
        (Some(path), true) => {
            let state = CheckpointState::load(path)?;
            if state.dataset_digest != loaded.digest {
                return Err(CoreError::CheckpointMismatch(format!(
                    "snapshot is for input {} but this run is {}",
                    state.dataset_digest, loaded.digest
                ))
                .into());
            }
            Some(state)
        }
        _ => None,
    };

    let group: SymmetryGroup = if args.plain {
        SymmetryGroup::trivial(r)
    } else {
        ensure_invariant(spec)?;
        spec.group().clone()
    };

    let grading = spec.grading().row_vecs();
    let orbits = enumerate_afaces_with(spec.ideal(), &grading, &group, r, method);
    let reps: Vec<FaceIndexSet> = orbits.iter().map(|o| o.representative).collect();
    let table = project_orbit_cones(&reps, spec.grading(), &group);
    let k = spec.grading_rank();
    let minimal = minimal_full_dim(&table, k);

    let support = if restrict {
        moving_cone(spec.grading())
    } else {
        support_cone(spec.grading())
    };

    let opts = TraversalOptions {
        checkpoint_path: checkpoint,
        checkpoint_every: 1,
        resume_from,
        batch_limit: None,
        dataset_digest: loaded.digest.clone(),
    };

    let outcome = if args.plain {
        traverse_plain_with(&minimal, &support, &opts)?
    } else {
        traverse_symmetric_with(&minimal, &group, &support, &opts)?
    };
    let result = outcome.unwrap_complete();

    if args.dot {
        print!("{}", emit::emit_dot(&result));
    } else {
        print!("{}", emit::emit_result_json(&result));
    }
    Ok(())
}

fn cmd_movingcone(input: &str) -> Result<(), CliError> {
    let loaded = load_problem(input)?;
    let spec = &loaded.spec;
    setup_threads(spec.options().threads);
    let group = (spec.group().len() > 1).then_some(spec.group());
    let summary = moving_cone_summary(spec.grading(), group);
    print!("{}", emit::emit_moving_json(&summary));
    Ok(())
}

fn cmd_dual(input: &str) -> Result<(), CliError> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Io(format!("cannot read {input:?}: {e}")))?;
    let result: GitFanResult = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{input:?} is not a fan result: {e}")))?;
    let (semiample, mori) = extract_semiample_and_mori(&result)?;
    print!("{}", emit::emit_dual_json(&semiample, &mori));
    Ok(())
}
