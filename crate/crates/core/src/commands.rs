//! Command-line front end. [`run`] does all the work and returns what to
//! print, so the binary is a thin shell and tests can drive it in-process.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{
    generate_corpus, search_nice, verify_corpus, CorpusBounds, Instance, SearchParams,
};
use crate::dot::{oracle_dot, summary_dot};
use crate::field::{FieldCtx, FieldError};
use crate::graph::{elementary_tree, elementary_tree_level, GraphSummary};
use crate::number_theory::GcdSeries;
use crate::oracle::tabulate;
use crate::poly::{index_decompose, Polynomial};
use crate::report::{verify, FormInfo, Method};
use crate::structure::{analyze_form, psi_map, tree_series, MuMDynamics, PredictError, TauTable};

#[derive(Debug, Parser)]
#[command(
    name = "fqgraph",
    version,
    about = "Functional graphs of x^n h(x^((q-1)/m)) over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Predict the functional graph from the companion-map theorems.
    Predict(PolyArgs),
    /// Show the decomposition, companion dynamics and tau tables.
    Analyze(PolyArgs),
    /// Compare the prediction with the brute-force graph.
    Verify(PolyArgs),
    /// Print the elementary tree T_V or its level T_V^k.
    Tree(TreeArgs),
    /// Emit a Graphviz digraph.
    ExportDot(DotArgs),
    /// Search for m-nice instances over a prime field.
    SearchNice(SearchArgs),
    /// Generate a seeded corpus and verify every instance.
    Corpus(CorpusArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Field size `p` or `p^k`.
    #[arg(short = 'q', long = "field")]
    pub field: String,
    /// Monic modulus for `p^k`, coefficients low to high, comma separated.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Polynomial, expanded or as `x^n*(h(x^s))`.
    #[arg(short = 'f', long = "poly", allow_hyphen_values = true)]
    pub poly: String,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TreeArgs {
    /// Non-increasing series, e.g. `3,3,1`.
    #[arg(long = "v", value_delimiter = ',', required = true)]
    pub v: Vec<u64>,
    /// Level `k` of the tree; the whole tree when omitted.
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DotMode {
    Oracle,
    Prediction,
}

#[derive(Debug, Args)]
pub struct DotArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(short = 'f', long = "poly", allow_hyphen_values = true)]
    pub poly: String,
    #[arg(long, value_enum, default_value = "oracle")]
    pub mode: DotMode,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Prime field size.
    #[arg(short = 'q', long = "field")]
    pub q: u64,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    /// Fixed `h`, as a polynomial in `x`.
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    #[arg(long, default_value_t = 30)]
    pub n_max: u64,
    #[arg(long, default_value_t = 4)]
    pub deg_max: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Random `h` drawn when the space is too large to enumerate.
    #[arg(long, default_value_t = 64)]
    pub samples: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long, default_value_t = 199)]
    pub q_max: u64,
    #[arg(long, default_value_t = 30)]
    pub n_max: u64,
    #[arg(long, default_value_t = 4)]
    pub deg_max: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Random draws per (q, m) pair.
    #[arg(long, default_value_t = 256)]
    pub attempts: usize,
    /// Nice instances kept per (q, m) pair.
    #[arg(long, default_value_t = 3)]
    pub keep: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NotNice(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::NotNice(_) => 2,
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<crate::poly::PolyError> for CliError {
    fn from(e: crate::poly::PolyError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// What a command produced.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `p` or `p^k` (with an optional modulus `c0,c1,...,1`).
pub fn parse_field(spec: &str, modulus: Option<&str>) -> Result<FieldCtx, CliError> {
    let bad = || CliError::Input(format!("bad field spec {spec:?}; expected p or p^k"));
    let (p, k) = match spec.split_once('^') {
        Some((p, k)) => (
            p.trim().parse::<u64>().map_err(|_| bad())?,
            k.trim().parse::<u32>().map_err(|_| bad())?,
        ),
        None => (spec.trim().parse::<u64>().map_err(|_| bad())?, 1),
    };
    let modulus = modulus
        .map(|m| {
            m.split(',')
                .map(|c| {
                    c.trim()
                        .parse::<u64>()
                        .map_err(|_| CliError::Input(format!("bad modulus {m:?}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    if k == 1 && modulus.is_none() {
        Ok(FieldCtx::prime(p)?)
    } else {
        Ok(FieldCtx::extension(p, k, modulus)?)
    }
}

fn load(field: &FieldArgs, poly: &str) -> Result<(FieldCtx, Polynomial), CliError> {
    let ctx = parse_field(&field.field, field.modulus.as_deref())?;
    let f = Polynomial::parse(&ctx, poly)?.reduce_functional(&ctx);
    if f.is_zero() {
        return Err(CliError::Input("polynomial is zero as a function".into()));
    }
    if !f.coeff(0).is_zero() {
        return Err(CliError::Input("polynomial must vanish at 0".into()));
    }
    Ok((ctx, f))
}

/// `psi_f(22) = psi_f(75) = 22; ...`
fn collision_message(dynamics: &MuMDynamics) -> String {
    let parts: Vec<String> = dynamics
        .collisions
        .iter()
        .map(|group| {
            let image = dynamics.psi(group[0]).expect("root of unity");
            let lhs: Vec<String> = group.iter().map(|x| format!("psi_f({x})")).collect();
            format!("{} = {image}", lhs.join(" = "))
        })
        .collect();
    format!(
        "not {}-nice: {}; witnesses: {}",
        dynamics.m,
        parts.join("; "),
        dynamics
            .witnesses()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn summary_json(g: &GraphSummary) -> String {
    serde_json::to_string_pretty(g).expect("summary serializes")
}

fn cmd_predict(a: &PolyArgs) -> Result<String, CliError> {
    let (ctx, f) = load(&a.field, &a.poly)?;
    let form = index_decompose(&ctx, &f)?;
    let analysis = match analyze_form(&ctx, &form) {
        Ok(x) => x,
        Err(PredictError::NotNice { .. }) => {
            return Err(CliError::NotNice(collision_message(&psi_map(&ctx, &form))))
        }
        Err(e) => return Err(CliError::Input(e.to_string())),
    };
    let g = analysis.graph().canonical();
    Ok(match a.out.format {
        Format::Json => summary_json(&g),
        Format::Dot => summary_dot(&g, "prediction"),
        Format::Text => format!(
            "f = {}\nvertices: {}, components: {}, fixed points: {}\n{}",
            f.display(&ctx),
            g.vertex_count(),
            g.components.len(),
            g.fixed_point_count(),
            g.describe()
        ),
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct AnalysisOutput {
    form: FormInfo,
    dynamics: MuMDynamics,
    zero_multiplicities: Option<Vec<u64>>,
    tau_tables: Option<Vec<TauTable>>,
}

fn cmd_analyze(a: &PolyArgs) -> Result<String, CliError> {
    let (ctx, f) = load(&a.field, &a.poly)?;
    let form = index_decompose(&ctx, &f)?;
    let dynamics = psi_map(&ctx, &form);
    let info = FormInfo {
        n: form.n,
        m: form.m,
        h: form.h.display(&ctx).to_string(),
        nu: form.nu,
        omega: form.omega,
        omega_prime: form.omega_prime,
        tree_series: tree_series(&form).entries().to_vec(),
    };
    let analysis = if dynamics.nice {
        Some(analyze_form(&ctx, &form).map_err(|e| CliError::Input(e.to_string()))?)
    } else {
        None
    };
    let out = AnalysisOutput {
        form: info,
        dynamics: dynamics.clone(),
        zero_multiplicities: analysis.as_ref().map(|x| x.zero_multiplicities.clone()),
        tau_tables: analysis.as_ref().map(|x| x.tau_tables.clone()),
    };
    if a.out.format == Format::Json {
        return Ok(serde_json::to_string_pretty(&out).expect("serializes"));
    }
    if a.out.format == Format::Dot {
        return Ok(oracle_dot(&tabulate(&ctx, &f), "f"));
    }
    let join = |v: &[crate::FieldElement]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut s = format!(
        "f = x^{} * h(x^{}), h = {}\nm = {}, nu = {}, omega = {}, omega' = {}, gcd_n(nu) = {:?}\n",
        out.form.n,
        form.s(&ctx),
        out.form.h,
        out.form.m,
        out.form.nu,
        out.form.omega,
        out.form.omega_prime,
        out.form.tree_series
    );
    s += &format!("mu_m = {{{}}}\n", join(&dynamics.mu_m));
    for (x, y) in dynamics.mu_m.iter().zip(&dynamics.psi_images) {
        s += &format!("  psi_f({x}) = {y}\n");
    }
    s += &format!("zero tail = {{{}}}\n", join(&dynamics.zero_tail()));
    let cycles: Vec<String> = dynamics
        .cycles
        .iter()
        .map(|c| format!("{{{}}}", join(c)))
        .collect();
    s += &format!("psi cycles = {}\n", cycles.join(" "));
    if !dynamics.nice {
        s += &collision_message(&dynamics);
        s.push('\n');
        return Ok(s);
    }
    let analysis = analysis.expect("nice");
    s += &format!(
        "zero-tree multiplicities (T^0, T^1, ...) = {:?}\n",
        analysis.zero_multiplicities
    );
    for t in &analysis.tau_tables {
        s += &format!(
            "cycle of length {} at {}: ell = {}, rep_exp = {}, lap bound = {}, tau = {:?}, cycles (u, count) = {:?}\n",
            t.cycle_len, t.representative, t.ell, t.rep_exp, t.order_bound, t.tau, t.cycle_counts
        );
    }
    Ok(s)
}

fn cmd_verify(a: &PolyArgs) -> Result<String, CliError> {
    let (ctx, f) = load(&a.field, &a.poly)?;
    let r = verify(&ctx, &f).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(match a.out.format {
        Format::Json => r.to_json(),
        Format::Dot => oracle_dot(&tabulate(&ctx, &f), "f"),
        Format::Text => {
            let mut s = format!("f = {}\nmethod: {:?}\n", r.polynomial, r.method);
            match r.isomorphic {
                Some(iso) => s += &format!("isomorphic: {iso}\n"),
                None => {
                    s += &format!(
                        "not {}-nice (witnesses {:?}); oracle only\n",
                        r.form.as_ref().map_or(0, |x| x.m),
                        r.witnesses
                    )
                }
            }
            if r.method == Method::Theorem {
                for c in &r.convention_checks {
                    s += &format!(
                        "zero-tail convention {:?}: matches oracle = {}\n",
                        c.convention, c.matches_oracle
                    );
                }
            }
            if let Some(p) = &r.predicted {
                s += &format!("predicted:\n{}", p.describe());
            }
            s += &format!("oracle:\n{}", r.oracle.describe());
            s
        }
    })
}

fn cmd_tree(a: &TreeArgs) -> Result<String, CliError> {
    let v = GcdSeries::new(a.v.clone()).map_err(|e| CliError::Input(e.to_string()))?;
    let t = match a.k {
        Some(k) => elementary_tree_level(&v, k),
        None => elementary_tree(&v),
    };
    Ok(match a.out.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "v": v.entries(),
            "k": a.k,
            "code": t.code(),
            "size": t.size(),
        }))
        .expect("serializes"),
        Format::Dot => summary_dot(
            &GraphSummary::new(vec![crate::Component::uniform(1, &t)]),
            "tree",
        ),
        Format::Text => format!(
            "size: {}\ndepth: {}\ncode: {}\n",
            t.size(),
            t.depth(),
            t.code()
        ),
    })
}

fn cmd_export_dot(a: &DotArgs) -> Result<(String, String), CliError> {
    let (ctx, f) = load(&a.field, &a.poly)?;
    match a.mode {
        DotMode::Oracle => Ok((oracle_dot(&tabulate(&ctx, &f), "f"), String::new())),
        DotMode::Prediction => {
            let form = index_decompose(&ctx, &f)?;
            match analyze_form(&ctx, &form) {
                Ok(x) => Ok((
                    summary_dot(&x.graph().canonical(), "prediction"),
                    String::new(),
                )),
                Err(PredictError::NotNice { .. }) => Ok((
                    oracle_dot(&tabulate(&ctx, &f), "f"),
                    format!(
                        "{}; emitting the oracle graph\n",
                        collision_message(&psi_map(&ctx, &form))
                    ),
                )),
                Err(e) => Err(CliError::Input(e.to_string())),
            }
        }
    }
}

fn instance_line(i: &Instance) -> String {
    let ctx = i.field();
    format!(
        "q={} n={} m={} f = {}",
        i.q,
        i.n,
        i.m,
        i.polynomial(&ctx).display(&ctx)
    )
}

fn cmd_search(a: &SearchArgs) -> Result<String, CliError> {
    let mut p = SearchParams::new(a.q);
    p.n = a.n;
    p.m = a.m;
    p.n_max = a.n_max;
    p.deg_max = a.deg_max;
    p.seed = a.seed;
    p.samples = a.samples;
    if let Some(h) = &a.h {
        let ctx = FieldCtx::prime(a.q)?;
        let hp = Polynomial::parse(&ctx, h)?;
        if hp.coeff(0).is_zero() {
            return Err(CliError::Input("h must not vanish at 0".into()));
        }
        p.h = Some(hp.coeffs().iter().map(|c| c.index()).collect());
    }
    let hits = search_nice(&p);
    Ok(match a.out.format {
        Format::Json => serde_json::to_string_pretty(&hits).expect("serializes"),
        _ => {
            let mut s: String = hits.iter().map(|i| instance_line(i) + "\n").collect();
            s += &format!("{} m-nice instance(s)\n", hits.len());
            s
        }
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct CorpusRecord {
    instance: Instance,
    isomorphic: bool,
}

#[derive(Debug, Serialize, Deserialize)]
struct CorpusOutput {
    bounds: CorpusBounds,
    instances: usize,
    passed: usize,
    records: Vec<CorpusRecord>,
}

fn cmd_corpus(a: &CorpusArgs) -> Result<String, CliError> {
    let bounds = CorpusBounds {
        q_max: a.q_max,
        n_max: a.n_max,
        deg_max: a.deg_max,
        seed: a.seed,
        attempts: a.attempts,
        keep: a.keep,
    };
    let corpus = generate_corpus(&bounds);
    let reports = verify_corpus(&corpus);
    let records: Vec<CorpusRecord> = corpus
        .into_iter()
        .zip(&reports)
        .map(|(instance, r)| CorpusRecord {
            instance,
            isomorphic: r.passed(),
        })
        .collect();
    let passed = records.iter().filter(|r| r.isomorphic).count();
    let out = CorpusOutput {
        bounds,
        instances: records.len(),
        passed,
        records,
    };
    Ok(match a.out.format {
        Format::Json => serde_json::to_string_pretty(&out).expect("serializes"),
        _ => {
            let mut s = String::new();
            for r in out.records.iter().filter(|r| !r.isomorphic) {
                s += &format!("MISMATCH {}\n", instance_line(&r.instance));
            }
            s += &format!(
                "seed {}: {}/{} instances isomorphic\n",
                bounds.seed, out.passed, out.instances
            );
            s
        }
    })
}

fn finish(result: Result<String, CliError>, output: Option<&PathBuf>, stderr: String) -> Outcome {
    match result {
        Ok(mut text) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match output {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome {
                        stdout: String::new(),
                        stderr,
                        code: 0,
                    },
                    Err(e) => Outcome {
                        stdout: String::new(),
                        stderr: format!("cannot write {}: {e}\n", path.display()),
                        code: 1,
                    },
                },
                None => Outcome {
                    stdout: text,
                    stderr,
                    code: 0,
                },
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

/// Runs one command.
pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Predict(a) => finish(cmd_predict(a), a.out.output.as_ref(), String::new()),
        Command::Analyze(a) => finish(cmd_analyze(a), a.out.output.as_ref(), String::new()),
        Command::Verify(a) => finish(cmd_verify(a), a.out.output.as_ref(), String::new()),
        Command::Tree(a) => finish(cmd_tree(a), a.out.output.as_ref(), String::new()),
        Command::ExportDot(a) => match cmd_export_dot(a) {
            Ok((dot, note)) => finish(Ok(dot), a.output.as_ref(), note),
            Err(e) => finish(Err(e), None, String::new()),
        },
        Command::SearchNice(a) => finish(cmd_search(a), a.out.output.as_ref(), String::new()),
        Command::Corpus(a) => finish(cmd_corpus(a), a.out.output.as_ref(), String::new()),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}
