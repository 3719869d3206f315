//! Command-line front end: one subcommand per workflow.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::codebook::{reduce_a_posteriori, run_pipeline, Code, CodebookState, PipelineConfig};
use crate::corpus::{
    check_context_budget, load_corpus, OrderSpec, DEFAULT_CHARS_PER_TOKEN, DEFAULT_CONTEXT_BUDGET,
};
use crate::gateway::{
    CompletionProvider, Gateway, HttpProvider, ModelSettings, ProviderConfig, RecordingProvider,
    ReplayProvider, DEFAULT_CREDENTIAL_ENV, DEFAULT_ENDPOINT, DEFAULT_MAX_OUTPUT_TOKENS,
    DEFAULT_MODEL_ID, DEFAULT_PARSE_RETRIES,
};
use crate::metrics::{Curve, MetricsSummary};
use crate::probability::{probability_curve, simulate_code_space, SimulationConfig};
use crate::reporting::{
    config_digest, load_interview_codes, load_run, read_json, read_matrix_csv, read_series_csv,
    read_unique_csv, render_heatmap, render_line_plot, render_series_plots, write_codes_csv,
    write_json_artifact, write_matrix_csv, write_run_artifacts, write_text_artifact, PlotLabels,
    ProviderMode, RunManifest, RunStore, RunTotals,
};
use crate::similarity::{
    embed_codes, similarity_matrix, validate_uniqueness, EmbeddingProvider, FileEmbeddings,
    HttpEmbeddings, UniquenessReport, DEFAULT_SOFT_THRESHOLD, HARD_THRESHOLD,
};
use crate::Error;

#[derive(Debug, Parser)]
#[command(
    name = "its-meter",
    version,
    about = "Measure inductive thematic saturation of LLM-generated initial codes"
)]
pub struct Cli {
    /// More log output (-v info, -vv debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn log_level(&self) -> &'static str {
        match self.verbose {
            0 => "warn",
            1 => "info",
            _ => "debug",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Code every interview, build the cumulative codebooks and report ITS.
    Run(RunArgs),
    /// Monte Carlo code-space simulation plus the closed-form probability curve.
    Simulate(SimulateArgs),
    /// Embed the unique codes of a run and check that no two are the same.
    Validate(ValidateArgs),
    /// Reduce all codes of a run in one pass and compare with the incremental result.
    ReducePosthoc(PosthocArgs),
    /// Re-render a run's plots from its CSV files.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct ProviderArgs {
    /// Where completions come from.
    #[arg(long, value_enum, default_value = "replay")]
    pub mode: ProviderMode,
    /// Replay fixture directory (required for replay and record).
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    /// Chat model identifier.
    #[arg(long, default_value = DEFAULT_MODEL_ID)]
    pub model: String,
    /// Sampling temperature.
    #[arg(long, default_value_t = 0.0)]
    pub temperature: f64,
    /// Maximum completion tokens per request.
    #[arg(long, default_value_t = DEFAULT_MAX_OUTPUT_TOKENS)]
    pub max_output_tokens: u32,
    /// Chat-completions endpoint for live and record modes.
    #[arg(long, default_value = DEFAULT_ENDPOINT)]
    pub endpoint: String,
    /// Name of the environment variable holding the API key.
    #[arg(long, default_value = DEFAULT_CREDENTIAL_ENV)]
    pub credential_env: String,
    /// HTTP retries on rate limits and server errors.
    #[arg(long, default_value_t = 4)]
    pub max_retries: u32,
    /// Re-requests after an unparseable completion.
    #[arg(long, default_value_t = DEFAULT_PARSE_RETRIES)]
    pub parse_retries: usize,
    /// Count a candidate identical to a codebook entry as a duplicate without asking the model.
    #[arg(long)]
    pub exact_match_fast_path: bool,
}

impl ProviderArgs {
    fn settings(&self) -> ModelSettings {
        ModelSettings {
            model_id: self.model.clone(),
            temperature: self.temperature,
            max_output_tokens: self.max_output_tokens,
        }
    }

    fn provider_config(&self) -> ProviderConfig {
        ProviderConfig {
            endpoint_url: self.endpoint.clone(),
            credential_env_var: self.credential_env.clone(),
            max_retries: self.max_retries,
            ..ProviderConfig::default()
        }
    }

    fn fixtures(&self) -> Result<&Path, Error> {
        self.fixtures.as_deref().ok_or_else(|| {
            Error::Usage(format!(
                "--mode {} needs --fixtures DIR",
                mode_name(self.mode)
            ))
        })
    }

    /// Builds the completion provider, failing fast on a missing fixture
    /// directory or credential.
    fn provider(&self) -> Result<Box<dyn CompletionProvider>, Error> {
        self.settings().validate()?;
        Ok(match self.mode {
            ProviderMode::Replay => Box::new(ReplayProvider::open(self.fixtures()?)?),
            ProviderMode::Live => {
                let config = self.provider_config();
                config.credential()?;
                Box::new(HttpProvider::new(config)?)
            }
            ProviderMode::Record => {
                let dir = self.fixtures()?;
                let config = self.provider_config();
                config.credential()?;
                Box::new(RecordingProvider::new(HttpProvider::new(config)?, dir)?)
            }
        })
    }

    fn gateway(&self) -> Result<Gateway<Box<dyn CompletionProvider>>, Error> {
        Ok(Gateway::new(self.provider()?, self.settings())
            .with_parse_retries(self.parse_retries)
            .with_exact_match_fast_path(self.exact_match_fast_path))
    }
}

fn mode_name(mode: ProviderMode) -> &'static str {
    match mode {
        ProviderMode::Live => "live",
        ProviderMode::Replay => "replay",
        ProviderMode::Record => "record",
    }
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct RunArgs {
    /// Directory of interview transcripts (*.txt).
    #[arg(long)]
    pub corpus: PathBuf,
    /// File listing transcript file names in processing order.
    #[arg(long)]
    pub order_manifest: Option<PathBuf>,
    /// Dataset name used in plots and the manifest (default: corpus directory name).
    #[arg(long)]
    pub name: Option<String>,
    /// Codes requested per interview.
    #[arg(long = "codes", default_value_t = 15)]
    pub n_codes: usize,
    #[command(flatten)]
    pub provider: ProviderArgs,
    /// Parent directory for run directories.
    #[arg(long, default_value = "runs")]
    pub out: PathBuf,
    /// Run directory name (default: <name>-<UTC timestamp>).
    #[arg(long)]
    pub run_id: Option<String>,
    /// Recorded in the manifest; coding itself is not random.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Continue an interrupted run with the same --run-id.
    #[arg(long, requires = "run_id")]
    pub resume: bool,
    /// Judge an interview's codes one at a time instead of in parallel.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SimulateArgs {
    /// Size of the code space.
    #[arg(long)]
    pub space: u64,
    /// Interviews (draw rounds) per replication.
    #[arg(long)]
    pub iterations: u32,
    /// Codes drawn per interview.
    #[arg(long, default_value_t = 15)]
    pub draw: u64,
    #[arg(long, default_value_t = 1000)]
    pub replications: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Draw codes independently instead of distinct codes per interview.
    #[arg(long)]
    pub with_replacement: bool,
    /// Unique codes seen so far, for the probability curve.
    #[arg(long, default_value_t = 66)]
    pub unique: u64,
    /// Largest code space on the probability curve.
    #[arg(long, default_value_t = 500)]
    pub space_max: u64,
    #[arg(long, default_value = "runs")]
    pub out: PathBuf,
    /// Output directory name (default: simulate-<space>-<iterations>-<draw>-<seed>).
    #[arg(long)]
    pub run_id: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    /// Run directory containing cumulative_unique.csv.
    #[arg(long)]
    pub run: PathBuf,
    /// Precomputed embeddings (JSON object or CSV rows keyed by code id).
    #[arg(long)]
    pub vectors: Option<PathBuf>,
    /// Embedding model used when no --vectors file is given.
    #[arg(long, default_value = "text-embedding-3-small")]
    pub embedding_model: String,
    #[arg(long, default_value = "https://api.openai.com/v1/embeddings")]
    pub embedding_endpoint: String,
    #[arg(long, default_value = DEFAULT_CREDENTIAL_ENV)]
    pub credential_env: String,
    /// Pairs at or above this similarity fail the check.
    #[arg(long, default_value_t = HARD_THRESHOLD)]
    pub threshold: f64,
    /// Pairs at or above this similarity are reported as warnings.
    #[arg(long, default_value_t = DEFAULT_SOFT_THRESHOLD)]
    pub soft_threshold: f64,
}

#[derive(Debug, Clone, Args)]
pub struct PosthocArgs {
    /// Run directory containing codes/interview_<n>.csv.
    #[arg(long)]
    pub run: PathBuf,
    #[command(flatten)]
    pub provider: ProviderArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    /// Run directory to re-render.
    #[arg(long)]
    pub run: PathBuf,
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Error> {
    match cli.command {
        Command::Run(args) => cmd_run(&args, out),
        Command::Simulate(args) => cmd_simulate(&args, out),
        Command::Validate(args) => cmd_validate(&args, out),
        Command::ReducePosthoc(args) => cmd_reduce_posthoc(&args, out),
        Command::Report(args) => cmd_report(&args, out),
    }
}

fn emit(out: &mut dyn Write, line: &str) -> Result<(), Error> {
    writeln!(out, "{line}").map_err(|source| Error::Io {
        context: "stdout".into(),
        source,
    })
}

fn now_rfc3339() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
}

fn dir_name(path: &Path) -> String {
    path.file_name()
        .and_then(|n| n.to_str())
        .unwrap_or("corpus")
        .to_string()
}

pub fn cmd_run(args: &RunArgs, out: &mut dyn Write) -> Result<(), Error> {
    if args.provider.temperature != 0.0 {
        return Err(Error::Usage(format!(
            "coding runs use temperature 0, got {}",
            args.provider.temperature
        )));
    }
    if args.n_codes == 0 {
        return Err(Error::Usage("--codes must be at least 1".into()));
    }
    let started_at = now_rfc3339();
    let order = match &args.order_manifest {
        Some(path) => OrderSpec::Manifest(path.clone()),
        None => OrderSpec::Lexicographic,
    };
    let corpus = load_corpus(&args.corpus, &order)?;
    check_context_budget(&corpus, DEFAULT_CHARS_PER_TOKEN, DEFAULT_CONTEXT_BUDGET);
    let name = args.name.clone().unwrap_or_else(|| dir_name(&args.corpus));
    let run_id = args
        .run_id
        .clone()
        .unwrap_or_else(|| format!("{name}-{}", chrono::Utc::now().format("%Y%m%dT%H%M%SZ")));

    let gateway = args.provider.gateway()?;
    let (store, resume) = if args.resume {
        RunStore::resume(&args.out, &run_id)?
    } else {
        (RunStore::create(&args.out, &run_id)?, None)
    };
    if let Some(state) = &resume {
        log::info!(
            "resuming {run_id} after {} interviews",
            state.interviews_done()
        );
    }
    let config = PipelineConfig {
        n_codes: args.n_codes,
        parallel_judgments: !args.sequential,
    };
    let (state, series) = run_pipeline(&corpus, &gateway, &gateway, &config, &store, resume)
        .inspect_err(|_| {
            eprintln!("run {run_id} stopped; rerun with --run-id {run_id} --resume to continue");
        })?;

    let metrics = MetricsSummary::from_series(&name, &series)?;
    let config_json = serde_json::to_value(args).expect("run arguments serialize");
    let manifest = RunManifest {
        run_id: run_id.clone(),
        corpus_name: name,
        model_id: args.provider.model.clone(),
        temperature: args.provider.temperature,
        n_codes_requested: args.n_codes,
        provider_mode: args.provider.mode,
        interview_order: corpus.ids(),
        totals: RunTotals {
            total_codes: metrics.total_codes,
            unique_codes: metrics.unique_codes,
            its_ratio: metrics.its_slope_ratio,
        },
        started_at,
        finished_at: now_rfc3339(),
        config_digest: config_digest(&config_json),
        config: config_json,
    };
    write_run_artifacts(&state, &series, &metrics, &manifest, store.run_dir())?;
    emit(
        out,
        &format!(
            "total={} unique={} ITS={}",
            metrics.total_codes, metrics.unique_codes, metrics.its_display
        ),
    )?;
    emit(out, &format!("artifacts={}", store.run_dir().display()))
}

#[derive(Debug, Clone, Serialize)]
struct SimulationRow {
    iteration: u32,
    mean_total: f64,
    mean_unique: f64,
    stddev_unique: f64,
    std_error: f64,
    expected_unique: f64,
}

pub fn cmd_simulate(args: &SimulateArgs, out: &mut dyn Write) -> Result<(), Error> {
    let config = SimulationConfig {
        with_replacement: args.with_replacement,
        ..SimulationConfig::new(
            args.space,
            args.iterations,
            args.draw,
            args.replications,
            args.seed,
        )
    };
    config.validate()?;
    let draw = u32::try_from(args.draw)
        .map_err(|_| Error::Usage(format!("--draw {} is too large", args.draw)))?;
    let curve = probability_curve(
        args.unique,
        draw,
        args.unique..=args.space_max.max(args.unique),
    )?;
    let run_id = args.run_id.clone().unwrap_or_else(|| {
        format!(
            "simulate-{}-{}-{}-{}",
            args.space, args.iterations, args.draw, args.seed
        )
    });
    let dir = args.out.join(&run_id);
    if dir.exists() {
        return Err(crate::reporting::ReportError::OutputExists(run_id).into());
    }

    let result = simulate_code_space(&config)?;
    let rows = result
        .per_iteration
        .iter()
        .map(|s| {
            Ok(SimulationRow {
                iteration: s.iteration,
                mean_total: s.mean_total,
                mean_unique: s.mean_unique,
                stddev_unique: s.stddev_unique,
                std_error: s.std_error(config.replications),
                expected_unique: config.expected_unique_after(s.iteration)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;

    write_csv(&dir.join("simulation.csv"), &rows)?;
    write_csv(
        &dir.join("probability.csv"),
        &curve
            .iter()
            .map(|&(space, p)| ProbabilityRow {
                space,
                p_at_least_one_unique: p,
            })
            .collect::<Vec<_>>(),
    )?;
    write_json_artifact(&dir.join("simulation.json"), &result)?;

    let total = Curve {
        name: "total".into(),
        points: rows
            .iter()
            .map(|r| (r.iteration as usize, r.mean_total))
            .collect(),
    };
    let unique = Curve {
        name: "unique".into(),
        points: rows
            .iter()
            .map(|r| (r.iteration as usize, r.mean_unique))
            .collect(),
    };
    let svg = render_line_plot(
        &[&total, &unique],
        &PlotLabels::new(
            &format!(
                "Code space {} with {} codes per interview",
                args.space, args.draw
            ),
            "interview",
            "codes",
        ),
    )?;
    write_text_artifact(&dir.join("plots/simulation.svg"), &svg)?;
    let p_curve = Curve {
        name: "P(new code)".into(),
        points: curve.iter().map(|&(s, p)| (s as usize, p)).collect(),
    };
    let svg = render_line_plot(
        &[&p_curve],
        &PlotLabels::new(
            &format!(
                "Probability of at least one new code among {} ({} seen)",
                args.draw, args.unique
            ),
            "code space size",
            "probability",
        ),
    )?;
    write_text_artifact(&dir.join("plots/probability.svg"), &svg)?;

    let last = rows.last().expect("iterations >= 1");
    emit(
        out,
        &format!(
            "iterations={} mean_total={:.2} mean_unique={:.2} expected_unique={:.2}",
            last.iteration, last.mean_total, last.mean_unique, last.expected_unique
        ),
    )?;
    emit(out, &format!("artifacts={}", dir.display()))
}

#[derive(Debug, Clone, Serialize)]
struct ProbabilityRow {
    space: u64,
    p_at_least_one_unique: f64,
}

fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<(), Error> {
    let io = |source: std::io::Error| Error::Io {
        context: path.display().to_string(),
        source,
    };
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(io)?;
    }
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Always)
        .from_path(path)
        .map_err(|e| io(e.into()))?;
    for row in rows {
        w.serialize(row).map_err(|e| io(e.into()))?;
    }
    w.flush().map_err(io)
}

#[derive(Debug, Clone, Serialize)]
struct ValidationOutput<'a> {
    codes: usize,
    max_off_diagonal: Option<f64>,
    hard: &'a UniquenessReport,
    soft: &'a UniquenessReport,
    /// Hard-threshold pairs whose codes come from the same interview.
    same_interview_pairs: usize,
}

fn interview_of(code_id: &str) -> &str {
    code_id
        .rsplit_once('#')
        .map_or(code_id, |(interview, _)| interview)
}

pub fn cmd_validate(args: &ValidateArgs, out: &mut dyn Write) -> Result<(), Error> {
    if !(args.soft_threshold > 0.0 && args.soft_threshold <= args.threshold) {
        return Err(Error::Usage(format!(
            "--soft-threshold {} must lie in (0, --threshold]",
            args.soft_threshold
        )));
    }
    let unique = read_unique_csv(&args.run.join("cumulative_unique.csv"))?;
    let items: Vec<(String, String)> = unique
        .iter()
        .map(|(code, _)| (code.code_id(), code.codebook_text()))
        .collect();
    let provider: Box<dyn EmbeddingProvider> = match &args.vectors {
        Some(path) => Box::new(FileEmbeddings::open(path)?),
        None => {
            let config = ProviderConfig {
                endpoint_url: args.embedding_endpoint.clone(),
                credential_env_var: args.credential_env.clone(),
                timeout: Duration::from_secs(120),
                ..ProviderConfig::default()
            };
            config.credential()?;
            Box::new(HttpEmbeddings::new(config, args.embedding_model.clone())?)
        }
    };
    let vectors = embed_codes(&items, provider.as_ref())?;
    let matrix = similarity_matrix(&vectors)?;
    let hard = validate_uniqueness(&matrix, args.threshold)?;
    let soft = validate_uniqueness(&matrix, args.soft_threshold)?;

    let dir = args.run.join("similarity");
    write_matrix_csv(&dir.join("matrix.csv"), &matrix)?;
    let title = format!("Cosine similarity of {} unique codes", matrix.n());
    write_text_artifact(&dir.join("heatmap.svg"), &render_heatmap(&matrix, &title))?;

    for pair in &soft.flagged_pairs {
        if pair.similarity < args.threshold - crate::similarity::SIMILARITY_TOLERANCE {
            log::warn!(
                "{} and {} are close (cosine {:.4})",
                pair.code_id_a,
                pair.code_id_b,
                pair.similarity
            );
        }
    }
    let same_interview_pairs = hard
        .flagged_pairs
        .iter()
        .filter(|p| interview_of(&p.code_id_a) == interview_of(&p.code_id_b))
        .count();
    if same_interview_pairs > 0 {
        log::warn!(
            "{same_interview_pairs} flagged pairs come from a single interview; \
             codes within one interview are never judged against each other"
        );
    }
    write_json_artifact(
        &dir.join("report.json"),
        &ValidationOutput {
            codes: matrix.n(),
            max_off_diagonal: matrix.max_off_diagonal(),
            hard: &hard,
            soft: &soft,
            same_interview_pairs,
        },
    )?;

    emit(
        out,
        &format!(
            "codes={} max_off_diagonal={:.6} flagged={} soft_flagged={} passed={}",
            matrix.n(),
            matrix.max_off_diagonal().unwrap_or(0.0),
            hard.flagged_pairs.len(),
            soft.flagged_pairs.len(),
            hard.passed
        ),
    )?;
    if hard.passed {
        Ok(())
    } else {
        let names: Vec<String> = hard
            .flagged_pairs
            .iter()
            .map(|p| format!("{} ~ {} ({:.6})", p.code_id_a, p.code_id_b, p.similarity))
            .collect();
        Err(Error::ValidationFailed(names.join("; ")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PosthocComparison {
    pub total_codes: usize,
    pub incremental_unique: usize,
    pub a_posteriori_unique: usize,
    /// a_posteriori_unique - incremental_unique
    pub delta: i64,
    /// Accepted by one mode only, by code id.
    pub only_incremental: Vec<String>,
    pub only_a_posteriori: Vec<String>,
}

pub fn cmd_reduce_posthoc(args: &PosthocArgs, out: &mut dyn Write) -> Result<(), Error> {
    let per_interview = load_interview_codes(&args.run)?;
    let all: Vec<Code> = per_interview.into_iter().flatten().collect();
    let incremental: Vec<Code> = read_unique_csv(&args.run.join("cumulative_unique.csv"))?
        .into_iter()
        .map(|(c, _)| c)
        .collect();

    let gateway = args.provider.gateway()?;
    let posthoc = reduce_a_posteriori(&all, &gateway)?;

    let ids = |codes: &[Code]| codes.iter().map(Code::code_id).collect::<BTreeSet<_>>();
    let (inc_ids, post_ids) = (ids(&incremental), ids(&posthoc));
    let comparison = PosthocComparison {
        total_codes: all.len(),
        incremental_unique: incremental.len(),
        a_posteriori_unique: posthoc.len(),
        delta: posthoc.len() as i64 - incremental.len() as i64,
        only_incremental: inc_ids.difference(&post_ids).cloned().collect(),
        only_a_posteriori: post_ids.difference(&inc_ids).cloned().collect(),
    };
    let dir = args.run.join("posthoc");
    write_codes_csv(&dir.join("unique.csv"), &posthoc)?;
    write_json_artifact(&dir.join("comparison.json"), &comparison)?;
    emit(
        out,
        &format!(
            "incremental={} a_posteriori={} delta={}",
            comparison.incremental_unique, comparison.a_posteriori_unique, comparison.delta
        ),
    )
}

pub fn cmd_report(args: &ReportArgs, out: &mut dyn Write) -> Result<(), Error> {
    let series = read_series_csv(&args.run.join("series.csv"))?;
    let manifest_path = args.run.join("manifest.json");
    let dataset = if manifest_path.exists() {
        read_json::<RunManifest>(&manifest_path)?.corpus_name
    } else {
        dir_name(&args.run)
    };
    let mut written = BTreeMap::new();
    for (file, body) in render_series_plots(&series, &dataset)? {
        let path = args.run.join("plots").join(file);
        write_text_artifact(&path, &body)?;
        written.insert(file.to_string(), path);
    }
    let matrix_path = args.run.join("similarity/matrix.csv");
    if matrix_path.exists() {
        let matrix = read_matrix_csv(&matrix_path)?;
        let title = format!("Cosine similarity of {} unique codes", matrix.n());
        let path = args.run.join("similarity/heatmap.svg");
        write_text_artifact(&path, &render_heatmap(&matrix, &title))?;
        written.insert("heatmap.svg".into(), path);
    }
    // Cross-check the CSVs against each other before declaring success.
    let loaded = load_run(&args.run)?;
    if loaded.state.series() != series {
        return Err(Error::Usage(format!(
            "{}: series.csv disagrees with the code CSVs",
            args.run.display()
        )));
    }
    for path in written.values() {
        emit(out, &path.display().to_string())?;
    }
    Ok(())
}

/// Codebook state and series of a finished run, from its CSVs.
pub fn reload_run(
    run_dir: &Path,
) -> Result<(CodebookState, crate::metrics::SaturationSeries), Error> {
    let loaded = load_run(run_dir)?;
    Ok((loaded.state, loaded.series))
}
