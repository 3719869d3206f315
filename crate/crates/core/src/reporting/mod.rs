//! Run artifacts: CSV tables, metrics JSON, SVG plots and the run manifest.
//!
//! Layout of one run directory:
//!
//! ```text
//! <out>/<run_id>/
//!   codes/interview_<n>.csv
//!   cumulative_total.csv
//!   cumulative_unique.csv
//!   series.csv
//!   curves/{total,unique,ratio}.csv
//!   metrics.json
//!   plots/*.svg
//!   similarity/matrix.csv        (written by `validate`)
//!   run_state.json, state/snapshot.json
//!   manifest.json
//! ```
//!
//! CSVs are UTF-8, comma separated, every field quoted, with a header row.

mod store;
mod svg;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::codebook::{Code, CodebookState, InterviewTally};
use crate::metrics::{
    curve_export, Curve, MetricsError, MetricsSummary, SaturationSeries, SeriesPoint,
};
use crate::similarity::SimilarityMatrix;

pub use store::{RunState, RunStore};
pub use svg::{heat_color, render_heatmap, render_line_plot, PlotLabels};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("run {0} already has artifacts; choose a new run id")]
    OutputExists(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error("nothing to plot")]
    EmptyCurve,
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

impl ReportError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    fn format(path: &Path, message: impl ToString) -> Self {
        Self::Format {
            path: path.to_path_buf(),
            message: message.to_string(),
        }
    }
}

impl From<ReportError> for std::io::Error {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Io { source, .. } => source,
            other => std::io::Error::other(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ProviderMode {
    Live,
    Replay,
    Record,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTotals {
    pub total_codes: usize,
    pub unique_codes: usize,
    pub its_ratio: f64,
}

/// Everything needed to repeat a run, minus credentials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub run_id: String,
    pub corpus_name: String,
    pub model_id: String,
    pub temperature: f64,
    pub n_codes_requested: usize,
    pub provider_mode: ProviderMode,
    pub interview_order: Vec<String>,
    pub totals: RunTotals,
    pub started_at: String,
    pub finished_at: String,
    pub config_digest: String,
    pub config: serde_json::Value,
}

/// SHA-256 over the canonical JSON of a run configuration.
pub fn config_digest(config: &serde_json::Value) -> String {
    hex::encode(Sha256::digest(config.to_string().as_bytes()))
}

/// Paths written by [`write_run_artifacts`], keyed by artifact name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtifactIndex {
    pub run_dir: PathBuf,
    pub files: BTreeMap<String, PathBuf>,
}

impl ArtifactIndex {
    pub fn get(&self, name: &str) -> Option<&Path> {
        self.files.get(name).map(PathBuf::as_path)
    }
}

fn writer(path: &Path) -> Result<csv::Writer<fs::File>, ReportError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| ReportError::io(parent, e))?;
    }
    let file = fs::File::create(path).map_err(|e| ReportError::io(path, e))?;
    Ok(csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Always)
        .from_writer(file))
}

fn reader(path: &Path) -> Result<csv::Reader<fs::File>, ReportError> {
    let file = fs::File::open(path).map_err(|e| ReportError::io(path, e))?;
    Ok(csv::ReaderBuilder::new().from_reader(file))
}

fn write_rows<I, R>(path: &Path, header: &[&str], rows: I) -> Result<(), ReportError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = writer(path)?;
    let csv_err = |e: csv::Error| ReportError::format(path, e);
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(row).map_err(csv_err)?;
    }
    w.flush().map_err(|e| ReportError::io(path, e))
}

fn write_text(path: &Path, body: &str) -> Result<(), ReportError> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| ReportError::io(parent, e))?;
    }
    fs::write(path, body).map_err(|e| ReportError::io(path, e))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), ReportError> {
    let mut body = serde_json::to_string_pretty(value).map_err(|e| ReportError::format(path, e))?;
    body.push('\n');
    write_text(path, &body)
}

pub(crate) fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, ReportError> {
    let body = fs::read_to_string(path).map_err(|e| ReportError::io(path, e))?;
    serde_json::from_str(&body).map_err(|e| ReportError::format(path, e))
}

const CODE_HEADER: [&str; 5] = ["interview_id", "index", "name", "description", "quote"];

fn code_row(code: &Code) -> Vec<String> {
    vec![
        code.interview_id.clone(),
        code.index_in_interview.to_string(),
        code.name.clone(),
        code.description.clone(),
        code.quote.clone(),
    ]
}

pub fn write_codes_csv(path: &Path, codes: &[Code]) -> Result<(), ReportError> {
    write_rows(path, &CODE_HEADER, codes.iter().map(code_row))
}

/// Reads `interview_id,index,name,description,quote` rows; extra trailing
/// columns are ignored.
pub fn read_codes_csv(path: &Path) -> Result<Vec<Code>, ReportError> {
    let mut r = reader(path)?;
    r.records()
        .map(|record| {
            let record = record.map_err(|e| ReportError::format(path, e))?;
            let field = |i: usize| record.get(i).unwrap_or_default().to_string();
            let index = field(1)
                .parse()
                .map_err(|e| ReportError::format(path, format!("bad index: {e}")))?;
            Ok(Code {
                interview_id: field(0),
                index_in_interview: index,
                name: field(2),
                description: field(3),
                quote: field(4),
            })
        })
        .collect()
}

pub fn write_unique_csv(path: &Path, state: &CodebookState) -> Result<(), ReportError> {
    let mut header = CODE_HEADER.to_vec();
    header.push("accepted_at_interview");
    write_rows(
        path,
        &header,
        state.cumulative_unique.iter().map(|c| {
            let mut row = code_row(c);
            row.push(state.accepted_at(c).unwrap_or_default().to_string());
            row
        }),
    )
}

/// Unique codes with the interview ordinal each was accepted at.
pub fn read_unique_csv(path: &Path) -> Result<Vec<(Code, usize)>, ReportError> {
    let codes = read_codes_csv(path)?;
    let mut r = reader(path)?;
    let accepted: Vec<usize> =
        r.records()
            .map(|record| {
                let record = record.map_err(|e| ReportError::format(path, e))?;
                record.get(5).unwrap_or_default().parse().map_err(|e| {
                    ReportError::format(path, format!("bad accepted_at_interview: {e}"))
                })
            })
            .collect::<Result<_, _>>()?;
    Ok(codes.into_iter().zip(accepted).collect())
}

pub fn write_series_csv(path: &Path, series: &SaturationSeries) -> Result<(), ReportError> {
    write_rows(
        path,
        &["ordinal", "total_after", "unique_after"],
        series.points.iter().map(|p| {
            [
                p.ordinal.to_string(),
                p.total_after.to_string(),
                p.unique_after.to_string(),
            ]
        }),
    )
}

pub fn read_series_csv(path: &Path) -> Result<SaturationSeries, ReportError> {
    let mut r = reader(path)?;
    let points = r
        .records()
        .map(|record| {
            let record = record.map_err(|e| ReportError::format(path, e))?;
            let num = |i: usize| -> Result<usize, ReportError> {
                record
                    .get(i)
                    .unwrap_or_default()
                    .parse()
                    .map_err(|e| ReportError::format(path, format!("column {i}: {e}")))
            };
            Ok(SeriesPoint {
                ordinal: num(0)?,
                total_after: num(1)?,
                unique_after: num(2)?,
            })
        })
        .collect::<Result<_, ReportError>>()?;
    Ok(SaturationSeries { points })
}

pub fn write_curve_csv(path: &Path, curve: &Curve) -> Result<(), ReportError> {
    write_rows(
        path,
        &["ordinal", "value"],
        curve
            .points
            .iter()
            .map(|(o, v)| [o.to_string(), format!("{v}")]),
    )
}

pub fn write_matrix_csv(path: &Path, matrix: &SimilarityMatrix) -> Result<(), ReportError> {
    let mut header = vec!["code_id"];
    header.extend(matrix.code_ids().iter().map(String::as_str));
    write_rows(
        path,
        &header,
        (0..matrix.n()).map(|i| {
            std::iter::once(matrix.code_ids()[i].clone())
                .chain(matrix.row(i).iter().map(|v| format!("{v}")))
                .collect::<Vec<_>>()
        }),
    )
}

pub fn read_matrix_csv(path: &Path) -> Result<SimilarityMatrix, ReportError> {
    let mut r = reader(path)?;
    let header = r
        .headers()
        .map_err(|e| ReportError::format(path, e))?
        .clone();
    let ids: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut entries = Vec::with_capacity(ids.len() * ids.len());
    for record in r.records() {
        let record = record.map_err(|e| ReportError::format(path, e))?;
        for field in record.iter().skip(1) {
            entries.push(
                field
                    .parse::<f64>()
                    .map_err(|e| ReportError::format(path, e))?,
            );
        }
    }
    SimilarityMatrix::from_entries(ids, entries).map_err(|e| ReportError::format(path, e))
}

pub fn interview_codes_path(run_dir: &Path, ordinal: usize) -> PathBuf {
    run_dir
        .join("codes")
        .join(format!("interview_{ordinal}.csv"))
}

/// Renders the comparison and ratio plots for a series.
pub fn render_series_plots(
    series: &SaturationSeries,
    dataset: &str,
) -> Result<Vec<(&'static str, String)>, ReportError> {
    let tables = curve_export(series)?;
    let comparison = render_line_plot(
        &[&tables.total, &tables.unique],
        &PlotLabels::new(
            &format!("Total and unique codes: {dataset}"),
            "interview",
            "cumulative codes",
        ),
    )?;
    let total = render_line_plot(
        &[&tables.total],
        &PlotLabels::new(
            &format!("Cumulative total codes: {dataset}"),
            "interview",
            "codes",
        ),
    )?;
    let unique = render_line_plot(
        &[&tables.unique],
        &PlotLabels::new(
            &format!("Cumulative unique codes: {dataset}"),
            "interview",
            "codes",
        ),
    )?;
    let ratio = render_line_plot(
        &[&tables.ratio],
        &PlotLabels::new(
            &format!("Unique / total ratio: {dataset}"),
            "interview",
            "unique / total",
        ),
    )?;
    Ok(vec![
        ("total_unique.svg", comparison),
        ("total.svg", total),
        ("unique.svg", unique),
        ("ratio.svg", ratio),
    ])
}

/// Writes every artifact of a finished run into `run_dir`.
///
/// Fails with [`ReportError::OutputExists`] if `run_dir` already holds a
/// manifest. Interview code files and resume state written during the run
/// may already be present.
pub fn write_run_artifacts(
    state: &CodebookState,
    series: &SaturationSeries,
    metrics: &MetricsSummary,
    manifest: &RunManifest,
    run_dir: &Path,
) -> Result<ArtifactIndex, ReportError> {
    let manifest_path = run_dir.join("manifest.json");
    if manifest_path.exists() {
        return Err(ReportError::OutputExists(manifest.run_id.clone()));
    }
    series.validate()?;
    let mut index = ArtifactIndex {
        run_dir: run_dir.to_path_buf(),
        files: BTreeMap::new(),
    };
    let mut record = |name: String, path: PathBuf| {
        index.files.insert(name, path);
    };

    for (n, tally) in state.per_interview.iter().enumerate() {
        let ordinal = n + 1;
        let codes: Vec<Code> = state
            .cumulative_total
            .iter()
            .filter(|c| c.interview_id == tally.interview_id)
            .cloned()
            .collect();
        let path = interview_codes_path(run_dir, ordinal);
        write_codes_csv(&path, &codes)?;
        record(format!("codes/interview_{ordinal}.csv"), path);
    }

    let path = run_dir.join("cumulative_total.csv");
    write_codes_csv(&path, &state.cumulative_total)?;
    record("cumulative_total.csv".into(), path);

    let path = run_dir.join("cumulative_unique.csv");
    write_unique_csv(&path, state)?;
    record("cumulative_unique.csv".into(), path);

    let path = run_dir.join("series.csv");
    write_series_csv(&path, series)?;
    record("series.csv".into(), path);

    let tables = curve_export(series)?;
    for curve in [&tables.total, &tables.unique, &tables.ratio] {
        let name = format!("curves/{}.csv", curve.name);
        let path = run_dir.join(&name);
        write_curve_csv(&path, curve)?;
        record(name, path);
    }

    let path = run_dir.join("metrics.json");
    write_json(&path, metrics)?;
    record("metrics.json".into(), path);

    for (file, body) in render_series_plots(series, &metrics.dataset)? {
        let name = format!("plots/{file}");
        let path = run_dir.join(&name);
        write_text(&path, &body)?;
        record(name, path);
    }

    write_json(&manifest_path, manifest)?;
    record("manifest.json".into(), manifest_path);
    Ok(index)
}

/// A run reloaded from its CSV artifacts.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadedRun {
    pub state: CodebookState,
    pub series: SaturationSeries,
}

/// Rebuilds codebook state and series from a run directory's CSVs.
pub fn load_run(run_dir: &Path) -> Result<LoadedRun, ReportError> {
    let series = read_series_csv(&run_dir.join("series.csv"))?;
    let unique = read_unique_csv(&run_dir.join("cumulative_unique.csv"))?;
    let per_interview_codes = load_interview_codes(run_dir)?;

    let mut state = CodebookState::default();
    for (ordinal, codes) in per_interview_codes.iter().enumerate() {
        let interview_id = codes
            .first()
            .map(|c| c.interview_id.clone())
            .unwrap_or_default();
        let accepted = unique.iter().filter(|(_, at)| *at == ordinal + 1).count();
        state.per_interview.push(InterviewTally {
            interview_id,
            generated: codes.len(),
            accepted,
        });
        state.cumulative_total.extend(codes.iter().cloned());
    }
    state.cumulative_unique = unique.into_iter().map(|(c, _)| c).collect();
    Ok(LoadedRun { state, series })
}

/// Every `codes/interview_<n>.csv`, ordered by `n` (which must run 1..=N).
pub fn load_interview_codes(run_dir: &Path) -> Result<Vec<Vec<Code>>, ReportError> {
    let dir = run_dir.join("codes");
    let entries = fs::read_dir(&dir).map_err(|e| ReportError::io(&dir, e))?;
    let mut numbered = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| ReportError::io(&dir, e))?.path();
        let ordinal = path
            .file_stem()
            .and_then(|s| s.to_str())
            .and_then(|s| s.strip_prefix("interview_"))
            .and_then(|n| n.parse::<usize>().ok());
        if let Some(ordinal) = ordinal {
            numbered.push((ordinal, path));
        }
    }
    numbered.sort();
    if numbered.is_empty() {
        return Err(ReportError::format(&dir, "no interview code files"));
    }
    numbered
        .into_iter()
        .enumerate()
        .map(|(i, (ordinal, path))| {
            if ordinal != i + 1 {
                return Err(ReportError::format(
                    &path,
                    format!("expected interview_{}.csv", i + 1),
                ));
            }
            read_codes_csv(&path)
        })
        .collect()
}

/// Writes a JSON value under `run_dir`, creating parents.
pub fn write_json_artifact<T: Serialize>(path: &Path, value: &T) -> Result<(), ReportError> {
    write_json(path, value)
}

/// Writes a text artifact, creating parents.
pub fn write_text_artifact(path: &Path, body: &str) -> Result<(), ReportError> {
    write_text(path, body)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(interview: &str, index: usize, name: &str) -> Code {
        Code {
            name: name.into(),
            description: format!("says \"{name}\", often"),
            quote: "line one\nline two".into(),
            interview_id: interview.into(),
            index_in_interview: index,
        }
    }

    #[test]
    fn codes_round_trip_with_quoting() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let codes = vec![code("i1", 0, "a, b"), code("i1", 1, "c")];
        write_codes_csv(&path, &codes).unwrap();
        let body = fs::read_to_string(&path).unwrap();
        assert!(body.starts_with("\"interview_id\",\"index\",\"name\""));
        assert_eq!(read_codes_csv(&path).unwrap(), codes);
    }

    #[test]
    fn matrix_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.csv");
        let m = SimilarityMatrix::from_entries(
            vec!["a#0".into(), "b#1".into()],
            vec![1.0, 0.123456789, 0.123456789, 1.0],
        )
        .unwrap();
        write_matrix_csv(&path, &m).unwrap();
        assert_eq!(read_matrix_csv(&path).unwrap(), m);
    }
}
