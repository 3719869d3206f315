//! Post-hoc check that the unique codebook holds no duplicates: embed every
//! unique code, build the cosine-similarity matrix, and flag off-diagonal
//! pairs at or above a threshold.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use reqwest::blocking::Client;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::gateway::{post_json_with_retry, GatewayError, ProviderConfig};

/// Off-diagonal cosine at or above this counts as an exact duplicate.
pub const HARD_THRESHOLD: f64 = 1.0;
/// Default near-duplicate warning level.
pub const DEFAULT_SOFT_THRESHOLD: f64 = 0.95;
/// Slack applied to every threshold comparison.
pub const SIMILARITY_TOLERANCE: f64 = 1e-6;

const SYMMETRY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum SimilarityError {
    #[error("nothing to embed")]
    EmptyInput,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vector for {0} has zero norm")]
    ZeroNorm(String),
    #[error("no vector for code {0}")]
    MissingVector(String),
    #[error("embedding provider error: {0}")]
    ProviderError(String),
    #[error("invalid similarity matrix: {0}")]
    InvalidMatrix(String),
    #[error("pair ({i}, {j}): {source}")]
    Pair {
        i: usize,
        j: usize,
        #[source]
        source: Box<SimilarityError>,
    },
    #[error("threshold {0} outside (0, 1]")]
    InvalidThreshold(f64),
}

impl From<GatewayError> for SimilarityError {
    fn from(e: GatewayError) -> Self {
        Self::ProviderError(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingVector {
    pub code_id: String,
    pub values: Vec<f64>,
}

impl EmbeddingVector {
    pub fn new(code_id: impl Into<String>, values: Vec<f64>) -> Self {
        Self {
            code_id: code_id.into(),
            values,
        }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Cosine similarity, clamped to [-1, 1].
pub fn cosine(a: &EmbeddingVector, b: &EmbeddingVector) -> Result<f64, SimilarityError> {
    if a.dim() != b.dim() {
        return Err(SimilarityError::DimensionMismatch(format!(
            "{} has {} values, {} has {}",
            a.code_id,
            a.dim(),
            b.code_id,
            b.dim()
        )));
    }
    let (na, nb) = (a.norm(), b.norm());
    if na == 0.0 || !na.is_finite() {
        return Err(SimilarityError::ZeroNorm(a.code_id.clone()));
    }
    if nb == 0.0 || !nb.is_finite() {
        return Err(SimilarityError::ZeroNorm(b.code_id.clone()));
    }
    let dot: f64 = a.values.iter().zip(&b.values).map(|(x, y)| x * y).sum();
    Ok((dot / (na * nb)).clamp(-1.0, 1.0))
}

/// Row-major `n x n` cosine matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityMatrix {
    code_ids: Vec<String>,
    entries: Vec<f64>,
}

impl SimilarityMatrix {
    /// Checks shape, range, symmetry (1e-9) and unit diagonal (1e-6).
    pub fn from_entries(code_ids: Vec<String>, entries: Vec<f64>) -> Result<Self, SimilarityError> {
        let n = code_ids.len();
        let invalid = |m: String| Err(SimilarityError::InvalidMatrix(m));
        if entries.len() != n * n {
            return invalid(format!("{} entries for {n} codes", entries.len()));
        }
        for i in 0..n {
            let d = entries[i * n + i];
            if (d - 1.0).abs() > SIMILARITY_TOLERANCE {
                return invalid(format!("diagonal entry {i} ({}) is {d}", code_ids[i]));
            }
            for j in 0..n {
                let v = entries[i * n + j];
                if !(-1.0 - SYMMETRY_TOLERANCE..=1.0 + SYMMETRY_TOLERANCE).contains(&v) {
                    return invalid(format!("entry ({i}, {j}) = {v} outside [-1, 1]"));
                }
                if (v - entries[j * n + i]).abs() > SYMMETRY_TOLERANCE {
                    return invalid(format!("entries ({i}, {j}) and ({j}, {i}) differ"));
                }
            }
        }
        Ok(Self { code_ids, entries })
    }

    pub fn n(&self) -> usize {
        self.code_ids.len()
    }

    pub fn code_ids(&self) -> &[String] {
        &self.code_ids
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n() + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.n();
        &self.entries[i * n..(i + 1) * n]
    }

    /// Largest off-diagonal entry, if any.
    pub fn max_off_diagonal(&self) -> Option<f64> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .reduce(f64::max)
    }
}

/// Pairwise cosine matrix over `vectors` (at least two, uniform dimension).
pub fn similarity_matrix(vectors: &[EmbeddingVector]) -> Result<SimilarityMatrix, SimilarityError> {
    let n = vectors.len();
    if n < 2 {
        return Err(SimilarityError::InvalidMatrix(format!(
            "need at least two vectors, got {n}"
        )));
    }
    let upper: Vec<((usize, usize), f64)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            cosine(&vectors[i], &vectors[j])
                .map(|c| ((i, j), c))
                .map_err(|e| SimilarityError::Pair {
                    i,
                    j,
                    source: Box::new(e),
                })
        })
        .collect::<Result<_, _>>()?;
    let mut entries = vec![0.0; n * n];
    for ((i, j), c) in upper {
        entries[i * n + j] = c;
        entries[j * n + i] = c;
    }
    SimilarityMatrix::from_entries(vectors.iter().map(|v| v.code_id.clone()).collect(), entries)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FlaggedPair {
    pub code_id_a: String,
    pub code_id_b: String,
    pub similarity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub threshold: f64,
    pub flagged_pairs: Vec<FlaggedPair>,
    pub passed: bool,
}

/// Flags every off-diagonal pair (i < j) with similarity at or above
/// `threshold`, less [`SIMILARITY_TOLERANCE`].
pub fn validate_uniqueness(
    matrix: &SimilarityMatrix,
    threshold: f64,
) -> Result<UniquenessReport, SimilarityError> {
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(SimilarityError::InvalidThreshold(threshold));
    }
    let n = matrix.n();
    let ids = matrix.code_ids();
    let flagged_pairs: Vec<FlaggedPair> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| matrix.get(i, j) >= threshold - SIMILARITY_TOLERANCE)
        .map(|(i, j)| FlaggedPair {
            code_id_a: ids[i].clone(),
            code_id_b: ids[j].clone(),
            similarity: matrix.get(i, j),
        })
        .collect();
    Ok(UniquenessReport {
        threshold,
        passed: flagged_pairs.is_empty(),
        flagged_pairs,
    })
}

/// Source of embeddings for `(code_id, text)` items.
pub trait EmbeddingProvider {
    fn embed(&self, items: &[(String, String)]) -> Result<Vec<EmbeddingVector>, SimilarityError>;
}

/// One vector per item, in order, with a uniform dimension and non-zero norms.
pub fn embed_codes(
    items: &[(String, String)],
    provider: &dyn EmbeddingProvider,
) -> Result<Vec<EmbeddingVector>, SimilarityError> {
    if items.is_empty() {
        return Err(SimilarityError::EmptyInput);
    }
    let vectors = provider.embed(items)?;
    if vectors.len() != items.len() {
        return Err(SimilarityError::ProviderError(format!(
            "{} vectors for {} inputs",
            vectors.len(),
            items.len()
        )));
    }
    let dim = vectors[0].dim();
    for v in &vectors {
        if v.dim() != dim || dim == 0 {
            return Err(SimilarityError::DimensionMismatch(format!(
                "{} has {} values, expected {dim}",
                v.code_id,
                v.dim()
            )));
        }
        if v.norm() == 0.0 {
            return Err(SimilarityError::ZeroNorm(v.code_id.clone()));
        }
    }
    Ok(vectors)
}

/// Precomputed vectors keyed by code id, from JSON `{id: [values]}` or CSV
/// rows `code_id,v1,...,vd` (with or without a header row).
#[derive(Debug, Clone)]
pub struct FileEmbeddings {
    vectors: HashMap<String, Vec<f64>>,
}

impl FileEmbeddings {
    pub fn open(path: &Path) -> Result<Self, SimilarityError> {
        let io = |e: &dyn std::fmt::Display| {
            SimilarityError::ProviderError(format!("{}: {e}", path.display()))
        };
        let body = fs::read_to_string(path).map_err(|e| io(&e))?;
        let is_json = path
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| e.eq_ignore_ascii_case("json"));
        let vectors = if is_json {
            serde_json::from_str(&body).map_err(|e| io(&e))?
        } else {
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(false)
                .flexible(true)
                .from_reader(body.as_bytes());
            let mut vectors = HashMap::new();
            for (line, record) in reader.records().enumerate() {
                let record = record.map_err(|e| io(&e))?;
                let mut fields = record.iter();
                let Some(id) = fields.next() else { continue };
                let values: Result<Vec<f64>, _> = fields.map(|f| f.trim().parse::<f64>()).collect();
                match values {
                    Ok(values) => {
                        vectors.insert(id.to_string(), values);
                    }
                    Err(_) if line == 0 => {} // header
                    Err(e) => return Err(io(&format!("row {}: {e}", line + 1))),
                }
            }
            vectors
        };
        Ok(Self { vectors })
    }

    pub fn from_map(vectors: HashMap<String, Vec<f64>>) -> Self {
        Self { vectors }
    }
}

impl EmbeddingProvider for FileEmbeddings {
    fn embed(&self, items: &[(String, String)]) -> Result<Vec<EmbeddingVector>, SimilarityError> {
        items
            .iter()
            .map(|(id, _)| {
                self.vectors
                    .get(id)
                    .map(|v| EmbeddingVector::new(id.clone(), v.clone()))
                    .ok_or_else(|| SimilarityError::MissingVector(id.clone()))
            })
            .collect()
    }
}

/// OpenAI-compatible `/embeddings` endpoint.
pub struct HttpEmbeddings {
    client: Client,
    config: ProviderConfig,
    model_id: String,
}

impl HttpEmbeddings {
    pub fn new(
        config: ProviderConfig,
        model_id: impl Into<String>,
    ) -> Result<Self, SimilarityError> {
        let client = Client::builder()
            .timeout(config.timeout)
            .build()
            .map_err(|e| SimilarityError::ProviderError(e.to_string()))?;
        Ok(Self {
            client,
            config,
            model_id: model_id.into(),
        })
    }
}

impl EmbeddingProvider for HttpEmbeddings {
    fn embed(&self, items: &[(String, String)]) -> Result<Vec<EmbeddingVector>, SimilarityError> {
        let inputs: Vec<&str> = items.iter().map(|(_, t)| t.as_str()).collect();
        let body = json!({"model": self.model_id, "input": inputs});
        let (value, _) = post_json_with_retry(&self.client, &self.config, &body)?;
        let data = value
            .get("data")
            .and_then(Value::as_array)
            .ok_or_else(|| SimilarityError::ProviderError("response has no data array".into()))?;
        let mut rows: Vec<(usize, Vec<f64>)> = data
            .iter()
            .enumerate()
            .map(|(pos, row)| {
                let index = row
                    .get("index")
                    .and_then(Value::as_u64)
                    .map_or(pos, |i| i as usize);
                let values = row
                    .get("embedding")
                    .and_then(Value::as_array)
                    .ok_or_else(|| {
                        SimilarityError::ProviderError(format!("row {pos} has no embedding"))
                    })?
                    .iter()
                    .map(|v| {
                        v.as_f64().ok_or_else(|| {
                            SimilarityError::ProviderError(format!("row {pos}: non-numeric value"))
                        })
                    })
                    .collect::<Result<Vec<f64>, _>>()?;
                Ok((index, values))
            })
            .collect::<Result<_, SimilarityError>>()?;
        rows.sort_by_key(|(i, _)| *i);
        if rows.len() != items.len() {
            return Err(SimilarityError::ProviderError(format!(
                "{} embeddings for {} inputs",
                rows.len(),
                items.len()
            )));
        }
        Ok(rows
            .into_iter()
            .zip(items)
            .map(|((_, values), (id, _))| EmbeddingVector::new(id.clone(), values))
            .collect())
    }
}
