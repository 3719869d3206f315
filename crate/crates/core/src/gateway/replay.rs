//! Record/replay fixture store. One JSON file per request digest.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{CompletionProvider, GatewayError, PromptRequest, RawCompletion};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRecord {
    pub digest: String,
    pub request_summary: String,
    pub response_text: String,
}

impl FixtureRecord {
    pub fn file_name(digest: &str) -> String {
        format!("{digest}.json")
    }
}

fn fixture_error(path: &Path, message: impl ToString) -> GatewayError {
    GatewayError::Fixture {
        path: path.display().to_string(),
        message: message.to_string(),
    }
}

/// Serves recorded responses; never touches the network.
#[derive(Debug, Clone)]
pub struct ReplayProvider {
    dir: PathBuf,
    records: HashMap<String, String>,
}

impl ReplayProvider {
    /// Loads every `*.json` record under `dir`.
    pub fn open(dir: &Path) -> Result<Self, GatewayError> {
        let entries = fs::read_dir(dir).map_err(|e| fixture_error(dir, e))?;
        let mut records = HashMap::new();
        for entry in entries {
            let path = entry.map_err(|e| fixture_error(dir, e))?.path();
            if path.extension().and_then(|e| e.to_str()) != Some("json") {
                continue;
            }
            let body = fs::read_to_string(&path).map_err(|e| fixture_error(&path, e))?;
            let record: FixtureRecord =
                serde_json::from_str(&body).map_err(|e| fixture_error(&path, e))?;
            records.insert(record.digest, record.response_text);
        }
        Ok(Self {
            dir: dir.to_path_buf(),
            records,
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

impl CompletionProvider for ReplayProvider {
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError> {
        let digest = request.digest();
        self.records
            .get(&digest)
            .map(|text| RawCompletion::replayed(text.clone()))
            .ok_or(GatewayError::FixtureMiss(digest))
    }
}

/// Passes requests to `inner` and writes each response as a fixture record.
pub struct RecordingProvider<P> {
    inner: P,
    dir: PathBuf,
}

impl<P: CompletionProvider> RecordingProvider<P> {
    pub fn new(inner: P, dir: &Path) -> Result<Self, GatewayError> {
        fs::create_dir_all(dir).map_err(|e| fixture_error(dir, e))?;
        Ok(Self {
            inner,
            dir: dir.to_path_buf(),
        })
    }

    pub fn into_inner(self) -> P {
        self.inner
    }
}

impl<P: CompletionProvider> CompletionProvider for RecordingProvider<P> {
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError> {
        let raw = self.inner.complete(request)?;
        let record = FixtureRecord {
            digest: request.digest(),
            request_summary: request.summary(),
            response_text: raw.text.clone(),
        };
        let path = self.dir.join(FixtureRecord::file_name(&record.digest));
        let mut body =
            serde_json::to_string_pretty(&record).map_err(|e| fixture_error(&path, e))?;
        body.push('\n');
        fs::write(&path, body).map_err(|e| fixture_error(&path, e))?;
        Ok(raw)
    }
}
