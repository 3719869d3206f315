//! Chat-completion access for the two coding prompts.
//!
//! [`Gateway`] pairs a [`CompletionProvider`] (live HTTP, replay, or
//! record-through) with the prompt builders and response parsers, and exposes
//! the result as an [`InitialCoder`] and a [`Judge`] for the codebook engine.

mod http;
pub mod parse;
pub mod prompts;
mod replay;

use std::sync::Arc;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::codebook::{Code, InitialCoder, Judge};
use crate::corpus::Interview;

pub use http::{post_json_with_retry, retry_with_backoff, Attempt, HttpProvider};
pub use parse::{
    extract_json_object, parse_codes_response, parse_dedup_response, render_codes_response,
    render_dedup_response,
};
pub use prompts::{build_dedup_prompt, build_initial_coding_prompt};
pub use replay::{FixtureRecord, RecordingProvider, ReplayProvider};

pub const DEFAULT_MODEL_ID: &str = "gpt-3.5-turbo-16k";
pub const DEFAULT_MAX_OUTPUT_TOKENS: u32 = 4096;
pub const DEFAULT_PARSE_RETRIES: usize = 2;
pub const DEFAULT_CREDENTIAL_ENV: &str = "ITS_METER_API_KEY";
pub const DEFAULT_ENDPOINT: &str = "https://api.openai.com/v1/chat/completions";

#[derive(Debug, Error)]
pub enum GatewayError {
    #[error("the unique codebook is empty; bootstrap it from the first interview first")]
    EmptyCodebook,
    #[error("candidate code text is empty")]
    EmptyCandidate,
    #[error("malformed response: {0}")]
    MalformedResponse(String),
    #[error("response is missing key '{0}'")]
    MissingKey(String),
    #[error("response contains no themes")]
    EmptyThemes,
    #[error("response contains {got} themes, at most {max} accepted")]
    TooManyThemes { got: usize, max: usize },
    #[error("theme entry {0} has no name")]
    MalformedEntry(usize),
    #[error("unrecognized verdict {0:?}, expected 'true' or 'false'")]
    UnrecognizedVerdict(String),
    #[error("provider failed after {attempts} attempts: {last_error}")]
    ProviderExhausted { attempts: u32, last_error: String },
    #[error("credential environment variable {0} is not set")]
    CredentialMissing(String),
    #[error("no replay fixture for request digest {0}")]
    FixtureMiss(String),
    #[error("provider returned HTTP {status}: {body}")]
    Http { status: u16, body: String },
    #[error("provider transport error: {0}")]
    Transport(String),
    #[error("fixture store {path}: {message}")]
    Fixture { path: String, message: String },
    #[error("temperature {0} outside [0, 2]")]
    InvalidTemperature(f64),
}

impl GatewayError {
    /// Errors a fresh completion might cure.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Self::MalformedResponse(_)
                | Self::MissingKey(_)
                | Self::EmptyThemes
                | Self::TooManyThemes { .. }
                | Self::MalformedEntry(_)
                | Self::UnrecognizedVerdict(_)
        )
    }
}

/// Model parameters shared by every request of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSettings {
    pub model_id: String,
    pub temperature: f64,
    pub max_output_tokens: u32,
}

impl Default for ModelSettings {
    fn default() -> Self {
        Self {
            model_id: DEFAULT_MODEL_ID.to_string(),
            temperature: 0.0,
            max_output_tokens: DEFAULT_MAX_OUTPUT_TOKENS,
        }
    }
}

impl ModelSettings {
    pub fn validate(&self) -> Result<(), GatewayError> {
        if !(0.0..=2.0).contains(&self.temperature) {
            return Err(GatewayError::InvalidTemperature(self.temperature));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PromptRequest {
    pub user_text: String,
    pub temperature: f64,
    pub max_output_tokens: u32,
    pub model_id: String,
}

impl PromptRequest {
    pub fn new(user_text: String, settings: &ModelSettings) -> Self {
        Self {
            user_text,
            temperature: settings.temperature,
            max_output_tokens: settings.max_output_tokens,
            model_id: settings.model_id.clone(),
        }
    }

    /// Stable fixture key over (model_id, temperature, user_text).
    pub fn digest(&self) -> String {
        let key = serde_json::to_string(&(&self.model_id, self.temperature, &self.user_text))
            .expect("tuple of strings and f64 serializes");
        hex::encode(Sha256::digest(key.as_bytes()))
    }

    /// Short human-readable description, stored next to replay fixtures.
    pub fn summary(&self) -> String {
        let head: String = self.user_text.chars().take(120).collect();
        format!(
            "model={} temperature={} chars={} | {}",
            self.model_id,
            self.temperature,
            self.user_text.chars().count(),
            head.replace('\n', " ")
        )
    }
}

/// Provider output, captured verbatim before any parsing.
#[derive(Debug, Clone, PartialEq)]
pub struct RawCompletion {
    pub text: String,
    pub provider_latency: Duration,
    pub attempt_count: u32,
}

impl RawCompletion {
    pub fn replayed(text: String) -> Self {
        Self {
            text,
            provider_latency: Duration::ZERO,
            attempt_count: 1,
        }
    }
}

/// Where a run's chat-completion endpoint lives and how to retry it. The
/// credential itself is read from `credential_env_var` on every call.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProviderConfig {
    pub endpoint_url: String,
    pub credential_env_var: String,
    pub max_retries: u32,
    pub timeout: Duration,
    pub backoff_base: Duration,
}

impl Default for ProviderConfig {
    fn default() -> Self {
        Self {
            endpoint_url: DEFAULT_ENDPOINT.to_string(),
            credential_env_var: DEFAULT_CREDENTIAL_ENV.to_string(),
            max_retries: 4,
            timeout: Duration::from_secs(120),
            backoff_base: Duration::from_millis(500),
        }
    }
}

impl ProviderConfig {
    pub fn credential(&self) -> Result<String, GatewayError> {
        match std::env::var(&self.credential_env_var) {
            Ok(v) if !v.trim().is_empty() => Ok(v),
            _ => Err(GatewayError::CredentialMissing(
                self.credential_env_var.clone(),
            )),
        }
    }
}

/// Anything that turns a prompt into completion text.
pub trait CompletionProvider: Send + Sync {
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError>;
}

/// Adapts a closure into a provider.
pub struct FnProvider<F>(pub F);

impl<F> CompletionProvider for FnProvider<F>
where
    F: Fn(&PromptRequest) -> Result<RawCompletion, GatewayError> + Send + Sync,
{
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError> {
        (self.0)(request)
    }
}

impl<P: CompletionProvider + ?Sized> CompletionProvider for &P {
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError> {
        (**self).complete(request)
    }
}

impl<P: CompletionProvider + ?Sized> CompletionProvider for Box<P> {
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError> {
        (**self).complete(request)
    }
}

impl<P: CompletionProvider + ?Sized> CompletionProvider for Arc<P> {
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError> {
        (**self).complete(request)
    }
}

/// Prompts + provider + parsers.
pub struct Gateway<P> {
    provider: P,
    settings: ModelSettings,
    parse_retries: usize,
    exact_match_fast_path: bool,
}

impl<P: CompletionProvider> Gateway<P> {
    pub fn new(provider: P, settings: ModelSettings) -> Self {
        Self {
            provider,
            settings,
            parse_retries: DEFAULT_PARSE_RETRIES,
            exact_match_fast_path: false,
        }
    }

    pub fn with_parse_retries(mut self, retries: usize) -> Self {
        self.parse_retries = retries;
        self
    }

    /// Treat a candidate whose text exactly matches a codebook entry as a
    /// duplicate without asking the model. Off by default.
    pub fn with_exact_match_fast_path(mut self, enabled: bool) -> Self {
        self.exact_match_fast_path = enabled;
        self
    }

    pub fn settings(&self) -> &ModelSettings {
        &self.settings
    }

    pub fn provider(&self) -> &P {
        &self.provider
    }

    fn complete_parsed<T>(
        &self,
        request: &PromptRequest,
        parse: impl Fn(&RawCompletion) -> Result<T, GatewayError>,
    ) -> Result<T, GatewayError> {
        let mut last = None;
        for attempt in 0..=self.parse_retries {
            let raw = self.provider.complete(request)?;
            match parse(&raw) {
                Ok(value) => return Ok(value),
                Err(e) if e.is_parse_error() => {
                    log::warn!(
                        "unparseable completion (attempt {} of {}): {e}",
                        attempt + 1,
                        self.parse_retries + 1
                    );
                    last = Some(e);
                }
                Err(e) => return Err(e),
            }
        }
        Err(last.expect("at least one attempt is made"))
    }
}

impl<P: CompletionProvider> InitialCoder for Gateway<P> {
    fn code_interview(
        &self,
        interview: &Interview,
        n_codes: usize,
    ) -> Result<Vec<Code>, GatewayError> {
        let request = build_initial_coding_prompt(&interview.text, n_codes, &self.settings);
        self.complete_parsed(&request, |raw| {
            parse_codes_response(raw, n_codes, &interview.id)
        })
    }
}

impl<P: CompletionProvider> Judge for Gateway<P> {
    fn is_duplicate(&self, candidate: &str, codebook: &[String]) -> Result<bool, GatewayError> {
        if self.exact_match_fast_path && codebook.iter().any(|c| c == candidate) {
            return Ok(true);
        }
        let request = build_dedup_prompt(candidate, codebook, &self.settings)?;
        self.complete_parsed(&request, parse_dedup_response)
    }
}
