//! OpenAI-compatible HTTP provider with exponential backoff.

use std::thread;
use std::time::{Duration, Instant};

use reqwest::blocking::Client;
use reqwest::StatusCode;
use serde_json::{json, Value};

use super::{CompletionProvider, GatewayError, PromptRequest, ProviderConfig, RawCompletion};

const MAX_BACKOFF: Duration = Duration::from_secs(60);

/// Outcome of one attempt inside [`retry_with_backoff`].
#[derive(Debug)]
pub enum Attempt<T> {
    Done(T),
    /// Timeouts, 429 and 5xx: worth another try.
    Transient(String),
    Fatal(GatewayError),
}

/// Runs `op` until it succeeds, fails fatally, or `max_retries` retries have
/// been spent. Waits `backoff_base * 2^(n-1)` before retry `n`.
///
/// Returns the value and the number of attempts used.
pub fn retry_with_backoff<T>(
    max_retries: u32,
    backoff_base: Duration,
    mut op: impl FnMut(u32) -> Attempt<T>,
) -> Result<(T, u32), GatewayError> {
    let mut attempt = 1;
    loop {
        match op(attempt) {
            Attempt::Done(value) => return Ok((value, attempt)),
            Attempt::Fatal(e) => return Err(e),
            Attempt::Transient(reason) => {
                if attempt > max_retries {
                    return Err(GatewayError::ProviderExhausted {
                        attempts: attempt,
                        last_error: reason,
                    });
                }
                let delay = backoff_base
                    .saturating_mul(1u32 << (attempt - 1).min(16))
                    .min(MAX_BACKOFF);
                log::warn!("attempt {attempt} failed ({reason}); retrying in {delay:?}");
                thread::sleep(delay);
                attempt += 1;
            }
        }
    }
}

fn is_transient(status: StatusCode) -> bool {
    status == StatusCode::TOO_MANY_REQUESTS || status.is_server_error()
}

/// POSTs `body` to `config.endpoint_url` with bearer auth and retries,
/// returning the decoded JSON and the attempt count.
pub fn post_json_with_retry(
    client: &Client,
    config: &ProviderConfig,
    body: &Value,
) -> Result<(Value, u32), GatewayError> {
    let key = config.credential()?;
    retry_with_backoff(config.max_retries, config.backoff_base, |_| {
        let response = match client
            .post(&config.endpoint_url)
            .bearer_auth(&key)
            .json(body)
            .send()
        {
            Ok(r) => r,
            Err(e) if e.is_timeout() || e.is_connect() || e.is_request() => {
                return Attempt::Transient(e.to_string())
            }
            Err(e) => return Attempt::Fatal(GatewayError::Transport(e.to_string())),
        };
        let status = response.status();
        if is_transient(status) {
            return Attempt::Transient(format!("HTTP {}", status.as_u16()));
        }
        if !status.is_success() {
            let body = response.text().unwrap_or_default();
            return Attempt::Fatal(GatewayError::Http {
                status: status.as_u16(),
                body,
            });
        }
        match response.json::<Value>() {
            Ok(v) => Attempt::Done(v),
            Err(e) if e.is_timeout() => Attempt::Transient(e.to_string()),
            Err(e) => Attempt::Fatal(GatewayError::Transport(e.to_string())),
        }
    })
}

/// Live chat-completions provider.
pub struct HttpProvider {
    client: Client,
    config: ProviderConfig,
}

impl HttpProvider {
    pub fn new(config: ProviderConfig) -> Result<Self, GatewayError> {
        let client = Client::builder()
            .timeout(config.timeout)
            .build()
            .map_err(|e| GatewayError::Transport(e.to_string()))?;
        Ok(Self { client, config })
    }

    pub fn config(&self) -> &ProviderConfig {
        &self.config
    }
}

impl CompletionProvider for HttpProvider {
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError> {
        let body = json!({
            "model": request.model_id,
            "messages": [{"role": "user", "content": request.user_text}],
            "temperature": request.temperature,
            "max_tokens": request.max_output_tokens,
        });
        let started = Instant::now();
        let (value, attempt_count) = post_json_with_retry(&self.client, &self.config, &body)?;
        let text = value
            .pointer("/choices/0/message/content")
            .and_then(Value::as_str)
            .ok_or_else(|| {
                GatewayError::MalformedResponse(
                    "completion has no choices[0].message.content".into(),
                )
            })?
            .to_string();
        Ok(RawCompletion {
            text,
            provider_latency: started.elapsed(),
            attempt_count,
        })
    }
}
