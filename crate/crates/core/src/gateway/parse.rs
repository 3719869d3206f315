//! Response parsing for both prompts.
//!
//! Models wrap JSON in prose and markdown fences, so parsing always starts by
//! pulling the first balanced `{...}` object out of the completion text.

use serde_json::{json, Map, Value};

use super::prompts::{THEMES_KEY, VERDICT_KEY};
use super::{GatewayError, RawCompletion};
use crate::codebook::Code;

const NAME_KEYS: &[&str] = &["name", "theme", "theme_name", "code", "title"];
const DESCRIPTION_KEYS: &[&str] = &["description", "desc", "theme_description"];
const QUOTE_KEYS: &[&str] = &["quote", "quotes", "participant_quote"];

/// Returns the first balanced JSON object in `text`. Braces inside JSON
/// strings are skipped.
pub fn extract_json_object(text: &str) -> Option<&str> {
    let start = text.find('{')?;
    let bytes = text.as_bytes();
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    for (offset, &b) in bytes[start..].iter().enumerate() {
        if in_string {
            match b {
                _ if escaped => escaped = false,
                b'\\' => escaped = true,
                b'"' => in_string = false,
                _ => {}
            }
            continue;
        }
        match b {
            b'"' => in_string = true,
            b'{' => depth += 1,
            b'}' => {
                depth -= 1;
                if depth == 0 {
                    return Some(&text[start..=start + offset]);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_object(text: &str) -> Result<Map<String, Value>, GatewayError> {
    // Fence lines are dropped; a fence sharing a line with the object falls
    // back to scanning the raw text.
    let unfenced: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with("```"))
        .collect::<Vec<_>>()
        .join("\n");
    let candidate = extract_json_object(&unfenced)
        .or_else(|| extract_json_object(text))
        .ok_or_else(|| GatewayError::MalformedResponse("no JSON object found".into()))?;
    match serde_json::from_str::<Value>(candidate) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(GatewayError::MalformedResponse("not a JSON object".into())),
        Err(e) => Err(GatewayError::MalformedResponse(e.to_string())),
    }
}

fn lookup<'a>(map: &'a Map<String, Value>, keys: &[&str]) -> Option<&'a Value> {
    keys.iter().find_map(|k| {
        map.iter()
            .find(|(key, _)| key.trim().eq_ignore_ascii_case(k))
            .map(|(_, v)| v)
    })
}

fn text_of(value: Option<&Value>) -> String {
    match value {
        Some(Value::String(s)) => s.trim().to_string(),
        Some(Value::Array(items)) => items
            .iter()
            .filter_map(Value::as_str)
            .collect::<Vec<_>>()
            .join(" "),
        Some(Value::Null) | None => String::new(),
        Some(other) => other.to_string(),
    }
}

/// Parses an initial-coding completion into codes for `interview_id`.
///
/// Between 1 and `n_codes_requested + 1` entries are accepted: asking for
/// "up to N" lets the model return one extra.
pub fn parse_codes_response(
    raw: &RawCompletion,
    n_codes_requested: usize,
    interview_id: &str,
) -> Result<Vec<Code>, GatewayError> {
    let map = parse_object(&raw.text)?;
    let themes = lookup(&map, &[THEMES_KEY])
        .ok_or_else(|| GatewayError::MissingKey(THEMES_KEY.to_string()))?;
    let entries = themes.as_array().ok_or_else(|| {
        GatewayError::MalformedResponse(format!("'{THEMES_KEY}' is not an array"))
    })?;
    if entries.is_empty() {
        return Err(GatewayError::EmptyThemes);
    }
    let max = n_codes_requested + 1;
    if entries.len() > max {
        return Err(GatewayError::TooManyThemes {
            got: entries.len(),
            max,
        });
    }
    entries
        .iter()
        .enumerate()
        .map(|(index, entry)| {
            let fields = entry
                .as_object()
                .ok_or(GatewayError::MalformedEntry(index))?;
            let name = text_of(lookup(fields, NAME_KEYS));
            if name.is_empty() {
                return Err(GatewayError::MalformedEntry(index));
            }
            Ok(Code {
                name,
                description: text_of(lookup(fields, DESCRIPTION_KEYS)),
                quote: text_of(lookup(fields, QUOTE_KEYS)),
                interview_id: interview_id.to_string(),
                index_in_interview: index,
            })
        })
        .collect()
}

/// Serializes codes into the response shape [`parse_codes_response`] reads.
pub fn render_codes_response(codes: &[Code]) -> String {
    let themes: Vec<Value> = codes
        .iter()
        .map(|c| json!({"name": c.name, "description": c.description, "quote": c.quote}))
        .collect();
    let mut root = Map::new();
    root.insert(THEMES_KEY.to_string(), Value::Array(themes));
    serde_json::to_string_pretty(&Value::Object(root)).expect("JSON values always serialize")
}

/// Parses a dedup completion. `true` means the candidate repeats a code already
/// in the unique codebook.
pub fn parse_dedup_response(raw: &RawCompletion) -> Result<bool, GatewayError> {
    let map = parse_object(&raw.text)?;
    let value = lookup(&map, &[VERDICT_KEY])
        .ok_or_else(|| GatewayError::MissingKey(VERDICT_KEY.to_string()))?;
    match value {
        Value::Bool(b) => Ok(*b),
        Value::String(s) if s.trim().eq_ignore_ascii_case("true") => Ok(true),
        Value::String(s) if s.trim().eq_ignore_ascii_case("false") => Ok(false),
        Value::String(s) => Err(GatewayError::UnrecognizedVerdict(s.clone())),
        other => Err(GatewayError::UnrecognizedVerdict(other.to_string())),
    }
}

/// Renders a dedup verdict the way the prompt asks for it.
pub fn render_dedup_response(duplicate: bool) -> String {
    json!({ VERDICT_KEY: duplicate.to_string() }).to_string()
}
