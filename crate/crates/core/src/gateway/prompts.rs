//! The two prompt templates: initial coding of one interview, and the
//! same-meaning check of one code against the unique codebook.

use super::{GatewayError, ModelSettings, PromptRequest};

/// Key the initial-coding response keeps its entries under.
pub const THEMES_KEY: &str = "Themes";

/// Key holding the verdict in a dedup response.
pub const VERDICT_KEY: &str = "value_in_cumulative_u";

/// Builds the initial-coding prompt for one whole interview.
///
/// Interview text is wrapped in a backtick fence. When the text itself holds a
/// run of three or more backticks the fence is widened past the longest run
/// and a warning is logged.
pub fn build_initial_coding_prompt(
    interview_text: &str,
    n_codes: usize,
    settings: &ModelSettings,
) -> PromptRequest {
    let fence = fence_for(interview_text, 3);
    if fence.len() > 3 {
        log::warn!(
            "interview text contains backtick fences; widening delimiter to {} backticks",
            fence.len()
        );
    }
    let user_text = format!(
        "Identify the {n_codes} most relevant themes in the text, provide a meaningful name for \
each theme in no more than 6 words, 12 words simple description of the theme, and a max 30 \
words quote from the participant.\n\
\n\
Format the response as a json file keeping names, descriptions and quotes together in the \
json, and keep them together in '{THEMES_KEY}'.\n\
\n\
{fence}{interview_text}{fence}\n"
    );
    PromptRequest::new(user_text, settings)
}

/// Builds the same-meaning prompt for `candidate` against the frozen unique
/// codebook. Both are rendered as `name - description`.
pub fn build_dedup_prompt<S: AsRef<str>>(
    candidate: &str,
    unique_codebook: &[S],
    settings: &ModelSettings,
) -> Result<PromptRequest, GatewayError> {
    if unique_codebook.is_empty() {
        return Err(GatewayError::EmptyCodebook);
    }
    if candidate.trim().is_empty() {
        return Err(GatewayError::EmptyCandidate);
    }
    let fence = fence_for(candidate, 2);
    let joined = unique_codebook
        .iter()
        .map(AsRef::as_ref)
        .collect::<Vec<_>>()
        .join(", ");
    let user_text = format!(
        "Then, determine if value: {fence}{candidate}{fence} conveys the same idea\n\
or meaning to any element in the list cumulative_u:\n\
{joined}.\n\
Your response should be either a string 'true' (Same idea or\n\
meaning) or a string 'false' (no similarity)\n\
\n\
Format the response as a json file using the key\n\
{VERDICT_KEY}\n"
    );
    Ok(PromptRequest::new(user_text, settings))
}

/// A backtick fence at least `min` long and longer than any backtick run in
/// `text` that could close it early.
fn fence_for(text: &str, min: usize) -> String {
    let mut longest = 0;
    let mut run = 0;
    for c in text.chars() {
        if c == '`' {
            run += 1;
            longest = longest.max(run);
        } else {
            run = 0;
        }
    }
    let width = if longest >= min { longest + 1 } else { min };
    "`".repeat(width)
}
