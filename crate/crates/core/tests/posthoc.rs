//! One-pass reduction against the incremental codebook.

mod common;

use std::collections::HashMap;
use std::fs;

use its_meter::codebook::{reduce_a_posteriori, run_pipeline, NoCheckpoint, PipelineConfig};
use its_meter::corpus::{load_corpus, OrderSpec};
use its_meter::gateway::prompts::build_initial_coding_prompt;
use its_meter::gateway::{
    render_dedup_response, FnProvider, Gateway, ModelSettings, PromptRequest, RawCompletion,
    RecordingProvider,
};

/// Interview 2 holds two codes with the same meaning. The incremental loop
/// judges both against interview 1 only and keeps both; a single pass sees
/// the first when judging the second.
#[test]
fn order_sensitive_fixture_reports_nonzero_delta() {
    let work = tempfile::tempdir().unwrap();
    let transcripts = work.path().join("transcripts");
    let fixtures = work.path().join("replay");
    fs::create_dir_all(&transcripts).unwrap();
    fs::write(
        transcripts.join("a_01.txt"),
        "We plan every sprint together.\n",
    )
    .unwrap();
    fs::write(
        transcripts.join("a_02.txt"),
        "Meetings take too long. Ceremonies eat our week.\n",
    )
    .unwrap();

    let responses = [
        r#"{"Themes": [{"name": "Sprint planning", "description": "Team plans together", "quote": "We plan every sprint together."}]}"#,
        r#"{"Themes": [{"name": "Meeting overhead", "description": "Too much time in meetings", "quote": "Meetings take too long."}, {"name": "Ceremony fatigue", "description": "Scrum events consume the week", "quote": "Ceremonies eat our week."}]}"#,
    ];
    let corpus = load_corpus(&transcripts, &OrderSpec::Lexicographic).unwrap();
    let settings = ModelSettings::default();
    let coding: HashMap<String, String> = corpus
        .iter()
        .zip(responses)
        .map(|(i, r)| {
            (
                build_initial_coding_prompt(&i.text, 15, &settings).user_text,
                r.to_string(),
            )
        })
        .collect();
    let model = FnProvider(move |request: &PromptRequest| {
        let text = match coding.get(&request.user_text) {
            Some(r) => r.clone(),
            None => {
                let (head, list) = request.user_text.split_once("cumulative_u:").unwrap();
                let same = head.contains("Ceremony fatigue") && list.contains("Meeting overhead");
                render_dedup_response(same)
            }
        };
        Ok(RawCompletion::replayed(text))
    });
    let gateway = Gateway::new(RecordingProvider::new(model, &fixtures).unwrap(), settings);
    let (state, _) = run_pipeline(
        &corpus,
        &gateway,
        &gateway,
        &PipelineConfig::default(),
        &NoCheckpoint,
        None,
    )
    .unwrap();
    assert_eq!(state.unique_count(), 3);
    assert_eq!(
        reduce_a_posteriori(&state.cumulative_total, &gateway)
            .unwrap()
            .len(),
        2
    );

    let out = work.path().join("runs");
    let (_, r) = common::cli(&[
        "run",
        "--corpus",
        transcripts.to_str().unwrap(),
        "--fixtures",
        fixtures.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--run-id",
        "o",
    ]);
    r.unwrap();
    let run = out.join("o");
    let (printed, r) = common::cli(&[
        "reduce-posthoc",
        "--run",
        run.to_str().unwrap(),
        "--fixtures",
        fixtures.to_str().unwrap(),
    ]);
    r.unwrap();
    assert_eq!(printed.trim(), "incremental=3 a_posteriori=2 delta=-1");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(run.join("posthoc/comparison.json")).unwrap())
            .unwrap();
    assert_eq!(report["only_incremental"], serde_json::json!(["a_02#1"]));
}
