//! Regenerates the bundled replay fixtures under `fixtures/`.
//!
//! Each dataset is a synthetic interview corpus built from a fixed concept
//! vocabulary and a schedule of how many codes each interview yields and how
//! many of them are new. A scripted model answers the coding prompt with the
//! scheduled codes and the same-meaning prompt by comparing concepts. The real
//! pipeline runs against it through a recording provider, so the fixture set
//! holds exactly the requests a replay run makes.
//!
//! ```text
//! cargo run --example build_fixtures
//! ```

#[path = "concepts/scrum.rs"]
mod scrum;
#[path = "concepts/teaching.rs"]
mod teaching;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use its_meter::codebook::{reduce_a_posteriori, run_pipeline, NoCheckpoint, PipelineConfig};
use its_meter::corpus::{load_corpus, OrderSpec};
use its_meter::gateway::prompts::build_initial_coding_prompt;
use its_meter::gateway::{
    render_dedup_response, CompletionProvider, Gateway, GatewayError, ModelSettings, PromptRequest,
    RawCompletion, RecordingProvider,
};

type Concept = (
    &'static str,
    &'static str,
    &'static str,
    &'static str,
    &'static str,
);

const EMBEDDING_DIM: usize = 48;

const QUESTIONS: &[&str] = &[
    "Could you tell me a bit more about that?",
    "How does that play out day to day?",
    "What has your experience been there?",
    "Can you give me an example?",
    "How do you feel about that?",
    "What would you change about it?",
];

const LEADS: &[&str] = &[
    "",
    "Well, ",
    "Honestly, ",
    "In my experience, ",
    "I would say ",
];

struct Dataset {
    name: &'static str,
    concepts: &'static [Concept],
    /// (codes generated, codes new) per interview.
    schedule: Vec<(usize, usize)>,
    seed: u64,
    posthoc: bool,
}

fn scrum_schedule() -> Vec<(usize, usize)> {
    let early_new = [11, 6, 5, 5, 4, 4, 3, 3, 3, 2, 2, 2, 2, 2];
    (1..=39)
        .map(|i: usize| {
            let generated = match i {
                1 => 11,
                _ if i % 4 == 1 => 13,
                _ => 14,
            };
            let new = match early_new.get(i - 1) {
                Some(&n) => n,
                None => usize::from(i.is_multiple_of(2)),
            };
            (generated, new)
        })
        .collect()
}

fn teaching_schedule() -> Vec<(usize, usize)> {
    let generated = [14, 14, 14, 9, 14, 14, 14, 14, 14, 14];
    let new = [14, 7, 6, 5, 4, 4, 4, 3, 3, 3];
    generated.into_iter().zip(new).collect()
}

/// One scheduled code: which concept, which wording, which quote lead.
#[derive(Debug, Clone, Copy)]
struct Planned {
    concept: usize,
    variant: usize,
}

fn wording(concept: &Concept, variant: usize) -> (&'static str, &'static str) {
    match variant % 3 {
        0 => (concept.0, concept.1),
        1 => (concept.2, concept.3),
        _ => (concept.2, concept.1),
    }
}

fn plan(dataset: &Dataset) -> Vec<Vec<Planned>> {
    let mut rng = ChaCha8Rng::seed_from_u64(dataset.seed);
    let mut accepted: Vec<usize> = Vec::new();
    let mut uses = vec![0usize; dataset.concepts.len()];
    let mut interviews = Vec::new();
    for &(generated, new) in &dataset.schedule {
        assert!(new <= generated);
        let fresh: Vec<usize> = (accepted.len()..accepted.len() + new).collect();
        let mut old = accepted.clone();
        old.shuffle(&mut rng);
        old.truncate(generated - new);
        assert_eq!(old.len(), generated - new, "not enough earlier concepts");
        let mut concepts: Vec<usize> = fresh.iter().chain(&old).copied().collect();
        concepts.shuffle(&mut rng);
        let planned = concepts
            .into_iter()
            .map(|concept| {
                let variant = uses[concept];
                uses[concept] += 1;
                Planned { concept, variant }
            })
            .collect();
        accepted.extend(fresh);
        interviews.push(planned);
    }
    assert_eq!(
        accepted.len(),
        dataset.concepts.len(),
        "every concept is used"
    );
    interviews
}

fn quote(concept: &Concept, variant: usize) -> String {
    let lead = LEADS[variant % LEADS.len()];
    if lead.is_empty() {
        concept.4.to_string()
    } else {
        let mut chars = concept.4.chars();
        let first = chars.next().expect("quotes are non-empty");
        format!("{lead}{}{}", first.to_lowercase(), chars.as_str())
    }
}

fn transcript(dataset: &Dataset, ordinal: usize, planned: &[Planned]) -> String {
    let mut text = format!(
        "Interview {ordinal}\n\nInterviewer: Thank you for joining. Could you describe your role and how your team works?\n"
    );
    for (k, p) in planned.iter().enumerate() {
        if k > 0 {
            text.push_str(&format!(
                "Interviewer: {}\n",
                QUESTIONS[(ordinal + k) % QUESTIONS.len()]
            ));
        }
        text.push_str(&format!(
            "Participant: {}\n",
            quote(&dataset.concepts[p.concept], p.variant)
        ));
    }
    text.push_str("Interviewer: That is all from me. Thank you.\n");
    text
}

fn codes_response(dataset: &Dataset, ordinal: usize, planned: &[Planned]) -> String {
    let themes: Vec<serde_json::Value> = planned
        .iter()
        .map(|p| {
            let concept = &dataset.concepts[p.concept];
            let (name, description) = wording(concept, p.variant);
            serde_json::json!({
                "name": name,
                "description": description,
                "quote": quote(concept, p.variant),
            })
        })
        .collect();
    let body = serde_json::to_string_pretty(&serde_json::json!({ "Themes": themes }))
        .expect("serializable");
    // Vary the envelope the way chat models do.
    match ordinal % 3 {
        0 => body,
        1 => format!("```json\n{body}\n```"),
        _ => format!("Here are the themes identified in the interview:\n\n{body}"),
    }
}

/// Answers both prompts from the concept plan.
struct ScriptedModel {
    coding: HashMap<String, String>,
    concept_of: HashMap<String, usize>,
}

fn between<'a>(text: &'a str, start: &str, end: &str) -> Option<&'a str> {
    let from = text.find(start)? + start.len();
    let len = text[from..].find(end)?;
    Some(&text[from..from + len])
}

impl CompletionProvider for ScriptedModel {
    fn complete(&self, request: &PromptRequest) -> Result<RawCompletion, GatewayError> {
        if let Some(response) = self.coding.get(&request.user_text) {
            return Ok(RawCompletion::replayed(response.clone()));
        }
        let bad = || GatewayError::MalformedResponse("scripted model: unknown prompt".into());
        let candidate = between(&request.user_text, "value: ``", "`` conveys").ok_or_else(bad)?;
        let list =
            between(&request.user_text, "cumulative_u:\n", ".\nYour response").ok_or_else(bad)?;
        let concept = |text: &str| {
            self.concept_of
                .get(text)
                .copied()
                .ok_or_else(|| GatewayError::MalformedResponse(format!("unknown code {text}")))
        };
        let target = concept(candidate)?;
        let listed = list
            .split(", ")
            .map(concept)
            .collect::<Result<HashSet<_>, _>>()?;
        let duplicate = listed.contains(&target);
        let text = if candidate.len() % 2 == 0 {
            render_dedup_response(duplicate)
        } else {
            format!("{{\n  \"value_in_cumulative_u\": {duplicate}\n}}")
        };
        Ok(RawCompletion::replayed(text))
    }
}

fn reset_dir(dir: &Path) {
    if dir.exists() {
        fs::remove_dir_all(dir).expect("remove old fixtures");
    }
    fs::create_dir_all(dir).expect("create fixture dir");
}

fn embeddings(dataset: &Dataset, unique_ids: &[(String, usize)]) -> BTreeMap<String, Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(dataset.seed ^ 0xE3B0_C442);
    let shared: Vec<f64> = (0..EMBEDDING_DIM).map(|_| rng.random::<f64>()).collect();
    let per_concept: Vec<Vec<f64>> = (0..dataset.concepts.len())
        .map(|_| {
            shared
                .iter()
                .map(|s| {
                    let v = 0.6 * s + rng.random_range(-1.0..1.0);
                    (v * 1e6).round() / 1e6
                })
                .collect()
        })
        .collect();
    unique_ids
        .iter()
        .map(|(id, concept)| (id.clone(), per_concept[*concept].clone()))
        .collect()
}

fn build(dataset: &Dataset, root: &Path) {
    for c in dataset.concepts {
        for field in [c.0, c.1, c.2, c.3] {
            assert!(!field.contains(','), "comma in {field:?}");
        }
    }
    let planned = plan(dataset);
    let dir = root.join(dataset.name);
    let transcripts = dir.join("transcripts");
    let replay = dir.join("replay");
    reset_dir(&transcripts);
    reset_dir(&replay);
    for (n, interview) in planned.iter().enumerate() {
        let path = transcripts.join(format!("{}_{:02}.txt", dataset.name, n + 1));
        fs::write(path, transcript(dataset, n + 1, interview)).expect("write transcript");
    }

    let corpus = load_corpus(&transcripts, &OrderSpec::Lexicographic).expect("corpus");
    let settings = ModelSettings::default();
    let config = PipelineConfig::default();
    let mut coding = HashMap::new();
    for (interview, plan) in corpus.iter().zip(&planned) {
        let request = build_initial_coding_prompt(&interview.text, config.n_codes, &settings);
        coding.insert(
            request.user_text,
            codes_response(dataset, interview.ordinal, plan),
        );
    }
    let mut concept_of = HashMap::new();
    for (k, c) in dataset.concepts.iter().enumerate() {
        for variant in 0..3 {
            let (name, description) = wording(c, variant);
            concept_of.insert(format!("{name} - {description}"), k);
        }
    }
    let model = ScriptedModel { coding, concept_of };
    let recorder = RecordingProvider::new(model, &replay).expect("replay dir");
    let gateway = Gateway::new(recorder, settings);

    let (state, series) =
        run_pipeline(&corpus, &gateway, &gateway, &config, &NoCheckpoint, None).expect("pipeline");
    let expected_total: usize = dataset.schedule.iter().map(|s| s.0).sum();
    let expected_unique: usize = dataset.schedule.iter().map(|s| s.1).sum();
    assert_eq!(state.total_count(), expected_total);
    assert_eq!(state.unique_count(), expected_unique);
    println!(
        "{}: {} interviews, total={} unique={} final ratio={:.4}",
        dataset.name,
        series.len(),
        state.total_count(),
        state.unique_count(),
        expected_unique as f64 / expected_total as f64
    );

    if dataset.posthoc {
        let posthoc = reduce_a_posteriori(&state.cumulative_total, &gateway).expect("posthoc");
        println!("{}: a posteriori unique={}", dataset.name, posthoc.len());
    }

    let concept_by_text: HashMap<String, usize> = dataset
        .concepts
        .iter()
        .enumerate()
        .flat_map(|(k, c)| (0..3).map(move |v| (wording(c, v), k)))
        .map(|((n, d), k)| (format!("{n} - {d}"), k))
        .collect();
    let unique_ids: Vec<(String, usize)> = state
        .cumulative_unique
        .iter()
        .map(|c| (c.code_id(), concept_by_text[&c.codebook_text()]))
        .collect();
    let vectors = embeddings(dataset, &unique_ids);
    let mut body = String::from("{\n");
    let lines: Vec<String> = vectors
        .iter()
        .map(|(id, v)| {
            format!(
                "  {}: {}",
                serde_json::to_string(id).unwrap(),
                serde_json::to_string(v).unwrap()
            )
        })
        .collect();
    body.push_str(&lines.join(",\n"));
    body.push_str("\n}\n");
    fs::write(dir.join("vectors.json"), body).expect("write vectors");
}

fn main() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let datasets = [
        Dataset {
            name: "scrum",
            concepts: scrum::CONCEPTS,
            schedule: scrum_schedule(),
            seed: 39,
            posthoc: false,
        },
        Dataset {
            name: "teaching",
            concepts: teaching::CONCEPTS,
            schedule: teaching_schedule(),
            seed: 10,
            posthoc: true,
        },
    ];
    for dataset in &datasets {
        build(dataset, &root);
    }
}
