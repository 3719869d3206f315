//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};
use std::hash::{DefaultHasher, Hash, Hasher};
use std::path::{Path, PathBuf};

use clap::Parser;

use its_meter::cli::{execute, Cli};
use its_meter::codebook::{run_pipeline, Code, CodebookState, NoCheckpoint, PipelineConfig};
use its_meter::corpus::{Corpus, Interview};
use its_meter::gateway::prompts::build_initial_coding_prompt;
use its_meter::gateway::{
    render_codes_response, FnProvider, Gateway, GatewayError, ModelSettings, PromptRequest,
    RawCompletion, RecordingProvider, ReplayProvider,
};
use its_meter::Error;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Runs the CLI in-process and returns what it printed.
pub fn cli(args: &[&str]) -> (String, Result<(), Error>) {
    let argv = std::iter::once("its-meter").chain(args.iter().copied());
    let parsed = Cli::try_parse_from(argv).expect("arguments parse");
    let mut out = Vec::new();
    let result = execute(parsed, &mut out);
    (String::from_utf8(out).expect("utf-8 output"), result)
}

pub fn replay_run(dataset: &str, out: &Path, run_id: &str) -> (String, Result<(), Error>) {
    let root = fixtures().join(dataset);
    cli(&[
        "run",
        "--corpus",
        root.join("transcripts").to_str().unwrap(),
        "--name",
        dataset,
        "--mode",
        "replay",
        "--fixtures",
        root.join("replay").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--run-id",
        run_id,
    ])
}

// ---------------------------------------------------------------------------
// Parser cases

#[derive(Debug, Clone, PartialEq)]
pub enum Expect {
    Codes(usize),
    Verdict(bool),
    Malformed,
    MissingKey(&'static str),
    EmptyThemes,
    TooMany,
    MalformedEntry(usize),
    Unrecognized,
}

pub struct ParserCase {
    pub label: &'static str,
    /// `Some(n)` for the coding prompt with `n` codes requested, `None` for a verdict.
    pub n_codes: Option<usize>,
    pub text: String,
    pub expect: Expect,
}

fn themes(n: usize) -> String {
    let entries: Vec<String> = (0..n)
        .map(|i| {
            format!(
                r#"{{"name": "Theme {i}", "description": "About {i}", "quote": "We said {i}"}}"#
            )
        })
        .collect();
    format!(r#"{{"Themes": [{}]}}"#, entries.join(", "))
}

pub fn parser_cases() -> Vec<ParserCase> {
    let codes = |label, text: String, expect| ParserCase {
        label,
        n_codes: Some(15),
        text,
        expect,
    };
    let verdict = |label, text: &str, expect| ParserCase {
        label,
        n_codes: None,
        text: text.to_string(),
        expect,
    };
    vec![
        codes("fenced json", format!("```json\n{}\n```", themes(15)), Expect::Codes(15)),
        codes(
            "prose around json",
            format!("Sure! Here are the themes:\n{}\nLet me know.", themes(12)),
            Expect::Codes(12),
        ),
        codes("sixteen entries", themes(16), Expect::Codes(16)),
        codes("seventeen entries", themes(17), Expect::TooMany),
        codes(
            "truncated json",
            themes(15)[..200].to_string(),
            Expect::Malformed,
        ),
        codes("no json at all", "I could not find any themes.".into(), Expect::Malformed),
        codes(
            "missing Themes key",
            r#"{"themes_list": [{"name": "a"}]}"#.into(),
            Expect::MissingKey("Themes"),
        ),
        codes("empty Themes", r#"{"Themes": []}"#.into(), Expect::EmptyThemes),
        codes(
            "entry without name",
            r#"{"Themes": [{"name": "a"}, {"description": "no name"}]}"#.into(),
            Expect::MalformedEntry(1),
        ),
        codes(
            "Themes not an array",
            r#"{"Themes": "a, b, c"}"#.into(),
            Expect::Malformed,
        ),
        codes(
            "aliased keys",
            r#"{"themes": [{"Theme": "Trust", "Desc": "Trust in team", "Quotes": ["we", "trust"]}]}"#
                .into(),
            Expect::Codes(1),
        ),
        verdict("string true", r#"{"value_in_cumulative_u": "true"}"#, Expect::Verdict(true)),
        verdict("string false", r#"{"value_in_cumulative_u": "false"}"#, Expect::Verdict(false)),
        verdict("capitalised True", r#"{"value_in_cumulative_u": "True"}"#, Expect::Verdict(true)),
        verdict("native boolean", r#"{"value_in_cumulative_u": false}"#, Expect::Verdict(false)),
        verdict(
            "fenced verdict",
            "```json\n{\"value_in_cumulative_u\": \"true\"}\n```",
            Expect::Verdict(true),
        ),
        verdict("maybe", r#"{"value_in_cumulative_u": "maybe"}"#, Expect::Unrecognized),
        verdict("numeric verdict", r#"{"value_in_cumulative_u": 1}"#, Expect::Unrecognized),
        verdict(
            "missing verdict key",
            r#"{"answer": "true"}"#,
            Expect::MissingKey("value_in_cumulative_u"),
        ),
        verdict("bare word", "true", Expect::Malformed),
        verdict("truncated verdict", r#"{"value_in_cumulative_u": "tr"#, Expect::Malformed),
    ]
}

/// What the parser actually made of a case.
pub fn classify(case: &ParserCase) -> Expect {
    use its_meter::gateway::{parse_codes_response, parse_dedup_response};
    let raw = RawCompletion::replayed(case.text.clone());
    let outcome = match case.n_codes {
        Some(n) => parse_codes_response(&raw, n, "i01").map(|c| Expect::Codes(c.len())),
        None => parse_dedup_response(&raw).map(Expect::Verdict),
    };
    match outcome {
        Ok(e) => e,
        Err(GatewayError::MalformedResponse(_)) => Expect::Malformed,
        Err(GatewayError::MissingKey(k)) if k == "Themes" => Expect::MissingKey("Themes"),
        Err(GatewayError::MissingKey(k)) if k == "value_in_cumulative_u" => {
            Expect::MissingKey("value_in_cumulative_u")
        }
        Err(GatewayError::EmptyThemes) => Expect::EmptyThemes,
        Err(GatewayError::TooManyThemes { .. }) => Expect::TooMany,
        Err(GatewayError::MalformedEntry(i)) => Expect::MalformedEntry(i),
        Err(GatewayError::UnrecognizedVerdict(_)) => Expect::Unrecognized,
        Err(other) => panic!("{}: unexpected error {other}", case.label),
    }
}

// ---------------------------------------------------------------------------
// Codebook properties

/// A random corpus: per interview, the concept label of each code.
pub type Plan = Vec<Vec<u8>>;

pub fn plan_codes(plan: &Plan) -> Vec<Vec<Code>> {
    plan.iter()
        .enumerate()
        .map(|(i, concepts)| {
            concepts
                .iter()
                .enumerate()
                .map(|(j, c)| Code {
                    name: format!("concept {c}"),
                    description: format!("variant {i}.{j}"),
                    quote: String::new(),
                    interview_id: format!("i{:02}", i + 1),
                    index_in_interview: j,
                })
                .collect()
        })
        .collect()
}

fn concept_of(text: &str) -> &str {
    text.split(" - ").next().unwrap_or(text)
}

/// A judge that depends only on the candidate and the codebook as a set.
/// `salt == 0` compares concepts; otherwise verdicts are pseudo-random.
pub fn set_judge(salt: u64) -> impl Fn(&str, &[String]) -> Result<bool, GatewayError> + Sync {
    move |candidate: &str, codebook: &[String]| {
        if salt == 0 {
            let target = concept_of(candidate);
            return Ok(codebook.iter().any(|c| concept_of(c) == target));
        }
        let mut sorted: Vec<&String> = codebook.iter().collect();
        sorted.sort();
        let mut h = DefaultHasher::new();
        (salt, candidate, sorted).hash(&mut h);
        Ok(h.finish().is_multiple_of(3))
    }
}

pub fn corpus_of(plan: &Plan) -> Corpus {
    Corpus {
        name: "prop".into(),
        interviews: (0..plan.len())
            .map(|i| Interview {
                id: format!("i{:02}", i + 1),
                ordinal: i + 1,
                text: format!("transcript number {}", i + 1),
                source_path: String::new(),
            })
            .collect(),
    }
}

/// Step invariants over a full pipeline run.
pub fn check_monotone(plan: &Plan, salt: u64) -> Result<(), String> {
    let codes = plan_codes(plan);
    let coder = |interview: &Interview, _n: usize| -> Result<Vec<Code>, GatewayError> {
        Ok(codes[interview.ordinal - 1].clone())
    };
    let judge = set_judge(salt);
    let (state, series) = run_pipeline(
        &corpus_of(plan),
        &coder,
        &judge,
        &PipelineConfig::default(),
        &NoCheckpoint,
        None,
    )
    .map_err(|e| e.to_string())?;
    let mut prev = (0, 0);
    for (p, tally) in series.points.iter().zip(&state.per_interview) {
        if p.unique_after > p.total_after {
            return Err(format!(
                "unique {} > total {} at {}",
                p.unique_after, p.total_after, p.ordinal
            ));
        }
        if p.total_after < prev.0 || p.unique_after < prev.1 {
            return Err(format!("series decreased at {}", p.ordinal));
        }
        if tally.accepted > tally.generated {
            return Err(format!("accepted > generated at {}", p.ordinal));
        }
        if p.unique_after - prev.1 != tally.accepted || p.total_after - prev.0 != tally.generated {
            return Err(format!("series and tallies disagree at {}", p.ordinal));
        }
        prev = (p.total_after, p.unique_after);
    }
    Ok(())
}

/// Permuting codes within each interview leaves the accepted set unchanged.
pub fn check_permutation(plan: &Plan, salt: u64, perm_seed: u64) -> Result<(), String> {
    let codes = plan_codes(plan);
    let judge = set_judge(salt);
    let mut state = CodebookState::bootstrap(codes[0].clone()).map_err(|e| e.to_string())?;
    for (k, interview) in codes.iter().enumerate().skip(1) {
        let mut shuffled = interview.clone();
        let mut h = DefaultHasher::new();
        (perm_seed, k).hash(&mut h);
        let mut x = h.finish();
        for i in (1..shuffled.len()).rev() {
            x = x
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            shuffled.swap(i, (x >> 33) as usize % (i + 1));
        }
        let mut a = state.clone();
        let mut b = state.clone();
        a.reduce_interview(interview.clone(), &judge, false)
            .map_err(|e| e.to_string())?;
        b.reduce_interview(shuffled, &judge, true)
            .map_err(|e| e.to_string())?;
        let set = |s: &CodebookState| s.cumulative_unique.iter().cloned().collect::<HashSet<_>>();
        if set(&a) != set(&b) {
            return Err(format!("accepted set changed at interview {}", k + 1));
        }
        state = a;
    }
    Ok(())
}

fn hash_verdict(salt: u64, text: &str) -> bool {
    let mut h = DefaultHasher::new();
    (salt, text).hash(&mut h);
    h.finish().is_multiple_of(3)
}

/// Record a run through a scripted model, replay it, compare bytes.
pub fn check_replay_determinism(plan: &Plan, salt: u64) -> Result<(), String> {
    let corpus = corpus_of(plan);
    let codes = plan_codes(plan);
    let settings = ModelSettings::default();
    let config = PipelineConfig::default();
    let coding: HashMap<String, String> = corpus
        .iter()
        .zip(&codes)
        .map(|(interview, codes)| {
            let prompt = build_initial_coding_prompt(&interview.text, config.n_codes, &settings);
            (prompt.user_text, render_codes_response(codes))
        })
        .collect();
    let model = FnProvider(move |request: &PromptRequest| {
        let text = match coding.get(&request.user_text) {
            Some(t) => t.clone(),
            None => format!(
                r#"{{"value_in_cumulative_u": "{}"}}"#,
                hash_verdict(salt, &request.user_text)
            ),
        };
        Ok(RawCompletion::replayed(text))
    });
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let recorder = RecordingProvider::new(model, dir.path()).map_err(|e| e.to_string())?;
    let live = Gateway::new(recorder, settings.clone());
    let (s1, r1) = run_pipeline(&corpus, &live, &live, &config, &NoCheckpoint, None)
        .map_err(|e| e.to_string())?;
    let replay = Gateway::new(
        ReplayProvider::open(dir.path()).map_err(|e| e.to_string())?,
        settings,
    );
    let (s2, r2) = run_pipeline(&corpus, &replay, &replay, &config, &NoCheckpoint, None)
        .map_err(|e| e.to_string())?;
    let bytes = |s: &CodebookState| serde_json::to_vec(s).expect("serializes");
    if bytes(&s1) != bytes(&s2) || r1 != r2 {
        return Err("replayed state differs from recorded state".into());
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Simulation oracle

/// Mean unique count after each round of `draw` distinct codes from `space`,
/// by propagating the exact distribution of the unique count (hypergeometric
/// transitions). Independent of the closed form in the library.
pub fn markov_mean_unique(space: usize, iterations: usize, draw: usize) -> Vec<f64> {
    // ln C(n, k)
    let ln_fact: Vec<f64> = std::iter::once(0.0)
        .chain((1..=space).scan(0.0, |acc, k| {
            *acc += (k as f64).ln();
            Some(*acc)
        }))
        .collect();
    let ln_choose = |n: usize, k: usize| ln_fact[n] - ln_fact[k] - ln_fact[n - k];
    let mut dist = vec![0.0; space + 1];
    dist[0] = 1.0;
    let mut means = Vec::with_capacity(iterations);
    for _ in 0..iterations {
        let mut next = vec![0.0; space + 1];
        for (u, &p) in dist.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            // new codes j: choose j from the unseen space - u, draw - j from the seen u
            for j in 0..=draw.min(space - u) {
                if draw - j > u {
                    continue;
                }
                let ln_p =
                    ln_choose(space - u, j) + ln_choose(u, draw - j) - ln_choose(space, draw);
                next[u + j] += p * ln_p.exp();
            }
        }
        dist = next;
        means.push(dist.iter().enumerate().map(|(u, p)| u as f64 * p).sum());
    }
    means
}
