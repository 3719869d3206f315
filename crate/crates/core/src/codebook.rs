//! Incremental codebook construction.
//!
//! Interview 1's codes seed the unique codebook. Every later interview is
//! coded, then each of its codes is judged against the unique codebook as it
//! stood *before* that interview; codes judged new are appended in their
//! original order once all judgments are in.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{Corpus, Interview};
use crate::gateway::GatewayError;
use crate::metrics::SaturationSeries;

#[derive(Debug, Error)]
pub enum CodebookError {
    #[error("no codes to add")]
    EmptyCodeList,
    #[error("the unique codebook has not been bootstrapped")]
    NotBootstrapped,
    #[error("judging code {code:?} from interview {interview_id} failed: {source}")]
    Judge {
        interview_id: String,
        code: String,
        #[source]
        source: GatewayError,
    },
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("coding interview {interview_id} failed: {source}")]
    Coding {
        interview_id: String,
        #[source]
        source: GatewayError,
    },
    #[error("interview {interview_id} produced no codes")]
    NoCodes { interview_id: String },
    #[error(transparent)]
    Codebook(#[from] CodebookError),
    #[error("checkpoint failed: {0}")]
    Checkpoint(#[from] std::io::Error),
    #[error("resume state lists interview {found} at position {ordinal}, corpus has {expected}")]
    ResumeMismatch {
        ordinal: usize,
        expected: String,
        found: String,
    },
}

/// One initial code.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Code {
    pub name: String,
    pub description: String,
    pub quote: String,
    pub interview_id: String,
    pub index_in_interview: usize,
}

impl Code {
    /// `name - description`, the form the dedup prompt and embeddings see.
    pub fn codebook_text(&self) -> String {
        format!("{} - {}", self.name, self.description)
    }

    /// Stable identifier within a run: `<interview_id>#<index>`.
    pub fn code_id(&self) -> String {
        format!("{}#{}", self.interview_id, self.index_in_interview)
    }
}

/// Codes for one interview.
pub trait InitialCoder: Sync {
    fn code_interview(
        &self,
        interview: &Interview,
        n_codes: usize,
    ) -> Result<Vec<Code>, GatewayError>;
}

impl<F> InitialCoder for F
where
    F: Fn(&Interview, usize) -> Result<Vec<Code>, GatewayError> + Sync,
{
    fn code_interview(
        &self,
        interview: &Interview,
        n_codes: usize,
    ) -> Result<Vec<Code>, GatewayError> {
        self(interview, n_codes)
    }
}

/// Same-meaning check: `true` when `candidate` repeats an entry of `codebook`.
pub trait Judge: Sync {
    fn is_duplicate(&self, candidate: &str, codebook: &[String]) -> Result<bool, GatewayError>;
}

impl<F> Judge for F
where
    F: Fn(&str, &[String]) -> Result<bool, GatewayError> + Sync,
{
    fn is_duplicate(&self, candidate: &str, codebook: &[String]) -> Result<bool, GatewayError> {
        self(candidate, codebook)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterviewTally {
    pub interview_id: String,
    pub generated: usize,
    pub accepted: usize,
}

impl InterviewTally {
    pub fn discarded(&self) -> usize {
        self.generated - self.accepted
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodebookState {
    pub cumulative_total: Vec<Code>,
    pub cumulative_unique: Vec<Code>,
    pub per_interview: Vec<InterviewTally>,
}

impl CodebookState {
    /// Seeds both codebooks with the first interview's codes.
    pub fn bootstrap(first_interview_codes: Vec<Code>) -> Result<Self, CodebookError> {
        let first = first_interview_codes
            .first()
            .ok_or(CodebookError::EmptyCodeList)?;
        let tally = InterviewTally {
            interview_id: first.interview_id.clone(),
            generated: first_interview_codes.len(),
            accepted: first_interview_codes.len(),
        };
        Ok(Self {
            cumulative_unique: first_interview_codes.clone(),
            cumulative_total: first_interview_codes,
            per_interview: vec![tally],
        })
    }

    pub fn is_bootstrapped(&self) -> bool {
        !self.per_interview.is_empty()
    }

    pub fn interviews_done(&self) -> usize {
        self.per_interview.len()
    }

    pub fn total_count(&self) -> usize {
        self.cumulative_total.len()
    }

    pub fn unique_count(&self) -> usize {
        self.cumulative_unique.len()
    }

    pub fn unique_texts(&self) -> Vec<String> {
        self.cumulative_unique
            .iter()
            .map(Code::codebook_text)
            .collect()
    }

    /// 1-based position of the interview that contributed `code`.
    pub fn accepted_at(&self, code: &Code) -> Option<usize> {
        self.per_interview
            .iter()
            .position(|t| t.interview_id == code.interview_id)
            .map(|i| i + 1)
    }

    /// Judges `new_codes` against the frozen unique codebook and folds them
    /// in. On error the state is left untouched.
    ///
    /// Judgments run on the rayon pool when `parallel` is set; results are
    /// merged back in code order either way.
    pub fn reduce_interview(
        &mut self,
        new_codes: Vec<Code>,
        judge: &dyn Judge,
        parallel: bool,
    ) -> Result<&InterviewTally, CodebookError> {
        if !self.is_bootstrapped() {
            return Err(CodebookError::NotBootstrapped);
        }
        let interview_id = new_codes
            .first()
            .ok_or(CodebookError::EmptyCodeList)?
            .interview_id
            .clone();
        let frozen = self.unique_texts();
        let judge_one = |code: &Code| {
            judge
                .is_duplicate(&code.codebook_text(), &frozen)
                .map_err(|source| CodebookError::Judge {
                    interview_id: code.interview_id.clone(),
                    code: code.codebook_text(),
                    source,
                })
        };
        let verdicts: Vec<bool> = if parallel {
            new_codes
                .par_iter()
                .map(judge_one)
                .collect::<Result<_, _>>()?
        } else {
            new_codes.iter().map(judge_one).collect::<Result<_, _>>()?
        };

        let generated = new_codes.len();
        let mut accepted = 0;
        for (code, duplicate) in new_codes.iter().zip(&verdicts) {
            if !duplicate {
                self.cumulative_unique.push(code.clone());
                accepted += 1;
            }
        }
        self.cumulative_total.extend(new_codes);
        self.per_interview.push(InterviewTally {
            interview_id,
            generated,
            accepted,
        });
        Ok(self.per_interview.last().expect("just pushed"))
    }

    /// Cumulative (total, unique) after each interview.
    pub fn series(&self) -> SaturationSeries {
        let increments: Vec<_> = self
            .per_interview
            .iter()
            .map(|t| (t.generated, t.accepted))
            .collect();
        SaturationSeries::from_increments(&increments)
    }
}

/// Seeds a codebook from the first interview's codes.
pub fn bootstrap_unique(first_interview_codes: Vec<Code>) -> Result<CodebookState, CodebookError> {
    CodebookState::bootstrap(first_interview_codes)
}

/// Baseline mode: one sequential pass over every code after all interviews
/// are coded. Each code is judged against the codes accepted so far and the
/// first occurrence is kept.
pub fn reduce_a_posteriori(
    all_codes: &[Code],
    judge: &dyn Judge,
) -> Result<Vec<Code>, CodebookError> {
    let (first, rest) = all_codes
        .split_first()
        .ok_or(CodebookError::EmptyCodeList)?;
    let mut accepted = vec![first.clone()];
    let mut texts = vec![first.codebook_text()];
    for code in rest {
        let text = code.codebook_text();
        let duplicate =
            judge
                .is_duplicate(&text, &texts)
                .map_err(|source| CodebookError::Judge {
                    interview_id: code.interview_id.clone(),
                    code: text.clone(),
                    source,
                })?;
        if !duplicate {
            accepted.push(code.clone());
            texts.push(text);
        }
    }
    Ok(accepted)
}

/// Persistence hooks used by [`run_pipeline`] for crash resumability.
pub trait Checkpoint {
    /// Raw codes for an interview, written before reduction.
    fn save_codes(&self, ordinal: usize, codes: &[Code]) -> std::io::Result<()>;
    /// Codes saved by an earlier, interrupted run.
    fn load_codes(&self, ordinal: usize) -> std::io::Result<Option<Vec<Code>>>;
    /// State after an interview has been fully reduced.
    fn save_state(&self, ordinal: usize, state: &CodebookState) -> std::io::Result<()>;
}

/// A checkpoint that stores nothing.
pub struct NoCheckpoint;

impl Checkpoint for NoCheckpoint {
    fn save_codes(&self, _: usize, _: &[Code]) -> std::io::Result<()> {
        Ok(())
    }

    fn load_codes(&self, _: usize) -> std::io::Result<Option<Vec<Code>>> {
        Ok(None)
    }

    fn save_state(&self, _: usize, _: &CodebookState) -> std::io::Result<()> {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineConfig {
    /// Codes requested per interview.
    pub n_codes: usize,
    /// Judge one interview's codes concurrently.
    pub parallel_judgments: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            n_codes: 15,
            parallel_judgments: true,
        }
    }
}

/// Codes every interview in order and builds both codebooks.
///
/// `resume` continues from a previously checkpointed state; its interview
/// ids must match the corpus prefix.
pub fn run_pipeline(
    corpus: &Corpus,
    coder: &dyn InitialCoder,
    judge: &dyn Judge,
    config: &PipelineConfig,
    checkpoint: &dyn Checkpoint,
    resume: Option<CodebookState>,
) -> Result<(CodebookState, SaturationSeries), PipelineError> {
    if corpus.is_empty() {
        return Err(PipelineError::EmptyCorpus);
    }
    let mut state = resume.unwrap_or_default();
    for (i, (tally, interview)) in state.per_interview.iter().zip(corpus.iter()).enumerate() {
        if tally.interview_id != interview.id {
            return Err(PipelineError::ResumeMismatch {
                ordinal: i + 1,
                expected: interview.id.clone(),
                found: tally.interview_id.clone(),
            });
        }
    }
    if state.interviews_done() > corpus.len() {
        return Err(PipelineError::ResumeMismatch {
            ordinal: state.interviews_done(),
            expected: "<end of corpus>".into(),
            found: state
                .per_interview
                .last()
                .expect("non-empty")
                .interview_id
                .clone(),
        });
    }

    for interview in corpus.iter().skip(state.interviews_done()) {
        let codes = match checkpoint.load_codes(interview.ordinal)? {
            Some(codes) => {
                log::info!("reusing saved codes for interview {}", interview.id);
                codes
            }
            None => {
                let codes = coder
                    .code_interview(interview, config.n_codes)
                    .map_err(|source| PipelineError::Coding {
                        interview_id: interview.id.clone(),
                        source,
                    })?;
                checkpoint.save_codes(interview.ordinal, &codes)?;
                codes
            }
        };
        if codes.is_empty() {
            return Err(PipelineError::NoCodes {
                interview_id: interview.id.clone(),
            });
        }
        if state.is_bootstrapped() {
            let tally = state.reduce_interview(codes, judge, config.parallel_judgments)?;
            log::info!(
                "interview {} ({}): {} codes, {} new",
                interview.ordinal,
                interview.id,
                tally.generated,
                tally.accepted
            );
        } else {
            state = CodebookState::bootstrap(codes)?;
            log::info!(
                "interview {} ({}): bootstrapped with {} codes",
                interview.ordinal,
                interview.id,
                state.unique_count()
            );
        }
        checkpoint.save_state(interview.ordinal, &state)?;
    }
    let series = state.series();
    Ok((state, series))
}
