//! Interview transcripts: loading, ordering and context-window sizing.
//!
//! Each transcript file is one [`Interview`]. Files are coded whole, one at a
//! time, in the order fixed by an [`OrderSpec`].

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default characters-per-token ratio for the token heuristic.
pub const DEFAULT_CHARS_PER_TOKEN: f64 = 4.0;

/// Default context budget, in tokens, for a single coding request.
pub const DEFAULT_CONTEXT_BUDGET: usize = 16_000;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus directory {0} contains no transcript files")]
    CorpusEmpty(PathBuf),
    #[error("transcript {0} is unreadable or empty")]
    CorpusFileInvalid(PathBuf),
    #[error("order manifest references {0}, which is not a transcript in the corpus directory")]
    ManifestMismatch(String),
    #[error("order manifest lists {0} more than once")]
    ManifestDuplicate(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// One transcript unit fed to the coding prompt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interview {
    pub id: String,
    /// 1-based coding position.
    pub ordinal: usize,
    pub text: String,
    pub source_path: String,
}

impl Interview {
    pub fn char_count(&self) -> usize {
        self.text.chars().count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub name: String,
    pub interviews: Vec<Interview>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.interviews.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interviews.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interview> {
        self.interviews.iter()
    }

    pub fn ids(&self) -> Vec<String> {
        self.interviews.iter().map(|i| i.id.clone()).collect()
    }

    pub fn get(&self, ordinal: usize) -> Option<&Interview> {
        ordinal.checked_sub(1).and_then(|i| self.interviews.get(i))
    }
}

/// How interview ordinals are assigned.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum OrderSpec {
    /// Ascending file name.
    #[default]
    Lexicographic,
    /// One relative file name per line; line order is coding order.
    Manifest(PathBuf),
}

/// Loads a directory of transcripts into a [`Corpus`].
#[derive(Debug, Clone)]
pub struct CorpusLoader {
    extensions: Vec<String>,
    order: OrderSpec,
}

impl Default for CorpusLoader {
    fn default() -> Self {
        Self {
            extensions: vec!["txt".to_string()],
            order: OrderSpec::Lexicographic,
        }
    }
}

impl CorpusLoader {
    pub fn new(order: OrderSpec) -> Self {
        Self {
            order,
            ..Self::default()
        }
    }

    pub fn with_extensions<I, S>(mut self, extensions: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.extensions = extensions
            .into_iter()
            .map(|e| e.into().trim_start_matches('.').to_ascii_lowercase())
            .collect();
        self
    }

    fn matches_extension(&self, path: &Path) -> bool {
        path.extension()
            .and_then(|e| e.to_str())
            .map(|e| self.extensions.iter().any(|x| x.eq_ignore_ascii_case(e)))
            .unwrap_or(false)
    }

    pub fn load(&self, root: &Path) -> Result<Corpus, CorpusError> {
        let entries = fs::read_dir(root).map_err(|source| CorpusError::Io {
            path: root.to_path_buf(),
            source,
        })?;
        let mut files = Vec::new();
        for entry in entries {
            let entry = entry.map_err(|source| CorpusError::Io {
                path: root.to_path_buf(),
                source,
            })?;
            let path = entry.path();
            if path.is_file() && self.matches_extension(&path) {
                files.push(path);
            }
        }
        if files.is_empty() {
            return Err(CorpusError::CorpusEmpty(root.to_path_buf()));
        }
        files.sort();

        let ordered = match &self.order {
            OrderSpec::Lexicographic => files,
            OrderSpec::Manifest(manifest) => order_by_manifest(root, manifest, &files)?,
        };

        let interviews = ordered
            .into_iter()
            .enumerate()
            .map(|(i, path)| read_interview(&path, i + 1))
            .collect::<Result<Vec<_>, _>>()?;

        let name = root
            .file_name()
            .and_then(|n| n.to_str())
            .unwrap_or("corpus")
            .to_string();
        Ok(Corpus { name, interviews })
    }
}

/// Loads `root` with the default `.txt` extension set.
pub fn load_corpus(root: &Path, order: &OrderSpec) -> Result<Corpus, CorpusError> {
    CorpusLoader::new(order.clone()).load(root)
}

fn order_by_manifest(
    root: &Path,
    manifest: &Path,
    files: &[PathBuf],
) -> Result<Vec<PathBuf>, CorpusError> {
    let listing = fs::read_to_string(manifest).map_err(|source| CorpusError::Io {
        path: manifest.to_path_buf(),
        source,
    })?;
    let available: HashSet<&Path> = files.iter().map(PathBuf::as_path).collect();
    let mut seen = HashSet::new();
    let mut ordered = Vec::new();
    for line in listing.lines() {
        let name = line.trim();
        if name.is_empty() || name.starts_with('#') {
            continue;
        }
        let path = root.join(name);
        if !available.contains(path.as_path()) {
            return Err(CorpusError::ManifestMismatch(name.to_string()));
        }
        if !seen.insert(name.to_string()) {
            return Err(CorpusError::ManifestDuplicate(name.to_string()));
        }
        ordered.push(path);
    }
    if ordered.is_empty() {
        return Err(CorpusError::CorpusEmpty(root.to_path_buf()));
    }
    Ok(ordered)
}

fn read_interview(path: &Path, ordinal: usize) -> Result<Interview, CorpusError> {
    let text =
        fs::read_to_string(path).map_err(|_| CorpusError::CorpusFileInvalid(path.to_path_buf()))?;
    if text.trim().is_empty() {
        return Err(CorpusError::CorpusFileInvalid(path.to_path_buf()));
    }
    let id = path
        .file_stem()
        .and_then(|s| s.to_str())
        .ok_or_else(|| CorpusError::CorpusFileInvalid(path.to_path_buf()))?
        .to_string();
    Ok(Interview {
        id,
        ordinal,
        text,
        source_path: path.display().to_string(),
    })
}

/// Character-heuristic token estimate: `ceil(chars / chars_per_token)`.
///
/// `chars_per_token` must be positive.
pub fn estimate_tokens(interview: &Interview, chars_per_token: f64) -> usize {
    debug_assert!(chars_per_token > 0.0);
    (interview.char_count() as f64 / chars_per_token).ceil() as usize
}

/// An interview whose estimated size exceeds the context budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetOverrun {
    pub interview_id: String,
    pub estimated_tokens: usize,
    pub budget: usize,
}

/// Returns every interview over `budget` tokens and logs a warning for each.
/// Overruns never stop a run.
pub fn check_context_budget(
    corpus: &Corpus,
    chars_per_token: f64,
    budget: usize,
) -> Vec<BudgetOverrun> {
    corpus
        .iter()
        .filter_map(|interview| {
            let estimated_tokens = estimate_tokens(interview, chars_per_token);
            (estimated_tokens > budget).then(|| {
                log::warn!(
                    "interview {} is ~{} tokens, over the {} token context budget",
                    interview.id,
                    estimated_tokens,
                    budget
                );
                BudgetOverrun {
                    interview_id: interview.id.clone(),
                    estimated_tokens,
                    budget,
                }
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &Path, name: &str, body: &str) {
        fs::write(dir.join(name), body).unwrap();
    }

    fn interview(text: &str) -> Interview {
        Interview {
            id: "x".into(),
            ordinal: 1,
            text: text.into(),
            source_path: "x.txt".into(),
        }
    }

    #[test]
    fn loads_in_filename_order() {
        let dir = tempfile::tempdir().unwrap();
        for i in (1..=10).rev() {
            write(
                dir.path(),
                &format!("i{i:02}.txt"),
                &format!("interview {i}"),
            );
        }
        write(dir.path(), "notes.md", "ignored");
        let corpus = load_corpus(dir.path(), &OrderSpec::Lexicographic).unwrap();
        assert_eq!(corpus.len(), 10);
        for (n, interview) in corpus.iter().enumerate() {
            assert_eq!(interview.ordinal, n + 1);
            assert_eq!(interview.id, format!("i{:02}", n + 1));
        }
    }

    #[test]
    fn empty_directory_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        assert!(matches!(
            load_corpus(dir.path(), &OrderSpec::Lexicographic),
            Err(CorpusError::CorpusEmpty(_))
        ));
    }

    #[test]
    fn blank_file_is_invalid() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "fine");
        write(dir.path(), "b.txt", "  \n\t ");
        match load_corpus(dir.path(), &OrderSpec::Lexicographic) {
            Err(CorpusError::CorpusFileInvalid(p)) => assert!(p.ends_with("b.txt")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn manifest_overrides_order() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "alpha");
        write(dir.path(), "b.txt", "beta");
        let manifest = dir.path().join("order.lst");
        fs::write(&manifest, "b.txt\n\na.txt\n").unwrap();
        let corpus = load_corpus(dir.path(), &OrderSpec::Manifest(manifest)).unwrap();
        assert_eq!(corpus.ids(), vec!["b", "a"]);
        assert_eq!(corpus.get(1).unwrap().id, "b");
        assert_eq!(corpus.get(2).unwrap().id, "a");
    }

    #[test]
    fn manifest_with_missing_file() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "alpha");
        let manifest = dir.path().join("order.lst");
        fs::write(&manifest, "a.txt\nzzz.txt\n").unwrap();
        assert!(matches!(
            load_corpus(dir.path(), &OrderSpec::Manifest(manifest)),
            Err(CorpusError::ManifestMismatch(name)) if name == "zzz.txt"
        ));
    }

    #[test]
    fn custom_extensions() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.md", "alpha");
        write(dir.path(), "b.txt", "beta");
        let corpus = CorpusLoader::default()
            .with_extensions([".md"])
            .load(dir.path())
            .unwrap();
        assert_eq!(corpus.ids(), vec!["a"]);
    }

    #[test]
    fn token_estimate() {
        assert_eq!(estimate_tokens(&interview(&"x".repeat(4000)), 4.0), 1000);
        assert_eq!(estimate_tokens(&interview(&"x".repeat(4001)), 4.0), 1001);
        assert_eq!(
            estimate_tokens(&interview(&"x".repeat(70_000)), 4.0),
            17_500
        );
    }

    #[test]
    fn budget_overrun_is_reported() {
        let corpus = Corpus {
            name: "c".into(),
            interviews: vec![interview(&"x".repeat(70_000)), interview("short")],
        };
        let overruns = check_context_budget(&corpus, 4.0, DEFAULT_CONTEXT_BUDGET);
        assert_eq!(overruns.len(), 1);
        assert_eq!(overruns[0].estimated_tokens, 17_500);
    }
}
