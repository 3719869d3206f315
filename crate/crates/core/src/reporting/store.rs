//! On-disk checkpointing for `run --resume`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{
    interview_codes_path, read_codes_csv, read_json, write_codes_csv, write_json, ReportError,
};
use crate::codebook::{Checkpoint, Code, CodebookState};

/// Contents of `run_state.json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunState {
    pub last_completed_ordinal: usize,
    pub snapshot_path: PathBuf,
}

const SNAPSHOT: &str = "state/snapshot.json";

/// A run directory that records raw codes and reduced state as the pipeline
/// advances.
#[derive(Debug, Clone)]
pub struct RunStore {
    run_dir: PathBuf,
}

impl RunStore {
    /// Starts a fresh run. The directory must not exist yet.
    pub fn create(out: &Path, run_id: &str) -> Result<Self, ReportError> {
        let run_dir = out.join(run_id);
        if run_dir.exists() {
            return Err(ReportError::OutputExists(run_id.to_string()));
        }
        fs::create_dir_all(&run_dir).map_err(|e| ReportError::io(&run_dir, e))?;
        Ok(Self { run_dir })
    }

    /// Reopens an interrupted run, returning the last saved state if any.
    pub fn resume(out: &Path, run_id: &str) -> Result<(Self, Option<CodebookState>), ReportError> {
        let run_dir = out.join(run_id);
        if !run_dir.is_dir() {
            return Err(ReportError::io(
                &run_dir,
                std::io::Error::new(std::io::ErrorKind::NotFound, "no run to resume"),
            ));
        }
        if run_dir.join("manifest.json").exists() {
            return Err(ReportError::OutputExists(run_id.to_string()));
        }
        let store = Self { run_dir };
        let state = store.load_state()?;
        Ok((store, state))
    }

    pub fn run_dir(&self) -> &Path {
        &self.run_dir
    }

    fn load_state(&self) -> Result<Option<CodebookState>, ReportError> {
        let path = self.run_dir.join("run_state.json");
        if !path.exists() {
            return Ok(None);
        }
        let run_state: RunState = read_json(&path)?;
        let snapshot: CodebookState = read_json(&self.run_dir.join(&run_state.snapshot_path))?;
        if snapshot.interviews_done() != run_state.last_completed_ordinal {
            return Err(ReportError::format(
                &path,
                format!(
                    "snapshot holds {} interviews, run_state says {}",
                    snapshot.interviews_done(),
                    run_state.last_completed_ordinal
                ),
            ));
        }
        Ok(Some(snapshot))
    }
}

impl Checkpoint for RunStore {
    fn save_codes(&self, ordinal: usize, codes: &[Code]) -> std::io::Result<()> {
        Ok(write_codes_csv(
            &interview_codes_path(&self.run_dir, ordinal),
            codes,
        )?)
    }

    fn load_codes(&self, ordinal: usize) -> std::io::Result<Option<Vec<Code>>> {
        let path = interview_codes_path(&self.run_dir, ordinal);
        if !path.exists() {
            return Ok(None);
        }
        Ok(Some(read_codes_csv(&path)?))
    }

    fn save_state(&self, ordinal: usize, state: &CodebookState) -> std::io::Result<()> {
        // Snapshot first so run_state.json never points past what is on disk.
        write_json(&self.run_dir.join(SNAPSHOT), state)?;
        let run_state = RunState {
            last_completed_ordinal: ordinal,
            snapshot_path: PathBuf::from(SNAPSHOT),
        };
        Ok(write_json(
            &self.run_dir.join("run_state.json"),
            &run_state,
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(name: &str) -> Code {
        Code {
            name: name.into(),
            description: "d".into(),
            quote: String::new(),
            interview_id: "i1".into(),
            index_in_interview: 0,
        }
    }

    #[test]
    fn create_refuses_existing_dir() {
        let dir = tempfile::tempdir().unwrap();
        RunStore::create(dir.path(), "r").unwrap();
        assert!(matches!(
            RunStore::create(dir.path(), "r"),
            Err(ReportError::OutputExists(_))
        ));
    }

    #[test]
    fn state_survives_reopen() {
        let dir = tempfile::tempdir().unwrap();
        let store = RunStore::create(dir.path(), "r").unwrap();
        let state = CodebookState::bootstrap(vec![code("a")]).unwrap();
        store.save_codes(1, &[code("a")]).unwrap();
        store.save_state(1, &state).unwrap();
        let (store, loaded) = RunStore::resume(dir.path(), "r").unwrap();
        assert_eq!(loaded, Some(state));
        assert_eq!(store.load_codes(1).unwrap(), Some(vec![code("a")]));
        assert_eq!(store.load_codes(2).unwrap(), None);
    }
}
