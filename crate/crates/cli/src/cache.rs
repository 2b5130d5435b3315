//! Persistent memoization of expensive enumerations: one JSONL file per
//! record kind, each line a checksummed record. Corrupt or stale lines are
//! skipped with a warning and the value recomputed; IO failures degrade to a
//! warning, never a wrong answer.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheRecord {
    pub schema_version: u32,
    pub kind: String,
    pub key: String,
    pub payload: String,
    pub checksum: String,
}

pub fn checksum(payload: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(payload.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Self {
            dir: dir.to_path_buf(),
        })
    }

    fn file(&self, kind: &str) -> PathBuf {
        self.dir.join(format!("{kind}.jsonl"))
    }

    /// Valid records of the current schema version, in file order.
    fn load(&self, kind: &str) -> Vec<CacheRecord> {
        let Ok(text) = fs::read_to_string(self.file(kind)) else {
            return Vec::new();
        };
        let mut records = Vec::new();
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let record: CacheRecord = match serde_json::from_str(line) {
                Ok(r) => r,
                Err(_) => {
                    eprintln!("warning: skipping unparsable cache record in {kind}.jsonl");
                    continue;
                }
            };
            if record.schema_version != SCHEMA_VERSION {
                continue;
            }
            if record.kind != kind {
                eprintln!("warning: skipping misfiled cache record in {kind}.jsonl");
                continue;
            }
            if checksum(&record.payload) != record.checksum {
                eprintln!(
                    "warning: checksum mismatch for cache key '{}', recomputing",
                    record.key
                );
                continue;
            }
            records.push(record);
        }
        records
    }

    pub fn read(&self, kind: &str, key: &str) -> Option<String> {
        self.load(kind)
            .into_iter()
            .rev()
            .find(|r| r.key == key)
            .map(|r| r.payload)
    }

    /// Replaces any record under the same key; the whole file is rewritten
    /// to a temp path and renamed so readers never see a partial record.
    pub fn write(&self, kind: &str, key: &str, payload: &str) {
        let mut records: Vec<CacheRecord> =
            self.load(kind).into_iter().filter(|r| r.key != key).collect();
        records.push(CacheRecord {
            schema_version: SCHEMA_VERSION,
            kind: kind.to_string(),
            key: key.to_string(),
            payload: payload.to_string(),
            checksum: checksum(payload),
        });
        let mut text = String::new();
        for record in &records {
            match serde_json::to_string(record) {
                Ok(line) => {
                    text.push_str(&line);
                    text.push('\n');
                }
                Err(err) => eprintln!("warning: cache record serialization failed: {err}"),
            }
        }
        let tmp = self.dir.join(format!(".tmp-{kind}-{}", std::process::id()));
        if let Err(err) = fs::write(&tmp, &text).and_then(|_| fs::rename(&tmp, self.file(kind))) {
            eprintln!("warning: cache write failed: {err}");
            let _ = fs::remove_file(&tmp);
        }
    }
}
