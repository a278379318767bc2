//! Persistent result cache: one human-readable JSON file per key, laid out
//! as `cache_dir/kind/h…/k…/params.json`.
//!
//! Writers take a per-key lock file and replace atomically via a temp file;
//! a busy lock means another writer is active and this store is skipped.
//! Readers tolerate missing or stale keys. Entries holding witnesses are
//! re-validated through the engine before being served; entries that fail
//! re-validation are evicted. A lower-bound entry is only ever replaced by
//! one with a larger explored bound or an exact certificate.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    pub key: String,
    pub tool_version: String,
    pub created_at: u64,
    /// Monotone score of the explored bound, for the replacement rule.
    pub bound_score: i64,
    /// Whether the payload carries an exact certificate.
    pub exact: bool,
    pub payload: Value,
}

pub struct Cache {
    root: PathBuf,
    enabled: bool,
}

impl Cache {
    pub fn new(root: PathBuf, enabled: bool) -> Self {
        Cache { root, enabled }
    }

    pub fn enabled(&self) -> bool {
        self.enabled
    }

    pub fn entry_path(&self, kind: &str, h: &str, k: &str, slug: &str) -> PathBuf {
        self.root
            .join(kind)
            .join(h)
            .join(k)
            .join(format!("{slug}.json"))
    }

    /// Load the entry at `path` if it exists, parses, and matches `key` and
    /// the current tool version.
    pub fn load(&self, path: &Path, key: &str) -> Option<CacheEntry> {
        if !self.enabled {
            return None;
        }
        let text = fs::read_to_string(path).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.key != key || entry.tool_version != env!("CARGO_PKG_VERSION") {
            return None;
        }
        Some(entry)
    }

    pub fn evict(&self, path: &Path) {
        let _ = fs::remove_file(path);
    }

    /// Store under the replacement policy. Returns whether a write happened.
    pub fn store(&self, path: &Path, entry: &CacheEntry) -> bool {
        if !self.enabled {
            return false;
        }
        if let Some(existing) = self.load(path, &entry.key) {
            let upgrade = (!existing.exact && entry.exact)
                || (!existing.exact && !entry.exact && entry.bound_score > existing.bound_score);
            if !upgrade {
                return false;
            }
        }
        if let Some(dir) = path.parent() {
            if fs::create_dir_all(dir).is_err() {
                return false;
            }
        }
        let lock = path.with_extension("lock");
        let lock_file = fs::OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&lock);
        if lock_file.is_err() {
            return false; // another writer holds the key
        }
        let tmp = path.with_extension("tmp");
        let written = serde_json::to_string_pretty(entry)
            .ok()
            .and_then(|text| fs::write(&tmp, text).ok())
            .and_then(|_| fs::rename(&tmp, path).ok())
            .is_some();
        let _ = fs::remove_file(&lock);
        written
    }
}

pub fn now_unix() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

pub fn make_entry(key: &str, bound_score: i64, exact: bool, payload: Value) -> CacheEntry {
    CacheEntry {
        key: key.to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        created_at: now_unix(),
        bound_score,
        exact,
        payload,
    }
}
