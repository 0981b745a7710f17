//! On-disk memo of partition numbers.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::enumeration::{count_p, p_memo_snapshot, preload_p};

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    p: Vec<String>,
}

/// What happened when a cache file was read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadOutcome {
    Missing,
    Loaded(usize),
    /// The file exists but could not be used; it will be rewritten.
    Rejected(String),
}

#[derive(Debug, thiserror::Error)]
#[error("cache {path}: {source}")]
pub struct CacheIoError {
    pub path: PathBuf,
    #[source]
    pub source: io::Error,
}

fn io_err(path: &Path, source: io::Error) -> CacheIoError {
    CacheIoError {
        path: path.to_path_buf(),
        source,
    }
}

fn decode(text: &str) -> Result<Vec<BigInt>, String> {
    let file: CacheFile = serde_json::from_str(text).map_err(|e| format!("unreadable ({e})"))?;
    if file.version != CACHE_VERSION {
        return Err(format!("version {} is not {CACHE_VERSION}", file.version));
    }
    file.p
        .iter()
        .enumerate()
        .map(|(n, s)| s.parse::<BigInt>().map_err(|_| format!("entry {n} is not an integer")))
        .collect()
}

/// Reads `path` into the partition-number memo. Every value is checked
/// against the pentagonal recurrence, so a damaged file cannot change results.
pub fn load(path: &Path) -> Result<LoadOutcome, CacheIoError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(LoadOutcome::Missing),
        Err(e) => return Err(io_err(path, e)),
    };
    let values = match decode(&text) {
        Ok(v) => v,
        Err(reason) => return Ok(LoadOutcome::Rejected(reason)),
    };
    match preload_p(&values) {
        Ok(()) => Ok(LoadOutcome::Loaded(values.len())),
        Err(n) => Ok(LoadOutcome::Rejected(format!("entry {n} is not p({n})"))),
    }
}

/// Writes the current memo to `path`.
pub fn save(path: &Path) -> Result<usize, CacheIoError> {
    let values = p_memo_snapshot();
    let file = CacheFile {
        version: CACHE_VERSION,
        p: values.iter().map(BigInt::to_string).collect(),
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| io_err(path, e))?;
    }
    let text = serde_json::to_string(&file).expect("cache serializes");
    fs::write(path, text).map_err(|e| io_err(path, e))?;
    Ok(values.len())
}

/// Computes `p(0..=bound)` and writes the cache.
pub fn warm(path: &Path, bound: i64) -> Result<usize, CacheIoError> {
    count_p(bound);
    save(path)
}

/// Removes the cache file; a missing file is not an error.
pub fn clear(path: &Path) -> Result<bool, CacheIoError> {
    match fs::remove_file(path) {
        Ok(()) => Ok(true),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(false),
        Err(e) => Err(io_err(path, e)),
    }
}

/// Number of entries in the file, without touching the memo.
pub fn entries(path: &Path) -> Result<Option<Result<usize, String>>, CacheIoError> {
    match fs::read_to_string(path) {
        Ok(t) => Ok(Some(decode(&t).map(|v| v.len()))),
        Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(io_err(path, e)),
    }
}
