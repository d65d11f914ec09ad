//! Content-addressed result cache: one JSON file per key, keys are SHA-256
//! hashes of the canonical operation serialization. Stores are atomic
//! (temp file + rename); corrupt entries are treated as misses and
//! overwritten on the next store.

use crate::error::Result;
use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

#[derive(Debug)]
pub struct Cache {
    dir: PathBuf,
    hits: AtomicU64,
    misses: AtomicU64,
}

/// Canonical cache key for an ideal-level operation: the operation name, the
/// ring descriptor, the sorted generator strings and any extra parameters.
pub fn operation_key(
    operation: &str,
    ring_descriptor: &str,
    generators: &[String],
    params: &str,
) -> String {
    let mut sorted = generators.to_vec();
    sorted.sort();
    let payload = format!(
        "op={operation}\nring={ring_descriptor}\ngens={}\nparams={params}",
        sorted.join(";")
    );
    let mut hasher = Sha256::new();
    hasher.update(payload.as_bytes());
    hex::encode(hasher.finalize())
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir)?;
        Ok(Cache { dir, hits: AtomicU64::new(0), misses: AtomicU64::new(0) })
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    pub fn lookup<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let path = self.path_for(key);
        let bytes = match std::fs::read(&path) {
            Ok(b) => b,
            Err(_) => {
                self.misses.fetch_add(1, Ordering::Relaxed);
                return None;
            }
        };
        match serde_json::from_slice(&bytes) {
            Ok(v) => {
                self.hits.fetch_add(1, Ordering::Relaxed);
                Some(v)
            }
            Err(_) => {
                // corrupt entry: treat as a miss, the next store overwrites
                self.misses.fetch_add(1, Ordering::Relaxed);
                None
            }
        }
    }

    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        let path = self.path_for(key);
        let tmp = self.dir.join(format!(".{key}.tmp-{}", std::process::id()));
        std::fs::write(&tmp, serde_json::to_vec_pretty(value)?.as_slice())?;
        std::fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn get_or_compute<T, F>(&self, key: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if let Some(hit) = self.lookup::<T>(key) {
            return Ok(hit);
        }
        let value = compute()?;
        self.store(key, &value)?;
        Ok(value)
    }
}

impl From<serde_json::Error> for crate::error::Error {
    fn from(e: serde_json::Error) -> Self {
        crate::error::Error::Parse(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hit_after_store_and_corrupt_recovery() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let key = operation_key("regularity", "n=3;field=q;order=degrevlex", &["x1".into()], "s=1");
        assert!(cache.lookup::<i64>(&key).is_none());
        cache.store(&key, &42i64).unwrap();
        assert_eq!(cache.lookup::<i64>(&key), Some(42));
        assert_eq!(cache.hits(), 1);
        // corrupt the entry
        std::fs::write(cache.path_for(&key), b"not json").unwrap();
        assert!(cache.lookup::<i64>(&key).is_none());
        let v = cache.get_or_compute(&key, || Ok(7i64)).unwrap();
        assert_eq!(v, 7);
        assert_eq!(cache.lookup::<i64>(&key), Some(7));
    }

    #[test]
    fn keys_separate_fields_and_orders() {
        let a = operation_key("reg", "n=3;field=q;order=degrevlex", &["x1".into()], "");
        let b = operation_key("reg", "n=3;field=fp:32003;order=degrevlex", &["x1".into()], "");
        assert_ne!(a, b);
        // generator order does not matter
        let c = operation_key("reg", "r", &["a".into(), "b".into()], "");
        let d = operation_key("reg", "r", &["b".into(), "a".into()], "");
        assert_eq!(c, d);
    }
}
