//! On-disk result cache. One JSON file per key, written atomically.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

/// Version stamp stored in every entry. Bump it whenever a payload schema or
/// an algorithm changes output.
pub const CACHE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+2");

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "MSW_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct Cache {
    dir: Option<PathBuf>,
    version: String,
}

impl Cache {
    /// A cache rooted at `dir`.
    pub fn at(dir: impl Into<PathBuf>) -> Cache {
        Cache {
            dir: Some(dir.into()),
            version: CACHE_VERSION.to_string(),
        }
    }

    /// A cache that never stores anything.
    pub fn disabled() -> Cache {
        Cache {
            dir: None,
            version: CACHE_VERSION.to_string(),
        }
    }

    /// `$MSW_CACHE_DIR`, else the per-user cache directory, else disabled.
    pub fn from_env() -> Cache {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Cache::at(d),
            _ => dirs::cache_dir()
                .map(|d| Cache::at(d.join("msw")))
                .unwrap_or_else(Cache::disabled),
        }
    }

    /// Same location, different version stamp.
    pub fn with_version(mut self, version: impl Into<String>) -> Cache {
        self.version = version.into();
        self
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}.json", file_stem(key))))
    }

    /// Returns the stored payload for `key` on a version-matched hit.
    /// Otherwise runs `compute`, stores its payload and returns it. Unreadable
    /// entries produce a warning on `warn` and are overwritten.
    pub fn get_or_compute<E>(
        &self,
        key: &str,
        warn: &mut dyn Write,
        compute: impl FnOnce() -> Result<Value, E>,
    ) -> Result<Value, E> {
        let Some(path) = self.path_for(key) else {
            return compute();
        };
        if let Ok(text) = fs::read_to_string(&path) {
            match serde_json::from_str::<Value>(&text) {
                Ok(entry) if entry["key"] == key && entry.get("payload").is_some() => {
                    if entry["version"] == self.version.as_str() {
                        return Ok(entry["payload"].clone());
                    }
                }
                _ => {
                    let _ = writeln!(warn, "warning: ignoring corrupt cache entry {}", path.display());
                }
            }
        }
        let payload = compute()?;
        if let Err(e) = self.store(&path, key, &payload) {
            let _ = writeln!(warn, "warning: could not write cache entry {}: {e}", path.display());
        }
        Ok(payload)
    }

    fn store(&self, path: &Path, key: &str, payload: &Value) -> std::io::Result<()> {
        let dir = path.parent().expect("cache entries live in a directory");
        fs::create_dir_all(dir)?;
        let entry = json!({"version": self.version, "key": key, "payload": payload});
        let tmp = dir.join(format!(
            ".{}.{}.tmp",
            path.file_name().unwrap().to_string_lossy(),
            std::process::id()
        ));
        fs::write(&tmp, serde_json::to_vec(&entry).expect("serializable"))?;
        fs::rename(&tmp, path).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }
}

/// Keys are short ASCII strings like `htilde mu=[2,1]`; keep them readable.
fn file_stem(key: &str) -> String {
    key.chars()
        .filter_map(|c| match c {
            'a'..='z' | 'A'..='Z' | '0'..='9' | '-' | '=' => Some(c),
            ',' => Some('.'),
            ' ' => Some('_'),
            _ => None,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stems_are_filesystem_safe() {
        assert_eq!(file_stem("htilde mu=[2,1]"), "htilde_mu=2.1");
        assert_eq!(file_stem("jpower n=3 d=2 dx=5 dy=5"), "jpower_n=3_d=2_dx=5_dy=5");
    }
}
