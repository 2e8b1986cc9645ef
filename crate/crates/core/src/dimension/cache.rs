use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

/// Bumped whenever the spectral engine changes in a way that could alter
/// stored enclosures.
pub const ENGINE_VERSION: &str = "dyadic-spectral/1";

/// A stored Perron value enclosure and the tolerance it was computed for.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CachedEnclosure {
    pub lower: f64,
    pub upper: f64,
    pub tol: f64,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: String,
    entries: BTreeMap<String, CachedEnclosure>,
}

/// Memo of spectral enclosures keyed by the window word, shared across
/// worker threads and optionally persisted as JSON.
#[derive(Debug, Default)]
pub struct SpectralCache {
    entries: Mutex<BTreeMap<String, CachedEnclosure>>,
    computed: AtomicUsize,
    hits: AtomicUsize,
}

impl SpectralCache {
    pub fn new() -> SpectralCache {
        SpectralCache::default()
    }

    /// Reads a cache file. A missing file, a different engine version or an
    /// unreadable body all give an empty cache.
    pub fn load(path: &Path) -> SpectralCache {
        let entries = fs::read_to_string(path)
            .ok()
            .and_then(|text| serde_json::from_str::<CacheFile>(&text).ok())
            .filter(|file| file.version == ENGINE_VERSION)
            .map(|file| file.entries)
            .unwrap_or_default();
        SpectralCache {
            entries: Mutex::new(entries),
            ..SpectralCache::default()
        }
    }

    pub fn save(&self, path: &Path) -> io::Result<()> {
        let file = CacheFile {
            version: ENGINE_VERSION.to_string(),
            entries: self.entries.lock().expect("cache lock").clone(),
        };
        let text = serde_json::to_string_pretty(&file).map_err(io::Error::other)?;
        fs::write(path, text + "\n")
    }

    /// Cached enclosure for `key` if one at least as tight as `tol` exists,
    /// otherwise `compute` runs and its result is stored.
    pub fn get_or_compute<E>(
        &self,
        key: &str,
        tol: f64,
        compute: impl FnOnce() -> Result<(f64, f64), E>,
    ) -> Result<(f64, f64), E> {
        if let Some(e) = self.entries.lock().expect("cache lock").get(key) {
            if e.tol <= tol {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return Ok((e.lower, e.upper));
            }
        }
        let (lower, upper) = compute()?;
        self.computed.fetch_add(1, Ordering::Relaxed);
        self.entries
            .lock()
            .expect("cache lock")
            .insert(key.to_string(), CachedEnclosure { lower, upper, tol });
        Ok((lower, upper))
    }

    /// Spectral computations performed through this cache.
    pub fn computed(&self) -> usize {
        self.computed.load(Ordering::Relaxed)
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
