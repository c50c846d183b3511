//! Persistent store of reference constants.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use eulerzeta::BigReal;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedConstant {
    pub name: String,
    pub value: String,
    pub precision_bits: usize,
    pub generator: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    constants: Vec<CachedConstant>,
}

/// Decimal digits stored for a `bits`-bit constant; enough to pin every bit.
pub fn stored_digits(bits: usize) -> usize {
    (bits as f64 * std::f64::consts::LOG10_2).floor() as usize + 3
}

#[derive(Debug)]
pub struct ConstantCache {
    path: PathBuf,
    file: CacheFile,
    dirty: bool,
}

impl ConstantCache {
    /// Opens `path`; a missing or unreadable file starts an empty cache.
    pub fn open(path: &Path) -> Self {
        let file = fs::read_to_string(path)
            .ok()
            .and_then(|text| serde_json::from_str::<CacheFile>(&text).ok());
        let dirty = file.is_none();
        Self {
            path: path.to_path_buf(),
            file: file.unwrap_or_default(),
            dirty,
        }
    }

    pub fn entries(&self) -> &[CachedConstant] {
        &self.file.constants
    }

    /// The cached value when it was stored with at least `bits` bits.
    pub fn lookup(&self, name: &str, bits: usize) -> Option<BigReal> {
        let entry = self
            .file
            .constants
            .iter()
            .find(|c| c.name == name && c.precision_bits >= bits)?;
        BigReal::parse(&entry.value, entry.precision_bits + 64).ok()
    }

    pub fn insert(&mut self, name: &str, value: &BigReal, bits: usize, generator: &str) {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let entry = CachedConstant {
            name: name.to_string(),
            value: value.to_decimal_with(stored_digits(bits), eulerzeta::precision::DecimalRounding::Nearest),
            precision_bits: bits,
            generator: generator.to_string(),
            timestamp,
        };
        self.file.constants.retain(|c| c.name != name);
        self.file.constants.push(entry);
        self.file.constants.sort_by(|a, b| a.name.cmp(&b.name));
        self.dirty = true;
    }

    /// Cached value of `name` at `bits` bits, computing and recording it when
    /// absent or stored at lower precision.
    pub fn get_or_insert_with<E>(
        &mut self,
        name: &str,
        bits: usize,
        generator: &str,
        compute: impl FnOnce() -> Result<BigReal, E>,
    ) -> Result<BigReal, E> {
        if let Some(v) = self.lookup(name, bits) {
            return Ok(v);
        }
        let v = compute()?;
        self.insert(name, &v, bits, generator);
        Ok(v)
    }

    /// Writes the file if anything changed since it was opened.
    pub fn save(&mut self) -> io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let text = serde_json::to_string_pretty(&self.file).map_err(io::Error::other)? + "\n";
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &self.path)?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_keeps_the_decimal_string() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("constants.json");
        let pi = BigReal::pi(256);
        let mut cache = ConstantCache::open(&path);
        cache.insert("pi", &pi, 256, "test");
        cache.save().unwrap();
        let reread = ConstantCache::open(&path);
        let stored = reread.entries()[0].value.clone();
        let value = reread.lookup("pi", 256).unwrap();
        let digits = stored_digits(256);
        let rendering = value.to_decimal_with(digits, eulerzeta::precision::DecimalRounding::Nearest);
        assert_eq!(rendering, stored);
        assert!((&value - &pi).abs().to_f64() < 1e-77);
    }

    #[test]
    fn low_precision_entries_are_not_reused() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let mut cache = ConstantCache::open(&path);
        cache.insert("ln2", &BigReal::ln2(64), 64, "test");
        assert!(cache.lookup("ln2", 128).is_none());
        let mut computed = false;
        let v = cache
            .get_or_insert_with::<()>("ln2", 128, "test", || {
                computed = true;
                Ok(BigReal::ln2(128))
            })
            .unwrap();
        assert!(computed);
        assert_eq!(cache.entries()[0].precision_bits, 128);
        assert!((&v - BigReal::ln2(128)).abs().to_f64() < 1e-38);
    }

    #[test]
    fn malformed_or_missing_files_start_empty() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        fs::write(&path, "{ not json").unwrap();
        let mut cache = ConstantCache::open(&path);
        assert!(cache.entries().is_empty());
        cache.save().unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok());
        let missing = ConstantCache::open(&dir.path().join("nested/none.json"));
        assert!(missing.entries().is_empty());
    }
}
