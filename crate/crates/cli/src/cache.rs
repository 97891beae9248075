//! On-disk cache of computed polynomials, one JSON file per entry, keyed by
//! a SHA-256 of the engine version, the invariant name and the braid word.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use lg_core::braid::BraidWord;
use lg_core::laurent::LaurentPoly;
use sha2::{Digest, Sha256};

pub struct Cache {
    dir: Option<PathBuf>,
    force: bool,
}

impl Cache {
    /// Caching is enabled when `dir` is given; `force` ignores existing
    /// entries but still writes fresh ones.
    pub fn new(dir: Option<PathBuf>, force: bool) -> Result<Self> {
        if let Some(d) = &dir {
            fs::create_dir_all(d).with_context(|| format!("creating cache directory {}", d.display()))?;
        }
        Ok(Cache { dir, force })
    }

    pub fn key(invariant: &str, braid: &BraidWord) -> String {
        let mut h = Sha256::new();
        for part in [lg_core::ENGINE_VERSION, invariant, &braid.to_string()] {
            h.update(part.as_bytes());
            h.update([0u8]);
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// Returns the cached value or computes, stores and returns it.
    pub fn get_or_compute(
        &self,
        invariant: &str,
        braid: &BraidWord,
        compute: impl FnOnce() -> Result<LaurentPoly>,
    ) -> Result<LaurentPoly> {
        let Some(path) = self.path(&Self::key(invariant, braid)) else {
            return compute();
        };
        if !self.force {
            if let Ok(text) = fs::read_to_string(&path) {
                if let Ok(p) = LaurentPoly::from_json(&text) {
                    return Ok(p);
                }
            }
        }
        let p = compute()?;
        write_atomically(&path, p.to_json().as_bytes())?;
        Ok(p)
    }
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp).with_context(|| format!("writing {}", tmp.display()))?;
    f.write_all(bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_separate_invariants_and_braids() {
        let a: BraidWord = "2 | 1 1 1".parse().unwrap();
        let b: BraidWord = "2 | -1 -1 -1".parse().unwrap();
        assert_ne!(Cache::key("lg1", &a), Cache::key("lg2", &a));
        assert_ne!(Cache::key("lg1", &a), Cache::key("lg1", &b));
        assert_eq!(Cache::key("lg1", &a).len(), 64);
    }
}
