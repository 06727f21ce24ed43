use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{CliError, CliResult};
use crate::record::{RecordKey, ResultRecord};

/// One file per key under a directory, named by the key digest and holding
/// a single JSON line.
#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> CliResult<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    pub fn path(&self, key: &RecordKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    /// The stored record for `key`, if any. A file whose key does not match
    /// is treated as corrupt.
    pub fn get(&self, key: &RecordKey) -> CliResult<Option<ResultRecord>> {
        let path = self.path(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let rec: ResultRecord = serde_json::from_str(text.trim_end())
            .map_err(|e| CliError::Failed(format!("corrupt cache file {}: {e}", path.display())))?;
        if &rec.key != key {
            return Err(CliError::Failed(format!("cache file {} holds a different key", path.display())));
        }
        Ok(Some(rec))
    }

    /// Writes through a temporary file and a rename, so readers never see a
    /// partial record.
    pub fn put(&self, rec: &ResultRecord) -> CliResult<()> {
        let path = self.path(&rec.key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            writeln!(f, "{}", rec.to_line())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

/// Looks `key` up in `cache` (when given), computing and storing on a miss.
/// With `recheck`, a hit is recomputed and must match.
pub fn cached<F>(cache: Option<&Cache>, key: &RecordKey, recheck: bool, compute: F) -> CliResult<ResultRecord>
where
    F: FnOnce() -> CliResult<ResultRecord>,
{
    let Some(cache) = cache else {
        return compute();
    };
    match cache.get(key)? {
        Some(stored) if recheck => {
            let fresh = compute()?;
            if !stored.same_result(&fresh) {
                return Err(CliError::Failed(format!(
                    "cached record {} differs from a fresh computation",
                    cache.path(key).display()
                )));
            }
            Ok(stored)
        }
        Some(stored) => Ok(stored),
        None => {
            let fresh = compute()?;
            cache.put(&fresh)?;
            Ok(fresh)
        }
    }
}
