//! On-disk cache of depth reports, one JSON file per (ideal, power, field).

use std::io::Write;
use std::path::{Path, PathBuf};

use edge_depth::depth::{DepthReport, Field};
use edge_depth::MonomialIdeal;
use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

use crate::CliResult;

/// Bumped whenever the engine could produce different reports; part of every key.
pub const ENGINE_VERSION: &str = concat!("edge-depth/", env!("CARGO_PKG_VERSION"), "/koszul-lattice-1");

#[derive(Debug, Clone)]
pub struct ReportCache {
    dir: PathBuf,
}

pub fn cache_key(i: &MonomialIdeal, t: u32, field: Field) -> String {
    let canonical = serde_json::to_string(i).expect("ideals serialize");
    let mut h = Sha256::new();
    h.update(canonical.as_bytes());
    h.update(format!("|t={t}|{}|{ENGINE_VERSION}", field.as_str()).as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl ReportCache {
    pub fn open(dir: &Path) -> CliResult<ReportCache> {
        std::fs::create_dir_all(dir)?;
        Ok(ReportCache {
            dir: dir.to_path_buf(),
        })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Unreadable or stale entries count as misses.
    pub fn get(&self, i: &MonomialIdeal, t: u32, field: Field) -> Option<DepthReport> {
        let text = std::fs::read_to_string(self.path(&cache_key(i, t, field))).ok()?;
        let report: DepthReport = serde_json::from_str(&text).ok()?;
        (report.field == field && report.t == t && report.n == i.arity()).then_some(report)
    }

    /// Write-temp-then-rename, so readers never see a partial file.
    pub fn put(&self, i: &MonomialIdeal, report: &DepthReport) -> CliResult<()> {
        let mut tmp = NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, report).map_err(std::io::Error::from)?;
        tmp.flush()?;
        tmp.persist(self.path(&cache_key(i, report.t, report.field)))
            .map_err(|e| e.error)?;
        Ok(())
    }
}
