//! Run configuration, the emitted report structure, and the on-disk cache.
//!
//! Field names of `Report` are a stability contract: downstream tooling parses
//! them. The cache key is a canonical string derived from the configuration,
//! so a hit replays the stored report byte for byte.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::checks::CheckOutcome;
use crate::code::WeightReport;
use crate::curve::{Curve, LineClass, Point};
use crate::error::Result;
use crate::families::CodeFamilySpec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub q: u64,
    pub r: u32,
    pub family: Option<CodeFamilySpec>,
    pub check: Option<String>,
    pub dual: bool,
    pub w_max: Option<usize>,
    pub seed: u64,
}

impl RunConfig {
    /// Canonical cache key: `q{q}r{r}-{family}-{params}-w{w_max}-v{version}`.
    pub fn cache_key(&self) -> String {
        let target = match (&self.family, &self.check) {
            (Some(f), _) => {
                let k = f.key();
                let side = if self.dual { "-dual" } else { "" };
                format!("{}{}", k, side)
            }
            (None, Some(c)) => format!("check-{}", c),
            (None, None) => "none".to_string(),
        };
        format!(
            "q{}r{}-{}-w{}-v{}",
            self.q,
            self.r,
            target,
            self.w_max.map_or("none".to_string(), |w| w.to_string()),
            SCHEMA_VERSION
        )
    }
}

/// One classified support in the emitted report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportEntry {
    pub points: Vec<(u32, u32)>,
    pub line: Option<(u32, u32, u32)>,
    pub class: Option<LineClass>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub config: RunConfig,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub distance: Option<usize>,
    pub counts: BTreeMap<usize, u64>,
    pub supports: Vec<SupportEntry>,
    pub checks: Vec<CheckOutcome>,
    pub elapsed_ms: u64,
    pub seed: u64,
}

impl Report {
    pub fn new(config: RunConfig) -> Report {
        let seed = config.seed;
        Report {
            version: SCHEMA_VERSION,
            config,
            n: None,
            k: None,
            distance: None,
            counts: BTreeMap::new(),
            supports: Vec::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
            seed,
        }
    }

    pub fn attach_weights(&mut self, rep: &WeightReport) {
        self.distance = rep.min_distance;
        self.counts = rep.counts.clone();
        self.supports = rep
            .supports
            .iter()
            .map(|s| SupportEntry {
                points: s
                    .points
                    .iter()
                    .map(|p| match p {
                        Point::Affine(x, y) => (x.0, y.0),
                        Point::Infinity => (u32::MAX, u32::MAX),
                    })
                    .collect(),
                line: s.line.map(|(a, b, c)| (a.0, b.0, c.0)),
                class: s.class,
            })
            .collect();
        self.elapsed_ms += rep.elapsed_ms;
    }

    pub fn all_ok(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.verdict != crate::checks::Verdict::Fail)
    }
}

/// Attach line classifications computed on the curve before reporting.
pub fn classified_report(curve: &Curve, rep: &mut WeightReport) {
    rep.classify_supports(curve);
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Result<Cache> {
        fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", key))
    }

    /// A corrupt cache entry is treated as a miss; the caller recomputes.
    pub fn load(&self, key: &str) -> Option<Report> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        match serde_json::from_str::<Report>(&text) {
            Ok(r) if r.version == SCHEMA_VERSION => Some(r),
            Ok(_) => None,
            Err(e) => {
                eprintln!("warning: corrupt cache entry {}: {}", key, e);
                None
            }
        }
    }

    /// Atomic write: temp file in the cache directory, then rename.
    pub fn store(&self, key: &str, report: &Report) -> Result<()> {
        let body = serde_json::to_string_pretty(report)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(body.as_bytes())?;
        tmp.persist(self.path_for(key)).map_err(|e| e.error)?;
        Ok(())
    }
}
