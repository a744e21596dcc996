use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};
use tcc_core::{persist, Error, Result};

#[derive(Serialize)]
pub struct OutputFile {
    pub file: String,
    pub sha256: String,
}

/// Provenance record written next to the outputs of every run.
#[derive(Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command_line: Vec<String>,
    pub config: BTreeMap<String, serde_json::Value>,
    pub started_unix: u64,
    pub finished_unix: u64,
    pub counts: BTreeMap<String, u64>,
    pub outputs: Vec<OutputFile>,
}

pub fn now_unix() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

impl RunManifest {
    pub fn start(argv: &[String]) -> Self {
        RunManifest {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command_line: argv.to_vec(),
            config: BTreeMap::new(),
            started_unix: now_unix(),
            finished_unix: 0,
            counts: BTreeMap::new(),
            outputs: Vec::new(),
        }
    }

    pub fn config(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.config.insert(key.to_string(), value.into());
    }

    pub fn count(&mut self, key: &str, value: u64) {
        self.counts.insert(key.to_string(), value);
    }

    pub fn finish(mut self, path: &Path, outputs: &[PathBuf]) -> Result<()> {
        for p in outputs {
            let bytes = std::fs::read(p).map_err(|source| Error::Io {
                path: p.clone(),
                source,
            })?;
            self.outputs.push(OutputFile {
                file: p.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned()),
                sha256: hex::encode(Sha256::digest(&bytes)),
            });
        }
        self.finished_unix = now_unix();
        persist::write_json(path, &self)
    }
}
