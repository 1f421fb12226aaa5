use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};

/// One JSON line on stdout per command. `answer` is set only by the
/// deciding commands.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub input: String,
    pub input_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub balanced: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub answer: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    pub wall_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counters: Option<serde_json::Value>,
    #[serde(skip)]
    start: Option<Instant>,
}

impl RunReport {
    pub fn new(command: &'static str, input: &Path, bytes: &[u8]) -> Self {
        RunReport {
            command,
            input: input.display().to_string(),
            input_sha256: hex::encode(Sha256::digest(bytes)),
            budget: None,
            balanced: None,
            engine: None,
            answer: None,
            certificate: None,
            wall_ms: 0.0,
            counters: None,
            start: Some(Instant::now()),
        }
    }

    pub fn answer(&mut self, yes: bool) {
        self.answer = Some(if yes { "yes" } else { "no" });
    }

    pub fn emit(mut self) {
        if let Some(start) = self.start {
            self.wall_ms = start.elapsed().as_secs_f64() * 1e3;
        }
        println!(
            "{}",
            serde_json::to_string(&self).expect("report serializes")
        );
    }
}

/// Reads a whole input file, naming it in the error.
pub fn read(path: &Path) -> Result<(String, Vec<u8>)> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let text = String::from_utf8(bytes.clone())
        .with_context(|| format!("{} is not UTF-8", path.display()))?;
    Ok((text, bytes))
}

pub fn write(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

/// `<path>.json` next to an output file.
pub fn sidecar_path(path: &Path) -> std::path::PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    s.into()
}

pub fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("sidecar serializes");
    s.push('\n');
    s
}
