use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::Context;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub struct RunManifest {
    pub command: &'static str,
    pub parameters: Value,
    pub duration: Duration,
    pub digest: String,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

impl RunManifest {
    pub fn new(command: &'static str, parameters: Value, duration: Duration, output: &[u8]) -> Self {
        Self {
            command,
            parameters,
            duration,
            digest: digest(output),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "parameters": self.parameters,
            "version": fdk_core::VERSION,
            "duration_ms": self.duration.as_secs_f64() * 1e3,
            "digest": self.digest,
        })
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json())? + "\n";
        std::fs::write(path, text).with_context(|| format!("writing manifest {}", path.display()))
    }
}

/// `pair.json` -> `pair.json.manifest.json`.
pub fn default_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}
