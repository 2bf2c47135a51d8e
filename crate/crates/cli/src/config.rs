//! Job configuration, schema version "1".

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JobKind {
    Classify,
    Curvature,
    Potential,
    Spectrum,
    Propagate,
    Box,
}

impl JobKind {
    pub fn as_str(self) -> &'static str {
        match self {
            JobKind::Classify => "classify",
            JobKind::Curvature => "curvature",
            JobKind::Potential => "potential",
            JobKind::Spectrum => "spectrum",
            JobKind::Propagate => "propagate",
            JobKind::Box => "box",
        }
    }
}

/// A named built-in profile with its numeric parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileRef {
    pub name: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    /// half-width (two-sided) or length (one-sided) of the box
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub length: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverConfig {
    #[serde(default = "default_max_states")]
    pub max_states: usize,
}

fn default_max_states() -> usize {
    20
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { max_states: default_max_states() }
    }
}

/// Points along the profile parameter `q2` (and the fixed `q1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to: Option<f64>,
    #[serde(default = "default_count")]
    pub count: usize,
    #[serde(default)]
    pub q1: f64,
}

fn default_count() -> usize {
    101
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self { from: None, to: None, count: default_count(), q1: 0.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxConfig {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub n_max: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropagateConfig {
    pub x0: f64,
    pub sigma: f64,
    #[serde(default)]
    pub k0: f64,
    pub dt: f64,
    pub steps: usize,
    /// checkpoints written to the table (the last step is always included)
    #[serde(default = "default_records")]
    pub records: usize,
}

fn default_records() -> usize {
    10
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub schema: String,
    pub kind: JobKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub profiles: Vec<ProfileRef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ell: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridConfig>,
    #[serde(default)]
    pub solver: SolverConfig,
    #[serde(default)]
    pub samples: SampleConfig,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub box_params: Option<BoxConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub propagate: Option<PropagateConfig>,
}

impl JobConfig {
    /// Parse a config document, or the `config` member of a run summary.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::ConfigParse(e.to_string()))?;
        let doc = match value.get("config") {
            Some(inner) if value.get("schema").is_none() => inner.clone(),
            _ => value,
        };
        serde_json::from_value(doc).map_err(|e| CliError::ConfigParse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::ConfigParse(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Normalized serialization; equal configs hash equally.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_json().as_bytes()))
    }
}
