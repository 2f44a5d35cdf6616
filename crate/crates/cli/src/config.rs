//! JSON config schemas for the scan commands. Each config is a single
//! document; the `--out`, `--format` and `--seed` flags override the
//! matching fields when given.

use crate::CliError;
use qhe_core::{LevelSpectrum, SpectrumFamily};
use serde::Deserialize;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// One grid axis: either a fixed scalar or a swept `{min, max, steps}`
/// range with at least two steps.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum AxisSpec {
    Fixed(f64),
    Swept { min: f64, max: f64, steps: usize },
}

impl AxisSpec {
    pub fn validate(&self, name: &str) -> Result<(), CliError> {
        match *self {
            AxisSpec::Fixed(v) => {
                if !v.is_finite() {
                    return Err(CliError::config(format!("axis {name}: non-finite value {v}")));
                }
            }
            AxisSpec::Swept { min, max, steps } => {
                if !min.is_finite() || !max.is_finite() {
                    return Err(CliError::config(format!("axis {name}: non-finite bounds")));
                }
                if steps < 2 {
                    return Err(CliError::config(format!(
                        "axis {name}: swept axis needs steps >= 2, got {steps}"
                    )));
                }
                if !(min < max) {
                    return Err(CliError::config(format!(
                        "axis {name}: min {min} must be below max {max}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        match self {
            AxisSpec::Fixed(_) => 1,
            AxisSpec::Swept { steps, .. } => *steps,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid values, endpoints exact.
    pub fn values(&self) -> Vec<f64> {
        match *self {
            AxisSpec::Fixed(v) => vec![v],
            AxisSpec::Swept { min, max, steps } => (0..steps)
                .map(|i| {
                    let t = i as f64 / (steps - 1) as f64;
                    min * (1.0 - t) + max * t
                })
                .collect(),
        }
    }

    pub fn min_value(&self) -> f64 {
        match *self {
            AxisSpec::Fixed(v) => v,
            AxisSpec::Swept { min, .. } => min,
        }
    }
}

/// A working-substance spectrum given explicitly or through a family.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SpectrumSpec {
    Explicit { energies: Vec<f64> },
    Harmonic { omega: f64, levels: usize },
    Box { width: f64, levels: usize },
}

impl SpectrumSpec {
    pub fn build(&self, which: &str) -> Result<LevelSpectrum, CliError> {
        let family = match self {
            SpectrumSpec::Explicit { energies } => SpectrumFamily::Explicit(energies.clone()),
            SpectrumSpec::Harmonic { omega, levels } => SpectrumFamily::Harmonic {
                frequency: *omega,
                levels: *levels,
            },
            SpectrumSpec::Box { width, levels } => SpectrumFamily::Box {
                width: *width,
                levels: *levels,
            },
        };
        family
            .spectrum()
            .map_err(|e| CliError::config(format!("{which} spectrum: {e}")))
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DarkPoint {
    pub delta: f64,
    pub omega: f64,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Temperatures {
    pub t_h: f64,
    pub t_l: f64,
}

impl Temperatures {
    pub fn validate(&self) -> Result<(), CliError> {
        for (name, t) in [("t_h", self.t_h), ("t_l", self.t_l)] {
            if !(t > 0.0) || !t.is_finite() {
                return Err(CliError::config(format!(
                    "temperature {name} must be positive, got {t}"
                )));
            }
        }
        Ok(())
    }
}

/// Fields shared by every command config.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct CommonFields {
    pub out: Option<String>,
    pub format: Option<OutputFormat>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Region3Config {
    pub grid: Region3Grid,
    #[serde(flatten)]
    pub common: CommonFields,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Region3Grid {
    pub r1l: AxisSpec,
    pub r2l: AxisSpec,
    pub r2h: AxisSpec,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DarkConfig {
    pub hot: DarkPoint,
    pub grid: DarkGrid,
    pub temperatures: Temperatures,
    #[serde(flatten)]
    pub common: CommonFields,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DarkGrid {
    pub delta_l: AxisSpec,
    pub omega_l: AxisSpec,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkCurveConfig {
    pub hot: SpectrumSpec,
    pub cold: SpectrumSpec,
    pub t_l: f64,
    pub grid: WorkCurveGrid,
    #[serde(flatten)]
    pub common: CommonFields,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkCurveGrid {
    pub t_h: AxisSpec,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndpointsSpec {
    pub d1h: f64,
    pub d2h: f64,
    pub d1l: f64,
    pub d2l: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LadderSpec {
    /// First cold temperature, as a multiple of the largest full gap.
    pub start_scale: f64,
    /// Geometric step between consecutive rungs.
    pub factor: f64,
    /// Number of rungs.
    pub count: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitStudyConfig {
    pub endpoints: EndpointsSpec,
    pub ladder: LadderSpec,
    #[serde(flatten)]
    pub common: CommonFields,
}

/// Cycle input for `cycle-report`: explicit spectra or a dark-state pair.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum CycleInput {
    Spectra {
        hot: SpectrumSpec,
        cold: SpectrumSpec,
    },
    Dark {
        hot: DarkPoint,
        cold: DarkPoint,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleReportConfig {
    pub cycle: CycleInput,
    pub t_h: f64,
    pub t_l: f64,
    #[serde(flatten)]
    pub common: CommonFields,
}

pub fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::config(format!("config: {e}")))
}
