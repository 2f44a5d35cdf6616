//! Discrete energy spectra of the working substance and the parametric
//! families (harmonic ladder, infinite square well) used as reference cases.

use crate::error::Error;
use std::f64::consts::PI;

/// An ordered list of eigenenergies with strictly positive level spacings.
///
/// The ground energy is arbitrary: every cycle quantity is built from
/// populations and energy differences, so only the spacings matter.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSpectrum {
    energies: Vec<f64>,
}

impl LevelSpectrum {
    /// Builds a spectrum from raw energies, which must be finite and
    /// strictly increasing (degenerate levels are rejected).
    pub fn new(energies: Vec<f64>) -> Result<Self, Error> {
        if energies.is_empty() {
            return Err(Error::InvalidParameter("empty spectrum".into()));
        }
        if let Some(&bad) = energies.iter().find(|e| !e.is_finite()) {
            return Err(Error::InvalidParameter(format!("non-finite energy {bad}")));
        }
        for pair in energies.windows(2) {
            let gap = pair[1] - pair[0];
            if !(gap > 0.0) {
                return Err(Error::InvalidSpacing(gap));
            }
        }
        Ok(Self { energies })
    }

    /// Builds a spectrum from its spacings and a ground energy.
    /// Inverse of [`LevelSpectrum::spacings`].
    pub fn from_spacings(deltas: &[f64], ground: f64) -> Result<Self, Error> {
        if !ground.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "non-finite ground energy {ground}"
            )));
        }
        let mut energies = Vec::with_capacity(deltas.len() + 1);
        let mut level = ground;
        energies.push(level);
        for &delta in deltas {
            if !(delta > 0.0) || !delta.is_finite() {
                return Err(Error::InvalidSpacing(delta));
            }
            level += delta;
            energies.push(level);
        }
        Self::new(energies)
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// Number of levels.
    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty spectra
    }

    pub fn ground_energy(&self) -> f64 {
        self.energies[0]
    }

    /// Adjacent level spacings `E_{i+1} - E_i`, all strictly positive.
    pub fn spacings(&self) -> Vec<f64> {
        self.energies.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Multiplies every energy by `c > 0`; all spacings scale by the same ratio.
    pub fn uniform_scale(&self, c: f64) -> Result<Self, Error> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::InvalidScale(c));
        }
        Ok(Self {
            energies: self.energies.iter().map(|e| e * c).collect(),
        })
    }
}

/// Parametric spectrum families.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumFamily {
    /// Levels given directly.
    Explicit(Vec<f64>),
    /// Harmonic ladder `E_n = (n + 1/2) ω`, `n = 0..levels`.
    Harmonic { frequency: f64, levels: usize },
    /// Infinite square well of width `L` and unit mass:
    /// `E_n = n² π² / (2 L²)`, `n = 1..=levels`.
    Box { width: f64, levels: usize },
}

impl SpectrumFamily {
    /// Evaluates the family to a concrete spectrum.
    pub fn spectrum(&self) -> Result<LevelSpectrum, Error> {
        match self {
            SpectrumFamily::Explicit(levels) => LevelSpectrum::new(levels.clone()),
            SpectrumFamily::Harmonic { frequency, levels } => {
                if !(*frequency > 0.0) || !frequency.is_finite() {
                    return Err(Error::InvalidParameter(format!(
                        "harmonic frequency must be positive, got {frequency}"
                    )));
                }
                if *levels == 0 {
                    return Err(Error::InvalidParameter("harmonic level count is zero".into()));
                }
                LevelSpectrum::new(
                    (0..*levels)
                        .map(|n| (n as f64 + 0.5) * frequency)
                        .collect(),
                )
            }
            SpectrumFamily::Box { width, levels } => {
                if !(*width > 0.0) || !width.is_finite() {
                    return Err(Error::InvalidParameter(format!(
                        "well width must be positive, got {width}"
                    )));
                }
                if *levels == 0 {
                    return Err(Error::InvalidParameter("box level count is zero".into()));
                }
                let scale = PI * PI / (2.0 * width * width);
                LevelSpectrum::new(
                    (1..=*levels)
                        .map(|n| (n * n) as f64 * scale)
                        .collect(),
                )
            }
        }
    }
}
