//! Four-stroke Otto cycle over a discrete spectrum: isothermal
//! equilibrations at the hot and cold baths, quantum-adiabatic spacing
//! changes in between (populations frozen), and the resulting net work,
//! heat flows, efficiency and positive-work verdict.

use crate::error::Error;
use crate::spectrum::LevelSpectrum;
use crate::thermo::{entropy, gibbs_populations, ThermalState};

/// Relative offset of the bisection bracket above the cold temperature.
const BRACKET_LOW_OFFSET: f64 = 1e-9;
/// Upper end of the bisection bracket, as a multiple of the cold temperature.
const BRACKET_HIGH_FACTOR: f64 = 1e6;
/// Number of pre-scan samples used to isolate (or rule out) a work zero.
const PRESCAN_POINTS: usize = 64;
/// Relative width at which bisection stops.
const BISECTION_REL_TOL: f64 = 1e-10;

/// One full Otto cycle: the spectra at the two bath contacts and the two
/// bath temperatures. `t_hot > t_cold` is deliberately NOT required; whether
/// work comes out positive is exactly the question under study.
#[derive(Debug, Clone, PartialEq)]
pub struct OttoCycle {
    hot_spectrum: LevelSpectrum,
    cold_spectrum: LevelSpectrum,
    t_hot: f64,
    t_cold: f64,
}

/// Aggregated per-cycle quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleReport {
    pub net_work: f64,
    pub heat_in: f64,
    pub heat_out: f64,
    /// Defined only when both the absorbed heat and the net work are positive.
    pub efficiency: Option<f64>,
    pub pwc: bool,
    pub entropy_hot: f64,
    pub entropy_cold: f64,
}

/// Populations at the four stroke endpoints. The adiabatic strokes carry
/// them verbatim, which is what makes those strokes isentropic.
#[derive(Debug, Clone, PartialEq)]
pub struct StrokePopulations {
    /// After stroke 1, equilibrated with the hot bath (hot spectrum).
    pub hot_contact: Vec<f64>,
    /// After stroke 2, same numbers now attached to the cold spectrum.
    pub expansion_end: Vec<f64>,
    /// After stroke 3, equilibrated with the cold bath (cold spectrum).
    pub cold_contact: Vec<f64>,
    /// After stroke 4, carried back to the hot spectrum.
    pub compression_end: Vec<f64>,
}

/// Outcome of the search for the hot temperature where the net work
/// changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriticalTemperature {
    Found(f64),
    /// The net work does not change sign anywhere on the bracket.
    NotFound,
    /// The pre-scan saw more than one sign change; a single critical
    /// temperature would be ambiguous, so none is reported.
    MultipleRoots,
}

impl OttoCycle {
    pub fn new(
        hot_spectrum: LevelSpectrum,
        cold_spectrum: LevelSpectrum,
        t_hot: f64,
        t_cold: f64,
    ) -> Result<Self, Error> {
        if hot_spectrum.len() != cold_spectrum.len() {
            return Err(Error::DimensionMismatch {
                left: hot_spectrum.len(),
                right: cold_spectrum.len(),
            });
        }
        if !(t_hot > 0.0) || !t_hot.is_finite() {
            return Err(Error::InvalidTemperature(t_hot));
        }
        if !(t_cold > 0.0) || !t_cold.is_finite() {
            return Err(Error::InvalidTemperature(t_cold));
        }
        Ok(Self {
            hot_spectrum,
            cold_spectrum,
            t_hot,
            t_cold,
        })
    }

    pub fn hot_spectrum(&self) -> &LevelSpectrum {
        &self.hot_spectrum
    }

    pub fn cold_spectrum(&self) -> &LevelSpectrum {
        &self.cold_spectrum
    }

    pub fn t_hot(&self) -> f64 {
        self.t_hot
    }

    pub fn t_cold(&self) -> f64 {
        self.t_cold
    }

    /// Equilibrium state reached at the end of stroke 1.
    pub fn hot_state(&self) -> ThermalState {
        gibbs_populations(&self.hot_spectrum, self.t_hot)
            .expect("cycle temperatures validated on construction")
    }

    /// Equilibrium state reached at the end of stroke 3.
    pub fn cold_state(&self) -> ThermalState {
        gibbs_populations(&self.cold_spectrum, self.t_cold)
            .expect("cycle temperatures validated on construction")
    }

    /// Populations at the four stroke endpoints.
    pub fn stroke_populations(&self) -> StrokePopulations {
        let hot = self.hot_state().populations().to_vec();
        let cold = self.cold_state().populations().to_vec();
        StrokePopulations {
            expansion_end: hot.clone(),
            hot_contact: hot,
            compression_end: cold.clone(),
            cold_contact: cold,
        }
    }

    /// Net work extracted per cycle:
    /// `ΔW = Σ_m (p_m^h - p_m^l)(Ẽ_m^h - Ẽ_m^l)` with energies referenced to
    /// each spectrum's own ground level (the reference cancels in the sum).
    pub fn net_work(&self) -> f64 {
        let hot = self.hot_state();
        let cold = self.cold_state();
        let gh = self.hot_spectrum.ground_energy();
        let gl = self.cold_spectrum.ground_energy();
        hot.populations()
            .iter()
            .zip(cold.populations())
            .zip(self.hot_spectrum.energies().iter().zip(self.cold_spectrum.energies()))
            .map(|((ph, pl), (eh, el))| (ph - pl) * ((eh - gh) - (el - gl)))
            .sum()
    }

    /// Heat absorbed from the hot bath during stroke 1, with the hot
    /// spectrum anchored at its ground level. The pre-stroke populations are
    /// the cold-equilibrium ones, carried unchanged through stroke 4.
    pub fn heat_absorbed(&self) -> f64 {
        let hot = self.hot_state();
        let cold = self.cold_state();
        let gh = self.hot_spectrum.ground_energy();
        hot.populations()
            .iter()
            .zip(cold.populations())
            .zip(self.hot_spectrum.energies())
            .map(|((ph, pl), eh)| (eh - gh) * (ph - pl))
            .sum()
    }

    /// Heat released to the cold bath during stroke 3 (cold spectrum
    /// anchored at its ground level). Satisfies `ΔW = Q_in - Q_out`.
    pub fn heat_released(&self) -> f64 {
        let hot = self.hot_state();
        let cold = self.cold_state();
        let gl = self.cold_spectrum.ground_energy();
        hot.populations()
            .iter()
            .zip(cold.populations())
            .zip(self.cold_spectrum.energies())
            .map(|((ph, pl), el)| (el - gl) * (ph - pl))
            .sum()
    }

    /// `ΔW / Q`, defined only when both are positive.
    pub fn efficiency(&self) -> Option<f64> {
        let work = self.net_work();
        let heat = self.heat_absorbed();
        if work > 0.0 && heat > 0.0 {
            Some(work / heat)
        } else {
            None
        }
    }

    /// Positive-work condition: strictly positive net work.
    pub fn pwc_holds(&self) -> bool {
        self.net_work() > 0.0
    }

    pub fn report(&self) -> CycleReport {
        CycleReport {
            net_work: self.net_work(),
            heat_in: self.heat_absorbed(),
            heat_out: self.heat_released(),
            efficiency: self.efficiency(),
            pwc: self.pwc_holds(),
            entropy_hot: entropy(&self.hot_state()),
            entropy_cold: entropy(&self.cold_state()),
        }
    }
}

/// Locates the hot temperature at which the net work vanishes, for fixed
/// spectra and cold temperature.
///
/// The bracket is `[t_cold (1 + 1e-9), t_cold · 1e6]`. A 64-point
/// logarithmic pre-scan isolates the sign change first: zero sign changes
/// are reported as `NotFound`, more than one as `MultipleRoots` (the work
/// curve is not proven monotone, so a silent single answer would be wrong).
/// A single change is refined by bisection to relative width 1e-10.
pub fn critical_hot_temperature(
    hot: &LevelSpectrum,
    cold: &LevelSpectrum,
    t_cold: f64,
) -> Result<CriticalTemperature, Error> {
    if hot.len() != cold.len() {
        return Err(Error::DimensionMismatch {
            left: hot.len(),
            right: cold.len(),
        });
    }
    if !(t_cold > 0.0) || !t_cold.is_finite() {
        return Err(Error::InvalidTemperature(t_cold));
    }
    let work = |t_hot: f64| -> f64 {
        OttoCycle::new(hot.clone(), cold.clone(), t_hot, t_cold)
            .expect("bracket temperatures are valid")
            .net_work()
    };

    let lo = t_cold * (1.0 + BRACKET_LOW_OFFSET);
    let hi = t_cold * BRACKET_HIGH_FACTOR;
    let log_step = (hi / lo).ln() / (PRESCAN_POINTS - 1) as f64;

    let samples: Vec<(f64, f64)> = (0..PRESCAN_POINTS)
        .map(|i| {
            let t = lo * (log_step * i as f64).exp();
            (t, work(t))
        })
        .collect();

    let mut exact_zeros: Vec<f64> = Vec::new();
    let mut brackets: Vec<(f64, f64, f64, f64)> = Vec::new();
    for pair in samples.windows(2) {
        let (ta, wa) = pair[0];
        let (tb, wb) = pair[1];
        if wa == 0.0 {
            exact_zeros.push(ta);
        }
        if wa != 0.0 && wb != 0.0 && wa.signum() != wb.signum() {
            brackets.push((ta, wa, tb, wb));
        }
    }
    if samples[PRESCAN_POINTS - 1].1 == 0.0 {
        exact_zeros.push(samples[PRESCAN_POINTS - 1].0);
    }

    match exact_zeros.len() + brackets.len() {
        0 => Ok(CriticalTemperature::NotFound),
        1 => {
            if let Some(&t) = exact_zeros.first() {
                return Ok(CriticalTemperature::Found(t));
            }
            let (mut a, mut wa, mut b, _wb) = brackets[0];
            while (b - a) > BISECTION_REL_TOL * b {
                let mid = 0.5 * (a + b);
                let wm = work(mid);
                if wm == 0.0 {
                    return Ok(CriticalTemperature::Found(mid));
                }
                if wm.signum() == wa.signum() {
                    a = mid;
                    wa = wm;
                } else {
                    b = mid;
                }
            }
            Ok(CriticalTemperature::Found(0.5 * (a + b)))
        }
        _ => Ok(CriticalTemperature::MultipleRoots),
    }
}
