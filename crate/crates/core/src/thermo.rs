//! Gibbs-state thermodynamics for discrete spectra (partition function,
//! populations, energy, entropy) and the operator-level split of an
//! infinitesimal Hamiltonian change into work-like (diagonal) and heat-like
//! (off-diagonal) parts in the instantaneous eigenbasis.

use crate::error::Error;
use crate::linalg::{align_phase, hermitian_eigensystem};
use crate::spectrum::LevelSpectrum;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Relative gap (to the spectral span) below which an eigenbasis is treated
/// as degenerate and rejected.
pub const DEGENERACY_THRESHOLD: f64 = 1e-10;

/// Diagonal ensemble over the instantaneous eigenstates at one bath contact.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalState {
    temperature: f64,
    populations: Vec<f64>,
}

impl ThermalState {
    /// Builds a state from explicit populations, which must be nonnegative
    /// and sum to one within 1e-12.
    pub fn new(temperature: f64, populations: Vec<f64>) -> Result<Self, Error> {
        if !(temperature > 0.0) || !temperature.is_finite() {
            return Err(Error::InvalidTemperature(temperature));
        }
        if populations.is_empty() {
            return Err(Error::InvalidParameter("empty population vector".into()));
        }
        if let Some(&bad) = populations.iter().find(|p| !(**p >= 0.0)) {
            return Err(Error::InvalidParameter(format!(
                "negative or non-finite population {bad}"
            )));
        }
        let total: f64 = populations.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "populations sum to {total}, expected 1"
            )));
        }
        Ok(Self {
            temperature,
            populations,
        })
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn beta(&self) -> f64 {
        1.0 / self.temperature
    }

    pub fn populations(&self) -> &[f64] {
        &self.populations
    }

    pub fn len(&self) -> usize {
        self.populations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.populations.is_empty()
    }
}

/// Boltzmann weights `exp(-(E_m - E_0)/T)` relative to the ground level.
/// Shifting by the ground energy keeps every exponent ≤ 0, so nothing
/// overflows no matter how cold the bath.
fn shifted_weights(s: &LevelSpectrum, temperature: f64) -> Vec<f64> {
    let ground = s.ground_energy();
    s.energies()
        .iter()
        .map(|e| (-(e - ground) / temperature).exp())
        .collect()
}

/// Partition function `Z = Σ_m exp(-E_m / T)`.
pub fn partition_function(s: &LevelSpectrum, temperature: f64) -> Result<f64, Error> {
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(Error::InvalidTemperature(temperature));
    }
    let shifted: f64 = shifted_weights(s, temperature).iter().sum();
    Ok((-s.ground_energy() / temperature).exp() * shifted)
}

/// Gibbs populations `p_m = exp(-E_m/T) / Z`, invariant under a uniform
/// energy shift.
pub fn gibbs_populations(s: &LevelSpectrum, temperature: f64) -> Result<ThermalState, Error> {
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(Error::InvalidTemperature(temperature));
    }
    let mut weights = shifted_weights(s, temperature);
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    ThermalState::new(temperature, weights)
}

/// Mean energy `Σ_m p_m E_m` of a diagonal ensemble over a spectrum.
pub fn internal_energy(s: &LevelSpectrum, state: &ThermalState) -> Result<f64, Error> {
    if s.len() != state.len() {
        return Err(Error::DimensionMismatch {
            left: s.len(),
            right: state.len(),
        });
    }
    Ok(state
        .populations()
        .iter()
        .zip(s.energies())
        .map(|(p, e)| p * e)
        .sum())
}

/// Diagonal-ensemble entropy `S = -Σ p_m ln p_m` (with `0 ln 0 = 0`).
pub fn entropy(state: &ThermalState) -> f64 {
    state
        .populations()
        .iter()
        .map(|&p| if p > 0.0 { -p * p.ln() } else { 0.0 })
        .sum()
}

/// Dense Hermitian matrix, validated on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    matrix: DMatrix<Complex64>,
}

impl HermitianOperator {
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self, Error> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch {
                left: matrix.nrows(),
                right: matrix.ncols(),
            });
        }
        let mut asym = 0.0f64;
        for i in 0..matrix.nrows() {
            for j in i..matrix.ncols() {
                asym = asym.max((matrix[(i, j)] - matrix[(j, i)].conj()).norm());
            }
        }
        if asym > 1e-12 {
            return Err(Error::NotHermitian(asym));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// A Hamiltonian depending on a point of the control-parameter manifold.
/// Evaluation must be pure and re-entrant.
pub trait HamiltonianFamily: Sync {
    /// Hilbert-space dimension, constant over the parameter domain.
    fn dimension(&self) -> usize;
    /// The Hermitian operator at one parameter point.
    fn operator_at(&self, point: &[f64]) -> HermitianOperator;
}

/// Work-like and heat-like parts of a Hamiltonian increment, both expressed
/// in the instantaneous eigenbasis of the starting point.
#[derive(Debug, Clone)]
pub struct DifferentialParts {
    /// Diagonal part: energy shifts of the instantaneous levels.
    pub work: HermitianOperator,
    /// Off-diagonal part: transition-inducing remainder.
    pub heat: HermitianOperator,
}

fn eigensystem_checked(
    op: &HermitianOperator,
) -> Result<crate::linalg::Eigensystem, Error> {
    let eig = hermitian_eigensystem(op);
    if let Some(gap) = eig.min_gap() {
        let span = eig.span();
        if span == 0.0 || gap < DEGENERACY_THRESHOLD * span {
            return Err(Error::DegenerateEigenbasis { gap, span });
        }
    }
    Ok(eig)
}

/// Splits `H(point + step) - H(point)`, rotated into the eigenbasis of
/// `H(point)`, into its diagonal (work) and off-diagonal (heat) parts.
/// The two parts add back to the rotated increment exactly.
pub fn decompose_differential<F: HamiltonianFamily + ?Sized>(
    family: &F,
    point: &[f64],
    step: &[f64],
) -> Result<DifferentialParts, Error> {
    if point.len() != step.len() {
        return Err(Error::DimensionMismatch {
            left: point.len(),
            right: step.len(),
        });
    }
    let here = family.operator_at(point);
    let eig = eigensystem_checked(&here)?;
    let shifted: Vec<f64> = point.iter().zip(step).map(|(a, b)| a + b).collect();
    let increment = family.operator_at(&shifted).matrix() - here.matrix();
    let rotated = eig.vectors.adjoint() * increment * &eig.vectors;

    let n = rotated.nrows();
    let mut work = DMatrix::<Complex64>::zeros(n, n);
    let mut heat = rotated.clone();
    for m in 0..n {
        // the diagonal of a Hermitian sandwich is real up to rounding
        work[(m, m)] = Complex64::new(rotated[(m, m)].re, 0.0);
        heat[(m, m)] = rotated[(m, m)] - work[(m, m)];
    }
    Ok(DifferentialParts {
        work: HermitianOperator::new(work)?,
        heat: HermitianOperator::new(heat)?,
    })
}

/// Per-level gap between the two central-difference routes to `dE_m`:
/// the expectation `⟨m|(H(x+hu) - H(x-hu))/2h|m⟩` versus the eigenvalue
/// difference `(E_m(x+hu) - E_m(x-hu))/2h`. Both converge to the same
/// derivative, so the residuals vanish as O(h²).
pub fn feynman_hellman_residuals<F: HamiltonianFamily + ?Sized>(
    family: &F,
    point: &[f64],
    direction: &[f64],
    h: f64,
) -> Result<Vec<f64>, Error> {
    if point.len() != direction.len() {
        return Err(Error::DimensionMismatch {
            left: point.len(),
            right: direction.len(),
        });
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidParameter(format!("step must be positive, got {h}")));
    }
    let here = family.operator_at(point);
    let eig = eigensystem_checked(&here)?;

    let fwd: Vec<f64> = point.iter().zip(direction).map(|(a, u)| a + h * u).collect();
    let bwd: Vec<f64> = point.iter().zip(direction).map(|(a, u)| a - h * u).collect();
    let op_fwd = family.operator_at(&fwd);
    let op_bwd = family.operator_at(&bwd);

    let slope_op = (op_fwd.matrix() - op_bwd.matrix()).scale(1.0 / (2.0 * h));
    let eig_fwd = hermitian_eigensystem(&op_fwd);
    let eig_bwd = hermitian_eigensystem(&op_bwd);

    let mut residuals = Vec::with_capacity(family.dimension());
    for m in 0..family.dimension() {
        let v = eig.vectors.column(m);
        let expectation = (v.adjoint() * &slope_op * v)[(0, 0)].re;
        let eigen_slope = (eig_fwd.values[m] - eig_bwd.values[m]) / (2.0 * h);
        residuals.push((expectation - eigen_slope).abs());
    }
    Ok(residuals)
}

/// Largest violation, over level pairs `m ≠ n`, of the first-order identity
/// relating off-diagonal increments to the eigenvector change:
/// `⟨m|ΔH|n⟩ = (E_n - E_m) ⟨m|Δn⟩ + O(|step|²)`,
/// where `Δn` is the change of eigenvector `n` between the two points
/// (phase-aligned at both).
pub fn off_diagonal_identity_residual<F: HamiltonianFamily + ?Sized>(
    family: &F,
    point: &[f64],
    step: &[f64],
) -> Result<f64, Error> {
    let here = family.operator_at(point);
    let eig = eigensystem_checked(&here)?;
    let shifted: Vec<f64> = point.iter().zip(step).map(|(a, b)| a + b).collect();
    let there = family.operator_at(&shifted);
    let eig_there = hermitian_eigensystem(&there);
    let increment = there.matrix() - here.matrix();

    let n = family.dimension();
    let mut worst = 0.0f64;
    for m in 0..n {
        for k in 0..n {
            if m == k {
                continue;
            }
            let vm = eig.vectors.column(m);
            let lhs = (vm.adjoint() * &increment * eig.vectors.column(k))[(0, 0)];
            // ⟨m|Δk⟩ = ⟨m(x)|k(x+step)⟩ since ⟨m(x)|k(x)⟩ = 0
            let moved = align_phase(&eig_there.vectors.column(k).into_owned());
            let overlap = (vm.adjoint() * moved)[(0, 0)];
            let rhs = overlap * (eig.values[k] - eig.values[m]);
            worst = worst.max((lhs - rhs).norm());
        }
    }
    Ok(worst)
}
