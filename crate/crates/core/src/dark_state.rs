//! Λ-type 3-level atom driven by one classical field: the excited level
//! sits at the common detuning δ, both ground levels couple to it with
//! Rabi strength Ω, and the antisymmetric ground combination stays dark at
//! zero energy. The two bright eigenvalues give a pair of level spacings
//! tuned by (δ, |Ω|), realizing the adjustable 3-level engine.

use crate::error::Error;
use crate::thermo::{HamiltonianFamily, HermitianOperator};
use crate::three_level::SpacingEndpoints;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// One control-field point: common detuning δ (any sign) and Rabi-frequency
/// magnitude |Ω| ≥ 0. Only |Ω|² enters the spectrum, so Ω is kept real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarkStateParams {
    delta: f64,
    omega: f64,
}

impl DarkStateParams {
    pub fn new(delta: f64, omega: f64) -> Result<Self, Error> {
        if !delta.is_finite() {
            return Err(Error::InvalidParameter(format!("non-finite detuning {delta}")));
        }
        if !(omega >= 0.0) || !omega.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Rabi magnitude must be nonnegative, got {omega}"
            )));
        }
        Ok(Self { delta, omega })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// `K = √(δ² + 8|Ω|²)`, the bright-sector splitting.
    pub fn k(&self) -> f64 {
        (self.delta * self.delta + 8.0 * self.omega * self.omega).sqrt()
    }
}

/// Closed-form spectrum of the driven atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DarkStateSpectrum {
    /// `E₋ = (δ - K)/2 ≤ 0`.
    pub e_minus: f64,
    /// The dark level, pinned at zero for every (δ, Ω).
    pub e_zero: f64,
    /// `E₊ = (δ + K)/2 ≥ 0`.
    pub e_plus: f64,
    /// `K = √(δ² + 8|Ω|²)`.
    pub k: f64,
}

impl DarkStateSpectrum {
    /// Lower spacing `Δ₁ = -E₋ = (K - δ)/2`; positive iff |Ω| > 0.
    pub fn spacing_lower(&self) -> f64 {
        -self.e_minus
    }

    /// Upper spacing `Δ₂ = E₊ = (K + δ)/2`; positive iff |Ω| > 0.
    pub fn spacing_upper(&self) -> f64 {
        self.e_plus
    }
}

/// The rotating-frame Hamiltonian in basis order (|e⟩, |1⟩, |2⟩):
/// δ on the excited diagonal and Ω coupling |e⟩ to both ground levels.
pub fn hamiltonian(p: &DarkStateParams) -> HermitianOperator {
    let mut m = DMatrix::<Complex64>::zeros(3, 3);
    m[(0, 0)] = Complex64::new(p.delta, 0.0);
    let coupling = Complex64::new(p.omega, 0.0);
    m[(0, 1)] = coupling;
    m[(0, 2)] = coupling;
    m[(1, 0)] = coupling;
    m[(2, 0)] = coupling;
    HermitianOperator::new(m).expect("constructed symmetric")
}

/// Eigenvalues in closed form: `E₀ = 0`, `E± = (δ ± K)/2`.
pub fn spectrum_closed_form(p: &DarkStateParams) -> DarkStateSpectrum {
    let k = p.k();
    DarkStateSpectrum {
        e_minus: 0.5 * (p.delta - k),
        e_zero: 0.0,
        e_plus: 0.5 * (p.delta + k),
        k,
    }
}

/// Maps a pair of control points to the 3-level spacing endpoints
/// (Δ₁ʰ, Δ₂ʰ, Δ₁ˡ, Δ₂ˡ). Either point with |Ω| = 0 has a vanishing
/// spacing and is rejected.
pub fn to_endpoints(
    hot: &DarkStateParams,
    cold: &DarkStateParams,
) -> Result<SpacingEndpoints, Error> {
    if hot.omega == 0.0 || cold.omega == 0.0 {
        return Err(Error::DegenerateSpacing);
    }
    let h = spectrum_closed_form(hot);
    let c = spectrum_closed_form(cold);
    SpacingEndpoints::new(
        h.spacing_lower(),
        h.spacing_upper(),
        c.spacing_lower(),
        c.spacing_upper(),
    )
}

/// Case-I test in control coordinates: both spacings shrink toward the
/// cold point iff `(Kˡ - δˡ)/(Kʰ - δʰ) < 1` and `(Kˡ + δˡ)/(Kʰ + δʰ) < 1`.
pub fn case1_constraints(
    hot: &DarkStateParams,
    cold: &DarkStateParams,
) -> Result<bool, Error> {
    if hot.omega == 0.0 || cold.omega == 0.0 {
        return Err(Error::DegenerateSpacing);
    }
    let lower = (cold.k() - cold.delta) / (hot.k() - hot.delta);
    let upper = (cold.k() + cold.delta) / (hot.k() + hot.delta);
    Ok(lower < 1.0 && upper < 1.0)
}

/// Solution-I membership in control coordinates:
/// `δʰ > δˡ > 0` and `|Ωˡ/δˡ| < |Ωʰ/δʰ|`.
pub fn solution1_region(
    hot: &DarkStateParams,
    cold: &DarkStateParams,
) -> Result<bool, Error> {
    if hot.omega == 0.0 || cold.omega == 0.0 {
        return Err(Error::DegenerateSpacing);
    }
    if !(hot.delta > cold.delta && cold.delta > 0.0) {
        return Ok(false);
    }
    Ok((cold.omega / cold.delta).abs() < (hot.omega / hot.delta).abs())
}

/// Solution-II membership in control coordinates:
/// `δʰ < δˡ < 0` and `|Ωˡ/δˡ| < |Ωʰ/δʰ|`.
pub fn solution2_region(
    hot: &DarkStateParams,
    cold: &DarkStateParams,
) -> Result<bool, Error> {
    if hot.omega == 0.0 || cold.omega == 0.0 {
        return Err(Error::DegenerateSpacing);
    }
    if !(hot.delta < cold.delta && cold.delta < 0.0) {
        return Ok(false);
    }
    Ok((cold.omega / cold.delta).abs() < (hot.omega / hot.delta).abs())
}

/// The driven atom as a two-parameter Hamiltonian family over (δ, Ω).
/// Negative Ω values reached by finite-difference probes are harmless:
/// the spectrum depends on Ω² only.
pub struct DarkStateFamily;

impl HamiltonianFamily for DarkStateFamily {
    fn dimension(&self) -> usize {
        3
    }

    fn operator_at(&self, point: &[f64]) -> HermitianOperator {
        let mut m = DMatrix::<Complex64>::zeros(3, 3);
        m[(0, 0)] = Complex64::new(point[0], 0.0);
        let coupling = Complex64::new(point[1], 0.0);
        m[(0, 1)] = coupling;
        m[(0, 2)] = coupling;
        m[(1, 0)] = coupling;
        m[(2, 0)] = coupling;
        HermitianOperator::new(m).expect("constructed symmetric")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigensystem;
    use crate::three_level::{classify_case, ratio_coords, solution_region, CaseLabel, SolutionRegion};
    use nalgebra::DVector;
    use proptest::prelude::*;

    fn params(delta: f64, omega: f64) -> DarkStateParams {
        DarkStateParams::new(delta, omega).unwrap()
    }

    #[test]
    fn hamiltonian_zero_point_is_zero_matrix() {
        let h = hamiltonian(&params(0.0, 0.0));
        assert!(h.matrix().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn hamiltonian_eigenvalues_match_numeric_oracle() {
        let h = hamiltonian(&params(1.0, 1.0));
        let eig = hermitian_eigensystem(&h);
        let expected = [-1.0, 0.0, 2.0];
        for (v, e) in eig.values.iter().zip(expected) {
            assert!((v - e).abs() < 1e-12, "{v} vs {e}");
        }
    }

    #[test]
    fn closed_form_examples() {
        let s = spectrum_closed_form(&params(0.0, 1.0));
        let root2 = 2.0f64.sqrt();
        assert!((s.e_minus + root2).abs() < 1e-15);
        assert_eq!(s.e_zero, 0.0);
        assert!((s.e_plus - root2).abs() < 1e-15);
        assert!((s.spacing_lower() - root2).abs() < 1e-15);
        assert!((s.spacing_upper() - root2).abs() < 1e-15);

        let s = spectrum_closed_form(&params(1.0, 1.0));
        assert_eq!(s.k, 3.0);
        assert_eq!((s.e_minus, s.e_zero, s.e_plus), (-1.0, 0.0, 2.0));
        assert_eq!((s.spacing_lower(), s.spacing_upper()), (1.0, 2.0));

        // Ω = 0: K = |δ|, lower spacing collapses
        let s = spectrum_closed_form(&params(1.0, 0.0));
        assert_eq!((s.e_minus, s.e_zero, s.e_plus), (0.0, 0.0, 1.0));
        assert_eq!(s.spacing_lower(), 0.0);
    }

    #[test]
    fn trace_identity() {
        for (d, w) in [(0.3, 0.7), (-2.0, 1.5), (5.0, 0.1)] {
            let s = spectrum_closed_form(&params(d, w));
            assert!((s.e_minus + s.e_zero + s.e_plus - d).abs() < 1e-14);
        }
    }

    #[test]
    fn endpoints_from_control_points() {
        let e = to_endpoints(&params(2.0, 2.0), &params(1.0, 0.5)).unwrap();
        assert!((e.d1h() - 2.0).abs() < 1e-15);
        assert!((e.d2h() - 4.0).abs() < 1e-15);
        assert!((e.d1l() - 0.3660254037844386).abs() < 1e-15);
        assert!((e.d2l() - 1.3660254037844386).abs() < 1e-15);

        // identical points land on the classification boundary downstream
        let same = to_endpoints(&params(2.0, 2.0), &params(2.0, 2.0)).unwrap();
        assert_eq!(classify_case(&same), CaseLabel::Boundary);

        assert_eq!(
            to_endpoints(&params(2.0, 2.0), &params(1.0, 0.0)),
            Err(Error::DegenerateSpacing)
        );
    }

    #[test]
    fn case1_constraint_examples() {
        assert!(case1_constraints(&params(2.0, 2.0), &params(1.0, 0.5)).unwrap());
        // identical points: both ratios are exactly one
        assert!(!case1_constraints(&params(2.0, 2.0), &params(2.0, 2.0)).unwrap());
        // growing Ω at zero detuning grows both spacings
        assert!(!case1_constraints(&params(0.0, 1.0), &params(0.0, 2.0)).unwrap());
    }

    #[test]
    fn solution1_examples() {
        assert!(solution1_region(&params(2.0, 2.0), &params(1.0, 0.5)).unwrap());
        assert!(!solution1_region(&params(2.0, 2.0), &params(-1.0, 0.5)).unwrap());
        assert!(!solution1_region(&params(2.0, 1.0), &params(1.0, 0.9)).unwrap());
        // near-boundary regression row: Ωˡ/δˡ = 1.999 is not below Ωʰ/δʰ = 1
        assert!(!solution1_region(&params(2.0, 2.0), &params(1.0, 1.999)).unwrap());
        // zero detuning fails the strict sign constraints
        assert!(!solution1_region(&params(2.0, 2.0), &params(0.0, 0.5)).unwrap());
        assert!(!solution1_region(&params(0.0, 2.0), &params(-1.0, 0.5)).unwrap());
    }

    #[test]
    fn solution2_examples() {
        assert!(solution2_region(&params(-2.0, 2.0), &params(-1.0, 0.5)).unwrap());
        assert!(!solution2_region(&params(-2.0, 2.0), &params(1.0, 0.5)).unwrap());
        assert!(!solution2_region(&params(-2.0, 2.0), &params(-2.0, 2.0)).unwrap());
    }

    #[test]
    fn dark_eigenvector_is_parameter_independent() {
        let reference = DVector::from_vec(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
            Complex64::new(-std::f64::consts::FRAC_1_SQRT_2, 0.0),
        ]);
        for (d, w) in [(1.0, 1.0), (-3.0, 0.4), (0.0, 2.5), (7.0, 9.0)] {
            let eig = hermitian_eigensystem(&hamiltonian(&params(d, w)));
            // find the zero eigenvalue
            let idx = eig
                .values
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
                .unwrap()
                .0;
            let v = eig.vectors.column(idx);
            let overlap = (reference.adjoint() * v)[(0, 0)].norm();
            assert!(overlap > 1.0 - 1e-12, "overlap {overlap} at ({d}, {w})");
        }
    }

    proptest! {
        #[test]
        fn closed_form_matches_diagonalization(delta in -10.0f64..10.0, omega in 1e-3f64..10.0) {
            let p = params(delta, omega);
            let s = spectrum_closed_form(&p);
            let closed = [s.e_minus, s.e_zero, s.e_plus];
            let op = hamiltonian(&p);
            let eig = hermitian_eigensystem(&op);
            let mut sorted = closed;
            sorted.sort_by(f64::total_cmp);
            for (c, n) in sorted.iter().zip(&eig.values) {
                prop_assert!((c - n).abs() < 1e-12, "closed {c} vs numeric {n}");
            }
            for k in 0..3 {
                let v = eig.vectors.column(k).into_owned();
                let r = op.matrix() * &v - v.scale(eig.values[k]);
                prop_assert!(r.norm() < 1e-12);
            }
        }

        #[test]
        fn region_membership_implies_case_and_region_labels(
            dh in 0.1f64..5.0, wh in 1e-2f64..5.0,
            dl in 0.1f64..5.0, wl in 1e-2f64..5.0,
        ) {
            let hot = params(dh, wh);
            let cold = params(dl, wl);
            if solution1_region(&hot, &cold).unwrap() {
                let e = to_endpoints(&hot, &cold).unwrap();
                prop_assert_eq!(classify_case(&e), CaseLabel::I);
                prop_assert!(case1_constraints(&hot, &cold).unwrap());
                prop_assert_eq!(solution_region(&ratio_coords(&e)), SolutionRegion::SolutionI);
            }
            // mirrored points exercise Solution II
            let hot_m = params(-dh, wh);
            let cold_m = params(-dl, wl);
            if solution2_region(&hot_m, &cold_m).unwrap() {
                let e = to_endpoints(&hot_m, &cold_m).unwrap();
                prop_assert_eq!(classify_case(&e), CaseLabel::I);
                prop_assert_eq!(solution_region(&ratio_coords(&e)), SolutionRegion::SolutionII);
            }
        }

        #[test]
        fn case1_constraints_agree_with_classification(
            dh in -5.0f64..5.0, wh in 1e-2f64..5.0,
            dl in -5.0f64..5.0, wl in 1e-2f64..5.0,
        ) {
            let hot = params(dh, wh);
            let cold = params(dl, wl);
            let e = to_endpoints(&hot, &cold).unwrap();
            prop_assume!(classify_case(&e) != CaseLabel::Boundary);
            prop_assert_eq!(
                case1_constraints(&hot, &cold).unwrap(),
                classify_case(&e) == CaseLabel::I
            );
        }
    }
}
