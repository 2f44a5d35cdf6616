//! Classification of 3-level engines by how the two level spacings change
//! between the bath contacts, the (ξ, η, λ) shape parameters, the
//! high-temperature positive-work condition, the Solution I/II regions in
//! ratio coordinates, and the looseness comparison against the 2-level bound.

use crate::cycle::OttoCycle;
use crate::error::Error;
use crate::spectrum::LevelSpectrum;
use std::fmt;

/// The four spacings of a 3-level cycle: (Δ₁ʰ, Δ₂ʰ) at the hot contact and
/// (Δ₁ˡ, Δ₂ˡ) at the cold contact, all strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacingEndpoints {
    d1h: f64,
    d2h: f64,
    d1l: f64,
    d2l: f64,
}

impl SpacingEndpoints {
    pub fn new(d1h: f64, d2h: f64, d1l: f64, d2l: f64) -> Result<Self, Error> {
        for d in [d1h, d2h, d1l, d2l] {
            if !(d > 0.0) || !d.is_finite() {
                return Err(Error::InvalidSpacing(d));
            }
        }
        Ok(Self { d1h, d2h, d1l, d2l })
    }

    pub fn d1h(&self) -> f64 {
        self.d1h
    }
    pub fn d2h(&self) -> f64 {
        self.d2h
    }
    pub fn d1l(&self) -> f64 {
        self.d1l
    }
    pub fn d2l(&self) -> f64 {
        self.d2l
    }
    /// Full hot gap Δʰ = Δ₁ʰ + Δ₂ʰ.
    pub fn dh(&self) -> f64 {
        self.d1h + self.d2h
    }
    /// Full cold gap Δˡ = Δ₁ˡ + Δ₂ˡ.
    pub fn dl(&self) -> f64 {
        self.d1l + self.d2l
    }

    /// Hot-contact spectrum (0, Δ₁ʰ, Δʰ).
    pub fn hot_spectrum(&self) -> LevelSpectrum {
        LevelSpectrum::from_spacings(&[self.d1h, self.d2h], 0.0)
            .expect("spacings validated on construction")
    }

    /// Cold-contact spectrum (0, Δ₁ˡ, Δˡ).
    pub fn cold_spectrum(&self) -> LevelSpectrum {
        LevelSpectrum::from_spacings(&[self.d1l, self.d2l], 0.0)
            .expect("spacings validated on construction")
    }

    /// The equivalent Otto cycle at the given bath temperatures.
    pub fn cycle(&self, t_hot: f64, t_cold: f64) -> Result<OttoCycle, Error> {
        OttoCycle::new(self.hot_spectrum(), self.cold_spectrum(), t_hot, t_cold)
    }
}

/// Sign pattern of the two spacing changes; `Boundary` when either change
/// is exactly zero (ξ undefined or degenerate sub-engine).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseLabel {
    /// Both spacings shrink toward the cold contact.
    I,
    /// Lower spacing shrinks, upper grows.
    II,
    /// Lower spacing grows, upper shrinks.
    III,
    /// Both spacings grow.
    IV,
    Boundary,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::I => "I",
            CaseLabel::II => "II",
            CaseLabel::III => "III",
            CaseLabel::IV => "IV",
            CaseLabel::Boundary => "Boundary",
        };
        write!(f, "{s}")
    }
}

/// Dimensionless reparametrization of the four spacings:
/// `ξ = 1 + (Δ₂ʰ-Δ₂ˡ)/(Δ₁ʰ-Δ₁ˡ)` (equivalently (Δʰ-Δˡ)/(Δ₁ʰ-Δ₁ˡ)),
/// `η = Δ₁ˡ/Δˡ`, `λ = Δ₁ʰ/Δʰ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeParams {
    pub xi: f64,
    pub eta: f64,
    pub lam: f64,
}

/// The three spacing ratios relative to Δ₁ʰ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioCoords {
    pub r1l: f64,
    pub r2l: f64,
    pub r2h: f64,
}

/// Sub-regions of Case I where θ < 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionRegion {
    SolutionI,
    SolutionII,
    Neither,
}

impl fmt::Display for SolutionRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SolutionRegion::SolutionI => "solution_i",
            SolutionRegion::SolutionII => "solution_ii",
            SolutionRegion::Neither => "neither",
        };
        write!(f, "{s}")
    }
}

/// Comparison of the high-temperature critical ratio κ against the two
/// 2-level benchmarks: the full gap ratio Δʰ/Δˡ and the lower sub-gap ratio
/// Δ₁ʰ/Δ₁ˡ. The condition is looser than 2-level when κ beats both while
/// still exceeding one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoosenessVerdict {
    pub kappa_high_t: f64,
    pub two_level_full: f64,
    pub two_level_sub: f64,
    pub looser: bool,
}

/// Sign pattern of (F(ξ,η), F(ξ,λ)) within Case II.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case2Subcase {
    /// Both positive.
    A,
    /// F(ξ,η) > 0 > F(ξ,λ) — provably empty in Case II.
    B,
    /// Both negative.
    C,
    /// F(ξ,η) < 0 < F(ξ,λ).
    D,
}

impl fmt::Display for Case2Subcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case2Subcase::A => "a",
            Case2Subcase::B => "b",
            Case2Subcase::C => "c",
            Case2Subcase::D => "d",
        };
        write!(f, "{s}")
    }
}

/// Sign test on the two spacing changes.
pub fn classify_case(e: &SpacingEndpoints) -> CaseLabel {
    let lower = e.d1h - e.d1l;
    let upper = e.d2h - e.d2l;
    if lower == 0.0 || upper == 0.0 {
        return CaseLabel::Boundary;
    }
    match (lower > 0.0, upper > 0.0) {
        (true, true) => CaseLabel::I,
        (true, false) => CaseLabel::II,
        (false, true) => CaseLabel::III,
        (false, false) => CaseLabel::IV,
    }
}

/// The (ξ, η, λ) parameters; fails when Δ₁ does not change (ξ undefined).
pub fn shape_params(e: &SpacingEndpoints) -> Result<ShapeParams, Error> {
    if e.d1h == e.d1l {
        return Err(Error::XiUndefined);
    }
    Ok(ShapeParams {
        xi: 1.0 + (e.d2h - e.d2l) / (e.d1h - e.d1l),
        eta: e.d1l / e.dl(),
        lam: e.d1h / e.dh(),
    })
}

/// `F(ξ, x) = (2ξ - 1) + (2 - ξ) x`, the linear form whose signs organize
/// the high-temperature analysis.
pub fn f_value(xi: f64, x: f64) -> f64 {
    (2.0 * xi - 1.0) + (2.0 - xi) * x
}

/// `θ = F(ξ,λ) / F(ξ,η)`; the factor multiplying the 2-level threshold in
/// the Case-I high-temperature positive-work condition.
pub fn theta(e: &SpacingEndpoints) -> Result<f64, Error> {
    let p = shape_params(e)?;
    let denom = f_value(p.xi, p.eta);
    if denom == 0.0 {
        return Err(Error::ThetaUndefined);
    }
    Ok(f_value(p.xi, p.lam) / denom)
}

/// Net work of the 3-level cycle in closed form:
/// `ΔW = [G(Δ,Δ₁) + G(Δ₁,Δ)] / (Zʰ Zˡ)` where each `G` pairs a spacing
/// change with a four-exponential population factor. Equal to the direct
/// population sum on the spectra (0, Δ₁ˢ, Δˢ).
pub fn closed_form_work(e: &SpacingEndpoints, t_hot: f64, t_cold: f64) -> Result<f64, Error> {
    if !(t_hot > 0.0) || !t_hot.is_finite() {
        return Err(Error::InvalidTemperature(t_hot));
    }
    if !(t_cold > 0.0) || !t_cold.is_finite() {
        return Err(Error::InvalidTemperature(t_cold));
    }
    let bh = 1.0 / t_hot;
    let bl = 1.0 / t_cold;
    let (dh, dl) = (e.dh(), e.dl());
    let (d1h, d1l) = (e.d1h, e.d1l);

    let zh = 1.0 + (-bh * d1h).exp() + (-bh * dh).exp();
    let zl = 1.0 + (-bl * d1l).exp() + (-bl * dl).exp();

    // population factor for the gap pair (aʰ, aˡ) against the partner (bʰ, bˡ)
    let factor = |ah: f64, al: f64, bh_gap: f64, bl_gap: f64| {
        (-bh * ah).exp() - (-bl * al).exp() + (-bh * ah - bl * bl_gap).exp()
            - (-bh * bh_gap - bl * al).exp()
    };
    let g_full = factor(dh, dl, d1h, d1l) * (dh - dl);
    let g_sub = factor(d1h, d1l, dh, dl) * (d1h - d1l);
    Ok((g_full + g_sub) / (zh * zl))
}

/// High-temperature positive-work sign:
/// `[F(ξ,η) - (T_l/T_h)(Δʰ/Δˡ) F(ξ,λ)] · (Δ₁ʰ - Δ₁ˡ) > 0`.
/// The overall positive prefactor is dropped; it never changes the sign.
pub fn high_t_pwc_sign(e: &SpacingEndpoints, t_hot: f64, t_cold: f64) -> Result<bool, Error> {
    if !(t_hot > 0.0) || !t_hot.is_finite() {
        return Err(Error::InvalidTemperature(t_hot));
    }
    if !(t_cold > 0.0) || !t_cold.is_finite() {
        return Err(Error::InvalidTemperature(t_cold));
    }
    let p = shape_params(e)?;
    let bracket =
        f_value(p.xi, p.eta) - (t_cold / t_hot) * (e.dh() / e.dl()) * f_value(p.xi, p.lam);
    Ok(bracket * (e.d1h - e.d1l) > 0.0)
}

/// High-temperature critical ratio `κ = (Δʰ/Δˡ) θ` for Case I, where both
/// F values are positive and the condition takes the form `T_h > T_l κ`.
pub fn kappa_high_t(e: &SpacingEndpoints) -> Result<f64, Error> {
    let case = classify_case(e);
    if case != CaseLabel::I {
        return Err(Error::NotApplicable {
            operation: "kappa_high_t",
            found: case,
        });
    }
    Ok(e.dh() / e.dl() * theta(e)?)
}

/// Spacing ratios (Δ₁ˡ, Δ₂ˡ, Δ₂ʰ) / Δ₁ʰ.
pub fn ratio_coords(e: &SpacingEndpoints) -> RatioCoords {
    RatioCoords {
        r1l: e.d1l / e.d1h,
        r2l: e.d2l / e.d1h,
        r2h: e.d2h / e.d1h,
    }
}

/// Region test in ratio coordinates, under the Case-I presuppositions
/// `r₁ˡ < 1` and `r₂ʰ > r₂ˡ`:
/// Solution I requires `r₂ʰ + r₁ˡ - r₂ˡ > 1` and `r₂ˡ > r₁ˡ r₂ʰ`;
/// Solution II requires both reversed. All inequalities strict.
pub fn solution_region(rc: &RatioCoords) -> SolutionRegion {
    if !(rc.r1l < 1.0 && rc.r2h > rc.r2l) {
        return SolutionRegion::Neither;
    }
    let plane = rc.r2h + rc.r1l - rc.r2l;
    let surface = rc.r1l * rc.r2h;
    if plane > 1.0 && rc.r2l > surface {
        SolutionRegion::SolutionI
    } else if plane < 1.0 && rc.r2l < surface {
        SolutionRegion::SolutionII
    } else {
        SolutionRegion::Neither
    }
}

/// Compares the Case-I high-temperature critical ratio against both
/// 2-level benchmarks. There is a single work-zero boundary in the
/// high-temperature limit, so both sub-engine comparisons reduce to κ.
pub fn looseness_verdict(e: &SpacingEndpoints) -> Result<LoosenessVerdict, Error> {
    let case = classify_case(e);
    if case != CaseLabel::I {
        return Err(Error::NotApplicable {
            operation: "looseness_verdict",
            found: case,
        });
    }
    let kappa = kappa_high_t(e)?;
    let two_level_full = e.dh() / e.dl();
    let two_level_sub = e.d1h / e.d1l;
    Ok(LoosenessVerdict {
        kappa_high_t: kappa,
        two_level_full,
        two_level_sub,
        looser: 1.0 < kappa && kappa < two_level_full && kappa < two_level_sub,
    })
}

/// Sign pattern of `(F(ξ,η), F(ξ,λ))` within Case II. An exactly vanishing
/// F value lies on a sub-case boundary and is rejected.
pub fn case2_subcase(e: &SpacingEndpoints) -> Result<Case2Subcase, Error> {
    let case = classify_case(e);
    if case != CaseLabel::II {
        return Err(Error::NotApplicable {
            operation: "case2_subcase",
            found: case,
        });
    }
    let p = shape_params(e)?;
    let f_eta = f_value(p.xi, p.eta);
    let f_lam = f_value(p.xi, p.lam);
    if f_eta == 0.0 || f_lam == 0.0 {
        return Err(Error::BoundarySubcase);
    }
    Ok(match (f_eta > 0.0, f_lam > 0.0) {
        (true, true) => Case2Subcase::A,
        (true, false) => Case2Subcase::B,
        (false, false) => Case2Subcase::C,
        (false, true) => Case2Subcase::D,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn endpoints(d1h: f64, d2h: f64, d1l: f64, d2l: f64) -> SpacingEndpoints {
        SpacingEndpoints::new(d1h, d2h, d1l, d2l).unwrap()
    }

    /// The worked Case-I / Solution-I instance used throughout.
    fn worked_instance() -> SpacingEndpoints {
        endpoints(1.0, 1.5, 0.5, 0.8)
    }

    #[test]
    fn endpoints_reject_nonpositive_spacings() {
        assert!(SpacingEndpoints::new(1.0, 0.0, 1.0, 1.0).is_err());
        assert!(SpacingEndpoints::new(1.0, 1.0, -0.5, 1.0).is_err());
        assert!(SpacingEndpoints::new(f64::NAN, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_case(&endpoints(2.0, 2.0, 1.0, 1.0)), CaseLabel::I);
        assert_eq!(classify_case(&endpoints(2.0, 1.0, 1.0, 2.0)), CaseLabel::II);
        assert_eq!(classify_case(&endpoints(1.0, 2.0, 2.0, 1.0)), CaseLabel::III);
        assert_eq!(classify_case(&endpoints(1.0, 1.0, 2.0, 2.0)), CaseLabel::IV);
        assert_eq!(classify_case(&endpoints(1.0, 1.0, 1.0, 2.0)), CaseLabel::Boundary);
        assert_eq!(classify_case(&endpoints(1.0, 2.0, 0.5, 2.0)), CaseLabel::Boundary);
    }

    #[test]
    fn shape_params_worked_instance() {
        let p = shape_params(&worked_instance()).unwrap();
        assert!((p.xi - 2.4).abs() < 1e-12);
        assert!((p.eta - 0.5 / 1.3).abs() < 1e-12);
        assert!((p.lam - 0.4).abs() < 1e-12);
    }

    #[test]
    fn shape_params_special_values() {
        // equal absolute change in both spacings: ξ = 2
        let p = shape_params(&endpoints(1.0, 2.0, 0.5, 1.5)).unwrap();
        assert_eq!(p.xi, 2.0);
        // upper spacing unchanged: ξ = 1 — but that is a Boundary case for
        // classification purposes; ξ itself is still defined
        let p = shape_params(&endpoints(1.0, 2.0, 0.5, 2.0)).unwrap();
        assert_eq!(p.xi, 1.0);
        // lower spacing unchanged: ξ undefined
        assert_eq!(
            shape_params(&endpoints(1.0, 2.0, 1.0, 1.5)),
            Err(Error::XiUndefined)
        );
    }

    #[test]
    fn f_value_examples() {
        let eta = 0.37;
        assert!((f_value(1.0, eta) - (1.0 + eta)).abs() < 1e-15);
        assert_eq!(f_value(2.0, 0.123), 3.0);
        assert_eq!(f_value(2.0, 0.999), 3.0);
        assert_eq!(f_value(0.0, 0.0), -1.0);
    }

    #[test]
    fn theta_is_one_for_proportional_and_xi_two() {
        // exactly proportional spacings (factor 2 is exact in binary)
        let e = endpoints(2.0, 3.0, 1.0, 1.5);
        assert_eq!(theta(&e).unwrap(), 1.0);
        // ξ = 2 makes F independent of its second argument
        let e = endpoints(1.0, 2.0, 0.5, 1.5);
        assert_eq!(theta(&e).unwrap(), 1.0);
    }

    #[test]
    fn theta_worked_instance() {
        let t = theta(&worked_instance()).unwrap();
        assert!((t - 0.9983122362869198).abs() < 1e-12);
        assert!(t < 1.0);
    }

    #[test]
    fn theta_undefined_cases() {
        assert_eq!(theta(&endpoints(1.0, 2.0, 1.0, 1.5)), Err(Error::XiUndefined));
        // F(ξ,η) = 0 exactly: ξ = 0 with η = 1/2
        let e = endpoints(3.0, 1.0, 2.0, 2.0);
        let p = shape_params(&e).unwrap();
        assert_eq!(p.xi, 0.0);
        assert_eq!(p.eta, 0.5);
        assert_eq!(theta(&e), Err(Error::ThetaUndefined));
    }

    #[test]
    fn closed_form_work_zero_cases() {
        // identical endpoints: both gap changes vanish
        let e = endpoints(1.0, 1.5, 1.0, 1.5);
        assert_eq!(closed_form_work(&e, 3.0, 1.0).unwrap(), 0.0);
        // proportional endpoints at threshold temperatures
        let e = endpoints(1.0, 1.5, 0.5, 0.75);
        let w = closed_form_work(&e, 2.0, 1.0).unwrap();
        assert!(w.abs() < 1e-16);
    }

    #[test]
    fn closed_form_matches_direct_sum() {
        let e = worked_instance();
        let closed = closed_form_work(&e, 10.0, 1.0).unwrap();
        let direct = e.cycle(10.0, 1.0).unwrap().net_work();
        assert!((closed - direct).abs() <= 1e-12 * direct.abs());
        // frozen from high-precision evaluation
        assert!((closed - 0.18139301678807206).abs() < 1e-14);
    }

    #[test]
    fn high_t_sign_worked_instance() {
        let e = worked_instance();
        assert!(high_t_pwc_sign(&e, 10.0, 1.0).unwrap());
        assert!(!high_t_pwc_sign(&e, 1.01, 1.0).unwrap());
    }

    #[test]
    fn high_t_sign_is_false_on_the_boundary() {
        // proportional instance with exact binary arithmetic:
        // θ = 1, Δʰ/Δˡ = 2, so the bracket vanishes exactly at T_h/T_l = 2
        let e = endpoints(1.0, 1.0, 0.5, 0.5);
        assert!(!high_t_pwc_sign(&e, 2.0, 1.0).unwrap());
        assert!(high_t_pwc_sign(&e, 2.5, 1.0).unwrap());
        assert!(!high_t_pwc_sign(&e, 1.5, 1.0).unwrap());
    }

    #[test]
    fn kappa_worked_instance_and_bounds() {
        let e = worked_instance();
        let k = kappa_high_t(&e).unwrap();
        assert!((k - 1.9198312236286920).abs() < 1e-12);
        let sub_ratios = [e.d1h() / e.d1l(), e.d2h() / e.d2l()];
        assert!((sub_ratios[0] - 2.0).abs() < 1e-15);
        assert!((sub_ratios[1] - 1.875).abs() < 1e-15);
        assert!(k > 1.875 && k < 2.0);
    }

    #[test]
    fn kappa_for_proportional_endpoints_is_gap_ratio() {
        let e = endpoints(2.0, 3.0, 1.0, 1.5);
        assert_eq!(kappa_high_t(&e).unwrap(), 2.0);
    }

    #[test]
    fn kappa_rejected_outside_case_one() {
        let boundary = endpoints(1.0, 1.0, 0.5, 1.0);
        assert!(matches!(
            kappa_high_t(&boundary),
            Err(Error::NotApplicable { found: CaseLabel::Boundary, .. })
        ));
        let case2 = endpoints(2.0, 1.0, 1.0, 2.0);
        assert!(matches!(
            kappa_high_t(&case2),
            Err(Error::NotApplicable { found: CaseLabel::II, .. })
        ));
    }

    #[test]
    fn ratio_coords_examples() {
        let rc = ratio_coords(&endpoints(2.0, 3.0, 1.0, 1.0));
        assert_eq!((rc.r1l, rc.r2l, rc.r2h), (0.5, 0.5, 1.5));
        let rc = ratio_coords(&worked_instance());
        assert_eq!((rc.r1l, rc.r2l, rc.r2h), (0.5, 0.8, 1.5));
        let rc = ratio_coords(&endpoints(1.0, 0.9, 0.78, 0.7));
        assert_eq!((rc.r1l, rc.r2l, rc.r2h), (0.78, 0.7, 0.9));
    }

    #[test]
    fn solution_region_examples() {
        let r = solution_region(&RatioCoords { r1l: 0.5, r2l: 0.8, r2h: 1.5 });
        assert_eq!(r, SolutionRegion::SolutionI);
        let r = solution_region(&RatioCoords { r1l: 0.78, r2l: 0.7, r2h: 0.9 });
        assert_eq!(r, SolutionRegion::SolutionII);
        let r = solution_region(&RatioCoords { r1l: 1.2, r2l: 0.7, r2h: 0.9 });
        assert_eq!(r, SolutionRegion::Neither);
    }

    #[test]
    fn looseness_worked_instance_is_looser() {
        let v = looseness_verdict(&worked_instance()).unwrap();
        assert!(v.looser);
        assert!(v.kappa_high_t > 1.0);
        assert!(v.kappa_high_t < v.two_level_full);
        assert!(v.kappa_high_t < v.two_level_sub);
    }

    #[test]
    fn looseness_proportional_is_not_looser() {
        let v = looseness_verdict(&endpoints(2.0, 3.0, 1.0, 1.5)).unwrap();
        assert!(!v.looser, "κ equals the full gap ratio, not strictly below");
    }

    #[test]
    fn looseness_solution_two_fails_sub_gap_comparison() {
        let v = looseness_verdict(&endpoints(1.0, 0.9, 0.78, 0.7)).unwrap();
        assert!(!v.looser);
        assert!(v.kappa_high_t >= v.two_level_sub);
    }

    #[test]
    fn looseness_not_applicable_outside_case_one() {
        assert!(matches!(
            looseness_verdict(&endpoints(2.0, 1.0, 1.0, 2.0)),
            Err(Error::NotApplicable { found: CaseLabel::II, .. })
        ));
    }

    #[test]
    fn case2_subcase_examples() {
        // ξ = 0, η = 1/3, λ = 2/3: F(0,η) < 0 < F(0,λ) → d
        assert_eq!(case2_subcase(&endpoints(2.0, 1.0, 1.0, 2.0)).unwrap(), Case2Subcase::D);
        // ξ close to 1, small η and λ: both F > 0 → a
        assert_eq!(
            case2_subcase(&endpoints(1.0, 9.0, 0.9, 9.05)).unwrap(),
            Case2Subcase::A
        );
        // exact zero F: ξ = 0 with η = 1/2
        assert_eq!(case2_subcase(&endpoints(3.0, 1.0, 2.0, 2.0)), Err(Error::BoundarySubcase));
        // wrong case
        assert!(matches!(
            case2_subcase(&endpoints(2.0, 2.0, 1.0, 1.0)),
            Err(Error::NotApplicable { found: CaseLabel::I, .. })
        ));
    }

    fn spacing() -> impl Strategy<Value = f64> {
        // log-uniform over [1e-2, 1e2]
        (-2.0f64..2.0).prop_map(|x| 10f64.powf(x))
    }

    proptest! {
        #[test]
        fn closed_form_agrees_with_direct_sum(
            d1h in spacing(), d2h in spacing(), d1l in spacing(), d2l in spacing(),
            th in spacing(), tl in spacing(),
        ) {
            let e = SpacingEndpoints::new(d1h, d2h, d1l, d2l).unwrap();
            let closed = closed_form_work(&e, th, tl).unwrap();
            let direct = e.cycle(th, tl).unwrap().net_work();
            let tol = 1e-12 * closed.abs().max(direct.abs());
            prop_assert!((closed - direct).abs() <= tol.max(1e-15),
                "closed={closed} direct={direct}");
        }

        #[test]
        fn region_matches_shape_parameter_characterization(
            d1h in spacing(), d2h in spacing(), d1l in spacing(), d2l in spacing(),
        ) {
            let e = SpacingEndpoints::new(d1h, d2h, d1l, d2l).unwrap();
            prop_assume!(classify_case(&e) == CaseLabel::I);
            let p = shape_params(&e).unwrap();
            let t = theta(&e).unwrap();
            // stay away from the strict-inequality boundaries
            prop_assume!((p.xi - 2.0).abs() > 1e-9);
            prop_assume!((p.lam - p.eta).abs() > 1e-9 * p.eta.max(p.lam));
            prop_assume!((t - 1.0).abs() > 1e-9);
            let region = solution_region(&ratio_coords(&e));
            let by_shape = if p.xi > 2.0 && p.lam > p.eta {
                SolutionRegion::SolutionI
            } else if 1.0 < p.xi && p.xi < 2.0 && p.lam < p.eta {
                SolutionRegion::SolutionII
            } else {
                SolutionRegion::Neither
            };
            prop_assert_eq!(region, by_shape);
            prop_assert_eq!(region != SolutionRegion::Neither, t < 1.0);
        }

        #[test]
        fn kappa_bounds_hold_in_case_one(
            d1h in spacing(), d2h in spacing(), d1l in spacing(), d2l in spacing(),
        ) {
            let e = SpacingEndpoints::new(d1h, d2h, d1l, d2l).unwrap();
            prop_assume!(classify_case(&e) == CaseLabel::I);
            let k = kappa_high_t(&e).unwrap();
            let r1 = e.d1h() / e.d1l();
            let r2 = e.d2h() / e.d2l();
            prop_assert!(k >= r1.min(r2) && k <= r1.max(r2), "κ={k} outside [{}, {}]", r1.min(r2), r1.max(r2));
        }

        #[test]
        fn case2_subcase_b_never_appears(
            d1h in spacing(), d2h in spacing(), d1l in spacing(), d2l in spacing(),
        ) {
            let e = SpacingEndpoints::new(d1h, d2h, d1l, d2l).unwrap();
            prop_assume!(classify_case(&e) == CaseLabel::II);
            if let Ok(sub) = case2_subcase(&e) {
                prop_assert_ne!(sub, Case2Subcase::B);
            }
        }

        #[test]
        fn high_t_sign_matches_exact_sign(
            d1h in spacing(), d2h in spacing(), d1l in spacing(), d2l in spacing(),
            tau in 1.1f64..50.0,
        ) {
            let e = SpacingEndpoints::new(d1h, d2h, d1l, d2l).unwrap();
            prop_assume!(e.d1h() != e.d1l());
            let scale = e.dh().max(e.dl());
            let tl = 1e3 * scale;
            let th = tau * tl;
            // skip samples closer than 1% to the high-T boundary
            let p = shape_params(&e).unwrap();
            let f_eta = f_value(p.xi, p.eta);
            if f_eta != 0.0 {
                let boundary = e.dh() / e.dl() * f_value(p.xi, p.lam) / f_eta;
                prop_assume!(boundary <= 0.0 || (tau - boundary).abs() > 0.01 * boundary);
            }
            let exact = e.cycle(th, tl).unwrap().net_work();
            prop_assume!(exact != 0.0);
            prop_assert_eq!(high_t_pwc_sign(&e, th, tl).unwrap(), exact > 0.0,
                "exact work {} at tau={}", exact, tau);
        }
    }
}
