//! Full report for one cycle: the aggregate work/heat/entropy numbers plus,
//! for 3-level working substances, the complete spacing-change analysis
//! (case, shape parameters, θ, κ limits, region and looseness), and for
//! dark-state input the control-space region memberships.

use crate::config::{CycleInput, CycleReportConfig, DarkPoint};
use crate::emit::Output;
use crate::CliError;
use qhe_core::cycle::{critical_hot_temperature, CriticalTemperature, OttoCycle};
use qhe_core::dark_state::{
    case1_constraints, solution1_region, solution2_region, spectrum_closed_form, to_endpoints,
    DarkStateParams,
};
use qhe_core::three_level::{
    case2_subcase, classify_case, kappa_high_t, ratio_coords, shape_params, solution_region,
    theta, CaseLabel, SpacingEndpoints,
};
use qhe_core::{Error, LevelSpectrum};
use serde::Serialize;

#[derive(Serialize)]
struct ReportDoc {
    command: &'static str,
    seed: u64,
    status: String,
    t_h: f64,
    t_l: f64,
    net_work: Option<f64>,
    heat_in: Option<f64>,
    heat_out: Option<f64>,
    efficiency: Option<f64>,
    pwc: Option<bool>,
    entropy_hot: Option<f64>,
    entropy_cold: Option<f64>,
    critical_t_h: Option<f64>,
    critical_status: &'static str,
    three_level: Option<ThreeLevelDoc>,
    dark: Option<DarkDoc>,
}

#[derive(Serialize)]
struct ThreeLevelDoc {
    case: String,
    xi: Option<f64>,
    eta: Option<f64>,
    lam: Option<f64>,
    theta: Option<f64>,
    kappa_high_t: Option<f64>,
    kappa_exact: Option<f64>,
    region: String,
    looser: Option<bool>,
    case2_subcase: Option<String>,
    notes: Vec<String>,
}

#[derive(Serialize)]
struct DarkPointDoc {
    delta: f64,
    omega: f64,
    k: f64,
    delta1: f64,
    delta2: f64,
}

#[derive(Serialize)]
struct DarkDoc {
    hot: DarkPointDoc,
    cold: DarkPointDoc,
    degenerate: bool,
    in_solution1: Option<bool>,
    in_solution2: Option<bool>,
    case1_constraints: Option<bool>,
}

fn dark_point_doc(p: &DarkStateParams) -> DarkPointDoc {
    let s = spectrum_closed_form(p);
    DarkPointDoc {
        delta: p.delta(),
        omega: p.omega(),
        k: s.k,
        delta1: s.spacing_lower(),
        delta2: s.spacing_upper(),
    }
}

fn build_dark_point(p: &DarkPoint, which: &str) -> Result<DarkStateParams, CliError> {
    DarkStateParams::new(p.delta, p.omega)
        .map_err(|e| CliError::config(format!("{which} dark point: {e}")))
}

pub fn output(cfg: &CycleReportConfig, seed: u64) -> Result<Output, CliError> {
    if !(cfg.t_h > 0.0) || !cfg.t_h.is_finite() || !(cfg.t_l > 0.0) || !cfg.t_l.is_finite() {
        return Err(CliError::config(format!(
            "temperatures must be positive, got t_h {} and t_l {}",
            cfg.t_h, cfg.t_l
        )));
    }

    let (spectra, dark_doc): (Option<(LevelSpectrum, LevelSpectrum)>, Option<DarkDoc>) =
        match &cfg.cycle {
            CycleInput::Spectra { hot, cold } => {
                let hot = hot.build("hot")?;
                let cold = cold.build("cold")?;
                if hot.len() != cold.len() {
                    return Err(CliError::config(format!(
                        "hot and cold spectra must have the same dimension ({} vs {})",
                        hot.len(),
                        cold.len()
                    )));
                }
                (Some((hot, cold)), None)
            }
            CycleInput::Dark { hot, cold } => {
                let hot = build_dark_point(hot, "hot")?;
                let cold = build_dark_point(cold, "cold")?;
                let degenerate = hot.omega() == 0.0 || cold.omega() == 0.0;
                let doc = DarkDoc {
                    hot: dark_point_doc(&hot),
                    cold: dark_point_doc(&cold),
                    degenerate,
                    in_solution1: solution1_region(&hot, &cold).ok(),
                    in_solution2: solution2_region(&hot, &cold).ok(),
                    case1_constraints: case1_constraints(&hot, &cold).ok(),
                };
                if degenerate {
                    // no cycle exists at a collapsed spacing; report what is known
                    let doc = ReportDoc {
                        command: "cycle-report",
                        seed,
                        status: "degenerate_spacing".into(),
                        t_h: cfg.t_h,
                        t_l: cfg.t_l,
                        net_work: None,
                        heat_in: None,
                        heat_out: None,
                        efficiency: None,
                        pwc: None,
                        entropy_hot: None,
                        entropy_cold: None,
                        critical_t_h: None,
                        critical_status: "not_computed",
                        three_level: None,
                        dark: Some(doc),
                    };
                    return Ok(Output::Document(
                        serde_json::to_value(doc).expect("serializable report"),
                    ));
                }
                let e = to_endpoints(&hot, &cold).expect("both Rabi strengths positive");
                (Some((e.hot_spectrum(), e.cold_spectrum())), Some(doc))
            }
        };

    let (hot, cold) = spectra.expect("non-degenerate inputs produce spectra");
    let cycle = OttoCycle::new(hot.clone(), cold.clone(), cfg.t_h, cfg.t_l)
        .map_err(|e| CliError::config(e.to_string()))?;
    let report = cycle.report();

    let (critical_t_h, critical_status) =
        match critical_hot_temperature(&hot, &cold, cfg.t_l).expect("validated inputs") {
            CriticalTemperature::Found(t) => (Some(t), "found"),
            CriticalTemperature::NotFound => (None, "no_root"),
            CriticalTemperature::MultipleRoots => (None, "multiple_roots"),
        };

    let three_level = (hot.len() == 3).then(|| {
        let hs = hot.spacings();
        let cs = cold.spacings();
        let e = SpacingEndpoints::new(hs[0], hs[1], cs[0], cs[1])
            .expect("spectrum spacings are positive");
        three_level_doc(&e, critical_t_h.map(|t| t / cfg.t_l))
    });

    let doc = ReportDoc {
        command: "cycle-report",
        seed,
        status: "ok".into(),
        t_h: cfg.t_h,
        t_l: cfg.t_l,
        net_work: Some(report.net_work),
        heat_in: Some(report.heat_in),
        heat_out: Some(report.heat_out),
        efficiency: report.efficiency,
        pwc: Some(report.pwc),
        entropy_hot: Some(report.entropy_hot),
        entropy_cold: Some(report.entropy_cold),
        critical_t_h,
        critical_status,
        three_level,
        dark: dark_doc,
    };
    Ok(Output::Document(
        serde_json::to_value(doc).expect("serializable report"),
    ))
}

fn three_level_doc(e: &SpacingEndpoints, kappa_exact: Option<f64>) -> ThreeLevelDoc {
    let case = classify_case(e);
    let mut notes = Vec::new();

    let shape = match shape_params(e) {
        Ok(p) => Some(p),
        Err(Error::XiUndefined) => {
            notes.push("xi_undefined".to_string());
            None
        }
        Err(e) => unreachable!("shape_params: unexpected error {e}"),
    };
    let theta_value = match theta(e) {
        Ok(t) => Some(t),
        Err(Error::XiUndefined) => None,
        Err(Error::ThetaUndefined) => {
            notes.push("theta_undefined".to_string());
            None
        }
        Err(e) => unreachable!("theta: unexpected error {e}"),
    };
    let kappa = kappa_high_t(e).ok();
    let looser = qhe_core::three_level::looseness_verdict(e).ok().map(|v| v.looser);
    if case != CaseLabel::I {
        notes.push(format!("case_{}_has_no_high_t_kappa", case.to_string().to_lowercase()));
    }
    let subcase = match case2_subcase(e) {
        Ok(s) => Some(s.to_string()),
        Err(Error::BoundarySubcase) => {
            notes.push("subcase_boundary".to_string());
            None
        }
        Err(_) => None,
    };

    ThreeLevelDoc {
        case: case.to_string(),
        xi: shape.map(|p| p.xi),
        eta: shape.map(|p| p.eta),
        lam: shape.map(|p| p.lam),
        theta: theta_value,
        kappa_high_t: kappa,
        kappa_exact,
        region: solution_region(&ratio_coords(e)).to_string(),
        looser,
        case2_subcase: subcase,
        notes,
    }
}
