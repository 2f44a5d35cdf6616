//! Convergence of the exact critical temperature ratio toward its
//! high-temperature limit: the cold temperature climbs a geometric ladder
//! (in units of the largest full gap) and each rung reports both ratios and
//! their relative gap.

use super::status_cell;
use crate::config::LimitStudyConfig;
use crate::emit::{Cell, Output, Table};
use crate::{grid, CliError};
use qhe_core::cycle::{critical_hot_temperature, CriticalTemperature};
use qhe_core::three_level::{classify_case, kappa_high_t, CaseLabel, SpacingEndpoints};

const COLUMNS: [&str; 5] = ["t_l", "kappa_exact", "kappa_high_t", "rel_gap", "status"];

pub fn output(cfg: &LimitStudyConfig, seed: u64) -> Result<Output, CliError> {
    let e = SpacingEndpoints::new(
        cfg.endpoints.d1h,
        cfg.endpoints.d2h,
        cfg.endpoints.d1l,
        cfg.endpoints.d2l,
    )
    .map_err(|err| CliError::config(format!("endpoints: {err}")))?;

    let ladder = &cfg.ladder;
    if !(ladder.start_scale > 0.0) || !ladder.start_scale.is_finite() {
        return Err(CliError::config("ladder.start_scale must be positive".into()));
    }
    if !(ladder.factor > 1.0) || !ladder.factor.is_finite() {
        return Err(CliError::config("ladder.factor must exceed one".into()));
    }
    if ladder.count == 0 {
        return Err(CliError::config("ladder.count must be at least one".into()));
    }

    let energy_scale = e.dh().max(e.dl());
    let rungs: Vec<f64> = (0..ladder.count)
        .map(|i| ladder.start_scale * ladder.factor.powi(i as i32) * energy_scale)
        .collect();

    let case = classify_case(&e);
    let kappa_limit = kappa_high_t(&e).ok();
    let hot = e.hot_spectrum();
    let cold = e.cold_spectrum();

    let rows = grid::map_cells(&[rungs], |p| {
        let t_l = p[0];
        let mut status: Vec<String> = Vec::new();
        let kappa_exact = match critical_hot_temperature(&hot, &cold, t_l)
            .expect("validated inputs")
        {
            CriticalTemperature::Found(t) => Some(t / t_l),
            CriticalTemperature::NotFound => {
                status.push("no_root".into());
                None
            }
            CriticalTemperature::MultipleRoots => {
                status.push("multiple_roots".into());
                None
            }
        };
        if kappa_limit.is_none() {
            status.push(format!("case_{}", case.to_string().to_lowercase()));
        }
        let gap = match (kappa_exact, kappa_limit) {
            (Some(ke), Some(kh)) => Some((ke - kh).abs() / kh),
            _ => None,
        };
        let markers: Vec<&str> = status.iter().map(String::as_str).collect();
        vec![
            Cell::Num(t_l),
            kappa_exact.map_or(Cell::Empty, Cell::Num),
            kappa_limit.map_or(Cell::Empty, Cell::Num),
            gap.map_or(Cell::Empty, Cell::Num),
            status_cell(&markers),
        ]
    });

    let table = Table {
        command: "limit-study",
        seed,
        columns: COLUMNS.to_vec(),
        rows,
    };
    table.check_shape()?;
    validate(&table, case)?;
    Ok(Output::Table(table))
}

fn validate(table: &Table, case: CaseLabel) -> Result<(), CliError> {
    let kh = table.column("kappa_high_t");
    let gap = table.column("rel_gap");
    for (i, r) in table.rows.iter().enumerate() {
        let has_limit = matches!(r[kh], Cell::Num(_));
        if has_limit != (case == CaseLabel::I) {
            return Err(CliError::numeric(format!(
                "row {i}: high-T kappa must be present exactly in Case I"
            )));
        }
        if matches!(r[gap], Cell::Num(_)) && !has_limit {
            return Err(CliError::numeric(format!(
                "row {i}: relative gap without a high-T kappa"
            )));
        }
    }
    Ok(())
}
