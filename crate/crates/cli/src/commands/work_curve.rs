//! Net work, absorbed heat, efficiency and positive-work verdict as the
//! hot-bath temperature sweeps over a grid, for a fixed pair of spectra and
//! a fixed cold temperature.

use super::status_cell;
use crate::config::WorkCurveConfig;
use crate::emit::{Cell, Output, Table};
use crate::{grid, CliError};
use qhe_core::cycle::OttoCycle;

const COLUMNS: [&str; 6] = ["t_h", "net_work", "heat_in", "efficiency", "pwc", "status"];

pub fn output(cfg: &WorkCurveConfig, seed: u64) -> Result<Output, CliError> {
    cfg.grid.t_h.validate("t_h")?;
    if !(cfg.grid.t_h.min_value() > 0.0) {
        return Err(CliError::config("axis t_h: temperatures must be positive".into()));
    }
    if !(cfg.t_l > 0.0) || !cfg.t_l.is_finite() {
        return Err(CliError::config(format!(
            "t_l must be positive, got {}",
            cfg.t_l
        )));
    }
    let hot = cfg.hot.build("hot")?;
    let cold = cfg.cold.build("cold")?;
    if hot.len() != cold.len() {
        return Err(CliError::config(format!(
            "hot and cold spectra must have the same dimension ({} vs {})",
            hot.len(),
            cold.len()
        )));
    }

    let axes = vec![cfg.grid.t_h.values()];
    let rows = grid::map_cells(&axes, |p| {
        let cycle = OttoCycle::new(hot.clone(), cold.clone(), p[0], cfg.t_l)
            .expect("validated inputs");
        let mut status: Vec<&str> = Vec::new();
        let efficiency = match cycle.efficiency() {
            Some(eta) => Cell::Num(eta),
            None => {
                status.push("eta_undefined");
                Cell::Empty
            }
        };
        vec![
            Cell::Num(p[0]),
            Cell::Num(cycle.net_work()),
            Cell::Num(cycle.heat_absorbed()),
            efficiency,
            Cell::Bool(cycle.pwc_holds()),
            status_cell(&status),
        ]
    });

    let table = Table {
        command: "work-curve",
        seed,
        columns: COLUMNS.to_vec(),
        rows,
    };
    table.check_shape()?;
    validate(&table)?;
    Ok(Output::Table(table))
}

fn validate(table: &Table) -> Result<(), CliError> {
    let work = table.column("net_work");
    let pwc = table.column("pwc");
    let eff = table.column("efficiency");
    for (i, r) in table.rows.iter().enumerate() {
        let w = match r[work] {
            Cell::Num(w) => w,
            _ => unreachable!("net_work is always numeric"),
        };
        if (r[pwc] == Cell::Bool(true)) != (w > 0.0) {
            return Err(CliError::numeric(format!(
                "row {i}: pwc flag disagrees with the sign of the net work"
            )));
        }
        if matches!(r[eff], Cell::Num(_)) && w <= 0.0 {
            return Err(CliError::numeric(format!(
                "row {i}: efficiency defined without positive work"
            )));
        }
    }
    Ok(())
}
