//! Rasterizes the ratio-coordinate space (r₁ˡ, r₂ˡ, r₂ʰ) with Δ₁ʰ
//! normalized to one: per cell the Case-I presupposition flags, the
//! solution-region label, θ, the high-temperature critical ratio and the
//! looseness verdict. The Solution-I envelope surfaces show up as label
//! changes between neighboring cells.

use super::status_cell;
use crate::config::Region3Config;
use crate::emit::{Cell, Output, Table};
use crate::{grid, CliError};
use qhe_core::three_level::{
    classify_case, looseness_verdict, ratio_coords, solution_region, theta, CaseLabel,
    SolutionRegion, SpacingEndpoints,
};
use qhe_core::Error;

const COLUMNS: [&str; 11] = [
    "r1l",
    "r2l",
    "r2h",
    "presup_r1l_lt_1",
    "presup_r2h_gt_r2l",
    "case",
    "region",
    "theta",
    "kappa_high_t",
    "looser",
    "status",
];

pub fn output(cfg: &Region3Config, seed: u64) -> Result<Output, CliError> {
    for (name, axis) in [
        ("r1l", &cfg.grid.r1l),
        ("r2l", &cfg.grid.r2l),
        ("r2h", &cfg.grid.r2h),
    ] {
        axis.validate(name)?;
        if !(axis.min_value() > 0.0) {
            return Err(CliError::config(format!(
                "axis {name}: ratio coordinates must be strictly positive"
            )));
        }
    }
    let axes = vec![
        cfg.grid.r1l.values(),
        cfg.grid.r2l.values(),
        cfg.grid.r2h.values(),
    ];
    let rows = grid::map_cells(&axes, |p| row(p[0], p[1], p[2]));
    let table = Table {
        command: "scan-region3",
        seed,
        columns: COLUMNS.to_vec(),
        rows,
    };
    table.check_shape()?;
    validate(&table)?;
    Ok(Output::Table(table))
}

fn row(r1l: f64, r2l: f64, r2h: f64) -> Vec<Cell> {
    // ratio coordinates are spacings with Δ₁ʰ = 1
    let e = SpacingEndpoints::new(1.0, r2h, r1l, r2l).expect("positive grid values");
    let case = classify_case(&e);
    let region = solution_region(&ratio_coords(&e));
    let mut status: Vec<&str> = Vec::new();

    let theta_cell = match theta(&e) {
        Ok(t) => Cell::Num(t),
        Err(Error::XiUndefined) => {
            status.push("xi_undefined");
            Cell::Empty
        }
        Err(Error::ThetaUndefined) => {
            status.push("theta_undefined");
            Cell::Empty
        }
        Err(e) => unreachable!("theta: unexpected error {e}"),
    };

    let (kappa_cell, looser_cell) = if case == CaseLabel::I {
        let v = looseness_verdict(&e).expect("verdict is defined throughout Case I");
        (Cell::Num(v.kappa_high_t), Cell::Bool(v.looser))
    } else {
        status.push("not_case_i");
        (Cell::Empty, Cell::Empty)
    };

    vec![
        Cell::Num(r1l),
        Cell::Num(r2l),
        Cell::Num(r2h),
        Cell::Bool(r1l < 1.0),
        Cell::Bool(r2h > r2l),
        Cell::Text(case.to_string()),
        Cell::Text(region.to_string()),
        theta_cell,
        kappa_cell,
        looser_cell,
        status_cell(&status),
    ]
}

/// Label-consistency pass over the emitted rows.
fn validate(table: &Table) -> Result<(), CliError> {
    let case = table.column("case");
    let region = table.column("region");
    let p1 = table.column("presup_r1l_lt_1");
    let p2 = table.column("presup_r2h_gt_r2l");
    let kappa = table.column("kappa_high_t");
    let looser = table.column("looser");

    for (i, r) in table.rows.iter().enumerate() {
        let is_case1 = r[case] == Cell::Text("I".into());
        let in_region = r[region] != Cell::Text(SolutionRegion::Neither.to_string());
        let presup = r[p1] == Cell::Bool(true) && r[p2] == Cell::Bool(true);
        if in_region && !(presup && is_case1) {
            return Err(CliError::numeric(format!(
                "row {i}: region label without Case-I presuppositions"
            )));
        }
        if is_case1 != presup {
            return Err(CliError::numeric(format!(
                "row {i}: case label disagrees with presupposition flags"
            )));
        }
        let has_kappa = matches!(r[kappa], Cell::Num(_));
        let has_looser = matches!(r[looser], Cell::Bool(_));
        if has_kappa != is_case1 || has_looser != is_case1 {
            return Err(CliError::numeric(format!(
                "row {i}: kappa/looser columns must be populated exactly in Case I"
            )));
        }
    }
    Ok(())
}
