//! Sweeps the cold control point (δˡ, Ωˡ) of the driven Λ-system against a
//! fixed hot point: solution-region membership, the cold spacings, the
//! spacing-change case, looseness where defined, and the net work of the
//! resulting cycle at the configured bath temperatures.

use super::status_cell;
use crate::config::DarkConfig;
use crate::emit::{Cell, Output, Table};
use crate::{grid, CliError};
use qhe_core::dark_state::{
    solution1_region, solution2_region, spectrum_closed_form, to_endpoints, DarkStateParams,
};
use qhe_core::three_level::{classify_case, looseness_verdict, CaseLabel};

const COLUMNS: [&str; 11] = [
    "delta_l",
    "omega_l",
    "delta1_l",
    "delta2_l",
    "in_solution1",
    "in_solution2",
    "case",
    "looser",
    "net_work",
    "pwc",
    "status",
];

pub fn output(cfg: &DarkConfig, seed: u64) -> Result<Output, CliError> {
    cfg.grid.delta_l.validate("delta_l")?;
    cfg.grid.omega_l.validate("omega_l")?;
    if cfg.grid.omega_l.min_value() < 0.0 {
        return Err(CliError::config(
            "axis omega_l: Rabi magnitude cannot be negative".into(),
        ));
    }
    cfg.temperatures.validate()?;
    if !(cfg.hot.omega > 0.0) || !cfg.hot.omega.is_finite() || !cfg.hot.delta.is_finite() {
        return Err(CliError::config(format!(
            "hot point (delta {}, omega {}) must be finite with omega > 0",
            cfg.hot.delta, cfg.hot.omega
        )));
    }
    let hot = DarkStateParams::new(cfg.hot.delta, cfg.hot.omega)
        .map_err(|e| CliError::config(e.to_string()))?;
    let (t_h, t_l) = (cfg.temperatures.t_h, cfg.temperatures.t_l);

    let axes = vec![cfg.grid.delta_l.values(), cfg.grid.omega_l.values()];
    let rows = grid::map_cells(&axes, |p| row(&hot, p[0], p[1], t_h, t_l));
    let table = Table {
        command: "scan-dark",
        seed,
        columns: COLUMNS.to_vec(),
        rows,
    };
    table.check_shape()?;
    validate(&table)?;
    Ok(Output::Table(table))
}

fn row(hot: &DarkStateParams, delta_l: f64, omega_l: f64, t_h: f64, t_l: f64) -> Vec<Cell> {
    let cold = DarkStateParams::new(delta_l, omega_l).expect("validated grid values");
    let spectrum = spectrum_closed_form(&cold);
    let base = [
        Cell::Num(delta_l),
        Cell::Num(omega_l),
        Cell::Num(spectrum.spacing_lower()),
        Cell::Num(spectrum.spacing_upper()),
    ];

    if omega_l == 0.0 {
        // zero Rabi strength collapses a spacing; no cycle exists here
        return base
            .into_iter()
            .chain([
                Cell::Bool(false),
                Cell::Bool(false),
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                status_cell(&["degenerate"]),
            ])
            .collect();
    }

    let endpoints = to_endpoints(hot, &cold).expect("both Rabi strengths positive");
    let case = classify_case(&endpoints);
    let in1 = solution1_region(hot, &cold).expect("omega > 0");
    let in2 = solution2_region(hot, &cold).expect("omega > 0");
    let mut status: Vec<&str> = Vec::new();
    let looser_cell = if case == CaseLabel::I {
        Cell::Bool(looseness_verdict(&endpoints).expect("Case I").looser)
    } else {
        status.push("not_case_i");
        Cell::Empty
    };
    let cycle = endpoints.cycle(t_h, t_l).expect("validated temperatures");

    base.into_iter()
        .chain([
            Cell::Bool(in1),
            Cell::Bool(in2),
            Cell::Text(case.to_string()),
            looser_cell,
            Cell::Num(cycle.net_work()),
            Cell::Bool(cycle.pwc_holds()),
            status_cell(&status),
        ])
        .collect()
}

fn validate(table: &Table) -> Result<(), CliError> {
    let in1 = table.column("in_solution1");
    let in2 = table.column("in_solution2");
    let case = table.column("case");
    let status = table.column("status");

    for (i, r) in table.rows.iter().enumerate() {
        let s1 = r[in1] == Cell::Bool(true);
        let s2 = r[in2] == Cell::Bool(true);
        if s1 && s2 {
            return Err(CliError::numeric(format!(
                "row {i}: cannot sit in both solution regions"
            )));
        }
        let is_case1 = r[case] == Cell::Text("I".into());
        if (s1 || s2) && !is_case1 {
            return Err(CliError::numeric(format!(
                "row {i}: solution membership without Case I"
            )));
        }
        let degenerate = matches!(&r[status], Cell::Text(s) if s.contains("degenerate"));
        if degenerate && r[case] != Cell::Empty {
            return Err(CliError::numeric(format!(
                "row {i}: degenerate row must not carry a case label"
            )));
        }
    }
    Ok(())
}
