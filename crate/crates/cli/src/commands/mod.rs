//! One module per subcommand. Each produces an [`Output`](crate::emit::Output)
//! that has already passed its post-compute validator.

pub mod cycle_report;
pub mod dark;
pub mod limit_study;
pub mod region3;
pub mod work_curve;

use crate::config::{self, CommonFields, OutputFormat, DEFAULT_SEED};
use crate::emit::{write_output, Cell};
use crate::CliError;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    ScanRegion3,
    ScanDark,
    WorkCurve,
    LimitStudy,
    CycleReport,
}

/// Command-line overrides; a flag wins over the matching config field.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub seed: Option<u64>,
}

struct Resolved {
    out: Option<PathBuf>,
    format: OutputFormat,
    seed: u64,
}

fn resolve(common: &CommonFields, ov: &Overrides, default_format: OutputFormat) -> Resolved {
    Resolved {
        out: ov.out.clone().or_else(|| common.out.clone().map(PathBuf::from)),
        format: ov.format.or(common.format).unwrap_or(default_format),
        seed: ov.seed.or(common.seed).unwrap_or(DEFAULT_SEED),
    }
}

/// Parses the config for `kind`, runs it, and writes the result.
pub fn execute(kind: CommandKind, config_text: &str, ov: &Overrides) -> Result<(), CliError> {
    let (output, resolved) = match kind {
        CommandKind::ScanRegion3 => {
            let cfg: config::Region3Config = config::parse(config_text)?;
            let resolved = resolve(&cfg.common, ov, OutputFormat::Csv);
            (region3::output(&cfg, resolved.seed)?, resolved)
        }
        CommandKind::ScanDark => {
            let cfg: config::DarkConfig = config::parse(config_text)?;
            let resolved = resolve(&cfg.common, ov, OutputFormat::Csv);
            (dark::output(&cfg, resolved.seed)?, resolved)
        }
        CommandKind::WorkCurve => {
            let cfg: config::WorkCurveConfig = config::parse(config_text)?;
            let resolved = resolve(&cfg.common, ov, OutputFormat::Csv);
            (work_curve::output(&cfg, resolved.seed)?, resolved)
        }
        CommandKind::LimitStudy => {
            let cfg: config::LimitStudyConfig = config::parse(config_text)?;
            let resolved = resolve(&cfg.common, ov, OutputFormat::Csv);
            (limit_study::output(&cfg, resolved.seed)?, resolved)
        }
        CommandKind::CycleReport => {
            let cfg: config::CycleReportConfig = config::parse(config_text)?;
            let resolved = resolve(&cfg.common, ov, OutputFormat::Json);
            (cycle_report::output(&cfg, resolved.seed)?, resolved)
        }
    };

    match &resolved.out {
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| CliError::io(format!("creating {}: {e}", path.display())))?;
            write_output(&output, resolved.format, std::io::BufWriter::new(file))
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_output(&output, resolved.format, &mut lock)?;
            lock.flush().map_err(|e| CliError::io(format!("flushing stdout: {e}")))
        }
    }
}

/// Joins row status markers; "ok" when there are none.
pub(crate) fn status_cell(markers: &[&str]) -> Cell {
    if markers.is_empty() {
        Cell::Text("ok".into())
    } else {
        Cell::Text(markers.join(";"))
    }
}
