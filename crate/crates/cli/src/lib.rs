//! Library side of the `qcorr` command-line tool: state-file parsing and
//! report rendering.

pub mod error;
pub mod render;
pub mod state_file;

use std::path::{Path, PathBuf};

use qcorr::{build_report_with_order, fixtures, MeasurementOrder};

pub use error::CliError;
pub use state_file::{parse_state_file, parse_state_str, StateBody, StateSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn run_report(
    spec: &StateSpec,
    format: Format,
    order: MeasurementOrder,
) -> Result<String, CliError> {
    let report = build_report_with_order(spec.state(), spec.basis_a(), spec.basis_b(), order)?;
    Ok(match format {
        Format::Text => render::render_text(&report),
        Format::Json => render::render_json(&report),
    })
}

pub const QUBIT_FIXTURE: &str = "qubit_alpha.json";
pub const QUTRIT_FIXTURE: &str = "qutrit.json";

/// The two reference states as state files.
pub fn fixture_specs(alpha: f64) -> Result<Vec<(&'static str, StateSpec)>, CliError> {
    Ok(vec![
        (
            QUBIT_FIXTURE,
            StateSpec::from_mixture(2, 2, fixtures::qubit_terms(alpha))?,
        ),
        (
            QUTRIT_FIXTURE,
            StateSpec::from_mixture(3, 3, fixtures::qutrit_terms())?,
        ),
    ])
}

/// Writes the fixture files into `dir`, returning their paths.
pub fn write_fixtures(dir: &Path, alpha: f64) -> Result<Vec<PathBuf>, CliError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CliError::Io { path, source }
    };
    std::fs::create_dir_all(dir).map_err(io(dir))?;
    let mut written = Vec::new();
    for (name, spec) in fixture_specs(alpha)? {
        let path = dir.join(name);
        let mut text =
            serde_json::to_string_pretty(&spec.to_json()).expect("state file serializes");
        text.push('\n');
        std::fs::write(&path, text).map_err(io(&path))?;
        written.push(path);
    }
    Ok(written)
}
