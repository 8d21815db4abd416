//! File formats, verification suites and figure export on top of `lg-orbit-core`.
//!
//! The `lg-orbit-lab` binary is a thin clap wrapper over the functions here.

use std::fs;
use std::path::{Path, PathBuf};

use lg_orbit_core::toric::{dualize, moment_polytope, MomentPolytope2D, ToricLGModel};
use lg_orbit_core::Rational;

pub mod family;
pub mod format;
pub mod polytope;
pub mod presets;
pub mod report;
pub mod suites;

pub use format::{parse_model, parse_polynomial, write_model, ModelFile, ParseError};
pub use report::{Case, Report, Status};

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] lg_orbit_core::Error),
    #[error("unknown family `{0}` (expected potential-01, f2-f0 or tp1-orbit)")]
    UnknownFamily(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("no offsets: pass --offsets or add an `offsets` line to the model")]
    MissingOffsets,
    #[error("bad offsets: {0}")]
    BadOffsets(String),
    #[error("bad --t: {0}")]
    BadT(String),
}

impl LabError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        LabError::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}

/// Reads and parses a model file.
pub fn load_model(path: &Path) -> Result<ModelFile, LabError> {
    let text = fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
    parse_model(&text).map_err(|source| LabError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

/// A model path, or `preset:NAME` for a shipped preset.
pub fn load_model_or_preset(arg: &str) -> Result<ModelFile, LabError> {
    match arg.strip_prefix("preset:") {
        Some(name) => {
            let text =
                presets::text(name).ok_or_else(|| LabError::UnknownPreset(name.to_string()))?;
            parse_model(text).map_err(|source| LabError::Parse {
                path: PathBuf::from(arg),
                source,
            })
        }
        None => load_model(Path::new(arg)),
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), LabError> {
    fs::write(path, contents).map_err(|e| LabError::io(path, e))
}

/// Dual model in the file format.
pub fn dualize_text(m: &ModelFile) -> Result<String, LabError> {
    let d: ToricLGModel = dualize(&m.model)?;
    Ok(write_model(&d, None))
}

/// Parses comma- or space-separated rationals.
pub fn parse_offsets(s: &str) -> Result<Vec<Rational>, LabError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| format::parse_rational(t).ok_or_else(|| LabError::BadOffsets(t.to_string())))
        .collect()
}

/// Moment polygon of a model with explicit offsets, or those stored in the file.
pub fn model_polytope(
    m: &ModelFile,
    offsets: Option<&[Rational]>,
) -> Result<MomentPolytope2D, LabError> {
    let offs = offsets
        .map(<[Rational]>::to_vec)
        .or_else(|| m.offsets.clone())
        .ok_or(LabError::MissingOffsets)?;
    Ok(moment_polytope(&m.model.div, &offs)?)
}
