use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lg_orbit_core::deformation::Interpolation;
use lg_orbit_core::lie::Normalization;
use lg_orbit_lab::family::{run_family, Family, TValue};
use lg_orbit_lab::polytope::{polytope_csv, polytope_svg};
use lg_orbit_lab::suites::{self, Options, Suite};
use lg_orbit_lab::{
    dualize_text, load_model_or_preset, model_polytope, parse_offsets, write_file, LabError, Report,
};

/// Exact checks for Landau-Ginzburg models from adjoint orbits and toric data.
///
/// Model arguments take a file path or `preset:NAME` (p2, p1xp1, tp1-selfdual, tp1-linear).
#[derive(Parser)]
#[command(name = "lg-orbit-lab", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Trace,
    Killing,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    /// t*w0 + (1-t)*w1
    Homotopy,
    /// w1 + t*w0
    Perturbation,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite; exit status 1 if any case fails.
    Verify {
        /// coincidence, duality, deformation, mirror, lie or all
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Also write the report as JSON.
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Largest n for the coincidence suite.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Pairing used for critical values in the lie suite.
        #[arg(long, value_enum, default_value = "trace")]
        normalization: NormArg,
        /// Random samples per randomized case (seed from LG_ORBIT_LAB_SEED).
        #[arg(long, default_value_t = 25)]
        samples: usize,
        /// Extra model files to check; may be repeated.
        #[arg(long = "model", value_name = "MODEL")]
        models: Vec<String>,
    },
    /// Write the toric dual of a model.
    Dualize {
        model: String,
        /// Output path; stdout if omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Moment polygon of a rank-2 model as CSV and SVG.
    Polytope {
        model: String,
        /// Comma-separated offsets, one per div row; defaults to the model's `offsets`.
        #[arg(long)]
        offsets: Option<String>,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Check or evaluate a deformation family: potential-01, f2-f0 or tp1-orbit.
    Family {
        name: String,
        /// A rational value or `symbolic`.
        #[arg(long, default_value = "symbolic")]
        t: String,
        #[arg(long, value_enum, default_value = "homotopy")]
        convention: ConventionArg,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn emit(report: &Report, json: Option<&PathBuf>) -> Result<ExitCode, LabError> {
    print!("{}", report.to_text());
    if let Some(p) = json {
        write_file(p, &report.to_json())?;
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode, LabError> {
    match cli.cmd {
        Cmd::Verify {
            suite,
            json,
            n_max,
            normalization,
            samples,
            models,
        } => {
            let opts = Options {
                n_max,
                normalization: match normalization {
                    NormArg::Trace => Normalization::Trace,
                    NormArg::Killing => Normalization::Killing,
                },
                seed: suites::seed_from_env(),
                samples,
            };
            let models = models
                .iter()
                .map(|m| load_model_or_preset(m))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&suites::run(suite, &opts, &models), json.as_ref())
        }
        Cmd::Dualize { model, out } => {
            let text = dualize_text(&load_model_or_preset(&model)?)?;
            match out {
                Some(p) => write_file(&p, &text)?,
                None => print!("{}", text),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Polytope {
            model,
            offsets,
            svg,
            csv,
        } => {
            let m = load_model_or_preset(&model)?;
            let offs = offsets.as_deref().map(parse_offsets).transpose()?;
            let poly = model_polytope(&m, offs.as_deref())?;
            let csv_text = polytope_csv(&poly);
            if let Some(p) = &svg {
                write_file(p, &polytope_svg(&poly))?;
            }
            match &csv {
                Some(p) => write_file(p, &csv_text)?,
                None => print!("{}", csv_text),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Family {
            name,
            t,
            convention,
            json,
        } => {
            let family: Family = name.parse()?;
            let t: TValue = t.parse().map_err(LabError::BadT)?;
            let convention = match convention {
                ConventionArg::Homotopy => Interpolation::Homotopy,
                ConventionArg::Perturbation => Interpolation::Perturbation,
            };
            let out = run_family(family, &t, convention)?;
            print!("{}", out.listing);
            emit(&out.report, json.as_ref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
