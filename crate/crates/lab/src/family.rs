//! The `family` command: identity checks at symbolic `t`, fibre listings at rational `t`.

use std::fmt::Write as _;
use std::str::FromStr;

use lg_orbit_core::algebra::Pretty;
use lg_orbit_core::deformation::{
    f2_f0_family, m_family_residuals, potential_family, tp1_orbit_family, transition_check_at,
    Interpolation, PARAM,
};
use lg_orbit_core::{rat, Rational};

use crate::format::{parse_polynomial, parse_rational, rational_text};
use crate::report::{Case, Report, ResidualRow};
use crate::suites;
use crate::LabError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Potential01,
    F2F0,
    Tp1Orbit,
}

impl Family {
    pub const NAMES: [&'static str; 3] = ["potential-01", "f2-f0", "tp1-orbit"];

    pub fn name(self) -> &'static str {
        match self {
            Family::Potential01 => "potential-01",
            Family::F2F0 => "f2-f0",
            Family::Tp1Orbit => "tp1-orbit",
        }
    }
}

impl FromStr for Family {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        match s {
            "potential-01" => Ok(Family::Potential01),
            "f2-f0" => Ok(Family::F2F0),
            "tp1-orbit" => Ok(Family::Tp1Orbit),
            other => Err(LabError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TValue {
    Symbolic,
    Value(Rational),
}

impl FromStr for TValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "symbolic" {
            return Ok(TValue::Symbolic);
        }
        parse_rational(s)
            .map(TValue::Value)
            .ok_or_else(|| format!("expected a rational like 1/2 or `symbolic`, got `{}`", s))
    }
}

/// Output of the `family` command: checks plus a plain listing of the fibre.
pub struct FamilyOutput {
    pub report: Report,
    pub listing: String,
}

pub fn run_family(
    family: Family,
    t: &TValue,
    convention: Interpolation,
) -> Result<FamilyOutput, LabError> {
    let suite = format!("family/{}", family.name());
    let mut listing = String::new();
    let mut cases = Vec::new();
    let mut residuals = Vec::new();

    match family {
        Family::Potential01 => {
            let w0 = parse_polynomial("x + y + y^2/x").expect("literal");
            let w1 = parse_polynomial("2*x").expect("literal");
            let fam = potential_family(&w0, &w1, convention)?;
            match t {
                TValue::Symbolic => {
                    let _ = writeln!(listing, "w_t = {}", Pretty(&fam.potential_t));
                    let w_at0 = fam.potential_at(&rat(0))?;
                    cases.push(Case::equal(
                        "family/potential-01/t=0",
                        "t = 0 gives 2x",
                        "potential family endpoint",
                        w_at0.to_string(),
                        w1.to_string(),
                    ));
                    let expected_t1 = match convention {
                        Interpolation::Homotopy => w0.clone(),
                        Interpolation::Perturbation => &w0 + &w1,
                    };
                    cases.push(Case::equal(
                        "family/potential-01/t=1",
                        "t = 1 endpoint",
                        "potential family endpoint",
                        fam.potential_at(&rat(1))?.to_string(),
                        expected_t1.to_string(),
                    ));
                }
                TValue::Value(v) => {
                    let w = fam.potential_at(v)?;
                    let _ = writeln!(listing, "{}", Pretty(&w));
                    cases.push(Case::new(
                        format!("family/potential-01/t={}", rational_text(v)),
                        "fibre potential evaluates",
                        "plumbing",
                        !w.is_zero(),
                        Pretty(&w).to_string(),
                        "nonzero",
                    ));
                }
            }
        }
        Family::F2F0 | Family::Tp1Orbit => {
            let fam = if family == Family::F2F0 {
                f2_f0_family()
            } else {
                tp1_orbit_family()
            };
            let charts = match t {
                TValue::Symbolic => fam.charts.clone(),
                TValue::Value(v) => fam.charts_at(v)?,
            };
            let tag = match t {
                TValue::Symbolic => "t".to_string(),
                TValue::Value(v) => rational_text(v),
            };
            for (ch, p) in &charts {
                let (a, b) = m_family_residuals(p);
                let (a, b) = match t {
                    TValue::Symbolic => (a, b),
                    TValue::Value(v) => (
                        a.evaluate(&[(PARAM, v.clone())])?,
                        b.evaluate(&[(PARAM, v.clone())])?,
                    ),
                };
                let _ = writeln!(listing, "{}: {}", ch, p);
                residuals.push(ResidualRow {
                    chart: ch.name().to_string(),
                    residual1: Pretty(&a).to_string(),
                    residual2: Pretty(&b).to_string(),
                });
                cases.push(Case::equal(
                    format!("family/{}/chart-{}", family.name(), ch),
                    format!("chart {} image lies on M_t at t = {}", ch, tag),
                    "F2 to F0 deformation, chart list",
                    format!("({}, {})", Pretty(&a), Pretty(&b)),
                    "(0, 0)",
                ));
            }
            let _ = writeln!(listing, "potential on U: {}", Pretty(&fam.potential_t));
            if family == Family::Tp1Orbit {
                match t {
                    TValue::Symbolic => {
                        let det = suites::deformation();
                        cases.extend(det.cases.into_iter().filter(|c| {
                            c.id.starts_with("deformation/transition")
                                || c.id.starts_with("deformation/section")
                                || c.id == "deformation/zero-section"
                        }));
                    }
                    TValue::Value(v) => {
                        let ok = transition_check_at(v)?;
                        cases.push(Case::new(
                            format!("family/tp1-orbit/transition-t={}", tag),
                            "transition glues U and V in this fibre",
                            "T*P1 to O1 embedding, transition function",
                            ok,
                            ok.to_string(),
                            "true",
                        ));
                    }
                }
            }
        }
    }
    let mut report = Report::new(suite, cases);
    report.residuals = residuals;
    Ok(FamilyOutput { report, listing })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn potential_endpoint_listing() {
        let out = run_family(
            Family::Potential01,
            &TValue::Value(rat(0)),
            Interpolation::Homotopy,
        )
        .unwrap();
        assert_eq!(out.listing, "2*x\n");
        assert!(out.report.all_passed());
    }

    #[test]
    fn symbolic_families_pass() {
        for f in [Family::Potential01, Family::F2F0, Family::Tp1Orbit] {
            let out = run_family(f, &TValue::Symbolic, Interpolation::Homotopy).unwrap();
            assert!(out.report.all_passed(), "{}", out.report.to_text());
        }
        let out = run_family(Family::Tp1Orbit, &TValue::Symbolic, Interpolation::Homotopy).unwrap();
        assert!(out
            .report
            .cases
            .iter()
            .any(|c| c.id == "deformation/transition"));
    }

    #[test]
    fn f2_f0_at_one_lists_four_charts() {
        let out = run_family(
            Family::F2F0,
            &TValue::Value(rat(1)),
            Interpolation::Homotopy,
        )
        .unwrap();
        assert_eq!(out.listing.lines().count(), 5);
        assert!(out.listing.contains("U: ([1, z], [1, u*z^2 + z, u*z, u])"));
        assert!(out.report.all_passed());
    }

    #[test]
    fn unknown_family() {
        assert!(matches!(
            "nope".parse::<Family>(),
            Err(LabError::UnknownFamily(_))
        ));
        assert_eq!(
            "1/2".parse::<TValue>().unwrap(),
            TValue::Value(Rational::new(1.into(), 2.into()))
        );
        assert!("x".parse::<TValue>().is_err());
    }
}
