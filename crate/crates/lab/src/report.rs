//! Verification reports: one record per checked identity, rendered as text or
//! as schema-versioned JSON with a fixed field and case order.

use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Case {
    pub id: String,
    pub description: String,
    /// Where the checked statement comes from, or `plumbing`.
    pub locator: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl Case {
    pub fn new(
        id: impl Into<String>,
        description: impl Into<String>,
        locator: impl Into<String>,
        pass: bool,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            locator: locator.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    /// `lhs == rhs` on the rendered strings.
    pub fn equal(
        id: impl Into<String>,
        description: impl Into<String>,
        locator: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        let (l, r) = (lhs.into(), rhs.into());
        let pass = l == r;
        Self::new(id, description, locator, pass, l, r)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorPoint {
    pub min_poly: String,
    pub approx_x: String,
    pub approx_v: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorDetail {
    pub coefficients: String,
    pub points: Vec<MirrorPoint>,
    pub common_value: Option<String>,
    pub same_fibre: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualRow {
    pub chart: String,
    pub residual1: String,
    pub residual2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mirror: Option<MirrorDetail>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub residuals: Vec<ResidualRow>,
}

impl Report {
    pub fn new(suite: impl Into<String>, cases: Vec<Case>) -> Self {
        let passed = cases.iter().filter(|c| c.passed()).count();
        Self {
            schema: SCHEMA,
            suite: suite.into(),
            summary: Summary {
                total: cases.len(),
                passed,
                failed: cases.len() - passed,
            },
            cases,
            mirror: None,
            residuals: Vec::new(),
        }
    }

    /// Concatenates several reports under one suite name.
    pub fn merge(suite: impl Into<String>, parts: Vec<Report>) -> Self {
        let mut cases = Vec::new();
        let mut mirror = None;
        let mut residuals = Vec::new();
        for p in parts {
            cases.extend(p.cases);
            mirror = mirror.or(p.mirror);
            residuals.extend(p.residuals);
        }
        let mut r = Self::new(suite, cases);
        r.mirror = mirror;
        r.residuals = residuals;
        r
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{} {}  {}", tag, c.id, c.description);
            if !c.passed() {
                let _ = writeln!(s, "       lhs: {}", c.lhs);
                let _ = writeln!(s, "       rhs: {}", c.rhs);
            }
        }
        if let Some(m) = &self.mirror {
            let _ = writeln!(s, "mirror surface ({}):", m.coefficients);
            for p in &m.points {
                let _ = writeln!(
                    s,
                    "  x: root of {}  approx {}  v = {}",
                    p.min_poly, p.approx_x, p.approx_v
                );
            }
        }
        for r in &self.residuals {
            let _ = writeln!(
                s,
                "  chart {}: residuals ({}, {})",
                r.chart, r.residual1, r.residual2
            );
        }
        let _ = writeln!(
            s,
            "{}: {} passed, {} failed, {} total",
            self.suite, self.summary.passed, self.summary.failed, self.summary.total
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_matches_cases() {
        let r = Report::new(
            "demo",
            vec![
                Case::equal("a", "same", "plumbing", "1", "1"),
                Case::equal("b", "differs", "plumbing", "1", "2"),
            ],
        );
        assert_eq!(
            r.summary,
            Summary {
                total: 2,
                passed: 1,
                failed: 1
            }
        );
        assert!(!r.all_passed());
        assert!(r.to_text().contains("FAIL b"));
    }

    #[test]
    fn json_field_order_is_fixed() {
        let r = Report::new("demo", vec![Case::equal("a", "d", "plumbing", "x", "x")]);
        let j = r.to_json();
        let pos = |k: &str| j.find(k).unwrap();
        assert!(pos("\"schema\"") < pos("\"suite\""));
        assert!(pos("\"suite\"") < pos("\"cases\""));
        assert!(pos("\"cases\"") < pos("\"summary\""));
        assert!(pos("\"id\"") < pos("\"locator\""));
        assert!(j.contains("\"status\": \"pass\""));
        assert!(!j.contains("mirror"));
    }
}
