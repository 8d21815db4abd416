//! Named verification suites. Case order is fixed; random samples come from a
//! seeded ChaCha stream so repeated runs are byte-identical.

use std::fmt;
use std::str::FromStr;

use lg_orbit_core::algebra::{cokernel_invariants, ratio, Pretty};
use lg_orbit_core::deformation::{
    chart_embed_j, corrupted_transition_check, m_family_residuals, orbit_critical_points,
    orbit_membership, potential_family, section_at_infinity, section_limit_u, section_limit_v,
    symbolic_orbit_remainder, transition_bindings, transition_check, transition_check_at,
    zero_section, Chart, Interpolation,
};
use lg_orbit_core::lie::{
    ad_matrix, bracket, weyl_act, DiagonalElement, Normalization, TracelessMatrix, WeylPermutation,
};
use lg_orbit_core::mirror::{
    certify, fibre_profile, infinity_chart_critical_count, mirror_critical_points, same_fibre,
    CriticalValue, MirrorSurface,
};
use lg_orbit_core::orbit::{critical_values, lie_potential, OrbitChart};
use lg_orbit_core::toric::{chow_group, coincidence_check, dualize, is_selfdual, ToricLGModel};
use lg_orbit_core::{rat, IntegerMatrix, LaurentPolynomial, Rational, RationalMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::{parse_polynomial, rational_text, ModelFile};
use crate::presets;
use crate::report::{Case, MirrorDetail, MirrorPoint, Report, ResidualRow};

/// Environment variable fixing the seed of randomized cases.
pub const SEED_VAR: &str = "LG_ORBIT_LAB_SEED";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Coincidence,
    Duality,
    Deformation,
    Mirror,
    Lie,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "coincidence",
        "duality",
        "deformation",
        "mirror",
        "lie",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coincidence => "coincidence",
            Suite::Duality => "duality",
            Suite::Deformation => "deformation",
            Suite::Mirror => "mirror",
            Suite::Lie => "lie",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "coincidence" => Ok(Suite::Coincidence),
            "duality" => Ok(Suite::Duality),
            "deformation" => Ok(Suite::Deformation),
            "mirror" => Ok(Suite::Mirror),
            "lie" => Ok(Suite::Lie),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite `{}` (expected one of {})",
                other,
                Suite::NAMES.join(", ")
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Options {
    pub n_max: usize,
    pub normalization: Normalization,
    pub seed: u64,
    /// Random samples per randomized case.
    pub samples: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            n_max: 6,
            normalization: Normalization::Trace,
            seed: 0,
            samples: 25,
        }
    }
}

/// Seed from [`SEED_VAR`], or 0.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0)
}

pub fn run(suite: Suite, opts: &Options, models: &[ModelFile]) -> Report {
    let mut report = match suite {
        Suite::Coincidence => coincidence(opts),
        Suite::Duality => duality(),
        Suite::Deformation => deformation(),
        Suite::Mirror => mirror(),
        Suite::Lie => lie(opts),
        Suite::All => Report::merge(
            "all",
            vec![
                coincidence(opts),
                duality(),
                deformation(),
                mirror(),
                lie(opts),
            ],
        ),
    };
    if !models.is_empty() {
        let extra = model_cases(models);
        report = Report::merge(suite.name(), vec![report, extra]);
    }
    report
}

pub fn coincidence(opts: &Options) -> Report {
    let mut cases = Vec::new();
    for n in 1..=opts.n_max {
        let id = format!("coincidence/n={}", n);
        let desc = format!(
            "Lie potential at Diag({},-1,...,-1) equals the toric potential h_c, c = {}",
            n,
            -(n as i64) * (n as i64 + 1)
        );
        cases.push(match coincidence_check(n) {
            Ok(r) => Case::new(
                id,
                desc,
                "coincidence theorem",
                r.equal,
                r.lie.polynomial().to_string(),
                r.toric.to_string(),
            ),
            Err(e) => Case::new(id, desc, "coincidence theorem", false, e.to_string(), ""),
        });
    }
    Report::new("coincidence", cases)
}

fn rows_text(m: &IntegerMatrix) -> String {
    let rows: Vec<String> = m
        .sorted_rows()
        .iter()
        .map(|r| {
            format!(
                "({})",
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    format!("{{{}}}", rows.join(","))
}

fn exps_text(m: &ToricLGModel) -> String {
    let rows: Vec<String> = m
        .monomial_set()
        .iter()
        .map(|r| {
            format!(
                "({})",
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    format!("{{{}}}", rows.join(","))
}

fn int_rows(rows: &[[i64; 2]]) -> IntegerMatrix {
    IntegerMatrix::from_rows(rows).expect("rectangular")
}

pub fn duality() -> Report {
    let tp1 = presets::model("tp1-selfdual").model;
    let p2 = presets::model("p2").model;
    let p1p1 = presets::model("p1xp1").model;
    let tp1_lin = presets::model("tp1-linear").model;
    let mut cases = Vec::new();

    let loc = "toric duality, selfdual cotangent line";
    cases.push(Case::equal(
        "duality/tp1-mon-equals-div",
        "Mon of x + y + y^2/x equals Div(T*P1)",
        loc,
        rows_text(&tp1.mon()),
        rows_text(&tp1.div),
    ));
    cases.push(Case::new(
        "duality/tp1-selfdual",
        "(T*P1, x + y + y^2/x) is selfdual",
        loc,
        is_selfdual(&tp1),
        is_selfdual(&tp1).to_string(),
        "true",
    ));

    let loc = "toric duality, projective plane";
    match dualize(&p2) {
        Ok(d) => {
            cases.push(Case::equal(
                "duality/p2-dual-div",
                "dual of P2 has the divisors of P1 x P1",
                loc,
                rows_text(&d.div),
                rows_text(&int_rows(&[[1, 0], [0, 1], [-1, 0], [0, -1]])),
            ));
            cases.push(Case::equal(
                "duality/p2-dual-potential",
                "dual potential of P2 is x + y + 1/(xy)",
                loc,
                exps_text(&d),
                "{(-1,-1),(0,1),(1,0)}",
            ));
        }
        Err(e) => cases.push(Case::new(
            "duality/p2-dual",
            "dualize P2",
            loc,
            false,
            e.to_string(),
            "",
        )),
    }
    cases.push(Case::new(
        "duality/p2-not-selfdual",
        "P2 with x + y + 1/x + 1/y is not selfdual",
        loc,
        !is_selfdual(&p2),
        is_selfdual(&p2).to_string(),
        "false",
    ));

    let loc = "toric duality, cotangent line with potential 2x";
    match dualize(&tp1_lin) {
        Ok(d) => cases.push(Case::equal(
            "duality/tp1-linear-dual-rank",
            "dual of (T*P1, 2x) has a single divisor",
            loc,
            d.div.rows().to_string(),
            "1",
        )),
        Err(e) => cases.push(Case::new(
            "duality/tp1-linear-dual",
            "dualize (T*P1, 2x)",
            loc,
            false,
            e.to_string(),
            "",
        )),
    }
    cases.push(Case::new(
        "duality/tp1-linear-not-selfdual",
        "(T*P1, 2x) is not selfdual",
        loc,
        !is_selfdual(&tp1_lin),
        is_selfdual(&tp1_lin).to_string(),
        "false",
    ));

    for (name, m, rank) in [("p2", &p2, 1usize), ("p1xp1", &p1p1, 2), ("tp1", &tp1, 1)] {
        let c = chow_group(m);
        let torsion: Vec<String> = c.torsion.iter().map(|t| t.to_string()).collect();
        cases.push(Case::equal(
            format!("chow/{}", name),
            format!("cokernel of Div({}) is Z^{} without torsion", name, rank),
            "Chow group as cokernel of Div",
            format!("Z^{} torsion [{}]", c.free_rank, torsion.join(",")),
            format!("Z^{} torsion []", rank),
        ));
    }
    for (name, m) in [
        ("p2", &p2),
        ("p1xp1", &p1p1),
        ("tp1", &tp1),
        ("tp1-linear", &tp1_lin),
    ] {
        cases.push(double_dual_case(name, m));
    }
    Report::new("duality", cases)
}

fn double_dual_case(name: &str, m: &ToricLGModel) -> Case {
    let id = format!("duality/{}-double-dual", name);
    let desc = "dualizing twice preserves div rows and monomial exponents";
    match dualize(m).and_then(|d| dualize(&d)) {
        Ok(dd) => Case::equal(
            id,
            desc,
            "plumbing",
            format!("{} {}", rows_text(&dd.div), exps_text(&dd)),
            format!("{} {}", rows_text(&m.div), exps_text(m)),
        ),
        Err(e) => Case::new(id, desc, "plumbing", false, e.to_string(), ""),
    }
}

fn pair_text(a: &LaurentPolynomial, b: &LaurentPolynomial) -> String {
    format!("({}, {})", Pretty(a), Pretty(b))
}

pub fn deformation() -> Report {
    let mut cases = Vec::new();
    let mut residuals = Vec::new();
    for ch in Chart::ALL {
        let (a, b) = m_family_residuals(&chart_embed_j(ch));
        residuals.push(ResidualRow {
            chart: ch.name().to_string(),
            residual1: Pretty(&a).to_string(),
            residual2: Pretty(&b).to_string(),
        });
        cases.push(Case::equal(
            format!("deformation/chart-{}", ch.name()),
            format!(
                "chart {} image satisfies the M_t equations identically",
                ch.name()
            ),
            "F2 to F0 deformation, chart list",
            pair_text(&a, &b),
            "(0, 0)",
        ));
    }
    let loc = "T*P1 to O1 embedding, transition function";
    cases.push(Case::new(
        "deformation/transition",
        "xi = 1/z, v = z^2 u + t z glues the U and V images",
        loc,
        transition_check(),
        transition_check().to_string(),
        "true",
    ));
    cases.push(Case::new(
        "deformation/transition-corrupted",
        "v = z^2 u - t z does not glue the charts",
        loc,
        !corrupted_transition_check(),
        corrupted_transition_check().to_string(),
        "false",
    ));
    let at0 = transition_check_at(&rat(0)).unwrap_or(false);
    cases.push(Case::new(
        "deformation/transition-t0",
        "at t = 0 the transition is v = z^2 u",
        loc,
        at0,
        at0.to_string(),
        "true",
    ));
    let correction = &transition_bindings()["v"]
        - &(&(&LaurentPolynomial::var("z") * &LaurentPolynomial::var("z"))
            * &LaurentPolynomial::var("u"));
    cases.push(Case::equal(
        "deformation/transition-correction",
        "the transition differs from v = z^2 u by t z",
        loc,
        Pretty(&correction).to_string(),
        "t*z",
    ));

    let loc = "section at infinity";
    for (ch, limit) in [(Chart::U, section_limit_u()), (Chart::V, section_limit_v())] {
        match section_at_infinity(ch) {
            Ok(s) => {
                let (a, b) = m_family_residuals(&s);
                cases.push(Case::equal(
                    format!("deformation/section-{}", ch.name()),
                    format!(
                        "section at infinity on {} lies on M_t with y0 = 0",
                        ch.name()
                    ),
                    loc,
                    format!("{} y0={}", pair_text(&a, &b), Pretty(&s.p3[0])),
                    "(0, 0) y0=0",
                ));
                let lim = limit
                    .map(|p| p.to_string())
                    .unwrap_or_else(|e| e.to_string());
                cases.push(Case::equal(
                    format!("deformation/section-limit-{}", ch.name()),
                    format!(
                        "fibre coordinate to infinity on {} reaches the section",
                        ch.name()
                    ),
                    loc,
                    lim,
                    s.to_string(),
                ));
            }
            Err(e) => cases.push(Case::new(
                format!("deformation/section-{}", ch.name()),
                loc,
                loc,
                false,
                e.to_string(),
                "",
            )),
        }
    }
    cases.push(Case::equal(
        "deformation/zero-section",
        "t = 0 and u = 0 give the zero section ([1, z], [1, 0, 0, 0])",
        "T*P1 to O1 embedding",
        zero_section()
            .map(|p| p.to_string())
            .unwrap_or_else(|e| e.to_string()),
        "([1, z], [1, 0, 0, 0])",
    ));

    let loc = "potential family from 2x to x + y + y^2/x";
    let w0 = parse_polynomial("x + y + y^2/x").expect("literal");
    let w1 = parse_polynomial("2*x").expect("literal");
    match potential_family(&w0, &w1, Interpolation::Homotopy) {
        Ok(fam) => {
            for (t, expected) in [
                (rat(0), "2*x"),
                (rat(1), "x + y + y^2/x"),
                (ratio(1, 2), "3/2*x + 1/2*y + 1/2*y^2/x"),
            ] {
                let got = fam
                    .potential_at(&t)
                    .map(|p| p.to_string())
                    .unwrap_or_else(|e| e.to_string());
                let want = parse_polynomial(expected).expect("literal").to_string();
                cases.push(Case::equal(
                    format!("deformation/potential-01-t={}", rational_text(&t)),
                    format!("fibre potential at t = {}", rational_text(&t)),
                    loc,
                    got,
                    want,
                ));
            }
        }
        Err(e) => cases.push(Case::new(
            "deformation/potential-01",
            loc,
            loc,
            false,
            e.to_string(),
            "",
        )),
    }

    let loc = "sl(2) orbit as the hypersurface x^2 + yz = 1";
    for (id, g, want) in [
        ("orbit/membership-identity", [[1, 0], [0, 1]], "(1, 0, 0)"),
        ("orbit/membership-shear", [[1, 1], [0, 1]], "(1, -2, 0)"),
    ] {
        let g = RationalMatrix::from_i64_rows(&g).expect("2x2");
        let got = orbit_membership(&g)
            .map(|p| format!("({}, {}, {})", p[0], p[1], p[2]))
            .unwrap_or_else(|e| e.to_string());
        cases.push(Case::equal(
            id,
            "g Diag(1,-1) g^-1 written as (x, y, z)",
            loc,
            got,
            want,
        ));
    }
    let rem = symbolic_orbit_remainder()
        .map(|r| Pretty(&r).to_string())
        .unwrap_or_else(|e| e.to_string());
    cases.push(Case::equal(
        "orbit/symbolic-remainder",
        "x^2 + yz - 1 vanishes modulo ad - bc - 1 for generic g",
        loc,
        rem,
        "0",
    ));
    let pts: Vec<String> = orbit_critical_points()
        .iter()
        .map(|(p, v)| format!("({},{},{})->{}", p[0], p[1], p[2], v))
        .collect();
    cases.push(Case::equal(
        "orbit/critical-points",
        "critical points of 2x on the orbit",
        loc,
        pts.join(" "),
        "(1,0,0)->2 (-1,0,0)->-2",
    ));

    let mut r = Report::new("deformation", cases);
    r.residuals = residuals;
    r
}

pub fn mirror() -> Report {
    let s = MirrorSurface::default();
    let loc = "mirror surface uy = v(x + 1 + 1/x)";
    let mut cases = Vec::new();
    let mut detail = MirrorDetail {
        coefficients: "alpha=1 beta=1 gamma=1 (inferred defaults)".to_string(),
        points: Vec::new(),
        common_value: None,
        same_fibre: false,
    };
    match mirror_critical_points(&s) {
        Ok(pts) => {
            cases.push(Case::equal(
                "mirror/count",
                "number of critical points",
                loc,
                pts.len().to_string(),
                "2",
            ));
            for (i, p) in pts.iter().enumerate() {
                let mp = Pretty(&p.x.min_poly_in("x")).to_string();
                cases.push(Case::equal(
                    format!("mirror/point-{}", i + 1),
                    "x is a root of x^2 + x + 1 with v = 0 and value 0",
                    loc,
                    format!("{} v={} value={}", mp, p.v, value_text(&p.value)),
                    "x^2 + x + 1 v=0 value=0",
                ));
                let ok = certify(&s, p).unwrap_or(false);
                cases.push(Case::new(
                    format!("mirror/point-{}-certified", i + 1),
                    "gradient vanishes exactly modulo the minimal polynomial",
                    loc,
                    ok,
                    ok.to_string(),
                    "true",
                ));
                detail.points.push(MirrorPoint {
                    min_poly: mp,
                    approx_x: format!("{:.12} {:+.12}i", p.x.approx.re, p.x.approx.im),
                    approx_v: rational_text(&p.v),
                });
            }
            let values: Vec<CriticalValue> = pts.iter().map(|p| p.value.clone()).collect();
            let same = same_fibre(&values, &rat(0));
            detail.same_fibre = same;
            detail.common_value = same.then(|| value_text(&values[0]));
            cases.push(Case::new(
                "mirror/same-fibre",
                "both critical points lie in one fibre",
                "mirror singularities occur on the same fibre",
                same,
                same.to_string(),
                "true",
            ));
            let exact: Vec<Rational> = values
                .iter()
                .filter_map(|v| match v {
                    CriticalValue::Exact(r) => Some(r.clone()),
                    CriticalValue::Approx(_) => None,
                })
                .collect();
            let orbit: Vec<Rational> = orbit_critical_points()
                .into_iter()
                .map(|(_, v)| v)
                .collect();
            cases.push(Case::equal(
                "mirror/fibre-profile",
                "(critical values, points per fibre): orbit model vs mirror",
                "contrast with the potential 2x",
                format!("{:?} vs {:?}", fibre_profile(&orbit), fibre_profile(&exact)),
                "(2, 1) vs (1, 2)",
            ));
        }
        Err(e) => cases.push(Case::new(
            "mirror/critical-points",
            loc,
            loc,
            false,
            e.to_string(),
            "",
        )),
    }
    let orbit_values: Vec<CriticalValue> = orbit_critical_points()
        .into_iter()
        .map(|(_, v)| CriticalValue::Exact(v))
        .collect();
    let orbit_same = same_fibre(&orbit_values, &rat(0));
    cases.push(Case::new(
        "mirror/orbit-contrast",
        "critical values 2 and -2 of 2x lie in different fibres",
        "contrast with the potential 2x",
        !orbit_same,
        orbit_same.to_string(),
        "false",
    ));
    cases.push(Case::equal(
        "mirror/infinity-chart",
        "no critical points in the chart v = 1",
        "plumbing",
        infinity_chart_critical_count(&s).to_string(),
        "0",
    ));
    let mut r = Report::new("mirror", cases);
    r.mirror = Some(detail);
    r
}

fn value_text(v: &CriticalValue) -> String {
    match v {
        CriticalValue::Exact(r) => rational_text(r),
        CriticalValue::Approx(z) => format!("approx {:.12} {:+.12}i", z.re, z.im),
    }
}

/// Traceless matrix with entries in `[-3, 3]`.
pub fn random_traceless(rng: &mut impl Rng, dim: usize) -> TracelessMatrix {
    let mut m = RationalMatrix::zeros(dim, dim);
    let mut tr = 0i64;
    for i in 0..dim {
        for j in 0..dim {
            if i == dim - 1 && j == dim - 1 {
                continue;
            }
            let x = rng.gen_range(-3i64..=3);
            if i == j {
                tr += x;
            }
            m.set(i, j, rat(x));
        }
    }
    m.set(dim - 1, dim - 1, rat(-tr));
    TracelessMatrix::new(m).expect("trace is zero by construction")
}

pub fn lie(opts: &Options) -> Report {
    let norm = opts.normalization;
    let mut cases = Vec::new();
    let d = |v: &[i64]| DiagonalElement::from_i64(v).expect("traceless literal");

    let h = d(&[1, 0, -1]);
    let h0 = d(&[2, -1, -1]);
    let w = WeylPermutation::from_cycles(3, &[&[1, 2, 3]]).expect("valid cycle");
    let factor = norm.factor(3);
    let got: Vec<String> = [w.pow(0), w.clone(), w.pow(2)]
        .iter()
        .map(|p| {
            weyl_act(p, &h0)
                .and_then(|t| h.trace_with(&t))
                .map(|v| rational_text(&(v * &factor)))
                .unwrap_or_else(|e| e.to_string())
        })
        .collect();
    let expected: Vec<String> = [3i64, 0, -3]
        .iter()
        .map(|v| rational_text(&(rat(*v) * &factor)))
        .collect();
    cases.push(Case::equal(
        format!("lie/sl3-pairings-{}", norm.name()),
        format!(
            "<H, w^k H0> for w = {}, k = 0, 1, 2 ({} pairing)",
            w,
            norm.name()
        ),
        "sl(3) example with w = (123)",
        got.join(", "),
        expected.join(", "),
    ));
    let cv = critical_values(&h, &h0, norm)
        .map(|v| {
            v.iter()
                .map(|(_, x)| rational_text(x))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .unwrap_or_else(|e| e.to_string());
    cases.push(Case::equal(
        format!("lie/sl3-critical-values-{}", norm.name()),
        "critical values over all distinct Weyl translates",
        "sl(3) example with w = (123)",
        cv,
        expected.join(", "),
    ));

    let sl2 = critical_values(&d(&[1, -1]), &d(&[1, -1]), Normalization::Trace)
        .map(|v| {
            v.iter()
                .map(|(_, x)| rational_text(x))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .unwrap_or_else(|e| e.to_string());
    let orbit: Vec<String> = orbit_critical_points()
        .iter()
        .map(|(_, v)| rational_text(v))
        .collect();
    cases.push(Case::equal(
        "lie/sl2-matches-orbit-hypersurface",
        "trace critical values on the sl(2) orbit agree with the hypersurface model",
        "plumbing",
        sl2,
        orbit.join(", "),
    ));

    for n in 1..=3usize {
        let h = d(&(0..=n as i64).map(|k| 2 * k - n as i64).collect::<Vec<_>>());
        let h0 = DiagonalElement::minimal_orbit_base(n);
        let chart = OrbitChart::new(&h0).and_then(|c| c.height(&h, Normalization::Trace));
        let formula = lie_potential(&h, &h0, n).map(|p| p.polynomial().clone());
        let (l, r) = match (chart, formula) {
            (Ok(a), Ok(b)) => (a.to_string(), b.to_string()),
            (a, b) => (format!("{:?}", a.err()), format!("{:?}", b.err())),
        };
        cases.push(Case::equal(
            format!("lie/chart-expansion-n={}", n),
            "exp-adjoint chart expansion equals the closed-form Lie potential",
            "Lie potential on the minimal orbit",
            l,
            r,
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for n in 1..=4usize {
        let dim = n + 1;
        let mut bad = 0;
        for _ in 0..opts.samples {
            let a = random_traceless(&mut rng, dim);
            let b = random_traceless(&mut rng, dim);
            let lhs = ad_matrix(&a).mul(&ad_matrix(&b)).expect("square").trace();
            let rhs = a.matrix().mul(b.matrix()).expect("square").trace() * rat(2 * dim as i64);
            if lhs != rhs {
                bad += 1;
            }
        }
        cases.push(Case::equal(
            format!("lie/killing-identity-n={}", n),
            format!(
                "tr(ad A ad B) = {} tr(AB) on random traceless pairs",
                2 * dim
            ),
            "Cartan-Killing form",
            format!("{} failures of {}", bad, opts.samples),
            format!("0 failures of {}", opts.samples),
        ));
    }
    let mut bad = 0;
    for _ in 0..opts.samples {
        let dim = rng.gen_range(2..=4);
        let (a, b, c) = (
            random_traceless(&mut rng, dim),
            random_traceless(&mut rng, dim),
            random_traceless(&mut rng, dim),
        );
        let br = |x: &TracelessMatrix, y: &TracelessMatrix| bracket(x, y).expect("same dim");
        let sum = br(&a, &br(&b, &c))
            .add(&br(&b, &br(&c, &a)))
            .and_then(|s| s.add(&br(&c, &br(&a, &b))))
            .expect("same dim");
        if !sum.is_zero() {
            bad += 1;
        }
    }
    cases.push(Case::equal(
        "lie/jacobi",
        "Jacobi identity on random traceless triples",
        "plumbing",
        format!("{} failures of {}", bad, opts.samples),
        format!("0 failures of {}", opts.samples),
    ));
    Report::new("lie", cases)
}

/// Cases for user-supplied model files.
pub fn model_cases(models: &[ModelFile]) -> Report {
    let mut cases = Vec::new();
    for mf in models {
        let m = &mf.model;
        cases.push(double_dual_case(&m.name, m));
        let dual_mon = dualize(m)
            .map(|d| rows_text(&d.mon()))
            .unwrap_or_else(|e| e.to_string());
        cases.push(Case::equal(
            format!("model/{}/dual-mon", m.name),
            "Mon of the dual potential equals Div",
            "plumbing",
            dual_mon,
            rows_text(&m.div),
        ));
        let c = cokernel_invariants(&m.div);
        let c2 = chow_group(m);
        cases.push(Case::new(
            format!("model/{}/chow", m.name),
            "Chow group from the Smith normal form of Div",
            "plumbing",
            c == c2,
            format!(
                "Z^{} torsion [{}]",
                c.free_rank,
                c.torsion
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            format!("selfdual={}", is_selfdual(m)),
        ));
    }
    Report::new("models", cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_suite_passes() {
        let opts = Options::default();
        for s in [
            Suite::Coincidence,
            Suite::Duality,
            Suite::Deformation,
            Suite::Mirror,
            Suite::Lie,
        ] {
            let r = run(s, &opts, &[]);
            assert!(r.all_passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn killing_normalization_values() {
        let opts = Options {
            normalization: Normalization::Killing,
            ..Options::default()
        };
        let r = lie(&opts);
        let c = r
            .cases
            .iter()
            .find(|c| c.id == "lie/sl3-pairings-killing")
            .unwrap();
        assert_eq!(c.lhs, "18, 0, -18");
        assert!(r.all_passed());
    }

    #[test]
    fn suite_names_parse() {
        for n in Suite::NAMES {
            assert_eq!(n.parse::<Suite>().unwrap().name(), n);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
