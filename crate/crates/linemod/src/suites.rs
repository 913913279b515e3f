//! Theorem suites run by `verify-paper`. Each suite is a list of named checks
//! with a pass flag and a JSON detail record.

use linemod_core::error::{Error, Result};
use linemod_core::geometry::{classify_line_family_color, line_on_quadric, sl2_pencil, sl11_quadric_line};
use linemod_core::hilbert::{hilbert_of_system, oracle_graded_dims};
use linemod_core::liealg::{
    admissible_functional, classify_2dim_subalgebras, claimed_members, closed_form_admissible, is_graded_subspace,
    BracketTable, ClassificationReport, Functional, SubalgebraSpec,
};
use linemod_core::linemod::{
    build_l_h_phi, build_twisted, certify_homogenization_iso, certify_l_h_phi_correspondence, certify_line_module,
    graded_plane_shape, is_z2_graded_line_module, torsion_free_t, torsion_profile, CertificationReport,
    GradedPlaneShape, InducedModuleSpec, LineModuleSpec,
};
use linemod_core::ncalg::{q, qf, NcPoly, Q};
use linemod_core::presets::{algebra, color_fixtures, poly, sl11_admissible_fixtures, sl11_pair, table};
use linemod_core::rewrite::RewriteSystem;
use serde_json::{json, Value};

use crate::report::{dims, rat, rats, trace};

pub const SUITES: [&str; 4] = ["sl2", "sl11", "slc", "sl21"];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub max_degree: usize,
    pub oracle_degree: usize,
    pub seed: u64,
    pub samples: usize,
    pub oracle_cap: usize,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: Value) -> Self {
        Check { name: name.into(), pass, detail }
    }

    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "pass": self.pass, "detail": self.detail })
    }
}

pub fn run_suite(name: &str, o: &SuiteOptions) -> Result<Vec<Check>> {
    match name {
        "sl2" => sl2(o),
        "sl11" => sl11(o),
        "slc" => slc(o),
        "sl21" => sl21(o),
        "all" => {
            let mut out = Vec::new();
            for s in SUITES {
                for mut c in run_suite(s, o)? {
                    c.name = format!("{s}: {}", c.name);
                    out.push(c);
                }
            }
            Ok(out)
        }
        other => Err(Error::UnknownPreset(format!("suite {other}"))),
    }
}

pub fn system(name: &str, bound: usize) -> Result<RewriteSystem> {
    RewriteSystem::new(&algebra(name)?, bound)
}

/// Rewrite-route dims to `max_degree` against oracle dims to `oracle_degree`.
pub fn two_route_hilbert(name: &str, o: &SuiteOptions, expected: impl Fn(usize) -> usize) -> Result<Check> {
    let rs = system(name, o.max_degree)?;
    let rewrite = hilbert_of_system(&rs, o.max_degree)?;
    let oracle = oracle_graded_dims(&rs.presentation, o.oracle_degree, o.oracle_cap)?;
    let want: Vec<usize> = (0..=o.max_degree).map(expected).collect();
    let pass = rewrite.dims == want && rewrite.dims[..oracle.dims.len()] == oracle.dims[..];
    Ok(Check::new(
        format!("Hilbert function of {name}, two routes"),
        pass,
        json!({ "rewrite": dims(&rewrite), "oracle": dims(&oracle), "expected": want, "confluent_up_to": rs.confluent_up_to }),
    ))
}

fn binom3(d: usize) -> usize {
    (d + 3) * (d + 2) * (d + 1) / 6
}

fn classification(t: &BracketTable, o: &SuiteOptions) -> Result<Check> {
    let r: ClassificationReport = classify_2dim_subalgebras(t, o.samples, o.seed)?;
    Ok(Check::new(format!("2-dimensional subalgebras of {}", t.name), r.pass(), classification_json(&r)))
}

pub fn classification_json(r: &ClassificationReport) -> Value {
    json!({
        "members": r.members.iter().map(|(n, ok)| json!({ "family": n, "closed": ok })).collect::<Vec<_>>(),
        "samples": r.samples,
        "per_chart": r.per_chart,
        "closed_samples": r.closed,
        "families_seen": r.families_seen,
        "counterexamples": r.counterexamples.iter().map(|s| json!([rats(&s.basis[0]), rats(&s.basis[1])])).collect::<Vec<_>>(),
    })
}

fn cert_json(r: &CertificationReport) -> Value {
    json!({
        "target": r.target,
        "dims": dims(&r.found),
        "expected": dims(&r.expected),
        "checks": r.checks.iter().map(|(n, ok)| json!({ "check": n, "pass": ok })).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

fn sl2(o: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = vec![two_route_hilbert("sl2_A", o, binom3)?];
    let t = table("sl2")?;
    out.push(classification(&t, o)?);

    let a = system("sl2_A", o.max_degree)?;
    let alpha = a.alphabet().clone();
    let tl = alpha.index_of("t").expect("t");
    let mut rows = Vec::new();
    let mut pass = true;
    for lambda in sample_values() {
        let h = &poly(&alpha, &[(1, "h")]) - &NcPoly::letter(tl).scale(&lambda);
        let m = LineModuleSpec::new(&a, poly(&alpha, &[(1, "e")]), h)?;
        let cert = certify_line_module(&m, o.max_degree)?;
        let on_pencil = line_on_quadric(&m.line()?, &sl2_pencil(&lambda));
        let tf = torsion_free_t(&m, tl, o.max_degree)?;
        pass &= cert.pass() && on_pencil && tf;
        rows.push(json!({ "lambda": rat(&lambda), "dims": dims(&cert.found), "on_Q(lambda)": on_pencil, "t_torsion_free": tf }));
    }
    out.push(Check::new("A/(Ae + A(h - λt)) is a line module on Q(λ)", pass, Value::Array(rows)));

    // Lines in the plane V(t).
    let mut rows = Vec::new();
    let mut pass = true;
    for (x, y) in [(1, 0), (0, 1), (1, 1), (2, -3)] {
        let g = &poly(&alpha, &[(x, "e")]) + &poly(&alpha, &[(y, "h"), (1, "f")]);
        let m = LineModuleSpec::new(&a, NcPoly::letter(tl), g)?;
        let cert = certify_line_module(&m, o.max_degree)?;
        pass &= cert.pass();
        rows.push(json!({ "generators": m.fmt_generators(), "dims": dims(&cert.found) }));
    }
    out.push(Check::new("lines in V(t) give line modules", pass, Value::Array(rows)));

    let u = system("sl2_U", o.oracle_degree)?;
    let mut rows = Vec::new();
    let mut pass = true;
    for (tag, s) in claimed_members(&t)? {
        for (x, y) in [(0, 0), (1, 0), (3, 0), (0, 1), (2, 5)] {
            let phi = Functional::new(q(x), q(y));
            let routes = admissible_functional(&s, &phi, &t, &u, o.oracle_degree);
            pass &= routes.is_ok();
            rows.push(json!({ "subalgebra": tag, "phi": [x, y], "admissible": routes.as_ref().ok(), "agree": routes.is_ok() }));
        }
    }
    out.push(Check::new("admissibility: closed form agrees with properness", pass, Value::Array(rows)));
    Ok(out)
}

pub fn sample_values() -> Vec<Q> {
    vec![q(0), q(1), q(-1), q(2), q(-3), qf(1, 2), qf(-2, 3), qf(5, 4), q(7), qf(-9, 5)]
}

fn sl11(o: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (name, want) in [("sl11_Hhat", 6), ("sl11_H", 8)] {
        let n = algebra(name)?.all_relations().len();
        out.push(Check::new(format!("{name} has {want} relations"), n == want, json!(n)));
    }
    out.push(two_route_hilbert("sl11_Hhat", o, binom3)?);
    out.push(two_route_hilbert("sl11_H", o, |d| if d == 0 { 1 } else { 4 * d })?);
    let t = table("sl11")?;
    out.push(classification(&t, o)?);

    let n = o.max_degree;
    let hhat = system("sl11_Hhat", n + 2)?;
    let uhat = system("sl11_Uhat", n + 2)?;
    let mut rows = Vec::new();
    let mut pass = true;
    for p in sl11_admissible_fixtures() {
        let (s, phi) = sl11_pair(&t, &p)?;
        let rep = certify_l_h_phi_correspondence(&hhat, &uhat, &t, &s, &phi, n.min(5))?;
        pass &= rep.pass();
        rows.push(json!({ "alpha_beta_lambda_gamma": rats(&p), "report": cert_json(&rep) }));
    }
    out.push(Check::new("L_(S,φ) is the homogenized induced module when γ² = αβλ", pass, Value::Array(rows)));

    let mut rows = Vec::new();
    let mut pass = true;
    for p in [[q(1), q(1), q(1), q(5)], [q(1), q(0), q(2), q(1)], [q(1), q(-1), q(3), q(1)]] {
        let (s, phi) = sl11_pair(&t, &p)?;
        let rep = certify_l_h_phi_correspondence(&hhat, &uhat, &t, &s, &phi, n)?;
        pass &= rep.pass() && !rep.notes.is_empty();
        rows.push(json!({ "alpha_beta_lambda_gamma": rats(&p), "report": cert_json(&rep) }));
    }
    out.push(Check::new("L_(S,φ) is a line module for inadmissible φ too", pass, Value::Array(rows)));

    let mut rows = Vec::new();
    let mut pass = true;
    for lambda in sample_values() {
        let l = sl11_quadric_line(&lambda);
        let gens: Vec<NcPoly> = [&l.u, &l.v].iter().map(|f| form_poly(f)).collect();
        let m = LineModuleSpec::new(&hhat, gens[0].clone(), gens[1].clone())?;
        let cert = certify_line_module(&m, n)?;
        pass &= cert.pass();
        rows.push(json!({ "lambda": rat(&lambda), "dims": dims(&cert.found) }));
    }
    out.push(Check::new("lines V(e - λh, t - 2λf) on V(ht - 2ef) give line modules", pass, Value::Array(rows)));

    out.extend(graded_checks(&hhat, &t, n)?);
    Ok(out)
}

/// The linear form `Σ fᵢ·xᵢ` in the first four letters.
pub fn form_poly(f: &[Q; 4]) -> NcPoly {
    let mut p = NcPoly::zero();
    for (i, c) in f.iter().enumerate() {
        p.add_term(linemod_core::ncalg::Word::letter(i as u16), c.clone());
    }
    p
}

/// Graded line modules over Ĥ: graded φ gives graded modules, and the three
/// shapes of graded planes behave as the classification says.
pub fn graded_checks(hhat: &RewriteSystem, t: &BracketTable, n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut pass = true;
    let mut rows = Vec::new();
    for p in sl11_admissible_fixtures().into_iter().filter(|p| p[3] == q(0)) {
        let (s, phi) = sl11_pair(t, &p)?;
        let m = build_l_h_phi(hhat, t, &s, &phi)?;
        let graded = is_z2_graded_line_module(&m)?;
        let cert = certify_line_module(&m, n)?;
        pass &= graded && cert.pass();
        rows.push(json!({ "generators": m.fmt_generators(), "graded": graded, "dims": dims(&cert.found) }));
    }
    out.push(Check::new("graded φ gives graded line modules", pass, Value::Array(rows)));

    let alpha = hhat.alphabet().clone();
    let tl = alpha.index_of("t").expect("t");
    let coords = |p: &NcPoly| -> Vec<Q> { (0..4).map(|i| p.coeff(&linemod_core::ncalg::Word::letter(i))).collect() };
    let mut rows = Vec::new();
    let mut pass = true;
    let odd = LineModuleSpec::new(hhat, poly(&alpha, &[(1, "e")]), poly(&alpha, &[(1, "f")]))?;
    let even = LineModuleSpec::new(hhat, poly(&alpha, &[(1, "h")]), poly(&alpha, &[(1, "t")]))?;
    let mixed = LineModuleSpec::new(hhat, poly(&alpha, &[(1, "h"), (-2, "t")]), poly(&alpha, &[(1, "e"), (3, "f")]))?;
    let degenerate = LineModuleSpec::new(hhat, poly(&alpha, &[(1, "t")]), poly(&alpha, &[(1, "e"), (3, "f")]))?;
    for (label, m, want_shape) in [
        ("span(e, f)", &odd, "odd"),
        ("span(h, t)", &even, "even"),
        ("span(h - 2t, e + 3f)", &mixed, "mixed"),
        ("span(t, e + 3f)", &degenerate, "mixed"),
    ] {
        let rows_m: Vec<Vec<Q>> = m.generators.iter().map(coords).collect();
        let shape = graded_plane_shape(&rows_m);
        let shape_tag = match &shape {
            Some(GradedPlaneShape::Odd) => "odd",
            Some(GradedPlaneShape::Even) => "even",
            Some(GradedPlaneShape::Mixed { .. }) => "mixed",
            None => "ungraded",
        };
        let line = certify_line_module(m, n)?;
        let tf = torsion_free_t(m, tl, n)?;
        let expected_line_module = label != "span(e, f)";
        let expected_tf = label == "span(h - 2t, e + 3f)";
        let ok = shape_tag == want_shape && line.pass() == expected_line_module && tf == expected_tf;
        pass &= ok;
        rows.push(json!({
            "plane": label,
            "shape": shape_tag,
            "line_module": line.pass(),
            "first_failure": line.first_failure(),
            "dims": dims(&line.found),
            "t_torsion_free": tf,
        }));
    }
    out.push(Check::new("graded planes of Ĥ₁: shapes, line modules, t-torsion", pass, Value::Array(rows)));
    Ok(out)
}

fn slc(o: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let n_rel = algebra("slc_H")?.all_relations().len();
    out.push(Check::new("slc_H has 6 relations", n_rel == 6, json!(n_rel)));
    out.push(two_route_hilbert("slc_H", o, binom3)?);
    let t = table("slc")?;
    out.push(classification(&t, o)?);

    let labels = t.labels().expect("graded").to_vec();
    let members = claimed_members(&t)?;
    let none_graded = members.iter().all(|(_, s)| !is_graded_subspace(s, &labels));
    out.push(Check::new(
        "no 2-dimensional subalgebra is group-graded",
        none_graded && members.len() == 6,
        json!(members.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>()),
    ));

    let u = system("slc_U", o.oracle_degree)?;
    out.push(color_grid(&t, &u, o.oracle_degree)?);

    let n = o.max_degree.min(5);
    let h = system("slc_H", n + 2)?;
    let uu = system("slc_U", n + 2)?;
    out.push(color_correspondence(&t, &h, &uu, n)?);
    Ok(out)
}

/// Properness route over a 21×21 grid of `(φ(aᵢ), φ(aⱼ+μaₖ))` values `k/2`,
/// compared with the union of the lines `φ(aⱼ+μaₖ) = 0` and `φ(aᵢ) = μ/2`.
pub fn color_grid(t: &BracketTable, u: &RewriteSystem, n: usize) -> Result<Check> {
    let grid: Vec<Q> = (-10..=10).map(|k| qf(k, 2)).collect();
    let mut rows = Vec::new();
    let mut pass = true;
    for (tag, s) in claimed_members(t)? {
        let (_, _, _, mu) = linemod_core::liealg::color_parameters(&s)?;
        let half = &mu / q(2);
        let mut solutions = 0usize;
        let mut mismatches = Vec::new();
        for x in &grid {
            for y in &grid {
                let phi = Functional::new(x.clone(), y.clone());
                let ok = linemod_core::liealg::properness_admissible(t, &s, &phi, u, n)?;
                let predicted = *y == q(0) || *x == half;
                if ok {
                    solutions += 1;
                }
                if ok != predicted {
                    mismatches.push(json!([rat(x), rat(y)]));
                }
            }
        }
        pass &= mismatches.is_empty() && solutions == 41;
        rows.push(json!({ "subalgebra": tag, "solutions": solutions, "mismatches": mismatches }));
    }
    Ok(Check::new("color admissibility is exactly two lines on a 21×21 grid", pass, Value::Array(rows)))
}

/// Every color fixture: ℋ(induced) ≅ twisted line module, `a4` acts without
/// torsion, and the line is in the predicted family.
pub fn color_correspondence(t: &BracketTable, h: &RewriteSystem, u: &RewriteSystem, n: usize) -> Result<Check> {
    let a4 = h.alphabet().index_of("a4").expect("a4");
    let mut rows = Vec::new();
    let mut pass = true;
    for fx in color_fixtures() {
        let (s, phi) = fx.pair(t)?;
        let m = build_twisted(h, t, &s, &phi)?;
        let spec = InducedModuleSpec { enveloping: u, table: t.clone(), sub: s, phi };
        let iso = certify_homogenization_iso(&spec, &m, n)?;
        let tf = torsion_free_t(&m, a4, n)?;
        let tags = classify_line_family_color(&m.line()?);
        let want = fx.expected_tag();
        // A pair on both admissibility loci belongs to both cases.
        let on_both = fx.phi[1] == q(0) && fx.phi[0] == qf(fx.mu, 2);
        let in_case = tags.iter().all(|tag| *tag == "7" || on_both || case_of(tag) == Some(fx.family));
        let ok = iso.pass() && tf && tags.contains(&want.as_str()) && in_case;
        pass &= ok;
        let profile = torsion_profile(&m, n.min(4))?;
        rows.push(json!({
            "generators": m.fmt_generators(),
            "expected_family": want,
            "classified": tags,
            "dims": dims(&iso.found),
            "a4_torsion_free": tf,
            "torsion_free_letters": profile.iter().filter(|(_, b)| *b).map(|(n, _)| n.clone()).collect::<Vec<_>>(),
            "pass": ok,
        }));
    }
    Ok(Check::new("homogenized induced modules over sl2^c match the line families", pass, Value::Array(rows)))
}

/// `'a'` for tags 1–3 and `'b'` for 4–6.
pub fn case_of(tag: &str) -> Option<char> {
    match tag.chars().next()? {
        '1'..='3' => Some('a'),
        '4'..='6' => Some('b'),
        _ => None,
    }
}

fn sl21(o: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let p = algebra("sl21_Hhat")?;
    let a = &p.alphabet;
    let rels = p.all_relations();
    let quoted = [
        poly(a, &[(1, "x3 y1"), (-1, "y1 x3")]),
        poly(a, &[(1, "y1 y3"), (1, "y3 y1")]),
        poly(a, &[(1, "x3 y3"), (-1, "y3 x3"), (-1, "y1 t")]),
    ];
    let present: Vec<bool> = quoted.iter().map(|w| rels.iter().any(|r| r == w || *r == -w)).collect();
    out.push(Check::new(
        "sl21_Hhat has 36 relations including the three quoted",
        rels.len() == 36 && present.iter().all(|&b| b),
        json!({ "relations": rels.len(), "quoted_present": present }),
    ));

    let bound = o.max_degree.min(5).max(3);
    let rs = RewriteSystem::new(&p, bound)?;
    let y1 = a.index_of("y1").expect("y1");
    let t = a.index_of("t").expect("t");
    let y1y1 = &NcPoly::letter(y1) * &NcPoly::letter(y1);
    let x = &y1y1 * &NcPoly::letter(t);
    let (steps, nf) = rs.derivation_trace(&x)?;
    let replayed = rs.replay(&x, &steps);
    let nf_sq = rs.normal_form(&y1y1)?;
    let nf_t = rs.normal_form(&NcPoly::letter(t))?;
    out.push(Check::new(
        "y1·y1·t = 0 although y1·y1 ≠ 0 and t ≠ 0",
        nf.is_zero() && replayed.is_zero() && !nf_sq.is_zero() && !nf_t.is_zero(),
        json!({
            "bound": bound,
            "confluent_up_to": rs.confluent_up_to,
            "normal_form(y1*y1*t)": a.fmt_poly(&nf),
            "normal_form(y1*y1)": a.fmt_poly(&nf_sq),
            "normal_form(t)": a.fmt_poly(&nf_t),
            "trace": trace(&rs, &steps),
        }),
    ));
    Ok(out)
}

/// Closed-form admissibility with its deciding condition, as JSON.
pub fn closed_form_json(t: &BracketTable, s: &SubalgebraSpec, phi: &Functional) -> Result<Value> {
    let cf = closed_form_admissible(t, s, phi)?;
    Ok(json!({ "admissible": cf.admissible, "condition": cf.condition }))
}
