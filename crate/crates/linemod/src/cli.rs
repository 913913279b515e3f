use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use linemod_core::error::Error;
use linemod_core::geometry::{
    classify_line_family_color, form, line_on_quadric, lines_meet, sl11_quadric, Line, Quadric,
};
use linemod_core::hilbert::{hilbert_of_system, oracle_graded_dims};
use linemod_core::liealg::{
    classify_2dim_subalgebras, properness_admissible, BracketTable, Functional, SubalgebraSpec,
};
use linemod_core::linemod::{
    build_twisted, certify_homogenization_iso, certify_l_h_phi_correspondence, certify_line_module,
    extract_sl11_pair, induced_module_dims, is_z2_graded_line_module, torsion_free_t, InducedModuleSpec,
    LineModuleSpec,
};
use linemod_core::ncalg::{Alphabet, GroupKind, NcPoly, Q};
use linemod_core::presets::{algebra, enveloping_for_admissibility, table};
use linemod_core::rewrite::{Presentation, RewriteSystem};
use linemod_core::DEFAULT_ORACLE_CAP;
use serde_json::{json, Value};

use crate::dsl::{parse_algebra, parse_expr, parse_expr_list, print_algebra, DslError};
use crate::report::{dims, poly, rat, rats, trace, Report};
use crate::suites::{classification_json, closed_form_json, run_suite, SuiteOptions};

#[derive(Parser, Debug)]
#[command(name = "linemod", version, about = "Exact checks for line modules over homogenized enveloping algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Degree bound for completion and module certification.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_degree: usize,
    /// Degree bound for the free-algebra oracle and for properness checks.
    #[arg(long, global = true, default_value_t = 4)]
    pub oracle_degree: usize,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Random subspaces drawn per algebra in classification audits.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub samples: usize,
    /// Print the JSON report instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print the JSON report indented.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Complete a presentation to a degree-bounded rewrite system.
    Complete {
        /// Preset name or path to a `.alg` file.
        #[arg(long)]
        algebra: String,
    },
    /// Normal form of an element.
    Nf {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Normal form with every rewrite step.
    Trace {
        #[arg(long)]
        algebra: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// Graded dimensions by rewriting and by the free-algebra oracle.
    Hilbert {
        #[arg(long)]
        algebra: String,
    },
    /// Check that A/(A·g₁ + A·g₂) has dims 1, 2, 3, …
    CertifyLine {
        #[arg(long)]
        algebra: String,
        #[arg(long = "gen", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
    /// Audit the 2-dimensional subalgebras of a bracket table.
    ClassifySub {
        #[arg(long)]
        table: String,
    },
    /// Decide whether φ defines a 1-dimensional module, by both routes.
    Admissible {
        #[arg(long)]
        table: String,
        /// Two basis vectors, e.g. "h, e + f".
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
        /// Values on the two basis vectors, e.g. "4, 2".
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    /// Filtered dims of an induced module and its homogenization.
    Induce {
        #[arg(long)]
        table: String,
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
        #[arg(long, allow_hyphen_values = true)]
        phi: String,
    },
    /// Place a line in the families of an algebra's line scheme.
    ClassifyLine {
        /// sl2, sl11 or slc.
        #[arg(long)]
        preset: String,
        /// Two linear forms, e.g. "a1 + a2, a3 - 5*a4".
        #[arg(long, allow_hyphen_values = true)]
        line: String,
    },
    /// Run a theorem suite.
    VerifyPaper {
        #[arg(long, default_value = "all", value_parser = ["sl2", "sl11", "slc", "sl21", "all"])]
        suite: String,
    },
    /// Print a presentation in the `.alg` format.
    Show {
        #[arg(long)]
        algebra: String,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("parse error at {0}")]
    Dsl(#[from] DslError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// What a command prints and the process exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok((report, text)) => {
            let json = report.render_json(cli.pretty);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, format!("{json}\n")) {
                    return Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 };
                }
            }
            let stdout = if cli.json || cli.pretty { format!("{json}\n") } else { text.unwrap_or_else(|| report.render_text()) };
            Outcome { stdout, stderr: String::new(), code: if report.pass { 0 } else { 1 } }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 },
    }
}

fn oracle_cap() -> Result<usize, CliError> {
    match std::env::var("LINEMOD_ORACLE_CAP") {
        Ok(v) => v.parse().map_err(|_| CliError::Usage(format!("LINEMOD_ORACLE_CAP={v} is not a number"))),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

/// A preset name, or a path to a `.alg` file.
pub fn load_algebra(spec: &str) -> Result<Presentation, CliError> {
    if spec.ends_with(".alg") || spec.contains('/') {
        let text = std::fs::read_to_string(spec)?;
        Ok(parse_algebra(&text)?)
    } else {
        Ok(algebra(spec)?)
    }
}

fn system(p: &Presentation, bound: usize) -> Result<RewriteSystem, CliError> {
    Ok(RewriteSystem::new(p, bound)?)
}

/// Homogenized algebra and inhomogeneous enveloping algebra used for induced modules.
fn induction_algebras(table: &str) -> Result<(&'static str, &'static str), CliError> {
    match table {
        "sl2" => Ok(("sl2_A", "sl2_U")),
        "sl11" => Ok(("sl11_Hhat", "sl11_Uhat")),
        "slc" => Ok(("slc_H", "slc_U")),
        other => Err(CliError::Usage(format!("no homogenized algebra for table `{other}`"))),
    }
}

fn parse_sub(t: &BracketTable, text: &str) -> Result<SubalgebraSpec, CliError> {
    let names: Vec<&str> = t.basis.iter().map(String::as_str).collect();
    let alpha = Alphabet::new(&names);
    let polys = parse_expr_list(text, &alpha)?;
    if polys.len() != 2 {
        return Err(CliError::Usage(format!("--sub needs two vectors, got {}", polys.len())));
    }
    let mut vs = Vec::new();
    for p in &polys {
        if p.homogeneous_degree(&alpha) != Some(1) {
            return Err(CliError::Usage(format!("`{}` is not a linear combination of basis vectors", alpha.fmt_poly(p))));
        }
        vs.push((0..alpha.len()).map(|i| p.coeff(&linemod_core::ncalg::Word::letter(i as u16))).collect::<Vec<Q>>());
    }
    let v2 = vs.pop().expect("two");
    let v1 = vs.pop().expect("two");
    Ok(SubalgebraSpec::new(v1, v2)?)
}

fn parse_phi(text: &str) -> Result<Functional, CliError> {
    let vals: Vec<Q> = text
        .split(',')
        .map(|s| s.trim().parse::<Q>().map_err(|_| CliError::Usage(format!("`{}` is not a rational", s.trim()))))
        .collect::<Result<_, _>>()?;
    match <[Q; 2]>::try_from(vals) {
        Ok([a, b]) => Ok(Functional::new(a, b)),
        Err(v) => Err(CliError::Usage(format!("--phi needs two values, got {}", v.len()))),
    }
}

fn sub_json(t: &BracketTable, s: &SubalgebraSpec) -> Value {
    let names: Vec<&str> = t.basis.iter().map(String::as_str).collect();
    let alpha = Alphabet::new(&names);
    json!(s
        .basis
        .iter()
        .map(|v| {
            let mut p = NcPoly::zero();
            for (i, c) in v.iter().enumerate() {
                p.add_term(linemod_core::ncalg::Word::letter(i as u16), c.clone());
            }
            alpha.fmt_poly(&p)
        })
        .collect::<Vec<_>>())
}

fn execute(cli: &Cli) -> Result<(Report, Option<String>), CliError> {
    let n = cli.max_degree;
    let mut r;
    let mut text = None;
    match &cli.command {
        Command::Complete { algebra } => {
            let p = load_algebra(algebra)?;
            let rs = system(&p, n)?;
            r = Report::new("complete");
            r.input("algebra", p.name.clone()).input("max_degree", n);
            r.result("rules", rs.rules.len())
                .result("confluent_up_to", rs.confluent_up_to)
                .result("globally_confluent", rs.is_globally_confluent())
                .result("discarded", rs.discarded.len())
                .result("unchecked_overlaps", rs.unchecked_overlaps)
                .result(
                    "rule_list",
                    rs.rules
                        .iter()
                        .map(|rule| format!("{} -> {}", rs.alphabet().fmt_word(&rule.lhs), rs.alphabet().fmt_poly(&rule.rhs)))
                        .collect::<Vec<_>>(),
                );
            r.pass = rs.confluent_up_to >= n;
        }
        Command::Nf { algebra, expr } | Command::Trace { algebra, expr } => {
            let p = load_algebra(algebra)?;
            let x = parse_expr(expr, &p.alphabet)?;
            let rs = system(&p, n.max(x.degree(&p.alphabet)))?;
            let (steps, nf) = rs.derivation_trace(&x)?;
            let is_trace = matches!(cli.command, Command::Trace { .. });
            r = Report::new(if is_trace { "trace" } else { "nf" });
            r.input("algebra", p.name.clone()).input("expr", p.alphabet.fmt_poly(&x));
            r.result("normal_form", poly(&p.alphabet, &nf)).result("is_zero", nf.is_zero());
            if is_trace {
                r.result("trace", trace(&rs, &steps)).result("replay_agrees", rs.replay(&x, &steps) == nf);
                r.pass = rs.replay(&x, &steps) == nf;
            }
        }
        Command::Hilbert { algebra } => {
            let p = load_algebra(algebra)?;
            let rs = system(&p, n)?;
            let rewrite = hilbert_of_system(&rs, n)?;
            let oracle = oracle_graded_dims(&p, cli.oracle_degree.min(n), oracle_cap()?)?;
            r = Report::new("hilbert");
            r.input("algebra", p.name.clone()).input("max_degree", n).input("oracle_degree", cli.oracle_degree);
            r.result("rewrite", dims(&rewrite)).result("oracle", dims(&oracle));
            r.pass = rewrite.dims[..oracle.dims.len()] == oracle.dims[..];
        }
        Command::CertifyLine { algebra, gens } => {
            let p = load_algebra(algebra)?;
            if gens.len() != 2 {
                return Err(CliError::Usage(format!("certify-line needs two --gen values, got {}", gens.len())));
            }
            let u = parse_expr(&gens[0], &p.alphabet)?;
            let v = parse_expr(&gens[1], &p.alphabet)?;
            let rs = system(&p, n)?;
            let m = LineModuleSpec::new(&rs, u, v)?;
            let rep = certify_line_module(&m, n)?;
            r = Report::new("certify-line");
            r.input("algebra", p.name.clone()).input("generators", m.fmt_generators()).input("max_degree", n);
            r.result("dims", dims(&rep.found)).result("expected", dims(&rep.expected));
            r.result("first_failure", json!(rep.first_failure()));
            if p.alphabet.grading == Some(GroupKind::Z2) {
                r.result("z2_graded", is_z2_graded_line_module(&m)?);
            }
            if let Some(t) = p.homogenizer() {
                r.result("t_torsion_free", torsion_free_t(&m, t, n)?);
            }
            if p.alphabet.len() == 4 {
                let l = m.line()?;
                r.result("plucker", l.plucker().iter().map(|c| c.to_string()).collect::<Vec<_>>());
            }
            r.pass = rep.pass();
        }
        Command::ClassifySub { table: name } => {
            let t = table(name)?;
            let rep = classify_2dim_subalgebras(&t, cli.samples, cli.seed)?;
            r = Report::new("classify-sub");
            r.seed = Some(cli.seed);
            r.input("table", name.clone()).input("samples", cli.samples);
            r.result("classification", classification_json(&rep));
            r.pass = rep.pass();
        }
        Command::Admissible { table: name, sub, phi } => {
            let t = table(name)?;
            let s = parse_sub(&t, sub)?;
            let phi = parse_phi(phi)?;
            let env_name = enveloping_for_admissibility(name)
                .ok_or_else(|| CliError::Usage(format!("no enveloping algebra for `{name}`")))?;
            let env = system(&algebra(env_name)?, cli.oracle_degree)?;
            let closed = closed_form_json(&t, &s, &phi)?;
            let proper = properness_admissible(&t, &s, &phi, &env, cli.oracle_degree)?;
            r = Report::new("admissible");
            r.input("table", name.clone()).input("sub", sub_json(&t, &s)).input("phi", rats(&phi.values));
            r.input("degree", cli.oracle_degree);
            let agree = closed["admissible"] == json!(proper);
            r.result("closed_form", closed).result("properness", proper).result("routes_agree", agree);
            r.pass = agree;
        }
        Command::Induce { table: name, sub, phi } => {
            let t = table(name)?;
            let s = parse_sub(&t, sub)?;
            let phi = parse_phi(phi)?;
            let (hom, env) = induction_algebras(name)?;
            let hom = system(&algebra(hom)?, n + 2)?;
            let env = system(&algebra(env)?, n + 2)?;
            r = Report::new("induce");
            r.input("table", name.clone()).input("sub", sub_json(&t, &s)).input("phi", rats(&phi.values));
            r.input("max_degree", n);
            r.result("closed_form", closed_form_json(&t, &s, &phi)?);
            let spec = InducedModuleSpec { enveloping: &env, table: t.clone(), sub: s.clone(), phi: phi.clone() };
            match induced_module_dims(&spec, n) {
                Ok(d) => {
                    let m = build_twisted(&hom, &t, &s, &phi)?;
                    let iso = certify_homogenization_iso(&spec, &m, n)?;
                    r.result("induced_dims", dims(&d)).result("line_module_dims", dims(&iso.expected));
                    r.result("line_module", m.fmt_generators());
                    r.result(
                        "annihilator",
                        iso.checks.iter().map(|(c, ok)| json!({ "check": c, "pass": ok })).collect::<Vec<_>>(),
                    );
                    r.pass = iso.pass();
                }
                Err(Error::Inadmissible(cond)) => {
                    r.result("inadmissible", cond);
                    if name == "sl11" {
                        let rep = certify_l_h_phi_correspondence(&hom, &env, &t, &s, &phi, n)?;
                        r.result("l_h_phi_dims", dims(&rep.found)).result("notes", rep.notes.clone());
                    }
                    r.pass = false;
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::ClassifyLine { preset, line } => {
            let (hom, _) = induction_algebras(preset)?;
            let p = algebra(hom)?;
            let forms = parse_expr_list(line, &p.alphabet)?;
            if forms.len() != 2 {
                return Err(CliError::Usage(format!("--line needs two forms, got {}", forms.len())));
            }
            let l = Line::from_polys(&p.alphabet, &forms[0], &forms[1])?;
            r = Report::new("classify-line");
            r.input("preset", preset.clone()).input(
                "line",
                forms.iter().map(|f| p.alphabet.fmt_poly(f)).collect::<Vec<_>>(),
            );
            r.result("plucker", l.plucker().iter().map(|c| c.to_string()).collect::<Vec<_>>());
            let in_t = l.in_plane(&form([0, 0, 0, 1]));
            r.pass = classify_line(preset, &l, in_t, &mut r);
        }
        Command::VerifyPaper { suite } => {
            let o = SuiteOptions {
                max_degree: n,
                oracle_degree: cli.oracle_degree,
                seed: cli.seed,
                samples: cli.samples,
                oracle_cap: oracle_cap()?,
            };
            let checks = run_suite(suite, &o)?;
            r = Report::new("verify-paper");
            r.seed = Some(cli.seed);
            r.input("suite", suite.clone()).input("max_degree", n).input("oracle_degree", cli.oracle_degree);
            r.input("samples", cli.samples);
            r.pass = checks.iter().all(|c| c.pass);
            let mut lines = format!("verify-paper {suite} {}\n", if r.pass { "PASS" } else { "FAIL" });
            for c in &checks {
                lines += &format!("  [{}] {}\n", if c.pass { "pass" } else { "FAIL" }, c.name);
            }
            text = Some(lines);
            r.result("checks", checks.iter().map(|c| c.to_json()).collect::<Vec<_>>());
        }
        Command::Show { algebra } => {
            let p = load_algebra(algebra)?;
            let dsl = print_algebra(&p);
            r = Report::new("show");
            r.input("algebra", p.name.clone());
            r.result("dsl", dsl.clone());
            text = Some(dsl);
        }
    }
    Ok((r, text))
}

/// Records the family data of `l` and returns whether it lies in some family.
fn classify_line(preset: &str, l: &Line, in_t: bool, r: &mut Report) -> bool {
    r.result("in_V(t)", in_t);
    match preset {
        "slc" => {
            let tags = classify_line_family_color(l);
            let found = !tags.is_empty();
            r.result("families", tags);
            found
        }
        "sl11" => {
            let ht = Line::new(form([0, 0, 1, 0]), form([0, 0, 0, 1])).expect("independent");
            let meets = lines_meet(l, &ht);
            let on_q = line_on_quadric(l, &sl11_quadric());
            r.result("meets_V(h,t)", meets).result("on_V(ht-2ef)", on_q);
            if let Some(p) = extract_sl11_pair(l) {
                let admissible = &p[3] * &p[3] == &(&p[0] * &p[1]) * &p[2];
                r.result("alpha_beta_lambda_gamma", rats(&p)).result("gamma2_eq_alpha_beta_lambda", admissible);
            }
            meets || on_q
        }
        _ => {
            let delta2 = pencil_parameter(l);
            r.result("delta_squared", delta2.as_ref().map(rat));
            in_t || delta2.is_some()
        }
    }
}

/// `δ²` with the line on `V(−h² − ef + δ²t²)`, if there is one. Membership is
/// linear in `δ²`: `D(x,y) + δ²·T(x,y) = 0` for the three pairings of two spanning points.
fn pencil_parameter(l: &Line) -> Option<Q> {
    let zero = Q::from_integer(0.into());
    let det = linemod_core::geometry::sl2_pencil(&zero);
    let tt = Quadric::from_monomials("t2", &[(Q::from_integer(1.into()), 3, 3)]).ok()?;
    let [p, q] = l.points();
    let pairs = [(&p, &p), (&q, &q), (&p, &q)];
    let coeffs: Vec<(Q, Q)> = pairs.iter().map(|(x, y)| (det.bilinear(x, y), tt.bilinear(x, y))).collect();
    let d = match coeffs.iter().find(|(_, b)| *b != zero) {
        Some((a, b)) => -a / b,
        None => zero.clone(),
    };
    coeffs.iter().all(|(a, b)| a + &(&d * b) == zero).then_some(d)
}

pub fn main_with_args() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
