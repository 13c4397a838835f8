//! Command-line interface. [`run`] parses arguments and returns the exit
//! code and both output streams instead of printing, so tests can call it.
//!
//! Exit codes: 0 pass, 1 a checked property failed, 2 bad input, 3 a
//! resource guard stopped the computation.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use areapoly_core::areamap::{evaluate_area_vector, random_framed_drawing, seeded_rng, Drawing, DrawingMode};
use areapoly_core::complex::{diagonal_labels, poof, CombinatorialTriangulation, GeometricDissection};
use areapoly_core::corpus;
use areapoly_core::exact::Rational;
use areapoly_core::monsky::{boundary_word, color_drawing, equidissection_report, rainbow_certificate, MonskyError};
use areapoly_core::poly::{GroebnerConfig, Polynomial, Ring};
use areapoly_core::variety::{
    check_divisibility, check_independence_with, check_monic_all, check_monic_zt, check_proposition, compute_pt_with,
    compute_zt_with, diagonal_zt_oracle, integral_equation, pt_ring, triangle_slots, zt_ring, IntegerPolynomial,
    VarietyError,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::format::{
    parse_polynomial, read_dissection, read_drawing, read_triangulation, valuation_json, AreaVectorJson,
    CertificateJson, DrawingFile, FormatError, TriangulationFile,
};
use crate::selftest;

#[derive(Debug, Parser)]
#[command(name = "areapoly", version, about = "Area polynomials of triangulated trapezoids")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for generated drawings.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest coefficient bit length allowed during Groebner basis runs.
    #[arg(long, global = true)]
    pub guard_bits: Option<u64>,
    /// Largest number of basis elements allowed during Groebner basis runs.
    #[arg(long, global = true)]
    pub guard_basis: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TriArg {
    /// Triangulation file, or `corpus:NAME` (T0, T1, T2, center-fan, T1-refined).
    pub triangulation: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a triangulation is a disk bounded by p, q, r, s.
    Validate(TriArg),
    /// Turn a geometric dissection into a triangulation and drawing.
    Poof {
        /// Dissection file, or `corpus:NAME` (halves, quarters, eighths, unequal, t-vertex).
        dissection: String,
    },
    /// Compute the trapezoid polynomial z_T.
    Zt(TriArg),
    /// Compute the parallelogram polynomial p_T.
    Pt(TriArg),
    /// z_{T_n} from the closed product formula.
    OracleDiagonal { n: usize },
    /// Monicity, restriction exponents, divisibility and independence.
    Check {
        #[command(flatten)]
        tri: TriArg,
        /// Use this z_T instead of computing it.
        #[arg(long)]
        zt: Option<PathBuf>,
        /// Use this p_T instead of computing it.
        #[arg(long)]
        pt: Option<PathBuf>,
        /// Run every check (the default when none is selected).
        #[arg(long)]
        all: bool,
        /// Leading coefficients in U (z_T) and in each slot (p_T).
        #[arg(long)]
        monic: bool,
        /// Exponents of z_T with all but one slot set to zero.
        #[arg(long)]
        proposition: bool,
        /// p_T divides z_T(-S, 2B); prints the quotient.
        #[arg(long)]
        divisibility: bool,
        /// No polynomial relation among the triangle areas alone.
        #[arg(long)]
        independence: bool,
    },
    /// Doubled areas of a drawing (random when no drawing is given).
    Areas {
        #[command(flatten)]
        tri: TriArg,
        drawing: Option<PathBuf>,
        /// Draw random parallelograms (t = 1) instead of trapezoids.
        #[arg(long)]
        parallelogram: bool,
    },
    /// Evaluate a polynomial in U, B1, ..., Bn on area vectors.
    VerifyVanish {
        #[command(flatten)]
        tri: TriArg,
        polynomial: PathBuf,
        drawing: Option<PathBuf>,
        /// Number of random drawings when no drawing is given.
        #[arg(long, default_value_t = 1)]
        samples: usize,
        /// Draw random parallelograms (t = 1) instead of trapezoids.
        #[arg(long)]
        parallelogram: bool,
    },
    /// The monic equation in u with coefficients at the true areas.
    IntegralEquation {
        #[command(flatten)]
        tri: TriArg,
        drawing: Option<PathBuf>,
        #[arg(long)]
        zt: Option<PathBuf>,
    },
    /// 2-adic colors of the vertices of a drawing.
    Color {
        #[command(flatten)]
        tri: TriArg,
        drawing: Option<PathBuf>,
    },
    /// Rainbow-triangle certificate for a drawing.
    Rainbow {
        #[command(flatten)]
        tri: TriArg,
        drawing: Option<PathBuf>,
    },
    /// Valuation and parity report for a parallelogram dissection.
    EquidissectReport { dissection: String },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Violation(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Violation(_) => 1,
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Violation(m) | Failure::Guard(m) => m,
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<VarietyError> for Failure {
    fn from(e: VarietyError) -> Self {
        match e {
            e if e.is_guard() => Failure::Guard(e.to_string()),
            VarietyError::Invalid(_) | VarietyError::Area(_) => Failure::Input(e.to_string()),
            e => Failure::Violation(e.to_string()),
        }
    }
}

impl From<MonskyError> for Failure {
    fn from(e: MonskyError) -> Self {
        match e {
            MonskyError::BadBoundary(_) | MonskyError::InternalContradiction(_) => Failure::Violation(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

/// What a command produced: its text and JSON renderings and whether every
/// checked property held.
struct Report {
    text: String,
    json: Value,
    pass: bool,
}

struct Ctx {
    json: bool,
    seed: u64,
    config: GroebnerConfig,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Output {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let defaults = GroebnerConfig::default();
    let ctx = Ctx {
        json: cli.json,
        seed: cli.seed,
        config: GroebnerConfig {
            max_basis: cli.guard_basis.unwrap_or(defaults.max_basis),
            max_coeff_bits: cli.guard_bits.unwrap_or(defaults.max_coeff_bits),
        },
    };
    match dispatch(&ctx, cli.command) {
        Ok(report) => {
            let mut stdout = if ctx.json {
                serde_json::to_string_pretty(&report.json).expect("serializable")
            } else {
                report.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Output {
                code: if report.pass { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => {
            let stdout = if ctx.json {
                let kind = match f {
                    Failure::Input(_) => "input",
                    Failure::Violation(_) => "violation",
                    Failure::Guard(_) => "guard",
                };
                let v = json!({"error": f.message(), "kind": kind});
                format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
            } else {
                String::new()
            };
            Output {
                code: f.code(),
                stdout,
                stderr: format!("error: {}\n", f.message()),
            }
        }
    }
}

fn dispatch(ctx: &Ctx, command: Command) -> Result<Report, Failure> {
    match command {
        Command::Validate(tri) => validate_cmd(&tri),
        Command::Poof { dissection } => poof_cmd(&dissection),
        Command::Zt(tri) => {
            let t = load_triangulation(&tri.triangulation)?;
            Ok(polynomial_report(&t, &compute_zt_with(&t, &ctx.config)?))
        }
        Command::Pt(tri) => {
            let t = load_triangulation(&tri.triangulation)?;
            Ok(polynomial_report(&t, &compute_pt_with(&t, &ctx.config)?))
        }
        Command::OracleDiagonal { n } => {
            let z = diagonal_zt_oracle(n);
            let labels: BTreeMap<String, String> = triangle_slots(&z)
                .into_iter()
                .zip(diagonal_labels(n).into_iter().map(structural))
                .collect();
            Ok(Report {
                text: z.to_string(),
                json: json!({"n": n, "polynomial": z.to_string(), "degree": z.degree(), "slots": labels}),
                pass: true,
            })
        }
        Command::Check {
            tri,
            zt,
            pt,
            all,
            monic,
            proposition,
            divisibility,
            independence,
        } => {
            let none = !(monic || proposition || divisibility || independence);
            let sel = Selection {
                monic: all || none || monic,
                proposition: all || none || proposition,
                divisibility: all || none || divisibility,
                independence: all || none || independence,
            };
            check_cmd(ctx, &tri, zt.as_deref(), pt.as_deref(), sel)
        }
        Command::Areas {
            tri,
            drawing,
            parallelogram,
        } => {
            let t = load_triangulation(&tri.triangulation)?;
            let d = drawing_or_random(ctx, &t, drawing.as_deref(), mode(parallelogram))?;
            let av = evaluate_area_vector(&t, &d).map_err(|e| Failure::Input(e.to_string()))?;
            let mut text = format!("U = {}\n", av.u);
            for (k, b) in av.b.iter().enumerate() {
                text.push_str(&format!("B{} = {}\n", k + 1, b));
            }
            let mut j = serde_json::to_value(AreaVectorJson::from_areas(&av)).expect("serializable");
            if drawing.is_none() {
                j["drawing"] = serde_json::to_value(DrawingFile::from_drawing(&t, &d)).expect("serializable");
            }
            Ok(Report {
                text,
                json: j,
                pass: true,
            })
        }
        Command::VerifyVanish {
            tri,
            polynomial,
            drawing,
            samples,
            parallelogram,
        } => {
            let t = load_triangulation(&tri.triangulation)?;
            let p = read_polynomial(&polynomial, &zt_ring(&t))?;
            let drawings = match drawing {
                Some(path) => vec![read_drawing(&read_file(&path)?, &t)?],
                None => {
                    let mut rng = seeded_rng(ctx.seed);
                    (0..samples)
                        .map(|_| random_framed_drawing(&t, mode(parallelogram), &mut rng))
                        .collect()
                }
            };
            let mut values = Vec::with_capacity(drawings.len());
            for d in &drawings {
                let av = evaluate_area_vector(&t, d).map_err(|e| Failure::Input(e.to_string()))?;
                values.push(p.evaluate(&av.as_point()).expect("ring matches area vector"));
            }
            let pass = values.iter().all(Rational::is_zero);
            let nonzero = values.iter().filter(|v| !v.is_zero()).count();
            Ok(Report {
                text: format!(
                    "{}: {} of {} area vectors give a nonzero value",
                    if pass { "vanishes" } else { "does not vanish" },
                    nonzero,
                    values.len()
                ),
                json: json!({"values": values.iter().map(ToString::to_string).collect::<Vec<_>>(), "pass": pass}),
                pass,
            })
        }
        Command::IntegralEquation { tri, drawing, zt } => {
            let t = load_triangulation(&tri.triangulation)?;
            let z = match zt {
                Some(path) => integer_polynomial(&read_polynomial(&path, &zt_ring(&t))?)?,
                None => compute_zt_with(&t, &ctx.config)?,
            };
            let d = drawing_or_random(ctx, &t, drawing.as_deref(), DrawingMode::Trapezoid)?;
            let av = evaluate_area_vector(&t, &d).map_err(|e| Failure::Input(e.to_string()))?;
            let eq = integral_equation(&z, &av)?;
            let lead = eq
                .leading_term(&areapoly_core::MonomialOrder::Lex)
                .map(|(_, c)| c.clone());
            let monic = lead.as_ref().is_some_and(Rational::is_one);
            let root = &av.u * &Rational::new(1, 2).expect("nonzero");
            let is_root = eq
                .evaluate(std::slice::from_ref(&root))
                .expect("one variable")
                .is_zero();
            let pass = monic && is_root;
            Ok(Report {
                text: format!("{eq} = 0\nu = {root} is a root: {is_root}"),
                json: json!({
                    "equation": eq.to_string(),
                    "degree": eq.degree_in(0),
                    "monic": monic,
                    "u": root.to_string(),
                    "u_is_root": is_root,
                }),
                pass,
            })
        }
        Command::Color { tri, drawing } => {
            let t = load_triangulation(&tri.triangulation)?;
            let d = drawing_or_random(ctx, &t, drawing.as_deref(), DrawingMode::Trapezoid)?;
            let colors = color_drawing(&t, &d)?;
            let word = boundary_word(&t, &colors);
            let pass = word == "CAAB" || word == "CABB";
            let map: BTreeMap<String, String> = colors
                .iter()
                .enumerate()
                .map(|(v, c)| (t.vertex_name(v).to_string(), c.to_string()))
                .collect();
            let text: String = (0..t.vertex_count())
                .map(|v| format!("{} {}\n", t.vertex_name(v), colors[v]))
                .collect();
            Ok(Report {
                text: format!("{text}boundary {word}"),
                json: json!({"colors": map, "boundary": word}),
                pass,
            })
        }
        Command::Rainbow { tri, drawing } => {
            let t = load_triangulation(&tri.triangulation)?;
            let d = drawing_or_random(ctx, &t, drawing.as_deref(), DrawingMode::Trapezoid)?;
            let cert = rainbow_certificate(&t, &d)?;
            let cj = CertificateJson::from_certificate(&t, &cert);
            let text = format!(
                "rainbow triangle {} ({}, {}, {}); boundary {}; nu(W_j) = {} <= nu(U) = {}: {}",
                cert.triangle + 1,
                cj.rainbow[0],
                cj.rainbow[1],
                cj.rainbow[2],
                cert.boundary,
                cj.nu_wj,
                cj.nu_u,
                cj.verdict
            );
            Ok(Report {
                text,
                json: serde_json::to_value(&cj).expect("serializable"),
                pass: cert.holds,
            })
        }
        Command::EquidissectReport { dissection } => {
            let d = load_dissection(&dissection)?;
            let rep = equidissection_report(&d)?;
            let t = &rep.triangulation;
            let cj = CertificateJson::from_certificate(t, &rep.certificate);
            let mut text = format!(
                "{} triangles ({} zero-area added); rainbow ({}, {}, {}) has area {} with nu {} <= nu(sigma/2) = {}",
                rep.triangles,
                rep.inserted,
                cj.rainbow[0],
                cj.rainbow[1],
                cj.rainbow[2],
                rep.area,
                valuation_json(rep.nu_area),
                valuation_json(rep.bound),
            );
            let equal = rep.equal_areas.as_ref().map(|e| {
                text.push_str(&format!(
                    "\nequal areas sigma/{}: nu = {} <= {}, so n is {}",
                    e.n,
                    valuation_json(e.nu_area),
                    valuation_json(rep.bound),
                    if e.even { "even" } else { "odd (contradiction)" }
                ));
                json!({"n": e.n, "nu_area": valuation_json(e.nu_area), "even": e.even})
            });
            text.push_str(if rep.consistent {
                "\nconsistent"
            } else {
                "\nINCONSISTENT"
            });
            Ok(Report {
                text,
                json: json!({
                    "triangles": rep.triangles,
                    "inserted": rep.inserted,
                    "sigma": rep.sigma.to_string(),
                    "rainbow": cj.rainbow,
                    "rainbow_area": rep.area.to_string(),
                    "nu_area": valuation_json(rep.nu_area),
                    "bound": valuation_json(rep.bound),
                    "equal_areas": equal,
                    "consistent": rep.consistent,
                    "certificate": cj,
                }),
                pass: rep.consistent,
            })
        }
        Command::Selftest => {
            let outcomes = selftest::run_all(ctx.seed);
            let pass = outcomes.iter().all(|o| o.passed);
            let text = outcomes.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            let j: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "criterion": o.id,
                        "name": o.name,
                        "pass": o.passed,
                        "detail": o.detail,
                        "seconds": o.elapsed.as_secs_f64(),
                    })
                })
                .collect();
            Ok(Report {
                text,
                json: Value::Array(j),
                pass,
            })
        }
    }
}

/// `"A3"` -> `"A_3"`.
fn structural(label: String) -> String {
    format!("{}_{}", &label[..1], &label[1..])
}

fn mode(parallelogram: bool) -> DrawingMode {
    if parallelogram {
        DrawingMode::Parallelogram
    } else {
        DrawingMode::Trapezoid
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_triangulation(arg: &str) -> Result<CombinatorialTriangulation, Failure> {
    match arg.strip_prefix("corpus:") {
        Some(name) => {
            corpus::triangulation(name).ok_or_else(|| Failure::Input(format!("no corpus triangulation {name:?}")))
        }
        None => Ok(read_triangulation(&read_file(Path::new(arg))?)?),
    }
}

fn load_dissection(arg: &str) -> Result<GeometricDissection, Failure> {
    match arg.strip_prefix("corpus:") {
        Some(name) => {
            corpus::square_dissection(name).ok_or_else(|| Failure::Input(format!("no corpus dissection {name:?}")))
        }
        None => Ok(read_dissection(&read_file(Path::new(arg))?)?),
    }
}

fn read_polynomial(path: &Path, ring: &Ring) -> Result<Polynomial, Failure> {
    let text = read_file(path)?;
    parse_polynomial(text.trim(), ring).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A user-supplied polynomial that is not homogeneous (or is zero) fails the
/// checks rather than the input stage.
fn integer_polynomial(p: &Polynomial) -> Result<IntegerPolynomial, Failure> {
    IntegerPolynomial::from_polynomial(p).map_err(|e| Failure::Violation(e.to_string()))
}

fn drawing_or_random(
    ctx: &Ctx,
    t: &CombinatorialTriangulation,
    path: Option<&Path>,
    mode: DrawingMode,
) -> Result<Drawing, Failure> {
    match path {
        Some(p) => Ok(read_drawing(&read_file(p)?, t)?),
        None => Ok(random_framed_drawing(t, mode, &mut seeded_rng(ctx.seed))),
    }
}

fn validate_cmd(tri: &TriArg) -> Result<Report, Failure> {
    let t = load_triangulation(&tri.triangulation)?;
    let report = t.validate();
    let violations: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
    let text = if report.is_valid() {
        format!("valid: {} vertices, {} triangles", t.vertex_count(), t.triangle_count())
    } else {
        violations.join("\n")
    };
    Ok(Report {
        text,
        json: json!({
            "valid": report.is_valid(),
            "vertices": t.vertex_count(),
            "triangles": t.triangle_count(),
            "violations": violations,
        }),
        pass: report.is_valid(),
    })
}

fn poof_cmd(arg: &str) -> Result<Report, Failure> {
    let d = load_dissection(arg)?;
    let out = poof(&d).map_err(|e| Failure::Input(e.to_string()))?;
    let t = &out.triangulation;
    let j = json!({
        "triangulation": TriangulationFile::from_triangulation(t),
        "drawing": DrawingFile::from_drawing(t, &out.drawing),
        "original": out.original,
        "inserted": out.inserted(),
    });
    Ok(Report {
        text: serde_json::to_string_pretty(&j).expect("serializable"),
        json: j,
        pass: true,
    })
}

fn polynomial_report(t: &CombinatorialTriangulation, p: &IntegerPolynomial) -> Report {
    let slots: BTreeMap<String, [String; 3]> = triangle_slots(p)
        .into_iter()
        .zip(t.triangles())
        .map(|(s, tri)| (s, tri.map(|v| t.vertex_name(v).to_string())))
        .collect();
    Report {
        text: p.to_string(),
        json: json!({
            "polynomial": p.to_string(),
            "degree": p.degree(),
            "variables": p.ring().names(),
            "slots": slots,
        }),
        pass: true,
    }
}

#[derive(Debug, Clone, Copy)]
struct Selection {
    monic: bool,
    proposition: bool,
    divisibility: bool,
    independence: bool,
}

fn check_cmd(
    ctx: &Ctx,
    tri: &TriArg,
    zt_path: Option<&Path>,
    pt_path: Option<&Path>,
    sel: Selection,
) -> Result<Report, Failure> {
    let t = load_triangulation(&tri.triangulation)?;
    let need_z = sel.monic || sel.proposition || sel.divisibility;
    let need_p = sel.monic || sel.divisibility;
    let z = match (need_z, zt_path) {
        (false, _) => None,
        (true, Some(path)) => Some(integer_polynomial(&read_polynomial(path, &zt_ring(&t))?)?),
        (true, None) => Some(compute_zt_with(&t, &ctx.config)?),
    };
    let p = match (need_p, pt_path) {
        (false, _) => None,
        (true, Some(path)) => Some(integer_polynomial(&read_polynomial(path, &pt_ring(&t))?)?),
        (true, None) => Some(compute_pt_with(&t, &ctx.config)?),
    };

    let mut pass = true;
    let mut lines = Vec::new();
    let mut j = json!({});
    if let Some(z) = &z {
        j["zt"] = json!(z.to_string());
        j["degree"] = json!(z.degree());
    }
    if let Some(p) = &p {
        j["pt"] = json!(p.to_string());
    }
    if sel.monic {
        let z = z.as_ref().expect("computed");
        let rep = check_monic_zt(z);
        pass &= rep.passes;
        lines.push(format!(
            "monic in U: {} (coefficient of U^{} is {})",
            verdict(rep.passes),
            rep.degree,
            rep.coefficient
        ));
        j["monic_in_U"] = json!({"coefficient": rep.coefficient.to_string(), "pass": rep.passes});
        let all = check_monic_all(p.as_ref().expect("computed"));
        pass &= all.passes;
        let leading: BTreeMap<&str, String> = all.leading.iter().map(|(v, c)| (v.as_str(), c.to_string())).collect();
        let shown: Vec<String> = all
            .leading
            .iter()
            .map(|(v, c)| format!("{v}^{}: {c}", all.degree))
            .collect();
        lines.push(format!(
            "p_T monic in every variable: {} ({})",
            verdict(all.passes),
            shown.join(", ")
        ));
        j["per_variable_leading"] = json!(leading);
        j["per_variable_pass"] = json!(all.passes);
    }
    if sel.proposition {
        let z = z.as_ref().expect("computed");
        let mut exps = serde_json::Map::new();
        for (k, slot) in triangle_slots(z).into_iter().enumerate() {
            match check_proposition(z, k) {
                Ok((e, f)) => {
                    lines.push(format!("restriction to {slot}: PASS (e, f) = ({e}, {f})"));
                    exps.insert(slot, json!([e, f]));
                }
                Err(err) => {
                    pass = false;
                    lines.push(format!("restriction to {slot}: FAIL {err}"));
                    exps.insert(slot, json!({"error": err.to_string()}));
                }
            }
        }
        j["proposition_exponents"] = Value::Object(exps);
    }
    if sel.divisibility {
        match check_divisibility(z.as_ref().expect("computed"), p.as_ref().expect("computed")) {
            Ok(q) => {
                lines.push(format!("p_T divides z_T(-S, 2B): PASS (quotient {q})"));
                j["divisibility_quotient"] = json!(q.to_string());
            }
            Err(VarietyError::NotDivisible) => {
                pass = false;
                lines.push("p_T divides z_T(-S, 2B): FAIL".into());
                j["divisibility_quotient"] = Value::Null;
            }
            Err(e) => return Err(e.into()),
        }
    }
    if sel.independence {
        let ok = check_independence_with(&t, &ctx.config)?;
        pass &= ok;
        lines.push(format!("areas algebraically independent: {}", verdict(ok)));
        j["independent"] = json!(ok);
    }
    j["pass"] = json!(pass);
    Ok(Report {
        text: lines.join("\n"),
        json: j,
        pass,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Output {
        run(std::iter::once("areapoly").chain(args.iter().copied()))
    }

    #[test]
    fn zt_of_corpus_t1() {
        let out = run_args(&["zt", "corpus:T1"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.trim(), selftest::PRINTED_ZT1);
    }

    #[test]
    fn unknown_command_is_input_error() {
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(run_args(&["zt", "corpus:nope"]).code, 2);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn guard_exit_code() {
        let out = run_args(&["zt", "corpus:T2", "--guard-basis", "2"]);
        assert_eq!(out.code, 3, "{}", out.stderr);
    }

    #[test]
    fn structural_labels() {
        assert_eq!(structural("A12".into()), "A_12");
    }
}
