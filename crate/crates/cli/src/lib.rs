//! Command-line front end: expression parsing, one subcommand per engine
//! operation, and the verification suites.

pub mod expr;
pub mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use cobord_core::generators::{
    e_generator, su_generator, su_low_generators, tilde_ideal_generators, w_generator, y2, z_class,
    z_generator, GeneratorKind, GeneratorRecord,
};
use cobord_core::ideal::{abel_ideal, graded_report, ideal_member, ideals_equal, regularity_check};
use cobord_core::partition::free_ring_dims;
use cobord_core::rational::{parse_rational, to_fraction_string, to_short_string};
use cobord_core::specialize::{
    abel_eliminate, abel_fgl, buchstaber_eliminate, buchstaber_fgl, buchstaber_ideal,
    has_abel_shape, hoehn_solve, krichever_form_check, krichever_params_of, phi_w,
};
use cobord_core::{
    CobordismClass, Context, Error, FormalGroupLaw, GradedPoly, IdealSpec, Partition, DEFAULT_CAP,
};
use serde_json::{json, Value};

use crate::expr::{parse_class, parse_cobordism, ParseError, Ring};
use crate::verify::{render_text, run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "cobord",
    version,
    about = "Exact formal group law and Chern number computations"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Truncation degree.
    #[arg(long, global = true, env = "FGL_MAX_DEGREE", default_value_t = DEFAULT_CAP)]
    pub max_degree: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    E,
    Z,
    X,
    Y,
    SuLow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Law {
    Universal,
    Abel,
    Buchstaber,
    Hoehn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// `(α_ij : i, j >= 2)`.
    Abel,
    /// The coefficients `A_ij`, `i, j >= 3`.
    Buchstaber,
    /// `(z_3, ..., z_D)`.
    Z,
    /// `(y_2, z_3, ..., z_D)`.
    Y2Z,
    /// `(y_2, x_3, ..., x_D)`.
    Y2X,
    /// `(x_1, x_3, ..., x_D)`.
    X,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient `α_ij` of the universal formal group law.
    Alpha { i: usize, j: usize },
    /// Chern numbers of a class.
    Chern {
        #[arg(long)]
        class: String,
        /// Partition, e.g. `1,1` for c1c1; all numbers when omitted.
        #[arg(long)]
        omega: Option<String>,
    },
    /// The s-number of a class.
    Snumber {
        #[arg(long)]
        class: String,
    },
    /// The boundary `∂` of a class.
    Boundary {
        #[arg(long)]
        class: String,
    },
    /// The product `a * b = ab + 2[V]∂a∂b` of two W classes.
    Star { a: String, b: String },
    /// Generator constructions with certificates.
    Generators {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// A single degree; every available degree when omitted.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// The Abel specialization.
    Abel,
    /// The Buchstaber specialization.
    Buchstaber,
    /// The Höhn genus for four parameters.
    #[command(allow_negative_numbers = true)]
    Hoehn {
        /// Four rationals; omit with `--symbolic`.
        params: Vec<String>,
        /// Solve over the graded parameter ring `Q[p1, p2, p3, p4]`.
        #[arg(long)]
        symbolic: bool,
    },
    /// The Krichever form check and parameter recovery for a law.
    KricheverCheck {
        #[arg(long, value_enum, default_value_t = Law::Universal)]
        law: Law,
        /// Four comma-separated rationals for `--law hoehn`.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// The image of a W class under `φ_W`.
    Phiw {
        #[arg(long)]
        class: String,
    },
    /// Graded dimensions, equality, membership and regularity for ideals.
    Ideal {
        /// Generators separated by `;`.
        #[arg(long, conflicts_with = "preset")]
        gens: Option<String>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        /// A second ideal to compare against.
        #[arg(long, conflicts_with = "equal_preset")]
        equal: Option<String>,
        #[arg(long, value_enum)]
        equal_preset: Option<Preset>,
        /// Check that the generators form a regular sequence.
        #[arg(long)]
        regular: bool,
        /// Test membership of a homogeneous class.
        #[arg(long)]
        member: Option<String>,
    },
    /// Reproduction suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Alpha { .. } => "alpha",
            Command::Chern { .. } => "chern",
            Command::Snumber { .. } => "snumber",
            Command::Boundary { .. } => "boundary",
            Command::Star { .. } => "star",
            Command::Generators { .. } => "generators",
            Command::Abel => "abel",
            Command::Buchstaber => "buchstaber",
            Command::Hoehn { .. } => "hoehn",
            Command::KricheverCheck { .. } => "krichever-check",
            Command::Phiw { .. } => "phiw",
            Command::Ideal { .. } => "ideal",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Engine(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Engine(Error::Config(_)) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// A command's result in both renderings.
struct Report {
    json: Value,
    text: String,
    failed: bool,
}

impl Report {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Report {
            json,
            text: text.into(),
            failed: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = Context::new(cli.max_degree)
        .map_err(CliError::from)
        .and_then(|ctx| dispatch(&ctx, &cli.command));
    match result {
        Ok(r) => {
            let stdout = match cli.format {
                Format::Json => {
                    let env = json!({
                        "schema": "1",
                        "command": cli.command.name(),
                        "max_degree": cli.max_degree,
                        "result": r.json,
                    });
                    let mut s = serde_json::to_string_pretty(&env).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = r.text;
                    if !s.ends_with('\n') {
                        s.push('\n');
                    }
                    s
                }
            };
            Outcome {
                code: if r.failed { EXIT_VERIFY } else { EXIT_OK },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

type GeneratorFn = fn(&Context, usize) -> cobord_core::Result<GeneratorRecord>;

fn dispatch(ctx: &Context, cmd: &Command) -> CliResult<Report> {
    match cmd {
        Command::Alpha { i, j } => alpha(ctx, *i, *j),
        Command::Chern { class, omega } => chern(ctx, class, omega.as_deref()),
        Command::Snumber { class } => snumber(ctx, class),
        Command::Boundary { class } => boundary(ctx, class),
        Command::Star { a, b } => star(ctx, a, b),
        Command::Generators { kind, degree } => generators(ctx, *kind, *degree),
        Command::Abel => abel(ctx),
        Command::Buchstaber => buchstaber(ctx),
        Command::Hoehn { params, symbolic } => hoehn(ctx, params, *symbolic),
        Command::KricheverCheck { law, params } => krichever(ctx, *law, params.as_deref()),
        Command::Phiw { class } => phiw(ctx, class),
        Command::Ideal {
            gens,
            preset,
            equal,
            equal_preset,
            regular,
            member,
        } => ideal(
            ctx,
            IdealSource::from(gens.as_deref(), *preset, "gens")?,
            IdealSource::maybe(equal.as_deref(), *equal_preset),
            *regular,
            member.as_deref(),
        ),
        Command::Verify { suite } => {
            let r = run_suite(ctx, *suite);
            Ok(Report {
                json: serde_json::to_value(&r).expect("serializable"),
                text: render_text(&r),
                failed: !r.pass,
            })
        }
    }
}

fn homogeneous(ctx: &Context, text: &str) -> CliResult<CobordismClass> {
    let poly = parse_cobordism(text, ctx.cap())?;
    Ok(CobordismClass::new(poly)?)
}

fn alpha(ctx: &Context, i: usize, j: usize) -> CliResult<Report> {
    if i == 0 || j == 0 {
        return Err(Error::Range("indices start at 1".into()).into());
    }
    let a = ctx.fgl()?.coeff(i, j)?;
    Ok(Report::ok(
        json!({ "i": i, "j": j, "weight": i + j - 1, "alpha": a.to_string() }),
        a.to_string(),
    ))
}

fn parse_partition(text: &str, weight: usize) -> CliResult<Partition> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().ok().filter(|&p| p > 0))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| CliError::Usage(format!("invalid partition '{text}'")))?;
    let p = Partition::new(parts)
        .ok_or_else(|| CliError::Usage(format!("invalid partition '{text}'")))?;
    if p.degree() != weight {
        return Err(Error::Domain(format!(
            "partition {} has degree {}, class has degree {weight}",
            p.key(),
            p.degree()
        ))
        .into());
    }
    Ok(p)
}

fn chern(ctx: &Context, class: &str, omega: Option<&str>) -> CliResult<Report> {
    let z = homogeneous(ctx, class)?;
    let e = ctx.chern()?;
    match omega {
        Some(o) => {
            let omega = parse_partition(o, z.weight())?;
            let n = e.chern_number(&z, &omega)?;
            Ok(Report::ok(
                json!({ "class": z.poly().to_string(), "omega": omega.key(), "value": to_fraction_string(&n) }),
                to_short_string(&n),
            ))
        }
        None => {
            let v = e.chern_vector(&z)?;
            let text: Vec<String> = v
                .entries
                .iter()
                .map(|(o, n)| format!("{}\t{}", o.chern_label(), to_short_string(n)))
                .collect();
            Ok(Report::ok(
                json!({ "class": z.poly().to_string(), "numbers": v }),
                text.join("\n"),
            ))
        }
    }
}

fn snumber(ctx: &Context, class: &str) -> CliResult<Report> {
    let z = homogeneous(ctx, class)?;
    let s = ctx.chern()?.s_number(&z)?;
    Ok(Report::ok(
        json!({ "class": z.poly().to_string(), "degree": z.weight(), "s": to_fraction_string(&s) }),
        to_short_string(&s),
    ))
}

fn boundary(ctx: &Context, class: &str) -> CliResult<Report> {
    let z = homogeneous(ctx, class)?;
    let d = ctx.chern()?.boundary(&z)?;
    Ok(Report::ok(
        json!({ "class": z.poly().to_string(), "boundary": d.poly().to_string() }),
        d.poly().to_string(),
    ))
}

fn star(ctx: &Context, a: &str, b: &str) -> CliResult<Report> {
    let a = homogeneous(ctx, a)?;
    let b = homogeneous(ctx, b)?;
    let p = ctx.star(&a, &b)?;
    Ok(Report::ok(
        json!({ "a": a.poly().to_string(), "b": b.poly().to_string(), "product": p.poly().to_string() }),
        p.poly().to_string(),
    ))
}

fn record_line(r: &GeneratorRecord) -> String {
    let prefix = match r.kind {
        GeneratorKind::E => "e",
        GeneratorKind::Z => "z",
        GeneratorKind::X => "x",
        GeneratorKind::Y => "y",
    };
    let name = format!("{prefix}{}", r.degree);
    format!(
        "{name}\ts = {}\tW = {}\tSU = {}\tNovikov = {}\t{}",
        to_short_string(&r.s_value),
        r.certificates.w_member,
        r.certificates.su_member,
        r.certificates.novikov_odd_part,
        r.class.poly()
    )
}

fn generators(ctx: &Context, kind: GenKind, degree: Option<usize>) -> CliResult<Report> {
    let cap = ctx.cap();
    let records: Vec<GeneratorRecord> = match kind {
        GenKind::SuLow => {
            let all = su_low_generators(ctx)?;
            match degree {
                Some(d) => all.into_iter().filter(|r| r.degree == d).collect(),
                None => all.to_vec(),
            }
        }
        GenKind::X => match degree {
            Some(k) => vec![w_generator(ctx, k)?],
            None => ctx.w_generators()?.values().cloned().collect(),
        },
        _ => {
            let (build, low): (GeneratorFn, usize) = match kind {
                GenKind::E => (e_generator, 1),
                GenKind::Z => (z_generator, 3),
                _ => (su_generator, 2),
            };
            let degrees: Vec<usize> = match degree {
                Some(d) => vec![d],
                None => (low..=cap).collect(),
            };
            degrees
                .into_iter()
                .map(|d| build(ctx, d))
                .collect::<cobord_core::Result<_>>()?
        }
    };
    if records.is_empty() {
        return Err(Error::Range(format!("no generator of that kind in degree {degree:?}")).into());
    }
    let text: Vec<String> = records.iter().map(record_line).collect();
    Ok(Report::ok(
        json!({ "generators": records }),
        text.join("\n"),
    ))
}

fn form_json(f: &FormalGroupLaw) -> CliResult<Value> {
    let form = krichever_form_check(f);
    let params = krichever_params_of(f)?;
    Ok(json!({ "form": form, "params": params }))
}

fn form_text(v: &Value) -> String {
    let form = &v["form"];
    let params = &v["params"];
    let mut s = format!(
        "Krichever form: {}",
        if form["pass"] == true { "pass" } else { "fail" }
    );
    if let Some(f) = form["failure"].as_object() {
        s.push_str(&format!(
            " at ({}, {}), weight {}, residual {}",
            f["i"],
            f["j"],
            f["weight"],
            f["residual"].as_str().unwrap_or_default()
        ));
    }
    s.push('\n');
    match params["params"].as_array() {
        Some(ps) => {
            let ps: Vec<&str> = ps.iter().filter_map(Value::as_str).collect();
            s.push_str(&format!("Krichever parameters: {}", ps.join(", ")));
        }
        None => s.push_str(&format!(
            "Krichever parameters: none, first failing order {}",
            params["first_failing_order"]
        )),
    }
    s
}

fn images_text(v: &Value) -> String {
    v.as_object()
        .map(|m| {
            m.iter()
                .map(|(k, p)| format!("{k} -> {}", p.as_str().unwrap_or_default()))
                .collect::<Vec<_>>()
                .join("\n")
        })
        .unwrap_or_default()
}

fn abel(ctx: &Context) -> CliResult<Report> {
    let cap = ctx.cap();
    let el = abel_eliminate(ctx)?;
    let f = abel_fgl(ctx)?;
    let expected: Vec<usize> = (0..=cap).map(|n| n / 2 + 1).collect();
    let quotient = graded_report(&abel_ideal(ctx.fgl()?)?, Some(&expected))?;
    let form = form_json(&f)?;
    let images = serde_json::to_value(&el.substitution).expect("serializable");
    let text = format!(
        "{}\nAbel shape: {}\nquotient dims: {}\n{}",
        images_text(&images),
        has_abel_shape(&f),
        dims(&quotient),
        form_text(&form)
    );
    Ok(Report::ok(
        json!({
            "images": images,
            "pivots": pivots(&el.pivots),
            "abel_shape": has_abel_shape(&f),
            "quotient": quotient,
            "krichever": form,
        }),
        text,
    ))
}

fn pivots(p: &BTreeMap<usize, (usize, usize)>) -> Value {
    p.iter()
        .map(|(n, (i, j))| (format!("P{n}"), json!([i, j])))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn dims(r: &cobord_core::GradedReport) -> String {
    r.rows
        .iter()
        .map(|x| x.quotient_dim.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn buchstaber(ctx: &Context) -> CliResult<Report> {
    let cap = ctx.cap();
    let data = buchstaber_eliminate(ctx)?;
    let f = buchstaber_fgl(ctx)?;
    let expected = free_ring_dims(&[1, 2, 3, 4], cap);
    let quotient = graded_report(&buchstaber_ideal(ctx)?, Some(&expected))?;
    let form = form_json(&f)?;
    let images = serde_json::to_value(&data.elimination.substitution).expect("serializable");
    let text = format!(
        "{}\nantisymmetric: {}\nquotient dims: {}\n{}",
        images_text(&images),
        data.is_antisymmetric(),
        dims(&quotient),
        form_text(&form)
    );
    Ok(Report::ok(
        json!({
            "images": images,
            "pivots": pivots(&data.elimination.pivots),
            "antisymmetric": data.is_antisymmetric(),
            "quotient": quotient,
            "krichever": form,
        }),
        text,
    ))
}

fn numeric_params(ctx: &Context, items: &[String]) -> CliResult<[GradedPoly; 4]> {
    if items.len() != 4 {
        return Err(CliError::Usage(format!(
            "expected four parameters, got {}",
            items.len()
        )));
    }
    let mut out = Vec::with_capacity(4);
    for s in items {
        let r =
            parse_rational(s).ok_or_else(|| CliError::Usage(format!("invalid rational '{s}'")))?;
        out.push(GradedPoly::constant(r, ctx.cap()));
    }
    Ok(out.try_into().expect("four parameters"))
}

fn symbolic_params(ctx: &Context) -> [GradedPoly; 4] {
    [1, 2, 3, 4].map(|k| GradedPoly::var(k, ctx.cap()))
}

fn hoehn(ctx: &Context, params: &[String], symbolic: bool) -> CliResult<Report> {
    let ps = match (symbolic, params.is_empty()) {
        (true, true) => symbolic_params(ctx),
        (false, false) => numeric_params(ctx, params)?,
        (true, false) => return Err(CliError::Usage("--symbolic takes no parameters".into())),
        (false, true) => return Err(CliError::Usage("expected four parameters".into())),
    };
    let g = hoehn_solve(ps, ctx.cap())?;
    let v = serde_json::to_value(&g).expect("serializable");
    let text = format!(
        "{}\nresidual zero: {}",
        images_text(&v["images"]),
        g.residual_zero
    );
    Ok(Report {
        json: v,
        text,
        failed: !g.residual_zero,
    })
}

fn krichever(ctx: &Context, law: Law, params: Option<&str>) -> CliResult<Report> {
    if params.is_some() != (law == Law::Hoehn) {
        return Err(CliError::Usage(
            "--params goes with --law hoehn and nothing else".into(),
        ));
    }
    let owned;
    let f: &FormalGroupLaw = match law {
        Law::Universal => ctx.fgl()?,
        Law::Abel => {
            owned = abel_fgl(ctx)?;
            &owned
        }
        Law::Buchstaber => {
            owned = buchstaber_fgl(ctx)?;
            &owned
        }
        Law::Hoehn => {
            let items: Vec<String> = params
                .unwrap_or_default()
                .split(',')
                .map(|s| s.trim().to_string())
                .collect();
            owned = hoehn_solve(numeric_params(ctx, &items)?, ctx.cap())?.fgl()?;
            &owned
        }
    };
    let v = form_json(f)?;
    let text = form_text(&v);
    Ok(Report::ok(
        json!({ "law": f.origin().to_string(), "form": v["form"], "params": v["params"] }),
        text,
    ))
}

fn phiw(ctx: &Context, class: &str) -> CliResult<Report> {
    let z = homogeneous(ctx, class)?;
    let img = phi_w(ctx, &z)?.display_with(Ring::W.symbol());
    Ok(Report::ok(
        json!({ "class": z.poly().to_string(), "image": img }),
        img,
    ))
}

enum IdealSource {
    Text(String),
    Preset(Preset),
}

impl IdealSource {
    fn from(text: Option<&str>, preset: Option<Preset>, flag: &str) -> CliResult<Self> {
        Self::maybe(text, preset)
            .ok_or_else(|| CliError::Usage(format!("one of --{flag} or --preset is required")))
    }

    fn maybe(text: Option<&str>, preset: Option<Preset>) -> Option<Self> {
        match (text, preset) {
            (Some(t), _) => Some(IdealSource::Text(t.to_string())),
            (None, Some(p)) => Some(IdealSource::Preset(p)),
            (None, None) => None,
        }
    }

    fn build(&self, ctx: &Context) -> CliResult<IdealSpec> {
        let cap = ctx.cap();
        let xs = |from: usize| -> CliResult<Vec<GradedPoly>> {
            Ok(ctx
                .w_generators()?
                .range(from..)
                .map(|(_, r)| r.class.poly().clone())
                .collect())
        };
        Ok(match self {
            IdealSource::Text(t) => {
                let gens = t
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| parse_cobordism(s, cap))
                    .collect::<Result<Vec<_>, _>>()?;
                IdealSpec::new("gens", gens, cap)?
            }
            IdealSource::Preset(Preset::Abel) => abel_ideal(ctx.fgl()?)?,
            IdealSource::Preset(Preset::Buchstaber) => buchstaber_ideal(ctx)?,
            IdealSource::Preset(Preset::Z) => IdealSpec::new(
                "z",
                (3..=cap)
                    .map(|k| Ok(z_class(ctx, k)?.into_poly()))
                    .collect::<cobord_core::Result<_>>()?,
                cap,
            )?,
            IdealSource::Preset(Preset::Y2Z) => {
                IdealSpec::new("y2,z", tilde_ideal_generators(ctx, cap)?, cap)?
            }
            IdealSource::Preset(Preset::Y2X) => {
                let mut g = vec![y2(cap)?.into_poly()];
                g.extend(xs(3)?);
                IdealSpec::new("y2,x", g, cap)?
            }
            IdealSource::Preset(Preset::X) => IdealSpec::new("x", xs(1)?, cap)?,
        })
    }
}

fn ideal(
    ctx: &Context,
    source: IdealSource,
    equal: Option<IdealSource>,
    regular: bool,
    member: Option<&str>,
) -> CliResult<Report> {
    let spec = source.build(ctx)?;
    let report = graded_report(&spec, None)?;
    let mut text = vec![format!("quotient dims: {}", dims(&report))];
    let mut out = json!({ "ideal": spec.name(), "dimensions": report });
    let mut failed = false;
    if let Some(other) = equal {
        let other = other.build(ctx)?;
        let r = ideals_equal(&spec, &other)?;
        failed |= !r.pass;
        text.push(match r.first_failing_degree {
            Some(d) => format!("equal: false, first failing degree {d}"),
            None => "equal: true".into(),
        });
        out["equality"] = serde_json::to_value(&r).expect("serializable");
    }
    if regular {
        let r = regularity_check(spec.name(), spec.generators(), ctx.cap())?;
        failed |= !r.pass;
        text.push(match r.first_failing_degree {
            Some(d) => format!("regular: false, first failing degree {d}"),
            None => "regular: true".into(),
        });
        out["regularity"] = serde_json::to_value(&r).expect("serializable");
    }
    if let Some(m) = member {
        let z = parse_class(m, ctx.cap())?;
        if z.ring != Ring::Cobordism {
            return Err(CliError::Usage(
                "membership is tested for P expressions".into(),
            ));
        }
        let is = ideal_member(&spec, &z.poly)?;
        text.push(format!("member: {is}"));
        out["member"] = json!({ "class": z.poly.to_string(), "member": is });
    }
    Ok(Report {
        json: out,
        text: text.join("\n"),
        failed,
    })
}
