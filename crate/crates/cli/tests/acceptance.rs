//! The twelve acceptance criteria at truncation degree 8, one line each.
//!
//! Values quoted from the source tables are written out here rather than
//! taken from the verification suites, so the two act as independent oracles.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use cobord_cli::expr::{parse_class, print_class};
use cobord_core::generators::{
    d2_of, d_closed, d_of, novikov_check, tilde_ideal_generators, y2, y4_su_coefficient, z_class,
};
use cobord_core::ideal::{abel_ideal, graded_report, ideals_equal, regularity_check};
use cobord_core::partition::partitions;
use cobord_core::rational::{q, qf};
use cobord_core::specialize::{
    abel_eliminate, abel_fgl, buchstaber_eliminate, buchstaber_fgl, buchstaber_ideal,
    has_abel_shape, hoehn_solve, krichever_form_check, krichever_params_of, phi_w,
};
use cobord_core::{
    ChernEngine, CobordismClass, Context, GradedPoly, IdealSpec, Monomial, Partition, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const D: usize = 8;

/// Criteria that fail on the stated y4 formula. Any other outcome exits nonzero,
/// as does any failure when `ACCEPTANCE_STRICT` is set.
const KNOWN_RED: [usize; 2] = [2, 3];

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn(&Context) -> Verdict);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// `Σ c * CP_λ` from `(c, λ)` pairs.
fn poly(terms: &[(i64, i64, &[usize])]) -> GradedPoly {
    GradedPoly::from_terms(
        terms
            .iter()
            .map(|(n, d, l)| (Monomial::from_parts(l), qf(*n, *d))),
        D,
    )
}

fn class(p: GradedPoly, n: usize) -> Result<CobordismClass, String> {
    e(CobordismClass::with_weight(p, n))
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn sample_w(eng: &ChernEngine, n: usize, rng: &mut ChaCha8Rng) -> Result<CobordismClass, String> {
    let mut acc = CobordismClass::zero(n, D);
    for b in e(eng.w_basis(n))? {
        acc = e(acc.add(&b.scale(&q(rng.gen_range(-4..=4)))))?;
    }
    Ok(acc)
}

fn c1_numbers(eng: &ChernEngine, z: &CobordismClass) -> Result<Vec<(String, Rational)>, String> {
    let v = e(eng.chern_vector(z))?;
    Ok(v.entries
        .iter()
        .filter(|(o, n)| o.count_of(1) > 0 && !n.is_zero())
        .map(|(o, n)| (o.chern_label(), n.clone()))
        .collect())
}

fn criterion_1(ctx: &Context) -> Verdict {
    let eng = e(ctx.chern())?;
    #[rustfmt::skip]
    let table: &[(&[usize], &[usize], i64)] = &[
        (&[1, 1], &[1, 1], 8), (&[2], &[1, 1], 9), (&[1, 1], &[2], 4), (&[2], &[2], 3),
        (&[3], &[3], 4), (&[3], &[2, 1], 24), (&[3], &[1, 1, 1], 64),
        (&[2, 1], &[3], 6), (&[2, 1], &[2, 1], 24), (&[2, 1], &[1, 1, 1], 54),
        (&[1, 1, 1], &[3], 8), (&[1, 1, 1], &[2, 1], 24), (&[1, 1, 1], &[1, 1, 1], 48),
        (&[1, 1, 1, 1], &[1, 1, 1, 1], 384), (&[1, 1, 1, 1], &[2, 1, 1], 192), (&[1, 1, 1, 1], &[3, 1], 64),
        (&[2, 1, 1], &[1, 1, 1, 1], 432), (&[2, 1, 1], &[2, 1, 1], 204), (&[2, 1, 1], &[3, 1], 60),
        (&[2, 2], &[1, 1, 1, 1], 486), (&[2, 2], &[2, 1, 1], 216), (&[2, 2], &[3, 1], 54),
        (&[3, 1], &[1, 1, 1, 1], 512), (&[3, 1], &[2, 1, 1], 224), (&[3, 1], &[3, 1], 56),
        (&[4], &[1, 1, 1, 1], 625), (&[4], &[2, 1, 1], 250), (&[4], &[3, 1], 50),
    ];
    for (space, omega, want) in table {
        let z = class(poly(&[(1, 1, space)]), space.iter().sum())?;
        let got = e(eng.chern_number(&z, &part(omega)))?;
        ensure(
            got == q(*want),
            format!(
                "{}[CP{space:?}] = {got}, expected {want}",
                part(omega).chern_label()
            ),
        )?;
    }
    Ok(format!("{} entries exact", table.len()))
}

fn criterion_2(ctx: &Context) -> Verdict {
    let eng = e(ctx.chern())?;
    let fgl = e(ctx.fgl())?;
    let p1 = GradedPoly::var(1, D);
    let a22 = e(fgl.coeff(2, 2))?;
    let a23 = e(fgl.coeff(2, 3))?;
    let ys = [
        (2, e(y2(D))?, 3),
        (3, class(-&a22, 3)?, 6),
        (4, class(&(&a22 * &p1).scale(&qf(3, 2)) - &a23, 4)?, 10),
    ];
    let mut problems = Vec::new();
    let mut s_values = Vec::new();
    for (n, y, want) in &ys {
        let s = e(eng.s_number(y))?;
        s_values.push(format!("s{n} = {s}"));
        if s.abs() != q(*want) {
            problems.push(format!("|s{n}(y{n})| = {}, expected {want}", s.abs()));
        }
        for (label, v) in c1_numbers(eng, y)? {
            problems.push(format!("{label}(y{n}) = {v}"));
        }
        let nv = novikov_check(*n, &s);
        if !nv.holds {
            problems.push(format!("Novikov fails for y{n}: {}", nv.reason));
        }
    }
    if !problems.is_empty() {
        let c = e(y4_su_coefficient(ctx))?;
        let expanded = class(published_y4(), 4)?;
        let c1c3 = e(eng.chern_number(&expanded, &part(&[3, 1])))?;
        problems.push(format!(
            "expanded form of y4 has c1c3 = {c1c3}; the coefficient making -alpha23+c*alpha22*CP1 SU is c = {c}"
        ));
    }
    ensure(
        problems.is_empty(),
        format!("{}; {}", s_values.join(", "), problems.join("; ")),
    )?;
    Ok(s_values.join(", "))
}

/// `a = ±b`; returns the sign.
fn up_to_sign(a: &GradedPoly, b: &GradedPoly) -> Option<i8> {
    if a == b {
        Some(1)
    } else if a == &-b {
        Some(-1)
    } else {
        None
    }
}

fn published_y4() -> GradedPoly {
    poly(&[
        (-2, 1, &[1, 1, 1, 1]),
        (7, 1, &[2, 1, 1]),
        (-3, 1, &[2, 2]),
        (-4, 1, &[3, 1]),
        (2, 1, &[4]),
    ])
}

fn criterion_3(ctx: &Context) -> Verdict {
    let fgl = e(ctx.fgl())?;
    let a11 = e(fgl.coeff(1, 1))?;
    ensure(a11 == poly(&[(-1, 1, &[1])]), format!("alpha11 = {a11}"))?;
    let a12 = e(fgl.coeff(1, 2))?;
    ensure(
        a12 == poly(&[(1, 1, &[1, 1]), (-1, 1, &[2])]),
        format!("alpha12 = {a12}"),
    )?;
    let a22 = e(fgl.coeff(2, 2))?;
    let a23 = e(fgl.coeff(2, 3))?;
    let two_y3 = (-&a22).scale(&q(2));
    let ref_2y3 = poly(&[(-3, 1, &[3]), (8, 1, &[2, 1]), (-5, 1, &[1, 1, 1])]);
    let s3 = up_to_sign(&two_y3, &ref_2y3).ok_or(format!("2y3 = {two_y3}, expected ±{ref_2y3}"))?;
    let y4 = &(&a22 * &GradedPoly::var(1, D)).scale(&qf(3, 2)) - &a23;
    let ref_y4 = published_y4();
    let s4 = up_to_sign(&y4, &ref_y4).ok_or(format!(
        "y4 = -alpha23+3/2*alpha22*CP1 = {y4}, expected ±{ref_y4}"
    ))?;
    Ok(format!("signs: 2y3 {s3:+}, y4 {s4:+}"))
}

fn criterion_4(ctx: &Context) -> Verdict {
    for m in 1..=30 {
        ensure(
            d_closed(m) == d_of(m),
            format!("d({m}): closed {} vs gcd {}", d_closed(m), d_of(m)),
        )?;
    }
    for m in 3..=30 {
        ensure(
            d2_of(m) == d_of(m) * d_of(m - 1),
            format!("d2({m}) = {}", d2_of(m)),
        )?;
    }
    let eng = e(ctx.chern())?;
    let mut vals = Vec::new();
    for k in 3..=D {
        let s = e(eng.s_number(&e(z_class(ctx, k))?))?;
        let want = q((d_of(k) * d_of(k - 1)) as i64);
        ensure(
            s.abs() == want,
            format!("|s{k}(z{k})| = {}, expected {want}", s.abs()),
        )?;
        vals.push(s.abs().to_string());
    }
    Ok(format!("|s_k(z_k)| = {}", vals.join(",")))
}

fn criterion_5(ctx: &Context) -> Verdict {
    let eng = e(ctx.chern())?;
    let p = |n: usize| partitions(n).len();
    for n in 0..=D {
        let want = p(n) - if n >= 2 { p(n - 2) } else { 0 };
        let got = e(eng.w_basis(n))?.len();
        ensure(
            got == want,
            format!("dim W_{} = {got}, expected {want}", 2 * n),
        )?;
    }
    let x1 = class(GradedPoly::var(1, D), 1)?;
    let sq = e(ctx.star(&x1, &x1))?;
    let want = poly(&[(8, 1, &[2]), (-9, 1, &[1, 1])]);
    let sign = up_to_sign(sq.poly(), &want).ok_or(format!("x1*x1 = {}", sq.poly()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let i = rng.gen_range(1..D);
        let j = rng.gen_range(1..=D - i);
        let (a, b) = (sample_w(eng, i, &mut rng)?, sample_w(eng, j, &mut rng)?);
        ensure(
            e(eng.is_w_class(&e(ctx.star(&a, &b))?))?,
            format!("star leaves W in degrees {i}, {j}"),
        )?;
    }
    for _ in 0..50 {
        let i = rng.gen_range(1..=4);
        let j = rng.gen_range(1..=5 - i);
        let k = rng.gen_range(1..=6 - i - j);
        let a = sample_w(eng, i, &mut rng)?;
        let b = sample_w(eng, j, &mut rng)?;
        let c = sample_w(eng, k, &mut rng)?;
        let l = e(ctx.star(&e(ctx.star(&a, &b))?, &c))?;
        let r = e(ctx.star(&a, &e(ctx.star(&b, &c))?))?;
        ensure(
            l == r,
            format!("associativity fails in degrees {i}, {j}, {k}"),
        )?;
    }
    Ok(format!(
        "x1*x1 sign {sign:+}; 30 closure samples, 50 associativity triples"
    ))
}

fn x_polys(ctx: &Context, from: usize) -> Result<Vec<GradedPoly>, String> {
    Ok(e(ctx.w_generators())?
        .range(from..)
        .map(|(_, r)| r.class.poly().clone())
        .collect())
}

fn criterion_6(ctx: &Context) -> Verdict {
    let z = e(IdealSpec::new(
        "z",
        (3..=D)
            .map(|k| z_class(ctx, k).map(CobordismClass::into_poly))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?,
        D,
    ))?;
    let r = e(ideals_equal(&z, &e(abel_ideal(e(ctx.fgl())?))?))?;
    ensure(
        r.pass,
        format!(
            "(z3..z8) vs I_Ab fails at degree {:?}",
            r.first_failing_degree
        ),
    )?;
    let mut xs = vec![e(y2(D))?.into_poly()];
    xs.extend(x_polys(ctx, 3)?);
    let a = e(IdealSpec::new("y2,x", xs, D))?;
    let b = e(IdealSpec::new(
        "y2,z",
        e(tilde_ideal_generators(ctx, D))?,
        D,
    ))?;
    let r = e(ideals_equal(&a, &b))?;
    ensure(
        r.pass,
        format!(
            "(y2,x) vs (y2,z) fails at degree {:?}",
            r.first_failing_degree
        ),
    )?;
    Ok("both equalities hold through degree 8".into())
}

fn criterion_7(ctx: &Context) -> Verdict {
    for from in [1, 3, 5] {
        let r = e(regularity_check("x", &x_polys(ctx, from)?, D))?;
        ensure(
            r.pass,
            format!(
                "sequence from x{from} fails at degree {:?}",
                r.first_failing_degree
            ),
        )?;
    }
    Ok("(x1,x3..x8), (x3..x8), (x5..x8) regular".into())
}

fn dims(r: &cobord_core::GradedReport) -> Vec<usize> {
    r.rows.iter().map(|x| x.quotient_dim).collect()
}

fn criterion_8(ctx: &Context) -> Verdict {
    let el = e(abel_eliminate(ctx))?;
    ensure(el.pivots.len() == D - 2, format!("pivots {:?}", el.pivots))?;
    let f = e(abel_fgl(ctx))?;
    ensure(has_abel_shape(&f), "image law lacks Abel shape")?;
    let r = e(graded_report(&e(abel_ideal(e(ctx.fgl())?))?, None))?;
    let want: Vec<usize> = (0..=D).map(|n| n / 2 + 1).collect();
    ensure(dims(&r) == want, format!("quotient dims {:?}", dims(&r)))?;
    ensure(
        krichever_form_check(&f).pass,
        "Abel law fails the form check",
    )?;
    Ok(format!("quotient dims {:?}", dims(&r)))
}

fn ring_dims(weights: &[usize]) -> Vec<usize> {
    // Count monomials directly, independent of the library's generating function.
    (0..=D)
        .map(|n| {
            partitions(n)
                .iter()
                .filter(|l| l.parts().iter().all(|p| weights.contains(p)))
                .count()
        })
        .collect()
}

fn criterion_9(ctx: &Context) -> Verdict {
    let data = e(buchstaber_eliminate(ctx))?;
    ensure(data.is_antisymmetric(), "A is not antisymmetric")?;
    let solved: Vec<usize> = data.elimination.pivots.keys().copied().collect();
    ensure(
        solved == (5..=D).collect::<Vec<_>>(),
        format!("solved degrees {solved:?}"),
    )?;
    let r = e(graded_report(&e(buchstaber_ideal(ctx))?, None))?;
    ensure(
        dims(&r) == ring_dims(&[1, 2, 3, 4]),
        format!("quotient dims {:?}", dims(&r)),
    )?;
    let f = e(buchstaber_fgl(ctx))?;
    ensure(
        krichever_form_check(&f).pass,
        "Buchstaber law fails the form check",
    )?;
    ensure(
        e(krichever_params_of(&f))?.params.is_some(),
        "no Krichever parameters",
    )?;
    let u = krichever_form_check(e(ctx.fgl())?);
    let fail = u.failure.ok_or("universal law passes the form check")?;
    ensure(
        fail.weight <= D,
        format!("universal law fails only at weight {}", fail.weight),
    )?;
    Ok(format!(
        "universal law fails at ({}, {}), weight {}",
        fail.i, fail.j, fail.weight
    ))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

fn criterion_10(ctx: &Context) -> Verdict {
    let k = |v: Rational| GradedPoly::constant(v, D);
    let todd = e(hoehn_solve([k(q(2)), k(q(1)), k(q(0)), k(q(0))], D))?;
    for n in 1..=D {
        ensure(
            todd.images.image(n) == Some(&GradedPoly::one(D)),
            format!("Todd image of P{n}"),
        )?;
    }
    // f = 1 - e^{-x}
    for n in 1..=todd.f.order() {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let want = Rational::new(BigInt::from(sign), factorial(n));
        ensure(
            todd.f.coeff(n).constant_term() == want,
            format!("Todd exponent coefficient x^{n}"),
        )?;
    }
    let zero = e(hoehn_solve([k(q(0)), k(q(0)), k(q(0)), k(q(0))], D))?;
    for n in 1..=D {
        ensure(
            zero.images.image(n).is_some_and(|p| p.is_zero()),
            format!("zero genus image of P{n}"),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..5 {
        let ps: [GradedPoly; 4] =
            std::array::from_fn(|_| k(qf(rng.gen_range(-7..=7), rng.gen_range(1..=5))));
        let g = e(hoehn_solve(ps.clone(), D))?;
        let back = e(krichever_params_of(&e(g.fgl())?))?;
        ensure(
            back.params.as_ref() == Some(&ps),
            format!("round trip fails for {ps:?}"),
        )?;
    }
    let _ = ctx;
    Ok("Todd, zero and 5 round trips exact".into())
}

fn criterion_11(ctx: &Context) -> Verdict {
    let eng = e(ctx.chern())?;
    let basis = e(ctx.star_basis())?;
    for n in 0..=D {
        ensure(
            basis.ranks[n] == e(eng.w_basis(n))?.len(),
            format!("star monomials miss W in degree {n}"),
        )?;
    }
    for (k, r) in e(ctx.w_generators())?.range(5..) {
        let img = e(phi_w(ctx, &r.class))?;
        ensure(
            img.is_zero(),
            format!("phi_W(x{k}) = {}", img.display_with("X")),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let i = rng.gen_range(1..D);
        let j = rng.gen_range(1..=D - i);
        let a = sample_w(eng, i, &mut rng)?;
        let b = sample_w(eng, j, &mut rng)?;
        let lhs = e(phi_w(ctx, &e(ctx.star(&a, &b))?))?;
        let rhs = &e(phi_w(ctx, &a))? * &e(phi_w(ctx, &b))?;
        ensure(
            lhs == rhs,
            format!("phi_W not multiplicative in degrees {i}, {j}"),
        )?;
    }
    Ok("span, kernel and 20 products verified".into())
}

fn binary(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = e(Command::new(env!("CARGO_BIN_EXE_cobord"))
        .args(args)
        .env_remove("FGL_MAX_DEGREE")
        .output())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

/// Expression-valued strings; `name`, `identity` and `detail` hold prose labels.
fn strings(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) => out.push(s.clone()),
        Value::Array(a) => a.iter().for_each(|x| strings(x, out)),
        Value::Object(m) => m
            .iter()
            .filter(|(k, _)| !matches!(k.as_str(), "name" | "identity" | "detail"))
            .for_each(|(_, x)| strings(x, out)),
        _ => {}
    }
}

fn criterion_12(_: &Context) -> Verdict {
    let args = ["verify", "--suite", "all", "--max-degree", "8"];
    let (c1, first) = binary(&args)?;
    let (c2, second) = binary(&args)?;
    ensure(c1 == 0 && c2 == 0, format!("exit codes {c1}, {c2}"))?;
    ensure(first == second, "verify output differs between runs")?;
    let runs: &[&[&str]] = &[
        &["verify", "--suite", "all", "--format", "json"],
        &["alpha", "4", "5", "--format", "json"],
        &["generators", "--kind", "x", "--format", "json"],
        &["generators", "--kind", "e", "--format", "json"],
        &["generators", "--kind", "su-low", "--format", "json"],
        &["abel", "--format", "json"],
        &["buchstaber", "--format", "json"],
        &["hoehn", "--symbolic", "--format", "json"],
        &["krichever-check", "--law", "buchstaber", "--format", "json"],
        &["boundary", "--class", "CP2*CP3", "--format", "json"],
        &["star", "CP1", "5/2*P1^3-4*P1*P2+3/2*P3", "--format", "json"],
    ];
    let mut checked = 0;
    for a in runs {
        let (code, out) = binary(a)?;
        ensure(code == 0, format!("{a:?} exited {code}"))?;
        let v: Value = e(serde_json::from_slice(&out))?;
        ensure(v["schema"] == "1", format!("{a:?} lacks schema 1"))?;
        let mut all = Vec::new();
        strings(&v, &mut all);
        for s in all {
            let looks_like_expr = s
                .bytes()
                .zip(s.bytes().skip(1))
                .any(|(a, b)| matches!(a, b'P' | b'X' | b'x' | b'p') && b.is_ascii_digit());
            if !looks_like_expr {
                continue;
            }
            if let Ok(ex) = parse_class(&s, D) {
                ensure(
                    print_class(&ex) == s,
                    format!("round trip changes {s} to {}", print_class(&ex)),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{} bytes identical across runs; {checked} expressions round-trip",
        first.len()
    ))
}

fn main() {
    let ctx = Context::new(D).expect("context");
    let criteria: [Criterion; 12] = [
        ("Chern tables", criterion_1),
        ("SU generators y2, y3, y4", criterion_2),
        ("FGL coefficients and y3, y4 expansions", criterion_3),
        ("gcd combinatorics", criterion_4),
        ("W structure", criterion_5),
        ("ideal lemmas", criterion_6),
        ("regularity", criterion_7),
        ("Abel specialization", criterion_8),
        ("Buchstaber and Krichever", criterion_9),
        ("Hoehn genus", criterion_10),
        ("phi_W", criterion_11),
        ("CLI round trip and determinism", criterion_12),
    ];
    let strict = std::env::var_os("ACCEPTANCE_STRICT").is_some();
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let verdict =
            catch_unwind(AssertUnwindSafe(|| f(&ctx))).unwrap_or_else(|_| Err("panicked".into()));
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed.push(i + 1);
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed.len(),
        criteria.len()
    );
    let expected: &[usize] = if strict { &[] } else { &KNOWN_RED };
    if failed != expected {
        println!("expected red set {expected:?}, got {failed:?}");
        std::process::exit(1);
    }
    if !failed.is_empty() {
        println!("criteria {failed:?} are red because of the stated y4 formula (see README)");
    }
}
