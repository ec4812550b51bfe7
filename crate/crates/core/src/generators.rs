//! Gcd data of binomial coefficients and the generator families built from it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::chern::CobordismClass;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::ideal::degree_span;
use crate::linalg::Matrix;
use crate::poly::GradedPoly;
use crate::rational::{to_fraction_string, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexRange {
    /// `1..=m`
    Full,
    /// `2..=max(m - 2, 2)`
    Inner,
    /// `2..=m - 1`, the range of `z_m`
    Proper,
}

impl IndexRange {
    pub fn indices(self, m: usize) -> Vec<usize> {
        match self {
            IndexRange::Full => (1..=m).collect(),
            IndexRange::Inner => (2..=m.saturating_sub(2).max(2)).collect(),
            IndexRange::Proper => (2..m).collect(),
        }
    }
}

/// Integers `λ_i` with `Σ λ_i C(m+1, i) = gcd` over an index range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclidCombo {
    pub m: usize,
    pub lambdas: BTreeMap<usize, BigInt>,
    pub gcd_value: BigInt,
    pub range: IndexRange,
}

impl EuclidCombo {
    /// Extended Euclid folded over the binomials in increasing `i`.
    pub fn new(m: usize, range: IndexRange) -> Result<Self> {
        let min = match range {
            IndexRange::Full => 1,
            IndexRange::Inner | IndexRange::Proper => 3,
        };
        if m < min {
            return Err(Error::Domain(format!(
                "gcd range {range:?} needs m >= {min}, got {m}"
            )));
        }
        let idx = range.indices(m);
        let mut lambdas = BTreeMap::new();
        let mut g = BigInt::zero();
        for &i in &idx {
            let b = binom(m + 1, i);
            if lambdas.is_empty() {
                g = b;
                lambdas.insert(i, BigInt::one());
                continue;
            }
            let e = g.extended_gcd(&b);
            for l in lambdas.values_mut() {
                *l *= &e.x;
            }
            lambdas.insert(i, e.y);
            g = e.gcd;
        }
        Ok(EuclidCombo {
            m,
            lambdas,
            gcd_value: g,
            range,
        })
    }

    /// `Σ λ_i C(m+1, i)`, which must equal the gcd.
    pub fn certificate(&self) -> BigInt {
        self.lambdas
            .iter()
            .map(|(&i, l)| l * binom(self.m + 1, i))
            .sum()
    }
}

impl Serialize for EuclidCombo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            m: usize,
            range: IndexRange,
            gcd: String,
            lambdas: BTreeMap<usize, String>,
        }
        Out {
            m: self.m,
            range: self.range,
            gcd: self.gcd_value.to_string(),
            lambdas: self
                .lambdas
                .iter()
                .map(|(i, l)| (*i, l.to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

pub fn binom(n: usize, k: usize) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

fn gcd_of(values: impl IntoIterator<Item = BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |g, v| g.gcd(&v))
}

/// `gcd{C(m+1, i) : 1 <= i <= m}` by brute force.
pub fn d_of(m: usize) -> u64 {
    assert!(m >= 1, "d(m) needs m >= 1");
    gcd_of((1..=m).map(|i| binom(m + 1, i)))
        .to_u64()
        .expect("gcd fits")
}

/// `p` when `m + 1` is a power of the prime `p`, else 1.
pub fn d_closed(m: usize) -> u64 {
    prime_power_base(m as u64 + 1).unwrap_or(1)
}

/// `gcd{C(m+1, i) : 2 <= i <= m - 2}` by brute force (`{2}` when `m = 3`).
pub fn d2_of(m: usize) -> u64 {
    assert!(m >= 3, "d2(m) needs m >= 3");
    gcd_of(
        IndexRange::Inner
            .indices(m)
            .into_iter()
            .map(|i| binom(m + 1, i)),
    )
    .to_u64()
    .expect("gcd fits")
}

fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|p| n.is_multiple_of(*p))?;
    let mut r = n;
    while r.is_multiple_of(p) {
        r /= p;
    }
    (r == 1).then_some(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GeneratorKind {
    #[serde(rename = "e_m")]
    E,
    #[serde(rename = "z_k")]
    Z,
    #[serde(rename = "x_k")]
    X,
    #[serde(rename = "y_i")]
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub w_member: bool,
    pub su_member: bool,
    pub novikov_odd_part: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorRecord {
    pub kind: GeneratorKind,
    pub degree: usize,
    pub class: CobordismClass,
    pub s_value: Rational,
    pub certificates: Certificates,
    /// For `x_k`: the sign applied to `z_k` and the added ideal element.
    pub correction: Option<(i8, GradedPoly)>,
}

impl GeneratorRecord {
    pub fn certify(ctx: &Context, kind: GeneratorKind, class: CobordismClass) -> Result<Self> {
        let e = ctx.chern()?;
        let degree = class.weight();
        let s_value = e.s_number(&class)?;
        let certificates = Certificates {
            w_member: e.is_w_class(&class)?,
            su_member: e.is_su_class(&class)?,
            novikov_odd_part: novikov_check(degree, &s_value).holds,
        };
        Ok(GeneratorRecord {
            kind,
            degree,
            class,
            s_value,
            certificates,
            correction: None,
        })
    }
}

impl Serialize for GeneratorRecord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            kind: GeneratorKind,
            degree: usize,
            class: String,
            s_value: String,
            certificates: &'a Certificates,
            #[serde(skip_serializing_if = "Option::is_none")]
            z_sign: Option<i8>,
            #[serde(skip_serializing_if = "Option::is_none")]
            correction: Option<String>,
        }
        Out {
            kind: self.kind,
            degree: self.degree,
            class: self.class.poly().to_string(),
            s_value: to_fraction_string(&self.s_value),
            certificates: &self.certificates,
            z_sign: self.correction.as_ref().map(|c| c.0),
            correction: self.correction.as_ref().map(|c| c.1.to_string()),
        }
        .serialize(s)
    }
}

/// `Σ λ_i α_{i, m+1-i}` over an index range.
fn alpha_combination(ctx: &Context, m: usize, range: IndexRange) -> Result<CobordismClass> {
    let combo = EuclidCombo::new(m, range)?;
    let fgl = ctx.fgl()?;
    let mut acc = GradedPoly::zero(ctx.cap());
    for (&i, l) in &combo.lambdas {
        let a = fgl.coeff(i, m + 1 - i)?;
        acc += &a.scale(&Rational::from_integer(l.clone()));
    }
    CobordismClass::with_weight(acc, m)
}

fn check_degree(ctx: &Context, k: usize, min: usize) -> Result<()> {
    if k < min || k > ctx.cap() {
        return Err(Error::Range(format!(
            "degree {k} outside {min}..={}",
            ctx.cap()
        )));
    }
    Ok(())
}

/// `e_m = Σ_{i=1}^{m} λ_i α_{i, m+1-i}`.
pub fn e_generator(ctx: &Context, m: usize) -> Result<GeneratorRecord> {
    check_degree(ctx, m, 1)?;
    let c = alpha_combination(ctx, m, IndexRange::Full)?;
    GeneratorRecord::certify(ctx, GeneratorKind::E, c)
}

/// `z_k = Σ_{i=2}^{k-1} λ_i α_{i, k+1-i}` for `k >= 3`.
pub fn z_class(ctx: &Context, k: usize) -> Result<CobordismClass> {
    check_degree(ctx, k, 3)?;
    alpha_combination(ctx, k, IndexRange::Proper)
}

pub fn z_generator(ctx: &Context, k: usize) -> Result<GeneratorRecord> {
    GeneratorRecord::certify(ctx, GeneratorKind::Z, z_class(ctx, k)?)
}

/// `y_2 = P2 - 9/8 P1^2`.
pub fn y2(cap: usize) -> Result<CobordismClass> {
    let p1 = GradedPoly::var(1, cap);
    let p = GradedPoly::var(2, cap) - p1.pow(2).scale(&Rational::new(9.into(), 8.into()));
    CobordismClass::with_weight(p, 2)
}

/// Generators of `Ĩ(l) = (y_2, z_3, ..., z_l)`.
pub fn tilde_ideal_generators(ctx: &Context, l: usize) -> Result<Vec<GradedPoly>> {
    let mut gens = vec![y2(ctx.cap())?.into_poly()];
    for k in 3..=l {
        gens.push(z_class(ctx, k)?.into_poly());
    }
    Ok(gens)
}

/// The W-generator `x_k = ±z_k + c` with `c ∈ Ĩ(k-1)`, normalised so that
/// `s_k(x_k) = d(k) d(k-1)`; `x_1 = P1`.
pub fn w_generator(ctx: &Context, k: usize) -> Result<GeneratorRecord> {
    let cap = ctx.cap();
    if k == 1 {
        let c = CobordismClass::with_weight(GradedPoly::var(1, cap), 1)?;
        return GeneratorRecord::certify(ctx, GeneratorKind::X, c);
    }
    if k == 2 {
        return Err(Error::Domain("W has no generator in degree 2".into()));
    }
    check_degree(ctx, k, 3)?;
    let e = ctx.chern()?;
    let z = z_class(ctx, k)?;
    let target = Rational::from_integer((d_of(k) * d_of(k - 1)).into());
    let s = e.s_number(&z)?;
    if s.abs() != target {
        return Err(Error::ConstructionFailed {
            what: format!("x_{k}"),
            degree: k,
            reason: format!(
                "|s_{k}(z_{k})| = {} differs from d(k)d(k-1) = {target}",
                s.abs()
            ),
        });
    }
    let sign: i8 = if s.is_positive() { 1 } else { -1 };
    let base = z.scale(&Rational::from_integer(sign.into()));

    let span = degree_span(&tilde_ideal_generators(ctx, k - 1)?, k, cap);
    let t = e.table(k)?;
    let w_rows: Vec<usize> = (0..t.partitions.len())
        .filter(|&i| t.partitions[i].count_of(1) >= 2)
        .collect();
    let chern_of = |p: &GradedPoly| -> Result<Vec<Rational>> {
        let v = e.chern_vector(&CobordismClass::with_weight(p.clone(), k)?)?;
        Ok(w_rows.iter().map(|&i| v.get(&t.partitions[i])).collect())
    };
    let cols: Vec<Vec<Rational>> = span.iter().map(chern_of).collect::<Result<_>>()?;
    let rhs: Vec<Rational> = chern_of(base.poly())?.into_iter().map(|v| -v).collect();
    let mut m = Matrix::zeros(w_rows.len(), span.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            m[(i, j)] = v.clone();
        }
    }
    let coeffs = m.solve(&rhs).ok_or_else(|| Error::ConstructionFailed {
        what: format!("x_{k}"),
        degree: k,
        reason: "no element of the ideal cancels the c1^2 Chern numbers".into(),
    })?;
    let mut correction = GradedPoly::zero(cap);
    for (g, c) in span.iter().zip(&coeffs) {
        if !c.is_zero() {
            correction += &g.scale(c);
        }
    }
    let x = base.add(&CobordismClass::with_weight(correction.clone(), k)?)?;
    let mut rec = GeneratorRecord::certify(ctx, GeneratorKind::X, x)?;
    if !rec.certificates.w_member || rec.s_value != target {
        return Err(Error::Invariant(format!(
            "x_{k} failed its own certificates"
        )));
    }
    rec.correction = Some((sign, correction));
    Ok(rec)
}

/// `-α_23 + c α_22 P1` for a chosen coefficient `c`.
pub fn y4_with_coefficient(ctx: &Context, c: &Rational) -> Result<CobordismClass> {
    let fgl = ctx.fgl()?;
    let a22p1 = &fgl.coeff(2, 2)? * &GradedPoly::var(1, ctx.cap());
    CobordismClass::with_weight(&a22p1.scale(c) - &fgl.coeff(2, 3)?, 4)
}

/// The unique `c` for which `-α_23 + c α_22 P1` has no `c_1`-numbers.
pub fn y4_su_coefficient(ctx: &Context) -> Result<Rational> {
    let e = ctx.chern()?;
    let base = e.chern_vector(&y4_with_coefficient(ctx, &Rational::zero())?)?;
    let step = e.chern_vector(&y4_with_coefficient(ctx, &Rational::one())?)?;
    let (omega, slope) = step
        .entries
        .iter()
        .filter(|(omega, _)| omega.count_of(1) > 0)
        .map(|(omega, v)| (omega, v - base.get(omega)))
        .find(|(_, d)| !d.is_zero())
        .ok_or_else(|| Error::Internal("α_22 P1 has no c1-numbers".into()))?;
    Ok(-base.get(omega) / slope)
}

/// `y_2 = P2 - 9/8 P1^2`, `y_3 = -α_22` and `y_4 = -α_23 + c α_22 P1`, with
/// `c` forced by the SU condition.
pub fn su_low_generators(ctx: &Context) -> Result<[GeneratorRecord; 3]> {
    let cap = ctx.cap();
    if cap < 4 {
        return Err(Error::Range("the low SU generators need cap >= 4".into()));
    }
    let y3 = -&ctx.fgl()?.coeff(2, 2)?;
    let classes = [
        y2(cap)?,
        CobordismClass::with_weight(y3, 3)?,
        y4_with_coefficient(ctx, &y4_su_coefficient(ctx)?)?,
    ];
    let mut out = Vec::with_capacity(3);
    for c in classes {
        let rec = GeneratorRecord::certify(ctx, GeneratorKind::Y, c)?;
        if !rec.certificates.su_member {
            return Err(Error::Invariant(format!(
                "y_{} = {} has a nonzero Chern number involving c1",
                rec.degree,
                rec.class.poly()
            )));
        }
        out.push(rec);
    }
    Ok(out.try_into().expect("three records"))
}

/// A class with every `c_1`-number zero and `s_i = d(i)d(i-1)` (odd `i`) or
/// `2 d(i)d(i-1)` (even `i`); free coordinates are set to zero.
pub fn su_generator(ctx: &Context, i: usize) -> Result<GeneratorRecord> {
    check_degree(ctx, i, 2)?;
    let e = ctx.chern()?;
    let t = e.table(i)?;
    let size = t.partitions.len();
    let mut rows: Vec<Vec<Rational>> = (0..size)
        .filter(|&r| t.partitions[r].count_of(1) >= 1)
        .map(|r| t.numbers.row(r).to_vec())
        .collect();
    let mut rhs = vec![Rational::zero(); rows.len()];
    rows.push(t.s_row.clone());
    let base = d_of(i) * d_of(i - 1);
    let target = if i.is_multiple_of(2) { 2 * base } else { base };
    rhs.push(Rational::from_integer(target.into()));
    let coords =
        Matrix::from_rows(rows, size)
            .solve(&rhs)
            .ok_or_else(|| Error::ConstructionFailed {
                what: format!("y_{i}"),
                degree: i,
                reason: "SU constraints are incompatible with the s-number".into(),
            })?;
    let class = e.from_coordinates(i, &coords)?;
    GeneratorRecord::certify(ctx, GeneratorKind::Y, class)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NovikovVerdict {
    pub holds: bool,
    pub reason: String,
}

/// The odd part of `|s|` must be `p` when `n` or `n + 1` is a power of an odd
/// prime `p`, and 1 otherwise.
pub fn novikov_check(n: usize, s: &Rational) -> NovikovVerdict {
    if s.is_zero() {
        return NovikovVerdict {
            holds: false,
            reason: "s-number is zero".into(),
        };
    }
    if !s.is_integer() {
        return NovikovVerdict {
            holds: false,
            reason: format!("s-number {s} is not an integer"),
        };
    }
    let mut odd = s.to_integer().abs();
    while odd.is_even() {
        odd /= 2;
    }
    let p = [n as u64, n as u64 + 1]
        .into_iter()
        .filter_map(prime_power_base)
        .find(|&p| p % 2 == 1);
    let expected = BigInt::from(p.unwrap_or(1));
    NovikovVerdict {
        holds: odd == expected,
        reason: format!("odd part {odd}, expected {expected}"),
    }
}
