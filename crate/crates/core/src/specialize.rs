//! Quotients of the universal law: Abel and Buchstaber eliminations, the
//! Krichever functional form, the Höhn ODE genus and the genus `φ_W`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::chern::CobordismClass;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::fgl::{from_logarithm, FormalGroupLaw, Origin};
use crate::ideal::IdealSpec;
use crate::linalg::{rank_fraction_free, Matrix};
use crate::partition::{partitions, Partition};
use crate::poly::{GradedPoly, Monomial};
use crate::rational::Rational;
use crate::series::{antisymmetric_pair, BiSeries, Series1};
use crate::substitution::Substitution;

/// A degree-by-degree solution for the non-free generators.
#[derive(Clone, Debug, Serialize)]
pub struct Elimination {
    pub substitution: Substitution,
    /// Degree `n` -> the entry `(i, j)` solved for `P_n`.
    pub pivots: BTreeMap<usize, (usize, usize)>,
}

/// Solves `P_n` (for `n` in `degrees`) from the first entry of `entries(n)`
/// that is linear in `P_n`, then checks that every entry of `entries(n)` vanishes.
fn eliminate(
    cap: usize,
    degrees: std::ops::RangeInclusive<usize>,
    entries: impl Fn(usize) -> Result<Vec<((usize, usize), GradedPoly)>>,
) -> Result<Elimination> {
    let mut images = BTreeMap::new();
    let mut pivots = BTreeMap::new();
    for n in degrees {
        let sub = Substitution::graded(images.clone(), cap, "P")?;
        let list: Vec<((usize, usize), GradedPoly)> = entries(n)?
            .into_iter()
            .map(|(ij, e)| (ij, sub.apply(&e)))
            .collect();
        let mut solved = None;
        for (ij, e) in &list {
            let (a, rest) = e.split_linear(n)?;
            if !a.is_zero() {
                solved = Some((*ij, rest.scale(&-a.recip())));
                break;
            }
        }
        let (ij, image) = solved.ok_or_else(|| Error::EliminationBlocked {
            degree: n,
            pivot: list
                .first()
                .map(|(ij, _)| format!("{ij:?}"))
                .unwrap_or_else(|| "none".into()),
        })?;
        images.insert(n, image);
        pivots.insert(n, ij);
        let sub = Substitution::graded(images.clone(), cap, "P")?;
        for ((i, j), e) in &list {
            let r = sub.apply(e);
            if !r.is_zero() {
                return Err(Error::Inconsistent {
                    degree: n,
                    entry: format!("({i},{j})"),
                    residual: r.to_string(),
                });
            }
        }
    }
    Ok(Elimination {
        substitution: Substitution::graded(images, cap, "P")?,
        pivots,
    })
}

/// Kills every `α_ij` with `i, j >= 2`, keeping `P1` and `P2` free.
pub fn abel_eliminate(ctx: &Context) -> Result<Elimination> {
    let cap = ctx.cap();
    if cap < 3 {
        return Err(Error::Range("Abel elimination needs cap >= 3".into()));
    }
    let fgl = ctx.fgl()?;
    eliminate(cap, 3..=cap, |n| {
        (2..=n - 1)
            .map(|i| Ok(((i, n + 1 - i), fgl.coeff(i, n + 1 - i)?)))
            .collect()
    })
}

/// The image of the universal law under the Abel elimination.
pub fn abel_fgl(ctx: &Context) -> Result<FormalGroupLaw> {
    let e = abel_eliminate(ctx)?;
    ctx.fgl()?.specialize(&e.substitution, Origin::Abel)
}

/// Only `x^i`, `y^j` and `x y^j`, `x^i y` terms survive.
pub fn has_abel_shape(f: &FormalGroupLaw) -> bool {
    f.series().terms().all(|((i, j), _)| *i < 2 || *j < 2)
}

/// `A(x, y) = F(x, y) (x w(y) - y w(x))`, kept through total degree `order + 1`.
pub fn buchstaber_series(f: &FormalGroupLaw) -> BiSeries {
    let pair = antisymmetric_pair(f.w());
    // Coefficients of the missing degree would have weight above the cap.
    f.series().mul_to_order(&pair, f.order() + 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct BuchstaberData {
    #[serde(skip)]
    pub a: BiSeries,
    pub elimination: Elimination,
}

impl BuchstaberData {
    /// `A_ij` (weight `i + j - 2`).
    pub fn entry(&self, i: usize, j: usize) -> GradedPoly {
        self.a.coeff(i, j)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.a == self.a.swap().neg()
    }
}

/// Kills every `A_ij` with `i, j >= 3`, keeping `P1..P4` free.
pub fn buchstaber_eliminate(ctx: &Context) -> Result<BuchstaberData> {
    let cap = ctx.cap();
    if cap < 5 {
        return Err(Error::Range("Buchstaber elimination needs cap >= 5".into()));
    }
    let a = buchstaber_series(ctx.fgl()?);
    let elimination = eliminate(cap, 5..=cap, |n| {
        Ok((3..=n - 1)
            .filter(|&i| i < n + 2 - i)
            .map(|i| ((i, n + 2 - i), a.coeff(i, n + 2 - i)))
            .collect())
    })?;
    Ok(BuchstaberData { a, elimination })
}

pub fn buchstaber_fgl(ctx: &Context) -> Result<FormalGroupLaw> {
    let b = buchstaber_eliminate(ctx)?;
    ctx.fgl()?
        .specialize(&b.elimination.substitution, Origin::Buchstaber)
}

/// `(A_ij : i, j >= 3)` within the cap.
pub fn buchstaber_ideal(ctx: &Context) -> Result<IdealSpec> {
    let cap = ctx.cap();
    let a = buchstaber_series(ctx.fgl()?);
    let mut gens = Vec::new();
    for t in 6..=cap + 2 {
        for i in (3..=t - 3).filter(|&i| i < t - i) {
            let e = a.coeff(i, t - i);
            if !e.is_zero() {
                gens.push(e);
            }
        }
    }
    IdealSpec::new("A", gens, cap)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormFailure {
    pub i: usize,
    pub j: usize,
    pub weight: usize,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormReport {
    pub pass: bool,
    pub divisible: bool,
    pub checked_through_weight: usize,
    pub failure: Option<FormFailure>,
}

/// Checks `F = x w(y) + y w(x) - w'(0) xy + Q x^2 y^2` with
/// `Q (x w(y) - y w(x)) = w(x)β(x) - w(y)β(y)`.
pub fn krichever_form_check(f: &FormalGroupLaw) -> FormReport {
    let order = f.order();
    let cap = f.cap();
    let w = f.w();
    let w1 = w.coeff(1).clone();
    let xw_y = antisymmetric_pair(w);
    let linear_part = {
        let x = BiSeries::from_terms([((1, 0), GradedPoly::one(cap))], order, cap);
        let y = BiSeries::from_terms([((0, 1), GradedPoly::one(cap))], order, cap);
        x.mul_to_order(&BiSeries::from_y(w), order)
            .add(&y.mul_to_order(&BiSeries::from_x(w), order))
            .sub(&BiSeries::from_terms([((1, 1), w1)], order, cap))
    };
    let n = f.series().sub(&linear_part);
    if let Some(((i, j), c)) = n.terms().find(|((i, j), _)| *i < 2 || *j < 2) {
        return FormReport {
            pass: false,
            divisible: false,
            checked_through_weight: 0,
            failure: Some(FormFailure {
                i: *i,
                j: *j,
                weight: i + j - 1,
                residual: c.to_string(),
            }),
        };
    }
    let q_order = order.saturating_sub(4);
    let q = BiSeries::from_terms(
        n.terms().map(|((i, j), c)| ((i - 2, j - 2), c.clone())),
        q_order,
        cap,
    );
    let check = order.saturating_sub(3);
    let lhs = q.mul_to_order(&xw_y, check);
    let wb = w.mul(f.beta());
    let rhs = BiSeries::from_x(&wb)
        .sub(&BiSeries::from_y(&wb))
        .truncate(check);
    let diff = lhs.sub(&rhs);
    let failure = diff
        .terms()
        .min_by_key(|((i, j), _)| (i + j, *i))
        .map(|((i, j), c)| FormFailure {
            i: *i,
            j: *j,
            weight: i + j + 2,
            residual: c.to_string(),
        });
    FormReport {
        pass: failure.is_none(),
        divisible: true,
        checked_through_weight: check + 2,
        failure,
    }
}

/// `H = x f'/f` for an exponent `f = x + ...`.
fn log_derivative(f: &Series1) -> Result<Series1> {
    let u = f.shift_down()?;
    let du = u.derivative();
    let ratio = du.mul(&u.truncate(du.order()).inverse()?);
    let one = Series1::constant(GradedPoly::one(f.cap()), ratio.order() + 1);
    Ok(one.add(&ratio.shift_up(1)))
}

/// `G^2 - H^4 - p1 x H^3 - p2 x^2 H^2 - p3 x^3 H - p4 x^4` with `G = x H' - H`.
fn hoehn_residual(h: &Series1, p: &[GradedPoly; 4]) -> Series1 {
    let order = h.order();
    let g = h.derivative().shift_up(1).truncate(order).sub(h);
    let mut r = g.mul(&g).sub(&h.pow(4));
    for (k, pk) in p.iter().enumerate() {
        let k = k + 1;
        let term = h.pow(4 - k).shift_up(k).truncate(order).scale(pk);
        r = r.sub(&term);
    }
    r
}

#[derive(Clone, Debug)]
pub struct HoehnGenus {
    pub params: [GradedPoly; 4],
    /// The exponent `f`.
    pub f: Series1,
    /// `x h(x) = 1 + O(x)`, the regular part of `h` shifted by one.
    pub h: Series1,
    pub images: Substitution,
    pub residual_zero: bool,
}

impl HoehnGenus {
    pub fn fgl(&self) -> Result<FormalGroupLaw> {
        let graded = self.images.is_graded();
        from_logarithm(
            &self.f.reversion()?,
            Origin::Hoehn(self.params.to_vec()),
            graded,
        )
    }
}

impl Serialize for HoehnGenus {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            params: Vec<String>,
            images: &'a Substitution,
            residual_zero: bool,
        }
        Out {
            params: self.params.iter().map(|p| p.display_with("p")).collect(),
            images: &self.images,
            residual_zero: self.residual_zero,
        }
        .serialize(s)
    }
}

/// Solves `(h')^2 = p4 + p3 h + p2 h^2 + p1 h^3 + h^4` with `h = f'/f = 1/x + O(1)`.
///
/// Parameters are either all rational constants or homogeneous of weights
/// 1..4 in a ring whose generators print as `p`.
pub fn hoehn_solve(params: [GradedPoly; 4], cap: usize) -> Result<HoehnGenus> {
    let numeric = params.iter().all(GradedPoly::is_constant);
    if !numeric {
        for (k, p) in params.iter().enumerate() {
            if !p.is_homogeneous_of(k + 1) {
                return Err(Error::Domain(format!(
                    "p{} = {} is neither constant nor of weight {}",
                    k + 1,
                    p.display_with("p"),
                    k + 1
                )));
            }
        }
    }
    let mut h = Series1::constant(GradedPoly::one(cap), cap);
    for m in 1..=cap {
        let r = hoehn_residual(&h.truncate(m), &params);
        let pivot = Rational::from_integer((2 * m as i64 + 2).into());
        if pivot.is_zero() {
            return Err(Error::SolverBlocked { order: m });
        }
        h.set_coeff(m, r.coeff(m).scale(&pivot.recip()));
    }
    let residual_zero = hoehn_residual(&h, &params).is_zero();
    // x f' = H f
    let mut f = Series1::zero(cap + 1, cap);
    f.set_coeff(1, GradedPoly::one(cap));
    for n in 2..=cap + 1 {
        let mut acc = GradedPoly::zero(cap);
        for a in 1..n {
            acc += &(h.coeff(a) * f.coeff(n - a));
        }
        f.set_coeff(
            n,
            acc.scale(&Rational::new(1.into(), (n as i64 - 1).into())),
        );
    }
    let log = f.reversion()?;
    let images_map: BTreeMap<usize, GradedPoly> = (1..=cap)
        .map(|n| {
            (
                n,
                log.coeff(n + 1)
                    .scale(&Rational::from_integer((n as i64 + 1).into())),
            )
        })
        .collect();
    let images = if numeric {
        Substitution::numeric(
            images_map
                .into_iter()
                .map(|(n, v)| (n, v.constant_term()))
                .collect(),
            cap,
        )
    } else {
        Substitution::graded(images_map, cap, "p")?
    };
    Ok(HoehnGenus {
        params,
        f,
        h,
        images,
        residual_zero,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KricheverParams {
    pub params: Option<[GradedPoly; 4]>,
    pub first_failing_order: Option<usize>,
    pub residual: Option<GradedPoly>,
}

impl Serialize for KricheverParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            success: bool,
            params: Option<Vec<String>>,
            first_failing_order: Option<usize>,
            residual: Option<String>,
        }
        Out {
            success: self.first_failing_order.is_none(),
            params: self
                .params
                .as_ref()
                .map(|p| p.iter().map(ToString::to_string).collect()),
            first_failing_order: self.first_failing_order,
            residual: self.residual.as_ref().map(ToString::to_string),
        }
        .serialize(s)
    }
}

/// Finds `p1..p4` making the exponent of `F` solve the Höhn equation: the
/// first four orders determine them, the rest must then vanish.
pub fn krichever_params_of(f: &FormalGroupLaw) -> Result<KricheverParams> {
    let exp = f.exponent()?;
    let h = log_derivative(&exp)?;
    let order = h.order();
    if order < 4 {
        return Err(Error::Range("need the exponent through x^5".into()));
    }
    let g = h.derivative().shift_up(1).truncate(order).sub(&h);
    let r = g.mul(&g).sub(&h.pow(4));
    // r_m = Σ_k p_k [H^{4-k}]_{m-k}
    let powers: Vec<Series1> = (0..=3).map(|e| h.pow(e)).collect();
    let mut p: Vec<GradedPoly> = Vec::with_capacity(4);
    for m in 1..=4 {
        let mut acc = r.coeff(m).clone();
        for (k, pk) in p.iter().enumerate() {
            let k = k + 1;
            acc -= &(pk * powers[4 - k].coeff(m - k));
        }
        p.push(acc);
    }
    let params: [GradedPoly; 4] = p.try_into().expect("four parameters");
    let res = hoehn_residual(&h, &params);
    let fail = (5..=order).find(|&m| !res.coeff(m).is_zero());
    Ok(KricheverParams {
        params: fail.is_none().then_some(params),
        first_failing_order: fail,
        residual: fail.map(|m| res.coeff(m).clone()),
    })
}

/// Star monomials in the W-generators, folded left in increasing index.
#[derive(Debug)]
pub struct StarBasis {
    cap: usize,
    /// Per degree: partitions without a part 2 and their star monomials.
    pub degrees: Vec<Vec<(Partition, CobordismClass)>>,
    /// Per degree: rank of the star monomials in the product basis.
    pub ranks: Vec<usize>,
}

impl StarBasis {
    pub fn new(ctx: &Context) -> Result<Self> {
        let cap = ctx.cap();
        let gens = ctx.w_generators()?;
        let mut degrees = Vec::with_capacity(cap + 1);
        let mut ranks = Vec::with_capacity(cap + 1);
        for n in 0..=cap {
            let mut row = Vec::new();
            for lambda in partitions(n) {
                if lambda.count_of(2) > 0 {
                    continue;
                }
                let mut acc = ctx.class(GradedPoly::one(cap), 0)?;
                for &k in lambda.parts().iter().rev() {
                    acc = ctx.star(&acc, &gens[&k].class)?;
                }
                row.push((lambda, acc));
            }
            let rows: Vec<Vec<Rational>> = row
                .iter()
                .map(|(_, c)| crate::ideal::coordinates(c.poly(), n))
                .collect();
            ranks.push(rank_fraction_free(&rows));
            degrees.push(row);
        }
        Ok(StarBasis {
            cap,
            degrees,
            ranks,
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Coordinates of a W class in the star monomials of its degree.
    pub fn expand(&self, ctx: &Context, z: &CobordismClass) -> Result<Vec<(Partition, Rational)>> {
        let n = z.weight();
        let row = self
            .degrees
            .get(n)
            .ok_or_else(|| Error::Range(format!("degree {n} exceeds cap {}", self.cap)))?;
        if !ctx.chern()?.is_w_class(z)? {
            return Err(Error::Domain(format!("{z} is not in W")));
        }
        if self.ranks[n] != row.len() {
            return Err(Error::Internal(format!(
                "star monomials are dependent in degree {n}"
            )));
        }
        let size = partitions(n).len();
        let mut m = Matrix::zeros(size, row.len());
        for (j, (_, c)) in row.iter().enumerate() {
            for (i, v) in crate::ideal::coordinates(c.poly(), n)
                .into_iter()
                .enumerate()
            {
                m[(i, j)] = v;
            }
        }
        let coords = m
            .solve(&crate::ideal::coordinates(z.poly(), n))
            .ok_or_else(|| {
                Error::Internal(format!("star monomials do not span W in degree {n}"))
            })?;
        Ok(row.iter().map(|(l, _)| l.clone()).zip(coords).collect())
    }
}

/// `φ_W`: expand in star monomials, drop those involving `x_k` for `k >= 5`
/// and read `x_1, x_3, x_4` as `X1, X3, X4`.
pub fn phi_w(ctx: &Context, z: &CobordismClass) -> Result<GradedPoly> {
    let basis = ctx.star_basis()?;
    let cap = ctx.cap();
    let mut out = GradedPoly::zero(cap);
    for (lambda, c) in basis.expand(ctx, z)? {
        if c.is_zero() || lambda.parts().iter().any(|&k| k >= 5) {
            continue;
        }
        out += &GradedPoly::term(Monomial::from_parts(lambda.parts()), c, cap);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn ctx() -> Context {
        Context::new(8).unwrap()
    }

    #[test]
    fn abel_p3_image() {
        let c = ctx();
        let e = abel_eliminate(&c).unwrap();
        let p1 = GradedPoly::var(1, 8);
        let p2 = GradedPoly::var(2, 8);
        let expect = (&p1 * &p2).scale(&qf(8, 3)) - p1.pow(3).scale(&qf(5, 3));
        assert_eq!(e.substitution.image(3).unwrap(), &expect);
        assert_eq!(e.pivots[&3], (2, 2));
    }

    #[test]
    fn abel_law_shape() {
        let c = ctx();
        let f = abel_fgl(&c).unwrap();
        assert!(has_abel_shape(&f));
        for i in 1..f.order() {
            assert_eq!(f.w().coeff(i), &f.coeff(1, i).unwrap());
        }
        let max_var = f.series().terms().map(|(_, c)| c.max_var()).max().unwrap();
        assert!(max_var <= 2);
    }

    #[test]
    fn buchstaber_structure() {
        let c = ctx();
        let b = buchstaber_eliminate(&c).unwrap();
        assert!(b.is_antisymmetric());
        assert!(b.entry(3, 3).is_zero());
        b.a.check_grading(-2).unwrap();
        let f = c
            .fgl()
            .unwrap()
            .specialize(&b.elimination.substitution, Origin::Buchstaber)
            .unwrap();
        let max_var = f.series().terms().map(|(_, c)| c.max_var()).max().unwrap();
        assert!(max_var <= 4);
    }

    #[test]
    fn form_check_on_additive_law() {
        let c = ctx();
        let add = c
            .fgl()
            .unwrap()
            .specialize(&Substitution::zero(8), Origin::Custom("add".into()))
            .unwrap();
        assert!(krichever_form_check(&add).pass);
    }

    #[test]
    fn todd_and_trivial_hoehn() {
        let cap = 8;
        let k = |v: i64| GradedPoly::constant(q(v), cap);
        let todd = hoehn_solve([k(2), k(1), k(0), k(0)], cap).unwrap();
        assert!(todd.residual_zero);
        for n in 1..=cap {
            assert_eq!(todd.images.image(n).unwrap(), &k(1));
        }
        let zero = hoehn_solve([k(0), k(0), k(0), k(0)], cap).unwrap();
        for n in 1..=cap {
            assert!(zero.images.image(n).unwrap().is_zero());
        }
    }

    #[test]
    fn symbolic_hoehn_is_graded() {
        let cap = 6;
        let p = |n| GradedPoly::var(n, cap);
        let g = hoehn_solve([p(1), p(2), p(3), p(4)], cap).unwrap();
        assert!(g.residual_zero);
        for n in 1..=cap {
            assert!(g.images.image(n).unwrap().is_homogeneous_of(n));
        }
        let back = krichever_params_of(&g.fgl().unwrap()).unwrap();
        assert_eq!(back.params.unwrap(), [p(1), p(2), p(3), p(4)]);
    }
}
