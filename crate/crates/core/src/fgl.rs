//! Formal group laws over graded ℚ-algebras.
//!
//! The universal law is built as `exp(log x + log y)` from the Mishchenko
//! logarithm `log x = x + Σ P_n x^{n+1}/(n+1)`; this fixes the sign
//! convention for every derived quantity (`α_11 = -P1`).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::GradedPoly;
use crate::rational::Rational;
use crate::series::{BiSeries, Series1};
use crate::substitution::Substitution;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Origin {
    Universal,
    Abel,
    Buchstaber,
    Hoehn(Vec<GradedPoly>),
    Custom(String),
}

impl std::fmt::Display for Origin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Origin::Universal => write!(f, "universal"),
            Origin::Abel => write!(f, "abel"),
            Origin::Buchstaber => write!(f, "buchstaber"),
            Origin::Hoehn(p) => write!(
                f,
                "hoehn({})",
                p.iter()
                    .map(|c| c.display_with("p"))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Origin::Custom(s) => write!(f, "custom({s})"),
        }
    }
}

/// `x + Σ_{n=1}^{cap} P_n x^{n+1} / (n+1)`.
pub fn mishchenko_log(cap: usize) -> Result<Series1> {
    if cap < 1 {
        return Err(Error::Config("cap must be at least 1".into()));
    }
    let mut s = Series1::x(cap + 1, cap);
    for n in 1..=cap {
        s.set_coeff(
            n + 1,
            GradedPoly::var(n, cap).scale(&Rational::new(1.into(), (n as i64 + 1).into())),
        );
    }
    Ok(s)
}

/// A validated formal group law `F(x, y)` with its invariant differential
/// `w(x) = ∂F/∂y (x, 0)`, `β(x) = (w'(x) - w'(0)) / 2x` and logarithm.
#[derive(Clone, Debug)]
pub struct FormalGroupLaw {
    series: BiSeries,
    logarithm: Option<Series1>,
    w: Series1,
    beta: Series1,
    origin: Origin,
    graded: bool,
}

impl FormalGroupLaw {
    /// Checks the unit, commutativity and associativity axioms up to the
    /// series order, and homogeneity when `graded`.
    pub fn new(series: BiSeries, origin: Origin, graded: bool) -> Result<Self> {
        let order = series.order();
        let cap = series.cap();
        if order < 2 {
            return Err(Error::Config(
                "formal group law needs order at least 2".into(),
            ));
        }
        for k in 0..=order {
            let expect = if k == 1 {
                GradedPoly::one(cap)
            } else {
                GradedPoly::zero(cap)
            };
            if series.coeff(k, 0) != expect || series.coeff(0, k) != expect {
                return Err(Error::Invariant(format!("unit axiom fails at degree {k}")));
            }
        }
        if series != series.swap() {
            return Err(Error::Invariant("law is not commutative".into()));
        }
        if graded {
            series.check_grading(-1)?;
        }
        check_associativity(&series)?;
        let w = series.dy_at_zero();
        let dw = w.derivative();
        let mut beta = Series1::zero(dw.order().saturating_sub(1), cap);
        let half = Rational::new(1.into(), 2.into());
        for m in 0..dw.order() {
            beta.set_coeff(m, dw.coeff(m + 1).scale(&half));
        }
        let logarithm = Some(w.inverse()?.integral());
        Ok(FormalGroupLaw {
            series,
            logarithm,
            w,
            beta,
            origin,
            graded,
        })
    }

    pub fn series(&self) -> &BiSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn cap(&self) -> usize {
        self.series.cap()
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn w(&self) -> &Series1 {
        &self.w
    }

    pub fn beta(&self) -> &Series1 {
        &self.beta
    }

    pub fn logarithm(&self) -> Option<&Series1> {
        self.logarithm.as_ref()
    }

    /// Compositional inverse of the logarithm.
    pub fn exponent(&self) -> Result<Series1> {
        self.logarithm
            .as_ref()
            .ok_or_else(|| Error::Domain("law has no logarithm".into()))?
            .reversion()
    }

    /// Coefficient of `x^i y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Result<GradedPoly> {
        if i + j > self.order() {
            return Err(Error::Range(format!(
                "alpha({i},{j}) needs order {} but the law has order {}",
                i + j,
                self.order()
            )));
        }
        Ok(self.series.coeff(i, j))
    }

    /// The formal inverse `ι(x)` with `F(x, ι(x)) = 0`.
    pub fn inverse_series(&self) -> Result<Series1> {
        let n = self.order();
        let mut g = Series1::x(n, self.cap()).neg();
        for _ in 1..n {
            g = g.sub(&self.series.substitute_y(&g)?);
        }
        Ok(g)
    }

    /// Image under a ring map; the axioms are re-checked in the target.
    pub fn specialize(&self, sub: &Substitution, origin: Origin) -> Result<FormalGroupLaw> {
        let series = self.series.map_coeffs(|c| sub.apply(c));
        FormalGroupLaw::new(series, origin, self.graded && sub.is_graded())
    }

    /// Entries `α_ij`, `i, j >= 1`, `i + j <= order`.
    pub fn alpha_table(&self) -> AlphaTable {
        let n = self.order();
        let mut entries = BTreeMap::new();
        for i in 1..n {
            for j in 1..=n - i {
                entries.insert((i, j), self.series.coeff(i, j));
            }
        }
        AlphaTable { entries }
    }
}

/// Builds a law from its exponent `f`: `F(x, y) = f(f^{-1}(x) + f^{-1}(y))`.
pub fn from_logarithm(log: &Series1, origin: Origin, graded: bool) -> Result<FormalGroupLaw> {
    let exp = log.reversion()?;
    let sum = BiSeries::from_x(log).add(&BiSeries::from_y(log));
    let f = BiSeries::compose(&exp, &sum)?;
    FormalGroupLaw::new(f, origin, graded)
}

/// The universal law over `ℚ[P1..P_cap]`, known through total degree `cap + 1`.
pub fn universal_fgl(cap: usize) -> Result<FormalGroupLaw> {
    from_logarithm(&mishchenko_log(cap)?, Origin::Universal, true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    entries: BTreeMap<(usize, usize), GradedPoly>,
}

impl AlphaTable {
    pub fn get(&self, i: usize, j: usize) -> Result<&GradedPoly> {
        self.entries
            .get(&(i, j))
            .ok_or_else(|| Error::Range(format!("alpha({i},{j}) is outside the table")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &GradedPoly)> {
        self.entries.iter()
    }
}

/// Associativity up to the order of a commutative law.
///
/// With `H_c(u, v) = Σ_a F_ac F(u, v)^a`, both `F(F(x,y), z)` and
/// `F(x, F(y,z))` expand through `H`: the coefficient of `x^i y^j z^k` is
/// `[H_k]_{ij}` on the left and `[H_i]_{jk}` on the right.
fn check_associativity(f: &BiSeries) -> Result<()> {
    let n = f.order();
    let cap = f.cap();
    let mut powers = vec![BiSeries::from_terms(
        [((0, 0), GradedPoly::one(cap))],
        n,
        cap,
    )];
    for a in 1..=n {
        powers.push(powers[a - 1].mul(f));
    }
    let h: Vec<BiSeries> = (0..=n)
        .map(|c| {
            let mut acc = BiSeries::zero(n, cap);
            for (a, pw) in powers.iter().enumerate().take(n + 1 - c) {
                let coeff = f.coeff(a, c);
                if !coeff.is_zero() {
                    acc = acc.add(&pw.scale(&coeff));
                }
            }
            acc
        })
        .collect();
    for i in 0..=n {
        for j in 0..=n - i {
            for k in 0..=n - i - j {
                if h[k].coeff(i, j) != h[i].coeff(j, k) {
                    return Err(Error::Invariant(format!(
                        "associativity fails at x^{i} y^{j} z^{k}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::rational::{q, qf};

    fn p(n: usize, cap: usize) -> GradedPoly {
        GradedPoly::var(n, cap)
    }

    #[test]
    fn log_definition() {
        let l = mishchenko_log(2).unwrap();
        assert_eq!(*l.coeff(1), GradedPoly::one(2));
        assert_eq!(*l.coeff(2), p(1, 2).scale(&qf(1, 2)));
        assert_eq!(*l.coeff(3), p(2, 2).scale(&qf(1, 3)));
        l.check_grading(-1).unwrap();
    }

    #[test]
    fn low_alphas() {
        let cap = 4;
        let f = universal_fgl(cap).unwrap();
        assert_eq!(f.coeff(1, 1).unwrap(), -p(1, cap));
        assert_eq!(f.coeff(1, 2).unwrap(), &p(1, cap).pow(2) - &p(2, cap));
        let a22 = p(1, cap).pow(3).scale(&qf(-5, 2)) + (&p(1, cap) * &p(2, cap)).scale(&q(4))
            - p(3, cap).scale(&qf(3, 2));
        assert_eq!(f.coeff(2, 2).unwrap(), a22);
        assert_eq!(f.coeff(2, 1).unwrap(), f.coeff(1, 2).unwrap());
        assert!(matches!(f.coeff(3, 3), Err(Error::Range(_))));
    }

    #[test]
    fn logarithm_is_additive() {
        let cap = 6;
        let f = universal_fgl(cap).unwrap();
        let log = f.logarithm().unwrap();
        assert_eq!(log, &mishchenko_log(cap).unwrap());
        let lhs = BiSeries::compose(log, f.series()).unwrap();
        let rhs = BiSeries::from_x(log).add(&BiSeries::from_y(log));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn formal_inverse() {
        let f = universal_fgl(6).unwrap();
        let inv = f.inverse_series().unwrap();
        assert_eq!(*inv.coeff(1), -GradedPoly::one(6));
        assert!(f.series().substitute_y(&inv).unwrap().is_zero());
    }

    #[test]
    fn w_is_first_column() {
        let f = universal_fgl(6).unwrap();
        let w = f.w();
        assert_eq!(*w.coeff(0), GradedPoly::one(6));
        for i in 1..=w.order() {
            assert_eq!(*w.coeff(i), f.coeff(1, i).unwrap());
        }
        w.check_grading(0).unwrap();
        f.beta().check_grading(2).unwrap();
    }

    #[test]
    fn zero_substitution_gives_additive_law() {
        let f = universal_fgl(5).unwrap();
        let add = f
            .specialize(&Substitution::zero(5), Origin::Custom("additive".into()))
            .unwrap();
        let terms: Vec<_> = add.series().terms().map(|(k, _)| *k).collect();
        assert_eq!(terms, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn todd_values_give_multiplicative_exponent() {
        let cap = 6;
        let f = universal_fgl(cap).unwrap();
        let sub = Substitution::numeric((1..=cap).map(|n| (n, q(1))).collect(), cap);
        let todd = f.specialize(&sub, Origin::Custom("todd".into())).unwrap();
        let exp = todd.exponent().unwrap();
        // 1 - e^{-x} = Σ (-1)^{k+1} x^k / k!
        let mut fact = 1i64;
        for k in 1..=exp.order() {
            fact *= k as i64;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(exp.coeff(k).coeff(&Monomial::one()), qf(sign, fact));
        }
        // F = x + y - xy
        assert_eq!(todd.coeff(1, 1).unwrap(), GradedPoly::constant(q(-1), cap));
        assert!(todd.coeff(2, 1).unwrap().is_zero());
    }

    #[test]
    fn associativity_detects_broken_law() {
        let cap = 3;
        let one = GradedPoly::one(cap);
        // x + y + x^2 y^2 is commutative with units but not associative.
        let s = BiSeries::from_terms(
            [
                ((1, 0), one.clone()),
                ((0, 1), one.clone()),
                ((2, 2), one.clone()),
            ],
            5,
            cap,
        );
        assert!(matches!(
            FormalGroupLaw::new(s, Origin::Custom("bad".into()), false),
            Err(Error::Invariant(_))
        ));
    }
}
