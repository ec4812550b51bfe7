//! Truncated power series in one and two variables with [`GradedPoly`]
//! coefficients.
//!
//! A [`Series1`] of order `N` knows the coefficients of `x^0..=x^N`; a
//! [`BiSeries`] of order `N` knows every `x^i y^j` with `i + j <= N`. Binary
//! operations return the smaller of the two orders.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::GradedPoly;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series1 {
    coeffs: Vec<GradedPoly>,
    cap: usize,
}

impl Series1 {
    pub fn zero(order: usize, cap: usize) -> Self {
        Series1 {
            coeffs: vec![GradedPoly::zero(cap); order + 1],
            cap,
        }
    }

    /// The series `x`.
    pub fn x(order: usize, cap: usize) -> Self {
        let mut s = Self::zero(order, cap);
        if order >= 1 {
            s.coeffs[1] = GradedPoly::one(cap);
        }
        s
    }

    pub fn constant(c: GradedPoly, order: usize) -> Self {
        let mut s = Self::zero(order, c.cap());
        s.coeffs[0] = c;
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<GradedPoly>, order: usize, cap: usize) -> Self {
        coeffs.resize(order + 1, GradedPoly::zero(cap));
        assert!(coeffs.iter().all(|c| c.cap() == cap), "cap mismatch");
        Series1 { coeffs, cap }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeff(&self, k: usize) -> &GradedPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[GradedPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: GradedPoly) {
        assert_eq!(c.cap(), self.cap, "cap mismatch");
        self.coeffs[k] = c;
    }

    pub fn truncate(&self, order: usize) -> Series1 {
        Series1::from_coeffs(self.coeffs.clone(), order.min(self.order()), self.cap)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GradedPoly::is_zero)
    }

    pub fn add(&self, o: &Series1) -> Series1 {
        let n = self.order().min(o.order());
        Series1::from_coeffs(
            (0..=n).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect(),
            n,
            self.cap,
        )
    }

    pub fn sub(&self, o: &Series1) -> Series1 {
        let n = self.order().min(o.order());
        Series1::from_coeffs(
            (0..=n).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect(),
            n,
            self.cap,
        )
    }

    pub fn neg(&self) -> Series1 {
        Series1::from_coeffs(
            self.coeffs.iter().map(|c| -c).collect(),
            self.order(),
            self.cap,
        )
    }

    pub fn mul(&self, o: &Series1) -> Series1 {
        let n = self.order().min(o.order());
        let mut out = vec![GradedPoly::zero(self.cap); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Series1::from_coeffs(out, n, self.cap)
    }

    pub fn scale(&self, c: &GradedPoly) -> Series1 {
        Series1::from_coeffs(
            self.coeffs.iter().map(|a| a * c).collect(),
            self.order(),
            self.cap,
        )
    }

    pub fn scale_rational(&self, c: &Rational) -> Series1 {
        Series1::from_coeffs(
            self.coeffs.iter().map(|a| a.scale(c)).collect(),
            self.order(),
            self.cap,
        )
    }

    pub fn pow(&self, e: usize) -> Series1 {
        let mut r = Series1::constant(GradedPoly::one(self.cap), self.order());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Multiplies by `x^k`; the order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Series1 {
        let mut c = vec![GradedPoly::zero(self.cap); k];
        c.extend(self.coeffs.iter().cloned());
        let n = c.len() - 1;
        Series1::from_coeffs(c, n, self.cap)
    }

    /// Divides by `x`; the constant term must vanish.
    pub fn shift_down(&self) -> Result<Series1> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("series has a nonzero constant term".into()));
        }
        if self.order() == 0 {
            return Err(Error::Domain("cannot divide an order-0 series by x".into()));
        }
        Ok(Series1::from_coeffs(
            self.coeffs[1..].to_vec(),
            self.order() - 1,
            self.cap,
        ))
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Series1 {
        let n = self.order();
        if n == 0 {
            return Series1::zero(0, self.cap);
        }
        Series1::from_coeffs(
            (1..=n)
                .map(|k| self.coeffs[k].scale(&Rational::from_integer(k.into())))
                .collect(),
            n - 1,
            self.cap,
        )
    }

    /// Antiderivative with zero constant; the order grows by one.
    pub fn integral(&self) -> Series1 {
        let mut c = vec![GradedPoly::zero(self.cap)];
        for (k, a) in self.coeffs.iter().enumerate() {
            c.push(a.scale(&Rational::new(1.into(), (k + 1).into())));
        }
        let n = c.len() - 1;
        Series1::from_coeffs(c, n, self.cap)
    }

    /// Multiplicative inverse; the constant term must be a nonzero rational.
    pub fn inverse(&self) -> Result<Series1> {
        let c0 = &self.coeffs[0];
        if !c0.is_constant() || c0.is_zero() {
            return Err(Error::Domain("constant term is not a unit".into()));
        }
        let inv0 = c0.constant_term().recip();
        let n = self.order();
        let mut b: Vec<GradedPoly> = vec![GradedPoly::constant(inv0.clone(), self.cap)];
        for m in 1..=n {
            let mut acc = GradedPoly::zero(self.cap);
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !b[m - k].is_zero() {
                    acc += &(&self.coeffs[k] * &b[m - k]);
                }
            }
            b.push(acc.scale(&-inv0.clone()));
        }
        Ok(Series1::from_coeffs(b, n, self.cap))
    }

    /// `outer(inner(x))`; `inner` must have zero constant term.
    pub fn compose(outer: &Series1, inner: &Series1) -> Result<Series1> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain(
                "inner series has a nonzero constant term".into(),
            ));
        }
        let n = outer.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut r = Series1::constant(outer.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            r = r.mul(&inner);
            r.coeffs[0] += &outer.coeffs[k];
        }
        Ok(r)
    }

    /// Compositional inverse of `x + (higher order)`.
    pub fn reversion(&self) -> Result<Series1> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("series has a nonzero constant term".into()));
        }
        let n = self.order();
        if n == 0 || self.coeffs[1] != GradedPoly::one(self.cap) {
            return Err(Error::Domain("linear coefficient must be 1".into()));
        }
        // s = x + r(x); g = x - r(g) gains one correct order per pass.
        let x = Series1::x(n, self.cap);
        let mut rest = self.clone();
        rest.coeffs[1] = GradedPoly::zero(self.cap);
        let mut g = x.clone();
        for _ in 1..n {
            g = x.sub(&Series1::compose(&rest, &g)?);
        }
        Ok(g)
    }

    /// Checks that the coefficient of `x^k` is homogeneous of weight `k + offset`
    /// (negative target weights require a zero coefficient).
    pub fn check_grading(&self, offset: i64) -> Result<()> {
        for (k, c) in self.coeffs.iter().enumerate() {
            let w = k as i64 + offset;
            let ok = if w < 0 {
                c.is_zero()
            } else {
                c.is_homogeneous_of(w as usize)
            };
            if !ok {
                return Err(Error::Invariant(format!(
                    "coefficient of x^{k} is not homogeneous of weight {w}"
                )));
            }
        }
        Ok(())
    }

    pub fn map_coeffs(&self, f: impl Fn(&GradedPoly) -> GradedPoly) -> Series1 {
        let c: Vec<GradedPoly> = self.coeffs.iter().map(f).collect();
        let cap = c.first().map(GradedPoly::cap).unwrap_or(self.cap);
        Series1::from_coeffs(c, self.order(), cap)
    }
}

impl fmt::Display for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*x^{k}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// Bivariate truncated series; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries {
    coeffs: BTreeMap<(usize, usize), GradedPoly>,
    order: usize,
    cap: usize,
}

impl BiSeries {
    pub fn zero(order: usize, cap: usize) -> Self {
        BiSeries {
            coeffs: BTreeMap::new(),
            order,
            cap,
        }
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = ((usize, usize), GradedPoly)>,
        order: usize,
        cap: usize,
    ) -> Self {
        let mut s = Self::zero(order, cap);
        for ((i, j), c) in terms {
            s.add_to(i, j, &c);
        }
        s
    }

    /// `s(x)` viewed as a series in `x, y`.
    pub fn from_x(s: &Series1) -> Self {
        Self::from_terms(
            s.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((k, 0), c.clone())),
            s.order(),
            s.cap(),
        )
    }

    /// `s(y)` viewed as a series in `x, y`.
    pub fn from_y(s: &Series1) -> Self {
        Self::from_terms(
            s.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((0, k), c.clone())),
            s.order(),
            s.cap(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeff(&self, i: usize, j: usize) -> GradedPoly {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| GradedPoly::zero(self.cap))
    }

    /// Nonzero coefficients in `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &GradedPoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_to(&mut self, i: usize, j: usize, c: &GradedPoly) {
        assert_eq!(c.cap(), self.cap, "cap mismatch");
        if i + j > self.order || c.is_zero() {
            return;
        }
        let e = self
            .coeffs
            .entry((i, j))
            .or_insert_with(|| GradedPoly::zero(c.cap()));
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn set(&mut self, i: usize, j: usize, c: GradedPoly) {
        self.coeffs.remove(&(i, j));
        self.add_to(i, j, &c);
    }

    pub fn truncate(&self, order: usize) -> BiSeries {
        let order = order.min(self.order);
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((i, j), _)| i + j <= order)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
            order,
            cap: self.cap,
        }
    }

    pub fn add(&self, o: &BiSeries) -> BiSeries {
        let mut r = self.truncate(self.order.min(o.order));
        for ((i, j), c) in &o.coeffs {
            r.add_to(*i, *j, c);
        }
        r
    }

    pub fn sub(&self, o: &BiSeries) -> BiSeries {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> BiSeries {
        BiSeries {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v)).collect(),
            order: self.order,
            cap: self.cap,
        }
    }

    pub fn mul(&self, o: &BiSeries) -> BiSeries {
        self.mul_to_order(o, self.order.min(o.order))
    }

    /// Product kept through total degree `order`. Exact when each factor's
    /// missing terms cannot reach that degree (e.g. both factors lack constants).
    pub fn mul_to_order(&self, o: &BiSeries, order: usize) -> BiSeries {
        let mut r = BiSeries::zero(order, self.cap);
        for ((i, j), a) in &self.coeffs {
            for ((k, l), b) in &o.coeffs {
                if i + j + k + l <= order {
                    r.add_to(i + k, j + l, &(a * b));
                }
            }
        }
        r
    }

    pub fn scale(&self, c: &GradedPoly) -> BiSeries {
        BiSeries::from_terms(
            self.coeffs.iter().map(|(k, v)| (*k, v * c)),
            self.order,
            self.cap,
        )
    }

    /// Exchanges `x` and `y`.
    pub fn swap(&self) -> BiSeries {
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|((i, j), v)| ((*j, *i), v.clone()))
                .collect(),
            order: self.order,
            cap: self.cap,
        }
    }

    /// `F(x, 0)`.
    pub fn at_y_zero(&self) -> Series1 {
        let mut s = Series1::zero(self.order, self.cap);
        for ((i, j), c) in &self.coeffs {
            if *j == 0 {
                s.set_coeff(*i, c.clone());
            }
        }
        s
    }

    /// `∂F/∂y` evaluated at `y = 0`, a series in `x` of order `order - 1`.
    pub fn dy_at_zero(&self) -> Series1 {
        let mut s = Series1::zero(self.order.saturating_sub(1), self.cap);
        for ((i, j), c) in &self.coeffs {
            if *j == 1 {
                s.set_coeff(*i, c.clone());
            }
        }
        s
    }

    /// `F(x, g(x))`; `g` must have zero constant term.
    pub fn substitute_y(&self, g: &Series1) -> Result<Series1> {
        if !g.coeff(0).is_zero() {
            return Err(Error::Domain(
                "substituted series has a nonzero constant term".into(),
            ));
        }
        let n = self.order.min(g.order());
        let mut powers = vec![Series1::constant(GradedPoly::one(self.cap), n)];
        for k in 1..=n {
            let next = powers[k - 1].mul(&g.truncate(n));
            powers.push(next);
        }
        let mut out = Series1::zero(n, self.cap);
        for ((i, j), c) in &self.coeffs {
            if *i > n || *j > n {
                continue;
            }
            let term = powers[*j].scale(c).shift_up(*i).truncate(n);
            out = out.add(&term);
        }
        Ok(out)
    }

    /// `outer(inner(x, y))`; `inner` must have zero constant term.
    pub fn compose(outer: &Series1, inner: &BiSeries) -> Result<BiSeries> {
        if !inner.coeff(0, 0).is_zero() {
            return Err(Error::Domain(
                "inner series has a nonzero constant term".into(),
            ));
        }
        let n = outer.order().min(inner.order);
        let inner = inner.truncate(n);
        let mut r = BiSeries::zero(n, inner.cap);
        r.add_to(0, 0, outer.coeff(n));
        for k in (0..n).rev() {
            r = r.mul(&inner);
            r.add_to(0, 0, outer.coeff(k));
        }
        Ok(r)
    }

    /// Homogeneous component of total degree `t` as `(i, coefficient of x^i y^(t-i))`.
    fn component(&self, t: usize) -> Vec<(usize, GradedPoly)> {
        (0..=t)
            .filter_map(|i| self.coeffs.get(&(i, t - i)).map(|c| (i, c.clone())))
            .collect()
    }

    /// Exact quotient `self / den`.
    ///
    /// The lowest-degree homogeneous part of `den` acts as the cancelled factor
    /// (e.g. `x - y`); its highest power of `x` must carry a nonzero rational
    /// coefficient. Every processed degree must leave zero remainder.
    pub fn divide(&self, den: &BiSeries) -> Result<BiSeries> {
        let d = (0..=den.order)
            .find(|&t| !den.component(t).is_empty())
            .ok_or_else(|| Error::Domain("division by zero series".into()))?;
        let lead = den.component(d);
        let (kmax, lc) = lead.last().cloned().expect("nonempty component");
        if !lc.is_constant() {
            return Err(Error::Domain(
                "leading coefficient of divisor is not a unit".into(),
            ));
        }
        let lc_inv = lc.constant_term().recip();
        for t in 0..d.min(self.order + 1) {
            if !self.component(t).is_empty() {
                return Err(Error::NotDivisible { degree: t });
            }
        }
        let order_q = self
            .order
            .min(den.order)
            .checked_sub(d)
            .ok_or_else(|| Error::Domain("divisor order exceeds the dividend's".into()))?;
        let mut quot = BiSeries::zero(order_q, self.cap);
        for s in 0..=order_q {
            let t = s + d;
            // Remainder component of degree t after subtracting known quotient parts.
            let mut rem: BTreeMap<usize, GradedPoly> = self.component(t).into_iter().collect();
            for sp in 0..s {
                for (qi, qc) in quot.component(sp) {
                    for (di, dc) in den.component(t - sp) {
                        let e = rem
                            .entry(qi + di)
                            .or_insert_with(|| GradedPoly::zero(self.cap));
                        *e -= &(&qc * &dc);
                    }
                }
            }
            // Long division of the homogeneous remainder by the leading form.
            for i in (0..=t).rev() {
                let r = rem
                    .get(&i)
                    .cloned()
                    .unwrap_or_else(|| GradedPoly::zero(self.cap));
                if r.is_zero() {
                    continue;
                }
                if i < kmax || (t - i) < (d - kmax) {
                    return Err(Error::NotDivisible { degree: t });
                }
                let c = r.scale(&lc_inv);
                let qi = i - kmax;
                for (li, lcoef) in &lead {
                    let e = rem
                        .entry(qi + li)
                        .or_insert_with(|| GradedPoly::zero(self.cap));
                    *e -= &(&c * lcoef);
                }
                quot.add_to(qi, s - qi, &c);
            }
        }
        Ok(quot)
    }

    /// Checks that the coefficient of `x^i y^j` is homogeneous of weight `i + j + offset`.
    pub fn check_grading(&self, offset: i64) -> Result<()> {
        for ((i, j), c) in &self.coeffs {
            let w = (i + j) as i64 + offset;
            if w < 0 || !c.is_homogeneous_of(w as usize) {
                return Err(Error::Invariant(format!(
                    "coefficient of x^{i} y^{j} is not homogeneous of weight {w}"
                )));
            }
        }
        Ok(())
    }

    pub fn map_coeffs(&self, f: impl Fn(&GradedPoly) -> GradedPoly) -> BiSeries {
        let mut r = BiSeries::zero(self.order, self.cap);
        for ((i, j), c) in &self.coeffs {
            r.add_to(*i, *j, &f(c));
        }
        r
    }
}

/// `x * s(y) - y * s(x)`.
pub fn antisymmetric_pair(s: &Series1) -> BiSeries {
    let cap = s.cap();
    let x = BiSeries::from_terms([((1, 0), GradedPoly::one(cap))], s.order() + 1, cap);
    let y = BiSeries::from_terms([((0, 1), GradedPoly::one(cap))], s.order() + 1, cap);
    let order = s.order() + 1;
    x.mul_to_order(&BiSeries::from_y(s), order)
        .sub(&y.mul_to_order(&BiSeries::from_x(s), order))
}
