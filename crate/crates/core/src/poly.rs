//! Weighted polynomials in generators `P1, P2, ...` where `Pn` has weight `n`.
//!
//! The same representation hosts every graded polynomial ring the engine
//! works with (the cobordism ring itself, the Höhn parameters `p1..p4`, the
//! target `X1, X3, X4` of the W-genus): a variable's index is its weight, and
//! only the printed symbol differs.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{to_short_string, Rational};

/// Exponent vector; entry `k` is the exponent of `P(k+1)`. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The generator `P_n` (n >= 1).
    pub fn var(n: usize) -> Self {
        assert!(n >= 1, "generator indices start at 1");
        let mut e = vec![0; n];
        e[n - 1] = 1;
        Monomial(e)
    }

    pub fn from_exponents(mut e: Vec<u32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial(e)
    }

    /// Product `P_{parts[0]} * P_{parts[1]} * ...`.
    pub fn from_parts(parts: &[usize]) -> Self {
        let max = parts.iter().copied().max().unwrap_or(0);
        let mut e = vec![0; max];
        for &p in parts {
            assert!(p >= 1, "generator indices start at 1");
            e[p - 1] += 1;
        }
        Monomial::from_exponents(e)
    }

    /// Generator indices with multiplicity, non-increasing.
    pub fn to_parts(&self) -> Vec<usize> {
        let mut parts = Vec::new();
        for (k, &e) in self.0.iter().enumerate().rev() {
            for _ in 0..e {
                parts.push(k + 1);
            }
        }
        parts
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, n: usize) -> u32 {
        self.0.get(n - 1).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &e)| (k + 1) * e as usize)
            .sum()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let e = (0..len)
            .map(|k| self.0.get(k).unwrap_or(&0) + other.0.get(k).unwrap_or(&0))
            .collect();
        Monomial(e)
    }

    fn fmt_with(&self, f: &mut impl fmt::Write, symbol: &str) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            write!(f, "{symbol}{}", k + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

// Weight ascending, then exponent vectors in descending lexicographic order
// (so P1^3 precedes P1*P2 precedes P3).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            for k in 0..len {
                let a = self.0.get(k).unwrap_or(&0);
                let b = other.0.get(k).unwrap_or(&0);
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of a weighted polynomial ring over ℚ, truncated above weight `cap`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedPoly {
    terms: BTreeMap<Monomial, Rational>,
    cap: usize,
}

impl GradedPoly {
    pub fn zero(cap: usize) -> Self {
        GradedPoly {
            terms: BTreeMap::new(),
            cap,
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(Rational::one(), cap)
    }

    pub fn constant(c: Rational, cap: usize) -> Self {
        Self::term(Monomial::one(), c, cap)
    }

    /// The generator `P_n`; zero if `n > cap`.
    pub fn var(n: usize, cap: usize) -> Self {
        Self::term(Monomial::var(n), Rational::one(), cap)
    }

    pub fn term(m: Monomial, c: Rational, cap: usize) -> Self {
        let mut p = Self::zero(cap);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>, cap: usize) -> Self {
        let mut p = Self::zero(cap);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || m.weight() > self.cap {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms of weight exactly `w`.
    pub fn homogeneous_part(&self, w: usize) -> GradedPoly {
        GradedPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight() == w)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            cap: self.cap,
        }
    }

    /// The common weight of all terms, `None` if the polynomial is zero or mixed.
    pub fn weight(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::weight);
        let w = it.next()?;
        it.all(|v| v == w).then_some(w)
    }

    /// Zero counts as homogeneous of every weight.
    pub fn is_homogeneous_of(&self, w: usize) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// Largest generator index that occurs.
    pub fn max_var(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.exponents().len())
            .max()
            .unwrap_or(0)
    }

    pub fn with_cap(&self, cap: usize) -> GradedPoly {
        GradedPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone())), cap)
    }

    pub fn scale(&self, s: &Rational) -> GradedPoly {
        if s.is_zero() {
            return GradedPoly::zero(self.cap);
        }
        GradedPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
            cap: self.cap,
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> GradedPoly {
        GradedPoly::from_terms(
            self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())),
            self.cap,
        )
    }

    fn check_cap(&self, other: &GradedPoly) -> Result<()> {
        if self.cap != other.cap {
            return Err(Error::Config(format!(
                "truncation caps differ ({} vs {})",
                self.cap, other.cap
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_cap(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_cap(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &GradedPoly) -> Result<GradedPoly> {
        self.check_cap(other)?;
        let mut r = GradedPoly::zero(self.cap);
        for (ma, ca) in &self.terms {
            let wa = ma.weight();
            for (mb, cb) in &other.terms {
                if wa + mb.weight() > self.cap {
                    continue;
                }
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(r)
    }

    pub fn pow(&self, e: u32) -> GradedPoly {
        let mut r = GradedPoly::one(self.cap);
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Replaces `P_n` by `image(n)` wherever it returns `Some`; other generators are kept.
    /// Images must share this polynomial's cap.
    pub fn substitute<'a>(&self, image: impl Fn(usize) -> Option<&'a GradedPoly>) -> GradedPoly {
        let mut out = GradedPoly::zero(self.cap);
        let mut powers: BTreeMap<(usize, u32), GradedPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut acc = GradedPoly::constant(c.clone(), self.cap);
            for (k, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let n = k + 1;
                let factor = match image(n) {
                    Some(img) => powers.entry((n, e)).or_insert_with(|| img.pow(e)).clone(),
                    None => GradedPoly::term(
                        Monomial::from_exponents({
                            let mut v = vec![0; n];
                            v[n - 1] = e;
                            v
                        }),
                        Rational::one(),
                        self.cap,
                    ),
                };
                acc = &acc * &factor;
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        out
    }

    /// Writes the polynomial as `a * P_n + rest` where `rest` does not involve `P_n`.
    /// Fails if `P_n` occurs in any other way.
    pub fn split_linear(&self, n: usize) -> Result<(Rational, GradedPoly)> {
        let target = Monomial::var(n);
        let mut rest = GradedPoly::zero(self.cap);
        let mut a = Rational::zero();
        for (m, c) in &self.terms {
            if *m == target {
                a = c.clone();
            } else if m.exponent(n) > 0 {
                return Err(Error::Domain(format!("P{n} occurs nonlinearly")));
            } else {
                rest.add_term(m.clone(), c.clone());
            }
        }
        Ok((a, rest))
    }

    /// Canonical text with a chosen generator symbol, e.g. `-5/2*P1^3+4*P1*P2-3/2*P3`.
    pub fn display_with(&self, symbol: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            let a = c.abs();
            if m.is_one() {
                s.push_str(&to_short_string(&a));
                continue;
            }
            if !a.is_one() {
                s.push_str(&to_short_string(&a));
                s.push('*');
            }
            m.fmt_with(&mut s, symbol).expect("writing to a String");
        }
        s
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("P"))
    }
}

impl Serialize for GradedPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// Operator impls panic on cap mismatch; use the `try_*` methods at API boundaries.

impl<'a> Add<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.try_add(rhs).expect("cap mismatch")
    }
}

impl<'a> Sub<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.try_sub(rhs).expect("cap mismatch")
    }
}

impl<'a> Mul<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.try_mul(rhs).expect("cap mismatch")
    }
}

impl Add for GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: GradedPoly) -> GradedPoly {
        &self + &rhs
    }
}

impl Sub for GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: GradedPoly) -> GradedPoly {
        &self - &rhs
    }
}

impl Mul for GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: GradedPoly) -> GradedPoly {
        &self * &rhs
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        GradedPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            cap: self.cap,
        }
    }
}

impl Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        -&self
    }
}

impl AddAssign<&GradedPoly> for GradedPoly {
    fn add_assign(&mut self, rhs: &GradedPoly) {
        assert_eq!(self.cap, rhs.cap, "cap mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&GradedPoly> for GradedPoly {
    fn sub_assign(&mut self, rhs: &GradedPoly) {
        assert_eq!(self.cap, rhs.cap, "cap mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}
