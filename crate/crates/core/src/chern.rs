//! Chern numbers of rational cobordism classes.
//!
//! A class of weight `n` is a rational combination of products
//! `CP_{n1} x ... x CP_{nr}` (the monomials `P_{n1}...P_{nr}`). Chern numbers
//! of a product are computed in `Z[t_1..t_r]/(t_i^{n_i+1})` from the total
//! Chern class `prod (1 + t_i)^{n_i+1}` and read off at the top monomial, then
//! extended linearly. Per-degree tables are built once for every degree up to
//! the cap.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partition::{partitions, Partition};
use crate::poly::{GradedPoly, Monomial};
use crate::rational::{from_i128, to_fraction_string, Rational};

/// A partition `ω` indexing the Chern number `c_ω`.
pub type ChernMonomial = Partition;

/// A homogeneous element of the rationalized cobordism ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CobordismClass {
    poly: GradedPoly,
    weight: usize,
}

impl CobordismClass {
    /// Fails unless `poly` is homogeneous of `weight` within the cap.
    pub fn with_weight(poly: GradedPoly, weight: usize) -> Result<Self> {
        if weight > poly.cap() {
            return Err(Error::Range(format!(
                "weight {weight} exceeds cap {}",
                poly.cap()
            )));
        }
        if !poly.is_homogeneous_of(weight) {
            return Err(Error::Domain(format!(
                "{poly} is not homogeneous of weight {weight}"
            )));
        }
        Ok(CobordismClass { poly, weight })
    }

    /// Weight is inferred; the zero polynomial is rejected (use [`CobordismClass::zero`]).
    pub fn new(poly: GradedPoly) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::Domain(
                "the zero polynomial has no weight; use zero(weight)".into(),
            ));
        }
        let w = poly
            .weight()
            .ok_or_else(|| Error::Domain(format!("{poly} is not homogeneous")))?;
        Self::with_weight(poly, w)
    }

    pub fn zero(weight: usize, cap: usize) -> Self {
        CobordismClass {
            poly: GradedPoly::zero(cap),
            weight,
        }
    }

    pub fn poly(&self) -> &GradedPoly {
        &self.poly
    }

    pub fn into_poly(self) -> GradedPoly {
        self.poly
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn cap(&self) -> usize {
        self.poly.cap()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CobordismClass {
            poly: self.poly.scale(c),
            weight: self.weight,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn add(&self, o: &CobordismClass) -> Result<Self> {
        if self.weight != o.weight {
            return Err(Error::Domain(format!(
                "cannot add classes of weights {} and {}",
                self.weight, o.weight
            )));
        }
        Ok(CobordismClass {
            poly: self.poly.try_add(&o.poly)?,
            weight: self.weight,
        })
    }

    pub fn sub(&self, o: &CobordismClass) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Ring product; fails if the weights add past the cap.
    pub fn mul(&self, o: &CobordismClass) -> Result<Self> {
        let w = self.weight + o.weight;
        if w > self.cap() {
            return Err(Error::Range(format!(
                "product weight {w} exceeds cap {}",
                self.cap()
            )));
        }
        Ok(CobordismClass {
            poly: self.poly.try_mul(&o.poly)?,
            weight: w,
        })
    }
}

impl std::fmt::Display for CobordismClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.poly.fmt(f)
    }
}

/// All Chern numbers of one degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernVector {
    pub degree: usize,
    pub entries: BTreeMap<ChernMonomial, Rational>,
}

impl ChernVector {
    pub fn get(&self, omega: &ChernMonomial) -> Rational {
        self.entries
            .get(omega)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

#[derive(Serialize)]
struct ChernVectorJson {
    degree: usize,
    numbers: BTreeMap<String, String>,
}

impl Serialize for ChernVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChernVectorJson {
            degree: self.degree,
            numbers: self
                .entries
                .iter()
                .map(|(k, v)| (k.key(), to_fraction_string(v)))
                .collect(),
        }
        .serialize(s)
    }
}

// ---------------------------------------------------------------------------
// Truncated-ring arithmetic for a single product of projective spaces.

const BITS: u32 = 5;
const MASK: u64 = (1 << BITS) - 1;

/// Homogeneous element: packed exponent vector -> integer coefficient.
type Hom = HashMap<u64, i128>;

struct TruncatedRing {
    bounds: Vec<u64>,
}

impl TruncatedRing {
    fn unpack(&self, k: u64, i: usize) -> u64 {
        (k >> (BITS * i as u32)) & MASK
    }

    fn top(&self) -> u64 {
        self.bounds
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &b)| acc | (b << (BITS * i as u32)))
    }

    fn mul(&self, a: &Hom, b: &Hom) -> Hom {
        let mut out = Hom::new();
        for (&ka, &ca) in a {
            'inner: for (&kb, &cb) in b {
                let k = ka + kb;
                for i in 0..self.bounds.len() {
                    if self.unpack(k, i) > self.bounds[i] {
                        continue 'inner;
                    }
                }
                *out.entry(k).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Coefficient of the top monomial in `a * b`.
    fn dot_top(&self, a: &Hom, b: &Hom) -> i128 {
        let top = self.top();
        a.iter()
            .filter_map(|(&k, &c)| {
                (0..self.bounds.len())
                    .all(|i| self.unpack(k, i) <= self.bounds[i])
                    .then(|| b.get(&(top - k)).map(|&d| c * d))
                    .flatten()
            })
            .sum()
    }

    /// Graded product truncated at degree `n`.
    fn mul_graded(&self, a: &[Hom], b: &[Hom], n: usize) -> Vec<Hom> {
        let mut out = vec![Hom::new(); n + 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if i + j > n || x.is_empty() || y.is_empty() {
                    continue;
                }
                for (k, v) in self.mul(x, y) {
                    *out[i + j].entry(k).or_insert(0) += v;
                }
            }
        }
        for h in &mut out {
            h.retain(|_, v| *v != 0);
        }
        out
    }
}

fn total_chern_class(ring: &TruncatedRing, n: usize) -> Vec<Hom> {
    let mut c = vec![Hom::new(); n + 1];
    c[0].insert(0, 1);
    for (i, &b) in ring.bounds.iter().enumerate() {
        let mut factor = vec![Hom::new(); n + 1];
        let mut binom: i128 = 1;
        for e in 0..=b {
            factor[e as usize].insert(e << (BITS * i as u32), binom);
            binom = binom * (b as i128 + 1 - e as i128) / (e as i128 + 1);
        }
        c = ring.mul_graded(&c, &factor, n);
    }
    c
}

/// Evaluates products of graded pieces over every partition of `m`.
///
/// Without a `finisher`, the last factor of each product is paired with the
/// top monomial directly; with one, all parts are multiplied and the result
/// is paired with the finisher.
fn numbers_over_partitions(
    ring: &TruncatedRing,
    classes: &[Hom],
    m: usize,
    finisher: Option<&Hom>,
) -> BTreeMap<Partition, i128> {
    let mut out = BTreeMap::new();
    let mut unit = Hom::new();
    unit.insert(0, 1);
    let mut parts = Vec::new();
    dfs(ring, classes, finisher, &unit, m, m, &mut parts, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    ring: &TruncatedRing,
    classes: &[Hom],
    finisher: Option<&Hom>,
    prefix: &Hom,
    remaining: usize,
    max_part: usize,
    parts: &mut Vec<usize>,
    out: &mut BTreeMap<Partition, i128>,
) {
    if remaining == 0 {
        if let Some(f) = finisher {
            out.insert(
                Partition::new(parts.clone()).unwrap(),
                ring.dot_top(prefix, f),
            );
        } else if parts.is_empty() {
            out.insert(
                Partition::empty(),
                prefix.get(&ring.top()).copied().unwrap_or(0),
            );
        }
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        parts.push(p);
        if p == remaining && finisher.is_none() {
            out.insert(
                Partition::new(parts.clone()).unwrap(),
                ring.dot_top(prefix, &classes[p]),
            );
        } else {
            let next = ring.mul(prefix, &classes[p]);
            dfs(ring, classes, finisher, &next, remaining - p, p, parts, out);
        }
        parts.pop();
    }
}

/// Chern numbers `c_ω` (ω ⊢ n) of the product indexed by `lambda` ⊢ n.
fn product_chern_numbers(lambda: &Partition) -> BTreeMap<Partition, i128> {
    let n = lambda.degree();
    let ring = TruncatedRing {
        bounds: lambda.parts().iter().map(|&p| p as u64).collect(),
    };
    let c = total_chern_class(&ring, n);
    numbers_over_partitions(&ring, &c, n, None)
}

/// `c_ω` (ω ⊢ n-1) of the submanifold dual to `c_1` in the product `lambda` ⊢ n:
/// `<[c / (1 + c_1)]_ω · c_1, [M]>`.
fn product_boundary_numbers(lambda: &Partition) -> BTreeMap<Partition, i128> {
    let n = lambda.degree();
    let ring = TruncatedRing {
        bounds: lambda.parts().iter().map(|&p| p as u64).collect(),
    };
    let c = total_chern_class(&ring, n);
    let c1 = c[1].clone();
    let mut neg_c1 = vec![Hom::new(); n + 1];
    neg_c1[1] = c1.iter().map(|(&k, &v)| (k, -v)).collect();
    let mut inv = vec![Hom::new(); n + 1];
    inv[0].insert(0, 1);
    let mut power = inv.clone();
    for _ in 1..=n {
        power = ring.mul_graded(&power, &neg_c1, n);
        for (d, h) in power.iter().enumerate() {
            for (&k, &v) in h {
                *inv[d].entry(k).or_insert(0) += v;
            }
        }
    }
    let normal = ring.mul_graded(&c, &inv, n);
    numbers_over_partitions(&ring, &normal, n - 1, Some(&c1))
}

/// Power sum `s_n` written in elementary symmetric functions, via Newton's identities.
pub fn newton_power_sum(n: usize) -> BTreeMap<Partition, BigInt> {
    let mut s: Vec<BTreeMap<Partition, BigInt>> = vec![BTreeMap::new()];
    for k in 1..=n {
        let mut sk: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for i in 1..k {
            let sign = if (i - 1) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            for (p, c) in &s[k - i] {
                let mut parts = p.parts().to_vec();
                parts.push(i);
                let e = sk
                    .entry(Partition::new(parts).unwrap())
                    .or_insert_with(BigInt::zero);
                *e += &sign * c;
            }
        }
        let sign: BigInt = if (k - 1) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        *sk.entry(Partition::new(vec![k]).unwrap())
            .or_insert_with(BigInt::zero) += sign * BigInt::from(k);
        sk.retain(|_, v| !v.is_zero());
        s.push(sk);
    }
    s.pop().unwrap()
}

/// Chern-number tables for one degree.
#[derive(Debug)]
pub struct DegreeTable {
    pub degree: usize,
    /// Shared layout for Chern monomials (rows) and product monomials (columns).
    pub partitions: Vec<Partition>,
    /// `numbers[(ω, λ)] = c_ω[P_λ]`.
    pub numbers: Matrix,
    inverse: Matrix,
    /// `s_n[P_λ]` per column.
    pub s_row: Vec<Rational>,
    /// `boundary[(ω, λ)] = c_ω[∂P_λ]` for ω ⊢ degree-1.
    pub boundary: Matrix,
}

/// Chern-number machinery for all degrees up to a cap.
#[derive(Debug)]
pub struct ChernEngine {
    cap: usize,
    tables: Vec<DegreeTable>,
}

impl ChernEngine {
    pub fn new(cap: usize) -> Result<Self> {
        let mut tables = Vec::with_capacity(cap + 1);
        for n in 0..=cap {
            let parts = partitions(n);
            let size = parts.len();
            let mut numbers = Matrix::zeros(size, size);
            for (col, lambda) in parts.iter().enumerate() {
                for (omega, v) in product_chern_numbers(lambda) {
                    let row = parts.binary_search(&omega).expect("partition layout");
                    numbers[(row, col)] = from_i128(v);
                }
            }
            let inverse = numbers.inverse().ok_or_else(|| {
                Error::Internal(format!("Chern-number pairing is singular in degree {n}"))
            })?;
            let newton = newton_power_sum(n);
            let s_row = (0..size)
                .map(|col| {
                    if n == 0 {
                        return Rational::zero();
                    }
                    newton.iter().fold(Rational::zero(), |acc, (omega, c)| {
                        let row = parts.binary_search(omega).expect("partition layout");
                        acc + Rational::from_integer(c.clone()) * &numbers[(row, col)]
                    })
                })
                .collect();
            let boundary = if n == 0 {
                Matrix::zeros(0, size)
            } else {
                let lower = partitions(n - 1);
                let mut b = Matrix::zeros(lower.len(), size);
                for (col, lambda) in parts.iter().enumerate() {
                    for (omega, v) in product_boundary_numbers(lambda) {
                        let row = lower.binary_search(&omega).expect("partition layout");
                        b[(row, col)] = from_i128(v);
                    }
                }
                b
            };
            tables.push(DegreeTable {
                degree: n,
                partitions: parts,
                numbers,
                inverse,
                s_row,
                boundary,
            });
        }
        Ok(ChernEngine { cap, tables })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn table(&self, n: usize) -> Result<&DegreeTable> {
        self.tables
            .get(n)
            .ok_or_else(|| Error::Range(format!("degree {n} exceeds cap {}", self.cap)))
    }

    /// Coordinates of a class in the product-monomial basis of its degree.
    pub fn coordinates(&self, z: &CobordismClass) -> Result<Vec<Rational>> {
        let t = self.table(z.weight())?;
        Ok(t.partitions
            .iter()
            .map(|lambda| z.poly().coeff(&Monomial::from_parts(lambda.parts())))
            .collect())
    }

    /// Inverse of [`ChernEngine::coordinates`].
    pub fn from_coordinates(&self, n: usize, coords: &[Rational]) -> Result<CobordismClass> {
        let t = self.table(n)?;
        let poly = GradedPoly::from_terms(
            t.partitions
                .iter()
                .zip(coords)
                .map(|(lambda, c)| (Monomial::from_parts(lambda.parts()), c.clone())),
            self.cap,
        );
        CobordismClass::with_weight(poly, n)
    }

    pub fn chern_vector(&self, z: &CobordismClass) -> Result<ChernVector> {
        let t = self.table(z.weight())?;
        let v = t.numbers.mul_vec(&self.coordinates(z)?);
        Ok(ChernVector {
            degree: z.weight(),
            entries: t.partitions.iter().cloned().zip(v).collect(),
        })
    }

    pub fn chern_number(&self, z: &CobordismClass, omega: &ChernMonomial) -> Result<Rational> {
        if omega.degree() != z.weight() {
            return Err(Error::Domain(format!(
                "Chern monomial {omega} has degree {} but the class has weight {}",
                omega.degree(),
                z.weight()
            )));
        }
        let t = self.table(z.weight())?;
        let row = t
            .partitions
            .binary_search(omega)
            .map_err(|_| Error::Internal("partition layout".into()))?;
        let coords = self.coordinates(z)?;
        Ok(t.numbers
            .row(row)
            .iter()
            .zip(&coords)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// The characteristic number `s_n`.
    pub fn s_number(&self, z: &CobordismClass) -> Result<Rational> {
        let t = self.table(z.weight())?;
        let coords = self.coordinates(z)?;
        Ok(t.s_row
            .iter()
            .zip(&coords)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn class_from_chern(&self, v: &ChernVector) -> Result<CobordismClass> {
        let t = self.table(v.degree)?;
        if v.entries
            .keys()
            .any(|k| t.partitions.binary_search(k).is_err())
        {
            return Err(Error::Domain(
                "Chern vector has entries of the wrong degree".into(),
            ));
        }
        let rhs: Vec<Rational> = t.partitions.iter().map(|p| v.get(p)).collect();
        let coords = t.inverse.mul_vec(&rhs);
        self.from_coordinates(v.degree, &coords)
    }

    /// The class of the submanifold dual to `c_1`.
    pub fn boundary(&self, z: &CobordismClass) -> Result<CobordismClass> {
        let n = z.weight();
        if n == 0 {
            return Err(Error::Domain("boundary of a weight-0 class".into()));
        }
        let t = self.table(n)?;
        let numbers = t.boundary.mul_vec(&self.coordinates(z)?);
        let lower = self.table(n - 1)?;
        let v = ChernVector {
            degree: n - 1,
            entries: lower.partitions.iter().cloned().zip(numbers).collect(),
        };
        self.class_from_chern(&v)
    }

    fn vanishes_on(&self, z: &CobordismClass, min_ones: usize) -> Result<bool> {
        let v = self.chern_vector(z)?;
        Ok(v.entries
            .iter()
            .filter(|(omega, _)| omega.count_of(1) >= min_ones)
            .all(|(_, c)| c.is_zero()))
    }

    /// Every Chern number involving `c_1^2` vanishes.
    pub fn is_w_class(&self, z: &CobordismClass) -> Result<bool> {
        self.vanishes_on(z, 2)
    }

    /// Every Chern number involving `c_1` vanishes.
    pub fn is_su_class(&self, z: &CobordismClass) -> Result<bool> {
        self.vanishes_on(z, 1)
    }

    fn constrained_basis(&self, n: usize, min_ones: usize) -> Result<Vec<CobordismClass>> {
        let t = self.table(n)?;
        let rows: Vec<Vec<Rational>> = t
            .partitions
            .iter()
            .enumerate()
            .filter(|(_, omega)| omega.count_of(1) >= min_ones)
            .map(|(i, _)| t.numbers.row(i).to_vec())
            .collect();
        let size = t.partitions.len();
        let basis = if rows.is_empty() {
            (0..size)
                .map(|i| {
                    let mut v = vec![Rational::zero(); size];
                    v[i] = Rational::one();
                    v
                })
                .collect()
        } else {
            Matrix::from_rows(rows, size).nullspace()
        };
        basis.iter().map(|v| self.from_coordinates(n, v)).collect()
    }

    /// Basis of `W` in degree `n`: solutions of the `c_1^2` constraints.
    pub fn w_basis(&self, n: usize) -> Result<Vec<CobordismClass>> {
        self.constrained_basis(n, 2)
    }

    /// Basis of the SU subspace in degree `n`.
    pub fn su_basis(&self, n: usize) -> Result<Vec<CobordismClass>> {
        self.constrained_basis(n, 1)
    }

    /// `a * b = ab + 2 [V] ∂a ∂b` on W classes.
    pub fn star_product(
        &self,
        v_class: &CobordismClass,
        a: &CobordismClass,
        b: &CobordismClass,
    ) -> Result<CobordismClass> {
        for (name, z) in [("left", a), ("right", b)] {
            if !self.is_w_class(z)? {
                return Err(Error::Domain(format!("{name} factor {z} is not in W")));
            }
        }
        let mut out = a.mul(b)?;
        if a.weight() > 0 && b.weight() > 0 {
            let da = self.boundary(a)?;
            let db = self.boundary(b)?;
            let corr = v_class
                .mul(&da)?
                .mul(&db)?
                .scale(&Rational::from_integer(2.into()));
            out = out.add(&corr)?;
        }
        if !self.is_w_class(&out)? {
            return Err(Error::Invariant(format!("star product {a} * {b} left W")));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partition_count;
    use crate::rational::{q, qf};

    fn engine() -> ChernEngine {
        ChernEngine::new(8).unwrap()
    }

    fn class(parts_coeffs: &[(&[usize], Rational)]) -> CobordismClass {
        CobordismClass::new(GradedPoly::from_terms(
            parts_coeffs
                .iter()
                .map(|(p, c)| (Monomial::from_parts(p), c.clone())),
            8,
        ))
        .unwrap()
    }

    fn om(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn degree_two_numbers() {
        let e = engine();
        let p11 = class(&[(&[1, 1], q(1))]);
        let p2 = class(&[(&[2], q(1))]);
        assert_eq!(e.chern_number(&p11, &om(&[1, 1])).unwrap(), q(8));
        assert_eq!(e.chern_number(&p2, &om(&[1, 1])).unwrap(), q(9));
        assert_eq!(e.chern_number(&p11, &om(&[2])).unwrap(), q(4));
        assert_eq!(e.chern_number(&p2, &om(&[2])).unwrap(), q(3));
    }

    #[test]
    fn degree_mismatch_is_domain_error() {
        let e = engine();
        let p2 = class(&[(&[2], q(1))]);
        assert!(matches!(
            e.chern_number(&p2, &om(&[1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn s_numbers_of_projective_spaces_and_products() {
        let e = engine();
        for n in 1..=8 {
            let pn = class(&[(&[n], q(1))]);
            assert_eq!(e.s_number(&pn).unwrap(), q(n as i64 + 1));
            for lambda in partitions(n).iter().filter(|p| p.len() >= 2) {
                let z = class(&[(lambda.parts(), q(1))]);
                assert_eq!(e.s_number(&z).unwrap(), q(0), "{lambda}");
            }
        }
        let y2 = class(&[(&[2], q(1)), (&[1, 1], qf(-9, 8))]);
        assert_eq!(e.s_number(&y2).unwrap(), q(3));
    }

    #[test]
    fn newton_low_degrees() {
        // s_2 = e1^2 - 2 e2, s_3 = e1^3 - 3 e1 e2 + 3 e3
        let s2 = newton_power_sum(2);
        assert_eq!(s2[&om(&[1, 1])], BigInt::from(1));
        assert_eq!(s2[&om(&[2])], BigInt::from(-2));
        let s3 = newton_power_sum(3);
        assert_eq!(s3[&om(&[1, 1, 1])], BigInt::from(1));
        assert_eq!(s3[&om(&[2, 1])], BigInt::from(-3));
        assert_eq!(s3[&om(&[3])], BigInt::from(3));
    }

    #[test]
    fn boundary_examples() {
        let e = engine();
        let p1 = class(&[(&[1], q(1))]);
        let p2 = class(&[(&[2], q(1))]);
        assert_eq!(
            e.boundary(&p1).unwrap().poly(),
            &GradedPoly::constant(q(2), 8)
        );
        assert!(e.boundary(&p2).unwrap().is_zero());
        let z = CobordismClass::zero(0, 8);
        assert!(matches!(e.boundary(&z), Err(Error::Domain(_))));
    }

    #[test]
    fn chern_round_trip_zero_and_p2() {
        let e = engine();
        let p2 = class(&[(&[2], q(1))]);
        let v = e.chern_vector(&p2).unwrap();
        assert_eq!(e.class_from_chern(&v).unwrap(), p2);
        let zero = ChernVector {
            degree: 3,
            entries: BTreeMap::new(),
        };
        assert!(e.class_from_chern(&zero).unwrap().is_zero());
    }

    #[test]
    fn membership_examples() {
        let e = engine();
        let y2 = class(&[(&[2], q(1)), (&[1, 1], qf(-9, 8))]);
        assert!(e.is_w_class(&y2).unwrap());
        assert!(e.is_su_class(&y2).unwrap());
        let p2 = class(&[(&[2], q(1))]);
        assert!(!e.is_w_class(&p2).unwrap());
    }

    #[test]
    fn w_dimensions() {
        let e = engine();
        assert_eq!(e.w_basis(1).unwrap().len(), 1);
        for n in 2..=8 {
            assert_eq!(
                e.w_basis(n).unwrap().len(),
                partition_count(n) - partition_count(n - 2),
                "degree {n}"
            );
        }
    }
}
