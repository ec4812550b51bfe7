//! Homogeneous ideals of the rationalized cobordism ring, one degree at a time.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fgl::FormalGroupLaw;
use crate::linalg::rank_fraction_free;
use crate::partition::{free_ring_dims, partition_count, partitions};
use crate::poly::{GradedPoly, Monomial};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    name: String,
    generators: Vec<GradedPoly>,
    cap: usize,
}

impl IdealSpec {
    /// Generators must be nonzero and homogeneous of weight at most `cap`.
    pub fn new(name: &str, generators: Vec<GradedPoly>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.cap() != cap {
                return Err(Error::Config(format!("generator {g} has cap {}", g.cap())));
            }
            if g.is_zero() || g.weight().is_none() {
                return Err(Error::Domain(format!(
                    "generator {g} of {name} is zero or inhomogeneous"
                )));
            }
        }
        Ok(IdealSpec {
            name: name.to_string(),
            generators,
            cap,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[GradedPoly] {
        &self.generators
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn weights(&self) -> Vec<usize> {
        self.generators
            .iter()
            .filter_map(GradedPoly::weight)
            .collect()
    }
}

/// `{m·g : weight(m·g) = n}` for homogeneous generators `g` and monomials `m`.
pub fn degree_span(generators: &[GradedPoly], n: usize, cap: usize) -> Vec<GradedPoly> {
    let mut out = Vec::new();
    for g in generators {
        let Some(w) = g.weight() else { continue };
        if w > n || g.is_zero() {
            continue;
        }
        for lambda in partitions(n - w) {
            out.push(
                g.with_cap(cap)
                    .mul_monomial(&Monomial::from_parts(lambda.parts())),
            );
        }
    }
    out
}

/// Coefficients of a weight-`n` polynomial in the lex-ordered product basis.
pub fn coordinates(p: &GradedPoly, n: usize) -> Vec<Rational> {
    partitions(n)
        .iter()
        .map(|l| p.coeff(&Monomial::from_parts(l.parts())))
        .collect()
}

fn span_rank(generators: &[GradedPoly], n: usize, cap: usize, extra: &[&GradedPoly]) -> usize {
    let mut rows: Vec<Vec<Rational>> = degree_span(generators, n, cap)
        .iter()
        .map(|p| coordinates(p, n))
        .collect();
    rows.extend(extra.iter().map(|p| coordinates(p, n)));
    rank_fraction_free(&rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedRow {
    pub degree: usize,
    pub ideal_dim: usize,
    pub ambient_dim: usize,
    pub quotient_dim: usize,
    pub expected: Option<usize>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedReport {
    pub name: String,
    pub rows: Vec<GradedRow>,
    pub first_failing_degree: Option<usize>,
    pub pass: bool,
}

impl GradedReport {
    fn from_rows(name: &str, rows: Vec<GradedRow>) -> Self {
        let first_failing_degree = rows.iter().find(|r| !r.pass).map(|r| r.degree);
        GradedReport {
            name: name.to_string(),
            rows,
            first_failing_degree,
            pass: first_failing_degree.is_none(),
        }
    }
}

fn check_cap(spec: &IdealSpec, n: usize) -> Result<()> {
    if n > spec.cap {
        return Err(Error::Range(format!("degree {n} exceeds cap {}", spec.cap)));
    }
    Ok(())
}

/// Dimensions of the degree-`n` piece of the ideal and of the quotient.
pub fn ideal_degree_basis(spec: &IdealSpec, n: usize) -> Result<GradedRow> {
    check_cap(spec, n)?;
    let ideal_dim = span_rank(&spec.generators, n, spec.cap, &[]);
    let ambient_dim = partition_count(n);
    Ok(GradedRow {
        degree: n,
        ideal_dim,
        ambient_dim,
        quotient_dim: ambient_dim - ideal_dim,
        expected: None,
        pass: true,
    })
}

/// Per-degree dimensions through the cap, compared with `expected` quotient
/// dimensions when given.
pub fn graded_report(spec: &IdealSpec, expected: Option<&[usize]>) -> Result<GradedReport> {
    let rows = (0..=spec.cap)
        .map(|n| {
            let mut row = ideal_degree_basis(spec, n)?;
            row.expected = expected.and_then(|e| e.get(n).copied());
            row.pass = row.expected.is_none_or(|e| e == row.quotient_dim);
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedReport::from_rows(&spec.name, rows))
}

/// Whether a homogeneous polynomial lies in the ideal.
pub fn ideal_member(spec: &IdealSpec, z: &GradedPoly) -> Result<bool> {
    if z.is_zero() {
        return Ok(true);
    }
    let n = z
        .weight()
        .ok_or_else(|| Error::Domain(format!("{z} is not homogeneous")))?;
    check_cap(spec, n)?;
    let base = span_rank(&spec.generators, n, spec.cap, &[]);
    Ok(span_rank(&spec.generators, n, spec.cap, &[z]) == base)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityRow {
    pub degree: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_sum: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub a: String,
    pub b: String,
    pub rows: Vec<EqualityRow>,
    pub a_generators_in_b: bool,
    pub b_generators_in_a: bool,
    pub first_failing_degree: Option<usize>,
    pub pass: bool,
}

/// Degree pieces agree when both have the dimension of their sum.
pub fn ideals_equal(a: &IdealSpec, b: &IdealSpec) -> Result<EqualityReport> {
    if a.cap != b.cap {
        return Err(Error::Config("ideals have different caps".into()));
    }
    let cap = a.cap;
    let mut both = a.generators.clone();
    both.extend(b.generators.iter().cloned());
    let rows: Vec<EqualityRow> = (0..=cap)
        .map(|n| {
            let dim_a = span_rank(&a.generators, n, cap, &[]);
            let dim_b = span_rank(&b.generators, n, cap, &[]);
            let dim_sum = span_rank(&both, n, cap, &[]);
            EqualityRow {
                degree: n,
                dim_a,
                dim_b,
                dim_sum,
                pass: dim_a == dim_sum && dim_b == dim_sum,
            }
        })
        .collect();
    let all_in = |gens: &[GradedPoly], spec: &IdealSpec| -> Result<bool> {
        for g in gens {
            if !ideal_member(spec, g)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let a_generators_in_b = all_in(&a.generators, b)?;
    let b_generators_in_a = all_in(&b.generators, a)?;
    let first_failing_degree = rows.iter().find(|r| !r.pass).map(|r| r.degree);
    Ok(EqualityReport {
        a: a.name.clone(),
        b: b.name.clone(),
        pass: first_failing_degree.is_none() && a_generators_in_b && b_generators_in_a,
        rows,
        a_generators_in_b,
        b_generators_in_a,
        first_failing_degree,
    })
}

/// Coefficients of `Π_{i<=cap} 1/(1-t^i) · Π_j (1 - t^{d_j})` through `t^cap`.
pub fn complete_intersection_dims(weights: &[usize], cap: usize) -> Vec<i64> {
    let all: Vec<usize> = (1..=cap).collect();
    let mut series: Vec<i64> = free_ring_dims(&all, cap)
        .into_iter()
        .map(|d| d as i64)
        .collect();
    for &d in weights {
        if d == 0 {
            return vec![0; cap + 1];
        }
        for n in (d..=cap).rev() {
            series[n] -= series[n - d];
        }
    }
    series
}

/// Quotient dimensions of the ideal generated by `seq` against the
/// complete-intersection prediction; equality through the cap certifies that
/// `seq` has no Koszul defect in those degrees.
pub fn regularity_check(name: &str, seq: &[GradedPoly], cap: usize) -> Result<GradedReport> {
    let spec = IdealSpec::new(name, seq.to_vec(), cap)?;
    let predicted = complete_intersection_dims(&spec.weights(), cap);
    let rows = (0..=cap)
        .map(|n| {
            let mut row = ideal_degree_basis(&spec, n)?;
            let e = predicted[n];
            row.expected = usize::try_from(e).ok();
            row.pass = e == row.quotient_dim as i64;
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedReport::from_rows(name, rows))
}

/// `I_Ab = (α_ij : i, j >= 2)` as far as the law's order and the cap allow.
pub fn abel_ideal(fgl: &FormalGroupLaw) -> Result<IdealSpec> {
    let cap = fgl.cap();
    let mut gens = Vec::new();
    for t in 4..=fgl.order().min(cap + 1) {
        for i in 2..=t / 2 {
            let a = fgl.coeff(i, t - i)?;
            if !a.is_zero() {
                gens.push(a);
            }
        }
    }
    IdealSpec::new("I_Ab", gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgl::universal_fgl;
    use crate::rational::{q, qf};

    fn p(n: usize) -> GradedPoly {
        GradedPoly::var(n, 8)
    }

    #[test]
    fn principal_ideals() {
        let i = IdealSpec::new("(P1)", vec![p(1)], 8).unwrap();
        let r = ideal_degree_basis(&i, 2).unwrap();
        assert_eq!((r.ideal_dim, r.ambient_dim, r.quotient_dim), (1, 2, 1));
        let y2 = p(2) - p(1).pow(2).scale(&qf(9, 8));
        let j = IdealSpec::new("(y2)", vec![y2.clone()], 8).unwrap();
        assert_eq!(ideal_degree_basis(&j, 2).unwrap().ideal_dim, 1);
        assert!(ideal_member(&j, &(&y2 * &p(1))).unwrap());
        assert!(!ideal_member(&j, &p(2)).unwrap());
    }

    #[test]
    fn abel_ideal_low_degrees() {
        let f = universal_fgl(8).unwrap();
        let i = abel_ideal(&f).unwrap();
        assert_eq!(ideal_degree_basis(&i, 3).unwrap().ideal_dim, 1);
        assert_eq!(ideal_degree_basis(&i, 2).unwrap().ideal_dim, 0);
        assert!(!ideal_member(&i, &p(1)).unwrap());
    }

    #[test]
    fn equality_verdicts() {
        let a = IdealSpec::new("(P1)", vec![p(1)], 8).unwrap();
        let b = IdealSpec::new("(P1^2)", vec![p(1).pow(2)], 8).unwrap();
        let r = ideals_equal(&a, &b).unwrap();
        assert!(!r.pass);
        assert_eq!(r.first_failing_degree, Some(1));
        assert!(!r.a_generators_in_b && r.b_generators_in_a);
        assert!(ideals_equal(&a, &a).unwrap().pass);
        let c = IdealSpec::new("(2P1)", vec![p(1).scale(&q(2))], 8).unwrap();
        assert!(ideals_equal(&a, &c).unwrap().pass);
    }

    #[test]
    fn regular_and_irregular_sequences() {
        let r = regularity_check("P1,P2", &[p(1), p(2)], 8).unwrap();
        assert!(r.pass);
        let bad = regularity_check("P1,P1^2", &[p(1), p(1).pow(2)], 8).unwrap();
        assert_eq!(bad.first_failing_degree, Some(2));
    }

    #[test]
    fn prediction_for_free_generators() {
        // Killing P1 and P2 leaves a free ring on P3..P_cap.
        let d = complete_intersection_dims(&[1, 2], 6);
        let free: Vec<i64> = free_ring_dims(&[3, 4, 5, 6], 6)
            .into_iter()
            .map(|x| x as i64)
            .collect();
        assert_eq!(d, free);
    }
}
