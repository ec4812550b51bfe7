//! Ring maps out of the rationalized cobordism ring, given by the images of
//! the generators `P_n`.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::GradedPoly;
use crate::rational::Rational;

/// Generators without an assigned image are left in place.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    images: BTreeMap<usize, GradedPoly>,
    cap: usize,
    graded: bool,
    symbol: String,
}

impl Substitution {
    /// A grading-preserving map; every image of `P_n` must be homogeneous of weight `n`.
    /// `symbol` names the generators of the target ring when printing.
    pub fn graded(images: BTreeMap<usize, GradedPoly>, cap: usize, symbol: &str) -> Result<Self> {
        for (n, img) in &images {
            if img.cap() != cap {
                return Err(Error::Config(format!(
                    "image of P{n} has cap {}",
                    img.cap()
                )));
            }
            if *n == 0 || !img.is_homogeneous_of(*n) {
                return Err(Error::Domain(format!(
                    "image of P{n} ({}) is not homogeneous of weight {n}",
                    img.display_with(symbol)
                )));
            }
        }
        Ok(Substitution {
            images,
            cap,
            graded: true,
            symbol: symbol.to_string(),
        })
    }

    /// Evaluation at rational values (e.g. a numerical genus); grading is dropped.
    pub fn numeric(values: BTreeMap<usize, Rational>, cap: usize) -> Self {
        Substitution {
            images: values
                .into_iter()
                .map(|(n, v)| (n, GradedPoly::constant(v, cap)))
                .collect(),
            cap,
            graded: false,
            symbol: "P".to_string(),
        }
    }

    /// Sends every `P_n` to zero.
    pub fn zero(cap: usize) -> Self {
        Substitution {
            images: (1..=cap).map(|n| (n, GradedPoly::zero(cap))).collect(),
            cap,
            graded: true,
            symbol: "P".to_string(),
        }
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn image(&self, n: usize) -> Option<&GradedPoly> {
        self.images.get(&n)
    }

    pub fn images(&self) -> &BTreeMap<usize, GradedPoly> {
        &self.images
    }

    pub fn apply(&self, p: &GradedPoly) -> GradedPoly {
        p.substitute(|n| self.images.get(&n))
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &Substitution) -> Substitution {
        let mut images: BTreeMap<usize, GradedPoly> = self
            .images
            .iter()
            .map(|(n, p)| (*n, then.apply(p)))
            .collect();
        for (n, p) in &then.images {
            images.entry(*n).or_insert_with(|| p.clone());
        }
        Substitution {
            images,
            cap: self.cap,
            graded: self.graded && then.graded,
            symbol: then.symbol.clone(),
        }
    }
}

/// `{"P3": "8/3*P1*P2-5/3*P1^3", ...}` in generator order.
impl Serialize for Substitution {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.images.len()))?;
        for (n, p) in &self.images {
            m.serialize_entry(&format!("P{n}"), &p.display_with(&self.symbol))?;
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn graded_rejects_wrong_weight() {
        let cap = 4;
        let mut m = BTreeMap::new();
        m.insert(2, GradedPoly::var(1, cap));
        assert!(matches!(
            Substitution::graded(m, cap, "P"),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn apply_and_compose() {
        let cap = 4;
        let mut m = BTreeMap::new();
        m.insert(2, GradedPoly::var(1, cap).pow(2));
        let s = Substitution::graded(m, cap, "P").unwrap();
        let p = &GradedPoly::var(2, cap) * &GradedPoly::var(1, cap);
        assert_eq!(s.apply(&p), GradedPoly::var(1, cap).pow(3));
        let mut v = BTreeMap::new();
        v.insert(1, q(2));
        let t = s.then(&Substitution::numeric(v, cap));
        assert_eq!(t.apply(&p), GradedPoly::constant(q(8), cap));
        assert!(!t.is_graded());
    }
}
