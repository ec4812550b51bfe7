//! Shared configuration and lazily built engines for one truncation degree.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::chern::{ChernEngine, CobordismClass};
use crate::error::{Error, Result};
use crate::fgl::{universal_fgl, FormalGroupLaw};
use crate::generators::{w_generator, GeneratorRecord};
use crate::poly::GradedPoly;
use crate::specialize::StarBasis;

pub const DEFAULT_CAP: usize = 8;
pub const MAX_CAP: usize = 12;

/// Everything downstream inherits the cap from here; caches are filled on
/// first use and never change afterwards.
#[derive(Debug)]
pub struct Context {
    cap: usize,
    chern: OnceLock<Result<ChernEngine>>,
    fgl: OnceLock<Result<FormalGroupLaw>>,
    w_generators: OnceLock<Result<BTreeMap<usize, GeneratorRecord>>>,
    star_basis: OnceLock<Result<StarBasis>>,
}

impl Context {
    pub fn new(cap: usize) -> Result<Self> {
        if !(1..=MAX_CAP).contains(&cap) {
            return Err(Error::Config(format!(
                "max degree must be in 1..={MAX_CAP}, got {cap}"
            )));
        }
        Ok(Context {
            cap,
            chern: OnceLock::new(),
            fgl: OnceLock::new(),
            w_generators: OnceLock::new(),
            star_basis: OnceLock::new(),
        })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn chern(&self) -> Result<&ChernEngine> {
        self.chern
            .get_or_init(|| ChernEngine::new(self.cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn fgl(&self) -> Result<&FormalGroupLaw> {
        self.fgl
            .get_or_init(|| universal_fgl(self.cap))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `x_1, x_3, ..., x_cap`, keyed by degree.
    pub fn w_generators(&self) -> Result<&BTreeMap<usize, GeneratorRecord>> {
        self.w_generators
            .get_or_init(|| {
                std::iter::once(1)
                    .chain(3..=self.cap)
                    .map(|k| Ok((k, w_generator(self, k)?)))
                    .collect()
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn star_basis(&self) -> Result<&StarBasis> {
        self.star_basis
            .get_or_init(|| StarBasis::new(self))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn class(&self, poly: GradedPoly, weight: usize) -> Result<CobordismClass> {
        CobordismClass::with_weight(poly.with_cap(self.cap), weight)
    }

    /// `[V] = α_12`.
    pub fn v_class(&self) -> Result<CobordismClass> {
        let a12 = self.fgl()?.coeff(1, 2)?;
        CobordismClass::with_weight(a12, 2)
    }

    /// `a * b = ab + 2 [V] ∂a ∂b`.
    pub fn star(&self, a: &CobordismClass, b: &CobordismClass) -> Result<CobordismClass> {
        let v = if self.cap >= 2 {
            self.v_class()?
        } else {
            CobordismClass::zero(2, self.cap)
        };
        self.chern()?.star_product(&v, a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_bounds() {
        assert!(matches!(Context::new(0), Err(Error::Config(_))));
        assert!(matches!(Context::new(13), Err(Error::Config(_))));
        assert_eq!(Context::new(DEFAULT_CAP).unwrap().cap(), 8);
    }

    #[test]
    fn star_basis_at_cap_one() {
        let c = Context::new(1).unwrap();
        assert_eq!(c.star_basis().unwrap().ranks, vec![1, 1]);
    }

    #[test]
    fn v_is_alpha12() {
        let c = Context::new(4).unwrap();
        let p1 = GradedPoly::var(1, 4);
        assert_eq!(
            c.v_class().unwrap().poly(),
            &(&p1.pow(2) - &GradedPoly::var(2, 4))
        );
    }
}
