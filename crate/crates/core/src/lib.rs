//! Exact computations in the rationalized complex cobordism ring, truncated at
//! a fixed degree: formal group laws, Chern numbers, generator constructions,
//! specializations and graded ideal checks.

pub mod chern;
pub mod context;
pub mod conventions;
pub mod error;
pub mod fgl;
pub mod generators;
pub mod ideal;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod series;
pub mod specialize;
pub mod substitution;

pub use chern::{ChernEngine, ChernMonomial, ChernVector, CobordismClass};
pub use context::{Context, DEFAULT_CAP, MAX_CAP};
pub use error::{Error, Result};
pub use fgl::{FormalGroupLaw, Origin};
pub use generators::GeneratorRecord;
pub use ideal::{GradedReport, IdealSpec};
pub use partition::Partition;
pub use poly::{GradedPoly, Monomial};
pub use rational::Rational;
pub use series::{BiSeries, Series1};
pub use substitution::Substitution;
