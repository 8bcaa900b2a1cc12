//! Rank, period, shift and skew lengths of linear and skew cyclic codes over
//! finite field extensions, with every length computed along several
//! independent routes that must agree.

pub mod code;
pub mod cpoly;
pub mod error;
pub mod gf;
pub mod lengths;
pub mod lpoly;
pub mod parse;
pub mod sweep;

pub use code::{rank_weight, Codeword, LinearCode, DEFAULT_ENUM_CAP};
pub use cpoly::{CPoly, Order, RootSet};
pub use error::{Error, Result};
pub use gf::{
    make_tower, Element, FieldSpec, FieldTower, Matrix, TowerParams, DEFAULT_AMBIENT_CAP,
};
pub use lengths::{analyze, LengthReport, RankEquivalence, Shortened};
pub use lpoly::{LPoly, RootSpace};
pub use parse::JobSpec;
pub use sweep::{run_sweep, Grid, SweepConfig, SweepSummary};
