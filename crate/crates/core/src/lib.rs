//! Hilbert series of Coulomb branches of cotangent-type gauge theories via
//! the monopole formula, with toric mirror checks and quiver slice data.

pub mod error;
pub mod gauge;
pub mod lattice;
pub mod lie;
pub mod monopole;
pub mod series;
pub mod slices;
pub mod toric;

pub use error::{Error, Result};
pub use gauge::{quiver_to_theory, toric_to_theory, GaugeGroup, MatterWeight, QuiverTheory, Theory};
pub use lie::{Basis, CartanType, RootSystem, WeightVec};
pub use monopole::{
    classify, hilbert_series, min_slope, ClassificationResult, Coweight, HilbertSeries, MinExponent, MinSlope,
    MonopoleOptions, TheoryKind,
};
pub use series::{RationalForm, TruncatedSeries};
pub use slices::{slice_data, slice_report, SliceData, SliceReport};
pub use toric::{gale_dual, mirror_check, molien_higgs_series, ChargeData, MirrorReport};
