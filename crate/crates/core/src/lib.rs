//! Separation of continuous-phase FSK from QAM/PSK signals built with
//! root-raised-cosine pulses.
//!
//! The crate is organised the way the processing chain runs:
//!
//! * [`sigmodel`] synthesizes baseband signals, applies the impairment
//!   channel and normalizes the received samples.
//! * [`features`] computes the lag product `w[k] = s[k] s*[k-1]` and the
//!   three mean/variance features taken from its imaginary part.
//! * [`oracle`] evaluates the closed-form statistics of those features.
//! * [`svm`] is a linear soft-margin SVM solved with SMO.
//! * [`wavelet`] is the Haar-CWT comparison feature.
//! * [`harness`] runs Monte Carlo experiments and writes CSV tables.

pub mod error;
pub mod features;
pub mod harness;
pub mod oracle;
pub mod sigmodel;
pub mod svm;
pub mod wavelet;

mod quadrature;

pub use error::{Error, Result};
pub use features::FeatureVector;
pub use sigmodel::{ComplexSeries, ModulationScheme, SchemeKind};
