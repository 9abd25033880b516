//! Signal synthesis and the sampled impairment channel.
//!
//! Linear schemes are `sum_n c_n p(t - nT)`; CPFSK is
//! `exp(j integral_0^t sum_n b_n q(rho - nT) d rho)`. Both are evaluated at
//! `t = k T_s - t0` in continuous time, so fractional symbol periods and
//! delays are exact.

mod channel;
mod fading;
mod modulation;
mod pulse;
mod realize;
mod sampling;
mod series;
mod synth;

pub use channel::{apply_channel, impair, ChannelDraw, ChannelOutput, ChannelSpec};
pub use fading::{autocorrelation, fading_coefficient, gen_fading};
pub use modulation::{draw_symbols, ModulationScheme, SchemeKind, Symbols};
pub use pulse::{FrequencyPulse, PulseSpec, ShapedPulse, DEFAULT_RRC_HALF_WIDTH};
pub use realize::{Realization, Scenario, Transmission};
pub use sampling::{sample_time, DelaySpec, SamplingSpec, SymbolSpan};
pub use series::{normalize_received, translate_spectrum, ComplexSeries};
pub use synth::{cpfsk_phase, symbol_span, synth_cpfsk, synth_linear};
