//! Closed-form statistics of `Im(w[k])` for noiseless, fading-free signals.
//!
//! The per-sample evaluators ([`theory_mean`], [`theory_var`]) hold for any
//! pulse and timing; they are built from pulse-overlap sums for linear
//! schemes and from one-sample integrals of the frequency pulse for BFSK.
//! [`rect_closed_forms`] are the special cases for rectangular pulses with
//! synchronous sampling.
//!
//! `Im(w[k])` is cyclostationary with period one symbol, so comparisons with
//! realization-level statistics go through [`cycle_average`]: the sample
//! mean estimates the cycle average of the per-sample means, and the sample
//! variance estimates the cycle average of the per-sample variances plus the
//! spread of the per-sample means over the cycle.

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::features::features_from_zero_placement;
use crate::quadrature;
use crate::sigmodel::{
    sample_time, ChannelSpec, DelaySpec, ModulationScheme, PulseSpec, SamplingSpec, Scenario, SchemeKind, ShapedPulse,
};

/// Which pulse-overlap sum to evaluate at sample `k`.
///
/// With `P_n = p(k T_s - t0 - nT)` and `P_n^- = p((k-1) T_s - t0 - nT)`:
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverlapKind {
    /// `sum_n P_n P_n^-`
    Cross,
    /// `sum_n P_n^2`
    Current,
    /// `sum_n (P_n^-)^2`
    Previous,
    /// `sum_n (P_n P_n^-)^2`
    CrossSquared,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapSums {
    pub cross: f64,
    pub current: f64,
    pub previous: f64,
    pub cross_squared: f64,
}

/// Sampling, delay and residual carrier offset the theory is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryContext {
    pub sampling: SamplingSpec,
    pub delay: DelaySpec,
    pub carrier_offset: f64,
}

impl TheoryContext {
    pub fn synchronous(samples_per_symbol: u32, carrier_offset: f64) -> Result<Self> {
        Ok(TheoryContext {
            sampling: SamplingSpec::synchronous(samples_per_symbol)?,
            delay: DelaySpec::none(),
            carrier_offset,
        })
    }
}

/// Symbols whose support touches either of the two sample instants of lag `k`.
fn overlapping(support: (f64, f64), t_prev: f64, t_cur: f64, t_sym: f64) -> std::ops::RangeInclusive<i64> {
    let lo = ((t_prev - support.1) / t_sym).ceil() as i64;
    let hi = ((t_cur - support.0) / t_sym).floor() as i64;
    lo..=hi
}

/// All four overlap sums at lag index `k`, using the same amplitude
/// normalization as the synthesizer.
pub fn overlap_sums(pulse: &PulseSpec, sampling: &SamplingSpec, delay: &DelaySpec, k: i64) -> OverlapSums {
    let shaped = ShapedPulse::new(*pulse, sampling);
    let t_sym = sampling.symbol_period();
    let t_cur = sample_time(k, sampling, delay);
    let t_prev = sample_time(k - 1, sampling, delay);
    let mut s = OverlapSums { cross: 0.0, current: 0.0, previous: 0.0, cross_squared: 0.0 };
    for n in overlapping(shaped.support(), t_prev, t_cur, t_sym) {
        let shift = n as f64 * t_sym;
        let p = shaped.value(t_cur - shift);
        let pm = shaped.value(t_prev - shift);
        s.cross += p * pm;
        s.current += p * p;
        s.previous += pm * pm;
        s.cross_squared += (p * pm).powi(2);
    }
    s
}

pub fn overlap_sum(pulse: &PulseSpec, sampling: &SamplingSpec, delay: &DelaySpec, k: i64, kind: OverlapKind) -> f64 {
    let s = overlap_sums(pulse, sampling, delay, k);
    match kind {
        OverlapKind::Cross => s.cross,
        OverlapKind::Current => s.current,
        OverlapKind::Previous => s.previous,
        OverlapKind::CrossSquared => s.cross_squared,
    }
}

/// Frequency pulse evaluated directly, independent of the synthesizer's
/// interpolated phase table.
struct DirectFrequencyPulse {
    spec: PulseSpec,
    t_sym: f64,
    scale: f64,
}

impl DirectFrequencyPulse {
    fn new(spec: PulseSpec, h: f64, t_sym: f64) -> Self {
        let (lo, hi) = spec.support(t_sym);
        let panels = (((hi - lo) / t_sym).ceil() as usize).max(1) * 16;
        let area = quadrature::integrate(|t| spec.eval(t, t_sym), lo, hi, panels);
        DirectFrequencyPulse { spec, t_sym, scale: PI * h / area }
    }

    /// Integral of `q(rho - shift)` over `[a, b]`.
    fn integral(&self, a: f64, b: f64, shift: f64) -> f64 {
        let (lo, hi) = self.spec.support(self.t_sym);
        let from = a.max(shift + lo);
        let to = b.min(shift + hi);
        if to <= from {
            return 0.0;
        }
        self.scale * quadrature::integrate(|t| self.spec.eval(t - shift, self.t_sym), from, to, 2)
    }
}

/// `Q_n[k]`: the integral of the frequency pulse of symbol `n` over the
/// sample interval `[(k-1) T_s - t0, k T_s - t0]`.
pub fn q_integral(pulse: &PulseSpec, h: f64, sampling: &SamplingSpec, delay: &DelaySpec, k: i64, n: i64) -> f64 {
    let t_sym = sampling.symbol_period();
    let q = DirectFrequencyPulse::new(*pulse, h, t_sym);
    q.integral(sample_time(k - 1, sampling, delay), sample_time(k, sampling, delay), n as f64 * t_sym)
}

fn q_integrals(q: &DirectFrequencyPulse, sampling: &SamplingSpec, delay: &DelaySpec, k: i64) -> Vec<f64> {
    let t_sym = sampling.symbol_period();
    let t_cur = sample_time(k, sampling, delay);
    let t_prev = sample_time(k - 1, sampling, delay);
    overlapping(q.spec.support(t_sym), t_prev, t_cur, t_sym)
        .map(|n| q.integral(t_prev, t_cur, n as f64 * t_sym))
        .collect()
}

fn unsupported(scheme: &ModulationScheme) -> Error {
    Error::UnsupportedScheme(format!("{scheme}: closed forms exist for linear schemes and BFSK only"))
}

/// Per-sample mean and variance of `Im(w[k])`.
pub fn theory_moments(scheme: &ModulationScheme, pulse: &PulseSpec, ctx: &TheoryContext, k: i64) -> Result<(f64, f64)> {
    let sin_d = ctx.carrier_offset.sin();
    let sin2 = sin_d * sin_d;
    match scheme.kind() {
        SchemeKind::Fsk4 | SchemeKind::Fsk8 => Err(unsupported(scheme)),
        SchemeKind::Fsk2 => {
            let h = scheme.modulation_index().ok_or_else(|| unsupported(scheme))?;
            let q = DirectFrequencyPulse::new(*pulse, h, ctx.sampling.symbol_period());
            let qs = q_integrals(&q, &ctx.sampling, &ctx.delay, k);
            let prod_cos: f64 = qs.iter().map(|x| x.cos()).product();
            let prod_cos2: f64 = qs.iter().map(|x| (2.0 * x).cos()).product();
            let prod_cos_sq: f64 = qs.iter().map(|x| x.cos().powi(2)).product();
            let mean = sin_d * prod_cos;
            let var = 0.5 - 0.5 * prod_cos2 + sin2 * (prod_cos2 - prod_cos_sq);
            Ok((mean, var))
        }
        SchemeKind::Bpsk => {
            let s = overlap_sums(pulse, &ctx.sampling, &ctx.delay, k);
            let mean = sin_d * s.cross;
            let var = sin2 * (s.cross * s.cross + s.current * s.previous - 2.0 * s.cross_squared);
            Ok((mean, var))
        }
        SchemeKind::Qam16 | SchemeKind::Psk4 | SchemeKind::Psk8 => {
            let pts = scheme.constellation().expect("linear scheme");
            let m2 = pts.iter().map(|c| c.norm_sqr()).sum::<f64>() / pts.len() as f64;
            let m4 = scheme.fourth_moment().expect("linear scheme");
            let s = overlap_sums(pulse, &ctx.sampling, &ctx.delay, k);
            let a2 = s.cross * s.cross;
            let mean = sin_d * s.cross * m2;
            let var = sin2 * ((m4 - 2.0 * m2 * m2) * s.cross_squared + m2 * m2 * a2)
                + 0.5 * m2 * m2 * (s.current * s.previous - a2);
            Ok((mean, var))
        }
    }
}

pub fn theory_mean(scheme: &ModulationScheme, pulse: &PulseSpec, ctx: &TheoryContext, k: i64) -> Result<f64> {
    theory_moments(scheme, pulse, ctx, k).map(|m| m.0)
}

pub fn theory_var(scheme: &ModulationScheme, pulse: &PulseSpec, ctx: &TheoryContext, k: i64) -> Result<f64> {
    theory_moments(scheme, pulse, ctx, k).map(|m| m.1)
}

/// Cycle-averaged per-sample statistics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleAverage {
    /// Average of the per-sample means.
    pub mean: f64,
    /// Average of the per-sample variances.
    pub variance: f64,
    /// Population variance of the per-sample means over the cycle.
    pub mean_spread: f64,
}

impl CycleAverage {
    /// Expected value of the within-realization sample variance.
    pub fn expected_sample_variance(&self) -> f64 {
        self.variance + self.mean_spread
    }
}

/// Averages the per-sample theory over the lag indices in `ks`.
pub fn cycle_average<I: IntoIterator<Item = i64>>(
    scheme: &ModulationScheme,
    pulse: &PulseSpec,
    ctx: &TheoryContext,
    ks: I,
) -> Result<CycleAverage> {
    let moments = ks.into_iter().map(|k| theory_moments(scheme, pulse, ctx, k)).collect::<Result<Vec<_>>>()?;
    if moments.is_empty() {
        return Err(Error::invalid("empty index range"));
    }
    let n = moments.len() as f64;
    let mean = moments.iter().map(|m| m.0).sum::<f64>() / n;
    let variance = moments.iter().map(|m| m.1).sum::<f64>() / n;
    let mean_spread = moments.iter().map(|m| (m.0 - mean).powi(2)).sum::<f64>() / n;
    Ok(CycleAverage { mean, variance, mean_spread })
}

/// Average over one symbol of sample indices. Requires an integer number of
/// samples per symbol (`eps = 0`).
pub fn symbol_average(scheme: &ModulationScheme, pulse: &PulseSpec, ctx: &TheoryContext) -> Result<CycleAverage> {
    if ctx.sampling.symbol_fraction() != 0.0 {
        return Err(Error::invalid("one-symbol averaging needs an integer number of samples per symbol"));
    }
    let ns = ctx.sampling.samples_per_symbol() as i64;
    cycle_average(scheme, pulse, ctx, 1..=ns)
}

/// Inputs of the rectangular-pulse, synchronous closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectTheoryParams {
    pub samples_per_symbol: u32,
    pub carrier_offset: f64,
    /// Per-sample phase increment of BFSK.
    pub beta_prime: Option<f64>,
    /// `E[a^4]` of a unit-power constellation.
    pub fourth_moment: Option<f64>,
}

/// Per-sample BFSK phase increment for a rectangular frequency pulse, `pi h / N_s`.
pub fn beta_prime(h: f64, samples_per_symbol: u32) -> f64 {
    PI * h / samples_per_symbol as f64
}

/// `(mean, variance)` of `Im(w[k])` for rectangular pulses, synchronous
/// sampling, averaged over one symbol.
pub fn rect_closed_forms(params: &RectTheoryParams, kind: SchemeKind) -> Result<(f64, f64)> {
    if params.samples_per_symbol == 0 {
        return Err(Error::invalid("samples per symbol must be at least 1"));
    }
    let ns = params.samples_per_symbol as f64;
    let sin_d = params.carrier_offset.sin();
    let sin2 = sin_d * sin_d;
    match kind {
        SchemeKind::Bpsk => Ok(((1.0 - 1.0 / ns) * sin_d, sin2 / ns)),
        SchemeKind::Qam16 | SchemeKind::Psk4 | SchemeKind::Psk8 => {
            let m4 = params
                .fourth_moment
                .ok_or_else(|| Error::invalid(format!("{kind} needs the constellation fourth moment")))?;
            if m4 < 1.0 {
                return Err(Error::invalid(format!("fourth moment of a unit-power constellation is >= 1, got {m4}")));
            }
            Ok(((1.0 - 1.0 / ns) * sin_d, (1.0 - 1.0 / ns) * sin2 * (m4 - 1.0) + 0.5 / ns))
        }
        SchemeKind::Fsk2 => {
            let b = params.beta_prime.ok_or_else(|| Error::invalid("BFSK needs beta'"))?;
            Ok((b.cos() * sin_d, (1.0 - sin2) * b.sin().powi(2)))
        }
        SchemeKind::Fsk4 | SchemeKind::Fsk8 => {
            Err(Error::UnsupportedScheme(format!("{kind}: no rectangular closed form")))
        }
    }
}

/// Monte Carlo setup for the FSK-versus-linear separation curve.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparationSetup {
    pub scenario: Scenario,
    pub fsk_kinds: Vec<SchemeKind>,
    pub linear_kinds: Vec<SchemeKind>,
    pub channel: ChannelSpec,
    pub realizations: usize,
    pub seed: u64,
}

/// Closest FSK/linear distances at one modulation index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparationPoint {
    pub h: f64,
    /// `min (FSK mean - linear mean)` at placement `pi/2`.
    pub mean_gap: f64,
    /// `min (FSK variance - linear variance)` at placement 0.
    pub var_gap_zero: f64,
    /// `min (linear variance - FSK variance)` at placement `pi/2`.
    pub var_gap_halfpi: f64,
}

/// Average feature vector of `realizations` draws of `scheme`.
fn average_features(setup: &SeparationSetup, scheme: ModulationScheme, stream: u64) -> Result<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(setup.seed);
    rng.set_stream(stream);
    let mut acc = [0.0; 3];
    for _ in 0..setup.realizations {
        let tx = setup.scenario.transmission(scheme, &mut rng)?;
        let r = tx.realize(&setup.channel, &mut rng)?;
        let f = features_from_zero_placement(&r.received)?.to_array();
        for (a, x) in acc.iter_mut().zip(f) {
            *a += x / setup.realizations as f64;
        }
    }
    Ok(acc)
}

/// For every `h`, the smallest distance between any FSK scheme and any
/// linear scheme in each of the three averaged features.
pub fn separation_curve(h_grid: &[f64], setup: &SeparationSetup) -> Result<Vec<SeparationPoint>> {
    if setup.fsk_kinds.is_empty() || setup.linear_kinds.is_empty() || setup.realizations == 0 {
        return Err(Error::invalid("separation curve needs FSK and linear schemes and >= 1 realization"));
    }
    let linear = setup
        .linear_kinds
        .iter()
        .enumerate()
        .map(|(i, &kind)| average_features(setup, ModulationScheme::linear(kind)?, i as u64))
        .collect::<Result<Vec<_>>>()?;
    h_grid
        .iter()
        .enumerate()
        .map(|(hi, &h)| {
            let mut point = SeparationPoint {
                h,
                mean_gap: f64::INFINITY,
                var_gap_zero: f64::INFINITY,
                var_gap_halfpi: f64::INFINITY,
            };
            for (fi, &kind) in setup.fsk_kinds.iter().enumerate() {
                let stream = 1_000 + (hi * setup.fsk_kinds.len() + fi) as u64;
                let f = average_features(setup, ModulationScheme::fsk(kind, h)?, stream)?;
                for l in &linear {
                    point.mean_gap = point.mean_gap.min(f[0] - l[0]);
                    point.var_gap_zero = point.var_gap_zero.min(f[1] - l[1]);
                    point.var_gap_halfpi = point.var_gap_halfpi.min(l[2] - f[2]);
                }
            }
            Ok(point)
        })
        .collect()
}
