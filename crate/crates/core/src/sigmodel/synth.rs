use num_complex::Complex64;

use crate::error::{Error, Result};

use super::pulse::{FrequencyPulse, PulseSpec, ShapedPulse};
use super::sampling::{sample_time, DelaySpec, SamplingSpec, SymbolSpan};
use super::series::ComplexSeries;

/// Symbols needed to synthesize `num_samples` received samples.
///
/// The span also covers time 0, where the CPFSK phase integral starts.
pub fn symbol_span(pulse: &PulseSpec, sampling: &SamplingSpec, delay: &DelaySpec, num_samples: usize) -> SymbolSpan {
    let t_first = sample_time(0, sampling, delay).min(0.0);
    let t_last = sample_time(num_samples.saturating_sub(1) as i64, sampling, delay).max(0.0);
    let t_sym = sampling.symbol_period();
    SymbolSpan::covering(t_first, t_last, pulse.support(t_sym), t_sym)
}

/// Indices `n` (clamped to `span`) whose pulse support intersects `[t_from, t_to]`.
fn active(t_from: f64, t_to: f64, support: (f64, f64), t_sym: f64, span: &SymbolSpan) -> std::ops::RangeInclusive<i64> {
    let lo = (((t_from - support.1) / t_sym).ceil() as i64).max(span.first);
    let hi = (((t_to - support.0) / t_sym).floor() as i64).min(span.last());
    lo..=hi
}

fn check_samples(num_samples: usize) -> Result<()> {
    if num_samples == 0 {
        Err(Error::invalid("number of samples must be at least 1"))
    } else {
        Ok(())
    }
}

/// Samples `sum_n c_n p(k T_s - t0 - n T)` for `k = 0..num_samples`.
///
/// `symbols[i]` is transmitted at `n = symbol_span(..).first + i`.
pub fn synth_linear(
    symbols: &[Complex64],
    pulse: &PulseSpec,
    sampling: &SamplingSpec,
    delay: &DelaySpec,
    num_samples: usize,
) -> Result<ComplexSeries> {
    check_samples(num_samples)?;
    let span = symbol_span(pulse, sampling, delay, num_samples);
    span.check(symbols.len())?;
    let shaped = ShapedPulse::new(*pulse, sampling);
    let t_sym = sampling.symbol_period();
    let support = shaped.support();

    let samples = (0..num_samples)
        .map(|k| {
            let tau = sample_time(k as i64, sampling, delay);
            active(tau, tau, support, t_sym, &span)
                .map(|n| symbols[(n - span.first) as usize] * shaped.value(tau - n as f64 * t_sym))
                .sum::<Complex64>()
        })
        .collect();
    Ok(ComplexSeries::from_trusted(samples, sampling.sample_period()))
}

/// Accumulated CPFSK phase at each received sample time.
///
/// The phase is the integral from 0 to `k T_s - t0` of
/// `sum_n b_n q(rho - n T)`, with `q` scaled to area `pi h`.
pub fn cpfsk_phase(
    levels: &[i32],
    pulse: &PulseSpec,
    modulation_index: f64,
    sampling: &SamplingSpec,
    delay: &DelaySpec,
    num_samples: usize,
) -> Result<Vec<f64>> {
    check_samples(num_samples)?;
    if !(modulation_index > 0.0 && modulation_index.is_finite()) {
        return Err(Error::invalid(format!("modulation index must be positive, got {modulation_index}")));
    }
    let span = symbol_span(pulse, sampling, delay, num_samples);
    span.check(levels.len())?;
    let t_sym = sampling.symbol_period();
    let q = FrequencyPulse::new(*pulse, modulation_index, t_sym);
    let support = q.support();
    let level = |n: i64| levels[(n - span.first) as usize] as f64;

    let mut phase = Vec::with_capacity(num_samples);
    let mut prev = sample_time(0, sampling, delay);
    let (a, b) = (prev.min(0.0), prev.max(0.0));
    let mut acc: f64 = active(a, b, support, t_sym, &span)
        .map(|n| {
            let shift = n as f64 * t_sym;
            level(n) * (q.phase(prev - shift) - q.phase(-shift))
        })
        .sum();
    phase.push(acc);
    for k in 1..num_samples {
        let tau = sample_time(k as i64, sampling, delay);
        acc += active(prev, tau, support, t_sym, &span)
            .map(|n| {
                let shift = n as f64 * t_sym;
                level(n) * (q.phase(tau - shift) - q.phase(prev - shift))
            })
            .sum::<f64>();
        phase.push(acc);
        prev = tau;
    }
    Ok(phase)
}

/// Continuous-phase FSK samples `exp(j phi[k])`; see [`cpfsk_phase`].
pub fn synth_cpfsk(
    levels: &[i32],
    pulse: &PulseSpec,
    modulation_index: f64,
    sampling: &SamplingSpec,
    delay: &DelaySpec,
    num_samples: usize,
) -> Result<ComplexSeries> {
    let phase = cpfsk_phase(levels, pulse, modulation_index, sampling, delay, num_samples)?;
    let samples = phase.into_iter().map(|p| Complex64::from_polar(1.0, p)).collect();
    Ok(ComplexSeries::from_trusted(samples, sampling.sample_period()))
}
