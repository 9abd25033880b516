use num_complex::Complex64;

use crate::error::{Error, Result};

/// Finite sequence of complex baseband samples taken every `sample_period` seconds.
///
/// Never empty, and every sample is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries {
    samples: Vec<Complex64>,
    sample_period: f64,
}

impl ComplexSeries {
    pub fn new(samples: Vec<Complex64>, sample_period: f64) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::TooShort { needed: 1, got: 0 });
        }
        if !(sample_period > 0.0 && sample_period.is_finite()) {
            return Err(Error::invalid(format!("sample period must be positive, got {sample_period}")));
        }
        if let Some(i) = samples.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite(i));
        }
        Ok(ComplexSeries { samples, sample_period })
    }

    /// Builds a series from samples produced internally from finite inputs.
    pub(crate) fn from_trusted(samples: Vec<Complex64>, sample_period: f64) -> Self {
        debug_assert!(!samples.is_empty());
        ComplexSeries { samples, sample_period }
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    pub fn sample_period(&self) -> f64 {
        self.sample_period
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Empirical mean of `|s[k]|^2`.
    pub fn mean_power(&self) -> f64 {
        self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() / self.samples.len() as f64
    }

    pub fn imag(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|z| z.im)
    }
}

/// Shifts the spectrum by `shift` radians per sample: `out[k] = s[k] e^{j shift k}`.
pub fn translate_spectrum(s: &ComplexSeries, shift: f64) -> ComplexSeries {
    if shift == 0.0 {
        return s.clone();
    }
    let samples = s.samples.iter().enumerate().map(|(k, z)| z * Complex64::from_polar(1.0, shift * k as f64)).collect();
    ComplexSeries::from_trusted(samples, s.sample_period)
}

/// Rescales a received series to total power `1 + noise_power`.
///
/// The factor is `sqrt((1 + noise_power) / P_r)` with `P_r` the empirical mean
/// power of `s`.
pub fn normalize_received(s: &ComplexSeries, noise_power: f64) -> Result<ComplexSeries> {
    if !(noise_power >= 0.0 && noise_power.is_finite()) {
        return Err(Error::invalid(format!("noise power must be finite and >= 0, got {noise_power}")));
    }
    let received_power = s.mean_power();
    if received_power <= 0.0 {
        return Err(Error::ZeroPower);
    }
    let gain = ((1.0 + noise_power) / received_power).sqrt();
    let samples = s.samples.iter().map(|z| z * gain).collect();
    Ok(ComplexSeries::from_trusted(samples, s.sample_period))
}
