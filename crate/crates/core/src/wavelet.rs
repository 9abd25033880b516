//! Haar continuous-wavelet-transform magnitude feature, the comparison
//! baseline.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sigmodel::ComplexSeries;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveletSpec {
    /// Haar support in samples; even.
    pub scale: usize,
    pub median_length: usize,
}

impl Default for WaveletSpec {
    fn default() -> Self {
        WaveletSpec { scale: 2, median_length: 2 }
    }
}

impl WaveletSpec {
    pub fn new(scale: usize, median_length: usize) -> Result<Self> {
        let spec = WaveletSpec { scale, median_length };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.scale < 2 || !self.scale.is_multiple_of(2) {
            return Err(Error::invalid(format!("Haar scale must be an even number >= 2, got {}", self.scale)));
        }
        if self.median_length == 0 {
            return Err(Error::invalid("median filter length must be at least 1"));
        }
        Ok(())
    }
}

/// `|CWT|` at one scale with a Haar mother wavelet.
///
/// Output sample `i` covers the window `s[i .. i + scale]`:
/// `|(sum of first half - sum of second half)| / sqrt(scale)`.
pub fn haar_cwt(s: &ComplexSeries, scale: usize) -> Result<Vec<f64>> {
    if scale < 2 || !scale.is_multiple_of(2) {
        return Err(Error::invalid(format!("Haar scale must be an even number >= 2, got {scale}")));
    }
    let x = s.samples();
    if x.len() < scale {
        return Err(Error::TooShort { needed: scale, got: x.len() });
    }
    let half = scale / 2;
    let norm = 1.0 / (scale as f64).sqrt();
    // running prefix sums keep this O(n) for any scale
    let mut prefix = Vec::with_capacity(x.len() + 1);
    prefix.push(Complex64::new(0.0, 0.0));
    for z in x {
        let last = *prefix.last().unwrap();
        prefix.push(last + z);
    }
    Ok((0..=x.len() - scale)
        .map(|i| {
            let first = prefix[i + half] - prefix[i];
            let second = prefix[i + scale] - prefix[i + half];
            (first - second).norm() * norm
        })
        .collect())
}

/// Trailing-window running median; even windows use the midpoint of the two
/// central values, and the first `length - 1` outputs use shorter windows.
pub fn median_filter(v: &[f64], length: usize) -> Result<Vec<f64>> {
    if length == 0 {
        return Err(Error::invalid("median filter length must be at least 1"));
    }
    let mut window = Vec::with_capacity(length);
    Ok((0..v.len())
        .map(|k| {
            let start = (k + 1).saturating_sub(length);
            window.clear();
            window.extend_from_slice(&v[start..=k]);
            window.sort_by(|a, b| a.total_cmp(b));
            let m = window.len();
            if m % 2 == 1 {
                window[m / 2]
            } else {
                0.5 * (window[m / 2 - 1] + window[m / 2])
            }
        })
        .collect())
}

/// Variance of the median-filtered Haar CWT magnitude.
pub fn wavelet_feature(s_at_halfpi: &ComplexSeries, spec: &WaveletSpec) -> Result<f64> {
    spec.validate()?;
    let cwt = haar_cwt(s_at_halfpi, spec.scale)?;
    let filtered = median_filter(&cwt, spec.median_length)?;
    if filtered.len() < 2 {
        return Ok(0.0);
    }
    let n = filtered.len() as f64;
    let mean = filtered.iter().sum::<f64>() / n;
    Ok(filtered.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0))
}
