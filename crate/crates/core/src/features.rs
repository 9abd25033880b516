//! Lag-product features.
//!
//! `w[k] = s[k] s*[k-1]`. The feature vector holds the sample mean of
//! `Im(w)` with the spectrum placed at `pi/2` and the sample variances of
//! `Im(w)` at placements `0` and `pi/2`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sigmodel::{translate_spectrum, ComplexSeries};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub mean_im_halfpi: f64,
    pub var_im_zero: f64,
    pub var_im_halfpi: f64,
}

impl FeatureVector {
    pub const DIM: usize = 3;

    pub fn to_array(&self) -> [f64; 3] {
        [self.mean_im_halfpi, self.var_im_zero, self.var_im_halfpi]
    }

    pub fn from_array(v: [f64; 3]) -> Self {
        FeatureVector { mean_im_halfpi: v[0], var_im_zero: v[1], var_im_halfpi: v[2] }
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|x| x.is_finite())
    }
}

/// `w[k] = s[k] conj(s[k-1])`, one sample shorter than `s`.
pub fn lag_product(s: &ComplexSeries) -> Result<ComplexSeries> {
    if s.len() < 2 {
        return Err(Error::TooShort { needed: 2, got: s.len() });
    }
    let w: Vec<Complex64> = s.samples().windows(2).map(|p| p[1] * p[0].conj()).collect();
    Ok(ComplexSeries::from_trusted(w, s.sample_period()))
}

pub fn im_mean(w: &ComplexSeries) -> f64 {
    w.imag().sum::<f64>() / w.len() as f64
}

/// Unbiased sample variance of `Im(w[k])`.
pub fn im_variance(w: &ComplexSeries) -> Result<f64> {
    if w.len() < 2 {
        return Err(Error::TooShort { needed: 2, got: w.len() });
    }
    let mean = im_mean(w);
    let ss: f64 = w.imag().map(|x| (x - mean).powi(2)).sum();
    Ok(ss / (w.len() - 1) as f64)
}

/// Features from one realization seen at spectrum placements 0 and `pi/2`.
pub fn extract_features(s_at_zero: &ComplexSeries, s_at_halfpi: &ComplexSeries) -> Result<FeatureVector> {
    let w_zero = lag_product(s_at_zero)?;
    let w_half = lag_product(s_at_halfpi)?;
    Ok(FeatureVector {
        mean_im_halfpi: im_mean(&w_half),
        var_im_zero: im_variance(&w_zero)?,
        var_im_halfpi: im_variance(&w_half)?,
    })
}

/// Same as [`extract_features`], deriving the `pi/2` placement by translation.
pub fn features_from_zero_placement(s_at_zero: &ComplexSeries) -> Result<FeatureVector> {
    extract_features(s_at_zero, &translate_spectrum(s_at_zero, FRAC_PI_2))
}
