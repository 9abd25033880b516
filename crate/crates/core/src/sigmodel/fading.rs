use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Circular complex Gaussian sample with `E|z|^2 = 1`.
pub(crate) fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * FRAC_1_SQRT_2, im * FRAC_1_SQRT_2)
}

/// AR(1) coefficient whose autocorrelation magnitude drops to 1/2 at `half_power_lag`.
pub fn fading_coefficient(half_power_lag: u32) -> f64 {
    0.5f64.powf(1.0 / half_power_lag as f64)
}

/// Rayleigh fast-fading gains `alpha[k] e^{j psi[k]}`.
///
/// First-order autoregression `g[k] = a g[k-1] + sqrt(1 - a^2) u[k]` started
/// in its stationary distribution, so `E[alpha^2] = 1` and the
/// autocorrelation at lag `m` is `a^m`.
pub fn gen_fading<R: Rng + ?Sized>(length: usize, half_power_lag: u32, rng: &mut R) -> Result<Vec<Complex64>> {
    if length == 0 {
        return Err(Error::invalid("fading length must be at least 1"));
    }
    if half_power_lag == 0 {
        return Err(Error::invalid("half-power lag must be at least 1"));
    }
    let a = fading_coefficient(half_power_lag);
    let innovation = (1.0 - a * a).sqrt();
    let mut g = complex_gaussian(rng);
    let mut out = Vec::with_capacity(length);
    out.push(g);
    for _ in 1..length {
        g = g * a + complex_gaussian(rng) * innovation;
        out.push(g);
    }
    Ok(out)
}

/// Empirical autocorrelation `mean_k g[k] conj(g[k - lag])`.
pub fn autocorrelation(g: &[Complex64], lag: usize) -> Complex64 {
    if lag >= g.len() {
        return Complex64::new(0.0, 0.0);
    }
    let n = g.len() - lag;
    g[lag..].iter().zip(g).map(|(a, b)| a * b.conj()).sum::<Complex64>() / n as f64
}
