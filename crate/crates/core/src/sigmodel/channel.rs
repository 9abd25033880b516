use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

use super::fading::{complex_gaussian, gen_fading};
use super::series::ComplexSeries;

/// Impairment parameters of the sampled channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    /// `+inf` disables the noise.
    pub snr_db: f64,
    /// Center of the carrier-offset distribution, radians per sample.
    pub carrier_offset_center: f64,
    pub carrier_offset_halfwidth: f64,
    pub fading_enabled: bool,
    pub fading_half_power_lag: u32,
}

impl ChannelSpec {
    /// Noiseless, no offset, no fading.
    pub fn ideal() -> Self {
        ChannelSpec {
            snr_db: f64::INFINITY,
            carrier_offset_center: 0.0,
            carrier_offset_halfwidth: 0.0,
            fading_enabled: false,
            fading_half_power_lag: 9,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.snr_db.is_nan() || self.snr_db == f64::NEG_INFINITY {
            return Err(Error::invalid(format!("invalid SNR {}", self.snr_db)));
        }
        if !self.carrier_offset_center.is_finite()
            || !(self.carrier_offset_halfwidth >= 0.0 && self.carrier_offset_halfwidth.is_finite())
        {
            return Err(Error::invalid("carrier offset center/halfwidth must be finite, halfwidth >= 0"));
        }
        if self.fading_enabled && self.fading_half_power_lag == 0 {
            return Err(Error::invalid("fading half-power lag must be at least 1"));
        }
        Ok(())
    }

    /// `sigma^2 = 10^(-snr_db / 10)` for unit signal power.
    pub fn noise_power(&self) -> f64 {
        if self.snr_db == f64::INFINITY {
            0.0
        } else {
            10f64.powf(-self.snr_db / 10.0)
        }
    }

    /// Draws the per-realization carrier offset and carrier phase.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> ChannelDraw {
        let u: f64 = rng.random();
        let carrier_offset = self.carrier_offset_center + self.carrier_offset_halfwidth * (2.0 * u - 1.0);
        let carrier_phase = 2.0 * PI * rng.random::<f64>();
        ChannelDraw { carrier_offset, carrier_phase }
    }
}

/// Channel parameters that stay fixed over one realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelDraw {
    pub carrier_offset: f64,
    pub carrier_phase: f64,
}

#[derive(Debug, Clone)]
pub struct ChannelOutput {
    pub received: ComplexSeries,
    pub carrier_offset: f64,
    pub carrier_phase: f64,
    pub noise_power: f64,
}

/// `s[k] = x[k] e^{j(offset k + phase)} g[k] + v[k]` with a fresh draw of
/// offset and phase.
pub fn apply_channel<R: Rng + ?Sized>(x: &ComplexSeries, spec: &ChannelSpec, rng: &mut R) -> Result<ChannelOutput> {
    spec.validate()?;
    let draw = spec.draw(rng);
    let received = impair(x, spec, &draw, rng)?;
    Ok(ChannelOutput {
        received,
        carrier_offset: draw.carrier_offset,
        carrier_phase: draw.carrier_phase,
        noise_power: spec.noise_power(),
    })
}

/// Applies the channel with offset and phase fixed by `draw`; fading and
/// noise are still drawn from `rng`.
pub fn impair<R: Rng + ?Sized>(
    x: &ComplexSeries,
    spec: &ChannelSpec,
    draw: &ChannelDraw,
    rng: &mut R,
) -> Result<ComplexSeries> {
    spec.validate()?;
    let n = x.len();
    let fading = if spec.fading_enabled { Some(gen_fading(n, spec.fading_half_power_lag, rng)?) } else { None };
    let noise_amp = spec.noise_power().sqrt();
    let samples = x
        .samples()
        .iter()
        .enumerate()
        .map(|(k, &xk)| {
            let mut s = xk * Complex64::from_polar(1.0, draw.carrier_offset * k as f64 + draw.carrier_phase);
            if let Some(g) = &fading {
                s *= g[k];
            }
            if noise_amp > 0.0 {
                s += complex_gaussian(rng) * noise_amp;
            }
            s
        })
        .collect();
    Ok(ComplexSeries::from_trusted(samples, x.sample_period()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_2;

    fn series(v: Vec<Complex64>) -> ComplexSeries {
        ComplexSeries::new(v, 1.0).unwrap()
    }

    #[test]
    fn identity_channel() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = series((0..32).map(|k| Complex64::new(k as f64, -0.5 * k as f64)).collect());
        let draw = ChannelDraw { carrier_offset: 0.0, carrier_phase: 0.0 };
        let s = impair(&x, &ChannelSpec::ideal(), &draw, &mut rng).unwrap();
        assert_eq!(s, x);
    }

    #[test]
    fn pure_rotation() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = series(vec![Complex64::new(1.0, 0.0); 12]);
        let draw = ChannelDraw { carrier_offset: FRAC_PI_2, carrier_phase: 0.0 };
        let s = impair(&x, &ChannelSpec::ideal(), &draw, &mut rng).unwrap();
        let jk =
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, -1.0)];
        for (k, z) in s.samples().iter().enumerate() {
            assert!((z - jk[k % 4]).norm() < 1e-12);
        }
    }

    #[test]
    fn noise_power_matches_snr() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 1_000_000;
        let x = series(vec![Complex64::new(1.0, 0.0); n]);
        let spec = ChannelSpec { snr_db: 10.0, ..ChannelSpec::ideal() };
        let draw = ChannelDraw { carrier_offset: 0.0, carrier_phase: 0.0 };
        let s = impair(&x, &spec, &draw, &mut rng).unwrap();
        let p = s.samples().iter().zip(x.samples()).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>() / n as f64;
        assert!((0.095..=0.105).contains(&p), "{p}");
    }

    #[test]
    fn offset_draw_stays_in_interval() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let spec = ChannelSpec {
            carrier_offset_center: FRAC_PI_2,
            carrier_offset_halfwidth: PI / 20.0,
            ..ChannelSpec::ideal()
        };
        for _ in 0..1000 {
            let d = spec.draw(&mut rng);
            assert!((d.carrier_offset - FRAC_PI_2).abs() <= PI / 20.0);
            assert!((0.0..2.0 * PI).contains(&d.carrier_phase));
        }
    }

    #[test]
    fn noiseless_channel_is_unit_modulus_rotation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = series((0..64).map(|k| Complex64::from_polar(1.0 + k as f64 * 0.1, 0.3 * k as f64)).collect());
        let spec = ChannelSpec { carrier_offset_halfwidth: 0.4, ..ChannelSpec::ideal() };
        let out = apply_channel(&x, &spec, &mut rng).unwrap();
        assert_eq!(out.noise_power, 0.0);
        for (k, (a, b)) in out.received.samples().iter().zip(x.samples()).enumerate() {
            assert!((a.norm() - b.norm()).abs() < 1e-12);
            let rot = a / b;
            let want = Complex64::from_polar(1.0, out.carrier_offset * k as f64 + out.carrier_phase);
            assert!((rot - want).norm() < 1e-12);
        }
    }
}
