use rand::Rng;

use crate::error::Result;

use super::channel::{apply_channel, ChannelSpec};
use super::modulation::{draw_symbols, ModulationScheme, Symbols};
use super::pulse::PulseSpec;
use super::sampling::{DelaySpec, SamplingSpec};
use super::series::{normalize_received, ComplexSeries};
use super::synth::{symbol_span, synth_cpfsk, synth_linear};

/// Everything needed to generate one received realization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transmission {
    pub scheme: ModulationScheme,
    pub pulse: PulseSpec,
    pub sampling: SamplingSpec,
    pub delay: DelaySpec,
    pub num_samples: usize,
}

#[derive(Debug, Clone)]
pub struct Realization {
    /// Normalized received samples, power `1 + noise_power`.
    pub received: ComplexSeries,
    pub carrier_offset: f64,
    pub carrier_phase: f64,
    pub noise_power: f64,
}

impl Transmission {
    /// Noiseless transmitted samples.
    pub fn synthesize<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<ComplexSeries> {
        let span = symbol_span(&self.pulse, &self.sampling, &self.delay, self.num_samples);
        match draw_symbols(&self.scheme, span.count, rng)? {
            Symbols::Linear(sym) => synth_linear(&sym, &self.pulse, &self.sampling, &self.delay, self.num_samples),
            Symbols::Fsk(lv) => {
                let h = self.scheme.modulation_index().expect("FSK scheme carries h");
                synth_cpfsk(&lv, &self.pulse, h, &self.sampling, &self.delay, self.num_samples)
            }
        }
    }

    /// Synthesizes, passes through `channel` and normalizes.
    pub fn realize<R: Rng + ?Sized>(&self, channel: &ChannelSpec, rng: &mut R) -> Result<Realization> {
        let x = self.synthesize(rng)?;
        let out = apply_channel(&x, channel, rng)?;
        let received = normalize_received(&out.received, out.noise_power)?;
        Ok(Realization {
            received,
            carrier_offset: out.carrier_offset,
            carrier_phase: out.carrier_phase,
            noise_power: out.noise_power,
        })
    }
}

/// Per-realization randomization of pulse and timing.
///
/// Each realization draws one pulse from `pulse_choices`; when
/// `asynchronous` is set it also draws `eps, eps0 ~ U[0,1)` and
/// `k0 ~ U{0, .., ceil(N_s + eps) - 1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub pulse_choices: Vec<PulseSpec>,
    pub samples_per_symbol: u32,
    pub asynchronous: bool,
    pub symbols_per_realization: usize,
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        if self.pulse_choices.is_empty() {
            return Err(crate::Error::invalid("at least one pulse choice is required"));
        }
        if self.samples_per_symbol == 0 || self.symbols_per_realization == 0 {
            return Err(crate::Error::invalid("samples per symbol and symbols per realization must be >= 1"));
        }
        Ok(())
    }

    pub fn transmission<R: Rng + ?Sized>(&self, scheme: ModulationScheme, rng: &mut R) -> Result<Transmission> {
        self.validate()?;
        let pulse = self.pulse_choices[rng.random_range(0..self.pulse_choices.len())];
        let (eps, eps0, k0) = if self.asynchronous {
            let eps: f64 = rng.random();
            let eps0: f64 = rng.random();
            let k0_count = (self.samples_per_symbol as f64 + eps).ceil() as u32;
            (eps, eps0, rng.random_range(0..k0_count))
        } else {
            (0.0, 0.0, 0)
        };
        let sampling = SamplingSpec::new(self.samples_per_symbol, eps, 1.0)?;
        let delay = DelaySpec::new(k0, eps0)?;
        let num_samples =
            (self.symbols_per_realization as f64 * (self.samples_per_symbol as f64 + eps)).floor() as usize;
        Ok(Transmission { scheme, pulse, sampling, delay, num_samples })
    }
}
