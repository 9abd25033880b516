use std::f64::consts::{FRAC_PI_2, PI};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sigmodel::{PulseSpec, Scenario, SchemeKind};
use crate::svm::{same_snr, DEFAULT_COST};
use crate::wavelet::WaveletSpec;

/// Amplitude/frequency pulse family used by every realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PulseShape {
    /// Root raised cosine, roll-off drawn per realization from `rolloff_choices`.
    Rrc,
    Rectangular,
}

/// Everything that defines one Monte Carlo experiment.
///
/// Read from TOML with the same field names; omitted fields take the
/// defaults below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// FSK kinds are instantiated once per entry of `h_values`.
    pub schemes: Vec<SchemeKind>,
    pub h_values: Vec<f64>,
    pub snr_grid_db: Vec<f64>,
    #[serde(default = "default_anchor")]
    pub anchor_snr_db: f64,
    #[serde(default = "default_symbols")]
    pub symbols_per_realization: usize,
    #[serde(default = "default_ns")]
    pub samples_per_symbol: u32,
    #[serde(default = "default_train")]
    pub train_realizations_per_modulation: usize,
    #[serde(default = "default_test")]
    pub test_realizations_per_modulation: usize,
    #[serde(default = "default_rolloffs")]
    pub rolloff_choices: Vec<f64>,
    /// Spectrum placements; the channel draws the offset around the first,
    /// the second is reached by translation.
    #[serde(default = "default_centers")]
    pub offset_centers: [f64; 2],
    #[serde(default = "default_halfwidth")]
    pub offset_halfwidth: f64,
    #[serde(default = "yes")]
    pub fading_enabled: bool,
    #[serde(default = "default_lag")]
    pub fading_half_power_lag: u32,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default = "default_shape")]
    pub pulse_shape: PulseShape,
    #[serde(default = "yes")]
    pub asynchronous: bool,
    #[serde(default = "default_cost")]
    pub svm_cost: f64,
    #[serde(default = "default_wavelet_scale")]
    pub wavelet_scale: usize,
    #[serde(default = "default_wavelet_median")]
    pub wavelet_median_length: usize,
}

fn default_anchor() -> f64 {
    10.0
}
fn default_symbols() -> usize {
    600
}
fn default_ns() -> u32 {
    2
}
fn default_train() -> usize {
    50
}
fn default_test() -> usize {
    500
}
fn default_rolloffs() -> Vec<f64> {
    (1..=10).map(|k| k as f64 / 10.0).collect()
}
fn default_centers() -> [f64; 2] {
    [0.0, FRAC_PI_2]
}
fn default_halfwidth() -> f64 {
    PI / 20.0
}
fn yes() -> bool {
    true
}
fn default_lag() -> u32 {
    9
}
fn default_shape() -> PulseShape {
    PulseShape::Rrc
}
fn default_cost() -> f64 {
    DEFAULT_COST
}
fn default_wavelet_scale() -> usize {
    WaveletSpec::default().scale
}
fn default_wavelet_median() -> usize {
    WaveletSpec::default().median_length
}

impl ExperimentConfig {
    /// All seven schemes, SNR 0..=20 dB in 2 dB steps, `h = 3/4`.
    pub fn desk_scale() -> Self {
        ExperimentConfig {
            schemes: SchemeKind::ALL.to_vec(),
            h_values: vec![0.75],
            snr_grid_db: (0..=10).map(|i| 2.0 * i as f64).collect(),
            anchor_snr_db: default_anchor(),
            symbols_per_realization: default_symbols(),
            samples_per_symbol: default_ns(),
            train_realizations_per_modulation: default_train(),
            test_realizations_per_modulation: default_test(),
            rolloff_choices: default_rolloffs(),
            offset_centers: default_centers(),
            offset_halfwidth: default_halfwidth(),
            fading_enabled: true,
            fading_half_power_lag: default_lag(),
            master_seed: 0,
            pulse_shape: default_shape(),
            asynchronous: true,
            svm_cost: default_cost(),
            wavelet_scale: default_wavelet_scale(),
            wavelet_median_length: default_wavelet_median(),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_owned(), source })?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        let cfg = |msg: String| Err(Error::Config(msg));
        if !self.schemes.iter().any(|k| k.is_fsk()) || !self.schemes.iter().any(|k| !k.is_fsk()) {
            return cfg("schemes must include at least one FSK and one linear kind".into());
        }
        let mut seen = self.schemes.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != self.schemes.len() {
            return cfg("schemes contains duplicates".into());
        }
        if self.h_values.is_empty() || self.h_values.iter().any(|h| !(*h > 0.0 && h.is_finite())) {
            return cfg("h_values must be a non-empty list of positive numbers".into());
        }
        if self.snr_grid_db.is_empty() || self.snr_grid_db.iter().any(|s| s.is_nan() || *s == f64::NEG_INFINITY) {
            return cfg("snr_grid_db must be a non-empty list of SNRs".into());
        }
        if !self.snr_grid_db.iter().any(|&s| same_snr(s, self.anchor_snr_db)) {
            return cfg(format!("anchor_snr_db {} is not in snr_grid_db", self.anchor_snr_db));
        }
        if self.symbols_per_realization < 2
            || self.samples_per_symbol == 0
            || self.train_realizations_per_modulation == 0
            || self.test_realizations_per_modulation == 0
        {
            return cfg("symbol, sample and realization counts must be >= 1 (>= 2 symbols)".into());
        }
        if self.pulse_shape == PulseShape::Rrc
            && (self.rolloff_choices.is_empty() || self.rolloff_choices.iter().any(|r| !(*r > 0.0 && *r <= 1.0)))
        {
            return cfg("rolloff_choices must be a non-empty subset of (0, 1]".into());
        }
        if self.offset_centers.iter().any(|c| !c.is_finite())
            || !(self.offset_halfwidth >= 0.0 && self.offset_halfwidth.is_finite())
        {
            return cfg("offset centers must be finite and offset_halfwidth >= 0".into());
        }
        if self.fading_enabled && self.fading_half_power_lag == 0 {
            return cfg("fading_half_power_lag must be >= 1".into());
        }
        if !(self.svm_cost > 0.0 && self.svm_cost.is_finite()) {
            return cfg("svm_cost must be positive".into());
        }
        self.wavelet_spec().map_err(|e| Error::Config(e.to_string()))?;
        Ok(())
    }

    pub fn wavelet_spec(&self) -> Result<WaveletSpec> {
        WaveletSpec::new(self.wavelet_scale, self.wavelet_median_length)
    }

    pub fn pulse_choices(&self) -> Result<Vec<PulseSpec>> {
        match self.pulse_shape {
            PulseShape::Rectangular => Ok(vec![PulseSpec::Rectangular]),
            PulseShape::Rrc => self.rolloff_choices.iter().map(|&r| PulseSpec::rrc(r)).collect(),
        }
    }

    pub fn scenario(&self) -> Result<Scenario> {
        Ok(Scenario {
            pulse_choices: self.pulse_choices()?,
            samples_per_symbol: self.samples_per_symbol,
            asynchronous: self.asynchronous,
            symbols_per_realization: self.symbols_per_realization,
        })
    }
}
