//! Configuration-driven Monte Carlo runner.
//!
//! Every realization is a pure function of `(master_seed, trial_id)`: the
//! generator is ChaCha8 seeded with the master seed and switched to stream
//! `trial_id`. Trial ids are assigned from the experiment layout
//! (`h` index, SNR index, split, scheme, repetition), so the output does not
//! depend on how realizations are scheduled across threads.

mod config;
mod output;

pub use config::{ExperimentConfig, PulseShape};
pub use output::{
    emit_features, emit_results, parse_features, parse_results, wilson_interval, ResultsWriter, FEATURE_HEADER,
    RESULT_HEADER,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::features::extract_features;
use crate::sigmodel::{translate_spectrum, ChannelSpec, ModulationScheme, Scenario, SchemeKind};
use crate::svm::{fit, run_protocol, Label, LabeledSet, ModelRecord, SnrDataset, TrainProtocol};
use crate::wavelet::wavelet_feature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Test,
}

/// One realization: what was drawn and the features it produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial_id: u64,
    pub split: Split,
    pub scheme: SchemeKind,
    pub h: Option<f64>,
    pub snr_db: f64,
    /// `None` for rectangular pulses.
    pub rolloff: Option<f64>,
    pub carrier_offset: f64,
    pub eps: f64,
    pub eps0: f64,
    pub k0: u32,
    pub mean_im_halfpi: f64,
    pub var_im_zero: f64,
    pub var_im_halfpi: f64,
    pub wavelet_feature: f64,
    pub label: Label,
}

impl TrialRecord {
    pub fn features(&self) -> [f64; 3] {
        [self.mean_im_halfpi, self.var_im_zero, self.var_im_halfpi]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "proposed-train-once")]
    ProposedTrainOnce,
    #[serde(rename = "proposed-train-per-snr")]
    ProposedTrainPerSnr,
    #[serde(rename = "wavelet")]
    Wavelet,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ProposedTrainOnce, Method::ProposedTrainPerSnr, Method::Wavelet];
}

/// Misclassification rate of one method at one SNR.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub method: Method,
    pub snr_db: f64,
    pub h: f64,
    pub pe: f64,
    pub n_trials: usize,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl ResultRow {
    pub fn new(method: Method, snr_db: f64, h: f64, errors: usize, n_trials: usize) -> Self {
        let pe = if n_trials == 0 { 0.0 } else { errors as f64 / n_trials as f64 };
        let (ci_low, ci_high) = wilson_interval(errors, n_trials);
        ResultRow { method, snr_db, h, pe, n_trials, ci_low, ci_high }
    }
}

/// Channel at one grid SNR, with the offset drawn around the first placement.
pub fn channel_at(config: &ExperimentConfig, snr_db: f64) -> ChannelSpec {
    ChannelSpec {
        snr_db,
        carrier_offset_center: config.offset_centers[0],
        carrier_offset_halfwidth: config.offset_halfwidth,
        fading_enabled: config.fading_enabled,
        fading_half_power_lag: config.fading_half_power_lag,
    }
}

/// Generates and featurizes one realization; fully determined by
/// `(config.master_seed, trial_id)`.
pub fn run_realization(
    scheme: ModulationScheme,
    channel: &ChannelSpec,
    config: &ExperimentConfig,
    trial_id: u64,
    split: Split,
) -> Result<TrialRecord> {
    let scenario = config.scenario()?;
    realize_with(&scenario, scheme, channel, config, trial_id, split)
}

fn realize_with(
    scenario: &Scenario,
    scheme: ModulationScheme,
    channel: &ChannelSpec,
    config: &ExperimentConfig,
    trial_id: u64,
    split: Split,
) -> Result<TrialRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.master_seed);
    rng.set_stream(trial_id);
    let tx = scenario.transmission(scheme, &mut rng)?;
    let r = tx.realize(channel, &mut rng)?;
    let s_second = translate_spectrum(&r.received, config.offset_centers[1] - config.offset_centers[0]);
    let f = extract_features(&r.received, &s_second)?;
    let w = wavelet_feature(&s_second, &config.wavelet_spec()?)?;
    Ok(TrialRecord {
        trial_id,
        split,
        scheme: scheme.kind(),
        h: scheme.modulation_index(),
        snr_db: channel.snr_db,
        rolloff: tx.pulse.rolloff(),
        carrier_offset: r.carrier_offset,
        eps: tx.sampling.symbol_fraction(),
        eps0: tx.delay.fractional_delay(),
        k0: tx.delay.integer_delay(),
        mean_im_halfpi: f.mean_im_halfpi,
        var_im_zero: f.var_im_zero,
        var_im_halfpi: f.var_im_halfpi,
        wavelet_feature: w,
        label: scheme.label(),
    })
}

/// Train and test records at one grid SNR.
#[derive(Debug, Clone)]
pub struct SnrBlock {
    pub snr_db: f64,
    pub train: Vec<TrialRecord>,
    pub test: Vec<TrialRecord>,
}

fn trials_per_h(config: &ExperimentConfig) -> u64 {
    let per_snr = (config.train_realizations_per_modulation + config.test_realizations_per_modulation) as u64
        * config.schemes.len() as u64;
    per_snr * config.snr_grid_db.len() as u64
}

/// Realizations for `config.h_values[h_index]` at every grid SNR, generated
/// in parallel and returned in trial-id order.
pub fn generate_for_h(config: &ExperimentConfig, h_index: usize) -> Result<Vec<SnrBlock>> {
    config.validate()?;
    let h = config.h_values[h_index];
    let scenario = config.scenario()?;
    let schemes = config.schemes.iter().map(|&k| ModulationScheme::with_index(k, h)).collect::<Result<Vec<_>>>()?;
    let mut next_id = h_index as u64 * trials_per_h(config);
    let mut blocks = Vec::with_capacity(config.snr_grid_db.len());
    for &snr_db in &config.snr_grid_db {
        let channel = channel_at(config, snr_db);
        let mut split_records = |split: Split, count: usize| -> Result<Vec<TrialRecord>> {
            let tasks: Vec<(ModulationScheme, u64)> = schemes
                .iter()
                .flat_map(|&s| std::iter::repeat_n(s, count))
                .enumerate()
                .map(|(i, s)| (s, next_id + i as u64))
                .collect();
            next_id += tasks.len() as u64;
            tasks.into_par_iter().map(|(s, id)| realize_with(&scenario, s, &channel, config, id, split)).collect()
        };
        let train = split_records(Split::Train, config.train_realizations_per_modulation)?;
        let test = split_records(Split::Test, config.test_realizations_per_modulation)?;
        log::debug!("h = {h}, snr = {snr_db} dB: {} train, {} test", train.len(), test.len());
        blocks.push(SnrBlock { snr_db, train, test });
    }
    Ok(blocks)
}

fn proposed_set(records: &[TrialRecord]) -> Result<LabeledSet> {
    LabeledSet::new(records.iter().map(|r| r.features().to_vec()).collect(), records.iter().map(|r| r.label).collect())
}

fn wavelet_set(records: &[TrialRecord]) -> Result<LabeledSet> {
    LabeledSet::new(
        records.iter().map(|r| vec![r.wavelet_feature]).collect(),
        records.iter().map(|r| r.label).collect(),
    )
}

/// Results for one modulation index.
#[derive(Debug, Clone)]
pub struct HResult {
    pub h: f64,
    pub rows: Vec<ResultRow>,
    /// The model fitted at the anchor SNR and reused across the sweep.
    pub anchor_model: ModelRecord,
}

/// Runs all three methods on already generated blocks.
pub fn evaluate_blocks(config: &ExperimentConfig, h: f64, blocks: &[SnrBlock]) -> Result<HResult> {
    let proposed = blocks
        .iter()
        .map(|b| Ok(SnrDataset { snr_db: b.snr_db, train: proposed_set(&b.train)?, test: proposed_set(&b.test)? }))
        .collect::<Result<Vec<_>>>()?;
    let wavelet = blocks
        .iter()
        .map(|b| Ok(SnrDataset { snr_db: b.snr_db, train: wavelet_set(&b.train)?, test: wavelet_set(&b.test)? }))
        .collect::<Result<Vec<_>>>()?;
    let anchor = TrainProtocol::TrainOnceAt(config.anchor_snr_db);
    let runs = [
        (Method::ProposedTrainOnce, run_protocol(anchor, &proposed, config.svm_cost)?),
        (Method::ProposedTrainPerSnr, run_protocol(TrainProtocol::TrainPerSnr, &proposed, config.svm_cost)?),
        (Method::Wavelet, run_protocol(TrainProtocol::TrainPerSnr, &wavelet, config.svm_cost)?),
    ];
    let rows = runs
        .iter()
        .flat_map(|(m, outcomes)| outcomes.iter().map(move |o| ResultRow::new(*m, o.snr_db, h, o.errors, o.trials)))
        .collect();
    let anchor_train = &proposed
        .iter()
        .find(|d| crate::svm::same_snr(d.snr_db, config.anchor_snr_db))
        .expect("validated config contains the anchor")
        .train;
    let anchor_model = ModelRecord {
        protocol: anchor.name().to_string(),
        anchor_snr_db: Some(config.anchor_snr_db),
        cost: config.svm_cost,
        modulation_index: Some(h),
        model: fit(anchor_train, config.svm_cost)?,
    };
    Ok(HResult { h, rows, anchor_model })
}

/// Runs the whole experiment, handing each `h` to `sink` as soon as it is
/// finished so partial results survive an interrupted run.
pub fn run_experiment_with<F>(config: &ExperimentConfig, mut sink: F) -> Result<Vec<ResultRow>>
where
    F: FnMut(&HResult) -> Result<()>,
{
    config.validate()?;
    let mut all = Vec::new();
    for (hi, &h) in config.h_values.iter().enumerate() {
        log::info!("h = {h}: generating realizations");
        let blocks = generate_for_h(config, hi)?;
        let result = evaluate_blocks(config, h, &blocks)?;
        sink(&result)?;
        all.extend(result.rows);
    }
    Ok(all)
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    run_experiment_with(config, |_| Ok(()))
}

/// Every realization of the experiment, in trial-id order.
pub fn collect_records(config: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    let mut out = Vec::new();
    for hi in 0..config.h_values.len() {
        for b in generate_for_h(config, hi)? {
            out.extend(b.train);
            out.extend(b.test);
        }
    }
    Ok(out)
}
