//! Linear soft-margin SVM trained with sequential minimal optimization.
//!
//! Features are standardized with training statistics before solving the
//! dual; the model keeps those statistics so raw feature vectors can be
//! classified directly. Working-pair selection follows the second-order
//! maximal-violating-pair rule, scanned in index order, so fits are
//! deterministic.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::features::FeatureVector;

/// Default box constraint.
pub const DEFAULT_COST: f64 = 1.0;
/// Stopping tolerance on the maximal KKT violation.
pub const KKT_TOLERANCE: f64 = 1e-3;
/// Iteration cap, in passes over the training set.
pub const MAX_PASSES: usize = 10_000;

const TAU: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    /// QAM / PSK, `-1`.
    Linear,
    /// CPFSK, `+1`.
    Fsk,
}

impl Label {
    pub fn sign(self) -> f64 {
        match self {
            Label::Linear => -1.0,
            Label::Fsk => 1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        self.sign() as i8
    }

    /// Ties go to [`Label::Fsk`].
    pub fn from_decision(value: f64) -> Self {
        if value >= 0.0 {
            Label::Fsk
        } else {
            Label::Linear
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSet {
    rows: Vec<Vec<f64>>,
    labels: Vec<Label>,
}

impl LabeledSet {
    pub fn new(rows: Vec<Vec<f64>>, labels: Vec<Label>) -> Result<Self> {
        if rows.len() != labels.len() {
            return Err(Error::invalid(format!("{} vectors but {} labels", rows.len(), labels.len())));
        }
        if let Some(first) = rows.first() {
            if first.is_empty() || rows.iter().any(|r| r.len() != first.len()) {
                return Err(Error::invalid("feature vectors must share a non-zero dimension"));
            }
        }
        if rows.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::invalid("feature vectors must be finite"));
        }
        Ok(LabeledSet { rows, labels })
    }

    pub fn from_features(vectors: &[FeatureVector], labels: Vec<Label>) -> Result<Self> {
        Self::new(vectors.iter().map(|v| v.to_array().to_vec()).collect(), labels)
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// `(linear count, fsk count)`.
    pub fn class_counts(&self) -> (usize, usize) {
        let fsk = self.labels.iter().filter(|&&l| l == Label::Fsk).count();
        (self.labels.len() - fsk, fsk)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearSvmModel {
    pub weights: Vec<f64>,
    pub bias: f64,
    pub feature_means: Vec<f64>,
    pub feature_scales: Vec<f64>,
}

impl LinearSvmModel {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn standardize(&self, v: &[f64]) -> Vec<f64> {
        v.iter().zip(&self.feature_means).zip(&self.feature_scales).map(|((x, m), s)| (x - m) / s).collect()
    }

    pub fn decision_value(&self, v: &[f64]) -> f64 {
        debug_assert_eq!(v.len(), self.dim());
        let mut acc = self.bias;
        for (((w, x), m), s) in self.weights.iter().zip(v).zip(&self.feature_means).zip(&self.feature_scales) {
            acc += w * (x - m) / s;
        }
        acc
    }

    pub fn predict(&self, v: &[f64]) -> Label {
        Label::from_decision(self.decision_value(v))
    }

    pub fn predict_features(&self, v: &FeatureVector) -> Label {
        self.predict(&v.to_array())
    }

    /// Misclassification rate on `data`.
    pub fn error_rate(&self, data: &LabeledSet) -> f64 {
        if data.is_empty() {
            return 0.0;
        }
        self.errors(data) as f64 / data.len() as f64
    }

    pub fn errors(&self, data: &LabeledSet) -> usize {
        data.rows().iter().zip(data.labels()).filter(|(r, &l)| self.predict(r) != l).count()
    }
}

/// Solver diagnostics returned alongside a fit.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub iterations: usize,
    pub converged: bool,
    /// Dual variables, one per training example.
    pub alphas: Vec<f64>,
    pub cost: f64,
}

impl FitReport {
    pub fn support_vectors(&self) -> usize {
        self.alphas.iter().filter(|&&a| a > 0.0).count()
    }
}

pub fn fit(data: &LabeledSet, cost: f64) -> Result<LinearSvmModel> {
    fit_with_report(data, cost).map(|(m, _)| m)
}

pub fn fit_with_report(data: &LabeledSet, cost: f64) -> Result<(LinearSvmModel, FitReport)> {
    if !(cost > 0.0 && cost.is_finite()) {
        return Err(Error::invalid(format!("cost must be positive, got {cost}")));
    }
    let (neg, pos) = data.class_counts();
    if neg == 0 || pos == 0 {
        return Err(Error::DegenerateData("both classes must be present".into()));
    }
    let (means, scales) = standardization(data);
    let x: Vec<Vec<f64>> = data
        .rows()
        .iter()
        .map(|r| r.iter().zip(&means).zip(&scales).map(|((v, m), s)| (v - m) / s).collect())
        .collect();
    let y: Vec<f64> = data.labels().iter().map(|l| l.sign()).collect();

    let solution = solve_dual(&x, &y, cost);
    let dim = data.dim();
    let mut weights = vec![0.0; dim];
    for (xi, (a, yi)) in x.iter().zip(solution.alphas.iter().zip(&y)) {
        if *a > 0.0 {
            for d in 0..dim {
                weights[d] += a * yi * xi[d];
            }
        }
    }
    if !solution.converged {
        log::warn!("SMO stopped at the iteration cap ({} iterations)", solution.iterations);
    }
    let model = LinearSvmModel { weights, bias: solution.bias, feature_means: means, feature_scales: scales };
    let report =
        FitReport { iterations: solution.iterations, converged: solution.converged, alphas: solution.alphas, cost };
    Ok((model, report))
}

fn standardization(data: &LabeledSet) -> (Vec<f64>, Vec<f64>) {
    let n = data.len() as f64;
    let dim = data.dim();
    let mut means = vec![0.0; dim];
    for r in data.rows() {
        for d in 0..dim {
            means[d] += r[d] / n;
        }
    }
    let mut scales = vec![0.0; dim];
    for r in data.rows() {
        for d in 0..dim {
            scales[d] += (r[d] - means[d]).powi(2) / n;
        }
    }
    for (d, s) in scales.iter_mut().enumerate() {
        *s = s.sqrt();
        if s.is_nan() || *s <= 1e-300 {
            log::warn!("feature coordinate {d} has zero spread; using unit scale");
            *s = 1.0;
        }
    }
    (means, scales)
}

struct DualSolution {
    alphas: Vec<f64>,
    bias: f64,
    iterations: usize,
    converged: bool,
}

/// Minimizes `0.5 a'Qa - e'a` s.t. `0 <= a <= cost`, `y'a = 0`, with `Q_ij = y_i y_j x_i.x_j`.
fn solve_dual(x: &[Vec<f64>], y: &[f64], cost: f64) -> DualSolution {
    let n = x.len();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(p, q)| p * q).sum::<f64>();
    let kernel: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| dot(&x[i], &x[j])).collect()).collect();
    let diag: Vec<f64> = (0..n).map(|i| kernel[i][i]).collect();

    let mut alpha = vec![0.0; n];
    let mut grad = vec![-1.0; n];
    let max_iter = MAX_PASSES.saturating_mul(n.max(1));
    let upper = |a: f64| a >= cost;
    let lower = |a: f64| a <= 0.0;

    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        // first index: maximal -y_t G_t over I_up
        let mut gmax = f64::NEG_INFINITY;
        let mut i_sel = None;
        for t in 0..n {
            let in_up = if y[t] > 0.0 { !upper(alpha[t]) } else { !lower(alpha[t]) };
            if in_up && -y[t] * grad[t] >= gmax {
                gmax = -y[t] * grad[t];
                i_sel = Some(t);
            }
        }
        let Some(i) = i_sel else {
            converged = true;
            break;
        };
        // second index: largest objective decrease over I_low
        let mut gmin = f64::INFINITY;
        let mut best = f64::INFINITY;
        let mut j_sel = None;
        for t in 0..n {
            let in_low = if y[t] > 0.0 { !lower(alpha[t]) } else { !upper(alpha[t]) };
            if !in_low {
                continue;
            }
            let v = -y[t] * grad[t];
            gmin = gmin.min(v);
            let b = gmax - v;
            if b > 0.0 {
                let a = diag[i] + diag[t] - 2.0 * kernel[i][t];
                let obj = -(b * b) / if a > 0.0 { a } else { TAU };
                if obj <= best {
                    best = obj;
                    j_sel = Some(t);
                }
            }
        }
        if gmax - gmin < KKT_TOLERANCE {
            converged = true;
            break;
        }
        let Some(j) = j_sel else {
            converged = true;
            break;
        };
        iterations += 1;

        let (old_i, old_j) = (alpha[i], alpha[j]);
        let qij = y[i] * y[j] * kernel[i][j];
        if y[i] != y[j] {
            let quad = (diag[i] + diag[j] + 2.0 * qij).max(TAU);
            let delta = (-grad[i] - grad[j]) / quad;
            let diff = alpha[i] - alpha[j];
            alpha[i] += delta;
            alpha[j] += delta;
            if diff > 0.0 {
                if alpha[j] < 0.0 {
                    alpha[j] = 0.0;
                    alpha[i] = diff;
                }
            } else if alpha[i] < 0.0 {
                alpha[i] = 0.0;
                alpha[j] = -diff;
            }
            if diff > 0.0 {
                if alpha[i] > cost {
                    alpha[i] = cost;
                    alpha[j] = cost - diff;
                }
            } else if alpha[j] > cost {
                alpha[j] = cost;
                alpha[i] = cost + diff;
            }
        } else {
            let quad = (diag[i] + diag[j] - 2.0 * qij).max(TAU);
            let delta = (grad[i] - grad[j]) / quad;
            let sum = alpha[i] + alpha[j];
            alpha[i] -= delta;
            alpha[j] += delta;
            if sum > cost {
                if alpha[i] > cost {
                    alpha[i] = cost;
                    alpha[j] = sum - cost;
                }
            } else if alpha[j] < 0.0 {
                alpha[j] = 0.0;
                alpha[i] = sum;
            }
            if sum > cost {
                if alpha[j] > cost {
                    alpha[j] = cost;
                    alpha[i] = sum - cost;
                }
            } else if alpha[i] < 0.0 {
                alpha[i] = 0.0;
                alpha[j] = sum;
            }
        }
        let (di, dj) = (alpha[i] - old_i, alpha[j] - old_j);
        for t in 0..n {
            grad[t] += y[t] * (y[i] * kernel[i][t] * di + y[j] * kernel[j][t] * dj);
        }
    }

    // bias: average over free vectors, else midpoint of the feasible interval
    let mut free_sum = 0.0;
    let mut free = 0usize;
    let mut ub = f64::INFINITY;
    let mut lb = f64::NEG_INFINITY;
    for t in 0..n {
        let yg = y[t] * grad[t];
        if upper(alpha[t]) {
            if y[t] < 0.0 {
                ub = ub.min(yg);
            } else {
                lb = lb.max(yg);
            }
        } else if lower(alpha[t]) {
            if y[t] > 0.0 {
                ub = ub.min(yg);
            } else {
                lb = lb.max(yg);
            }
        } else {
            free += 1;
            free_sum += yg;
        }
    }
    let rho = if free > 0 { free_sum / free as f64 } else { 0.5 * (ub + lb) };
    DualSolution { alphas: alpha, bias: -rho, iterations, converged }
}

/// Per-example KKT residuals of a fit (0 when the condition holds exactly).
pub fn kkt_residuals(model: &LinearSvmModel, data: &LabeledSet, report: &FitReport) -> Vec<f64> {
    data.rows()
        .iter()
        .zip(data.labels())
        .zip(&report.alphas)
        .map(|((r, l), &a)| {
            let margin = l.sign() * model.decision_value(r);
            if a <= 0.0 {
                (1.0 - margin).max(0.0)
            } else if a >= report.cost {
                (margin - 1.0).max(0.0)
            } else {
                (margin - 1.0).abs()
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TrainProtocol {
    /// Fit once on the training split at this SNR, reuse for every SNR.
    TrainOnceAt(f64),
    TrainPerSnr,
}

impl TrainProtocol {
    pub fn name(&self) -> &'static str {
        match self {
            TrainProtocol::TrainOnceAt(_) => "train-once",
            TrainProtocol::TrainPerSnr => "train-per-snr",
        }
    }
}

/// Disjoint train and test sets collected at one SNR.
#[derive(Debug, Clone)]
pub struct SnrDataset {
    pub snr_db: f64,
    pub train: LabeledSet,
    pub test: LabeledSet,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolOutcome {
    pub snr_db: f64,
    pub errors: usize,
    pub trials: usize,
}

impl ProtocolOutcome {
    pub fn error_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.errors as f64 / self.trials as f64
        }
    }
}

pub(crate) fn same_snr(a: f64, b: f64) -> bool {
    a == b || (a - b).abs() < 1e-9
}

/// Evaluates `protocol` on every dataset, in the order given.
pub fn run_protocol(protocol: TrainProtocol, datasets: &[SnrDataset], cost: f64) -> Result<Vec<ProtocolOutcome>> {
    let outcome = |model: &LinearSvmModel, d: &SnrDataset| ProtocolOutcome {
        snr_db: d.snr_db,
        errors: model.errors(&d.test),
        trials: d.test.len(),
    };
    match protocol {
        TrainProtocol::TrainOnceAt(anchor) => {
            let anchor_set =
                datasets.iter().find(|d| same_snr(d.snr_db, anchor)).ok_or(Error::MissingAnchor(anchor))?;
            let model = fit(&anchor_set.train, cost)?;
            Ok(datasets.iter().map(|d| outcome(&model, d)).collect())
        }
        TrainProtocol::TrainPerSnr => datasets.iter().map(|d| fit(&d.train, cost).map(|m| outcome(&m, d))).collect(),
    }
}

/// Flat text record of a fitted model plus how it was trained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelRecord {
    pub protocol: String,
    pub anchor_snr_db: Option<f64>,
    pub cost: f64,
    pub modulation_index: Option<f64>,
    #[serde(flatten)]
    pub model: LinearSvmModel,
}

impl ModelRecord {
    pub fn to_text(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_text(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()?).map_err(|source| Error::Io { path: path.to_owned(), source })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_owned(), source })?;
        Self::from_text(&text)
    }
}
