use std::f64::consts::{FRAC_1_PI, PI};

use crate::error::{Error, Result};
use crate::quadrature;

use super::sampling::SamplingSpec;

/// Default RRC truncation, in symbol periods on each side of the center.
pub const DEFAULT_RRC_HALF_WIDTH: u32 = 6;

/// Distance (in symbol periods) inside which a removable singularity of the
/// RRC formula is replaced by its limit.
const SINGULAR_EPS: f64 = 1e-8;

/// Phase-pulse table resolution, grid points per symbol period.
const PHASE_TABLE_DENSITY: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PulseSpec {
    /// Amplitude 1 on `[0, T)`.
    Rectangular,
    /// Unit-energy root raised cosine centered at 0, truncated to `|t| <= half_width * T`.
    RootRaisedCosine { rolloff: f64, half_width: u32 },
}

impl PulseSpec {
    pub fn rrc(rolloff: f64) -> Result<Self> {
        Self::rrc_truncated(rolloff, DEFAULT_RRC_HALF_WIDTH)
    }

    pub fn rrc_truncated(rolloff: f64, half_width: u32) -> Result<Self> {
        if !(rolloff > 0.0 && rolloff <= 1.0) {
            return Err(Error::invalid(format!("roll-off must lie in (0,1], got {rolloff}")));
        }
        if half_width == 0 {
            return Err(Error::invalid("RRC truncation half width must be at least 1"));
        }
        Ok(PulseSpec::RootRaisedCosine { rolloff, half_width })
    }

    pub fn rolloff(&self) -> Option<f64> {
        match *self {
            PulseSpec::RootRaisedCosine { rolloff, .. } => Some(rolloff),
            PulseSpec::Rectangular => None,
        }
    }

    /// Point of even symmetry.
    pub fn center(&self, symbol_period: f64) -> f64 {
        match self {
            PulseSpec::Rectangular => 0.5 * symbol_period,
            PulseSpec::RootRaisedCosine { .. } => 0.0,
        }
    }

    /// Closed interval outside of which the pulse is zero.
    pub fn support(&self, symbol_period: f64) -> (f64, f64) {
        match *self {
            PulseSpec::Rectangular => (0.0, symbol_period),
            PulseSpec::RootRaisedCosine { half_width, .. } => {
                let w = half_width as f64 * symbol_period;
                (-w, w)
            }
        }
    }

    /// Evaluates `p(t)` for symbol period `symbol_period`.
    pub fn eval(&self, t: f64, symbol_period: f64) -> f64 {
        match *self {
            PulseSpec::Rectangular => {
                if (0.0..symbol_period).contains(&t) {
                    1.0
                } else {
                    0.0
                }
            }
            PulseSpec::RootRaisedCosine { rolloff, half_width } => {
                if t.abs() > half_width as f64 * symbol_period {
                    0.0
                } else {
                    rrc(t / symbol_period, rolloff) / symbol_period.sqrt()
                }
            }
        }
    }
}

/// Unit-energy RRC for `T = 1`, `x = t / T`.
fn rrc(x: f64, beta: f64) -> f64 {
    let x = x.abs();
    if x < SINGULAR_EPS {
        return 1.0 - beta + 4.0 * beta * FRAC_1_PI;
    }
    let edge = 0.25 / beta;
    if (x - edge).abs() < SINGULAR_EPS {
        let a = PI * edge;
        return beta / 2f64.sqrt() * ((1.0 + 2.0 * FRAC_1_PI) * a.sin() + (1.0 - 2.0 * FRAC_1_PI) * a.cos());
    }
    let four_bx = 4.0 * beta * x;
    let num = (PI * x * (1.0 - beta)).sin() + four_bx * (PI * x * (1.0 + beta)).cos();
    let den = PI * x * (1.0 - four_bx * four_bx);
    num / den
}

/// Amplitude pulse scaled so the synthesized linear signal has unit average power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapedPulse {
    spec: PulseSpec,
    symbol_period: f64,
    scale: f64,
}

impl ShapedPulse {
    /// Rectangular pulses keep amplitude 1. RRC pulses are scaled by
    /// `1 / sqrt(sum_k p^2(k T_s) T_s / T)`.
    pub fn new(spec: PulseSpec, sampling: &SamplingSpec) -> Self {
        let symbol_period = sampling.symbol_period();
        let scale = match spec {
            PulseSpec::Rectangular => 1.0,
            PulseSpec::RootRaisedCosine { .. } => {
                let ts = sampling.sample_period();
                let reach = (spec.support(symbol_period).1 / ts).floor() as i64;
                let energy: f64 =
                    (-reach..=reach).map(|k| spec.eval(k as f64 * ts, symbol_period).powi(2)).sum::<f64>() * ts;
                1.0 / (energy / symbol_period).sqrt()
            }
        };
        ShapedPulse { spec, symbol_period, scale }
    }

    pub fn spec(&self) -> &PulseSpec {
        &self.spec
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn symbol_period(&self) -> f64 {
        self.symbol_period
    }

    pub fn support(&self) -> (f64, f64) {
        self.spec.support(self.symbol_period)
    }

    pub fn value(&self, t: f64) -> f64 {
        self.scale * self.spec.eval(t, self.symbol_period)
    }
}

/// Instantaneous-frequency pulse `q` scaled so that its integral is `pi h`.
#[derive(Debug, Clone)]
pub struct FrequencyPulse {
    spec: PulseSpec,
    symbol_period: f64,
    scale: f64,
    area: f64,
    table: Option<PhaseTable>,
}

impl FrequencyPulse {
    pub fn new(spec: PulseSpec, modulation_index: f64, symbol_period: f64) -> Self {
        let area = PI * modulation_index;
        match spec {
            PulseSpec::Rectangular => {
                FrequencyPulse { spec, symbol_period, scale: area / symbol_period, area, table: None }
            }
            PulseSpec::RootRaisedCosine { .. } => {
                let (lo, hi) = spec.support(symbol_period);
                let raw = |t: f64| spec.eval(t, symbol_period);
                let table = PhaseTable::build(&raw, lo, hi, symbol_period);
                let scale = area / table.total();
                FrequencyPulse { spec, symbol_period, scale, area, table: Some(table) }
            }
        }
    }

    pub fn spec(&self) -> &PulseSpec {
        &self.spec
    }

    pub fn support(&self) -> (f64, f64) {
        self.spec.support(self.symbol_period)
    }

    /// Total phase advance of one unit-level symbol, `pi h`.
    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn value(&self, t: f64) -> f64 {
        self.scale * self.spec.eval(t, self.symbol_period)
    }

    /// Phase pulse `G(t) = integral of q from -inf to t`.
    pub fn phase(&self, t: f64) -> f64 {
        match &self.table {
            None => self.area * (t / self.symbol_period).clamp(0.0, 1.0),
            Some(table) => self.scale * table.eval(t),
        }
    }
}

/// Cumulative integral of a smooth pulse on a uniform grid, interpolated with
/// cubic Hermite segments that use the pulse itself as the derivative.
#[derive(Debug, Clone)]
struct PhaseTable {
    start: f64,
    step: f64,
    cumulative: Vec<f64>,
    slope: Vec<f64>,
}

impl PhaseTable {
    fn build<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, symbol_period: f64) -> Self {
        let intervals = (((hi - lo) / symbol_period).round() as usize).max(1) * PHASE_TABLE_DENSITY;
        let step = (hi - lo) / intervals as f64;
        let mut cumulative = Vec::with_capacity(intervals + 1);
        let mut slope = Vec::with_capacity(intervals + 1);
        cumulative.push(0.0);
        slope.push(f(lo));
        let mut acc = 0.0;
        for i in 0..intervals {
            let a = lo + i as f64 * step;
            acc += quadrature::integrate(f, a, a + step, 1);
            cumulative.push(acc);
            // the right end of the table is evaluated just inside the support
            let t = if i + 1 == intervals { hi } else { a + step };
            slope.push(f(t));
        }
        PhaseTable { start: lo, step, cumulative, slope }
    }

    fn total(&self) -> f64 {
        *self.cumulative.last().expect("table is non-empty")
    }

    fn eval(&self, t: f64) -> f64 {
        let pos = (t - self.start) / self.step;
        if pos <= 0.0 {
            return 0.0;
        }
        let last = self.cumulative.len() - 1;
        if pos >= last as f64 {
            return self.total();
        }
        let i = pos.floor() as usize;
        let s = pos - i as f64;
        let s2 = s * s;
        let s3 = s2 * s;
        let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
        let h10 = s3 - 2.0 * s2 + s;
        let h01 = -2.0 * s3 + 3.0 * s2;
        let h11 = s3 - s2;
        h00 * self.cumulative[i]
            + h10 * self.step * self.slope[i]
            + h01 * self.cumulative[i + 1]
            + h11 * self.step * self.slope[i + 1]
    }
}
