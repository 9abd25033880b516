use crate::error::{Error, Result};

/// Symbol timing relative to the sampling clock: `T = (N_s + eps) T_s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingSpec {
    samples_per_symbol: u32,
    symbol_fraction: f64,
    sample_period: f64,
}

impl SamplingSpec {
    pub fn new(samples_per_symbol: u32, symbol_fraction: f64, sample_period: f64) -> Result<Self> {
        if samples_per_symbol == 0 {
            return Err(Error::invalid("samples per symbol must be at least 1"));
        }
        if !(0.0..1.0).contains(&symbol_fraction) {
            return Err(Error::invalid(format!("symbol fraction must lie in [0,1), got {symbol_fraction}")));
        }
        if !(sample_period > 0.0 && sample_period.is_finite()) {
            return Err(Error::invalid(format!("sample period must be positive, got {sample_period}")));
        }
        Ok(SamplingSpec { samples_per_symbol, symbol_fraction, sample_period })
    }

    /// Integer samples per symbol, unit sample period, no fractional part.
    pub fn synchronous(samples_per_symbol: u32) -> Result<Self> {
        Self::new(samples_per_symbol, 0.0, 1.0)
    }

    pub fn samples_per_symbol(&self) -> u32 {
        self.samples_per_symbol
    }

    pub fn symbol_fraction(&self) -> f64 {
        self.symbol_fraction
    }

    pub fn sample_period(&self) -> f64 {
        self.sample_period
    }

    pub fn symbol_period(&self) -> f64 {
        (self.samples_per_symbol as f64 + self.symbol_fraction) * self.sample_period
    }
}

/// Channel delay `t0 = (k0 + eps0) T_s`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DelaySpec {
    integer_delay: u32,
    fractional_delay: f64,
}

impl DelaySpec {
    pub fn new(integer_delay: u32, fractional_delay: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&fractional_delay) {
            return Err(Error::invalid(format!("fractional delay must lie in [0,1), got {fractional_delay}")));
        }
        Ok(DelaySpec { integer_delay, fractional_delay })
    }

    pub fn none() -> Self {
        DelaySpec::default()
    }

    pub fn integer_delay(&self) -> u32 {
        self.integer_delay
    }

    pub fn fractional_delay(&self) -> f64 {
        self.fractional_delay
    }

    pub fn seconds(&self, sample_period: f64) -> f64 {
        (self.integer_delay as f64 + self.fractional_delay) * sample_period
    }
}

/// Continuous time of received sample `k`, i.e. `k T_s - t0`.
pub fn sample_time(k: i64, sampling: &SamplingSpec, delay: &DelaySpec) -> f64 {
    k as f64 * sampling.sample_period - delay.seconds(sampling.sample_period)
}

/// Range of symbol indices `n` a synthesis needs.
///
/// Symbol `values[i]` passed to the synthesizers is transmitted at index
/// `n = first + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolSpan {
    pub first: i64,
    pub count: usize,
}

impl SymbolSpan {
    pub fn last(&self) -> i64 {
        self.first + self.count as i64 - 1
    }

    /// Symbols whose pulse, with support `[lo, hi]` relative to `nT`, can be
    /// nonzero somewhere in `[t_from, t_to]`.
    pub(crate) fn covering(t_from: f64, t_to: f64, support: (f64, f64), symbol_period: f64) -> SymbolSpan {
        let first = ((t_from - support.1) / symbol_period).floor() as i64;
        let last = ((t_to - support.0) / symbol_period).ceil() as i64;
        SymbolSpan { first, count: (last - first + 1) as usize }
    }

    pub(crate) fn check(&self, got: usize) -> Result<()> {
        if got < self.count {
            Err(Error::InsufficientSymbols { needed: self.count, got })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SamplingSpec::new(0, 0.0, 1.0).is_err());
        assert!(SamplingSpec::new(2, 1.0, 1.0).is_err());
        assert!(SamplingSpec::new(2, 0.5, -1.0).is_err());
        assert!(DelaySpec::new(1, 1.0).is_err());
        let s = SamplingSpec::new(2, 0.25, 0.5).unwrap();
        assert_eq!(s.symbol_period(), 1.125);
        assert_eq!(DelaySpec::new(3, 0.5).unwrap().seconds(0.5), 1.75);
    }

    #[test]
    fn covering_span() {
        // rectangular support [0, 2): times 0..=5 touch symbols 0..=2 (plus guard)
        let span = SymbolSpan::covering(0.0, 5.0, (0.0, 2.0), 2.0);
        assert!(span.first <= 0 && span.last() >= 2);
        assert!(span.check(span.count).is_ok());
        assert!(span.check(span.count - 1).is_err());
    }
}
