use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::svm::Label;

/// The seven modulations handled by the workbench.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchemeKind {
    Qam16,
    Bpsk,
    Psk4,
    Psk8,
    Fsk2,
    Fsk4,
    Fsk8,
}

impl SchemeKind {
    pub const ALL: [SchemeKind; 7] = [
        SchemeKind::Qam16,
        SchemeKind::Bpsk,
        SchemeKind::Psk4,
        SchemeKind::Psk8,
        SchemeKind::Fsk2,
        SchemeKind::Fsk4,
        SchemeKind::Fsk8,
    ];
    pub const LINEAR: [SchemeKind; 4] = [SchemeKind::Qam16, SchemeKind::Bpsk, SchemeKind::Psk4, SchemeKind::Psk8];
    pub const FSK: [SchemeKind; 3] = [SchemeKind::Fsk2, SchemeKind::Fsk4, SchemeKind::Fsk8];

    pub fn is_fsk(self) -> bool {
        matches!(self, SchemeKind::Fsk2 | SchemeKind::Fsk4 | SchemeKind::Fsk8)
    }

    pub fn name(self) -> &'static str {
        match self {
            SchemeKind::Qam16 => "qam16",
            SchemeKind::Bpsk => "bpsk",
            SchemeKind::Psk4 => "psk4",
            SchemeKind::Psk8 => "psk8",
            SchemeKind::Fsk2 => "fsk2",
            SchemeKind::Fsk4 => "fsk4",
            SchemeKind::Fsk8 => "fsk8",
        }
    }

    /// Alphabet size.
    pub fn order(self) -> usize {
        match self {
            SchemeKind::Qam16 => 16,
            SchemeKind::Bpsk | SchemeKind::Fsk2 => 2,
            SchemeKind::Psk4 | SchemeKind::Fsk4 => 4,
            SchemeKind::Psk8 | SchemeKind::Fsk8 => 8,
        }
    }
}

impl fmt::Display for SchemeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SchemeKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown modulation '{s}'")))
    }
}

/// A modulation kind plus, for FSK kinds, its modulation index `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulationScheme {
    kind: SchemeKind,
    modulation_index: Option<f64>,
}

impl ModulationScheme {
    pub fn linear(kind: SchemeKind) -> Result<Self> {
        if kind.is_fsk() {
            return Err(Error::invalid(format!("{kind} needs a modulation index")));
        }
        Ok(ModulationScheme { kind, modulation_index: None })
    }

    pub fn fsk(kind: SchemeKind, h: f64) -> Result<Self> {
        if !kind.is_fsk() {
            return Err(Error::invalid(format!("{kind} takes no modulation index")));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::invalid(format!("modulation index must be positive, got {h}")));
        }
        Ok(ModulationScheme { kind, modulation_index: Some(h) })
    }

    /// Builds either flavour; `h` is ignored for linear kinds.
    pub fn with_index(kind: SchemeKind, h: f64) -> Result<Self> {
        if kind.is_fsk() {
            Self::fsk(kind, h)
        } else {
            Self::linear(kind)
        }
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn modulation_index(&self) -> Option<f64> {
        self.modulation_index
    }

    pub fn is_fsk(&self) -> bool {
        self.kind.is_fsk()
    }

    pub fn label(&self) -> Label {
        if self.is_fsk() {
            Label::Fsk
        } else {
            Label::Linear
        }
    }

    /// Constellation points of a linear kind, unit average power.
    pub fn constellation(&self) -> Option<Vec<Complex64>> {
        let points = match self.kind {
            SchemeKind::Qam16 => {
                let lv = [-3.0, -1.0, 1.0, 3.0];
                let norm = 10f64.sqrt();
                lv.iter().flat_map(|&re| lv.iter().map(move |&im| Complex64::new(re / norm, im / norm))).collect()
            }
            SchemeKind::Bpsk => vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
            SchemeKind::Psk4 => psk_points(4),
            SchemeKind::Psk8 => psk_points(8),
            _ => return None,
        };
        Some(points)
    }

    /// FSK frequency levels `±1, ±3, ...`.
    pub fn fsk_levels(&self) -> Option<Vec<i32>> {
        if !self.is_fsk() {
            return None;
        }
        let m = self.kind.order() as i32;
        Some((0..m).map(|i| 2 * i - (m - 1)).collect())
    }

    /// `E[|c|^4]` over the equiprobable constellation.
    pub fn fourth_moment(&self) -> Option<f64> {
        self.constellation().map(|pts| pts.iter().map(|c| c.norm_sqr().powi(2)).sum::<f64>() / pts.len() as f64)
    }
}

impl fmt::Display for ModulationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulation_index {
            Some(h) => write!(f, "{}(h={h})", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

fn psk_points(m: usize) -> Vec<Complex64> {
    (0..m).map(|n| Complex64::from_polar(1.0, (2 * n + 1) as f64 * PI / m as f64)).collect()
}

/// Transmitted symbol stream: constellation points or FSK levels.
#[derive(Debug, Clone, PartialEq)]
pub enum Symbols {
    Linear(Vec<Complex64>),
    Fsk(Vec<i32>),
}

impl Symbols {
    pub fn len(&self) -> usize {
        match self {
            Symbols::Linear(v) => v.len(),
            Symbols::Fsk(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Draws `count` i.i.d. equiprobable symbols from the scheme's alphabet.
pub fn draw_symbols<R: Rng + ?Sized>(scheme: &ModulationScheme, count: usize, rng: &mut R) -> Result<Symbols> {
    if count == 0 {
        return Err(Error::invalid("symbol count must be at least 1"));
    }
    if let Some(levels) = scheme.fsk_levels() {
        Ok(Symbols::Fsk((0..count).map(|_| levels[rng.random_range(0..levels.len())]).collect()))
    } else {
        let pts = scheme.constellation().expect("linear scheme has a constellation");
        Ok(Symbols::Linear((0..count).map(|_| pts[rng.random_range(0..pts.len())]).collect()))
    }
}
