use std::fs::File;
use std::path::Path;

use crate::error::{Error, Result};

use super::{ResultRow, TrialRecord};

pub const RESULT_HEADER: [&str; 7] = ["method", "snr_db", "h", "pe", "n_trials", "ci_low", "ci_high"];

pub const FEATURE_HEADER: [&str; 15] = [
    "trial_id",
    "split",
    "scheme",
    "h",
    "snr_db",
    "rolloff",
    "carrier_offset",
    "eps",
    "eps0",
    "k0",
    "mean_im_halfpi",
    "var_im_zero",
    "var_im_halfpi",
    "wavelet_feature",
    "label",
];

const Z95: f64 = 1.959_963_984_540_054;

/// Wilson score 95% interval for `errors` out of `n`.
pub fn wilson_interval(errors: usize, n: usize) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let n_f = n as f64;
    let p = errors as f64 / n_f;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n_f;
    let center = (p + z2 / (2.0 * n_f)) / denom;
    let half = Z95 / denom * (p * (1.0 - p) / n_f + z2 / (4.0 * n_f * n_f)).sqrt();
    // clamp so the interval always contains p despite rounding
    ((center - half).max(0.0).min(p), (center + half).min(1.0).max(p))
}

fn create(path: &Path) -> Result<File> {
    File::create(path).map_err(|source| Error::Io { path: path.to_owned(), source })
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|source| Error::Io { path: path.to_owned(), source })
}

fn writer(file: File, header: &[&str]) -> Result<csv::Writer<File>> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(file);
    w.write_record(header)?;
    Ok(w)
}

/// Results file that is flushed after every batch of rows.
pub struct ResultsWriter {
    inner: csv::Writer<File>,
    path: std::path::PathBuf,
}

impl ResultsWriter {
    pub fn create(path: &Path) -> Result<Self> {
        Ok(ResultsWriter { inner: writer(create(path)?, &RESULT_HEADER)?, path: path.to_owned() })
    }

    pub fn write_rows(&mut self, rows: &[ResultRow]) -> Result<()> {
        for r in rows {
            self.inner.serialize(r)?;
        }
        self.inner.flush().map_err(|source| Error::Io { path: self.path.clone(), source })
    }
}

pub fn emit_results(rows: &[ResultRow], path: &Path) -> Result<()> {
    ResultsWriter::create(path)?.write_rows(rows)
}

pub fn emit_features(records: &[TrialRecord], path: &Path) -> Result<()> {
    let mut w = writer(create(path)?, &FEATURE_HEADER)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(|source| Error::Io { path: path.to_owned(), source })
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path, header: &[&str]) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_reader(open(path)?);
    if r.headers()?.iter().ne(header.iter().copied()) {
        return Err(Error::Config(format!("{}: unexpected header", path.display())));
    }
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn parse_results(path: &Path) -> Result<Vec<ResultRow>> {
    parse(path, &RESULT_HEADER)
}

pub fn parse_features(path: &Path) -> Result<Vec<TrialRecord>> {
    parse(path, &FEATURE_HEADER)
}
