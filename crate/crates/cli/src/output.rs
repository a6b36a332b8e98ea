//! CSV rendering. Records are built fully in memory so a failed run never
//! leaves a partial file behind.

use std::io::Write;
use std::path::Path;

use coscos::{BenchmarkRow, SampleRow};

use crate::CliError;

pub const BENCHMARK_HEADER: [&str; 8] = [
    "bounds_lo",
    "bounds_hi",
    "n_trials",
    "mean_err_c1",
    "mean_err_c2",
    "mean_time_c1_s",
    "mean_time_c2_s",
    "mean_time_ref_s",
];

pub const SAMPLE_HEADER: [&str; 6] = ["x", "cos_cos_x", "dC1_approx", "c1", "c2", "linear"];

fn render<I>(header: &[&str], records: I) -> Result<Vec<u8>, CliError>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for r in records {
        w.write_record(&r)?;
    }
    w.into_inner().map_err(|e| CliError::Io(e.into_error()))
}

pub fn benchmark_csv(rows: &[BenchmarkRow]) -> Result<Vec<u8>, CliError> {
    render(
        &BENCHMARK_HEADER,
        rows.iter().map(|r| {
            vec![
                r.bounds.lo().to_string(),
                r.bounds.hi().to_string(),
                r.n_trials.to_string(),
                r.mean_error_c1.to_string(),
                r.mean_error_c2.to_string(),
                r.mean_time_c1.to_string(),
                r.mean_time_c2.to_string(),
                r.mean_time_ref.to_string(),
            ]
        }),
    )
}

pub fn sample_csv(rows: &[SampleRow]) -> Result<Vec<u8>, CliError> {
    render(
        &SAMPLE_HEADER,
        rows.iter().map(|r| {
            [r.x, r.cos_cos, r.derivative, r.c1, r.c2, r.linear]
                .iter()
                .map(f64::to_string)
                .collect()
        }),
    )
}

/// Writes `bytes` to `out`, or to stdout when no path is given.
pub fn emit(bytes: &[u8], out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coscos::{derive_constants, sample_functions};

    #[test]
    fn sample_csv_round_trips_bit_exactly() {
        let c = derive_constants();
        let rows = sample_functions(-6.5, 6.5, 101, &c).unwrap();
        let bytes = sample_csv(&rows).unwrap();
        let mut rdr = csv::Reader::from_reader(bytes.as_slice());
        assert_eq!(rdr.headers().unwrap(), SAMPLE_HEADER.as_slice());
        for (rec, row) in rdr.records().zip(&rows) {
            let rec = rec.unwrap();
            let parsed: Vec<f64> = rec.iter().map(|f| f.parse().unwrap()).collect();
            let want = [
                row.x,
                row.cos_cos,
                row.derivative,
                row.c1,
                row.c2,
                row.linear,
            ];
            for (p, w) in parsed.iter().zip(want) {
                assert_eq!(p.to_bits(), w.to_bits());
            }
        }
        assert!(!bytes.contains(&b'\r'));
    }
}
