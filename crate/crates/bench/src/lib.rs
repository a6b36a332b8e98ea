//! Shared inputs for the criterion benchmarks in `benches/`.

use coscos::Interval;

/// Full widths of the symmetric intervals used by the reference experiment.
pub const WIDTHS: [f64; 6] = [2.0, 10.0, 20.0, 40.0, 100.0, 200.0];

pub fn symmetric_intervals() -> impl Iterator<Item = (f64, Interval)> {
    WIDTHS
        .into_iter()
        .map(|w| (w, Interval::symmetric(w / 2.0).expect("finite width")))
}
