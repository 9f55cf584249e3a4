//! Synthetic test series built from a stream of uniform decimal digits.
//!
//! Each value consumes eight digits `d1..d8`: `d1` in `0..=4` makes the value
//! negative, `d2 d3` are the integer part and `d4..d8` the five fractional
//! digits. Values therefore lie in `[-99.99999, 99.99999]` on a `1e-5` lattice.

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::transform::TimeSeries;
use crate::waves::GridSpec;

/// Largest multiple of 10 that fits in `u32`; draws at or above it are
/// rejected so every digit is equally likely.
const DIGIT_ZONE: u32 = u32::MAX - (u32::MAX % 10) - 1;

pub const DIGITS_PER_VALUE: usize = 8;

/// Seeded, reproducible source of decimal digits.
#[derive(Debug, Clone)]
pub struct DigitStream {
    seed: u64,
    rng: ChaCha20Rng,
}

impl DigitStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha20Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_digit(&mut self) -> u8 {
        loop {
            let x = self.rng.next_u32();
            if x <= DIGIT_ZONE {
                return (x % 10) as u8;
            }
        }
    }

    pub fn next_value(&mut self) -> f64 {
        let mut digits = [0u8; DIGITS_PER_VALUE];
        digits.iter_mut().for_each(|d| *d = self.next_digit());
        value_from_digits(&digits)
    }
}

/// Maps eight digits to a value. A zero magnitude is always `+0.0`.
pub fn value_from_digits(digits: &[u8; DIGITS_PER_VALUE]) -> f64 {
    debug_assert!(digits.iter().all(|&d| d < 10));
    let units = digits[1..]
        .iter()
        .fold(0u64, |acc, &d| acc * 10 + u64::from(d));
    let magnitude = units as f64 / 100_000.0;
    if digits[0] <= 4 && units != 0 {
        -magnitude
    } else {
        magnitude
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedSeries {
    pub series: TimeSeries,
    pub seed: u64,
}

/// Draws `grid.n()` consecutive values from a fresh stream seeded with `seed`.
pub fn generate(seed: u64, grid: GridSpec) -> GeneratedSeries {
    let mut stream = DigitStream::new(seed);
    let values = (0..grid.n()).map(|_| stream.next_value()).collect();
    let series = TimeSeries::new(values, grid).expect("generated values are finite and n-long");
    GeneratedSeries { series, seed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_mapping() {
        assert_eq!(value_from_digits(&[3, 6, 2, 1, 7, 3, 8, 7]), -62.17387);
        let zero = value_from_digits(&[9, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(zero, 0.0);
        assert!(zero.is_sign_positive());
        let neg_zero = value_from_digits(&[2, 0, 0, 0, 0, 0, 0, 0]);
        assert!(neg_zero.is_sign_positive());
        assert_eq!(value_from_digits(&[0, 9, 9, 9, 9, 9, 9, 9]), -99.99999);
        assert_eq!(value_from_digits(&[5, 9, 9, 9, 9, 9, 9, 9]), 99.99999);
        assert_eq!(value_from_digits(&[5, 0, 1, 0, 0, 0, 0, 0]), 1.0);
    }

    #[test]
    fn rejection_zone_is_a_multiple_of_ten() {
        assert_eq!((u64::from(DIGIT_ZONE) + 1) % 10, 0);
        assert!(u64::from(DIGIT_ZONE) + 10 > u64::from(u32::MAX));
    }

    #[test]
    fn digits_are_uniform() {
        let mut stream = DigitStream::new(20240601);
        let draws = 1_000_000;
        let mut counts = [0u64; 10];
        for _ in 0..draws {
            counts[stream.next_digit() as usize] += 1;
        }
        let expected = draws as f64 / 10.0;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // 0.999 quantile of chi-square with 9 degrees of freedom
        assert!(chi2 < 27.877, "chi2 = {chi2}, counts = {counts:?}");
    }

    #[test]
    fn sign_balance() {
        let mut stream = DigitStream::new(99);
        let draws = 100_000;
        let negatives = (0..draws).filter(|_| stream.next_value() < 0.0).count() as f64;
        let sigma = (draws as f64 * 0.25).sqrt();
        // a zero magnitude counts as positive, which shifts the mean by ~5e-8
        assert!(
            (negatives - draws as f64 / 2.0).abs() < 3.0 * sigma,
            "{negatives}"
        );
    }

    #[test]
    fn values_on_lattice_and_in_range() {
        let mut stream = DigitStream::new(1);
        for _ in 0..100_000 {
            let v = stream.next_value();
            assert!(v.abs() <= 99.99999);
            let scaled = v * 100_000.0;
            assert!((scaled - scaled.round()).abs() < 1e-6, "{v}");
        }
    }

    #[test]
    fn determinism() {
        let grid = GridSpec::from_sampling_rate(3, 2000.0).unwrap();
        assert_eq!(generate(42, grid), generate(42, grid));
        let big = GridSpec::from_sampling_rate(100, 2000.0).unwrap();
        assert_ne!(generate(42, big).series, generate(43, big).series);
    }

    #[test]
    fn single_value_grid() {
        let grid = GridSpec::from_delta_t(1, 5.0).unwrap();
        let g = generate(7, grid);
        assert_eq!(g.series.len(), 1);
        assert_eq!(g.seed, 7);
        assert_eq!(crate::waves::train_frequency(&grid, 1).unwrap(), 0.1);
    }
}
