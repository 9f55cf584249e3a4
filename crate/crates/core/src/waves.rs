//! Square-wave train geometry over the analysis interval.
//!
//! The interval `delta_t` is split into `n` equal subintervals. Train `j`
//! (1-based) alternates sign every `n - j + 1` subintervals, starting with a
//! positive half-wave, so train 1 is constant and train `n` flips on every
//! sample. All indices on this surface are 1-based.

use crate::error::{Error, Result};

const GRID_REL_TOL: f64 = 1e-9;

/// Sampling layout of a series: `n` samples spread over `delta_t` seconds
/// at `f_s` samples per second.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    n: usize,
    delta_t: f64,
    f_s: f64,
}

impl GridSpec {
    /// Validates `n = f_s * delta_t` to a relative tolerance of 1e-9.
    pub fn new(n: usize, delta_t: f64, f_s: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGrid("n must be at least 1".into()));
        }
        if !(delta_t.is_finite() && delta_t > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "delta_t must be positive and finite, got {delta_t}"
            )));
        }
        if !(f_s.is_finite() && f_s > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "f_s must be positive and finite, got {f_s}"
            )));
        }
        let implied = f_s * delta_t;
        let nf = n as f64;
        if ((implied - nf) / nf).abs() > GRID_REL_TOL {
            return Err(Error::InvalidGrid(format!(
                "n = {n} does not match f_s * delta_t = {implied}"
            )));
        }
        Ok(Self { n, delta_t, f_s })
    }

    pub fn from_delta_t(n: usize, delta_t: f64) -> Result<Self> {
        Self::new(n, delta_t, n as f64 / delta_t)
    }

    pub fn from_sampling_rate(n: usize, f_s: f64) -> Result<Self> {
        Self::new(n, n as f64 / f_s, f_s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Length of the analysis interval in seconds.
    pub fn delta_t(&self) -> f64 {
        self.delta_t
    }

    /// Sampling frequency in hertz.
    pub fn f_s(&self) -> f64 {
        self.f_s
    }

    pub fn pattern(&self) -> SignPattern {
        SignPattern { n: self.n }
    }

    /// Descriptors for trains `1..=n`, in ascending frequency.
    pub fn trains(&self) -> impl Iterator<Item = TrainDescriptor> + '_ {
        (1..=self.n).map(move |i| TrainDescriptor {
            index: i,
            half_wave_length: self.n - i + 1,
            frequency: frequency_unchecked(self, i),
        })
    }
}

/// Sign of one cell of the pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// The implicit `n x n` sign matrix: row `i` is a subinterval, column `j` a
/// train. Entries are computed on demand and never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignPattern {
    n: usize,
}

impl SignPattern {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGrid("n must be at least 1".into()));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sign(&self, i: usize, j: usize) -> Result<Sign> {
        sign_at(self.n, i, j)
    }

    /// Constant-sign runs of column `j`, top to bottom, as 0-based half-open
    /// row ranges. The last run may be shorter than the half-wave length.
    pub fn column_runs(&self, j: usize) -> Result<ColumnRuns> {
        let len = half_wave_length(self.n, j)?;
        Ok(ColumnRuns {
            n: self.n,
            len,
            start: 0,
            sign: Sign::Plus,
        })
    }

    /// Row `i` as a vector of signs, columns `1..=n`.
    pub fn row(&self, i: usize) -> Result<Vec<Sign>> {
        check_index(i, self.n)?;
        Ok((1..=self.n).map(|j| sign_unchecked(self.n, i, j)).collect())
    }
}

/// Iterator over the alternating runs of one pattern column.
#[derive(Debug, Clone)]
pub struct ColumnRuns {
    n: usize,
    len: usize,
    start: usize,
    sign: Sign,
}

impl Iterator for ColumnRuns {
    type Item = (std::ops::Range<usize>, Sign);

    fn next(&mut self) -> Option<Self::Item> {
        if self.start >= self.n {
            return None;
        }
        let end = (self.start + self.len).min(self.n);
        let item = (self.start..end, self.sign);
        self.start = end;
        self.sign = self.sign.flip();
        Some(item)
    }
}

/// One train of square waves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainDescriptor {
    pub index: usize,
    /// Subintervals per half-wave.
    pub half_wave_length: usize,
    /// Hertz.
    pub frequency: f64,
}

fn check_index(index: usize, n: usize) -> Result<()> {
    if index == 0 || index > n {
        Err(Error::IndexOutOfRange { index, n })
    } else {
        Ok(())
    }
}

/// Half-wave length of train `j`, in subintervals: `n - j + 1`.
pub fn half_wave_length(n: usize, j: usize) -> Result<usize> {
    check_index(j, n)?;
    Ok(n - j + 1)
}

/// Sign of train `j` over subinterval `i`.
///
/// Divides `i` by the half-wave length `l` and decides from the parity of
/// the quotient `Q` and whether the remainder `R` vanishes:
///
/// | Q    | R = 0 | R != 0 |
/// |------|-------|--------|
/// | even |  -    |   +    |
/// | odd  |  +    |   -    |
///
/// An exact multiple of `l` is the last cell of its run, which is why the
/// zero-remainder cases take the sign of the preceding quotient.
pub fn sign_at(n: usize, i: usize, j: usize) -> Result<Sign> {
    check_index(i, n)?;
    check_index(j, n)?;
    Ok(sign_unchecked(n, i, j))
}

#[inline]
pub(crate) fn sign_unchecked(n: usize, i: usize, j: usize) -> Sign {
    let len = n - j + 1;
    let q = i / len;
    let r = i % len;
    match (q.is_multiple_of(2), r == 0) {
        (true, true) => Sign::Minus,
        (true, false) => Sign::Plus,
        (false, true) => Sign::Plus,
        (false, false) => Sign::Minus,
    }
}

/// Frequency of train `i` in hertz: `(1 / (2 delta_t)) * n / (n - i + 1)`.
pub fn train_frequency(grid: &GridSpec, i: usize) -> Result<f64> {
    check_index(i, grid.n)?;
    Ok(frequency_unchecked(grid, i))
}

#[inline]
pub(crate) fn frequency_unchecked(grid: &GridSpec, i: usize) -> f64 {
    let n = grid.n as f64;
    let len = (grid.n - i + 1) as f64;
    (1.0 / (2.0 * grid.delta_t)) * (n / len)
}

/// Value of train `i` with the given coefficient at the midpoint of
/// subinterval `k`.
pub fn sample_train(grid: &GridSpec, i: usize, coefficient: f64, k: usize) -> Result<f64> {
    check_index(i, grid.n)?;
    check_index(k, grid.n)?;
    Ok(sign_unchecked(grid.n, k, i).as_f64() * coefficient)
}
