//! Time grids and sampled trajectories.

use alloc::vec::Vec;

/// Uniform time grid `t0 + k*dt`, `0 <= k <= n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t0: f64,
    dt: f64,
    n: usize,
}

impl TimeGrid {
    /// Grid with `n` steps of width `dt` starting at `t0`.
    ///
    /// Panics if `dt` is not a positive finite number or `n == 0`; a grid
    /// that exists is always valid.
    pub fn new(t0: f64, dt: f64, n: usize) -> Self {
        assert!(t0.is_finite(), "grid origin must be finite");
        assert!(dt.is_finite() && dt > 0.0, "grid step must be positive");
        assert!(n >= 1, "grid needs at least one step");
        TimeGrid { t0, dt, n }
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Number of steps; the grid carries `n + 1` points.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// k-th grid point, exactly `t0 + k*dt` in floating point.
    pub fn point(&self, k: usize) -> f64 {
        debug_assert!(k <= self.n);
        self.t0 + (k as f64) * self.dt
    }

    pub fn end(&self) -> f64 {
        self.point(self.n)
    }
}

/// A trajectory sampled on a [`TimeGrid`]: one value per grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePath {
    grid: TimeGrid,
    values: Vec<f64>,
}

impl SamplePath {
    /// Panics unless `values.len() == grid.len()` and every entry is finite.
    pub fn new(grid: TimeGrid, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), grid.len(), "one value per grid point");
        assert!(
            values.iter().all(|v| v.is_finite()),
            "sample paths carry finite values only"
        );
        SamplePath { grid, values }
    }

    pub fn grid(&self) -> &TimeGrid {
        self.grid()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Value at the k-th grid point.
    pub fn value(&self, k: usize) -> f64 {
        self.values[k]
    }

    /// Final value on the grid.
    pub fn last(&self) -> f64 {
        *self.values.last().expect("paths are nonempty")
    }

    /// Successive increments `v[k+1] - v[k]`.
    pub fn increments(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.windows(2).map(|w| w[1] - w[0])
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}
