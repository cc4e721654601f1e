use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WindowError {
    #[error("window radius must be at least 1, got {0}")]
    Radius(i64),
    #[error("inner fraction must lie strictly between 0 and 1, got {0}")]
    Fraction(f64),
}

/// A finite integer interval `[-N, N]` standing in for "all but finitely
/// many n", together with the inner window `[-floor(rho N), floor(rho N)]`
/// where exceptions are tolerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    lo: i64,
    hi: i64,
    inner_radius: i64,
}

impl Window {
    pub const DEFAULT_FRACTION: f64 = 0.5;

    pub fn new(radius: i64, rho: f64) -> Result<Self, WindowError> {
        if radius < 1 {
            return Err(WindowError::Radius(radius));
        }
        if !(rho > 0.0 && rho < 1.0) {
            return Err(WindowError::Fraction(rho));
        }
        let inner_radius = (rho * radius as f64).floor() as i64;
        Ok(Window { lo: -radius, hi: radius, inner_radius })
    }

    /// `[-radius, radius]` with the default inner fraction 1/2.
    pub fn symmetric(radius: i64) -> Result<Self, WindowError> {
        Window::new(radius, Self::DEFAULT_FRACTION)
    }

    /// The window with no integers in it; every scan over it is empty.
    pub fn empty() -> Self {
        Window { lo: 1, hi: 0, inner_radius: 0 }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn radius(&self) -> i64 {
        self.hi.max(0)
    }

    pub fn inner_radius(&self) -> i64 {
        self.inner_radius
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }

    pub fn contains(&self, n: i64) -> bool {
        self.lo <= n && n <= self.hi
    }

    pub fn in_inner(&self, n: i64) -> bool {
        !self.is_empty() && n.abs() <= self.inner_radius
    }

    /// Ascending iteration over the window.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + Clone {
        self.lo..=self.hi
    }

    /// Window integers ordered 0, 1, -1, 2, -2, ...
    pub fn by_magnitude(&self) -> impl Iterator<Item = i64> + '_ {
        let r = self.radius();
        std::iter::once(0)
            .chain((1..=r).flat_map(|k| [k, -k]))
            .filter(move |&n| self.contains(n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Compositions `f D_c^n`: the twist acts first.
    Right,
    /// Compositions `D_c^n f`.
    Left,
}
