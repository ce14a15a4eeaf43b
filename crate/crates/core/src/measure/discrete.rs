use crate::numeric::prefix_sums;

/// Finitely supported law: sorted distinct locations with positive masses.
///
/// `cum[i]` is F at `locs[i]` and `moment[i]` is the partial first moment
/// `sum_{j <= i} p_j x_j`, both compensated prefix sums.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Discrete {
    pub(crate) locs: Vec<f64>,
    pub(crate) masses: Vec<f64>,
    cum: Vec<f64>,
    moment: Vec<f64>,
}

impl Discrete {
    /// `cum` must be nondecreasing and end at exactly 1.
    pub(crate) fn from_parts(locs: Vec<f64>, masses: Vec<f64>, cum: Vec<f64>) -> Self {
        debug_assert_eq!(locs.len(), masses.len());
        debug_assert_eq!(cum.last().copied(), Some(1.0));
        let moment = prefix_sums(locs.iter().zip(&masses).map(|(x, p)| x * p));
        Discrete {
            locs,
            masses,
            cum,
            moment,
        }
    }

    /// Masses are assumed already normalized; the running total is pinned to
    /// [0, 1] with its last entry forced to 1.
    pub(crate) fn from_masses(locs: Vec<f64>, masses: Vec<f64>) -> Self {
        let mut cum: Vec<f64> = prefix_sums(masses.iter().copied())
            .into_iter()
            .map(|c| c.clamp(0.0, 1.0))
            .collect();
        if let Some(last) = cum.last_mut() {
            *last = 1.0;
        }
        Self::from_parts(locs, masses, cum)
    }

    #[inline]
    fn count_le(&self, x: f64) -> usize {
        self.locs.partition_point(|&l| l <= x)
    }

    #[inline]
    fn count_lt(&self, x: f64) -> usize {
        self.locs.partition_point(|&l| l < x)
    }

    pub(crate) fn cdf(&self, x: f64) -> f64 {
        match self.count_le(x) {
            0 => 0.0,
            k => self.cum[k - 1],
        }
    }

    pub(crate) fn left_cdf(&self, x: f64) -> f64 {
        match self.count_lt(x) {
            0 => 0.0,
            k => self.cum[k - 1],
        }
    }

    /// Integral of y dP(y) over ]-inf, x].
    pub(crate) fn partial_moment(&self, x: f64) -> f64 {
        match self.count_le(x) {
            0 => 0.0,
            k => self.moment[k - 1],
        }
    }

    /// Integral of F from 0 to x: F(x) x - M(x) + M(0).
    pub(crate) fn antiderivative(&self, x: f64) -> f64 {
        let k = self.count_le(x);
        let k0 = self.count_le(0.0);
        let (f, m) = match k {
            0 => (0.0, 0.0),
            k => (self.cum[k - 1], self.moment[k - 1]),
        };
        let m0 = match k0 {
            0 => 0.0,
            k => self.moment[k - 1],
        };
        f * x - (m - m0)
    }
}
