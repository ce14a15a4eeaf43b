use crate::numeric::prefix_sums;

/// Continuous law whose CDF interpolates linearly between knots.
///
/// `area[k]` holds the integral of F from the first knot to knot `k`, and
/// `moment[k]` the integral of u dF(u) over the same range.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Pwl {
    pub(crate) xs: Vec<f64>,
    pub(crate) fs: Vec<f64>,
    area: Vec<f64>,
    moment: Vec<f64>,
}

impl Pwl {
    /// Knots must be validated: at least two, strictly increasing x, F
    /// nondecreasing from exactly 0 to exactly 1.
    pub(crate) fn new(xs: Vec<f64>, fs: Vec<f64>) -> Self {
        let pieces = xs.windows(2).zip(fs.windows(2));
        let area = std::iter::once(0.0)
            .chain(prefix_sums(
                pieces.clone().map(|(x, f)| (x[1] - x[0]) * (f[0] + f[1]) * 0.5),
            ))
            .collect();
        let moment = std::iter::once(0.0)
            .chain(prefix_sums(pieces.map(|(x, f)| (f[1] - f[0]) * (x[0] + x[1]) * 0.5)))
            .collect();
        Pwl { xs, fs, area, moment }
    }

    /// Index `k` such that `xs[k-1] <= x < xs[k]`; 0 left of the support,
    /// `len` at or right of the last knot.
    #[inline]
    fn segment(&self, x: f64) -> usize {
        self.xs.partition_point(|&k| k <= x)
    }

    #[inline]
    fn interp(&self, k: usize, x: f64) -> f64 {
        let (x0, x1) = (self.xs[k - 1], self.xs[k]);
        let (f0, f1) = (self.fs[k - 1], self.fs[k]);
        f0 + (f1 - f0) * ((x - x0) / (x1 - x0))
    }

    pub(crate) fn cdf(&self, x: f64) -> f64 {
        let k = self.segment(x);
        if k == 0 {
            0.0
        } else if k == self.xs.len() {
            1.0
        } else {
            self.interp(k, x)
        }
    }

    /// Integral of F over [xs[0], x].
    fn area_to(&self, x: f64) -> f64 {
        let k = self.segment(x);
        let n = self.xs.len();
        if k == 0 {
            0.0
        } else if k == n {
            self.area[n - 1] + (x - self.xs[n - 1])
        } else {
            let f = self.interp(k, x);
            self.area[k - 1] + (x - self.xs[k - 1]) * (self.fs[k - 1] + f) * 0.5
        }
    }

    pub(crate) fn antiderivative(&self, x: f64) -> f64 {
        self.area_to(x) - self.area_to(0.0)
    }

    /// Integral of y dP(y) over ]-inf, x].
    pub(crate) fn partial_moment(&self, x: f64) -> f64 {
        let k = self.segment(x);
        let n = self.xs.len();
        if k == 0 {
            0.0
        } else if k == n {
            self.moment[n - 1]
        } else {
            let f = self.interp(k, x);
            self.moment[k - 1] + (f - self.fs[k - 1]) * (x + self.xs[k - 1]) * 0.5
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform() -> Pwl {
        Pwl::new(vec![0.0, 1.0], vec![0.0, 1.0])
    }

    #[test]
    fn uniform_values() {
        let u = uniform();
        assert_eq!(u.cdf(0.3), 0.3);
        assert_eq!(u.cdf(-0.1), 0.0);
        assert_eq!(u.cdf(1.0), 1.0);
        assert_eq!(u.antiderivative(1.0), 0.5);
        assert_eq!(u.antiderivative(2.0), 1.5);
        assert_eq!(u.antiderivative(-1.0), 0.0);
        assert_eq!(u.partial_moment(1.0), 0.5);
        assert!((u.partial_moment(0.5) - 0.125).abs() < 1e-16);
    }

    #[test]
    fn knot_values_are_exact() {
        let p = Pwl::new(vec![-1.0, 0.5, 2.0], vec![0.0, 0.3, 1.0]);
        assert_eq!(p.cdf(0.5), 0.3);
        assert_eq!(p.cdf(-1.0), 0.0);
        // area under F from -1 to 0.5 is 0.225; antiderivative(-1) = -(area to 0)
        let a0 = 0.5 * 1.0 * (0.2);
        assert!((p.antiderivative(-1.0) + a0).abs() < 1e-15);
    }
}
