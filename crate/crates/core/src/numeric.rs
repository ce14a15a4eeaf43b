//! Small numeric helpers shared across modules.

/// Neumaier compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Neumaier::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Compensated sum of an iterator.
pub fn accurate_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<Neumaier>().value()
}

/// Running prefix sums, each entry compensated.
pub(crate) fn prefix_sums<I: IntoIterator<Item = f64>>(iter: I) -> Vec<f64> {
    let mut acc = Neumaier::new();
    iter.into_iter()
        .map(|x| {
            acc.add(x);
            acc.value()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_beats_naive() {
        let xs: Vec<f64> = std::iter::once(1.0).chain(std::iter::repeat_n(1e-16, 10_000)).collect();
        let naive: f64 = xs.iter().sum();
        assert_eq!(naive, 1.0);
        assert!((accurate_sum(xs.iter().copied()) - (1.0 + 1e-12)).abs() < 1e-20);
    }

    #[test]
    fn prefix_matches_running_total() {
        let p = prefix_sums([0.25, 0.25, 0.5]);
        assert_eq!(p, vec![0.25, 0.5, 1.0]);
    }
}
