//! Streaming moments, histograms, and log-space Poisson tails.

use alloc::collections::BTreeMap;

use crate::{Error, Result};

/// Welford accumulator for streaming mean and variance, with the
/// parallel (Chan et al.) merge so partial results combine cleanly.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StreamingMoments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl StreamingMoments {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn update(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        let delta2 = x - self.mean;
        self.m2 += delta * delta2;
    }

    pub fn merge(a: &StreamingMoments, b: &StreamingMoments) -> StreamingMoments {
        if a.n == 0 {
            return *b;
        }
        if b.n == 0 {
            return *a;
        }
        let n = a.n + b.n;
        let delta = b.mean - a.mean;
        let mean = a.mean + delta * (b.n as f64 / n as f64);
        let m2 = a.m2 + b.m2 + delta * delta * (a.n as f64 * b.n as f64 / n as f64);
        StreamingMoments { n, mean, m2 }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Sample variance (n - 1 denominator); 0 before two observations.
    pub fn variance(&self) -> f64 {
        if self.n < 2 {
            0.0
        } else {
            self.m2 / (self.n - 1) as f64
        }
    }

    pub fn stddev(&self) -> f64 {
        libm::sqrt(self.variance())
    }

    /// Standard error of the mean.
    pub fn stderr(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            libm::sqrt(self.variance() / self.n as f64)
        }
    }
}

/// Fixed-width histogram over `bin_width`-sized bins anchored at `origin`.
///
/// Bin `i` covers `[origin + i*w, origin + (i+1)*w)`. Counts merge by
/// addition, so parallel partial histograms combine exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Histogram {
    bin_width_milli: u64,
    origin_milli: i64,
    counts: BTreeMap<i64, u64>,
    total: u64,
}

impl Histogram {
    /// `bin_width` and `origin` are taken in thousandths to keep the bin
    /// edges exact (bin geometry is config, not data).
    pub fn new(bin_width_milli: u64, origin_milli: i64) -> Result<Self> {
        if bin_width_milli == 0 {
            return Err(Error::InvalidConfig("histogram bin width must be positive"));
        }
        Ok(Self {
            bin_width_milli,
            origin_milli,
            counts: BTreeMap::new(),
            total: 0,
        })
    }

    pub fn bin_width(&self) -> f64 {
        self.bin_width_milli as f64 / 1000.0
    }

    pub fn insert(&mut self, x: f64) {
        let w = self.bin_width_milli as f64 / 1000.0;
        let origin = self.origin_milli as f64 / 1000.0;
        let idx = libm::floor((x - origin) / w) as i64;
        *self.counts.entry(idx).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn merge(&mut self, other: &Histogram) {
        debug_assert_eq!(self.bin_width_milli, other.bin_width_milli);
        debug_assert_eq!(self.origin_milli, other.origin_milli);
        for (&idx, &c) in &other.counts {
            *self.counts.entry(idx).or_insert(0) += c;
        }
        self.total += other.total;
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Occupied bins in ascending order as `(low, high, count)`.
    pub fn bins(&self) -> impl Iterator<Item = (f64, f64, u64)> + '_ {
        let w = self.bin_width_milli as f64 / 1000.0;
        let origin = self.origin_milli as f64 / 1000.0;
        self.counts
            .iter()
            .map(move |(&idx, &c)| (origin + idx as f64 * w, origin + (idx + 1) as f64 * w, c))
    }
}

/// Log of the Poisson pmf: `-mu + n ln(mu) - ln(n!)` via log-gamma.
pub fn poisson_log_pmf(mu: f64, n: u64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::InvalidConfig("poisson rate must be positive"));
    }
    let nf = n as f64;
    Ok(-mu + nf * libm::log(mu) - libm::lgamma(nf + 1.0))
}

/// Poisson upper tail `P(N >= n)`, accurate down to at least 1e-30.
///
/// For `n` at or below the mean the complement `1 - P(N <= n-1)` is the
/// stable route; deep in the tail the term series from `n` upward is
/// summed in linear space after a log-space leading term.
pub fn poisson_ccdf(mu: f64, n: u64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::InvalidConfig("poisson rate must be positive"));
    }
    if n == 0 {
        return Ok(1.0);
    }
    if (n as f64) <= mu + 1.0 {
        // Head sum: few terms, all of comparable size.
        let mut term = libm::exp(-mu);
        let mut cdf = term;
        for k in 1..n {
            term *= mu / k as f64;
            cdf += term;
        }
        return Ok((1.0 - cdf).max(0.0));
    }
    Ok(libm::exp(poisson_ln_ccdf(mu, n)?))
}

/// Natural log of `P(N >= n)`, computed in log space so tails far below
/// the float underflow threshold stay representable.
pub fn poisson_ln_ccdf(mu: f64, n: u64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::InvalidConfig("poisson rate must be positive"));
    }
    if n == 0 {
        return Ok(0.0);
    }
    if (n as f64) <= mu + 1.0 {
        return Ok(libm::log(poisson_ccdf(mu, n)?));
    }
    // P(N >= n) = pmf(n) * (1 + mu/(n+1) + mu^2/((n+1)(n+2)) + ...);
    // the bracket is a convergent series of terms <= 1.
    let mut series = 1.0;
    let mut term = 1.0;
    let mut k = n as f64 + 1.0;
    loop {
        term *= mu / k;
        series += term;
        k += 1.0;
        if term < series * 1e-30 {
            break;
        }
    }
    Ok(poisson_log_pmf(mu, n)? + libm::log(series))
}

/// Standard error of an estimated proportion: `sqrt(p(1-p)/n)`.
pub fn stderr_of_proportion(count: u64, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidConfig("proportion needs at least one trial"));
    }
    if count > n {
        return Err(Error::InvalidConfig("count exceeds trials"));
    }
    let p = count as f64 / n as f64;
    Ok(libm::sqrt(p * (1.0 - p) / n as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn round6(x: f64) -> f64 {
        libm::round(x * 1e6) / 1e6
    }

    #[test]
    fn moments_basics() {
        let mut m = StreamingMoments::new();
        for x in [1.0, 2.0, 3.0] {
            m.update(x);
        }
        assert_relative_eq!(m.mean(), 2.0);
        assert_relative_eq!(m.variance(), 1.0);
    }

    #[test]
    fn moments_merge_law() {
        let mut a = StreamingMoments::new();
        a.update(1.0);
        a.update(2.0);
        let mut b = StreamingMoments::new();
        b.update(3.0);
        let merged = StreamingMoments::merge(&a, &b);
        assert_relative_eq!(merged.mean(), 2.0, max_relative = 1e-12);
        assert_relative_eq!(merged.variance(), 1.0, max_relative = 1e-12);
        assert_eq!(merged.n(), 3);
    }

    #[test]
    fn moments_match_even_chance_closed_form() {
        // 1e6 draws of the en prison per-unit profit; the sample standard
        // deviation must land within 1% of the closed-form sqrt(Var).
        use crate::rng::Stream;
        let mut s = Stream::derive(99, 0);
        let mut m = StreamingMoments::new();
        for _ in 0..1_000_000u32 {
            // P(+1) = 18/37, P(0) = 1/74, P(-1) = 37/74, over a lattice of
            // 74 equally likely cells.
            let cell = s.next_below(74).unwrap();
            let x = if cell < 36 {
                1.0
            } else if cell == 36 {
                0.0
            } else {
                -1.0
            };
            m.update(x);
        }
        let var_exact = 5401.0 / 5476.0; // E[X^2] - (1/74)^2 = 73/74 - 1/5476
        let sd_exact = libm::sqrt(var_exact);
        assert!((m.stddev() - sd_exact).abs() / sd_exact < 0.01);
        assert!((m.stderr() - sd_exact / 1000.0).abs() / (sd_exact / 1000.0) < 0.01);
    }

    #[test]
    fn poisson_pmf_matches_reference_table() {
        // Poisson(1.484665) pmf column, within one unit of the 6th d.p.
        // Every row agrees under rounding except n = 8, where the true
        // value 0.0001326555... was printed truncated as 0.000132.
        let mu = 1.484665;
        let expected = [
            0.226578, 0.336393, 0.249715, 0.123581, 0.045869, 0.013620, 0.003370, 0.000715,
            0.000132, 0.000022,
        ];
        for (n, &want) in expected.iter().enumerate() {
            let pmf = libm::exp(poisson_log_pmf(mu, n as u64).unwrap());
            assert!((pmf - want).abs() < 1e-6, "pmf({mu}, {n}) = {pmf}");
            if n != 8 {
                assert_eq!(round6(pmf), want, "pmf({mu}, {n})");
            }
        }
        let pmf8 = libm::exp(poisson_log_pmf(mu, 8).unwrap());
        assert_relative_eq!(pmf8, 1.32655549565e-4, max_relative = 1e-9);
    }

    #[test]
    fn poisson_ccdf_matches_reference_table() {
        // Poisson(1.51) upper-tail column, 6 d.p.
        let mu = 1.51;
        let expected = [
            1.000000, 0.779090, 0.445516, 0.193668, 0.066904, 0.019051, 0.004599, 0.000962,
            0.000177, 0.000029,
        ];
        for (n, &want) in expected.iter().enumerate() {
            let ccdf = poisson_ccdf(mu, n as u64).unwrap();
            assert_eq!(round6(ccdf), want, "ccdf({mu}, {n})");
        }
    }

    #[test]
    fn poisson_deep_tail() {
        let tail = poisson_ccdf(1.51, 27).unwrap();
        assert!(tail < 1.5e-24, "tail = {tail}");
        assert!(tail > 0.0);
        let ln_tail = poisson_ln_ccdf(1.51, 27).unwrap();
        assert_relative_eq!(libm::exp(ln_tail), tail, max_relative = 1e-12);
    }

    #[test]
    fn poisson_ccdf_edges() {
        assert_eq!(poisson_ccdf(1.51, 0).unwrap(), 1.0);
        let mut last = 1.0;
        for n in 1..40 {
            let c = poisson_ccdf(1.51, n).unwrap();
            assert!(c <= last, "ccdf must be nonincreasing");
            last = c;
        }
        assert!(poisson_ccdf(0.0, 1).is_err());
        assert!(poisson_log_pmf(-1.0, 0).is_err());
    }

    #[test]
    fn poisson_pmf_sums_to_one() {
        let mut sum = 0.0;
        for n in 0..200 {
            sum += libm::exp(poisson_log_pmf(3.25, n).unwrap());
        }
        assert_relative_eq!(sum, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn proportion_stderr_reference_values() {
        assert_eq!(
            round6(stderr_of_proportion(223_507, 1_000_000).unwrap()),
            0.000417
        );
        assert_eq!(
            round6(stderr_of_proportion(337_618, 1_000_000).unwrap()),
            0.000473
        );
        assert_eq!(stderr_of_proportion(0, 100).unwrap(), 0.0);
        assert!(stderr_of_proportion(1, 0).is_err());
        assert!(stderr_of_proportion(2, 1).is_err());
    }

    #[test]
    fn histogram_counts_and_bins() {
        let mut h = Histogram::new(1000, 0).unwrap();
        for x in [-0.5, 0.2, 0.7, 1.0, 2.3] {
            h.insert(x);
        }
        assert_eq!(h.total(), 5);
        let bins: Vec<_> = h.bins().collect();
        assert_eq!(bins[0], (-1.0, 0.0, 1));
        assert_eq!(bins[1], (0.0, 1.0, 2));
        assert_eq!(bins[2], (1.0, 2.0, 1));
        assert_eq!(bins[3], (2.0, 3.0, 1));
    }

    proptest! {
        // Merge must agree with one-pass accumulation on any partition,
        // within a tight relative tolerance.
        #[test]
        fn merge_matches_sequential(
            xs in proptest::collection::vec(-1.0e3f64..1.0e3, 2..300),
            cut in 1usize..299,
        ) {
            let cut = cut.min(xs.len() - 1);
            let mut whole = StreamingMoments::new();
            for &x in &xs {
                whole.update(x);
            }
            let mut l = StreamingMoments::new();
            for &x in &xs[..cut] {
                l.update(x);
            }
            let mut r = StreamingMoments::new();
            for &x in &xs[cut..] {
                r.update(x);
            }
            let lr = StreamingMoments::merge(&l, &r);
            let rl = StreamingMoments::merge(&r, &l);
            prop_assert!((lr.mean() - whole.mean()).abs() <= 1e-9 * (1.0 + whole.mean().abs()));
            prop_assert!((lr.variance() - whole.variance()).abs() <= 1e-9 * (1.0 + whole.variance()));
            prop_assert!((lr.mean() - rl.mean()).abs() <= 1e-12 * (1.0 + whole.mean().abs()));
        }

        #[test]
        fn histogram_total_matches_insertions(
            xs in proptest::collection::vec(-50.0f64..50.0, 0..200)
        ) {
            let mut h = Histogram::new(1000, 0).unwrap();
            for &x in &xs {
                h.insert(x);
            }
            prop_assert_eq!(h.total() as usize, xs.len());
            prop_assert_eq!(h.bins().map(|(_, _, c)| c as usize).sum::<usize>(), xs.len());
        }
    }
}
