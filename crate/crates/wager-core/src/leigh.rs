//! The six-chance reverse-Labouchere session experiment.
//!
//! One session: six scorecards, one per even chance, all riding the same
//! wheel under the en prison rule, for a number of days of a fixed number
//! of coups each. Scorecards reset to the initial list at the start of
//! every day; a progression still in flight at day end is recorded as
//! incomplete. Sessions are replicated on independent streams and folded
//! into [`AggregateStats`], whose merge is exact, so any partition of the
//! replications over workers produces identical aggregates.
//!
//! All money statistics are on the actual-money basis (virtual bets stake
//! nothing); the system-basis totals are carried alongside for
//! comparison. Tied stakes were placed, so they count toward the total
//! amount bet.

use alloc::vec::Vec;

use crate::labouchere::{LabConfig, LabState, ProgressionKind, ProgressionOutcome};
use crate::rng::Stream;
use crate::roulette::{resolve_coup, EvenChance, Spins};
use crate::stats::{poisson_ccdf, poisson_ln_ccdf, poisson_log_pmf, stderr_of_proportion, Histogram};
use crate::wager::BetOutcome;
use crate::{Error, Money, Result};

/// Experiment layout: days per session, coups per day, house limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SessionConfig {
    pub days: u32,
    pub coups_per_day: u32,
    pub lab: LabConfig,
}

impl Default for SessionConfig {
    /// Eight days of 360 coups, Casino Municipale limits.
    fn default() -> Self {
        Self {
            days: 8,
            coups_per_day: 360,
            lab: LabConfig::default(),
        }
    }
}

impl SessionConfig {
    pub fn validate(&self) -> Result<()> {
        if self.days < 1 {
            return Err(Error::InvalidConfig("at least one day"));
        }
        if self.coups_per_day < 1 {
            return Err(Error::InvalidConfig("at least one coup per day"));
        }
        self.lab.validate()
    }
}

/// Totals of one simulated session.
///
/// `sum_losing` holds the (positive) total amount lost; `sum_incomplete`
/// is signed. Every progression lands in exactly one category, so
/// `total_profit = sum_winning - sum_losing + sum_incomplete` exactly.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SessionStats {
    pub n_winning: u32,
    pub n_losing: u32,
    pub n_incomplete: u32,
    pub sum_winning: Money,
    pub sum_losing: Money,
    pub sum_incomplete: Money,
    pub sum_winning_sys: Money,
    pub sum_losing_sys: Money,
    pub sum_incomplete_sys: Money,
    /// Real money staked, tied stakes included, virtual bets excluded.
    pub total_bet: Money,
    pub total_profit: Money,
    pub total_profit_sys: Money,
}

impl SessionStats {
    fn record(&mut self, out: &ProgressionOutcome) {
        match out.kind {
            ProgressionKind::Winning => {
                self.n_winning += 1;
                self.sum_winning += out.amount_act;
                self.sum_winning_sys += out.amount_sys;
            }
            ProgressionKind::Losing => {
                self.n_losing += 1;
                self.sum_losing += -out.amount_act;
                self.sum_losing_sys += -out.amount_sys;
            }
            ProgressionKind::Incomplete => {
                self.n_incomplete += 1;
                self.sum_incomplete += out.amount_act;
                self.sum_incomplete_sys += out.amount_sys;
            }
        }
    }

    /// Session profit over amount bet, in percent.
    pub fn profit_ratio_pct(&self) -> Option<f64> {
        if self.total_bet > 0 {
            Some(100.0 * self.total_profit as f64 / self.total_bet as f64)
        } else {
            None
        }
    }
}

/// Play one full session on the given spin source.
pub fn run_session<S: Spins>(spins: &mut S, config: &SessionConfig) -> Result<SessionStats> {
    let mut stats = SessionStats::default();
    let mut cards: Vec<LabState> = EvenChance::ALL
        .iter()
        .map(|_| LabState::new(&config.lab))
        .collect();

    for _day in 0..config.days {
        for _coup in 0..config.coups_per_day {
            let coup = resolve_coup(spins)?;
            for chance in EvenChance::ALL {
                let outcome = coup.outcome(chance);
                let res = cards[chance.index()].apply(outcome, &config.lab);
                let staked = if res.bet.is_virtual { 0 } else { res.bet.amount };
                stats.total_bet += staked;
                match outcome {
                    BetOutcome::Win => {
                        stats.total_profit += staked;
                        stats.total_profit_sys += res.bet.amount;
                    }
                    BetOutcome::Loss => {
                        stats.total_profit -= staked;
                        stats.total_profit_sys -= res.bet.amount;
                    }
                    BetOutcome::Tie => {}
                }
                if let Some(out) = res.completed {
                    stats.record(&out);
                }
            }
        }
        for card in &mut cards {
            if let Some(out) = card.finalize(&config.lab) {
                stats.record(&out);
            }
        }
    }

    debug_assert_eq!(
        stats.total_profit,
        stats.sum_winning - stats.sum_losing + stats.sum_incomplete
    );
    debug_assert_eq!(
        stats.total_profit_sys,
        stats.sum_winning_sys - stats.sum_losing_sys + stats.sum_incomplete_sys
    );
    Ok(stats)
}

/// Mean and standard error of one aggregated statistic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSe {
    pub mean: f64,
    pub se: f64,
}

/// Exact integer first and second moments of a per-session statistic.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct IntStat {
    sum: i128,
    sum_sq: i128,
}

impl IntStat {
    fn push(&mut self, x: i64) {
        self.sum += x as i128;
        self.sum_sq += (x as i128) * (x as i128);
    }

    fn merge(&mut self, other: &IntStat) {
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
    }

    fn mean_se(&self, n: u64) -> MeanSe {
        if n == 0 {
            return MeanSe { mean: 0.0, se: 0.0 };
        }
        let nf = n as f64;
        let mean = self.sum as f64 / nf;
        let se = if n < 2 {
            0.0
        } else {
            let var = (self.sum_sq as f64 - (self.sum as f64) * (self.sum as f64) / nf)
                / (nf - 1.0);
            libm::sqrt(var.max(0.0) / nf)
        };
        MeanSe { mean, se }
    }
}

/// Merged statistics over replicated sessions.
///
/// Per-statistic accumulators are exact integers, the profit-ratio
/// histogram and winning-count table are integer counts, and the merge
/// is associative and commutative, so results are independent of how
/// replications were partitioned across workers.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregateStats {
    replications: u64,
    n_winning: IntStat,
    n_losing: IntStat,
    n_incomplete: IntStat,
    sum_winning: IntStat,
    sum_losing: IntStat,
    sum_incomplete: IntStat,
    total_bet: IntStat,
    total_profit: IntStat,
    sys_sum_winning: i128,
    sys_sum_losing: i128,
    sys_sum_incomplete: i128,
    /// Session profit/bet ratio in percent, one-point bins.
    ratio_histogram: Histogram,
    /// Frequency table of the winning-progression count per session.
    counts_of_n: Vec<u64>,
    n_profitable: u64,
    max_n_winning: u32,
    max_session_winnings: Money,
}

impl Default for AggregateStats {
    fn default() -> Self {
        Self::new()
    }
}

impl AggregateStats {
    pub fn new() -> Self {
        Self {
            replications: 0,
            n_winning: IntStat::default(),
            n_losing: IntStat::default(),
            n_incomplete: IntStat::default(),
            sum_winning: IntStat::default(),
            sum_losing: IntStat::default(),
            sum_incomplete: IntStat::default(),
            total_bet: IntStat::default(),
            total_profit: IntStat::default(),
            sys_sum_winning: 0,
            sys_sum_losing: 0,
            sys_sum_incomplete: 0,
            ratio_histogram: Histogram::new(1000, 0).expect("static bin width"),
            counts_of_n: Vec::new(),
            n_profitable: 0,
            max_n_winning: 0,
            max_session_winnings: 0,
        }
    }

    pub fn push(&mut self, s: &SessionStats) {
        self.replications += 1;
        self.n_winning.push(s.n_winning as i64);
        self.n_losing.push(s.n_losing as i64);
        self.n_incomplete.push(s.n_incomplete as i64);
        self.sum_winning.push(s.sum_winning);
        self.sum_losing.push(s.sum_losing);
        self.sum_incomplete.push(s.sum_incomplete);
        self.total_bet.push(s.total_bet);
        self.total_profit.push(s.total_profit);
        self.sys_sum_winning += s.sum_winning_sys as i128;
        self.sys_sum_losing += s.sum_losing_sys as i128;
        self.sys_sum_incomplete += s.sum_incomplete_sys as i128;
        if let Some(pct) = s.profit_ratio_pct() {
            self.ratio_histogram.insert(pct);
        }
        let n = s.n_winning as usize;
        if self.counts_of_n.len() <= n {
            self.counts_of_n.resize(n + 1, 0);
        }
        self.counts_of_n[n] += 1;
        if s.total_profit > 0 {
            self.n_profitable += 1;
        }
        self.max_n_winning = self.max_n_winning.max(s.n_winning);
        self.max_session_winnings = self.max_session_winnings.max(s.sum_winning);
    }

    pub fn merge(&mut self, other: &AggregateStats) {
        self.replications += other.replications;
        self.n_winning.merge(&other.n_winning);
        self.n_losing.merge(&other.n_losing);
        self.n_incomplete.merge(&other.n_incomplete);
        self.sum_winning.merge(&other.sum_winning);
        self.sum_losing.merge(&other.sum_losing);
        self.sum_incomplete.merge(&other.sum_incomplete);
        self.total_bet.merge(&other.total_bet);
        self.total_profit.merge(&other.total_profit);
        self.sys_sum_winning += other.sys_sum_winning;
        self.sys_sum_losing += other.sys_sum_losing;
        self.sys_sum_incomplete += other.sys_sum_incomplete;
        self.ratio_histogram.merge(&other.ratio_histogram);
        if self.counts_of_n.len() < other.counts_of_n.len() {
            self.counts_of_n.resize(other.counts_of_n.len(), 0);
        }
        for (i, &c) in other.counts_of_n.iter().enumerate() {
            self.counts_of_n[i] += c;
        }
        self.n_profitable += other.n_profitable;
        self.max_n_winning = self.max_n_winning.max(other.max_n_winning);
        self.max_session_winnings = self.max_session_winnings.max(other.max_session_winnings);
    }

    pub fn replications(&self) -> u64 {
        self.replications
    }

    pub fn n_winning(&self) -> MeanSe {
        self.n_winning.mean_se(self.replications)
    }

    pub fn n_losing(&self) -> MeanSe {
        self.n_losing.mean_se(self.replications)
    }

    pub fn n_incomplete(&self) -> MeanSe {
        self.n_incomplete.mean_se(self.replications)
    }

    pub fn sum_winning(&self) -> MeanSe {
        self.sum_winning.mean_se(self.replications)
    }

    pub fn sum_losing(&self) -> MeanSe {
        self.sum_losing.mean_se(self.replications)
    }

    pub fn sum_incomplete(&self) -> MeanSe {
        self.sum_incomplete.mean_se(self.replications)
    }

    pub fn total_bet(&self) -> MeanSe {
        self.total_bet.mean_se(self.replications)
    }

    pub fn total_profit(&self) -> MeanSe {
        self.total_profit.mean_se(self.replications)
    }

    /// Mean amount won per winning progression (ratio of totals).
    pub fn amount_per_winning(&self) -> Option<f64> {
        ratio_of(self.sum_winning.sum, self.n_winning.sum)
    }

    pub fn amount_per_losing(&self) -> Option<f64> {
        ratio_of(self.sum_losing.sum, self.n_losing.sum)
    }

    pub fn amount_per_incomplete(&self) -> Option<f64> {
        ratio_of(self.sum_incomplete.sum, self.n_incomplete.sum)
    }

    /// System-basis totals (virtual bets counted as staked).
    pub fn sys_sums(&self) -> (f64, f64, f64) {
        let r = self.replications.max(1) as f64;
        (
            self.sys_sum_winning as f64 / r,
            self.sys_sum_losing as f64 / r,
            self.sys_sum_incomplete as f64 / r,
        )
    }

    pub fn p_profitable(&self) -> f64 {
        if self.replications == 0 {
            0.0
        } else {
            self.n_profitable as f64 / self.replications as f64
        }
    }

    pub fn p_profitable_se(&self) -> f64 {
        stderr_of_proportion(self.n_profitable, self.replications).unwrap_or(0.0)
    }

    pub fn ratio_histogram(&self) -> &Histogram {
        &self.ratio_histogram
    }

    pub fn counts_of_n(&self) -> &[u64] {
        &self.counts_of_n
    }

    pub fn max_n_winning(&self) -> u32 {
        self.max_n_winning
    }

    pub fn max_session_winnings(&self) -> Money {
        self.max_session_winnings
    }

    /// Aggregate profit over aggregate amount bet,
    /// `(win - loss + incomplete) / bet`, on exact totals.
    pub fn consistency_ratio(&self) -> Result<f64> {
        consistency_ratio_from_totals(
            self.sum_winning.sum as f64,
            self.sum_losing.sum as f64,
            self.sum_incomplete.sum as f64,
            self.total_bet.sum as f64,
        )
    }

    /// Winning-count distribution with the Poisson fit and bound columns.
    pub fn poisson_report(&self, mu1: f64) -> Result<PoissonReport> {
        if self.replications == 0 {
            return Err(Error::InvalidConfig("no replications aggregated"));
        }
        let mu0 = self.n_winning().mean;
        if !(mu0 > 0.0) {
            return Err(Error::InvalidConfig("no winning progressions; Poisson fit undefined"));
        }
        let total = self.replications;
        let mut tail = total;
        let mut rows = Vec::with_capacity(self.counts_of_n.len());
        for (n, &count) in self.counts_of_n.iter().enumerate() {
            let p_ge_hat = tail as f64 / total as f64;
            let ccdf_mu1 = poisson_ccdf(mu1, n as u64)?;
            rows.push(PoissonRow {
                n: n as u32,
                count,
                p_hat: count as f64 / total as f64,
                se: stderr_of_proportion(count, total)?,
                pmf_mu0: libm::exp(poisson_log_pmf(mu0, n as u64)?),
                p_ge_hat,
                se_ge: stderr_of_proportion(tail, total)?,
                ccdf_mu1,
                bound_ok: p_ge_hat <= ccdf_mu1,
            });
            tail -= count;
        }
        Ok(PoissonReport {
            mu0,
            mu1,
            log10_tail27: poisson_ln_ccdf(mu1, 27)? / core::f64::consts::LN_10,
            rows,
        })
    }
}

fn ratio_of(num: i128, den: i128) -> Option<f64> {
    if den == 0 {
        None
    } else {
        Some(num as f64 / den as f64)
    }
}

/// The consistency check on raw aggregate totals.
pub fn consistency_ratio_from_totals(
    sum_winning: f64,
    sum_losing: f64,
    sum_incomplete: f64,
    total_bet: f64,
) -> Result<f64> {
    if !(total_bet > 0.0) {
        return Err(Error::NoBetsRecorded);
    }
    Ok((sum_winning - sum_losing + sum_incomplete) / total_bet)
}

/// One row of the winning-count distribution table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonRow {
    pub n: u32,
    pub count: u64,
    pub p_hat: f64,
    pub se: f64,
    /// Poisson(mu0) pmf at `n`, mu0 the sample mean.
    pub pmf_mu0: f64,
    pub p_ge_hat: f64,
    pub se_ge: f64,
    /// Poisson(mu1) upper tail at `n`, the conjectured stochastic bound.
    pub ccdf_mu1: f64,
    /// Empirical tail at or below the bound.
    pub bound_ok: bool,
}

/// Poisson approximation and stochastic-bound report for the
/// winning-progression count.
#[derive(Debug, Clone, PartialEq)]
pub struct PoissonReport {
    pub mu0: f64,
    pub mu1: f64,
    /// log10 of the Poisson(mu1) tail at 27 winning progressions.
    pub log10_tail27: f64,
    pub rows: Vec<PoissonRow>,
}

impl PoissonReport {
    /// Values of `n` where the empirical tail exceeded the bound.
    pub fn bound_violations(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| !r.bound_ok)
            .map(|r| r.n)
            .collect()
    }
}

/// Run `replications` sessions serially, replication `r` on stream
/// `(master_seed, r)`. The parallel runner in the companion crate chunks
/// the same stream ids across workers and merges, which yields the
/// identical aggregate.
pub fn run_experiment(
    master_seed: u64,
    replications: u64,
    config: &SessionConfig,
) -> Result<AggregateStats> {
    if replications < 1 {
        return Err(Error::InvalidConfig("at least one replication"));
    }
    config.validate()?;
    let mut agg = AggregateStats::new();
    for r in 0..replications {
        let mut stream = Stream::derive(master_seed, r);
        agg.push(&run_session(&mut stream, config)?);
    }
    Ok(agg)
}
