use wager_core::leigh::{run_experiment, SessionConfig};

fn main() {
    let reps: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let seed: u64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(1);
    let t0 = std::time::Instant::now();
    let agg = run_experiment(seed, reps, &SessionConfig::default()).unwrap();
    let dt = t0.elapsed().as_secs_f64();
    println!("reps={} seed={} wall={:.1}s", reps, seed, dt);
    let f = |m: wager_core::leigh::MeanSe| (m.mean, m.se);
    println!("n_winning      {:?}  (paper 1.484665)", f(agg.n_winning()));
    println!("n_losing       {:?}  (paper 2055.310293)", f(agg.n_losing()));
    println!("n_incomplete   {:?}  (paper 42.214352)", f(agg.n_incomplete()));
    println!("sum_winning    {:?}  (paper 12227.812)", f(agg.sum_winning()));
    println!("sum_losing     {:?}  (paper 20502.704884)", f(agg.sum_losing()));
    println!("sum_incomplete {:?}  (paper 2691.843352)", f(agg.sum_incomplete()));
    println!("total_bet      {:?}  (paper 413287.742596)", f(agg.total_bet()));
    println!("per_winning    {:?}  (paper 8236.074805)", agg.amount_per_winning());
    println!("per_losing     {:?}  (paper 9.975479)", agg.amount_per_losing());
    println!("per_incomplete {:?}  (paper 63.766071)", agg.amount_per_incomplete());
    println!("p_profitable   {:.6} ± {:.6}  (paper 0.267993)", agg.p_profitable(), agg.p_profitable_se());
    println!("consistency    {:.7}  (limit -0.0135135, paper sim -0.0135089)", agg.consistency_ratio().unwrap());
    println!("max N {}   max winnings {}", agg.max_n_winning(), agg.max_session_winnings());
    let sys = agg.sys_sums();
    println!("sys sums win/loss/inc per session: {:.3} {:.3} {:.3}", sys.0, sys.1, sys.2);
}
