// Day-end state census for one chance to identify the incomplete-counting convention.
use wager_core::labouchere::{LabConfig, LabState};
use wager_core::rng::Stream;
use wager_core::roulette::{resolve_coup, EvenChance};

fn main() {
    let chance = EvenChance::Red;
    let config = LabConfig::default();
    let days: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2_000_000);
    let mut stream = Stream::derive(99, 0);
    let mut in_flight = 0u64;            // coups > 0 at day end
    let mut list_is_init = 0u64;         // in flight but list == 1,2,3,4
    let mut fsys_zero = 0u64;            // in flight, f_sys == 0
    let mut completed_at_last = 0u64;    // progression completed exactly at coup 360
    let mut losing_cnt = 0u64;
    let mut winning_cnt = 0u64;
    for _ in 0..days {
        let mut card = LabState::new(&config);
        let mut completed_this_coup;
        for _coup in 0..360 {
            let coup = resolve_coup(&mut stream).unwrap();
            let res = card.apply(coup.outcome(chance), &config);
            completed_this_coup = res.completed.is_some();
            if let Some(out) = res.completed {
                match out.kind {
                    wager_core::labouchere::ProgressionKind::Losing => losing_cnt += 1,
                    wager_core::labouchere::ProgressionKind::Winning => winning_cnt += 1,
                    _ => {}
                }
            }
            let _ = completed_this_coup;
        }
        if card.coups_in_progression() > 0 {
            in_flight += 1;
            let init: Vec<i64> = config.init_list.clone();
            if card.list().collect::<Vec<_>>() == init { list_is_init += 1; }
            if card.f_sys() == 0 { fsys_zero += 1; }
        } else {
            completed_at_last += 1;
        }
        card.finalize(&config);
    }
    let d = days as f64;
    println!("days simulated: {days}");
    println!("P(in flight at day end)        = {:.6}  -> n_incomplete/48 mine: paper wants 0.879466", in_flight as f64 / d);
    println!("P(completed at last coup)      = {:.6}", completed_at_last as f64 / d);
    println!("P(in flight & list == init)    = {:.6}", list_is_init as f64 / d);
    println!("P(in flight & f_sys == 0)      = {:.6}", fsys_zero as f64 / d);
    println!("candidate B (list!=init): {:.6}  vs paper 0.879466", (in_flight - list_is_init) as f64 / d);
    println!("candidate C (f_sys!=0):   {:.6}  vs paper 0.879466", (in_flight - fsys_zero) as f64 / d);
    println!("losing/day = {:.6} (paper 2055.310293/48 = {:.6})", losing_cnt as f64 / d, 2055.310293/48.0);
    println!("winning/day = {:.6} (paper 1.484665/48 = {:.6})", winning_cnt as f64 / d, 1.484665/48.0);
}
