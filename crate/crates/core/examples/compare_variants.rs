//! Runs every F4 variant on a batch of HFE instances and prints the counters
//! side by side.
//!
//! ```text
//! cargo run --release --example compare_variants -- 5 9 3
//! ```
//! (smallest n, largest n, seeds per n; defaults 5 9 3). Plain F4 without
//! field equations grows quickly and is skipped above n = 8.

use msf4::bench::gen_hfe;
use msf4::{solve, Algorithm, VariantConfig};

fn main() -> msf4::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let lo = args.first().copied().unwrap_or(5) as usize;
    let hi = args.get(1).copied().unwrap_or(9) as usize;
    let seeds = args.get(2).copied().unwrap_or(3);

    println!(
        "{:>3} {:>4} {:>6} {:>7} {:>8} {:>8} {:>6} {:>6} {:>9}",
        "n", "seed", "alg", "c_pair", "l_matrix", "reductor", "round", "solved", "r_time_ms"
    );
    for n in lo..=hi {
        for seed in 0..seeds {
            let inst = gen_hfe(17, n, seed)?;
            for alg in Algorithm::ALL {
                if alg == Algorithm::PlainF4 && n > 8 {
                    continue;
                }
                let out = solve(&inst.ring, &inst.system, &VariantConfig::new(alg))?;
                let s = &out.stats;
                println!(
                    "{:>3} {:>4} {:>6} {:>7} {:>8} {:>8} {:>6} {:>6} {:>9.2}",
                    n,
                    seed,
                    alg.name(),
                    s.c_pair,
                    s.l_matrix,
                    s.reductor,
                    s.round,
                    s.solved,
                    s.r_time.as_secs_f64() * 1e3
                );
            }
        }
    }
    Ok(())
}
