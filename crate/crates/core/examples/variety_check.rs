//! Compares the zero set reconstructed from MS-F4's output with exhaustive
//! evaluation, on random quadratic systems with and without a planted root.
//!
//! ```text
//! cargo run --release --example variety_check -- 10 20
//! ```
//! (number of variables, number of systems).

use msf4::bench::{brute_force_variety, random_system};
use msf4::f4::adjoin_field_equations;
use msf4::verify::reconstruct_variety;
use msf4::{solve, Algorithm, VariantConfig};

fn main() -> msf4::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(10) as usize;
    let count = args.get(1).copied().unwrap_or(20);

    let mut agree = 0;
    for seed in 0..count {
        let planted = seed % 2 == 0;
        let m = if planted { n } else { n + 2 };
        let (ring, system, _) = random_system(n, m, planted, seed)?;
        let truth = brute_force_variety(&adjoin_field_equations(&ring, &system), &ring)?;
        let out = solve(&ring, &system, &VariantConfig::new(Algorithm::MsF4))?;
        let got = reconstruct_variety(&ring, &out)?;
        let same = truth == got;
        agree += same as u64;
        println!(
            "seed {seed:>3}  planted = {planted:<5}  |V| = {:>3}  solved = {:>2}  match = {same}",
            truth.len(),
            out.stats.solved
        );
    }
    println!("{agree}/{count} systems agree");
    Ok(())
}
