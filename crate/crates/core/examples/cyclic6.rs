//! Cyclic-n over GF(2) with field equations: degree and size of the
//! basis before and after interreduction, per variant.
//!
//! ```text
//! cargo run --release --example cyclic6 -- 6
//! ```

use msf4::bench::gen_cyclic;
use msf4::verify::verify_outcome;
use msf4::{solve, Algorithm, VariantConfig};

fn main() -> msf4::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let (ring, system) = gen_cyclic(n)?;
    for p in &system {
        println!("{}", ring.render(p));
    }
    println!();
    println!(
        "{:>6} {:>8} {:>6} {:>17} {:>15} {:>6} {:>6}",
        "alg", "h_deg_gb", "gb", "h_deg_unreduced", "gb_unreduced", "round", "check"
    );
    for alg in [Algorithm::FeF4, Algorithm::SF4, Algorithm::MsF4] {
        let out = solve(&ring, &system, &VariantConfig::new(alg))?;
        let report = verify_outcome(&ring, &system, &out, n <= 16)?;
        let s = &out.stats;
        println!(
            "{:>6} {:>8} {:>6} {:>17} {:>15} {:>6} {:>6}",
            alg.name(),
            s.h_deg_gb,
            s.gb_size,
            s.h_deg_gb_unreduced,
            s.gb_size_unreduced,
            s.round,
            if report.passed() { "ok" } else { "FAIL" }
        );
    }
    Ok(())
}
