//! Generates one HFE instance, solves it with MS-F4 and checks the hidden
//! witness against the result.
//!
//! ```text
//! cargo run --release --example solve_hfe -- 17 12 0
//! ```
//! (degree bound, number of variables, seed).

use msf4::bench::gen_hfe;
use msf4::{solve, Algorithm, VariantConfig};

fn main() -> msf4::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let d = args.first().copied().unwrap_or(17);
    let n = args.get(1).copied().unwrap_or(12) as usize;
    let seed = args.get(2).copied().unwrap_or(0);

    let inst = gen_hfe(d, n, seed)?;
    let r = &inst.ring;
    println!("HFE(d = {d}, n = {n}, seed = {seed}): {} equations", inst.system.len());
    println!(
        "hidden exponents: {:?}",
        inst.hidden.iter().map(|&(e, _)| e).collect::<Vec<_>>()
    );

    let out = solve(r, &inst.system, &VariantConfig::new(Algorithm::MsF4))?;
    for e in out.assignment.events() {
        println!("round {}: {} = {}", e.round, r.names()[e.var], e.value as u8);
    }
    for g in out.full_basis(r) {
        println!("GB: {}", r.render(&g));
    }
    let s = &out.stats;
    println!(
        "rounds = {}  c_pair = {}  l_matrix = {}  reductor = {}  solved = {}  r_time = {:.2} ms",
        s.round,
        s.c_pair,
        s.l_matrix,
        s.reductor,
        s.solved,
        s.r_time.as_secs_f64() * 1e3
    );

    let vanishes = out.full_basis(r).iter().all(|g| !g.evaluate_at(&inst.witness));
    println!("witness {} is a zero of the basis: {vanishes}", bits(&inst.witness));
    Ok(())
}

fn bits(p: &[bool]) -> String {
    p.iter().map(|&b| if b { '1' } else { '0' }).collect()
}
