//! The small three-variable system used throughout the S-F4 and
//! middle-solving descriptions, run through every variant.
//!
//! ```text
//! cargo run --example worked_example
//! ```

use msf4::cli::parse_problem;
use msf4::{solve, Algorithm, VariantConfig};

const SYSTEM: &str = "\
vars: x y z
x*y + x
y*z + z + 1
x*z + 1
x + y + z
";

fn main() -> msf4::Result<()> {
    let p = parse_problem(SYSTEM)?;
    let r = &p.ring;

    let s = r.s_polynomial(&p.system[0], &p.system[1], false)?;
    println!("S(xy + x, yz + z + 1) = {}", r.render(&s));

    let f1 = msf4::cli::parse_polynomial(r, "x*y + y*z")?;
    let f2 = msf4::cli::parse_polynomial(r, "x*z + y*z + 1")?;
    let s = r.s_polynomial(&f1, &f2, true)?;
    println!("NF(S(xy + yz, xz + yz + 1)) = {}", r.render(&s));
    println!();

    for alg in Algorithm::ALL {
        let out = solve(r, &p.system, &VariantConfig::new(alg))?;
        let basis: Vec<String> = out.basis.iter().map(|g| r.render(g)).collect();
        println!(
            "{:>6}: GB = {{{}}}  rounds = {}  c_pair = {}  solved = {}",
            alg.name(),
            basis.join(", "),
            out.stats.round,
            out.stats.c_pair,
            out.stats.solved
        );
    }
    Ok(())
}
