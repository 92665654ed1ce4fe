//! Parses a problem in the text format, solves it with a chosen variant and
//! writes the canonical text form back out.
//!
//! ```text
//! cargo run --example problem_file -- path/to/system.txt s-f4
//! ```
//! Without arguments a built-in system is used.

use msf4::cli::{parse_problem, render_problem};
use msf4::{solve, Algorithm, VariantConfig};

const BUILTIN: &str = "\
# two solutions: (x, y, z) = (1, 0, 1) and (1, 1, 0)
vars: x y z
order: grevlex
x*y + x*z + y + z
x + 1
y + z + 1
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let text = match args.next() {
        Some(path) => std::fs::read_to_string(path)?,
        None => BUILTIN.to_string(),
    };
    let alg: Algorithm = args.next().as_deref().unwrap_or("ms-f4").parse()?;

    let p = parse_problem(&text)?;
    print!("{}", render_problem(&p.ring, &p.system));
    println!("---");
    let out = solve(&p.ring, &p.system, &VariantConfig::new(alg))?;
    for (var, value) in out.assignment.iter() {
        println!("{} = {}", p.ring.names()[var], value as u8);
    }
    print!("{}", render_problem(&p.ring, &out.basis));
    Ok(())
}
