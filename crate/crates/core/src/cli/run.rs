use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::bench::{gen_cyclic, gen_hfe, RunStats, StatsReport, MAX_BRUTE_FORCE_VARS};
use crate::f4::{buchberger_reference, solve, Algorithm, Outcome, RenewMode, VariantConfig};
use crate::middle::Assignment;
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::verify::verify_outcome;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CliAlgorithm {
    #[value(name = "buchberger")]
    Buchberger,
    #[value(name = "f4")]
    F4,
    #[value(name = "fe-f4")]
    FeF4,
    #[value(name = "s-f4")]
    SF4,
    #[value(name = "ms-f4")]
    MsF4,
}

impl CliAlgorithm {
    fn engine(self) -> Option<Algorithm> {
        match self {
            CliAlgorithm::Buchberger => None,
            CliAlgorithm::F4 => Some(Algorithm::PlainF4),
            CliAlgorithm::FeF4 => Some(Algorithm::FeF4),
            CliAlgorithm::SF4 => Some(Algorithm::SF4),
            CliAlgorithm::MsF4 => Some(Algorithm::MsF4),
        }
    }

    fn name(self) -> &'static str {
        self.engine().map_or("buchberger", Algorithm::name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CliOrder {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CliRenew {
    Recompute,
    Rebuild,
}

/// Gröbner bases over GF(2) with F4 and its field-specific variants.
#[derive(Debug, Parser)]
#[command(name = "msf4", version)]
struct Args {
    #[arg(long, value_enum, default_value = "ms-f4")]
    algorithm: CliAlgorithm,
    /// Overrides the order given in the problem file.
    #[arg(long, value_enum)]
    order: Option<CliOrder>,
    /// Problem file.
    #[arg(long, required_unless_present = "gen", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Generated system: `hfe:D,N,SEED` or `cyclic:N`.
    #[arg(long)]
    gen: Option<String>,
    /// Writes run statistics as JSON.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Checks the Buchberger criterion and, for at most 24 variables, the variety.
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value = "recompute")]
    renew_mode: CliRenew,
    /// Keeps only the most recent K rounds for product reuse.
    #[arg(long, value_name = "K")]
    history_cap: Option<usize>,
    /// Do not adjoin field equations (fe-f4 only).
    #[arg(long)]
    no_adjoin: bool,
}

/// A `--gen` argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenSpec {
    Hfe { d: u64, n: usize, seed: u64 },
    Cyclic { n: usize },
}

pub fn parse_gen_spec(s: &str) -> Result<GenSpec> {
    let bad = || Error::InvalidGenerator(s.to_string());
    let (kind, params) = s.split_once(':').ok_or_else(bad)?;
    let nums: Vec<&str> = params.split(',').map(str::trim).collect();
    match (kind, nums.as_slice()) {
        ("hfe", [d, n, seed]) => Ok(GenSpec::Hfe {
            d: d.parse().map_err(|_| bad())?,
            n: n.parse().map_err(|_| bad())?,
            seed: seed.parse().map_err(|_| bad())?,
        }),
        ("cyclic", [n]) => Ok(GenSpec::Cyclic {
            n: n.parse().map_err(|_| bad())?,
        }),
        _ => Err(bad()),
    }
}

struct Loaded {
    ring: Ring,
    system: Vec<Polynomial>,
    field_equations: Option<bool>,
    seed: Option<u64>,
}

fn load(args: &Args) -> Result<Loaded> {
    let mut loaded = if let Some(spec) = &args.gen {
        match parse_gen_spec(spec)? {
            GenSpec::Hfe { d, n, seed } => {
                let h = gen_hfe(d, n, seed)?;
                Loaded {
                    ring: h.ring,
                    system: h.system,
                    field_equations: None,
                    seed: Some(seed),
                }
            }
            GenSpec::Cyclic { n } => {
                let (ring, system) = gen_cyclic(n)?;
                Loaded {
                    ring,
                    system,
                    field_equations: None,
                    seed: None,
                }
            }
        }
    } else {
        let path = args.input.as_ref().expect("clap enforces --input or --gen");
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let p = super::parse_problem(&text)?;
        Loaded {
            ring: p.ring,
            system: p.system,
            field_equations: p.field_equations,
            seed: None,
        }
    };
    if let Some(order) = args.order {
        let order = match order {
            CliOrder::Grevlex => MonomialOrder::Grevlex,
            CliOrder::Lex => MonomialOrder::Lex,
        };
        loaded.ring = loaded.ring.with_order(order);
        loaded.system = loaded.system.iter().map(|p| loaded.ring.reorder(p)).collect();
    }
    Ok(loaded)
}

/// Whether field equations are adjoined, or a usage error.
fn adjoin_setting(args: &Args, file: Option<bool>) -> Result<bool> {
    let off = args.no_adjoin || file == Some(false);
    match args.algorithm {
        CliAlgorithm::SF4 | CliAlgorithm::MsF4 if off => Err(Error::Config(format!(
            "{} always adjoins the field equations",
            args.algorithm.name()
        ))),
        CliAlgorithm::F4 | CliAlgorithm::Buchberger if args.no_adjoin => {
            Err(Error::Config("--no-adjoin only applies to fe-f4".into()))
        }
        CliAlgorithm::F4 => Ok(file == Some(true)),
        CliAlgorithm::Buchberger => Ok(file != Some(false)),
        _ => Ok(!off),
    }
}

fn compute(args: &Args, ring: &Ring, system: &[Polynomial], adjoin: bool) -> Result<Outcome> {
    let Some(algorithm) = args.algorithm.engine() else {
        let input = if adjoin {
            crate::f4::adjoin_field_equations(ring, system)
        } else {
            system.to_vec()
        };
        let started = std::time::Instant::now();
        let basis = buchberger_reference(ring, &input)?;
        let degree = basis.iter().map(Polynomial::degree).max().unwrap_or(0);
        let stats = RunStats {
            gb_size: basis.len(),
            h_deg_gb: degree,
            gb_size_unreduced: basis.len(),
            h_deg_gb_unreduced: degree,
            r_time: started.elapsed(),
            ..RunStats::default()
        };
        return Ok(Outcome {
            inconsistent: basis.iter().any(Polynomial::is_one),
            basis,
            assignment: Assignment::default(),
            stats,
            max_new_degree: 0,
        });
    };
    let cfg = VariantConfig {
        algorithm,
        adjoin_field_eqs: adjoin,
        renew_mode: match args.renew_mode {
            CliRenew::Recompute => RenewMode::Recompute,
            CliRenew::Rebuild => RenewMode::Rebuild,
        },
        cascade: true,
        reduce_renewed: true,
        history_cap: args.history_cap,
    };
    solve(ring, system, &cfg)
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code: 0 on success, 1 when `--verify` fails, 2 on usage or input errors.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&args, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(args: &Args, out: &mut dyn Write) -> Result<i32> {
    let Loaded {
        ring,
        system,
        field_equations,
        seed,
    } = load(args)?;
    let adjoin = adjoin_setting(args, field_equations)?;
    let outcome = compute(args, &ring, &system, adjoin)?;
    let io = |e: std::io::Error| Error::Config(format!("write failed: {e}"));

    if !outcome.assignment.is_empty() {
        let solved: Vec<String> = outcome
            .assignment
            .iter()
            .map(|(v, a)| format!("{} = {}", ring.names()[v], u8::from(a)))
            .collect();
        writeln!(out, "solved: {}", solved.join(", ")).map_err(io)?;
    }
    for p in &outcome.basis {
        writeln!(out, "GB: {}", ring.render(p)).map_err(io)?;
    }
    if outcome.inconsistent {
        writeln!(out, "solutions: none").map_err(io)?;
    }

    let mut verdict = "skipped";
    if args.verify {
        let with_variety = ring.nvars() <= MAX_BRUTE_FORCE_VARS;
        let report = verify_outcome(&ring, &system, &outcome, with_variety)?;
        verdict = if report.passed() { "pass" } else { "fail" };
    }

    let s = &outcome.stats;
    writeln!(
        out,
        "summary: algorithm={} order={} n_vars={} n_eqs={} gb_size={} h_deg_gb={} gb_size_unreduced={} h_deg_gb_unreduced={} c_pair={} l_matrix={} reductor={} round={} solved={} verify={}",
        args.algorithm.name(),
        ring.order(),
        ring.nvars(),
        system.len(),
        s.gb_size,
        s.h_deg_gb,
        s.gb_size_unreduced,
        s.h_deg_gb_unreduced,
        s.c_pair,
        s.l_matrix,
        s.reductor,
        s.round,
        s.solved,
        verdict,
    )
    .map_err(io)?;

    if let Some(path) = &args.stats {
        let report = StatsReport::new(
            s,
            args.algorithm.name(),
            ring.order().name(),
            ring.nvars(),
            system.len(),
            seed,
        );
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if verdict == "fail" { 1 } else { 0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_specs() {
        assert_eq!(
            parse_gen_spec("hfe:17,5,3").unwrap(),
            GenSpec::Hfe { d: 17, n: 5, seed: 3 }
        );
        assert_eq!(parse_gen_spec("cyclic:6").unwrap(), GenSpec::Cyclic { n: 6 });
        assert!(parse_gen_spec("hfe:17,5").is_err());
        assert!(parse_gen_spec("katsura:4").is_err());
    }
}
