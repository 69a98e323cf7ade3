//! The `stab` command line.
//!
//! ```text
//! stab field  --field F [--tsv]
//! stab test   --field F --poly P [--depth N] [--degree-cap N] [--tsv]
//! stab orbit  --field F --poly P [--limit N] [--tsv]
//! stab census --field F --degree D [--monic] [--depth N] [--jobs N] [--tsv]
//! stab verify SUITE --field F [--max-degree N] [--degree D] [--depth N]
//!             [--samples N] [--seed N] [--a0 X] [--monic] [--tsv]
//! ```
//!
//! Exit status is 0 on success, 1 on domain errors and 2 on usage errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::census::{self, stability_census, CensusConfig};
use crate::dynamics::{assess, orbit_sets};
use crate::error::Error;
use crate::field::Field;
use crate::format::{parse_element, parse_field, parse_poly, render_poly, FIELD_GRAMMAR, POLY_GRAMMAR};
use crate::poly::{Poly, DEFAULT_DEGREE_CAP};
use crate::report::{field_json, orbit_json, stability_json};
use crate::verify::{self, run_suite, SuiteParams, SUITES};

#[derive(Parser, Debug)]
#[command(name = "stab", version, about = "Stability of iterated polynomials over finite fields of odd characteristic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Field spec: p, p^s, p^s:c0,...,1 or (FIELD)^k[:e0,...,1]
    #[arg(long)]
    field: String,
    /// Emit a TSV row instead of JSON
    #[arg(long)]
    tsv: bool,
    /// Largest iterate degree ever built
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe a field
    Field {
        #[command(flatten)]
        common: Common,
    },
    /// Run the stability criterion and a direct check of the first iterates
    Test {
        #[command(flatten)]
        common: Common,
        /// Coefficients c0,c1,...,cd
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Iterates to check directly
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
    /// Print the critical residue orbit and the criterion values
    Orbit {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Records to print
        #[arg(long, default_value_t = 64)]
        limit: usize,
    },
    /// Sweep all polynomials of one degree
    Census {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        monic: bool,
        /// Iterates checked directly for criterion survivors
        #[arg(long, default_value_t = 3)]
        depth: u32,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
        /// Coefficient indices fixed to zero, e.g. 2 for cubics without X^2
        #[arg(long, value_delimiter = ',')]
        zero_coefficients: Vec<usize>,
        /// Upper bound on population * degree^depth
        #[arg(long, default_value_t = census::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, allow_hyphen_values = true)]
        a0: Option<String>,
        #[arg(long)]
        monic: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage_or_domain(flag: &str, grammar: &str, e: Error) -> Failure {
    match e {
        Error::Parse(msg) if msg.contains(grammar) => Failure::Usage(format!("invalid value for --{flag}: {msg}")),
        Error::Parse(msg) => Failure::Usage(format!("invalid value for --{flag}: {msg}; expected {grammar}")),
        other => Failure::Domain(other),
    }
}

fn field_arg(common: &Common) -> Result<Field, Failure> {
    parse_field(&common.field).map_err(|e| usage_or_domain("field", FIELD_GRAMMAR, e))
}

fn poly_arg(field: &Field, text: &str) -> Result<Poly, Failure> {
    parse_poly(field, text).map_err(|e| usage_or_domain("poly", POLY_GRAMMAR, e))
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn run(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let text = match command {
        Command::Field { common } => {
            let field = field_arg(&common)?;
            if common.tsv {
                format!(
                    "{}\t{}\t{}\t{}\t{}",
                    field.spec(),
                    field.characteristic(),
                    field.absolute_degree(),
                    field.order(),
                    field.depth()
                )
            } else {
                json_text(&field_json(&field))
            }
        }
        Command::Test { common, poly, depth } => {
            let field = field_arg(&common)?;
            let f = poly_arg(&field, &poly)?;
            let r = assess(&f, depth, common.degree_cap)?;
            if common.tsv {
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    field.spec(),
                    render_poly(&f),
                    r.verdict,
                    r.criterion_verdict,
                    opt(r.witness.as_ref().map(|w| w.n)),
                    r.depth_verified,
                    opt(r.tail_length),
                    opt(r.cycle_length)
                )
            } else {
                json_text(&stability_json(&r))
            }
        }
        Command::Orbit { common, poly, limit } => {
            let field = field_arg(&common)?;
            let f = poly_arg(&field, &poly)?;
            let sets = orbit_sets(&f)?;
            if common.tsv {
                let mut rows = vec!["n\tresidue\tvalue\telement\tcharacter".to_string()];
                for n in 1..=(sets.orbit().records().len().min(limit) as u64) {
                    let rec = sets.orbit().record(n);
                    let v = sets.value(n);
                    rows.push(format!(
                        "{}\t{}\t{}\t{}\t{}",
                        n,
                        render_poly(&rec.residue),
                        field.render(rec.value),
                        field.render(v.element),
                        v.character
                    ));
                }
                rows.join("\n")
            } else {
                json_text(&orbit_json(&sets, limit))
            }
        }
        Command::Census { common, degree, monic, depth, jobs, zero_coefficients, budget } => {
            let field = field_arg(&common)?;
            let config = CensusConfig {
                degree,
                monic,
                direct_depth: depth,
                degree_cap: common.degree_cap,
                jobs,
                budget,
                zero_coefficients,
            };
            let r = stability_census(&field, &config)?;
            if common.tsv {
                format!("{}\n{}", census::TSV_HEADER, r.tsv_row())
            } else {
                let _ = writeln!(err, "census finished in {:.3} s", r.seconds);
                json_text(&r.to_json())
            }
        }
        Command::Verify { suite, common, max_degree, degree, depth, samples, seed, a0, monic } => {
            let field = field_arg(&common)?;
            let a0 = match a0 {
                None => None,
                Some(t) => Some(
                    parse_element(&field, &t).map_err(|e| usage_or_domain("a0", POLY_GRAMMAR, e))?,
                ),
            };
            let params = SuiteParams {
                max_degree,
                degree,
                depth,
                samples,
                seed,
                a0,
                monic,
                degree_cap: common.degree_cap,
                ..SuiteParams::default()
            };
            let s = run_suite(&suite, &field, &params)?;
            if common.tsv {
                format!("{}\n{}", verify::TSV_HEADER, s.tsv_row())
            } else {
                let _ = writeln!(err, "{} finished in {:.3} s", s.suite, s.seconds);
                json_text(&s.to_json())
            }
        }
    };
    writeln!(out, "{text}").map_err(|e| Failure::Domain(Error::PreconditionViolated(e.to_string())))
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match run(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
