//! `endosimplex`: enumerate, classify, verify and tabulate simplices of the
//! endomorphism semiring of a finite chain.
//!
//! Exit codes: 0 on success, 1 when a verification or partition check
//! fails, 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use endosimplex::verify::{self, Suite};
use endosimplex::{typemap, Endo, EndoSet, Error, Execution, NotationStyle, Simplex, DEFAULT_CAP};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "endosimplex", version, about = "Simplices in the endomorphism semiring of a finite chain")]
struct Cli {
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a simplex in lexicographic order.
    Enumerate {
        #[command(flatten)]
        simplex: SimplexArgs,
        #[arg(long, value_enum, default_value_t = ListFormat::Runlength)]
        format: ListFormat,
        /// Print only the number of members.
        #[arg(long)]
        count_only: bool,
    },
    /// Partition a simplex by type and check every block.
    Classify {
        #[command(flatten)]
        simplex: SimplexArgs,
    },
    /// Sweep every simplex up to a chain length and check the structural claims.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        /// Seed for the random closed subsets of the lifting sweep.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the addition or multiplication table of a simplex.
    Cayley {
        #[command(flatten)]
        simplex: SimplexArgs,
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Generator for the dot graph, in run-length or tuple notation; repeatable. Defaults to every member.
        #[arg(long = "generator")]
        generators: Vec<String>,
    },
}

#[derive(Args)]
struct SimplexArgs {
    /// Chain length.
    #[arg(long)]
    n: u32,
    /// Comma-separated increasing vertex list.
    #[arg(long, value_delimiter = ',', required = true)]
    vertices: Vec<u32>,
    /// Refuse simplices with more members than this.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

impl SimplexArgs {
    fn members(&self) -> Result<(Simplex, EndoSet), Error> {
        let s = Simplex::new(self.n, self.vertices.clone())?;
        let members = s.enumerate_capped(self.cap)?;
        Ok((s, members))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Tuple,
    Runlength,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Add,
    Mul,
}

impl Op {
    fn apply(self, x: &Endo, y: &Endo) -> Endo {
        match self {
            Op::Add => x.add(y),
            Op::Mul => x.compose(y),
        }
        .expect("members of one simplex share a chain")
    }
}

fn parse_suite(text: &str) -> Result<Suite, String> {
    text.parse().map_err(|_| format!("expected one of {}", Suite::NAMES.join(", ")))
}

enum Failure {
    Input(Error),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

#[derive(Serialize)]
struct Listing<'a> {
    n: u32,
    vertices: &'a [u32],
    count: usize,
    members: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    match run(cli.command, exec) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err((out, Failure::Check(reason))) => {
            print!("{out}");
            eprintln!("endosimplex: {reason}");
            ExitCode::from(1)
        }
        Err((_, Failure::Input(e))) => {
            eprintln!("endosimplex: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs one command; on failure the partial stdout is returned with the cause.
fn run(command: Command, exec: Execution) -> Result<String, (String, Failure)> {
    let input = |e: Error| (String::new(), Failure::Input(e));
    match command {
        Command::Enumerate { simplex, format, count_only } => {
            let (s, members) = simplex.members().map_err(input)?;
            Ok(enumerate(&s, &members, format, count_only))
        }
        Command::Classify { simplex } => {
            let (s, _) = simplex.members().map_err(input)?;
            let report = typemap::partition_with(&s, exec).map_err(input)?;
            let out = to_json(&report);
            match report.first_failure() {
                _ if report.checks_pass() => Ok(out),
                Some((label, _)) => Err((out, Failure::Check(format!("block {label} breaks its contract")))),
                None => Err((out, Failure::Check("blocks do not partition the simplex".into()))),
            }
        }
        Command::Verify { suite, max_n, seed } => {
            let report = verify::run_with(suite, max_n, seed, exec).map_err(input)?;
            for entry in &report.entries {
                let mark = if entry.passed { "pass" } else { "FAIL" };
                eprintln!("{mark} {} ({}) {:.2?}", entry.id, entry.range, entry.elapsed);
            }
            let out = to_json(&report);
            if report.all_passed() {
                Ok(out)
            } else {
                Err((
                    out,
                    Failure::Check(format!("{} of {} claims failed", report.summary.failed, report.summary.total)),
                ))
            }
        }
        Command::Cayley { simplex, op, format, generators } => {
            let (s, members) = simplex.members().map_err(input)?;
            match format {
                TableFormat::Csv => Ok(csv_table(&members, op)),
                TableFormat::Dot => {
                    let gens = if generators.is_empty() {
                        members.members().to_vec()
                    } else {
                        generators
                            .iter()
                            .map(|g| {
                                let e = Endo::parse(g, s.n())?;
                                if !members.contains(&e) {
                                    return Err(Error::NotAMember { endo: e.to_string() });
                                }
                                Ok(e)
                            })
                            .collect::<Result<_, _>>()
                            .map_err(input)?
                    };
                    Ok(dot_graph(&s, &members, &gens, op))
                }
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

fn enumerate(s: &Simplex, members: &EndoSet, format: ListFormat, count_only: bool) -> String {
    if count_only {
        return format!("{}\n", members.len());
    }
    let style = match format {
        ListFormat::Json => {
            let listing = Listing {
                n: s.n(),
                vertices: s.vertices(),
                count: members.len(),
                members: members.iter().map(ToString::to_string).collect(),
            };
            return to_json(&listing);
        }
        ListFormat::Tuple => NotationStyle::Tuple,
        ListFormat::Runlength => NotationStyle::RunLength,
    };
    eprintln!("# n={} vertices={:?} count={}", s.n(), s.vertices(), members.len());
    let mut out = String::new();
    for e in members {
        out.push_str(&e.to_notation(style));
        out.push('\n');
    }
    out
}

fn csv_table(members: &EndoSet, op: Op) -> String {
    let mut out = String::new();
    for e in members {
        write!(out, ",{e}").unwrap();
    }
    out.push('\n');
    for x in members {
        out.push_str(&x.to_string());
        for y in members {
            write!(out, ",{}", op.apply(x, y)).unwrap();
        }
        out.push('\n');
    }
    out
}

fn dot_graph(s: &Simplex, members: &EndoSet, generators: &[Endo], op: Op) -> String {
    let mut out = String::new();
    let symbol = match op {
        Op::Add => "+",
        Op::Mul => "*",
    };
    writeln!(out, "digraph cayley {{").unwrap();
    writeln!(out, "  label=\"{s} under {symbol}\";").unwrap();
    for (i, e) in members.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{e}\"];").unwrap();
    }
    for (i, x) in members.iter().enumerate() {
        for g in generators {
            let j = members.index_of(&op.apply(x, g)).expect("a simplex is closed under both operations");
            writeln!(out, "  n{i} -> n{j} [label=\"{g}\"];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
