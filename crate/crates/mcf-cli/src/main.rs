//! Command-line front end: expansions, convergents, exact evaluation, and
//! the stacked-tiling counters and enumerators.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use input::{
    domain, enumeration_budget, load_sequences, parse_rational, sig15, to_bounds, usage, CliError,
};
use mcf::{
    check_e_remark, check_factorial_identity, convergents_by_matrix, count_b, count_c,
    count_circular, count_degree_m, count_fast, count_mixed, enumerate_circular_with_budget,
    enumerate_mixed_with_budget, enumerate_plain_with_budget, estimate_limit, evaluate_finite,
    factorial_mcf, jacobi_expand, jacobi_expand_float, BigInt, ConvergentTriple, ExpansionResult,
    HeightConditions, IdentityReport, PartialQuotients, Tiling,
};

#[derive(Parser)]
#[command(
    name = "mcf",
    version,
    about = "Degree-two multidimensional continued fractions: expansions, \
             convergents, and stacked-tiling counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Coefficient sequences, inline or from a JSON document.
#[derive(Args)]
struct SequenceArgs {
    /// Comma-separated a coefficients, e.g. '2,3,4' ('_' is a padding zero).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Comma-separated b coefficients.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Comma-separated c coefficients.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// JSON file with {"a": [...], "b": [...], "c": [...]} ('-' for stdin).
    #[arg(long, value_name = "FILE", conflicts_with_all = ["a", "b", "c"])]
    input: Option<PathBuf>,
}

impl SequenceArgs {
    fn load(&self) -> Result<input::Sequences, CliError> {
        load_sequences(&self.a, &self.b, &self.c, &self.input)
    }

    fn quotients(&self) -> Result<PartialQuotients, CliError> {
        let (a, b, c) = self.load()?;
        Ok(PartialQuotients::new(a, b, c)?)
    }

    fn conditions(&self) -> Result<HeightConditions, CliError> {
        let (a, b, c) = self.load()?;
        Ok(HeightConditions::new(
            &to_bounds(&a, "a")?,
            &to_bounds(&b, "b")?,
            &to_bounds(&c, "c")?,
        )?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Coordinate {
    /// The tiling count itself (first numerator).
    A,
    /// The left-extended board count (second numerator).
    B,
    /// The first-cell-dropped count (denominator).
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Plain,
    Circular,
    Mixed,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a pair of values into partial quotients.
    Expand {
        /// First value, as p/q or an integer (a decimal with --float).
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Second value, same formats as --alpha.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        /// Stop after this many steps even without termination.
        #[arg(long, default_value_t = 30)]
        max_steps: usize,
        /// Work in floating point with tolerance-based snapping.
        #[arg(long)]
        float: bool,
        /// Fractional parts below this snap to zero (float mode only).
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Emit {"a", "b", "c", "terminated", "steps"} as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the convergent triples (A_n, B_n, C_n).
    Convergents {
        #[command(flatten)]
        seq: SequenceArgs,
        /// Only print the triple at this index.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a finite expansion to its exact value pair.
    Evaluate {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Count stacked tilings of a plain board (or a related coordinate).
    Count {
        #[command(flatten)]
        seq: SequenceArgs,
        /// Which coordinate to count.
        #[arg(long, value_enum, default_value_t = Coordinate::A)]
        which: Coordinate,
        #[arg(long)]
        json: bool,
    },
    /// Count tilings of the circular board.
    CountCircular {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Count admissible tilings under signed domino/bar bounds.
    CountMixed {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Count stacked tilings with longer tiles from a bounds table.
    CountDegreeM {
        /// One comma-separated bounds row per tile length, shortest tiles
        /// first; row j bounds stacks of tiles covering j+1 cells, indexed
        /// by the tile's last cell. Repeat the flag for each row.
        #[arg(
            long = "row",
            required_unless_present = "input",
            conflicts_with = "input",
            allow_hyphen_values = true
        )]
        rows: Vec<String>,
        /// JSON file with {"bounds": [[...], ...]} ('-' for stdin).
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// Last board cell (defaults to the shortest row's last index).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List tilings, one per line, in canonical order.
    Enumerate {
        #[command(flatten)]
        seq: SequenceArgs,
        /// Board shape: plain strip, circular, or signed (mixed) bounds.
        #[arg(long, value_enum, default_value_t = Mode::Plain)]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Verify the built-in identity families.
    Identities {
        /// Which family to check.
        #[arg(long, value_enum)]
        check: Family,
        /// Depth (defaults: factorial 20, e 12, limit 15).
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// A_n = (n+2)! + (n+1)! + n! on the factorial expansion.
    Factorial,
    /// The continued fraction of e with numerators (n+1)! + n!.
    E,
    /// Estimate the factorial expansion's limit value.
    Limit,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Expand {
            alpha,
            beta,
            max_steps,
            float,
            tolerance,
            json,
        } => cmd_expand(&alpha, &beta, max_steps, float, tolerance, json),
        Command::Convergents { seq, n, json } => cmd_convergents(&seq, n, json),
        Command::Evaluate { seq, json } => cmd_evaluate(&seq, json),
        Command::Count { seq, which, json } => {
            let h = seq.conditions()?;
            let count = match which {
                Coordinate::A => count_fast(&h)?,
                Coordinate::B => count_b(&h)?,
                Coordinate::C => count_c(&h)?,
            };
            print_count(&count, json);
            Ok(())
        }
        Command::CountCircular { seq, json } => {
            let count = count_circular(&seq.conditions()?)?;
            print_count(&count, json);
            Ok(())
        }
        Command::CountMixed { seq, json } => {
            let count = count_mixed(&seq.conditions()?);
            print_count(&count, json);
            Ok(())
        }
        Command::CountDegreeM {
            rows,
            input,
            n,
            json,
        } => cmd_count_degree_m(&rows, &input, n, json),
        Command::Enumerate { seq, mode, json } => cmd_enumerate(&seq, mode, json),
        Command::Identities { check, n } => cmd_identities(check, n),
    }
}

fn cmd_expand(
    alpha: &str,
    beta: &str,
    max_steps: usize,
    float: bool,
    tolerance: f64,
    json: bool,
) -> Result<(), CliError> {
    if max_steps == 0 {
        return Err(usage("--max-steps must be at least 1"));
    }
    let result: ExpansionResult = if float {
        let parse = |raw: &str| {
            raw.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("'{raw}' is not a decimal number")))
        };
        jacobi_expand_float(parse(alpha)?, parse(beta)?, max_steps, tolerance)?
    } else {
        jacobi_expand(&parse_rational(alpha)?, &parse_rational(beta)?, max_steps)
    };

    let pq = &result.quotients;
    if json {
        let doc = serde_json::json!({
            "a": json_ints(pq.a()),
            "b": json_ints(pq.b()),
            "c": json_ints(pq.c()),
            "terminated": result.terminated,
            "steps": result.steps,
        });
        println!("{doc}");
    } else {
        println!("a = {}", join_ints(pq.a()));
        println!("b = {}", join_ints(pq.b()));
        println!("c = {}", join_ints(pq.c()));
        println!("terminated = {}", result.terminated);
        println!("steps = {}", result.steps);
    }
    Ok(())
}

fn cmd_convergents(seq: &SequenceArgs, n: Option<usize>, json: bool) -> Result<(), CliError> {
    let pq = seq.quotients()?;
    let triples = convergents_by_matrix(&pq);
    let selected: Vec<&ConvergentTriple> = match n {
        Some(n) => {
            let triple = triples.get(n).ok_or_else(|| {
                domain(format!(
                    "index {n} is out of range; the expansion has indices 0..={}",
                    pq.n()
                ))
            })?;
            vec![triple]
        }
        None => triples.iter().collect(),
    };
    if json {
        let doc = serde_json::json!({
            "convergents": selected
                .iter()
                .map(|t| {
                    serde_json::json!({
                        "n": t.index,
                        "a": json_int(&t.a),
                        "b": json_int(&t.b),
                        "c": json_int(&t.c),
                    })
                })
                .collect::<Vec<_>>(),
        });
        println!("{doc}");
    } else {
        for t in selected {
            println!("n={} A={} B={} C={}", t.index, t.a, t.b, t.c);
        }
    }
    Ok(())
}

fn cmd_evaluate(seq: &SequenceArgs, json: bool) -> Result<(), CliError> {
    let pq = seq.quotients()?;
    let pair = evaluate_finite(&pq)?;
    let alpha_approx = pair.first.to_f64().unwrap_or(f64::NAN);
    let beta_approx = pair.second.to_f64().unwrap_or(f64::NAN);
    if json {
        let doc = serde_json::json!({
            "alpha": pair.first.to_string(),
            "beta": pair.second.to_string(),
            "alpha_approx": alpha_approx,
            "beta_approx": beta_approx,
        });
        println!("{doc}");
    } else {
        println!("alpha = {} (~ {})", pair.first, sig15(alpha_approx));
        println!("beta = {} (~ {})", pair.second, sig15(beta_approx));
    }
    Ok(())
}

fn cmd_count_degree_m(
    rows: &[String],
    input: &Option<PathBuf>,
    n: Option<usize>,
    json: bool,
) -> Result<(), CliError> {
    let raw_rows = match input {
        Some(path) => input::read_json_bounds(path)?,
        None => rows
            .iter()
            .map(|row| input::parse_sequence(row))
            .collect::<Result<_, _>>()?,
    };
    let mut bounds = Vec::with_capacity(raw_rows.len());
    for (j, row) in raw_rows.iter().enumerate() {
        bounds.push(to_bounds(row, &format!("row {j}"))?);
    }
    let shortest = bounds
        .iter()
        .map(Vec::len)
        .min()
        .expect("both input paths yield at least one row");
    let n = n.unwrap_or(shortest.saturating_sub(1));
    let count = count_degree_m(&bounds, n)?;
    print_count(&count, json);
    Ok(())
}

fn cmd_enumerate(seq: &SequenceArgs, mode: Mode, json: bool) -> Result<(), CliError> {
    let h = seq.conditions()?;
    let budget = enumeration_budget()?;
    let tilings = match mode {
        Mode::Plain => enumerate_plain_with_budget(&h, budget)?,
        Mode::Circular => enumerate_circular_with_budget(&h, budget)?,
        Mode::Mixed => enumerate_mixed_with_budget(&h, budget)?,
    };
    if json {
        let doc = serde_json::json!({
            "tilings": tilings.iter().map(tiling_words).collect::<Vec<_>>(),
        });
        println!("{doc}");
    } else {
        for tiling in &tilings {
            println!("{}", tiling_line(tiling));
        }
    }
    Ok(())
}

fn cmd_identities(check: Family, n: Option<usize>) -> Result<(), CliError> {
    match check {
        Family::Factorial => print_report(&check_factorial_identity(n.unwrap_or(20))),
        Family::E => {
            let n = n.unwrap_or(12);
            if n < 3 {
                return Err(domain("the comparison needs at least --n 3"));
            }
            print_report(&check_e_remark(n));
        }
        Family::Limit => {
            let n = n.unwrap_or(15);
            if n < 5 {
                return Err(domain("limit estimates need at least --n 5"));
            }
            let estimate = estimate_limit(n);
            let exact = evaluate_finite(&factorial_mcf(n))?;
            println!("depth: {n}");
            println!("estimate: {}", sig15(estimate));
            println!("exact: {}", exact.first);
        }
    }
    Ok(())
}

fn print_report(report: &IdentityReport) {
    println!("name: {}", report.name);
    println!("verified_up_to: {}", report.verified_up_to);
    let error = if report.max_abs_error == 0.0 {
        "0".to_string()
    } else {
        format!("{:e}", report.max_abs_error)
    };
    println!("max_abs_error: {error}");
    match report.witness {
        Some(w) => println!("holds: false (first failure at index {w})"),
        None => println!("holds: true"),
    }
}

fn print_count(count: &BigInt, json: bool) {
    if json {
        println!("{}", serde_json::json!({ "count": json_int(count) }));
    } else {
        println!("{count}");
    }
}

/// A JSON value for one big integer: a plain number when it fits 64 bits, a
/// decimal string beyond that.
fn json_int(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

fn json_ints(xs: &[BigInt]) -> serde_json::Value {
    serde_json::Value::from(xs.iter().map(json_int).collect::<Vec<_>>())
}

fn join_ints(xs: &[BigInt]) -> String {
    xs.iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn tiling_words(tiling: &Tiling) -> Vec<String> {
    tiling
        .placements
        .iter()
        .map(|p| format!("{}@{}x{}", p.kind.name(), p.start, p.height))
        .collect()
}

fn tiling_line(tiling: &Tiling) -> String {
    if tiling.placements.is_empty() {
        return "(empty)".to_string();
    }
    tiling_words(tiling).join(" ")
}
